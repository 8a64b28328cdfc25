#include <algorithm>
#include <filesystem>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "cli.hpp"
#include "dtt/io.hpp"

#ifndef DTT_GOLDEN_DIR
#error "DTT_GOLDEN_DIR must point at tests/golden"
#endif

namespace dtt {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code = -1;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Result r;
  r.code = cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("dtt_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  static std::string golden(const std::string& name) { return read_text_file(fs::path(DTT_GOLDEN_DIR) / name); }

  fs::path dir_;
};

TEST_F(CliTest, GenShapeAndSidecar) {
  const auto r = run({"gen", "--family", "gen-dct3", "--n", "8", "--p", "1", "--q", "1", "--r", "1", "--out", path("m.csv")});
  ASSERT_EQ(r.code, 0) << r.err;
  const Matrix m = matrix_from_csv(read_text_file(path("m.csv")));
  EXPECT_EQ(m.rows(), 8u);
  EXPECT_EQ(m.cols(), 8u);
  const auto meta = metadata_from_json(read_text_file(path("m.csv.json")));
  EXPECT_EQ(meta.family, "gen-dct3");
  EXPECT_EQ(meta.n, 8u);
  EXPECT_EQ(meta.params, TransformParams(ParamsPQR{1, 1, 1}));
}

TEST_F(CliTest, GenNewDctGolden) {
  ASSERT_EQ(run({"gen", "--family", "new-dct", "--n", "1", "--out", path("m.csv")}).code, 0);
  EXPECT_EQ(read_text_file(path("m.csv")), "-1.00000000000000000\n");
  EXPECT_EQ(read_text_file(path("m.csv")), golden("new_dct_n1.csv"));
}

TEST_F(CliTest, GenRejectsMissingOrUnknown) {
  EXPECT_EQ(run({"gen", "--family", "gen-dct3", "--n", "8", "--p", "1", "--q", "2", "--out", path("m.csv")}).code, 2);
  EXPECT_EQ(run({"gen", "--family", "gen-dct3", "--n", "8", "--p", "1", "--q", "2"}).code, 2);
  EXPECT_EQ(run({"gen", "--family", "nope", "--n", "8", "--out", path("m.csv")}).code, 2);
  EXPECT_EQ(run({"gen", "--family", "dct2", "--n", "0", "--out", path("m.csv")}).code, 2);
  EXPECT_EQ(run({"gen", "--family", "dct2", "--n", "4", "--p", "1", "--out", path("m.csv")}).code, 2);
  EXPECT_EQ(run({"gen", "--family", "dwt-unified", "--n", "4", "--alpha", "1/2", "--beta", "x", "--gamma", "2",
                 "--out", path("m.csv")})
                .code,
            2);
  EXPECT_EQ(run({"gen", "--family", "dwt-unified", "--n", "4", "--alpha", "1/2", "--beta", "1/2", "--out", path("m.csv")}).code,
            2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_FALSE(fs::exists(path("m.csv")));
}

TEST_F(CliTest, GenDwtUnified) {
  const auto r = run({"gen", "--family", "dwt-unified", "--n", "4", "--alpha", "1/2", "--beta", "2/4", "--gamma", "2",
                      "--out", path("m.csv")});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto meta = metadata_from_json(read_text_file(path("m.csv.json")));
  EXPECT_EQ(std::get<DwtParams>(meta.params).beta, Rational(1, 2));
}

TEST_F(CliTest, CheckHartley) {
  const auto r = run({"check", "--family", "dwt1", "--n", "16", "--tol", "1e-10"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["orthogonal"], true);
  EXPECT_EQ(j["family"], "dwt1");
  EXPECT_EQ(j["condition_satisfied"], true);
}

TEST_F(CliTest, CheckConditionViolating) {
  const auto r = run({"check", "--family", "gen-dct3", "--n", "4", "--p", "1", "--q", "2", "--r", "1", "--tol", "1e-10"});
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["condition_satisfied"], false);
  EXPECT_EQ(r.code, j["orthogonal"].get<bool>() ? 0 : 1);
}

TEST_F(CliTest, CheckMatrixFile) {
  write_text_file(path("identity3.csv"), "1,0,0\n0,1,0\n0,0,1\n");
  const auto r = run({"check", "--matrix", path("identity3.csv"), "--tol", "1e-12"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, golden("identity3_check.json"));

  write_text_file(path("scaled.csv"), "2,0\n0,2\n");
  EXPECT_EQ(run({"check", "--matrix", path("scaled.csv")}).code, 1);
  write_text_file(path("bad.csv"), "1,0\n0\n");
  EXPECT_EQ(run({"check", "--matrix", path("bad.csv")}).code, 2);
  EXPECT_EQ(run({"check", "--matrix", path("missing.csv")}).code, 2);
  write_text_file(path("rect.csv"), "1,0,0\n0,1,0\n");
  EXPECT_EQ(run({"check", "--matrix", path("rect.csv")}).code, 2);
  EXPECT_EQ(run({"check", "--matrix", path("identity3.csv"), "--family", "dct2"}).code, 2);
  EXPECT_EQ(run({"check"}).code, 2);
}

TEST_F(CliTest, CheckUsesSidecar) {
  ASSERT_EQ(run({"gen", "--family", "gen-dwt4", "--n", "5", "--p", "1", "--q", "1", "--r", "1", "--out", path("m.csv")}).code, 0);
  const auto r = run({"check", "--matrix", path("m.csv")});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["family"], "gen-dwt4");
  EXPECT_EQ(j["params"]["p"], 1);
  EXPECT_EQ(j["condition_satisfied"], true);

  ASSERT_EQ(run({"gen", "--family", "gen-dct3", "--n", "4", "--p", "1", "--q", "2", "--r", "1", "--out", path("v.csv")}).code, 0);
  const auto violating = nlohmann::json::parse(run({"check", "--matrix", path("v.csv")}).out);
  EXPECT_EQ(violating["condition_satisfied"], false);

  ASSERT_EQ(run({"gen", "--family", "dct2", "--n", "4", "--out", path("c.csv")}).code, 0);
  EXPECT_EQ(nlohmann::json::parse(run({"check", "--matrix", path("c.csv")}).out)["condition_satisfied"], true);

  write_text_file(path("c.csv.json"), R"({"family": "gen-dct3", "n": 4, "params": null})");
  const auto mismatched = run({"check", "--matrix", path("c.csv")});
  EXPECT_EQ(mismatched.code, 0) << mismatched.err;
  EXPECT_TRUE(nlohmann::json::parse(mismatched.out)["condition_satisfied"].is_null());
}

TEST_F(CliTest, SweepGenDwtCas) {
  const auto r = run({"sweep", "--family", "gen-dwt-cas", "--n", "4,5,6", "--p-max", "3", "--q-max", "3", "--r-max", "3",
                      "--tol", "1e-10", "--out", path("s.csv")});
  ASSERT_EQ(r.code, 0) << r.err;
  const std::string text = read_text_file(path("s.csv"));
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 82);
  EXPECT_EQ(text.substr(0, text.find('\n')), "family,n,p,q,r,condition_satisfied,gram_max_dev");
}

TEST_F(CliTest, SweepSingleRow) {
  const auto r = run({"sweep", "--family", "gen-dct3", "--n", "2", "--p-max", "1", "--q-max", "1", "--r-max", "1",
                      "--tol", "1e-10"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto last_line = r.out.substr(r.out.find('\n') + 1);
  ASSERT_EQ(std::count(last_line.begin(), last_line.end(), '\n'), 1);
  const double dev = std::stod(last_line.substr(last_line.rfind(',') + 1));
  EXPECT_LE(dev, 1e-12);
}

TEST_F(CliTest, SweepRejectsUnparameterizedAndBadFlags) {
  EXPECT_EQ(run({"sweep", "--family", "new-dct", "--n", "4", "--p-max", "1", "--q-max", "1", "--r-max", "1"}).code, 2);
  EXPECT_EQ(run({"sweep", "--family", "gen-dct3", "--n", "4", "--p-max", "1", "--q-max", "1"}).code, 2);
  EXPECT_EQ(run({"sweep", "--family", "gen-dct3", "--n", "4,x", "--p-max", "1", "--q-max", "1", "--r-max", "1"}).code, 2);
  EXPECT_EQ(run({"sweep", "--family", "gen-dct3", "--n", "0", "--p-max", "1", "--q-max", "1", "--r-max", "1"}).code, 2);
  EXPECT_EQ(run({"sweep", "--family", "gen-dct3", "--n", "4", "--p-max", "0", "--q-max", "1", "--r-max", "1"}).code, 2);
}

TEST_F(CliTest, SweepSpecialCaseB) {
  auto r = run({"sweep", "--family", "dwt-unified", "--n", "5,7", "--q-max", "3"});
  EXPECT_EQ(r.code, 0) << r.err;
  r = run({"sweep", "--family", "dwt-unified", "--n", "5,7", "--q-max", "3", "--printed-2n"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 7);
}

TEST_F(CliTest, ApplyIdentityAndHartley) {
  write_text_file(path("identity3.csv"), "1,0,0\n0,1,0\n0,0,1\n");
  write_text_file(path("x3.csv"), "1\n2\n3\n");
  auto r = run({"apply", "--matrix", path("identity3.csv"), "--signal", path("x3.csv")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(vector_from_csv(r.out), (std::vector<double>{1, 2, 3}));

  write_text_file(path("x2.csv"), "1\n0\n");
  r = run({"apply", "--family", "dwt1", "--n", "2", "--signal", path("x2.csv"), "--out", path("y.csv")});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto y = vector_from_csv(read_text_file(path("y.csv")));
  EXPECT_NEAR(y[0], 0.70710678118654752, 1e-15);
  EXPECT_NEAR(y[1], 0.70710678118654752, 1e-15);
  EXPECT_EQ(read_text_file(path("y.csv")), golden("dwt1_n2_apply.csv"));
}

TEST_F(CliTest, ApplyRoundTrip) {
  write_text_file(path("x.csv"), vector_to_csv(std::vector<double>{0.5, -1, 2, 3.25, 0, -7, 1e-3, 4}));
  const std::vector<std::string> family{"--family", "gen-dwt-cas", "--n", "8", "--p", "1", "--q", "1", "--r", "1"};
  auto args = family;
  args.insert(args.begin(), "apply");
  args.insert(args.end(), {"--signal", path("x.csv"), "--out", path("c.csv")});
  ASSERT_EQ(run(args).code, 0);
  args = family;
  args.insert(args.begin(), "apply");
  args.insert(args.end(), {"--signal", path("c.csv"), "--inverse", "--out", path("back.csv")});
  ASSERT_EQ(run(args).code, 0);
  const auto x = vector_from_csv(read_text_file(path("x.csv")));
  const auto back = vector_from_csv(read_text_file(path("back.csv")));
  for (std::size_t i = 0; i < x.size(); ++i) EXPECT_NEAR(back[i], x[i], 1e-10);
}

TEST_F(CliTest, ApplyExitCodes) {
  write_text_file(path("scaled.csv"), "2,0\n0,2\n");
  write_text_file(path("x2.csv"), "1\n1\n");
  write_text_file(path("x3.csv"), "1\n1\n1\n");
  EXPECT_EQ(run({"apply", "--matrix", path("scaled.csv"), "--signal", path("x2.csv")}).code, 0);
  EXPECT_EQ(run({"apply", "--matrix", path("scaled.csv"), "--signal", path("x2.csv"), "--inverse"}).code, 1);
  EXPECT_EQ(run({"apply", "--matrix", path("scaled.csv"), "--signal", path("x3.csv")}).code, 2);
  EXPECT_EQ(run({"apply", "--matrix", path("scaled.csv")}).code, 2);
}

TEST_F(CliTest, DeterministicOutputs) {
  write_text_file(path("x.csv"), "1\n2\n3\n4\n5\n");
  for (int i = 0; i < 2; ++i) {
    const std::string tag = std::to_string(i);
    ASSERT_EQ(run({"gen", "--family", "new-sct", "--n", "2", "--out", path("g" + tag + ".csv")}).code, 0);
    ASSERT_EQ(run({"apply", "--family", "new-sct", "--n", "2", "--signal", path("x.csv"), "--out", path("a" + tag + ".csv")}).code, 0);
    ASSERT_EQ(run({"sweep", "--family", "gen-dct4", "--n", "3,4", "--p-max", "2", "--q-max", "2", "--r-max", "2", "--out",
                   path("s" + tag + ".csv")})
                  .code,
              0);
  }
  for (const char* stem : {"g", "a", "s"}) {
    EXPECT_EQ(read_text_file(path(std::string(stem) + "0.csv")), read_text_file(path(std::string(stem) + "1.csv")));
  }
  EXPECT_EQ(read_text_file(path("g0.csv.json")), read_text_file(path("g1.csv.json")));
  const auto c1 = run({"check", "--family", "gen-dct2", "--n", "9", "--p", "1", "--q", "2", "--r", "3"});
  const auto c2 = run({"check", "--family", "gen-dct2", "--n", "9", "--p", "1", "--q", "2", "--r", "3"});
  EXPECT_EQ(c1.out, c2.out);
}

TEST_F(CliTest, BenchOutputContract) {
  const auto r = run({"bench", "--family", "gen-dct3", "--n", "256", "--p", "1", "--q", "1", "--r", "1", "--repeats", "5"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_GT(j["build_ms"].get<double>(), 0.0);
  EXPECT_GT(j["apply_ms_per_signal"].get<double>(), 0.0);
  EXPECT_EQ(j["n"], 256);
  EXPECT_EQ(j["repeats"], 5);
  EXPECT_EQ(run({"bench", "--family", "gen-dct3", "--n", "256", "--p", "1", "--q", "1", "--r", "1", "--repeats", "0"}).code, 2);
  EXPECT_EQ(run({"bench", "--family", "gen-dct3", "--n", "256", "--repeats", "3"}).code, 2);
}

TEST_F(CliTest, BenchApplyScalesQuadratically) {
  // Matrix sizes 129 and 257: apply cost ratio (257/129)^2 ~ 3.97, +-50%.
  auto best = [](const char* n) {
    double fastest = 1e300;
    for (int i = 0; i < 5; ++i) {
      const auto r = run({"bench", "--family", "new-sct", "--n", n, "--repeats", "400"});
      fastest = std::min(fastest, nlohmann::json::parse(r.out)["apply_ms_per_signal"].get<double>());
    }
    return fastest;
  };
  const double ratio = best("128") / best("64");
  EXPECT_GE(ratio, 3.97 * 0.5);
  EXPECT_LE(ratio, 3.97 * 1.5);
}

TEST_F(CliTest, HelpExitsZero) {
  const auto r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("sweep"), std::string::npos);
}

}  // namespace
}  // namespace dtt
