#pragma once

#include <cstddef>

#include "dtt/family.hpp"
#include "dtt/transform_matrix.hpp"

namespace dtt {

/// Roman-numeral type selector shared by the DCT and DWT builders.
enum class Variant { kI, kII, kIII, kIV };

/// Orthonormal DCT-I..IV. DCT-I is (N+1) x (N+1); DCT-IV uses the 4N
/// denominator cos((2k+1)(2n+1) pi / 4N).
TransformMatrix build_classic_dct(Variant variant, std::size_t n);

/// Generalized DCT with kernel cos(k(4qn+r) p pi / 2N) (variant III), its
/// exact transpose (variant II), or cos((2k+1)(4qn+r) p pi / 4N) scaled by
/// sqrt(2/N) (variant IV). Parameters violating the gcd conditions are
/// still materialized. Variant I is rejected.
TransformMatrix build_gen_dct(Variant variant, std::size_t n, const ParamsPQR& params);

/// Odd-length DCT: sqrt(4/(2N-1)) a(k) a(n) cos((2k+1)(2n+1) pi / (2N-1)),
/// a = 1/sqrt(2) at index N-1.
TransformMatrix build_new_dct(std::size_t n);

/// sqrt(4/(2N+1)) sin((2k+1)(2n+1) pi / (2N+1)).
TransformMatrix build_new_dst(std::size_t n);

/// (2N+1) x (2N+1) sine-cosine transform: N cosine rows, one constant row
/// -sqrt(1/(2N+1)), N sine rows.
TransformMatrix build_new_sct(std::size_t n);

/// Discrete W transform sqrt(2/N) sin(pi/4 + (k+alpha)(n+beta) gamma pi / N),
/// evaluated as sqrt(1/N) cas(...) with the angle formed exactly.
TransformMatrix build_dwt_unified(std::size_t n, const DwtParams& params);

/// DWT-I..IV: gamma = 2 and (alpha, beta) = (0,0), (1/2,0), (0,1/2), (1/2,1/2).
TransformMatrix build_dwt_classic(Variant variant, std::size_t n);

/// (1/sqrt N) cas((2k+1)(qn+r) p pi / N).
TransformMatrix build_dwt_cas(std::size_t n, const ParamsPQR& params);

/// (1/sqrt N) cas((2k+1)(2qn+r) p pi / 2N).
TransformMatrix build_gen_dwt4(std::size_t n, const ParamsPQR& params);

/// Dispatch on the family tag. `params` must hold ParamsPQR for the
/// (p, q, r) families, DwtParams for kDwtUnified and nothing otherwise.
/// Throws NotParameterized on a mismatch.
TransformMatrix build(TransformFamily family, std::size_t n, const TransformParams& params);

/// The (alpha, beta, gamma) triple behind each classic DWT.
DwtParams classic_dwt_params(Variant variant);

}  // namespace dtt
