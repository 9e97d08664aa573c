#pragma once

#include <vector>

#include "qpb/scalar.hpp"

namespace qpb {

using ExactVec = std::vector<ExactC>;
/// Row-major dense matrix over the exact scalars.
using ExactMat = std::vector<ExactVec>;

ExactMat mat_identity(std::size_t n);
ExactMat mat_mul(const ExactMat& a, const ExactMat& b);
ExactVec mat_apply(const ExactMat& a, const ExactVec& v);
ExactMat conj_transpose(const ExactMat& a);

/// Solve A x = rhs by exact Gaussian elimination.
/// Throws NumericError when A is singular.
ExactVec solve_linear(ExactMat a, ExactVec rhs);

/// Solve A X = B columnwise (shared elimination).
/// Throws NumericError when A is singular.
ExactMat solve_matrix(const ExactMat& a, const ExactMat& b);

/// Adjoint of the operator with matrix `m` mapping (V, gram_in) into
/// (W, gram_out): the unique A with gram_in * A = m^H * gram_out.
ExactMat gram_adjoint(const ExactMat& m, const ExactMat& gram_in,
                      const ExactMat& gram_out);

} // namespace qpb
