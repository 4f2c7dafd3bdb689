#pragma once

#include <vector>

#include "cycubic/rational.hpp"

namespace cycubic {

/// Dense matrix of exact rationals; row-major.
using RatMatrix = std::vector<std::vector<Rational>>;
using RatVector = std::vector<Rational>;

RatMatrix identity_matrix(int n);
RatMatrix transpose(const RatMatrix& a);
RatMatrix matmul(const RatMatrix& a, const RatMatrix& b);
RatVector matvec(const RatMatrix& a, const RatVector& v);

/// In-place reduced row echelon form; returns the pivot column of each
/// nonzero row, in order. Rank = pivots.size(). Exact, no thresholds.
std::vector<int> rref(RatMatrix& a);

int rank(RatMatrix a);

/// Inverse of a square matrix; throws StructuralError when singular.
RatMatrix inverse(const RatMatrix& a);

bool is_symmetric(const RatMatrix& a);

} // namespace cycubic
