#pragma once

#include <map>
#include <vector>

#include "cycubic/linalg.hpp"
#include "cycubic/series.hpp"

namespace cycubic {

/// Constant totally symmetric rank-3 tensor (a cubic form on g variables).
struct CubicTensor {
    int g = 0;
    std::vector<Rational> entries; // flattened g^3

    static CubicTensor zero(int g);
    /// From a cubic polynomial c(x): entries are the symmetrized
    /// coefficients, c_ijk = (1/6) d^3 c / dx_i dx_j dx_k.
    static CubicTensor from_polynomial(const FormalSeries& cubic_part);
    static CubicTensor fermat(int g);

    const Rational& at(int i, int j, int k) const { return entries[(i * g + j) * g + k]; }
    Rational& at(int i, int j, int k) { return entries[(i * g + j) * g + k]; }
    bool symmetric() const;

    /// Polar quadric Q_k = c(., ., e_k) as a symmetric matrix.
    RatMatrix polar_quadric(int k) const;
};

/// One graded piece of R = S / J, J the ideal of partial quadrics of the
/// cubic, computed by exact elimination.
struct GradedPiece {
    int degree = 0;
    std::vector<MultiIndex> monomials;     // basis of S^d
    int dim_s = 0;
    int dim_j = 0;
    int dim_r = 0;
    std::vector<MultiIndex> r_basis;       // non-pivot monomials
    RatMatrix j_rref;                      // reduced spanning rows of J^d
    std::vector<int> j_pivots;
};

struct JacobianRing {
    int g = 0;
    CubicTensor cubic;
    std::map<int, GradedPiece> pieces;

    const GradedPiece& piece(int degree) const;
};

/// Builds the requested graded pieces of the Jacobian ring; the tensor must
/// be symmetric.
JacobianRing jacobian_ring(const CubicTensor& cubic, const std::vector<int>& degrees);

/// Coordinates of the class of the quadric Q in the computed basis of R^2.
/// Q must be symmetric (the derivative of a Lagrangian lift always is).
RatVector infinitesimal_invariant(const JacobianRing& ring, const RatMatrix& q);

/// Monomial exponent vectors of total degree d in g variables, in the fixed
/// deterministic order used throughout.
std::vector<MultiIndex> monomials_of_degree(int g, int d);

} // namespace cycubic
