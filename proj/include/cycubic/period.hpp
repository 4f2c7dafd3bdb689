#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cycubic/linalg.hpp"
#include "cycubic/series.hpp"

namespace cycubic {

/// Period matrix germ of a family of polarized abelian varieties / complex
/// tori: a g x g matrix of series in the n base variables, expanded around
/// the base point u = 0. The Siegel positivity Im Z > 0 is recorded (via
/// base_point_imag), never enforced; intermediate Jacobians need the
/// indefinite case.
struct PeriodMap {
    int g = 0;
    int n = 0;
    std::vector<std::vector<FormalSeries>> entries; // g x g
    std::vector<long> polarization_divisors;        // d_1 | d_2 | ... | d_g
    std::optional<RatMatrix> base_point_imag;       // Im Z(0), symmetric if present

    void validate() const;
    int order() const { return entries.at(0).at(0).order(); }
    bool entries_symmetric() const;
};

/// The affine structure alpha: V* (x) O_U -> TU at the expansion point,
/// as a constant n x g matrix. Must be square and invertible; a non-square
/// frame is rejected rather than pseudo-inverted.
struct AffineFrame {
    RatMatrix frame;

    static AffineFrame identity(int n);
    void validate(const PeriodMap& p) const;
};

/// A totally symmetric cubic tensor of series, optionally together with the
/// prepotential f (with Hessian(f) = p and third partials = tensor).
struct CubicData {
    int g = 0;
    std::vector<FormalSeries> tensor; // flattened g^3, index (i*g + j)*g + k
    std::optional<FormalSeries> prepotential;

    const FormalSeries& at(int i, int j, int k) const { return tensor[(i * g + j) * g + k]; }
    FormalSeries& at(int i, int j, int k) { return tensor[(i * g + j) * g + k]; }
};

struct CubicConditionVerdict {
    bool pass = false;
    // witness data for the first failing triple: T(i,j,k) != T(i,k,j)
    int i = -1, j = -1, k = -1;
    MultiIndex exponent;
    Rational lhs, rhs;
    std::string witness;
};

struct TorusLagrangianReport {
    bool pass = false;
    bool minus_constant = false;
    std::string minus_witness;
    CubicConditionVerdict cubic;
};

/// p = p_plus + p_minus with p_plus symmetric and p_minus antisymmetric.
std::pair<PeriodMap, PeriodMap> split_symmetric(const PeriodMap& p);

/// Rewrites the period matrix in the affine coordinates of the frame
/// (substitutes u = alpha * v into every entry). All downstream operations
/// work in these coordinates.
PeriodMap to_affine(const PeriodMap& p, const AffineFrame& alpha);

/// Contracted derivative T_ijk of the period matrix in affine coordinates.
std::vector<FormalSeries> contracted_derivative(const PeriodMap& p, const AffineFrame& alpha);

/// Total-symmetry test on T_ijk. Requires a symmetric period matrix; an
/// asymmetric one is a precondition error (split it first and use
/// check_torus_lagrangian_condition).
CubicConditionVerdict check_cubic_condition(const PeriodMap& p, const AffineFrame& alpha);

/// Complex-torus variant: p_minus must be locally constant and p_plus must
/// satisfy the cubic condition.
TorusLagrangianReport check_torus_lagrangian_condition(const PeriodMap& p, const AffineFrame& alpha);

/// The cubic tensor c with contraction c(.,.,e_k) = d(p o alpha). Throws
/// ConditionError carrying the witness when the cubic condition fails.
CubicData extract_cubic(const PeriodMap& p, const AffineFrame& alpha);

/// Action variables t_i with dt_i = sum_j p_ij du_j in affine coordinates;
/// normalized to zero constant term.
std::vector<FormalSeries> action_variables(const PeriodMap& p, const AffineFrame& alpha);

/// Prepotential f with Hessian(f) = p, normalized to zero constant and
/// linear parts; the stored tensor is the extracted cubic (= third partials).
CubicData integrate_prepotential(const PeriodMap& p, const AffineFrame& alpha);

/// Basis (as symmetric g x g rational matrices) of the span of the g polar
/// quadrics Q_k = c(.,.,e_k) of the cubic evaluated at a base point.
std::vector<RatMatrix> polar_quadric_span(const CubicData& c, const RatVector& at);

} // namespace cycubic
