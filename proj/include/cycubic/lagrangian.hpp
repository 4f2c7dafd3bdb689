#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cycubic/period.hpp"

namespace cycubic {

/// A candidate section of the intermediate-Jacobian / torus bundle.
/// Translation sections are the s_{m,n}: u -> m + p(u) n; general sections
/// carry their lift components directly. The discrete class is bookkeeping
/// only (the component of Deligne cohomology the section lives on).
struct SectionCandidate {
    enum class Kind { translation, general };

    Kind kind = Kind::general;
    std::vector<long> m, n;          // translation data
    std::vector<FormalSeries> lift;  // general lift components nu-bar(u)
    std::vector<long> discrete_class;

    static SectionCandidate translation(std::vector<long> m, std::vector<long> n);
    static SectionCandidate general(std::vector<FormalSeries> lift);

    /// Lift components in affine coordinates; expands translation sections
    /// against the period matrix.
    std::vector<FormalSeries> lift_against(const PeriodMap& p, const AffineFrame& alpha) const;
};

struct IsotropyVerdict {
    bool pass = false;
    int j = -1, k = -1;
    MultiIndex exponent;
    Rational coefficient;
    std::string witness;
};

struct TauHomogeneityVerdict {
    bool pass = false;
    bool tau_tilde_invariant = false; // expected false: the uncorrected form
    bool df_invariant = false;        // expected false
    bool weight_one = false;
    std::string witness;
};

/// Components xi_j of the 1-form on the base corresponding to the section
/// (in affine coordinates the components equal the lift components).
std::vector<FormalSeries> one_form_xi(const PeriodMap& p, const SectionCandidate& s,
                                      const AffineFrame& alpha);

/// d(xi) = 0 test: equality of mixed partials of the components.
IsotropyVerdict is_isotropic(const PeriodMap& p, const SectionCandidate& s,
                             const AffineFrame& alpha);

/// Components of nu*tau = xi - dg, with g the pairing of the lift with the
/// gauge section (normalized so the gauge coordinate vector is the affine
/// base coordinate vector itself). Zero iff the section satisfies the
/// normal-function equation to truncation order.
std::vector<FormalSeries> normal_function_residual(const PeriodMap& p, const SectionCandidate& s,
                                                   const AffineFrame& alpha);

/// Checks that tau = tau-tilde - df is weight-1 homogeneous for the gauge
/// rescaling and invariant under translation by integral cycles, while each
/// of tau-tilde and df alone fails the translation identity.
/// include_tau_tilde_only / include_df_only run the uncorrected forms.
TauHomogeneityVerdict check_tau_homogeneity(const PeriodMap& p, const AffineFrame& alpha);

/// Translation defect of a candidate 1-form under the cycle (m, n); used by
/// check_tau_homogeneity and exposed for the negative checks: which = 0 for
/// tau, 1 for tau-tilde alone, 2 for df alone.
std::vector<FormalSeries> translation_defect(const PeriodMap& p, const AffineFrame& alpha,
                                             const std::vector<long>& m,
                                             const std::vector<long>& n, int which);

} // namespace cycubic
