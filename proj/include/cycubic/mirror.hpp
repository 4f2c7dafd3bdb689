#pragma once

#include <map>
#include <string>
#include <vector>

#include "cycubic/linalg.hpp"
#include "cycubic/log_series.hpp"

namespace cycubic {

/// Ordinary differential operator sum_j a_j(z) theta^j with theta = z d/dz
/// and polynomial coefficients; the z-multiplication happens after the
/// theta's are applied.
struct PicardFuchsOperator {
    int order = 0;
    // coefficients[j] holds a_j as ascending z-coefficients
    std::vector<std::vector<Rational>> coefficients;

    void validate() const;
    /// Indicial polynomial b_0(lambda) = sum_j a_j(0) lambda^j.
    RatVector indicial_polynomial() const;
    /// True iff the indicial equation at z = 0 is lambda^order = 0.
    bool maximally_unipotent() const;
    /// Rational roots of the indicial polynomial with multiplicities
    /// (diagnostic for the rejection message).
    std::vector<std::pair<Rational, int>> rational_indicial_roots() const;

    LogSeries apply(const LogSeries& w) const;
};

struct FrobeniusBasis {
    std::vector<LogSeries> solutions; // omega_0 ... omega_{order-1}
    int truncation_order = 0;
};

/// Frobenius solutions at a maximally unipotent point, solved degree by
/// degree in exact rationals. Rejects non-maximally-unipotent operators with
/// the indicial data in the message.
FrobeniusBasis frobenius_solve(const PicardFuchsOperator& op, int truncation_order);

struct MirrorMap {
    LogSeries t;            // omega_1 / omega_0 = L + regular part
    FormalSeries omega0;
    FormalSeries t_regular; // omega_1^reg / omega_0
    FormalSeries q_of_z;    // z * exp(omega_1^reg / omega_0)
    FormalSeries z_of_q;
};

/// Special coordinate and multiplicative q-coordinate. No numerical 2*pi*i
/// appears anywhere: q = z exp(omega_1^reg / omega_0) carries log q = 2 pi i t
/// formally.
MirrorMap mirror_map(const FrobeniusBasis& basis);

struct MirrorPipelineConfig {
    PicardFuchsOperator op;
    std::vector<Rational> yukawa_num; // ascending z-coefficients
    std::vector<Rational> yukawa_den;
    long classical_triple = 0;
    int truncation_order = 12;
    std::map<std::string, std::string> provenance;

    void validate() const;
    FormalSeries algebraic_yukawa(int order) const;
};

/// Gauge-normalized Yukawa coupling in the q-coordinate:
/// K(q) = Y(z(q)) * omega_0(z(q))^{-2} * (q dz / (z dq))^3.
/// The constant term must equal the classical triple intersection number.
FormalSeries normalized_yukawa(const FormalSeries& algebraic_yukawa, const FrobeniusBasis& basis,
                               const MirrorMap& maps, long classical_triple);

struct CurveCounts {
    std::vector<Rational> n;    // n_1 .. n_kmax
    std::vector<bool> integral; // integrality is empirical; flagged, not fatal
    bool all_integral = true;
};

/// Inverts K(q) - Topo = sum_k n_k k^3 q^k / (1 - q^k) for the n_k.
CurveCounts extract_counts(const FormalSeries& k_of_q, long classical_triple, int kmax);

/// Synthesizes K(q) from a finite list of counts (test oracle direction of
/// extract_counts).
FormalSeries synthesize_yukawa(const std::vector<Rational>& n, long classical_triple, int order);

struct ActionPeriodsReport {
    std::vector<std::string> heads; // leading terms of each omega_k
    bool quotient_rule_consistent = false;
};

/// Exposes the omega_i as the action coordinates of the family and verifies
/// the quotient-differentiation identity for d(omega_1/omega_0) both ways.
ActionPeriodsReport action_periods(const FrobeniusBasis& basis);

} // namespace cycubic
