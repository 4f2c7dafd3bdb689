#include "cycubic/mirror.hpp"

#include <algorithm>
#include <sstream>

#include "cycubic/errors.hpp"

namespace cycubic {

namespace {

// Dense polynomial-mod-lambda^N arithmetic used by the Frobenius recurrence.
using LambdaPoly = std::vector<Rational>; // length N, coefficient of lambda^i

LambdaPoly lp_zero(int n) { return LambdaPoly(n, Rational(0)); }

LambdaPoly lp_mul(const LambdaPoly& a, const LambdaPoly& b) {
    int n = static_cast<int>(a.size());
    LambdaPoly out = lp_zero(n);
    for (int i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; i + j < n; ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

void lp_add_to(LambdaPoly& a, const LambdaPoly& b) {
    for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
}

// inverse of a unit mod lambda^N
LambdaPoly lp_inverse(const LambdaPoly& a) {
    int n = static_cast<int>(a.size());
    if (a[0] == 0) throw DomainError("lambda-polynomial not a unit");
    LambdaPoly out = lp_zero(n);
    out[0] = Rational(1) / a[0];
    for (int i = 1; i < n; ++i) {
        Rational acc(0);
        for (int j = 1; j <= i; ++j) acc += a[j] * out[i - j];
        out[i] = -acc / a[0];
    }
    return out;
}

// b(lambda + c) truncated mod lambda^N, from exact coefficients of b.
LambdaPoly lp_shift_truncate(const RatVector& b, const Rational& c, int n) {
    LambdaPoly out = lp_zero(n);
    for (size_t d = 0; d < b.size(); ++d) {
        if (b[d] == 0) continue;
        // (lambda + c)^d = sum_i C(d,i) c^{d-i} lambda^i
        Rational binom(1);
        Rational cpow(1);
        for (size_t e = 0; e < d; ++e) cpow *= c;
        // iterate i = 0..min(d, n-1)
        Rational term = cpow; // C(d,0) c^d
        for (size_t i = 0; i <= d && static_cast<int>(i) < n; ++i) {
            out[i] += b[d] * term;
            if (i == d) break;
            // next: C(d,i+1) c^{d-i-1} = term * (d-i)/(i+1) / c  (c may be 0)
            if (c == 0) {
                // only the i == d term survives when c == 0
                term = 0;
                if (d < static_cast<size_t>(n)) out[d] += b[d];
                break;
            }
            term = term * Rational(static_cast<long>(d - i)) / Rational(static_cast<long>(i + 1)) / c;
        }
    }
    return out;
}

} // namespace

void PicardFuchsOperator::validate() const {
    if (order <= 0) throw StructuralError("PicardFuchsOperator: order must be positive");
    if (static_cast<int>(coefficients.size()) != order + 1)
        throw StructuralError("PicardFuchsOperator: need order + 1 coefficient polynomials");
    if (coefficients[order].empty() || coefficients[order][0] == 0)
        throw StructuralError("PicardFuchsOperator: leading coefficient must be a unit at z = 0");
}

RatVector PicardFuchsOperator::indicial_polynomial() const {
    RatVector b0(order + 1, Rational(0));
    for (int j = 0; j <= order; ++j)
        if (!coefficients[j].empty()) b0[j] = coefficients[j][0];
    return b0;
}

bool PicardFuchsOperator::maximally_unipotent() const {
    RatVector b0 = indicial_polynomial();
    for (int j = 0; j < order; ++j)
        if (b0[j] != 0) return false;
    return b0[order] != 0;
}

std::vector<std::pair<Rational, int>> PicardFuchsOperator::rational_indicial_roots() const {
    RatVector poly = indicial_polynomial();
    std::vector<std::pair<Rational, int>> roots;
    // deflate the zero root first
    int zero_mult = 0;
    while (zero_mult < static_cast<int>(poly.size()) - 1 && poly[0] == 0) {
        poly.erase(poly.begin());
        ++zero_mult;
    }
    if (zero_mult > 0) roots.emplace_back(Rational(0), zero_mult);
    // rational root search over divisors of the (integer-scaled) ends
    auto eval = [&](const Rational& x) {
        Rational acc(0);
        for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * x + *it;
        return acc;
    };
    auto deflate = [&](const Rational& r) {
        // synthetic division by (x - r)
        RatVector out(poly.size() - 1, Rational(0));
        Rational carry(0);
        for (int i = static_cast<int>(poly.size()) - 1; i >= 1; --i) {
            out[i - 1] = poly[i] + carry;
            carry = out[i - 1] * r;
        }
        poly = out;
    };
    // scale to integer polynomial for candidate enumeration
    mpz_class den_lcm(1);
    for (const auto& c : poly) den_lcm = den_lcm * c.get_den() / gcd(den_lcm, c.get_den());
    std::vector<mpz_class> ip;
    for (const auto& c : poly) ip.push_back(mpz_class(c.get_num() * (den_lcm / c.get_den())));
    if (ip.size() >= 2 && ip.front() != 0 && ip.back() != 0) {
        auto divisors = [](mpz_class v) {
            v = abs(v);
            std::vector<mpz_class> out;
            for (mpz_class d = 1; d * d <= v; ++d)
                if (v % d == 0) {
                    out.push_back(d);
                    out.push_back(v / d);
                }
            return out;
        };
        for (const auto& pnum : divisors(ip.front()))
            for (const auto& qden : divisors(ip.back()))
                for (int sign : {1, -1}) {
                    Rational cand(sign * pnum, qden);
                    cand.canonicalize();
                    int mult = 0;
                    while (poly.size() > 1 && eval(cand) == 0) {
                        deflate(cand);
                        ++mult;
                    }
                    if (mult > 0) roots.emplace_back(cand, mult);
                }
    }
    return roots;
}

LogSeries PicardFuchsOperator::apply(const LogSeries& w) const {
    validate();
    int ord = w.order();
    LogSeries out = LogSeries::zero(ord);
    LogSeries theta_pow = w;
    for (int j = 0; j <= order; ++j) {
        if (j > 0) theta_pow = theta_pow.theta();
        FormalSeries aj(1, ord);
        for (size_t s = 0; s < coefficients[j].size(); ++s) {
            MultiIndex m{static_cast<unsigned>(s)};
            aj.set_coefficient(m, coefficients[j][s]);
        }
        if (!aj.is_zero()) out = out + theta_pow * aj;
    }
    return out;
}

FrobeniusBasis frobenius_solve(const PicardFuchsOperator& op, int truncation_order) {
    op.validate();
    if (!op.maximally_unipotent()) {
        std::ostringstream os;
        os << "frobenius_solve: indicial equation at z = 0 is not lambda^" << op.order
           << " = 0; rational indicial roots:";
        for (const auto& [r, mult] : op.rational_indicial_roots())
            os << " " << rat_string(r) << " (mult " << mult << ")";
        throw DomainError(os.str());
    }
    int n = op.order;
    int t = truncation_order;
    // z-expansion of the operator: b_s(lambda) = sum_j [z^s] a_j(z) lambda^j
    size_t max_s = 0;
    for (const auto& poly : op.coefficients) max_s = std::max(max_s, poly.size());
    std::vector<RatVector> b(max_s, RatVector(n + 1, Rational(0)));
    for (int j = 0; j <= n; ++j)
        for (size_t s = 0; s < op.coefficients[j].size(); ++s) b[s][j] += op.coefficients[j][s];

    // A_m(lambda) mod lambda^n with A_0 = 1:
    //   sum_{s=0}^{m} b_s(lambda + m - s) A_{m-s}(lambda) = 0.
    std::vector<LambdaPoly> a(t + 1, lp_zero(n));
    a[0][0] = 1;
    for (int m = 1; m <= t; ++m) {
        LambdaPoly rhs = lp_zero(n);
        for (int s = 1; s <= m && s < static_cast<int>(max_s); ++s) {
            LambdaPoly shifted = lp_shift_truncate(b[s], Rational(m - s), n);
            lp_add_to(rhs, lp_mul(shifted, a[m - s]));
        }
        LambdaPoly inv = lp_inverse(lp_shift_truncate(b[0], Rational(m), n));
        LambdaPoly am = lp_mul(inv, rhs);
        for (auto& c : am) c = -c;
        a[m] = std::move(am);
    }

    // S_j(z) = sum_m [lambda^j] A_m z^m;  omega_k = sum_i L^i / i! * S_{k-i}.
    std::vector<FormalSeries> s_of_z(n, FormalSeries(1, t));
    for (int j = 0; j < n; ++j)
        for (int m = 0; m <= t; ++m)
            s_of_z[j].set_coefficient(MultiIndex{static_cast<unsigned>(m)}, a[m][j]);

    FrobeniusBasis basis;
    basis.truncation_order = t;
    Rational fact(1);
    std::vector<Rational> inv_fact{Rational(1)};
    for (int i = 1; i < n; ++i) {
        fact *= i;
        inv_fact.push_back(Rational(1) / fact);
    }
    for (int k = 0; k < n; ++k) {
        std::vector<FormalSeries> parts;
        for (int i = 0; i <= k; ++i) parts.push_back(s_of_z[k - i] * inv_fact[i]);
        basis.solutions.push_back(LogSeries(std::move(parts)));
    }
    return basis;
}

MirrorMap mirror_map(const FrobeniusBasis& basis) {
    if (basis.solutions.size() < 2)
        throw StructuralError("mirror_map: need at least omega_0 and omega_1");
    MirrorMap mm;
    mm.omega0 = basis.solutions[0].part(0);
    const LogSeries& omega1 = basis.solutions[1];
    FormalSeries inv0 = mm.omega0.inverse();
    mm.t = omega1 * inv0;
    mm.t_regular = omega1.part(0) * inv0;
    int ord = mm.omega0.order();
    FormalSeries z = FormalSeries::variable(0, 1, ord);
    mm.q_of_z = z * mm.t_regular.exp();
    mm.z_of_q = mm.q_of_z.revert();
    return mm;
}

void MirrorPipelineConfig::validate() const {
    op.validate();
    if (yukawa_den.empty() || yukawa_den[0] == 0)
        throw StructuralError("mirror config: Yukawa denominator must be a unit at z = 0");
    if (truncation_order < 1) throw StructuralError("mirror config: truncation order too small");
}

FormalSeries MirrorPipelineConfig::algebraic_yukawa(int order) const {
    auto poly = [order](const std::vector<Rational>& c) {
        FormalSeries s(1, order);
        for (size_t i = 0; i < c.size(); ++i)
            s.set_coefficient(MultiIndex{static_cast<unsigned>(i)}, c[i]);
        return s;
    };
    return poly(yukawa_num) * poly(yukawa_den).inverse();
}

FormalSeries normalized_yukawa(const FormalSeries& algebraic_yukawa, const FrobeniusBasis& basis,
                               const MirrorMap& maps, long classical_triple) {
    // theta log q = 1 + theta(omega_1^reg / omega_0); the Jacobian factor
    // (q dz / z dq)^3 is its inverse cube.
    FormalSeries d = FormalSeries::constant(1, 1, maps.omega0.order()) + maps.t_regular.theta();
    FormalSeries inv_d = d.inverse();
    FormalSeries inv_w0 = maps.omega0.inverse();
    FormalSeries k_of_z = algebraic_yukawa * inv_w0 * inv_w0 * inv_d * inv_d * inv_d;
    FormalSeries k_of_q = k_of_z.compose(maps.z_of_q);
    if (k_of_q.constant_term() != Rational(classical_triple)) {
        std::ostringstream os;
        os << "normalized_yukawa: constant term " << rat_string(k_of_q.constant_term())
           << " does not match the classical triple intersection " << classical_triple
           << " (wrong normalization or operator)";
        throw DomainError(os.str());
    }
    (void)basis;
    return k_of_q;
}

CurveCounts extract_counts(const FormalSeries& k_of_q, long classical_triple, int kmax) {
    if (k_of_q.constant_term() != Rational(classical_triple))
        throw DomainError("extract_counts: constant term does not equal the classical triple");
    if (kmax > k_of_q.order())
        throw StructuralError("extract_counts: kmax exceeds the truncation order");
    CurveCounts out;
    for (int m = 1; m <= kmax; ++m) {
        Rational coeff = k_of_q.coefficient(MultiIndex{static_cast<unsigned>(m)});
        // subtract multiple covers: coefficient of q^m is sum_{k | m} n_k k^3
        for (int k = 1; k < m; ++k)
            if (m % k == 0) coeff -= out.n[k - 1] * Rational(k) * Rational(k) * Rational(k);
        Rational nk = coeff / (Rational(m) * Rational(m) * Rational(m));
        bool integral = nk.get_den() == 1;
        out.n.push_back(nk);
        out.integral.push_back(integral);
        if (!integral) out.all_integral = false;
    }
    return out;
}

FormalSeries synthesize_yukawa(const std::vector<Rational>& n, long classical_triple, int order) {
    FormalSeries k = FormalSeries::constant(Rational(classical_triple), 1, order);
    for (size_t idx = 0; idx < n.size(); ++idx) {
        long deg = static_cast<long>(idx) + 1;
        Rational cube = Rational(deg) * Rational(deg) * Rational(deg);
        for (long d = 1; d * deg <= order; ++d) {
            MultiIndex m{static_cast<unsigned>(d * deg)};
            k.set_coefficient(m, k.coefficient(m) + n[idx] * cube);
        }
    }
    return k;
}

ActionPeriodsReport action_periods(const FrobeniusBasis& basis) {
    ActionPeriodsReport report;
    for (const auto& w : basis.solutions) report.heads.push_back(w.str());
    if (basis.solutions.size() >= 2) {
        const LogSeries& w0 = basis.solutions[0];
        const LogSeries& w1 = basis.solutions[1];
        FormalSeries inv0 = w0.part(0).inverse();
        // route 1: differentiate the quotient directly
        LogSeries lhs = (w1 * inv0).theta();
        // route 2: quotient rule (theta w1 * w0 - w1 * theta w0) / w0^2
        LogSeries rhs = (w1.theta() * w0.part(0) - w1 * w0.part(0).theta()) * (inv0 * inv0);
        report.quotient_rule_consistent = (lhs == rhs);
    }
    return report;
}

} // namespace cycubic
