#include "cycubic/period.hpp"

#include <sstream>

#include "cycubic/errors.hpp"

namespace cycubic {

void PeriodMap::validate() const {
    if (g <= 0 || n <= 0) throw StructuralError("PeriodMap: g and n must be positive");
    if (static_cast<int>(entries.size()) != g) throw StructuralError("PeriodMap: wrong row count");
    for (const auto& row : entries) {
        if (static_cast<int>(row.size()) != g) throw StructuralError("PeriodMap: wrong column count");
        for (const auto& e : row) {
            if (e.num_vars() != n) throw StructuralError("PeriodMap: entry variable count != n");
            if (e.order() != entries[0][0].order())
                throw StructuralError("PeriodMap: entries must share a truncation order");
        }
    }
    if (!polarization_divisors.empty()) {
        if (static_cast<int>(polarization_divisors.size()) != g)
            throw StructuralError("PeriodMap: need g polarization divisors");
        for (int i = 0; i < g; ++i) {
            if (polarization_divisors[i] <= 0)
                throw StructuralError("PeriodMap: divisors must be positive");
            if (i > 0 && polarization_divisors[i] % polarization_divisors[i - 1] != 0)
                throw StructuralError("PeriodMap: divisors must form a chain d1 | d2 | ... | dg");
        }
    }
    if (base_point_imag) {
        if (static_cast<int>(base_point_imag->size()) != g)
            throw StructuralError("PeriodMap: base_point_imag must be g x g");
        if (!is_symmetric(*base_point_imag))
            throw StructuralError("PeriodMap: base_point_imag must be symmetric");
    }
}

bool PeriodMap::entries_symmetric() const {
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < i; ++j)
            if (entries[i][j] != entries[j][i]) return false;
    return true;
}

AffineFrame AffineFrame::identity(int n) { return AffineFrame{identity_matrix(n)}; }

void AffineFrame::validate(const PeriodMap& p) const {
    if (static_cast<int>(frame.size()) != p.n)
        throw StructuralError("AffineFrame: frame must have n rows");
    for (const auto& row : frame)
        if (static_cast<int>(row.size()) != p.g)
            throw StructuralError("AffineFrame: frame must have g columns");
    if (p.n != p.g)
        throw StructuralError("AffineFrame: non-square frame rejected (need n = g)");
    inverse(frame); // throws when singular
}

std::pair<PeriodMap, PeriodMap> split_symmetric(const PeriodMap& p) {
    p.validate();
    Rational half(1, 2);
    PeriodMap plus = p, minus = p;
    for (int i = 0; i < p.g; ++i)
        for (int j = 0; j < p.g; ++j) {
            plus.entries[i][j] = (p.entries[i][j] + p.entries[j][i]) * half;
            minus.entries[i][j] = (p.entries[i][j] - p.entries[j][i]) * half;
        }
    return {plus, minus};
}

PeriodMap to_affine(const PeriodMap& p, const AffineFrame& alpha) {
    p.validate();
    alpha.validate(p);
    PeriodMap out = p;
    for (auto& row : out.entries)
        for (auto& e : row) e = e.linear_substitute(alpha.frame);
    return out;
}

std::vector<FormalSeries> contracted_derivative(const PeriodMap& p, const AffineFrame& alpha) {
    PeriodMap pa = to_affine(p, alpha);
    int g = pa.g;
    std::vector<FormalSeries> t;
    t.reserve(static_cast<size_t>(g) * g * g);
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j)
            for (int k = 0; k < g; ++k) t.push_back(pa.entries[i][j].derivative(k));
    return t;
}

namespace {

// First coefficient at which two series differ (assumes they do not agree).
void first_difference(const FormalSeries& a, const FormalSeries& b, MultiIndex& m,
                      Rational& ca, Rational& cb) {
    for (const auto& [idx, c] : a.terms()) {
        if (b.coefficient(idx) != c) {
            m = idx;
            ca = c;
            cb = b.coefficient(idx);
            return;
        }
    }
    for (const auto& [idx, c] : b.terms()) {
        if (a.coefficient(idx) != c) {
            m = idx;
            ca = a.coefficient(idx);
            cb = c;
            return;
        }
    }
}

std::string exponent_string(const MultiIndex& m) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < m.size(); ++i) os << (i ? "," : "") << m[i];
    os << "]";
    return os.str();
}

// Homotopy integral of a closed 1-form given by components: returns F with
// dF = sum_j comps[j] du_j and F(0) = 0. A monomial u^b in comps[j]
// contributes coeff * u^b u_j / (|b| + 1).
FormalSeries integrate_closed_form(const std::vector<FormalSeries>& comps) {
    int n = comps[0].num_vars();
    FormalSeries out(n, comps[0].order() + 1);
    for (int j = 0; j < n; ++j) {
        for (const auto& [m, c] : comps[j].terms()) {
            MultiIndex idx = m;
            idx[j] += 1;
            Rational w = c / Rational(static_cast<long>(total_degree(m)) + 1);
            out.set_coefficient(idx, out.coefficient(idx) + w);
        }
    }
    return out;
}

} // namespace

CubicConditionVerdict check_cubic_condition(const PeriodMap& p, const AffineFrame& alpha) {
    p.validate();
    if (!p.entries_symmetric())
        throw ConditionError(
            "check_cubic_condition: period matrix is not symmetric; split it first and use "
            "check_torus_lagrangian_condition");
    std::vector<FormalSeries> t = contracted_derivative(p, alpha);
    int g = p.g;
    auto at = [&](int i, int j, int k) -> const FormalSeries& {
        return t[(static_cast<size_t>(i) * g + j) * g + k];
    };
    CubicConditionVerdict v;
    // T is symmetric in (i,j) because p is; symmetry in (j,k) then generates
    // full S3 symmetry.
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j)
            for (int k = j + 1; k < g; ++k) {
                if (at(i, j, k) == at(i, k, j)) continue;
                v.pass = false;
                v.i = i;
                v.j = j;
                v.k = k;
                first_difference(at(i, j, k), at(i, k, j), v.exponent, v.lhs, v.rhs);
                std::ostringstream os;
                os << "T(" << i + 1 << "," << j + 1 << "," << k + 1 << ") != T(" << i + 1 << ","
                   << k + 1 << "," << j + 1 << ") at exponent " << exponent_string(v.exponent)
                   << ": " << rat_string(v.lhs) << " != " << rat_string(v.rhs);
                v.witness = os.str();
                return v;
            }
    v.pass = true;
    return v;
}

TorusLagrangianReport check_torus_lagrangian_condition(const PeriodMap& p, const AffineFrame& alpha) {
    auto [plus, minus] = split_symmetric(p);
    alpha.validate(p);
    TorusLagrangianReport report;
    report.minus_constant = true;
    for (int i = 0; i < p.g && report.minus_constant; ++i)
        for (int j = 0; j < p.g; ++j) {
            FormalSeries nonconst = minus.entries[i][j];
            nonconst.set_coefficient(MultiIndex(p.n, 0), 0);
            if (!nonconst.is_zero()) {
                report.minus_constant = false;
                std::ostringstream os;
                os << "p_minus nonconstant at entry (" << i + 1 << "," << j + 1 << ")";
                report.minus_witness = os.str();
                break;
            }
        }
    report.cubic = check_cubic_condition(plus, alpha);
    report.pass = report.minus_constant && report.cubic.pass;
    return report;
}

CubicData extract_cubic(const PeriodMap& p, const AffineFrame& alpha) {
    CubicConditionVerdict v = check_cubic_condition(p, alpha);
    if (!v.pass) throw ConditionError("extract_cubic: cubic condition fails", v.witness);
    CubicData c;
    c.g = p.g;
    c.tensor = contracted_derivative(p, alpha);
    return c;
}

std::vector<FormalSeries> action_variables(const PeriodMap& p, const AffineFrame& alpha) {
    CubicConditionVerdict v = check_cubic_condition(p, alpha);
    if (!v.pass) throw ConditionError("action_variables: cubic condition fails", v.witness);
    PeriodMap pa = to_affine(p, alpha);
    std::vector<FormalSeries> t;
    t.reserve(pa.g);
    for (int i = 0; i < pa.g; ++i) t.push_back(integrate_closed_form(pa.entries[i]));
    return t;
}

CubicData integrate_prepotential(const PeriodMap& p, const AffineFrame& alpha) {
    CubicData c = extract_cubic(p, alpha);
    std::vector<FormalSeries> t = action_variables(p, alpha);
    // t_i have zero constant term, so the homotopy integral of sum t_i du_i
    // already has zero constant and linear parts.
    c.prepotential = integrate_closed_form(t);
    return c;
}

std::vector<RatMatrix> polar_quadric_span(const CubicData& c, const RatVector& at) {
    int g = c.g;
    std::vector<RatMatrix> quadrics;
    RatMatrix rows;
    for (int k = 0; k < g; ++k) {
        RatMatrix q(g, RatVector(g, Rational(0)));
        RatVector flat;
        flat.reserve(static_cast<size_t>(g) * g);
        for (int i = 0; i < g; ++i)
            for (int j = 0; j < g; ++j) {
                q[i][j] = c.at(i, j, k).evaluate(at);
                flat.push_back(q[i][j]);
            }
        quadrics.push_back(std::move(q));
        rows.push_back(std::move(flat));
    }
    std::vector<int> pivots = rref(rows);
    std::vector<RatMatrix> basis;
    for (size_t r = 0; r < pivots.size(); ++r) {
        RatMatrix q(g, RatVector(g, Rational(0)));
        for (int i = 0; i < g; ++i)
            for (int j = 0; j < g; ++j) q[i][j] = rows[r][static_cast<size_t>(i) * g + j];
        basis.push_back(std::move(q));
    }
    return basis;
}

} // namespace cycubic
