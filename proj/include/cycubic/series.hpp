#pragma once

#include <map>
#include <string>
#include <vector>

#include "cycubic/errors.hpp"
#include "cycubic/rational.hpp"

namespace cycubic {

/// Exponent vector; length equals the number of variables of the series.
using MultiIndex = std::vector<unsigned>;

unsigned total_degree(const MultiIndex& m);

/// Truncated multivariate formal power series over exact rationals.
///
/// Terms are kept sparsely, keyed by multi-index; absent key means zero and
/// zero coefficients are never stored. Truncation is by total degree,
/// inclusive. Arithmetic between series of different truncation orders
/// truncates to the minimum. Values are immutable in practice: every
/// operation returns a fresh series.
class FormalSeries {
public:
    FormalSeries() : num_vars_(1), order_(0) {}
    FormalSeries(int num_vars, int order);

    static FormalSeries constant(const Rational& c, int num_vars, int order);
    static FormalSeries variable(int index, int num_vars, int order);

    int num_vars() const { return num_vars_; }
    int order() const { return order_; }
    const std::map<MultiIndex, Rational>& terms() const { return terms_; }

    Rational coefficient(const MultiIndex& m) const;
    Rational constant_term() const;
    /// Stores c at m; silently drops indices beyond the truncation order,
    /// removes the term when c is zero.
    void set_coefficient(const MultiIndex& m, const Rational& c);

    bool is_zero() const { return terms_.empty(); }
    FormalSeries truncated(int order) const;

    FormalSeries operator-() const;
    FormalSeries operator+(const FormalSeries& rhs) const;
    FormalSeries operator-(const FormalSeries& rhs) const;
    FormalSeries operator*(const FormalSeries& rhs) const;
    FormalSeries operator*(const Rational& s) const;

    /// Multiplicative inverse; requires a nonzero constant term.
    FormalSeries inverse() const;

    /// Partial derivative; drops the truncation order by one (floored at 0).
    FormalSeries derivative(int var) const;
    /// Antiderivative with zero constant of integration; raises the
    /// truncation order by one.
    FormalSeries antiderivative(int var) const;
    /// The operator u d/du in one variable; preserves the truncation order.
    FormalSeries theta(int var = 0) const;

    /// Formal exponential; requires zero constant term.
    FormalSeries exp() const;
    /// Formal logarithm; requires constant term 1.
    FormalSeries log() const;

    /// Substitutes args[i] for variable i. Every argument must have zero
    /// constant term and all arguments must agree in num_vars and order.
    FormalSeries substitute(const std::vector<FormalSeries>& args) const;
    /// Single-variable composition this(inner); inner must have zero
    /// constant term.
    FormalSeries compose(const FormalSeries& inner) const;
    /// Lagrange reversion: for single-variable t(z) with t(0) = 0 and
    /// nonzero linear coefficient, returns z(t) with t(z(t)) = t.
    FormalSeries revert() const;

    /// Linear change of variables u_l = sum_a coeff[l][a] v_a.
    FormalSeries linear_substitute(const std::vector<std::vector<Rational>>& coeff) const;

    Rational evaluate(const std::vector<Rational>& point) const;

    /// Structural equality: same num_vars, same order, same terms.
    friend bool operator==(const FormalSeries& a, const FormalSeries& b);
    friend bool operator!=(const FormalSeries& a, const FormalSeries& b) {
        return !(a == b);
    }
    /// Coefficientwise agreement up to the smaller truncation order.
    bool agrees_with(const FormalSeries& other) const;

    std::string str(const std::vector<std::string>& var_names = {}) const;

private:
    void require_compatible(const FormalSeries& rhs) const;

    int num_vars_;
    int order_;
    std::map<MultiIndex, Rational> terms_;
};

inline FormalSeries operator*(const Rational& s, const FormalSeries& a) { return a * s; }

} // namespace cycubic
