#include "cycubic/series.hpp"

#include <algorithm>
#include <sstream>

namespace cycubic {

unsigned total_degree(const MultiIndex& m) {
    unsigned d = 0;
    for (unsigned e : m) d += e;
    return d;
}

Rational rat_from_strings(const std::string& num, const std::string& den) {
    mpz_class n, d;
    if (n.set_str(num, 10) != 0) throw StructuralError("bad integer string: " + num);
    if (d.set_str(den, 10) != 0) throw StructuralError("bad integer string: " + den);
    if (d == 0) throw StructuralError("zero denominator");
    Rational r(n, d);
    r.canonicalize();
    return r;
}

std::string num_string(const Rational& r) { return r.get_num().get_str(); }
std::string den_string(const Rational& r) { return r.get_den().get_str(); }

std::string rat_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

FormalSeries::FormalSeries(int num_vars, int order) : num_vars_(num_vars), order_(order) {
    if (num_vars < 1) throw StructuralError("num_vars must be positive");
    if (order < 0) throw StructuralError("truncation order must be non-negative");
}

FormalSeries FormalSeries::constant(const Rational& c, int num_vars, int order) {
    FormalSeries s(num_vars, order);
    s.set_coefficient(MultiIndex(num_vars, 0), c);
    return s;
}

FormalSeries FormalSeries::variable(int index, int num_vars, int order) {
    if (index < 0 || index >= num_vars) throw StructuralError("variable index out of range");
    FormalSeries s(num_vars, order);
    MultiIndex m(num_vars, 0);
    m[index] = 1;
    s.set_coefficient(m, 1);
    return s;
}

Rational FormalSeries::coefficient(const MultiIndex& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational FormalSeries::constant_term() const {
    return coefficient(MultiIndex(num_vars_, 0));
}

void FormalSeries::set_coefficient(const MultiIndex& m, const Rational& c) {
    if (static_cast<int>(m.size()) != num_vars_)
        throw StructuralError("multi-index length does not match num_vars");
    if (static_cast<int>(total_degree(m)) > order_) return;
    if (c == 0)
        terms_.erase(m);
    else
        terms_[m] = c;
}

FormalSeries FormalSeries::truncated(int order) const {
    FormalSeries out(num_vars_, order);
    for (const auto& [m, c] : terms_) out.set_coefficient(m, c);
    return out;
}

void FormalSeries::require_compatible(const FormalSeries& rhs) const {
    if (num_vars_ != rhs.num_vars_)
        throw StructuralError("series arithmetic between different variable counts");
}

FormalSeries FormalSeries::operator-() const {
    FormalSeries out(num_vars_, order_);
    for (const auto& [m, c] : terms_) out.terms_[m] = -c;
    return out;
}

FormalSeries FormalSeries::operator+(const FormalSeries& rhs) const {
    require_compatible(rhs);
    FormalSeries out(num_vars_, std::min(order_, rhs.order_));
    for (const auto& [m, c] : terms_) out.set_coefficient(m, c);
    for (const auto& [m, c] : rhs.terms_) out.set_coefficient(m, out.coefficient(m) + c);
    return out;
}

FormalSeries FormalSeries::operator-(const FormalSeries& rhs) const {
    return *this + (-rhs);
}

FormalSeries FormalSeries::operator*(const FormalSeries& rhs) const {
    require_compatible(rhs);
    FormalSeries out(num_vars_, std::min(order_, rhs.order_));
    for (const auto& [ma, ca] : terms_) {
        int da = static_cast<int>(total_degree(ma));
        if (da > out.order_) continue;
        for (const auto& [mb, cb] : rhs.terms_) {
            if (da + static_cast<int>(total_degree(mb)) > out.order_) continue;
            MultiIndex m(num_vars_);
            for (int i = 0; i < num_vars_; ++i) m[i] = ma[i] + mb[i];
            auto it = out.terms_.find(m);
            if (it == out.terms_.end())
                out.terms_[m] = ca * cb;
            else {
                it->second += ca * cb;
                if (it->second == 0) out.terms_.erase(it);
            }
        }
    }
    return out;
}

FormalSeries FormalSeries::operator*(const Rational& s) const {
    FormalSeries out(num_vars_, order_);
    if (s == 0) return out;
    for (const auto& [m, c] : terms_) out.terms_[m] = c * s;
    return out;
}

FormalSeries FormalSeries::inverse() const {
    Rational c0 = constant_term();
    if (c0 == 0) throw DomainError("series_invert: constant term is zero (non-unit)");
    // Newton-free direct recursion: write a = c0(1 - r), invert degree by degree.
    FormalSeries rest = (*this) * (Rational(1) / c0);
    rest.set_coefficient(MultiIndex(num_vars_, 0), 0);
    // inverse of (1 + rest) = sum (-rest)^k, rest has positive valuation
    FormalSeries out = FormalSeries::constant(1, num_vars_, order_);
    FormalSeries pow = FormalSeries::constant(1, num_vars_, order_);
    for (int k = 1; k <= order_; ++k) {
        pow = pow * rest;
        if (pow.is_zero()) break;
        out = (k % 2 == 1) ? out - pow : out + pow;
    }
    return out * (Rational(1) / c0);
}

FormalSeries FormalSeries::derivative(int var) const {
    if (var < 0 || var >= num_vars_) throw StructuralError("derivative: variable index out of range");
    FormalSeries out(num_vars_, std::max(order_ - 1, 0));
    for (const auto& [m, c] : terms_) {
        if (m[var] == 0) continue;
        MultiIndex d = m;
        d[var] -= 1;
        out.set_coefficient(d, c * Rational(static_cast<long>(m[var])));
    }
    return out;
}

FormalSeries FormalSeries::antiderivative(int var) const {
    if (var < 0 || var >= num_vars_) throw StructuralError("antiderivative: variable index out of range");
    FormalSeries out(num_vars_, order_ + 1);
    for (const auto& [m, c] : terms_) {
        MultiIndex d = m;
        d[var] += 1;
        out.set_coefficient(d, c / Rational(static_cast<long>(d[var])));
    }
    return out;
}

FormalSeries FormalSeries::theta(int var) const {
    if (var < 0 || var >= num_vars_) throw StructuralError("theta: variable index out of range");
    FormalSeries out(num_vars_, order_);
    for (const auto& [m, c] : terms_) {
        if (m[var] == 0) continue;
        out.terms_[m] = c * Rational(static_cast<long>(m[var]));
    }
    return out;
}

FormalSeries FormalSeries::exp() const {
    if (constant_term() != 0) throw DomainError("exp: nonzero constant term");
    FormalSeries out = FormalSeries::constant(1, num_vars_, order_);
    FormalSeries pow = FormalSeries::constant(1, num_vars_, order_);
    Rational fact(1);
    for (int k = 1; k <= order_; ++k) {
        pow = pow * (*this);
        if (pow.is_zero()) break;
        fact *= k;
        out = out + pow * (Rational(1) / fact);
    }
    return out;
}

FormalSeries FormalSeries::log() const {
    if (constant_term() != 1) throw DomainError("log: constant term is not 1");
    FormalSeries x = *this - FormalSeries::constant(1, num_vars_, order_);
    FormalSeries out(num_vars_, order_);
    FormalSeries pow = FormalSeries::constant(1, num_vars_, order_);
    for (int k = 1; k <= order_; ++k) {
        pow = pow * x;
        if (pow.is_zero()) break;
        Rational c = Rational(k % 2 == 1 ? 1 : -1) / Rational(k);
        out = out + pow * c;
    }
    return out;
}

FormalSeries FormalSeries::substitute(const std::vector<FormalSeries>& args) const {
    if (static_cast<int>(args.size()) != num_vars_)
        throw StructuralError("substitute: need one argument per variable");
    for (const auto& a : args) {
        if (a.num_vars() != args[0].num_vars() || a.order() != args[0].order())
            throw StructuralError("substitute: arguments must share variables and order");
        if (a.constant_term() != 0)
            throw DomainError("substitute: arguments must have zero constant term");
    }
    int out_vars = args[0].num_vars();
    int out_order = std::min(order_, args[0].order());
    FormalSeries out(out_vars, out_order);
    // Cache powers of each argument as needed.
    std::vector<std::vector<FormalSeries>> powers(num_vars_);
    for (int i = 0; i < num_vars_; ++i)
        powers[i].push_back(FormalSeries::constant(1, out_vars, out_order));
    auto power = [&](int var, unsigned e) -> const FormalSeries& {
        while (powers[var].size() <= e)
            powers[var].push_back(powers[var].back() * args[var]);
        return powers[var][e];
    };
    for (const auto& [m, c] : terms_) {
        if (static_cast<int>(total_degree(m)) > out_order) continue;
        FormalSeries term = FormalSeries::constant(c, out_vars, out_order);
        for (int i = 0; i < num_vars_; ++i)
            if (m[i] > 0) term = term * power(i, m[i]);
        out = out + term;
    }
    return out;
}

FormalSeries FormalSeries::compose(const FormalSeries& inner) const {
    if (num_vars_ != 1) throw StructuralError("compose: outer series must be single-variable");
    return substitute({inner});
}

FormalSeries FormalSeries::revert() const {
    if (num_vars_ != 1) throw StructuralError("reversion requires a single-variable series");
    if (constant_term() != 0) throw DomainError("reversion: constant term must be zero");
    MultiIndex lin{1};
    Rational c1 = coefficient(lin);
    if (c1 == 0) throw DomainError("reversion: zero linear coefficient (non-invertible)");
    // Fixed-point iteration z <- (t - (f(z) - c1 z)) / c1 gains one correct
    // order per step.
    FormalSeries t = FormalSeries::variable(0, 1, order_);
    FormalSeries z = t * (Rational(1) / c1);
    FormalSeries tail = *this;
    tail.set_coefficient(lin, 0); // f(z) - c1 z
    for (int k = 2; k <= order_; ++k)
        z = (t - tail.compose(z)) * (Rational(1) / c1);
    return z;
}

FormalSeries FormalSeries::linear_substitute(const std::vector<std::vector<Rational>>& coeff) const {
    if (static_cast<int>(coeff.size()) != num_vars_)
        throw StructuralError("linear_substitute: row count must match num_vars");
    int out_vars = static_cast<int>(coeff[0].size());
    std::vector<FormalSeries> args;
    args.reserve(num_vars_);
    for (int l = 0; l < num_vars_; ++l) {
        if (static_cast<int>(coeff[l].size()) != out_vars)
            throw StructuralError("linear_substitute: ragged matrix");
        FormalSeries lin(out_vars, order_);
        for (int a = 0; a < out_vars; ++a) {
            MultiIndex m(out_vars, 0);
            m[a] = 1;
            lin.set_coefficient(m, coeff[l][a]);
        }
        args.push_back(lin);
    }
    return substitute(args);
}

Rational FormalSeries::evaluate(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != num_vars_)
        throw StructuralError("evaluate: point dimension mismatch");
    Rational out(0);
    for (const auto& [m, c] : terms_) {
        Rational v = c;
        for (int i = 0; i < num_vars_; ++i)
            for (unsigned e = 0; e < m[i]; ++e) v *= point[i];
        out += v;
    }
    return out;
}

bool operator==(const FormalSeries& a, const FormalSeries& b) {
    return a.num_vars_ == b.num_vars_ && a.order_ == b.order_ && a.terms_ == b.terms_;
}

bool FormalSeries::agrees_with(const FormalSeries& other) const {
    if (num_vars_ != other.num_vars_) return false;
    int d = std::min(order_, other.order_);
    for (const auto& [m, c] : terms_)
        if (static_cast<int>(total_degree(m)) <= d && other.coefficient(m) != c) return false;
    for (const auto& [m, c] : other.terms_)
        if (static_cast<int>(total_degree(m)) <= d && coefficient(m) != c) return false;
    return true;
}

std::string FormalSeries::str(const std::vector<std::string>& var_names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << rat_string(c);
        for (int i = 0; i < num_vars_; ++i) {
            if (m[i] == 0) continue;
            os << "*";
            if (static_cast<size_t>(i) < var_names.size())
                os << var_names[i];
            else
                os << "u" << (i + 1);
            if (m[i] > 1) os << "^" << m[i];
        }
    }
    return os.str();
}

} // namespace cycubic
