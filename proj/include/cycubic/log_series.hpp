#pragma once

#include <vector>

#include "cycubic/series.hpp"

namespace cycubic {

/// Single-variable series with polynomial dependence on the formal symbol L
/// (standing for log z): sum_k base[k](z) * L^k. The operator theta = z d/dz
/// acts by theta(z^m L^k) = m z^m L^k + k z^m L^{k-1}; no numerical
/// logarithm ever appears.
class LogSeries {
public:
    LogSeries() = default;
    explicit LogSeries(FormalSeries plain) { base_.push_back(std::move(plain)); }
    explicit LogSeries(std::vector<FormalSeries> base);

    static LogSeries zero(int order) { return LogSeries(FormalSeries(1, order)); }

    int log_degree() const { return static_cast<int>(base_.size()) - 1; }
    int order() const { return base_.empty() ? 0 : base_[0].order(); }
    /// Coefficient series of L^k (zero series when k exceeds log_degree).
    const FormalSeries& part(int k) const;
    const std::vector<FormalSeries>& parts() const { return base_; }

    bool is_zero() const;

    LogSeries operator-() const;
    LogSeries operator+(const LogSeries& rhs) const;
    LogSeries operator-(const LogSeries& rhs) const;
    LogSeries operator*(const LogSeries& rhs) const;
    LogSeries operator*(const FormalSeries& s) const;
    LogSeries operator*(const Rational& s) const;

    LogSeries theta() const;

    /// Drops zero top log components (always keeps the L^0 slot).
    LogSeries normalized() const;

    friend bool operator==(const LogSeries& a, const LogSeries& b);
    friend bool operator!=(const LogSeries& a, const LogSeries& b) { return !(a == b); }

    std::string str() const;

private:
    std::vector<FormalSeries> base_; // base_[k] multiplies L^k
};

} // namespace cycubic
