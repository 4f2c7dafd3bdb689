#include "cycubic/log_series.hpp"

#include <sstream>

namespace cycubic {

LogSeries::LogSeries(std::vector<FormalSeries> base) : base_(std::move(base)) {
    if (base_.empty()) throw StructuralError("LogSeries needs at least the L^0 part");
    for (const auto& s : base_) {
        if (s.num_vars() != 1) throw StructuralError("LogSeries parts must be single-variable");
        if (s.order() != base_[0].order())
            throw StructuralError("LogSeries parts must share a truncation order");
    }
}

const FormalSeries& LogSeries::part(int k) const {
    static const FormalSeries zero_series(1, 0);
    if (k < 0 || k >= static_cast<int>(base_.size())) return zero_series;
    return base_[k];
}

bool LogSeries::is_zero() const {
    for (const auto& s : base_)
        if (!s.is_zero()) return false;
    return true;
}

LogSeries LogSeries::operator-() const {
    std::vector<FormalSeries> out;
    out.reserve(base_.size());
    for (const auto& s : base_) out.push_back(-s);
    return LogSeries(std::move(out));
}

LogSeries LogSeries::operator+(const LogSeries& rhs) const {
    size_t n = std::max(base_.size(), rhs.base_.size());
    int ord = std::min(order(), rhs.order());
    std::vector<FormalSeries> out;
    out.reserve(n);
    for (size_t k = 0; k < n; ++k) {
        FormalSeries a = k < base_.size() ? base_[k] : FormalSeries(1, ord);
        FormalSeries b = k < rhs.base_.size() ? rhs.base_[k] : FormalSeries(1, ord);
        out.push_back(a.truncated(ord) + b.truncated(ord));
    }
    return LogSeries(std::move(out)).normalized();
}

LogSeries LogSeries::operator-(const LogSeries& rhs) const { return *this + (-rhs); }

LogSeries LogSeries::operator*(const LogSeries& rhs) const {
    int ord = std::min(order(), rhs.order());
    size_t n = base_.size() + rhs.base_.size() - 1;
    std::vector<FormalSeries> out(n, FormalSeries(1, ord));
    for (size_t i = 0; i < base_.size(); ++i)
        for (size_t j = 0; j < rhs.base_.size(); ++j)
            out[i + j] = out[i + j] + base_[i].truncated(ord) * rhs.base_[j].truncated(ord);
    return LogSeries(std::move(out)).normalized();
}

LogSeries LogSeries::operator*(const FormalSeries& s) const {
    std::vector<FormalSeries> out;
    out.reserve(base_.size());
    for (const auto& b : base_) out.push_back(b * s);
    return LogSeries(std::move(out)).normalized();
}

LogSeries LogSeries::operator*(const Rational& s) const {
    std::vector<FormalSeries> out;
    out.reserve(base_.size());
    for (const auto& b : base_) out.push_back(b * s);
    return LogSeries(std::move(out)).normalized();
}

LogSeries LogSeries::theta() const {
    std::vector<FormalSeries> out(base_.size(), FormalSeries(1, order()));
    for (size_t k = 0; k < base_.size(); ++k) {
        out[k] = out[k] + base_[k].theta();
        if (k + 1 < base_.size())
            out[k] = out[k] + base_[k + 1] * Rational(static_cast<long>(k + 1));
    }
    return LogSeries(std::move(out)).normalized();
}

LogSeries LogSeries::normalized() const {
    std::vector<FormalSeries> out = base_;
    while (out.size() > 1 && out.back().is_zero()) out.pop_back();
    return LogSeries(std::move(out));
}

bool operator==(const LogSeries& a, const LogSeries& b) {
    LogSeries x = a.normalized(), y = b.normalized();
    return x.base_ == y.base_;
}

std::string LogSeries::str() const {
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < base_.size(); ++k) {
        if (base_[k].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << base_[k].str({"z"}) << ")";
        if (k == 1) os << "*L";
        if (k > 1) os << "*L^" << k;
    }
    return first ? "0" : os.str();
}

} // namespace cycubic
