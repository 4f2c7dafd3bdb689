#include "cycubic/linalg.hpp"

#include "cycubic/errors.hpp"

namespace cycubic {

RatMatrix identity_matrix(int n) {
    RatMatrix a(n, RatVector(n, Rational(0)));
    for (int i = 0; i < n; ++i) a[i][i] = 1;
    return a;
}

RatMatrix transpose(const RatMatrix& a) {
    if (a.empty()) return {};
    RatMatrix out(a[0].size(), RatVector(a.size(), Rational(0)));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[i].size(); ++j) out[j][i] = a[i][j];
    return out;
}

RatMatrix matmul(const RatMatrix& a, const RatMatrix& b) {
    if (a.empty() || b.empty()) return {};
    size_t n = a.size(), k = b.size(), m = b[0].size();
    RatMatrix out(n, RatVector(m, Rational(0)));
    for (size_t i = 0; i < n; ++i) {
        if (a[i].size() != k) throw StructuralError("matmul: dimension mismatch");
        for (size_t l = 0; l < k; ++l) {
            if (a[i][l] == 0) continue;
            for (size_t j = 0; j < m; ++j) out[i][j] += a[i][l] * b[l][j];
        }
    }
    return out;
}

RatVector matvec(const RatMatrix& a, const RatVector& v) {
    RatVector out(a.size(), Rational(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != v.size()) throw StructuralError("matvec: dimension mismatch");
        for (size_t j = 0; j < v.size(); ++j) out[i] += a[i][j] * v[j];
    }
    return out;
}

std::vector<int> rref(RatMatrix& a) {
    std::vector<int> pivots;
    if (a.empty()) return pivots;
    size_t rows = a.size(), cols = a[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t sel = r;
        while (sel < rows && a[sel][c] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(a[sel], a[r]);
        Rational inv = Rational(1) / a[r][c];
        for (size_t j = c; j < cols; ++j) a[r][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            Rational f = a[i][c];
            for (size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    return pivots;
}

int rank(RatMatrix a) { return static_cast<int>(rref(a).size()); }

RatMatrix inverse(const RatMatrix& a) {
    size_t n = a.size();
    RatMatrix aug(n, RatVector(2 * n, Rational(0)));
    for (size_t i = 0; i < n; ++i) {
        if (a[i].size() != n) throw StructuralError("inverse: matrix not square");
        for (size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
        aug[i][n + i] = 1;
    }
    auto pivots = rref(aug);
    if (pivots.size() != n || pivots.back() != static_cast<int>(n) - 1)
        throw StructuralError("inverse: matrix is singular");
    RatMatrix out(n, RatVector(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) out[i][j] = aug[i][n + j];
    return out;
}

bool is_symmetric(const RatMatrix& a) {
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != a.size()) return false;
        for (size_t j = 0; j < i; ++j)
            if (a[i][j] != a[j][i]) return false;
    }
    return true;
}

} // namespace cycubic
