#include "cycubic/jacobian_ring.hpp"

#include <algorithm>

#include "cycubic/errors.hpp"

namespace cycubic {

CubicTensor CubicTensor::zero(int g) {
    CubicTensor c;
    c.g = g;
    c.entries.assign(static_cast<size_t>(g) * g * g, Rational(0));
    return c;
}

CubicTensor CubicTensor::from_polynomial(const FormalSeries& cubic_part) {
    int g = cubic_part.num_vars();
    CubicTensor c = zero(g);
    for (const auto& [m, a] : cubic_part.terms()) {
        if (total_degree(m) != 3) continue;
        // distinct orderings of the index multiset: 6 / prod(beta_i!)
        long perms = 6;
        for (int i = 0; i < g; ++i) {
            if (m[i] == 2) perms /= 2;
            if (m[i] == 3) perms /= 6;
        }
        Rational share = a / Rational(perms);
        std::vector<int> idx;
        for (int i = 0; i < g; ++i)
            for (unsigned e = 0; e < m[i]; ++e) idx.push_back(i);
        std::sort(idx.begin(), idx.end());
        do {
            c.at(idx[0], idx[1], idx[2]) = share;
        } while (std::next_permutation(idx.begin(), idx.end()));
    }
    return c;
}

CubicTensor CubicTensor::fermat(int g) {
    CubicTensor c = zero(g);
    for (int i = 0; i < g; ++i) c.at(i, i, i) = 1;
    return c;
}

bool CubicTensor::symmetric() const {
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j)
            for (int k = 0; k < g; ++k)
                if (at(i, j, k) != at(j, i, k) || at(i, j, k) != at(i, k, j)) return false;
    return true;
}

RatMatrix CubicTensor::polar_quadric(int k) const {
    RatMatrix q(g, RatVector(g, Rational(0)));
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j) q[i][j] = at(i, j, k);
    return q;
}

std::vector<MultiIndex> monomials_of_degree(int g, int d) {
    std::vector<MultiIndex> out;
    MultiIndex cur(g, 0);
    // lexicographic enumeration by recursion on the first variable
    std::function<void(int, int)> rec = [&](int var, int rem) {
        if (var == g - 1) {
            cur[var] = static_cast<unsigned>(rem);
            out.push_back(cur);
            return;
        }
        for (int e = rem; e >= 0; --e) {
            cur[var] = static_cast<unsigned>(e);
            rec(var + 1, rem - e);
        }
    };
    if (g > 0 && d >= 0) rec(0, d);
    return out;
}

const GradedPiece& JacobianRing::piece(int degree) const {
    auto it = pieces.find(degree);
    if (it == pieces.end()) throw StructuralError("JacobianRing: degree not computed");
    return it->second;
}

JacobianRing jacobian_ring(const CubicTensor& cubic, const std::vector<int>& degrees) {
    if (!cubic.symmetric()) throw StructuralError("jacobian_ring: tensor must be symmetric");
    JacobianRing ring;
    ring.g = cubic.g;
    ring.cubic = cubic;
    int g = cubic.g;
    for (int d : degrees) {
        if (d < 0) throw StructuralError("jacobian_ring: negative degree");
        GradedPiece piece;
        piece.degree = d;
        piece.monomials = monomials_of_degree(g, d);
        piece.dim_s = static_cast<int>(piece.monomials.size());
        std::map<MultiIndex, int> column;
        for (int c = 0; c < piece.dim_s; ++c) column[piece.monomials[c]] = c;

        RatMatrix rows;
        if (d >= 2) {
            for (const auto& mu : monomials_of_degree(g, d - 2)) {
                for (int k = 0; k < g; ++k) {
                    RatVector row(piece.dim_s, Rational(0));
                    bool nonzero = false;
                    for (int i = 0; i < g; ++i)
                        for (int j = 0; j < g; ++j) {
                            const Rational& c = cubic.at(i, j, k);
                            if (c == 0) continue;
                            MultiIndex m = mu;
                            m[i] += 1;
                            m[j] += 1;
                            row[column.at(m)] += c;
                            nonzero = true;
                        }
                    if (nonzero) rows.push_back(std::move(row));
                }
            }
        }
        piece.j_pivots = rref(rows);
        rows.resize(piece.j_pivots.size());
        piece.j_rref = std::move(rows);
        piece.dim_j = static_cast<int>(piece.j_pivots.size());
        piece.dim_r = piece.dim_s - piece.dim_j;
        std::vector<bool> is_pivot(piece.dim_s, false);
        for (int c : piece.j_pivots) is_pivot[c] = true;
        for (int c = 0; c < piece.dim_s; ++c)
            if (!is_pivot[c]) piece.r_basis.push_back(piece.monomials[c]);
        ring.pieces[d] = std::move(piece);
    }
    return ring;
}

RatVector infinitesimal_invariant(const JacobianRing& ring, const RatMatrix& q) {
    if (static_cast<int>(q.size()) != ring.g)
        throw StructuralError("infinitesimal_invariant: quadric has wrong size");
    if (!is_symmetric(q))
        throw StructuralError(
            "infinitesimal_invariant: quadric must be symmetric (the derivative of a "
            "Lagrangian lift is)");
    const GradedPiece& p2 = ring.piece(2);
    RatVector v(p2.dim_s, Rational(0));
    for (size_t c = 0; c < p2.monomials.size(); ++c) {
        const MultiIndex& m = p2.monomials[c];
        int i = -1, j = -1;
        for (int t = 0; t < ring.g; ++t) {
            if (m[t] == 2) { i = j = t; }
            if (m[t] == 1) { (i < 0 ? i : j) = t; }
        }
        v[c] = (i == j) ? q[i][i] : q[i][j] + q[j][i];
    }
    // reduce modulo the row-reduced basis of J^2
    for (size_t r = 0; r < p2.j_rref.size(); ++r) {
        int c = p2.j_pivots[r];
        if (v[c] == 0) continue;
        Rational f = v[c];
        for (int t = 0; t < p2.dim_s; ++t) v[t] -= f * p2.j_rref[r][t];
    }
    RatVector coords;
    std::vector<bool> is_pivot(p2.dim_s, false);
    for (int c : p2.j_pivots) is_pivot[c] = true;
    for (int c = 0; c < p2.dim_s; ++c)
        if (!is_pivot[c]) coords.push_back(v[c]);
    return coords;
}

} // namespace cycubic
