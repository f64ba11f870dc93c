#pragma once

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "errors.hpp"
#include "laurent.hpp"

namespace ctilde {

/// Dense polynomial in q over Q, coefficient k of q^k; no trailing zeros.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> c) : c_(std::move(c)) { trim(); }

    /// q^shift * p, which must have no negative exponents left.
    static Poly from_laurent(const LaurentPoly& p, int shift) {
        std::vector<Rational> c;
        for (const auto& [e, x] : p.terms()) {
            const int k = e + shift;
            if (k < 0) throw InvariantViolation("negative exponent after shift");
            if (c.size() <= static_cast<std::size_t>(k)) c.resize(static_cast<std::size_t>(k) + 1);
            c[static_cast<std::size_t>(k)] = x;
        }
        return Poly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(std::move(c));
    }

    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
        return Poly(std::move(c));
    }

    /// Exact quotient a / b; throws if the division leaves a remainder.
    static Poly exact_divide(Poly a, const Poly& b) {
        if (b.is_zero()) throw InvariantViolation("division by the zero polynomial");
        if (a.is_zero()) return {};
        const std::size_t db = b.c_.size() - 1;
        if (a.c_.size() < b.c_.size()) throw InvariantViolation("inexact polynomial division");
        std::vector<Rational> q(a.c_.size() - db);
        const Rational lead = b.c_.back();
        for (std::size_t k = q.size(); k-- > 0;) {
            const Rational f = a.c_[k + db] / lead;
            q[k] = f;
            if (f == 0) continue;
            for (std::size_t j = 0; j <= db; ++j) a.c_[k + j] -= f * b.c_[j];
        }
        a.trim();
        if (!a.is_zero()) throw InvariantViolation("inexact polynomial division");
        return Poly(std::move(q));
    }

    Rational evaluate(const Rational& x) const {
        Rational acc = 0;
        for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
        return acc;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rational> c_;
};

/// Coefficient matrix of a family of algebra elements: one row per element,
/// one column per basis symbol occurring, each row shifted by a power of q so
/// all entries are polynomials.
template <class Tag>
std::vector<std::vector<Poly>> coefficient_matrix(const std::vector<AlgebraElement<Tag>>& elems) {
    std::map<GroupElement, std::size_t> columns;
    for (const auto& x : elems) {
        if (!elems.empty()) require_same_graph(x.graph(), elems.front().graph());
        for (const auto& [w, c] : x.terms()) columns.emplace(w, 0);
    }
    std::size_t idx = 0;
    for (auto& [w, k] : columns) k = idx++;
    std::vector<std::vector<Poly>> rows;
    for (const auto& x : elems) {
        int low = 0;
        for (const auto& [w, c] : x.terms()) low = std::min(low, c.min_exponent());
        std::vector<Poly> row(columns.size());
        for (const auto& [w, c] : x.terms()) row[columns.at(w)] = Poly::from_laurent(c, -low);
        rows.push_back(std::move(row));
    }
    return rows;
}

/// Rank over Q(q) by fraction-free (Bareiss) elimination in Q[q].
inline std::size_t bareiss_rank(std::vector<std::vector<Poly>> m) {
    const std::size_t nrows = m.size();
    if (nrows == 0) return 0;
    const std::size_t ncols = m.front().size();
    Poly prev(std::vector<Rational>{Rational(1)});
    std::size_t rank = 0;
    for (std::size_t col = 0; col < ncols && rank < nrows; ++col) {
        // prefer a pivot of low degree to keep entries small
        std::size_t piv = nrows;
        for (std::size_t r = rank; r < nrows; ++r) {
            if (m[r][col].is_zero()) continue;
            if (piv == nrows || m[r][col].degree() < m[piv][col].degree()) piv = r;
        }
        if (piv == nrows) continue;
        std::swap(m[rank], m[piv]);
        const Poly& p = m[rank][col];
        for (std::size_t r = rank + 1; r < nrows; ++r) {
            const Poly f = m[r][col];
            for (std::size_t c = col + 1; c < ncols; ++c) {
                Poly v = p * m[r][c];
                if (!f.is_zero() && !m[rank][c].is_zero()) v = v - f * m[rank][c];
                m[r][c] = Poly::exact_divide(std::move(v), prev);
            }
            m[r][col] = Poly();
        }
        prev = m[rank][col];
        ++rank;
    }
    return rank;
}

/// Rank over Q of the matrix evaluated at q = x.
inline std::size_t rank_at_point(const std::vector<std::vector<Poly>>& m, const Rational& x) {
    std::vector<std::vector<Rational>> a;
    for (const auto& row : m) {
        std::vector<Rational> r;
        for (const Poly& p : row) r.push_back(p.evaluate(x));
        a.push_back(std::move(r));
    }
    const std::size_t nrows = a.size();
    const std::size_t ncols = nrows ? a.front().size() : 0;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < ncols && rank < nrows; ++col) {
        std::size_t piv = rank;
        while (piv < nrows && a[piv][col] == 0) ++piv;
        if (piv == nrows) continue;
        std::swap(a[rank], a[piv]);
        for (std::size_t r = rank + 1; r < nrows; ++r) {
            if (a[r][col] == 0) continue;
            const Rational f = a[r][col] / a[rank][col];
            for (std::size_t c = col; c < ncols; ++c) a[r][c] -= f * a[rank][c];
        }
        ++rank;
    }
    return rank;
}

/// Fixed evaluation points for the cross-check.
inline const std::vector<Rational>& rank_check_points() {
    static const std::vector<Rational> pts{Rational(2), Rational(3), Rational(5, 7), Rational(-3, 2), Rational(11, 13)};
    return pts;
}

struct RankReport {
    std::size_t exact = 0;
    std::vector<std::size_t> at_points;
    /// Each point rank is a lower bound; the largest must reach the exact rank.
    bool consistent() const {
        std::size_t best = 0;
        for (std::size_t r : at_points) {
            if (r > exact) return false;
            best = std::max(best, r);
        }
        return best == exact;
    }
};

/// Rank over Q(q). Specialising q can only lower the rank, so a point of
/// full rank settles it; otherwise fall back to exact elimination.
inline RankReport rank_report(const std::vector<std::vector<Poly>>& m) {
    RankReport rep;
    const std::size_t full = m.empty() ? 0 : std::min(m.size(), m.front().size());
    std::size_t best = 0;
    for (const Rational& x : rank_check_points()) {
        rep.at_points.push_back(rank_at_point(m, x));
        best = std::max(best, rep.at_points.back());
    }
    rep.exact = best == full ? full : bareiss_rank(m);
    return rep;
}

template <class Tag>
RankReport linear_rank_report(const std::vector<AlgebraElement<Tag>>& elems) {
    return rank_report(coefficient_matrix(elems));
}

/// Exact rank of the family over Q(q).
template <class Tag>
std::size_t linear_rank(const std::vector<AlgebraElement<Tag>>& elems) {
    return linear_rank_report(elems).exact;
}

}  // namespace ctilde
