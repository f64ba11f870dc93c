#pragma once

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstdlib>
#include <memory>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "quadint.hpp"

namespace ctilde {

enum class Family { Ctilde, B, Atilde };

inline std::string_view family_name(Family f) {
    switch (f) {
        case Family::Ctilde: return "ctilde";
        case Family::B: return "b";
        case Family::Atilde: return "atilde";
    }
    return "?";
}

inline Family parse_family(std::string_view s) {
    if (s == "ctilde") return Family::Ctilde;
    if (s == "b") return Family::B;
    if (s == "atilde") return Family::Atilde;
    throw InputError("unknown family '" + std::string(s) + "'");
}

/// Generator index in [0, rank).
using Gen = int;
/// Sequence of generators; the empty word is the identity.
using Word = std::vector<Gen>;

/// Coxeter graph of one of the supported families.
///
/// Numbering (rank m):
///   Ctilde: 0 = t = sigma_0, 1..m-2 = sigma_1..sigma_{m-2}, m-1 = affine end.
///           Rank m is the group written W(C~_{m-1}) in the literature.
///   B:      0 = t, 1..m-1 = sigma_1..sigma_{m-1}, m(0,1) = 4.
///   Atilde: cycle; 0 = a_m, i = s_i for 1 <= i <= m-1.
class CoxeterGraph {
public:
    CoxeterGraph(Family family, int rank) : family_(family), rank_(rank) {
        const int min_rank = family == Family::B ? 2 : 3;
        if (rank < min_rank) {
            throw InputError(std::string(family_name(family)) + " graphs need rank >= " +
                             std::to_string(min_rank));
        }
        orders_.assign(static_cast<std::size_t>(rank * rank), 2);
        for (int i = 0; i < rank; ++i) set(i, i, 1);
        switch (family) {
            case Family::Ctilde:
                for (int i = 1; i + 1 <= rank - 2; ++i) set(i, i + 1, 3);
                set(0, 1, 4);
                set(rank - 2, rank - 1, 4);
                break;
            case Family::B:
                for (int i = 1; i + 1 < rank; ++i) set(i, i + 1, 3);
                set(0, 1, 4);
                break;
            case Family::Atilde:
                for (int i = 0; i < rank; ++i) set(i, (i + 1) % rank, 3);
                break;
        }
        form_.resize(orders_.size());
        for (std::size_t k = 0; k < orders_.size(); ++k) {
            switch (orders_[k]) {
                case 1: form_[k] = QuadInt(2); break;
                case 2: form_[k] = QuadInt(0); break;
                case 3: form_[k] = QuadInt(-1); break;
                case 4: form_[k] = QuadInt(0, -1); break;
                default: throw InvariantViolation("unsupported edge label");
            }
        }
    }

    static std::shared_ptr<const CoxeterGraph> make(Family family, int rank) {
        return std::make_shared<const CoxeterGraph>(family, rank);
    }

    Family family() const { return family_; }
    int rank() const { return rank_; }

    /// Order m(s,t) of st.
    int order(Gen s, Gen t) const { return orders_[index(s, t)]; }
    bool commute(Gen s, Gen t) const { return order(s, t) == 2; }

    /// 2 B(alpha_s, alpha_t) = -2 cos(pi / m(s,t)).
    const QuadInt& form(Gen s, Gen t) const { return form_[index(s, t)]; }

    /// Index of sigma_n, the far end of the finite line t = sigma_0, ..., sigma_n.
    int line_top() const {
        switch (family_) {
            case Family::Ctilde: return rank_ - 2;
            case Family::B: return rank_ - 1;
            case Family::Atilde: break;
        }
        throw InputError("atilde graphs have no B line");
    }

    Gen affine_generator() const {
        if (family_ != Family::Ctilde) throw InputError("only ctilde graphs have an affine end");
        return rank_ - 1;
    }

    bool valid(Gen s) const { return s >= 0 && s < rank_; }

    void check_word(const Word& w) const {
        for (Gen s : w) {
            if (!valid(s)) {
                throw InputError("generator index " + std::to_string(s) + " out of range for rank " +
                                 std::to_string(rank_));
            }
        }
    }

    friend bool operator==(const CoxeterGraph& x, const CoxeterGraph& y) {
        return x.family_ == y.family_ && x.rank_ == y.rank_;
    }

private:
    std::size_t index(Gen s, Gen t) const { return static_cast<std::size_t>(s * rank_ + t); }
    void set(int i, int j, int m) {
        orders_[index(i, j)] = m;
        orders_[index(j, i)] = m;
    }

    Family family_;
    int rank_;
    std::vector<int> orders_;
    std::vector<QuadInt> form_;
};

using GraphPtr = std::shared_ptr<const CoxeterGraph>;

inline void require_same_graph(const CoxeterGraph& a, const CoxeterGraph& b) {
    if (!(a == b)) throw InputError("graph mismatch");
}

/// Square matrix over Z[sqrt 2], row-major; columns are images of simple roots.
class RootMatrix {
public:
    RootMatrix() = default;
    explicit RootMatrix(int dim) : dim_(dim), a_(static_cast<std::size_t>(dim * dim)) {}

    static RootMatrix identity(int dim) {
        RootMatrix m(dim);
        for (int i = 0; i < dim; ++i) m(i, i) = QuadInt(1);
        return m;
    }

    int dim() const { return dim_; }
    QuadInt& operator()(int i, int j) { return a_[static_cast<std::size_t>(i * dim_ + j)]; }
    const QuadInt& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i * dim_ + j)]; }

    friend RootMatrix operator*(const RootMatrix& x, const RootMatrix& y) {
        RootMatrix r(x.dim_);
        for (int i = 0; i < x.dim_; ++i)
            for (int k = 0; k < x.dim_; ++k) {
                const QuadInt& xik = x(i, k);
                if (xik.is_zero()) continue;
                for (int j = 0; j < x.dim_; ++j) r(i, j) += xik * y(k, j);
            }
        return r;
    }

    // this <- this * S_s
    void right_reflect(const CoxeterGraph& g, Gen s) {
        for (int i = 0; i < dim_; ++i) {
            const QuadInt mis = (*this)(i, s);
            if (mis.is_zero()) continue;
            for (int j = 0; j < dim_; ++j) {
                const QuadInt& c = g.form(s, j);
                if (!c.is_zero()) (*this)(i, j) -= mis * c;
            }
        }
    }

    // this <- S_s * this   (only row s changes)
    void left_reflect(const CoxeterGraph& g, Gen s) {
        std::vector<QuadInt> row(static_cast<std::size_t>(dim_));
        for (int k = 0; k < dim_; ++k) {
            const QuadInt& c = g.form(s, k);
            if (c.is_zero()) continue;
            for (int j = 0; j < dim_; ++j) row[static_cast<std::size_t>(j)] += c * (*this)(k, j);
        }
        for (int j = 0; j < dim_; ++j) (*this)(s, j) -= row[static_cast<std::size_t>(j)];
    }

    /// Column j is a root; roots are either all >= 0 or all <= 0 coordinatewise.
    bool column_negative(int j) const {
        for (int i = 0; i < dim_; ++i)
            if ((*this)(i, j).sign() > 0) return false;
        return true;
    }

    std::size_t hash() const {
        std::size_t h = static_cast<std::size_t>(dim_);
        for (const QuadInt& x : a_) h = h * 1099511628211ull ^ std::hash<QuadInt>{}(x);
        return h;
    }

    friend bool operator==(const RootMatrix&, const RootMatrix&) = default;

private:
    int dim_ = 0;
    std::vector<QuadInt> a_;
};

/// Element of W(graph) in the exact reflection representation, with cached
/// length and canonical reduced word.
///
/// The canonical word is built by repeatedly stripping the smallest-index left
/// descent, i.e. it is the lexicographically least reduced word. Equality is
/// matrix equality; ordering is (length, canonical word).
class GroupElement {
public:
    explicit GroupElement(GraphPtr graph)
        : graph_(std::move(graph)),
          mat_(RootMatrix::identity(graph_->rank())),
          inv_(RootMatrix::identity(graph_->rank())) {}

    const CoxeterGraph& graph() const { return *graph_; }
    const GraphPtr& graph_ptr() const { return graph_; }
    const RootMatrix& matrix() const { return mat_; }
    const RootMatrix& inverse_matrix() const { return inv_; }
    std::size_t length() const { return word_.size(); }
    const Word& word() const { return word_; }
    bool is_identity() const { return word_.empty(); }

    /// l(s w) < l(w)  <=>  w^{-1}(alpha_s) < 0.
    bool is_left_descent(Gen s) const { return inv_.column_negative(s); }
    /// l(w s) < l(w)  <=>  w(alpha_s) < 0.
    bool is_right_descent(Gen s) const { return mat_.column_negative(s); }

    GroupElement left_multiply(Gen s) const {
        RootMatrix m = mat_;
        RootMatrix inv = inv_;
        m.left_reflect(*graph_, s);
        inv.right_reflect(*graph_, s);
        return GroupElement(graph_, std::move(m), std::move(inv));
    }

    GroupElement right_multiply(Gen s) const {
        RootMatrix m = mat_;
        RootMatrix inv = inv_;
        m.right_reflect(*graph_, s);
        inv.left_reflect(*graph_, s);
        return GroupElement(graph_, std::move(m), std::move(inv));
    }

    GroupElement inverse() const { return GroupElement(graph_, inv_, mat_); }

    friend GroupElement operator*(const GroupElement& x, const GroupElement& y) {
        require_same_graph(*x.graph_, *y.graph_);
        return GroupElement(x.graph_, x.mat_ * y.mat_, y.inv_ * x.inv_);
    }

    friend bool operator==(const GroupElement& x, const GroupElement& y) {
        return *x.graph_ == *y.graph_ && x.mat_ == y.mat_;
    }

    friend std::strong_ordering operator<=>(const GroupElement& x, const GroupElement& y) {
        if (auto c = x.word_.size() <=> y.word_.size(); c != 0) return c;
        return x.word_ <=> y.word_;
    }

    static GroupElement from_word(GraphPtr graph, const Word& w) {
        graph->check_word(w);
        RootMatrix m = RootMatrix::identity(graph->rank());
        RootMatrix inv = RootMatrix::identity(graph->rank());
        for (Gen s : w) {
            m.right_reflect(*graph, s);
            inv.left_reflect(*graph, s);
        }
        return GroupElement(std::move(graph), std::move(m), std::move(inv));
    }

private:
    GroupElement(GraphPtr graph, RootMatrix mat, RootMatrix inv)
        : graph_(std::move(graph)), mat_(std::move(mat)), inv_(std::move(inv)) {
        RootMatrix cur = inv_;
        const int r = graph_->rank();
        for (;;) {
            Gen d = -1;
            for (Gen s = 0; s < r; ++s) {
                if (cur.column_negative(s)) {
                    d = s;
                    break;
                }
            }
            if (d < 0) break;
            word_.push_back(d);
            cur.right_reflect(*graph_, d);
        }
    }

    GraphPtr graph_;
    RootMatrix mat_;
    RootMatrix inv_;
    Word word_;
};

struct GroupElementHash {
    std::size_t operator()(const GroupElement& g) const noexcept { return g.matrix().hash(); }
};

inline GroupElement evaluate(const GraphPtr& graph, const Word& w) { return GroupElement::from_word(graph, w); }

inline std::vector<Gen> left_descents(const GroupElement& g) {
    std::vector<Gen> out;
    for (Gen s = 0; s < g.graph().rank(); ++s)
        if (g.is_left_descent(s)) out.push_back(s);
    return out;
}

inline std::vector<Gen> right_descents(const GroupElement& g) {
    std::vector<Gen> out;
    for (Gen s = 0; s < g.graph().rank(); ++s)
        if (g.is_right_descent(s)) out.push_back(s);
    return out;
}

inline std::pair<std::size_t, Word> length_and_reduce(const GroupElement& g) { return {g.length(), g.word()}; }

inline Word inverse_word(Word w) {
    std::reverse(w.begin(), w.end());
    return w;
}

inline Word concat(Word a, const Word& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

/// Element cap for enumerations: CTILDE_MAX_ELEMENTS, default 5,000,000.
inline std::size_t default_element_cap() {
    if (const char* env = std::getenv("CTILDE_MAX_ELEMENTS")) {
        std::size_t v = 0;
        std::string_view s(env);
        auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec == std::errc() && p == s.data() + s.size() && v > 0) return v;
    }
    return 5'000'000;
}

/// All elements of length <= radius, ordered by (length, canonical word).
inline std::vector<GroupElement> enumerate_ball(const GraphPtr& graph, std::size_t radius,
                                                std::size_t cap = default_element_cap()) {
    std::vector<GroupElement> out;
    std::vector<GroupElement> level{GroupElement(graph)};
    out.push_back(level.front());
    for (std::size_t len = 1; len <= radius; ++len) {
        std::unordered_set<GroupElement, GroupElementHash> seen;
        std::vector<GroupElement> next;
        for (const GroupElement& w : level) {
            for (Gen s = 0; s < graph->rank(); ++s) {
                if (w.is_left_descent(s)) continue;
                GroupElement sw = w.left_multiply(s);
                if (seen.insert(sw).second) {
                    next.push_back(std::move(sw));
                    if (out.size() + next.size() > cap) {
                        throw ResourceError("ball enumeration exceeded element cap of " + std::to_string(cap));
                    }
                }
            }
        }
        if (next.empty()) break;
        std::sort(next.begin(), next.end());
        out.insert(out.end(), next.begin(), next.end());
        level = std::move(next);
    }
    return out;
}

/// Bracket words on the line t = sigma_0, ..., sigma_n (n = line_top()):
///   [i,j]  = sigma_i sigma_{i+1} ... sigma_j            0 <= i <= j <= n
///   [-i,j] = sigma_i ... sigma_1 t sigma_1 ... sigma_j  1 <= i <= j <= n
///   [n+1,n] = [0,-1] = empty.
inline Word bracket_word(const CoxeterGraph& g, int i, int j) {
    const int n = g.line_top();
    if ((i == n + 1 && j == n) || (i == 0 && j == -1)) return {};
    Word w;
    if (i >= 0 && i <= j && j <= n) {
        for (int k = i; k <= j; ++k) w.push_back(k);
        return w;
    }
    if (i < 0 && -i <= j && j <= n) {
        for (int k = -i; k >= 1; --k) w.push_back(k);
        w.push_back(0);
        for (int k = 1; k <= j; ++k) w.push_back(k);
        return w;
    }
    throw InputError("bracket [" + std::to_string(i) + "," + std::to_string(j) + "] undefined for n = " +
                     std::to_string(n));
}

/// Length of [i,n] on a line with top n, for -n <= i <= n+1.
inline int bracket_length(int i, int n) { return n - i + 1; }

// ---- word text grammar ------------------------------------------------------
//   tokens separated by whitespace; "t" = 0, "s<k>" = k, "u" = rank-1, bare
//   decimals are indices; empty text is the identity.

inline Word parse_word(const CoxeterGraph& g, std::string_view text) {
    Word w;
    std::istringstream in{std::string(text)};
    std::string tok;
    auto parse_index = [&](std::string_view digits) {
        int v = 0;
        auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
        if (digits.empty() || ec != std::errc() || p != digits.data() + digits.size()) {
            throw InputError("bad word token '" + tok + "'");
        }
        return v;
    };
    while (in >> tok) {
        Gen s;
        if (tok == "t") {
            s = 0;
        } else if (tok == "u") {
            s = g.rank() - 1;
        } else if (tok.size() > 1 && tok[0] == 's') {
            s = parse_index(std::string_view(tok).substr(1));
            if (s < 1) throw InputError("bad word token '" + tok + "'");
        } else {
            s = parse_index(tok);
        }
        if (!g.valid(s)) throw InputError("token '" + tok + "' out of range for rank " + std::to_string(g.rank()));
        w.push_back(s);
    }
    return w;
}

inline std::string format_generator(const CoxeterGraph& g, Gen s) {
    switch (g.family()) {
        case Family::Ctilde:
            if (s == 0) return "t";
            if (s == g.rank() - 1) return "u";
            return "s" + std::to_string(s);
        case Family::B:
            return s == 0 ? "t" : "s" + std::to_string(s);
        case Family::Atilde:
            return s == 0 ? "0" : "s" + std::to_string(s);
    }
    return std::to_string(s);
}

inline std::string format_word(const CoxeterGraph& g, const Word& w) {
    std::string out;
    for (Gen s : w) {
        if (!out.empty()) out += ' ';
        out += format_generator(g, s);
    }
    return out;
}

}  // namespace ctilde
