#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <variant>
#include <vector>

#include "coxeter.hpp"

namespace ctilde {

// ---- helpers on elements ----------------------------------------------------

/// If `prefix` (a reduced word) is a left factor of `w`, i.e. l(prefix^-1 w) =
/// l(w) - |prefix|, returns prefix^-1 w.
inline std::optional<GroupElement> strip_left(const GroupElement& w, const Word& prefix) {
    GroupElement cur = w;
    for (Gen s : prefix) {
        if (!cur.is_left_descent(s)) return std::nullopt;
        cur = cur.left_multiply(s);
    }
    return cur;
}

inline bool is_reduced(const GraphPtr& g, const Word& w) { return evaluate(g, w).length() == w.size(); }

inline void require_reduced(const GraphPtr& g, const Word& w) {
    if (!is_reduced(g, w)) throw InputError("word is not reduced: " + format_word(*g, w));
}

/// Largest generator index occurring in w (-1 for the identity).
inline int max_support(const GroupElement& w) {
    const Word& word = w.word();
    return word.empty() ? -1 : *std::max_element(word.begin(), word.end());
}

// ---- full commutativity (heap criterion) ------------------------------------

/// Decides full commutativity of the element given by a reduced word.
///
/// Builds the heap of the word and looks for a convex chain of m(s,t) >= 3
/// alternating s/t elements. Such a chain exists in the heap of one (hence
/// every) reduced word exactly when some word in the commutation class has
/// an sts.. braid factor.
inline bool heap_is_fc(const CoxeterGraph& g, const Word& w) {
    const std::size_t len = w.size();
    const std::size_t blocks = (len + 63) / 64;
    std::vector<std::uint64_t> below(len * blocks, 0);
    auto bit = [&](std::size_t row, std::size_t col) {
        return (below[row * blocks + col / 64] >> (col % 64)) & 1u;
    };
    for (std::size_t b = 0; b < len; ++b) {
        for (std::size_t a = 0; a < b; ++a) {
            if (g.commute(w[a], w[b]) && w[a] != w[b]) continue;
            for (std::size_t k = 0; k < blocks; ++k) below[b * blocks + k] |= below[a * blocks + k];
            below[b * blocks + a / 64] |= std::uint64_t{1} << (a % 64);
        }
    }
    const int r = g.rank();
    std::vector<std::size_t> pos;
    for (Gen s = 0; s < r; ++s) {
        for (Gen t = s + 1; t < r; ++t) {
            const int m = g.order(s, t);
            if (m < 3) continue;
            pos.clear();
            for (std::size_t k = 0; k < len; ++k)
                if (w[k] == s || w[k] == t) pos.push_back(k);
            const auto mm = static_cast<std::size_t>(m);
            for (std::size_t j = 0; j + mm <= pos.size(); ++j) {
                bool alternating = true;
                for (std::size_t x = j; x + 1 < j + mm; ++x)
                    if (w[pos[x]] == w[pos[x + 1]]) alternating = false;
                if (!alternating) continue;
                const std::size_t lo = pos[j];
                const std::size_t hi = pos[j + mm - 1];
                bool convex = true;
                for (std::size_t z = lo + 1; z < hi && convex; ++z) {
                    if (w[z] == s || w[z] == t) continue;
                    if (bit(z, lo) && bit(hi, z)) convex = false;
                }
                if (convex) return false;
            }
        }
    }
    return true;
}

inline bool is_fully_commutative(const GraphPtr& g, const Word& w) {
    g->check_word(w);
    require_reduced(g, w);
    return heap_is_fc(*g, w);
}

inline bool is_fully_commutative(const GroupElement& w) { return heap_is_fc(w.graph(), w.word()); }

/// Number of affine letters in a reduced word.
inline std::size_t affine_length(const GraphPtr& g, const Word& w) {
    const Gen a = g->affine_generator();
    g->check_word(w);
    require_reduced(g, w);
    return static_cast<std::size_t>(std::count(w.begin(), w.end(), a));
}

inline std::size_t affine_length(const GroupElement& w) {
    const Gen a = w.graph().affine_generator();
    return static_cast<std::size_t>(std::count(w.word().begin(), w.word().end(), a));
}

// ---- Stembridge forms -------------------------------------------------------

/// The bracket [l,g].
struct Segment {
    int l = 0;
    int g = 0;
    friend bool operator==(const Segment&, const Segment&) = default;
};

/// [l_1,g_1][l_2,g_2]...[l_r,g_r] with n >= g_1 > ... > g_r >= 0, |l_t| <= g_t.
struct StembridgeForm {
    std::vector<Segment> segments;

    /// 1 if l_1 > ... > l_s > 0 = l_{s+1} = ... = l_r,
    /// 2 if l_1 > ... > l_{r-1} > -l_r > 0, 0 if neither.
    int condition() const {
        const auto r = segments.size();
        if (r == 0) return 1;
        bool one = true;
        bool zeros = false;
        for (std::size_t k = 0; k < r && one; ++k) {
            const int l = segments[k].l;
            if (l < 0) one = false;
            else if (l == 0) zeros = true;
            else if (zeros || (k > 0 && segments[k - 1].l <= l)) one = false;
        }
        if (one) return 1;
        if (segments.back().l >= 0) return 0;
        for (std::size_t k = 0; k + 1 < r; ++k) {
            const int next = k + 2 == r ? -segments.back().l : segments[k + 1].l;
            if (segments[k].l <= next) return 0;
        }
        return 2;
    }

    bool empty() const { return segments.empty(); }
    friend bool operator==(const StembridgeForm&, const StembridgeForm&) = default;
};

inline bool valid_stembridge(const StembridgeForm& f, int n) {
    int prev = n + 1;
    for (const Segment& s : f.segments) {
        if (s.g >= prev || s.g < 0 || std::abs(s.l) > s.g) return false;
        prev = s.g;
    }
    return f.condition() != 0;
}

inline Word stembridge_word(const CoxeterGraph& g, const StembridgeForm& f) {
    Word w;
    for (const Segment& s : f.segments) {
        const Word b = bracket_word(g, s.l, s.g);
        w.insert(w.end(), b.begin(), b.end());
    }
    return w;
}

/// Normal form of a fully commutative element of the B parabolic
/// (generators t = sigma_0 .. sigma_n of a ctilde or b graph).
///
/// Peels [l_1,g_1] as the minimal left coset representative modulo the
/// parabolic on sigma_0..sigma_{g_1 - 1}, then recurses on the rest.
inline StembridgeForm stembridge_form(const GroupElement& w) {
    const CoxeterGraph& g = w.graph();
    const int n = g.line_top();
    if (max_support(w) > n) throw DomainError("element is not in the B parabolic");
    if (!is_fully_commutative(w)) throw DomainError("element is not fully commutative");
    StembridgeForm out;
    GroupElement cur = w;
    int bound = n;
    while (!cur.is_identity()) {
        const int top = max_support(cur);
        if (top > bound) throw InvariantViolation("stembridge peel: support did not shrink");
        GroupElement u = cur;
        for (bool again = true; again;) {
            again = false;
            for (Gen s = 0; s < top; ++s) {
                if (u.is_right_descent(s)) {
                    u = u.right_multiply(s);
                    again = true;
                    break;
                }
            }
        }
        const int len = static_cast<int>(u.length());
        const int l = len <= top + 1 ? top + 1 - len : -(len - top - 1);
        if (-l > top) throw InvariantViolation("stembridge peel: coset representative too long");
        const Word bw = bracket_word(g, l, top);
        auto rest = strip_left(cur, bw);
        if (!rest || !(evaluate(w.graph_ptr(), bw) == u)) {
            throw InvariantViolation("stembridge peel: coset representative is not a bracket");
        }
        out.segments.push_back({l, top});
        cur = *rest;
        bound = top - 1;
    }
    if (out.condition() == 0) throw InvariantViolation("stembridge peel: result violates both conditions");
    return out;
}

// ---- C~ normal forms --------------------------------------------------------

struct FiniteForm {
    StembridgeForm bform;
    friend bool operator==(const FiniteForm&, const FiniteForm&) = default;
};

/// [i,n] u ([-n,n] u)^k ([f,n])^-1, affine length k+1.
struct FirstTypeForm {
    int i = 0;
    int k = 1;
    int f = 0;
    friend bool operator==(const FirstTypeForm&, const FirstTypeForm&) = default;
};

/// [i_1,n] u ... [i_p,n] u ([0,n] u)^k w_r, affine length p+k.
/// w_r is kept as a segment list; when k > 0 every segment is [0,r].
struct SecondTypeForm {
    std::vector<int> i_list;
    int k = 0;
    StembridgeForm w_r;
    friend bool operator==(const SecondTypeForm&, const SecondTypeForm&) = default;
};

/// ([h,n])^-1 [0,r_1] ... [0,r_m]; r empty means v = ([h,n])^-1.
struct ColumnTail {
    int h = 0;
    std::vector<int> r;
    friend bool operator==(const ColumnTail&, const ColumnTail&) = default;
};

/// [i,n] u v. v is a Stembridge form when i > 0 and a ColumnTail otherwise.
struct AffineOneForm {
    int i = 0;
    std::variant<StembridgeForm, ColumnTail> v;
    friend bool operator==(const AffineOneForm&, const AffineOneForm&) = default;
};

using CtildeNormalForm = std::variant<FiniteForm, FirstTypeForm, SecondTypeForm, AffineOneForm>;

/// Which block of the partition W^c = W^c_1 + W^c_2 + W^c(B) a form lies in.
enum class FcClass { B, W1, W2 };

inline FcClass partition_class(const CtildeNormalForm& f) {
    if (std::holds_alternative<FiniteForm>(f)) return FcClass::B;
    if (std::holds_alternative<SecondTypeForm>(f)) return FcClass::W2;
    return FcClass::W1;
}

inline std::string_view partition_name(FcClass c) {
    switch (c) {
        case FcClass::B: return "B";
        case FcClass::W1: return "W1";
        case FcClass::W2: return "W2";
    }
    return "?";
}

inline std::size_t form_affine_length(const CtildeNormalForm& f) {
    return std::visit(
        [](const auto& x) -> std::size_t {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, FiniteForm>) return 0;
            else if constexpr (std::is_same_v<T, FirstTypeForm>) return static_cast<std::size_t>(x.k + 1);
            else if constexpr (std::is_same_v<T, SecondTypeForm>) return x.i_list.size() + static_cast<std::size_t>(x.k);
            else return 1;
        },
        f);
}

namespace detail {

/// h with v = ([h,n])^-1, if any.
inline std::optional<int> match_inverse_bracket(const GroupElement& v, int n) {
    const int len = static_cast<int>(v.length());
    const int h = n + 1 - len;
    if (h < -n) return std::nullopt;
    if (evaluate(v.graph_ptr(), inverse_word(bracket_word(v.graph(), h, n))) == v) return h;
    return std::nullopt;
}

inline Word column_tail_word(const CoxeterGraph& g, const ColumnTail& c) {
    const int n = g.line_top();
    Word w = inverse_word(bracket_word(g, c.h, n));
    for (int r : c.r) {
        const Word b = bracket_word(g, 0, r);
        w.insert(w.end(), b.begin(), b.end());
    }
    return w;
}

inline bool all_columns(const StembridgeForm& f) {
    return std::all_of(f.segments.begin(), f.segments.end(), [](const Segment& s) { return s.l == 0; });
}

/// Parameter checks; returns an empty string when the form is admissible.
inline std::string second_type_problem(const SecondTypeForm& f, int n) {
    const auto p = f.i_list.size();
    if (f.k < 0) return "k must be non-negative";
    if (p + static_cast<std::size_t>(f.k) < 2) return "second type needs affine length >= 2";
    if (p > static_cast<std::size_t>(n + 1)) return "p exceeds n+1";
    if (!valid_stembridge(f.w_r, n)) return "w_r is not a valid segment list";
    if (p > 0) {
        if (f.i_list.front() > n + 1) return "i_1 exceeds n+1";
        for (std::size_t j = 0; j + 2 < p; ++j)
            if (f.i_list[j] <= f.i_list[j + 1]) return "i_list must decrease";
        const int ip = f.i_list.back();
        if (ip == 0 || ip < -n) return "i_p out of range";
        if (p >= 2 && f.i_list[p - 2] <= std::abs(ip)) return "i_{p-1} must exceed |i_p|";
        if (ip < 0) {
            if (f.k != 0 || !f.w_r.empty() || ip == -n) return "negative i_p requires k = 0, w_r = 1, i_p != -n";
        }
        if (f.k == 0 && ip > 0 && !f.w_r.empty() && std::abs(f.w_r.segments.front().l) >= ip) {
            return "w_r must satisfy |l_1| < i_p";
        }
    }
    if (f.k > 0 && !all_columns(f.w_r)) return "w_r must be [0,r_1]...[0,r_u] when k > 0";
    return {};
}

}  // namespace detail

/// Normal form of a fully commutative element of a ctilde graph (or of a b
/// graph, where every element is Finite).
inline CtildeNormalForm classify(const GroupElement& w) {
    const CoxeterGraph& g = w.graph();
    if (g.family() == Family::Atilde) throw InputError("classify needs a ctilde or b graph");
    if (!is_fully_commutative(w)) throw DomainError("element is not fully commutative: " + format_word(g, w.word()));
    if (g.family() == Family::B) return FiniteForm{stembridge_form(w)};

    const int n = g.line_top();
    const Gen a = g.affine_generator();
    const std::size_t big_l = affine_length(w);
    if (big_l == 0) return FiniteForm{stembridge_form(w)};

    // form [i_1,n] u [i_2,n] u ... [i_L,n] u v, each prefix as short as possible
    std::vector<int> is;
    GroupElement cur = w;
    for (std::size_t j = 0; j < big_l; ++j) {
        bool found = false;
        for (int i = n + 1; i >= -n && !found; --i) {
            Word p = bracket_word(g, i, n);
            p.push_back(a);
            if (auto rest = strip_left(cur, p)) {
                cur = std::move(*rest);
                is.push_back(i);
                found = true;
            }
        }
        if (!found) throw InvariantViolation("no [i,n]u left factor in " + format_word(g, w.word()));
    }
    const GroupElement& v = cur;

    if (big_l == 1) {
        const int i = is[0];
        if (i > 0) return AffineOneForm{i, stembridge_form(v)};
        if (auto h = detail::match_inverse_bracket(v, n)) return AffineOneForm{i, ColumnTail{*h, {}}};
        if (i == 0) {
            for (int z = 0; z <= n + 1; ++z) {
                auto rest = strip_left(v, inverse_word(bracket_word(g, z, n)));
                if (!rest || rest->is_identity()) continue;
                const StembridgeForm sf = stembridge_form(*rest);
                if (!detail::all_columns(sf) || sf.segments.front().g >= z) continue;
                ColumnTail tail{z, {}};
                for (const Segment& s : sf.segments) tail.r.push_back(s.g);
                return AffineOneForm{0, tail};
            }
        }
        throw InvariantViolation("affine length one element without normal form: " + format_word(g, w.word()));
    }

    if (is[1] == -n) {
        for (std::size_t j = 2; j < is.size(); ++j)
            if (is[j] != -n) throw InvariantViolation("first type with i_j != -n");
        auto f = detail::match_inverse_bracket(v, n);
        if (!f) throw InvariantViolation("first type tail is not an inverse bracket");
        return FirstTypeForm{is[0], static_cast<int>(big_l) - 1, *f};
    }

    SecondTypeForm out;
    std::size_t p = 0;
    while (p < is.size() && is[p] != 0) ++p;
    for (std::size_t j = p; j < is.size(); ++j)
        if (is[j] != 0) throw InvariantViolation("second type with nonzero i after a zero");
    out.i_list.assign(is.begin(), is.begin() + static_cast<std::ptrdiff_t>(p));
    out.k = static_cast<int>(big_l - p);
    out.w_r = stembridge_form(v);
    if (auto problem = detail::second_type_problem(out, n); !problem.empty()) {
        throw InvariantViolation("second type check failed (" + problem + ") for " + format_word(g, w.word()));
    }
    return out;
}

/// Expands a normal form into its word, without checks.
inline Word normal_form_word(const CoxeterGraph& g, const CtildeNormalForm& form) {
    return std::visit(
        [&](const auto& x) -> Word {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, FiniteForm>) {
                return stembridge_word(g, x.bform);
            } else {
                const int n = g.line_top();
                const Gen a = g.affine_generator();
                auto block = [&](int i) {
                    Word b = bracket_word(g, i, n);
                    b.push_back(a);
                    return b;
                };
                Word w;
                if constexpr (std::is_same_v<T, FirstTypeForm>) {
                    w = block(x.i);
                    for (int j = 0; j < x.k; ++j) w = concat(std::move(w), block(-n));
                    w = concat(std::move(w), inverse_word(bracket_word(g, x.f, n)));
                } else if constexpr (std::is_same_v<T, SecondTypeForm>) {
                    for (int i : x.i_list) w = concat(std::move(w), block(i));
                    for (int j = 0; j < x.k; ++j) w = concat(std::move(w), block(0));
                    w = concat(std::move(w), stembridge_word(g, x.w_r));
                } else {
                    w = block(x.i);
                    if (const auto* sf = std::get_if<StembridgeForm>(&x.v)) w = concat(std::move(w), stembridge_word(g, *sf));
                    else w = concat(std::move(w), detail::column_tail_word(g, std::get<ColumnTail>(x.v)));
                }
                return w;
            }
        },
        form);
}

/// Word of a normal form after checking its parameters, reducedness, full
/// commutativity and canonicity (classify of the result gives back `form`).
inline Word realize(const GraphPtr& graph, const CtildeNormalForm& form) {
    const CoxeterGraph& g = *graph;
    if (g.family() == Family::Atilde) throw InputError("realize needs a ctilde or b graph");
    const int n = g.line_top();
    auto in_range = [n](int x) { return x >= -n && x <= n + 1; };
    std::string problem;
    std::visit(
        [&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, FiniteForm>) {
                if (!valid_stembridge(x.bform, n)) problem = "invalid segment list";
            } else {
                if (g.family() != Family::Ctilde) {
                    problem = "affine forms need a ctilde graph";
                } else if constexpr (std::is_same_v<T, FirstTypeForm>) {
                    if (!in_range(x.i) || !in_range(x.f)) problem = "i and f must lie in [-n, n+1]";
                    else if (x.k < 1) problem = "first type needs k >= 1";
                } else if constexpr (std::is_same_v<T, SecondTypeForm>) {
                    problem = detail::second_type_problem(x, n);
                } else {
                    if (!in_range(x.i)) {
                        problem = "i must lie in [-n, n+1]";
                    } else if (x.i > 0) {
                        const auto* sf = std::get_if<StembridgeForm>(&x.v);
                        if (!sf || !valid_stembridge(*sf, n)) problem = "v must be a valid segment list when i > 0";
                    } else {
                        const auto* c = std::get_if<ColumnTail>(&x.v);
                        if (!c || !in_range(c->h)) {
                            problem = "v must be ([h,n])^-1... with h in [-n, n+1] when i <= 0";
                        } else if (!c->r.empty()) {
                            if (x.i != 0) problem = "column factors only allowed when i = 0";
                            else if (c->h < 0 || c->r.front() >= c->h || c->r.back() < 0) problem = "need 0 <= r_m < ... < r_1 < z";
                            for (std::size_t j = 0; j + 1 < c->r.size(); ++j)
                                if (c->r[j] <= c->r[j + 1]) problem = "r list must decrease";
                        }
                    }
                }
            }
        },
        form);
    if (!problem.empty()) throw InputError("invalid normal form: " + problem);

    const Word w = normal_form_word(g, form);
    const GroupElement e = evaluate(graph, w);
    if (e.length() != w.size()) throw InputError("normal form word is not reduced: " + format_word(g, w));
    if (!heap_is_fc(g, w)) throw InputError("normal form word is not fully commutative: " + format_word(g, w));
    if (!(classify(e) == form)) throw InputError("parameters are not the canonical normal form of " + format_word(g, w));
    return w;
}

// ---- enumeration ------------------------------------------------------------

inline constexpr std::size_t unbounded = std::numeric_limits<std::size_t>::max();

/// Fully commutative elements with l <= max_length (and, for ctilde, affine
/// length <= max_affine), ordered by (length, canonical word).
///
/// Breadth-first over FC elements only: a left factor of an FC element is FC.
inline std::vector<GroupElement> enumerate_fc_elements(const GraphPtr& graph, std::size_t max_length,
                                                       std::optional<std::size_t> max_affine = std::nullopt,
                                                       std::size_t cap = default_element_cap()) {
    const bool track_affine = max_affine && graph->family() == Family::Ctilde;
    const Gen a = track_affine ? graph->affine_generator() : -1;
    std::vector<GroupElement> out{GroupElement(graph)};
    std::vector<GroupElement> level = out;
    for (std::size_t len = 1; len <= max_length && !level.empty(); ++len) {
        std::unordered_set<GroupElement, GroupElementHash> seen;
        std::vector<GroupElement> next;
        for (const GroupElement& w : level) {
            const std::size_t lw = track_affine ? affine_length(w) : 0;
            for (Gen s = 0; s < graph->rank(); ++s) {
                if (w.is_left_descent(s)) continue;
                if (track_affine && s == a && lw + 1 > *max_affine) continue;
                GroupElement sw = w.left_multiply(s);
                if (seen.count(sw) || !is_fully_commutative(sw)) continue;
                seen.insert(sw);
                next.push_back(std::move(sw));
                if (out.size() + next.size() > cap) {
                    throw ResourceError("FC enumeration exceeded element cap of " + std::to_string(cap));
                }
            }
        }
        std::sort(next.begin(), next.end());
        out.insert(out.end(), next.begin(), next.end());
        level = std::move(next);
    }
    return out;
}

struct ClassifiedElement {
    GroupElement element;
    CtildeNormalForm form;
};

inline std::vector<ClassifiedElement> enumerate_fc(const GraphPtr& graph, std::size_t max_length,
                                                   std::optional<std::size_t> max_affine = std::nullopt,
                                                   std::size_t cap = default_element_cap()) {
    if (graph->family() == Family::Atilde) throw InputError("enumerate_fc needs a ctilde or b graph");
    std::vector<ClassifiedElement> out;
    for (GroupElement& w : enumerate_fc_elements(graph, max_length, max_affine, cap)) {
        CtildeNormalForm f = classify(w);
        out.push_back({std::move(w), std::move(f)});
    }
    return out;
}

// ---- cyclic full commutativity ---------------------------------------------

/// True iff every cyclic rotation of the reduced FC word `w` is again a
/// reduced word of an FC element.
inline bool is_cyclically_fc(const GraphPtr& graph, const Word& w) {
    graph->check_word(w);
    if (!is_reduced(graph, w)) throw InputError("word is not reduced");
    if (!heap_is_fc(*graph, w)) throw InputError("word is not fully commutative");
    for (std::size_t r = 1; r < w.size(); ++r) {
        Word rot(w.begin() + static_cast<std::ptrdiff_t>(r), w.end());
        rot.insert(rot.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(r));
        if (!is_reduced(graph, rot) || !heap_is_fc(*graph, rot)) return false;
    }
    return true;
}

}  // namespace ctilde
