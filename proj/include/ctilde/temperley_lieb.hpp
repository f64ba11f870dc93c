#pragma once

#include <algorithm>
#include <unordered_map>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "errors.hpp"
#include "fullcomm.hpp"

namespace ctilde {

struct TLTag {};
/// Element of the Temperley-Lieb quotient in the basis T_w, w fully commutative.
using TLElement = AlgebraElement<TLTag>;

inline TLElement tl_basis(const GroupElement& w) {
    if (!is_fully_commutative(w)) throw InputError("T_w needs a fully commutative w");
    return TLElement::basis(w);
}

inline TLElement tl_generator(const GraphPtr& g, Gen s) { return TLElement::basis(evaluate(g, {s})); }

namespace detail {

inline TLElement tl_left_word(const Word& word, const TLElement& x);
inline TLElement tl_left_generator(Gen s, const TLElement& x);

/// T_s T_w on a single basis element.
///
///   s in L(w):          (q-1) T_w + q T_sw
///   sw fully commutative: T_sw
///   otherwise w = t s w' (m(s,t) = 3) or w = t s t w' (m(s,t) = 4) and the
///   braid T_s T_t T_s (resp. T_s T_t T_s T_t) is rewritten with V = 0
///   (resp. Z = 0) before acting on the shorter T_w'.
inline TLElement tl_generator_on_basis(Gen s, const GroupElement& w) {
    const GraphPtr& g = w.graph_ptr();
    TLElement r(g);
    if (w.is_left_descent(s)) {
        r.add(w, LaurentPoly::q() - 1);
        r.add(w.left_multiply(s), LaurentPoly::q());
        return r;
    }
    GroupElement sw = w.left_multiply(s);
    if (is_fully_commutative(sw)) {
        r.add(sw, 1);
        return r;
    }
    for (Gen t = 0; t < g->rank(); ++t) {
        const int m = g->order(s, t);
        if (m < 3 || !w.is_left_descent(t)) continue;
        const GroupElement tw = w.left_multiply(t);
        if (!tw.is_left_descent(s)) continue;
        const GroupElement stw = tw.left_multiply(s);
        std::vector<Word> rhs;
        GroupElement rest = stw;
        if (m == 3) {
            rhs = {{s, t}, {t, s}, {s}, {t}, {}};
        } else {
            if (!stw.is_left_descent(t)) continue;
            rest = stw.left_multiply(t);
            rhs = {{s, t, s}, {t, s, t}, {s, t}, {t, s}, {s}, {t}, {}};
        }
        const TLElement base = TLElement::basis(rest);
        for (const Word& word : rhs) r -= tl_left_word(word, base);
        return r;
    }
    // braid hidden behind a left descent x commuting with s: T_s T_w = T_x (T_s T_xw)
    for (Gen x = 0; x < g->rank(); ++x) {
        if (x == s || !g->commute(x, s) || !w.is_left_descent(x)) continue;
        return tl_left_generator(x, tl_generator_on_basis(s, w.left_multiply(x)));
    }
    throw InvariantViolation("no braid prefix found for T_" + std::to_string(s) + " T_w, w = " +
                             format_word(*g, w.word()));
}

inline TLElement tl_left_generator(Gen s, const TLElement& x) {
    TLElement r(x.graph_ptr());
    for (const auto& [w, c] : x.terms()) r += tl_generator_on_basis(s, w).scaled(c);
    return r;
}

/// T_{a_1} T_{a_2} ... T_{a_k} x.
inline TLElement tl_left_word(const Word& word, const TLElement& x) {
    TLElement y = x;
    for (auto it = word.rbegin(); it != word.rend(); ++it) y = tl_left_generator(*it, y);
    return y;
}

}  // namespace detail

inline TLElement tl_multiply(const TLElement& a, const TLElement& b) {
    require_same_graph(a.graph(), b.graph());
    TLElement out(a.graph_ptr());
    for (const auto& [u, c] : a.terms()) out += detail::tl_left_word(u.word(), b).scaled(c);
    return out;
}

/// T_s^-1 = p T_s + (p - 1), p = 1/q.
inline TLElement tl_generator_inverse(const GraphPtr& g, Gen s) {
    const LaurentPoly p = LaurentPoly::p();
    TLElement r = tl_generator(g, s).scaled(p);
    r.add(GroupElement(g), p - 1);
    return r;
}

/// Image of h_s under R: T_s on the B line, T_{sigma_n} T_{t_{n+1}} T_{sigma_n}^-1
/// for the affine end.
inline TLElement r_generator_tl(const GraphPtr& target, Gen s) {
    const int m = target->rank() - 1;
    if (s < m - 1) return tl_generator(target, s);
    return tl_multiply(tl_multiply(tl_generator(target, m - 1), tl_generator(target, m)),
                       tl_generator_inverse(target, m - 1));
}

/// The tower morphism R on a TL element of a ctilde graph of rank m.
inline TLElement r_embed_tl(const TLElement& x) {
    if (x.graph().family() != Family::Ctilde) throw InputError("r_embed_tl needs a ctilde graph");
    const int m = x.graph().rank();
    const GraphPtr target = CoxeterGraph::make(Family::Ctilde, m + 1);
    std::vector<TLElement> gens;
    for (Gen s = 0; s < m; ++s) gens.push_back(r_generator_tl(target, s));
    TLElement out(target);
    for (const auto& [w, c] : x.terms()) {
        TLElement y = TLElement::one(target);
        const Word& word = w.word();
        for (auto it = word.rbegin(); it != word.rend(); ++it) y = tl_multiply(gens[static_cast<std::size_t>(*it)], y);
        out += y.scaled(c);
    }
    return out;
}

struct LeadingTerms {
    std::size_t max_affine = 0;
    std::vector<std::pair<GroupElement, LaurentPoly>> terms;
};

/// Terms of maximal affine length, by Coxeter length descending (ties by word).
inline LeadingTerms leading_terms(const TLElement& x) {
    if (x.is_zero()) throw InputError("leading_terms of the zero element");
    LeadingTerms out;
    for (const auto& [w, c] : x.terms()) out.max_affine = std::max(out.max_affine, affine_length(w));
    for (const auto& [w, c] : x.terms())
        if (affine_length(w) == out.max_affine) out.terms.emplace_back(w, c);
    std::stable_sort(out.terms.begin(), out.terms.end(), [](const auto& a, const auto& b) {
        if (a.first.length() != b.first.length()) return a.first.length() > b.first.length();
        return a.first.word() < b.first.word();
    });
    return out;
}

/// V(x,y) = xyx + xy + yx + x + y + 1.
template <class Elem, class Mul>
Elem braid_relator_v(const Elem& x, const Elem& y, Mul mul) {
    const Elem one = Elem::one(x.graph_ptr());
    const Elem xy = mul(x, y);
    return mul(xy, x) + xy + mul(y, x) + x + y + one;
}

/// Z(x,y) = xyxy + xyx + yxy + xy + yx + x + y + 1.
template <class Elem, class Mul>
Elem braid_relator_z(const Elem& x, const Elem& y, Mul mul) {
    const Elem one = Elem::one(x.graph_ptr());
    const Elem xy = mul(x, y);
    const Elem yx = mul(y, x);
    return mul(xy, xy) + mul(xy, x) + mul(yx, y) + xy + yx + x + y + one;
}

}  // namespace ctilde
