#pragma once

#include <map>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "errors.hpp"
#include "towers.hpp"

namespace ctilde {

struct HeckeTag {};
using HeckeElement = AlgebraElement<HeckeTag>;

inline HeckeElement hecke_basis(const GroupElement& w) { return HeckeElement::basis(w); }

inline HeckeElement hecke_generator(const GraphPtr& g, Gen s) { return hecke_basis(evaluate(g, {s})); }

/// g_s * x, by the rules g_s g_w = g_sw (s not a left descent of w) and
/// g_s g_w = q g_sw + (q-1) g_w (s a left descent).
inline HeckeElement hecke_left_generator(Gen s, const HeckeElement& x) {
    HeckeElement r(x.graph_ptr());
    const LaurentPoly q = LaurentPoly::q();
    const LaurentPoly qm1 = q - 1;
    for (const auto& [w, c] : x.terms()) {
        if (w.is_left_descent(s)) {
            r.add(w.left_multiply(s), c * q);
            r.add(w, c * qm1);
        } else {
            r.add(w.left_multiply(s), c);
        }
    }
    return r;
}

inline HeckeElement hecke_multiply(const HeckeElement& a, const HeckeElement& b) {
    require_same_graph(a.graph(), b.graph());
    HeckeElement out(a.graph_ptr());
    for (const auto& [u, c] : a.terms()) {
        HeckeElement y = b;
        const Word& word = u.word();
        for (auto it = word.rbegin(); it != word.rend(); ++it) y = hecke_left_generator(*it, y);
        out += y.scaled(c);
    }
    return out;
}

/// g_s^-1 = (1/q) g_s + (1-q)/q.
inline HeckeElement hecke_generator_inverse(const GraphPtr& g, Gen s) {
    const LaurentPoly p = LaurentPoly::p();
    HeckeElement r = hecke_generator(g, s).scaled(p);
    r.add(GroupElement(g), p - 1);
    return r;
}

/// Image of the generator e_s under R: g_s for s on the B line, and
/// g_{sigma_n} g_{t_{n+1}} g_{sigma_n}^-1 for the affine end.
inline HeckeElement r_generator_hecke(const GraphPtr& target, Gen s) {
    const int m = target->rank() - 1;  // source rank
    if (s < m - 1) return hecke_generator(target, s);
    return hecke_multiply(hecke_multiply(hecke_generator(target, m - 1), hecke_generator(target, m)),
                          hecke_generator_inverse(target, m - 1));
}

/// The tower morphism R on a Hecke element of a ctilde graph of rank m.
inline HeckeElement r_embed_hecke(const HeckeElement& x) {
    if (x.graph().family() != Family::Ctilde) throw InputError("r_embed_hecke needs a ctilde graph");
    const int m = x.graph().rank();
    const GraphPtr target = CoxeterGraph::make(Family::Ctilde, m + 1);
    std::vector<HeckeElement> gens;
    for (Gen s = 0; s < m; ++s) gens.push_back(r_generator_hecke(target, s));
    HeckeElement out(target);
    for (const auto& [w, c] : x.terms()) {
        HeckeElement y = HeckeElement::one(target);
        const Word& word = w.word();
        for (auto it = word.rbegin(); it != word.rend(); ++it) y = hecke_multiply(gens[static_cast<std::size_t>(*it)], y);
        out += y.scaled(c);
    }
    return out;
}

/// Formal Q-combination of group elements (an element of the group algebra).
using GroupAlgebraElement = std::map<GroupElement, Rational>;

template <class Tag>
GroupAlgebraElement specialize_q1(const AlgebraElement<Tag>& x) {
    GroupAlgebraElement out;
    for (const auto& [w, c] : x.terms()) {
        Rational v = c.at_one();
        if (v != 0) out.emplace(w, v);
    }
    return out;
}

inline GroupAlgebraElement group_algebra_multiply(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    GroupAlgebraElement out;
    for (const auto& [u, cu] : a) {
        for (const auto& [v, cv] : b) {
            auto [it, inserted] = out.emplace(u * v, cu * cv);
            if (!inserted) {
                it->second += cu * cv;
                if (it->second == 0) out.erase(it);
            }
        }
    }
    return out;
}

struct LemmaDecomposition {
    int a_exp = 0;
    HeckeElement residual;
};

/// R(e_w) = q^a g_{P(w)} + residual, with every residual coefficient
/// vanishing at q = 1. Throws LemmaViolation if either part fails.
inline LemmaDecomposition lemma_decompose(const GroupElement& w) {
    const HeckeElement image = r_embed_hecke(hecke_basis(w));
    const GroupElement pw = p_embed(w);
    const LaurentPoly lead = image.coefficient(pw);
    const auto a = lead.pure_power();
    if (!a) {
        throw LemmaViolation("coefficient of g_P(w) is " + lead.to_string() + " for w = " +
                             format_word(w.graph(), w.word()));
    }
    HeckeElement residual = image;
    residual.add(pw, -lead);
    for (const auto& [x, c] : residual.terms()) {
        if (c.at_one() != 0) {
            throw LemmaViolation("residual coefficient " + c.to_string() + " does not vanish at q=1 for w = " +
                                 format_word(w.graph(), w.word()));
        }
    }
    return {*a, std::move(residual)};
}

}  // namespace ctilde
