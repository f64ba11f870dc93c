#pragma once

#include <utility>
#include <vector>

#include "coxeter.hpp"
#include "fullcomm.hpp"

namespace ctilde {

/// Image word of each generator; applying it to a word substitutes letters.
using GeneratorMap = std::vector<Word>;

inline Word substitute(const GeneratorMap& images, const Word& w) {
    Word out;
    for (Gen s : w) {
        const Word& img = images.at(static_cast<std::size_t>(s));
        out.insert(out.end(), img.begin(), img.end());
    }
    return out;
}

inline GroupElement apply_map(const GraphPtr& target, const GeneratorMap& images, const GroupElement& w) {
    return evaluate(target, substitute(images, w.word()));
}

namespace detail {

inline void require_family(const CoxeterGraph& g, Family f, const char* what) {
    if (g.family() != f) throw InputError(std::string(what) + ": wrong graph family");
}

}  // namespace detail

// ---- P : W(C~, rank m) -> W(C~, rank m+1) -----------------------------------
//   sigma_i -> sigma_i (0 <= i <= m-2), affine end t_n -> sigma_n t_{n+1} sigma_n.

inline GeneratorMap p_map(int m) {
    GeneratorMap images;
    for (int i = 0; i < m - 1; ++i) images.push_back({i});
    images.push_back({m - 1, m, m - 1});
    return images;
}

inline GroupElement p_embed(const GroupElement& w) {
    detail::require_family(w.graph(), Family::Ctilde, "p_embed");
    const int m = w.graph().rank();
    return apply_map(CoxeterGraph::make(Family::Ctilde, m + 1), p_map(m), w);
}

// ---- i_n : W(C~, rank n+1) -> W(A~, rank 2n) ---------------------------------
//   sigma_i -> s_{n-i} s_{n+i}, t -> s_n, t_n -> a_{2n} (index 0).

inline GeneratorMap a_map(int n) {
    GeneratorMap images;
    images.push_back({n});
    for (int i = 1; i < n; ++i) images.push_back({n - i, n + i});
    images.push_back({0});
    return images;
}

inline GroupElement a_embed(const GroupElement& w) {
    detail::require_family(w.graph(), Family::Ctilde, "a_embed");
    const int n = w.graph().rank() - 1;
    return apply_map(CoxeterGraph::make(Family::Atilde, 2 * n), a_map(n), w);
}

// ---- A~ tower step, rotation and their composite ----------------------------

/// W(A~, rank k) -> W(A~, rank k+1): a_k -> s_k a_{k+1} s_k, s_i -> s_i.
inline GeneratorMap atilde_step_map(int k) {
    GeneratorMap images;
    images.push_back({k, 0, k});
    for (int i = 1; i < k; ++i) images.push_back({i});
    return images;
}

/// Rotation of the cycle of rank k: s_1 -> s_2 -> ... -> a_k -> s_1.
inline GeneratorMap rotation_map(int k) {
    GeneratorMap images;
    for (int i = 0; i < k; ++i) images.push_back({(i + 1) % k});
    return images;
}

inline GroupElement atilde_step(const GroupElement& w) {
    detail::require_family(w.graph(), Family::Atilde, "atilde_step");
    const int k = w.graph().rank();
    return apply_map(CoxeterGraph::make(Family::Atilde, k + 1), atilde_step_map(k), w);
}

inline GroupElement rotate(const GroupElement& w) {
    detail::require_family(w.graph(), Family::Atilde, "rotate");
    return apply_map(w.graph_ptr(), rotation_map(w.graph().rank()), w);
}

/// Two tower steps followed by the rotation: rank 2n -> rank 2n+2.
inline GroupElement l_compose(const GroupElement& w) {
    detail::require_family(w.graph(), Family::Atilde, "l_compose");
    if (w.graph().rank() % 2 != 0) throw InputError("l_compose needs an even rank");
    return rotate(atilde_step(atilde_step(w)));
}

/// The square  a_embed o p_embed = l_compose o a_embed  on w (source rank n+1).
inline bool check_diagram(const GroupElement& w) {
    return l_compose(a_embed(w)) == a_embed(p_embed(w));
}

// ---- injections I and J on fully commutative elements -----------------------

enum class Injection { I, J };

struct Injected {
    GroupElement element;
    CtildeNormalForm form;
};

namespace detail {

/// Normal form of the image predicted by tracking the substitution through
/// the brackets (target line top n' = source rank - 1).
inline CtildeNormalForm predicted_image(const CtildeNormalForm& form, Injection which, int target_n) {
    return std::visit(
        [&](const auto& x) -> CtildeNormalForm {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, FiniteForm> || std::is_same_v<T, FirstTypeForm>) {
                return x;
            } else if constexpr (std::is_same_v<T, AffineOneForm>) {
                if (const auto* sf = std::get_if<StembridgeForm>(&x.v)) {
                    StembridgeForm v;
                    v.segments.push_back({target_n, target_n});
                    v.segments.insert(v.segments.end(), sf->segments.begin(), sf->segments.end());
                    return AffineOneForm{x.i, v};
                }
                return x;
            } else {
                if (which == Injection::I) return x;
                // J: the leading affine letter moves to the front, the last bracket joins w_r
                SecondTypeForm y;
                y.i_list.push_back(target_n + 1);
                int last;
                if (x.k > 0) {
                    y.i_list.insert(y.i_list.end(), x.i_list.begin(), x.i_list.end());
                    y.k = x.k - 1;
                    last = 0;
                } else {
                    y.i_list.insert(y.i_list.end(), x.i_list.begin(), x.i_list.end() - 1);
                    y.k = 0;
                    last = x.i_list.back();
                }
                y.w_r.segments.push_back({last, target_n});
                y.w_r.segments.insert(y.w_r.segments.end(), x.w_r.segments.begin(), x.w_r.segments.end());
                return y;
            }
        },
        form);
}

}  // namespace detail

/// I(w) or J(w) for a fully commutative w with normal form `form`.
///
/// Substitutes into the normal-form word (sigma_n t_{n+1} sigma_n on W^c_1,
/// sigma_n t_{n+1} for I and t_{n+1} sigma_n for J on W^c_2, nothing on
/// W^c(B)), then classifies the image and checks it against the form
/// predicted bracket by bracket.
inline Injected inject(const GroupElement& w, const CtildeNormalForm& form, Injection which) {
    detail::require_family(w.graph(), Family::Ctilde, "inject");
    if (!(classify(w) == form)) throw InputError("normal form does not match the element");
    const int m = w.graph().rank();
    const GraphPtr target = CoxeterGraph::make(Family::Ctilde, m + 1);
    GeneratorMap images;
    for (int i = 0; i < m - 1; ++i) images.push_back({i});
    switch (partition_class(form)) {
        case FcClass::B: images.push_back({m - 1}); break;
        case FcClass::W1: images.push_back({m - 1, m, m - 1}); break;
        case FcClass::W2:
            images.push_back(which == Injection::I ? Word{m - 1, m} : Word{m, m - 1});
            break;
    }
    const Word word = substitute(images, normal_form_word(w.graph(), form));
    GroupElement image = evaluate(target, word);
    if (image.length() != word.size()) {
        throw InvariantViolation("injected word is not reduced: " + format_word(*target, word));
    }
    if (!is_fully_commutative(image)) {
        throw InvariantViolation("injected element is not fully commutative: " + format_word(*target, word));
    }
    CtildeNormalForm got = classify(image);
    if (!(got == detail::predicted_image(form, which, m - 1))) {
        throw InvariantViolation("injected element has an unexpected normal form: " + format_word(*target, word));
    }
    return {std::move(image), std::move(got)};
}

inline Injected inject_I(const GroupElement& w, const CtildeNormalForm& form) { return inject(w, form, Injection::I); }
inline Injected inject_J(const GroupElement& w, const CtildeNormalForm& form) { return inject(w, form, Injection::J); }

}  // namespace ctilde
