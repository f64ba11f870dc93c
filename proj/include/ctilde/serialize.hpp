#pragma once

// JSON encodings of normal forms and algebra elements.

#include <json.hpp>

#include <string>
#include <variant>
#include <vector>

#include "algebra.hpp"
#include "errors.hpp"
#include "fullcomm.hpp"

namespace ctilde {

using Json = nlohmann::json;

// ---- normal forms -----------------------------------------------------------

inline Json segments_to_json(const StembridgeForm& f) {
    Json a = Json::array();
    for (const Segment& s : f.segments) a.push_back(Json::array({s.l, s.g}));
    return a;
}

inline StembridgeForm segments_from_json(const Json& j) {
    if (!j.is_array()) throw InputError("segment list must be an array of [l,g] pairs");
    StembridgeForm f;
    for (const Json& s : j) {
        if (!s.is_array() || s.size() != 2 || !s[0].is_number_integer() || !s[1].is_number_integer())
            throw InputError("segment must be an [l,g] pair of integers");
        f.segments.push_back({s[0].get<int>(), s[1].get<int>()});
    }
    return f;
}

inline Json to_json(const CtildeNormalForm& form) {
    return std::visit(
        [](const auto& x) -> Json {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, FiniteForm>) {
                return {{"class", "finite"}, {"bform", segments_to_json(x.bform)}};
            } else if constexpr (std::is_same_v<T, FirstTypeForm>) {
                return {{"class", "first"}, {"i", x.i}, {"k", x.k}, {"f", x.f}};
            } else if constexpr (std::is_same_v<T, SecondTypeForm>) {
                return {{"class", "second"}, {"i_list", x.i_list}, {"k", x.k}, {"w_r", segments_to_json(x.w_r)}};
            } else {
                Json v;
                if (const auto* sf = std::get_if<StembridgeForm>(&x.v)) {
                    v = segments_to_json(*sf);
                } else {
                    const auto& c = std::get<ColumnTail>(x.v);
                    v = {{"h", c.h}, {"r", c.r}};
                }
                return {{"class", "affine1"}, {"i", x.i}, {"v", v}};
            }
        },
        form);
}

namespace detail {

inline int int_field(const Json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_number_integer())
        throw InputError(std::string("normal form needs an integer field \"") + key + "\"");
    return j.at(key).get<int>();
}

inline std::vector<int> int_list(const Json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_array()) throw InputError(std::string("normal form needs a list \"") + key + "\"");
    std::vector<int> out;
    for (const Json& x : j.at(key)) {
        if (!x.is_number_integer()) throw InputError(std::string("\"") + key + "\" must hold integers");
        out.push_back(x.get<int>());
    }
    return out;
}

}  // namespace detail

inline CtildeNormalForm form_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("class") || !j.at("class").is_string())
        throw InputError("normal form must be an object with a \"class\" string");
    const std::string cls = j.at("class").get<std::string>();
    if (cls == "finite") {
        if (!j.contains("bform")) throw InputError("finite form needs \"bform\"");
        return FiniteForm{segments_from_json(j.at("bform"))};
    }
    if (cls == "first") return FirstTypeForm{detail::int_field(j, "i"), detail::int_field(j, "k"), detail::int_field(j, "f")};
    if (cls == "second") {
        if (!j.contains("w_r")) throw InputError("second type form needs \"w_r\"");
        return SecondTypeForm{detail::int_list(j, "i_list"), detail::int_field(j, "k"), segments_from_json(j.at("w_r"))};
    }
    if (cls == "affine1") {
        AffineOneForm f;
        f.i = detail::int_field(j, "i");
        if (!j.contains("v")) throw InputError("affine1 form needs \"v\"");
        const Json& v = j.at("v");
        if (v.is_object()) f.v = ColumnTail{detail::int_field(v, "h"), detail::int_list(v, "r")};
        else f.v = segments_from_json(v);
        return f;
    }
    throw InputError("unknown normal form class \"" + cls + "\"");
}

// ---- Laurent polynomials and algebra elements --------------------------------

/// Integers that fit a long are emitted as JSON numbers, larger ones as strings.
inline Json big_to_json(const mpz_class& z) {
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
}

inline Json to_json(const LaurentPoly& p) {
    Json a = Json::array();
    for (const auto& [e, c] : p.terms()) a.push_back(Json::array({e, big_to_json(c.get_num()), big_to_json(c.get_den())}));
    return a;
}

inline LaurentPoly laurent_from_json(const Json& j) {
    if (!j.is_array()) throw InputError("coefficient must be an array of [exp, num, den]");
    LaurentPoly p;
    for (const Json& t : j) {
        if (!t.is_array() || t.size() != 3 || !t[0].is_number_integer())
            throw InputError("coefficient term must be [exp, num, den]");
        auto big = [](const Json& x) {
            if (x.is_number_integer()) return std::to_string(x.get<long long>());
            if (x.is_string()) return x.get<std::string>();
            throw InputError("numerator and denominator must be integers or integer strings");
        };
        mpz_class num, den;
        if (num.set_str(big(t[1]), 10) != 0 || den.set_str(big(t[2]), 10) != 0) throw InputError("malformed integer in coefficient");
        if (den == 0) throw InputError("zero denominator in coefficient");
        Rational c(num, den);
        c.canonicalize();
        p += LaurentPoly::monomial(t[0].get<int>(), c);
    }
    return p;
}

/// Terms in (length, canonical word) order; `annotate_affine` adds the affine
/// length of each key (ctilde graphs only).
template <class Tag>
Json to_json(const AlgebraElement<Tag>& x, bool annotate_affine = false) {
    Json a = Json::array();
    for (const auto& [w, c] : x.terms()) {
        Json t = {{"word", format_word(x.graph(), w.word())}, {"coeff", to_json(c)}};
        if (annotate_affine) t["affine_length"] = affine_length(w);
        a.push_back(std::move(t));
    }
    return a;
}

template <class Tag>
AlgebraElement<Tag> element_from_json(const GraphPtr& g, const Json& j) {
    if (!j.is_array()) throw InputError("algebra element must be a JSON array of terms");
    AlgebraElement<Tag> x(g);
    for (const Json& t : j) {
        if (!t.is_object() || !t.contains("word") || !t.at("word").is_string() || !t.contains("coeff"))
            throw InputError("term must be an object with \"word\" and \"coeff\"");
        x.add(evaluate(g, parse_word(*g, t.at("word").get<std::string>())), laurent_from_json(t.at("coeff")));
    }
    return x;
}

}  // namespace ctilde
