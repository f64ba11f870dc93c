#include <gtest/gtest.h>

#include "ctilde/hecke.hpp"
#include "ctilde/serialize.hpp"
#include "ctilde/temperley_lieb.hpp"

using namespace ctilde;

namespace {

GraphPtr ct(int rank) { return CoxeterGraph::make(Family::Ctilde, rank); }

}  // namespace

TEST(FormJson, AffineOneExample) {
    const auto g = ct(3);
    const Json j = to_json(classify(evaluate(g, parse_word(*g, "s1 u s1"))));
    EXPECT_EQ(j, Json::parse(R"({"class":"affine1","i":1,"v":[[1,1]]})"));
}

TEST(FormJson, ShapesOfEveryClass) {
    EXPECT_EQ(to_json(FirstTypeForm{2, 1, -1}), Json::parse(R"({"class":"first","i":2,"k":1,"f":-1})"));
    EXPECT_EQ(to_json(SecondTypeForm{{2}, 1, {{{0, 0}}}}),
              Json::parse(R"({"class":"second","i_list":[2],"k":1,"w_r":[[0,0]]})"));
    EXPECT_EQ(to_json(AffineOneForm{-1, ColumnTail{0, {}}}), Json::parse(R"({"class":"affine1","i":-1,"v":{"h":0,"r":[]}})"));
    EXPECT_EQ(to_json(FiniteForm{}), Json::parse(R"({"class":"finite","bform":[]})"));
}

TEST(FormJson, RoundTripOverEnumeration) {
    for (int rank : {3, 4}) {
        for (const auto& [w, form] : enumerate_fc(ct(rank), 9)) {
            const Json j = to_json(form);
            ASSERT_EQ(form_from_json(Json::parse(j.dump())), form) << j.dump();
        }
    }
}

TEST(FormJson, Errors) {
    EXPECT_THROW(form_from_json(Json::parse("[]")), InputError);
    EXPECT_THROW(form_from_json(Json::parse(R"({"class":"third"})")), InputError);
    EXPECT_THROW(form_from_json(Json::parse(R"({"class":"first","i":1})")), InputError);
    EXPECT_THROW(form_from_json(Json::parse(R"({"class":"second","i_list":[1],"k":1,"w_r":[[1]]})")), InputError);
}

TEST(ElementJson, HeckeRoundTripIsBitExact) {
    const auto g = ct(3);
    const auto x = r_embed_hecke(hecke_basis(evaluate(g, {2, 1, 2, 0})));
    const std::string text = to_json(x).dump();
    const auto y = element_from_json<HeckeTag>(x.graph_ptr(), Json::parse(text));
    EXPECT_EQ(y, x);
    EXPECT_EQ(to_json(y).dump(), text);
}

TEST(ElementJson, CoefficientEncoding) {
    const auto g = ct(3);
    const auto x = hecke_generator_inverse(g, 0).scaled(Rational(3, 7));
    const Json j = to_json(x);
    EXPECT_EQ(j[0]["word"], "");
    EXPECT_EQ(j[0]["coeff"], Json::parse("[[-1,3,7],[0,-3,7]]"));
    EXPECT_EQ(j[1]["word"], "t");
}

TEST(ElementJson, TermsSortedByLengthThenWord) {
    const auto g = ct(3);
    HeckeElement x(g);
    for (const char* w : {"t s1 t", "u", "s1", "t", ""}) x.add(evaluate(g, parse_word(*g, w)), 1);
    const Json j = to_json(x);
    std::vector<std::string> words;
    for (const auto& t : j) words.push_back(t["word"]);
    EXPECT_EQ(words, (std::vector<std::string>{"", "t", "s1", "u", "t s1 t"}));
}

TEST(ElementJson, TlAnnotation) {
    const auto g = ct(3);
    const auto x = tl_basis(evaluate(g, parse_word(*g, "u t s1 u")));
    EXPECT_EQ(to_json(x, true)[0]["affine_length"], 2);
}

TEST(ElementJson, BigCoefficientsAndErrors) {
    const auto g = ct(3);
    const Json j = Json::parse(R"([{"word":"t","coeff":[[0,"123456789012345678901234567891",2]]}])");
    const auto x = element_from_json<HeckeTag>(g, j);
    EXPECT_EQ(to_json(x), j);
    EXPECT_THROW(element_from_json<HeckeTag>(g, Json::parse(R"([{"word":"t","coeff":[[0,1,0]]}])")), InputError);
    EXPECT_THROW(element_from_json<HeckeTag>(g, Json::parse(R"([{"word":"x","coeff":[]}])")), InputError);
    EXPECT_THROW(element_from_json<HeckeTag>(g, Json::parse(R"({"word":"t"})")), InputError);
}
