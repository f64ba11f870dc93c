#include <gtest/gtest.h>

#include <cstdlib>
#include <vector>

#include "ctilde/coxeter.hpp"
#include "ctilde/fullcomm.hpp"

using namespace ctilde;

namespace {

GraphPtr ct(int rank) { return CoxeterGraph::make(Family::Ctilde, rank); }

std::vector<std::size_t> per_length(const std::vector<GroupElement>& elems, std::size_t max_len) {
    std::vector<std::size_t> out(max_len + 1, 0);
    for (const auto& w : elems) ++out[w.length()];
    return out;
}

}  // namespace

TEST(Graph, CtildeEdgeLabels) {
    const auto g = ct(4);
    EXPECT_EQ(g->order(0, 1), 4);
    EXPECT_EQ(g->order(1, 2), 3);
    EXPECT_EQ(g->order(2, 3), 4);
    EXPECT_EQ(g->order(0, 2), 2);
    EXPECT_EQ(g->order(0, 3), 2);
    EXPECT_EQ(g->line_top(), 2);
    EXPECT_EQ(g->affine_generator(), 3);
}

TEST(Graph, SmallestCtildeHasTwoFourEdges) {
    const auto g = ct(3);
    EXPECT_EQ(g->order(0, 1), 4);
    EXPECT_EQ(g->order(1, 2), 4);
    EXPECT_TRUE(g->commute(0, 2));
}

TEST(Graph, BAndAtilde) {
    const auto b = CoxeterGraph::make(Family::B, 3);
    EXPECT_EQ(b->order(0, 1), 4);
    EXPECT_EQ(b->order(1, 2), 3);
    EXPECT_EQ(b->line_top(), 2);
    EXPECT_THROW(b->affine_generator(), InputError);
    const auto a = CoxeterGraph::make(Family::Atilde, 4);
    EXPECT_EQ(a->order(3, 0), 3);
    EXPECT_EQ(a->order(0, 2), 2);
    EXPECT_THROW(a->line_top(), InputError);
}

TEST(Graph, RejectsTinyRanks) {
    EXPECT_THROW(CoxeterGraph(Family::Ctilde, 2), InputError);
    EXPECT_THROW(CoxeterGraph(Family::Atilde, 2), InputError);
    EXPECT_THROW(CoxeterGraph(Family::B, 1), InputError);
    EXPECT_THROW(parse_family("d"), InputError);
}

TEST(Words, ParseAndFormatRoundTrip) {
    const auto g = ct(4);
    const Word w = parse_word(*g, "t s1 s2 u 2 0");
    EXPECT_EQ(w, (Word{0, 1, 2, 3, 2, 0}));
    EXPECT_EQ(format_word(*g, w), "t s1 s2 u s2 t");
    EXPECT_TRUE(parse_word(*g, "   ").empty());
}

TEST(Words, BadTokensAreInputErrors) {
    const auto g = ct(3);
    EXPECT_THROW(parse_word(*g, "s0"), InputError);
    EXPECT_THROW(parse_word(*g, "s3"), InputError);
    EXPECT_THROW(parse_word(*g, "x"), InputError);
    EXPECT_THROW(parse_word(*g, "7"), InputError);
    EXPECT_THROW(evaluate(g, Word{5}), InputError);
}

TEST(Words, AtildeFormatting) {
    const auto a = CoxeterGraph::make(Family::Atilde, 4);
    EXPECT_EQ(format_word(*a, {0, 1, 3}), "0 s1 s3");
}

TEST(Element, GeneratorsAreInvolutions) {
    const auto g = ct(3);
    EXPECT_TRUE(evaluate(g, {0, 0}).is_identity());
    EXPECT_TRUE(evaluate(g, {2, 2}).is_identity());
}

TEST(Element, OrderFourRelation) {
    const auto g = ct(3);
    EXPECT_TRUE(evaluate(g, parse_word(*g, "s1 t s1 t s1 t s1 t")).is_identity());
    EXPECT_TRUE(evaluate(g, parse_word(*g, "s1 u s1 u s1 u s1 u")).is_identity());
    EXPECT_EQ(evaluate(g, parse_word(*g, "s1 t s1 t")), evaluate(g, parse_word(*g, "t s1 t s1")));
}

TEST(Element, CanonicalWordAndDescents) {
    const auto g = ct(3);
    const auto w = evaluate(g, {1, 0, 1});
    EXPECT_EQ(w.word(), (Word{1, 0, 1}));
    EXPECT_EQ(left_descents(w), (std::vector<Gen>{1}));
    const auto v = evaluate(g, {1, 0, 1, 0});
    EXPECT_EQ(v.word(), (Word{0, 1, 0, 1}));
    EXPECT_EQ(left_descents(v), (std::vector<Gen>{0, 1}));
    EXPECT_EQ(right_descents(v), (std::vector<Gen>{0, 1}));
}

TEST(Element, LengthAndReduce) {
    const auto g = ct(3);
    const auto [len, word] = length_and_reduce(evaluate(g, parse_word(*g, "t u t s1 s1 u")));
    EXPECT_EQ(len, 0u);
    EXPECT_TRUE(word.empty());
}

TEST(Element, GraphMismatchIsRejected) {
    EXPECT_THROW(evaluate(ct(3), {0}) * evaluate(ct(4), {0}), InputError);
}

TEST(Brackets, WordsOnTheSmallestLine) {
    const auto g = ct(3);
    EXPECT_EQ(bracket_word(*g, -1, 1), (Word{1, 0, 1}));
    EXPECT_EQ(bracket_word(*g, 0, 1), (Word{0, 1}));
    EXPECT_EQ(bracket_word(*g, 1, 1), (Word{1}));
    EXPECT_TRUE(bracket_word(*g, 2, 1).empty());
    EXPECT_THROW(bracket_word(*g, -2, 1), InputError);
    for (int i = -1; i <= 2; ++i) EXPECT_EQ(static_cast<int>(bracket_word(*g, i, 1).size()), bracket_length(i, 1));
}

// Per-length counts frozen from tests/oracles/brute_force.py.
TEST(Ball, RankThreeGrowthSeries) {
    const auto ball = enumerate_ball(ct(3), 12);
    EXPECT_EQ(per_length(ball, 12), (std::vector<std::size_t>{1, 3, 5, 8, 11, 13, 16, 19, 21, 24, 27, 29, 32}));
    EXPECT_EQ(ball.size(), 209u);
}

TEST(Ball, RankFourGrowthSeries) {
    const auto ball = enumerate_ball(ct(4), 12);
    EXPECT_EQ(per_length(ball, 12),
              (std::vector<std::size_t>{1, 4, 9, 17, 28, 42, 60, 81, 105, 132, 162, 196, 233}));
    EXPECT_EQ(ball.size(), 1070u);
}

TEST(Ball, FiniteB2HasEightElements) {
    EXPECT_EQ(enumerate_ball(CoxeterGraph::make(Family::B, 2), 20).size(), 8u);
}

TEST(Ball, ResourceCapIsEnforced) {
    EXPECT_THROW(enumerate_ball(ct(4), 12, 100), ResourceError);
}

TEST(Ball, CapReadsEnvironment) {
    ::setenv("CTILDE_MAX_ELEMENTS", "42", 1);
    EXPECT_EQ(default_element_cap(), 42u);
    ::unsetenv("CTILDE_MAX_ELEMENTS");
    EXPECT_GT(default_element_cap(), 42u);
}

class BallProperties : public ::testing::TestWithParam<int> {};

TEST_P(BallProperties, DescentsLengthsAndInverses) {
    const auto g = ct(GetParam());
    for (const auto& w : enumerate_ball(g, 8)) {
        const auto inv = w.inverse();
        ASSERT_TRUE((w * inv).is_identity());
        ASSERT_EQ(inv.length(), w.length());
        ASSERT_EQ(evaluate(g, w.word()), w);
        ASSERT_EQ(evaluate(g, inverse_word(w.word())), inv);
        for (Gen s = 0; s < g->rank(); ++s) {
            const auto sw = w.left_multiply(s);
            ASSERT_EQ(sw.length() + 1 == w.length(), w.is_left_descent(s));
            ASSERT_TRUE(sw.length() + 1 == w.length() || sw.length() == w.length() + 1);
            ASSERT_EQ(w.right_multiply(s).length() + 1 == w.length(), w.is_right_descent(s));
        }
    }
}

INSTANTIATE_TEST_SUITE_P(Ranks, BallProperties, ::testing::Values(3, 4, 5));

TEST(Element, OrderingIsByLengthThenWord) {
    const auto g = ct(3);
    EXPECT_LT(evaluate(g, {2}), evaluate(g, {0, 1}));
    EXPECT_LT(evaluate(g, {0}), evaluate(g, {1}));
}
