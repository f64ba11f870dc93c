#include <gtest/gtest.h>

#include "ctilde/fullcomm.hpp"
#include "ctilde/linalg.hpp"
#include "ctilde/temperley_lieb.hpp"

using namespace ctilde;

namespace {

GraphPtr ct(int rank) { return CoxeterGraph::make(Family::Ctilde, rank); }

const LaurentPoly q = LaurentPoly::q();

Poly poly(std::vector<long> c) {
    std::vector<Rational> r;
    for (long x : c) r.emplace_back(x);
    return Poly(r);
}

}  // namespace

TEST(Poly, ExactDivision) {
    const Poly a = poly({-1, 0, 1});  // q^2 - 1
    const Poly b = poly({1, 1});      // q + 1
    const Poly quo = Poly::exact_divide(a, b);
    EXPECT_EQ(quo.degree(), 1);
    EXPECT_EQ(quo.evaluate(Rational(5)), Rational(4));
    EXPECT_THROW(Poly::exact_divide(poly({1, 0, 1}), b), InvariantViolation);
    EXPECT_THROW(Poly::exact_divide(a, Poly()), InvariantViolation);
}

TEST(Poly, FromLaurentNeedsAShift) {
    EXPECT_THROW(Poly::from_laurent(LaurentPoly::p(), 0), InvariantViolation);
    EXPECT_EQ(Poly::from_laurent(LaurentPoly::p(), 1).degree(), 0);
}

TEST(Rank, Trivial) {
    const auto g = ct(3);
    const auto t = tl_generator(g, 0);
    EXPECT_EQ(linear_rank(std::vector<TLElement>{t}), 1u);
    EXPECT_EQ(linear_rank(std::vector<TLElement>{t, t}), 1u);
    EXPECT_EQ(linear_rank(std::vector<TLElement>{}), 0u);
}

TEST(Rank, DependsOnQ) {
    // (q, 1) and (q^2, q) are proportional over Q(q); (q, 1) and (1, 1) are not
    const auto g = ct(3);
    const auto e = GroupElement(g), t = evaluate(g, {0});
    TLElement a(g), b(g), c(g);
    a.add(e, q), a.add(t, 1);
    b.add(e, q * q), b.add(t, q);
    c.add(e, 1), c.add(t, 1);
    EXPECT_EQ(linear_rank(std::vector<TLElement>{a, b}), 1u);
    EXPECT_EQ(linear_rank(std::vector<TLElement>{a, c}), 2u);
    // exact elimination sees what q = 1 hides
    const auto m = coefficient_matrix(std::vector<TLElement>{a, c});
    EXPECT_EQ(bareiss_rank(m), 2u);
    EXPECT_EQ(rank_at_point(m, Rational(1)), 1u);
}

TEST(Rank, EliminationAgreesWithPoints) {
    std::vector<TLElement> imgs;
    for (const auto& w : enumerate_fc_elements(ct(3), 5)) imgs.push_back(r_embed_tl(TLElement::basis(w)));
    const auto m = coefficient_matrix(imgs);
    EXPECT_EQ(bareiss_rank(m), imgs.size());
    const auto rep = rank_report(m);
    EXPECT_EQ(rep.exact, imgs.size());
    EXPECT_TRUE(rep.consistent());
    EXPECT_EQ(rep.at_points.size(), 5u);
}

TEST(Rank, DeficientFamilyUsesElimination) {
    std::vector<TLElement> v;
    const auto g = ct(3);
    for (Gen s = 0; s < 3; ++s) v.push_back(tl_generator(g, s));
    v.push_back(v[0] + v[1].scaled(q));
    v.push_back(v[2].scaled(q - 1));
    const auto rep = linear_rank_report(v);
    EXPECT_EQ(rep.exact, 3u);
    EXPECT_TRUE(rep.consistent());
}

TEST(Rank, TheoremRAtLengthEight) {
    std::vector<TLElement> imgs;
    for (const auto& w : enumerate_fc_elements(ct(3), 8)) imgs.push_back(r_embed_tl(TLElement::basis(w)));
    ASSERT_EQ(imgs.size(), 63u);
    const auto rep = linear_rank_report(imgs);
    EXPECT_EQ(rep.exact, 63u);
    EXPECT_TRUE(rep.consistent());
}
