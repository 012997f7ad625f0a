#include "augalg/constructions.hpp"

#include <gtest/gtest.h>

using namespace augalg;

namespace {
RationalField Q;

Presentation<RationalField> monomial_presentation(int cutoff, int px, int py) {
    Presentation<RationalField> p;
    p.field = Q;
    p.generators = {{"x", 1}, {"y", 1}};
    p.relations = {{{Q.one(), Word(std::size_t(px), 0)}}, {{Q.one(), Word(std::size_t(py), 1)}}};
    p.cutoff = cutoff;
    return p;
}
}  // namespace

TEST(Product, DualNumbersGiveRadicalSquareZero) {
    auto pr = product(truncated_polynomial(Q, 2, "x"), truncated_polynomial(Q, 2, "y"));
    EXPECT_EQ(pr.algebra.dim(), 3u);
    EXPECT_TRUE(check_axioms(pr.algebra).pass);
    EXPECT_TRUE(pr.algebra == rad_square_zero(Q, 2));
    EXPECT_EQ(pr.algebra.labels(), (std::vector<std::string>{"1", "x", "y"}));
    EXPECT_TRUE(morphism_check(pr.proj_left).pass);
    EXPECT_TRUE(morphism_check(pr.proj_right).pass);
    EXPECT_TRUE(morphism_check(pr.incl_left).pass);
}

TEST(Product, GroundFieldIsUnit) {
    auto a = truncated_polynomial(Q, 3);
    auto pr = product(ground_algebra(Q), a);
    EXPECT_TRUE(pr.algebra == a);
    EXPECT_TRUE(product(a, ground_algebra(Q)).algebra == a);
}

TEST(Product, ExtraSpecialTriple) {
    auto ab = product(truncated_polynomial(Q, 3, "a"), truncated_polynomial(Q, 2, "b")).algebra;
    auto abc = product(ab, truncated_polynomial(Q, 2, "c")).algebra;
    EXPECT_EQ(abc.dim(), 5u);
    auto i2 = ideal_power(abc, 2);
    EXPECT_EQ(i2.dim(), 1u);
    EXPECT_TRUE(i2.contains(abc.basis_vector(2)));  // a^2
    EXPECT_EQ(nilpotency_index(abc), 3u);
}

TEST(Product, FieldMismatchThrows) {
    EXPECT_THROW(product(truncated_polynomial(PrimeField(3), 2), truncated_polynomial(PrimeField(5), 2)),
                 std::invalid_argument);
}

TEST(Product, CommutativeAndAssociativeUpToRelabelling) {
    auto a = truncated_polynomial(Q, 3, "a"), b = truncated_polynomial(Q, 2, "b"), c = rad_square_zero(Q, 2);
    EXPECT_TRUE(sorted_by_label(product(a, b).algebra) == sorted_by_label(product(b, a).algebra));
    auto left = product(product(a, b).algebra, c).algebra;
    auto right = product(a, product(b, c).algebra).algebra;
    EXPECT_TRUE(sorted_by_label(left) == sorted_by_label(right));
}

TEST(Product, DimensionFormula) {
    for (std::size_t r = 1; r <= 4; ++r)
        for (std::size_t s = 1; s <= 3; ++s)
            EXPECT_EQ(product(truncated_polynomial(Q, r), rad_square_zero(Q, s)).algebra.dim(), r + (s + 1) - 1);
}

TEST(Product, UniversalPropertyOnThreeDimensionalSource) {
    auto theta = rad_square_zero(Q, 2);  // 1, x, y
    auto lam = truncated_polynomial(Q, 2, "u"), gam = truncated_polynomial(Q, 3, "v");
    Matrix<RationalField> f(Q, 2, 3), g(Q, 3, 3);
    f(0, 0) = 1; f(1, 1) = 1; f(1, 2) = 2;   // x -> u, y -> 2u
    g(0, 0) = 1; g(2, 1) = 1; g(2, 2) = -1;  // x -> v^2, y -> -v^2
    auto r = product_universal_check(make_morphism(theta, lam, f), make_morphism(theta, gam, g));
    EXPECT_TRUE(r.pass) << r.to_json().dump(2);
}

TEST(Coproduct, DualNumbersMatchPresentation) {
    auto cp = coproduct(truncated_polynomial(Q, 2, "x"), truncated_polynomial(Q, 2, "y"), 4);
    EXPECT_EQ(cp.algebra.dims(), (std::vector<std::size_t>{1, 2, 2, 2, 2}));
    auto pres = from_presentation(monomial_presentation(4, 2, 2));
    EXPECT_TRUE(cp.algebra.algebra == pres.algebra);
    EXPECT_EQ(cp.algebra.algebra.labels(), pres.algebra.labels());
    EXPECT_TRUE(check_axioms(cp.algebra.algebra).pass);
    EXPECT_TRUE(morphism_check(cp.incl_left).pass);
    EXPECT_TRUE(morphism_check(cp.incl_right).pass);
}

TEST(Coproduct, GroundFieldFactor) {
    auto a = truncated_polynomial(Q, 3);
    auto cp = coproduct(ground_algebra(Q), a, 2);
    EXPECT_TRUE(cp.algebra.algebra == a);
}

TEST(Coproduct, MergedLettersAgainstPresentation) {
    auto cp = coproduct(truncated_polynomial(Q, 3, "x"), truncated_polynomial(Q, 2, "y"), 6);
    auto pres = from_presentation(monomial_presentation(6, 3, 2));
    EXPECT_EQ(cp.algebra.dims(), pres.dims());
    EXPECT_TRUE(check_axioms(cp.algebra.algebra).pass);
    const auto& a = cp.algebra.algebra;
    // x * x is the single letter x^2 (word length 1, internal degree 2); x^2 * x = 0
    auto x = a.basis_vector(1);
    auto xx = a.mul(x, x);
    std::size_t idx = 0;
    for (std::size_t i = 0; i < a.dim(); ++i)
        if (!is_zero(xx[i])) idx = i;
    EXPECT_EQ(a.labels()[idx], "x^2");
    EXPECT_EQ(cp.words[idx].size(), 1u);
    EXPECT_EQ(a.degrees()[idx], 2);
    EXPECT_TRUE(is_zero_vector<RationalField>(a.mul(xx, x)));
}

TEST(Coproduct, AlternatingTensorCounts) {
    // ungraded factors use word length: dim R_n = 2 * a * b products
    Algebra<RationalField> a = rad_square_zero(Q, 2), b = rad_square_zero(Q, 1);
    a.set_degrees({});
    b.set_degrees({});
    auto cp = coproduct(a, b, 4);
    EXPECT_FALSE(cp.internal_grading);
    // n=1: 2+1; n=2: 2*1+1*2; n=3: 2*1*2 + 1*2*1; n=4: 2*1*2*1*2
    EXPECT_EQ(cp.algebra.dims(), (std::vector<std::size_t>{1, 3, 4, 6, 8}));
}

TEST(Coproduct, NonNilpotentFactorRejected) {
    Algebra<RationalField> e(Q, {"1", "e"});
    e.set_product(0, 0, {1, 0});
    e.set_product(0, 1, {0, 1});
    e.set_product(1, 0, {0, 1});
    e.set_product(1, 1, {0, 1});
    e.set_unit({1, 0});
    e.set_aug({1, 0});
    EXPECT_THROW(coproduct(e, truncated_polynomial(Q, 2), 3), PreconditionError);
}

TEST(ChineseRemainder, CoordinateIdeals) {
    auto a = rad_square_zero(Q, 2);
    auto i = Subspace<RationalField>::span(Q, 3, {a.basis_vector(1)});
    auto j = Subspace<RationalField>::span(Q, 3, {a.basis_vector(2)});
    auto r = chinese_remainder_check(a, i, j);
    EXPECT_TRUE(r.pass) << r.to_json().dump(2);
}

TEST(ChineseRemainder, TrivialSplitting) {
    auto a = truncated_polynomial(Q, 3);
    auto r = chinese_remainder_check(a, augmentation_ideal(a), Subspace<RationalField>(Q, 3));
    EXPECT_TRUE(r.pass) << r.to_json().dump(2);
}

TEST(ChineseRemainder, HypothesesFailForCubic) {
    auto a = truncated_polynomial(Q, 3);
    auto r = chinese_remainder_check(a, augmentation_ideal(a), augmentation_ideal(a));
    EXPECT_FALSE(r.pass);
    ASSERT_FALSE(r.witnesses.empty());
    EXPECT_EQ(r.witnesses[0]["reason"], "hypotheses not met");
}

TEST(ChineseRemainder, NonIdealRejected) {
    auto a = truncated_polynomial(Q, 3);
    auto i = Subspace<RationalField>::span(Q, 3, {a.basis_vector(1)});
    EXPECT_THROW(chinese_remainder_check(a, i, i), PreconditionError);
}
