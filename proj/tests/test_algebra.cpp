#include "augalg/graded.hpp"

#include <gtest/gtest.h>

using namespace augalg;
using QA = Algebra<RationalField>;

namespace {

RationalField Q;

Vec<RationalField> vec(std::initializer_list<long> xs) {
    Vec<RationalField> v;
    for (long x : xs) v.push_back(Q.from_int(x));
    return v;
}

/// Upper triangular 2x2 matrices: basis 1, a = e11 - ... chosen so that
/// a b != b a. Basis {1, x = E12, y = E22}, aug(E22) = 0 after adapting.
QA upper_triangular() {
    // basis e11, e12, e22 with unit e11 + e22 and augmentation picking e11
    QA a(Q, {"e11", "e12", "e22"});
    a.set_product(0, 0, vec({1, 0, 0}));
    a.set_product(0, 1, vec({0, 1, 0}));
    a.set_product(1, 2, vec({0, 1, 0}));
    a.set_product(2, 2, vec({0, 0, 1}));
    a.set_unit(vec({1, 0, 1}));
    a.set_aug(vec({1, 0, 0}));
    return a;
}

Presentation<RationalField> two_generator_presentation(int cutoff, std::vector<Word> monomials) {
    Presentation<RationalField> p;
    p.field = Q;
    p.generators = {{"x", 1}, {"y", 1}};
    for (auto& m : monomials) p.relations.push_back({{Q.one(), m}});
    p.cutoff = cutoff;
    return p;
}

}  // namespace

TEST(Axioms, DualNumbersPass) {
    EXPECT_TRUE(check_axioms(truncated_polynomial(Q, 2)).pass);
}

TEST(Axioms, IdempotentWithZeroAugmentationFails) {
    QA a(Q, {"1", "x"});
    a.set_product(0, 0, vec({1, 0}));
    a.set_product(0, 1, vec({0, 1}));
    a.set_product(1, 0, vec({0, 1}));
    a.set_product(1, 1, vec({0, 1}));  // x*x = x
    a.set_unit(vec({1, 0}));
    a.set_aug(vec({1, 0}));
    auto r = check_axioms(a);
    EXPECT_TRUE(r.clauses["associativity"].get<bool>());
    // eps(x x) = eps(x) = 0 = eps(x)^2, so the map is still multiplicative;
    // the failing variant sends x to 1.
    EXPECT_TRUE(r.pass);
    a.set_aug(vec({1, 1}));
    a.set_product(1, 1, vec({0, 0}));
    auto bad = check_axioms(a);
    EXPECT_FALSE(bad.pass);
    EXPECT_FALSE(bad.clauses["augmentation_multiplicative"].get<bool>());
    EXPECT_FALSE(bad.witnesses.empty());
}

TEST(Axioms, RadicalSquareZeroPasses) {
    EXPECT_TRUE(check_axioms(rad_square_zero(Q, 2)).pass);
}

TEST(Axioms, NonAssociativeTableIsCaught) {
    QA a = truncated_polynomial(Q, 3);
    a.set_product(1, 2, vec({0, 1, 0}));  // x * x^2 = x, breaks associativity
    auto r = check_axioms(a);
    EXPECT_FALSE(r.clauses["associativity"].get<bool>());
}

TEST(Presentation, DualNumbersDims) {
    Presentation<RationalField> p;
    p.field = Q;
    p.generators = {{"x", 1}};
    p.relations = {{{Q.one(), Word{0, 0}}}};
    p.cutoff = 4;
    EXPECT_EQ(from_presentation(p).dims(), (std::vector<std::size_t>{1, 1, 0, 0, 0}));
}

TEST(Presentation, SquaresKilledGivesAlternatingWords) {
    auto g = from_presentation(two_generator_presentation(4, {{0, 0}, {1, 1}}));
    EXPECT_EQ(g.dims(), (std::vector<std::size_t>{1, 2, 2, 2, 2}));
    std::vector<std::string> expect{"1", "x", "y", "xy", "yx", "xyx", "yxy", "xyxy", "yxyx"};
    EXPECT_EQ(g.algebra.labels(), expect);
    EXPECT_TRUE(check_axioms(g.algebra).pass);
}

TEST(Presentation, FreeAlgebraDims) {
    auto g = from_presentation(two_generator_presentation(3, {}));
    EXPECT_EQ(g.dims(), (std::vector<std::size_t>{1, 2, 4, 8}));
}

TEST(Presentation, InhomogeneousRejected) {
    auto p = two_generator_presentation(3, {});
    p.relations.push_back({{Q.one(), Word{0, 0}}, {Q.one(), Word{1}}});
    EXPECT_THROW(from_presentation(p), MalformedInput);
}

TEST(Presentation, CutoffTooSmallRejected) {
    auto p = two_generator_presentation(1, {{0, 0}});
    EXPECT_THROW(from_presentation(p), CutoffTooSmall);
}

TEST(Presentation, LaterCutoffReproducesTrustedDegrees) {
    // commutative relation xy - yx plus x^3
    auto make = [](int cutoff) {
        auto p = two_generator_presentation(cutoff, {{0, 0, 0}});
        p.relations.push_back({{Q.one(), Word{0, 1}}, {Q.from_int(-1), Word{1, 0}}});
        return from_presentation(p);
    };
    auto small = make(4), big = make(6);
    for (int n = 0; n <= small.trusted(); ++n) {
        EXPECT_EQ(small.dims()[n], big.dims()[n]);
        std::vector<std::string> ls, lb;
        for (auto i : small.component(n)) ls.push_back(small.algebra.labels()[i]);
        for (auto i : big.component(n)) lb.push_back(big.algebra.labels()[i]);
        EXPECT_EQ(ls, lb);
    }
}

TEST(Ideals, DualNumbers) {
    auto a = truncated_polynomial(Q, 2);
    auto i = augmentation_ideal(a);
    EXPECT_EQ(i, Subspace<RationalField>::span(Q, 2, {vec({0, 1})}));
    EXPECT_EQ(nilpotency_index(a), 2u);
}

TEST(Ideals, TruncatedCubic) {
    EXPECT_EQ(nilpotency_index(truncated_polynomial(Q, 3)), 3u);
}

TEST(Ideals, RadicalSquareZero) {
    auto a = rad_square_zero(Q, 2);
    EXPECT_EQ(augmentation_ideal(a).dim(), 2u);
    EXPECT_EQ(ideal_power(a, 2).dim(), 0u);
    EXPECT_EQ(nilpotency_index(a), 2u);
}

TEST(Ideals, NonNilpotentIdeal) {
    QA a(Q, {"1", "e"});
    a.set_product(0, 0, vec({1, 0}));
    a.set_product(0, 1, vec({0, 1}));
    a.set_product(1, 0, vec({0, 1}));
    a.set_product(1, 1, vec({0, 1}));
    a.set_unit(vec({1, 0}));
    a.set_aug(vec({1, 0}));
    EXPECT_FALSE(nilpotency_index(a).has_value());
}

TEST(Annihilator, DualNumbers) {
    auto a = truncated_polynomial(Q, 2);
    EXPECT_EQ(annihilator(a), Subspace<RationalField>::span(Q, 2, {vec({0, 1})}));
}

TEST(Annihilator, RadicalSquareZero) {
    auto a = rad_square_zero(Q, 2);
    EXPECT_EQ(annihilator(a), augmentation_ideal(a));
}

TEST(Annihilator, TruncatedPolynomialRingVanishesInTrustedDegrees) {
    Presentation<RationalField> p;
    p.field = Q;
    p.generators = {{"x", 1}};
    p.cutoff = 6;
    auto g = from_presentation(p);
    auto ann = graded_annihilator(g);
    ASSERT_EQ(int(ann.size()), g.trusted() + 1);
    for (const auto& s : ann) EXPECT_EQ(s.dim(), 0u);
}

TEST(Annihilator, IsTwoSidedIdeal) {
    for (auto a : {truncated_polynomial(Q, 4), rad_square_zero(Q, 3), adapted(upper_triangular()).algebra})
        EXPECT_TRUE(is_two_sided_ideal(a, annihilator(a)));
}

TEST(Center, CommutativeAlgebraIsItsOwnCentre) {
    auto a = rad_square_zero(Q, 2);
    EXPECT_EQ(center(a).dim(), 3u);
    auto t = truncated_polynomial(Q, 5);
    EXPECT_EQ(center(t), Subspace<RationalField>::full(Q, 5));
}

TEST(Center, GradedCentreOfAlternatingWordsContainsSymmetricSquare) {
    auto g = from_presentation(two_generator_presentation(5, {{0, 0}, {1, 1}}));
    auto zc = graded_center(g);
    auto comp = g.component(2);  // xy, yx
    ASSERT_EQ(comp.size(), 2u);
    EXPECT_TRUE(zc[2].contains(vec({1, 1})));
    EXPECT_TRUE(zc[0].contains(vec({1})));
}

TEST(Center, FreeAlgebraGradedCentreIsScalars) {
    Presentation<RationalField> p = two_generator_presentation(5, {});
    p.generators = {{"a", 1}, {"b", 1}};
    auto g = from_presentation(p);
    auto zc = graded_center(g);
    EXPECT_EQ(zc[0].dim(), 1u);
    for (std::size_t n = 1; n < zc.size(); ++n) EXPECT_EQ(zc[n].dim(), 0u) << "degree " << n;
}

TEST(Enveloping, Dimensions) {
    EXPECT_EQ(enveloping(truncated_polynomial(Q, 2)).dim(), 4u);
    EXPECT_EQ(enveloping(rad_square_zero(Q, 2)).dim(), 9u);
}

TEST(Enveloping, OppositeTwist) {
    auto a = adapted(upper_triangular()).algebra;
    ASSERT_TRUE(a.is_adapted());
    // find x, y in I with xy != yx
    std::size_t d = a.dim(), xi = 0, yi = 0;
    for (std::size_t i = 1; i < d && !xi; ++i)
        for (std::size_t j = 1; j < d; ++j)
            if (!(a.mul(a.basis_vector(i), a.basis_vector(j)) == a.mul(a.basis_vector(j), a.basis_vector(i)))) {
                xi = i;
                yi = j;
                break;
            }
    ASSERT_NE(xi, 0u);
    auto e = enveloping(a);
    Vec<RationalField> one_x = simple_tensor(a, a.unit(), a.basis_vector(xi));
    Vec<RationalField> one_y = simple_tensor(a, a.unit(), a.basis_vector(yi));
    Vec<RationalField> yx = a.mul(a.basis_vector(yi), a.basis_vector(xi));
    EXPECT_EQ(e.mul(one_x, one_y), simple_tensor(a, a.unit(), yx));
}

TEST(Enveloping, PassesAxioms) {
    EXPECT_TRUE(check_axioms(enveloping(truncated_polynomial(Q, 3))).pass);
    EXPECT_TRUE(check_axioms(enveloping(adapted(upper_triangular()).algebra)).pass);
}

TEST(Morphisms, IdentityPasses) {
    EXPECT_TRUE(morphism_check(identity_morphism(truncated_polynomial(Q, 3))).pass);
}

TEST(Morphisms, SquareMapIntoQuartic) {
    auto s = truncated_polynomial(Q, 2), t = truncated_polynomial(Q, 4);
    Matrix<RationalField> m(Q, 4, 2);
    m(0, 0) = 1;
    m(2, 1) = 1;
    EXPECT_TRUE(morphism_check(make_morphism(s, t, m)).pass);
}

TEST(Morphisms, SendingXToOneFails) {
    auto s = truncated_polynomial(Q, 2);
    Matrix<RationalField> m(Q, 2, 2);
    m(0, 0) = 1;
    m(0, 1) = 1;
    auto r = morphism_check(make_morphism(s, s, m));
    EXPECT_FALSE(r.pass);
    EXPECT_FALSE(r.clauses["augmentation"].get<bool>());
}

TEST(Morphisms, CompositionIsAssociative) {
    auto a = truncated_polynomial(Q, 2), b = truncated_polynomial(Q, 3), c = truncated_polynomial(Q, 5);
    Matrix<RationalField> f(Q, 3, 2), g(Q, 5, 3), h(Q, 5, 5);
    f(0, 0) = 1; f(2, 1) = 1;                  // x -> x^2
    g(0, 0) = 1; g(2, 1) = 1; g(4, 2) = 1;     // x -> x^2
    h = Matrix<RationalField>::identity(Q, 5);
    auto F = make_morphism(a, b, f), G = make_morphism(b, c, g), H = make_morphism(c, c, h);
    EXPECT_EQ(compose(H, compose(G, F)).matrix, compose(compose(H, G), F).matrix);
    EXPECT_TRUE(morphism_check(compose(G, F)).pass);
    EXPECT_THROW(compose(F, F), std::invalid_argument);
}

TEST(AlgebraProperties, UnitSplitsOffAugmentationIdeal) {
    for (auto a : {truncated_polynomial(Q, 4), rad_square_zero(Q, 3), upper_triangular()}) {
        ASSERT_TRUE(check_axioms(a).pass);
        EXPECT_EQ(augmentation_ideal(a).dim() + 1, a.dim());
        EXPECT_FALSE(augmentation_ideal(a).contains(a.unit()));
    }
}

TEST(AlgebraProperties, AdaptedBasisPreservesStructure) {
    auto ad = adapted(upper_triangular());
    EXPECT_TRUE(ad.algebra.is_adapted());
    EXPECT_TRUE(check_axioms(ad.algebra).pass);
    auto back = make_morphism(ad.algebra, upper_triangular(), ad.from_adapted);
    EXPECT_TRUE(morphism_check(back).pass);
}

TEST(Quotient, ByAugmentationIdealIsGroundField) {
    auto a = truncated_polynomial(Q, 3);
    auto q = quotient(a, augmentation_ideal(a));
    EXPECT_EQ(q.algebra.dim(), 1u);
    EXPECT_TRUE(morphism_check(q.projection).pass);
}

TEST(Quotient, GeneratedIdeal) {
    auto a = truncated_polynomial(Q, 4);
    auto j = ideal_generated(a, {a.basis_vector(2)});
    EXPECT_EQ(j.dim(), 2u);
    auto q = quotient(a, j);
    EXPECT_EQ(q.algebra.dim(), 2u);
    EXPECT_TRUE(check_axioms(q.algebra).pass);
}

TEST(Radical, Generators) {
    EXPECT_EQ(radical_generators(truncated_polynomial(Q, 3)).size(), 1u);
    EXPECT_EQ(radical_generators(rad_square_zero(Q, 2)).size(), 2u);
}
