#include "augalg/graded.hpp"
#include "augalg/resolution_ops.hpp"

#include <cmath>

#include <gtest/gtest.h>

using namespace augalg;

namespace {
RationalField Q;

std::vector<std::size_t> ones(std::size_t n) { return std::vector<std::size_t>(n, 1); }

std::vector<std::size_t> homology_dims(const Resolution<RationalField>& r) { return verify_exact(r).homology; }
}  // namespace

TEST(MinimalGenerators, FreeRankOne) {
    auto a = std::make_shared<const Algebra<RationalField>>(truncated_polynomial(Q, 3));
    ModuleOver<RationalField> free{a, 3, {}, {}};
    for (std::size_t b = 0; b < 3; ++b) free.action.push_back(a->left_mul_matrix(a->basis_vector(b)));
    EXPECT_EQ(minimal_generators(free).size(), 1u);
}

TEST(MinimalGenerators, AugmentationIdealOfCubic) {
    auto a = std::make_shared<const Algebra<RationalField>>(truncated_polynomial(Q, 3));
    ModuleOver<RationalField> reg{a, 3, {}, {}};
    for (std::size_t b = 0; b < 3; ++b) reg.action.push_back(a->left_mul_matrix(a->basis_vector(b)));
    auto ideal = coordinate_submodule(reg, {1, 2});
    EXPECT_TRUE(module_check(ideal).pass);
    auto gens = minimal_generators(ideal);
    ASSERT_EQ(gens.size(), 1u);
    EXPECT_EQ(gens[0], (Vec<RationalField>{1, 0}));  // x
}

TEST(MinimalGenerators, RadicalSquareZero) {
    auto a = std::make_shared<const Algebra<RationalField>>(rad_square_zero(Q, 2));
    ModuleOver<RationalField> reg{a, 3, {}, {}};
    for (std::size_t b = 0; b < 3; ++b) reg.action.push_back(a->left_mul_matrix(a->basis_vector(b)));
    EXPECT_EQ(minimal_generators(coordinate_submodule(reg, {1, 2})).size(), 2u);
}

TEST(MinimalResolution, TruncatedPolynomialsHaveRankOne) {
    for (std::size_t r = 2; r <= 5; ++r) {
        auto res = minimal_resolution(truncated_polynomial(Q, r), 5);
        EXPECT_EQ(res.ranks, ones(6)) << "r=" << r;
        EXPECT_TRUE(is_small(res));
        EXPECT_TRUE(verify_exact(res).exact());
    }
}

TEST(MinimalResolution, RadicalSquareZeroDoubles) {
    auto res = minimal_resolution(rad_square_zero(Q, 2), 5);
    EXPECT_EQ(res.ranks, (std::vector<std::size_t>{1, 2, 4, 8, 16, 32}));
    EXPECT_TRUE(is_small(res));
    EXPECT_TRUE(verify_exact(res).exact());
}

TEST(MinimalResolution, GradedDegreesForCubic) {
    auto res = minimal_resolution(truncated_polynomial(Q, 3), 4);
    // generators of k over k[x]/x^3 sit in degrees 0, 1, 3, 4, 6
    EXPECT_EQ(res.gen_degrees[1], (std::vector<int>{1}));
    EXPECT_EQ(res.gen_degrees[2], (std::vector<int>{3}));
    EXPECT_EQ(res.gen_degrees[3], (std::vector<int>{4}));
    EXPECT_EQ(res.gen_degrees[4], (std::vector<int>{6}));
}

TEST(MinimalResolution, NonAdaptedRejected) {
    Algebra<RationalField> e(Q, {"1", "e"});
    e.set_product(0, 0, {1, 0});
    e.set_product(0, 1, {0, 1});
    e.set_product(1, 0, {0, 1});
    e.set_product(1, 1, {0, 1});
    e.set_unit({1, 0});
    e.set_aug({1, 0});
    EXPECT_THROW(minimal_resolution(e, 2), PreconditionError);
}

TEST(BimoduleResolution, DualNumbers) {
    auto res = minimal_bimodule_resolution(truncated_polynomial(Q, 2), 4);
    EXPECT_EQ(res.ranks, ones(5));
    EXPECT_TRUE(is_small(res));
    EXPECT_TRUE(verify_exact(res).exact());
    // d_1 and d_2 are multiplication by x⊗1 ± 1⊗x up to scalars
    auto d1 = res.diff[1].col(0), d2 = res.diff[2].col(0);
    EXPECT_TRUE(!is_zero(d1[2]) && d1[2] == -d1[1]);
    EXPECT_TRUE(!is_zero(d2[2]) && d2[2] == d2[1]);
}

TEST(BimoduleResolution, GroundField) {
    auto res = minimal_bimodule_resolution(ground_algebra(Q), 3);
    EXPECT_EQ(res.ranks, (std::vector<std::size_t>{1, 0, 0, 0}));
    EXPECT_TRUE(verify_exact(res).exact());
}

TEST(BimoduleResolution, RadicalSquareZeroMatchesBarTor) {
    auto a = rad_square_zero(Q, 2);
    auto res = minimal_bimodule_resolution(a, 3);
    EXPECT_TRUE(verify_exact(res).exact());
    // Tor over Λ^e of (Λ, k) from the bar resolution: homology of B ⊗ k
    auto bar = one_sided(bar_resolution(a, 4));
    std::vector<std::size_t> tor;
    for (std::size_t n = 0; n <= 3; ++n) {
        // B_n ⊗_{Λ^e} k has dimension rank; differential is the ε-reduction
        auto lin = [&](std::size_t m) {
            Matrix<RationalField> r(Q, bar.ranks[m - 1], bar.ranks[m]);
            const auto& full = bar.diff[m];
            for (std::size_t g = 0; g < bar.ranks[m]; ++g)
                for (std::size_t h = 0; h < bar.ranks[m - 1]; ++h) r(h, g) = full(h * a.dim(), g);
            return r;
        };
        std::size_t in = n == 0 ? 0 : rank(lin(n));
        std::size_t out = rank(lin(n + 1));
        tor.push_back(bar.ranks[n] - in - out);
    }
    EXPECT_EQ(tor, (std::vector<std::size_t>(res.ranks.begin(), res.ranks.end())));
}

TEST(BarResolution, DimensionsAndMultiplication) {
    auto a = truncated_polynomial(Q, 2);
    auto bar = bar_resolution(a, 3);
    for (std::size_t n = 0; n <= 3; ++n) EXPECT_EQ(bar.term_dim(n), std::size_t(std::pow(2, n + 2)));
    EXPECT_FALSE(is_small(bar));
    EXPECT_TRUE(verify_exact(bar).exact());
    // B_0 -> A sends a1 ⊗ a2 to a1 a2
    auto mu = bar.augmentation_linear();
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) EXPECT_EQ(mu.col(i * 2 + j), a.mul(a.basis_vector(i), a.basis_vector(j)));
}

TEST(BarResolution, HomologyZeroForCubic) {
    auto bar = bar_resolution(truncated_polynomial(Q, 3), 3);
    EXPECT_EQ(homology_dims(bar), (std::vector<std::size_t>{0, 0, 0}));
}

TEST(OneSided, MatchesMinimalOneSided) {
    auto a = rad_square_zero(Q, 2);
    auto r = one_sided(minimal_bimodule_resolution(a, 4));
    EXPECT_EQ(r.ranks, minimal_resolution(a, 4).ranks);
    EXPECT_TRUE(is_small(r));
    EXPECT_TRUE(verify_exact(r).exact());
}

TEST(Homotopy, IdentityHoldsForSeveralAlgebras) {
    for (auto a : {truncated_polynomial(Q, 2), truncated_polynomial(Q, 3), rad_square_zero(Q, 2)}) {
        auto res = minimal_bimodule_resolution(a, 4);
        build_homotopy(res);
        EXPECT_EQ(res.homotopy.size(), 4u);
        auto r = homotopy_check(res);
        EXPECT_TRUE(r.pass) << r.to_json().dump();
    }
}

TEST(Homotopy, BarResolution) {
    auto res = bar_resolution(truncated_polynomial(Q, 2), 3);
    build_homotopy(res);
    EXPECT_TRUE(homotopy_check(res).pass);
}

TEST(Omega, DualNumbers) {
    auto om = omega_bimodule(truncated_polynomial(Q, 2));
    EXPECT_EQ(om.kernel.dim(), 2u);
    EXPECT_TRUE(om.generated_by_differences);
    ASSERT_EQ(om.differences.size(), 1u);
    EXPECT_EQ(om.differences[0], (Vec<RationalField>{0, -1, 1, 0}));
    EXPECT_TRUE(module_check(om.module).pass);
}

TEST(Omega, GroundFieldIsZero) {
    auto om = omega_bimodule(ground_algebra(Q));
    EXPECT_EQ(om.kernel.dim(), 0u);
    EXPECT_TRUE(om.generated_by_differences);
}

TEST(Omega, TruncatedFreeAlgebra) {
    Presentation<RationalField> p;
    p.field = Q;
    p.generators = {{"x", 1}, {"y", 1}};
    p.relations = {{{Q.one(), Word{0, 0}}}, {{Q.one(), Word{1, 1}}}};
    p.cutoff = 3;
    auto ga = from_presentation(p);
    auto om = omega_bimodule(ga.algebra);
    EXPECT_EQ(om.kernel.dim(), ga.algebra.dim() * ga.algebra.dim() - ga.algebra.dim());
    EXPECT_EQ(om.differences.size(), 2u);
    EXPECT_TRUE(om.generated_by_differences);
}

TEST(Modules, TrivialAndRegularBimodule) {
    auto a = truncated_polynomial(Q, 3);
    auto ring = std::make_shared<const Algebra<RationalField>>(a);
    EXPECT_TRUE(module_check(trivial_module(ring)).pass);
    auto env = std::make_shared<const Algebra<RationalField>>(enveloping(a));
    EXPECT_TRUE(module_check(bimodule_regular(a, env)).pass);
}
