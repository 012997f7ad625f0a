#include "augalg/product_cohomology.hpp"

#include <gtest/gtest.h>

using namespace augalg;

namespace {
RationalField Q;
PrimeField F3(3);
}  // namespace

TEST(ProductLes, DualNumbersExactAndOneSided) {
    auto pc = product_cohomology(truncated_polynomial(Q, 2, "x"), truncated_polynomial(Q, 2, "y"), 3);
    auto r = product_les_check(pc);
    EXPECT_TRUE(r.pass) << r.to_json().dump(2);
}

TEST(AdditiveDecomposition, DualNumbers) {
    auto pc = product_cohomology(truncated_polynomial(Q, 2, "x"), truncated_polynomial(Q, 2, "y"), 3);
    auto r = additive_decomposition_check(pc);
    EXPECT_TRUE(r.pass) << r.to_json().dump(2);
}

TEST(AdditiveDecomposition, CubicTimesDual) {
    auto pc = product_cohomology(truncated_polynomial(Q, 3, "x"), truncated_polynomial(Q, 2, "y"), 3);
    EXPECT_TRUE(product_les_check(pc).pass);
    auto r = additive_decomposition_check(pc);
    EXPECT_TRUE(r.pass) << r.to_json().dump(2);
}

TEST(ConnectingFormula, MatchesLongExactSequence) {
    auto pc = product_cohomology(truncated_polynomial(Q, 2, "x"), truncated_polynomial(Q, 2, "y"), 3);
    auto r = connecting_formula_check(pc);
    EXPECT_TRUE(r.pass) << r.to_json().dump(2);
    auto pc2 = product_cohomology(truncated_polynomial(Q, 3, "x"), truncated_polynomial(Q, 2, "y"), 3);
    auto r2 = connecting_formula_check(pc2);
    EXPECT_TRUE(r2.pass) << r2.to_json().dump(2);
}

TEST(CMap, ChainMapForDualNumberClasses) {
    auto a = truncated_polynomial(Q, 2, "x"), b = truncated_polynomial(Q, 2, "y");
    auto ps = build_psq(a, b, 4);
    auto les = augmentation_les(ps.left);
    for (std::size_t n = 0; n <= 3; ++n)
        for (std::size_t j = 0; j < les.ha[n].dim(); ++j) {
            // I-valued cocycle, written with Λ coordinates
            Vec<RationalField> fi = les.ha[n].representative(j), f;
            const std::size_t d = a.dim();
            for (std::size_t g = 0; g < ps.left.ranks[n]; ++g) {
                f.push_back(Q.zero());
                for (std::size_t i = 1; i < d; ++i) f.push_back(fi[g * (d - 1) + i - 1]);
            }
            auto lift = lift_cocycle(ps.left, n, f, 4 - n);
            auto c = c_map(ps, Side::P, lift, 4 - n);
            auto r = chain_map_check(ps.res, c, hat_cochain(ps, Side::P, n, f));
            EXPECT_TRUE(r.pass) << "n=" << n << " " << r.to_json().dump();
        }
}

TEST(HochProd, DualNumbers) {
    auto pc = product_cohomology(truncated_polynomial(Q, 2, "x"), truncated_polynomial(Q, 2, "y"), 3);
    auto r = hoch_prod_check(pc);
    EXPECT_TRUE(r.pass) << r.to_json().dump(2);
}

TEST(HochProd, CubicTimesDual) {
    auto pc = product_cohomology(truncated_polynomial(Q, 3, "x"), truncated_polynomial(Q, 2, "y"), 3);
    auto r = hoch_prod_check(pc);
    EXPECT_TRUE(r.pass) << r.to_json().dump(2);
}

TEST(NilpHH, DualAndCubic) {
    auto r = nilp_check(truncated_polynomial(Q, 2, "x"), truncated_polynomial(Q, 2, "y"), 4);
    EXPECT_TRUE(r.pass) << r.to_json().dump(2);
    auto r2 = nilp_check(truncated_polynomial(Q, 3, "x"), truncated_polynomial(Q, 2, "y"), 3);
    EXPECT_TRUE(r2.pass) << r2.to_json().dump(2);
}

TEST(GrCentre, PolynomialTablesTrivial) {
    auto e = ext_ring(truncated_polynomial(Q, 2), 5);
    auto r = gr_centre_check(e.table, e.table, 5);
    EXPECT_TRUE(r.pass) << r.to_json().dump(2);
    EXPECT_EQ(r.clauses.count("trivial_in_positive_degrees"), 1u);
}

TEST(GrCentre, DualNumbersExceptional) {
    auto t = algebra_table(truncated_polynomial(Q, 2), 4, "");
    auto r = gr_centre_check(t, t, 4);
    EXPECT_TRUE(r.pass) << r.to_json().dump(2);
    EXPECT_EQ(r.clauses.count("xy_plus_yx_central"), 1u);
}

TEST(GrCentre, GroundFactorDegenerate) {
    auto k = algebra_table(ground_algebra(Q), 4, "");
    auto e = ext_ring(truncated_polynomial(Q, 3), 4);
    auto r = gr_centre_check(k, e.table, 4);
    EXPECT_TRUE(r.pass) << r.to_json().dump(2);
}

TEST(MainTheo, DualNumbersAndCubic) {
    auto r = main_theo_check(truncated_polynomial(Q, 2, "x"), truncated_polynomial(Q, 2, "y"), 4);
    EXPECT_TRUE(r.pass) << r.to_json().dump(2);
    EXPECT_EQ(r.tables["E_minimal"], Json({1, 2, 4, 8, 16}));
    auto r2 = main_theo_check(truncated_polynomial(Q, 3, "x"), truncated_polynomial(Q, 2, "y"), 4);
    EXPECT_TRUE(r2.pass) << r2.to_json().dump(2);
}

TEST(ExtCoproduct, DualNumbers) {
    auto r = ext_coproduct_check(truncated_polynomial(Q, 2, "x"), truncated_polynomial(Q, 2, "y"), 4);
    EXPECT_TRUE(r.pass) << r.to_json().dump(2);
}

TEST(ExtCoproduct, CubicAndDual) {
    auto r = ext_coproduct_check(truncated_polynomial(Q, 3, "x"), truncated_polynomial(Q, 2, "y"), 3);
    EXPECT_TRUE(r.pass) << r.to_json().dump(2);
}

TEST(ExtCoproduct, GroundFactor) {
    auto r = ext_coproduct_check(ground_algebra(Q), truncated_polynomial(Q, 3), 3);
    EXPECT_TRUE(r.pass) << r.to_json().dump(2);
}

TEST(OmegaLemma, DualNumbersAndCubic) {
    auto r = omega_coproduct_check(truncated_polynomial(Q, 2, "x"), truncated_polynomial(Q, 2, "y"), 4);
    EXPECT_TRUE(r.pass) << r.to_json().dump(2);
    auto r2 = omega_coproduct_check(truncated_polynomial(Q, 3, "x"), truncated_polynomial(Q, 2, "y"), 4);
    EXPECT_TRUE(r2.pass) << r2.to_json().dump(2);
}

TEST(OmegaLemma, GroundFactor) {
    auto r = omega_coproduct_check(ground_algebra(Q), truncated_polynomial(Q, 2), 3);
    EXPECT_TRUE(r.pass) << r.to_json().dump(2);
    EXPECT_EQ(r.tables["degrees"][2]["O_left"], 0);
}

TEST(SelfInjective, SocleCriterion) {
    EXPECT_TRUE(self_injective(enveloping(truncated_polynomial(Q, 2))));
    EXPECT_TRUE(self_injective(truncated_polynomial(Q, 4)));
    EXPECT_FALSE(self_injective(rad_square_zero(Q, 2)));
}

TEST(HochCoproduct, DualNumbersWitnesses) {
    auto r = hoch_coproduct_check(truncated_polynomial(Q, 2, "x"), truncated_polynomial(Q, 2, "y"), 6, 2);
    EXPECT_TRUE(r.pass) << r.to_json().dump(2);
    EXPECT_TRUE(r.heuristic);
    EXPECT_EQ(r.tables["centre_reading"], "coproduct");
}

TEST(HochCoproduct, GroundFactorDegenerate) {
    auto r = hoch_coproduct_check(ground_algebra(Q), truncated_polynomial(Q, 3), 3, 2);
    EXPECT_TRUE(r.pass) << r.to_json().dump(2);
}

TEST(CMapCoherence, CoboundaryLiftsLandInR) {
    auto pc = product_cohomology(truncated_polynomial(Q, 2, "x"), truncated_polynomial(Q, 2, "y"), 3);
    auto r = c_map_coherence_check(pc);
    EXPECT_TRUE(r.pass) << r.to_json().dump(2);
    auto pc2 = product_cohomology(truncated_polynomial(Q, 3, "x"), truncated_polynomial(Q, 2, "y"), 3);
    auto r2 = c_map_coherence_check(pc2);
    EXPECT_TRUE(r2.pass) << r2.to_json().dump(2);
}

TEST(RIndependence, RecordedForRescaledGenerators) {
    auto r = r_independence_report(truncated_polynomial(Q, 2, "x"), truncated_polynomial(Q, 2, "y"), 3);
    EXPECT_TRUE(r.heuristic);
    EXPECT_EQ(r.tables["R_minimal"], Json({0, 0, 4, 8}));
    EXPECT_TRUE(r.tables.contains("R_rescaled"));
}

TEST(PhiKCentre, SmallAlgebras) {
    for (auto a : {truncated_polynomial(Q, 2), truncated_polynomial(Q, 3), rad_square_zero(Q, 2)}) {
        auto r = phi_k_centre_check(a, 3);
        EXPECT_TRUE(r.pass) << r.to_json().dump(2);
    }
}

TEST(SsNilpotence, ProductPairs) {
    auto r = ss_nilpotence_check(truncated_polynomial(Q, 2, "x"), truncated_polynomial(Q, 2, "y"), 3);
    EXPECT_TRUE(r.pass) << r.to_json().dump(2);
    auto r2 = ss_nilpotence_check(truncated_polynomial(Q, 3, "x"), truncated_polynomial(Q, 2, "y"), 3);
    EXPECT_TRUE(r2.pass) << r2.to_json().dump(2);
    EXPECT_GT(r2.tables["ideals"][0]["pairs"].get<int>(), 0);
}
