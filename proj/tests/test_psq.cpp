#include "augalg/psq.hpp"

#include <gtest/gtest.h>

using namespace augalg;

namespace {
RationalField Q;
PrimeField F3(3);
}  // namespace

TEST(Compositions, CountsAreTwoToTheNMinusOneTimesTwo) {
    EXPECT_EQ(alternating_compositions(0).size(), 1u);
    for (std::size_t n = 1; n <= 6; ++n) EXPECT_EQ(alternating_compositions(n).size(), std::size_t(1) << n);
}

TEST(Psq, DualNumbersRanksAndIdentities) {
    auto ps = build_psq(truncated_polynomial(Q, 2, "x"), truncated_polynomial(Q, 2, "y"), 4);
    // factor ranks are all 1, so rank = number of alternating compositions
    EXPECT_EQ(ps.res.ranks, (std::vector<std::size_t>{1, 2, 4, 8, 16}));
    // n = 3: (3), (1,2), (2,1), (1,1,1), each in two alternation patterns
    EXPECT_EQ(ps.blocks[3].size(), 8u);
    auto r = psq_check(ps);
    EXPECT_TRUE(r.pass) << r.to_json().dump(2);
}

TEST(Psq, CubicAndDualDeltaSquaredToFive) {
    auto ps = build_psq(truncated_polynomial(Q, 3, "x"), truncated_polynomial(Q, 2, "y"), 5);
    auto ex = verify_exact(ps.res);
    EXPECT_TRUE(ex.dd_zero);
    EXPECT_TRUE(ex.exact());
    EXPECT_TRUE(homotopy_check(ps.res).pass);
}

TEST(Psq, NonTrivialFactorRanks) {
    auto ps = build_psq(rad_square_zero(F3, 2), truncated_polynomial(F3, 2, "z"), 3);
    auto r = psq_check(ps);
    EXPECT_TRUE(r.pass) << r.to_json().dump(2);
}

TEST(Psq, GroundFieldFactorReducesToOtherResolution) {
    auto ps = build_psq(ground_algebra(Q), truncated_polynomial(Q, 3), 3);
    EXPECT_EQ(ps.res.ranks, (std::vector<std::size_t>{1, 1, 1, 1}));
    EXPECT_TRUE(psq_check(ps).pass);
}

TEST(Psq, RejectsNonSmallInput) {
    auto a = truncated_polynomial(Q, 2);
    EXPECT_THROW(build_psq(bar_resolution(a, 2), minimal_bimodule_resolution(a, 2), 2), PreconditionError);
}

TEST(TensorDown, MatchesMinimalResolutionOfProduct) {
    auto a = truncated_polynomial(Q, 2, "x"), b = truncated_polynomial(Q, 2, "y");
    auto ps = build_psq(a, b, 4);
    auto r = tensor_down(ps);
    EXPECT_EQ(r.ranks, (std::vector<std::size_t>{1, 2, 4, 8, 16}));
    EXPECT_EQ(r.ranks, minimal_resolution(product(a, b).algebra, 4).ranks);
    EXPECT_TRUE(is_small(r));
    auto ex = verify_exact(r);
    EXPECT_TRUE(ex.exact());
    EXPECT_EQ(ex.homology, (std::vector<std::size_t>{0, 0, 0, 0}));
}
