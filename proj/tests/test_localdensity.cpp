#include <gtest/gtest.h>

#include "polysieve/localdensity.hpp"

using namespace polysieve;

namespace {

std::vector<std::array<std::int64_t, 3>> patterns(std::int64_t p) {
    std::vector<std::array<std::int64_t, 3>> v;
    for (int mask = 0; mask < 8; ++mask)
        v.push_back({mask & 1 ? p : 1, mask & 2 ? p : 1, mask & 4 ? p : 1});
    return v;
}

}  // namespace

TEST(PsiGamma, Examples) {
    PolygonalFamily f3(3);
    auto t11 = target_invariants(f3, 1);
    EXPECT_EQ(psi_h(t11, 3), 1);
    EXPECT_EQ(psi_h(t11, 11), 0);
    EXPECT_EQ(psi_h(t11, 2), -1);
    auto t99 = target_invariants(f3, 12);
    EXPECT_EQ(gamma_p(t99, 3), 1);
    EXPECT_EQ(gamma_p(t11, 11), 1);
    EXPECT_EQ(gamma_p(t11, 3), 1);
}

TEST(LocalDensity, LemmaInstances) {
    EXPECT_EQ(local_density(LocalDensityQuery::make(3, 1, {1, 1, 1}, 2)), 4);
    EXPECT_EQ(local_density(LocalDensityQuery::make(5, 1, {1, 1, 1}, 3)), 3);
    EXPECT_EQ(local_density(LocalDensityQuery::make(3, 1, {5, 1, 1}, 5)), rat(9, 5));
    EXPECT_EQ(local_density(LocalDensityQuery::make(11, 1, {7, 1, 1}, 7)), rat(8, 7));
}

TEST(LocalDensity, RejectsPrimesOutsideE1) {
    EXPECT_THROW(local_density(LocalDensityQuery::make(3, 1, {1, 1, 1}, 5)), domain_error);
    EXPECT_THROW(LocalDensityQuery::make(3, 1, {1, 1, 1}, 9), domain_error);
    EXPECT_THROW(local_density(LocalDensityQuery::make(3, 1, {25, 1, 1}, 5)), domain_error);
}

TEST(Oracle, FrozenValues) {
    EXPECT_EQ(local_density_oracle(LocalDensityQuery::make(3, 1, {5, 1, 1}, 5), 3).value, rat(9, 5));
    EXPECT_EQ(local_density_oracle(LocalDensityQuery::make(11, 1, {7, 1, 1}, 7)).value, rat(8, 7));
    // the congruence count at p = 2 for d = (1,1,1) is 8
    EXPECT_EQ(local_density_oracle(LocalDensityQuery::make(3, 1, {1, 1, 1}, 2), 5).value, 8);
}

// The ball recursion is certified against a literal residue count.
TEST(Oracle, RecursionMatchesResidueCount) {
    for (std::int64_t m : {3, 5, 7, 9})
        for (std::int64_t p : {2, 3, 5, 7})
            for (auto& d : patterns(p))
                for (std::int64_t n = 0; n <= 6; ++n) {
                    auto q = LocalDensityQuery::make(m, n, d, p);
                    for (int t = 1; detail::pow128(p, t) <= 1024; ++t)
                        ASSERT_EQ(detail::density_at_level(q, t), local_density_bruteforce(q, t))
                            << "m=" << m << " p=" << p << " n=" << n << " t=" << t;
                }
}

TEST(Oracle, StabilizesAtDefaultPrecision) {
    for (std::int64_t m : {3, 5, 7, 9, 11, 13})
        for (std::int64_t p : {3, 5, 7, 11, 13})
            for (auto& d : patterns(p))
                for (std::int64_t n = 0; n <= 10; ++n) {
                    auto q = LocalDensityQuery::make(m, n, d, p);
                    auto r = local_density_oracle(q);
                    EXPECT_EQ(r.value, detail::density_at_level(q, r.t + 3));
                }
}

TEST(ClosedForm, OddPrimesMatchOracle) {
    for (std::int64_t m : {3, 5, 7, 9, 11, 13, 15, 17})
        for (std::int64_t p : {3, 5, 7, 11, 13})
            for (auto& d : patterns(p))
                for (std::int64_t n = 0; n <= 30; ++n) {
                    auto q = LocalDensityQuery::make(m, n, d, p);
                    if (q.e1() % p != 0) continue;
                    EXPECT_EQ(local_density(q), local_density_oracle(q).value)
                        << "m=" << m << " p=" << p << " d=" << d[0] << "," << d[1] << "," << d[2] << " n=" << n;
                }
}

TEST(ClosedForm, CorrectedTwoAdicMatchesOracle) {
    for (std::int64_t m : {3, 5, 7, 9, 11, 13})
        for (int a = 0; a <= 3; ++a)
            for (int mask = 0; mask < 8; ++mask)
                for (std::int64_t n = 0; n <= 30; ++n) {
                    if (a == 0 && mask) continue;
                    std::array<std::int64_t, 3> d{mask & 1 ? 1 << a : 1, mask & 2 ? 1 << a : 1, mask & 4 ? 1 << a : 1};
                    auto q = LocalDensityQuery::make(m, n, d, 2);
                    EXPECT_EQ(local_density_2adic_corrected(q), local_density_oracle(q).value)
                        << "m=" << m << " a=" << a << " mask=" << mask << " n=" << n;
                }
}

// The printed b_2 agrees with the count when every d_j is even and is half of it
// whenever some d_j is odd.
TEST(ClosedForm, PrintedTwoAdicOffByTwoExactlyWhenSomeDjOdd) {
    for (std::int64_t m : {3, 5, 7, 9, 11, 13})
        for (int a = 0; a <= 3; ++a)
            for (int mask = 0; mask < 8; ++mask)
                for (std::int64_t n = 0; n <= 30; ++n) {
                    std::array<std::int64_t, 3> d{mask & 1 ? 1 << a : 1, mask & 2 ? 1 << a : 1, mask & 4 ? 1 << a : 1};
                    auto q = LocalDensityQuery::make(m, n, d, 2);
                    Rational printed = local_density(q, TwoAdic::Printed);
                    Rational oracle = local_density_oracle(q).value;
                    const bool some_odd = d[0] % 2 || d[1] % 2 || d[2] % 2;
                    if (some_odd)
                        EXPECT_EQ(2 * printed, oracle);
                    else
                        EXPECT_EQ(printed, oracle);
                }
}

TEST(ClosedForm, DependsOnlyOnLocalPattern) {
    // b_p(d) = b_p(p^{ord_p d})
    for (std::int64_t n = 0; n < 20; ++n) {
        auto a = LocalDensityQuery::make(3, n, {5 * 3, 7, 1}, 5);
        auto b = LocalDensityQuery::make(3, n, {5, 1, 1}, 5);
        EXPECT_EQ(local_density(a), local_density(b));
    }
}
