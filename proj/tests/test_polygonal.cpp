#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "polysieve/polygonal.hpp"

using namespace polysieve;

TEST(PolygonalNumber, Examples) {
    EXPECT_EQ(p_m(PolygonalFamily(3), 3), 6);
    EXPECT_EQ(p_m(PolygonalFamily(5), 2), 5);
    EXPECT_EQ(p_m(PolygonalFamily(3), -2), 1);
    EXPECT_THROW(PolygonalFamily(2), domain_error);
}

TEST(PolygonalNumber, NonnegativeOnIntegers) {
    for (std::int64_t m = 3; m <= 30; ++m)
        for (std::int64_t x = -200; x <= 200; ++x) EXPECT_GE(p_m(PolygonalFamily(m), x), 0);
}

TEST(TargetInvariants, Examples) {
    PolygonalFamily f3(3);
    auto a = target_invariants(f3, 1);
    EXPECT_EQ(a.h, 11);
    EXPECT_EQ(a.sf_h, 11);
    EXPECT_EQ(a.decomposition().delta, -11);
    EXPECT_EQ(a.decomposition().t, 1);
    auto b = target_invariants(f3, 12);
    EXPECT_EQ(b.h, 99);
    EXPECT_EQ(b.sf_h, 11);
    EXPECT_EQ(b.decomposition().t, 3);
    EXPECT_EQ(target_invariants(PolygonalFamily(5), 2).h, 51);
}

// Completing the square: sum X_j^2 = h exactly when sum p_m(x_j) = n.
TEST(TargetInvariants, CompletedSquareIdentity) {
    for (std::int64_t m = 3; m <= 15; ++m) {
        PolygonalFamily f(m);
        for (std::int64_t x = -30; x <= 30; ++x) {
            std::int64_t X = 2 * (m - 2) * x + 4 - m;
            EXPECT_EQ(X * X, 8 * (m - 2) * p_m(f, x) + (m - 4) * (m - 4));
        }
    }
}

TEST(TargetInvariants, OddMGivesThreeModEight) {
    for (std::int64_t m = 3; m <= 41; m += 2)
        for (std::int64_t n = 0; n < 200; ++n) EXPECT_EQ(target_h(PolygonalFamily(m), n) % 8, 3);
}

std::int64_t brute_count(const PolygonalFamily& f, std::int64_t n, std::array<std::int64_t, 3> d) {
    std::int64_t c = 0;
    const std::int64_t B = 200;
    std::map<std::int64_t, std::int64_t> third;
    for (std::int64_t z = -B; z <= B; ++z) ++third[p_m(f, z * d[2])];
    for (std::int64_t a = -B; a <= B; ++a)
        for (std::int64_t b = -B; b <= B; ++b) {
            auto it = third.find(n - p_m(f, a * d[0]) - p_m(f, b * d[1]));
            if (it != third.end()) c += it->second;
        }
    return c;
}

TEST(Representations, Examples) {
    PolygonalFamily f3(3);
    EXPECT_EQ(enumerate_representations(f3, 1, DivisorTriple::ones()).size(), 24u);
    EXPECT_EQ(r_X(f3, 0, DivisorTriple::ones()), 8);
    for (auto& x : enumerate_representations(f3, 0, DivisorTriple::ones()))
        for (auto v : x) EXPECT_TRUE(v == 0 || v == -1);
    EXPECT_EQ(r_X(f3, 1, DivisorTriple::make(3, 1, 1)), 8);  // x1 = 0, one of x2, x3 in {1, -2}
}

TEST(Representations, LexicographicAndValid) {
    PolygonalFamily f(5);
    auto d = DivisorTriple::make(1, 2, 3);
    auto reps = enumerate_representations(f, 400, d);
    ASSERT_FALSE(reps.empty());
    EXPECT_TRUE(std::is_sorted(reps.begin(), reps.end()));
    EXPECT_EQ(std::set<RepresentationTriple>(reps.begin(), reps.end()).size(), reps.size());
    for (auto& x : reps) {
        EXPECT_EQ(p_m(f, x[0]) + p_m(f, x[1]) + p_m(f, x[2]), 400);
        EXPECT_EQ(x[1] % 2, 0);
        EXPECT_EQ(x[2] % 3, 0);
    }
}

TEST(Representations, MatchesBruteForce) {
    for (std::int64_t m : {3, 5, 6, 7, 9}) {
        PolygonalFamily f(m);
        for (std::int64_t n : {0, 1, 2, 7, 25, 60})
            for (auto d : {std::array<std::int64_t, 3>{1, 1, 1}, {2, 1, 1}, {3, 5, 1}, {1, 4, 4}}) {
                EXPECT_EQ(r_X(f, n, DivisorTriple::make(d[0], d[1], d[2])), brute_count(f, n, d))
                    << "m=" << m << " n=" << n;
            }
    }
}

TEST(DivisorTriple, Validation) {
    EXPECT_THROW(DivisorTriple::make(0, 1, 1), domain_error);
    EXPECT_THROW(DivisorTriple::make(9, 1, 1), domain_error);
    EXPECT_THROW(DivisorTriple::make(2, 4, 1), domain_error);
    auto t = DivisorTriple::make(12, 4, 1);
    EXPECT_EQ(t.two_adic_a, 2);
    EXPECT_EQ(t.lcm(), 12);
}

TEST(CountSieved, Examples) {
    PolygonalFamily f3(3);
    EXPECT_EQ(count_sieved(f3, 1, DivisorTriple::ones(), {3}).direct, 6);
    EXPECT_EQ(count_sieved(f3, 1, DivisorTriple::ones(), {}).direct, 24);
    EXPECT_THROW(count_sieved(f3, 1, DivisorTriple::ones(), {4}), domain_error);
}

TEST(CountSieved, InclusionExclusionAgreesOnRandomInputs) {
    std::mt19937_64 rng(5);
    const std::vector<std::int64_t> pool{3, 5, 7, 11};
    for (int i = 0; i < 100; ++i) {
        PolygonalFamily f(3 + static_cast<std::int64_t>(rng() % 6));
        std::int64_t n = static_cast<std::int64_t>(rng() % 400);
        std::vector<std::int64_t> P;
        for (auto p : pool)
            if (rng() % 2) P.push_back(p);
        int a = 1 + static_cast<int>(rng() % 3);
        std::array<std::int64_t, 3> l{1, 1, 1};
        if (rng() % 2) l[rng() % 3] = 13;
        auto c = count_sieved(f, n, DivisorTriple::make(l[0], l[1], l[2]), P, a);
        ASSERT_TRUE(c.inclusion_exclusion.has_value());
        EXPECT_EQ(*c.inclusion_exclusion, c.direct);
    }
}
