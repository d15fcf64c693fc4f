#include <gtest/gtest.h>

#include "polysieve/beta.hpp"

using namespace polysieve;

namespace {

TargetInvariants T(std::int64_t m, std::int64_t n) { return target_invariants(PolygonalFamily(m), n); }

}  // namespace

TEST(Wp, Examples) {
    auto t = T(3, 1);  // h = 11
    EXPECT_EQ(w_p(t, 5), rat(5, 6));
    EXPECT_EQ(w_p(t, 11), rat(121, 120));
    EXPECT_EQ(w_p(t, 7), rat(7, 6));
    EXPECT_THROW(w_p(t, 2), domain_error);
}

TEST(BetaP, Examples) {
    PolygonalFamily f5(5), f3(3);
    EXPECT_EQ(beta_p(f5, T(5, 1), 3, {1, 1, 0}), rat(1, 9));
    EXPECT_EQ(beta_p(f3, T(3, 1), 5, {1, 0, 0}), rat(3, 10));
    EXPECT_EQ(beta_p(f3, T(3, 1), 5, {0, 0, 0}), 1);
    EXPECT_THROW(beta_p(f3, T(3, 1), 2, {1, 0, 0}), domain_error);
    EXPECT_THROW(beta_p(f3, T(3, 1), 5, {2, 0, 0}), domain_error);
}

// For p | m-2, beta = p^{-sum c + min c} when ord_p n >= min c.
TEST(BetaP, DividesMMinusTwo) {
    PolygonalFamily f5(5);
    EXPECT_EQ(beta_p(f5, T(5, 1), 3, {1, 1, 1}), 0);
    EXPECT_EQ(beta_p(f5, T(5, 3), 3, {1, 1, 1}), rat(1, 9));
    EXPECT_EQ(beta_p(f5, T(5, 9), 3, {2, 2, 1}), rat(1, 81));
    EXPECT_EQ(beta_p(f5, T(5, 3), 3, {2, 2, 2}), 0);
}

// beta as the ratio of r_gen for d = p^c to r_gen for d = 1.
TEST(BetaP, MatchesRGenRatio) {
    for (std::int64_t m : {3, 5, 7, 9})
        for (std::int64_t p : {3, 5, 7})
            for (std::int64_t n = 0; n < 25; ++n)
                for (auto& c : all_patterns()) {
                    PolygonalFamily f(m);
                    std::array<std::int64_t, 3> d{c[0] ? p : 1, c[1] ? p : 1, c[2] ? p : 1};
                    auto base = r_gen(f, n, DivisorTriple::ones()).value;
                    if (base == 0) continue;
                    EXPECT_EQ(r_gen(f, n, d).value / base, beta_p(f, T(m, n), p, c))
                        << "m=" << m << " p=" << p << " n=" << n;
                }
}

TEST(BetaProduct, Multiplicative) {
    PolygonalFamily f(3);
    for (std::int64_t n = 0; n < 40; ++n) {
        auto t = T(3, n);
        auto d = DivisorTriple::make(15, 5, 7);
        Rational expect = beta_p(f, t, 3, {1, 0, 0}) * beta_p(f, t, 5, {1, 1, 0}) * beta_p(f, t, 7, {0, 0, 1});
        EXPECT_EQ(beta_product(f, t, d), expect);
    }
    EXPECT_THROW(beta_product(f, T(3, 1), DivisorTriple::make(2, 1, 1)), domain_error);
}

TEST(OmegaTilde, BoundHolds) {
    for (std::int64_t m : {3, 5, 9, 11})
        for (std::int64_t n = 0; n < 60; ++n) {
            PolygonalFamily f(m);
            for (auto d : {DivisorTriple::make(7, 1, 1), DivisorTriple::make(11, 11, 1), DivisorTriple::make(13, 13, 13),
                           DivisorTriple::make(77, 7, 11)}) {
                bool generic = true;
                for (auto p : odd_primes_of(d.d))
                    if ((m - 2) % p == 0 || (m - 4) % p == 0) generic = false;
                if (!generic) continue;
                EXPECT_TRUE(omega_bound_check(f, T(m, n), d).holds()) << "m=" << m << " n=" << n;
            }
        }
    EXPECT_THROW(omega_tilde(PolygonalFamily(5), 3, 1), domain_error);
    EXPECT_EQ(omega_tilde_over_p(PolygonalFamily(3), 7, 1).cube, rat(8, 343));
    EXPECT_EQ(omega_tilde_over_p(PolygonalFamily(3), 7, 7).cube, rat(1, 42));
}

TEST(GRatio, OneWhenCoordinatesCoprime) {
    PolygonalFamily f(3);
    for (std::int64_t n = 0; n < 30; ++n) {
        auto g = g_ratio(f, T(3, n), DivisorTriple::make(5, 7, 11));
        ASSERT_TRUE(g.has_value());
        EXPECT_EQ(*g, 1);
    }
}

// At p | m-2 the sum over {0,1}^3 is 1 + 3/p + 3/p^2 + beta(1,1,1), with
// beta(1,1,1) = 1/p^2 when p | n and 0 otherwise. It therefore stays below
// (1+1/p)^3 only when p does not divide n.
TEST(BoundAudit, SumOverCubeAtPrimesOfMMinusTwo) {
    for (std::int64_t m : {5, 11, 17})
        for (std::int64_t n = 0; n < 30; ++n) {
            PolygonalFamily f(m);
            const std::int64_t p = 3;
            Rational s = beta_sum_all(f, T(m, n), p);
            Rational base = 1 + rat(3, p) + rat(3, p * p);
            EXPECT_EQ(s, n % p == 0 ? base + rat(1, p * p) : base);
            auto rep = bound_audit(f, T(m, n), p);
            for (auto& c : rep.checks) {
                if (c.name == "sum beta <= (1+1/p)^3") {
                    EXPECT_EQ(c.holds(), n % p != 0) << "m=" << m << " n=" << n;
                }
            }
        }
}

TEST(BoundAudit, GenericPrimesHold) {
    for (std::int64_t m : {3, 5, 9, 11, 13})
        for (std::int64_t p : {5, 7, 11, 13})
            for (std::int64_t n = 0; n < 40; ++n) {
                PolygonalFamily f(m);
                if ((m - 2) % p == 0) continue;
                auto rep = bound_audit(f, T(m, n), p);
                for (auto& c : rep.checks) {
                    if (c.within_hypotheses) {
                        EXPECT_TRUE(c.holds()) << c.name << " m=" << m << " p=" << p << " n=" << n;
                    }
                }
            }
}

TEST(Aggregates, TwoAdicPieces) {
    EXPECT_EQ(two_adic_main_factor(2), rat(3, 8));
    EXPECT_EQ(s_a(2), 1);
    for (int a = 1; a <= 6; ++a) EXPECT_EQ(two_adic_moebius_sum(a), two_adic_main_factor(a));
    auto g = aggregates(PolygonalFamily(3), T(3, 1), 2, 5);
    EXPECT_EQ(g.sieve_primes, (std::vector<std::int64_t>{3, 5, 11}));
    PolygonalFamily f3(3);
    auto t = T(3, 1);
    Rational W = rat(3, 8);
    for (auto p : {3, 5, 11}) W *= 1 - beta_p(f3, t, p, {0, 0, 1});
    EXPECT_EQ(g.W, W);
    ASSERT_TRUE(g.H.has_value());
    EXPECT_THROW(aggregates(f3, t, 1, 5), domain_error);
}

TEST(Aggregates, HOfTwelve) {
    auto H = H_of(12);
    EXPECT_EQ(H.primes, (std::vector<std::int64_t>{2, 3}));
    EXPECT_EQ(H.radicands[0], rat(1, 2));
    EXPECT_EQ(H.radicands[1], rat(1, 6));
    EXPECT_NEAR(static_cast<double>(H.numeric()), (1 + std::cbrt(0.5)) * (1 + std::cbrt(1.0 / 6)), 1e-12);
}

// The alpha-sum of r_gen ratios under the corrected 2-adic density depends on n:
// the all-even term is 2^{-2a-1} when 2^{a-1} | n and vanishes otherwise. The main
// factor 1 - 3/2^a + 2/2^{2a} never exceeds it, so it is safe as a lower bound.
TEST(Aggregates, TwoAdicFactorFromRGen) {
    for (std::int64_t m : {3, 5, 7})
        for (int a = 2; a <= 3; ++a)
            for (std::int64_t n = 0; n < 20; ++n) {
                Rational exact = two_adic_factor_from_rgen(PolygonalFamily(m), n, a, TwoAdic::Corrected);
                Rational expect = 1 - 3 * rpow(2, -a) + 3 * rpow(2, -2 * a);
                if (n % (1 << (a - 1)) == 0) expect -= rpow(2, -2 * a - 1);
                EXPECT_EQ(exact, expect) << "m=" << m << " a=" << a << " n=" << n;
                EXPECT_LE(two_adic_main_factor(a), exact);
            }
}

namespace {

// Direct triple sum over d_j | P, used to cross-check main_term.
Rational main_term_direct(const PolygonalFamily& f, const TargetInvariants& t, std::int64_t z0,
                          const RosserWeightSystem& sys, int sign) {
    auto ps = sieve_primes(t, z0);
    std::int64_t P = 1;
    for (auto p : ps) P *= p;
    auto divs = squarefree_divisors(sys, P);
    Rational total = 0;
    for (auto d1 : divs)
        for (auto d2 : divs)
            for (auto d3 : divs) {
                int w = (sign == 1 ? lambda_plus(sys, d1) : Lambda_minus(sys, d1)) * lambda_plus(sys, d2) *
                        lambda_plus(sys, d3);
                if (w == 0) continue;
                Rational b = 1;
                for (auto p : ps)
                    b *= beta_p(f, t, p, {d1 % p == 0 ? 1 : 0, d2 % p == 0 ? 1 : 0, d3 % p == 0 ? 1 : 0});
                total += w * b;
            }
    return total;
}

}  // namespace

TEST(MainTerm, MatchesDirectExpansion) {
    PolygonalFamily f(3);
    for (std::int64_t n : {1, 4, 10, 22})
        for (auto D : {rat(50), rat(400), rat(5000)}) {
            RosserWeightSystem sys(D, rat(1));
            auto t = T(3, n);
            EXPECT_EQ(main_term(f, t, 7, sys, 1), main_term_direct(f, t, 7, sys, 1));
            EXPECT_EQ(main_term(f, t, 7, sys, -1), main_term_direct(f, t, 7, sys, -1));
        }
}

// With D < 3 every lambda^+ at a prime vanishes while lambda^-_p = -1.
TEST(MainTerm, SmallLevel) {
    PolygonalFamily f(3);
    auto t = T(3, 1);  // sieve primes {3, 11} at z0 = 3
    RosserWeightSystem sys(rat(2), rat(1));
    EXPECT_EQ(main_term(f, t, 3, sys, 1), 1);
    Rational expect = 1 - 3 * beta_p(f, t, 3, {1, 0, 0}) - 3 * beta_p(f, t, 11, {1, 0, 0});
    EXPECT_EQ(main_term(f, t, 3, sys, -1), expect);
    EXPECT_THROW(main_term(f, t, 3, sys, 0), domain_error);
}

// P_sf(z0) = {3} and m = 5, so beta = 3^{-sum c + min c} when 3^{min c} | n.
// With D = 10, lambda^+_3 = -1 and M^+ = sum_c (-1)^{|c|} beta(c).
TEST(MainTerm, HandExpansionAtThree) {
    PolygonalFamily f(5);
    RosserWeightSystem sys(rat(10), rat(1));
    auto t1 = T(5, 1);  // h = 27, ord_3 n = 0
    ASSERT_EQ(sieve_primes(t1, 3), (std::vector<std::int64_t>{3}));
    EXPECT_EQ(main_term(f, t1, 3, sys, 1), 1 - rat(3, 3) + rat(3, 9) - 0);
    auto t3 = T(5, 3);  // h = 75, ord_3 n = 1
    ASSERT_EQ(sieve_primes(t3, 3), (std::vector<std::int64_t>{3}));
    EXPECT_EQ(main_term(f, t3, 3, sys, 1), 1 - rat(3, 3) + rat(3, 9) - rat(1, 9));
}

TEST(MainTerm, PlusDominatesMinus) {
    for (std::int64_t m : {3, 5, 9})
        for (std::int64_t n : {1, 2, 6, 15, 40})
            for (auto D : {rat(10), rat(100), rat(2000)}) {
                PolygonalFamily f(m);
                RosserWeightSystem sys(D, rat(1));
                auto t = T(m, n);
                if (sieve_primes(t, 7).size() > 6) continue;
                EXPECT_GE(main_term(f, t, 7, sys, 1), main_term(f, t, 7, sys, -1)) << "m=" << m << " n=" << n;
            }
}
