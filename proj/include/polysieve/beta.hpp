#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polysieve/eisenstein.hpp"
#include "polysieve/sieve.hpp"

namespace polysieve {

using ExponentTriple = std::array<int, 3>;

inline Rational w_p(const TargetInvariants& target, std::int64_t p) {
    if (p == 2) throw domain_error("w_p is defined for odd p only");
    const int a = ord_p(target.h, p);
    const Rational ip = rpow(p, -1);
    switch (psi_h(target, p)) {
        case 1: return 1 / (1 + ip);
        case -1: return 1 / (1 + ip - 2 * rpow(p, -(a / 2) - 1));
        default: return 1 / ((1 + ip) * (1 - rpow(p, -(a / 2) - 1)));
    }
}

// beta_{X^{p^c}, p}(h).
inline Rational beta_p(const PolygonalFamily& fam, const TargetInvariants& target, std::int64_t p,
                       const ExponentTriple& c) {
    if (p == 2) throw domain_error("beta_p is undefined at p = 2");
    if (!is_prime(p)) throw domain_error("p must be prime");
    for (int x : c)
        if (x < 0) throw domain_error("exponents must be nonnegative");
    const int sum = c[0] + c[1] + c[2];
    if (sum == 0) return 1;
    if ((fam.m - 2) % p == 0) {
        const int k = std::min({c[0], c[1], c[2]});
        return ord_p(target.n, p) >= k ? rpow(p, -sum + k) : Rational(0);
    }
    for (int x : c)
        if (x > 1) throw domain_error("for p not dividing m-2 the pattern must lie in {0,1}^3");
    std::array<std::int64_t, 3> d{c[0] ? p : 1, c[1] ? p : 1, c[2] ? p : 1};
    Rational b = local_density(LocalDensityQuery{fam, target, d, p});
    return rpow(p, -sum) * b * w_p(target, p);
}

inline ExponentTriple pattern_at(const std::array<std::int64_t, 3>& d, std::int64_t p) {
    return {ord_p(d[0], p), ord_p(d[1], p), ord_p(d[2], p)};
}

inline std::vector<std::int64_t> odd_primes_of(const std::array<std::int64_t, 3>& d) {
    std::vector<std::int64_t> ps;
    for (auto p : prime_divisors(d[0] * d[1] * d[2]))
        if (p != 2) ps.push_back(p);
    return ps;
}

inline Rational beta_product(const PolygonalFamily& fam, const TargetInvariants& target, const DivisorTriple& d) {
    if (!d.all_odd()) throw domain_error("beta_product expects odd d");
    Rational r = 1;
    for (auto p : odd_primes_of(d.d)) r *= beta_p(fam, target, p, pattern_at(d.d, p));
    return r;
}

// A positive real stored as the cube root of an exact rational.
struct CubeRoot {
    Rational cube;
    long double numeric() const { return std::cbrt(static_cast<long double>(cube.get_d())); }
};

inline void require_generic_prime(const PolygonalFamily& fam, std::int64_t p) {
    if (p == 2 || (fam.m - 2) % p == 0 || (fam.m - 4) % p == 0)
        throw domain_error("need p not dividing 2(m-2)(m-4), got p = " + std::to_string(p));
}

// omega~(p)/p: 2/p if p does not divide n, else max{(1/(p(p-1)))^(1/3), 2/p}.
inline CubeRoot omega_tilde_over_p(const PolygonalFamily& fam, std::int64_t p, std::int64_t n) {
    require_generic_prime(fam, p);
    Rational two_over_p_cubed = Rational(8) * rpow(p, -3);
    if (n % p != 0) return {two_over_p_cubed};
    Rational alt = 1 / Rational(p * (p - 1));
    return {alt > two_over_p_cubed ? alt : two_over_p_cubed};
}

inline CubeRoot omega_tilde(const PolygonalFamily& fam, std::int64_t p, std::int64_t n) {
    auto c = omega_tilde_over_p(fam, p, n);
    return {c.cube * p * p * p};
}

// prod_{p | d} beta_{X^d,p} <= omega~(d1) omega~(d2) omega~(d3) / (d1 d2 d3), compared as cubes.
struct OmegaBoundCheck {
    Rational lhs;        // the beta product
    Rational rhs_cube;   // cube of the right side
    bool holds() const { return lhs >= 0 && lhs * lhs * lhs <= rhs_cube; }
};

inline OmegaBoundCheck omega_bound_check(const PolygonalFamily& fam, const TargetInvariants& target,
                                         const DivisorTriple& d) {
    OmegaBoundCheck r;
    r.lhs = 1;
    r.rhs_cube = 1;
    for (auto p : odd_primes_of(d.d)) {
        require_generic_prime(fam, p);
        auto c = pattern_at(d.d, p);
        r.lhs *= beta_p(fam, target, p, c);
        r.rhs_cube *= rpow(omega_tilde_over_p(fam, p, target.n).cube, static_cast<unsigned long>(c[0] + c[1] + c[2]));
    }
    return r;
}

// g(d) = prod_{p | d} beta_{X^d,p} / prod_j beta_{X^{(d_j,1,1)},p}; empty when a
// denominator vanishes.
inline std::optional<Rational> g_ratio(const PolygonalFamily& fam, const TargetInvariants& target,
                                       const DivisorTriple& d) {
    Rational r = 1;
    for (auto p : odd_primes_of(d.d)) {
        auto c = pattern_at(d.d, p);
        Rational den = 1;
        for (int j = 0; j < 3; ++j) den *= beta_p(fam, target, p, {c[static_cast<std::size_t>(j)], 0, 0});
        if (den == 0) return std::nullopt;
        r *= beta_p(fam, target, p, c) / den;
    }
    return r;
}

inline std::vector<ExponentTriple> all_patterns() {
    std::vector<ExponentTriple> v;
    for (int mask = 0; mask < 8; ++mask) v.push_back({mask & 1, (mask >> 1) & 1, (mask >> 2) & 1});
    return v;
}

inline Rational beta_sum_all(const PolygonalFamily& fam, const TargetInvariants& target, std::int64_t p) {
    Rational s = 0;
    for (auto& c : all_patterns()) s += beta_p(fam, target, p, c);
    return s;
}

inline Rational beta_sum_pairs(const PolygonalFamily& fam, const TargetInvariants& target, std::int64_t p) {
    return beta_p(fam, target, p, {1, 1, 0}) + beta_p(fam, target, p, {1, 0, 1}) + beta_p(fam, target, p, {0, 1, 1});
}

enum class Relation { Equal, LessEq, GreaterEq };

struct BoundCheck {
    std::string name;
    Rational lhs;
    Rational rhs;
    Relation rel = Relation::LessEq;
    bool within_hypotheses = true;  // m odd, m != 1 mod 3, m != 4 mod 5, plus the item's own conditions
    bool holds() const {
        switch (rel) {
            case Relation::Equal: return lhs == rhs;
            case Relation::LessEq: return lhs <= rhs;
            default: return lhs >= rhs;
        }
    }
};

struct BoundAuditReport {
    std::int64_t m = 0, n = 0, p = 0;
    std::vector<BoundCheck> checks;
    bool all_hold() const {
        for (auto& c : checks)
            if (!c.holds()) return false;
        return true;
    }
};

// Exact audit of the bounds on 1 - beta_{(p,1,1)}, on the sum over {0,1}^3, and
// of the squarefree-part special cases, at one odd prime.
inline BoundAuditReport bound_audit(const PolygonalFamily& fam, const TargetInvariants& target, std::int64_t p) {
    if (p == 2) throw domain_error("bound_audit is for odd p");
    BoundAuditReport rep{fam.m, target.n, p, {}};
    const bool hyp = fam.m_odd() && fam.m_mod3_ok() && fam.m_mod5_ok();
    const Rational one_p = 1 + rpow(p, -1);
    const Rational b100 = beta_p(fam, target, p, {1, 0, 0});
    const Rational total = beta_sum_all(fam, target, p);
    const bool pm2 = (fam.m - 2) % p == 0, pm4 = (fam.m - 4) % p == 0;
    if (pm2) {
        rep.checks.push_back({"1-beta(p,1,1) = 1-1/p", 1 - b100, 1 - rpow(p, -1), Relation::Equal, hyp});
        rep.checks.push_back({"sum beta <= (1+1/p)^3", total, rpow(one_p, 3), Relation::LessEq, hyp});
    } else if (pm4) {
        rep.checks.push_back({"1-beta(p,1,1) >= 1-3/p", 1 - b100, 1 - Rational(3) / p, Relation::GreaterEq, hyp});
        rep.checks.push_back({"sum beta <= (1+1/p)^13", total, rpow(one_p, 13), Relation::LessEq, hyp});
    } else {
        rep.checks.push_back({"1-beta(p,1,1) >= 1-2/p", 1 - b100, 1 - Rational(2) / p, Relation::GreaterEq, hyp});
        rep.checks.push_back({"sum beta <= (1+1/p)^6", total, rpow(one_p, 6), Relation::LessEq, hyp});
        const std::int64_t e = target.h - (fam.m - 4) * (fam.m - 4);
        if (e % p == 0) {
            Rational direct = p % 4 == 1 ? Rational(2 * p - 1) / (p * (p + 1)) : Rational(1) / (p * (p - 1));
            rep.checks.push_back({"beta(p,1,1) closed form", b100, direct, Relation::Equal, hyp});
        } else {
            rep.checks.push_back({"beta(p,1,1) >= (p-1)/(p(p+1))", b100, Rational(p - 1) / (p * (p + 1)),
                                  Relation::GreaterEq, hyp});
            rep.checks.push_back({"beta(p,1,1) <= (p+1)/(p(p-1))", b100, Rational(p + 1) / (p * (p - 1)),
                                  Relation::LessEq, hyp});
        }
    }
    if (target.sf_h % p == 0) {
        const bool hyp3 = fam.m_mod3_ok() && fam.m_odd();
        if (p == 3 && pm2)
            rep.checks.push_back({"sf: sum beta <= 64/27", total, rat(64, 27), Relation::LessEq, hyp3});
        else if (p == 3)
            rep.checks.push_back(
                {"sf: beta(3,3,3) <= 1/6", beta_p(fam, target, 3, {1, 1, 1}), rat(1, 6), Relation::LessEq, hyp3});
        else if (!pm2 && !pm4)
            rep.checks.push_back({"sf: pair sum <= (1+1/p)/(1-1/p^2) * 6/p^2", beta_sum_pairs(fam, target, p),
                                  one_p / (1 - rpow(p, -2)) * 6 * rpow(p, -2), Relation::LessEq, hyp3});
    }
    if (target.h % p == 0 && !pm2)
        rep.checks.push_back({"gamma_p >= 1", gamma_p(target, p), Rational(1), Relation::GreaterEq, true});
    return rep;
}

// Primes of P_{sf(h)}(z0): odd p <= z0, and every prime of sf(h) above z0.
inline std::vector<std::int64_t> sieve_primes(const TargetInvariants& target, std::int64_t z0) {
    std::vector<std::int64_t> ps;
    for (int p : primes_up_to(static_cast<int>(z0)))
        if (p != 2) ps.push_back(p);
    for (auto p : prime_divisors(target.sf_h))
        if (p > z0) ps.push_back(p);
    return ps;
}

// prod_{p | n} (1 + (1/(p(p-1)))^(1/3)), kept as its list of radicands.
struct HProduct {
    std::vector<std::int64_t> primes;
    std::vector<Rational> radicands;
    long double numeric() const {
        long double v = 1;
        for (auto& r : radicands) v *= 1 + std::cbrt(static_cast<long double>(r.get_d()));
        return v;
    }
};

inline HProduct H_of(std::int64_t n) {
    if (n < 1) throw domain_error("H(n) needs n >= 1");
    HProduct H;
    for (auto p : prime_divisors(n)) {
        H.primes.push_back(p);
        H.radicands.push_back(1 / Rational(p * (p - 1)));
    }
    return H;
}

inline Rational two_adic_main_factor(int a) {
    return 1 - Rational(3) * rpow(2, -a) + Rational(3) * rpow(2, -2 * a) - rpow(2, -2 * a);
}

// sum over alpha in {0,1}^3 of mu(2^alpha1) mu(2^alpha2) mu(2^alpha3) 2^{a(-sum alpha + min alpha)}
inline Rational two_adic_moebius_sum(int a) {
    Rational s = 0;
    for (auto& al : all_patterns()) {
        int sum = al[0] + al[1] + al[2];
        int mn = std::min({al[0], al[1], al[2]});
        s += (sum % 2 ? -1 : 1) * rpow(2, a * (-sum + mn));
    }
    return s;
}

inline Rational s_a(int a) { return Rational(3 * (std::int64_t{1} << a) + 4) * rpow(2, -2 * a); }

// The same alpha-sum computed from r_gen ratios, so the dependence on n and on
// the 2-adic normalization is visible.
inline Rational two_adic_factor_from_rgen(const PolygonalFamily& fam, std::int64_t n, int a, TwoAdic mode) {
    const std::array<std::int64_t, 3> one{1, 1, 1};
    Rational base = r_gen(fam, n, one, mode).value;
    Rational s = 0;
    for (auto& al : all_patterns()) {
        std::array<std::int64_t, 3> d{std::int64_t{1} << (a * al[0]), std::int64_t{1} << (a * al[1]),
                                      std::int64_t{1} << (a * al[2])};
        int sum = al[0] + al[1] + al[2];
        s += (sum % 2 ? -1 : 1) * r_gen(fam, n, d, mode).value / base;
    }
    return s;
}

struct Aggregates {
    Rational W;
    Rational S_ET;
    std::optional<HProduct> H;
    std::vector<std::int64_t> sieve_primes;
};

inline Aggregates aggregates(const PolygonalFamily& fam, const TargetInvariants& target, int a, std::int64_t z0) {
    if (z0 < 3) throw domain_error("z0 must be at least 3");
    if (a < 2) throw domain_error("a must be at least 2");
    fam.require_odd();
    Aggregates g;
    g.sieve_primes = sieve_primes(target, z0);
    g.W = two_adic_main_factor(a);
    for (auto p : g.sieve_primes) g.W *= 1 - beta_p(fam, target, p, {0, 0, 1});

    g.S_ET = s_a(a);
    const auto sf = target.sf_h;
    if (sf % 3 == 0) {
        if ((fam.m - 2) % 3 == 0)
            g.S_ET *= beta_sum_all(fam, target, 3);
        else
            g.S_ET *= beta_p(fam, target, 3, {1, 1, 1});
    }
    for (auto p : prime_divisors(sf))
        if (p != 2 && p != 3 && (fam.m - 2) % p != 0 && (fam.m - 4) % p != 0) g.S_ET *= beta_sum_pairs(fam, target, p);
    for (int p : primes_up_to(static_cast<int>(z0)))
        if (p != 2 && sf % p != 0) g.S_ET *= beta_sum_all(fam, target, p);
    if (target.n >= 1) g.H = H_of(target.n);
    return g;
}

// M_h^{+-}(z0): triple divisor sum over d_j | P_{sf(h)}(z0) with weights
// Lambda^- lambda^+ lambda^+ (sign -1) or lambda^+ lambda^+ lambda^+ (sign +1),
// times prod_{p | d} beta_{X^d,p}(h).
inline Rational main_term(const PolygonalFamily& fam, const TargetInvariants& target, std::int64_t z0,
                          const RosserWeightSystem& sys, int sign) {
    if (sign != 1 && sign != -1) throw domain_error("sign must be +1 or -1");
    auto ps = sieve_primes(target, z0);
    if (ps.size() > 20) throw domain_error("too many sieve primes for exact expansion");
    struct Term {
        std::int64_t d;
        unsigned mask;
        int w;
    };
    std::vector<Term> first, rest;
    for (unsigned mask = 0; mask < (1u << ps.size()); ++mask) {
        std::int64_t d = 1;
        for (std::size_t i = 0; i < ps.size(); ++i)
            if (mask >> i & 1) d *= ps[i];
        int lp = lambda_plus(sys, d);
        int w1 = sign == 1 ? lp : Lambda_minus(sys, d);
        if (w1 != 0) first.push_back({d, mask, w1});
        if (lp != 0) rest.push_back({d, mask, lp});
    }
    // beta factors per prime and per pattern, cached
    std::vector<std::array<Rational, 8>> beta_tab(ps.size());
    for (std::size_t i = 0; i < ps.size(); ++i)
        for (int pat = 0; pat < 8; ++pat)
            beta_tab[i][static_cast<std::size_t>(pat)] =
                beta_p(fam, target, ps[i], {pat & 1, (pat >> 1) & 1, (pat >> 2) & 1});
    Rational total = 0;
    for (auto& t1 : first)
        for (auto& t2 : rest)
            for (auto& t3 : rest) {
                Rational prod = t1.w * t2.w * t3.w;
                for (std::size_t i = 0; i < ps.size() && prod != 0; ++i) {
                    int pat = (t1.mask >> i & 1) | ((t2.mask >> i & 1) << 1) | ((t3.mask >> i & 1) << 2);
                    if (pat) prod *= beta_tab[i][static_cast<std::size_t>(pat)];
                }
                total += prod;
            }
    return total;
}

}  // namespace polysieve
