#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "polysieve/polygonal.hpp"

namespace polysieve {

// Rosser weights lambda^{+-}_{d,D}(beta). D and beta are exact rationals so that
// the threshold tests p_j < y_j are decided without rounding; a tie counts as
// failure of the strict inequality.
struct RosserWeightSystem {
    Rational D;
    Rational beta;
    std::optional<int> two_adic_a;  // treat 2^a as an extra prime when set

    RosserWeightSystem(Rational D_, Rational beta_, std::optional<int> a = std::nullopt)
        : D(std::move(D_)), beta(std::move(beta_)), two_adic_a(a) {
        if (D <= 0 || beta <= 0) throw domain_error("Rosser weights need D > 0 and beta > 0");
        if (two_adic_a && *two_adic_a < 1) throw domain_error("2-adic exponent a must be positive");
    }
};

// y_m = (D / (p_1...p_m))^(1/beta), kept as base and exponent.
struct Threshold {
    Rational base;
    Rational inv_exponent;
    double numeric() const { return std::pow(base.get_d(), inv_exponent.get_d()); }
};

inline Threshold y_m(const RosserWeightSystem& sys, const std::vector<std::int64_t>& primes) {
    for (std::size_t i = 1; i < primes.size(); ++i)
        if (primes[i] >= primes[i - 1]) throw domain_error("y_m expects p_1 > p_2 > ... > p_m");
    Rational prod = 1;
    for (auto p : primes) prod *= p;
    return {sys.D / prod, 1 / sys.beta};
}

namespace detail {

// p^beta * prod < D, with beta = u/v, decided as p^u * prod^v < D^v.
inline bool below_threshold(const RosserWeightSystem& sys, std::int64_t p, const Rational& prod) {
    const unsigned long u = sys.beta.get_num().get_ui();
    const unsigned long v = sys.beta.get_den().get_ui();
    if (sys.beta.get_num() != u || sys.beta.get_den() != v) throw domain_error("beta too large");
    return rpow(Rational(p), u) * rpow(prod, v) < rpow(sys.D, v);
}

struct SplitDivisor {
    bool two_part = false;                 // carries the 2^a pseudo-prime
    std::vector<std::int64_t> odd_primes;  // descending; holds 2 when it is an ordinary prime
};

inline SplitDivisor split_divisor(const RosserWeightSystem& sys, std::int64_t d) {
    if (d < 1) throw domain_error("weights are defined for positive d");
    SplitDivisor s;
    // without a 2-adic pseudo-prime, 2 is an ordinary prime of the universe
    int k = ord_p(d, 2);
    if (k > 0 && sys.two_adic_a) {
        if (k != *sys.two_adic_a) throw domain_error("even d must be 2^a times an odd squarefree number");
        s.two_part = true;
        d >>= k;
    }
    for (auto& [p, e] : factorize(d).factors) {
        if (e > 1) throw domain_error("d must be squarefree away from the 2-adic pseudo-prime");
        s.odd_primes.push_back(static_cast<std::int64_t>(p));
    }
    std::sort(s.odd_primes.rbegin(), s.odd_primes.rend());
    return s;
}

// Checks p_j < y_j for the indices j (1-based) of the given parity.
inline int rosser(const RosserWeightSystem& sys, std::int64_t d, int parity) {
    auto s = split_divisor(sys, d);
    const auto& ps = s.odd_primes;
    const int r = static_cast<int>(ps.size());
    Rational prod = 1;
    for (int j = 1; j <= r; ++j) {
        prod *= ps[static_cast<std::size_t>(j - 1)];
        if (j % 2 == parity && !below_threshold(sys, ps[static_cast<std::size_t>(j - 1)], prod)) return 0;
    }
    int w = r % 2 == 0 ? 1 : -1;
    return s.two_part ? -w : w;
}

}  // namespace detail

// lambda^+: conditions at odd indices 1, 3, 5, ...
inline int lambda_plus(const RosserWeightSystem& sys, std::int64_t d) { return detail::rosser(sys, d, 1); }

// lambda^-: conditions at even indices 2, 4, ...; the index-0 condition is vacuous.
inline int lambda_minus(const RosserWeightSystem& sys, std::int64_t d) { return detail::rosser(sys, d, 0); }

inline int Lambda_minus(const RosserWeightSystem& sys, std::int64_t d) {
    return 3 * lambda_minus(sys, d) - 2 * lambda_plus(sys, d);
}

inline int mobius_weight(const RosserWeightSystem& sys, std::int64_t d) {
    auto s = detail::split_divisor(sys, d);
    int w = s.odd_primes.size() % 2 == 0 ? 1 : -1;
    return s.two_part ? -w : w;
}

// Divisors of a squarefree c (optionally carrying the 2^a pseudo-prime).
inline std::vector<std::int64_t> squarefree_divisors(const RosserWeightSystem& sys, std::int64_t c) {
    auto s = detail::split_divisor(sys, c);
    std::vector<std::int64_t> out{1};
    auto gens = s.odd_primes;
    if (s.two_part) gens.push_back(std::int64_t{1} << *sys.two_adic_a);
    for (auto g : gens) {
        const std::size_t n = out.size();
        for (std::size_t i = 0; i < n; ++i) out.push_back(out[i] * g);
    }
    std::sort(out.begin(), out.end());
    return out;
}

struct DivisorSums {
    int lambda_minus = 0;
    int mu = 0;
    int lambda_plus = 0;
};

inline DivisorSums divisor_sums(const RosserWeightSystem& sys, std::int64_t c) {
    DivisorSums s;
    for (auto d : squarefree_divisors(sys, c)) {
        s.lambda_minus += lambda_minus(sys, d);
        s.mu += mobius_weight(sys, d);
        s.lambda_plus += lambda_plus(sys, d);
    }
    return s;
}

inline bool fundamental_inequality_check(const RosserWeightSystem& sys, std::int64_t c) {
    auto s = divisor_sums(sys, c);
    return s.lambda_minus <= s.mu && s.mu <= s.lambda_plus;
}

struct TripleProductCheck {
    std::int64_t lhs = 0;
    std::int64_t rhs = 0;
    bool holds() const { return lhs >= rhs; }
};

// prod_j sum mu  >=  sum_k sum lambda^-_{d_k} prod_{j != k} sum lambda^+  -  2 prod_j sum lambda^+,
// both sides expanded over all (d1, d2, d3) with d_j | c_j.
inline TripleProductCheck triple_product_inequality_check(const RosserWeightSystem& sys, std::int64_t c1,
                                                          std::int64_t c2, std::int64_t c3) {
    struct W {
        int lm, mu, lp;
    };
    auto weights = [&](std::int64_t c) {
        std::vector<W> v;
        for (auto d : squarefree_divisors(sys, c))
            v.push_back({lambda_minus(sys, d), mobius_weight(sys, d), lambda_plus(sys, d)});
        return v;
    };
    auto w1 = weights(c1), w2 = weights(c2), w3 = weights(c3);
    TripleProductCheck r;
    for (auto& a : w1)
        for (auto& b : w2)
            for (auto& c : w3) {
                r.lhs += a.mu * b.mu * c.mu;
                r.rhs += a.lm * b.lp * c.lp + a.lp * b.lm * c.lp + a.lp * b.lp * c.lm - 2 * a.lp * b.lp * c.lp;
            }
    return r;
}

struct TransformCheck {
    std::int64_t lhs = 0;  // S_{a,h}(A_ell, P1 u P2)
    std::int64_t rhs = 0;  // sum Lambda^- lambda^+ lambda^+ S_{a,h}(A_{d ell}, P1)
    std::int64_t terms = 0;
    bool holds() const { return lhs >= rhs; }
};

// Lower sieve transform with brute-force counts on both sides. The counts for
// A_{d ell} are taken from the representations of A_ell that satisfy d_j ell_j | x_j,
// which is the same set enumerate_representations(d ell) produces.
inline TransformCheck sieve_lower_transform_check(const PolygonalFamily& fam, std::int64_t n,
                                                  const std::vector<std::int64_t>& P1,
                                                  const std::vector<std::int64_t>& P2, int a,
                                                  const RosserWeightSystem& sys,
                                                  const DivisorTriple& ell = DivisorTriple::ones()) {
    check_prime_set(P1);
    check_prime_set(P2);
    for (auto p : P2) {
        if (std::find(P1.begin(), P1.end(), p) != P1.end()) throw domain_error("P1 and P2 must be disjoint");
        for (auto l : ell.d)
            if (l % p == 0) throw domain_error("primes of P2 must not divide ell");
    }
    std::vector<std::int64_t> both = P1;
    both.insert(both.end(), P2.begin(), P2.end());
    TransformCheck r;
    r.lhs = count_sieved(fam, n, ell, both, a).direct;

    std::int64_t R = 1;
    for (auto p : P2) R *= p;
    RosserWeightSystem odd_sys(sys.D, sys.beta);
    auto divs = squarefree_divisors(odd_sys, R);
    auto reps = enumerate_representations(fam, n, ell);
    const SieveFilter f{P1, a};
    for (auto d1 : divs) {
        int w1 = Lambda_minus(odd_sys, d1);
        if (w1 == 0) continue;
        for (auto d2 : divs) {
            int w2 = lambda_plus(odd_sys, d2);
            if (w2 == 0) continue;
            for (auto d3 : divs) {
                int w3 = lambda_plus(odd_sys, d3);
                if (w3 == 0) continue;
                std::array<std::int64_t, 3> div{d1 * ell[0], d2 * ell[1], d3 * ell[2]};
                r.rhs += static_cast<std::int64_t>(w1 * w2 * w3) * filtered_count(reps, div, f);
                ++r.terms;
            }
        }
    }
    return r;
}

}  // namespace polysieve
