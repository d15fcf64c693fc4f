#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "polysieve/polygonal.hpp"

namespace polysieve {

// How b_2 is evaluated. Printed is the closed form as published; Corrected
// replaces min ord_2(d_j) by max(1, min ord_2(d_j)), which is what the
// congruence count gives when some d_j is odd.
enum class TwoAdic { Printed, Corrected };

struct LocalDensityQuery {
    PolygonalFamily family;
    TargetInvariants target;
    std::array<std::int64_t, 3> d{1, 1, 1};
    std::int64_t p = 2;

    static LocalDensityQuery make(std::int64_t m, std::int64_t n, std::array<std::int64_t, 3> d,
                                  std::int64_t p) {
        PolygonalFamily fam(m);
        if (!is_prime(p)) throw domain_error("p = " + std::to_string(p) + " is not prime");
        for (auto x : d)
            if (x < 1) throw domain_error("divisor components must be positive");
        return LocalDensityQuery{fam, target_invariants(fam, n), d, p};
    }

    std::int64_t e1() const { return 2 * (family.m - 2) * d[0] * d[1] * d[2]; }
};

inline int psi_h(const TargetInvariants& target, std::int64_t p) {
    return kronecker(target.decomposition().delta, p);
}

inline Rational gamma_p(const TargetInvariants& target, std::int64_t p) {
    if (p == 2) throw domain_error("gamma_p is defined for odd p only");
    int a = ord_p(target.h, p);
    int k = a / 2;
    Rational num = 1 - rpow(p, -(k + 1)) - psi_h(target, p) * rpow(p, -1) * (1 - rpow(p, -k));
    return num / (1 - rpow(p, -1));
}

namespace detail {

inline int min_ord(const std::array<std::int64_t, 3>& d, std::int64_t p) {
    return std::min({ord_p(d[0], p), ord_p(d[1], p), ord_p(d[2], p)});
}

inline Rational b2(const LocalDensityQuery& q, TwoAdic mode) {
    const auto& fam = q.family;
    int k = min_ord(q.d, 2);
    if (mode == TwoAdic::Corrected) k = std::max(1, k);
    // 8(m-2)n in 4 gcd(d) Z_2, read 2-adically
    int lhs = ord_p(8 * (fam.m - 2) * q.target.n, 2);
    int need = 2 + (mode == TwoAdic::Corrected ? k : ord_p(std::gcd(std::gcd(q.d[0], q.d[1]), q.d[2]), 2));
    return lhs >= need ? rpow(2, 2 + k) : Rational(0);
}

inline Rational bp_divides_m2(const LocalDensityQuery& q) {
    const auto p = q.p;
    std::int64_t g = std::gcd(std::gcd(q.d[0], q.d[1]), q.d[2]);
    if (ord_p(q.target.n, p) >= ord_p(g, p)) return rpow(p, ord_p(q.family.m - 2, p) + min_ord(q.d, p));
    return 0;
}

inline void require_squarefree_at(const LocalDensityQuery& q) {
    for (auto x : q.d)
        if (ord_p(x, q.p) > 1)
            throw domain_error("d_j must be squarefree at p = " + std::to_string(q.p));
}

inline Rational bp_generic(const LocalDensityQuery& q) {
    require_squarefree_at(q);
    const auto p = q.p;
    const auto& fam = q.family;
    int k = 0;
    for (auto x : q.d)
        if (x % p != 0) ++k;
    std::int64_t N = 8 * (fam.m - 2) * q.target.n + k * (fam.m - 4) * (fam.m - 4);
    bool pN = N % p == 0;
    switch (k) {
        case 2: return 1 + Rational(kronecker(-1, p)) / p * (pN ? p - 1 : -1);
        case 1: return Rational(1 + kronecker(N, p));
        case 0: return pN ? Rational(p) : Rational(0);
    }
    throw std::logic_error("bp_generic: p divides no d_j");
}

inline Rational bp_divides_m4(const LocalDensityQuery& q) {
    require_squarefree_at(q);
    const auto p = q.p;
    int a = ord_p(q.target.h, p);
    std::int64_t u = q.target.h / ipow(p, a);
    int e = 0;
    for (auto x : q.d)
        if (x % p == 0) ++e;
    const int chi = kronecker(-u, p);
    const int chi_pow = (a + 1) % 2 == 0 ? chi * chi : chi;
    const int sgn = a % 2 == 0 ? 1 : -1;
    const int fl = a / 2, cl = (a + 1) / 2;
    auto tail = [&](int shift) -> Rational {
        return -rpow(p, -(fl - shift)) + Rational(sgn * chi_pow) * rpow(p, -(cl - shift));
    };
    const int m1 = kronecker(-1, p);
    switch (e) {
        case 1:
            if (a >= 2) return 2 + (1 - rpow(p, -1)) * m1 + tail(0);
            if (a == 1) return (1 - rpow(p, -1)) * (1 + m1);
            return 1 - Rational(m1) / p;
        case 2:
            if (a >= 2) return 1 + p + tail(1);
            if (a == 1) return 0;
            return Rational(1 + kronecker(u, p));
        case 3:
            if (a >= 2) return p * p + p + tail(2);
            return 0;
    }
    throw std::logic_error("bp_divides_m4: p divides no d_j");
}

}  // namespace detail

// Closed-form b_p(h, lambda_d, 0) for p | 2(m-2)d1d2d3.
inline Rational local_density(const LocalDensityQuery& q, TwoAdic mode = TwoAdic::Printed) {
    if (q.e1() % q.p != 0)
        throw domain_error("p = " + std::to_string(q.p) + " does not divide 2(m-2)d1d2d3; use gamma_p");
    if (q.p == 2) return detail::b2(q, mode);
    if ((q.family.m - 2) % q.p == 0) return detail::bp_divides_m2(q);
    if ((q.family.m - 4) % q.p != 0) return detail::bp_generic(q);
    return detail::bp_divides_m4(q);
}

inline Rational local_density_2adic_corrected(const LocalDensityQuery& q) {
    return local_density(q, TwoAdic::Corrected);
}

namespace detail {

inline int vp128(i128 x, std::int64_t p) {
    if (x == 0) return kOrdInfinity;
    if (x < 0) x = -x;
    int k = 0;
    while (x % p == 0) {
        x /= p;
        ++k;
    }
    return k;
}

inline i128 pow128(std::int64_t p, int e) {
    i128 r = 1;
    while (e-- > 0) r *= p;
    return r;
}

inline i128 mod128(i128 x, i128 m) {
    i128 r = x % m;
    return r < 0 ? r + m : r;
}

// Coordinate j ranges over the ball r + p^v Z_p (Haar measure normalized to 1).
struct Ball {
    i128 r;
    int v;
};

// Probability that sum X_j^2 = h (mod p^t) when each X_j is uniform on its ball.
// A ball whose square is constant mod p^k is resolved directly; a ball whose
// square is linear in the free variable with a unit slope equidistributes the
// remaining digits; otherwise the ball is split into p children.
inline Rational ball_probability(std::array<Ball, 3> balls, i128 h, std::int64_t p, int t) {
    i128 C = 0;
    int kv[3];
    int k = kOrdInfinity;
    for (int j = 0; j < 3; ++j) {
        C += balls[j].r * balls[j].r;
        int lin = vp128(2 * balls[j].r, p);
        lin = lin == kOrdInfinity ? kOrdInfinity : lin + balls[j].v;
        kv[j] = std::min(lin, 2 * balls[j].v);
        k = std::min(k, kv[j]);
    }
    if (k >= t) return mod128(C - h, pow128(p, t)) == 0 ? Rational(1) : Rational(0);
    if (mod128(C - h, pow128(p, k)) != 0) return 0;
    for (int j = 0; j < 3; ++j) {
        int lin = vp128(2 * balls[j].r, p);
        if (lin != kOrdInfinity && lin + balls[j].v < 2 * balls[j].v && kv[j] == k) return rpow(p, -(t - k));
    }
    int j = 0;
    for (int i = 1; i < 3; ++i)
        if (kv[i] < kv[j]) j = i;
    Rational sum = 0;
    const Ball b = balls[j];
    const i128 pv = pow128(p, b.v), pv1 = pv * p;
    for (std::int64_t i = 0; i < p; ++i) {
        balls[j] = Ball{mod128(b.r + pv * i, pv1), b.v + 1};
        sum += ball_probability(balls, h, p, t);
    }
    balls[j] = b;
    return sum / p;
}

inline Rational density_at_level(const LocalDensityQuery& q, int t) {
    const auto& fam = q.family;
    std::array<Ball, 3> balls{};
    for (int j = 0; j < 3; ++j) {
        int v = ord_p(2 * (fam.m - 2) * q.d[j], q.p);
        balls[j] = Ball{mod128(4 - fam.m, pow128(q.p, v)), v};
    }
    return rpow(q.p, t) * ball_probability(balls, q.target.h, q.p, t);
}

}  // namespace detail

struct OracleResult {
    Rational value;
    int t = 0;
};

inline int default_oracle_t(const LocalDensityQuery& q) {
    const auto& fam = q.family;
    std::int64_t p = q.p;
    int o = ord_p(16, p) + 2 * ord_p(fam.m - 2, p) + 2 * (ord_p(q.d[0], p) + ord_p(q.d[1], p) + ord_p(q.d[2], p)) +
            ord_p(q.target.h, p);
    return o + 2;
}

// #{x mod p^t : sum_j (2(m-2)d_j x_j + 4 - m)^2 = h mod p^t} / p^{2t}, evaluated at
// t and t+1; a mismatch means t was too small and is reported as an error.
inline OracleResult local_density_oracle(const LocalDensityQuery& q, int t = 0) {
    if (t == 0) t = default_oracle_t(q);
    if (t < 1) throw domain_error("oracle precision t must be at least 1");
    Rational a = detail::density_at_level(q, t);
    Rational b = detail::density_at_level(q, t + 1);
    if (a != b)
        throw domain_error("local density oracle did not stabilize at t = " + std::to_string(t) + " (" +
                           to_string(a) + " vs " + to_string(b) + ")");
    return {a, t};
}

// Literal residue count for small p^t, used to certify the ball recursion.
inline Rational local_density_bruteforce(const LocalDensityQuery& q, int t) {
    const std::int64_t M = ipow(q.p, t);
    if (M > 4096) throw domain_error("bruteforce count limited to p^t <= 4096");
    const auto& fam = q.family;
    std::vector<std::int64_t> hist(static_cast<std::size_t>(M), 0);
    auto val = [&](int j, std::int64_t x) {
        std::int64_t X = (2 * (fam.m - 2) * q.d[j] % M * x + 4 - fam.m) % M;
        X = (X + M) % M;
        return X * X % M;
    };
    for (std::int64_t x = 0; x < M; ++x) ++hist[static_cast<std::size_t>(val(2, x))];
    std::int64_t count = 0;
    const std::int64_t hm = q.target.h % M;
    for (std::int64_t x1 = 0; x1 < M; ++x1)
        for (std::int64_t x2 = 0; x2 < M; ++x2) {
            std::int64_t need = ((hm - val(0, x1) - val(1, x2)) % M + 2 * M) % M;
            count += hist[static_cast<std::size_t>(need)];
        }
    Rational r(to_big(count), BigInt(M) * BigInt(M));
    r.canonicalize();
    return r;
}

}  // namespace polysieve
