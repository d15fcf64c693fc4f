#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "polysieve/arith.hpp"

namespace polysieve {

struct PolygonalFamily {
    std::int64_t m = 3;

    explicit PolygonalFamily(std::int64_t m_ = 3) : m(m_) {
        if (m < 3) throw domain_error("m must be at least 3");
    }
    bool m_odd() const { return m % 2 != 0; }
    bool m_mod3_ok() const { return m % 3 != 1; }
    bool m_mod5_ok() const { return m % 5 != 4; }
    std::int64_t e() const { return m - 2; }  // m - 2
    std::int64_t f() const { return m - 4; }  // m - 4
    void require_odd() const {
        if (!m_odd()) throw domain_error("m = " + std::to_string(m) + " is even; odd m required");
    }
};

inline std::int64_t p_m(const PolygonalFamily& fam, std::int64_t x) {
    return ((fam.m - 2) * x * x - (fam.m - 4) * x) / 2;
}

struct TargetInvariants {
    std::int64_t n = 0;
    std::int64_t h = 0;
    std::int64_t sf_h = 0;
    std::optional<DiscriminantDecomposition> disc;

    const DiscriminantDecomposition& decomposition() const {
        if (!disc) throw domain_error("h = " + std::to_string(h) + " has no fundamental decomposition");
        return *disc;
    }
};

inline std::int64_t target_h(const PolygonalFamily& fam, std::int64_t n) {
    return 8 * (fam.m - 2) * n + 3 * (fam.m - 4) * (fam.m - 4);
}

inline TargetInvariants target_invariants(const PolygonalFamily& fam, std::int64_t n) {
    if (n < 0) throw domain_error("n must be nonnegative");
    TargetInvariants t;
    t.n = n;
    t.h = target_h(fam, n);
    if (fam.m_odd() && t.h % 8 != 3) throw std::logic_error("h is not 3 mod 8 for odd m");
    t.sf_h = squarefree_part(t.h);
    try {
        t.disc = fundamental_decomposition(t.h);
    } catch (const domain_error&) {
        t.disc.reset();
    }
    return t;
}

struct DivisorTriple {
    std::array<std::int64_t, 3> d{1, 1, 1};
    int two_adic_a = 0;

    std::int64_t operator[](int j) const { return d[static_cast<std::size_t>(j)]; }
    std::int64_t product() const { return d[0] * d[1] * d[2]; }
    std::int64_t lcm() const { return std::lcm(std::lcm(d[0], d[1]), d[2]); }
    std::int64_t gcd() const { return std::gcd(std::gcd(d[0], d[1]), d[2]); }
    bool all_odd() const { return d[0] % 2 && d[1] % 2 && d[2] % 2; }

    static DivisorTriple make(std::int64_t d1, std::int64_t d2, std::int64_t d3) {
        DivisorTriple t;
        t.d = {d1, d2, d3};
        int a = 0;
        for (auto x : t.d) {
            if (x < 1) throw domain_error("divisor components must be positive");
            a = std::max(a, ord_p(x, 2));
        }
        for (auto x : t.d) {
            int k = ord_p(x, 2);
            if (k != 0 && k != a) throw domain_error("2-parts of d must be 1 or a common 2^a");
            if (!is_squarefree(x >> k)) throw domain_error("odd part of d must be squarefree");
        }
        t.two_adic_a = a;
        return t;
    }
    static DivisorTriple ones() { return make(1, 1, 1); }
};

using RepresentationTriple = std::array<std::int64_t, 3>;

// Visits every (x1,x2,x3) with d_j | x_j and sum p_m(x_j) = n, in lexicographic
// order, through the completed-square form sum X_j^2 = h.
template <class F>
void for_each_representation(const PolygonalFamily& fam, std::int64_t n,
                             const std::array<std::int64_t, 3>& d, F&& visit) {
    if (n < 0) return;
    const std::int64_t h = target_h(fam, n);
    const std::int64_t s = 4 - fam.m;
    const std::int64_t step[3] = {2 * (fam.m - 2) * d[0], 2 * (fam.m - 2) * d[1],
                                  2 * (fam.m - 2) * d[2]};
    const auto root = static_cast<std::int64_t>(isqrt(static_cast<u128>(h)));
    auto lo = [&](int j, std::int64_t bound) {
        // smallest x with step*x + s >= -bound
        std::int64_t num = -bound - s;
        std::int64_t q = num / step[j];
        if (q * step[j] < num) ++q;
        return q;
    };
    for (std::int64_t x1 = lo(0, root);; ++x1) {
        std::int64_t X1 = step[0] * x1 + s;
        if (X1 > root) break;
        std::int64_t r1 = h - X1 * X1;
        if (r1 < 0) continue;
        auto root2 = static_cast<std::int64_t>(isqrt(static_cast<u128>(r1)));
        for (std::int64_t x2 = lo(1, root2);; ++x2) {
            std::int64_t X2 = step[1] * x2 + s;
            if (X2 > root2) break;
            std::int64_t r2 = r1 - X2 * X2;
            if (r2 < 0) continue;
            std::int64_t X3 = 0;
            if (!is_square(r2, &X3)) continue;
            for (std::int64_t cand : {-X3, X3}) {
                std::int64_t diff = cand - s;
                if (diff % step[2] == 0) visit(RepresentationTriple{d[0] * x1, d[1] * x2, d[2] * (diff / step[2])});
                if (X3 == 0) break;  // +0 and -0 coincide
            }
        }
    }
}

inline std::vector<RepresentationTriple> enumerate_representations(const PolygonalFamily& fam,
                                                                   std::int64_t n,
                                                                   const DivisorTriple& d) {
    std::vector<RepresentationTriple> out;
    for_each_representation(fam, n, d.d, [&](const RepresentationTriple& x) { out.push_back(x); });
    return out;
}

inline std::int64_t r_X(const PolygonalFamily& fam, std::int64_t n, const DivisorTriple& d) {
    std::int64_t c = 0;
    for_each_representation(fam, n, d.d, [&](const RepresentationTriple&) { ++c; });
    return c;
}

struct SieveFilter {
    std::vector<std::int64_t> primes;  // odd primes to avoid
    std::optional<int> a;              // 2-adic cap: ord_2 < a
    bool excludes_zero() const { return !primes.empty() || a.has_value(); }
    bool admits(std::int64_t y) const {
        if (y == 0) return !excludes_zero();
        for (auto p : primes)
            if (y % p == 0) return false;
        if (a && ord_p(y, 2) >= *a) return false;
        return true;
    }
};

// Counts outer representations x whose inner coordinates y_j = x_j / div_j are
// integers admitted by the filter.
inline std::int64_t filtered_count(const std::vector<RepresentationTriple>& reps,
                                   const std::array<std::int64_t, 3>& div, const SieveFilter& f) {
    std::int64_t c = 0;
    for (const auto& x : reps) {
        bool ok = true;
        for (int j = 0; j < 3 && ok; ++j) {
            if (x[j] % div[j] != 0)
                ok = false;
            else
                ok = f.admits(x[j] / div[j]);
        }
        if (ok) ++c;
    }
    return c;
}

struct SievedCount {
    std::int64_t direct = 0;
    std::optional<std::int64_t> inclusion_exclusion;
};

inline void check_prime_set(const std::vector<std::int64_t>& P) {
    for (auto p : P)
        if (p < 3 || !is_prime(p)) throw domain_error("P must consist of odd primes");
}

// |S_h(A_ell, P)|, and |S_{a,h}(A_ell, P)| when a is given. With a, the value is
// computed both directly and by the Moebius sum over 2^{a alpha} ell, which
// must agree.
inline SievedCount count_sieved(const PolygonalFamily& fam, std::int64_t n, const DivisorTriple& ell,
                                const std::vector<std::int64_t>& P, std::optional<int> a = std::nullopt) {
    check_prime_set(P);
    if (a && *a < 1) throw domain_error("2-adic cap a must be positive");
    SievedCount out;
    auto reps = enumerate_representations(fam, n, ell);
    out.direct = filtered_count(reps, ell.d, SieveFilter{P, a});
    if (!a) return out;
    std::int64_t total = 0;
    for (int mask = 0; mask < 8; ++mask) {
        std::array<std::int64_t, 3> div = ell.d;
        int sign = 1;
        for (int j = 0; j < 3; ++j)
            if (mask >> j & 1) {
                div[static_cast<std::size_t>(j)] <<= *a;
                sign = -sign;
            }
        std::vector<RepresentationTriple> sub;
        for_each_representation(fam, n, div, [&](const RepresentationTriple& x) { sub.push_back(x); });
        total += sign * filtered_count(sub, div, SieveFilter{P, std::nullopt});
    }
    out.inclusion_exclusion = total;
    if (total != out.direct) throw std::logic_error("count_sieved: inclusion-exclusion disagrees with direct count");
    return out;
}

}  // namespace polysieve
