#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "polysieve/rational.hpp"

namespace polysieve {

using u128 = unsigned __int128;
using i128 = __int128;

inline constexpr int kOrdInfinity = std::numeric_limits<int>::max();

inline std::string u128_to_string(u128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v > 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

inline BigInt to_big(u128 v) {
    BigInt r;
    mpz_import(r.get_mpz_t(), 1, -1, sizeof(u128), 0, 0, &v);
    return r;
}

// p-adic valuation; ord_p(0) is reported as kOrdInfinity.
inline int ord_p(std::int64_t x, std::int64_t p) {
    if (x == 0) return kOrdInfinity;
    int k = 0;
    while (x % p == 0) {
        x /= p;
        ++k;
    }
    return k;
}

inline std::int64_t ipow(std::int64_t b, int e) {
    std::int64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

// floor(sqrt(x)) exactly.
inline std::uint64_t isqrt(u128 x) {
    if (x == 0) return 0;
    auto r = static_cast<u128>(std::sqrt(static_cast<long double>(x)));
    while (r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    return static_cast<std::uint64_t>(r);
}

inline bool is_square(std::int64_t x, std::int64_t* root = nullptr) {
    if (x < 0) return false;
    auto r = static_cast<std::int64_t>(isqrt(static_cast<u128>(x)));
    if (root) *root = r;
    return r * r == x;
}

inline std::vector<int> primes_up_to(int n) {
    std::vector<int> out;
    if (n < 2) return out;
    std::vector<bool> comp(static_cast<std::size_t>(n) + 1, false);
    for (int i = 2; i <= n; ++i) {
        if (comp[i]) continue;
        out.push_back(i);
        for (long long j = static_cast<long long>(i) * i; j <= n; j += i) comp[j] = true;
    }
    return out;
}

namespace detail {

inline u128 mulmod(u128 a, u128 b, u128 n) {
    if (n <= (static_cast<u128>(1) << 64)) return (a * b) % n;
    u128 r = 0;
    a %= n;
    while (b > 0) {
        if (b & 1) r = (r >= n - a) ? r - (n - a) : r + a;
        a = (a >= n - a) ? a - (n - a) : a + a;
        b >>= 1;
    }
    return r;
}

inline u128 powmod(u128 a, u128 e, u128 n) {
    u128 r = 1 % n;
    a %= n;
    while (e > 0) {
        if (e & 1) r = mulmod(r, a, n);
        a = mulmod(a, a, n);
        e >>= 1;
    }
    return r;
}

inline u128 gcd128(u128 a, u128 b) {
    while (b != 0) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// The first 13 prime bases are deterministic below 3.3e24; larger inputs use
// additional bases and are probable primes only.
inline bool miller_rabin(u128 n) {
    if (n < 2) return false;
    static const int bases[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
                                43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};
    for (int p : bases) {
        if (n == static_cast<u128>(p)) return true;
        if (n % p == 0) return false;
    }
    u128 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (int a : bases) {
        u128 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

// Brent's variant of Pollard rho; n odd composite.
inline u128 pollard_brent(u128 n) {
    for (u128 c = 1;; ++c) {
        u128 y = 2, x = 2, g = 1, q = 1, ys = 2;
        const u128 m = 128;
        u128 r = 1;
        auto f = [&](u128 v) { return (mulmod(v, v, n) + c) % n; };
        do {
            x = y;
            for (u128 i = 0; i < r; ++i) y = f(y);
            u128 k = 0;
            do {
                ys = y;
                for (u128 i = 0; i < m && i < r - k; ++i) {
                    y = f(y);
                    q = mulmod(q, x > y ? x - y : y - x, n);
                }
                g = gcd128(q, n);
                k += m;
            } while (k < r && g == 1);
            r <<= 1;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                g = gcd128(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

inline void split(u128 n, std::vector<u128>& out) {
    if (n == 1) return;
    if (miller_rabin(n)) {
        out.push_back(n);
        return;
    }
    u128 f = pollard_brent(n);
    split(f, out);
    split(n / f, out);
}

}  // namespace detail

inline bool is_prime(std::int64_t n) { return n >= 2 && detail::miller_rabin(static_cast<u128>(n)); }

struct FactoredInteger {
    u128 value = 1;
    std::vector<std::pair<u128, int>> factors;

    int ord(u128 p) const {
        for (auto& [q, e] : factors)
            if (q == p) return e;
        return 0;
    }
    int omega() const { return static_cast<int>(factors.size()); }
    int big_omega() const {
        int s = 0;
        for (auto& f : factors) s += f.second;
        return s;
    }
    BigInt sigma0() const {
        BigInt r = 1;
        for (auto& f : factors) r *= f.second + 1;
        return r;
    }
    // sigma(n)/n
    Rational sigma_minus1() const {
        Rational r = 1;
        for (auto& [p, e] : factors) {
            BigInt P = to_big(p), pk = 1, s = 0;
            for (int i = 0; i <= e; ++i) {
                s += pk;
                pk *= P;
            }
            r *= Rational(s, pk / P);
        }
        r.canonicalize();
        return r;
    }
    BigInt phi() const {
        BigInt r = 1;
        for (auto& [p, e] : factors) {
            BigInt P = to_big(p);
            r *= P - 1;
            for (int i = 1; i < e; ++i) r *= P;
        }
        return r;
    }
    BigInt product() const {
        BigInt r = 1;
        for (auto& [p, e] : factors)
            for (int i = 0; i < e; ++i) r *= to_big(p);
        return r;
    }
};

// Values below 10^6 are handled by trial division alone; above that, small
// factors are stripped by trial division and the cofactor goes to Pollard rho.
inline FactoredInteger factorize(u128 x) {
    if (x == 0) throw domain_error("factorize: x = 0 has no factorization");
    FactoredInteger fi;
    fi.value = x;
    std::vector<u128> primes;
    const u128 trial_limit = x < 1000000 ? x : 1000;
    for (u128 p = 2; p * p <= x && p <= trial_limit; p += (p == 2 ? 1 : 2)) {
        while (x % p == 0) {
            primes.push_back(p);
            x /= p;
        }
    }
    if (x > 1) {
        if (fi.value < 1000000)
            primes.push_back(x);
        else
            detail::split(x, primes);
    }
    std::sort(primes.begin(), primes.end());
    for (u128 p : primes) {
        if (!fi.factors.empty() && fi.factors.back().first == p)
            ++fi.factors.back().second;
        else
            fi.factors.emplace_back(p, 1);
    }
    if (fi.product() != to_big(fi.value)) throw std::logic_error("factorize: reconstruction failed");
    return fi;
}

inline FactoredInteger factorize(std::int64_t x) {
    if (x <= 0) throw domain_error("factorize: x must be positive");
    return factorize(static_cast<u128>(x));
}

inline std::vector<std::int64_t> prime_divisors(std::int64_t x) {
    std::vector<std::int64_t> out;
    if (x < 0) x = -x;
    for (auto& f : factorize(x).factors) out.push_back(static_cast<std::int64_t>(f.first));
    return out;
}

inline int big_omega(std::int64_t x) {
    if (x == 0) throw domain_error("big_omega: every prime divides 0");
    return factorize(x < 0 ? -x : x).big_omega();
}

inline std::int64_t squarefree_part(std::int64_t h) {
    if (h < 1) throw domain_error("squarefree_part: h must be positive");
    std::int64_t s = 1;
    for (auto& [p, e] : factorize(h).factors)
        if (e % 2 == 1) s *= static_cast<std::int64_t>(p);
    return s;
}

inline bool is_squarefree(std::int64_t x) {
    if (x == 0) return false;
    for (auto& f : factorize(x < 0 ? -x : x).factors)
        if (f.second > 1) return false;
    return true;
}

// Kronecker symbol (a/b), completely multiplicative in both arguments.
inline int kronecker(std::int64_t a, std::int64_t b) {
    if (b == 0) return (a == 1 || a == -1) ? 1 : 0;
    if (a % 2 == 0 && b % 2 == 0) return 0;
    static const int tab2[8] = {0, 1, 0, -1, 0, -1, 0, 1};
    int v = 0;
    while (b % 2 == 0) {
        ++v;
        b /= 2;
    }
    int k = (v % 2 == 0) ? 1 : tab2[((a % 8) + 8) % 8];
    if (b < 0) {
        b = -b;
        if (a < 0) k = -k;
    }
    a %= b;
    if (a < 0) a += b;
    while (a != 0) {
        v = 0;
        while (a % 2 == 0) {
            ++v;
            a /= 2;
        }
        if (v % 2 == 1) k *= tab2[b % 8];
        if (a & b & 2) k = -k;
        std::int64_t r = b % a;
        b = a;
        a = r;
    }
    return b == 1 ? k : 0;
}

inline bool is_fundamental_discriminant(std::int64_t D) {
    if (D == 0 || D == 1) return false;
    std::int64_t r = ((D % 4) + 4) % 4;
    if (r == 1) return is_squarefree(D);
    if (r != 0) return false;
    std::int64_t q = D / 4;
    std::int64_t q4 = ((q % 4) + 4) % 4;
    return (q4 == 2 || q4 == 3) && is_squarefree(q);
}

struct DiscriminantDecomposition {
    std::int64_t delta = 0;  // negative fundamental discriminant
    std::int64_t t = 0;      // -h = delta * t^2
};

inline DiscriminantDecomposition fundamental_decomposition(std::int64_t h) {
    if (h < 1) throw domain_error("fundamental_decomposition: h must be positive");
    std::int64_t sf = squarefree_part(h);
    std::int64_t s = 0;
    is_square(h / sf, &s);
    DiscriminantDecomposition dd;
    if (((-sf) % 4 + 4) % 4 == 1) {
        dd.delta = -sf;
        dd.t = s;
    } else {
        if (s % 2 != 0)
            throw domain_error("fundamental_decomposition: no fundamental discriminant for h = " +
                               std::to_string(h));
        dd.delta = -4 * sf;
        dd.t = s / 2;
    }
    return dd;
}

}  // namespace polysieve
