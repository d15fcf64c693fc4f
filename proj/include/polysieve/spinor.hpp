#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "polysieve/polygonal.hpp"

namespace polysieve {

enum class SpinorKind {
    UnitsTimesSquares,     // Z_p^x (Q_p^x)^2
    SquaresOnly,           // (Q_p^x)^2
    IntegersTimesSquares,  // Z_2 (Q_2^x)^2, the group at p = 2; as a set it is all of Q_2^x
};

inline const char* to_string(SpinorKind k) {
    switch (k) {
        case SpinorKind::UnitsTimesSquares: return "Zp^x(Qp^x)^2";
        case SpinorKind::SquaresOnly: return "(Qp^x)^2";
        default: return "Z2(Q2^x)^2";
    }
}

struct SpinorNormGroup {
    SpinorKind kind;
    std::string case_label;  // "1", "2a", "2b", "2c", "2d" or "p=2"

    bool contains_units() const { return kind != SpinorKind::SquaresOnly; }
    bool contains_uniformizer() const { return kind == SpinorKind::IntegersTimesSquares; }
};

inline SpinorNormGroup spinor_norm_group(std::int64_t p, const PolygonalFamily& fam, const std::array<std::int64_t, 3>& d) {
    if (!is_prime(p)) throw domain_error("p must be prime");
    for (auto x : d) {
        if (x < 1) throw domain_error("d_j must be positive");
        std::int64_t odd = x >> ord_p(x, 2);
        if (!is_squarefree(odd)) throw domain_error("hypothesis: odd part of each d_j squarefree");
    }
    if (p == 2) {
        if (!fam.m_odd()) throw domain_error("hypothesis at p = 2: m odd");
        for (auto x : d)
            if (x % 2 == 0) throw domain_error("hypothesis at p = 2: d in S_1^3 (all d_j odd)");
        return {SpinorKind::IntegersTimesSquares, "p=2"};
    }
    const bool pm2 = (fam.m - 2) % p == 0;
    int cnt = 0;
    for (auto x : d)
        if (x % p == 0) ++cnt;
    if (!pm2 && cnt == 0) return {SpinorKind::UnitsTimesSquares, "1"};
    if (cnt == 0 || cnt == 3)
        return {p == 3 ? SpinorKind::SquaresOnly : SpinorKind::UnitsTimesSquares, "2a"};
    if (cnt == 1) return {pm2 ? SpinorKind::SquaresOnly : SpinorKind::UnitsTimesSquares, "2b"};
    if (!pm2) {
        if ((fam.m - 4) % p == 0 || kronecker(2, p) == -1) return {SpinorKind::UnitsTimesSquares, "2c"};
        return {SpinorKind::SquaresOnly, "2c"};
    }
    return {SpinorKind::SquaresOnly, "2d"};
}

struct GenusSpinorWitness {
    bool equal = false;
    std::vector<std::pair<std::int64_t, SpinorNormGroup>> table;  // primes where the group is not forced
    std::vector<std::int64_t> squares_only_primes;
    std::vector<std::int64_t> absorbing;  // positive rationals used to fix the square class
};

// Index-one test [I_Q : Q^x prod_p theta_p] for d = 1. After writing an idele as
// a rational times a unit idele j, j lies in the product except at primes whose
// group is (Q_p^x)^2; there j_p has one of two unit square classes. A positive
// rational a can repair these when it lies in theta_q at every other q. The only
// such generator is 2 (a unit at odd q, and in the p = 2 group), so the index is
// one iff the classes of 2 span prod_{p in T} Z_p^x/(Z_p^x)^2.
inline GenusSpinorWitness genus_equals_spinor_genus_d1(const PolygonalFamily& fam) {
    fam.require_odd();
    const std::array<std::int64_t, 3> one{1, 1, 1};
    GenusSpinorWitness w;
    std::set<std::int64_t> primes{2, 3};
    for (auto p : prime_divisors(fam.m - 2)) primes.insert(p);
    for (auto p : primes) {
        auto g = spinor_norm_group(p, fam, one);
        w.table.emplace_back(p, g);
        if (!g.contains_units()) w.squares_only_primes.push_back(p);
    }
    std::vector<std::int64_t> gens;
    if (spinor_norm_group(2, fam, one).contains_uniformizer()) gens.push_back(2);
    // rank over F_2 of the square-class vectors of the generators at primes in T
    const auto& T = w.squares_only_primes;
    std::vector<unsigned> rows;
    for (auto g : gens) {
        unsigned v = 0;
        for (std::size_t i = 0; i < T.size(); ++i)
            if (kronecker(g, T[i]) == -1) v |= 1u << i;
        rows.push_back(v);
    }
    std::size_t rank = 0;
    for (std::size_t bit = 0; bit < T.size(); ++bit) {
        for (std::size_t r = rank; r < rows.size(); ++r)
            if (rows[r] >> bit & 1) {
                std::swap(rows[r], rows[rank]);
                for (std::size_t s = 0; s < rows.size(); ++s)
                    if (s != rank && (rows[s] >> bit & 1)) rows[s] ^= rows[rank];
                ++rank;
                break;
            }
    }
    w.equal = rank == T.size();
    if (!T.empty() && w.equal) w.absorbing = gens;
    return w;
}

// Re-derives the 2-adic obstruction: every value sum (2(m-2)d_j x_j + 4 - m)^2 is
// 3 mod 8, while t x^2 with -t a 2-adic square (t = 7 mod 8) is never 3 mod 8.
inline bool theta_spn_equals_gen_odd(const PolygonalFamily& fam, const std::array<std::int64_t, 3>& d) {
    fam.require_odd();
    for (auto x : d)
        if (x < 1 || x % 2 == 0 || !is_squarefree(x)) throw domain_error("d must lie in S_1^3");
    for (int x = 1; x < 8; x += 2)
        if (x * x % 8 != 1) return false;
    std::set<int> q_values;
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b)
            for (int c = 0; c < 8; ++c) {
                std::int64_t s = 0;
                for (auto [dj, xj] : {std::pair{d[0], a}, std::pair{d[1], b}, std::pair{d[2], c}}) {
                    std::int64_t X = 2 * (fam.m - 2) * dj * xj + 4 - fam.m;
                    s += X * X;
                }
                q_values.insert(static_cast<int>(((s % 8) + 8) % 8));
            }
    if (q_values != std::set<int>{3}) return false;
    // odd squarefree t with -t a square in Q_2: -t = 1 mod 8
    for (int t = 1; t < 8; t += 2) {
        if ((8 - t) % 8 != 1) continue;
        for (int x = 0; x < 8; ++x)
            if (q_values.count(t * x * x % 8)) return false;
    }
    return true;
}

struct UnaryObstructionReport {
    bool supported = false;
    Rational bound;  // 2^{-a1-a2-a3+min a_j}
    std::optional<std::int64_t> failing_prime;
    std::string condition;
};

inline UnaryObstructionReport unary_obstruction_support(const PolygonalFamily& fam, const TargetInvariants& target,
                                                        const std::array<std::int64_t, 3>& d,
                                                        const std::array<int, 3>& a) {
    for (auto x : d)
        if (x < 1 || x % 2 == 0 || !is_squarefree(x)) throw domain_error("d must lie in S_1^3");
    for (int x : a)
        if (x < 0) throw domain_error("a must be nonnegative");
    UnaryObstructionReport r;
    r.bound = rpow(2, -(a[0] + a[1] + a[2]) + std::min({a[0], a[1], a[2]}));
    if (a[0] == 0 && a[1] == 0 && a[2] == 0) {
        r.condition = "a = 0: the coefficient vanishes for odd d";
        return r;
    }
    for (auto p : prime_divisors(target.sf_h)) {
        int cnt = 0;
        for (auto x : d)
            if (x % p == 0) ++cnt;
        const bool c1 = 3 % p != 0 && (fam.m - 2) % p != 0 && (fam.m - 4) % p != 0 && cnt == 2 && kronecker(2, p) == 1;
        const bool c2 = p == 3 && ((fam.m - 2) % 3 == 0 || cnt == 3);
        if (!c1 && !c2) {
            r.failing_prime = p;
            r.condition = "p = " + std::to_string(p) + ": #{j : p | d_j} = " + std::to_string(cnt) +
                          "; needs p not dividing 3(m-2)(m-4), two d_j divisible by p and (2/p) = 1, "
                          "or p = 3 with 3 | m-2 or 3 dividing all d_j";
            return r;
        }
    }
    r.supported = true;
    r.condition = "every prime of sf(h) satisfies the support conditions";
    return r;
}

}  // namespace polysieve
