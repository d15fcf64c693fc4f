#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <utility>
#include <vector>

#include "polysieve/localdensity.hpp"

namespace polysieve {

struct ClassNumberResult {
    std::int64_t delta = 0;
    std::int64_t h_delta = 0;
    int w_delta = 2;
};

namespace detail {

// Calls f(a, b, c) for every reduced form of discriminant D < 0:
// |b| <= a <= c, and b >= 0 whenever |b| = a or a = c.
template <class F>
void for_each_reduced_form(std::int64_t D, F&& f) {
    const std::int64_t N = -D;
    for (std::int64_t a = 1; 3 * a * a <= N; ++a)
        for (std::int64_t b = -a + 1; b <= a; ++b) {
            if (((b - D) % 2 + 2) % 2 != 0) continue;
            std::int64_t num = b * b - D;
            if (num % (4 * a) != 0) continue;
            std::int64_t c = num / (4 * a);
            if (c < a) continue;
            if (b < 0 && a == c) continue;
            f(a, b, c);
        }
}

}  // namespace detail

inline ClassNumberResult class_number(std::int64_t delta) {
    if (delta >= 0 || !is_fundamental_discriminant(delta))
        throw domain_error("class_number: " + std::to_string(delta) + " is not a negative fundamental discriminant");
    ClassNumberResult r;
    r.delta = delta;
    detail::for_each_reduced_form(delta, [&](std::int64_t a, std::int64_t b, std::int64_t c) {
        if (std::gcd(std::gcd(a, b < 0 ? -b : b), c) == 1) ++r.h_delta;
    });
    r.w_delta = delta == -3 ? 6 : delta == -4 ? 4 : 2;
    return r;
}

// Hurwitz class number: all reduced forms of discriminant -N, with forms
// equivalent to a(x^2+y^2) weighted 1/2 and a(x^2+xy+y^2) weighted 1/3.
inline Rational hurwitz_class_number(std::int64_t N) {
    if (N <= 0 || (N % 4 != 0 && N % 4 != 3)) throw domain_error("hurwitz_class_number: need N = 0 or 3 mod 4");
    Rational H = 0;
    detail::for_each_reduced_form(-N, [&](std::int64_t a, std::int64_t b, std::int64_t c) {
        if (a == b && b == c)
            H += rat(1, 3);
        else if (b == 0 && a == c)
            H += rat(1, 2);
        else
            H += 1;
    });
    return H;
}

// L(1, psi_h) = q * pi / sqrt(radicand).
struct LValue {
    Rational q;
    std::int64_t radicand = 0;
};

inline LValue l_value(const TargetInvariants& target) {
    auto cn = class_number(target.decomposition().delta);
    return {rat(2 * cn.h_delta, cn.w_delta), -cn.delta};
}

struct EisensteinCoefficient {
    Rational value;         // exact: sqrt(h) L(1, psi_h) / pi collapses to t * 2h(D)/w
    long double numeric = 0;  // evaluated from pi and square roots in floating point
    Rational local_factor;  // product over p | 2(m-2)d1d2d3
    Rational gamma_factor;  // product over p | h outside that set
    std::int64_t sqrt_dL = 0;
    std::int64_t t = 0;
    ClassNumberResult cls;
};

inline EisensteinCoefficient r_gen(const PolygonalFamily& fam, std::int64_t n, const std::array<std::int64_t, 3>& d,
                                   TwoAdic mode = TwoAdic::Printed) {
    fam.require_odd();
    auto target = target_invariants(fam, n);
    const auto& dd = target.decomposition();
    EisensteinCoefficient ec;
    ec.cls = class_number(dd.delta);
    ec.t = dd.t;
    ec.sqrt_dL = 8 * (fam.m - 2) * (fam.m - 2) * (fam.m - 2) * d[0] * d[1] * d[2];

    const std::int64_t e1 = 2 * (fam.m - 2) * d[0] * d[1] * d[2];
    ec.local_factor = 1;
    for (auto p : prime_divisors(e1)) {
        auto q = LocalDensityQuery{fam, target, d, p};
        Rational b = local_density(q, mode);
        ec.local_factor *= b * (1 - rat(psi_h(target, p), p)) / (1 - rpow(p, -2));
    }
    ec.gamma_factor = 1;
    for (auto p : prime_divisors(target.h))
        if (e1 % p != 0) ec.gamma_factor *= gamma_p(target, p);

    ec.value = rat(24 * ec.t * ec.cls.h_delta, ec.cls.w_delta * ec.sqrt_dL) * ec.local_factor * ec.gamma_factor;

    const long double pi = std::numbers::pi_v<long double>;
    const long double dL = static_cast<long double>(ec.sqrt_dL) * static_cast<long double>(ec.sqrt_dL);
    const long double L = 2 * pi * ec.cls.h_delta / (ec.cls.w_delta * std::sqrt(static_cast<long double>(-dd.delta)));
    ec.numeric = 12 / pi * std::sqrt(static_cast<long double>(target.h) / dL) * L *
                 static_cast<long double>(ec.local_factor.get_d()) * static_cast<long double>(ec.gamma_factor.get_d());
    return ec;
}

inline EisensteinCoefficient r_gen(const PolygonalFamily& fam, std::int64_t n, const DivisorTriple& d,
                                   TwoAdic mode = TwoAdic::Printed) {
    return r_gen(fam, n, d.d, mode);
}

struct CalibrationReport {
    bool constant = false;
    Rational kappa;  // ratio at the first n
    std::vector<std::pair<std::int64_t, Rational>> ratios;
};

// r_X / r_gen over n in [n_lo, n_hi] for the one-class family m = 3.
inline CalibrationReport siegel_calibration(const PolygonalFamily& fam, std::int64_t n_lo, std::int64_t n_hi,
                                            TwoAdic mode = TwoAdic::Printed) {
    if (fam.m != 3) throw domain_error("siegel_calibration requires m = 3");
    if (n_hi < n_lo || n_lo < 0) throw domain_error("empty calibration range");
    CalibrationReport rep;
    rep.constant = true;
    const auto one = DivisorTriple::ones();
    for (std::int64_t n = n_lo; n <= n_hi; ++n) {
        Rational ratio = Rational(r_X(fam, n, one)) / r_gen(fam, n, one, mode).value;
        if (rep.ratios.empty()) rep.kappa = ratio;
        if (ratio != rep.kappa) rep.constant = false;
        rep.ratios.emplace_back(n, ratio);
    }
    return rep;
}

inline Rational r_gen_lower_bound(const PolygonalFamily& fam, const TargetInvariants& target) {
    fam.require_odd();
    const auto& dd = target.decomposition();
    auto cls = class_number(dd.delta);
    Rational v = rat(24 * dd.t * cls.h_delta, cls.w_delta * (fam.m - 2) * (fam.m - 2));
    for (auto p : prime_divisors(fam.m - 2)) v *= rat(p, p + 1);
    v.canonicalize();
    return v;
}

struct LevelInvariants {
    std::int64_t N = 0;
    std::int64_t M = 0;
};

inline LevelInvariants level_invariants(const PolygonalFamily& fam, const DivisorTriple& d) {
    std::int64_t L = d.lcm();
    return {16 * (fam.m - 2) * (fam.m - 2) * L * L, 2 * (fam.m - 2) * L / std::gcd(fam.m - 4, L)};
}

}  // namespace polysieve
