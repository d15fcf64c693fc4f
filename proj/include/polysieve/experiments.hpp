#pragma once

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <nlohmann/json.hpp>

#include "polysieve/polygonal.hpp"

namespace polysieve {

enum class AllowedSetMode { OmegaBudget, ZeroOnePrime };

inline const char* to_string(AllowedSetMode m) {
    return m == AllowedSetMode::OmegaBudget ? "omega_budget" : "zero_one_prime";
}

struct ScanConfig {
    std::int64_t m = 3;
    std::int64_t limit = 1;
    int max_omega = 2;
    bool allow_zero = true;
    bool nonneg = true;
    AllowedSetMode mode = AllowedSetMode::OmegaBudget;
    std::size_t exception_cap = 100000;
    int threads = 0;  // 0: POLYSIEVE_THREADS or hardware concurrency

    void validate() const {
        PolygonalFamily{m};
        if (limit < 1) throw domain_error("scan limit must be at least 1");
        if (limit > 100000000) throw domain_error("scan limit above 10^8 is out of scope");
        if (max_omega < 0) throw domain_error("max_omega must be nonnegative");
    }

    // zero_one_prime admits 0 by definition; the echo should say so
    ScanConfig normalized() const {
        ScanConfig c = *this;
        if (c.mode == AllowedSetMode::ZeroOnePrime) c.allow_zero = true;
        return c;
    }
};

struct ScanReport {
    ScanConfig config;
    std::int64_t representable_count = 0;
    std::vector<std::int64_t> exceptions;  // ascending, at most config.exception_cap
    std::int64_t exception_total = 0;
    Rational density;  // representable_count / (limit + 1), n ranging over 0..limit
    std::int64_t runtime_ms = 0;
    bool exceptions_capped() const { return exception_total > static_cast<std::int64_t>(exceptions.size()); }
};

inline int scan_threads(const ScanConfig& c) {
    if (c.threads > 0) return c.threads;
    int hw = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    if (const char* env = std::getenv("POLYSIEVE_THREADS")) {
        int cap = std::atoi(env);
        if (cap >= 1) hw = std::min(hw, cap);
    }
    return hw;
}

// Sorted distinct values p_m(x) <= limit over the allowed coordinates x.
inline std::vector<std::int64_t> allowed_values(const ScanConfig& c) {
    const PolygonalFamily fam(c.m);
    std::int64_t xmax = 0;
    while (p_m(fam, xmax + 1) <= c.limit || p_m(fam, -(xmax + 1)) <= c.limit) ++xmax;
    // smallest prime factor table up to xmax gives Omega(|x|) in O(log x)
    std::vector<std::int32_t> spf(static_cast<std::size_t>(xmax + 1), 0);
    for (std::int64_t i = 2; i <= xmax; ++i)
        if (spf[static_cast<std::size_t>(i)] == 0)
            for (std::int64_t j = i; j <= xmax; j += i)
                if (spf[static_cast<std::size_t>(j)] == 0) spf[static_cast<std::size_t>(j)] = static_cast<std::int32_t>(i);
    auto omega = [&](std::int64_t x) {
        int k = 0;
        while (x > 1) {
            x /= spf[static_cast<std::size_t>(x)];
            ++k;
        }
        return k;
    };
    auto allowed = [&](std::int64_t a) {
        if (a == 0) return c.normalized().allow_zero;
        int k = omega(a);
        return c.mode == AllowedSetMode::OmegaBudget ? k <= c.max_omega : k <= 1;
    };
    std::vector<std::int64_t> v;
    for (std::int64_t a = 0; a <= xmax; ++a) {
        if (!allowed(a)) continue;
        for (std::int64_t x : {a, -a}) {
            if (x < 0 && c.nonneg) continue;
            std::int64_t y = p_m(fam, x);
            if (y <= c.limit) v.push_back(y);
        }
    }
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

namespace detail {

using Bits = std::vector<std::uint64_t>;

// Bits [pos, pos+64) of b, zeros outside [0, 64*size).
inline std::uint64_t window(const Bits& b, std::int64_t pos) {
    const std::int64_t nw = static_cast<std::int64_t>(b.size());
    auto word = [&](std::int64_t w) { return w >= 0 && w < nw ? b[static_cast<std::size_t>(w)] : 0; };
    const std::int64_t w = pos >= 0 ? pos / 64 : -((-pos + 63) / 64);
    const int s = static_cast<int>(pos - w * 64);
    if (s == 0) return word(w);
    return (word(w) >> s) | (word(w + 1) << (64 - s));
}

// out = OR over v of (in << v), restricted to bits 0..limit; words split across threads.
inline Bits shift_or(const Bits& in, const std::vector<std::int64_t>& vals, std::int64_t limit, int threads) {
    const std::int64_t nw = limit / 64 + 1;
    Bits out(static_cast<std::size_t>(nw), 0);
    auto work = [&](std::int64_t w0, std::int64_t w1) {
        for (std::int64_t w = w0; w < w1; ++w) {
            std::uint64_t acc = 0;
            for (auto v : vals) {
                if (v > 64 * w + 63) break;
                acc |= window(in, 64 * w - v);
                if (acc == ~std::uint64_t{0}) break;
            }
            out[static_cast<std::size_t>(w)] = acc;
        }
    };
    const std::int64_t T = std::max<std::int64_t>(1, std::min<std::int64_t>(threads, nw));
    std::vector<std::thread> pool;
    for (std::int64_t t = 1; t < T; ++t) pool.emplace_back(work, nw * t / T, nw * (t + 1) / T);
    work(0, nw / T);
    for (auto& th : pool) th.join();
    const int tail = static_cast<int>(limit % 64);
    if (tail != 63) out.back() &= (std::uint64_t{1} << (tail + 1)) - 1;
    return out;
}

inline ScanReport finish_report(const ScanConfig& c, const std::vector<bool>& rep,
                                std::chrono::steady_clock::time_point t0) {
    ScanReport r;
    r.config = c;
    for (std::int64_t n = 0; n <= c.limit; ++n) {
        if (rep[static_cast<std::size_t>(n)]) {
            ++r.representable_count;
        } else {
            ++r.exception_total;
            if (r.exceptions.size() < c.exception_cap) r.exceptions.push_back(n);
        }
    }
    r.density = rat(r.representable_count, c.limit + 1);
    r.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

}  // namespace detail

// n in [0, limit] is representable when p_m(x)+p_m(y)+p_m(z) = n with x, y, z
// allowed: the pair table is one shifted OR over the allowed values, the triple
// table another.
inline ScanReport eureka_scan(const ScanConfig& cfg) {
    cfg.validate();
    const ScanConfig c = cfg.normalized();
    const auto t0 = std::chrono::steady_clock::now();
    const auto vals = allowed_values(c);
    const int T = scan_threads(c);
    detail::Bits one(static_cast<std::size_t>(c.limit / 64 + 1), 0);
    for (auto v : vals) one[static_cast<std::size_t>(v / 64)] |= std::uint64_t{1} << (v % 64);
    auto two = detail::shift_or(one, vals, c.limit, T);
    auto three = detail::shift_or(two, vals, c.limit, T);
    std::vector<bool> rep(static_cast<std::size_t>(c.limit + 1));
    for (std::int64_t n = 0; n <= c.limit; ++n) rep[static_cast<std::size_t>(n)] = three[static_cast<std::size_t>(n / 64)] >> (n % 64) & 1;
    return detail::finish_report(c, rep, t0);
}

// Per-n search over ordered triples of allowed values; the oracle for eureka_scan.
inline ScanReport naive_scan(const ScanConfig& cfg) {
    cfg.validate();
    const ScanConfig c = cfg.normalized();
    const auto t0 = std::chrono::steady_clock::now();
    const auto vals = allowed_values(c);
    std::vector<bool> rep(static_cast<std::size_t>(c.limit + 1), false);
    for (std::int64_t n = 0; n <= c.limit; ++n) {
        bool found = false;
        for (std::size_t i = 0; i < vals.size() && !found && vals[i] <= n; ++i)
            for (std::size_t j = 0; j < vals.size() && !found && vals[i] + vals[j] <= n; ++j)
                found = std::binary_search(vals.begin(), vals.end(), n - vals[i] - vals[j]);
        rep[static_cast<std::size_t>(n)] = found;
    }
    return detail::finish_report(c, rep, t0);
}

// n lies in S when sf(h) >= (log h)^7; the logarithm is taken at 50 digits.
inline bool density_one_membership(const PolygonalFamily& fam, std::int64_t n) {
    if (n < 0) throw domain_error("n must be nonnegative");
    auto t = target_invariants(fam, n);
    using F = boost::multiprecision::cpp_dec_float_50;
    F lg = boost::multiprecision::log(F(t.h));
    return F(t.sf_h) >= boost::multiprecision::pow(lg, 7);
}

struct DensityCensus {
    std::int64_t limit = 0;
    std::int64_t members = 0;
    Rational fraction;
};

inline DensityCensus density_one_census(const PolygonalFamily& fam, std::int64_t limit) {
    if (limit < 0) throw domain_error("census limit must be nonnegative");
    DensityCensus c;
    c.limit = limit;
    for (std::int64_t n = 0; n <= limit; ++n)
        if (density_one_membership(fam, n)) ++c.members;
    c.fraction = rat(c.members, limit + 1);
    return c;
}

struct AuditLine {
    std::string name;
    std::string statement;
    bool pass = false;
};

struct ConstantsAudit {
    std::vector<AuditLine> lines;
    bool all_pass() const {
        return std::all_of(lines.begin(), lines.end(), [](const AuditLine& l) { return l.pass; });
    }
};

inline ConstantsAudit constants_audit() {
    ConstantsAudit a;
    const Rational theta = rat(1, 12719);
    Rational lhs = 621 * theta + rat(231, 512);
    a.lines.push_back({"theta", "621/12719 + 231/512 = " + to_string(lhs) + " < 1/2", lhs < rat(1, 2)});

    // e^5 exceeds every partial sum of its Taylor series
    Rational e5 = 0, term = 1;
    for (int k = 0; k <= 20; ++k) {
        if (k > 0) term *= rat(5, k);
        e5 += term;
    }
    a.lines.push_back({"e^5 lower bound", "sum_{k<=20} 5^k/k! > 148", e5 > 148});
    Rational pw = rpow(rat(1645, 1000), 10);
    a.lines.push_back({"1.645^10 upper bound", "(1645/1000)^10 = " + std::to_string(pw.get_d()) + " < 146", pw < 146});
    a.lines.push_back({"s = 24 positivity", "1 - e^(19-24) 1.645^10 > 1 - 146/148 > 0",
                       e5 > 148 && pw < 146 && 1 - rat(146, 148) > 0});

    Rational ex = rat(41, 16) * 6 + rat(5, 2) * 3 + 3;
    a.lines.push_back({"exponent", "41/16*6 + 5/2*3 + 3 = " + to_string(ex), ex == rat(207, 8)});
    const std::int64_t half = 12719 / 2;
    a.lines.push_back({"prime budget", "floor(12719/2) = " + std::to_string(half) + ", + 2 = " + std::to_string(half + 2),
                       half == 6359 && half + 2 == 6361});
    return a;
}

inline nlohmann::ordered_json config_json(const ScanConfig& c) {
    nlohmann::ordered_json j;
    j["m"] = c.m;
    j["limit"] = c.limit;
    j["max_omega"] = c.max_omega;
    j["allow_zero"] = c.allow_zero;
    j["nonneg"] = c.nonneg;
    j["allowed_set_mode"] = to_string(c.mode);
    return j;
}

// json: the documented object; csv: "n,representable" rows for the exceptional n.
inline std::string report_emit(const ScanReport& r, const std::string& format, bool include_timing = true) {
    if (format == "json") {
        nlohmann::ordered_json j;
        j["config"] = config_json(r.config);
        j["representable_count"] = r.representable_count;
        j["exception_count"] = r.exception_total;
        j["exceptions_capped"] = r.exceptions_capped();
        j["exceptions"] = r.exceptions;
        j["density"] = to_string(r.density);
        j["density_decimal"] = to_double(r.density);
        if (include_timing) j["runtime_ms"] = r.runtime_ms;
        return j.dump(2) + "\n";
    }
    if (format == "csv") {
        std::ostringstream os;
        os << "n,representable\n";
        for (auto n : r.exceptions) os << n << ",0\n";
        return os.str();
    }
    throw domain_error("unknown report format '" + format + "' (expected json or csv)");
}

inline std::string report_emit(const ConstantsAudit& a, const std::string& format) {
    if (format == "json") {
        nlohmann::ordered_json j = nlohmann::ordered_json::array();
        for (auto& l : a.lines) j.push_back({{"name", l.name}, {"statement", l.statement}, {"pass", l.pass}});
        return j.dump(2) + "\n";
    }
    if (format == "csv") {
        std::ostringstream os;
        os << "name,pass\n";
        for (auto& l : a.lines) os << l.name << "," << (l.pass ? "pass" : "fail") << "\n";
        return os.str();
    }
    throw domain_error("unknown report format '" + format + "' (expected json or csv)");
}

}  // namespace polysieve
