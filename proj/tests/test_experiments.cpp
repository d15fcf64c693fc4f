#include <gtest/gtest.h>

#include "polysieve/experiments.hpp"

using namespace polysieve;

namespace {

ScanConfig cfg(std::int64_t m, std::int64_t limit, int omega, bool zero, bool nonneg,
               AllowedSetMode mode = AllowedSetMode::OmegaBudget, int threads = 1) {
    ScanConfig c;
    c.m = m;
    c.limit = limit;
    c.max_omega = omega;
    c.allow_zero = zero;
    c.nonneg = nonneg;
    c.mode = mode;
    c.threads = threads;
    return c;
}

}  // namespace

TEST(Scan, MatchesNaiveOracle) {
    for (std::int64_t m : {3, 5, 7})
        for (int omega : {0, 1, 2, 3})
            for (bool zero : {false, true})
                for (bool nonneg : {false, true})
                    for (auto mode : {AllowedSetMode::OmegaBudget, AllowedSetMode::ZeroOnePrime}) {
                        auto c = cfg(m, 2000, omega, zero, nonneg, mode);
                        auto fast = eureka_scan(c);
                        auto slow = naive_scan(c);
                        EXPECT_EQ(fast.representable_count, slow.representable_count);
                        EXPECT_EQ(fast.exceptions, slow.exceptions);
                    }
}

// With every x allowed, Gauss's Eureka theorem leaves no exceptions for m = 3.
TEST(Scan, GaussEureka) {
    auto r = eureka_scan(cfg(3, 20000, 64, true, false));
    EXPECT_EQ(r.exception_total, 0);
    EXPECT_EQ(r.density, 1);
}

TEST(Scan, MonotoneInOmegaBudget) {
    std::int64_t prev = -1;
    for (int omega = 0; omega <= 4; ++omega) {
        auto r = eureka_scan(cfg(3, 30000, omega, true, true));
        EXPECT_GE(r.representable_count, prev);
        prev = r.representable_count;
    }
}

TEST(Scan, DeterministicAcrossThreadCounts) {
    auto base = report_emit(eureka_scan(cfg(5, 100000, 2, true, true, AllowedSetMode::OmegaBudget, 1)), "json", false);
    for (int t : {2, 3, 8})
        EXPECT_EQ(report_emit(eureka_scan(cfg(5, 100000, 2, true, true, AllowedSetMode::OmegaBudget, t)), "json", false),
                  base);
}

TEST(Scan, ExceptionCap) {
    auto c = cfg(3, 5000, 0, false, true);
    c.exception_cap = 10;
    auto r = eureka_scan(c);
    EXPECT_EQ(r.exceptions.size(), 10u);
    EXPECT_TRUE(r.exceptions_capped());
    EXPECT_GT(r.exception_total, 10);
}

TEST(Scan, Validation) {
    EXPECT_THROW(eureka_scan(cfg(3, 0, 2, true, true)), domain_error);
    EXPECT_THROW(eureka_scan(cfg(3, 200000000, 2, true, true)), domain_error);
    EXPECT_THROW(eureka_scan(cfg(2, 10, 2, true, true)), domain_error);
    EXPECT_THROW(eureka_scan(cfg(3, 10, -1, true, true)), domain_error);
}

TEST(Scan, ZeroOnePrimeAdmitsZero) {
    auto c = cfg(3, 100, 1, false, true, AllowedSetMode::ZeroOnePrime).normalized();
    EXPECT_TRUE(c.allow_zero);
    auto v = allowed_values(c);
    EXPECT_TRUE(std::find(v.begin(), v.end(), 0) != v.end());
}

TEST(Report, Formats) {
    auto r = eureka_scan(cfg(3, 200, 1, false, true));
    auto csv = report_emit(r, "csv");
    EXPECT_EQ(csv.rfind("n,representable\n", 0), 0u);
    EXPECT_EQ(static_cast<std::int64_t>(std::count(csv.begin(), csv.end(), '\n')), 1 + r.exception_total);
    auto j = nlohmann::json::parse(report_emit(r, "json"));
    EXPECT_EQ(j["representable_count"].get<std::int64_t>(), r.representable_count);
    EXPECT_TRUE(j.contains("runtime_ms"));
    EXPECT_FALSE(nlohmann::json::parse(report_emit(r, "json", false)).contains("runtime_ms"));
    EXPECT_EQ(j["density"].get<std::string>(), to_string(r.density));
    EXPECT_THROW(report_emit(r, "xml"), domain_error);
}

TEST(DensityOne, Membership) {
    PolygonalFamily f3(3);
    EXPECT_FALSE(density_one_membership(f3, 1));  // sf(h) = 11 is far below (log 11)^7
    // h = 8n + 3 = 1000000000091 is prime, so sf(h) = h exceeds (log h)^7 ~ 1.2e10
    EXPECT_TRUE(density_one_membership(f3, 125000000011));
    auto c = density_one_census(f3, 200);
    EXPECT_EQ(c.limit, 200);
    EXPECT_EQ(c.fraction, rat(c.members, 201));
}

TEST(Audit, ConstantsPass) {
    auto a = constants_audit();
    EXPECT_EQ(a.lines.size(), 6u);
    EXPECT_TRUE(a.all_pass());
    auto j = nlohmann::json::parse(report_emit(a, "json"));
    EXPECT_EQ(j.size(), 6u);
    EXPECT_EQ(report_emit(a, "csv").rfind("name,pass\n", 0), 0u);
}
