#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "polysieve/polysieve.hpp"

using namespace polysieve;
using Json = nlohmann::ordered_json;

namespace {

struct Options {
    std::int64_t m = 3, n = 0, p = 2, N = 0, lo = 0, hi = 0, z0 = 3, limit = 1000;
    std::string d = "1,1,1", c = "0,0,0", ell = "1,1,1", P, P1, P2, a_triple = "1,1,1";
    std::string two_adic = "printed", format = "json", D = "10", beta = "1", grid = "fundamental", mode;
    std::string out;
    int a = 0, t = 0, max_omega = 2, cap = 100000, seed = 1, count = 50;
    bool decimal = false, nonneg = false, allow_zero = false, calibrate = false, no_timing = false;
};

std::vector<std::int64_t> parse_list(const std::string& s) {
    std::vector<std::int64_t> v;
    if (s.empty()) return v;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        long long x = 0;
        try {
            x = std::stoll(item, &pos);
        } catch (const std::exception&) {
            throw domain_error("'" + s + "' is not a comma-separated integer list");
        }
        if (pos != item.size()) throw domain_error("'" + s + "' is not a comma-separated integer list");
        v.push_back(x);
    }
    return v;
}

std::array<std::int64_t, 3> parse_triple(const std::string& s) {
    auto v = parse_list(s);
    if (v.size() != 3) throw domain_error("expected three comma-separated integers, got '" + s + "'");
    return {v[0], v[1], v[2]};
}

Rational parse_rational(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0 || q.get_den() == 0) throw domain_error("'" + s + "' is not a rational number");
    q.canonicalize();
    return q;
}

TwoAdic parse_mode(const std::string& s) {
    if (s == "printed") return TwoAdic::Printed;
    if (s == "corrected") return TwoAdic::Corrected;
    throw domain_error("--two-adic must be printed or corrected");
}

Json rj(const Rational& q, bool decimal) {
    if (!decimal) return to_string(q);
    return Json{{"exact", to_string(q)}, {"decimal", to_double(q)}};
}

std::string triple_str(const std::array<std::int64_t, 3>& x) {
    return std::to_string(x[0]) + "," + std::to_string(x[1]) + "," + std::to_string(x[2]);
}

void emit(const Json& j, const Options& o, const std::string& text = "") {
    if (o.format == "text" && !text.empty())
        std::cout << text << "\n";
    else
        std::cout << j.dump(2) << "\n";
}

void require_format(const Options& o, std::initializer_list<const char*> allowed) {
    for (auto f : allowed)
        if (o.format == f) return;
    throw domain_error("format '" + o.format + "' not supported by this subcommand");
}

void run_local_density(const Options& o) {
    require_format(o, {"json", "text"});
    auto q = LocalDensityQuery::make(o.m, o.n, parse_triple(o.d), o.p);
    Rational closed = local_density(q, parse_mode(o.two_adic));
    auto orc = local_density_oracle(q, o.t);
    Json j;
    j["m"] = o.m;
    j["n"] = o.n;
    j["d"] = q.d;
    j["p"] = o.p;
    j["h"] = q.target.h;
    j["two_adic"] = o.two_adic;
    j["closed_form"] = rj(closed, o.decimal);
    j["oracle"] = rj(orc.value, o.decimal);
    j["oracle_t"] = orc.t;
    j["agree"] = closed == orc.value;
    emit(j, o, "closed_form: " + to_string(closed) + ", oracle: " + to_string(orc.value));
}

void run_eisenstein(const Options& o) {
    require_format(o, {"json", "csv", "text"});
    const PolygonalFamily fam(o.m);
    const auto mode = parse_mode(o.two_adic);
    if (o.calibrate) {
        auto rep = siegel_calibration(fam, o.lo, o.hi, mode);
        if (o.format == "csv") {
            std::cout << "n,ratio\n";
            for (auto& [n, r] : rep.ratios) std::cout << n << "," << to_string(r) << "\n";
            return;
        }
        Json j;
        j["m"] = o.m;
        j["range"] = {o.lo, o.hi};
        j["two_adic"] = o.two_adic;
        j["constant"] = rep.constant;
        j["kappa"] = rj(rep.kappa, o.decimal);
        emit(j, o, std::string("kappa: ") + to_string(rep.kappa) + (rep.constant ? " (constant)" : " (not constant)"));
        return;
    }
    const auto d3 = parse_triple(o.d);
    auto ec = r_gen(fam, o.n, d3, mode);
    auto target = target_invariants(fam, o.n);
    Json j;
    j["m"] = o.m;
    j["n"] = o.n;
    j["d"] = parse_triple(o.d);
    j["h"] = target.h;
    j["delta"] = ec.cls.delta;
    j["t"] = ec.t;
    j["class_number"] = ec.cls.h_delta;
    j["w"] = ec.cls.w_delta;
    j["sqrt_dL"] = ec.sqrt_dL;
    j["local_factor"] = rj(ec.local_factor, o.decimal);
    j["gamma_factor"] = rj(ec.gamma_factor, o.decimal);
    j["two_adic"] = o.two_adic;
    j["r_gen"] = rj(ec.value, o.decimal);
    j["r_gen_numeric"] = static_cast<double>(ec.numeric);
    j["r_X"] = r_X(fam, o.n, DivisorTriple::make(d3[0], d3[1], d3[2]));
    emit(j, o, "r_gen: " + to_string(ec.value));
}

void run_beta(const Options& o) {
    require_format(o, {"json", "text"});
    const PolygonalFamily fam(o.m);
    auto target = target_invariants(fam, o.n);
    auto c3 = parse_triple(o.c);
    ExponentTriple c{static_cast<int>(c3[0]), static_cast<int>(c3[1]), static_cast<int>(c3[2])};
    Rational b = beta_p(fam, target, o.p, c);
    Json j;
    j["m"] = o.m;
    j["n"] = o.n;
    j["p"] = o.p;
    j["c"] = c;
    j["beta"] = rj(b, o.decimal);
    emit(j, o, to_string(b));
}

void run_aggregates(const Options& o) {
    require_format(o, {"json"});
    const PolygonalFamily fam(o.m);
    auto target = target_invariants(fam, o.n);
    auto g = aggregates(fam, target, o.a, o.z0);
    Json j;
    j["m"] = o.m;
    j["n"] = o.n;
    j["h"] = target.h;
    j["sf_h"] = target.sf_h;
    j["a"] = o.a;
    j["z0"] = o.z0;
    j["sieve_primes"] = g.sieve_primes;
    j["W"] = rj(g.W, o.decimal);
    j["S_ET"] = rj(g.S_ET, o.decimal);
    if (g.H) {
        Json radicands = Json::array();
        for (auto& r : g.H->radicands) radicands.push_back(to_string(r));
        j["H"] = {{"primes", g.H->primes}, {"cube_root_radicands", radicands}, {"numeric", static_cast<double>(g.H->numeric())}};
    } else {
        j["H"] = nullptr;
    }
    emit(j, o);
}

const char* kind_name(SpinorKind k) {
    switch (k) {
        case SpinorKind::UnitsTimesSquares: return "units_times_squares";
        case SpinorKind::SquaresOnly: return "squares";
        default: return "z2_times_squares";
    }
}

void run_spinor_norm(const Options& o) {
    require_format(o, {"json", "text"});
    auto g = spinor_norm_group(o.p, PolygonalFamily(o.m), parse_triple(o.d));
    Json j;
    j["m"] = o.m;
    j["d"] = parse_triple(o.d);
    j["p"] = o.p;
    j["group"] = to_string(g.kind);
    j["kind"] = kind_name(g.kind);
    j["case"] = g.case_label;
    emit(j, o, std::string(to_string(g.kind)) + " (case " + g.case_label + ")");
}

void run_spinor_genus(const Options& o) {
    require_format(o, {"json", "text"});
    auto w = genus_equals_spinor_genus_d1(PolygonalFamily(o.m));
    Json j;
    j["m"] = o.m;
    j["genus_equals_spinor_genus"] = w.equal;
    Json table = Json::array();
    for (auto& [p, g] : w.table) table.push_back({{"p", p}, {"group", to_string(g.kind)}, {"case", g.case_label}});
    j["table"] = table;
    j["squares_only_primes"] = w.squares_only_primes;
    j["absorbing"] = w.absorbing;
    emit(j, o, w.equal ? "true" : "false");
}

void run_spinor_theta(const Options& o) {
    require_format(o, {"json", "text"});
    bool r = theta_spn_equals_gen_odd(PolygonalFamily(o.m), parse_triple(o.d));
    Json j;
    j["m"] = o.m;
    j["d"] = parse_triple(o.d);
    j["theta_spn_equals_gen"] = r;
    emit(j, o, r ? "true" : "false");
}

void run_spinor_unary(const Options& o) {
    require_format(o, {"json"});
    const PolygonalFamily fam(o.m);
    auto a3 = parse_triple(o.a_triple);
    auto r = unary_obstruction_support(fam, target_invariants(fam, o.n), parse_triple(o.d),
                                       {static_cast<int>(a3[0]), static_cast<int>(a3[1]), static_cast<int>(a3[2])});
    Json j;
    j["m"] = o.m;
    j["n"] = o.n;
    j["d"] = parse_triple(o.d);
    j["a"] = a3;
    j["supported"] = r.supported;
    j["bound"] = rj(r.bound, o.decimal);
    j["failing_prime"] = r.failing_prime ? Json(*r.failing_prime) : Json(nullptr);
    j["condition"] = r.condition;
    emit(j, o);
}

void run_sieve_weights(const Options& o) {
    require_format(o, {"json", "csv"});
    std::optional<int> a;
    if (o.a > 0) a = o.a;
    RosserWeightSystem sys(parse_rational(o.D), parse_rational(o.beta), a);
    auto ds = parse_list(o.d);
    if (o.format == "csv") {
        std::cout << "d,lambda_plus,lambda_minus,Lambda_minus,mu\n";
        for (auto d : ds)
            std::cout << d << "," << lambda_plus(sys, d) << "," << lambda_minus(sys, d) << ","
                      << Lambda_minus(sys, d) << "," << mobius_weight(sys, d) << "\n";
        return;
    }
    Json rows = Json::array();
    for (auto d : ds)
        rows.push_back({{"d", d},
                        {"lambda_plus", lambda_plus(sys, d)},
                        {"lambda_minus", lambda_minus(sys, d)},
                        {"Lambda_minus", Lambda_minus(sys, d)},
                        {"mu", mobius_weight(sys, d)}});
    Json j;
    j["D"] = to_string(sys.D);
    j["beta"] = to_string(sys.beta);
    j["weights"] = rows;
    emit(j, o);
}

void run_sieve_check(const Options& o) {
    require_format(o, {"json", "csv"});
    struct Row {
        std::string instance;
        std::string lhs, rhs;
        bool pass;
    };
    std::vector<Row> rows;
    RosserWeightSystem sys(parse_rational(o.D), parse_rational(o.beta));
    if (o.grid == "fundamental") {
        auto P = o.P.empty() ? std::vector<std::int64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29} : parse_list(o.P);
        for (unsigned mask = 0; mask < (1u << P.size()); ++mask) {
            std::int64_t c = 1;
            for (std::size_t i = 0; i < P.size(); ++i)
                if (mask >> i & 1) c *= P[i];
            auto s = divisor_sums(sys, c);
            rows.push_back({"c=" + std::to_string(c),
                            std::to_string(s.lambda_minus) + "<=" + std::to_string(s.mu),
                            std::to_string(s.mu) + "<=" + std::to_string(s.lambda_plus),
                            fundamental_inequality_check(sys, c)});
        }
    } else if (o.grid == "triple") {
        std::mt19937_64 rng(static_cast<std::uint64_t>(o.seed));
        const std::vector<std::int64_t> small{3, 5, 7, 11, 13, 17, 19};
        for (int i = 0; i < o.count; ++i) {
            std::array<std::int64_t, 3> c{1, 1, 1};
            for (auto& x : c)
                for (auto p : small)
                    if (rng() % 3 == 0) x *= p;
            auto r = triple_product_inequality_check(sys, c[0], c[1], c[2]);
            rows.push_back({"c=" + triple_str(c), std::to_string(r.lhs), std::to_string(r.rhs), r.holds()});
        }
    } else if (o.grid == "transform") {
        auto r = sieve_lower_transform_check(PolygonalFamily(o.m), o.n, parse_list(o.P1), parse_list(o.P2),
                                             o.a > 0 ? o.a : 1, sys, [&] {
                                                 auto l = parse_triple(o.ell);
                                                 return DivisorTriple::make(l[0], l[1], l[2]);
                                             }());
        rows.push_back({"m=" + std::to_string(o.m) + " n=" + std::to_string(o.n), std::to_string(r.lhs),
                        std::to_string(r.rhs), r.holds()});
    } else {
        throw domain_error("--grid must be fundamental, triple or transform");
    }
    bool all = true;
    for (auto& r : rows) all = all && r.pass;
    if (o.format == "csv") {
        std::cout << "instance,lhs,rhs,pass\n";
        for (auto& r : rows) std::cout << r.instance << "," << r.lhs << "," << r.rhs << "," << (r.pass ? 1 : 0) << "\n";
        return;
    }
    Json arr = Json::array();
    for (auto& r : rows) arr.push_back({{"instance", r.instance}, {"lhs", r.lhs}, {"rhs", r.rhs}, {"pass", r.pass}});
    Json j;
    j["grid"] = o.grid;
    j["all_pass"] = all;
    j["rows"] = arr;
    emit(j, o);
}

ScanConfig scan_config(const Options& o, bool density) {
    ScanConfig c;
    c.m = o.m;
    c.limit = o.limit;
    c.max_omega = o.max_omega;
    c.allow_zero = o.allow_zero;
    c.nonneg = o.nonneg;
    c.exception_cap = static_cast<std::size_t>(o.cap);
    const std::string mode = o.mode.empty() ? (density ? "zero-one-prime" : "omega-budget") : o.mode;
    if (mode == "zero-one-prime")
        c.mode = AllowedSetMode::ZeroOnePrime;
    else if (mode == "omega-budget")
        c.mode = AllowedSetMode::OmegaBudget;
    else
        throw domain_error("--mode must be omega-budget or zero-one-prime");
    return c;
}

void write_out(const Options& o, const std::string& payload) {
    if (o.out.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream f(o.out);
    if (!f) throw std::runtime_error("cannot open " + o.out);
    f << payload;
}

void run_scan(const Options& o, bool density) {
    require_format(o, {"json", "csv"});
    auto r = eureka_scan(scan_config(o, density));
    write_out(o, report_emit(r, o.format, !o.no_timing));
}

void run_census(const Options& o) {
    require_format(o, {"json"});
    auto c = density_one_census(PolygonalFamily(o.m), o.limit);
    Json j;
    j["m"] = o.m;
    j["limit"] = o.limit;
    j["members"] = c.members;
    j["fraction"] = rj(c.fraction, o.decimal);
    emit(j, o);
}

void run_audit_constants(const Options& o) {
    require_format(o, {"json", "csv"});
    auto a = constants_audit();
    std::cout << report_emit(a, o.format);
    if (!a.all_pass()) throw std::runtime_error("constants audit failed");
}

void run_audit_bounds(const Options& o) {
    require_format(o, {"json", "csv"});
    const PolygonalFamily fam(o.m);
    auto rep = bound_audit(fam, target_invariants(fam, o.n), o.p);
    if (o.format == "csv") {
        std::cout << "name,lhs,rhs,holds,within_hypotheses\n";
        for (auto& c : rep.checks)
            std::cout << c.name << "," << to_string(c.lhs) << "," << to_string(c.rhs) << "," << c.holds() << ","
                      << c.within_hypotheses << "\n";
        return;
    }
    Json arr = Json::array();
    for (auto& c : rep.checks)
        arr.push_back({{"name", c.name},
                       {"lhs", to_string(c.lhs)},
                       {"rhs", to_string(c.rhs)},
                       {"holds", c.holds()},
                       {"within_hypotheses", c.within_hypotheses}});
    Json j;
    j["m"] = o.m;
    j["n"] = o.n;
    j["p"] = o.p;
    j["checks"] = arr;
    emit(j, o);
}

void run_represent(const Options& o) {
    require_format(o, {"json", "csv"});
    const PolygonalFamily fam(o.m);
    auto d3 = parse_triple(o.d);
    auto d = DivisorTriple::make(d3[0], d3[1], d3[2]);
    auto reps = enumerate_representations(fam, o.n, d);
    if (o.format == "csv") {
        std::cout << "x1,x2,x3\n";
        for (auto& x : reps) std::cout << x[0] << "," << x[1] << "," << x[2] << "\n";
        return;
    }
    auto t = target_invariants(fam, o.n);
    Json j;
    j["m"] = o.m;
    j["n"] = o.n;
    j["d"] = d3;
    j["h"] = t.h;
    j["sf_h"] = t.sf_h;
    j["r_X"] = reps.size();
    j["representations"] = reps;
    if (!o.P.empty() || o.a > 0) {
        std::optional<int> a;
        if (o.a > 0) a = o.a;
        auto sc = count_sieved(fam, o.n, d, parse_list(o.P), a);
        j["sieved"] = sc.direct;
    }
    emit(j, o);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"polysieve: sums of three generalized polygonal numbers with almost-prime inputs"};
    app.require_subcommand(1);
    Options o;
    auto fmt = [&](CLI::App* s) {
        s->add_option("--format", o.format, "json (default), csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
        s->add_flag_callback("--json", [&] { o.format = "json"; }, "JSON output");
        s->add_flag_callback("--csv", [&] { o.format = "csv"; }, "CSV output where tabular");
        s->add_flag("--decimal", o.decimal, "add decimal renderings next to exact rationals");
    };

    auto ld = app.add_subcommand("local-density", "closed-form b_p and the congruence-count oracle");
    ld->add_option("--m", o.m)->required();
    ld->add_option("--n", o.n)->required();
    ld->add_option("--d", o.d, "d1,d2,d3");
    ld->add_option("--p", o.p)->required();
    ld->add_option("--t", o.t, "oracle precision (0: automatic)");
    ld->add_option("--two-adic", o.two_adic, "printed or corrected b_2");
    fmt(ld);

    auto es = app.add_subcommand("eisenstein", "genus coefficient r_gen and Siegel calibration");
    es->add_option("--m", o.m)->required();
    es->add_option("--n", o.n);
    es->add_option("--d", o.d);
    es->add_option("--two-adic", o.two_adic);
    es->add_flag("--calibrate", o.calibrate, "report r_X / r_gen over [--lo, --hi] (m = 3)");
    es->add_option("--lo", o.lo);
    es->add_option("--hi", o.hi);
    fmt(es);

    auto be = app.add_subcommand("beta", "beta_{X^{p^c},p}(h)");
    be->add_option("--m", o.m)->required();
    be->add_option("--n", o.n)->required();
    be->add_option("--p", o.p)->required();
    be->add_option("--c", o.c, "c1,c2,c3")->required();
    fmt(be);

    auto ag = app.add_subcommand("aggregates", "W_{a,h}, S_ET and H(n)");
    ag->add_option("--m", o.m)->required();
    ag->add_option("--n", o.n)->required();
    ag->add_option("--a", o.a)->required();
    ag->add_option("--z0", o.z0)->required();
    fmt(ag);

    auto sp = app.add_subcommand("spinor", "local spinor norm groups and unary obstructions");
    sp->require_subcommand(1);
    auto sp_norm = sp->add_subcommand("norm", "theta(X^d_p)");
    sp_norm->add_option("--m", o.m)->required();
    sp_norm->add_option("--d", o.d);
    sp_norm->add_option("--p", o.p)->required();
    fmt(sp_norm);
    auto sp_genus = sp->add_subcommand("genus", "genus = spinor genus for d = (1,1,1)");
    sp_genus->add_option("--m", o.m)->required();
    fmt(sp_genus);
    auto sp_theta = sp->add_subcommand("theta", "2-adic unary obstruction check for d in S_1^3");
    sp_theta->add_option("--m", o.m)->required();
    sp_theta->add_option("--d", o.d);
    fmt(sp_theta);
    auto sp_unary = sp->add_subcommand("unary", "support conditions for the unary part");
    sp_unary->add_option("--m", o.m)->required();
    sp_unary->add_option("--n", o.n)->required();
    sp_unary->add_option("--d", o.d);
    sp_unary->add_option("--a", o.a_triple, "a1,a2,a3");
    fmt(sp_unary);

    auto sv = app.add_subcommand("sieve", "Rosser weights and sieve inequalities");
    sv->require_subcommand(1);
    auto sv_w = sv->add_subcommand("weights", "lambda^+, lambda^-, Lambda^- and mu");
    sv_w->add_option("--D", o.D)->required();
    sv_w->add_option("--beta", o.beta)->required();
    sv_w->add_option("--d", o.d, "comma-separated d values")->required();
    sv_w->add_option("--a", o.a, "2-adic pseudo-prime exponent");
    fmt(sv_w);
    auto sv_c = sv->add_subcommand("check", "inequality grids");
    sv_c->add_option("--grid", o.grid, "fundamental, triple or transform");
    sv_c->add_option("--D", o.D);
    sv_c->add_option("--beta", o.beta);
    sv_c->add_option("--P", o.P, "primes for the fundamental grid");
    sv_c->add_option("--count", o.count);
    sv_c->add_option("--seed", o.seed);
    sv_c->add_option("--m", o.m);
    sv_c->add_option("--n", o.n);
    sv_c->add_option("--P1", o.P1);
    sv_c->add_option("--P2", o.P2);
    sv_c->add_option("--a", o.a);
    sv_c->add_option("--ell", o.ell);
    fmt(sv_c);

    auto sc = app.add_subcommand("scan", "representability scans");
    sc->require_subcommand(1);
    auto scan_opts = [&](CLI::App* s) {
        s->add_option("--m", o.m);
        s->add_option("--limit", o.limit)->required();
        s->add_option("--max-omega", o.max_omega);
        s->add_flag("--allow-zero", o.allow_zero);
        s->add_flag("--nonneg", o.nonneg);
        s->add_option("--mode", o.mode, "omega-budget (eureka default) or zero-one-prime (density default)");
        s->add_option("--cap", o.cap, "maximum number of listed exceptions");
        s->add_option("--out", o.out, "write the report to a file");
        s->add_flag("--no-timing", o.no_timing, "omit runtime_ms");
        fmt(s);
    };
    auto sc_e = sc->add_subcommand("eureka", "Omega-budget scan");
    scan_opts(sc_e);
    auto sc_d = sc->add_subcommand("density", "representable fraction");
    scan_opts(sc_d);
    auto sc_c = sc->add_subcommand("census", "members of the density-one set up to --limit");
    sc_c->add_option("--m", o.m);
    sc_c->add_option("--limit", o.limit)->required();
    fmt(sc_c);

    auto au = app.add_subcommand("audit", "exact audits");
    au->require_subcommand(1);
    auto au_c = au->add_subcommand("constants", "final constants");
    fmt(au_c);
    auto au_b = au->add_subcommand("bounds", "beta bounds at one prime");
    au_b->add_option("--m", o.m)->required();
    au_b->add_option("--n", o.n)->required();
    au_b->add_option("--p", o.p)->required();
    fmt(au_b);

    auto rp = app.add_subcommand("represent", "enumerate representations of n");
    rp->add_option("--m", o.m)->required();
    rp->add_option("--n", o.n)->required();
    rp->add_option("--d", o.d);
    rp->add_option("--P", o.P, "odd primes the coordinates must avoid");
    rp->add_option("--a", o.a, "2-adic cap: ord_2 x_j < a");
    fmt(rp);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*ld) run_local_density(o);
        else if (*es) run_eisenstein(o);
        else if (*be) run_beta(o);
        else if (*ag) run_aggregates(o);
        else if (*sp_norm) run_spinor_norm(o);
        else if (*sp_genus) run_spinor_genus(o);
        else if (*sp_theta) run_spinor_theta(o);
        else if (*sp_unary) run_spinor_unary(o);
        else if (*sv_w) run_sieve_weights(o);
        else if (*sv_c) run_sieve_check(o);
        else if (*sc_e) run_scan(o, false);
        else if (*sc_d) run_scan(o, true);
        else if (*sc_c) run_census(o);
        else if (*au_c) run_audit_constants(o);
        else if (*au_b) run_audit_bounds(o);
        else if (*rp) run_represent(o);
    } catch (const domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
