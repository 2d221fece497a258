// Command-line harness: parameter inspection, batch generation, and the
// oracle reports. Non-interactive; every run is reproducible from the echoed
// configuration. Exit codes: 0 success, 2 invalid parameters, 3 budget
// exceeded, 4 internal oracle inconsistency.
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ldprg/oracles.hpp"

using namespace ldprg;
using nlohmann::json;

namespace {

struct RunConfig {
    u64 p = 13;
    int ext = 0;  // tower exponent j: q = p^(2^j)
    int n = 2;
    int d = 2;
    double eps = 0.3;
    double c = 4;
    double C = 1;
    u64 budget = u64{1} << 26;
    u64 rng_seed = 0;
    std::string out;
    std::string format = "json";
};

json config_echo(const RunConfig& cfg, const std::string& command) {
    return json{{"command", command}, {"p", cfg.p},           {"ext", cfg.ext},
                {"n", cfg.n},         {"d", cfg.d},           {"eps", cfg.eps},
                {"c", cfg.c},         {"C", cfg.C},           {"budget", cfg.budget},
                {"rng_seed", cfg.rng_seed},                   {"format", cfg.format}};
}

void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(cfg.out);
    if (!os) throw Error("cannot open output file: " + cfg.out);
    os << text;
}

FieldRef make_field(const RunConfig& cfg, BitStream& bits) {
    if (!is_prime_u64(cfg.p)) throw Error("p must be prime");
    if (cfg.p >= (u64{1} << 31)) throw Error("p must be below 2^31");
    auto prime = FieldDesc::make_prime(cfg.p);
    if (cfg.ext == 0) return prime;
    auto t = build_tower(prime, cfg.ext, bits, TowerStrategy::rejection, 256);
    if (!t) throw Error("field tower construction failed");
    return t->full;
}

PrgContext build_context(const RunConfig& cfg, BitStream& bits) {
    auto field = make_field(cfg, bits);
    PRGParams params = choose_params(cfg.n, cfg.d, field, cfg.eps, cfg.c, cfg.C);
    return make_context(params, bits, cfg.budget);
}

json rational_json(const Rational& r) {
    return json{{"num", u128_to_string(r.num)}, {"den", u128_to_string(r.den)},
                {"value", r.to_double()}};
}

json seed_length_json(const SeedLength& sl) {
    return json{{"log_t1", sl.log_t1},   {"log_t2", sl.log_t2}, {"log_qell", sl.log_qell},
                {"log_uv", sl.log_uv},   {"total", sl.total},   {"grid_inflated", sl.grid_inflated}};
}

int cmd_params(const RunConfig& cfg) {
    BitStream bits(cfg.rng_seed);
    PrgContext ctx = build_context(cfg, bits);
    const PRGParams& p = ctx.params;
    json j{{"config", config_echo(cfg, "params")},
           {"params",
            {{"n", p.n},
             {"d", p.d},
             {"p", p.field->p},
             {"q", u128_to_string(p.field->size())},
             {"k", p.k},
             {"ell", p.ell},
             {"delta1", p.delta1},
             {"delta2", p.delta2},
             {"c", p.c},
             {"C", p.C},
             {"regime", p.below_threshold ? "outside guarantee" : "within guarantee"}}},
           {"tower", json::parse(tower_to_json(ctx.tower))},
           {"seed_length", seed_length_json(seed_length(ctx))},
           {"seed_space", u128_to_string(seed_space(ctx))}};
    emit(cfg, j.dump(2) + "\n");
    return 0;
}

json seed_json(const Seed& s) {
    json t = json::array();
    for (const auto& x : s.t) t.push_back(x.to_string());
    return json{{"r", u128_to_string(s.r)}, {"s", u128_to_string(s.s)}, {"t", t},
                {"u", s.u.to_string()},     {"v", s.v.to_string()}};
}

int cmd_gen(const RunConfig& cfg, u64 count, const std::string& seed_mode) {
    BitStream bits(cfg.rng_seed);
    PrgContext ctx = build_context(cfg, bits);
    const u128 space = seed_space(ctx);
    std::ostringstream os;
    for (u64 i = 0; i < count; ++i) {
        u128 index;
        if (seed_mode == "sequential") {
            if (u128{i} >= space) throw BudgetExceeded("seed space exhausted");
            index = i;
        } else {
            if (space > (u128{1} << 62)) throw BudgetExceeded("random seed mode");
            index = bits.uniform_below(static_cast<u64>(space));
        }
        Seed s = decode_seed(ctx, index);
        auto out = prg_generate(ctx, s);
        json vals = json::array();
        for (const auto& x : out) vals.push_back(x.to_string());
        os << json{{"seed", seed_json(s)}, {"out", vals}}.dump() << "\n";
    }
    emit(cfg, os.str());
    return 0;
}

std::string render_report(const RunConfig& cfg, json j, const std::vector<Rational>& table) {
    if (cfg.format == "csv") {
        std::ostringstream os;
        os << "num,den,value\n";
        for (const auto& r : table)
            os << u128_to_string(r.num) << "," << u128_to_string(r.den) << "," << r.to_double()
               << "\n";
        return os.str();
    }
    return j.dump(2) + "\n";
}

int cmd_report(const RunConfig& cfg, const std::string& kind, u64 polys, u64 trials) {
    auto t0 = std::chrono::steady_clock::now();
    BitStream bits(cfg.rng_seed);
    json j{{"config", config_echo(cfg, "report " + kind)}};
    std::vector<Rational> table;
    if (kind == "tv") {
        // exact fooling distances over a compact instance: one tower level,
        // four-point grids, full structured seed enumeration
        auto field = FieldDesc::make_prime(cfg.p);
        PRGParams params = choose_params(cfg.n, cfg.d, field, cfg.eps, cfg.c, cfg.C);
        params.ell = 1;
        params.k = 2;
        u64 h = 2;
        while (mod_pow(h, (cfg.p - 1) / 2, cfg.p) == 1) ++h;
        PrgContext ctx;
        ctx.params = params;
        ctx.tower = tower_from_descriptor(field, FieldDesc::make_tower(cfg.p, {{h}}));
        for (u128 i : {u128{1}, u128{cfg.p}, u128{2} * cfg.p + 3, u128{3} * cfg.p + 7})
            ctx.S1.push_back(fe_from_index(ctx.tower.full, i));
        for (u64 v : {u64{1}, u64{2}, u64{5}, u64{7}}) ctx.S2.emplace_back(field, v % cfg.p);
        for (u64 i = 0; i < polys; ++i) {
            MultiPoly f = random_poly(cfg.n + 1, cfg.d, field, bits, PolyConstraint::nonzero,
                                      cfg.budget);
            table.push_back(fooling_tv_exact(ctx, f, cfg.budget));
        }
    } else if (kind == "density") {
        auto field = FieldDesc::make_prime(cfg.p);
        HsgSpec spec = make_uniform_hsg(field, cfg.n, cfg.d, cfg.budget);
        for (u64 i = 0; i < polys; ++i) {
            MultiPoly f = random_poly(cfg.n, cfg.d, field, bits, PolyConstraint::nonzero,
                                      cfg.budget);
            table.push_back(hsg_empirical_density(spec, f, cfg.budget));
        }
        j["bound"] = rational_json(Rational(cfg.d, cfg.p));
    } else if (kind == "equidist") {
        auto field = FieldDesc::make_prime(cfg.p);
        for (u64 i = 0; i < polys; ++i) {
            MultiPoly f = random_poly(cfg.n, cfg.d, field, bits, PolyConstraint::indecomposable,
                                      cfg.budget);
            table.push_back(equidistribution_check(f, cfg.budget));
        }
        j["bound_shape_d2_over_sqrt_q"] =
            cfg.d * cfg.d / std::sqrt(static_cast<double>(cfg.p));
    } else if (kind == "preserve") {
        auto field = FieldDesc::make_prime(cfg.p);
        PRGParams params = choose_params(cfg.n, cfg.d, field, cfg.eps, cfg.c, cfg.C);
        params.ell = 1;
        params.k = 2;
        u64 h = 2;
        while (mod_pow(h, (cfg.p - 1) / 2, cfg.p) == 1) ++h;
        PrgContext ctx;
        ctx.params = params;
        ctx.tower = tower_from_descriptor(field, FieldDesc::make_tower(cfg.p, {{h}}));
        ctx.S1 = field_enumerate(ctx.tower.full, cfg.budget);
        ctx.S2 = field_enumerate(field, cfg.budget);
        PreservationStats stats = restriction_preservation_stats(ctx, trials, bits, cfg.budget);
        j["preserve"] = {{"trials", stats.trials},
                         {"preserved", stats.preserved},
                         {"fraction", stats.fraction},
                         {"wilson95", {stats.wilson_lo, stats.wilson_hi}}};
    } else if (kind == "tower") {
        auto field = FieldDesc::make_prime(cfg.p);
        const int ell = cfg.ext > 0 ? cfg.ext : 2;
        u64 ok = 0;
        for (u64 i = 0; i < trials; ++i)
            if (build_tower(field, ell, bits, TowerStrategy::sampler, 1)) ++ok;
        const double expect = 1.0 / static_cast<double>(u64{1} << ell);
        const double sigma = std::sqrt(expect * (1 - expect) / static_cast<double>(trials));
        j["tower"] = {{"trials", trials},
                      {"successes", ok},
                      {"rate", static_cast<double>(ok) / static_cast<double>(trials)},
                      {"expected", expect},
                      {"sigma", sigma}};
    } else {
        throw Error("unknown report kind: " + kind);
    }
    if (!table.empty()) {
        json arr = json::array();
        Rational max(0, 1);
        for (const auto& r : table) {
            arr.push_back(rational_json(r));
            if (max < r) max = r;
        }
        j["values"] = arr;
        j["max"] = rational_json(max);
    }
    j["wall_clock_seconds"] =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    emit(cfg, render_report(cfg, j, table));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    CLI::App app{"explicit pseudorandom generator for low-degree polynomials"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--p", cfg.p, "field characteristic (prime)");
        sub->add_option("--ext", cfg.ext, "tower exponent j, q = p^(2^j)");
        sub->add_option("--n", cfg.n, "variable count (output dimension n+1)");
        sub->add_option("--d", cfg.d, "degree bound");
        sub->add_option("--eps", cfg.eps, "target error");
        sub->add_option("--c", cfg.c, "defect constant c");
        sub->add_option("--C", cfg.C, "threshold constant C");
        sub->add_option("--budget", cfg.budget, "enumeration budget");
        sub->add_option("--rng-seed", cfg.rng_seed, "RNG seed");
        sub->add_option("--out", cfg.out, "output path (default stdout)");
        sub->add_option("--format", cfg.format, "json|csv")
            ->check(CLI::IsMember({"json", "csv"}));
    };

    auto* params = app.add_subcommand("params", "print generator parameters");
    add_common(params);

    u64 count = 1;
    std::string seed_mode = "sequential";
    auto* gen = app.add_subcommand("gen", "emit generated vectors as JSONL");
    add_common(gen);
    gen->add_option("--count", count, "number of vectors");
    gen->add_option("--seed-mode", seed_mode, "sequential|random")
        ->check(CLI::IsMember({"sequential", "random"}));

    std::string kind;
    u64 polys = 20, trials = 1000;
    auto* report = app.add_subcommand("report", "run an oracle report");
    add_common(report);
    report->add_option("kind", kind, "tv|density|equidist|preserve|tower")->required();
    report->add_option("--polys", polys, "polynomial sample count");
    report->add_option("--trials", trials, "trial count");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*params) return cmd_params(cfg);
        if (*gen) return cmd_gen(cfg, count, seed_mode);
        if (*report) return cmd_report(cfg, kind, polys, trials);
    } catch (const BudgetExceeded& e) {
        std::cerr << json{{"error", "budget"}, {"reason", e.what()}}.dump() << "\n";
        return 3;
    } catch (const CharTooSmall& e) {
        std::cerr << json{{"error", "invalid_parameters"}, {"reason", e.what()}}.dump() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << json{{"error", "invalid_parameters"}, {"reason", e.what()}}.dump() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << json{{"error", "internal"}, {"reason", e.what()}}.dump() << "\n";
        return 4;
    }
    return 0;
}
