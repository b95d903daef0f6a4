// Command-line surface for the odd-cutset library: exact counting and
// enumeration, lemma verification, constructions, the approximation
// pipeline, bound reports, and random sampling with SVG rendering.

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "oddcut/approx.hpp"
#include "oddcut/approxbuild.hpp"
#include "oddcut/bounds.hpp"
#include "oddcut/cache.hpp"
#include "oddcut/constructions.hpp"
#include "oddcut/enumerate.hpp"
#include "oddcut/errors.hpp"
#include "oddcut/json_io.hpp"
#include "oddcut/lattice.hpp"
#include "oddcut/oddsets.hpp"
#include "oddcut/sampler.hpp"
#include "oddcut/verify.hpp"

namespace {

using nlohmann::json;
using namespace oddcut;

std::string cache_path_or_default(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("ODDCUT_CACHE")) return env;
    return "./oddcut-cache.csv";
}

OriginMode parse_mode(const std::string& mode) {
    if (mode == "contains") return OriginMode::Contains;
    if (mode == "within") return OriginMode::WithinDistanceR;
    throw CLI::ValidationError("--mode must be contains or within");
}

std::ostream& open_sink(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path, std::ios::trunc);
    if (!file) throw std::runtime_error("cannot open output file: " + path);
    return file;
}

// Desk-scale guard shared by the searching commands.
void require_envelope(int d, long long n, bool force) {
    if (force || within_desk_envelope(d, n)) return;
    EnumSpec spec;
    spec.d = d;
    spec.n = n;
    std::ostringstream msg;
    msg << "outside the desk-scale envelope (d=2: n<=24, d=3: n<=36); the search window has "
        << "radius " << (n % (2 * d) == 0 ? spec.derived_window_radius() : 0)
        << " and the core search may visit well over 10^8 nodes. Pass --force to run anyway.";
    throw CLI::ValidationError(msg.str());
}

int failure_exit(const std::exception& e) {
    json witness{{"error", e.what()}};
    if (const auto* ce = dynamic_cast<const check_error*>(&e); ce && ce->witness()) {
        json coords = json::array();
        for (Coord x : ce->witness()->c) coords.push_back(x);
        witness["witness"] = coords;
    }
    std::cerr << witness.dump() << "\n";
    return 1;
}

// ----------------------------------------------------------------- count

struct CountArgs {
    int d = 2;
    long long n = 0;
    int r = 1;
    std::string mode = "contains";
    std::string cache;
    int jobs = 1;
    bool as_json = false;
    bool force = false;
};

int run_count(const CountArgs& args) {
    const std::string path = cache_path_or_default(args.cache);
    CountTable cache = CountTable::load(path);
    std::string reason;
    std::uint64_t count = 0;
    EnumStats stats;
    if (args.n % (2 * args.d) != 0) {
        reason = "n mod 2d != 0";
        stats.divisibility_empty = true;
    } else {
        require_envelope(args.d, args.n, args.force);
        EnumSpec spec;
        spec.d = args.d;
        spec.n = args.n;
        spec.r = args.r;
        spec.origin_mode = parse_mode(args.mode);
        spec.jobs = args.jobs;
        count = count_odd_cutsets(spec, &cache, &stats);
        cache.save(path);
    }
    if (args.as_json) {
        json out{{"d", args.d},      {"n", args.n},
                 {"r", args.r},      {"mode", args.mode},
                 {"count", count},   {"searched", !stats.from_cache && reason.empty()},
                 {"nodes", stats.nodes}};
        if (!reason.empty()) out["reason"] = reason;
        std::cout << out.dump() << "\n";
    } else {
        std::cout << count << "\n";
        if (!reason.empty()) std::cout << "reason: " << reason << "\n";
        std::cout << "searched: " << (!stats.from_cache && reason.empty() ? "yes" : "no") << "\n";
    }
    return 0;
}

// ------------------------------------------------------------- enumerate

struct EnumerateArgs {
    int d = 2;
    long long n = 0;
    int r = 1;
    std::string mode = "contains";
    std::string out;
    int jobs = 1;
    bool force = false;
};

int run_enumerate(const EnumerateArgs& args) {
    if (args.n % (2 * args.d) != 0) return 0;  // provably empty
    require_envelope(args.d, args.n, args.force);
    EnumSpec spec;
    spec.d = args.d;
    spec.n = args.n;
    spec.r = args.r;
    spec.origin_mode = parse_mode(args.mode);
    spec.jobs = args.jobs;
    const auto family = enumerate_odd_cutsets(spec);
    std::ofstream file;
    std::ostream& sink = open_sink(file, args.out);
    for (const LatticeSet& s : family) sink << to_json(s) << "\n";
    return 0;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
    std::string suite = "all";
    int d = 2;
    long long max_n = 16;
    int jobs = 1;
    std::uint64_t seed = 20240901;
    bool thorough = false;
    bool as_json = false;
};

int run_verify(const VerifyArgs& args) {
    VerifyOptions opt;
    opt.d = args.d;
    opt.max_n = args.max_n;
    opt.jobs = args.jobs;
    opt.seed = args.seed;
    opt.thorough = args.thorough;
    const SuiteResult result = run_suite(args.suite, opt);
    if (args.as_json) {
        json checks = json::array();
        for (const auto& c : result.checks)
            checks.push_back(json{{"name", c.name}, {"pass", c.pass}, {"details", c.details}});
        std::cout << json{{"suite", result.suite}, {"pass", result.all_pass()}, {"checks", checks}}.dump()
                  << "\n";
    } else {
        for (const auto& c : result.checks)
            std::cout << (c.pass ? "ok   " : "FAIL ") << c.name
                      << (c.details.empty() ? "" : "  [" + c.details + "]") << "\n";
        std::cout << (result.all_pass() ? "suite passed" : "suite FAILED") << " ("
                  << result.checks.size() << " checks)\n";
    }
    return result.all_pass() ? 0 : 1;
}

// ------------------------------------------------------------- construct

struct ConstructArgs {
    int d = 2;
    long long m = 4;
    bool count_only = false;
    std::string out;
    std::string cache;
};

int run_construct_slab(const ConstructArgs& args) {
    SlabFamilySpec spec{args.d, args.m};
    const auto count = slab_family_count(spec);
    const LatticeSet base = base_slab(spec);
    const long long boundary = static_cast<long long>(boundary_profile(base).edge_count());
    if (!args.count_only) {
        std::ofstream file;
        std::ostream& sink = open_sink(file, args.out);
        slab_family(spec, [&](const LatticeSet& s) { sink << to_json(s) << "\n"; });
    }
    std::cout << count.str() << "\n";
    const std::string path = cache_path_or_default(args.cache);
    CountTable cache = CountTable::load(path);
    cache.insert_once({args.d, boundary, 1, "slab"}, {count.str(), kOracleVersion, 0.0});
    cache.save(path);
    return 0;
}

// ----------------------------------------------------------- approximate

struct ApproximateArgs {
    int d = 2;
    long long n = 0;
    int t = 1;
    bool trace = false;
    int jobs = 1;
    bool force = false;
};

json set_as_json(const LatticeSet& s) { return json::parse(to_json(s)); }

int run_approximate(const ApproximateArgs& args) {
    require_envelope(args.d, args.n, args.force);
    EnumSpec spec;
    spec.d = args.d;
    spec.n = args.n;
    spec.jobs = args.jobs;
    const auto family = enumerate_odd_cutsets(spec);
    std::size_t index = 0;
    for (const LatticeSet& s : family) {
        const Approximation a = approximate(s, args.t);
        const DWitness w = d_map(a, s);
        const auto bound = count_bound_check(a, args.n, args.t, family);
        json line{{"index", index},
                  {"t", args.t},
                  {"star_size", a.star().size()},
                  {"witness_size", w.combined().size()},
                  {"cut_count", bound.cut_count},
                  {"reconstructs", reconstruct_from_black(a, w.d_black) == s &&
                                       reconstruct_from_white(a, w.d_white) == s}};
        if (args.trace) {
            const SeparatorReport sep = build_separator(s);
            const Box window = s.bounding_box()->expanded(4);
            const Approximation a0 = small_approx_witness(n_t(sep.u_set, 1), s, window);
            const RefineResult a1 = refine_to_t(a0, s, args.d, static_cast<long long>(a0.star().size()));
            const RefineResult a2 = refine_to_t(a1.refined, s, args.t, args.n / args.d);
            line["trace"] = json{{"set", set_as_json(s)},
                                 {"separator", set_as_json(sep.u_set)},
                                 {"stage0", json::parse(to_json(a0))},
                                 {"stage1", json::parse(to_json(a1.refined))},
                                 {"stage2", json::parse(to_json(a2.refined))},
                                 {"d_black", set_as_json(w.d_black)},
                                 {"d_white", set_as_json(w.d_white)}};
        }
        std::cout << line.dump() << "\n";
        ++index;
    }
    return 0;
}

// ---------------------------------------------------------------- bounds

struct BoundsArgs {
    int d = 2;
    std::string n_grid = "12:48:4";
    std::string c_upper = "1";
    std::string cache;
    std::string out;
};

int run_bounds(const BoundsArgs& args) {
    long long lo = 0, hi = 0, step = 0;
    {
        std::istringstream ss(args.n_grid);
        char c1 = 0, c2 = 0;
        if (!(ss >> lo >> c1 >> hi >> c2 >> step) || c1 != ':' || c2 != ':' || step <= 0)
            throw CLI::ValidationError("--n-grid must be lo:hi:step");
    }
    const BigRational c_upper(args.c_upper);
    const CountTable cache = CountTable::load(cache_path_or_default(args.cache));
    const GrowthReport growth = growth_estimate(args.d, cache);
    std::ofstream file;
    std::ostream& sink = open_sink(file, args.out);
    sink << "d,n,occ,lower,upper(C),mu_lower\n";
    for (long long n = lo; n <= hi; n += step) {
        if (n % (2 * args.d) != 0) continue;
        const BoundsReport rep = theorem_bracket(args.d, n, c_upper, &cache);
        sink << args.d << ',' << n << ',' << (rep.occ ? std::to_string(*rep.occ) : "") << ','
             << render_float(rep.lower_value) << ',' << render_float(rep.upper_value) << ','
             << render_float(growth.mu_lower_log2) << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------- sample

struct SampleArgs {
    int d = 2;
    long long n = 16;
    bool exact = false;
    bool mcmc = false;
    std::size_t count = 1;
    double steps = 10000;
    double lambda = 0;
    std::uint64_t seed = 0;
    bool seed_set = false;
    std::string svg;
    std::string jsonl;
    std::string diag;
    int jobs = 1;
    bool force = false;
};

int run_sample(const SampleArgs& args) {
    if (!args.seed_set)
        throw CLI::ValidationError("sampling requires an explicit --seed (no hidden entropy)");
    if (args.exact == args.mcmc)
        throw CLI::ValidationError("pass exactly one of --exact / --mcmc");

    std::vector<LatticeSet> draws(args.count);
    std::vector<McmcDiagnostics> diags(args.count);
    if (args.exact) {
        require_envelope(args.d, args.n, args.force);
        draws = sample_exact(args.d, args.n, args.count, args.seed);
    } else {
        const auto steps = static_cast<std::uint64_t>(args.steps);
        const double lambda =
            args.lambda > 0 ? args.lambda : tune_lambda(args.d, args.n, args.seed);
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(args.jobs),
                                                          std::max<std::size_t>(args.count, 1));
        std::atomic<bool> failed{false};
        std::string error;
        std::mutex error_mu;
        auto work = [&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= args.count || failed.load()) break;
                try {
                    // split-seed discipline: one independent stream per draw
                    draws[i] = sample_mcmc(args.d, args.n, steps, lambda,
                                           args.seed + 1000003ull * (i + 1), &diags[i]);
                } catch (const std::exception& e) {
                    std::lock_guard<std::mutex> lock(error_mu);
                    failed = true;
                    error = e.what();
                }
            }
        };
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& th : pool) th.join();
        if (failed) throw std::runtime_error(error);
    }

    std::ofstream file;
    std::ostream& sink = open_sink(file, args.jsonl);
    for (const LatticeSet& s : draws) sink << to_json(s) << "\n";
    if (!args.svg.empty() && !draws.empty()) render_svg(draws.front(), args.svg);
    if (!args.diag.empty() && args.mcmc) {
        std::ofstream dout(args.diag, std::ios::trunc);
        dout << "seed,steps,accept_rate,hits\n";
        char buf[64];
        for (const auto& dg : diags) {
            std::snprintf(buf, sizeof buf, "%.6f", dg.accept_rate);
            dout << dg.seed << ',' << dg.steps_per_block << ',' << buf << ',' << dg.hits << "\n";
        }
    }
    return 0;
}

// ---------------------------------------------------------------- render

struct RenderArgs {
    std::string in;
    std::string out_dir;
};

int run_render(const RenderArgs& args) {
    std::ifstream in(args.in);
    if (!in) throw std::runtime_error("cannot open input: " + args.in);
    std::string line;
    std::size_t index = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const LatticeSet s = lattice_set_from_json(line);
        char name[32];
        std::snprintf(name, sizeof name, "set_%04zu.svg", index);
        render_svg(s, args.out_dir + "/" + name);
        ++index;
    }
    std::cout << index << " files\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"odd cutsets in Z^d: exact enumeration, constructions, approximations, sampling"};
    app.require_subcommand(1);

    CountArgs count_args;
    auto* count = app.add_subcommand("count", "count odd cutsets with a given boundary size");
    count->add_option("--d", count_args.d, "dimension")->required();
    count->add_option("--n", count_args.n, "boundary-edge count")->required();
    count->add_option("--r", count_args.r, "connectivity radius");
    count->add_option("--mode", count_args.mode, "contains|within");
    count->add_option("--cache", count_args.cache, "count cache CSV path");
    count->add_option("--jobs", count_args.jobs, "worker threads");
    count->add_flag("--json", count_args.as_json, "machine-readable output");
    count->add_flag("--force", count_args.force, "run outside the desk-scale envelope");

    EnumerateArgs enum_args;
    auto* enumerate = app.add_subcommand("enumerate", "stream every odd cutset as JSON lines");
    enumerate->add_option("--d", enum_args.d)->required();
    enumerate->add_option("--n", enum_args.n)->required();
    enumerate->add_option("--r", enum_args.r);
    enumerate->add_option("--mode", enum_args.mode);
    enumerate->add_option("--out", enum_args.out, "output file (default stdout)");
    enumerate->add_option("--jobs", enum_args.jobs);
    enumerate->add_flag("--force", enum_args.force);

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "run a lemma/invariant suite");
    verify->add_option("--suite", verify_args.suite,
                       "lemmas|constructions|approx|covers|separation|sampler|bounds|all");
    verify->add_option("--d", verify_args.d);
    verify->add_option("--max-n", verify_args.max_n);
    verify->add_option("--jobs", verify_args.jobs);
    verify->add_option("--seed", verify_args.seed);
    verify->add_flag("--thorough", verify_args.thorough, "acceptance-scale statistics");
    verify->add_flag("--json", verify_args.as_json);

    ConstructArgs construct_args;
    auto* construct = app.add_subcommand("construct", "build the slab family");
    auto* slab = construct->add_subcommand("slab", "slab family of fixed boundary size");
    slab->add_option("--d", construct_args.d)->required();
    slab->add_option("--m", construct_args.m, "even side length >= 4")->required();
    slab->add_flag("--count-only", construct_args.count_only);
    slab->add_option("--out", construct_args.out);
    slab->add_option("--cache", construct_args.cache);
    construct->require_subcommand(1);

    ApproximateArgs approx_args;
    auto* approximate = app.add_subcommand("approximate", "run the witness pipeline per cutset");
    approximate->add_option("--d", approx_args.d)->required();
    approximate->add_option("--n", approx_args.n)->required();
    approximate->add_option("--t", approx_args.t)->required();
    approximate->add_flag("--trace", approx_args.trace, "dump every intermediate set");
    approximate->add_option("--jobs", approx_args.jobs);
    approximate->add_flag("--force", approx_args.force);

    BoundsArgs bounds_args;
    auto* bounds = app.add_subcommand("bounds", "bracket report CSV over an n grid");
    bounds->add_option("--d", bounds_args.d)->required();
    bounds->add_option("--n-grid", bounds_args.n_grid, "lo:hi:step");
    bounds->add_option("--C", bounds_args.c_upper, "upper-bound constant (rational)");
    bounds->add_option("--cache", bounds_args.cache);
    bounds->add_option("--out", bounds_args.out);

    SampleArgs sample_args;
    auto* sample = app.add_subcommand("sample", "draw random odd cutsets");
    sample->add_option("--d", sample_args.d)->required();
    sample->add_option("--n", sample_args.n)->required();
    sample->add_flag("--exact", sample_args.exact, "uniform draw from the enumerated family");
    sample->add_flag("--mcmc", sample_args.mcmc, "Metropolis chain with post-selection");
    sample->add_option("--count", sample_args.count, "number of draws");
    sample->add_option("--steps", sample_args.steps, "chain proposals per retry block");
    sample->add_option("--lambda", sample_args.lambda, "boundary fugacity (default: tuned)");
    sample->add_option("--seed", sample_args.seed)->each([&](const std::string&) {
        sample_args.seed_set = true;
    });
    sample->add_option("--svg", sample_args.svg, "render the first draw");
    sample->add_option("--jsonl", sample_args.jsonl, "write draws as JSON lines");
    sample->add_option("--diag", sample_args.diag, "diagnostics CSV (mcmc)");
    sample->add_option("--jobs", sample_args.jobs);
    sample->add_flag("--force", sample_args.force);

    RenderArgs render_args;
    auto* render = app.add_subcommand("render", "render a JSONL stream of sets to SVG files");
    render->add_option("--in", render_args.in)->required();
    render->add_option("--out", render_args.out_dir, "output directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(count)) return run_count(count_args);
        if (app.got_subcommand(enumerate)) return run_enumerate(enum_args);
        if (app.got_subcommand(verify)) return run_verify(verify_args);
        if (app.got_subcommand(construct)) return run_construct_slab(construct_args);
        if (app.got_subcommand(approximate)) return run_approximate(approx_args);
        if (app.got_subcommand(bounds)) return run_bounds(bounds_args);
        if (app.got_subcommand(sample)) return run_sample(sample_args);
        if (app.got_subcommand(render)) return run_render(render_args);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        return failure_exit(e);
    }
    return 2;
}
