// Acceptance suite: one line per criterion, exit 0 only when every
// criterion passes at its stated tolerance.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "oddcut/approx.hpp"
#include "oddcut/approxbuild.hpp"
#include "oddcut/bounds.hpp"
#include "oddcut/cache.hpp"
#include "oddcut/constructions.hpp"
#include "oddcut/enumerate.hpp"
#include "oddcut/lattice.hpp"
#include "oddcut/oddsets.hpp"
#include "oddcut/sampler.hpp"
#include "oddcut/stats.hpp"

namespace fs = std::filesystem;
namespace mp = boost::multiprecision;
using namespace oddcut;

namespace {

struct Criterion {
    std::string name;
    bool pass = false;
    std::string details;
    double seconds = 0;
};

std::vector<Criterion> results;

void run(const std::string& name, auto&& fn, double budget_seconds = 0) {
    Criterion c;
    c.name = name;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        fn(c);
        c.pass = true;
    } catch (const std::exception& e) {
        c.pass = false;
        c.details = e.what();
    }
    c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.pass && budget_seconds > 0 && c.seconds >= budget_seconds) {
        c.pass = false;
        c.details = "over the stated runtime budget";
    }
    std::printf("%s %s (%.2fs)%s%s\n", c.pass ? "PASS" : "FAIL", c.name.c_str(), c.seconds,
                c.details.empty() ? "" : " -- ", c.details.c_str());
    std::fflush(stdout);
    results.push_back(std::move(c));
}

void expect(bool cond, const std::string& msg) {
    if (!cond) throw std::runtime_error(msg);
}

std::map<std::pair<int, long long>, std::vector<LatticeSet>> g_families;

const std::vector<LatticeSet>& family(int d, long long n) {
    const auto key = std::make_pair(d, n);
    auto it = g_families.find(key);
    if (it != g_families.end()) return it->second;
    EnumSpec spec;
    spec.d = d;
    spec.n = n;
    return g_families.emplace(key, enumerate_odd_cutsets(spec)).first->second;
}

std::vector<std::pair<int, long long>> enumerated_grid() {
    return {{2, 12}, {2, 16}, {2, 20}, {3, 30}};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// ----------------------------------------------------------- criteria 1-8

void criterion_oracle(Criterion& c) {
    const struct {
        int d;
        long long n;
        std::uint64_t expect_count;
    } rows[] = {{2, 12, 1}, {2, 8, 0}, {2, 13, 0}, {2, 16, 4}, {3, 30, 1}};
    for (const auto& row : rows) {
        const auto t0 = std::chrono::steady_clock::now();
        EnumSpec spec;
        spec.d = row.d;
        spec.n = row.n;
        std::uint64_t count = 0;
        if (row.n % (2 * row.d) != 0)
            count = 0;
        else
            count = count_odd_cutsets(spec);
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        expect(count == row.expect_count,
               "count(" + std::to_string(row.d) + "," + std::to_string(row.n) + ") = " +
                   std::to_string(count) + ", locked " + std::to_string(row.expect_count));
        expect(secs < 60.0, "count exceeded 60 s");
    }
    c.details = "locked counts 1/0/0/4/1";
}

void criterion_lemmas(Criterion& c) {
    std::size_t sets = 0;
    for (const auto& [d, n] : enumerated_grid()) {
        for (const LatticeSet& s : family(d, n)) {
            const auto rep = check_structural_lemmas(s);  // throws on any identity failure
            expect(rep.boundary_edges == static_cast<std::size_t>(n), "boundary size");
            for (std::size_t sz : rep.directional_sizes)
                expect(sz == static_cast<std::size_t>(n / (2 * d)), "directional size");
            expect(rep.parity_count_difference == n / (2 * d), "parity difference");
            expect(rep.boundary_edges >= static_cast<std::size_t>(2 * d) * (2 * d - 1),
                   "minimal boundary");
            const mp::cpp_int lhs = mp::pow(mp::cpp_int(n), static_cast<unsigned>(d));
            const mp::cpp_int rhs = mp::pow(mp::cpp_int(2 * d), static_cast<unsigned>(d)) *
                                    mp::pow(mp::cpp_int(s.size()), static_cast<unsigned>(d - 1));
            expect(lhs >= rhs, "isoperimetry");
            const auto prof = boundary_profile(s);
            expect(is_connected(prof.internal.set_union(prof.external), 1),
                   "boundary connectivity");
            ++sets;
        }
    }
    c.details = std::to_string(sets) + " cutsets, zero tolerance";
}

void criterion_constructions(Criterion& c) {
    {
        std::vector<LatticeSet> members;
        slab_family({2, 4}, [&](const LatticeSet& s) { members.push_back(s); });
        expect(members.size() == 4, "slab m=4 family size");
        std::sort(members.begin(), members.end());
        expect(std::adjacent_find(members.begin(), members.end()) == members.end(),
               "slab m=4 distinctness");
        for (const LatticeSet& s : members)
            expect(boundary_profile(s).edge_count() == 20, "slab m=4 boundary");
    }
    {
        const SlabFamilySpec spec{2, 6};
        const auto count = slab_family_count(spec);
        // exhaustive sum over B1 of 2^|A2(B1)|
        const LatticeSet a1 = slab_level_one(spec);
        mp::cpp_int expected = 0;
        const auto& bumps = a1.members();
        for (unsigned mask = 0; mask < (1u << a1.size()); ++mask) {
            std::vector<Vertex> chosen;
            for (unsigned i = 0; i < a1.size(); ++i)
                if (mask & (1u << i)) chosen.push_back(bumps[i]);
            expected += mp::pow(mp::cpp_int(2),
                                static_cast<unsigned>(slab_level_two(spec, LatticeSet(2, chosen)).size()));
        }
        expect(count == expected, "slab m=6 count vs exhaustive sum");
        expect(count.convert_to<double>() >= std::pow(2.0, 4.0 + 0.5), "slab m=6 guaranteed size");
    }
    // peak operations: exact boundary arithmetic and injectivity
    for (const auto& [d, n] : enumerated_grid()) {
        std::set<LatticeSet> created;
        const PeakedSet q{from_even_core(LatticeSet(d, {origin(d)})), origin(d)};
        const std::size_t qn = boundary_profile(q.set).edge_count();
        std::set<LatticeSet> merged;
        for (const LatticeSet& s : family(d, n)) {
            const PeakedSet p = create_peak(s);
            expect(boundary_profile(p.set).edge_count() ==
                       static_cast<std::size_t>(n + 2LL * d * (2 * d - 3)),
                   "create_peak boundary");
            created.insert(p.set);
            merged.insert(merge_at_peak(p, q));
        }
        expect(created.size() == family(d, n).size(), "create_peak injectivity");
        expect(merged.size() == family(d, n).size(), "merge injectivity");
        for (const LatticeSet& t : merged)
            expect(boundary_profile(t).edge_count() ==
                       static_cast<std::size_t>(n + 2LL * d * (2 * d - 3) + qn - 4 * d),
                   "merge boundary");
        const PeakedSet base{from_even_core(LatticeSet(d, {origin(d)})), origin(d)};
        const std::size_t bn = boundary_profile(base.set).edge_count();
        expect(boundary_profile(extend_peak(base, 2, 1).set).edge_count() ==
                   bn + static_cast<std::size_t>(2 * d) * (2 * (2 * d - 3) + (2 * d - 2)),
               "extend_peak boundary");
    }
    c.details = "slabs 4/25, peak arithmetic exact";
}

void criterion_pipeline(Criterion& c) {
    std::size_t runs = 0;
    for (const auto& [d, n] : enumerated_grid()) {
        const auto& fam = family(d, n);
        for (const LatticeSet& s : fam) {
            for (int t = 1; t < 2 * d; ++t) {
                const Approximation a = approximate(s, t);
                expect(is_t_approximation(a, t), "t-approximation");
                expect(approximates(a, s), "membership");
                const DWitness w = d_map(a, s);  // asserts the minimal-cover property
                expect(static_cast<long long>(w.combined().size()) * (2 * d - t) <= n,
                       "|D(S)| bound");
                expect(reconstruct_from_black(a, w.d_black) == s, "black reconstruction");
                expect(reconstruct_from_white(a, w.d_white) == s, "white reconstruction");
                const auto bound = count_bound_check(a, n, t, fam);
                expect(bound.within_bound, "cut-count bound");
                ++runs;
            }
        }
    }
    c.details = std::to_string(runs) + " pipeline runs, zero failures";
}

void criterion_covers(Criterion& c) {
    std::size_t checked = 0;
    for (const auto& [d, n] : enumerated_grid())
        for (const LatticeSet& s : family(d, n))
            for (int t = 1; t < 2 * d; ++t) {
                const Rational total = cover_sum_half(approximate(s, t).star());
                expect(total <= 1, "pipeline cover sum");
                ++checked;
            }
    std::mt19937_64 rng(20240901);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Vertex> cells;
        for (Coord x = -3; x <= 3; ++x)
            for (Coord y = -3; y <= 3; ++y)
                if (rng() & 1) cells.push_back(Vertex{x, y});
        if (cells.empty()) continue;
        expect(cover_sum_half(LatticeSet(2, std::move(cells))) <= 1, "random cover sum");
        ++checked;
    }
    c.details = std::to_string(checked) + " exact rational sums";
}

void criterion_separation(Criterion& c) {
    std::size_t sets = 0;
    for (const auto& [d, n] : enumerated_grid())
        for (const LatticeSet& s : family(d, n)) {
            expect(separates(revealed(s), s), "revealed separation");
            expect(separates(n_t(build_separator(s).u_set, 1), s), "separator separation");
            ++sets;
        }
    c.details = std::to_string(sets) + " exhaustive edge checks";
}

void criterion_sampler(Criterion& c) {
    {
        const std::size_t draws = 4000;
        const auto& fam = family(2, 16);
        const auto samples = sample_exact(2, 16, draws, 90210);
        std::vector<std::size_t> counts(fam.size(), 0);
        for (const LatticeSet& s : samples) {
            const auto it = std::find(fam.begin(), fam.end(), s);
            expect(it != fam.end(), "draw outside family");
            ++counts[static_cast<std::size_t>(it - fam.begin())];
        }
        const double p0 = 1.0 / static_cast<double>(fam.size());
        const double sigma = std::sqrt(draws * p0 * (1 - p0));
        for (std::size_t k : counts)
            expect(std::fabs(static_cast<double>(k) - draws * p0) <= 3 * sigma,
                   "exact frequency outside 3 sigma");
    }
    std::string detail;
    for (long long n : {16LL, 20LL}) {
        const auto& fam = family(2, n);
        const double lambda = tune_lambda(2, n, 314159);
        std::vector<std::size_t> counts(fam.size(), 0);
        const std::size_t draws = 2000;
        for (std::size_t i = 0; i < draws; ++i) {
            const LatticeSet s = sample_mcmc(2, n, 600, lambda, 314159 + 1000003ull * (i + 1));
            const auto it = std::find(fam.begin(), fam.end(), s);
            expect(it != fam.end(), "chain draw outside family");
            ++counts[static_cast<std::size_t>(it - fam.begin())];
        }
        const double p = chi_squared_p_value(chi_squared_uniform(counts),
                                             static_cast<int>(fam.size()) - 1);
        char buf[64];
        std::snprintf(buf, sizeof buf, " n=%lld p=%.3f", n, p);
        detail += buf;
        expect(p > 0.01, "chi-squared p <= 0.01 at n=" + std::to_string(n));
    }
    // fixed-seed byte determinism
    expect(sample_exact(2, 16, 100, 7) == sample_exact(2, 16, 100, 7), "exact determinism");
    const LatticeSet a = sample_mcmc(2, 16, 500, 0.6, 7777);
    const LatticeSet b = sample_mcmc(2, 16, 500, 0.6, 7777);
    expect(a == b, "chain determinism");
    expect(render_svg_string(a) == render_svg_string(b), "svg byte determinism");
    c.details = "4000 exact draws; 2000 chain draws each;" + detail;
}

void criterion_bounds(Criterion& c) {
    CountTable counts;
    for (const auto& [d, n] : enumerated_grid()) {
        EnumSpec spec;
        spec.d = d;
        spec.n = n;
        count_odd_cutsets(spec, &counts);
    }
    const BoundsReport rep = theorem_bracket(2, 12, 1, &counts);
    expect(rep.lower_exponent == BigRational(51, 16), "exact lower exponent (n/4)(1+1/16)");
    expect(rep.occ && *rep.occ == 1, "occ attached");

    const GrowthReport growth = growth_estimate(2, counts);
    expect(growth.slab_log2 == BigRational(17, 16), "slab bound 1.0625");
    expect(growth.mu_lower_log2 >= Float50(BigRational(17, 16)), "log2 mu(2) >= 1.0625");

    std::size_t trials = 0;
    for (long long n = 12; n <= 20; n += 4)
        for (long long m = n; m <= 20; m += 4)
            for (long long k : {48LL, 52LL, 96LL}) {
                expect(supermult_check(2, n, m, k, counts) != SupermultVerdict::Fails,
                       "supermultiplicativity FAILS");
                ++trials;
            }
    c.details = "exact exponents; " + std::to_string(trials) + " supermult triples, none FAILS";
}

// -------------------------------------------------------------- criterion 9

#ifndef ODDCUT_CLI_PATH
#define ODDCUT_CLI_PATH "oddcut"
#endif

int shell(const std::string& cmd) { return std::system(cmd.c_str()); }

void criterion_cli_determinism(Criterion& c) {
    const std::string cli = ODDCUT_CLI_PATH;
    const fs::path dir = fs::temp_directory_path() / "oddcut_acceptance";
    fs::remove_all(dir);
    fs::create_directories(dir);
    const std::string base = dir.string();

    struct Cmd {
        std::string name;
        std::string args;           // with {J} and {OUT} placeholders
        std::vector<std::string> outputs;  // relative, with {J}
    };
    const std::vector<Cmd> cmds = {
        {"enumerate", "enumerate --d 2 --n 20 --jobs {J} --out {B}/enum_{J}.jsonl",
         {"enum_{J}.jsonl"}},
        {"count", "count --d 2 --n 16 --json --jobs {J} --cache {B}/cache_{J}.csv > {B}/count_{J}.json",
         {"count_{J}.json"}},
        {"construct", "construct slab --d 2 --m 6 --cache {B}/slabcache_{J}.csv --out {B}/slab_{J}.jsonl > {B}/slab_{J}.count",
         {"slab_{J}.jsonl", "slab_{J}.count"}},
        {"approximate", "approximate --d 2 --n 12 --t 1 --jobs {J} --trace > {B}/approx_{J}.jsonl",
         {"approx_{J}.jsonl"}},
        {"bounds", "bounds --d 2 --n-grid 12:24:4 --C 1 --cache {B}/cache_{J}.csv --out {B}/bounds_{J}.csv",
         {"bounds_{J}.csv"}},
        {"sample",
         "sample --d 2 --n 16 --mcmc --count 8 --steps 400 --lambda 0.6 --seed 99 --jobs {J} "
         "--jsonl {B}/sample_{J}.jsonl --svg {B}/sample_{J}.svg --diag {B}/diag_{J}.csv > /dev/null",
         {"sample_{J}.jsonl", "sample_{J}.svg", "diag_{J}.csv"}},
        {"render", "render --in {B}/enum_{J}.jsonl --out {B}/render_{J} > {B}/render_{J}.out",
         {"render_{J}.out", "render_{J}/set_0000.svg", "render_{J}/set_0018.svg"}},
    };

    auto fill = [&](std::string s, const std::string& jobs) {
        for (std::string::size_type pos; (pos = s.find("{J}")) != std::string::npos;)
            s.replace(pos, 3, jobs);
        for (std::string::size_type pos; (pos = s.find("{B}")) != std::string::npos;)
            s.replace(pos, 3, base);
        return s;
    };

    for (const Cmd& cmd : cmds) {
        for (const std::string jobs : {"1", "8"}) {
            if (cmd.name == "render") fs::create_directories(dir / ("render_" + jobs));
            const std::string full = cli + " " + fill(cmd.args, jobs);
            expect(shell(full) == 0, cmd.name + " exited nonzero with --jobs " + jobs);
        }
        for (const std::string& out : cmd.outputs) {
            const std::string f1 = fill(out, "1"), f8 = fill(out, "8");
            expect(slurp(dir / f1) == slurp(dir / f8),
                   cmd.name + ": " + f1 + " differs between --jobs 1 and --jobs 8");
            expect(!slurp(dir / f1).empty(), cmd.name + ": empty output " + f1);
        }
    }

    // cache round trip: an identical repeat invocation performs no search
    expect(shell(cli + " " + fill("count --d 2 --n 16 --json --cache {B}/cache_1.csv > {B}/count_again.json", "1")) == 0,
           "repeat count failed");
    expect(slurp(dir / "count_again.json").find("\"searched\":false") != std::string::npos,
           "repeat count did not read the cache");
    c.details = std::to_string(cmds.size()) + " commands byte-identical across --jobs 1/8";
}

}  // namespace

int main() {
    run("criterion-1-oracle-baselines", criterion_oracle);
    run("criterion-2-structural-lemmas", criterion_lemmas);
    run("criterion-3-constructions", criterion_constructions, 60.0);
    run("criterion-4-approximation-pipeline", criterion_pipeline);
    run("criterion-5-cover-sum", criterion_covers);
    run("criterion-6-separation", criterion_separation);
    run("criterion-7-sampler", criterion_sampler);
    run("criterion-8-bounds", criterion_bounds);
    run("criterion-9-cli-determinism", criterion_cli_determinism);

    std::size_t passed = 0;
    for (const auto& c : results) passed += c.pass;
    std::printf("%zu/%zu criteria passed\n", passed, results.size());
    return passed == results.size() ? 0 : 1;
}
