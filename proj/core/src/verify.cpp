#include "oddcut/verify.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

#include "oddcut/approx.hpp"
#include "oddcut/approxbuild.hpp"
#include "oddcut/bounds.hpp"
#include "oddcut/constructions.hpp"
#include "oddcut/enumerate.hpp"
#include "oddcut/errors.hpp"
#include "oddcut/lattice.hpp"
#include "oddcut/oddsets.hpp"
#include "oddcut/sampler.hpp"
#include "oddcut/stats.hpp"

namespace oddcut {

namespace {

namespace mp = boost::multiprecision;

using Families = std::map<long long, std::vector<LatticeSet>>;

Families enumerate_families(const VerifyOptions& opt) {
    Families out;
    for (long long n = 2 * opt.d; n <= opt.max_n; n += 2 * opt.d) {
        EnumSpec spec;
        spec.d = opt.d;
        spec.n = n;
        spec.jobs = opt.jobs;
        auto family = enumerate_odd_cutsets(spec);
        if (!family.empty()) out.emplace(n, std::move(family));
    }
    return out;
}

struct Runner {
    SuiteResult result;
    void check(const std::string& name, auto&& fn) {
        CheckResult c;
        c.name = name;
        try {
            fn(c);
            c.pass = true;
        } catch (const std::exception& e) {
            c.pass = false;
            c.details = e.what();
        }
        result.checks.push_back(std::move(c));
    }
    void expect(bool cond, const std::string& msg) {
        if (!cond) throw check_error(msg);
    }
};

// ---------------------------------------------------------------- lemmas

void suite_lemmas(Runner& r, const VerifyOptions& opt) {
    const int d = opt.d;
    const Families fams = enumerate_families(opt);
    for (const auto& [n, family] : fams) {
        r.check("structural identities n=" + std::to_string(n), [&, n=n, &family=family](CheckResult& c) {
            for (const LatticeSet& s : family) {
                const auto rep = check_structural_lemmas(s);
                r.expect(rep.boundary_edges == static_cast<std::size_t>(n), "boundary size mismatch");
                // exact isoperimetry: |dS|^d >= (2d)^d |S|^(d-1)
                const mp::cpp_int lhs = mp::pow(mp::cpp_int(rep.boundary_edges), static_cast<unsigned>(d));
                const mp::cpp_int rhs = mp::pow(mp::cpp_int(2 * d), static_cast<unsigned>(d)) *
                                        mp::pow(mp::cpp_int(s.size()), static_cast<unsigned>(d - 1));
                r.expect(lhs >= rhs, "isoperimetric inequality violated");
                r.expect(rep.boundary_edges >= static_cast<std::size_t>(2 * d) * (2 * d - 1),
                         "minimum boundary bound violated");
                // boundary connectivity
                const auto prof = boundary_profile(s);
                r.expect(is_connected(prof.internal.set_union(prof.external), 1),
                         "vertex boundary disconnected");
            }
            c.details = std::to_string(family.size()) + " sets";
        });
        r.check("counting and core round-trips n=" + std::to_string(n), [&, &family=family](CheckResult&) {
            for (const LatticeSet& s : family) {
                for (int t = 1; t <= 2 * d; ++t) {
                    const LatticeSet nt = n_t(s, t);
                    r.expect(static_cast<long long>(nt.size()) * t <=
                                 2LL * d * static_cast<long long>(s.size()),
                             "N_t counting bound violated");
                }
                r.expect(from_even_core(even_core(s)) == s, "even-core round trip failed");
                const auto rep1 = classify(s, 1);
                r.expect(rep1.is_cutset, "enumerated set is not a cutset");
                for (int rr = 1; rr <= 3; ++rr)
                    r.expect(classify(s, rr).is_r_cutset, "cutset is not an r-cutset");
            }
        });
    }
    r.check("boundary connectivity at radius 2 for a split union", [&](CheckResult&) {
        // two diamonds four apart: connected and co-connected at r=2 only
        const LatticeSet a = from_even_core(LatticeSet(d, {origin(d)}));
        Vertex shift = origin(d);
        shift[0] = 4;
        const LatticeSet u = a.set_union(a.translated(shift));
        r.expect(!is_connected(u, 1), "expected r=1 disconnection");
        r.expect(is_connected(u, 2), "expected r=2 connection");
        r.expect(complement_connected(u, 2), "expected co-connection");
        const auto prof = boundary_profile(u);
        r.expect(is_connected(prof.internal.set_union(prof.external), 2),
                 "r=2 boundary connectivity violated");
    });
}

// --------------------------------------------------------- constructions

void suite_constructions(Runner& r, const VerifyOptions& opt) {
    const int d = opt.d;
    if (d == 2) {
        r.check("slab family m=4", [&](CheckResult& c) {
            SlabFamilySpec spec{2, 4};
            r.expect(boundary_profile(base_slab(spec)).edge_count() == 20, "base boundary");
            std::vector<LatticeSet> members;
            slab_family(spec, [&](const LatticeSet& s) { members.push_back(s); });
            r.expect(members.size() == 4, "family size");
            r.expect(slab_family_count(spec) == 4, "family count");
            std::sort(members.begin(), members.end());
            r.expect(std::adjacent_find(members.begin(), members.end()) == members.end(),
                     "family members not distinct");
            c.details = "4 members at boundary 20";
        });
        r.check("slab family m=6", [&](CheckResult& c) {
            SlabFamilySpec spec{2, 6};
            r.expect(boundary_profile(base_slab(spec)).edge_count() == 28, "base boundary");
            std::vector<LatticeSet> members;
            slab_family(spec, [&](const LatticeSet& s) { members.push_back(s); });
            const auto count = slab_family_count(spec);
            r.expect(count == static_cast<long long>(members.size()), "count vs stream");
            std::sort(members.begin(), members.end());
            r.expect(std::adjacent_find(members.begin(), members.end()) == members.end(),
                     "family members not distinct");
            const double lb = slab_family_log2_lower_bound(spec);
            r.expect(static_cast<double>(count.convert_to<double>()) >= std::pow(2.0, lb),
                     "family below guaranteed size");
            c.details = "count " + count.str();
        });
    } else {
        r.check("base slab m=4", [&](CheckResult&) {
            SlabFamilySpec spec{d, 4};
            long long md1 = 1, md2 = 1;
            for (int i = 0; i < d - 1; ++i) md1 *= 4;
            for (int i = 0; i < d - 2; ++i) md2 *= 4;
            r.expect(boundary_profile(base_slab(spec)).edge_count() ==
                         static_cast<std::size_t>(2LL * d * (md1 + (d - 1) * md2)),
                     "base boundary formula");
        });
    }

    const Families fams = enumerate_families(opt);
    r.check("peak creation is injective and exact", [&](CheckResult& c) {
        std::size_t built = 0;
        for (const auto& [n, family] : fams) {
            std::vector<LatticeSet> outputs;
            for (const LatticeSet& s : family) {
                const PeakedSet p = create_peak(s);
                r.expect(boundary_profile(p.set).edge_count() ==
                             static_cast<std::size_t>(n + 2LL * d * (2 * d - 3)),
                         "create_peak boundary");
                outputs.push_back(p.set);
                ++built;
            }
            std::sort(outputs.begin(), outputs.end());
            r.expect(std::adjacent_find(outputs.begin(), outputs.end()) == outputs.end(),
                     "create_peak collision");
        }
        c.details = std::to_string(built) + " peaks";
    });
    r.check("peak extension arithmetic", [&](CheckResult&) {
        const PeakedSet base{from_even_core(LatticeSet(d, {origin(d)})), origin(d)};
        const long long n0 = static_cast<long long>(boundary_profile(base.set).edge_count());
        const PeakedSet diag = extend_peak(base, 1, 0);
        r.expect(boundary_profile(diag.set).edge_count() ==
                     static_cast<std::size_t>(n0 + 2LL * d * (2 * d - 3)),
                 "diagonal bump boundary");
        const PeakedSet straight = extend_peak(base, 0, 1);
        r.expect(boundary_profile(straight.set).edge_count() ==
                     static_cast<std::size_t>(n0 + 2LL * d * (2 * d - 2)),
                 "straight bump boundary");
        r.expect(extend_peak(base, 0, 0).set == base.set, "identity extension");
    });
    r.check("peaked merge boundary and injectivity", [&](CheckResult&) {
        const PeakedSet q{from_even_core(LatticeSet(d, {origin(d)})), origin(d)};
        const long long m = static_cast<long long>(boundary_profile(q.set).edge_count());
        std::vector<LatticeSet> merged;
        for (const auto& [n, family] : fams) {
            for (const LatticeSet& s : family) {
                const PeakedSet p = create_peak(s);
                const LatticeSet t = merge_at_peak(p, q);
                r.expect(boundary_profile(t).edge_count() ==
                             static_cast<std::size_t>(n + 2LL * d * (2 * d - 3) + m - 4 * d),
                         "merge boundary");
                merged.push_back(t);
            }
        }
        std::sort(merged.begin(), merged.end());
        r.expect(std::adjacent_find(merged.begin(), merged.end()) == merged.end(),
                 "merge collision");
    });
    r.check("composed map is injective on pairs", [&](CheckResult& c) {
        // create the peak on the first side, grow and re-center the
        // origin-peaked second side, then merge
        std::vector<PeakedSet> qs{{from_even_core(LatticeSet(d, {origin(d)})), origin(d)}};
        for (const auto& [n, family] : fams)
            for (const LatticeSet& s : family) {
                const auto p = find_peak(s);
                if (p && p->peak == origin(d)) qs.push_back(*p);
            }
        std::size_t pairs = 0;
        for (const auto& [n, family] : fams)
            for (const PeakedSet& q : qs) {
                std::vector<LatticeSet> outputs;
                for (const LatticeSet& s : family) {
                    const PeakedSet p = create_peak(s);
                    const PeakedSet grown = translate_peak_to_origin(extend_peak(q, 1, 1));
                    outputs.push_back(merge_at_peak(p, grown));
                    ++pairs;
                }
                std::sort(outputs.begin(), outputs.end());
                r.expect(std::adjacent_find(outputs.begin(), outputs.end()) == outputs.end(),
                         "composed map collision");
            }
        c.details = std::to_string(pairs) + " pairs";
    });
    r.check("frobenius representation", [&](CheckResult&) {
        for (long long target = (2 * d - 3) * (2 * d - 2) + 1; target < (2 * d - 3) * (2 * d - 2) + 40;
             ++target) {
            const auto [rr, ss] = frobenius_rep(target, d);
            r.expect(rr >= 0 && ss >= 0 && rr * (2 * d - 3) + ss * (2 * d - 2) == target,
                     "representation identity");
            for (long long s2 = 0; s2 < ss; ++s2)
                r.expect((target - s2 * (2 * d - 2)) % (2 * d - 3) != 0, "s not minimal");
        }
    });
}

// ----------------------------------------------------------------- approx

void suite_approx(Runner& r, const VerifyOptions& opt) {
    const int d = opt.d;
    const Families fams = enumerate_families(opt);
    for (const auto& [n, family] : fams) {
        for (int t = 1; t < 2 * d; ++t) {
            r.check("pipeline n=" + std::to_string(n) + " t=" + std::to_string(t),
                    [&, n=n, t, &family=family](CheckResult& c) {
                for (const LatticeSet& s : family) {
                    const Approximation a = approximate(s, t);
                    r.expect(is_t_approximation(a, t), "not a t-approximation");
                    r.expect(approximates(a, s), "sample not approximated");
                    const DWitness w = d_map(a, s);
                    r.expect(static_cast<long long>(w.combined().size()) * (2 * d - t) <= n,
                             "|D(S)| above |dS|/(2d-t)");
                    r.expect(reconstruct_from_black(a, w.d_black) == s, "black reconstruction");
                    r.expect(reconstruct_from_white(a, w.d_white) == s, "white reconstruction");
                    count_bound_check(a, n, t, family);
                    // injectivity of the D-map across the family
                    std::vector<LatticeSet> witnesses;
                    for (const LatticeSet& other : family)
                        if (approximates(a, other)) witnesses.push_back(d_map(a, other).combined());
                    std::sort(witnesses.begin(), witnesses.end());
                    r.expect(std::adjacent_find(witnesses.begin(), witnesses.end()) ==
                                 witnesses.end(),
                             "D-map collision inside cut(A)");
                }
                c.details = std::to_string(family.size()) + " sets";
            });
        }
        r.check("separator record connectivity n=" + std::to_string(n), [&, &family=family](CheckResult&) {
            for (const LatticeSet& s : family)
                r.expect(is_connected(build_separator(s).u_set, 1 + 4), "u_set not (r+4)-connected");
        });
    }
    r.check("family report", [&](CheckResult& c) {
        if (fams.empty()) return;
        const auto& [n, family] = *fams.rbegin();
        const FamilySizeReport rep = family_size_report(family, 1);
        r.expect(rep.coverage_ok, "coverage failed");
        r.expect(rep.distinct >= 1 && rep.distinct <= rep.samples, "dedup out of range");
        c.details = std::to_string(rep.distinct) + " distinct of " + std::to_string(rep.samples);
    });
}

// ----------------------------------------------------------------- covers

void suite_covers(Runner& r, const VerifyOptions& opt) {
    const int d = opt.d;
    r.check("forced cover sums", [&](CheckResult&) {
        // path on three vertices: covers {mid}, {ends}
        const LatticeSet path(2, {Vertex{0, 0}, Vertex{1, 0}, Vertex{2, 0}});
        r.expect(cover_sum_half(path) == Rational(3, 4), "path cover sum");
        const LatticeSet edge(2, {Vertex{0, 0}, Vertex{1, 0}});
        r.expect(cover_sum_half(edge) == Rational(1), "edge cover sum");
        const auto covers = minimal_covers(path);
        r.expect(covers.size() == 2, "path cover count");
    });
    r.check("pipeline unknown regions", [&](CheckResult& c) {
        const Families fams = enumerate_families(opt);
        std::size_t checked = 0;
        for (const auto& [n, family] : fams)
            for (const LatticeSet& s : family)
                for (int t = 1; t < 2 * d; ++t) {
                    const Approximation a = approximate(s, t);
                    const Rational total = cover_sum_half(a.star());
                    r.expect(total <= 1, "pipeline cover sum above 1");
                    ++checked;
                }
        c.details = std::to_string(checked) + " unknown regions";
    });
    r.check("random induced subgraphs", [&](CheckResult& c) {
        std::mt19937_64 rng(opt.seed);
        for (int trial = 0; trial < 100; ++trial) {
            std::vector<Vertex> cells;
            for (Coord x = -3; x <= 3; ++x)
                for (Coord y = -3; y <= 3; ++y)
                    if (rng() & 1) cells.push_back(Vertex{x, y});
            const LatticeSet v(2, std::move(cells));
            if (v.empty()) continue;
            r.expect(cover_sum_half(v) <= 1, "random cover sum above 1");
        }
        c.details = "100 seeded trials";
    });
}

// ------------------------------------------------------------- separation

void suite_separation(Runner& r, const VerifyOptions& opt) {
    const Families fams = enumerate_families(opt);
    for (const auto& [n, family] : fams) {
        r.check("separation n=" + std::to_string(n), [&, &family=family](CheckResult& c) {
            for (const LatticeSet& s : family) {
                const LatticeSet rev = revealed(s);  // asserts separation internally
                r.expect(separates(rev, s), "revealed separation");
                const SeparatorReport sep = build_separator(s);
                r.expect(separates(n_t(sep.u_set, 1), s), "separator separation");
            }
            c.details = std::to_string(family.size()) + " sets";
        });
        r.check("four-cycle property n=" + std::to_string(n), [&, &family=family](CheckResult&) {
            for (const LatticeSet& s : family) {
                const auto prof = boundary_profile(s);
                for (const auto& [u, v] : prof.edge_boundary)
                    for (int k = 0; k < direction_count(s.d()); ++k) {
                        const Vertex e = direction(s.d(), k);
                        const bool ue = s.contains(u) != s.contains(vertex_add(u, e));
                        const bool ve = s.contains(v) != s.contains(vertex_add(v, e));
                        r.expect(ue || ve, "four-cycle property violated");
                    }
            }
        });
    }
}

// ---------------------------------------------------------------- sampler

void suite_sampler(Runner& r, const VerifyOptions& opt) {
    const int d = 2;
    r.check("exact sampler frequencies", [&](CheckResult& c) {
        const std::size_t draws = opt.thorough ? 4000 : 800;
        const auto family = sample_exact(d, 12, 10, opt.seed);
        for (const auto& s : family) r.expect(s == from_even_core(LatticeSet(2, {origin(2)})), "n=12 draw");
        EnumSpec spec;
        spec.d = d;
        spec.n = 16;
        const auto exact = enumerate_odd_cutsets(spec);
        const auto samples = sample_exact(d, 16, draws, opt.seed);
        std::vector<std::size_t> counts(exact.size(), 0);
        for (const auto& s : samples) {
            const auto it = std::find(exact.begin(), exact.end(), s);
            r.expect(it != exact.end(), "draw outside family");
            ++counts[static_cast<std::size_t>(it - exact.begin())];
        }
        const double expect_each = static_cast<double>(draws) / static_cast<double>(exact.size());
        const double sigma = std::sqrt(static_cast<double>(draws) * (1.0 / exact.size()) *
                                       (1.0 - 1.0 / exact.size()));
        for (std::size_t c0 : counts)
            r.expect(std::fabs(static_cast<double>(c0) - expect_each) <= 3.0 * sigma,
                     "frequency outside 3 sigma");
        c.details = std::to_string(draws) + " draws over " + std::to_string(exact.size());
        r.expect(sample_exact(d, 16, 32, opt.seed) == sample_exact(d, 16, 32, opt.seed),
                 "seeded determinism");
    });
    for (long long n : std::vector<long long>{16, 20}) {
        if (n == 20 && !opt.thorough) continue;
        r.check("chain sampler chi-squared n=" + std::to_string(n), [&, n](CheckResult& c) {
            EnumSpec spec;
            spec.d = d;
            spec.n = n;
            const auto exact = enumerate_odd_cutsets(spec);
            const std::size_t draws = opt.thorough ? 2000 : 300;
            const double lambda = tune_lambda(d, n, opt.seed);
            std::vector<std::size_t> counts(exact.size(), 0);
            for (std::size_t i = 0; i < draws; ++i) {
                const LatticeSet s =
                    sample_mcmc(d, n, 600, lambda, opt.seed + 1000003ull * (i + 1));
                const auto it = std::find(exact.begin(), exact.end(), s);
                r.expect(it != exact.end(), "chain draw outside family");
                ++counts[static_cast<std::size_t>(it - exact.begin())];
            }
            const double stat = chi_squared_uniform(counts);
            const double p = chi_squared_p_value(stat, static_cast<int>(exact.size()) - 1);
            std::ostringstream ss;
            ss << "chi2 " << stat << " p " << p << " lambda " << lambda;
            c.details = ss.str();
            r.expect(p > 0.01, "chi-squared p-value at or below 0.01: " + ss.str());
        });
    }
    r.check("render determinism", [&](CheckResult&) {
        const LatticeSet plus = from_even_core(LatticeSet(2, {origin(2)}));
        r.expect(render_svg_string(plus) == render_svg_string(plus), "svg bytes differ");
        r.expect(render_svg_string(plus).find("rect") != std::string::npos, "svg missing rects");
    });
}

// ----------------------------------------------------------------- bounds

void suite_bounds(Runner& r, const VerifyOptions& opt) {
    const int d = opt.d;
    r.check("bracket exponent arithmetic", [&](CheckResult& c) {
        CountTable counts;
        counts.insert_once({d, 2LL * d * (2 * d - 1), 1, "contains"}, {"1", kOracleVersion, 0.0});
        const long long n = 2LL * d * (2 * d - 1);
        const auto rep = theorem_bracket(d, n, 1, &counts);
        const BigRational expected =
            BigRational(n, 2 * d) *
            (1 + BigRational(1, mp::pow(mp::cpp_int(2), static_cast<unsigned>(2 * d))));
        r.expect(rep.lower_exponent == expected, "lower exponent");
        r.expect(rep.occ.has_value() && *rep.occ == 1, "occ attachment");
        const auto rep2 = theorem_bracket(d, 2 * n, 1, &counts);
        r.expect(rep2.lower_exponent == 2 * rep.lower_exponent, "exponent linearity");
        c.details = "lower 2^" + rep.lower_exponent.str().substr(0, 24);
    });
    r.check("growth estimate", [&](CheckResult& c) {
        CountTable empty;
        const auto rep = growth_estimate(d, empty);
        const BigRational slab =
            1 + BigRational(1, mp::pow(mp::cpp_int(2), static_cast<unsigned>(2 * d)));
        r.expect(rep.slab_log2 == slab, "slab exponent");
        r.expect(rep.mu_lower_log2 == Float50(slab), "mu lower from slab");
        CountTable some;
        some.insert_once({d, 2LL * d * (2 * d - 1), 1, "contains"}, {"1", kOracleVersion, 0.0});
        const auto rep2 = growth_estimate(d, some);
        r.expect(rep2.mu_lower_log2 >= rep.mu_lower_log2, "monotone under added counts");
        c.details = "log2 mu >= " + render_float(rep.mu_lower_log2).substr(0, 12);
    });
    r.check("supermultiplicativity verdicts", [&](CheckResult& c) {
        CountTable counts;
        for (long long n = 2 * d; n <= opt.max_n; n += 2 * d) {
            EnumSpec spec;
            spec.d = d;
            spec.n = n;
            count_odd_cutsets(spec, &counts);
        }
        std::size_t trials = 0;
        for (long long n = 2LL * d * (2 * d - 1); n <= opt.max_n; n += 2 * d)
            for (long long m = n; m <= opt.max_n; m += 2 * d)
                for (long long k : {12LL * d * d, 12LL * d * d + 2 * d}) {
                    const auto verdict = supermult_check(d, n, m, k, counts);
                    r.expect(verdict != SupermultVerdict::Fails, "supermultiplicativity FAILS");
                    ++trials;
                }
        c.details = std::to_string(trials) + " triples";
    });
}

}  // namespace

std::vector<std::string> suite_names() {
    return {"lemmas", "constructions", "approx", "covers", "separation", "sampler", "bounds"};
}

SuiteResult run_suite(const std::string& name, const VerifyOptions& options) {
    Runner runner;
    runner.result.suite = name;
    if (name == "lemmas") {
        suite_lemmas(runner, options);
    } else if (name == "constructions") {
        suite_constructions(runner, options);
    } else if (name == "approx") {
        suite_approx(runner, options);
    } else if (name == "covers") {
        suite_covers(runner, options);
    } else if (name == "separation") {
        suite_separation(runner, options);
    } else if (name == "sampler") {
        suite_sampler(runner, options);
    } else if (name == "bounds") {
        suite_bounds(runner, options);
    } else if (name == "all") {
        for (const std::string& s : suite_names()) {
            SuiteResult sub = run_suite(s, options);
            for (auto& c : sub.checks) {
                c.name = s + ": " + c.name;
                runner.result.checks.push_back(std::move(c));
            }
        }
    } else {
        throw std::invalid_argument("unknown suite: " + name);
    }
    return runner.result;
}

}  // namespace oddcut
