#include <doctest.h>

#include "oddcut/approx.hpp"
#include "oddcut/approxbuild.hpp"
#include "oddcut/enumerate.hpp"
#include "oddcut/errors.hpp"
#include "oddcut/lattice.hpp"
#include "oddcut/oddsets.hpp"

using namespace oddcut;

namespace {
LatticeSet plus_pentomino(int d = 2) { return from_even_core(LatticeSet(d, {origin(d)})); }

std::vector<LatticeSet> family(int d, long long n) {
    EnumSpec spec;
    spec.d = d;
    spec.n = n;
    return enumerate_odd_cutsets(spec);
}
}  // namespace

TEST_CASE("revealed vertices separate") {
    const LatticeSet plus = plus_pentomino();
    const LatticeSet rev = revealed(plus);  // throws if separation fails
    for (const Vertex& arm : {Vertex{1, 0}, Vertex{-1, 0}, Vertex{0, 1}, Vertex{0, -1}})
        CHECK(rev.contains(arm));
    CHECK(separates(rev, plus));

    const LatticeSet diamond = from_even_core(LatticeSet(2, {Vertex{0, 0}, Vertex{1, 1}}));
    CHECK(separates(revealed(diamond), diamond));
    CHECK(separates(revealed(plus_pentomino(3)), plus_pentomino(3)));
}

TEST_CASE("greedy cover output covers its targets") {
    const LatticeSet around(2, {Vertex{1, 0}, Vertex{-1, 0}, Vertex{0, 1}, Vertex{0, -1}});
    const LatticeSet t4 = greedy_cover(around, 4);
    CHECK(t4.size() == 1);  // a single vertex dominates the origin

    CHECK(greedy_cover(LatticeSet(2), 1).empty());

    const LatticeSet t1 = greedy_cover(around, 1);
    for (const Vertex& target : n_t(around, 1)) {
        bool covered = false;
        for (const Vertex& u : t1)
            if (l1_distance(u, target) == 1) covered = true;
        CHECK(covered);
    }
}

TEST_CASE("separator neighborhoods separate every enumerated set") {
    for (const LatticeSet& s : family(2, 16)) {
        const SeparatorReport rep = build_separator(s);
        CHECK(separates(n_t(rep.u_set, 1), s));
        CHECK(rep.size_bound > 0);
    }
    const SeparatorReport r3 = build_separator(plus_pentomino(3));
    CHECK(separates(n_t(r3.u_set, 1), plus_pentomino(3)));
}

TEST_CASE("separator intermediates on the plus pentomino") {
    const SeparatorReport rep = build_separator(plus_pentomino());
    CHECK(rep.s_threshold == 2);  // ceil(sqrt(2 ln 2))
    CHECK(rep.t_threshold == 1);  // ceil(2/4)
    // the four diagonal outside cells see two arms each
    CHECK(rep.a_in == LatticeSet(2, {Vertex{-1, -1}, Vertex{-1, 1}, Vertex{1, -1}, Vertex{1, 1}}));
    CHECK(rep.u_set.contains(Vertex{0, 0}));
}

TEST_CASE("small approximation witness and family") {
    const LatticeSet plus = plus_pentomino();
    const Box window = plus.bounding_box()->expanded(4);
    const SeparatorReport sep = build_separator(plus);
    const LatticeSet w = n_t(sep.u_set, 1);

    const Approximation witness = small_approx_witness(w, plus, window);
    CHECK(approximates(witness, plus));
    CHECK(witness.star().size() <= 3 * w.size());

    const auto fam = small_approx_family(w, window);
    bool member = false;
    for (const Approximation& a : fam)
        if (a.same_pair(witness)) member = true;
    CHECK(member);

    // the window minus a huge separator leaves only the sea: family of one
    std::vector<Vertex> big;
    for (Coord x = -3; x <= 3; ++x)
        for (Coord y = -3; y <= 3; ++y) big.push_back(Vertex{x, y});
    const LatticeSet blob(2, std::move(big));
    const auto tiny = small_approx_family(blob, blob.bounding_box()->expanded(2));
    CHECK(tiny.size() == 1);
}

TEST_CASE("witnesses cover their own sets across the n=16 family") {
    for (const LatticeSet& s : family(2, 16)) {
        const Box window = s.bounding_box()->expanded(4);
        const LatticeSet w = n_t(build_separator(s).u_set, 1);
        const Approximation witness = small_approx_witness(w, s, window);
        const auto fam = small_approx_family(w, window);
        bool member = false;
        for (const Approximation& a : fam)
            if (a.same_pair(witness)) member = true;
        CHECK(member);
    }
}

TEST_CASE("eliminate_isolated absorbs decided vertices") {
    // a lone unknown odd vertex whose whole neighborhood is white
    Approximation a;
    a.d = 2;
    a.window = Box{Vertex{-1, -2}, Vertex{3, 2}};
    a.white = LatticeSet(2, {Vertex{0, 0}, Vertex{2, 0}, Vertex{1, 1}, Vertex{1, -1}});
    a.validate();
    CHECK(a.star().contains(Vertex{1, 0}));
    const Approximation b = eliminate_isolated(a);
    CHECK(!b.star().contains(Vertex{1, 0}));
    CHECK(b.white.contains(Vertex{1, 0}));
    CHECK(b.star().subset_of(a.star()));

    // the empty approximation has nothing to absorb inside a small window
    Approximation open;
    open.d = 2;
    open.window = Box{Vertex{-2, -2}, Vertex{2, 2}};
    const Approximation same = eliminate_isolated(open);
    CHECK(same.black.empty());
    CHECK(same.white.empty());

    // idempotence on an already isolated-free result
    const Approximation c = eliminate_isolated(b);
    CHECK(c.same_pair(b));
}

TEST_CASE("refinement with an empty unknown region is a no-op") {
    const LatticeSet plus = plus_pentomino();
    Approximation solid;
    solid.d = 2;
    solid.window = plus.bounding_box()->expanded(2);
    solid.black = plus;
    solid.white = solid.star().set_minus(plus);
    solid.validate();
    const RefineResult rr = refine_to_t(solid, plus, 1, 4);
    CHECK(rr.record.empty());
    CHECK(rr.refined.star().empty());
    CHECK(approximates(rr.refined, plus));
}

TEST_CASE("refinement precondition is enforced") {
    const LatticeSet plus = plus_pentomino();
    Approximation open;
    open.d = 2;
    open.window = plus.bounding_box()->expanded(3);
    CHECK_THROWS_AS(refine_to_t(open, plus, 1, 0), std::invalid_argument);
}

TEST_CASE("pipeline produces valid t-approximations") {
    for (long long n : {12, 16}) {
        const auto sets = family(2, n);
        for (const LatticeSet& s : sets) {
            for (int t = 1; t < 4; ++t) {
                const Approximation a = approximate(s, t);
                CHECK(is_t_approximation(a, t));
                CHECK(approximates(a, s));
                const DWitness w = d_map(a, s);
                CHECK(static_cast<long long>(w.combined().size()) * (4 - t) <= n);
            }
        }
    }
    const Approximation a3 = approximate(plus_pentomino(3), 2);
    CHECK(is_t_approximation(a3, 2));
}

TEST_CASE("pipeline stars shrink monotonically") {
    const LatticeSet s = family(2, 16).front();
    const Box window = s.bounding_box()->expanded(4);
    const LatticeSet w = n_t(build_separator(s).u_set, 1);
    const Approximation a0 = small_approx_witness(w, s, window);
    const RefineResult a1 = refine_to_t(a0, s, 2, static_cast<long long>(a0.star().size()));
    const RefineResult a2 = refine_to_t(a1.refined, s, 1, 16 / 2);
    CHECK(a1.refined.star().subset_of(a0.star()));
    CHECK(a2.refined.star().subset_of(a1.refined.star()));
}

TEST_CASE("family size report dedups and covers") {
    const auto sets = family(2, 16);
    const FamilySizeReport rep = family_size_report(sets, 1);
    CHECK(rep.samples == 4);
    CHECK(rep.distinct >= 1);
    CHECK(rep.distinct <= 4);
    CHECK(rep.coverage_ok);
    CHECK(rep.max_star_size <= rep.max_w3);
    CHECK(rep.formula_bound > 0);
}
