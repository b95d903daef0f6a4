#include <doctest.h>

#include <random>

#include "oddcut/approx.hpp"
#include "oddcut/approxbuild.hpp"
#include "oddcut/enumerate.hpp"
#include "oddcut/errors.hpp"
#include "oddcut/lattice.hpp"
#include "oddcut/oddsets.hpp"

using namespace oddcut;

namespace {

LatticeSet plus_pentomino() { return from_even_core(LatticeSet(2, {origin(2)})); }

Approximation empty_approx(const LatticeSet& s, Coord margin = 4) {
    Approximation a;
    a.d = s.d();
    a.window = s.bounding_box()->expanded(margin);
    a.black = LatticeSet(s.d());
    a.white = LatticeSet(s.d());
    return a;
}

// black = s, white = everything else in the window: fully decided
Approximation full_partition(const LatticeSet& s) {
    Approximation a = empty_approx(s, 2);
    a.black = s;
    a.white = a.star().set_minus(s);
    a.validate();
    return a;
}

std::vector<LatticeSet> family(int d, long long n) {
    EnumSpec spec;
    spec.d = d;
    spec.n = n;
    return enumerate_odd_cutsets(spec);
}

}  // namespace

TEST_CASE("t-approximation degree conditions") {
    const LatticeSet plus = plus_pentomino();
    Approximation full = full_partition(plus);
    CHECK(full.star().empty());
    for (int t = 1; t < 4; ++t) CHECK(is_t_approximation(full, t));

    // an unknown edge: degree one
    Approximation edgey;
    edgey.d = 2;
    edgey.window = Box{Vertex{0, 0}, Vertex{1, 0}};
    edgey.validate();
    CHECK(edgey.star() == LatticeSet(2, {Vertex{0, 0}, Vertex{1, 0}}));
    CHECK(is_t_approximation(edgey, 1));

    // the open approximation leaves high-degree unknowns
    Approximation open = empty_approx(plus);
    CHECK(!is_t_approximation(open, 1));
    CHECK_THROWS_AS(is_t_approximation(open, 4), std::domain_error);  // t < 2d required
    CHECK_THROWS_AS(is_t_approximation(open, 0), std::domain_error);
}

TEST_CASE("approximates is containment") {
    const LatticeSet plus = plus_pentomino();
    CHECK(approximates(empty_approx(plus), plus));
    CHECK(approximates(full_partition(plus), plus));
    Approximation bad = empty_approx(plus);
    bad.white = LatticeSet(2, {Vertex{0, 1}});  // claims an inside vertex is outside
    CHECK(!approximates(bad, plus));
}

TEST_CASE("d_map unfolds to the vertex boundary for the open approximation") {
    const LatticeSet plus = plus_pentomino();
    const Approximation open = empty_approx(plus);
    const DWitness w = d_map(open, plus);
    const BoundaryProfile prof = boundary_profile(plus);
    CHECK(w.d_black == prof.internal);
    CHECK(w.d_white == prof.external);
}

TEST_CASE("reconstruction from either half") {
    const LatticeSet plus = plus_pentomino();
    for (long long n : {12, 16}) {
        const auto sets = family(2, n);
        for (const LatticeSet& s : sets) {
            const Approximation a = approximate(s, 1);
            const DWitness w = d_map(a, s);
            CHECK(reconstruct_from_black(a, w.d_black) == s);
            CHECK(reconstruct_from_white(a, w.d_white) == s);
        }
    }
    // black = S leaves nothing to witness
    const Approximation solid = full_partition(plus);
    const DWitness w = d_map(solid, plus);
    CHECK(w.d_black.empty());
    CHECK(w.d_white.empty());
    CHECK(reconstruct_from_black(solid, w.d_black) == plus);
}

TEST_CASE("corrupted witnesses are rejected") {
    const LatticeSet s = family(2, 16).front();
    const Approximation a = approximate(s, 1);
    const DWitness w = d_map(a, s);
    if (!w.d_black.empty()) {
        LatticeSet corrupted = w.d_black.set_minus(LatticeSet(2, {w.d_black.members().front()}));
        CHECK_THROWS_AS(reconstruct_from_black(a, corrupted), check_error);
    }
    if (!w.d_white.empty()) {
        LatticeSet corrupted = w.d_white.set_minus(LatticeSet(2, {w.d_white.members().front()}));
        CHECK_THROWS_AS(reconstruct_from_white(a, corrupted), check_error);
    }
}

TEST_CASE("minimal covers of small graphs") {
    const LatticeSet path(2, {Vertex{0, 0}, Vertex{1, 0}, Vertex{2, 0}});
    const auto covers = minimal_covers(path);
    REQUIRE(covers.size() == 2);
    CHECK(covers[0] == LatticeSet(2, {Vertex{0, 0}, Vertex{2, 0}}));
    CHECK(covers[1] == LatticeSet(2, {Vertex{1, 0}}));
    CHECK(cover_sum_half(path) == Rational(3, 4));

    const LatticeSet edge(2, {Vertex{0, 0}, Vertex{1, 0}});
    CHECK(minimal_covers(edge).size() == 2);
    CHECK(cover_sum_half(edge) == Rational(1));  // tight

    // isolated vertices never enter a minimal cover
    const LatticeSet dots(2, {Vertex{0, 0}, Vertex{5, 5}});
    const auto dot_covers = minimal_covers(dots);
    REQUIRE(dot_covers.size() == 1);
    CHECK(dot_covers[0].empty());
    CHECK(cover_sum_half(dots) == Rational(1));
}

TEST_CASE("cover weights must respect the edge condition") {
    const LatticeSet edge(2, {Vertex{0, 0}, Vertex{1, 0}});
    CHECK_THROWS_AS(cover_sum(edge, [](const Vertex&) { return Rational(2, 3); }),
                    std::invalid_argument);
    CHECK(cover_sum(edge, [](const Vertex& v) {
              return v == Vertex{0, 0} ? Rational(1, 4) : Rational(3, 4);
          }) == Rational(1));
}

TEST_CASE("random induced subgraphs satisfy the cover-sum inequality") {
    std::mt19937_64 rng(424242);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Vertex> cells;
        for (Coord x = -3; x <= 3; ++x)
            for (Coord y = -3; y <= 3; ++y)
                if (rng() & 1) cells.push_back(Vertex{x, y});
        if (cells.empty()) continue;
        const Rational total = cover_sum_half(LatticeSet(2, std::move(cells)));
        CHECK(total <= 1);
        CHECK(total > 0);
    }
}

TEST_CASE("per-approximation counting bound") {
    const auto family12 = family(2, 12);
    const Approximation a = approximate(family12.front(), 1);
    const auto rep = count_bound_check(a, 12, 1, family12);
    CHECK(rep.cut_count >= 1);
    CHECK(rep.within_bound);  // 2^(12/3) = 16

    const auto family16 = family(2, 16);
    for (const LatticeSet& s : family16) {
        const auto r16 = count_bound_check(approximate(s, 1), 16, 1, family16);
        CHECK(r16.within_bound);
    }

    // a full partition pins down at most one set
    const auto solid = full_partition(family12.front());
    CHECK(count_bound_check(solid, 12, 1, family12).cut_count <= 1);
    CHECK_THROWS_AS(count_bound_check(empty_approx(family12.front()), 12, 1, family12),
                    check_error);
}
