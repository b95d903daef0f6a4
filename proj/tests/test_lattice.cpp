#include <doctest.h>

#include <random>

#include <boost/multiprecision/cpp_int.hpp>

#include "oddcut/json_io.hpp"
#include "oddcut/lattice.hpp"
#include "oddcut/oddsets.hpp"

using namespace oddcut;
namespace mp = boost::multiprecision;

namespace {

LatticeSet plus_pentomino() { return from_even_core(LatticeSet(2, {Vertex{0, 0}})); }

LatticeSet random_subset(int d, Coord radius, double keep, std::mt19937_64& rng) {
    std::vector<Vertex> cells;
    std::uniform_real_distribution<double> unit(0, 1);
    std::vector<Coord> idx(static_cast<std::size_t>(d), -radius);
    for (;;) {
        if (unit(rng) < keep) cells.emplace_back(std::vector<Coord>(idx.begin(), idx.end()));
        int axis = 0;
        while (axis < d) {
            if (++idx[static_cast<std::size_t>(axis)] <= radius) break;
            idx[static_cast<std::size_t>(axis)] = -radius;
            ++axis;
        }
        if (axis == d) break;
    }
    return LatticeSet(d, std::move(cells));
}

}  // namespace

TEST_CASE("neighbors come in fixed direction order") {
    const auto nb = neighbors(Vertex{0, 0});
    CHECK(nb == std::vector<Vertex>{Vertex{1, 0}, Vertex{-1, 0}, Vertex{0, 1}, Vertex{0, -1}});
    CHECK(neighbors(Vertex{1, 1, 1}).size() == 6);
    for (const Vertex& w : neighbors(Vertex{5, -3})) CHECK(w != Vertex{5, -3});
}

TEST_CASE("parity by coordinate sum") {
    CHECK(parity(Vertex{0, 0}) == Parity::Even);
    CHECK(parity(Vertex{1, 0}) == Parity::Odd);
    CHECK(parity(Vertex{1, 1}) == Parity::Even);
    CHECK(parity(Vertex{-1, 2, 0}) == Parity::Odd);
}

TEST_CASE("boundary profile of the plus pentomino") {
    const LatticeSet s = plus_pentomino();
    const BoundaryProfile p = boundary_profile(s);
    CHECK(p.edge_count() == 12);
    // direction +e2 is index 2
    CHECK(p.directional[2] == LatticeSet(2, {Vertex{-1, 0}, Vertex{0, 1}, Vertex{1, 0}}));
    CHECK(p.directional[2].size() == 3);
}

TEST_CASE("boundary profile of a singleton") {
    const LatticeSet s(2, {Vertex{0, 0}});
    const BoundaryProfile p = boundary_profile(s);
    CHECK(p.edge_count() == 4);
    CHECK(p.internal == s);
    CHECK(p.external.size() == 4);
}

TEST_CASE("boundary profile rejects the empty set") {
    CHECK_THROWS_WITH_AS(boundary_profile(LatticeSet(2)), "empty set has no boundary profile",
                         std::invalid_argument);
}

TEST_CASE("directional boundary sizes sum to the edge count") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        const LatticeSet u = random_subset(2, 3, 0.45, rng);
        if (u.empty()) continue;
        const BoundaryProfile p = boundary_profile(u);
        std::size_t total = 0;
        for (const auto& dir : p.directional) total += dir.size();
        CHECK(total == p.edge_count());
        // recompute internal/external directly from the definitions
        std::vector<Vertex> internal, external;
        for (const Vertex& v : u)
            for (const Vertex& w : neighbors(v))
                if (!u.contains(w)) {
                    internal.push_back(v);
                    external.push_back(w);
                }
        CHECK(p.internal == LatticeSet(2, internal));
        CHECK(p.external == LatticeSet(2, external));
        // isoperimetry, exactly: |dU|^d >= (2d)^d |U|^(d-1)
        const mp::cpp_int lhs = mp::pow(mp::cpp_int(p.edge_count()), 2u);
        const mp::cpp_int rhs = mp::cpp_int(16) * mp::cpp_int(u.size());
        CHECK(lhs >= rhs);
    }
}

TEST_CASE("n_t counts neighbors anywhere") {
    const LatticeSet u(2, {Vertex{1, 0}, Vertex{-1, 0}, Vertex{0, 1}, Vertex{0, -1}});
    CHECK(n_t(u, 4) == LatticeSet(2, {Vertex{0, 0}}));
    CHECK(n_t(LatticeSet(2, {Vertex{1, 0}}), 2).empty());
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const LatticeSet v = random_subset(2, 3, 0.4, rng);
        // N_1(v) recomputed from the definition
        std::vector<Vertex> adjacent;
        for (const Vertex& m : v)
            for (const Vertex& w : neighbors(m)) adjacent.push_back(w);
        CHECK(n_t(v, 1) == LatticeSet(2, adjacent));
        for (int t = 1; t <= 4; ++t)
            CHECK(static_cast<long long>(n_t(v, t).size()) * t <= 4ll * static_cast<long long>(v.size()));
    }
}

TEST_CASE("closure adds the external boundary") {
    CHECK(closure(LatticeSet(2, {Vertex{0, 0}})) == plus_pentomino());
    CHECK(closure(LatticeSet(2)).empty());
    CHECK(plus_pentomino().subset_of(closure(plus_pentomino())));
    CHECK(closure(plus_pentomino()).size() > plus_pentomino().size());
}

TEST_CASE("radius connectivity") {
    const LatticeSet two(2, {Vertex{0, 0}, Vertex{2, 0}});
    CHECK(!is_connected(two, 1));
    CHECK(is_connected(two, 2));
    CHECK(is_connected(plus_pentomino(), 1));
    const LatticeSet diag(2, {Vertex{0, 0}, Vertex{1, 1}});
    CHECK(!is_connected(diag, 1));
    CHECK(components(diag, 1).size() == 2);
    CHECK(components(diag, 1).front().members().front() == Vertex{0, 0});
    CHECK(is_connected(LatticeSet(2), 1));
}

TEST_CASE("complement connectivity sees holes") {
    // ring of 8 cells around a hole at the origin
    std::vector<Vertex> ring;
    for (Coord x = -1; x <= 1; ++x)
        for (Coord y = -1; y <= 1; ++y)
            if (x != 0 || y != 0) ring.push_back(Vertex{x, y});
    const LatticeSet s(2, std::move(ring));
    CHECK(!complement_connected(s, 1));
    CHECK(complement_disconnection_witness(s, 1) == Vertex{0, 0});
    CHECK(complement_connected(s, 2));  // the hole hops out at radius two
    CHECK(complement_connected(plus_pentomino(), 1));
}

TEST_CASE("isolated members and complement vertices") {
    CHECK(isolated_member(LatticeSet(2, {Vertex{1, 0}}), 1) == Vertex{1, 0});
    CHECK(!isolated_member(plus_pentomino(), 1));
    // diamond ring: (1,0) is an isolated complement vertex
    const LatticeSet ring(2, {Vertex{0, 0}, Vertex{1, 1}, Vertex{2, 0}, Vertex{1, -1}});
    CHECK(isolated_complement_vertex(ring) == Vertex{1, 0});
    CHECK(!isolated_complement_vertex(plus_pentomino()));
}

TEST_CASE("coordinate overflow is a hard error") {
    const Coord big = (Coord{1} << 31);
    CHECK_THROWS_AS(neighbors(Vertex{big, 0}), std::overflow_error);
    CHECK_NOTHROW(neighbors(Vertex{big - 1, 0}));
}

TEST_CASE("json round trip") {
    const LatticeSet s = plus_pentomino();
    CHECK(lattice_set_from_json(to_json(s)) == s);
    CHECK(to_json(s) ==
          R"({"d":2,"members":[[-1,0],[0,-1],[0,0],[0,1],[1,0]]})");
    CHECK(to_json(Vertex{3, -4}) == "[3,-4]");
}
