#include <doctest.h>

#include "oddcut/errors.hpp"
#include "oddcut/lattice.hpp"
#include "oddcut/oddsets.hpp"

using namespace oddcut;

namespace {
LatticeSet plus_pentomino(int d = 2) { return from_even_core(LatticeSet(d, {origin(d)})); }
}  // namespace

TEST_CASE("classify the plus pentomino") {
    const OddSetReport rep = classify(plus_pentomino(), 1);
    CHECK(rep.is_odd);
    CHECK(!rep.is_even);
    CHECK(rep.is_regular);
    CHECK(rep.is_cutset);
    CHECK(rep.is_r_cutset);
    CHECK(!rep.defect_witness);
}

TEST_CASE("classify a lone even vertex") {
    const OddSetReport rep = classify(LatticeSet(2, {Vertex{0, 0}}), 1);
    CHECK(!rep.is_odd);  // the internal boundary is the even origin
    CHECK(rep.is_even);
    CHECK(rep.is_cutset);
    CHECK(!rep.is_regular);
    CHECK(rep.violated == "odd");
    CHECK(rep.defect_witness == Vertex{0, 0});
}

TEST_CASE("classify a lone odd vertex") {
    const OddSetReport rep = classify(LatticeSet(2, {Vertex{1, 0}}), 1);
    CHECK(rep.is_odd);
    CHECK(!rep.is_regular);  // isolated
    CHECK(rep.is_cutset);
    CHECK(!rep.is_r_cutset);
    CHECK(rep.violated == "regular");
}

TEST_CASE("classify rejects the empty set") {
    CHECK_THROWS_AS(classify(LatticeSet(2), 1), std::invalid_argument);
}

TEST_CASE("even core round trip") {
    const LatticeSet plus = plus_pentomino();
    CHECK(even_core(plus) == LatticeSet(2, {Vertex{0, 0}}));
    CHECK(from_even_core(even_core(plus)) == plus);

    const LatticeSet diamond = from_even_core(LatticeSet(2, {Vertex{0, 0}, Vertex{1, 1}}));
    CHECK(diamond.size() == 8);
    CHECK(boundary_profile(diamond).edge_count() == 16);

    const LatticeSet straight = from_even_core(LatticeSet(2, {Vertex{0, 0}, Vertex{2, 0}}));
    CHECK(straight.size() == 9);  // cores share the odd vertex (1,0)
    CHECK(boundary_profile(straight).edge_count() == 20);
}

TEST_CASE("from_even_core rejects odd members") {
    CHECK_THROWS_WITH_AS(from_even_core(LatticeSet(2, {Vertex{1, 0}})), "core must be even",
                         std::invalid_argument);
}

TEST_CASE("structural lemmas on the plus pentomino") {
    const auto rep = check_structural_lemmas(plus_pentomino());
    CHECK(rep.boundary_edges == 12);  // = 2d(2d-1)
    for (std::size_t sz : rep.directional_sizes) CHECK(sz == 3);
    CHECK(rep.parity_count_difference == 3);
    CHECK(rep.has_even_vertex);
}

TEST_CASE("structural lemmas on the diamond") {
    const LatticeSet diamond = from_even_core(LatticeSet(2, {Vertex{0, 0}, Vertex{1, 1}}));
    const auto rep = check_structural_lemmas(diamond);
    CHECK(rep.boundary_edges == 16);
    CHECK(rep.parity_count_difference == 4);  // 6 odd minus 2 even
    for (std::size_t sz : rep.directional_sizes) CHECK(sz == 4);
}

TEST_CASE("structural lemmas in three dimensions") {
    const auto rep = check_structural_lemmas(plus_pentomino(3));
    CHECK(rep.boundary_edges == 30);  // 2d(2d-1) at d=3
    for (std::size_t sz : rep.directional_sizes) CHECK(sz == 5);
}

TEST_CASE("structural lemmas reject non-odd input") {
    CHECK_THROWS_AS(check_structural_lemmas(LatticeSet(2, {Vertex{0, 0}})), check_error);
}
