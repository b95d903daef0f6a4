#include <doctest.h>

#include <algorithm>
#include <cstdio>

#include "naive_oracle.hpp"
#include "oddcut/cache.hpp"
#include "oddcut/enumerate.hpp"
#include "oddcut/lattice.hpp"
#include "oddcut/oddsets.hpp"

using namespace oddcut;

namespace {

std::vector<LatticeSet> family(int d, long long n, int jobs = 1) {
    EnumSpec spec;
    spec.d = d;
    spec.n = n;
    spec.jobs = jobs;
    return enumerate_odd_cutsets(spec);
}

// All 2^d d! signed coordinate permutations.
std::vector<std::vector<std::pair<int, int>>> symmetries(int d) {
    std::vector<int> perm(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) perm[static_cast<std::size_t>(i)] = i;
    std::vector<std::vector<std::pair<int, int>>> out;
    do {
        for (int signs = 0; signs < (1 << d); ++signs) {
            std::vector<std::pair<int, int>> map;
            for (int i = 0; i < d; ++i)
                map.emplace_back(perm[static_cast<std::size_t>(i)], (signs >> i) & 1 ? -1 : 1);
            out.push_back(std::move(map));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

LatticeSet apply_symmetry(const LatticeSet& s, const std::vector<std::pair<int, int>>& map) {
    std::vector<Vertex> out;
    for (const Vertex& v : s) {
        Vertex w = origin(s.d());
        for (int i = 0; i < s.d(); ++i) w[i] = map[static_cast<std::size_t>(i)].second * v[map[static_cast<std::size_t>(i)].first];
        out.push_back(w);
    }
    return LatticeSet(s.d(), std::move(out));
}

}  // namespace

TEST_CASE("oracle baselines, cross-checked against the naive enumerator") {
    // values locked by the independent subset-growth oracle
    const struct {
        int d;
        long long n;
        std::size_t count;
    } locked[] = {
        {2, 8, 0}, {2, 12, 1}, {2, 16, 4}, {2, 20, 26}, {3, 30, 1},
    };
    for (const auto& row : locked) {
        const auto engine = family(row.d, row.n);
        CHECK(engine.size() == row.count);
        const auto naive = testsupport::naive_odd_cutsets(row.d, row.n);
        REQUIRE(naive.size() == row.count);
        for (std::size_t i = 0; i < naive.size(); ++i) CHECK(engine[i] == naive[i]);
    }
}

TEST_CASE("boundary sizes indivisible by 2d are provably empty") {
    EnumSpec spec;
    spec.d = 2;
    spec.n = 13;
    EnumStats stats;
    CHECK(enumerate_odd_cutsets(spec, &stats).empty());
    CHECK(stats.divisibility_empty);
    CHECK(stats.nodes == 0);
}

TEST_CASE("the four minimal-plus-one cutsets have diagonal two-vertex cores") {
    const auto sets = family(2, 16);
    REQUIRE(sets.size() == 4);
    const std::vector<Vertex> expected_partners{Vertex{-1, -1}, Vertex{-1, 1}, Vertex{1, -1},
                                                Vertex{1, 1}};
    for (std::size_t i = 0; i < 4; ++i) {
        const LatticeSet core = even_core(sets[i]);
        CHECK(core.size() == 2);
        CHECK(core.contains(Vertex{0, 0}));
        CHECK(core.contains(expected_partners[i]));
    }
}

TEST_CASE("every enumerated set passes classification") {
    for (const LatticeSet& s : family(2, 20)) {
        const OddSetReport rep = classify(s, 1);
        CHECK(rep.is_odd);
        CHECK(rep.is_regular);
        CHECK(rep.is_r_cutset);
        CHECK(boundary_profile(s).edge_count() == 20);
        CHECK(s.contains(Vertex{0, 0}));
    }
}

TEST_CASE("window growth never changes the count") {
    EnumSpec spec;
    spec.d = 2;
    spec.n = 16;
    const auto base = enumerate_odd_cutsets(spec);
    spec.window_radius = spec.derived_window_radius() + 4;
    const auto grown = enumerate_odd_cutsets(spec);
    CHECK(base == grown);

    spec.window_radius = spec.size_cap();  // below the containment minimum
    CHECK_THROWS_AS(enumerate_odd_cutsets(spec), std::invalid_argument);
}

TEST_CASE("parallel enumeration is deterministic") {
    const auto seq = family(2, 20, 1);
    const auto par = family(2, 20, 4);
    REQUIRE(seq.size() == par.size());
    for (std::size_t i = 0; i < seq.size(); ++i) CHECK(seq[i] == par[i]);
}

TEST_CASE("families are invariant under lattice symmetries fixing the origin") {
    const auto sets = family(2, 16);
    std::vector<LatticeSet> base = sets;
    std::sort(base.begin(), base.end());
    for (const auto& map : symmetries(2)) {
        std::vector<LatticeSet> mapped;
        for (const LatticeSet& s : sets) mapped.push_back(apply_symmetry(s, map));
        std::sort(mapped.begin(), mapped.end());
        CHECK(mapped == base);
    }
}

TEST_CASE("within-distance mode includes shifted sets") {
    EnumSpec spec;
    spec.d = 2;
    spec.n = 12;
    spec.r = 1;
    spec.origin_mode = OriginMode::WithinDistanceR;
    const auto sets = enumerate_odd_cutsets(spec);
    // the plus pentomino can sit anywhere with dist(0, S) <= 1; the origin
    // is covered by cores at 0 and the four even cells two steps away plus
    // the odd-distance placements
    CHECK(sets.size() > 1);
    for (const LatticeSet& s : sets) {
        Coord dist = 99;
        for (const Vertex& v : s) dist = std::min(dist, l1_distance(v, origin(2)));
        CHECK(dist <= 1);
        CHECK(boundary_profile(s).edge_count() == 12);
    }
    // Contains-mode output is a subset of the within-mode output
    for (const LatticeSet& s : family(2, 12)) CHECK(std::count(sets.begin(), sets.end(), s) == 1);
}

TEST_CASE("r-cutset enumeration at radius two") {
    EnumSpec spec;
    spec.d = 2;
    spec.n = 24;
    spec.r = 2;
    spec.max_core_size = 3;  // keep the search tiny: pairs of plus pentominoes
    const auto sets = enumerate_odd_cutsets(spec);
    bool found_split = false;
    for (const LatticeSet& s : sets) {
        const OddSetReport rep = classify(s, 2);
        CHECK(rep.is_r_cutset);
        if (!is_connected(s, 1)) found_split = true;
    }
    CHECK(found_split);  // genuinely 2-connected-only families exist
}

TEST_CASE("count caching is write-once and read-back") {
    CountTable cache;
    EnumSpec spec;
    spec.d = 2;
    spec.n = 16;
    EnumStats first, second;
    CHECK(count_odd_cutsets(spec, &cache, &first) == 4);
    CHECK(!first.from_cache);
    CHECK(count_odd_cutsets(spec, &cache, &second) == 4);
    CHECK(second.from_cache);
    CHECK(second.nodes == 0);  // no search happened
    CHECK_THROWS(cache.insert_once(spec.cache_key(), {"5", kOracleVersion, 0.0}));

    const std::string path = "/tmp/oddcut_test_cache.csv";
    cache.save(path);
    const CountTable loaded = CountTable::load(path);
    REQUIRE(loaded.lookup(spec.cache_key()));
    CHECK(loaded.lookup(spec.cache_key())->count == "4");
    std::remove(path.c_str());
}

TEST_CASE("connected subset counts with the classical bound") {
    const std::uint64_t locked[] = {1, 4, 18, 76, 315};
    for (int k = 0; k <= 4; ++k) {
        const auto rep = connected_subset_count(2, k);
        CHECK(rep.count == locked[k]);
        CHECK(rep.within_bound);
        CHECK(static_cast<double>(rep.count) <= rep.bound);
    }
    CHECK(connected_subset_count(3, 1).count == 6);
}
