#pragma once

// Independent brute-force oracle used only by tests. It shares nothing with
// the production search: connected even cores are grown breadth-first with a
// global dedup table (no canonical augmentation), the only pruning is the
// isoperimetric size cap (monotone in the core), and every candidate is
// checked from scratch via the classification predicates.

#include <algorithm>
#include <set>
#include <vector>

#include "oddcut/lattice.hpp"
#include "oddcut/lattice_set.hpp"
#include "oddcut/oddsets.hpp"

namespace oddcut::testsupport {

// All regular odd cutsets S with |dS| = n containing the origin, d fixed,
// r = 1. Returns sets sorted by even core.
inline std::vector<LatticeSet> naive_odd_cutsets(int d, long long n) {
    std::vector<LatticeSet> out;
    if (n % (2 * d) != 0) return out;
    const long long target = n / (2 * d);

    // |S| <= (n/2d)^{d/(d-1)} by isoperimetry; cores have |E| <= (|S|-1)/2.
    long long cap = 1;
    while (true) {
        // smallest violation of cap^{d-1} <= target^d
        long long lhs = 1, rhs = 1;
        for (int i = 0; i < d - 1; ++i) lhs *= cap + 1;
        for (int i = 0; i < d; ++i) rhs *= target;
        if (lhs > rhs) break;
        ++cap;
    }

    // Level-by-level growth with dedup: level k holds every connected
    // even-graph core of size k containing the origin with |E^+| <= cap.
    std::set<std::vector<Vertex>> level;
    level.insert({origin(d)});
    std::set<std::vector<Vertex>> all = level;
    while (!level.empty()) {
        std::set<std::vector<Vertex>> next;
        for (const auto& core : level) {
            for (const Vertex& v : core) {
                for (const Vertex& w : neighbors(v)) {
                    for (const Vertex& x : neighbors(w)) {
                        if (x == v) continue;
                        if (std::find(core.begin(), core.end(), x) != core.end()) continue;
                        std::vector<Vertex> bigger = core;
                        bigger.push_back(x);
                        std::sort(bigger.begin(), bigger.end());
                        if (next.count(bigger)) continue;
                        LatticeSet grown = from_even_core(LatticeSet(d, bigger));
                        if (static_cast<long long>(grown.size()) > cap) continue;
                        next.insert(bigger);
                    }
                }
            }
        }
        for (const auto& c : next) all.insert(c);
        level.swap(next);
    }

    for (const auto& core : all) {
        LatticeSet s = from_even_core(LatticeSet(d, core));
        if (boundary_profile(s).edge_count() != static_cast<std::size_t>(n)) continue;
        OddSetReport rep = classify(s, 1);
        if (rep.is_odd && rep.is_regular && rep.is_r_cutset) out.push_back(s);
    }
    std::sort(out.begin(), out.end(),
              [](const LatticeSet& a, const LatticeSet& b) { return a.even_part() < b.even_part(); });
    return out;
}

}  // namespace oddcut::testsupport
