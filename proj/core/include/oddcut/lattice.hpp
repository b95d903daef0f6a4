#pragma once

#include <utility>
#include <vector>

#include "oddcut/lattice_set.hpp"
#include "oddcut/types.hpp"

namespace oddcut {

// All four boundary structures of a finite set, computed in one pass.
//   edge_boundary: edges with exactly one endpoint in the set, as ordered
//                  pairs (min, max), sorted;
//   internal     : members adjacent to the complement;
//   external     : non-members adjacent to the set;
//   directional  : per direction s (indexed as in direction()), the members
//                  whose s-translate leaves the set.
struct BoundaryProfile {
    std::vector<std::pair<Vertex, Vertex>> edge_boundary;
    LatticeSet internal;
    LatticeSet external;
    std::vector<LatticeSet> directional;

    std::size_t edge_count() const { return edge_boundary.size(); }
};

BoundaryProfile boundary_profile(const LatticeSet& s);

// |N(v) cap U| >= t, over all of Z^d. N_1(U) = N(U).
LatticeSet n_t(const LatticeSet& u, int t);

// U union N(U).
LatticeSet closure(const LatticeSet& u);

// External vertex boundary N(U) \ U.
LatticeSet external_boundary(const LatticeSet& u);

// Connectivity of the graph on U with edges between members at lattice
// (L1) distance <= r. The empty set counts as connected.
bool is_connected(const LatticeSet& u, int r = 1);

// Connected components under the same adjacency, ordered by their
// lexicographically smallest member.
std::vector<LatticeSet> components(const LatticeSet& u, int r = 1);

// Whether Z^d \ s is connected at radius r. Decided inside the bounding box
// of s extended by 2r in every direction; the cells of the outermost r
// layers are merged into a single outer super-node, which is sound because
// any two complement vertices outside the extended box are connected to
// each other around the set.
bool complement_connected(const LatticeSet& s, int r = 1);

// A complement vertex in the extended box unreachable from the outside,
// if any (a hole witness).
std::optional<Vertex> complement_disconnection_witness(const LatticeSet& s, int r = 1);

// First member of u isolated at radius r (no other member within L1
// distance r), if any.
std::optional<Vertex> isolated_member(const LatticeSet& u, int r = 1);

// First external-boundary vertex all of whose lattice neighbors lie in s,
// if any (an isolated complement vertex; any isolated complement vertex
// necessarily lies on the external boundary).
std::optional<Vertex> isolated_complement_vertex(const LatticeSet& s);

}  // namespace oddcut
