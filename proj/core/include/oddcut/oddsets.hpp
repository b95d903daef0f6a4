#pragma once

#include <optional>
#include <string>

#include "oddcut/lattice.hpp"
#include "oddcut/lattice_set.hpp"

namespace oddcut {

// Predicate report for a finite non-empty set. A set is odd (even) when its
// internal vertex boundary lies in the odd (even) parity class; regular when
// neither it nor its complement has an isolated vertex; a cutset when both
// it and its complement are connected; an r-cutset when it is additionally
// regular and both sides are connected at radius r.
//
// No even-cutset mirror API: translating a set by one unit step swaps the
// parity classes, so the odd API covers both.
struct OddSetReport {
    bool is_odd = false;
    bool is_even = false;
    bool is_regular = false;
    bool is_cutset = false;
    bool is_r_cutset = false;
    int r = 1;
    std::optional<Vertex> defect_witness;  // violates the first failed predicate
    std::string violated;                  // which predicate the witness violates

    bool is_regular_odd_cutset() const { return is_odd && is_regular && is_cutset; }
};

OddSetReport classify(const LatticeSet& s, int r = 1);

// Even core: the even members of s. For a regular odd set containing an even
// vertex, the core determines the set via its closed neighborhood.
LatticeSet even_core(const LatticeSet& s);

// Closure of an even set; errors on an odd member.
LatticeSet from_even_core(const LatticeSet& core);

// Quantities asserted by the directional-boundary identity and the
// minimum-boundary bound for odd sets.
struct StructuralLemmaReport {
    std::size_t boundary_edges = 0;
    std::vector<std::size_t> directional_sizes;  // indexed like direction()
    long long parity_count_difference = 0;       // |Odd cap S| - |Even cap S|
    bool has_even_vertex = false;
    bool min_boundary_bound_checked = false;     // 2d(2d-1) bound applies
};

// Checks, for a finite odd set: every |d^s S| equals |Odd cap S| - |Even cap S|
// equals |dS| / 2d; |dS| is a multiple of 2d; and, when S contains an even
// vertex, |dS| >= 2d(2d-1). Throws check_error when a check fails.
StructuralLemmaReport check_structural_lemmas(const LatticeSet& s);

}  // namespace oddcut
