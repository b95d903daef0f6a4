#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "oddcut/lattice.hpp"
#include "oddcut/lattice_set.hpp"

namespace oddcut {

using Rational = boost::multiprecision::cpp_rational;

// A pair of disjoint known-inside / known-outside sets: black is odd, white
// is even, and the unknown region (the star set) is the rest of the window.
// Cells beyond the window are implicitly white; the window must therefore
// contain the closure of every set the approximation is used against.
struct Approximation {
    int d = 2;
    LatticeSet black;  // known to be inside
    LatticeSet white;  // known to be outside
    Box window;

    LatticeSet star() const;  // window \ (black u white)
    void validate() const;
    bool same_pair(const Approximation& o) const { return black == o.black && white == o.white; }
};

// The trace of a set's vertex boundary on the unknown region.
struct DWitness {
    LatticeSet d_black;  // star cap internal boundary
    LatticeSet d_white;  // star cap external boundary
    LatticeSet combined() const { return d_black.set_union(d_white); }
};

// Max induced degree over the unknown region is <= t and it has no isolated
// vertices. Requires 1 <= t < 2d.
bool is_t_approximation(const Approximation& a, int t);

// black within s and white disjoint from it (with s inside the window).
bool approximates(const Approximation& a, const LatticeSet& s);

// D-map of a regular odd set approximated by a. When the unknown region has
// max degree < 2d and no isolated vertices, the parity identities and the
// minimal-vertex-cover property are asserted.
DWitness d_map(const Approximation& a, const LatticeSet& s);

// Rebuilds the set from one half of its D-witness. The result is validated
// (regular odd, approximated by a, and mapping back to the given half);
// inconsistent witnesses raise check_error.
LatticeSet reconstruct_from_black(const Approximation& a, const LatticeSet& d_black);
LatticeSet reconstruct_from_white(const Approximation& a, const LatticeSet& d_white);

// All inclusion-minimal vertex covers of the subgraph of Z^d induced by v.
std::vector<LatticeSet> minimal_covers(const LatticeSet& v, std::uint64_t cap = 1000000);

// Sum over minimal covers of the product of per-vertex weights; exact. The
// weights must satisfy p_u + p_v <= 1 on every induced edge, and the sum is
// asserted to be <= 1.
Rational cover_sum(const LatticeSet& v, const std::function<Rational(const Vertex&)>& weight);
Rational cover_sum_half(const LatticeSet& v);  // all weights 1/2

// |cut_n(a)| by filtering an enumerated family through approximates,
// checked exactly against 2^(n/(2d-t)).
struct CountBoundReport {
    std::uint64_t cut_count = 0;
    long long n = 0;
    int t = 0;
    bool within_bound = false;
};
CountBoundReport count_bound_check(const Approximation& a, long long n, int t,
                                   const std::vector<LatticeSet>& family);

}  // namespace oddcut
