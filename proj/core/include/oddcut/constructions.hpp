#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "oddcut/lattice_set.hpp"

namespace oddcut {

// A regular odd cutset together with its peak: the unique maximal even
// member under the order by the sum of the first two coordinates.
struct PeakedSet {
    LatticeSet set;
    Vertex peak;
};

// Slab construction parameters; m is the even side length of the base layer.
struct SlabFamilySpec {
    int d = 2;
    long long m = 4;
    void validate() const;
};

// The closed base layer: closure of the even vertices of [0,m)^(d-1) x {0}.
// An odd cutset through the origin with exactly 2d(m^(d-1)+(d-1)m^(d-2))
// boundary edges.
LatticeSet base_slab(const SlabFamilySpec& spec);

// The even vertices of the first- and second-level bump positions.
LatticeSet slab_level_one(const SlabFamilySpec& spec);                            // A1
LatticeSet slab_level_two(const SlabFamilySpec& spec, const LatticeSet& b1);      // A2(B1)

// Streams every member (B0 u B1 u B2)^+ over B1 subset A1, B2 subset A2(B1);
// all members share the base slab's boundary size. Throws when the family
// exceeds the materialization cap; use slab_family_count then.
void slab_family(const SlabFamilySpec& spec, const std::function<void(const LatticeSet&)>& sink,
                 std::uint64_t materialization_cap = 1000000);

boost::multiprecision::cpp_int slab_family_count(const SlabFamilySpec& spec);

// log2 of the guaranteed family size: |A1| + (m-4)^(d-1) * 2^-(2d-2).
double slab_family_log2_lower_bound(const SlabFamilySpec& spec);

// The peak if the maximal even vertex under x1+x2 is unique, else nullopt.
std::optional<PeakedSet> find_peak(const LatticeSet& s);

// Attaches a bump above the top hyperplane, producing a peaked odd cutset
// with boundary grown by exactly 2d(2d-3).
PeakedSet create_peak(const LatticeSet& s);

// Translates a peaked set so its peak sits at the origin (an even shift,
// preserving parity classes).
PeakedSet translate_peak_to_origin(const PeakedSet& p);

// Grows a set peaked at the origin by r diagonal bumps then s straight
// bumps; boundary grows by exactly 2d(r(2d-3) + s(2d-2)), and the new peak
// is (r+2s, r, 0, ..., 0).
PeakedSet extend_peak(const PeakedSet& p, long long r, long long s);

// Reflects q (peaked at the origin) through {x1+x2=0}, translates it just
// past p's peak and unions; boundary is |dP| + |dQ| - 4d.
LatticeSet merge_at_peak(const PeakedSet& p, const PeakedSet& q);

// Nonnegative (r, s) with target = r(2d-3) + s(2d-2), minimal s. Errors when
// no representation exists.
std::pair<long long, long long> frobenius_rep(long long target, int d);

}  // namespace oddcut
