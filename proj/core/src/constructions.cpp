#include "oddcut/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "oddcut/errors.hpp"
#include "oddcut/lattice.hpp"
#include "oddcut/oddsets.hpp"

namespace oddcut {

namespace mp = boost::multiprecision;

void SlabFamilySpec::validate() const {
    if (d < 2) throw std::invalid_argument("slab requires d >= 2");
    if (m < 4 || m % 2 != 0) throw std::invalid_argument("slab requires even m >= 4");
}

namespace {

// Even vertices of [lo,hi)^(d-1) x {level} (coordinate-sum parity includes
// the level).
std::vector<Vertex> even_layer(int d, Coord lo, Coord hi, Coord level) {
    std::vector<Vertex> out;
    std::vector<Coord> idx(static_cast<std::size_t>(d - 1), lo);
    if (lo >= hi) return out;
    for (;;) {
        Vertex v = origin(d);
        for (int i = 0; i < d - 1; ++i) v[i] = idx[static_cast<std::size_t>(i)];
        v[d - 1] = level;
        if (is_even(v)) out.push_back(v);
        int axis = 0;
        while (axis < d - 1) {
            if (++idx[static_cast<std::size_t>(axis)] < hi) break;
            idx[static_cast<std::size_t>(axis)] = lo;
            ++axis;
        }
        if (axis == d - 1) break;
    }
    return out;
}

long long slab_boundary_size(const SlabFamilySpec& spec) {
    long long md1 = 1, md2 = 1;
    for (int i = 0; i < spec.d - 1; ++i) md1 *= spec.m;
    for (int i = 0; i < spec.d - 2; ++i) md2 *= spec.m;
    return 2LL * spec.d * (md1 + (spec.d - 1) * md2);
}

LatticeSet require_regular_odd_cutset(const LatticeSet& s, const char* who) {
    const OddSetReport rep = classify(s, 1);
    if (!rep.is_odd) throw check_error(std::string(who) + ": output is not odd", rep.defect_witness);
    if (!rep.is_regular_odd_cutset())
        throw check_error(std::string(who) + ": output is not a regular odd cutset", rep.defect_witness);
    return s;
}

}  // namespace

LatticeSet base_slab(const SlabFamilySpec& spec) {
    spec.validate();
    LatticeSet b0(spec.d, even_layer(spec.d, 0, spec.m, 0));
    LatticeSet s = closure(b0);
    require_regular_odd_cutset(s, "base_slab");
    if (boundary_profile(s).edge_count() != static_cast<std::size_t>(slab_boundary_size(spec)))
        throw check_error("base_slab: boundary size differs from 2d(m^(d-1)+(d-1)m^(d-2))");
    return s;
}

LatticeSet slab_level_one(const SlabFamilySpec& spec) {
    spec.validate();
    auto upper = even_layer(spec.d, 1, spec.m - 1, 1);
    auto lower = even_layer(spec.d, 1, spec.m - 1, -1);
    upper.insert(upper.end(), lower.begin(), lower.end());
    return LatticeSet(spec.d, std::move(upper));
}

LatticeSet slab_level_two(const SlabFamilySpec& spec, const LatticeSet& b1) {
    spec.validate();
    std::vector<Vertex> out;
    for (Coord side : {Coord{2}, Coord{-2}}) {
        for (const Vertex& x : even_layer(spec.d, 2, spec.m - 2, side)) {
            Vertex mid = x;
            mid[spec.d - 1] = side / 2;
            bool ok = true;
            for (int i = 0; i < spec.d - 1 && ok; ++i) {
                Vertex up = mid, down = mid;
                up[i] += 1;
                down[i] -= 1;
                ok = b1.contains(up) && b1.contains(down);
            }
            if (ok) out.push_back(x);
        }
    }
    return LatticeSet(spec.d, std::move(out));
}

namespace {

std::vector<LatticeSet> subsets_of(const LatticeSet& a, std::uint64_t limit) {
    if (a.size() > 63 || (a.size() > 0 && (1ull << a.size()) > limit))
        throw std::runtime_error("slab level set too large to iterate subsets");
    const auto& verts = a.members();
    std::vector<LatticeSet> out;
    out.reserve(std::size_t{1} << a.size());
    for (std::uint64_t mask = 0; mask < (1ull << a.size()); ++mask) {
        std::vector<Vertex> sub;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (mask & (1ull << i)) sub.push_back(verts[i]);
        out.emplace_back(a.d(), std::move(sub));
    }
    return out;
}

}  // namespace

void slab_family(const SlabFamilySpec& spec, const std::function<void(const LatticeSet&)>& sink,
                 std::uint64_t materialization_cap) {
    spec.validate();
    const mp::cpp_int total = slab_family_count(spec);
    if (total > materialization_cap)
        throw std::runtime_error("slab family exceeds materialization cap; use slab_family_count");
    const LatticeSet b0(spec.d, even_layer(spec.d, 0, spec.m, 0));
    const LatticeSet a1 = slab_level_one(spec);
    const std::size_t expected_boundary = static_cast<std::size_t>(slab_boundary_size(spec));
    for (const LatticeSet& b1 : subsets_of(a1, materialization_cap)) {
        const LatticeSet a2 = slab_level_two(spec, b1);
        for (const LatticeSet& b2 : subsets_of(a2, materialization_cap)) {
            LatticeSet s = closure(b0.set_union(b1).set_union(b2));
            require_regular_odd_cutset(s, "slab_family");
            if (boundary_profile(s).edge_count() != expected_boundary)
                throw check_error("slab_family: member boundary size drifted");
            sink(s);
        }
    }
}

mp::cpp_int slab_family_count(const SlabFamilySpec& spec) {
    spec.validate();
    const LatticeSet a1 = slab_level_one(spec);
    if (a1.size() > 26)
        throw std::runtime_error("slab level-one set too large for exact count at desk scale");
    mp::cpp_int total = 0;
    for (const LatticeSet& b1 : subsets_of(a1, std::uint64_t{1} << 62)) {
        const LatticeSet a2 = slab_level_two(spec, b1);
        total += mp::pow(mp::cpp_int(2), static_cast<unsigned>(a2.size()));
    }
    return total;
}

double slab_family_log2_lower_bound(const SlabFamilySpec& spec) {
    spec.validate();
    double a1 = 1, m4 = 1;
    for (int i = 0; i < spec.d - 1; ++i) {
        a1 *= static_cast<double>(spec.m - 2);
        m4 *= static_cast<double>(spec.m - 4);
    }
    return a1 + m4 * std::pow(2.0, -(2.0 * spec.d - 2.0));
}

std::optional<PeakedSet> find_peak(const LatticeSet& s) {
    const OddSetReport rep = classify(s, 1);
    if (!rep.is_odd) throw check_error("find_peak requires an odd set", rep.defect_witness);
    const LatticeSet evens = s.even_part();
    if (evens.empty()) return std::nullopt;
    Coord best = evens.members().front()[0] + evens.members().front()[1];
    Vertex arg = evens.members().front();
    int ties = 1;
    bool first = true;
    for (const Vertex& v : evens) {
        if (first) {
            first = false;
            continue;
        }
        const Coord key = v[0] + v[1];
        if (key > best) {
            best = key;
            arg = v;
            ties = 1;
        } else if (key == best) {
            ++ties;
        }
    }
    if (ties != 1) return std::nullopt;
    return PeakedSet{s, arg};
}

PeakedSet create_peak(const LatticeSet& s) {
    const OddSetReport rep = classify(s, 1);
    if (!rep.is_odd) throw check_error("create_peak requires an odd set", rep.defect_witness);
    if (!rep.is_regular_odd_cutset() || s.size() <= 1)
        throw check_error("create_peak requires a regular odd cutset with more than one vertex");
    const int d = s.d();

    Coord a = s.members().front()[0] + s.members().front()[1];
    for (const Vertex& v : s) a = std::max(a, v[0] + v[1]);
    Vertex top;
    bool have = false;
    for (const Vertex& v : s)
        if (v[0] + v[1] == a && (!have || top < v)) {
            top = v;
            have = true;
        }

    // Any set neighbor of the top vertex lies below it along e1 or e2.
    Vertex u = top;
    u[0] -= 1;
    if (!s.contains(u)) {
        u = top;
        u[1] -= 1;
        if (!s.contains(u)) throw check_error("create_peak: no admissible support vertex", top);
    }
    Vertex w = u;
    w[0] += 1;
    w[1] += 1;
    if (s.contains(w)) throw check_error("create_peak: bump position already occupied", w);

    LatticeSet grown = s.set_union(closure(LatticeSet(d, {w})));
    require_regular_odd_cutset(grown, "create_peak");
    const std::size_t expected =
        boundary_profile(s).edge_count() + static_cast<std::size_t>(2 * d) * static_cast<std::size_t>(2 * d - 3);
    if (boundary_profile(grown).edge_count() != expected)
        throw check_error("create_peak: boundary did not grow by 2d(2d-3)");
    const auto peaked = find_peak(grown);
    if (!peaked || !(peaked->peak == w)) throw check_error("create_peak: bump is not the peak", w);
    return *peaked;
}

PeakedSet translate_peak_to_origin(const PeakedSet& p) {
    if (!is_even(p.peak)) throw check_error("peak must be even", p.peak);
    PeakedSet out{p.set.translated(vertex_negate(p.peak)), origin(p.set.d())};
    const auto check = find_peak(out.set);
    if (!check || !(check->peak == out.peak))
        throw check_error("translate_peak_to_origin: peak not preserved");
    return out;
}

PeakedSet extend_peak(const PeakedSet& p, long long r, long long s) {
    const int d = p.set.d();
    if (!(p.peak == origin(d))) throw check_error("extend_peak requires the peak at the origin", p.peak);
    if (r < 0 || s < 0) throw std::invalid_argument("extend_peak requires r, s >= 0");
    if (r == 0 && s == 0) return p;

    std::vector<Vertex> bumps;
    for (long long i = 1; i <= r; ++i) {
        Vertex v = origin(d);
        v[0] = i;
        v[1] = i;
        bumps.push_back(v);
    }
    for (long long i = 1; i <= s; ++i) {
        Vertex v = origin(d);
        v[0] = r + 2 * i;
        v[1] = r;
        bumps.push_back(v);
    }
    LatticeSet grown = p.set.set_union(closure(LatticeSet(d, bumps)));
    require_regular_odd_cutset(grown, "extend_peak");

    const std::size_t expected = boundary_profile(p.set).edge_count() +
                                 static_cast<std::size_t>(2 * d) *
                                     static_cast<std::size_t>(r * (2 * d - 3) + s * (2 * d - 2));
    if (boundary_profile(grown).edge_count() != expected)
        throw check_error("extend_peak: boundary did not grow by 2d(r(2d-3)+s(2d-2))");

    Vertex new_peak = origin(d);
    new_peak[0] = r + 2 * s;
    new_peak[1] = r;
    const auto peaked = find_peak(grown);
    if (!peaked || !(peaked->peak == new_peak))
        throw check_error("extend_peak: unexpected peak position", new_peak);
    return *peaked;
}

LatticeSet merge_at_peak(const PeakedSet& p, const PeakedSet& q) {
    const int d = p.set.d();
    if (q.set.d() != d) throw std::invalid_argument("merge_at_peak: dimension mismatch");
    if (!(q.peak == origin(d))) throw check_error("merge_at_peak requires q peaked at the origin", q.peak);

    Vertex shift = p.peak;
    shift[0] += 1;
    shift[1] += 1;
    const LatticeSet moved = q.set.reflected_first_two().translated(shift);
    LatticeSet merged = p.set.set_union(moved);
    require_regular_odd_cutset(merged, "merge_at_peak");

    const std::size_t expected = boundary_profile(p.set).edge_count() +
                                 boundary_profile(q.set).edge_count() - static_cast<std::size_t>(4 * d);
    if (boundary_profile(merged).edge_count() != expected)
        throw check_error("merge_at_peak: boundary is not |dP| + |dQ| - 4d");
    return merged;
}

std::pair<long long, long long> frobenius_rep(long long target, int d) {
    if (d < 2) throw std::invalid_argument("frobenius_rep requires d >= 2");
    if (target < 0) throw std::domain_error("frobenius_rep requires target >= 0");
    const long long a = 2 * d - 3, b = 2 * d - 2;
    for (long long s = 0; s * b <= target; ++s) {
        const long long rem = target - s * b;
        if (rem % a == 0) return {rem / a, s};
    }
    throw std::domain_error("frobenius_rep: no representation as r(2d-3)+s(2d-2)");
}

}  // namespace oddcut
