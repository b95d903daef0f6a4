#include "oddcut/approx.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "oddcut/errors.hpp"
#include "oddcut/oddsets.hpp"

namespace oddcut {

namespace mp = boost::multiprecision;

LatticeSet Approximation::star() const {
    if (window.volume() > (1ull << 22)) throw std::runtime_error("approximation window too large");
    std::vector<Vertex> cells;
    std::vector<Coord> idx(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) idx[static_cast<std::size_t>(i)] = window.lo[i];
    for (;;) {
        Vertex v(std::vector<Coord>(idx.begin(), idx.end()));
        if (!black.contains(v) && !white.contains(v)) cells.push_back(v);
        int axis = 0;
        while (axis < d) {
            if (++idx[static_cast<std::size_t>(axis)] <= window.hi[axis]) break;
            idx[static_cast<std::size_t>(axis)] = window.lo[axis];
            ++axis;
        }
        if (axis == d) break;
    }
    return LatticeSet(d, std::move(cells));
}

void Approximation::validate() const {
    if (black.d() != d || white.d() != d || window.dim() != d)
        throw std::invalid_argument("approximation dimension mismatch");
    if (!black.set_intersection(white).empty())
        throw check_error("approximation sides overlap",
                          black.set_intersection(white).members().front());
    for (const Vertex& v : black)
        if (!window.contains(v)) throw check_error("black cell outside window", v);
    for (const Vertex& v : white)
        if (!window.contains(v)) throw check_error("white cell outside window", v);
    // black is odd: even black cells keep their whole neighborhood black
    for (const Vertex& v : black) {
        if (!is_even(v)) continue;
        for (int k = 0; k < direction_count(d); ++k) {
            Vertex w = vertex_add(v, direction(d, k));
            if (!window.contains(w) || !black.contains(w))
                throw check_error("black side is not an odd set", v);
        }
    }
    // white is even: odd white cells have all in-window neighbors white
    // (outside the window is implicitly white)
    for (const Vertex& v : white) {
        if (!is_odd(v)) continue;
        for (int k = 0; k < direction_count(d); ++k) {
            Vertex w = vertex_add(v, direction(d, k));
            if (window.contains(w) && !white.contains(w))
                throw check_error("white side is not an even set", v);
        }
    }
}

namespace {

std::vector<std::vector<int>> induced_adjacency(const LatticeSet& v) {
    const auto& verts = v.members();
    std::vector<std::vector<int>> adj(verts.size());
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (int k = 0; k < direction_count(v.d()); ++k) {
            Vertex w = vertex_add(verts[i], direction(v.d(), k));
            auto it = std::lower_bound(verts.begin(), verts.end(), w);
            if (it != verts.end() && *it == w)
                adj[i].push_back(static_cast<int>(it - verts.begin()));
        }
    return adj;
}

}  // namespace

bool is_t_approximation(const Approximation& a, int t) {
    if (t < 1 || t >= 2 * a.d) throw std::domain_error("t must satisfy 1 <= t < 2d");
    const LatticeSet star = a.star();
    const auto adj = induced_adjacency(star);
    for (const auto& row : adj) {
        if (static_cast<int>(row.size()) > t) return false;
        if (row.empty()) return false;  // isolated unknown vertex
    }
    return true;
}

bool approximates(const Approximation& a, const LatticeSet& s) {
    if (a.d != s.d()) throw std::invalid_argument("dimension mismatch");
    for (const Vertex& v : s)
        if (!a.window.contains(v)) return false;  // outside is implicitly white
    return a.black.subset_of(s) && a.white.disjoint_from(s);
}

DWitness d_map(const Approximation& a, const LatticeSet& s) {
    if (!approximates(a, s)) throw std::invalid_argument("d_map requires an approximated set");
    const OddSetReport rep = classify(s, 1);
    if (!rep.is_odd || !rep.is_regular)
        throw check_error("d_map requires a regular odd set", rep.defect_witness);

    const LatticeSet star = a.star();
    const BoundaryProfile prof = boundary_profile(s);
    DWitness w;
    w.d_black = star.set_intersection(prof.internal);
    w.d_white = star.set_intersection(prof.external);

    // Identities and the minimal-cover property hold once the unknown region
    // has degree < 2d and no isolated vertices.
    const auto adj = induced_adjacency(star);
    bool degree_ok = true;
    for (const auto& row : adj)
        if (row.empty() || static_cast<int>(row.size()) >= 2 * a.d) {
            degree_ok = false;
            break;
        }
    if (degree_ok) {
        const LatticeSet odd_in = star.odd_part().set_intersection(s);
        const LatticeSet even_out = star.even_part().set_minus(s);
        if (!(w.d_black == odd_in))
            throw check_error("D-map identity failed on the inside half");
        if (!(w.d_white == even_out))
            throw check_error("D-map identity failed on the outside half");

        const LatticeSet cover = w.combined();
        const auto& verts = star.members();
        for (std::size_t i = 0; i < verts.size(); ++i) {
            const bool vi = cover.contains(verts[i]);
            bool has_outside_neighbor = false;
            for (int j : adj[i]) {
                const bool vj = cover.contains(verts[static_cast<std::size_t>(j)]);
                if (!vi && !vj)
                    throw check_error("D-map is not a vertex cover of the unknown region", verts[i]);
                if (!vj) has_outside_neighbor = true;
            }
            if (vi && !has_outside_neighbor)
                throw check_error("D-map vertex cover is not minimal", verts[i]);
        }
    }
    return w;
}

namespace {

LatticeSet validate_reconstruction(const Approximation& a, const LatticeSet& s,
                                   const LatticeSet& half, bool from_black) {
    OddSetReport rep;
    try {
        rep = classify(s, 1);
    } catch (const std::exception&) {
        throw check_error("inconsistent witness: reconstruction is empty or malformed");
    }
    if (!rep.is_odd || !rep.is_regular)
        throw check_error("inconsistent witness: reconstruction is not regular odd",
                          rep.defect_witness);
    if (!approximates(a, s))
        throw check_error("inconsistent witness: reconstruction escapes the approximation");
    const DWitness again = d_map(a, s);
    if (!((from_black ? again.d_black : again.d_white) == half))
        throw check_error("inconsistent witness: D-map does not reproduce the given half");
    return s;
}

}  // namespace

LatticeSet reconstruct_from_black(const Approximation& a, const LatticeSet& d_black) {
    const LatticeSet odd_in = a.black.odd_part().set_union(d_black);
    // Even vertices of a regular odd set are exactly those fully surrounded
    // by its odd vertices.
    const LatticeSet s = odd_in.set_union(n_t(odd_in, 2 * a.d));
    return validate_reconstruction(a, s, d_black, true);
}

LatticeSet reconstruct_from_white(const Approximation& a, const LatticeSet& d_white) {
    const LatticeSet even_out = a.white.even_part().set_union(d_white);
    std::vector<Vertex> evens_in;
    std::vector<Coord> idx(static_cast<std::size_t>(a.d));
    for (int i = 0; i < a.d; ++i) idx[static_cast<std::size_t>(i)] = a.window.lo[i];
    for (;;) {
        Vertex v(std::vector<Coord>(idx.begin(), idx.end()));
        if (is_even(v) && !even_out.contains(v)) evens_in.push_back(v);
        int axis = 0;
        while (axis < a.d) {
            if (++idx[static_cast<std::size_t>(axis)] <= a.window.hi[axis]) break;
            idx[static_cast<std::size_t>(axis)] = a.window.lo[axis];
            ++axis;
        }
        if (axis == a.d) break;
    }
    const LatticeSet s = closure(LatticeSet(a.d, std::move(evens_in)));
    return validate_reconstruction(a, s, d_white, false);
}

namespace {

// Maximal independent sets of one connected component, by in/out branching
// with a domination prune: an excluded vertex must keep an undecided or
// included neighbor, otherwise the branch is dead.
void enumerate_mis(const std::vector<std::vector<int>>& adj, std::vector<int>& state,
                   int next, std::vector<std::vector<int>>& out, std::uint64_t cap) {
    const int n = static_cast<int>(adj.size());
    while (next < n && state[static_cast<std::size_t>(next)] != 0) ++next;
    if (next == n) {
        // check maximality: every out vertex needs an in neighbor
        std::vector<int> mis;
        for (int i = 0; i < n; ++i) {
            if (state[static_cast<std::size_t>(i)] == 1) {
                mis.push_back(i);
                continue;
            }
            bool dominated = false;
            for (int j : adj[static_cast<std::size_t>(i)])
                if (state[static_cast<std::size_t>(j)] == 1) {
                    dominated = true;
                    break;
                }
            if (!dominated) return;
        }
        if (out.size() >= cap) throw std::runtime_error("minimal cover enumeration cap exceeded");
        out.push_back(std::move(mis));
        return;
    }

    // branch: next in the independent set
    std::vector<int> touched;
    state[static_cast<std::size_t>(next)] = 1;
    bool feasible = true;
    for (int j : adj[static_cast<std::size_t>(next)]) {
        if (state[static_cast<std::size_t>(j)] == 1) feasible = false;
        if (state[static_cast<std::size_t>(j)] == 0) {
            state[static_cast<std::size_t>(j)] = 2;
            touched.push_back(j);
        }
    }
    if (feasible) enumerate_mis(adj, state, next + 1, out, cap);
    for (int j : touched) state[static_cast<std::size_t>(j)] = 0;
    state[static_cast<std::size_t>(next)] = 0;

    // branch: next excluded; it must still be dominatable
    state[static_cast<std::size_t>(next)] = 2;
    bool dominatable = false;
    for (int j : adj[static_cast<std::size_t>(next)])
        if (state[static_cast<std::size_t>(j)] != 2) {
            dominatable = true;
            break;
        }
    if (dominatable) enumerate_mis(adj, state, next + 1, out, cap);
    state[static_cast<std::size_t>(next)] = 0;
}

struct ComponentCovers {
    std::vector<Vertex> verts;
    std::vector<std::vector<int>> covers;  // complements of maximal independent sets
};

std::vector<ComponentCovers> covers_per_component(const LatticeSet& v, std::uint64_t cap) {
    std::vector<ComponentCovers> out;
    for (const LatticeSet& comp : components(v, 1)) {
        ComponentCovers cc;
        cc.verts = comp.members();
        const auto adj = induced_adjacency(comp);
        std::vector<int> state(cc.verts.size(), 0);
        std::vector<std::vector<int>> mis;
        enumerate_mis(adj, state, 0, mis, cap);
        for (const auto& ind : mis) {
            std::vector<std::uint8_t> in_ind(cc.verts.size(), 0);
            for (int i : ind) in_ind[static_cast<std::size_t>(i)] = 1;
            std::vector<int> cover;
            for (int i = 0; i < static_cast<int>(cc.verts.size()); ++i)
                if (!in_ind[static_cast<std::size_t>(i)]) cover.push_back(i);
            cc.covers.push_back(std::move(cover));
        }
        std::sort(cc.covers.begin(), cc.covers.end());
        out.push_back(std::move(cc));
    }
    return out;
}

}  // namespace

std::vector<LatticeSet> minimal_covers(const LatticeSet& v, std::uint64_t cap) {
    const auto per_comp = covers_per_component(v, cap);
    std::uint64_t total = 1;
    for (const auto& cc : per_comp) {
        total *= cc.covers.size();
        if (total > cap) throw std::runtime_error("minimal cover enumeration cap exceeded");
    }
    std::vector<LatticeSet> out;
    std::vector<std::size_t> pick(per_comp.size(), 0);
    for (;;) {
        std::vector<Vertex> cover;
        for (std::size_t c = 0; c < per_comp.size(); ++c)
            for (int i : per_comp[c].covers[pick[c]]) cover.push_back(per_comp[c].verts[static_cast<std::size_t>(i)]);
        out.emplace_back(v.d(), std::move(cover));
        std::size_t axis = 0;
        while (axis < per_comp.size()) {
            if (++pick[axis] < per_comp[axis].covers.size()) break;
            pick[axis] = 0;
            ++axis;
        }
        if (axis == per_comp.size()) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

Rational cover_sum(const LatticeSet& v, const std::function<Rational(const Vertex&)>& weight) {
    // precondition: p_u + p_v <= 1 on every induced edge
    const auto adj_all = induced_adjacency(v);
    const auto& verts = v.members();
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (int j : adj_all[i])
            if (weight(verts[i]) + weight(verts[static_cast<std::size_t>(j)]) > 1)
                throw std::invalid_argument("cover weights must satisfy p_u + p_v <= 1 on every edge");

    Rational total = 1;
    for (const auto& cc : covers_per_component(v, 1ull << 40)) {
        Rational comp_sum = 0;
        for (const auto& cover : cc.covers) {
            Rational prod = 1;
            for (int i : cover) prod *= weight(cc.verts[static_cast<std::size_t>(i)]);
            comp_sum += prod;
        }
        total *= comp_sum;
    }
    if (total > 1) throw check_error("cover sum exceeds 1");
    return total;
}

Rational cover_sum_half(const LatticeSet& v) {
    return cover_sum(v, [](const Vertex&) { return Rational(1, 2); });
}

CountBoundReport count_bound_check(const Approximation& a, long long n, int t,
                                   const std::vector<LatticeSet>& family) {
    if (!is_t_approximation(a, t))
        throw check_error("count_bound_check requires a t-approximation");
    CountBoundReport rep;
    rep.n = n;
    rep.t = t;
    for (const LatticeSet& s : family)
        if (approximates(a, s)) ++rep.cut_count;
    // count <= 2^(n/(2d-t))  <=>  count^(2d-t) <= 2^n, exactly
    const mp::cpp_int lhs = mp::pow(mp::cpp_int(rep.cut_count), static_cast<unsigned>(2 * a.d - t));
    const mp::cpp_int rhs = mp::pow(mp::cpp_int(2), static_cast<unsigned>(n));
    rep.within_bound = lhs <= rhs;
    if (!rep.within_bound) throw check_error("|cut_n(A)| exceeds 2^(n/(2d-t))");
    return rep;
}

}  // namespace oddcut
