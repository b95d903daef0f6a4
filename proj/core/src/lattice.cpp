#include "oddcut/lattice.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <stdexcept>

namespace oddcut {

BoundaryProfile boundary_profile(const LatticeSet& s) {
    if (s.empty()) throw std::invalid_argument("empty set has no boundary profile");
    const int d = s.d();
    BoundaryProfile p;
    std::vector<Vertex> internal, external;
    std::vector<std::vector<Vertex>> directional(static_cast<std::size_t>(direction_count(d)));
    for (const Vertex& v : s) {
        bool v_internal = false;
        for (int k = 0; k < direction_count(d); ++k) {
            Vertex w = vertex_add(v, direction(d, k));
            if (s.contains(w)) continue;
            v_internal = true;
            external.push_back(w);
            directional[static_cast<std::size_t>(k)].push_back(v);
            p.edge_boundary.emplace_back(std::min(v, w), std::max(v, w));
        }
        if (v_internal) internal.push_back(v);
    }
    std::sort(p.edge_boundary.begin(), p.edge_boundary.end());
    p.internal = LatticeSet(d, std::move(internal));
    p.external = LatticeSet(d, std::move(external));
    p.directional.reserve(directional.size());
    for (auto& dir : directional) p.directional.emplace_back(d, std::move(dir));
    return p;
}

LatticeSet n_t(const LatticeSet& u, int t) {
    if (t < 1) throw std::invalid_argument("n_t requires t >= 1");
    const int d = u.d();
    std::map<Vertex, int> counts;
    for (const Vertex& v : u)
        for (int k = 0; k < direction_count(d); ++k) counts[vertex_add(v, direction(d, k))]++;
    std::vector<Vertex> out;
    for (const auto& [v, c] : counts)
        if (c >= t) out.push_back(v);
    return LatticeSet(d, std::move(out));
}

LatticeSet closure(const LatticeSet& u) {
    std::vector<Vertex> out(u.begin(), u.end());
    for (const Vertex& v : u)
        for (int k = 0; k < direction_count(u.d()); ++k) out.push_back(vertex_add(v, direction(u.d(), k)));
    return LatticeSet(u.d(), std::move(out));
}

LatticeSet external_boundary(const LatticeSet& u) {
    return closure(u).set_minus(u);
}

namespace {

// Offsets at L1 distance 1..r (excluding zero), for radius-r adjacency.
std::vector<Vertex> ball_offsets(int d, int r) {
    std::vector<Vertex> out;
    Vertex cur = origin(d);
    // Depth-first over coordinates, pruning on remaining budget.
    auto rec = [&](auto&& self, int axis, Coord budget) -> void {
        if (axis == d) {
            if (budget < r) out.push_back(cur);  // budget spent > 0
            return;
        }
        for (Coord x = -budget; x <= budget; ++x) {
            cur[axis] = x;
            self(self, axis + 1, budget - (x < 0 ? -x : x));
        }
        cur[axis] = 0;
    };
    rec(rec, 0, static_cast<Coord>(r));
    return out;
}

}  // namespace

std::vector<LatticeSet> components(const LatticeSet& u, int r) {
    if (r < 1) throw std::invalid_argument("connectivity radius must be >= 1");
    const int d = u.d();
    const auto& verts = u.members();
    const std::size_t n = verts.size();
    std::vector<int> comp(n, -1);
    const auto offsets = ball_offsets(d, r);
    const bool use_offsets = offsets.size() < n;

    auto index_of = [&](const Vertex& v) -> long {
        auto it = std::lower_bound(verts.begin(), verts.end(), v);
        if (it == verts.end() || !(*it == v)) return -1;
        return it - verts.begin();
    };

    int ncomp = 0;
    for (std::size_t start = 0; start < n; ++start) {
        if (comp[start] >= 0) continue;
        std::deque<std::size_t> queue{start};
        comp[start] = ncomp;
        while (!queue.empty()) {
            std::size_t i = queue.front();
            queue.pop_front();
            if (use_offsets) {
                for (const Vertex& off : offsets) {
                    long j = index_of(vertex_add(verts[i], off));
                    if (j >= 0 && comp[static_cast<std::size_t>(j)] < 0) {
                        comp[static_cast<std::size_t>(j)] = ncomp;
                        queue.push_back(static_cast<std::size_t>(j));
                    }
                }
            } else {
                for (std::size_t j = 0; j < n; ++j) {
                    if (comp[j] >= 0) continue;
                    Coord dist = l1_distance(verts[i], verts[j]);
                    if (dist >= 1 && dist <= r) {
                        comp[j] = ncomp;
                        queue.push_back(j);
                    }
                }
            }
        }
        ++ncomp;
    }

    std::vector<std::vector<Vertex>> groups(static_cast<std::size_t>(ncomp));
    for (std::size_t i = 0; i < n; ++i) groups[static_cast<std::size_t>(comp[i])].push_back(verts[i]);
    // Members are scanned in lex order, so component k was discovered from the
    // lex-min representative among components not yet seen: output is already
    // ordered by lex-min representative.
    std::vector<LatticeSet> out;
    out.reserve(groups.size());
    for (auto& g : groups) out.emplace_back(d, std::move(g));
    return out;
}

bool is_connected(const LatticeSet& u, int r) {
    if (u.size() <= 1) return true;
    return components(u, r).size() == 1;
}

namespace {

// Flat scan over the extended box; returns the first complement cell not
// reached from the outer shell, or nullopt when the complement is connected.
std::optional<Vertex> complement_scan(const LatticeSet& s, int r) {
    if (r < 1) throw std::invalid_argument("connectivity radius must be >= 1");
    if (s.empty()) return std::nullopt;
    const int d = s.d();
    Box inner = s.bounding_box()->expanded(r);       // shell sits beyond this
    Box box = s.bounding_box()->expanded(2L * r);    // work region
    if (box.volume() > (1ull << 28)) throw std::runtime_error("complement connectivity box overflow");

    std::vector<Coord> stride(static_cast<std::size_t>(d));
    std::vector<Coord> width(static_cast<std::size_t>(d));
    Coord total = 1;
    for (int i = 0; i < d; ++i) {
        width[static_cast<std::size_t>(i)] = box.hi[i] - box.lo[i] + 1;
        stride[static_cast<std::size_t>(i)] = total;
        total *= width[static_cast<std::size_t>(i)];
    }
    auto to_index = [&](const Vertex& v) {
        Coord idx = 0;
        for (int i = 0; i < d; ++i) idx += (v[i] - box.lo[i]) * stride[static_cast<std::size_t>(i)];
        return idx;
    };
    auto to_vertex = [&](Coord idx) {
        Vertex v = origin(d);
        for (int i = 0; i < d; ++i) {
            v[i] = box.lo[i] + idx % width[static_cast<std::size_t>(i)];
            idx /= width[static_cast<std::size_t>(i)];
        }
        return v;
    };

    // 0 = complement unvisited, 1 = in s, 2 = visited complement
    std::vector<std::uint8_t> state(static_cast<std::size_t>(total), 0);
    for (const Vertex& v : s) state[static_cast<std::size_t>(to_index(v))] = 1;

    const auto offsets = ball_offsets(d, r);
    std::deque<Coord> queue;
    Coord complement_cells = total - static_cast<Coord>(s.size());
    Coord visited = 0;
    for (Coord idx = 0; idx < total; ++idx) {
        if (state[static_cast<std::size_t>(idx)] != 0) continue;
        if (inner.contains(to_vertex(idx))) continue;  // shell = box minus inner
        state[static_cast<std::size_t>(idx)] = 2;
        ++visited;
        queue.push_back(idx);
    }
    while (!queue.empty()) {
        Coord idx = queue.front();
        queue.pop_front();
        Vertex v = to_vertex(idx);
        for (const Vertex& off : offsets) {
            Vertex w = vertex_add(v, off);
            if (!box.contains(w)) continue;
            Coord j = to_index(w);
            if (state[static_cast<std::size_t>(j)] != 0) continue;
            state[static_cast<std::size_t>(j)] = 2;
            ++visited;
            queue.push_back(j);
        }
    }
    if (visited == complement_cells) return std::nullopt;
    for (Coord idx = 0; idx < total; ++idx)
        if (state[static_cast<std::size_t>(idx)] == 0) return to_vertex(idx);
    return std::nullopt;
}

}  // namespace

bool complement_connected(const LatticeSet& s, int r) {
    return !complement_scan(s, r).has_value();
}

std::optional<Vertex> complement_disconnection_witness(const LatticeSet& s, int r) {
    return complement_scan(s, r);
}

std::optional<Vertex> isolated_member(const LatticeSet& u, int r) {
    for (const Vertex& v : u) {
        bool has_neighbor = false;
        for (const Vertex& w : u) {
            Coord dist = l1_distance(v, w);
            if (dist >= 1 && dist <= r) {
                has_neighbor = true;
                break;
            }
        }
        if (!has_neighbor) return v;
    }
    return std::nullopt;
}

std::optional<Vertex> isolated_complement_vertex(const LatticeSet& s) {
    if (s.empty()) return std::nullopt;
    for (const Vertex& v : external_boundary(s)) {
        bool all_inside = true;
        for (int k = 0; k < direction_count(s.d()); ++k)
            if (!s.contains(vertex_add(v, direction(s.d(), k)))) {
                all_inside = false;
                break;
            }
        if (all_inside) return v;
    }
    return std::nullopt;
}

}  // namespace oddcut
