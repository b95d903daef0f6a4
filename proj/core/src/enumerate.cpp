#include "oddcut/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <thread>

#include <boost/multiprecision/cpp_int.hpp>

#include "oddcut/errors.hpp"
#include "oddcut/lattice.hpp"
#include "oddcut/oddsets.hpp"

namespace oddcut {

namespace mp = boost::multiprecision;

void EnumSpec::validate() const {
    if (d < 2) throw std::invalid_argument("enumeration requires d >= 2");
    if (n < 1) throw std::invalid_argument("enumeration requires n >= 1");
    if (r < 1) throw std::invalid_argument("enumeration requires r >= 1");
    if (jobs < 1) throw std::invalid_argument("enumeration requires jobs >= 1");
    if (window_radius > 0 && n % (2 * d) == 0 && window_radius < size_cap() + r + 1)
        throw std::invalid_argument("window_radius below the isoperimetric containment minimum");
}

long long EnumSpec::size_cap() const {
    const long long t = n / (2 * d);
    const mp::cpp_int rhs = mp::pow(mp::cpp_int(t), static_cast<unsigned>(d));
    long long hi = 1;
    while (mp::pow(mp::cpp_int(hi), static_cast<unsigned>(d - 1)) <= rhs) hi *= 2;
    long long lo = 1;
    while (lo < hi - 1) {
        long long mid = lo + (hi - lo) / 2;
        if (mp::pow(mp::cpp_int(mid), static_cast<unsigned>(d - 1)) <= rhs)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

long long EnumSpec::derived_window_radius() const {
    const long long cap = size_cap();
    const long long step = 2 * ((r + 2) / 2);  // longest even-core hop, rounded to even
    long long radius = (step / 2) * (cap + 1) + r + 3;
    if (origin_mode == OriginMode::WithinDistanceR) radius += r + 1;
    return std::max(radius, cap + r + 1);
}

namespace {

// Nonzero offsets with even L1 norm in [2, max_norm], sorted.
std::vector<Vertex> even_graph_offsets(int d, int max_norm) {
    std::vector<Vertex> out;
    Vertex cur = origin(d);
    auto rec = [&](auto&& self, int axis, Coord budget) -> void {
        if (axis == d) {
            Coord used = max_norm - budget;
            if (used >= 2 && used % 2 == 0) out.push_back(cur);
            return;
        }
        for (Coord x = -budget; x <= budget; ++x) {
            cur[axis] = x;
            self(self, axis + 1, budget - (x < 0 ? -x : x));
        }
        cur[axis] = 0;
    };
    rec(rec, 0, static_cast<Coord>(max_norm));
    std::sort(out.begin(), out.end());
    return out;
}

using Cell = long long;

struct Window {
    int d;
    long long radius;
    long long width;
    std::vector<long long> stride;
    long long total;

    Window(int d_, long long radius_) : d(d_), radius(radius_), width(2 * radius_ + 1) {
        stride.resize(static_cast<std::size_t>(d));
        long long t = 1;
        for (int i = 0; i < d; ++i) {
            stride[static_cast<std::size_t>(i)] = t;
            if (t > (1LL << 28) / width)
                throw std::runtime_error("window overflow: grid too large to materialize");
            t *= width;
        }
        total = t;
    }
    bool in_range(const Vertex& v) const {
        for (int i = 0; i < d; ++i)
            if (v[i] < -radius || v[i] > radius) return false;
        return true;
    }
    Cell to_cell(const Vertex& v) const {
        Cell idx = 0;
        for (int i = 0; i < d; ++i) idx += (v[i] + radius) * stride[static_cast<std::size_t>(i)];
        return idx;
    }
    Vertex to_vertex(Cell idx) const {
        Vertex v = origin(d);
        for (int i = 0; i < d; ++i) {
            v[i] = idx % width - radius;
            idx /= width;
        }
        return v;
    }
};

struct Task {
    std::vector<Cell> core;
    std::vector<Cell> ext;
    std::vector<std::uint8_t> seen;
};

// Canonical-augmentation search over connected even cores. Each connected
// subset of the even graph containing the root is visited exactly once: a
// candidate, once skipped at some level, stays marked and is never offered
// again below it.
struct CoreSearch {
    const Window& win;
    const std::vector<Vertex>& core_offsets;
    long long target_diff;
    long long cap;
    long long max_delta;  // largest possible diff increase per added core vertex
    std::optional<std::size_t> max_core;

    std::vector<std::uint8_t> in_core;
    std::vector<std::uint8_t> odd_cnt;
    std::vector<std::uint8_t> seen;
    std::vector<Cell> core_cells;
    long long nbhd_size = 0;

    std::uint64_t nodes = 0;
    std::uint64_t candidates = 0;

    // candidate sink; gets the core cell list when diff == target
    std::function<void(const std::vector<Cell>&)> on_candidate;

    // task collection (set by the generation pass)
    long long task_depth = -1;
    std::vector<Task>* tasks = nullptr;

    CoreSearch(const Window& w, const std::vector<Vertex>& offs, long long target, long long cap_,
               long long max_delta_, std::optional<std::size_t> max_core_)
        : win(w),
          core_offsets(offs),
          target_diff(target),
          cap(cap_),
          max_delta(max_delta_),
          max_core(max_core_),
          in_core(static_cast<std::size_t>(w.total), 0),
          odd_cnt(static_cast<std::size_t>(w.total), 0),
          seen(static_cast<std::size_t>(w.total), 0) {}

    long long diff() const { return nbhd_size - static_cast<long long>(core_cells.size()); }
    long long set_size() const { return nbhd_size + static_cast<long long>(core_cells.size()); }

    void add(Cell cell) {
        in_core[static_cast<std::size_t>(cell)] = 1;
        core_cells.push_back(cell);
        Vertex v = win.to_vertex(cell);
        for (int k = 0; k < direction_count(win.d); ++k) {
            Vertex w = vertex_add(v, direction(win.d, k));
            if (!win.in_range(w)) throw std::runtime_error("window overflow during search");
            Cell wc = win.to_cell(w);
            if (odd_cnt[static_cast<std::size_t>(wc)]++ == 0) ++nbhd_size;
        }
    }
    void remove(Cell cell) {
        in_core[static_cast<std::size_t>(cell)] = 0;
        core_cells.pop_back();
        Vertex v = win.to_vertex(cell);
        for (int k = 0; k < direction_count(win.d); ++k) {
            Cell wc = win.to_cell(vertex_add(v, direction(win.d, k)));
            if (--odd_cnt[static_cast<std::size_t>(wc)] == 0) --nbhd_size;
        }
    }

    bool may_recurse() const {
        if (max_core && core_cells.size() >= *max_core) return false;
        const long long budget = cap - set_size();
        if (budget < 1) return false;
        if (diff() - budget > target_diff) return false;
        if (diff() + max_delta * budget < target_diff) return false;
        return true;
    }

    void dfs(std::vector<Cell>& ext, std::size_t begin) {
        if (tasks && static_cast<long long>(core_cells.size()) == task_depth) {
            tasks->push_back(Task{core_cells, std::vector<Cell>(ext.begin() + static_cast<long>(begin), ext.end()), seen});
            return;
        }
        for (std::size_t i = begin; i < ext.size(); ++i) {
            const Cell cell = ext[i];
            add(cell);
            ++nodes;
            if (set_size() <= cap && diff() == target_diff) {
                ++candidates;
                on_candidate(core_cells);
            }
            if (may_recurse()) {
                const std::size_t old_size = ext.size();
                Vertex v = win.to_vertex(cell);
                for (const Vertex& off : core_offsets) {
                    Vertex w = vertex_add(v, off);
                    if (!win.in_range(w)) throw std::runtime_error("window overflow during search");
                    Cell wc = win.to_cell(w);
                    if (!seen[static_cast<std::size_t>(wc)]) {
                        seen[static_cast<std::size_t>(wc)] = 1;
                        ext.push_back(wc);
                    }
                }
                dfs(ext, i + 1);
                for (std::size_t k = old_size; k < ext.size(); ++k)
                    seen[static_cast<std::size_t>(ext[k])] = 0;
                ext.resize(old_size);
            }
            remove(cell);
        }
    }
};

struct Found {
    LatticeSet core;
    LatticeSet set;
    bool operator<(const Found& o) const { return core < o.core; }
};

}  // namespace

std::vector<LatticeSet> enumerate_odd_cutsets(const EnumSpec& spec, EnumStats* stats) {
    spec.validate();
    const auto t0 = std::chrono::steady_clock::now();
    EnumStats local;
    if (spec.n % (2 * spec.d) != 0) {
        // Boundary sizes of odd sets are multiples of 2d; nothing to search.
        local.divisibility_empty = true;
        if (stats) *stats = local;
        return {};
    }

    const Window win(spec.d, spec.effective_window_radius());
    const int step = 2 * ((spec.r + 2) / 2);
    const auto offsets = even_graph_offsets(spec.d, step);
    const long long max_delta = spec.r == 1 ? 2 * spec.d - 2 : 2 * spec.d - 1;
    const long long cap = spec.size_cap();
    const long long target = spec.target_diff();

    // Roots: the origin for Contains; every even vertex within L1 distance
    // r+1 for WithinDistanceR (any valid S has a core vertex that close).
    std::vector<Vertex> roots;
    if (spec.origin_mode == OriginMode::Contains) {
        roots.push_back(origin(spec.d));
    } else {
        auto probe = [&](auto&& self, Vertex& cur, int axis, Coord budget) -> void {
            if (axis == spec.d) {
                if (is_even(cur)) roots.push_back(cur);
                return;
            }
            for (Coord x = -budget; x <= budget; ++x) {
                cur[axis] = x;
                self(self, cur, axis + 1, budget - (x < 0 ? -x : x));
            }
            cur[axis] = 0;
        };
        Vertex cur = origin(spec.d);
        probe(probe, cur, 0, static_cast<Coord>(spec.r + 1));
        std::sort(roots.begin(), roots.end());
    }

    std::vector<Found> found;
    auto validate_candidate = [&](CoreSearch& search, std::vector<Found>& sink) {
        std::vector<Vertex> members;
        members.reserve(static_cast<std::size_t>(search.set_size()));
        std::vector<Vertex> core_vertices;
        core_vertices.reserve(search.core_cells.size());
        for (Cell c : search.core_cells) {
            Vertex v = win.to_vertex(c);
            core_vertices.push_back(v);
            members.push_back(v);
            for (int k = 0; k < direction_count(spec.d); ++k) {
                Vertex w = vertex_add(v, direction(spec.d, k));
                members.push_back(w);
            }
        }
        LatticeSet s(spec.d, std::move(members));
        if (spec.origin_mode == OriginMode::WithinDistanceR) {
            Coord dist = l1_distance(origin(spec.d), *s.begin());
            for (const Vertex& v : s) dist = std::min(dist, l1_distance(origin(spec.d), v));
            if (dist > spec.r) return;
        }
        const OddSetReport rep = classify(s, spec.r);
        if (!(rep.is_odd && rep.is_regular && rep.is_r_cutset)) return;
        if (boundary_profile(s).edge_count() != static_cast<std::size_t>(spec.n))
            throw check_error("enumerated candidate has unexpected boundary size");
        sink.push_back(Found{LatticeSet(spec.d, std::move(core_vertices)), std::move(s)});
    };

    for (std::size_t root_index = 0; root_index < roots.size(); ++root_index) {
        CoreSearch search(win, offsets, target, cap, max_delta, spec.max_core_size);
        // Exclude lex-smaller roots: a set is enumerated from its lex-min
        // root only.
        for (std::size_t j = 0; j < root_index; ++j)
            search.seen[static_cast<std::size_t>(win.to_cell(roots[j]))] = 1;
        const Cell root_cell = win.to_cell(roots[root_index]);
        search.seen[static_cast<std::size_t>(root_cell)] = 1;
        std::vector<Cell> ext{root_cell};

        if (spec.jobs <= 1) {
            search.on_candidate = [&](const std::vector<Cell>&) { validate_candidate(search, found); };
            search.dfs(ext, 0);
            local.nodes += search.nodes;
            local.candidates += search.candidates;
        } else {
            // Split the canonical search tree at a fixed depth; workers
            // resume each subtree from a full state snapshot.
            std::vector<Task> tasks;
            search.task_depth = 3;
            search.tasks = &tasks;
            search.on_candidate = [&](const std::vector<Cell>&) { validate_candidate(search, found); };
            search.dfs(ext, 0);
            local.nodes += search.nodes;
            local.candidates += search.candidates;

            std::vector<std::vector<Found>> results(tasks.size());
            std::atomic<std::size_t> next{0};
            std::atomic<std::uint64_t> nodes{0}, cands{0};
            auto worker = [&]() {
                CoreSearch ws(win, offsets, target, cap, max_delta, spec.max_core_size);
                for (;;) {
                    const std::size_t ti = next.fetch_add(1);
                    if (ti >= tasks.size()) break;
                    const Task& task = tasks[ti];
                    ws.seen = task.seen;
                    for (Cell c : task.core) ws.add(c);
                    std::vector<Cell> wext = task.ext;
                    ws.on_candidate = [&](const std::vector<Cell>&) { validate_candidate(ws, results[ti]); };
                    ws.dfs(wext, 0);
                    for (std::size_t k = task.core.size(); k-- > 0;) ws.remove(task.core[k]);
                }
                nodes += ws.nodes;
                cands += ws.candidates;
            };
            std::vector<std::thread> pool;
            const std::size_t nworkers = std::min<std::size_t>(static_cast<std::size_t>(spec.jobs), std::max<std::size_t>(tasks.size(), 1));
            for (std::size_t w = 0; w < nworkers; ++w) pool.emplace_back(worker);
            for (auto& th : pool) th.join();
            local.nodes += nodes.load();
            local.candidates += cands.load();
            for (auto& rv : results)
                for (auto& f : rv) found.push_back(std::move(f));
        }
    }

    std::sort(found.begin(), found.end());
    std::vector<LatticeSet> out;
    out.reserve(found.size());
    for (auto& f : found) out.push_back(std::move(f.set));
    local.emitted = out.size();
    local.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (stats) *stats = local;
    return out;
}

std::uint64_t count_odd_cutsets(const EnumSpec& spec, CountTable* cache, EnumStats* stats) {
    spec.validate();
    if (cache) {
        if (auto hit = cache->lookup(spec.cache_key())) {
            if (stats) {
                *stats = EnumStats{};
                stats->from_cache = true;
                stats->emitted = std::stoull(hit->count);
            }
            return std::stoull(hit->count);
        }
    }
    EnumStats local;
    const auto sets = enumerate_odd_cutsets(spec, &local);
    if (stats) *stats = local;
    if (cache) {
        CountTable::Entry entry;
        entry.count = std::to_string(sets.size());
        entry.seconds = local.seconds;
        cache->insert_once(spec.cache_key(), entry);
    }
    return sets.size();
}

SubsetCountReport connected_subset_count(int d, int k, long long window_radius) {
    if (d < 2) throw std::invalid_argument("connected_subset_count requires d >= 2");
    if (k < 0) throw std::invalid_argument("connected_subset_count requires k >= 0");
    const long long radius = window_radius > 0 ? window_radius : k + 2;
    const Window win(d, radius);

    std::vector<std::uint8_t> seen(static_cast<std::size_t>(win.total), 0);
    std::uint64_t count = 0;
    const std::size_t want = static_cast<std::size_t>(k) + 1;
    std::vector<Cell> stack;

    auto rec = [&](auto&& self, std::vector<Cell>& ext, std::size_t begin) -> void {
        for (std::size_t i = begin; i < ext.size(); ++i) {
            const Cell cell = ext[i];
            stack.push_back(cell);
            if (stack.size() == want) {
                ++count;
            } else {
                const std::size_t old_size = ext.size();
                Vertex v = win.to_vertex(cell);
                for (int dir = 0; dir < direction_count(d); ++dir) {
                    Vertex w = vertex_add(v, direction(d, dir));
                    if (!win.in_range(w)) throw std::runtime_error("window overflow during search");
                    Cell wc = win.to_cell(w);
                    if (!seen[static_cast<std::size_t>(wc)]) {
                        seen[static_cast<std::size_t>(wc)] = 1;
                        ext.push_back(wc);
                    }
                }
                self(self, ext, i + 1);
                for (std::size_t j = old_size; j < ext.size(); ++j)
                    seen[static_cast<std::size_t>(ext[j])] = 0;
                ext.resize(old_size);
            }
            stack.pop_back();
        }
    };
    const Cell root = win.to_cell(origin(d));
    seen[static_cast<std::size_t>(root)] = 1;
    std::vector<Cell> ext{root};
    rec(rec, ext, 0);

    SubsetCountReport rep;
    rep.count = count;
    rep.bound = std::pow(std::exp(1.0) * (2.0 * d - 1.0), k);
    rep.within_bound = static_cast<double>(count) <= rep.bound;
    if (!rep.within_bound) throw check_error("connected subset count exceeds (e(2d-1))^k");
    return rep;
}

}  // namespace oddcut
