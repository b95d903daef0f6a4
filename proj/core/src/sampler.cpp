#include "oddcut/sampler.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <deque>
#include <fstream>
#include <random>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "oddcut/enumerate.hpp"
#include "oddcut/errors.hpp"
#include "oddcut/lattice.hpp"
#include "oddcut/oddsets.hpp"

namespace oddcut {

bool within_desk_envelope(int d, long long n) {
    if (d == 2) return n <= 24;
    if (d == 3) return n <= 36;
    return n <= 2LL * d * (2 * d - 1);
}

std::vector<LatticeSet> sample_exact(int d, long long n, std::size_t count, std::uint64_t seed) {
    if (!within_desk_envelope(d, n))
        throw std::invalid_argument(
            "sample_exact outside the enumeration envelope; use sample_mcmc");
    EnumSpec spec;
    spec.d = d;
    spec.n = n;
    const auto family = enumerate_odd_cutsets(spec);
    if (family.empty()) throw std::runtime_error("no odd cutsets with this boundary size");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, family.size() - 1);
    std::vector<LatticeSet> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(family[pick(rng)]);
    return out;
}

namespace {

// Chains are keyed either by packed 2D coordinates (allocation-free) or by
// plain vertices in higher dimensions. Move tables are listed in the same
// sorted-offset order in both codecs so trajectories agree structurally.

struct Codec2D {
    using Key = std::uint64_t;
    struct Hash {
        std::size_t operator()(Key k) const {
            k ^= k >> 33;
            k *= 0xff51afd7ed558ccdull;
            k ^= k >> 33;
            return static_cast<std::size_t>(k);
        }
    };
    static constexpr Coord kBias = Coord{1} << 30;
    static constexpr std::int64_t kX = std::int64_t{1} << 32;

    int dim() const { return 2; }
    Key pack(const Vertex& v) const {
        return (std::uint64_t(std::uint32_t(v[0] + kBias)) << 32) |
               std::uint64_t(std::uint32_t(v[1] + kBias));
    }
    Vertex unpack(Key k) const {
        return Vertex{static_cast<Coord>(std::uint32_t(k >> 32)) - kBias,
                      static_cast<Coord>(std::uint32_t(k)) - kBias};
    }
    Key origin_key() const { return pack(Vertex{0, 0}); }
    bool is_even_key(Key k) const { return (((k >> 32) ^ k) & 1) == 0; }

    // +e1, -e1, +e2, -e2
    std::array<std::int64_t, 4> lattice{kX, -kX, 1, -1};
    // even-graph moves in sorted vertex order
    std::array<std::int64_t, 8> ego{-2 * kX, -kX - 1, -kX + 1, -2, 2, kX - 1, kX + 1, 2 * kX};
    // king ring around a core cell, cyclic
    static constexpr bool kHasRing = true;
    std::array<std::int64_t, 8> ring{kX + 1, 2 * kX, kX - 1, -2, -kX - 1, -2 * kX, -kX + 1, 2};

    Key step(Key k, std::int64_t delta) const {
        return static_cast<Key>(static_cast<std::int64_t>(k) + delta);
    }
    bool within(Key center, Key k, Coord radius) const {
        const auto cx = static_cast<std::int64_t>(center >> 32), kx = static_cast<std::int64_t>(k >> 32);
        const auto cy = static_cast<std::int64_t>(center & 0xffffffffull),
                   ky = static_cast<std::int64_t>(k & 0xffffffffull);
        return std::llabs(cx - kx) <= radius && std::llabs(cy - ky) <= radius;
    }
};

struct CodecND {
    using Key = Vertex;
    using Hash = VertexHash;
    int d;
    std::vector<Vertex> lattice;
    std::vector<Vertex> ego;
    static constexpr bool kHasRing = false;
    std::vector<Vertex> ring;  // unused

    explicit CodecND(int d_) : d(d_) {
        for (int k = 0; k < direction_count(d); ++k) lattice.push_back(direction(d, k));
        for (int i = 0; i < d; ++i)
            for (Coord si : {Coord{2}, Coord{-2}}) {
                Vertex v = origin(d);
                v[i] = si;
                ego.push_back(v);
            }
        for (int i = 0; i < d; ++i)
            for (int j = i + 1; j < d; ++j)
                for (Coord si : {Coord{1}, Coord{-1}})
                    for (Coord sj : {Coord{1}, Coord{-1}}) {
                        Vertex v = origin(d);
                        v[i] = si;
                        v[j] = sj;
                        ego.push_back(v);
                    }
        std::sort(ego.begin(), ego.end());
    }

    int dim() const { return d; }
    Key pack(const Vertex& v) const { return v; }
    Vertex unpack(const Key& k) const { return k; }
    Key origin_key() const { return origin(d); }
    bool is_even_key(const Key& k) const { return is_even(k); }
    Key step(const Key& k, const Vertex& delta) const { return vertex_add(k, delta); }
    bool within(const Key& center, const Key& k, Coord radius) const {
        for (int i = 0; i < d; ++i) {
            const Coord diff = center[i] - k[i];
            if (diff > radius || diff < -radius) return false;
        }
        return true;
    }
};

template <class Codec>
struct Chain {
    using Key = typename Codec::Key;
    using Hash = typename Codec::Hash;

    Codec codec;
    double lambda;
    long long boundary_cap;
    std::mt19937_64 rng;

    std::unordered_set<Key, Hash> core;
    std::vector<Key> core_list;
    std::unordered_map<Key, std::size_t, Hash> core_pos;
    std::unordered_map<Key, int, Hash> odd_cnt;  // odd cells with a core neighbor
    long long nbhd = 0;

    std::unordered_map<Key, int, Hash> cand_cnt;
    std::vector<Key> cand_list;
    std::unordered_map<Key, std::size_t, Hash> cand_pos;

    std::uint64_t proposals = 0, accepted = 0;

    Chain(Codec codec_, double lambda_, long long cap, std::uint64_t seed)
        : codec(std::move(codec_)), lambda(lambda_), boundary_cap(cap), rng(seed) {
        apply_add(codec.origin_key());
    }

    int dims() const { return codec.dim(); }
    bool in_s(const Key& v) const {
        return codec.is_even_key(v) ? core.count(v) > 0 : odd_cnt.count(v) > 0;
    }
    long long boundary() const {
        return 2LL * dims() * (nbhd - static_cast<long long>(core.size()));
    }

    void cand_insert(const Key& v) {
        cand_pos[v] = cand_list.size();
        cand_list.push_back(v);
    }
    void cand_erase(const Key& v) {
        const std::size_t pos = cand_pos.at(v);
        cand_pos.erase(v);
        if (pos + 1 != cand_list.size()) {
            cand_list[pos] = cand_list.back();
            cand_pos[cand_list[pos]] = pos;
        }
        cand_list.pop_back();
    }

    // Applies the move unconditionally; validity and acceptance are judged
    // afterwards and the exact inverse restores the state.
    std::vector<Key> apply_add(const Key& v) {
        std::vector<Key> entered{v};  // cells newly inside the closure
        core.insert(v);
        core_pos[v] = core_list.size();
        core_list.push_back(v);
        for (const auto& delta : codec.lattice) {
            const Key w = codec.step(v, delta);
            if (odd_cnt[w]++ == 0) {
                ++nbhd;
                entered.push_back(w);
            }
        }
        if (cand_cnt.count(v)) {
            cand_cnt.erase(v);
            cand_erase(v);
        }
        for (const auto& delta : codec.ego) {
            const Key u = codec.step(v, delta);
            if (core.count(u)) continue;
            if (cand_cnt[u]++ == 0) cand_insert(u);
        }
        return entered;
    }

    std::vector<Key> apply_remove(const Key& v) {
        std::vector<Key> left{v};  // cells leaving the closure
        core.erase(v);
        {
            const std::size_t pos = core_pos.at(v);
            core_pos.erase(v);
            if (pos + 1 != core_list.size()) {
                core_list[pos] = core_list.back();
                core_pos[core_list[pos]] = pos;
            }
            core_list.pop_back();
        }
        for (const auto& delta : codec.lattice) {
            const Key w = codec.step(v, delta);
            auto it = odd_cnt.find(w);
            if (--it->second == 0) {
                odd_cnt.erase(it);
                --nbhd;
                left.push_back(w);
            }
        }
        int back_cnt = 0;
        for (const auto& delta : codec.ego) {
            const Key u = codec.step(v, delta);
            if (core.count(u)) {
                ++back_cnt;
                continue;
            }
            auto it = cand_cnt.find(u);
            if (it != cand_cnt.end() && --it->second == 0) {
                cand_cnt.erase(it);
                cand_erase(u);
            }
        }
        if (back_cnt > 0) {
            cand_cnt[v] = back_cnt;
            cand_insert(v);
        }
        return left;
    }

    // ----- validity -----

    bool core_connected_after_removal(const Key& v) const {
        // cheap sufficient test in 2D: one cyclic arc of core cells on the
        // ring around v
        if constexpr (Codec::kHasRing) {
            int arcs = 0;
            bool prev = core.count(codec.step(v, codec.ring.back())) > 0;
            for (const auto& delta : codec.ring) {
                const bool here = core.count(codec.step(v, delta)) > 0;
                if (here && !prev) ++arcs;
                prev = here;
            }
            if (arcs == 1) return true;
            if (arcs == 0) return core.empty();
        }
        if (core.empty()) return true;
        std::unordered_set<Key, Hash> visited;
        std::deque<Key> queue{core_list.front()};
        visited.insert(core_list.front());
        while (!queue.empty()) {
            const Key u = queue.front();
            queue.pop_front();
            for (const auto& delta : codec.ego) {
                const Key w = codec.step(u, delta);
                if (core.count(w) && visited.insert(w).second) queue.push_back(w);
            }
        }
        return visited.size() == core.size();
    }

    // Local complement soundness around a changed region via a 7x7 bitboard;
    // decisions match complement_ok_local exactly, with no hash traffic in
    // the flood fill. 2D only.
    std::optional<bool> complement_ok_local_bits(const Key& center, const std::vector<Key>& changed,
                                                 bool entered) const {
        static_assert(Codec::kHasRing, "bitboard path is 2D only");
        // index = (dx+3)*7 + (dy+3), dx/dy in [-3,3]
        const auto bit = [](long dx, long dy) {
            return std::uint64_t{1} << ((dx + 3) * 7 + (dy + 3));
        };
        const std::uint64_t all = (std::uint64_t{1} << 49) - 1;
        std::uint64_t occupied = 0;
        for (long dx = -3; dx <= 3; ++dx)
            for (long dy = -3; dy <= 3; ++dy)
                if (in_s(codec.step(center, dx * Codec2D::kX + dy))) occupied |= bit(dx, dy);
        const std::uint64_t free_cells = all & ~occupied;

        std::uint64_t changed_mask = 0, seeds = 0;
        const auto cx = static_cast<std::int64_t>(center >> 32);
        const auto cy = static_cast<std::int64_t>(center & 0xffffffffull);
        for (const Key& c : changed) {
            const long dx = static_cast<long>(static_cast<std::int64_t>(c >> 32) - cx);
            const long dy = static_cast<long>(static_cast<std::int64_t>(c & 0xffffffffull) - cy);
            const std::uint64_t b = bit(dx, dy);
            changed_mask |= b;
            if (!entered && (free_cells & b)) seeds |= b;
            if (dx + 1 <= 3 && (free_cells & bit(dx + 1, dy))) seeds |= bit(dx + 1, dy);
            if (dx - 1 >= -3 && (free_cells & bit(dx - 1, dy))) seeds |= bit(dx - 1, dy);
            if (dy + 1 <= 3 && (free_cells & bit(dx, dy + 1))) seeds |= bit(dx, dy + 1);
            if (dy - 1 >= -3 && (free_cells & bit(dx, dy - 1))) seeds |= bit(dx, dy - 1);
        }
        if (!seeds) return true;

        // bitboard shifts; dy edges must not wrap between columns
        constexpr std::uint64_t kTop = 0x1020408102040ull;   // dy = +3
        constexpr std::uint64_t kBottom = 0x40810204081ull;  // dy = -3
        const auto nbrs = [&](std::uint64_t m) {
            return (((m & ~kTop) << 1) | ((m & ~kBottom) >> 1) | (m << 7) | (m >> 7)) & all;
        };
        // a seed with no free neighbor is an isolated complement vertex
        if (seeds & ~nbrs(free_cells)) return false;

        std::uint64_t flood = seeds & (~seeds + 1);  // lowest seed
        for (;;) {
            const std::uint64_t grown = (flood | nbrs(flood)) & free_cells;
            if (grown == flood) break;
            flood = grown;
        }
        if (seeds & ~flood) return std::nullopt;  // inconclusive locally
        if (!entered && !(flood & ~changed_mask)) return std::nullopt;
        return true;
    }

    // Local complement soundness around a changed region; nullopt = needs
    // the full check, otherwise the definitive answer.
    std::optional<bool> complement_ok_local(const Key& center, const std::vector<Key>& changed,
                                            bool entered) const {
        if constexpr (Codec::kHasRing) return complement_ok_local_bits(center, changed, entered);
        if (dims() != 2) return std::nullopt;
        // complement cells adjacent to the changed cells, plus (for
        // removals) the freed cells themselves
        std::vector<Key> seeds;
        for (const Key& c : changed) {
            if (!entered && !in_s(c)) seeds.push_back(c);
            for (const auto& delta : codec.lattice) {
                const Key u = codec.step(c, delta);
                if (!in_s(u)) seeds.push_back(u);
            }
        }
        std::sort(seeds.begin(), seeds.end());
        seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());
        if (seeds.empty()) return true;  // the closure swallowed a sealed pocket boundary-free

        // no complement cell may become isolated
        for (const Key& c : seeds) {
            bool has_free_neighbor = false;
            for (const auto& delta : codec.lattice)
                if (!in_s(codec.step(c, delta))) {
                    has_free_neighbor = true;
                    break;
                }
            if (!has_free_neighbor) return false;  // definitive: isolated complement vertex
        }

        // all seeds mutually connected inside the local ball witnesses a
        // valid rerouting of every old path
        std::unordered_set<Key, Hash> visited;
        std::deque<Key> queue{seeds.front()};
        visited.insert(seeds.front());
        while (!queue.empty()) {
            const Key u = queue.front();
            queue.pop_front();
            for (const auto& delta : codec.lattice) {
                const Key w = codec.step(u, delta);
                if (!codec.within(center, w, 3) || in_s(w) || visited.count(w)) continue;
                visited.insert(w);
                queue.push_back(w);
            }
        }
        for (const Key& c : seeds)
            if (!visited.count(c)) return std::nullopt;  // inconclusive locally
        if (!entered) {
            // freed cells must reattach to the old complement, not only to
            // each other
            bool touches_old = false;
            for (const Key& v : visited)
                if (std::find(changed.begin(), changed.end(), v) == changed.end()) {
                    touches_old = true;
                    break;
                }
            if (!touches_old) return std::nullopt;
        }
        return true;
    }

    LatticeSet closure_set() const {
        std::vector<Vertex> members;
        members.reserve(core.size() + odd_cnt.size());
        for (const Key& v : core_list) members.push_back(codec.unpack(v));
        for (const auto& [v, cnt] : odd_cnt) members.push_back(codec.unpack(v));
        return LatticeSet(dims(), std::move(members));
    }

    bool complement_ok_full() const {
        const LatticeSet s = closure_set();
        return complement_connected(s, 1) && !isolated_complement_vertex(s).has_value();
    }

    // ----- proposals -----

    void step() {
        ++proposals;
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        const bool do_add = unit(rng) < 0.5;
        if (do_add) {
            if (cand_list.empty()) return;
            const std::size_t pre_cands = cand_list.size();
            std::uniform_int_distribution<std::size_t> pick(0, cand_list.size() - 1);
            const Key v = cand_list[pick(rng)];
            const long long pre_boundary = boundary();
            const auto entered = apply_add(v);
            bool ok = boundary() <= boundary_cap;
            if (ok) {
                const auto local = complement_ok_local(v, entered, true);
                ok = local ? *local : complement_ok_full();
            }
            if (ok) {
                const double ratio =
                    std::pow(lambda, static_cast<double>(boundary() - pre_boundary)) *
                    static_cast<double>(pre_cands) / static_cast<double>(core.size());
                if (unit(rng) <= ratio) {
                    ++accepted;
                    return;
                }
            }
            apply_remove(v);
        } else {
            if (core.size() <= 1) return;
            std::uniform_int_distribution<std::size_t> pick(0, core_list.size() - 1);
            const Key v = core_list[pick(rng)];
            if (v == codec.origin_key()) return;  // the origin stays inside
            const std::size_t pre_core = core.size();
            const long long pre_boundary = boundary();
            const auto left = apply_remove(v);
            bool ok = core_connected_after_removal(v);
            if (ok) {
                const auto local = complement_ok_local(v, left, false);
                ok = local ? *local : complement_ok_full();
            }
            if (ok) {
                const double ratio =
                    std::pow(lambda, static_cast<double>(boundary() - pre_boundary)) *
                    static_cast<double>(pre_core) / static_cast<double>(cand_list.size());
                if (unit(rng) <= ratio) {
                    ++accepted;
                    return;
                }
            }
            apply_add(v);
        }
    }
};

template <class Codec>
double tune_lambda_impl(Codec codec, int d, long long n, std::uint64_t seed) {
    double lambda = 0.5;
    Chain<Codec> chain(std::move(codec), lambda, n + 8LL * d, seed);
    const int iterations = 400;
    for (int i = 1; i <= iterations; ++i) {
        for (int s = 0; s < 40; ++s) chain.step();
        const double eta = 0.4 / std::sqrt(static_cast<double>(i));
        const double push = (static_cast<double>(n) - static_cast<double>(chain.boundary())) /
                            static_cast<double>(2 * d);
        lambda *= std::exp(eta * push * 0.05);
        lambda = std::min(std::max(lambda, 0.05), 2.0);
        chain.lambda = lambda;
    }
    return lambda;
}

template <class Codec>
LatticeSet sample_mcmc_impl(Codec codec, int d, long long n, std::uint64_t steps, double lambda,
                            std::uint64_t seed, McmcDiagnostics* diag, std::uint64_t retry_cap) {
    Chain<Codec> chain(std::move(codec), lambda, n + 8LL * d, seed);
    McmcDiagnostics local;
    local.seed = seed;
    local.steps_per_block = steps;
    local.lambda = lambda;
    for (std::uint64_t block = 0; block < retry_cap; ++block) {
        for (std::uint64_t i = 0; i < steps; ++i) chain.step();
        ++local.blocks;
        if (chain.boundary() == n) {
            ++local.hits;
            local.proposals = chain.proposals;
            local.accepted = chain.accepted;
            local.accept_rate =
                chain.proposals
                    ? static_cast<double>(chain.accepted) / static_cast<double>(chain.proposals)
                    : 0.0;
            local.hit_rate = static_cast<double>(local.hits) / static_cast<double>(local.blocks);
            if (diag) *diag = local;
            LatticeSet s = chain.closure_set();
            const OddSetReport rep = classify(s, 1);
            if (!rep.is_regular_odd_cutset() || !rep.is_odd)
                throw check_error("chain state failed validation", rep.defect_witness);
            return s;
        }
    }
    local.proposals = chain.proposals;
    local.accepted = chain.accepted;
    local.accept_rate = chain.proposals ? static_cast<double>(chain.accepted) /
                                              static_cast<double>(chain.proposals)
                                        : 0.0;
    local.hit_rate = 0.0;
    if (diag) *diag = local;
    throw std::runtime_error("sample_mcmc: post-selection cap exhausted (accept_rate " +
                             std::to_string(local.accept_rate) + ", blocks " +
                             std::to_string(local.blocks) + ")");
}

}  // namespace

double tune_lambda(int d, long long n, std::uint64_t seed) {
    if (d == 2) return tune_lambda_impl(Codec2D{}, d, n, seed);
    return tune_lambda_impl(CodecND(d), d, n, seed);
}

LatticeSet sample_mcmc(int d, long long n, std::uint64_t steps, double lambda, std::uint64_t seed,
                       McmcDiagnostics* diag, std::uint64_t retry_cap) {
    if (d < 2) throw std::invalid_argument("sample_mcmc requires d >= 2");
    if (n < 1 || n % (2 * d) != 0)
        throw std::invalid_argument("sample_mcmc requires n a positive multiple of 2d");
    if (lambda <= 0) lambda = tune_lambda(d, n, seed ^ 0x9e3779b97f4a7c15ull);
    if (d == 2) return sample_mcmc_impl(Codec2D{}, d, n, steps, lambda, seed, diag, retry_cap);
    return sample_mcmc_impl(CodecND(d), d, n, steps, lambda, seed, diag, retry_cap);
}

std::string render_svg_string(const LatticeSet& s) {
    if (s.d() != 2) throw std::invalid_argument("render supports 2D only");
    if (s.empty()) throw std::invalid_argument("cannot render empty set");
    const BoundaryProfile prof = boundary_profile(s);
    const Box bb = *s.bounding_box();
    const Coord cell = 20;
    const Coord width = (bb.hi[0] - bb.lo[0] + 1) * cell;
    const Coord height = (bb.hi[1] - bb.lo[1] + 1) * cell;

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           std::to_string(width) + "\" height=\"" + std::to_string(height) + "\" viewBox=\"0 0 " +
           std::to_string(width) + " " + std::to_string(height) + "\">\n";
    for (const Vertex& v : s) {
        const Coord x = (v[0] - bb.lo[0]) * cell;
        const Coord y = (bb.hi[1] - v[1]) * cell;
        const bool on_boundary = prof.internal.contains(v);
        svg += "<rect x=\"" + std::to_string(x) + "\" y=\"" + std::to_string(y) + "\" width=\"" +
               std::to_string(cell) + "\" height=\"" + std::to_string(cell) + "\" fill=\"" +
           (on_boundary ? "#4f81bd" : "#cfe0f1") + "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
    }
    svg += "</svg>\n";
    return svg;
}

void render_svg(const LatticeSet& s, const std::string& path) {
    const std::string svg = render_svg_string(s);
    std::ofstream out(path, std::ios::trunc | std::ios::binary);
    if (!out) throw std::runtime_error("cannot write SVG: " + path);
    out << svg;
}

}  // namespace oddcut
