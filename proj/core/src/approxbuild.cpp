#include "oddcut/approxbuild.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "oddcut/errors.hpp"
#include "oddcut/lattice.hpp"
#include "oddcut/oddsets.hpp"

namespace oddcut {

std::optional<std::pair<Vertex, Vertex>> unseparated_edge(const LatticeSet& w, const LatticeSet& s) {
    for (const auto& [u, v] : boundary_profile(s).edge_boundary)
        if (!w.contains(u) && !w.contains(v)) return std::make_pair(u, v);
    return std::nullopt;
}

bool separates(const LatticeSet& w, const LatticeSet& s) {
    return !unseparated_edge(w, s).has_value();
}

LatticeSet revealed(const LatticeSet& s) {
    const int d = s.d();
    const BoundaryProfile prof = boundary_profile(s);
    std::vector<Vertex> rev;
    auto boundary_degree = [&](const Vertex& v, bool inside) {
        int cnt = 0;
        for (int k = 0; k < direction_count(d); ++k)
            if (s.contains(vertex_add(v, direction(d, k))) != inside) ++cnt;
        return cnt;
    };
    for (const Vertex& v : prof.internal)
        if (boundary_degree(v, true) >= d) rev.push_back(v);
    for (const Vertex& v : prof.external)
        if (boundary_degree(v, false) >= d) rev.push_back(v);
    LatticeSet out(d, std::move(rev));
    if (auto edge = unseparated_edge(out, s))
        throw check_error("revealed vertices fail to separate the set", edge->first);
    return out;
}

LatticeSet greedy_cover(const LatticeSet& svc, int t) {
    if (t < 1) throw std::invalid_argument("greedy_cover requires t >= 1");
    const int d = svc.d();
    if (svc.empty()) return svc;
    const LatticeSet targets = n_t(svc, t);

    std::vector<Vertex> chosen;
    LatticeSet uncovered = targets;
    while (!uncovered.empty()) {
        Vertex best;
        std::size_t best_cover = 0;
        for (const Vertex& cand : svc) {
            std::size_t cnt = 0;
            for (int k = 0; k < direction_count(d); ++k)
                if (uncovered.contains(vertex_add(cand, direction(d, k)))) ++cnt;
            if (cnt > best_cover) {  // lex-smallest wins ties by scan order
                best_cover = cnt;
                best = cand;
            }
        }
        if (best_cover == 0)
            throw check_error("greedy_cover: uncovered target with no candidate",
                              uncovered.members().front());
        chosen.push_back(best);
        uncovered = uncovered.set_minus(external_boundary(LatticeSet(d, {best})));
    }
    LatticeSet cover(d, std::move(chosen));
    const double guarantee = (1.0 + std::log(2.0 * d)) / t * static_cast<double>(svc.size());
    if (static_cast<double>(cover.size()) > guarantee)
        throw check_error("greedy_cover exceeded its (1+ln 2d)/t size guarantee");
    // coverage invariant
    for (const Vertex& v : targets) {
        bool covered = false;
        for (int k = 0; k < direction_count(d); ++k)
            if (cover.contains(vertex_add(v, direction(d, k)))) {
                covered = true;
                break;
            }
        if (!covered) throw check_error("greedy_cover output misses a target", v);
    }
    return cover;
}

SeparatorReport build_separator(const LatticeSet& s, double c_sep) {
    const int d = s.d();
    const OddSetReport rep = classify(s, 1);
    if (!rep.is_odd || !rep.is_regular_odd_cutset())
        throw check_error("build_separator requires a regular odd cutset", rep.defect_witness);

    SeparatorReport out;
    out.s_threshold = static_cast<int>(std::ceil(std::sqrt(d * std::log(static_cast<double>(d)))));
    out.s_threshold = std::max(out.s_threshold, 1);
    out.t_threshold = (d + 3) / 4;  // ceil(d/4)

    const BoundaryProfile prof = boundary_profile(s);
    const LatticeSet& inner = prof.internal;
    const LatticeSet& outer = prof.external;
    const int n = static_cast<int>(prof.edge_count());

    // inside: A = dS_out cap N_s(dS_in), A' = dS_in cap N_{2d-s}(dS_out)
    out.a_in = outer.set_intersection(n_t(inner, out.s_threshold));
    out.a_prime_in = inner.set_intersection(n_t(outer, 2 * d - out.s_threshold));
    out.b_in = greedy_cover(out.a_in, out.t_threshold);
    out.b_prime_in = n_t(out.a_prime_in, out.t_threshold).set_intersection(s);

    // complement side: boundaries swap roles
    out.a_out = inner.set_intersection(n_t(outer, out.s_threshold));
    out.a_prime_out = outer.set_intersection(n_t(inner, 2 * d - out.s_threshold));
    out.b_out = greedy_cover(out.a_out, out.t_threshold);
    out.b_prime_out = n_t(out.a_prime_out, out.t_threshold).set_minus(s);

    out.u_set = out.b_in.set_union(out.b_prime_in).set_union(out.b_out).set_union(out.b_prime_out);
    out.size_bound = c_sep * n * std::pow(static_cast<double>(d), -1.5) *
                     std::sqrt(std::log(static_cast<double>(d)));

    // u_set lives just next to the vertex boundary
    const LatticeSet near_boundary = closure(inner.set_union(outer));
    for (const Vertex& v : out.u_set)
        if (!near_boundary.contains(v))
            throw check_error("separator strayed from the boundary neighborhood", v);

    if (auto edge = unseparated_edge(n_t(out.u_set, 1), s))
        throw check_error("separator neighborhood fails to separate", edge->first);
    return out;
}

namespace {

struct Decomposition {
    std::vector<LatticeSet> small_comps;
    std::vector<LatticeSet> large_interior;
    LatticeSet sea;  // the boundary-touching component, forced white
};

Decomposition decompose(const LatticeSet& w, const Box& window, int d) {
    if (window.volume() > (1ull << 22)) throw std::runtime_error("approximation window too large");
    std::vector<Vertex> free_cells;
    std::vector<Coord> idx(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) idx[static_cast<std::size_t>(i)] = window.lo[i];
    for (;;) {
        Vertex v(std::vector<Coord>(idx.begin(), idx.end()));
        if (!w.contains(v)) free_cells.push_back(v);
        int axis = 0;
        while (axis < d) {
            if (++idx[static_cast<std::size_t>(axis)] <= window.hi[axis]) break;
            idx[static_cast<std::size_t>(axis)] = window.lo[axis];
            ++axis;
        }
        if (axis == d) break;
    }

    Decomposition out;
    bool have_sea = false;
    for (LatticeSet& comp : components(LatticeSet(d, std::move(free_cells)), 1)) {
        bool touches = false;
        for (const Vertex& v : comp)
            if (window.on_shell(v)) {
                touches = true;
                break;
            }
        if (touches) {
            if (have_sea)
                throw std::runtime_error(
                    "component touching the window boundary besides the sea; enlarge window");
            out.sea = std::move(comp);
            have_sea = true;
        } else if (comp.size() <= static_cast<std::size_t>(d)) {
            out.small_comps.push_back(std::move(comp));
        } else {
            out.large_interior.push_back(std::move(comp));
        }
    }
    if (!have_sea)
        throw std::runtime_error("window has no boundary-touching component; enlarge window");
    return out;
}

Approximation assemble(int d, const Box& window, const LatticeSet& black_union,
                       const LatticeSet& white_union) {
    auto clip = [&](const LatticeSet& x) {
        return x.filtered([&](const Vertex& v) { return window.contains(v); });
    };
    Approximation a;
    a.d = d;
    a.window = window;
    a.black = black_union.set_union(clip(closure(black_union)).odd_part());
    a.white = white_union.set_union(clip(closure(white_union)).even_part());
    a.validate();
    return a;
}

}  // namespace

std::vector<Approximation> small_approx_family(const LatticeSet& w, const Box& window,
                                               int large_component_cap) {
    const int d = w.d();
    const Decomposition dec = decompose(w, window, d);
    const std::size_t ell = dec.large_interior.size();
    if (ell > static_cast<std::size_t>(large_component_cap))
        throw std::runtime_error("too many large components; the family is exposed for tiny windows only");
    // paper-side cardinality check: interior large components each have
    // boundary at least d^2 inside dW, so ell <= 2|W|/d
    if (ell * static_cast<std::size_t>(d) > 2 * w.size())
        throw check_error("more large components than the separator size allows");

    std::vector<Approximation> family;
    for (std::uint64_t mask = 0; mask < (1ull << ell); ++mask) {
        LatticeSet blacks(d), whites = dec.sea;
        for (std::size_t i = 0; i < ell; ++i) {
            if (mask & (1ull << i))
                blacks = blacks.set_union(dec.large_interior[i]);
            else
                whites = whites.set_union(dec.large_interior[i]);
        }
        family.push_back(assemble(d, window, blacks, whites));
    }
    return family;
}

Approximation small_approx_witness(const LatticeSet& w, const LatticeSet& s, const Box& window) {
    const int d = w.d();
    if (auto edge = unseparated_edge(w, s))
        throw check_error("witness requires a separating set", edge->first);
    const Decomposition dec = decompose(w, window, d);

    if (!dec.sea.disjoint_from(s))
        throw std::runtime_error("set reaches the window boundary; enlarge window");

    LatticeSet blacks(d), whites = dec.sea;
    for (const LatticeSet& comp : dec.large_interior) {
        const std::size_t in_s = comp.set_intersection(s).size();
        if (in_s == comp.size())
            blacks = blacks.set_union(comp);
        else if (in_s == 0)
            whites = whites.set_union(comp);
        else
            throw check_error("separated component straddles the set",
                              comp.set_intersection(s).members().front());
    }
    Approximation a = assemble(d, window, blacks, whites);
    if (!approximates(a, s)) throw check_error("witness does not approximate its own set");
    if (a.star().size() > 3 * w.size())
        throw check_error("witness unknown region exceeds 3|W|");
    return a;
}

Approximation eliminate_isolated(const Approximation& a) {
    a.validate();
    const int d = a.d;
    std::vector<Vertex> black_extra, white_extra;
    std::vector<Coord> idx(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) idx[static_cast<std::size_t>(i)] = a.window.lo[i];
    for (;;) {
        Vertex v(std::vector<Coord>(idx.begin(), idx.end()));
        int black_nbrs = 0, white_nbrs = 0;
        for (int k = 0; k < direction_count(d); ++k) {
            Vertex u = vertex_add(v, direction(d, k));
            if (!a.window.contains(u)) {
                ++white_nbrs;  // outside the window is implicitly white
                continue;
            }
            if (a.black.contains(u)) ++black_nbrs;
            if (a.white.contains(u)) ++white_nbrs;
        }
        if (black_nbrs == 2 * d) black_extra.push_back(v);
        if (white_nbrs == 2 * d) white_extra.push_back(v);
        int axis = 0;
        while (axis < d) {
            if (++idx[static_cast<std::size_t>(axis)] <= a.window.hi[axis]) break;
            idx[static_cast<std::size_t>(axis)] = a.window.lo[axis];
            ++axis;
        }
        if (axis == d) break;
    }

    Approximation b;
    b.d = d;
    b.window = a.window;
    b.black = a.black.set_union(LatticeSet(d, std::move(black_extra)));
    b.white = a.white.set_union(LatticeSet(d, std::move(white_extra)));
    if (!b.black.disjoint_from(b.white))
        throw check_error("approximation inconsistent (cut(A) likely empty)",
                          b.black.set_intersection(b.white).members().front());
    b.validate();

    const LatticeSet star = b.star();
    if (!star.subset_of(a.star()))
        throw check_error("eliminate_isolated enlarged the unknown region");
    for (const Vertex& v : star) {
        bool has_nbr = false;
        for (int k = 0; k < direction_count(d); ++k)
            if (star.contains(vertex_add(v, direction(d, k)))) {
                has_nbr = true;
                break;
            }
        if (!has_nbr) throw check_error("unknown region still has an isolated vertex", v);
    }
    return b;
}

RefineResult refine_to_t(const Approximation& a, const LatticeSet& s, int t, long long m) {
    const int d = a.d;
    if (t < 1 || t >= 2 * d) throw std::domain_error("t must satisfy 1 <= t < 2d");
    if (!approximates(a, s)) throw std::invalid_argument("refine_to_t requires an approximated set");
    const LatticeSet star = a.star();

    const long long measure = static_cast<long long>(star.odd_part().set_intersection(s).size()) +
                              static_cast<long long>(star.even_part().set_minus(s).size());
    if (measure > m) throw std::invalid_argument("refinement precondition m violated");

    // Greedy record set: scan lex; admit a vertex on the correct side of s
    // whenever it contributes at least t new unknown neighbors.
    std::vector<Vertex> record;
    LatticeSet covered(d);  // star cap N(W)
    for (const Vertex& v : star) {
        const bool side_ok = is_even(v) ? s.contains(v) : !s.contains(v);
        if (!side_ok) continue;
        std::vector<Vertex> fresh;
        for (int k = 0; k < direction_count(d); ++k) {
            Vertex u = vertex_add(v, direction(d, k));
            if (star.contains(u) && !covered.contains(u)) fresh.push_back(u);
        }
        if (static_cast<int>(fresh.size()) >= t) {
            record.push_back(v);
            covered = covered.set_union(LatticeSet(d, std::move(fresh)));
        }
    }
    LatticeSet w(d, record);
    if (static_cast<long long>(w.size()) * t > m)
        throw check_error("record set exceeds m/t");

    const LatticeSet w_closed = closure(w);
    const LatticeSet uncovered_star = star.set_minus(w_closed);
    const LatticeSet dense = n_t(uncovered_star, t);
    auto clip = [&](const LatticeSet& x) {
        return x.filtered([&](const Vertex& v) { return a.window.contains(v); });
    };
    const LatticeSet w_black = clip(closure(w.even_part())).set_union(clip(dense.odd_part()));
    const LatticeSet w_white = clip(closure(w.odd_part())).set_union(clip(dense.even_part()));

    Approximation grown;
    grown.d = d;
    grown.window = a.window;
    grown.black = a.black.set_union(w_black);
    grown.white = a.white.set_union(w_white);
    if (!grown.black.disjoint_from(grown.white))
        throw check_error("refinement produced overlapping sides",
                          grown.black.set_intersection(grown.white).members().front());
    grown.validate();

    RefineResult out{std::move(w), eliminate_isolated(grown)};
    if (!approximates(out.refined, s))
        throw check_error("refinement lost the approximated set");
    if (!is_t_approximation(out.refined, t))
        throw check_error("refinement is not a t-approximation");
    if (!out.refined.star().subset_of(star))
        throw check_error("refinement enlarged the unknown region");
    return out;
}

Approximation approximate(const LatticeSet& s, int t, double c_sep) {
    const int d = s.d();
    if (t < 1 || t >= 2 * d) throw std::domain_error("t must satisfy 1 <= t < 2d");
    const OddSetReport rep = classify(s, 1);
    if (!rep.is_regular_odd_cutset())
        throw check_error("approximate requires a regular odd cutset", rep.defect_witness);
    const long long n = static_cast<long long>(boundary_profile(s).edge_count());

    auto stage = [](const char* name, auto&& fn) -> decltype(fn()) {
        try {
            return fn();
        } catch (const std::exception& e) {
            throw check_error(std::string("approximate stage ") + name + ": " + e.what());
        }
    };

    const Box window = s.bounding_box()->expanded(4);
    const SeparatorReport sep = stage("separator", [&] { return build_separator(s, c_sep); });
    const LatticeSet w = n_t(sep.u_set, 1);
    const Approximation a0 = stage("witness", [&] { return small_approx_witness(w, s, window); });
    const long long m1 = static_cast<long long>(a0.star().size());
    const RefineResult a1 = stage("refine-d", [&] { return refine_to_t(a0, s, d, m1); });
    const RefineResult a2 =
        stage("refine-t", [&] { return refine_to_t(a1.refined, s, t, n / d); });
    if (!is_t_approximation(a2.refined, t) || !approximates(a2.refined, s))
        throw check_error("approximate: pipeline output invalid");
    return a2.refined;
}

FamilySizeReport family_size_report(const std::vector<LatticeSet>& samples, int t,
                                    double c_formula, double c_sep) {
    FamilySizeReport rep;
    rep.samples = samples.size();
    rep.coverage_ok = true;
    std::vector<Approximation> distinct;
    long long n = 0;
    for (const LatticeSet& s : samples) {
        const SeparatorReport sep = build_separator(s, c_sep);
        rep.max_w3 = std::max(rep.max_w3, 3 * n_t(sep.u_set, 1).size());
        Approximation a = approximate(s, t, c_sep);
        n = std::max(n, static_cast<long long>(boundary_profile(s).edge_count()));
        rep.max_star_size = std::max(rep.max_star_size, a.star().size());
        if (!approximates(a, s)) rep.coverage_ok = false;
        bool seen = false;
        for (const Approximation& b : distinct)
            if (b.same_pair(a)) {
                seen = true;
                break;
            }
        if (!seen) distinct.push_back(std::move(a));
    }
    rep.distinct = distinct.size();
    if (!samples.empty()) {
        const double d = samples.front().d();
        const double r = 1.0;
        rep.formula_bound = std::exp(c_formula * n * r * std::pow(std::log(d) / d, 1.5) +
                                     c_formula * n * std::log(d) / (d * t));
    }
    return rep;
}

}  // namespace oddcut
