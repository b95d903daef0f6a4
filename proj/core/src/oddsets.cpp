#include "oddcut/oddsets.hpp"

#include <stdexcept>

#include "oddcut/errors.hpp"

namespace oddcut {

OddSetReport classify(const LatticeSet& s, int r) {
    if (s.empty()) throw std::invalid_argument("classify requires a non-empty set");
    if (r < 1) throw std::invalid_argument("connectivity radius must be >= 1");

    OddSetReport rep;
    rep.r = r;
    const BoundaryProfile prof = boundary_profile(s);

    rep.is_odd = true;
    rep.is_even = true;
    std::optional<Vertex> odd_witness, even_witness;
    for (const Vertex& v : prof.internal) {
        if (is_even(v)) {
            rep.is_odd = false;
            if (!odd_witness) odd_witness = v;
        } else {
            rep.is_even = false;
            if (!even_witness) even_witness = v;
        }
    }

    // An isolated complement vertex necessarily lies on the external
    // boundary, so the complement side only needs a scan of it.
    std::optional<Vertex> isolated = isolated_member(s, 1);
    if (!isolated) isolated = isolated_complement_vertex(s);
    rep.is_regular = !isolated.has_value();

    const bool conn1 = is_connected(s, 1);
    const bool coconn1 = complement_connected(s, 1);
    rep.is_cutset = conn1 && coconn1;

    const bool connr = r == 1 ? conn1 : is_connected(s, r);
    const bool coconnr = r == 1 ? coconn1 : complement_connected(s, r);
    rep.is_r_cutset = rep.is_regular && connr && coconnr;

    if (!rep.is_odd) {
        rep.defect_witness = odd_witness;
        rep.violated = "odd";
    } else if (!rep.is_regular) {
        rep.defect_witness = isolated;
        rep.violated = "regular";
    } else if (!rep.is_cutset) {
        if (!conn1) {
            rep.defect_witness = components(s, 1).back().members().front();
        } else {
            rep.defect_witness = complement_disconnection_witness(s, 1);
        }
        rep.violated = "cutset";
    } else if (!rep.is_r_cutset) {
        if (!connr) {
            rep.defect_witness = components(s, r).back().members().front();
        } else {
            rep.defect_witness = complement_disconnection_witness(s, r);
        }
        rep.violated = "r_cutset";
    }
    return rep;
}

LatticeSet even_core(const LatticeSet& s) {
    return s.even_part();
}

LatticeSet from_even_core(const LatticeSet& core) {
    for (const Vertex& v : core)
        if (is_odd(v)) throw std::invalid_argument("core must be even");
    return closure(core);
}

StructuralLemmaReport check_structural_lemmas(const LatticeSet& s) {
    if (s.empty()) throw std::invalid_argument("structural lemmas require a non-empty set");
    const int d = s.d();
    OddSetReport rep = classify(s, 1);
    if (!rep.is_odd) throw check_error("structural lemmas require odd set", rep.defect_witness);

    StructuralLemmaReport out;
    const BoundaryProfile prof = boundary_profile(s);
    out.boundary_edges = prof.edge_count();
    const long long odd_count = static_cast<long long>(s.odd_part().size());
    const long long even_count = static_cast<long long>(s.even_part().size());
    out.parity_count_difference = odd_count - even_count;
    out.has_even_vertex = even_count > 0;

    if (out.boundary_edges % static_cast<std::size_t>(2 * d) != 0)
        throw check_error("odd set boundary size not a multiple of 2d");
    const std::size_t per_direction = out.boundary_edges / static_cast<std::size_t>(2 * d);
    for (const LatticeSet& dir : prof.directional) {
        out.directional_sizes.push_back(dir.size());
        if (dir.size() != per_direction)
            throw check_error("directional boundary differs from |dS|/2d");
    }
    if (out.parity_count_difference != static_cast<long long>(per_direction))
        throw check_error("directional boundary differs from parity count difference");
    if (out.has_even_vertex) {
        out.min_boundary_bound_checked = true;
        if (out.boundary_edges < static_cast<std::size_t>(2 * d) * static_cast<std::size_t>(2 * d - 1))
            throw check_error("odd set with an even vertex has |dS| < 2d(2d-1)");
    }
    return out;
}

}  // namespace oddcut
