#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "oddcut/approx.hpp"
#include "oddcut/lattice_set.hpp"

namespace oddcut {

// W separates s when every boundary edge of s has an endpoint in W.
bool separates(const LatticeSet& w, const LatticeSet& s);
std::optional<std::pair<Vertex, Vertex>> unseparated_edge(const LatticeSet& w, const LatticeSet& s);

// Vertices incident to at least d boundary edges of s. Asserted to
// separate s.
LatticeSet revealed(const LatticeSet& s);

// Greedy set cover: T within svc with N_t(svc) within N(T), picking the
// vertex covering the most uncovered targets (ties by lex order). The size
// guarantee |T| <= ((1+ln 2d)/t)|svc| is asserted.
LatticeSet greedy_cover(const LatticeSet& svc, int t);

struct SeparatorReport {
    LatticeSet u_set;
    double size_bound = 0;  // c_sep * n * d^(-3/2) * sqrt(ln d)
    int s_threshold = 0;    // ceil(sqrt(d ln d))
    int t_threshold = 0;    // ceil(d/4)
    // intermediates, inside first then complement side
    LatticeSet a_in, a_prime_in, b_in, b_prime_in;
    LatticeSet a_out, a_prime_out, b_out, b_prime_out;
};

// Two-sided degree-split separator; N(u_set) is asserted to separate s.
SeparatorReport build_separator(const LatticeSet& s, double c_sep = 20.0);

// Component-classification family over window \ w: components of size > d
// get all black/white assignments (the boundary-touching sea is forced
// white); the assignment sides are thickened by their odd/even closures.
std::vector<Approximation> small_approx_family(const LatticeSet& w, const Box& window,
                                               int large_component_cap = 20);

// The member of the family induced by s itself.
Approximation small_approx_witness(const LatticeSet& w, const LatticeSet& s, const Box& window);

// Absorbs unknown vertices whose whole neighborhood is decided; the result
// has no isolated unknown vertices and the same approximated family.
Approximation eliminate_isolated(const Approximation& a);

// One refinement stage: grows a greedy independent record set W inside the
// unknown region (even cells in s, odd cells outside), thickens, and
// eliminates isolated cells. Requires the measure
// |Odd cap A* cap S| + |Even cap A* cap S^c| <= m; guarantees |W| <= m/t, a
// t-approximation, and s still approximated.
struct RefineResult {
    LatticeSet record;  // the independent set W
    Approximation refined;
};
RefineResult refine_to_t(const Approximation& a, const LatticeSet& s, int t, long long m);

// End-to-end witness pipeline: separator, component witness, then two
// refinement stages (first at t=d, then at the requested t).
Approximation approximate(const LatticeSet& s, int t, double c_sep = 20.0);

struct FamilySizeReport {
    std::size_t samples = 0;
    std::size_t distinct = 0;
    double formula_bound = 0;  // exp(C n r (ln d / d)^(3/2) + C n ln d/(d t))
    std::size_t max_star_size = 0;
    std::size_t max_w3 = 0;  // max over samples of 3|N(U)|
    bool coverage_ok = false;
};

// Deduplicated pipeline outputs over a sample list; observational.
FamilySizeReport family_size_report(const std::vector<LatticeSet>& samples, int t,
                                    double c_formula = 1.0, double c_sep = 20.0);

}  // namespace oddcut
