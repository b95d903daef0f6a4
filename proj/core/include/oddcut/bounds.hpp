#pragma once

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "oddcut/cache.hpp"

namespace oddcut {

using Float50 = boost::multiprecision::cpp_bin_float_50;
using BigRational = boost::multiprecision::cpp_rational;

// Render with 30 significant digits.
std::string render_float(const Float50& x);

// The two-sided bracket around the number of origin-rooted odd cutsets with
// n boundary edges. The lower exponent is exact rational arithmetic; the
// upper endpoint depends on an unspecified absolute constant and is a
// function of the supplied C, never asserted.
struct BoundsReport {
    int d = 0;
    long long n = 0;
    BigRational lower_exponent;  // (n/2d)(1 + 2^-2d)
    Float50 lower_value;
    BigRational c_upper;
    Float50 upper_exponent;  // (n/2d)(1 + C ln^1.5(d)/sqrt(d)), natural log
    Float50 upper_value;
    std::optional<std::uint64_t> occ;  // exact count when the oracle has it
    BigRational mu_lower_slab_log2;    // 1 + 2^-2d
};

BoundsReport theorem_bracket(int d, long long n, const BigRational& c_upper,
                             const CountTable* counts = nullptr);

// Growth-constant lower estimate: the slab exponent plus the best available
// b_k^(1/k) with b_k = a_(k-6d)/(16 k^2), a_j = OCC(2dj). Each b_k^(1/k) is
// a rigorous lower bound on mu(d) by super-multiplicativity and Fekete.
struct GrowthReport {
    int d = 0;
    BigRational slab_log2;  // 1 + 2^-2d
    bool have_bk = false;
    Float50 best_bk_log2;   // max over available k of log2(b_k)/k
    Float50 mu_lower_log2;  // max of the two
    std::size_t counts_used = 0;
};

GrowthReport growth_estimate(int d, const CountTable& counts);

enum class SupermultVerdict { Holds, Vacuous, Unknown, Fails };
std::string to_string(SupermultVerdict v);

// OCC(n+m+k) >= OCC(n) OCC(m) / (m/d)^(d/(d-1)), decided exactly when every
// needed count is available; Vacuous when the right side is at most one or
// at most a known lower bound for the left side; Unknown otherwise.
SupermultVerdict supermult_check(int d, long long n, long long m, long long k,
                                 const CountTable& counts);

// Known lower bound on OCC(n,d) without enumeration: the cached exact count
// when present, else 1 when a peak extension of the minimal cutset reaches
// boundary size n, else 0.
std::uint64_t occ_known_lower_bound(int d, long long n, const CountTable& counts);

}  // namespace oddcut
