#include "oddcut/bounds.hpp"

#include <sstream>
#include <stdexcept>

namespace oddcut {

namespace mp = boost::multiprecision;

std::string render_float(const Float50& x) {
    std::ostringstream ss;
    ss.precision(30);
    ss << x;
    return ss.str();
}

namespace {

Float50 pow2(const BigRational& exponent) {
    const Float50 e(exponent);
    return mp::pow(Float50(2), e);
}

std::optional<std::uint64_t> cached_occ(int d, long long n, const CountTable& counts) {
    if (auto hit = counts.lookup({d, n, 1, "contains"})) return std::stoull(hit->count);
    return std::nullopt;
}

}  // namespace

BoundsReport theorem_bracket(int d, long long n, const BigRational& c_upper,
                             const CountTable* counts) {
    if (d < 2) throw std::invalid_argument("theorem_bracket requires d >= 2");
    if (n < 1 || n % (2 * d) != 0)
        throw std::invalid_argument("theorem_bracket requires n a positive multiple of 2d");

    BoundsReport rep;
    rep.d = d;
    rep.n = n;
    rep.c_upper = c_upper;

    const BigRational base(n, 2 * d);
    const BigRational eps(1, mp::pow(mp::cpp_int(2), static_cast<unsigned>(2 * d)));
    rep.lower_exponent = base * (1 + eps);
    rep.lower_value = pow2(rep.lower_exponent);
    rep.mu_lower_slab_log2 = 1 + eps;

    const Float50 logd = mp::log(Float50(d));
    const Float50 correction = Float50(c_upper) * mp::pow(logd, Float50(1.5)) / mp::sqrt(Float50(d));
    rep.upper_exponent = Float50(base) * (Float50(1) + correction);
    rep.upper_value = mp::pow(Float50(2), rep.upper_exponent);

    if (counts) rep.occ = cached_occ(d, n, *counts);
    return rep;
}

GrowthReport growth_estimate(int d, const CountTable& counts) {
    if (d < 2) throw std::invalid_argument("growth_estimate requires d >= 2");
    GrowthReport rep;
    rep.d = d;
    rep.slab_log2 = 1 + BigRational(1, mp::pow(mp::cpp_int(2), static_cast<unsigned>(2 * d)));
    rep.best_bk_log2 = Float50(0);

    // b_k = a_(k-6d) / (16 k^2) with a_j = OCC(2dj); every b_k^(1/k) bounds
    // mu(d) from below. Scan cached counts as a_j.
    const Float50 log2e = Float50(1) / mp::log(Float50(2));
    for (long long j = 1; j <= 4096; ++j) {
        const auto a_j = cached_occ(d, 2 * d * j, counts);
        if (!a_j || *a_j == 0) continue;
        ++rep.counts_used;
        const long long k = j + 6 * d;
        const Float50 log2_bk =
            mp::log(Float50(*a_j)) * log2e - mp::log(Float50(16) * Float50(k) * Float50(k)) * log2e;
        const Float50 cand = log2_bk / Float50(k);
        if (!rep.have_bk || cand > rep.best_bk_log2) {
            rep.best_bk_log2 = cand;
            rep.have_bk = true;
        }
    }
    const Float50 slab(rep.slab_log2);
    rep.mu_lower_log2 = rep.have_bk && rep.best_bk_log2 > slab ? rep.best_bk_log2 : slab;
    return rep;
}

std::string to_string(SupermultVerdict v) {
    switch (v) {
        case SupermultVerdict::Holds: return "HOLDS";
        case SupermultVerdict::Vacuous: return "VACUOUS";
        case SupermultVerdict::Unknown: return "UNKNOWN";
        case SupermultVerdict::Fails: return "FAILS";
    }
    return "UNKNOWN";
}

std::uint64_t occ_known_lower_bound(int d, long long n, const CountTable& counts) {
    if (auto exact = cached_occ(d, n, counts)) return *exact;
    const long long minimal = 2LL * d * (2 * d - 1);
    if (n < minimal || n % (2 * d) != 0) return 0;
    // peak extensions of the minimal cutset realize boundary growth
    // 2d(r(2d-3)+s(2d-2))
    const long long gap = (n - minimal) / (2 * d);
    const long long a = 2 * d - 3, b = 2 * d - 2;
    for (long long s = 0; s * b <= gap; ++s)
        if ((gap - s * b) % a == 0) return 1;
    return 0;
}

SupermultVerdict supermult_check(int d, long long n, long long m, long long k,
                                 const CountTable& counts) {
    if (d < 2) throw std::invalid_argument("supermult_check requires d >= 2");
    for (long long x : {n, m, k})
        if (x < 1 || x % (2 * d) != 0)
            throw std::invalid_argument("supermult_check requires positive multiples of 2d");
    if (k < 12LL * d * d) throw std::domain_error("supermult_check requires k >= 12d^2");

    const auto occ_n = cached_occ(d, n, counts);
    const auto occ_m = cached_occ(d, m, counts);
    if (!occ_n || !occ_m) return SupermultVerdict::Unknown;

    // RHS = occ_n occ_m / (m/d)^(d/(d-1));
    // RHS <= X  <=>  (occ_n occ_m)^(d-1) d^d <= X^(d-1) m^d   (exact integers)
    const mp::cpp_int lhs_pow = mp::pow(mp::cpp_int(*occ_n) * mp::cpp_int(*occ_m),
                                        static_cast<unsigned>(d - 1)) *
                                mp::pow(mp::cpp_int(d), static_cast<unsigned>(d));
    auto rhs_dominates = [&](const mp::cpp_int& x) {
        return lhs_pow <= mp::pow(x, static_cast<unsigned>(d - 1)) *
                              mp::pow(mp::cpp_int(m), static_cast<unsigned>(d));
    };

    if (auto lhs = cached_occ(d, n + m + k, counts))
        return rhs_dominates(mp::cpp_int(*lhs)) ? SupermultVerdict::Holds : SupermultVerdict::Fails;

    if (rhs_dominates(mp::cpp_int(1))) return SupermultVerdict::Vacuous;
    const std::uint64_t lb = occ_known_lower_bound(d, n + m + k, counts);
    if (lb > 0 && rhs_dominates(mp::cpp_int(lb))) return SupermultVerdict::Vacuous;
    return SupermultVerdict::Unknown;
}

}  // namespace oddcut
