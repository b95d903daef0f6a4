#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "oddcut/lattice_set.hpp"

namespace oddcut {

// Uniform i.i.d. draws from the fully enumerated family; errors outside the
// desk-scale envelope and points at the chain sampler instead.
std::vector<LatticeSet> sample_exact(int d, long long n, std::size_t count, std::uint64_t seed);

struct McmcDiagnostics {
    std::uint64_t seed = 0;
    std::uint64_t steps_per_block = 0;
    std::uint64_t proposals = 0;
    std::uint64_t accepted = 0;
    std::uint64_t blocks = 0;
    std::uint64_t hits = 0;  // blocks ending on the target boundary size
    double accept_rate = 0;
    double hit_rate = 0;
    double lambda = 0;
};

// Metropolis chain over even cores (connected, origin-rooted, closure a
// regular odd cutset) with stationary weight lambda^|dS|, post-selected on
// |dS| = n by rerunning blocks of `steps` proposals. lambda <= 0 requests
// self-tuning. The state space is capped at boundary size n + 8d; the
// conditional law on the target slice is uniform for any lambda.
LatticeSet sample_mcmc(int d, long long n, std::uint64_t steps, double lambda, std::uint64_t seed,
                       McmcDiagnostics* diag = nullptr, std::uint64_t retry_cap = 1000);

// Stochastic-approximation tuning: multiplicative updates on lambda until
// the running boundary size tracks n. Deterministic for a fixed seed.
double tune_lambda(int d, long long n, std::uint64_t seed);

// Whether (d, n) is inside the envelope the exact sampler (and the CLI
// without --force) will enumerate.
bool within_desk_envelope(int d, long long n);

// Unit-square rendering of a 2D set; internal-boundary cells get a distinct
// fill. Byte-deterministic for fixed input.
std::string render_svg_string(const LatticeSet& s);
void render_svg(const LatticeSet& s, const std::string& path);

}  // namespace oddcut
