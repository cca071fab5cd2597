#ifndef BMEXIT_MONTECARLO_HPP_
#define BMEXIT_MONTECARLO_HPP_

#include <cstdint>
#include <vector>

#include "bmexit/domains.hpp"

namespace bmexit {
namespace mc {

enum class McMethod { euler, walk_on_spheres };

struct McConfig {
  McMethod method = McMethod::walk_on_spheres;
  long long paths = 100000;
  double step = 1e-4;        // Euler time step
  double shell = 1e-5;       // walk-on-spheres absorption distance
  std::uint64_t seed = 12345;
  long long max_steps = 10000000;
  int threads = 0;           // 0: hardware concurrency
};

struct McResult {
  double mean = 0.0;
  double std_error = 0.0;
  long long paths_used = 0;
  long long truncated_paths = 0;
  double bias_bound = 0.0;   // shell cutoff (WoS) or step-size indicator (Euler)
};

// Estimates the expected exit time from `start`.
//
// euler: increments of variance `step` per coordinate; the estimate counts
// whole steps until the first exterior sample.
//
// walk_on_spheres: jumps to a uniform point on the maximal inscribed circle
// and accumulates d^2/2 per jump (the expected exit time of a disc of radius
// d from its center); rotational symmetry makes the ball exit time and exit
// angle independent, so the accumulator is unbiased up to the shell cutoff,
// whose contribution is bounded in bias_bound.
//
// Paths run on independent counter-derived RNG streams keyed by
// (seed, path index) and are reduced pairwise in path order, so results are
// bit-identical for a fixed config regardless of thread count.
//
// Throws std::domain_error when start is not interior and std::runtime_error
// when every path hit max_steps (a sign of an infinite expectation).
McResult simulate(const domains::DomainSpec& domain, const domains::Point2& start,
                  const McConfig& cfg);

// Truncated-mean estimates of the exit time from the point 1 inside the
// wedge of half-angle pi p / 2, one per step cap (time-stepped walks, so a
// cap of k steps truncates each path at time k * step).  For p < 1/2 the
// sequence stabilizes near (sec(pi p) - 1)/2; for p >= 1/2 it keeps growing.
// caps must be strictly increasing.
std::vector<double> wedge_divergence_probe(double p, const std::vector<long long>& caps,
                                           long long paths = 20000, std::uint64_t seed = 12345,
                                           double step = 1e-4);

}  // namespace mc
}  // namespace bmexit

#endif  // BMEXIT_MONTECARLO_HPP_
