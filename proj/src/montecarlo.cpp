#include "bmexit/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "bmexit/numerics.hpp"

namespace bmexit {
namespace mc {

namespace {

constexpr double kPi = std::numbers::pi;

// One independent xoshiro256++ stream per path, its state expanded from
// (seed, path index) by SplitMix64.  SplitMix64 alone is not good enough
// here: its consecutive outputs carry pair correlations that Box-Muller
// turns into a small drift, which the fine-step walks integrate into a
// visible bias.
struct Rng {
  std::uint64_t s[4];

  explicit Rng(std::uint64_t seed, std::uint64_t path) {
    std::uint64_t sm = seed ^ (0x9E3779B97F4A7C15ULL * (path + 0x632BE59BD9B4E019ULL));
    for (auto& word : s) {
      sm += 0x9E3779B97F4A7C15ULL;
      std::uint64_t z = sm;
      z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
      z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
      word = z ^ (z >> 31);
    }
  }
  static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
  std::uint64_t next() {
    const std::uint64_t result = rotl(s[0] + s[3], 23) + s[0];
    const std::uint64_t t = s[1] << 17;
    s[2] ^= s[0];
    s[3] ^= s[1];
    s[1] ^= s[2];
    s[0] ^= s[3];
    s[2] ^= t;
    s[3] = rotl(s[3], 45);
    return result;
  }
  // uniform in [0, 1)
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  // standard normal pair (Box-Muller with explicit formulas for determinism)
  void gaussian_pair(double& g1, double& g2) {
    double u1 = uniform();
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    const double u2 = uniform();
    const double m = std::sqrt(-2.0 * std::log(u1));
    g1 = m * std::cos(2.0 * kPi * u2);
    g2 = m * std::sin(2.0 * kPi * u2);
  }
};

// Geometry prepared once per simulate() call; polygon vertex lists are not
// recomputed inside the path loop.
struct Geometry {
  const domains::DomainSpec* spec;
  std::vector<domains::Point2> poly;
  bool polygonal = false;

  explicit Geometry(const domains::DomainSpec& d) : spec(&d) {
    polygonal = domains::is_polygonal(d);
    if (polygonal) poly = domains::polygon_vertices(d);
  }
  bool contains(const domains::Point2& pt) const {
    return polygonal ? domains::polygon_contains(poly, pt) : domains::contains(*spec, pt);
  }
  double distance(const domains::Point2& pt) const {
    return polygonal ? domains::polygon_boundary_distance(poly, pt)
                     : domains::boundary_distance(*spec, pt);
  }
};

struct PathOutcome {
  double time = 0.0;
  bool truncated = false;
};

PathOutcome run_wos_path(const Geometry& geom, domains::Point2 start, double shell,
                         long long max_steps, Rng rng) {
  PathOutcome out;
  domains::Point2 pt = start;
  for (long long step = 0; step < max_steps; ++step) {
    if (!geom.contains(pt)) return out;  // landed on or outside the boundary
    const double d = geom.distance(pt);
    if (d < shell) return out;
    out.time += 0.5 * d * d;
    const double angle = 2.0 * kPi * rng.uniform();
    pt.x += d * std::cos(angle);
    pt.y += d * std::sin(angle);
  }
  out.truncated = true;
  return out;
}

PathOutcome run_euler_path(const Geometry& geom, domains::Point2 start, double h,
                           long long max_steps, Rng rng) {
  PathOutcome out;
  domains::Point2 pt = start;
  const double s = std::sqrt(h);
  for (long long step = 0; step < max_steps; ++step) {
    double g1, g2;
    rng.gaussian_pair(g1, g2);
    pt.x += s * g1;
    pt.y += s * g2;
    out.time += h;
    if (!geom.contains(pt)) return out;
  }
  out.truncated = true;
  return out;
}

}  // namespace

McResult simulate(const domains::DomainSpec& domain, const domains::Point2& start,
                  const McConfig& cfg) {
  if (cfg.paths < 100) throw std::invalid_argument("simulate: paths >= 100 required");
  if (!(cfg.step > 0.0)) throw std::invalid_argument("simulate: step > 0 required");
  if (!(cfg.shell > 0.0)) throw std::invalid_argument("simulate: shell > 0 required");
  if (!domains::contains(domain, start)) {
    throw std::domain_error("simulate: start point is not interior");
  }

  const Geometry geom(domain);
  const long long n = cfg.paths;
  std::vector<double> times(n, 0.0);
  std::vector<unsigned char> truncated(n, 0);

  auto worker = [&](long long lo, long long hi) {
    for (long long i = lo; i < hi; ++i) {
      Rng rng(cfg.seed, static_cast<std::uint64_t>(i));
      const PathOutcome o = (cfg.method == McMethod::walk_on_spheres)
                                ? run_wos_path(geom, start, cfg.shell, cfg.max_steps, rng)
                                : run_euler_path(geom, start, cfg.step, cfg.max_steps, rng);
      times[i] = o.time;
      truncated[i] = o.truncated ? 1 : 0;
    }
  };

  unsigned n_threads = cfg.threads > 0 ? static_cast<unsigned>(cfg.threads)
                                       : std::thread::hardware_concurrency();
  if (n_threads == 0) n_threads = 1;
  n_threads = std::min<unsigned>(n_threads, 64);
  if (n_threads <= 1 || n < 1000) {
    worker(0, n);
  } else {
    std::vector<std::thread> pool;
    const long long block = (n + n_threads - 1) / n_threads;
    for (unsigned t = 0; t < n_threads; ++t) {
      const long long lo = t * block;
      const long long hi = std::min<long long>(n, lo + block);
      if (lo >= hi) break;
      pool.emplace_back(worker, lo, hi);
    }
    for (auto& th : pool) th.join();
  }

  McResult out;
  out.paths_used = n;
  for (long long i = 0; i < n; ++i) out.truncated_paths += truncated[i];
  if (out.truncated_paths == n) {
    throw std::runtime_error("simulate: all paths truncated (infinite expectation likely)");
  }
  out.mean = numerics::pairwise_sum(times) / static_cast<double>(n);
  std::vector<double> sq(n);
  for (long long i = 0; i < n; ++i) {
    const double d = times[i] - out.mean;
    sq[i] = d * d;
  }
  const double var = numerics::pairwise_sum(sq) / static_cast<double>(n - 1);
  out.std_error = std::sqrt(var / static_cast<double>(n));
  out.bias_bound = (cfg.method == McMethod::walk_on_spheres) ? 0.5 * cfg.shell * cfg.shell
                                                             : std::sqrt(cfg.step);
  return out;
}

std::vector<double> wedge_divergence_probe(double p, const std::vector<long long>& caps,
                                           long long paths, std::uint64_t seed, double step) {
  if (!(p > 0.0) || p > 1.0) throw std::invalid_argument("wedge_divergence_probe: 0 < p <= 1");
  for (std::size_t c = 1; c < caps.size(); ++c) {
    if (caps[c] <= caps[c - 1]) {
      throw std::invalid_argument("wedge_divergence_probe: caps must be increasing");
    }
  }
  // Time-stepped walks: a cap of k steps truncates each path at time k * step,
  // so the capped means track E[min(tau, T)], which grows without bound in
  // the infinite-expectation regime and stabilizes otherwise.  One increment
  // stream per path serves every cap.
  const long long max_cap = caps.back();
  const double s = std::sqrt(step);
  const double cos_a = std::cos(kPi * p / 2.0);
  const double cos2 = cos_a * cos_a;
  const bool half_plane = p >= 1.0;
  std::vector<std::vector<double>> sums(caps.size(), std::vector<double>(paths, 0.0));
  for (long long i = 0; i < paths; ++i) {
    Rng rng(seed, static_cast<std::uint64_t>(i));
    double x = 1.0, y = 0.0;
    double time = 0.0;
    std::size_t next_cap = 0;
    for (long long k = 0; k < max_cap; ++k) {
      double g1, g2;
      rng.gaussian_pair(g1, g2);
      x += s * g1;
      y += s * g2;
      time += step;
      if (k + 1 == caps[next_cap]) {
        sums[next_cap][i] = time;
        ++next_cap;
      }
      // |arg z| < pi p / 2  <=>  x > 0 and x^2 > cos^2(pi p / 2) (x^2 + y^2)
      if (!(x > 0.0) || (!half_plane && x * x <= cos2 * (x * x + y * y))) break;
    }
    for (; next_cap < caps.size(); ++next_cap) sums[next_cap][i] = time;
  }
  std::vector<double> means;
  means.reserve(caps.size());
  for (std::size_t c = 0; c < caps.size(); ++c) {
    means.push_back(numerics::pairwise_sum(sums[c]) / static_cast<double>(paths));
  }
  return means;
}

}  // namespace mc
}  // namespace bmexit
