#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "bmexit/conformal.hpp"
#include "bmexit/greenfn.hpp"
#include "bmexit/numerics.hpp"
#include "bmexit/specfun.hpp"

using namespace bmexit;
using greenfn::AngleSign;
using greenfn::PolarPoint;
constexpr double kPi = std::numbers::pi;

namespace {

struct Sampler {
  std::uint64_t state = 0xA5A5A5A5DEADBEEFULL;
  double next() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return static_cast<double>(state >> 11) * 0x1.0p-53;
  }
  PolarPoint upper_half_disc(double r0) {
    return {r0 * (0.02 + 0.96 * std::sqrt(next())), kPi * (0.02 + 0.96 * next())};
  }
};

}  // namespace

TEST_CASE("green function symmetry and positivity") {
  Sampler s;
  for (int i = 0; i < 500; ++i) {
    const PolarPoint z = s.upper_half_disc(1.0);
    const PolarPoint w = s.upper_half_disc(1.0);
    if (std::abs(z.r - w.r) < 1e-9 && std::abs(z.theta - w.theta) < 1e-9) continue;
    const double g_zw = greenfn::halfdisc_green(z, w, 1.0);
    const double g_wz = greenfn::halfdisc_green(w, z, 1.0);
    CHECK(g_zw > 0.0);
    if (i < 50) CHECK(g_zw == doctest::Approx(g_wz).epsilon(1e-12));
  }
}

TEST_CASE("green function vanishes on both boundary pieces") {
  const PolarPoint z{0.5, 1.1};
  // flat segment: phi = 0
  CHECK(greenfn::halfdisc_green(z, {0.3, 0.0}, 1.0) == doctest::Approx(0.0).epsilon(1e-14));
  // arc: rho = r0
  CHECK(greenfn::halfdisc_green(z, {1.0, 0.8}, 1.0) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK_THROWS_AS(greenfn::halfdisc_green(z, z, 1.0), std::domain_error);
}

TEST_CASE("log kernel expansion") {
  CHECK(greenfn::log_kernel_expansion(2.0, 0.0, 0.3, 10) ==
        doctest::Approx(2.0 * std::log(2.0)).epsilon(1e-14));
  const double v = greenfn::log_kernel_expansion(1.0, 0.5, 0.7, 200);
  CHECK(v == doctest::Approx(std::log(1.0 + 0.25 - std::cos(0.7))).epsilon(1e-10));
  // symmetric in the min/max arguments
  CHECK(greenfn::log_kernel_expansion(0.5, 1.0, 0.7, 200) == doctest::Approx(v).epsilon(1e-12));
  CHECK_THROWS_AS(greenfn::log_kernel_expansion(1.0, 1.0, 0.3, 50), std::domain_error);
}

TEST_CASE("angular dilog integral special cases") {
  CHECK(greenfn::angular_dilog_integral(2.0, 0.0, 0.7, AngleSign::minus) ==
        doctest::Approx(2.0 * kPi * std::log(2.0)).epsilon(1e-14));
  // theta = 0: the four dilogarithms cancel pairwise
  CHECK(greenfn::angular_dilog_integral(1.5, 0.6, 0.0, AngleSign::minus) ==
        doctest::Approx(2.0 * kPi * std::log(1.5)).epsilon(1e-13));
  CHECK_THROWS_AS(greenfn::angular_dilog_integral(0.5, 0.6, 0.3, AngleSign::minus),
                  std::domain_error);
}

TEST_CASE("angular dilog integral matches quadrature on a grid") {
  for (double r : {0.5, 1.0, 2.0}) {
    for (double ratio : {0.2, 0.5, 0.8}) {
      for (double theta : {0.3, 1.0, 2.2}) {
        const double rho = ratio * r;
        for (AngleSign sign : {AngleSign::minus, AngleSign::plus}) {
          const double v = greenfn::angular_dilog_integral(r, rho, theta, sign);
          auto f = [&](double phi) {
            const double c =
                (sign == AngleSign::minus) ? std::cos(theta - phi) : std::cos(theta + phi);
            return std::log(r * r + rho * rho - 2.0 * r * rho * c);
          };
          const auto q = numerics::integrate(f, 0.0, kPi, 1e-13, 1e-13);
          CHECK(std::abs(v - q.value) < 1e-10);
        }
      }
    }
  }
}

TEST_CASE("radial antiderivative (inner): value, derivative, and limit") {
  CHECK(greenfn::radial_dilog_integral_inner(0.8, 0.0) == 0.0);
  const double c = 0.8, rho = 0.5, h = 1e-5;
  const double fd = (greenfn::radial_dilog_integral_inner(c, rho + h) -
                     greenfn::radial_dilog_integral_inner(c, rho - h)) /
                    (2.0 * h);
  const double expected = rho * specfun::dilog({c * rho, 0.0}).real();
  CHECK(fd == doctest::Approx(expected).epsilon(1e-6));

  auto f = [](double t) { return t * specfun::dilog({t, 0.0}).real(); };
  const auto q = numerics::integrate(f, 0.0, 1.0, 1e-12, 1e-12);
  CHECK(greenfn::radial_dilog_integral_inner(1.0, 1.0) == doctest::Approx(q.value).epsilon(1e-9));
  CHECK_THROWS_AS(greenfn::radial_dilog_integral_inner(2.0, 1.0), std::domain_error);
}

TEST_CASE("radial antiderivative (outer): limit, derivative, definite integral") {
  // the value tends to 0 with the inner argument
  CHECK(std::abs(greenfn::radial_dilog_integral_outer(1e-12, 1.0)) < 1e-10);
  const double w = 0.3, rho = 1.0, h = 1e-5;
  const double fd = (greenfn::radial_dilog_integral_outer(w, rho + h) -
                     greenfn::radial_dilog_integral_outer(w, rho - h)) /
                    (2.0 * h);
  const double expected = rho * specfun::dilog({w / rho, 0.0}).real();
  CHECK(fd == doctest::Approx(expected).epsilon(1e-6));

  auto f = [](double t) { return t * specfun::dilog({0.3 / t, 0.0}).real(); };
  const auto q = numerics::integrate(f, 1.0, 2.0, 1e-12, 1e-12);
  const double definite = greenfn::radial_dilog_integral_outer(0.3, 2.0) -
                          greenfn::radial_dilog_integral_outer(0.3, 1.0);
  CHECK(definite == doctest::Approx(q.value).epsilon(1e-9));
  CHECK_THROWS_AS(greenfn::radial_dilog_integral_outer(1.5, 1.0), std::domain_error);
}

TEST_CASE("full-period log integral identity") {
  struct Triple {
    double a, b;
    int n;
  };
  for (const Triple& t : {Triple{2, 1, 1}, Triple{1, 3, 2}, Triple{0.5, 0.2, 1}}) {
    auto f = [&](double x) {
      return std::log(t.a * t.a - 2.0 * t.a * t.b * std::cos(x) + t.b * t.b);
    };
    const auto q = numerics::integrate(f, 0.0, t.n * kPi, 1e-13, 1e-13);
    const double closed = 2.0 * kPi * t.n * std::log(std::max(t.a, t.b));
    CHECK(q.value == doctest::Approx(closed).epsilon(1e-10));
  }
}

TEST_CASE("half-disc exit time by the green route") {
  // mapped disc center: value matches the conformal-series constant
  const auto e = greenfn::halfdisc_exit_time({std::sqrt(2.0) - 1.0, kPi / 2.0}, 1.0);
  CHECK(e.value == doctest::Approx(0.191807).epsilon(1e-5));
  CHECK(e.value ==
        doctest::Approx(2.0 * (std::sqrt(2.0) - 1.0 - 1.0 / kPi)).epsilon(1e-10));
  // direct cross-link with the coefficient-sum route
  const auto series =
      conformal::exit_time_from_coefficients(conformal::halfdisc_coefficients(4096), 1e-5);
  CHECK(std::abs(e.value - series.value) < 1e-4);

  // near-boundary continuity
  CHECK(greenfn::halfdisc_exit_time({0.999, kPi / 2.0}, 1.0).value < 0.01);
  CHECK(greenfn::halfdisc_exit_time({0.5, 0.002}, 1.0).value < 0.01);

  // scaling: r0 = 2 at the scaled point is 4x the unit value
  const auto e2 = greenfn::halfdisc_exit_time({2.0 * (std::sqrt(2.0) - 1.0), kPi / 2.0}, 2.0);
  CHECK(e2.value == doctest::Approx(4.0 * e.value).epsilon(1e-10));

  CHECK_THROWS_AS(greenfn::halfdisc_exit_time({1.5, kPi / 2}, 1.0), std::domain_error);
  CHECK_THROWS_AS(greenfn::halfdisc_exit_time({0.5, -0.3}, 1.0), std::domain_error);
}

TEST_CASE("half-disc green route agrees with brute-force integration") {
  // direct 2-d quadrature of the green function at a generic point
  const PolarPoint pt{0.3, kPi / 4.0};
  auto radial = [&](double phi) {
    auto f = [&](double rho) {
      if (std::abs(rho - pt.r) < 1e-14) rho += 1e-13;
      return rho * greenfn::halfdisc_green(pt, {rho, phi}, 1.0);
    };
    // split at the kernel kink rho = r
    const auto q1 = numerics::integrate(f, 0.0, pt.r, 1e-11, 1e-11);
    const auto q2 = numerics::integrate(f, pt.r, 1.0, 1e-11, 1e-11);
    return q1.value + q2.value;
  };
  const auto outer = numerics::integrate(radial, 0.0, kPi, 1e-9, 1e-9, 400);
  const double brute = 2.0 * outer.value;
  const auto e = greenfn::halfdisc_exit_time(pt, 1.0);
  CHECK(e.value == doctest::Approx(brute).epsilon(1e-7));
}

TEST_CASE("disc exit time via the integral route") {
  CHECK(greenfn::disc_exit_time_via_green(0.0, 1.0) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(greenfn::disc_exit_time_via_green(0.6, 1.0) == doctest::Approx(0.32).epsilon(1e-12));
  CHECK(greenfn::disc_exit_time_via_green(1.0 - 1e-9, 1.0) ==
        doctest::Approx(0.0).epsilon(1e-8));
  for (double r : {0.1, 0.35, 0.77}) {
    CHECK(greenfn::disc_exit_time_via_green(r, 1.0) ==
          doctest::Approx(0.5 * (1.0 - r * r)).epsilon(1e-10));
  }
  CHECK_THROWS_AS(greenfn::disc_exit_time_via_green(1.5, 1.0), std::domain_error);
}
