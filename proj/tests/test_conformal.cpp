#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <numbers>

#include "bmexit/conformal.hpp"
#include "bmexit/domains.hpp"
#include "bmexit/numerics.hpp"
#include "bmexit/specfun.hpp"

using namespace bmexit;
using conformal::Complex;
using conformal::PowerSeries;
constexpr double kPi = std::numbers::pi;

namespace {

// quadrature of the polygon map derivative along a prevertex ray:
// |w(prevertex)| = int_0^1 (1 - t^n)^{-muA} (1 + t^n)^{-muB} dt
double vertex_radius_by_quadrature(int n, double muA, double muB) {
  auto f = [&](double u) {
    // after u = t^n: (1/n) u^{1/n - 1} (1-u)^{-muA} (1+u)^{-muB}
    return std::pow(u, 1.0 / n - 1.0) * std::pow(1.0 - u, -muA) * std::pow(1.0 + u, -muB) / n;
  };
  const auto q =
      numerics::integrate_power_endpoints(f, 0.0, 1.0, 1.0 / n - 1.0, -muA, 1e-12, 1e-12);
  REQUIRE(q.converged);
  return q.value;
}

}  // namespace

TEST_CASE("power series primitives") {
  // (1+z)^{1/2} coefficients
  const auto s = conformal::binomial_series(0.5, 1.0, 1, 6);
  CHECK(s.coeffs[0].real() == doctest::Approx(1.0));
  CHECK(s.coeffs[1].real() == doctest::Approx(0.5));
  CHECK(s.coeffs[2].real() == doctest::Approx(-0.125));
  // multiply against its inverse power: (1+z)^{1/2} (1+z)^{-1/2} = 1
  const auto inv = conformal::binomial_series(-0.5, 1.0, 1, 6);
  const auto prod = conformal::multiply(s, inv, 6);
  CHECK(prod.coeffs[0].real() == doctest::Approx(1.0));
  for (int k = 1; k <= 6; ++k) CHECK(std::abs(prod.coeffs[k]) < 1e-15);
  // evaluate = Horner
  CHECK(std::abs(s.evaluate(0.3) - std::sqrt(1.3)) < 1e-4);  // truncation-limited
}

TEST_CASE("exit-time functional on the identity and dilated discs") {
  PowerSeries identity(std::vector<Complex>{0.0, 1.0});
  const auto e = conformal::exit_time_from_coefficients(identity, 1e-9);
  CHECK(e.value == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(e.ok());

  PowerSeries dilated(std::vector<Complex>{0.0, 2.0});
  CHECK(conformal::exit_time_from_coefficients(dilated, 1e-9).value == doctest::Approx(2.0));
}

TEST_CASE("exit-time functional flags growing coefficients") {
  // coefficients a_n = n produce a non-summable sequence
  std::vector<Complex> koebe(600);
  for (int n = 0; n < 600; ++n) koebe[n] = static_cast<double>(n);
  const auto e = conformal::exit_time_from_coefficients(PowerSeries(std::move(koebe)), 1e-9);
  CHECK(e.status == EstimateStatus::divergence_suspected);
}

TEST_CASE("wedge coefficients by convolution") {
  // p = q = 1: (1+z)/(1-z) = 1 + 2z + 2z^2 + ...
  const auto g = conformal::wedge_coefficients(1.0, 1.0, 8);
  CHECK(g.coeffs[0].real() == doctest::Approx(1.0));
  for (int m = 1; m <= 8; ++m) CHECK(g.coeffs[m].real() == doctest::Approx(2.0));
  // first coefficient is p + q
  const auto g2 = conformal::wedge_coefficients(0.3, 0.45, 4);
  CHECK(g2.coeffs[1].real() == doctest::Approx(0.75).epsilon(1e-14));
  // p = q = 1/4: a_1 = 1/2 and the first sum term is a_1^2/2 = 1/8;
  // cross-checked against the gamma/terminating-series route
  const auto g3 = conformal::wedge_coefficients(0.25, 0.25, 4);
  CHECK(g3.coeffs[1].real() == doctest::Approx(0.5).epsilon(1e-14));
  const double b = specfun::beta(1.0, 0.25);
  const double f = specfun::pfq_real({-1.0, -0.25}, {-0.25}, -1.0);
  CHECK(0.5 * f * f / (b * b) == doctest::Approx(0.125).epsilon(1e-13));
  CHECK(0.5 * std::norm(g3.coeffs[1]) == doctest::Approx(0.125).epsilon(1e-13));
}

TEST_CASE("wedge coefficients match the printed closed form when q = p") {
  // a_m = 2F1(-m, -p; 1 - m - p; -1) / (m B(m, p)) for m >= 1
  const double p = 0.3;
  const auto g = conformal::wedge_coefficients(p, p, 24);
  for (int m = 1; m <= 24; ++m) {
    const double f = specfun::pfq_real({-double(m), -p}, {1.0 - m - p}, -1.0);
    const double closed = f / (m * specfun::beta(static_cast<double>(m), p));
    CHECK(g.coeffs[m].real() == doctest::Approx(closed).epsilon(1e-11));
  }
}

TEST_CASE("wedge exit times against the secant closed form") {
  const auto q = conformal::wedge_exit_time(0.25, 1e-8);
  CHECK(q.ok());
  CHECK(q.value == doctest::Approx((std::sqrt(2.0) - 1.0) / 2.0).epsilon(1e-9));

  // sec(2 pi / 5) - 1 = sqrt(5) exactly
  const auto q25 = conformal::wedge_exit_time(0.4, 1e-8);
  CHECK(q25.value == doctest::Approx(std::sqrt(5.0) / 2.0).epsilon(1e-8));

  for (double p : {0.1, 0.25, 0.4}) {
    const auto e = conformal::wedge_exit_time(p, 1e-8);
    const double target = 0.5 * (1.0 / std::cos(kPi * p) - 1.0);
    CHECK(e.value == doctest::Approx(target).epsilon(1e-6));
  }
}

TEST_CASE("wedge exit time reports divergence at and beyond the critical angle") {
  CHECK(conformal::wedge_exit_time(0.55).status == EstimateStatus::divergence_suspected);
  CHECK(conformal::wedge_exit_time(0.5).status == EstimateStatus::divergence_suspected);
  CHECK(std::isinf(conformal::wedge_exit_time(0.75).value));
}

TEST_CASE("half-disc coefficients and exit time") {
  const auto hd = conformal::halfdisc_coefficients(4096);
  CHECK(hd.coeffs[0].real() == doctest::Approx(0.0));
  CHECK(hd.coeffs[0].imag() == doctest::Approx(std::sqrt(2.0) - 1.0).epsilon(1e-14));

  const auto e = conformal::exit_time_from_coefficients(hd, 1e-6);
  CHECK(e.ok());
  CHECK(e.value == doctest::Approx(0.191807).epsilon(1e-5));
  // equals 2 (sqrt(2) - 1 - 1/pi)
  CHECK(e.value == doctest::Approx(2.0 * (std::sqrt(2.0) - 1.0 - 1.0 / kPi)).epsilon(1e-6));
}

TEST_CASE("half-disc squared coefficients match the binomial inner sums") {
  // |a_m|^2 = 4 [1 - (1/sqrt(2)) sum_{l <= floor(m/2)} C(1/2, l)]^2 for m >= 1
  const auto hd = conformal::halfdisc_coefficients(128);
  double partial = 0.0;
  double coeff = 1.0;  // C(1/2, l)
  std::vector<double> inner(64);
  for (int l = 0; l < 64; ++l) {
    partial += coeff;
    inner[l] = partial;
    coeff *= (0.5 - l) / (l + 1.0);
  }
  for (int m = 1; m <= 50; ++m) {
    const double bracket = 1.0 - inner[m / 2] / std::sqrt(2.0);
    CHECK(std::norm(hd.coeffs[m]) == doctest::Approx(4.0 * bracket * bracket).epsilon(1e-12));
  }
}

TEST_CASE("alternative square-root branch maps outside the upper half disc") {
  // i (1 + z + sqrt(2) sqrt(1+z^2)) / (z - 1) sends disc points outside the
  // upper half disc (orientation check for the branch selection)
  const domains::DomainSpec hd{domains::HalfDisc(1.0)};
  for (int k = 0; k < 40; ++k) {
    const Complex z = std::polar(0.1 + 0.02 * k, 0.37 * k);
    const Complex root = std::sqrt(1.0 + z * z);
    const Complex w = Complex(0, 1) * (1.0 + z + std::sqrt(2.0) * root) / (z - 1.0);
    CHECK_FALSE(domains::contains(hd, domains::Point2::from_complex(w)));
  }
}

TEST_CASE("ngram coefficients structure") {
  const auto w = conformal::ngram_coefficients(5, 0.3, 0.1, 64);
  CHECK(w.coeffs[1].real() == doctest::Approx(1.0));
  for (int k = 0; k <= 64; ++k) {
    if (k % 5 != 1) CHECK(std::abs(w.coeffs[k]) == 0.0);
  }
  // printed double-binomial form as oracle for the first few orders
  for (int m = 1; m <= 10; ++m) {
    double sum = 0.0;
    for (int j = 0; j <= m; ++j) {
      sum += (j % 2 == 0 ? 1.0 : -1.0) * specfun::binomial(-0.1, j) *
             specfun::binomial(-0.3, m - j);
    }
    CHECK(w.coeffs[5 * m + 1].real() ==
          doctest::Approx(sum / (5.0 * m + 1.0)).epsilon(1e-12));
  }
  CHECK_THROWS_AS(conformal::ngram_coefficients(5, 0.25, 0.25, 64), std::invalid_argument);
}

TEST_CASE("ngram exit time: direct sum form and finiteness") {
  const auto e = conformal::ngram_exit_time(5, 0.3, 0.1, 1e-8);
  CHECK(e.ok());
  CHECK(e.value > 0.0);
  CHECK(std::isfinite(e.value));
  // direct finite-inner-sum form over the same truncation range
  const auto w = conformal::ngram_coefficients(5, 0.3, 0.1, 4096);
  numerics::KahanSum direct;
  for (int k = 1; k <= 4096; ++k) {
    if (k % 5 != 1) continue;
    const int m = (k - 1) / 5;
    double sum = 0.0;
    for (int j = 0; j <= m; ++j) {
      sum += (j % 2 == 0 ? 1.0 : -1.0) * specfun::binomial(-0.1, j) *
             specfun::binomial(-0.3, m - j);
    }
    direct.add(0.5 * (sum / k) * (sum / k));
  }
  const auto truncated = conformal::exit_time_from_coefficients(w, 1.0);
  CHECK(truncated.value == doctest::Approx(direct.value()).epsilon(1e-12));
}

TEST_CASE("degenerate 2-gram is the inscribed square up to dilation") {
  const auto e = conformal::ngram_exit_time(2, 0.5, 0.5, 1e-9);
  const auto radii = conformal::ngram_radii(2, 0.5, 0.5);
  CHECK(radii.circumradius == doctest::Approx(radii.inradius).epsilon(1e-12));
  const auto m4 = conformal::mgon_exit_time(4, 1e-9);
  const double scale = radii.circumradius * radii.circumradius;
  CHECK(e.value == doctest::Approx(scale * m4.value).epsilon(1e-8));
}

TEST_CASE("ngram radii: closed forms, integral route, and quadrature agree") {
  const auto radii = conformal::ngram_radii(5, 0.3, 0.1);
  CHECK(radii.circumradius >= radii.inradius);
  const auto [r_even, r_odd] = conformal::ngram_vertex_radii(5, 0.3, 0.1);
  CHECK(r_even == doctest::Approx(vertex_radius_by_quadrature(5, 0.1, 0.3)).epsilon(1e-8));
  CHECK(r_odd == doctest::Approx(vertex_radius_by_quadrature(5, 0.3, 0.1)).epsilon(1e-8));
}

TEST_CASE("ngram inradius clears the schlicht lower bound on a family sample") {
  struct Member {
    int n;
    double mu1, mu2;
  };
  const Member family[] = {{3, 0.5, 2.0 / 3 - 0.5},
                           {4, 0.3, 0.2},
                           {5, 0.3, 0.1},
                           {6, 0.2, 1.0 / 3 - 0.2},
                           {8, 0.15, 0.1}};
  for (const auto& m : family) {
    const auto radii = conformal::ngram_radii(m.n, m.mu1, m.mu2);
    CHECK(radii.inradius > 0.570884);
    CHECK(radii.circumradius >= radii.inradius);
  }
  // symmetric parameters collapse the two radii
  const auto sym = conformal::ngram_radii(4, 0.25, 0.25);
  CHECK(sym.circumradius == doctest::Approx(sym.inradius).epsilon(1e-13));
}

TEST_CASE("m-gon exit times") {
  CHECK(conformal::mgon_exit_time(3).value == doctest::Approx(1.0 / 6.0).epsilon(1e-9));
  CHECK(conformal::mgon_exit_time(64).value == doctest::Approx(0.5).epsilon(2e-3));
  // monotone approach to the disc value from below
  double prev = 0.0;
  for (int m : {3, 4, 6, 8, 12, 16, 24, 32, 64}) {
    const double v = conformal::mgon_exit_time(m).value;
    CHECK(v > prev);
    CHECK(v < 0.5);
    prev = v;
  }
  CHECK(std::abs(conformal::mgon_exit_time(64).value - 0.5) < 1e-3);
  CHECK_THROWS_AS(conformal::mgon_exit_time(2), std::invalid_argument);
}

TEST_CASE("lens coefficients and exit time") {
  const auto lc = conformal::lens_coefficients(65536);
  CHECK(lc.coeffs[1].real() == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(lc.coeffs[3].real() == doctest::Approx(-0.125).epsilon(1e-15));
  for (int k = 0; k <= 20; k += 2) CHECK(std::abs(lc.coeffs[k]) == 0.0);
  const auto e = conformal::exit_time_from_coefficients(lc, 1e-7);
  CHECK(e.ok());
  CHECK(e.value == doctest::Approx(2.0 / kPi - 0.5).epsilon(1e-8));
}

TEST_CASE("lens forward map") {
  CHECK(std::abs(conformal::lens_forward_map(Complex(0, 0))) == 0.0);
  for (double t : {0.1, 0.4, 0.8, 0.99}) {
    const Complex w = conformal::lens_forward_map(Complex(0, t));
    CHECK(std::abs(w) == doctest::Approx(2 * t / (1 + t * t)).epsilon(1e-14));
    CHECK(std::abs(w) < 1.0);
  }
  // boundary arcs land on the unit circle
  for (int k = 1; k < 100; ++k) {
    const double th = kPi * (0.75 + 0.5 * k / 100.0);  // arc through z = 1 - sqrt(2)
    const Complex z = 1.0 + std::sqrt(2.0) * std::exp(Complex(0, th));
    CHECK(std::abs(conformal::lens_forward_map(z)) == doctest::Approx(1.0).epsilon(1e-12));
    const Complex z2 = -1.0 + std::sqrt(2.0) * std::exp(Complex(0, th - kPi));
    CHECK(std::abs(conformal::lens_forward_map(z2)) == doctest::Approx(1.0).epsilon(1e-12));
  }
  CHECK_THROWS_AS(conformal::lens_forward_map(Complex(1, 0)), std::domain_error);
  CHECK_THROWS_AS(conformal::lens_forward_map(Complex(-1, 0)), std::domain_error);
}

TEST_CASE("lens inverse composes with the forward map") {
  const auto lc = conformal::lens_coefficients(512);
  std::uint64_t state = 7;
  auto next = [&]() {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<double>(state >> 11) * 0x1.0p-53;
  };
  for (int i = 0; i < 50; ++i) {
    const Complex w = std::polar(0.7 * std::sqrt(next()), 2.0 * kPi * next());
    const Complex z = lc.evaluate(w);
    CHECK(std::abs(conformal::lens_forward_map(z) - w) < 1e-10);
  }
}
