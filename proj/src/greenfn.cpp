#include "bmexit/greenfn.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "bmexit/specfun.hpp"

namespace bmexit {
namespace greenfn {

namespace {

constexpr double kPi = std::numbers::pi;
using Complex = std::complex<double>;

double sqr(double x) { return x * x; }

}  // namespace

double halfdisc_green(const PolarPoint& z, const PolarPoint& zeta, double r0) {
  if (!(r0 > 0.0)) throw std::invalid_argument("halfdisc_green: r0 > 0 required");
  const double r = z.r, th = z.theta, rho = zeta.r, ph = zeta.theta;
  if (r > r0 * (1.0 + 1e-12) || rho > r0 * (1.0 + 1e-12)) {
    throw std::domain_error("halfdisc_green: point outside the half disc");
  }
  // r^2 + rho^2 - 2 r rho cos(d) written as (r - rho)^2 + 4 r rho sin^2(d/2),
  // which stays accurate near the diagonal
  const double sm = std::sin(0.5 * (th - ph));
  const double sp = std::sin(0.5 * (th + ph));
  const double n1 = sqr(r - rho) + 4.0 * r * rho * sm * sm;
  const double n2 = sqr(r - rho) + 4.0 * r * rho * sp * sp;
  if (n1 <= 0.0) throw std::domain_error("halfdisc_green: coincident points");
  const double image = r * rho / r0;
  const double d1 = sqr(r0 - image) + 4.0 * r * rho * sm * sm;
  const double d2 = sqr(r0 - image) + 4.0 * r * rho * sp * sp;
  return (std::log(d1 / n1) - std::log(d2 / n2)) / (4.0 * kPi);
}

double log_kernel_expansion(double r, double rho, double theta_minus_phi, int K) {
  if (r == rho) throw std::domain_error("log_kernel_expansion: requires r != rho");
  const double big = std::max(std::abs(r), std::abs(rho));
  const double x = std::min(std::abs(r), std::abs(rho)) / big;
  double sum = 2.0 * std::log(big);
  double xk = 1.0;
  for (int k = 1; k <= K; ++k) {
    xk *= x;
    sum -= 2.0 / k * xk * std::cos(k * theta_minus_phi);
  }
  return sum;
}

double angular_dilog_integral(double r, double rho, double theta, AngleSign sign) {
  if (!(r > rho) || rho < 0.0) {
    throw std::domain_error("angular_dilog_integral: requires r > rho >= 0");
  }
  if (rho == 0.0) return 2.0 * kPi * std::log(r);
  const double x = rho / r;
  const Complex eit = std::exp(Complex(0.0, theta));
  const Complex combo = specfun::dilog(-std::conj(eit) * x) - specfun::dilog(std::conj(eit) * x) -
                        specfun::dilog(-eit * x) + specfun::dilog(eit * x);
  // combo = 4 i sum_{k odd} x^k sin(k theta) / k^2 is purely imaginary;
  // i * combo is the real correction to 2 pi log r.
  const double correction = (Complex(0.0, 1.0) * combo).real();
  return 2.0 * kPi * std::log(r) + (sign == AngleSign::minus ? correction : -correction);
}

// ---------------------------------------------------------------------------
// Radial antiderivatives
// ---------------------------------------------------------------------------

std::complex<double> radial_dilog_antiderivative_inner(Complex c, double rho) {
  if (rho == 0.0 || c == Complex(0.0, 0.0)) return 0.0;
  const Complex crho = c * rho;
  if (std::abs(crho) > 1.0 + 1e-9) {
    throw std::domain_error("radial antiderivative: |c rho| > 1");
  }
  const Complex li = specfun::dilog(crho);
  Complex log_term;
  if (std::abs(crho - 1.0) < 1e-14) {
    log_term = 0.0;  // (c^2 rho^2 - 1) log(1 - c rho) -> 0
  } else {
    log_term = 2.0 * (crho * crho - 1.0) * std::log(1.0 - crho);
  }
  return (4.0 * crho * crho * li + log_term - crho * (2.0 + crho)) / (8.0 * c * c);
}

std::complex<double> radial_dilog_antiderivative_outer(Complex w, double rho) {
  if (w == Complex(0.0, 0.0)) return 0.0;
  const Complex ratio = w / rho;
  if (std::abs(ratio) > 1.0 + 1e-9) {
    throw std::domain_error("radial antiderivative: |w| > rho");
  }
  const Complex li = specfun::dilog(ratio);
  return (2.0 * rho * rho * li + w * (rho + w * std::log(rho - w)) -
          rho * rho * std::log(1.0 - ratio)) /
         4.0;
}

double radial_dilog_integral_inner(double c, double rho) {
  if (c * rho > 1.0 + 1e-12 || c * rho < -1.0 - 1e-12) {
    throw std::domain_error("radial_dilog_integral_inner: requires |c rho| <= 1");
  }
  return radial_dilog_antiderivative_inner(Complex(c, 0.0), rho).real();
}

double radial_dilog_integral_outer(double w, double rho) {
  if (!(rho > w) || !(w > 0.0)) {
    throw std::domain_error("radial_dilog_integral_outer: requires rho > w > 0");
  }
  return radial_dilog_antiderivative_outer(Complex(w, 0.0), rho).real();
}

// ---------------------------------------------------------------------------
// Exit times by the Green-integral route
// ---------------------------------------------------------------------------

double disc_exit_time_via_green(double r, double r0) {
  if (!(r < r0) || r < 0.0) throw std::domain_error("disc_exit_time_via_green: requires r < r0");
  // angular integrals of the two log kernels over a full period:
  // 4 pi log max(r, rho) for the direct kernel, 4 pi log r0 for the image one
  const double r2log = (r == 0.0) ? 0.0 : 0.5 * r * r * std::log(r);
  const double direct = r2log + (0.5 * r0 * r0 * std::log(r0) - 0.25 * r0 * r0) -
                        (r2log - 0.25 * r * r);
  const double image = 0.5 * r0 * r0 * std::log(r0);
  return 2.0 * (image - direct);
}

ExitTimeEstimate halfdisc_exit_time(const PolarPoint& pt, double r0, double resolution) {
  ExitTimeEstimate out;
  out.method = "green";
  const double r = pt.r, theta = pt.theta;
  if (!(r0 > 0.0) || !(r > 0.0) || !(r < r0) || !(theta > 0.0) || !(theta < kPi)) {
    throw std::domain_error("halfdisc_exit_time: point not interior to the half disc");
  }
  const Complex eit = std::exp(Complex(0.0, theta));

  // odd-harmonic sine kernel integrated in rho:
  //   T(x rho, theta) = Im[(Li2(x rho e^{i theta}) - Li2(-x rho e^{i theta})) / 2]
  auto inner_pair = [&](Complex c, double upper) {
    return 0.5 * (radial_dilog_antiderivative_inner(c, upper) -
                  radial_dilog_antiderivative_inner(-c, upper));
  };
  auto outer_pair = [&](Complex w, double upper, double lower) {
    return 0.5 * ((radial_dilog_antiderivative_outer(w, upper) -
                   radial_dilog_antiderivative_outer(w, lower)) -
                  (radial_dilog_antiderivative_outer(-w, upper) -
                   radial_dilog_antiderivative_outer(-w, lower)));
  };

  // direct kernel: min/max structure splits the radial integral at rho = r
  const Complex n_inside = inner_pair(eit / r, r);                 // rho in (0, r)
  const Complex n_outside = outer_pair(r * eit, r0, r);            // rho in (r, r0)
  // image kernel: argument (r rho / r0^2) e^{i theta}, max is always r0
  const Complex d_part = inner_pair(eit * r / (r0 * r0), r0);

  const double value = 4.0 / kPi * (n_inside + n_outside - d_part).imag();
  out.value = value;
  out.count = 0;
  out.error = std::max(resolution, 1e-12 * (1.0 + std::abs(value)));
  return out;
}

}  // namespace greenfn
}  // namespace bmexit
