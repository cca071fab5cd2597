#ifndef BMEXIT_GREENFN_HPP_
#define BMEXIT_GREENFN_HPP_

#include <complex>

#include "bmexit/estimate.hpp"

namespace bmexit {
namespace greenfn {

struct PolarPoint {
  double r = 0.0;
  double theta = 0.0;
};

enum class AngleSign { minus, plus };  // cos(theta - phi) vs cos(theta + phi)

// Green function of the upper half disc of radius r0 with zero boundary data,
// normalized positive in the interior, built as a difference of disc kernels
// (the image point reflected through the real axis).  The exit-time field is
// u = 2 * integral of G over the half disc.  Symmetric in its arguments;
// coincident points are rejected.
double halfdisc_green(const PolarPoint& z, const PolarPoint& zeta, double r0);

// Partial sum (K terms) of the cosine expansion of
// log(r^2 + rho^2 - 2 r rho cos(theta -+ phi)); depends on r, rho only
// through min/max, so the expansion is r <-> rho symmetric.  r = rho rejected.
double log_kernel_expansion(double r, double rho, double theta_minus_phi, int K);

// Integral over phi in (0, pi) of log(r^2 + rho^2 - 2 r rho cos(theta -+ phi))
// for r > rho >= 0, evaluated through four dilogarithms whose imaginary parts
// cancel.  The caller swaps arguments when r < rho (the kernel is symmetric).
double angular_dilog_integral(double r, double rho, double theta, AngleSign sign);

// Antiderivative of rho * Li2(c rho) in rho, normalized to vanish at rho = 0;
// |c rho| <= 1 with the c rho -> 1 limit taken continuously.
double radial_dilog_integral_inner(double c, double rho);

// Antiderivative of rho * Li2(w / rho) in rho for 0 < w <= rho.
// The additive constant is fixed so the value tends to 0 as w -> 0 at fixed
// rho; definite integrals are differences and do not depend on it.
double radial_dilog_integral_outer(double w, double rho);

// Expected exit time from an interior point of the upper half disc of radius
// r0, by integrating the Green function: the angular integrals collapse to
// dilogarithms and the radial integrals to the two antiderivatives above, in
// complex form.  resolution is carried into the error field (the evaluation
// itself is closed-form accurate).
ExitTimeEstimate halfdisc_exit_time(const PolarPoint& pt, double r0, double resolution = 1e-10);

// Disc exit time reproduced through the Green-integral route: the angular
// integral of each log kernel reduces to 2 pi log max(...) and the radial
// integrals are elementary.  Agrees with (r0^2 - r^2)/2 to 1e-10.
double disc_exit_time_via_green(double r, double r0);

// Complex-coefficient forms of the radial antiderivatives, used by
// halfdisc_exit_time and exposed for the verification suite.
std::complex<double> radial_dilog_antiderivative_inner(std::complex<double> c, double rho);
std::complex<double> radial_dilog_antiderivative_outer(std::complex<double> w, double rho);

}  // namespace greenfn
}  // namespace bmexit

#endif  // BMEXIT_GREENFN_HPP_
