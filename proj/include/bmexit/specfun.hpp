#ifndef BMEXIT_SPECFUN_HPP_
#define BMEXIT_SPECFUN_HPP_

#include <complex>
#include <vector>

namespace bmexit {
namespace specfun {

using Complex = std::complex<double>;

// ---------------------------------------------------------------------------
// Gamma family.
//
// gamma(x) and log_gamma(x) use a Lanczos rational approximation (g = 7,
// nine coefficients, ~1e-14 relative accuracy on the tested range) with the
// reflection formula for x < 1/2.  Arguments at the poles (0, -1, -2, ...)
// throw std::domain_error.
// ---------------------------------------------------------------------------
double gamma(double x);
double log_gamma(double x);                 // x > 0
double log_gamma_signed(double x, int* sign);  // any non-pole x; |Gamma| in log form

// Beta function B(x, y) = Gamma(x) Gamma(y) / Gamma(x + y), evaluated through
// log-gamma so large integer arguments do not overflow.
double beta(double x, double y);

// Rising factorial (a)_k = a (a+1) ... (a+k-1); (a)_0 = 1.
double pochhammer(double a, int k);

// Generalized binomial coefficient C(a, k) for real a, integer k >= 0.
double binomial(double a, int k);

// ---------------------------------------------------------------------------
// Generalized hypergeometric series pFq.
// ---------------------------------------------------------------------------
struct HyperParams {
  std::vector<double> upper;  // a_1 .. a_p
  std::vector<double> lower;  // b_1 .. b_q
  Complex argument = 0.0;
};

struct PfqResult {
  Complex value = 0.0;
  double tail_bound = 0.0;   // estimated truncation error
  long long terms = 0;
  bool converged = false;
};

// Partial summation with the term-ratio recurrence.  Stops when |term| stays
// below tol * |sum| for three consecutive terms, when the series terminates
// (a nonpositive-integer upper parameter), or at max_terms.
//
// At the unit-circle arguments x = +1 and x = -1 plain truncation is far too
// slow for the slowly decaying parameter sets used here, so the partial sums
// are finished off analytically: a fitted algebraic tail at x = +1 and an
// Euler-transformed tail at x = -1.
//
// Throws std::invalid_argument when a lower parameter is a nonpositive
// integer that the termination rule does not excuse, or when p > q + 1 for a
// non-terminating series.
PfqResult pfq(const HyperParams& params, double tol = 1e-13, long long max_terms = 1000000);

// Convenience wrapper for real parameter lists and a real argument; throws
// std::runtime_error if the series did not converge.
double pfq_real(std::initializer_list<double> upper, std::initializer_list<double> lower,
                double x, double tol = 1e-13, long long max_terms = 1000000);

// ---------------------------------------------------------------------------
// Two-variable hypergeometric function F1 (Appell).
// ---------------------------------------------------------------------------
struct AppellParams {
  double a = 0.0;
  double b1 = 0.0;
  double b2 = 0.0;
  double c = 0.0;
  double x = 0.0;
  double y = 0.0;
};

// Double series, summed as an outer series in x whose inner sums run through
// pfq.  Requires |x| < 1 and |y| <= 1 with convergence.
double appell_f1_series(const AppellParams& p, double tol = 1e-12);

// Euler-type integral representation, with power substitutions absorbing the
// endpoint behavior u^{a-1} (and the right endpoint when c - a < 1 or an
// argument sits at 1).  Requires c > a > 0.
double appell_f1_integral(const AppellParams& p, double tol = 1e-12);

// Evaluates both routes and checks |series - integral| <= 10 * tol before
// returning the series value.  Throws std::runtime_error on disagreement.
double appell_f1(const AppellParams& p, double tol = 1e-10);

// ---------------------------------------------------------------------------
// Dilogarithm Li_2(z) = sum z^n / n^2 on the closed unit disc, principal
// branch.  Direct series for small |z|; the reflection through 1 - z near
// z = 1; otherwise the Bernoulli series in w = -log(1 - z).  Absolute error
// well under 1e-12 on |z| <= 1.  Arguments outside the disc throw.
// ---------------------------------------------------------------------------
Complex dilog(Complex z);

}  // namespace specfun
}  // namespace bmexit

#endif  // BMEXIT_SPECFUN_HPP_
