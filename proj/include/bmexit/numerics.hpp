#ifndef BMEXIT_NUMERICS_HPP_
#define BMEXIT_NUMERICS_HPP_

#include <complex>
#include <functional>
#include <vector>

namespace bmexit {
namespace numerics {

// Compensated (Kahan) accumulator for long series.
class KahanSum {
 public:
  void add(double x) {
    const double y = x - carry_;
    const double t = sum_ + y;
    carry_ = (t - sum_) - y;
    sum_ = t;
  }
  double value() const { return sum_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

// Sums a vector in a fixed balanced-tree order.  The result depends only on
// the element order, not on how the elements were produced, so parallel
// producers stay bit-reproducible.
double pairwise_sum(const std::vector<double>& xs);

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
  int evaluations = 0;
  bool converged = false;
};

// Adaptive Gauss-Kronrod (15-point) on a finite interval.  The integrand must
// be finite on [a, b]; integrable endpoint singularities should go through
// integrate_power_endpoints instead.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double abs_tol = 1e-12, double rel_tol = 1e-12,
                           int max_intervals = 4000);

// Integral of f over [a, b] where f ~ (x-a)^alpha near a and ~ (b-x)^beta
// near b with alpha, beta > -1.  Splits at the midpoint and applies power
// substitutions that flatten each endpoint before the adaptive rule runs.
QuadratureResult integrate_power_endpoints(const std::function<double(double)>& f,
                                           double a, double b, double alpha, double beta,
                                           double abs_tol = 1e-12, double rel_tol = 1e-12);

struct TailFit {
  double value = 0.0;       // extrapolated limit
  double error = 0.0;       // difference between the two highest-order fits
  bool ok = false;
};

// Limit of a series whose terms decay like C * k^{-s} (s > 1), from partial
// sums S(K_i) recorded at increasing checkpoints K_i.  Fits
//   S(K) = S_inf - K^{1-s} (e0 + e1/K + e2/K^2 + ...)
// with as many correction orders as checkpoints allow.
TailFit algebraic_tail_fit(const std::vector<double>& partial_sums,
                           const std::vector<double>& checkpoints, double s);

// Same idea with an explicit tail basis: S(K) = S_inf - sum_j e_j K^{-exps[j]}.
// Use when the terms mix several algebraic families.
TailFit algebraic_tail_fit_basis(const std::vector<double>& partial_sums,
                                 const std::vector<double>& checkpoints,
                                 std::vector<double> tail_exponents);

// Tail sum_{k>=0} c[k] q^k for smooth c and |q| <= 1, q != 1, via the Euler
// transform sum_m (forward difference)^m c[0] * q^m / (1-q)^{m+1}.
// Truncates at the smallest term (asymptotic-series rule).
std::complex<double> euler_tail(const std::vector<double>& c, std::complex<double> q);

// In-place Gaussian elimination with partial pivoting for small dense systems.
void solve_linear(std::vector<std::vector<double>>& a, std::vector<double>& b);

}  // namespace numerics
}  // namespace bmexit

#endif  // BMEXIT_NUMERICS_HPP_
