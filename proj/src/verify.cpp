#include "bmexit/verify.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>

#include "bmexit/closedform.hpp"
#include "bmexit/conformal.hpp"
#include "bmexit/greenfn.hpp"
#include "bmexit/numerics.hpp"
#include "bmexit/specfun.hpp"

namespace bmexit {
namespace verify {

namespace {

constexpr double kPi = std::numbers::pi;
using Complex = std::complex<double>;

struct Suite {
  std::vector<CheckResult> results;

  void check(const std::string& name, double residual, double tolerance,
             const std::string& note = "") {
    CheckResult r;
    r.name = name;
    r.residual = std::abs(residual);
    r.tolerance = tolerance;
    r.pass = r.residual <= tolerance;
    r.note = note;
    results.push_back(r);
  }
};

std::string fmt(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

// sum_{k>=1} f(k) with terms ~ C k^{-2}: partial sums at doubling checkpoints
// finished by the algebraic tail fit.
double quadratic_decay_sum(const std::function<double(long long)>& f) {
  numerics::KahanSum s;
  std::vector<double> partials, checkpoints;
  long long next = 512;
  const long long total = 65536;
  for (long long k = 1; k <= total; ++k) {
    s.add(f(k));
    if (k == next) {
      partials.push_back(s.value());
      checkpoints.push_back(static_cast<double>(k));
      next *= 2;
    }
  }
  const auto fit = numerics::algebraic_tail_fit(partials, checkpoints, 2.0);
  return fit.ok ? fit.value : s.value();
}

// sum_{k>=0} (-1)^k c(k) for smooth positive c: head plus Euler tail.
double alternating_sum(const std::function<double(long long)>& c) {
  double acc = 0.0;
  const int head = 64;
  for (int k = 0; k < head; ++k) acc += ((k % 2 == 0) ? 1.0 : -1.0) * c(k);
  std::vector<double> w(48);
  for (int j = 0; j < 48; ++j) w[j] = c(head + j);
  const double tail = numerics::euler_tail(w, Complex(-1.0, 0.0)).real();
  acc += ((head % 2 == 0) ? 1.0 : -1.0) * tail;
  return acc;
}

void wedge_checks(Suite& s) {
  for (double p : {0.1, 0.25, 0.4}) {
    const auto est = conformal::wedge_exit_time(p, 1e-8);
    const double target = 1.0 / std::cos(kPi * p) - 1.0;
    s.check("wedge series equals sec(pi p) - 1 at p=" + fmt(p),
            2.0 * est.value / target - 1.0, 1e-6);
  }
  const auto est = conformal::wedge_exit_time(0.25, 1e-8);
  s.check("wedge p=1/4 series sums to sqrt(2) - 1", 2.0 * est.value - (std::sqrt(2.0) - 1.0),
          1e-9);
}

void halfdisc_tail_sum_check(Suite& s) {
  // (1/2) sum_m (sum_{l > floor(m/2)} C(1/2, l))^2 = sqrt(2) - 1 - 1/pi,
  // written through the tail sums T_j = sqrt(2) - sum_{l<=j} C(1/2, l).
  const int jmax = 40000;
  double partial = 0.0;   // running sum of C(1/2, l) up to l = j
  double coeff = 1.0;     // C(1/2, j)
  numerics::KahanSum total;
  for (int j = 0; j <= jmax; ++j) {
    partial += coeff;
    const double tail = std::sqrt(2.0) - partial;
    // m = 1 uses T_0 once; every j >= 1 appears for two values of m
    total.add((j == 0 ? 1.0 : 2.0) * tail * tail);
    coeff *= (0.5 - j) / (j + 1.0);
  }
  s.check("half-disc binomial tail-sum identity",
          0.5 * total.value() - (std::sqrt(2.0) - 1.0 - 1.0 / kPi), 1e-8);
}

void lens_checks(Suite& s) {
  // generating function at z = 1/2
  const double z = 0.5;
  double lhs = 0.0;
  double coeff = 0.5;  // C(1/2, 1)
  for (int l = 1; l < 60; ++l) {
    lhs += coeff * coeff * std::pow(z, 2 * l - 1);
    coeff *= (0.5 - l) / (l + 1.0);
  }
  const double rhs = (-1.0 + specfun::pfq_real({-0.5, -0.5}, {1.0}, z * z)) / z;
  s.check("lens coefficient generating function at z=1/2", lhs - rhs, 1e-10);

  const auto est = conformal::exit_time_from_coefficients(conformal::lens_coefficients(65536), 1e-7);
  s.check("lens exit time equals 2/pi - 1/2", est.value - (2.0 / kPi - 0.5), 1e-8,
          "known issue: the constant is also printed as 1/pi - 1/2; the series "
          "derivation gives 2/pi - 1/2, which is asserted here");
}

void partial_fraction_checks(Suite& s) {
  // tan(pi x / 2) = (4 x / pi) sum_k 1/((2k-1)^2 - x^2); odd integer x are
  // poles of both sides, so the sampled points avoid them.
  for (double x : {0.3, 1.5, 2.5}) {
    const double sum = quadratic_decay_sum(
        [&](long long k) { return 1.0 / ((2.0 * k - 1.0) * (2.0 * k - 1.0) - x * x); });
    const double lhs = std::tan(kPi * x / 2.0);
    s.check("partial fractions for tan at x=" + fmt(x), 4.0 * x / kPi * sum - lhs, 1e-10,
            "evaluation points avoid the odd-integer poles");
  }
  // cot(pi x) = 1/(pi x) + (2 x / pi) sum_k 1/(x^2 - k^2); integer x are poles.
  for (double x : {0.3, 1.5, 2.5}) {
    const double sum =
        quadratic_decay_sum([&](long long k) { return 1.0 / (x * x - double(k) * k); });
    const double lhs = std::cos(kPi * x) / std::sin(kPi * x);
    s.check("partial fractions for cot at x=" + fmt(x),
            1.0 / (kPi * x) + 2.0 * x / kPi * sum - lhs, 1e-10,
            "series equals cot(pi x); evaluation points avoid the integer poles");
  }
  // sech(pi x / 2) = (4 / pi) sum_k (-1)^k (2k+1)/((2k+1)^2 + x^2)
  for (double x : {0.3, 1.0, 2.5}) {
    const double sum = alternating_sum([&](long long k) {
      const double v = 2.0 * k + 1.0;
      return v / (v * v + x * x);
    });
    const double lhs = 1.0 / std::cosh(kPi * x / 2.0);
    s.check("partial fractions for sech at x=" + fmt(x), 4.0 / kPi * sum - lhs, 1e-10,
            "series equals sech(pi x / 2)");
  }
  // alternating odd sum equals (pi / 8 x^2) [-2 + cot(pi(ix+1)/4) + tan(pi(ix+1)/4)]
  for (double x : {0.5, 1.0, 2.0}) {
    const double lhs = -alternating_sum([&](long long k) {
      const double m = 2.0 * (k + 1.0) - 1.0;  // odd numbers from m = 1
      return 1.0 / (m * (m * m + x * x));
    });
    const Complex w = kPi * 0.25 * Complex(1.0, x);
    const Complex cot_tan = std::cos(w) / std::sin(w) + std::sin(w) / std::cos(w);
    const Complex rhs = kPi / (8.0 * x * x) * (-2.0 + cot_tan);
    s.check("alternating odd sum via cot + tan at x=" + fmt(x), lhs - rhs.real(), 1e-10);
  }
}

void log_integral_checks(Suite& s) {
  struct Triple {
    double a, b;
    int n;
  };
  for (const Triple& t : {Triple{2, 1, 1}, Triple{1, 3, 2}, Triple{0.5, 0.2, 1}}) {
    auto f = [&](double x) {
      return std::log(t.a * t.a - 2.0 * t.a * t.b * std::cos(x) + t.b * t.b);
    };
    const auto q = numerics::integrate(f, 0.0, t.n * kPi, 1e-12, 1e-12);
    const double closed = 2.0 * kPi * t.n * std::log(std::max(std::abs(t.a), std::abs(t.b)));
    s.check("full-period log kernel integral (a=" + fmt(t.a) + ", b=" + fmt(t.b) +
                ", n=" + fmt(t.n) + ")",
            q.value - closed, 1e-10);
  }
}

void angular_dilog_checks(Suite& s) {
  double worst = 0.0;
  for (double r : {0.5, 1.0, 2.0}) {
    for (double ratio : {0.2, 0.5, 0.8}) {
      for (double theta : {0.3, 1.0, 2.2}) {
        const double rho = ratio * r;
        for (auto sign : {greenfn::AngleSign::minus, greenfn::AngleSign::plus}) {
          const double v = greenfn::angular_dilog_integral(r, rho, theta, sign);
          auto f = [&](double phi) {
            const double c = (sign == greenfn::AngleSign::minus) ? std::cos(theta - phi)
                                                                 : std::cos(theta + phi);
            return std::log(r * r + rho * rho - 2.0 * r * rho * c);
          };
          const auto q = numerics::integrate(f, 0.0, kPi, 1e-13, 1e-13);
          worst = std::max(worst, std::abs(v - q.value));
        }
      }
    }
  }
  s.check("half-period log integral via dilogarithms (3x3x3 grid, both signs)", worst, 1e-10);
}

void radial_dilog_checks(Suite& s) {
  {
    const double c = 0.8, rho = 0.5, h = 1e-5;
    const double fd = (greenfn::radial_dilog_integral_inner(c, rho + h) -
                       greenfn::radial_dilog_integral_inner(c, rho - h)) /
                      (2.0 * h);
    const double exact = rho * specfun::dilog(Complex(c * rho, 0.0)).real();
    s.check("radial dilog antiderivative (inner): derivative check", fd - exact, 1e-6);
    auto f = [](double t) { return t * specfun::dilog(Complex(t, 0.0)).real(); };
    const auto q = numerics::integrate(f, 0.0, 1.0, 1e-12, 1e-12);
    s.check("radial dilog antiderivative (inner): definite integral to the endpoint",
            greenfn::radial_dilog_integral_inner(1.0, 1.0) - q.value, 1e-9);
  }
  {
    const double w = 0.3, rho = 1.0, h = 1e-5;
    const double fd = (greenfn::radial_dilog_integral_outer(w, rho + h) -
                       greenfn::radial_dilog_integral_outer(w, rho - h)) /
                      (2.0 * h);
    const double exact = rho * specfun::dilog(Complex(w / rho, 0.0)).real();
    s.check("radial dilog antiderivative (outer): derivative check", fd - exact, 1e-6);
    auto f = [](double t) { return t * specfun::dilog(Complex(0.3 / t, 0.0)).real(); };
    const auto q = numerics::integrate(f, 1.0, 2.0, 1e-12, 1e-12);
    const double definite = greenfn::radial_dilog_integral_outer(0.3, 2.0) -
                            greenfn::radial_dilog_integral_outer(0.3, 1.0);
    s.check("radial dilog antiderivative (outer): definite integral", definite - q.value, 1e-9);
  }
}

void square_form_checks(Suite& s) {
  const double hyper = closedform::square_center_exit_time(closedform::SquareForm::hypergeometric);
  const double dsine = closedform::square_center_exit_time(closedform::SquareForm::double_sine);
  const double single = closedform::square_center_exit_time(closedform::SquareForm::single_series);
  s.check("square center: hypergeometric vs single series", hyper - single, 1e-6);
  s.check("square center: double sine vs single series", dsine - single, 1e-6);
  s.check("square center vs 4-gon series route", conformal::mgon_exit_time(4).value - single,
          1e-6);
}

void special_function_checks(Suite& s) {
  for (double p : {0.1, 0.2, 0.3, 0.4}) {
    const double lhs = specfun::pfq_real({p, p}, {1.0}, 1.0);
    const double rhs =
        specfun::gamma(1.0 - 2.0 * p) / std::pow(specfun::gamma(1.0 - p), 2);
    s.check("gauss summation at p=" + fmt(p), lhs - rhs, 1e-9);
  }
  {
    const double alpha = 1.0 / 3, beta = 0.25, betap = 0.2, gamma_ = 2.0, x = 0.5;
    specfun::AppellParams p{alpha, beta, betap, gamma_, x, 1.0};
    const double lhs = specfun::appell_f1_series(p, 1e-12);
    const double pre = specfun::gamma(gamma_) * specfun::gamma(gamma_ - alpha - betap) /
                       (specfun::gamma(gamma_ - alpha) * specfun::gamma(gamma_ - betap));
    const double rhs = pre * specfun::pfq_real({alpha, beta}, {gamma_ - betap}, x);
    s.check("two-variable reduction at y=1", lhs - rhs, 1e-9);
  }
  {
    const double alpha = 1.0 / 3, beta = 0.25, betap = 0.2, gamma_ = 2.0, x = 0.5;
    specfun::AppellParams p{alpha, beta, betap, gamma_, x, x};
    const double lhs = specfun::appell_f1(p, 1e-11);
    const double rhs = specfun::pfq_real({alpha, beta + betap}, {gamma_}, x);
    s.check("two-variable reduction at equal arguments", lhs - rhs, 1e-9);
  }
}

}  // namespace

std::vector<CheckResult> run_verification() {
  Suite s;
  wedge_checks(s);
  halfdisc_tail_sum_check(s);
  lens_checks(s);
  partial_fraction_checks(s);
  log_integral_checks(s);
  angular_dilog_checks(s);
  radial_dilog_checks(s);
  square_form_checks(s);
  special_function_checks(s);
  return s.results;
}

bool all_passed(const std::vector<CheckResult>& results) {
  for (const auto& r : results) {
    if (!r.pass) return false;
  }
  return true;
}

}  // namespace verify
}  // namespace bmexit
