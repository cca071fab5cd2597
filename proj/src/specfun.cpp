#include "bmexit/specfun.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "bmexit/numerics.hpp"

namespace bmexit {
namespace specfun {

namespace {

constexpr double kPi = std::numbers::pi;

bool is_nonpositive_integer(double x, double* which = nullptr) {
  if (x > 0.5) return false;
  const double r = std::round(x);
  if (std::abs(x - r) < 1e-12) {
    if (which) *which = r;
    return true;
  }
  return false;
}

// Lanczos g = 7, nine coefficients.
constexpr double kLanczos[9] = {
    0.99999999999980993,   676.5203681218851,     -1259.1392167224028,
    771.32342877765313,    -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,  9.9843695780195716e-6, 1.5056327351493116e-7};

// log Gamma(x) for x >= 0.5 (no reflection).
double log_gamma_core(double x) {
  x -= 1.0;
  double acc = kLanczos[0];
  for (int k = 1; k < 9; ++k) acc += kLanczos[k] / (x + k);
  const double t = x + 7.5;
  return 0.5 * std::log(2.0 * kPi) + (x + 0.5) * std::log(t) - t + std::log(acc);
}

}  // namespace

double log_gamma(double x) {
  if (!(x > 0.0)) throw std::domain_error("log_gamma: requires x > 0");
  if (x < 0.5) {
    return std::log(kPi / std::sin(kPi * x)) - log_gamma_core(1.0 - x);
  }
  return log_gamma_core(x);
}

double log_gamma_signed(double x, int* sign) {
  if (is_nonpositive_integer(x)) throw std::domain_error("gamma: pole at nonpositive integer");
  if (x >= 0.5) {
    if (sign) *sign = 1;
    return log_gamma_core(x);
  }
  const double s = std::sin(kPi * x);
  if (sign) *sign = (s > 0.0) ? 1 : -1;
  return std::log(kPi / std::abs(s)) - log_gamma_core(1.0 - x);
}

double gamma(double x) {
  int sign = 1;
  const double lg = log_gamma_signed(x, &sign);
  return sign * std::exp(lg);
}

double beta(double x, double y) {
  int sx, sy, sxy;
  const double lx = log_gamma_signed(x, &sx);
  const double ly = log_gamma_signed(y, &sy);
  const double lxy = log_gamma_signed(x + y, &sxy);
  return sx * sy * sxy * std::exp(lx + ly - lxy);
}

double pochhammer(double a, int k) {
  if (k < 0) throw std::domain_error("pochhammer: negative order");
  double p = 1.0;
  for (int i = 0; i < k; ++i) p *= a + i;
  return p;
}

double binomial(double a, int k) {
  if (k < 0) throw std::domain_error("binomial: negative order");
  double p = 1.0;
  for (int i = 0; i < k; ++i) p *= (a - i) / (i + 1);
  return p;
}

// ---------------------------------------------------------------------------
// pFq
// ---------------------------------------------------------------------------

namespace {

// Decay exponent of the terms at |x| = 1: t_k ~ C k^{-s}, s = 1 + sum(b) - sum(a).
double unit_circle_decay(const HyperParams& p) {
  double s = 1.0;
  for (double b : p.lower) s += b;
  for (double a : p.upper) s -= a;
  return s;
}

double term_ratio(const HyperParams& p, long long k) {
  double r = 1.0 / static_cast<double>(k + 1);
  for (double a : p.upper) r *= a + static_cast<double>(k);
  for (double b : p.lower) r /= b + static_cast<double>(k);
  return r;
}

PfqResult pfq_terminating(const HyperParams& p, long long k_stop) {
  PfqResult out;
  Complex term = 1.0;
  Complex sum = 1.0;
  for (long long k = 0; k < k_stop; ++k) {
    term *= term_ratio(p, k) * p.argument;
    sum += term;
  }
  out.value = sum;
  out.terms = k_stop + 1;
  out.converged = true;
  return out;
}

// x = +1: long partial sum with checkpoints, then the fitted algebraic tail.
PfqResult pfq_at_one(const HyperParams& p, double tol, long long max_terms) {
  PfqResult out;
  const double s = unit_circle_decay(p);
  if (s <= 1.0 + 1e-12) {
    out.converged = false;
    out.tail_bound = std::numeric_limits<double>::infinity();
    return out;
  }
  const long long budget = std::min<long long>(max_terms, 200000);
  numerics::KahanSum sum;
  sum.add(1.0);
  double term = 1.0;
  std::vector<double> sums, indices;
  // partial sums recorded at 2^j-spaced checkpoints
  long long next_checkpoint = 64;
  long long k = 0;
  while (k < budget) {
    term *= term_ratio(p, k);
    sum.add(term);
    ++k;
    if (k == next_checkpoint || k == budget) {
      sums.push_back(sum.value());
      indices.push_back(static_cast<double>(k));
      next_checkpoint *= 2;
      if (sums.size() >= 6 && std::abs(term) <= tol * 1e-3 * std::abs(sum.value())) break;
    }
  }
  if (sums.size() >= 3) {
    const std::size_t use = std::min<std::size_t>(sums.size(), 5);
    std::vector<double> us(sums.end() - use, sums.end());
    std::vector<double> ui(indices.end() - use, indices.end());
    const auto fit = numerics::algebraic_tail_fit(us, ui, s);
    if (fit.ok) {
      out.value = fit.value;
      out.tail_bound = fit.error + std::abs(term) * 1e-12;
      out.terms = k;
      out.converged = true;
      return out;
    }
  }
  out.value = sum.value();
  out.terms = k;
  out.tail_bound = std::abs(term) * static_cast<double>(k) / std::max(s - 1.0, 1e-6);
  out.converged = out.tail_bound <= 10.0 * tol * std::abs(out.value);
  return out;
}

// x = -1: direct head, then the Euler transform of the alternating tail.
PfqResult pfq_at_minus_one(const HyperParams& p, double tol, long long max_terms) {
  PfqResult out;
  const double s = unit_circle_decay(p);
  if (s <= 1e-12) {
    out.converged = false;
    out.tail_bound = std::numeric_limits<double>::infinity();
    return out;
  }
  double head_len = 64.0;
  for (double a : p.upper) head_len = std::max(head_len, 4.0 * std::abs(a));
  for (double b : p.lower) head_len = std::max(head_len, 4.0 * std::abs(b));
  const long long head = std::min<long long>(max_terms, static_cast<long long>(head_len) + 256);
  numerics::KahanSum sum;
  sum.add(1.0);
  double term = 1.0;  // signed term t_k at x = -1
  for (long long k = 0; k < head; ++k) {
    term *= -term_ratio(p, k);
    sum.add(term);
  }
  const int window = 48;
  std::vector<double> mags(window);
  double t = term;
  for (int j = 0; j < window; ++j) {
    t *= -term_ratio(p, static_cast<long long>(head) + j);
    mags[j] = std::abs(t);
  }
  // tail = sum_{j>=0} t_{head+1+j} = sign(t_{head+1}) * sum_j mags[j] (-1)^j
  const double lead_sign = (term > 0.0) ? -1.0 : 1.0;
  const Complex tail = numerics::euler_tail(mags, Complex(-1.0, 0.0));
  out.value = sum.value() + lead_sign * tail.real();
  out.terms = head + window;
  out.tail_bound = std::max(1e-15 * std::abs(out.value), mags[window - 1] * 1e-12);
  out.converged = true;
  (void)tol;
  return out;
}

}  // namespace

PfqResult pfq(const HyperParams& p, double tol, long long max_terms) {
  long long k_stop = -1;
  for (double a : p.upper) {
    double r;
    if (is_nonpositive_integer(a, &r)) {
      const long long k = static_cast<long long>(-r);
      if (k_stop < 0 || k < k_stop) k_stop = k;
    }
  }
  for (double b : p.lower) {
    double r;
    if (is_nonpositive_integer(b, &r)) {
      const long long pole = static_cast<long long>(-r);
      if (k_stop < 0 || k_stop > pole) {
        throw std::invalid_argument("pfq: lower parameter is a nonpositive integer");
      }
    }
  }
  if (k_stop >= 0) return pfq_terminating(p, k_stop);

  if (p.upper.size() > p.lower.size() + 1) {
    throw std::invalid_argument("pfq: divergent parameter count (p > q + 1)");
  }

  if (std::abs(p.argument - Complex(1.0, 0.0)) < 1e-14) return pfq_at_one(p, tol, max_terms);
  if (std::abs(p.argument + Complex(1.0, 0.0)) < 1e-14) return pfq_at_minus_one(p, tol, max_terms);

  const double ax = std::abs(p.argument);
  if (ax > 1.0 + 1e-14) {
    throw std::invalid_argument("pfq: argument outside the convergence region");
  }
  // inside the disc, or a non-real unit-modulus argument summed directly
  // (the latter converges only slowly and may report unconverged)
  PfqResult out;
  Complex term = 1.0;
  Complex sum = 1.0;
  int small_streak = 0;
  long long k;
  for (k = 0; k < max_terms; ++k) {
    term *= term_ratio(p, k) * p.argument;
    sum += term;
    if (std::abs(term) <= tol * std::abs(sum)) {
      if (++small_streak >= 3) break;
    } else {
      small_streak = 0;
    }
  }
  out.value = sum;
  out.terms = k + 1;
  out.tail_bound = std::abs(term) / std::max(1e-14, 1.0 - ax);
  out.converged = small_streak >= 3;
  return out;
}

double pfq_real(std::initializer_list<double> upper, std::initializer_list<double> lower,
                double x, double tol, long long max_terms) {
  HyperParams p;
  p.upper.assign(upper.begin(), upper.end());
  p.lower.assign(lower.begin(), lower.end());
  p.argument = x;
  const PfqResult r = pfq(p, tol, max_terms);
  if (!r.converged) throw std::runtime_error("pfq: series did not converge");
  return r.value.real();
}

// ---------------------------------------------------------------------------
// Appell F1
// ---------------------------------------------------------------------------

namespace {

void appell_validate_common(const AppellParams& p) {
  if (is_nonpositive_integer(p.c)) {
    throw std::invalid_argument("appell_f1: c must not be a nonpositive integer");
  }
}

}  // namespace

double appell_f1_series(const AppellParams& p, double tol) {
  appell_validate_common(p);
  if (std::abs(p.x) >= 1.0) {
    throw std::domain_error("appell_f1_series: requires |x| < 1");
  }
  if (std::abs(p.y) > 1.0) {
    throw std::domain_error("appell_f1_series: requires |y| <= 1");
  }
  // F1 = sum_m [(a)_m (b1)_m / ((c)_m m!)] x^m * 2F1(a+m, b2; c+m; y)
  numerics::KahanSum sum;
  double coef = 1.0;
  int small_streak = 0;
  for (int m = 0; m < 4000; ++m) {
    HyperParams inner;
    inner.upper = {p.a + m, p.b2};
    inner.lower = {p.c + m};
    inner.argument = p.y;
    const PfqResult r = pfq(inner, tol * 1e-2);
    if (!r.converged) throw std::runtime_error("appell_f1_series: inner series diverged");
    const double term = coef * r.value.real();
    sum.add(term);
    if (std::abs(term) <= tol * std::abs(sum.value()) && m > 2) {
      if (++small_streak >= 3) return sum.value();
    } else {
      small_streak = 0;
    }
    coef *= (p.a + m) * (p.b1 + m) / ((p.c + m) * (m + 1.0)) * p.x;
  }
  throw std::runtime_error("appell_f1_series: outer series did not converge");
}

double appell_f1_integral(const AppellParams& p, double tol) {
  appell_validate_common(p);
  if (!(p.c > p.a) || !(p.a > 0.0)) {
    throw std::invalid_argument("appell_f1_integral: requires c > a > 0");
  }
  if (p.x > 1.0 || p.y > 1.0) {
    throw std::domain_error("appell_f1_integral: arguments beyond 1");
  }
  // integrand u^{a-1} (1-u)^{c-a-1} (1-ux)^{-b1} (1-uy)^{-b2};
  // factors singular at u = 1 (arguments equal to 1) merge into the endpoint power.
  double right_exp = p.c - p.a - 1.0;
  if (p.x == 1.0) right_exp -= p.b1;
  if (p.y == 1.0) right_exp -= p.b2;
  if (right_exp <= -1.0) {
    throw std::domain_error("appell_f1_integral: divergent at u = 1");
  }
  auto integrand = [&](double u) {
    const double omu = 1.0 - u;
    double v = std::pow(u, p.a - 1.0) * std::pow(omu, p.c - p.a - 1.0);
    if (p.x == 1.0) {
      v *= std::pow(omu, -p.b1);
    } else {
      v *= std::pow(1.0 - u * p.x, -p.b1);
    }
    if (p.y == 1.0) {
      v *= std::pow(omu, -p.b2);
    } else {
      v *= std::pow(1.0 - u * p.y, -p.b2);
    }
    return v;
  };
  const auto q = numerics::integrate_power_endpoints(integrand, 0.0, 1.0, p.a - 1.0, right_exp,
                                                     tol * 0.1, tol * 0.1);
  if (!q.converged) throw std::runtime_error("appell_f1_integral: quadrature failure");
  const double prefactor = std::exp(log_gamma(p.c) - log_gamma(p.a) - log_gamma(p.c - p.a));
  return prefactor * q.value;
}

double appell_f1(const AppellParams& p, double tol) {
  const double s = appell_f1_series(p, tol);
  const double q = appell_f1_integral(p, tol);
  if (std::abs(s - q) > 10.0 * tol * std::max(1.0, std::abs(s))) {
    throw std::runtime_error("appell_f1: series and integral routes disagree");
  }
  return s;
}

// ---------------------------------------------------------------------------
// Dilogarithm
// ---------------------------------------------------------------------------

namespace {

// Bernoulli numbers B_0 .. B_32 (odd ones beyond B_1 are zero).
constexpr double kBernoulli[33] = {
    1.0, -0.5,
    1.0 / 6.0, 0.0,
    -1.0 / 30.0, 0.0,
    1.0 / 42.0, 0.0,
    -1.0 / 30.0, 0.0,
    5.0 / 66.0, 0.0,
    -691.0 / 2730.0, 0.0,
    7.0 / 6.0, 0.0,
    -3617.0 / 510.0, 0.0,
    43867.0 / 798.0, 0.0,
    -174611.0 / 330.0, 0.0,
    854513.0 / 138.0, 0.0,
    -236364091.0 / 2730.0, 0.0,
    8553103.0 / 6.0, 0.0,
    -23749461029.0 / 870.0, 0.0,
    8615841276005.0 / 14322.0, 0.0,
    -7709321041217.0 / 510.0};

// c_j = B_j / (j+1)! for Li2(z) = sum_j c_j w^{j+1}, w = -log(1-z).
const std::array<double, 33>& bernoulli_series_coefficients() {
  static const std::array<double, 33> c = [] {
    std::array<double, 33> out{};
    double factorial = 1.0;  // (j+1)!
    for (int j = 0; j <= 32; ++j) {
      factorial *= (j + 1);
      out[j] = kBernoulli[j] / factorial;
    }
    return out;
  }();
  return c;
}

Complex dilog_series(Complex z) {
  Complex term = z;
  Complex sum = z;
  for (int n = 2; n < 200; ++n) {
    term *= z;
    const Complex add = term / static_cast<double>(n * n);
    sum += add;
    if (std::abs(add) < 1e-18 * (1.0 + std::abs(sum))) break;
  }
  return sum;
}

Complex dilog_log_series(Complex z) {
  const Complex w = -std::log(1.0 - z);
  const auto& c = bernoulli_series_coefficients();
  Complex wp = w;
  Complex sum = 0.0;
  for (int j = 0; j <= 32; ++j) {
    if (c[j] != 0.0) sum += c[j] * wp;
    wp *= w;
  }
  return sum;
}

}  // namespace

Complex dilog(Complex z) {
  const double az = std::abs(z);
  if (az > 1.0 + 1e-9) {
    throw std::domain_error("dilog: argument outside the closed unit disc");
  }
  if (az == 0.0) return 0.0;
  if (az <= 0.5) return dilog_series(z);
  const Complex one_minus = 1.0 - z;
  const double a1 = std::abs(one_minus);
  if (a1 < 1e-14) return Complex(kPi * kPi / 6.0, 0.0);
  if (a1 <= 0.5) {
    // reflection through 1 - z
    return Complex(kPi * kPi / 6.0, 0.0) - std::log(z) * std::log(one_minus) -
           dilog_series(one_minus);
  }
  return dilog_log_series(z);
}

}  // namespace specfun
}  // namespace bmexit
