#include "bmexit/conformal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "bmexit/numerics.hpp"
#include "bmexit/specfun.hpp"

namespace bmexit {
namespace conformal {

namespace {
constexpr double kPi = std::numbers::pi;
}

PowerSeries::PowerSeries(std::vector<Complex> c) : coeffs(std::move(c)) {
  if (coeffs.size() < 2) throw std::invalid_argument("PowerSeries: order must be >= 1");
  for (const Complex& v : coeffs) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw std::invalid_argument("PowerSeries: coefficients must be finite");
    }
  }
}

Complex PowerSeries::evaluate(Complex z) const {
  Complex acc = 0.0;
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * z + coeffs[i];
  return acc;
}

// ---------------------------------------------------------------------------
// Power-series arithmetic
// ---------------------------------------------------------------------------

PowerSeries binomial_series(double alpha, Complex scale, int power, int M) {
  std::vector<Complex> c(M + 1, 0.0);
  Complex coef = 1.0;
  for (int k = 0; k * power <= M; ++k) {
    c[k * power] = coef;
    coef *= scale * ((alpha - k) / (k + 1.0));
  }
  return PowerSeries(std::move(c));
}

PowerSeries multiply(const PowerSeries& a, const PowerSeries& b, int M) {
  std::vector<Complex> c(M + 1, 0.0);
  const int na = static_cast<int>(a.coeffs.size());
  const int nb = static_cast<int>(b.coeffs.size());
  for (int i = 0; i < na && i <= M; ++i) {
    if (a.coeffs[i] == 0.0) continue;
    const int jmax = std::min(nb - 1, M - i);
    for (int j = 0; j <= jmax; ++j) c[i + j] += a.coeffs[i] * b.coeffs[j];
  }
  return PowerSeries(std::move(c));
}

PowerSeries add(const PowerSeries& a, const PowerSeries& b) {
  std::vector<Complex> c(std::max(a.coeffs.size(), b.coeffs.size()), 0.0);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) c[i] += a.coeffs[i];
  for (std::size_t i = 0; i < b.coeffs.size(); ++i) c[i] += b.coeffs[i];
  return PowerSeries(std::move(c));
}

PowerSeries scale(const PowerSeries& a, Complex factor) {
  std::vector<Complex> c = a.coeffs;
  for (Complex& v : c) v *= factor;
  return PowerSeries(std::move(c));
}

PowerSeries divide_by_z_minus_one(const PowerSeries& a, int M) {
  // a(z) / (z - 1) = -a(z) (1 + z + z^2 + ...); coefficients are negated
  // cumulative sums of a.
  std::vector<Complex> c(M + 1, 0.0);
  Complex run = 0.0;
  for (int k = 0; k <= M; ++k) {
    if (k < static_cast<int>(a.coeffs.size())) run += a.coeffs[k];
    c[k] = -run;
  }
  return PowerSeries(std::move(c));
}

PowerSeries integrate_termwise(const PowerSeries& a) {
  std::vector<Complex> c(a.coeffs.size() + 1, 0.0);
  for (std::size_t k = 0; k < a.coeffs.size(); ++k) {
    c[k + 1] = a.coeffs[k] / static_cast<double>(k + 1);
  }
  return PowerSeries(std::move(c));
}

// ---------------------------------------------------------------------------
// Exit-time functional
// ---------------------------------------------------------------------------

ExitTimeEstimate exit_time_from_coefficients(const PowerSeries& series, double tol) {
  ExitTimeEstimate out;
  out.method = "series";

  const int M = series.order();
  std::vector<double> t;              // |a_n|^2 at the nonzero indices
  std::vector<int> idx;
  numerics::KahanSum sum;
  for (int n = 1; n <= M; ++n) {
    const double v = std::norm(series.coeffs[n]);
    sum.add(v);
    if (v > 0.0) {
      t.push_back(v);
      idx.push_back(n);
    }
  }
  out.value = 0.5 * sum.value();
  out.count = M;

  if (t.size() < 2) {
    out.error = 0.0;
    return out;
  }

  // Divergence flag: |a_n|^2 non-decreasing across the last 100 nonzero indices.
  const std::size_t window = std::min<std::size_t>(t.size(), 100);
  bool nondecreasing = window >= 2;
  for (std::size_t i = t.size() - window; i + 1 < t.size(); ++i) {
    if (t[i + 1] < t[i] * (1.0 - 1e-12)) {
      nondecreasing = false;
      break;
    }
  }
  if (nondecreasing) {
    out.status = EstimateStatus::divergence_suspected;
    out.error = std::numeric_limits<double>::infinity();
    return out;
  }

  // Geometric tail bound fitted over the last decade of indices.
  std::size_t first = 0;
  while (first + 1 < idx.size() && idx[first] < idx.back() / 10 + 1) ++first;
  if (first + 1 >= idx.size()) first = idx.size() - 2;
  const double steps = static_cast<double>(idx.back() - idx[first]);
  const double ratio = std::pow(t.back() / t[first], 1.0 / steps);
  if (!(ratio < 1.0)) {
    out.status = EstimateStatus::divergence_suspected;
    out.error = std::numeric_limits<double>::infinity();
    return out;
  }
  out.error = 0.5 * t.back() * ratio / (1.0 - ratio);
  if (out.error > tol * std::max(std::abs(out.value), 1e-300)) {
    out.status = EstimateStatus::divergence_suspected;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Wedge
// ---------------------------------------------------------------------------

PowerSeries wedge_coefficients(double p, double q, int M) {
  if (!(p > 0.0) || p > 1.0) throw std::invalid_argument("wedge_coefficients: 0 < p <= 1");
  if (M < 1) throw std::invalid_argument("wedge_coefficients: M >= 1");
  const PowerSeries plus = binomial_series(q, 1.0, 1, M);    // (1 + z)^q
  const PowerSeries minus = binomial_series(-p, -1.0, 1, M);  // (1 - z)^{-p}
  return multiply(plus, minus, M);
}

ExitTimeEstimate wedge_exit_time(double p, double tol) {
  ExitTimeEstimate out;
  out.method = "series";
  if (!(p > 0.0) || p > 1.0) throw std::invalid_argument("wedge_exit_time: 0 < p <= 1");
  if (p >= 0.5) {
    out.value = std::numeric_limits<double>::infinity();
    out.status = EstimateStatus::divergence_suspected;
    return out;
  }
  const int M = 8192;
  const PowerSeries g = wedge_coefficients(p, p, M);
  numerics::KahanSum sum;
  std::vector<double> checkpoints, partials;
  int next = M / 64;
  double prev_partial = 0.0;
  for (int m = 1; m <= M; ++m) {
    prev_partial = sum.value();
    sum.add(std::norm(g.coeffs[m]));
    if (m == next || m == M) {
      // the (1+z)^p singularity contributes an alternating component to
      // |a_m|^2; averaging adjacent partial sums removes it from the fit
      checkpoints.push_back(static_cast<double>(m) - 0.5);
      partials.push_back(0.5 * (prev_partial + sum.value()));
      next *= 2;
    }
  }
  // |a_m|^2 mixes two algebraic families, m^{2p-2} from the z = 1 singularity
  // and m^{-2p-2} from z = -1; fit the tail on the union of their ladders.
  const double s1 = 2.0 - 2.0 * p;
  const double s2 = 2.0 + 2.0 * p;
  const auto fit = numerics::algebraic_tail_fit_basis(
      partials, checkpoints, {s1 - 1.0, s1, s1 + 1.0, s2 - 1.0, s2, s2 + 1.0});
  if (!fit.ok) {
    out.value = 0.5 * sum.value();
    out.status = EstimateStatus::unconverged;
    out.error = std::numeric_limits<double>::infinity();
    return out;
  }
  out.value = 0.5 * fit.value;
  out.error = 0.5 * fit.error;
  out.count = M;
  if (out.error > tol * std::abs(out.value)) out.status = EstimateStatus::unconverged;
  return out;
}

// ---------------------------------------------------------------------------
// Upper half disc
// ---------------------------------------------------------------------------

PowerSeries halfdisc_coefficients(int M) {
  if (M < 2) throw std::invalid_argument("halfdisc_coefficients: M >= 2");
  // sqrt(1 + z^2) on the principal branch
  const PowerSeries root = binomial_series(0.5, 1.0, 2, M);
  std::vector<Complex> lin(M + 1, 0.0);
  lin[0] = 1.0;
  lin[1] = 1.0;
  const PowerSeries numerator = add(PowerSeries(std::move(lin)), scale(root, -std::sqrt(2.0)));
  return scale(divide_by_z_minus_one(numerator, M), Complex(0.0, 1.0));
}

// ---------------------------------------------------------------------------
// n-gram
// ---------------------------------------------------------------------------

namespace {

void validate_ngram(int n, double mu1, double mu2) {
  if (n < 2) throw std::invalid_argument("ngram: n >= 2 required");
  if (!(mu1 > 0.0 && mu1 < 1.0 && mu2 > 0.0 && mu2 < 1.0)) {
    throw std::invalid_argument("ngram: mu parameters must lie in (0, 1)");
  }
  if (std::abs(mu1 + mu2 - 2.0 / n) > 1e-9) {
    throw std::invalid_argument("ngram: mu1 + mu2 must equal 2/n");
  }
}

// Vertex distance with exponent -muA on (1 - t^n) and -muB on (1 + t^n),
// through the gamma-prefactored alternating-argument 2F1.
double ngram_vertex_closed_form(int n, double muA, double muB) {
  const double inv_n = 1.0 / n;
  const double c = 1.0 + inv_n - muA;
  const double f = specfun::pfq_real({muB, inv_n}, {c}, -1.0, 1e-14);
  const double pre = std::exp(specfun::log_gamma(1.0 - muA) + specfun::log_gamma(1.0 + inv_n) -
                              specfun::log_gamma(c));
  return pre * f;
}

// Same distance through the two-variable hypergeometric integral evaluated at
// the prevertex arguments (1, -1).
double ngram_vertex_integral(int n, double muA, double muB) {
  specfun::AppellParams p;
  p.a = 1.0 / n;
  p.c = 1.0 + 1.0 / n;
  p.b1 = muA;
  p.b2 = muB;
  p.x = 1.0;
  p.y = -1.0;
  return specfun::appell_f1_integral(p, 1e-12);
}

}  // namespace

PowerSeries ngram_coefficients(int n, double mu1, double mu2, int M) {
  validate_ngram(n, mu1, mu2);
  if (M < n + 1) throw std::invalid_argument("ngram_coefficients: M >= n + 1 required");
  // integrand (1 - z^n)^{-mu2} (1 + z^n)^{-mu1}, integrated term by term
  const PowerSeries f1 = binomial_series(-mu2, -1.0, n, M - 1);
  const PowerSeries f2 = binomial_series(-mu1, 1.0, n, M - 1);
  PowerSeries w = integrate_termwise(multiply(f1, f2, M - 1));
  w.coeffs.resize(M + 1, 0.0);
  return w;
}

ExitTimeEstimate ngram_exit_time(int n, double mu1, double mu2, double tol) {
  validate_ngram(n, mu1, mu2);
  ExitTimeEstimate best;
  for (int M = 4096; M <= 65536; M *= 4) {
    best = exit_time_from_coefficients(ngram_coefficients(n, mu1, mu2, M), tol);
    if (best.ok()) return best;
  }
  return best;
}

std::pair<double, double> ngram_vertex_radii(int n, double mu1, double mu2) {
  validate_ngram(n, mu1, mu2);
  const double r_even = ngram_vertex_closed_form(n, mu2, mu1);
  const double r_odd = ngram_vertex_closed_form(n, mu1, mu2);
  return {r_even, r_odd};
}

NGramRadii ngram_radii(int n, double mu1, double mu2) {
  validate_ngram(n, mu1, mu2);
  const double even_closed = ngram_vertex_closed_form(n, mu2, mu1);
  const double odd_closed = ngram_vertex_closed_form(n, mu1, mu2);
  const double even_integral = ngram_vertex_integral(n, mu2, mu1);
  const double odd_integral = ngram_vertex_integral(n, mu1, mu2);
  if (std::abs(even_closed - even_integral) > 1e-9 * std::max(1.0, even_closed) ||
      std::abs(odd_closed - odd_integral) > 1e-9 * std::max(1.0, odd_closed)) {
    throw std::runtime_error("ngram_radii: closed-form and integral routes disagree");
  }
  NGramRadii out;
  out.circumradius = std::max(even_closed, odd_closed);
  out.inradius = std::min(even_closed, odd_closed);
  return out;
}

// ---------------------------------------------------------------------------
// Regular m-gon (unit circumradius)
// ---------------------------------------------------------------------------

ExitTimeEstimate mgon_exit_time(int m, double tol) {
  if (m < 3) throw std::invalid_argument("mgon_exit_time: m >= 3 required");
  ExitTimeEstimate out;
  out.method = "series";
  const double im = 1.0 / m;
  specfun::HyperParams hp;
  hp.upper = {im, im, 2.0 * im, 2.0 * im};
  hp.lower = {1.0 + im, 1.0 + im, 1.0};
  hp.argument = 1.0;
  const auto r = specfun::pfq(hp, 1e-14);
  if (!r.converged) {
    out.status = EstimateStatus::unconverged;
    out.error = std::numeric_limits<double>::infinity();
    return out;
  }
  const double b = specfun::beta(im, 1.0 - 2.0 * im);
  out.value = m * m / (2.0 * b * b) * r.value.real();
  out.error = m * m / (2.0 * b * b) * r.tail_bound;
  out.count = r.terms;
  if (out.error > tol * std::abs(out.value)) out.status = EstimateStatus::unconverged;
  return out;
}

// ---------------------------------------------------------------------------
// Lens
// ---------------------------------------------------------------------------

PowerSeries lens_coefficients(int M) {
  if (M < 1) throw std::invalid_argument("lens_coefficients: M >= 1 required");
  // (-1 + sqrt(1 + w^2)) / w: drop the constant term and shift down one index
  const PowerSeries root = binomial_series(0.5, 1.0, 2, M + 1);
  std::vector<Complex> c(M + 1, 0.0);
  for (int k = 1; k <= M; ++k) c[k] = root.coeffs[k + 1];
  return PowerSeries(std::move(c));
}

Complex lens_forward_map(Complex z) {
  if (std::abs(z - 1.0) < 1e-12 || std::abs(z + 1.0) < 1e-12) {
    throw std::domain_error("lens_forward_map: singular at z = +-1");
  }
  return 2.0 * z / (1.0 - z * z);
}

}  // namespace conformal
}  // namespace bmexit
