#include "bmexit/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace bmexit {
namespace numerics {

namespace {

// 15-point Kronrod nodes/weights with the embedded 7-point Gauss rule
// (QUADPACK qk15 constants).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Interval {
  double a, b, value, error;
};

// One qk15 application; returns (integral, error estimate).
std::pair<double, double> kronrod15(const std::function<double(double)>& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double result_gauss = fc * kWg[3];
  double result_kronrod = fc * kWgk[7];
  double fv1[7], fv2[7];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    fv1[j] = f(center - dx);
    fv2[j] = f(center + dx);
    result_kronrod += kWgk[j] * (fv1[j] + fv2[j]);
  }
  for (int j = 0; j < 3; ++j) {
    result_gauss += kWg[j] * (fv1[2 * j + 1] + fv2[2 * j + 1]);
  }
  const double mean = 0.5 * result_kronrod;
  double asc = kWgk[7] * std::abs(fc - mean);
  for (int j = 0; j < 7; ++j) {
    asc += kWgk[j] * (std::abs(fv1[j] - mean) + std::abs(fv2[j] - mean));
  }
  asc *= std::abs(half);
  double err = std::abs((result_kronrod - result_gauss) * half);
  if (asc != 0.0 && err != 0.0) {
    err = asc * std::min(1.0, std::pow(200.0 * err / asc, 1.5));
  }
  return {result_kronrod * half, err};
}

}  // namespace

double pairwise_sum(const std::vector<double>& xs) {
  std::function<double(std::size_t, std::size_t)> rec = [&](std::size_t lo, std::size_t hi) -> double {
    if (hi - lo <= 8) {
      double s = 0.0;
      for (std::size_t i = lo; i < hi; ++i) s += xs[i];
      return s;
    }
    const std::size_t mid = lo + (hi - lo) / 2;
    return rec(lo, mid) + rec(mid, hi);
  };
  if (xs.empty()) return 0.0;
  return rec(0, xs.size());
}

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double abs_tol, double rel_tol, int max_intervals) {
  QuadratureResult out;
  if (a == b) {
    out.converged = true;
    return out;
  }
  auto [v0, e0] = kronrod15(f, a, b);
  std::vector<Interval> heap{{a, b, v0, e0}};
  auto cmp = [](const Interval& x, const Interval& y) { return x.error < y.error; };
  double total = v0, total_err = e0;
  out.evaluations = 15;
  while (static_cast<int>(heap.size()) < max_intervals) {
    if (total_err <= std::max(abs_tol, rel_tol * std::abs(total))) break;
    std::pop_heap(heap.begin(), heap.end(), cmp);
    Interval worst = heap.back();
    heap.pop_back();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid == worst.a || mid == worst.b) {  // cannot refine further
      heap.push_back(worst);
      std::push_heap(heap.begin(), heap.end(), cmp);
      break;
    }
    auto [vl, el] = kronrod15(f, worst.a, mid);
    auto [vr, er] = kronrod15(f, mid, worst.b);
    out.evaluations += 30;
    total += vl + vr - worst.value;
    total_err += el + er - worst.error;
    heap.push_back({worst.a, mid, vl, el});
    std::push_heap(heap.begin(), heap.end(), cmp);
    heap.push_back({mid, worst.b, vr, er});
    std::push_heap(heap.begin(), heap.end(), cmp);
  }
  // Recompute the error sum to shed cancellation from the incremental updates.
  total_err = 0.0;
  total = 0.0;
  std::sort(heap.begin(), heap.end(), [](const Interval& x, const Interval& y) { return x.a < y.a; });
  for (const Interval& iv : heap) {
    total += iv.value;
    total_err += iv.error;
  }
  out.value = total;
  out.error = total_err;
  out.converged = total_err <= std::max(abs_tol, rel_tol * std::abs(total)) * 1.001 + 1e-300;
  return out;
}

QuadratureResult integrate_power_endpoints(const std::function<double(double)>& f,
                                           double a, double b, double alpha, double beta,
                                           double abs_tol, double rel_tol) {
  if (alpha <= -1.0 || beta <= -1.0) {
    throw std::domain_error("integrate_power_endpoints: non-integrable endpoint exponent");
  }
  const double mid = 0.5 * (a + b);
  QuadratureResult left, right;
  if (alpha != 0.0) {
    const double p = 1.0 / (1.0 + alpha);
    const double smax = std::pow(mid - a, 1.0 / p);
    left = integrate(
        [&](double s) {
          const double x = a + std::pow(s, p);
          return f(x) * p * std::pow(s, p - 1.0);
        },
        0.0, smax, 0.5 * abs_tol, rel_tol);
  } else {
    left = integrate(f, a, mid, 0.5 * abs_tol, rel_tol);
  }
  if (beta != 0.0) {
    const double p = 1.0 / (1.0 + beta);
    const double smax = std::pow(b - mid, 1.0 / p);
    right = integrate(
        [&](double s) {
          const double x = b - std::pow(s, p);
          return f(x) * p * std::pow(s, p - 1.0);
        },
        0.0, smax, 0.5 * abs_tol, rel_tol);
  } else {
    right = integrate(f, mid, b, 0.5 * abs_tol, rel_tol);
  }
  QuadratureResult out;
  out.value = left.value + right.value;
  out.error = left.error + right.error;
  out.evaluations = left.evaluations + right.evaluations;
  out.converged = left.converged && right.converged;
  return out;
}

void solve_linear(std::vector<std::vector<double>>& a, std::vector<double>& b) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
    }
    if (a[pivot][col] == 0.0) throw std::runtime_error("solve_linear: singular matrix");
    std::swap(a[col], a[pivot]);
    std::swap(b[col], b[pivot]);
    for (std::size_t r = col + 1; r < n; ++r) {
      const double m = a[r][col] / a[col][col];
      if (m == 0.0) continue;
      for (std::size_t c = col; c < n; ++c) a[r][c] -= m * a[col][c];
      b[r] -= m * b[col];
    }
  }
  for (std::size_t i = n; i-- > 0;) {
    double s = b[i];
    for (std::size_t c = i + 1; c < n; ++c) s -= a[i][c] * b[c];
    b[i] = s / a[i][i];
  }
}

TailFit algebraic_tail_fit_basis(const std::vector<double>& partial_sums,
                                 const std::vector<double>& checkpoints,
                                 std::vector<double> tail_exponents) {
  TailFit out;
  const std::size_t n = partial_sums.size();
  if (n < 2 || checkpoints.size() != n || tail_exponents.empty()) return out;
  std::sort(tail_exponents.begin(), tail_exponents.end());
  // merge exponents that coincide (degenerate parameter choices)
  std::vector<double> exps;
  for (double e : tail_exponents) {
    if (e <= 0.0) return out;  // non-decaying tail: caller handles divergence
    if (exps.empty() || e > exps.back() + 1e-6) exps.push_back(e);
  }

  auto fit = [&](std::size_t n_check, std::size_t n_exp) -> double {
    const std::size_t unknowns = n_exp + 1;
    std::vector<std::vector<double>> m(n_check, std::vector<double>(unknowns, 0.0));
    std::vector<double> rhs(n_check, 0.0);
    const std::size_t first = n - n_check;
    const double k0 = checkpoints[first];
    for (std::size_t i = 0; i < n_check; ++i) {
      const double k = checkpoints[first + i];
      m[i][0] = 1.0;
      for (std::size_t j = 0; j < n_exp; ++j) {
        // scale columns by the smallest checkpoint for conditioning
        m[i][j + 1] = -std::pow(k / k0, -exps[j]);
      }
      rhs[i] = partial_sums[first + i];
    }
    solve_linear(m, rhs);
    return rhs[0];
  };

  const std::size_t n_exp = std::min(exps.size(), n - 1);
  const double v_full = fit(n_exp + 1, n_exp);
  const double v_less = (n_exp >= 2) ? fit(n_exp, n_exp - 1) : v_full;
  out.value = v_full;
  out.error = std::abs(v_full - v_less);
  out.ok = true;
  return out;
}

TailFit algebraic_tail_fit(const std::vector<double>& partial_sums,
                           const std::vector<double>& checkpoints, double s) {
  if (s <= 1.0) return {};
  std::vector<double> exps;
  const std::size_t orders = std::min<std::size_t>(partial_sums.size() > 0 ? partial_sums.size() - 1 : 0, 4);
  for (std::size_t j = 0; j < orders; ++j) exps.push_back(s - 1.0 + static_cast<double>(j));
  return algebraic_tail_fit_basis(partial_sums, checkpoints, exps);
}

std::complex<double> euler_tail(const std::vector<double>& c, std::complex<double> q) {
  const std::size_t n = c.size();
  if (n == 0) return 0.0;
  if (std::abs(1.0 - q) < 1e-13) {
    throw std::domain_error("euler_tail: ratio too close to 1");
  }
  std::vector<double> diff(c);  // diff[j] holds the current forward difference column
  const std::complex<double> ratio = q / (1.0 - q);
  std::complex<double> factor = 1.0 / (1.0 - q);
  std::complex<double> total = 0.0;
  double best = std::numeric_limits<double>::infinity();
  std::complex<double> best_total = 0.0;
  for (std::size_t m = 0; m < n; ++m) {
    const std::complex<double> term = diff[0] * factor;
    total += term;
    const double mag = std::abs(term);
    if (mag < best) {
      best = mag;
      best_total = total;
    } else if (mag > 4.0 * best) {
      break;  // asymptotic regime over; stop at the recorded minimum
    }
    factor *= ratio;
    for (std::size_t j = 0; j + m + 1 < n; ++j) diff[j] = diff[j + 1] - diff[j];
  }
  return best_total;
}

}  // namespace numerics
}  // namespace bmexit
