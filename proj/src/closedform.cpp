#include "bmexit/closedform.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "bmexit/numerics.hpp"
#include "bmexit/specfun.hpp"

namespace bmexit {
namespace closedform {

namespace {

constexpr double kPi = std::numbers::pi;
using Complex = std::complex<double>;

// cosh(k y) / cosh(k b) and sinh(k s) / sinh(k h) without overflow, |y| <= b.
double cosh_ratio(double k, double y, double b) {
  return (std::exp(k * (y - b)) + std::exp(-k * (y + b))) / (1.0 + std::exp(-2.0 * k * b));
}

double sinh_ratio(double k, double s, double h) {
  return (std::exp(k * (s - h)) - std::exp(-k * (s + h))) / (1.0 - std::exp(-2.0 * k * h));
}

// sum_{n>=0} (-1)^n g(n) cos(offset + n * step): explicit head of `terms`
// entries, then the Euler-transformed tail in the complex ratio
// q = -e^{i step}.  Near q = 1 the transform degenerates; there the head is
// simply extended (those points have per-term factors that already vanish).
double alternating_cos_series(const std::function<double(int)>& g, double offset, double step,
                              int terms) {
  const Complex q = -std::exp(Complex(0.0, step));
  const Complex phase = std::exp(Complex(0.0, offset));
  Complex acc = 0.0;
  Complex qp = 1.0;
  for (int n = 0; n < terms; ++n) {
    acc += g(n) * qp;
    qp *= q;
  }
  if (std::abs(1.0 - q) > 0.02) {
    const int window = 40;
    std::vector<double> w(window);
    for (int j = 0; j < window; ++j) w[j] = g(terms + j);
    acc += numerics::euler_tail(w, q) * qp;
  } else {
    for (int n = terms; n < terms + 400; ++n) {
      acc += g(n) * qp;
      qp *= q;
    }
  }
  return (phase * acc).real();
}

void require_closure(bool ok, const char* msg) {
  if (!ok) throw std::domain_error(msg);
}

}  // namespace

double wedge_u(double r, double theta, double alpha) {
  if (!(alpha > 0.0) || alpha >= kPi / 4.0) {
    throw std::domain_error("wedge_u: requires 0 < alpha < pi/4 (finite regime)");
  }
  require_closure(r >= 0.0 && std::abs(theta) <= alpha + 1e-12, "wedge_u: point outside wedge");
  return 0.5 * r * r * (std::cos(2.0 * theta) / std::cos(2.0 * alpha) - 1.0);
}

double disc_u(double r, double r0) {
  require_closure(r >= 0.0 && r <= r0 * (1.0 + 1e-12), "disc_u: point outside disc");
  return 0.5 * (r0 * r0 - r * r);
}

double equilateral_triangle_u(double x, double y, double a) {
  const double s3 = std::sqrt(3.0);
  const double f1 = 2.0 * s3 * y + a;
  const double f2 = s3 * y + 3.0 * x - a;
  const double f3 = s3 * y - 3.0 * x - a;
  const double eps = 1e-12 * a;
  require_closure(f1 >= -eps && f2 <= eps && f3 <= eps,
                  "equilateral_triangle_u: point outside triangle");
  return f1 * f2 * f3 / (18.0 * a);
}

double circular_cutout_u(double r, double theta, double a, double b) {
  const double eps = 1e-12 * a;
  require_closure(r >= b - eps && r * r <= 2.0 * a * r * std::cos(theta) + eps,
                  "circular_cutout_u: point outside domain");
  return -0.5 * (r * r - b * b) * (1.0 - 2.0 * a * std::cos(theta) / r);
}

double isosceles_right_u(double x, double y, double a, int terms) {
  if (terms < 10) throw std::invalid_argument("isosceles_right_u: terms >= 10 required");
  const double h = a / 2.0;
  const double eps = 1e-12 * a;
  require_closure(x <= h + eps && y <= h + eps && x + y >= -eps,
                  "isosceles_right_u: point outside triangle");
  auto series = [&](double along, double across) {
    // sum (-1)^n sinh(k_n across) cos(k_n along) / ((2n+1)^3 sinh(k_n a/2))
    auto g = [&](int n) {
      const double k = (2.0 * n + 1.0) * kPi / a;
      const double c = 2.0 * n + 1.0;
      return sinh_ratio(k, across, h) / (c * c * c);
    };
    return alternating_cos_series(g, kPi * along / a, 2.0 * kPi * along / a, terms);
  };
  const double psi = -x * y + 0.5 * a * (x + y) -
                     (4.0 * a * a / (kPi * kPi * kPi)) * (series(x, y) + series(y, x));
  return psi - 0.5 * (x * x + y * y);
}

double ellipse_u(double x, double y, double a, double b) {
  const double q = x * x / (a * a) + y * y / (b * b);
  require_closure(q <= 1.0 + 1e-12, "ellipse_u: point outside ellipse");
  return a * a * b * b / (a * a + b * b) * (1.0 - q);
}

double rectangle_u(double x, double y, double a, double b, int terms) {
  if (terms < 10) throw std::invalid_argument("rectangle_u: terms >= 10 required");
  require_closure(std::abs(x) <= a * (1.0 + 1e-12) && std::abs(y) <= b * (1.0 + 1e-12),
                  "rectangle_u: point outside rectangle");
  auto g = [&](int n) {
    const double alpha = (n + 0.5) * kPi / a;
    const double c = n + 0.5;
    return cosh_ratio(alpha, y, b) / (c * c * c);
  };
  const double series =
      alternating_cos_series(g, 0.5 * kPi * x / a, kPi * x / a, terms);
  return a * a - x * x - (4.0 * a * a / (kPi * kPi * kPi)) * series;
}

double strip_u(double x, double a) {
  require_closure(std::abs(x) <= a * (1.0 + 1e-12), "strip_u: point outside strip");
  return a * a - x * x;
}

double square_center_exit_time(SquareForm form, double tol) {
  switch (form) {
    case SquareForm::hypergeometric: {
      const double f =
          specfun::pfq_real({0.25, 0.25, 0.5, 0.5}, {1.25, 1.25, 1.0}, 1.0, 1e-14);
      const double b = specfun::beta(0.25, 0.5);
      return 8.0 / (b * b) * f;
    }
    case SquareForm::double_sine: {
      // (64 / pi^4) sum_{m,n>=1} (-1)^{m+n} / ((2m-1)(2n-1)((2m-1)^2+(2n-1)^2))
      auto inner = [&](int n) {
        const double w = 2.0 * n - 1.0;
        auto c = [&](int j) {
          const double v = 2.0 * (j + 1.0) - 1.0;  // m = j + 1
          return 1.0 / (v * (v * v + w * w));
        };
        // sum_{m>=1} (-1)^m c_m = -sum_{j>=0} (-1)^j c(j)
        const int head = 40;
        double acc = 0.0;
        for (int j = 0; j < head; ++j) acc += ((j % 2 == 0) ? -1.0 : 1.0) * c(j);
        std::vector<double> w40(40);
        for (int j = 0; j < 40; ++j) w40[j] = c(head + j);
        const double tail = numerics::euler_tail(w40, Complex(-1.0, 0.0)).real();
        acc += ((head % 2 == 0) ? -1.0 : 1.0) * tail;
        return acc;
      };
      auto outer_term = [&](int n) { return inner(n) / (2.0 * n - 1.0); };
      const int head = 48;
      double acc = 0.0;
      for (int n = 1; n <= head; ++n) acc += ((n % 2 == 0) ? 1.0 : -1.0) * outer_term(n);
      // tail of sum_n (-1)^n outer_term(n) from n = head + 1
      std::vector<double> w(40);
      for (int j = 0; j < 40; ++j) w[j] = std::abs(outer_term(head + 1 + j));
      const double lead = ((head + 1) % 2 == 0 ? 1.0 : -1.0) *
                          (outer_term(head + 1) < 0.0 ? -1.0 : 1.0);
      acc += lead * numerics::euler_tail(w, Complex(-1.0, 0.0)).real();
      const double p4 = kPi * kPi * kPi * kPi;
      (void)tol;
      return 64.0 / p4 * acc;
    }
    case SquareForm::single_series: {
      // 1/2 - 4 sqrt(2) sum (-1)^n / (alpha_n^3 cosh(alpha_n / sqrt(2))),
      // alpha_n = (n + 1/2) pi sqrt(2)
      numerics::KahanSum s;
      for (int n = 0; n < 120; ++n) {
        const double alpha = (n + 0.5) * kPi * std::sqrt(2.0);
        const double k = alpha / std::sqrt(2.0);
        const double sech = 2.0 * std::exp(-k) / (1.0 + std::exp(-2.0 * k));
        const double term = ((n % 2 == 0) ? 1.0 : -1.0) * sech / (alpha * alpha * alpha);
        s.add(term);
        if (std::abs(term) < 1e-300) break;
      }
      return 0.5 - 4.0 * std::sqrt(2.0) * s.value();
    }
  }
  throw std::invalid_argument("square_center_exit_time: unknown form");
}

// ---------------------------------------------------------------------------
// Dispatcher
// ---------------------------------------------------------------------------

std::optional<double> field_value(const FieldQuery& query) {
  if (query.series_terms < 1) {
    throw std::invalid_argument("field_value: series_terms >= 1 required");
  }
  if (!domains::contains(query.domain, query.point)) {
    throw std::domain_error("field_value: point is not interior");
  }
  return field_value(query.domain, query.point, std::max(query.series_terms, 10));
}

bool has_closed_form(const domains::DomainSpec& domain) {
  using namespace domains;
  if (const auto* w = std::get_if<Wedge>(&domain)) return w->p < 0.5;
  return std::holds_alternative<Disc>(domain) || std::holds_alternative<Ellipse>(domain) ||
         std::holds_alternative<Rectangle>(domain) || std::holds_alternative<Strip>(domain) ||
         std::holds_alternative<CircularCutout>(domain) ||
         std::holds_alternative<EquilateralTriangle>(domain) ||
         std::holds_alternative<IsoscelesRightTriangle>(domain);
}

std::optional<double> field_value(const domains::DomainSpec& domain, const domains::Point2& pt,
                                  int terms) {
  using namespace domains;
  if (const auto* d = std::get_if<Disc>(&domain)) {
    return disc_u(std::hypot(pt.x, pt.y), d->r0);
  }
  if (const auto* w = std::get_if<Wedge>(&domain)) {
    if (w->p >= 0.5) return std::nullopt;
    return wedge_u(std::hypot(pt.x, pt.y), std::atan2(pt.y, pt.x), kPi * w->p / 2.0);
  }
  if (const auto* e = std::get_if<Ellipse>(&domain)) {
    return ellipse_u(pt.x, pt.y, e->a, e->b);
  }
  if (const auto* r = std::get_if<Rectangle>(&domain)) {
    return rectangle_u(pt.x, pt.y, r->a, r->b, terms);
  }
  if (const auto* s = std::get_if<Strip>(&domain)) {
    return strip_u(pt.x, s->a);
  }
  if (const auto* c = std::get_if<CircularCutout>(&domain)) {
    return circular_cutout_u(std::hypot(pt.x, pt.y), std::atan2(pt.y, pt.x), c->a, c->b);
  }
  if (const auto* t = std::get_if<EquilateralTriangle>(&domain)) {
    return equilateral_triangle_u(pt.x, pt.y, t->a);
  }
  if (const auto* t = std::get_if<IsoscelesRightTriangle>(&domain)) {
    return isosceles_right_u(pt.x, pt.y, t->a, terms);
  }
  return std::nullopt;
}

}  // namespace closedform
}  // namespace bmexit
