#include "bmexit/domains.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "bmexit/conformal.hpp"

namespace bmexit {
namespace domains {

namespace {

constexpr double kPi = std::numbers::pi;
const double kSqrt2 = std::sqrt(2.0);

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

double hypot2(double x, double y) { return std::sqrt(x * x + y * y); }

}  // namespace

Disc::Disc(double r0_) : r0(r0_) { require(r0 > 0.0, "Disc: r0 > 0 required"); }

HalfDisc::HalfDisc(double r0_) : r0(r0_) { require(r0 > 0.0, "HalfDisc: r0 > 0 required"); }

Wedge::Wedge(double p_) : p(p_) { require(p > 0.0 && p <= 1.0, "Wedge: 0 < p <= 1 required"); }

RegularPolygon::RegularPolygon(int m_) : m(m_) {
  require(m >= 3, "RegularPolygon: m >= 3 required");
}

NGram::NGram(int n_, double mu1_, double mu2_) : n(n_), mu1(mu1_), mu2(mu2_) {
  require(n >= 2, "NGram: n >= 2 required");
  require(mu1 > 0.0 && mu1 < 1.0, "NGram: mu1 in (0, 1) required");
  require(mu2 > 0.0 && mu2 < 1.0, "NGram: mu2 in (0, 1) required");
  require(std::abs(mu1 + mu2 - 2.0 / n) < 1e-9, "NGram: mu1 + mu2 must equal 2/n");
}

Ellipse::Ellipse(double a_, double b_) : a(a_), b(b_) {
  require(a > 0.0 && b > 0.0, "Ellipse: semi-axes must be positive");
}

Rectangle::Rectangle(double a_, double b_) : a(a_), b(b_) {
  require(a > 0.0 && b > 0.0, "Rectangle: half-sides must be positive");
}

Strip::Strip(double a_) : a(a_) { require(a > 0.0, "Strip: a > 0 required"); }

CircularCutout::CircularCutout(double a_, double b_) : a(a_), b(b_) {
  require(a > 0.0 && b > 0.0, "CircularCutout: radii must be positive");
  require(a >= b, "CircularCutout: a >= b required");
}

EquilateralTriangle::EquilateralTriangle(double a_) : a(a_) {
  require(a > 0.0, "EquilateralTriangle: side must be positive");
}

IsoscelesRightTriangle::IsoscelesRightTriangle(double a_) : a(a_) {
  require(a > 0.0, "IsoscelesRightTriangle: leg must be positive");
}

// ---------------------------------------------------------------------------
// Polygon helpers
// ---------------------------------------------------------------------------

bool polygon_contains(const std::vector<Point2>& vs, const Point2& pt) {
  bool inside = false;
  const std::size_t n = vs.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const Point2& a = vs[j];
    const Point2& b = vs[i];
    if ((b.y > pt.y) != (a.y > pt.y)) {
      const double x_cross = b.x + (pt.y - b.y) * (a.x - b.x) / (a.y - b.y);
      if (pt.x < x_cross) inside = !inside;
    }
  }
  return inside;
}

double polygon_boundary_distance(const std::vector<Point2>& vs, const Point2& pt) {
  double best = std::numeric_limits<double>::infinity();
  const std::size_t n = vs.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const Point2& a = vs[j];
    const Point2& b = vs[i];
    const double ux = b.x - a.x, uy = b.y - a.y;
    const double wx = pt.x - a.x, wy = pt.y - a.y;
    const double t = std::clamp((wx * ux + wy * uy) / (ux * ux + uy * uy), 0.0, 1.0);
    best = std::min(best, hypot2(wx - t * ux, wy - t * uy));
  }
  return best;
}

std::vector<Point2> polygon_vertices(const DomainSpec& domain) {
  if (const auto* t = std::get_if<EquilateralTriangle>(&domain)) {
    const double a = t->a;
    const double s3 = std::sqrt(3.0);
    // zero set of (2*sqrt(3) y + a)(sqrt(3) y + 3x - a)(sqrt(3) y - 3x - a)
    return {{a / 2.0, -a / (2.0 * s3)}, {0.0, a / s3}, {-a / 2.0, -a / (2.0 * s3)}};
  }
  if (const auto* t = std::get_if<IsoscelesRightTriangle>(&domain)) {
    const double h = t->a / 2.0;
    return {{h, h}, {-h, h}, {h, -h}};
  }
  if (const auto* p = std::get_if<RegularPolygon>(&domain)) {
    std::vector<Point2> vs;
    vs.reserve(p->m);
    for (int k = 0; k < p->m; ++k) {
      const double th = 2.0 * kPi * k / p->m;
      vs.push_back({std::cos(th), std::sin(th)});
    }
    return vs;
  }
  if (const auto* g = std::get_if<NGram>(&domain)) {
    const auto radii = conformal::ngram_vertex_radii(g->n, g->mu1, g->mu2);
    std::vector<Point2> vs;
    vs.reserve(2 * g->n);
    for (int j = 0; j < 2 * g->n; ++j) {
      const double th = kPi * j / g->n;
      const double r = (j % 2 == 0) ? radii.first : radii.second;
      vs.push_back({r * std::cos(th), r * std::sin(th)});
    }
    return vs;
  }
  throw std::domain_error("polygon_vertices: domain is not polygonal");
}

bool is_polygonal(const DomainSpec& domain) {
  return std::holds_alternative<EquilateralTriangle>(domain) ||
         std::holds_alternative<IsoscelesRightTriangle>(domain) ||
         std::holds_alternative<RegularPolygon>(domain) || std::holds_alternative<NGram>(domain);
}

bool is_bounded(const DomainSpec& domain) {
  return !std::holds_alternative<Wedge>(domain) && !std::holds_alternative<Strip>(domain);
}

// ---------------------------------------------------------------------------
// contains / boundary_distance
// ---------------------------------------------------------------------------

namespace {

struct ContainsVisitor {
  Point2 pt;

  bool operator()(const Disc& d) const { return hypot2(pt.x, pt.y) < d.r0; }
  bool operator()(const HalfDisc& d) const {
    return pt.y > 0.0 && hypot2(pt.x, pt.y) < d.r0;
  }
  bool operator()(const Wedge& w) const {
    const double r = hypot2(pt.x, pt.y);
    if (r <= 0.0) return false;  // apex is a boundary point
    const double theta = std::atan2(pt.y, pt.x);
    return std::abs(theta) < kPi * w.p / 2.0;
  }
  bool operator()(const RegularPolygon& p) const {
    return polygon_contains(polygon_vertices(DomainSpec{p}), pt);
  }
  bool operator()(const NGram& g) const {
    return polygon_contains(polygon_vertices(DomainSpec{g}), pt);
  }
  bool operator()(const Lens&) const {
    return hypot2(pt.x - 1.0, pt.y) < kSqrt2 && hypot2(pt.x + 1.0, pt.y) < kSqrt2;
  }
  bool operator()(const Ellipse& e) const {
    const double u = pt.x / e.a, v = pt.y / e.b;
    return u * u + v * v < 1.0;
  }
  bool operator()(const Rectangle& r) const {
    return std::abs(pt.x) < r.a && std::abs(pt.y) < r.b;
  }
  bool operator()(const Strip& s) const { return std::abs(pt.x) < s.a; }
  bool operator()(const CircularCutout& c) const {
    return hypot2(pt.x - c.a, pt.y) < c.a && hypot2(pt.x, pt.y) > c.b;
  }
  bool operator()(const EquilateralTriangle& t) const {
    return polygon_contains(polygon_vertices(DomainSpec{t}), pt);
  }
  bool operator()(const IsoscelesRightTriangle& t) const {
    return polygon_contains(polygon_vertices(DomainSpec{t}), pt);
  }
};

double ray_distance(double r, double beta) {
  // distance from a point at radius r to a ray from the origin, where beta is
  // the angle between the point direction and the ray direction
  return (beta <= kPi / 2.0) ? r * std::sin(beta) : r;
}

struct DistanceVisitor {
  Point2 pt;

  double operator()(const Disc& d) const { return d.r0 - hypot2(pt.x, pt.y); }
  double operator()(const HalfDisc& d) const {
    return std::min(d.r0 - hypot2(pt.x, pt.y), pt.y);
  }
  double operator()(const Wedge& w) const {
    const double r = hypot2(pt.x, pt.y);
    const double theta = std::atan2(pt.y, pt.x);
    const double a = kPi * w.p / 2.0;
    return std::min(ray_distance(r, a - theta), ray_distance(r, a + theta));
  }
  double operator()(const RegularPolygon& p) const {
    return polygon_boundary_distance(polygon_vertices(DomainSpec{p}), pt);
  }
  double operator()(const NGram& g) const {
    return polygon_boundary_distance(polygon_vertices(DomainSpec{g}), pt);
  }
  double operator()(const Lens&) const {
    return std::min(kSqrt2 - hypot2(pt.x - 1.0, pt.y), kSqrt2 - hypot2(pt.x + 1.0, pt.y));
  }
  double operator()(const Ellipse& e) const;
  double operator()(const Rectangle& r) const {
    return std::min(r.a - std::abs(pt.x), r.b - std::abs(pt.y));
  }
  double operator()(const Strip& s) const { return s.a - std::abs(pt.x); }
  double operator()(const CircularCutout& c) const {
    return std::min(c.a - hypot2(pt.x - c.a, pt.y), hypot2(pt.x, pt.y) - c.b);
  }
  double operator()(const EquilateralTriangle& t) const {
    return polygon_boundary_distance(polygon_vertices(DomainSpec{t}), pt);
  }
  double operator()(const IsoscelesRightTriangle& t) const {
    return polygon_boundary_distance(polygon_vertices(DomainSpec{t}), pt);
  }
};

// Interior point to ellipse boundary.  Closest boundary point solves
// (x, y) = (a^2 px / (t + a^2), b^2 py / (t + b^2)) with t in
// (-min(a^2, b^2), 0]; the constraint function is monotone in t, so bisection
// is safe.  Axis points are handled explicitly (the generic parametrization
// degenerates there).
double DistanceVisitor::operator()(const Ellipse& e) const {
  const double a = e.a, b = e.b;
  double px = std::abs(pt.x), py = std::abs(pt.y);
  if (px == 0.0 && py == 0.0) return std::min(a, b);
  if (py == 0.0) {
    if (a <= b || px >= (a * a - b * b) / a) return a - px;
    const double xs = a * a * px / (a * a - b * b);
    const double ys = b * std::sqrt(std::max(0.0, 1.0 - xs * xs / (a * a)));
    return hypot2(xs - px, ys);
  }
  if (px == 0.0) {
    if (b <= a || py >= (b * b - a * a) / b) return b - py;
    const double ys = b * b * py / (b * b - a * a);
    const double xs = a * std::sqrt(std::max(0.0, 1.0 - ys * ys / (b * b)));
    return hypot2(xs, ys - py);
  }
  const double tmin = -std::min(a * a, b * b);
  double lo = tmin * (1.0 - 1e-15);
  double hi = 0.0;
  auto constraint = [&](double t) {
    const double u = a * px / (t + a * a);
    const double v = b * py / (t + b * b);
    return u * u + v * v - 1.0;
  };
  // For interior points constraint(0) < 0 and constraint -> +inf near tmin.
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (constraint(mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
    if (hi - lo <= 1e-16 * std::max(1.0, std::abs(hi))) break;
  }
  const double t = 0.5 * (lo + hi);
  const double xs = a * a * px / (t + a * a);
  const double ys = b * b * py / (t + b * b);
  return hypot2(xs - px, ys - py);
}

}  // namespace

bool contains(const DomainSpec& domain, const Point2& pt) {
  return std::visit(ContainsVisitor{pt}, domain);
}

double boundary_distance(const DomainSpec& domain, const Point2& pt) {
  if (!contains(domain, pt)) {
    throw std::domain_error("boundary_distance: point is not interior");
  }
  return std::visit(DistanceVisitor{pt}, domain);
}

// ---------------------------------------------------------------------------
// Misc queries
// ---------------------------------------------------------------------------

Point2 natural_start(const DomainSpec& domain) {
  if (const auto* d = std::get_if<HalfDisc>(&domain)) {
    return {0.0, (kSqrt2 - 1.0) * d->r0};
  }
  if (std::holds_alternative<Wedge>(domain)) return {1.0, 0.0};
  if (const auto* c = std::get_if<CircularCutout>(&domain)) return {c->a, 0.0};
  if (const auto* t = std::get_if<IsoscelesRightTriangle>(&domain)) {
    return {t->a / 6.0, t->a / 6.0};  // centroid
  }
  return {0.0, 0.0};
}

BoundingBox bounding_box(const DomainSpec& domain) {
  struct V {
    BoundingBox operator()(const Disc& d) const { return {-d.r0, d.r0, -d.r0, d.r0}; }
    BoundingBox operator()(const HalfDisc& d) const { return {-d.r0, d.r0, 0.0, d.r0}; }
    BoundingBox operator()(const Wedge& w) const {
      const double a = kPi * w.p / 2.0;
      const double y = 4.0 * std::sin(std::min(a, kPi / 2.0));
      return {0.0, 4.0, -y, y};  // finite viewing window for the unbounded wedge
    }
    BoundingBox operator()(const RegularPolygon&) const { return {-1.0, 1.0, -1.0, 1.0}; }
    BoundingBox operator()(const NGram& g) const {
      const auto radii = conformal::ngram_vertex_radii(g.n, g.mu1, g.mu2);
      const double r = std::max(radii.first, radii.second);
      return {-r, r, -r, r};
    }
    BoundingBox operator()(const Lens&) const {
      return {1.0 - kSqrt2, kSqrt2 - 1.0, -1.0, 1.0};
    }
    BoundingBox operator()(const Ellipse& e) const { return {-e.a, e.a, -e.b, e.b}; }
    BoundingBox operator()(const Rectangle& r) const { return {-r.a, r.a, -r.b, r.b}; }
    BoundingBox operator()(const Strip& s) const {
      return {-s.a, s.a, -2.0 * s.a, 2.0 * s.a};  // finite window
    }
    BoundingBox operator()(const CircularCutout& c) const {
      return {0.0, 2.0 * c.a, -c.a, c.a};
    }
    BoundingBox operator()(const EquilateralTriangle& t) const {
      const double s3 = std::sqrt(3.0);
      return {-t.a / 2.0, t.a / 2.0, -t.a / (2.0 * s3), t.a / s3};
    }
    BoundingBox operator()(const IsoscelesRightTriangle& t) const {
      return {-t.a / 2.0, t.a / 2.0, -t.a / 2.0, t.a / 2.0};
    }
  };
  return std::visit(V{}, domain);
}

std::string domain_name(const DomainSpec& domain) {
  std::ostringstream os;
  struct V {
    std::ostringstream& os;
    void operator()(const Disc& d) { os << "disc:r0=" << d.r0; }
    void operator()(const HalfDisc& d) { os << "halfdisc:r0=" << d.r0; }
    void operator()(const Wedge& w) { os << "wedge:p=" << w.p; }
    void operator()(const RegularPolygon& p) { os << "mgon:m=" << p.m; }
    void operator()(const NGram& g) {
      os << "ngram:n=" << g.n << ",mu1=" << g.mu1 << ",mu2=" << g.mu2;
    }
    void operator()(const Lens&) { os << "lens"; }
    void operator()(const Ellipse& e) { os << "ellipse:a=" << e.a << ",b=" << e.b; }
    void operator()(const Rectangle& r) { os << "rectangle:a=" << r.a << ",b=" << r.b; }
    void operator()(const Strip& s) { os << "strip:a=" << s.a; }
    void operator()(const CircularCutout& c) { os << "cutout:a=" << c.a << ",b=" << c.b; }
    void operator()(const EquilateralTriangle& t) { os << "equilateral:a=" << t.a; }
    void operator()(const IsoscelesRightTriangle& t) { os << "isoright:a=" << t.a; }
  };
  V v{os};
  std::visit(v, domain);
  return os.str();
}

}  // namespace domains
}  // namespace bmexit
