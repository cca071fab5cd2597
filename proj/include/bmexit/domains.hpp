#ifndef BMEXIT_DOMAINS_HPP_
#define BMEXIT_DOMAINS_HPP_

#include <complex>
#include <string>
#include <variant>
#include <vector>

namespace bmexit {
namespace domains {

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  std::complex<double> to_complex() const { return {x, y}; }
  static Point2 from_complex(std::complex<double> z) { return {z.real(), z.imag()}; }
};

// Shape parameter structs.  Constructors validate; violations throw
// std::invalid_argument.

struct Disc {
  double r0;
  explicit Disc(double r0_);
};

// Upper half of the disc of radius r0: {|z| < r0, Im z > 0}.
struct HalfDisc {
  double r0;
  explicit HalfDisc(double r0_);
};

// Infinite wedge {|arg z| < pi p / 2}, arg in (-pi, pi]; 0 < p <= 1.
struct Wedge {
  double p;
  explicit Wedge(double p_);
};

// Regular m-gon inscribed in the unit circle, one vertex at angle 0.
struct RegularPolygon {
  int m;
  explicit RegularPolygon(int m_);
};

// 2n-gon with alternating vertex angles; mu1 + mu2 = 2/n, both in (0, 1).
// Vertex radii come from the conformal map (see conformal::ngram_radii).
struct NGram {
  int n;
  double mu1;
  double mu2;
  NGram(int n_, double mu1_, double mu2_);
};

// Intersection of the open discs |z - 1| < sqrt(2) and |z + 1| < sqrt(2).
struct Lens {};

struct Ellipse {
  double a;
  double b;
  Ellipse(double a_, double b_);
};

// Axis-aligned rectangle (-a, a) x (-b, b).
struct Rectangle {
  double a;
  double b;
  Rectangle(double a_, double b_);
};

// Vertical strip |x| < a.
struct Strip {
  double a;
  explicit Strip(double a_);
};

// Disc of radius a centered at (a, 0) minus the closed disc of radius b
// centered at the origin; a >= b.
struct CircularCutout {
  double a;
  double b;
  CircularCutout(double a_, double b_);
};

// Side length a, vertex up, centroid at the origin.
struct EquilateralTriangle {
  double a;
  explicit EquilateralTriangle(double a_);
};

// Legs of length a parallel to the axes, hypotenuse on y = -x:
// vertices (a/2, a/2), (a/2, -a/2), (-a/2, a/2).
struct IsoscelesRightTriangle {
  double a;
  explicit IsoscelesRightTriangle(double a_);
};

using DomainSpec = std::variant<Disc, HalfDisc, Wedge, RegularPolygon, NGram, Lens, Ellipse,
                                Rectangle, Strip, CircularCutout, EquilateralTriangle,
                                IsoscelesRightTriangle>;

// Strict interior test.
bool contains(const DomainSpec& domain, const Point2& pt);

// Exact Euclidean distance from an interior point to the boundary.
// Throws std::domain_error if the point is not interior.
double boundary_distance(const DomainSpec& domain, const Point2& pt);

// Counterclockwise vertex list for the polygonal variants; throws
// std::domain_error for non-polygonal domains.
std::vector<Point2> polygon_vertices(const DomainSpec& domain);

// Even-odd ray test / minimum segment distance against an explicit vertex
// list (closed polygon).  Shared by the variant dispatch above and by hot
// loops that prepare the vertex list once.
bool polygon_contains(const std::vector<Point2>& vertices, const Point2& pt);
double polygon_boundary_distance(const std::vector<Point2>& vertices, const Point2& pt);

bool is_polygonal(const DomainSpec& domain);
bool is_bounded(const DomainSpec& domain);

// Natural starting point: the image of the disc center under the conformal
// map where one exists, otherwise the obvious center.
Point2 natural_start(const DomainSpec& domain);

// Axis-aligned box containing the domain (a documented finite window for the
// unbounded wedge and strip), used for grid output and point sampling.
struct BoundingBox {
  double xmin, xmax, ymin, ymax;
};
BoundingBox bounding_box(const DomainSpec& domain);

// Short grammar string, e.g. "disc:r0=1".
std::string domain_name(const DomainSpec& domain);

}  // namespace domains
}  // namespace bmexit

#endif  // BMEXIT_DOMAINS_HPP_
