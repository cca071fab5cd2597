#ifndef BMEXIT_CLOSEDFORM_HPP_
#define BMEXIT_CLOSEDFORM_HPP_

#include <optional>

#include "bmexit/domains.hpp"

namespace bmexit {
namespace closedform {

// Exact solutions u(x, y) of  laplacian u = -2  with zero boundary data: the
// expected exit time of Brownian motion at every interior point.  Points may
// lie on the closure (boundary values are 0); exterior points throw
// std::domain_error.

// Wedge of half-angle alpha (finite regime alpha < pi/4):
// u = (r^2 / 2) (cos(2 theta) / cos(2 alpha) - 1).
double wedge_u(double r, double theta, double alpha);

// Disc of radius r0: u = (r0^2 - r^2) / 2.
double disc_u(double r, double r0);

// Equilateral triangle of side a, vertex up, centroid at the origin:
// u = (1 / 18a) (2 sqrt(3) y + a)(sqrt(3) y + 3x - a)(sqrt(3) y - 3x - a).
double equilateral_triangle_u(double x, double y, double a);

// Disc of radius a about (a, 0) with the disc of radius b about the origin
// removed: u = -(r^2 - b^2)(1 - 2 a cos(theta) / r) / 2 in polar coordinates.
double circular_cutout_u(double r, double theta, double a, double b);

// Isosceles right triangle, legs of length a on the coordinate axes
// directions, hypotenuse on y = -x.  Fourier series with terms explicit
// terms plus an Euler-transformed tail; sinh ratios are evaluated in
// exp-scaled form so large orders cannot overflow.
double isosceles_right_u(double x, double y, double a, int terms = 60);

// Ellipse x^2/a^2 + y^2/b^2 < 1: u = a^2 b^2 / (a^2 + b^2) (1 - x^2/a^2 - y^2/b^2).
double ellipse_u(double x, double y, double a, double b);

// Rectangle (-a, a) x (-b, b): separation-of-variables series.
double rectangle_u(double x, double y, double a, double b, int terms = 60);

// Strip |x| < a: u = a^2 - x^2.
double strip_u(double x, double a);

// Expected exit time from the center of the square inscribed in the unit
// circle, by three routes that must agree: a 4F3 evaluation, the double
// alternating sine series, and the single sech-type series.
enum class SquareForm { hypergeometric, double_sine, single_series };
double square_center_exit_time(SquareForm form, double tol = 1e-9);

// Closed-form value for domains that have one; std::nullopt otherwise.
std::optional<double> field_value(const domains::DomainSpec& domain, const domains::Point2& pt,
                                  int terms = 60);

struct FieldQuery {
  domains::DomainSpec domain;
  domains::Point2 point;
  int series_terms = 60;
};

// Validating overload: the point must be interior and series_terms >= 1.
std::optional<double> field_value(const FieldQuery& query);

// True if the domain has a closed-form solution implemented here.
bool has_closed_form(const domains::DomainSpec& domain);

}  // namespace closedform
}  // namespace bmexit

#endif  // BMEXIT_CLOSEDFORM_HPP_
