#ifndef BMEXIT_CONFORMAL_HPP_
#define BMEXIT_CONFORMAL_HPP_

#include <complex>
#include <utility>
#include <vector>

#include "bmexit/estimate.hpp"

namespace bmexit {
namespace conformal {

using Complex = std::complex<double>;

// Truncated Maclaurin coefficient sequence a_0 .. a_M of a disc map.
struct PowerSeries {
  std::vector<Complex> coeffs;

  PowerSeries() = default;
  explicit PowerSeries(std::vector<Complex> c);

  int order() const { return static_cast<int>(coeffs.size()) - 1; }
  Complex evaluate(Complex z) const;  // Horner
};

// --- power-series arithmetic -------------------------------------------------
// All map coefficients below are produced by these primitives; the printed
// closed forms serve as test oracles only.

// (1 + scale * z^power)^alpha truncated at order M.
PowerSeries binomial_series(double alpha, Complex scale, int power, int M);
PowerSeries multiply(const PowerSeries& a, const PowerSeries& b, int M);
PowerSeries add(const PowerSeries& a, const PowerSeries& b);
PowerSeries scale(const PowerSeries& a, Complex factor);
// 1 / (z - 1) * a(z) = -a(z) * sum z^k, i.e. negated cumulative sums.
PowerSeries divide_by_z_minus_one(const PowerSeries& a, int M);
PowerSeries integrate_termwise(const PowerSeries& a);  // antiderivative, constant 0

// --- exit-time functional ----------------------------------------------------

// Expected exit time from the image domain for Brownian motion started at the
// image of the disc center: half the sum of |a_n|^2 over n >= 1.
// The error field carries a geometric tail bound fitted to the decay of
// |a_n|^2 over the last decade of indices.  The estimate is flagged
// divergence-suspected when |a_n|^2 fails to decrease over the last 100
// nonzero indices or when the fitted tail exceeds tol * value.
ExitTimeEstimate exit_time_from_coefficients(const PowerSeries& series, double tol = 1e-9);

// --- wedge {|arg z| < pi p / 2} ---------------------------------------------

// Coefficients of (1 + z)^q / (1 - z)^p by Cauchy product of the two binomial
// expansions.
PowerSeries wedge_coefficients(double p, double q, int M);

// Exit time from the point 1 inside the wedge of half-angle pi p / 2.
// Finite iff p < 1/2 (value (sec(pi p) - 1)/2); p >= 1/2 reports
// divergence-suspected.  The coefficient sum decays like m^{2p-2}, so the
// truncated sum is finished with a fitted algebraic tail.
ExitTimeEstimate wedge_exit_time(double p, double tol = 1e-9);

// --- upper half disc ----------------------------------------------------------

// Maclaurin coefficients of i (1 + z - sqrt(2) sqrt(1 + z^2)) / (z - 1),
// the disc -> upper-half-disc map; a_0 = i (sqrt(2) - 1).
PowerSeries halfdisc_coefficients(int M);

// --- 2n-gon with alternating angles ------------------------------------------

struct NGramRadii {
  double circumradius = 0.0;  // R
  double inradius = 0.0;      // R_D
};

// Coefficients of the Schwarz-Christoffel map: nonzero only at indices
// 1 (mod n), leading coefficient 1.
PowerSeries ngram_coefficients(int n, double mu1, double mu2, int M);

ExitTimeEstimate ngram_exit_time(int n, double mu1, double mu2, double tol = 1e-9);

// Vertex distances via two routes (gamma-prefactored 2F1 sums and the
// two-variable hypergeometric integral at the prevertices) with a 1e-9
// cross-check; R = max, R_D = min.
NGramRadii ngram_radii(int n, double mu1, double mu2);

// (radius at prevertex angles 2*pi*k/n, radius at odd prevertex angles);
// used to build the polygon vertex list.
std::pair<double, double> ngram_vertex_radii(int n, double mu1, double mu2);

// --- regular m-gon inscribed in the unit circle --------------------------------

ExitTimeEstimate mgon_exit_time(int m, double tol = 1e-9);

// --- lens {|z - 1| < sqrt(2)} ∩ {|z + 1| < sqrt(2)} ---------------------------

// Coefficients of (-1 + sqrt(1 + w^2)) / w: binomial coefficients at odd
// indices, zero elsewhere.
PowerSeries lens_coefficients(int M);

// Forward map w = 2 z / (1 - z^2); z = +-1 rejected.
Complex lens_forward_map(Complex z);

}  // namespace conformal
}  // namespace bmexit

#endif  // BMEXIT_CONFORMAL_HPP_
