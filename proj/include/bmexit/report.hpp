#ifndef BMEXIT_REPORT_HPP_
#define BMEXIT_REPORT_HPP_

#include <string>
#include <vector>

#include "bmexit/domains.hpp"
#include "bmexit/estimate.hpp"
#include "bmexit/montecarlo.hpp"

namespace bmexit {
namespace report {

enum class MethodFilter { series, closed, green, montecarlo, all };

struct Discrepancy {
  std::string method_a;
  std::string method_b;
  double abs_diff = 0.0;
  double combined_error = 0.0;  // 3 sigma band when a Monte Carlo row is involved
};

// Per-domain table of estimates from every applicable method at one point,
// plus pairwise discrepancies between the finite estimates.
struct MethodReport {
  std::string domain;
  domains::Point2 point;
  std::vector<ExitTimeEstimate> estimates;
  std::vector<Discrepancy> discrepancies;
};

struct ReportOptions {
  MethodFilter filter = MethodFilter::all;
  mc::McConfig mc_config;
  int series_terms = 60;
  double tol = 1e-9;
};

// The series (conformal-map) route evaluates the exit time at the image of
// the disc center only; its row appears when the requested point matches
// that natural start point.
MethodReport build_report(const domains::DomainSpec& domain, const domains::Point2& pt,
                          const ReportOptions& options);

}  // namespace report
}  // namespace bmexit

#endif  // BMEXIT_REPORT_HPP_
