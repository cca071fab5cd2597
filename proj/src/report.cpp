#include "bmexit/report.hpp"

#include <cmath>
#include <optional>

#include "bmexit/closedform.hpp"
#include "bmexit/conformal.hpp"
#include "bmexit/greenfn.hpp"

namespace bmexit {
namespace report {

namespace {

bool near(const domains::Point2& a, const domains::Point2& b, double scale) {
  return std::hypot(a.x - b.x, a.y - b.y) <= 1e-9 * std::max(1.0, scale);
}

bool wants(MethodFilter f, MethodFilter m) { return f == MethodFilter::all || f == m; }

std::optional<ExitTimeEstimate> series_estimate(const domains::DomainSpec& domain,
                                                const domains::Point2& pt, double tol) {
  using namespace domains;
  const Point2 start = natural_start(domain);
  if (const auto* d = std::get_if<Disc>(&domain)) {
    if (!near(pt, start, d->r0)) return std::nullopt;
    conformal::PowerSeries identity(std::vector<std::complex<double>>{0.0, d->r0});
    return conformal::exit_time_from_coefficients(identity, tol);
  }
  if (const auto* w = std::get_if<Wedge>(&domain)) {
    if (!near(pt, start, 1.0)) return std::nullopt;
    return conformal::wedge_exit_time(w->p, tol);
  }
  if (const auto* h = std::get_if<HalfDisc>(&domain)) {
    if (!near(pt, start, h->r0)) return std::nullopt;
    auto series = conformal::halfdisc_coefficients(32768);
    for (auto& c : series.coeffs) c *= h->r0;
    return conformal::exit_time_from_coefficients(series, tol);
  }
  if (std::holds_alternative<Lens>(domain)) {
    if (!near(pt, start, 1.0)) return std::nullopt;
    return conformal::exit_time_from_coefficients(conformal::lens_coefficients(65536), tol);
  }
  if (const auto* p = std::get_if<RegularPolygon>(&domain)) {
    if (!near(pt, start, 1.0)) return std::nullopt;
    return conformal::mgon_exit_time(p->m, tol);
  }
  if (const auto* g = std::get_if<NGram>(&domain)) {
    if (!near(pt, start, 1.0)) return std::nullopt;
    return conformal::ngram_exit_time(g->n, g->mu1, g->mu2, tol);
  }
  return std::nullopt;
}

std::optional<ExitTimeEstimate> green_estimate(const domains::DomainSpec& domain,
                                               const domains::Point2& pt) {
  using namespace domains;
  if (const auto* d = std::get_if<Disc>(&domain)) {
    ExitTimeEstimate e;
    e.method = "green";
    e.value = greenfn::disc_exit_time_via_green(std::hypot(pt.x, pt.y), d->r0);
    e.error = 1e-12;
    return e;
  }
  if (const auto* h = std::get_if<HalfDisc>(&domain)) {
    // scale to the unit half disc, evaluate, scale the time back
    const double r = std::hypot(pt.x, pt.y) / h->r0;
    const double theta = std::atan2(pt.y, pt.x);
    auto e = greenfn::halfdisc_exit_time({r, theta}, 1.0);
    e.value *= h->r0 * h->r0;
    e.error *= h->r0 * h->r0;
    return e;
  }
  return std::nullopt;
}

}  // namespace

MethodReport build_report(const domains::DomainSpec& domain, const domains::Point2& pt,
                          const ReportOptions& options) {
  MethodReport out;
  out.domain = domains::domain_name(domain);
  out.point = pt;

  if (!domains::contains(domain, pt)) {
    throw std::domain_error("build_report: point is not interior to the domain");
  }

  if (wants(options.filter, MethodFilter::series)) {
    if (auto e = series_estimate(domain, pt, options.tol)) {
      e->method = "series";
      out.estimates.push_back(*e);
    }
  }
  if (wants(options.filter, MethodFilter::closed)) {
    if (auto v = closedform::field_value(domain, pt, options.series_terms)) {
      ExitTimeEstimate e;
      e.method = "closed";
      e.value = *v;
      e.error = 1e-10;
      e.count = options.series_terms;
      out.estimates.push_back(e);
    }
  }
  if (wants(options.filter, MethodFilter::green)) {
    if (auto e = green_estimate(domain, pt)) {
      e->method = "green";
      out.estimates.push_back(*e);
    }
  }
  if (wants(options.filter, MethodFilter::montecarlo)) {
    const auto r = mc::simulate(domain, pt, options.mc_config);
    ExitTimeEstimate e;
    e.method = "mc";
    e.value = r.mean;
    e.error = r.std_error;
    e.count = r.paths_used;
    out.estimates.push_back(e);
  }

  for (std::size_t i = 0; i < out.estimates.size(); ++i) {
    for (std::size_t j = i + 1; j < out.estimates.size(); ++j) {
      const auto& a = out.estimates[i];
      const auto& b = out.estimates[j];
      if (!a.ok() || !b.ok()) continue;
      Discrepancy d;
      d.method_a = a.method;
      d.method_b = b.method;
      d.abs_diff = std::abs(a.value - b.value);
      const bool mc_involved = (a.method == "mc") || (b.method == "mc");
      d.combined_error = mc_involved ? 3.0 * std::hypot(a.error, b.error)
                                     : a.error + b.error;
      out.discrepancies.push_back(d);
    }
  }
  return out;
}

}  // namespace report
}  // namespace bmexit
