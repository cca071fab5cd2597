// Command-line front end: expected exit times of planar Brownian motion from
// a catalogue of simply connected domains, cross-validated by conformal
// series, closed-form Poisson solutions, Green-function integration, and
// Monte Carlo simulation.

#include <cstdio>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "bmexit/closedform.hpp"
#include "bmexit/conformal.hpp"
#include "bmexit/domain_parse.hpp"
#include "bmexit/domains.hpp"
#include "bmexit/montecarlo.hpp"
#include "bmexit/report.hpp"
#include "bmexit/verify.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitVerification = 4;

struct CommonArgs {
  std::string domain_text;
  std::string point_text;
  std::string method = "all";
  std::string output = "csv";
  long long paths = 100000;
  std::uint64_t seed = 12345;
  std::string mc_method = "wos";
  double step = 1e-4;
  double shell = 1e-5;
  long long max_steps = 10000000;
  double sigma = 3.0;
  int terms = 60;
  double tol = 1e-9;
};

std::uint64_t default_seed() {
  if (const char* env = std::getenv("BMEXIT_SEED")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0') return v;
  }
  return 12345;
}

bmexit::domains::Point2 parse_point(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) {
    throw std::invalid_argument("point must be 'x,y'");
  }
  char* end = nullptr;
  const std::string xs = text.substr(0, comma), ys = text.substr(comma + 1);
  const double x = std::strtod(xs.c_str(), &end);
  if (end == xs.c_str() || *end != '\0') throw std::invalid_argument("bad point x coordinate");
  const double y = std::strtod(ys.c_str(), &end);
  if (end == ys.c_str() || *end != '\0') throw std::invalid_argument("bad point y coordinate");
  return {x, y};
}

bmexit::report::MethodFilter parse_method(const std::string& m) {
  if (m == "series") return bmexit::report::MethodFilter::series;
  if (m == "closed") return bmexit::report::MethodFilter::closed;
  if (m == "green") return bmexit::report::MethodFilter::green;
  if (m == "mc") return bmexit::report::MethodFilter::montecarlo;
  if (m == "all") return bmexit::report::MethodFilter::all;
  throw std::invalid_argument("unknown method '" + m + "'");
}

std::string fmt12(double v) {
  std::ostringstream os;
  os << std::setprecision(12) << v;
  return os.str();
}

bmexit::report::ReportOptions make_options(const CommonArgs& args) {
  bmexit::report::ReportOptions opt;
  opt.filter = parse_method(args.method);
  opt.mc_config.paths = args.paths;
  opt.mc_config.seed = args.seed;
  opt.mc_config.method = (args.mc_method == "euler") ? bmexit::mc::McMethod::euler
                                                     : bmexit::mc::McMethod::walk_on_spheres;
  opt.mc_config.step = args.step;
  opt.mc_config.shell = args.shell;
  opt.mc_config.max_steps = args.max_steps;
  opt.series_terms = args.terms;
  opt.tol = args.tol;
  return opt;
}

json report_to_json(const bmexit::report::MethodReport& rep, double sigma) {
  json j;
  j["schema"] = 1;
  j["domain"] = rep.domain;
  j["point"] = {rep.point.x, rep.point.y};
  j["estimates"] = json::array();
  for (const auto& e : rep.estimates) {
    j["estimates"].push_back({{"method", e.method},
                              {"value", e.value},
                              {"error", e.error},
                              {"count", e.count},
                              {"status", bmexit::to_string(e.status)}});
  }
  j["discrepancies"] = json::array();
  for (const auto& d : rep.discrepancies) {
    j["discrepancies"].push_back({{"method_a", d.method_a},
                                  {"method_b", d.method_b},
                                  {"abs_diff", d.abs_diff},
                                  {"band", d.combined_error / 3.0 * sigma}});
  }
  return j;
}

int run_exit_time(const CommonArgs& args, bool compare_only) {
  const auto domain = bmexit::domains::parse_domain(args.domain_text);
  const auto pt = args.point_text.empty() ? bmexit::domains::natural_start(domain)
                                          : parse_point(args.point_text);
  const auto rep = bmexit::report::build_report(domain, pt, make_options(args));
  if (args.output == "json") {
    std::cout << report_to_json(rep, args.sigma).dump(2) << "\n";
    return kExitOk;
  }
  if (!compare_only) {
    std::cout << "method,value,error,count,status\n";
    for (const auto& e : rep.estimates) {
      std::cout << e.method << "," << fmt12(e.value) << "," << fmt12(e.error) << "," << e.count
                << "," << bmexit::to_string(e.status) << "\n";
    }
  } else {
    std::cout << "method_a,method_b,abs_diff,band\n";
    for (const auto& d : rep.discrepancies) {
      std::cout << d.method_a << "," << d.method_b << "," << fmt12(d.abs_diff) << ","
                << fmt12(d.combined_error / 3.0 * args.sigma) << "\n";
    }
  }
  return kExitOk;
}

int run_field(const std::string& domain_text, int grid, int terms) {
  const auto domain = bmexit::domains::parse_domain(domain_text);
  if (!bmexit::closedform::has_closed_form(domain)) {
    throw std::domain_error("field: no closed-form solution for domain '" + domain_text + "'");
  }
  const auto box = bmexit::domains::bounding_box(domain);
  std::cout << "x,y,u\n";
  for (int iy = 0; iy < grid; ++iy) {
    for (int ix = 0; ix < grid; ++ix) {
      const double x = box.xmin + (box.xmax - box.xmin) * (ix + 0.5) / grid;
      const double y = box.ymin + (box.ymax - box.ymin) * (iy + 0.5) / grid;
      std::cout << fmt12(x) << "," << fmt12(y) << ",";
      if (bmexit::domains::contains(domain, {x, y})) {
        const auto v = bmexit::closedform::field_value(domain, {x, y}, terms);
        if (v) std::cout << fmt12(*v);
      }
      std::cout << "\n";
    }
  }
  return kExitOk;
}

int run_radii(const std::string& domain_text, const std::string& output) {
  const auto domain = bmexit::domains::parse_domain(domain_text);
  const auto* g = std::get_if<bmexit::domains::NGram>(&domain);
  if (!g) throw std::domain_error("radii: domain must be an ngram");
  const auto radii = bmexit::conformal::ngram_radii(g->n, g->mu1, g->mu2);
  if (output == "json") {
    json j;
    j["schema"] = 1;
    j["domain"] = domain_text;
    j["circumradius"] = radii.circumradius;
    j["inradius"] = radii.inradius;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "circumradius,inradius\n"
              << fmt12(radii.circumradius) << "," << fmt12(radii.inradius) << "\n";
  }
  return kExitOk;
}

int run_verify(const std::string& output) {
  const auto results = bmexit::verify::run_verification();
  if (output == "json") {
    json j;
    j["schema"] = 1;
    j["checks"] = json::array();
    for (const auto& r : results) {
      j["checks"].push_back({{"name", r.name},
                             {"residual", r.residual},
                             {"tolerance", r.tolerance},
                             {"pass", r.pass},
                             {"note", r.note}});
    }
    j["all_passed"] = bmexit::verify::all_passed(results);
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& r : results) {
      std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.name << "  residual=" << fmt12(r.residual)
                << " tol=" << fmt12(r.tolerance);
      if (!r.note.empty()) std::cout << "  [" << r.note << "]";
      std::cout << "\n";
    }
  }
  return bmexit::verify::all_passed(results) ? kExitOk : kExitVerification;
}

void add_common(CLI::App* cmd, CommonArgs& args, bool with_point) {
  cmd->add_option("--domain", args.domain_text, "domain spec, e.g. disc:r0=1")->required();
  if (with_point) {
    cmd->add_option("--point", args.point_text, "evaluation point 'x,y' (default: natural start)");
    cmd->add_option("--method", args.method, "series|closed|green|mc|all (default all)");
    cmd->add_option("--output", args.output, "csv|json (default csv)");
    cmd->add_option("--paths", args.paths, "Monte Carlo paths");
    cmd->add_option("--seed", args.seed, "Monte Carlo seed (default from BMEXIT_SEED or 12345)");
    cmd->add_option("--mc-method", args.mc_method, "wos|euler");
    cmd->add_option("--step", args.step, "Euler time step");
    cmd->add_option("--shell", args.shell, "walk-on-spheres absorption distance");
    cmd->add_option("--max-steps", args.max_steps, "per-path step cap");
    cmd->add_option("--sigma", args.sigma, "confidence band multiplier (default 3)");
    cmd->add_option("--terms", args.terms, "series terms for closed-form solutions");
    cmd->add_option("--tol", args.tol, "series tolerance");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"expected exit times of planar Brownian motion"};
  app.require_subcommand(1);

  CommonArgs args;
  args.seed = default_seed();

  auto* cmd_exit = app.add_subcommand("exit-time", "estimates from every applicable method");
  add_common(cmd_exit, args, true);

  auto* cmd_compare = app.add_subcommand("compare", "pairwise discrepancies between methods");
  add_common(cmd_compare, args, true);

  CommonArgs field_args;
  int grid = 65;
  auto* cmd_field = app.add_subcommand("field", "closed-form u on an N x N grid (CSV)");
  cmd_field->add_option("--domain", field_args.domain_text, "domain spec")->required();
  cmd_field->add_option("--grid", grid, "grid resolution N (default 65)");
  cmd_field->add_option("--terms", field_args.terms, "series terms");

  CommonArgs radii_args;
  auto* cmd_radii = app.add_subcommand("radii", "circumradius and inradius of an ngram");
  cmd_radii->add_option("--domain", radii_args.domain_text, "ngram domain spec")->required();
  cmd_radii->add_option("--output", radii_args.output, "csv|json (default csv)");

  std::string verify_output = "text";
  auto* cmd_verify = app.add_subcommand("verify", "run the cross-validation identity suite");
  cmd_verify->add_option("--output", verify_output, "text|json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitParse;
  }

  try {
    if (cmd_exit->parsed()) return run_exit_time(args, false);
    if (cmd_compare->parsed()) return run_exit_time(args, true);
    if (cmd_field->parsed()) return run_field(field_args.domain_text, grid, field_args.terms);
    if (cmd_radii->parsed()) return run_radii(radii_args.domain_text, radii_args.output);
    if (cmd_verify->parsed()) return run_verify(verify_output);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  }
  return kExitOk;
}
