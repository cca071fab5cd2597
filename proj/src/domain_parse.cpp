#include "bmexit/domain_parse.hpp"

#include <cstdlib>
#include <map>
#include <sstream>
#include <stdexcept>

namespace bmexit {
namespace domains {

namespace {

std::map<std::string, double> parse_params(const std::string& text) {
  std::map<std::string, double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("domain parameter '" + item + "' is not key=value");
    }
    const std::string key = item.substr(0, eq);
    const std::string val = item.substr(eq + 1);
    char* end = nullptr;
    const double v = std::strtod(val.c_str(), &end);
    if (end == val.c_str() || *end != '\0') {
      throw std::invalid_argument("domain parameter '" + key + "' has non-numeric value '" +
                                  val + "'");
    }
    if (!out.emplace(key, v).second) {
      throw std::invalid_argument("domain parameter '" + key + "' repeated");
    }
  }
  return out;
}

double take(std::map<std::string, double>& params, const std::string& key) {
  const auto it = params.find(key);
  if (it == params.end()) {
    throw std::invalid_argument("missing domain parameter '" + key + "'");
  }
  const double v = it->second;
  params.erase(it);
  return v;
}

void expect_empty(const std::map<std::string, double>& params) {
  if (!params.empty()) {
    throw std::invalid_argument("unknown domain parameter '" + params.begin()->first + "'");
  }
}

}  // namespace

DomainSpec parse_domain(const std::string& text) {
  const auto colon = text.find(':');
  const std::string name = text.substr(0, colon);
  auto params = (colon == std::string::npos) ? std::map<std::string, double>{}
                                             : parse_params(text.substr(colon + 1));
  if (name == "disc") {
    const double r0 = take(params, "r0");
    expect_empty(params);
    return Disc(r0);
  }
  if (name == "halfdisc") {
    const double r0 = take(params, "r0");
    expect_empty(params);
    return HalfDisc(r0);
  }
  if (name == "wedge") {
    const double p = take(params, "p");
    expect_empty(params);
    return Wedge(p);
  }
  if (name == "mgon") {
    const double m = take(params, "m");
    expect_empty(params);
    if (m != static_cast<int>(m)) throw std::invalid_argument("mgon: m must be an integer");
    return RegularPolygon(static_cast<int>(m));
  }
  if (name == "ngram") {
    const double n = take(params, "n");
    const double mu1 = take(params, "mu1");
    const double mu2 = take(params, "mu2");
    expect_empty(params);
    if (n != static_cast<int>(n)) throw std::invalid_argument("ngram: n must be an integer");
    return NGram(static_cast<int>(n), mu1, mu2);
  }
  if (name == "lens") {
    expect_empty(params);
    return Lens{};
  }
  if (name == "ellipse") {
    const double a = take(params, "a");
    const double b = take(params, "b");
    expect_empty(params);
    return Ellipse(a, b);
  }
  if (name == "rectangle") {
    const double a = take(params, "a");
    const double b = take(params, "b");
    expect_empty(params);
    return Rectangle(a, b);
  }
  if (name == "strip") {
    const double a = take(params, "a");
    expect_empty(params);
    return Strip(a);
  }
  if (name == "cutout") {
    const double a = take(params, "a");
    const double b = take(params, "b");
    expect_empty(params);
    return CircularCutout(a, b);
  }
  if (name == "equilateral") {
    const double a = take(params, "a");
    expect_empty(params);
    return EquilateralTriangle(a);
  }
  if (name == "isoright") {
    const double a = take(params, "a");
    expect_empty(params);
    return IsoscelesRightTriangle(a);
  }
  throw std::invalid_argument("unknown domain '" + name + "'");
}

}  // namespace domains
}  // namespace bmexit
