#ifndef BMEXIT_DOMAIN_PARSE_HPP_
#define BMEXIT_DOMAIN_PARSE_HPP_

#include <string>

#include "bmexit/domains.hpp"

namespace bmexit {
namespace domains {

// Parses the textual domain grammar:
//
//   disc:r0=<v>          halfdisc:r0=<v>      wedge:p=<v>
//   mgon:m=<int>         ngram:n=<int>,mu1=<v>,mu2=<v>
//   lens                 ellipse:a=<v>,b=<v>  rectangle:a=<v>,b=<v>
//   strip:a=<v>          cutout:a=<v>,b=<v>
//   equilateral:a=<v>    isoright:a=<v>
//
// Keys may appear in any order; every key must be present exactly once.
// Throws std::invalid_argument with a descriptive message on malformed input
// or parameter-constraint violations.
DomainSpec parse_domain(const std::string& text);

}  // namespace domains
}  // namespace bmexit

#endif  // BMEXIT_DOMAIN_PARSE_HPP_
