#ifndef BMEXIT_VERIFY_HPP_
#define BMEXIT_VERIFY_HPP_

#include <string>
#include <vector>

namespace bmexit {
namespace verify {

struct CheckResult {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string note;
};

// The cross-validation identity suite: series/closed-form agreements, the
// classical partial-fraction identities behind the square forms, the log and
// dilogarithm integrals behind the Green route, and the special-function
// reductions.  Pure computation; printing is the caller's concern.
std::vector<CheckResult> run_verification();

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace verify
}  // namespace bmexit

#endif  // BMEXIT_VERIFY_HPP_
