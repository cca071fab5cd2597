#ifndef BMEXIT_ESTIMATE_HPP_
#define BMEXIT_ESTIMATE_HPP_

#include <string>

namespace bmexit {

enum class EstimateStatus {
  ok,
  divergence_suspected,
  unconverged,
};

// One expected-exit-time value with its provenance: which method produced it,
// an error indicator (truncation bound or Monte Carlo standard error), and
// the term or path count behind it.
struct ExitTimeEstimate {
  double value = 0.0;
  std::string method;
  double error = 0.0;
  long long count = 0;
  EstimateStatus status = EstimateStatus::ok;

  bool ok() const { return status == EstimateStatus::ok; }
};

const char* to_string(EstimateStatus s);

}  // namespace bmexit

#endif  // BMEXIT_ESTIMATE_HPP_
