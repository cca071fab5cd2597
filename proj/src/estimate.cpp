#include "bmexit/estimate.hpp"

namespace bmexit {

const char* to_string(EstimateStatus s) {
  switch (s) {
    case EstimateStatus::ok:
      return "ok";
    case EstimateStatus::divergence_suspected:
      return "divergence-suspected";
    case EstimateStatus::unconverged:
      return "unconverged";
  }
  return "unknown";
}

}  // namespace bmexit
