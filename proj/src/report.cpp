#include "unit_shapes/report.hpp"

#include <algorithm>

namespace unit_shapes {

void VerificationReport::record_slack(double slack) {
  worst_slack = instances == 0 ? slack : std::min(worst_slack, slack);
  ++instances;
}

void VerificationReport::merge(const VerificationReport& other) {
  if (other.instances > 0) {
    worst_slack = instances == 0 ? other.worst_slack : std::min(worst_slack, other.worst_slack);
  }
  instances += other.instances;
  equality_cases += other.equality_cases;
  counterexamples.insert(counterexamples.end(), other.counterexamples.begin(),
                         other.counterexamples.end());
}

nlohmann::json to_json(const VerificationReport& report) {
  return {{"claim", report.claim},
          {"instances", report.instances},
          {"worst_slack", report.worst_slack},
          {"equality_cases", report.equality_cases},
          {"pass", report.pass()},
          {"counterexamples", report.counterexamples}};
}

}  // namespace unit_shapes
