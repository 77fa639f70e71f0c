#pragma once

#include <json.hpp>
#include <string>
#include <vector>

namespace unit_shapes {

/// Outcome of checking one claim over a batch of instances.
///
/// `worst_slack` is the smallest margin seen (negative means violated);
/// `equality_cases` counts instances that met the claim with equality.
struct VerificationReport {
  std::string claim;
  int instances = 0;
  double worst_slack = 0.0;
  int equality_cases = 0;
  std::vector<std::string> counterexamples;

  bool pass() const { return counterexamples.empty(); }

  void record_slack(double slack);
  void fail(std::string description) { counterexamples.push_back(std::move(description)); }
  /// Folds another report's instances and failures into this one.
  void merge(const VerificationReport& other);
};

nlohmann::json to_json(const VerificationReport& report);

}  // namespace unit_shapes
