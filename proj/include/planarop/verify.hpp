#pragma once

#include <string>
#include <vector>

namespace planarop {

struct Check {
  std::string name;
  double value = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

/// The invariant suite behind `planarop verify`: orthogonality of every
/// family, closed norms, moment laws, contour identity, Selberg identities,
/// recurrence bandwidth, Turan and limit experiments at moderate sizes.
/// Deterministic.
std::vector<Check> run_verification();

bool all_passed(const std::vector<Check>& checks);

}  // namespace planarop
