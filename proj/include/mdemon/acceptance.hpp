#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mdemon::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

/// Box-ground-state partition cost (L = 2, left side) from the continuous
/// momentum-space quadrature at 10x the default momentum resolution.
inline constexpr double kEigenstatePartitionDeltaS = 1.0742750328;

CriterionResult partition_cost_exactness();
CriterionResult gaussian_entropy_cross_check();
CriterionResult entropic_uncertainty_corpus();
CriterionResult eigenstate_lower_bound();
CriterionResult free_expansion();
CriterionResult second_law_monte_carlo();
CriterionResult piston_reset();
CriterionResult speed_demon_boundary();
CriterionResult scaling_invariance();

std::vector<CriterionResult> run_all();

/// One "PASS|FAIL [n] name: detail (time)" line per criterion; returns true if all passed.
bool report(const std::vector<CriterionResult>& results, std::ostream& out);

}  // namespace mdemon::acceptance
