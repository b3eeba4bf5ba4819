#pragma once

#include <string>
#include <vector>

#include "begraph/profile.hpp"

namespace begraph {

// One CLT-sufficient condition evaluated along a profile sequence.
struct ConditionTrend {
  std::string name;
  std::vector<double> sizes;   // N per profile
  std::vector<double> values;  // condition quantity per profile
  double slope;                // least-squares slope of ln(value) vs ln(N)
  std::string verdict;         // "yes" / "no" / "inconclusive" (trending to 0)
};

struct CltCheckReport {
  std::vector<ConditionTrend> conditions;
  // WLLN extra requirement liminf A_delta(N) > 0, reported per delta as the
  // minimum over the sequence tail (second half).
  std::vector<std::pair<double, double>> wlln_liminf_A;
};

// Evaluates every displayed condition available from the stored moments:
//   delta in (2,3):  xi^-1 ((D+1)/N)^(1/2 - 1/delta)
//   delta >= 3:      the same, plus xi^-3 sqrt((D+1)/N)
//   bounded (L):     (D+1)/v  and  N(D+1)^2/v^3
// Verdict rule: slope < -0.05 -> "yes", slope > 0.05 -> "no", else
// "inconclusive" (documented decision threshold).
CltCheckReport clt_condition_check(const std::vector<MomentProfile>& profiles);

}  // namespace begraph
