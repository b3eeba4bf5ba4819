#pragma once

#include <map>
#include <string>

namespace begraph {

enum class TheoremId {
  Linfty,         // bounded case, max of cumulant and uniform branches
  LinftyRefined,  // bounded case with the third centered moment of S
  DeltaGe3,       // delta in [3, inf)
  Delta23,        // delta in (2, 3)
  ClassicalBE,
  FmnCorollary30,
  Rinott,
  Penrose,
  ChenShao,
  FmnThm39,
  SteinW1,
  UStatBounded,     // 227.5 sqrt(l^2(m+1)/n) Xi_inf^-3
  UStatMoment,      // finite-delta U-statistics corollary
  UStatStationary,  // stationary m-dependent variant
  Volatility,       // realized-volatility corollary
};

const char* theorem_name(TheoremId id);

struct BoundReport {
  TheoremId theorem_id;
  double raw_value = 0.0;     // >= 0, may be +inf
  double clamped_value = 0.0; // min(raw, 1)
  std::string binding_branch;
  bool valid = true;
  std::string validity_notes;
  std::map<std::string, double> metadata;  // e.g. delta, comparison factor, w1

  static BoundReport make(TheoremId id, double raw, std::string branch, bool valid = true,
                          std::string notes = "");
};

}  // namespace begraph
