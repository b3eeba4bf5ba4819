#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "begraph/family.hpp"

namespace begraph {

// The moment summary every bound consumes.
//   N, D        family size and graph degree
//   v           standard deviation of S (> 0)
//   A[delta]    sum_k E|Y_k - c_k|^delta, delta >= 2
//   M[delta]    max_k ||Y_k - c_k||_delta
//   L           uniform sup bound on |Y_k - c_k| (delta = infinity case)
//   rho         |E[(S - E S)^3]|
struct MomentProfile {
  std::size_t N = 0;
  std::size_t D = 0;
  double v = 0.0;
  std::map<double, double> A;
  std::map<double, double> M;
  std::optional<double> L;
  std::optional<double> rho;
  CenteringChoice centering = CenteringChoice::mean();
  std::vector<std::string> notes;

  bool has_A(double delta) const { return A.count(delta) > 0; }
  double a(double delta) const;  // throws MissingMoment
  double m(double delta) const;  // throws MissingMoment

  // Enforces the stored invariants:
  //   (A_delta/N)^(1/delta) non-decreasing in delta,
  //   A_delta <= N L^delta when L present,
  //   v^2 <= A_2 (D+1) when A_2 stored.
  // Throws InvalidProfile with a description on violation.
  void validate(double slack = 1e-9) const;
};

// Exact profile of a DiscreteFamily at the requested deltas (all >= 2).
// L is always set (finite laws are bounded); rho is included only when the
// joint support is within the cap, otherwise a note records the omission.
MomentProfile derive_profile(const DiscreteFamily& family, const std::vector<double>& deltas);

// Renormalized standard deviation (N/A_delta)^(1/delta) * sqrt(v^2/(N(D+1))).
double xi(const MomentProfile& profile, double delta);

// Worst-case variant (1/M_delta) * sqrt(v^2/(N(D+1))).
double sigma(const MomentProfile& profile, double delta);

}  // namespace begraph
