#pragma once

#include <optional>
#include <vector>

#include "begraph/profile.hpp"
#include "begraph/report.hpp"

namespace begraph {

// max{ 68.5 (D+1)^2 A_3 / v^3 , 22.88 L (D+1) / v }.
BoundReport bound_linfty(const MomentProfile& profile);

// 0.607148 rho/v^3 + 116.84 (D+1)^3 A_4 / v^4
//   + max{ 16.57 L(D+1)/v , 22.47 sqrt((D+1)^3 A_4/v^4) + 1.596 rho/v^3 }.
// Metadata carries the comparison factor against bound_linfty
// (1.06164 in general, 0.85771 under mean centering).
BoundReport bound_linfty_refined(const MomentProfile& profile);

// delta in [3, inf):
// max{ 18.96 xi^(-d/(d+1)) ((D+1)/N)^((d-2)/(2(d+1))) , 227.5 xi^-3 sqrt((D+1)/N) }.
BoundReport bound_delta_ge3(const MomentProfile& profile, double delta);

// delta in (2, 3): 8.015 xi^(-d/(d+1)) ((D+1)/N)^((d-2)/(2(d+1))).
BoundReport bound_delta_2_3(const MomentProfile& profile, double delta);

struct BestBound {
  BoundReport best;
  std::vector<BoundReport> candidates;
};

// Minimum clamped value over the applicable theorems given the stored moments
// (ties: smaller raw value, then declaration order). Throws NoApplicableBound
// when nothing applies.
BestBound best_bound(const MomentProfile& profile);

enum class Baseline {
  ClassicalBE,     // 0.5583 A_3 / v^3, requires D = 0
  FmnCorollary30,  // 76.36 L^3 N (D+1)^2 / v^3
  Rinott,          // comparative (constant 1), n read as N
  Penrose,         // 6(D+1)/v^(3/2) sqrt(A_3) + 6(D+1)^(3/2)/v^2 sqrt(A_4)
  ChenShao,        // 75 sigma_d^-d ((D+1)/N)^((d-2)/2) (D+1)^(4d-4), zero centering
  FmnThm39,        // comparative (constant 1), delta > 6
  SteinW1,         // Wasserstein-1 bound plus derived dkol <= 2 sqrt(W1/sqrt(2pi))
};

// Evaluates the cited literature bound. `delta` selects the moment order for
// chen_shao / fmn_thm39 (default: the best stored applicable order).
BoundReport baseline(const MomentProfile& profile, Baseline which,
                     std::optional<double> delta = std::nullopt);

}  // namespace begraph
