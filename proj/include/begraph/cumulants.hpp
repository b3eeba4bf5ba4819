#pragma once

#include <optional>
#include <vector>

#include "begraph/family.hpp"
#include "begraph/profile.hpp"

namespace begraph {

// Standard moment <-> cumulant recursion,
//   kappa_r = m_r - sum_{j=1}^{r-1} C(r-1, j-1) kappa_j m_{r-j}.
// Input/output vectors are 1-based in meaning: v[0] is order 1.
std::vector<double> raw_moments_to_cumulants(const std::vector<double>& raw);
std::vector<double> cumulants_to_raw_moments(const std::vector<double>& cum);

// Exact r-th cumulant of S via exact raw moments and the recursion above.
// Orders above 12 are refused (alternating cancellation makes the recursion
// unreliable there).
double cumulant_of_sum(const DiscreteFamily& family, int r);

// Lemma bound  r^(r-2) (2(D+1))^(r-1) L^r A_delta / L^delta  on |kappa^(r)(S^(L))|.
double lemma_cumulant_bound(const MomentProfile& profile, int r, double delta, double level);

struct TruncationContext {
  DiscreteFamily family;     // the original family
  DiscreteFamily truncated;  // Y_k -> c_k + (Y_k-c_k) 1{|Y_k-c_k| <= L}
  double level;
  double v_trunc;            // sqrt(V[S^(L)])

  static TruncationContext make(const DiscreteFamily& family, double level);
};

struct TruncationShifts {
  double mean_shift_bound;                        // L^(1-delta) A_delta
  double variance_shift_bound;                    // 3 L^(2-delta) (D+1) A_delta
  std::optional<double> third_cumulant_shift_bound;  // 21 (D+1)^2 L^3 A_delta/L^delta, delta > 3 only
  double true_mean_shift;                         // |E[S] - E[S^(L)]|
  double true_variance_shift;                     // |V[S] - V[S^(L)]|
  double true_third_cumulant_shift;               // |kappa3(S) - kappa3(S^(L))|
};

TruncationShifts truncation_shifts(const TruncationContext& ctx, double delta);

struct Enclosure {
  double lo;
  double hi;
  double width() const { return hi - lo; }
  bool contains(double x) const { return lo <= x && x <= hi; }
};

// C = 4 e^3 sum_{r>=3} r^(r-2)/(r! e^r), enclosed to width <= 1e-11.
Enclosure constant_C();
// C'' = 2 e (C - 2).
Enclosure constant_C_second();

struct ProofConstants {
  Enclosure B;     // 2e (4 pi e^2/(8e+3)) (C sqrt(6 pi)/(6 e pi) + 24/(pi sqrt(2 pi)))
  double chi;      // sup over delta in (2,3) of the Thm-2.4 prefactor
  double alpha0;   // argmin of (1-a)^(-3/2) + 24/(pi a) on (0,1)
  double I;        // the minimum value
};

ProofConstants proof_constants();

}  // namespace begraph
