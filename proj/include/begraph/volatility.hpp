#pragma once

#include <optional>
#include <vector>

#include "begraph/report.hpp"

namespace begraph {

// Irregular-grid variance-rate estimation setup: strictly increasing times
// t_0 = 0 < t_1 < ... < t_n with kappa_k = t_k - t_{k-1}; E[X_k] = 0 and
// V[X_k] = nu kappa_k is assumed by the corollary.
struct VolatilitySpec {
  std::vector<double> times;  // t_1..t_n
  double nu = 0.0;            // true variance rate (when known)
  double delta = 0.0;         // moment order, > 4 for the bound
  std::size_t m = 0;          // dependency degree of (X_k)
  std::optional<double> K;    // lower-bound constant: V[nu_hat] >= K^2/n
  // E|X_i/kappa_i|^delta per i (moment inputs for T); empty = unavailable.
  std::vector<double> abs_moments;

  std::size_t n() const { return times.size(); }
  std::vector<double> kappas() const;
  double t_n() const { return times.empty() ? 0.0 : times.back(); }
  void validate() const;
};

struct VolatilityEstimates {
  double e_hat;    // (1/t_n) sum X_k
  double nu_hat;   // (1/n) sum X_k^2/kappa_k - (t_n/n) e_hat^2
};

// Least-squares estimators; `unbiased` replaces n by n-1 in the denominators.
VolatilityEstimates volatility_estimators(const VolatilitySpec& spec,
                                          const std::vector<double>& increments,
                                          bool unbiased = false);

// T = (2^((delta-1)/2)/n) sum_i (kappa_i^delta + (t_n/n)^delta / 2) E|X_i/kappa_i|^delta.
double volatility_T(const VolatilitySpec& spec);

// Corollary bound on (nu_hat - nu)/sqrt(V[nu_hat]) with tilde delta = delta/2:
//   delta in (4,6):  8.015 (n/(K t_n))^(td/(td+1)) T^(1/(td+1)) (4(m+1))^((td-1)/(td+1)) n^(-(td-2)/(2(td+1)))
//   delta >= 6:      max{18.96 (same shape), 227.5 (n/(K t_n))^3 T^(3/td) (4(m+1))^2 / sqrt(n)}
BoundReport volatility_bound(const VolatilitySpec& spec);

}  // namespace begraph
