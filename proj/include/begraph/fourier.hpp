#pragma once

#include <string>
#include <vector>

#include "begraph/family.hpp"
#include "begraph/profile.hpp"
#include "begraph/standardized.hpp"

namespace begraph {

// Right-hand side of the smoothing inequality
//   dkol(X, N(0,1)) <= (1/pi) int_{-T}^{T} |cf(s) - e^{-s^2/2}|/|s| ds
//                      + 24/(T pi sqrt(2 pi)).
// The integrand's removable point at 0 is handled by an analytic O(s^2)
// majorant below |s| < 1e-4, so the result stays an upper bound.
double feller_rhs(const StandardizedLaw& law, double T, double abs_tol = 1e-9);

struct ZonePoint {
  double xi;
  double lhs;  // |E[e^{i xi Z}] e^{xi^2/2} - 1|, Z = (S^(L)-E[S^(L)])/v_L
  double rhs;  // K_L |xi|^3 e^{K_L |xi|^3}
};

struct ZoneReport {
  double zone_edge;  // v_L / (2 e L (D+1))
  double K;          // K_L
  std::vector<ZonePoint> points;
  double max_violation;  // max(lhs - rhs); <= 0 when the lemma holds
};

// Checks the bounded zone-of-control lemma on an exact family that satisfies
// |Y_k - c_k| <= L. Grid points outside the zone raise WrongRegime.
ZoneReport zone_check_bounded(const DiscreteFamily& family, double level,
                              const std::vector<double>& xi_grid);

struct FourierZoneStatus {
  bool ok;
  std::string failed_condition;  // empty when ok
};

// Zone membership for the unbounded-case lemmas at s (delta >= 3 uses the
// two-condition zone; delta in (2,3) the single condition).
FourierZoneStatus fourier_zone(const MomentProfile& profile, double s, double delta);

// The applicable lemma right-hand side bounding |E[e^{isW}] - e^{-s^2/2}|.
// Throws WrongRegime (naming the failed condition) outside the zone.
double fourier_bound_unbounded(const MomentProfile& profile, double s, double delta);

}  // namespace begraph
