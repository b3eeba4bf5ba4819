#include "begraph/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "begraph/errors.hpp"

namespace begraph {

namespace {
constexpr double kPi = 3.14159265358979323846;
}  // namespace

const char* theorem_name(TheoremId id) {
  switch (id) {
    case TheoremId::Linfty: return "linfty";
    case TheoremId::LinftyRefined: return "linfty_refined";
    case TheoremId::DeltaGe3: return "delta_ge3";
    case TheoremId::Delta23: return "delta_2_3";
    case TheoremId::ClassicalBE: return "classical_be";
    case TheoremId::FmnCorollary30: return "fmn_corollary30";
    case TheoremId::Rinott: return "rinott";
    case TheoremId::Penrose: return "penrose";
    case TheoremId::ChenShao: return "chen_shao";
    case TheoremId::FmnThm39: return "fmn_thm39";
    case TheoremId::SteinW1: return "stein_w1";
    case TheoremId::UStatBounded: return "ustat_bounded";
    case TheoremId::UStatMoment: return "ustat_moment";
    case TheoremId::UStatStationary: return "ustat_stationary";
    case TheoremId::Volatility: return "volatility";
  }
  return "?";
}

BoundReport BoundReport::make(TheoremId id, double raw, std::string branch, bool valid,
                              std::string notes) {
  BoundReport r;
  r.theorem_id = id;
  r.raw_value = raw;
  r.clamped_value = std::min(raw, 1.0);
  r.binding_branch = std::move(branch);
  r.valid = valid;
  r.validity_notes = std::move(notes);
  return r;
}

namespace {

void require_v(const MomentProfile& p) {
  if (!(p.v > 0.0)) throw DegenerateVariance("bound requires v > 0");
}

double require_L(const MomentProfile& p) {
  if (!p.L) throw MissingMoment("bound requires the uniform bound L");
  return *p.L;
}

}  // namespace

BoundReport bound_linfty(const MomentProfile& p) {
  require_v(p);
  const double L = require_L(p);
  const double a3 = p.a(3.0);
  const double dp1 = double(p.D + 1);
  const double cumulant_term = 68.5 * dp1 * dp1 * a3 / (p.v * p.v * p.v);
  const double uniform_term = 22.88 * L * dp1 / p.v;
  const bool cumulant_wins = cumulant_term >= uniform_term;
  BoundReport r = BoundReport::make(TheoremId::Linfty, std::max(cumulant_term, uniform_term),
                                    cumulant_wins ? "cumulant" : "uniform");
  r.metadata["cumulant_term"] = cumulant_term;
  r.metadata["uniform_term"] = uniform_term;
  return r;
}

BoundReport bound_linfty_refined(const MomentProfile& p) {
  require_v(p);
  const double L = require_L(p);
  const double a4 = p.a(4.0);
  if (!p.rho) throw MissingMoment("bound requires rho = |E[(S-E S)^3]|");
  const double rho = *p.rho;
  const double dp1 = double(p.D + 1);
  const double v3 = p.v * p.v * p.v;
  const double v4 = v3 * p.v;
  const double quartic = dp1 * dp1 * dp1 * a4 / v4;
  const double uniform_term = 16.57 * L * dp1 / p.v;
  const double moment_term = 22.47 * std::sqrt(quartic) + 1.596 * rho / v3;
  const bool uniform_wins = uniform_term >= moment_term;
  const double raw = 0.607148 * rho / v3 + 116.84 * quartic + std::max(uniform_term, moment_term);
  BoundReport r = BoundReport::make(TheoremId::LinftyRefined, raw,
                                    uniform_wins ? "uniform" : "moment");
  r.metadata["comparison_factor"] =
      p.centering.mode == CenteringMode::Mean ? 0.85771 : 1.06164;
  return r;
}

BoundReport bound_delta_ge3(const MomentProfile& p, double delta) {
  if (!(delta >= 3.0)) throw WrongRegime("theorem stated for delta in [3, inf)");
  require_v(p);
  const double x = xi(p, delta);
  const double ratio = double(p.D + 1) / double(p.N);
  const double first =
      18.96 * std::pow(x, -delta / (delta + 1.0)) * std::pow(ratio, (delta - 2.0) / (2.0 * (delta + 1.0)));
  const double second = 227.5 * std::sqrt(ratio) / (x * x * x);
  BoundReport r = BoundReport::make(TheoremId::DeltaGe3, std::max(first, second),
                                    first >= second ? "first" : "second");
  r.metadata["delta"] = delta;
  r.metadata["xi"] = x;
  return r;
}

BoundReport bound_delta_2_3(const MomentProfile& p, double delta) {
  if (!(delta > 2.0 && delta < 3.0)) throw WrongRegime("theorem stated for delta in (2, 3)");
  require_v(p);
  const double x = xi(p, delta);
  const double raw = 8.015 * std::pow(x, -delta / (delta + 1.0)) *
                     std::pow(double(p.D + 1) / double(p.N), (delta - 2.0) / (2.0 * (delta + 1.0)));
  BoundReport r = BoundReport::make(TheoremId::Delta23, raw, "only");
  r.metadata["delta"] = delta;
  r.metadata["xi"] = x;
  return r;
}

BestBound best_bound(const MomentProfile& p) {
  require_v(p);
  std::vector<BoundReport> candidates;
  const auto consider = [&](auto&& fn) {
    try {
      candidates.push_back(fn());
    } catch (const MissingMoment&) {
    } catch (const WrongRegime&) {
    }
  };
  consider([&] { return bound_linfty(p); });
  consider([&] { return bound_linfty_refined(p); });
  for (const auto& [delta, a] : p.A) {
    (void)a;
    if (delta >= 3.0)
      consider([&, d = delta] { return bound_delta_ge3(p, d); });
    else if (delta > 2.0)
      consider([&, d = delta] { return bound_delta_2_3(p, d); });
  }
  if (candidates.empty()) throw NoApplicableBound("no theorem applies to the stored moments");
  std::size_t best = 0;
  for (std::size_t i = 1; i < candidates.size(); ++i) {
    const auto& a = candidates[i];
    const auto& b = candidates[best];
    if (a.clamped_value < b.clamped_value ||
        (a.clamped_value == b.clamped_value && a.raw_value < b.raw_value))
      best = i;
  }
  return {candidates[best], candidates};
}

namespace {

// Largest stored delta in (lo, hi] with an M entry, if any.
std::optional<double> pick_m_delta(const MomentProfile& p, double lo, double hi) {
  std::optional<double> out;
  for (const auto& [delta, m] : p.M) {
    (void)m;
    if (delta > lo && delta <= hi) out = delta;
  }
  return out;
}

}  // namespace

BoundReport baseline(const MomentProfile& p, Baseline which, std::optional<double> delta) {
  require_v(p);
  const double dp1 = double(p.D + 1);
  const double v2 = p.v * p.v;
  const double v3 = v2 * p.v;
  switch (which) {
    case Baseline::ClassicalBE: {
      if (p.D != 0) throw WrongRegime("classical Berry-Esseen requires an empty graph (D=0)");
      return BoundReport::make(TheoremId::ClassicalBE, 0.5583 * p.a(3.0) / v3, "only");
    }
    case Baseline::FmnCorollary30: {
      const double L = require_L(p);
      return BoundReport::make(TheoremId::FmnCorollary30,
                               76.36 * L * L * L * double(p.N) * dp1 * dp1 / v3, "only");
    }
    case Baseline::Rinott: {
      const double L = require_L(p);
      const double raw = (dp1 * L + std::sqrt(double(p.N)) / p.v * std::pow(dp1, 1.5) * L * L +
                          double(p.N) / v2 * dp1 * dp1 * L * L * L) /
                         p.v;
      return BoundReport::make(TheoremId::Rinott, raw, "only", false,
                               "up to absolute constant; lowercase n in the source read as N");
    }
    case Baseline::Penrose: {
      const double a3 = p.a(3.0);
      const double a4 = p.a(4.0);
      std::string note;
      if (p.centering.mode != CenteringMode::Mean)
        note = "stated for mean-centered moments; profile uses another centering";
      const double raw =
          6.0 * dp1 / std::pow(v2, 0.75) * std::sqrt(a3) + 6.0 * std::pow(dp1, 1.5) / v2 * std::sqrt(a4);
      return BoundReport::make(TheoremId::Penrose, raw, "only", true, note);
    }
    case Baseline::ChenShao: {
      if (p.centering.mode != CenteringMode::Zero)
        throw WrongRegime("chen_shao is stated for zero centering (E[Y_k] = 0, theta = M_delta)");
      const std::optional<double> d = delta ? delta : pick_m_delta(p, 2.0, 3.0);
      if (!d) throw MissingMoment("chen_shao needs M_delta for some delta in (2,3]");
      if (!(*d > 2.0 && *d <= 3.0)) throw WrongRegime("chen_shao requires delta in (2,3]");
      const double sd = sigma(p, *d);
      const double raw = 75.0 * std::pow(sd, -*d) *
                         std::pow(dp1 / double(p.N), 0.5 * (*d - 2.0)) * std::pow(dp1, 4.0 * *d - 4.0);
      BoundReport r = BoundReport::make(TheoremId::ChenShao, raw, "only");
      r.metadata["delta"] = *d;
      return r;
    }
    case Baseline::FmnThm39: {
      const std::optional<double> d =
          delta ? delta : pick_m_delta(p, 6.0, std::numeric_limits<double>::infinity());
      if (!d) throw MissingMoment("fmn_thm39 needs M_delta for some delta > 6");
      if (!(*d > 6.0)) throw WrongRegime("fmn_thm39 requires delta > 6");
      const double A = p.m(*d);
      const double cond = std::pow(double(p.N), (3.0 + *d) / (3.0 * *d)) * std::pow(dp1, 2.0 / 3.0) / p.v;
      const double raw = std::pow(A * cond, 3.0 * *d / (*d + 3.0));
      BoundReport r = BoundReport::make(TheoremId::FmnThm39, raw, "only", false,
                                        "up to absolute constant; condition value in metadata");
      r.metadata["delta"] = *d;
      r.metadata["fmn2_condition"] = cond;
      return r;
    }
    case Baseline::SteinW1: {
      const double a3 = p.a(3.0);
      const double a4 = p.a(4.0);
      const double Dd = double(p.D);
      const double w1 = Dd * Dd / v3 * a3 + std::sqrt(26.0 / kPi) * std::pow(Dd, 1.5) / v2 * std::sqrt(a4);
      const double raw = 2.0 * std::sqrt(w1 / std::sqrt(2.0 * kPi));
      std::string note = "dkol derived via dkol <= 2 sqrt(W1/sqrt(2pi))";
      if (p.D == 0) note += "; formula degenerates to 0 at D=0";
      BoundReport r = BoundReport::make(TheoremId::SteinW1, raw, "only", true, note);
      r.metadata["w1"] = w1;
      return r;
    }
  }
  throw Error("unknown baseline");
}

}  // namespace begraph
