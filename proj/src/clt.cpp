#include "begraph/clt.hpp"

#include <algorithm>
#include <cmath>

#include "begraph/errors.hpp"
#include "begraph/numerics.hpp"

namespace begraph {

namespace {

std::string verdict_of(double slope) {
  if (slope < -0.05) return "yes";
  if (slope > 0.05) return "no";
  return "inconclusive";
}

ConditionTrend make_trend(std::string name, const std::vector<MomentProfile>& profiles,
                          const std::function<double(const MomentProfile&)>& value) {
  ConditionTrend t;
  t.name = std::move(name);
  std::vector<double> lx, ly;
  for (const auto& p : profiles) {
    const double v = value(p);
    t.sizes.push_back(double(p.N));
    t.values.push_back(v);
    lx.push_back(std::log(double(p.N)));
    ly.push_back(std::log(v));
  }
  t.slope = fit_slope(lx, ly);
  t.verdict = verdict_of(t.slope);
  return t;
}

std::string fmt_delta(double d) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", d);
  return buf;
}

}  // namespace

CltCheckReport clt_condition_check(const std::vector<MomentProfile>& profiles) {
  if (profiles.size() < 3) throw Insufficient("clt_condition_check needs at least 3 profiles");
  CltCheckReport rep;

  // deltas stored in every profile
  std::vector<double> common;
  for (const auto& [delta, a] : profiles.front().A) {
    (void)a;
    bool everywhere = true;
    for (const auto& p : profiles) everywhere = everywhere && p.has_A(delta);
    if (everywhere && delta > 2.0) common.push_back(delta);
  }

  for (double d : common) {
    rep.conditions.push_back(make_trend(
        "xi^-1 ((D+1)/N)^(1/2-1/delta), delta=" + fmt_delta(d), profiles,
        [d](const MomentProfile& p) {
          return std::pow(double(p.D + 1) / double(p.N), 0.5 - 1.0 / d) / xi(p, d);
        }));
    if (d >= 3.0) {
      rep.conditions.push_back(make_trend(
          "xi^-3 sqrt((D+1)/N), delta=" + fmt_delta(d), profiles, [d](const MomentProfile& p) {
            const double x = xi(p, d);
            return std::sqrt(double(p.D + 1) / double(p.N)) / (x * x * x);
          }));
    }
  }

  bool all_bounded = true;
  for (const auto& p : profiles) all_bounded = all_bounded && p.L.has_value();
  if (all_bounded) {
    rep.conditions.push_back(make_trend("(D+1)/v", profiles, [](const MomentProfile& p) {
      return double(p.D + 1) / p.v;
    }));
    rep.conditions.push_back(make_trend("N(D+1)^2/v^3", profiles, [](const MomentProfile& p) {
      return double(p.N) * double(p.D + 1) * double(p.D + 1) / (p.v * p.v * p.v);
    }));
  }

  for (double d : common) {
    double liminf = std::numeric_limits<double>::infinity();
    for (std::size_t i = profiles.size() / 2; i < profiles.size(); ++i)
      liminf = std::min(liminf, profiles[i].a(d));
    rep.wlln_liminf_A.emplace_back(d, liminf);
  }
  return rep;
}

}  // namespace begraph
