#include "begraph/fourier.hpp"

#include <cmath>
#include <complex>
#include <limits>

#include "begraph/cumulants.hpp"
#include "begraph/errors.hpp"
#include "begraph/numerics.hpp"
#include "begraph/quadrature.hpp"

namespace begraph {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kE = 2.71828182845904523536;
const double kSqrt2Pi = std::sqrt(2.0 * kPi);
}  // namespace

double feller_rhs(const StandardizedLaw& law, double T, double abs_tol) {
  if (!(T > 0.0)) throw WrongRegime("feller_rhs requires T > 0");
  const auto integrand = [&](double s) {
    return std::abs(exact_cf(law, s) - std::exp(-0.5 * s * s)) / std::abs(s);
  };
  const double cut = std::min(1e-4, 0.5 * T);
  // |cf(s) - e^{-s^2/2}| <= (E|W|^3/6 + 1/6)|s|^3 near 0 (third-order Taylor
  // of both sides with matching s^2 terms), so the ratio is <= M s^2.
  const double majorant = law.abs_moment(3.0) / 6.0 + 1.0 / 6.0;
  const double head = majorant * cut * cut * cut / 3.0;  // int_0^cut M s^2 ds
  const double body = adaptive_gk15(integrand, cut, T, abs_tol);
  return (2.0 / kPi) * (head + body) + 24.0 / (T * kPi * kSqrt2Pi);
}

ZoneReport zone_check_bounded(const DiscreteFamily& family, double level,
                              const std::vector<double>& xi_grid) {
  if (!(level > 0.0)) throw WrongRegime("zone check requires L > 0");
  const std::vector<double> c = family.centers();
  for (std::size_t k = 0; k < family.size(); ++k)
    if (family.marginal(std::uint32_t(k)).max_abs_deviation(c[k]) > level * (1.0 + 1e-12))
      throw WrongRegime("family is not bounded by L after centering");

  // Bounded by L means truncation at L is the identity; still go through the
  // truncated family so the report is exactly about S^(L).
  const DiscreteFamily trunc = family.truncate(level);
  const double vL2 = trunc.variance_S();
  if (!(vL2 > 0.0)) throw DegenerateVariance("v_L = 0 in zone check");
  const double vL = std::sqrt(vL2);
  const double dp1 = double(family.graph().max_degree() + 1);
  const double edge = vL / (2.0 * kE * level * dp1);

  KahanSum a3;
  for (std::size_t k = 0; k < family.size(); ++k)
    a3.add(family.marginal(std::uint32_t(k)).abs_moment(3.0, c[k]));
  // K_L = C (D+1)^2 (L/v_L)^3 A_{delta'}/L^{delta'} at delta' = 3.
  const double K = constant_C().hi * dp1 * dp1 * a3.value() / (vL2 * vL);

  const DiscreteLaw sum = trunc.sum_law();
  const double mu = sum.mean();

  ZoneReport rep{edge, K, {}, -std::numeric_limits<double>::infinity()};
  for (double xi : xi_grid) {
    if (std::abs(xi) > edge * (1.0 + 1e-12))
      throw WrongRegime("grid point outside the zone of control");
    KahanSum re, im;
    for (const auto& at : sum.atoms()) {
      const double t = xi * (at.x - mu) / vL;
      re.add(at.p * std::cos(t));
      im.add(at.p * std::sin(t));
    }
    const std::complex<double> cf{re.value(), im.value()};
    const double lhs = std::abs(cf * std::exp(0.5 * xi * xi) - 1.0);
    const double kx3 = K * std::abs(xi * xi * xi);
    const double rhs = kx3 * std::exp(kx3);
    rep.points.push_back({xi, lhs, rhs});
    rep.max_violation = std::max(rep.max_violation, lhs - rhs);
  }
  return rep;
}

FourierZoneStatus fourier_zone(const MomentProfile& profile, double s, double delta) {
  if (!(delta > 2.0)) throw WrongRegime("fourier bounds require delta > 2");
  const double C = constant_C().hi;
  const double ratio = std::sqrt(double(profile.N) / double(profile.D + 1));
  const double as = std::abs(s);
  if (delta >= 3.0) {
    const double xi3 = xi(profile, 3.0);
    const double xid = xi(profile, delta);
    if (as > ratio * xi3 * xi3 * xi3 / (6.0 * C))
      return {false, "|s| <= sqrt(N/(D+1)) xi_3^3 / (6C)"};
    if (as > ratio * std::pow(std::pow(xid, delta) / 9.0, 1.0 / (delta - 2.0)) / (2.0 * kE))
      return {false, "|s| <= sqrt(N/(D+1)) (xi_delta^delta / 9)^(1/(delta-2)) / (2e)"};
    return {true, ""};
  }
  const double xid = xi(profile, delta);
  const double bound = std::pow(xid / (2.0 * kE), delta / (delta - 2.0)) *
                       std::pow(4.0 * kE * kE / (3.0 + C / kE), 1.0 / (delta - 2.0)) * ratio;
  if (as > bound)
    return {false, "|s| <= (xi_delta/(2e))^(delta/(delta-2)) (4e^2/(3+C/e))^(1/(delta-2)) sqrt(N/(D+1))"};
  return {true, ""};
}

double fourier_bound_unbounded(const MomentProfile& profile, double s, double delta) {
  const FourierZoneStatus zone = fourier_zone(profile, s, delta);
  if (!zone.ok) throw WrongRegime("outside zone of control: " + zone.failed_condition);
  if (s == 0.0) return 0.0;
  const double C = constant_C().hi;
  const double as = std::abs(s);
  const double dp1_over_N = double(profile.D + 1) / double(profile.N);
  if (delta >= 3.0) {
    const double xi3 = xi(profile, 3.0);
    const double xid = xi(profile, delta);
    const double first = (1.0 / kE + 3.0 / (8.0 * kE * kE)) * std::pow(2.0 * kE * as / xid, delta) *
                         std::pow(dp1_over_N, 0.5 * (delta - 2.0));
    const double second = C * std::pow(as / xi3, 3.0) * std::sqrt(dp1_over_N) * std::exp(-s * s / 6.0);
    return first + second;
  }
  const double xid = xi(profile, delta);
  return std::pow(1.0 / dp1_over_N, 1.0 - 0.5 * delta) * (C + 3.0 * kE + 8.0 * kE * kE) /
         (8.0 * kE * kE * kE) * std::pow(2.0 * kE * as / xid, delta);
}

}  // namespace begraph
