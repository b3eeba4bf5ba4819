#include "begraph/cumulants.hpp"

#include <cmath>

#include "begraph/errors.hpp"
#include "begraph/numerics.hpp"

namespace begraph {

std::vector<double> raw_moments_to_cumulants(const std::vector<double>& raw) {
  const std::size_t n = raw.size();
  std::vector<double> cum(n, 0.0);
  for (std::size_t r = 1; r <= n; ++r) {
    double k = raw[r - 1];
    for (std::size_t j = 1; j < r; ++j) k -= binomial(unsigned(r - 1), unsigned(j - 1)) * cum[j - 1] * raw[r - j - 1];
    cum[r - 1] = k;
  }
  return cum;
}

std::vector<double> cumulants_to_raw_moments(const std::vector<double>& cum) {
  const std::size_t n = cum.size();
  std::vector<double> raw(n, 0.0);
  for (std::size_t r = 1; r <= n; ++r) {
    double m = cum[r - 1];
    for (std::size_t j = 1; j < r; ++j) m += binomial(unsigned(r - 1), unsigned(j - 1)) * cum[j - 1] * raw[r - j - 1];
    raw[r - 1] = m;
  }
  return raw;
}

double cumulant_of_sum(const DiscreteFamily& family, int r) {
  if (r < 1) throw WrongRegime("cumulant order must be >= 1");
  if (r > 12) throw WrongRegime("cumulant order capped at 12: the moment recursion is ill-conditioned beyond");
  if (!family.within_cap()) throw OracleTooLarge("joint support exceeds enumeration cap");
  const DiscreteLaw s = family.sum_law();
  if (r == 1) return s.mean();
  // Shift to the mean first: cumulants of order >= 2 are shift-invariant and
  // the recursion loses far less to cancellation on central moments.
  const double mu = s.mean();
  std::vector<double> central(std::size_t(r), 0.0);
  for (int j = 1; j <= r; ++j) central[std::size_t(j - 1)] = s.central_moment(j, mu);
  return raw_moments_to_cumulants(central)[std::size_t(r - 1)];
}

double lemma_cumulant_bound(const MomentProfile& profile, int r, double delta, double level) {
  if (!(delta >= 1.0)) throw WrongRegime("lemma requires delta >= 1");
  if (!(double(r) >= delta) || r <= 1) throw WrongRegime("lemma requires r >= delta and r > 1");
  if (!(level > 0.0)) throw WrongRegime("lemma requires L > 0");
  const double a = profile.a(delta);
  return std::pow(double(r), r - 2) * std::pow(2.0 * double(profile.D + 1), r - 1) *
         std::pow(level, double(r) - delta) * a;
}

TruncationContext TruncationContext::make(const DiscreteFamily& family, double level) {
  TruncationContext ctx{family, family.truncate(level), level, 0.0};
  ctx.v_trunc = std::sqrt(ctx.truncated.variance_S());
  return ctx;
}

TruncationShifts truncation_shifts(const TruncationContext& ctx, double delta) {
  if (!(delta > 2.0)) throw WrongRegime("truncation shifts require delta > 2");
  const double L = ctx.level;
  const auto& fam = ctx.family;
  const std::vector<double> c = fam.centers();
  KahanSum a;
  for (std::size_t k = 0; k < fam.size(); ++k) a.add(fam.marginal(std::uint32_t(k)).abs_moment(delta, c[k]));
  const double a_delta = a.value();
  const double dp1 = double(fam.graph().max_degree() + 1);

  TruncationShifts out{};
  out.mean_shift_bound = std::pow(L, 1.0 - delta) * a_delta;
  out.variance_shift_bound = 3.0 * std::pow(L, 2.0 - delta) * dp1 * a_delta;
  if (delta > 3.0)
    out.third_cumulant_shift_bound = 21.0 * dp1 * dp1 * std::pow(L, 3.0 - delta) * a_delta;

  out.true_mean_shift = std::abs(fam.mean_S() - ctx.truncated.mean_S());
  out.true_variance_shift = std::abs(fam.variance_S() - ctx.truncated.variance_S());
  out.true_third_cumulant_shift = std::abs(fam.third_central_S() - ctx.truncated.third_central_S());
  return out;
}

Enclosure constant_C() {
  // Partial sum of t_r = r^(r-2)/(r! e^r) for r in [3, R), then a two-sided
  // tail via Stirling: r! = sqrt(2 pi r)(r/e)^r e^theta with
  // theta in (1/(12r+1), 1/(12r)), so
  //   t_r in r^(-5/2)/sqrt(2 pi) * [e^(-1/(12r)), e^(-1/(12r+1))],
  // and for decreasing f: int_R^inf f <= sum_{r>=R} f(r) <= f(R) + int_R^inf f.
  constexpr int R = 150000;
  KahanSum partial;
  double t = 0.5 * std::exp(-3.0);  // t_3 = 3/(3! e^3)
  for (int r = 3; r < R; ++r) {
    partial.add(t);
    // t_{r+1}/t_r = (1+1/r)^(r-2)/e
    t *= std::exp((double(r) - 2.0) * std::log1p(1.0 / double(r)) - 1.0);
  }
  const double inv_sqrt_2pi = 0.3989422804014326779399461;
  const double integral = (2.0 / 3.0) * std::pow(double(R), -1.5);  // int_R^inf x^(-5/2) dx
  const double tail_lo = inv_sqrt_2pi * integral * std::exp(-1.0 / (12.0 * double(R)));
  const double tail_hi = inv_sqrt_2pi * (integral + std::pow(double(R), -2.5));
  const double scale = 4.0 * std::exp(3.0);
  return {scale * (partial.value() + tail_lo), scale * (partial.value() + tail_hi)};
}

Enclosure constant_C_second() {
  const Enclosure c = constant_C();
  const double two_e = 2.0 * std::exp(1.0);
  return {two_e * (c.lo - 2.0), two_e * (c.hi - 2.0)};
}

namespace {

double bracket_objective(double a) {
  const double pi = 3.14159265358979323846;
  return std::pow(1.0 - a, -1.5) + 24.0 / (pi * a);
}

double bracket_derivative(double a) {
  const double pi = 3.14159265358979323846;
  return 1.5 * std::pow(1.0 - a, -2.5) - 24.0 / (pi * a * a);
}

}  // namespace

ProofConstants proof_constants() {
  const double pi = 3.14159265358979323846;
  const double e = 2.71828182845904523536;
  const Enclosure c = constant_C();

  // alpha0 by bisection on the derivative; the objective is convex on (0,1).
  double lo = 1e-9, hi = 1.0 - 1e-9;
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    (bracket_derivative(mid) < 0.0 ? lo : hi) = mid;
  }
  const double alpha0 = 0.5 * (lo + hi);
  const double I = bracket_objective(alpha0);

  const auto b_of = [&](double C) {
    return 2.0 * e * (4.0 * pi * e * e / (8.0 * e + 3.0)) *
           (C * std::sqrt(6.0 * pi) / (6.0 * e * pi) + 24.0 / (pi * std::sqrt(2.0 * pi)));
  };
  const Enclosure B{b_of(c.lo), b_of(c.hi)};

  // chi = sup over (2,3) of ((d+1)/d) * 48e/(pi sqrt(2 pi)) * (2e B23)^(-1/(d+1)),
  // B23 = 96 e^3 / ((C + 3e + 8e^2) sqrt(2 pi)). The factor is increasing in
  // delta on (2,3); the sup is the (open) right endpoint. Evaluated with the
  // lower C endpoint, which maximizes the expression.
  const auto chi_at = [&](double d, double C) {
    const double b23 = 96.0 * e * e * e / ((C + 3.0 * e + 8.0 * e * e) * std::sqrt(2.0 * pi));
    return (d + 1.0) / d * (48.0 * e / (pi * std::sqrt(2.0 * pi))) * std::pow(2.0 * e * b23, -1.0 / (d + 1.0));
  };
  double chi = 0.0;
  for (int i = 1; i <= 10000; ++i) chi = std::max(chi, chi_at(2.0 + i * 1e-4, c.lo));

  return {B, chi, alpha0, I};
}

}  // namespace begraph
