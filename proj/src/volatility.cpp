#include "begraph/volatility.hpp"

#include <cmath>

#include "begraph/errors.hpp"
#include "begraph/numerics.hpp"

namespace begraph {

std::vector<double> VolatilitySpec::kappas() const {
  std::vector<double> k(times.size());
  double prev = 0.0;
  for (std::size_t i = 0; i < times.size(); ++i) {
    k[i] = times[i] - prev;
    prev = times[i];
  }
  return k;
}

void VolatilitySpec::validate() const {
  if (times.size() < 2) throw Insufficient("volatility spec needs n >= 2 times");
  double prev = 0.0;
  for (double t : times) {
    if (!(t > prev)) throw InvalidInput("times must be strictly increasing with t_0 = 0");
    prev = t;
  }
  if (!abs_moments.empty() && abs_moments.size() != times.size())
    throw InvalidInput("abs_moments must have one entry per increment");
}

VolatilityEstimates volatility_estimators(const VolatilitySpec& spec,
                                          const std::vector<double>& increments, bool unbiased) {
  spec.validate();
  const std::size_t n = spec.n();
  if (increments.size() != n) throw InvalidInput("need one increment per time step");
  const std::vector<double> kappa = spec.kappas();
  KahanSum sum_x, sum_q;
  for (std::size_t i = 0; i < n; ++i) {
    sum_x.add(increments[i]);
    sum_q.add(increments[i] * increments[i] / kappa[i]);
  }
  const double tn = spec.t_n();
  const double e_hat = sum_x.value() / tn;
  const double denom = unbiased ? double(n - 1) : double(n);
  const double nu_hat = sum_q.value() / denom - tn / denom * e_hat * e_hat;
  return {e_hat, nu_hat};
}

double volatility_T(const VolatilitySpec& spec) {
  spec.validate();
  if (spec.abs_moments.empty()) throw MissingMoment("T needs E|X_i/kappa_i|^delta inputs");
  if (!(spec.delta > 0.0)) throw WrongRegime("T needs a positive delta");
  const std::size_t n = spec.n();
  const std::vector<double> kappa = spec.kappas();
  const double grid_term = 0.5 * std::pow(spec.t_n() / double(n), spec.delta);
  KahanSum t;
  for (std::size_t i = 0; i < n; ++i)
    t.add((std::pow(kappa[i], spec.delta) + grid_term) * spec.abs_moments[i]);
  return std::pow(2.0, 0.5 * (spec.delta - 1.0)) / double(n) * t.value();
}

BoundReport volatility_bound(const VolatilitySpec& spec) {
  spec.validate();
  if (!(spec.delta > 4.0)) throw WrongRegime("volatility bound requires delta > 4");
  if (!spec.K) throw MissingMoment("volatility bound requires the lower-bound constant K");
  const double T = volatility_T(spec);
  const double td = 0.5 * spec.delta;
  const double n = double(spec.n());
  const double K = *spec.K;
  const double ratio = n / (K * spec.t_n());
  const double mdep = 4.0 * double(spec.m + 1);
  const double shape = std::pow(ratio, td / (td + 1.0)) * std::pow(T, 1.0 / (td + 1.0)) *
                       std::pow(mdep, (td - 1.0) / (td + 1.0)) *
                       std::pow(n, -(td - 2.0) / (2.0 * (td + 1.0)));
  BoundReport r{};
  if (spec.delta < 6.0) {
    r = BoundReport::make(TheoremId::Volatility, 8.015 * shape, "only");
  } else {
    const double first = 18.96 * shape;
    const double second =
        227.5 * std::pow(ratio, 3.0) * std::pow(T, 3.0 / td) * mdep * mdep / std::sqrt(n);
    r = BoundReport::make(TheoremId::Volatility, std::max(first, second),
                          first >= second ? "first" : "second");
  }
  r.metadata["T"] = T;
  r.metadata["tilde_delta"] = td;
  // The corollary's CLT needs m+1 = o(n^((td-2)/(2td-2))) for delta in (4,6)
  // and m+1 = o(n^(1/4)) for delta >= 6; report where this run sits.
  const double expo = spec.delta < 6.0 ? (td - 2.0) / (2.0 * td - 2.0) : 0.25;
  r.metadata["mdep_ratio"] = double(spec.m + 1) / std::pow(n, expo);
  r.validity_notes = "asymptotic regime requires m+1 = o(n^" + std::to_string(expo) +
                     "); current ratio in metadata[mdep_ratio]";
  return r;
}

}  // namespace begraph
