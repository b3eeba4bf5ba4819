#include "begraph/profile.hpp"

#include <cmath>

#include "begraph/errors.hpp"
#include "begraph/numerics.hpp"

namespace begraph {

double MomentProfile::a(double delta) const {
  const auto it = A.find(delta);
  if (it == A.end()) throw MissingMoment("A_delta not stored for delta=" + std::to_string(delta));
  return it->second;
}

double MomentProfile::m(double delta) const {
  const auto it = M.find(delta);
  if (it == M.end()) throw MissingMoment("M_delta not stored for delta=" + std::to_string(delta));
  return it->second;
}

void MomentProfile::validate(double slack) const {
  if (N == 0) throw InvalidProfile("N must be positive");
  if (!(v > 0.0)) throw InvalidProfile("v must be positive");
  double prev_delta = 0.0, prev_norm = -1.0;
  for (const auto& [delta, a_delta] : A) {
    if (delta < 2.0) throw InvalidProfile("A map keys must satisfy delta >= 2");
    if (!(a_delta >= 0.0)) throw InvalidProfile("A_delta must be non-negative");
    const double norm = std::pow(a_delta / double(N), 1.0 / delta);
    if (prev_norm >= 0.0 && norm < prev_norm * (1.0 - slack))
      throw InvalidProfile("(A_delta/N)^(1/delta) must be non-decreasing in delta (delta=" +
                           std::to_string(prev_delta) + " -> " + std::to_string(delta) + ")");
    prev_norm = norm;
    prev_delta = delta;
    if (L && a_delta > double(N) * std::pow(*L, delta) * (1.0 + slack))
      throw InvalidProfile("A_delta exceeds N L^delta");
  }
  const auto it2 = A.find(2.0);
  if (it2 != A.end() && v * v > it2->second * double(D + 1) * (1.0 + slack))
    throw InvalidProfile("v^2 exceeds A_2 (D+1)");
}

MomentProfile derive_profile(const DiscreteFamily& family, const std::vector<double>& deltas) {
  MomentProfile p;
  p.N = family.size();
  p.D = family.graph().max_degree();
  p.centering = family.centering();

  const double var = family.variance_S();
  if (!(var > 0.0)) throw DegenerateVariance("V[S] = 0: profile undefined");
  p.v = std::sqrt(var);

  const std::vector<double> c = family.centers();
  for (double delta : deltas) {
    if (delta < 2.0) throw WrongRegime("derive_profile requires delta >= 2");
    KahanSum a;
    double m = 0.0;
    for (std::size_t k = 0; k < p.N; ++k) {
      const double ek = family.marginal(std::uint32_t(k)).abs_moment(delta, c[k]);
      a.add(ek);
      m = std::max(m, std::pow(ek, 1.0 / delta));
    }
    p.A[delta] = a.value();
    p.M[delta] = m;
  }

  double sup = 0.0;
  for (std::size_t k = 0; k < p.N; ++k)
    sup = std::max(sup, family.marginal(std::uint32_t(k)).max_abs_deviation(c[k]));
  p.L = sup;

  if (family.within_cap()) {
    p.rho = std::abs(family.third_central_S());
  } else {
    p.notes.push_back("rho omitted: joint support exceeds enumeration cap");
  }

  p.validate();
  return p;
}

double xi(const MomentProfile& profile, double delta) {
  if (delta < 2.0) throw WrongRegime("xi requires delta >= 2");
  if (!(profile.v > 0.0)) throw DegenerateVariance("xi requires v > 0");
  const double a = profile.a(delta);
  return std::pow(double(profile.N) / a, 1.0 / delta) *
         std::sqrt(profile.v * profile.v / (double(profile.N) * double(profile.D + 1)));
}

double sigma(const MomentProfile& profile, double delta) {
  if (!(profile.v > 0.0)) throw DegenerateVariance("sigma requires v > 0");
  const double m = profile.m(delta);
  if (!(m > 0.0)) throw MissingMoment("sigma requires M_delta > 0");
  return std::sqrt(profile.v * profile.v / (double(profile.N) * double(profile.D + 1))) / m;
}

}  // namespace begraph
