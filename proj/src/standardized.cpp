#include "begraph/standardized.hpp"

#include <algorithm>
#include <cmath>

#include "begraph/errors.hpp"
#include "begraph/normal.hpp"
#include "begraph/numerics.hpp"

namespace begraph {

StandardizedLaw::StandardizedLaw(std::vector<Atom> atoms) {
  if (atoms.empty()) throw InvalidInput("standardized law needs at least one atom");
  std::sort(atoms.begin(), atoms.end(), [](const Atom& a, const Atom& b) { return a.x < b.x; });
  atoms_.reserve(atoms.size());
  for (const auto& a : atoms) {
    if (!(a.p >= 0.0)) throw InvalidInput("negative atom probability");
    if (!atoms_.empty() && atoms_.back().x == a.x)
      atoms_.back().p += a.p;
    else
      atoms_.push_back(a);
  }
  KahanSum total, mean, var;
  for (const auto& a : atoms_) total.add(a.p);
  if (std::abs(total.value() - 1.0) > 1e-12)
    throw InvalidInput("probabilities must sum to 1 within 1e-12");
  for (const auto& a : atoms_) mean.add(a.p * a.x);
  const double mu = mean.value();
  if (std::abs(mu) > 1e-10) throw InvalidInput("standardized law must have mean 0 within 1e-10");
  for (const auto& a : atoms_) var.add(a.p * (a.x - mu) * (a.x - mu));
  if (std::abs(var.value() - 1.0) > 1e-10)
    throw InvalidInput("standardized law must have variance 1 within 1e-10");
  cum_.reserve(atoms_.size());
  KahanSum c;
  for (const auto& a : atoms_) {
    c.add(a.p);
    cum_.push_back(c.value());
  }
  cum_.back() = 1.0;
}

StandardizedLaw StandardizedLaw::of_family(const DiscreteFamily& family) {
  return of_law(family.sum_law());
}

StandardizedLaw StandardizedLaw::of_law(const DiscreteLaw& law) {
  const double mu = law.mean();
  const double var = law.central_moment(2, mu);
  if (!(var > 0.0)) throw DegenerateVariance("cannot standardize a zero-variance law");
  const double v = std::sqrt(var);
  std::vector<Atom> atoms;
  atoms.reserve(law.size());
  for (const auto& a : law.atoms()) atoms.push_back({(a.x - mu) / v, a.p});
  return StandardizedLaw(std::move(atoms));
}

double StandardizedLaw::cdf(double x) const {
  const auto it = std::upper_bound(atoms_.begin(), atoms_.end(), x,
                                   [](double v, const Atom& a) { return v < a.x; });
  if (it == atoms_.begin()) return 0.0;
  return cum_[std::size_t(it - atoms_.begin()) - 1];
}

double StandardizedLaw::cdf_left(double x) const {
  const auto it = std::lower_bound(atoms_.begin(), atoms_.end(), x,
                                   [](const Atom& a, double v) { return a.x < v; });
  if (it == atoms_.begin()) return 0.0;
  return cum_[std::size_t(it - atoms_.begin()) - 1];
}

double StandardizedLaw::abs_moment(double order) const {
  KahanSum s;
  for (const auto& a : atoms_) s.add(a.p * std::pow(std::abs(a.x), order));
  return s.value();
}

double StandardizedLaw::sample(double u) const {
  const auto it = std::upper_bound(cum_.begin(), cum_.end(), u);
  const std::size_t i = std::min<std::size_t>(it - cum_.begin(), atoms_.size() - 1);
  return atoms_[i].x;
}

std::complex<double> exact_cf(const StandardizedLaw& law, double s) {
  KahanSum re, im;
  for (const auto& a : law.atoms()) {
    re.add(a.p * std::cos(s * a.x));
    im.add(a.p * std::sin(s * a.x));
  }
  return {re.value(), im.value()};
}

double exact_dkol(const StandardizedLaw& law) {
  double best = 0.0;
  double prefix = 0.0;
  const auto& atoms = law.atoms();
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    const double phi = normal_cdf(atoms[i].x);
    const double after = law.cdf(atoms[i].x);
    best = std::max(best, std::abs(after - phi));
    best = std::max(best, std::abs(prefix - phi));
    prefix = after;
  }
  return best;
}

}  // namespace begraph
