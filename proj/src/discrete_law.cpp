#include "begraph/discrete_law.hpp"

#include <algorithm>
#include <cmath>

#include "begraph/errors.hpp"
#include "begraph/numerics.hpp"

namespace begraph {

DiscreteLaw::DiscreteLaw(std::vector<Atom> atoms) {
  if (atoms.empty()) throw InvalidInput("discrete law needs at least one atom");
  KahanSum total;
  for (const auto& a : atoms) {
    if (!(a.p >= 0.0)) throw InvalidInput("negative or NaN atom probability");
    if (!std::isfinite(a.x)) throw InvalidInput("non-finite atom value");
    total.add(a.p);
  }
  if (std::abs(total.value() - 1.0) > 1e-12)
    throw InvalidInput("atom probabilities must sum to 1 within 1e-12");
  std::sort(atoms.begin(), atoms.end(), [](const Atom& a, const Atom& b) { return a.x < b.x; });
  atoms_.reserve(atoms.size());
  for (const auto& a : atoms) {
    if (!atoms_.empty() && atoms_.back().x == a.x)
      atoms_.back().p += a.p;
    else
      atoms_.push_back(a);
  }
  cum_.reserve(atoms_.size());
  KahanSum c;
  for (const auto& a : atoms_) {
    c.add(a.p);
    cum_.push_back(c.value());
  }
  cum_.back() = 1.0;
}

double DiscreteLaw::mean() const {
  KahanSum s;
  for (const auto& a : atoms_) s.add(a.p * a.x);
  return s.value();
}

double DiscreteLaw::variance() const { return central_moment(2, mean()); }

double DiscreteLaw::raw_moment(int j) const {
  KahanSum s;
  for (const auto& a : atoms_) s.add(a.p * std::pow(a.x, j));
  return s.value();
}

double DiscreteLaw::central_moment(int j, double center) const {
  KahanSum s;
  for (const auto& a : atoms_) s.add(a.p * std::pow(a.x - center, j));
  return s.value();
}

double DiscreteLaw::abs_moment(double order, double center) const {
  KahanSum s;
  for (const auto& a : atoms_) s.add(a.p * std::pow(std::abs(a.x - center), order));
  return s.value();
}

double DiscreteLaw::max_abs_deviation(double center) const {
  double m = 0.0;
  for (const auto& a : atoms_) m = std::max(m, std::abs(a.x - center));
  return m;
}

double DiscreteLaw::sample(double u) const {
  const auto it = std::upper_bound(cum_.begin(), cum_.end(), u);
  const std::size_t i = std::min<std::size_t>(it - cum_.begin(), atoms_.size() - 1);
  return atoms_[i].x;
}

bool DiscreteLaw::operator==(const DiscreteLaw& other) const {
  if (atoms_.size() != other.atoms_.size()) return false;
  for (std::size_t i = 0; i < atoms_.size(); ++i)
    if (atoms_[i].x != other.atoms_[i].x || atoms_[i].p != other.atoms_[i].p) return false;
  return true;
}

DiscreteLaw DiscreteLaw::rademacher() { return DiscreteLaw({{-1.0, 0.5}, {1.0, 0.5}}); }

DiscreteLaw DiscreteLaw::bernoulli(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidInput("bernoulli parameter outside [0,1]");
  if (p == 0.0) return point_mass(0.0);
  if (p == 1.0) return point_mass(1.0);
  return DiscreteLaw({{0.0, 1.0 - p}, {1.0, p}});
}

DiscreteLaw DiscreteLaw::point_mass(double x) { return DiscreteLaw({{x, 1.0}}); }

DiscreteLaw DiscreteLaw::uniform_values(const std::vector<double>& xs) {
  if (xs.empty()) throw InvalidInput("uniform law needs at least one value");
  std::vector<Atom> atoms;
  atoms.reserve(xs.size());
  const double p = 1.0 / double(xs.size());
  for (double x : xs) atoms.push_back({x, p});
  return DiscreteLaw(std::move(atoms));
}

DiscreteLaw convolve(const DiscreteLaw& a, const DiscreteLaw& b, std::size_t atom_cap) {
  if (a.size() * b.size() > atom_cap)
    throw OracleTooLarge("convolution support exceeds enumeration cap");
  std::vector<Atom> out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a.atoms())
    for (const auto& y : b.atoms()) out.push_back({x.x + y.x, x.p * y.p});
  std::sort(out.begin(), out.end(), [](const Atom& u, const Atom& v) { return u.x < v.x; });
  std::vector<Atom> merged;
  merged.reserve(out.size());
  for (const auto& at : out) {
    if (!merged.empty() && merged.back().x == at.x)
      merged.back().p += at.p;
    else
      merged.push_back(at);
  }
  if (merged.size() > atom_cap) throw OracleTooLarge("convolution support exceeds enumeration cap");
  // probabilities multiply/accumulate exactly enough; renormalization is not
  // wanted here (sums stay within a few ulp of 1).
  std::vector<Atom> fixed = merged;
  KahanSum tot;
  for (auto& at : fixed) tot.add(at.p);
  const double t = tot.value();
  for (auto& at : fixed) at.p /= t;
  return DiscreteLaw(std::move(fixed));
}

}  // namespace begraph
