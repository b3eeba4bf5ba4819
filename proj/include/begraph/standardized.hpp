#pragma once

#include <complex>
#include <vector>

#include "begraph/discrete_law.hpp"
#include "begraph/family.hpp"

namespace begraph {

// Exact law of W = (S - E[S]) / sqrt(V[S]): atoms sorted by value, mean 0 and
// variance 1 within 1e-10, probabilities summing to 1 within 1e-12.
class StandardizedLaw {
 public:
  explicit StandardizedLaw(std::vector<Atom> atoms);

  static StandardizedLaw of_family(const DiscreteFamily& family);
  static StandardizedLaw of_law(const DiscreteLaw& law);  // standardizes any discrete law

  const std::vector<Atom>& atoms() const { return atoms_; }
  // CDF at x and left limit F(x-).
  double cdf(double x) const;
  double cdf_left(double x) const;
  double abs_moment(double order) const;  // E|W|^order
  double sample(double u) const;

 private:
  std::vector<Atom> atoms_;
  std::vector<double> cum_;
};

// E[e^{isW}] = sum p_j e^{i s x_j}, compensated in both components.
std::complex<double> exact_cf(const StandardizedLaw& law, double s);

// sup_t |F(t) - Phi(t)|; the sup is attained at atoms (from either side).
double exact_dkol(const StandardizedLaw& law);

}  // namespace begraph
