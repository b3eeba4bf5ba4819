#pragma once

#include <cstddef>
#include <vector>

namespace begraph {

struct Atom {
  double x;
  double p;
};

// Finite discrete law. Probabilities must be non-negative and sum to 1 within
// 1e-12; zero-probability atoms are allowed. Atoms are kept sorted by value
// with exact duplicates merged.
class DiscreteLaw {
 public:
  explicit DiscreteLaw(std::vector<Atom> atoms);

  const std::vector<Atom>& atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }

  double mean() const;
  double variance() const;
  double raw_moment(int j) const;                       // E[X^j]
  double central_moment(int j, double center) const;    // E[(X-c)^j]
  double abs_moment(double order, double center) const; // E|X-c|^order
  double max_abs_deviation(double center) const;        // sup |x-c| over support
  double min() const { return atoms_.front().x; }
  double max() const { return atoms_.back().x; }

  // Inverse-CDF draw from u in [0,1).
  double sample(double u) const;

  bool operator==(const DiscreteLaw& other) const;

  static DiscreteLaw rademacher();
  static DiscreteLaw bernoulli(double p);
  static DiscreteLaw point_mass(double x);
  static DiscreteLaw uniform_values(const std::vector<double>& xs);

 private:
  std::vector<Atom> atoms_;       // sorted by x, merged
  std::vector<double> cum_;       // cumulative probabilities for sampling
};

// Law of X+Y for independent X, Y; exact-equal sums merged.
DiscreteLaw convolve(const DiscreteLaw& a, const DiscreteLaw& b, std::size_t atom_cap);

}  // namespace begraph
