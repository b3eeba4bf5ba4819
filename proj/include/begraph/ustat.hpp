#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "begraph/family.hpp"
#include "begraph/report.hpp"

namespace begraph {

// Kernel of an order-ell U-statistic. Named kinds carry closed forms
// (mean: ell=1 identity; variance: ell=2 (x-y)^2/2).
struct UStatKernel {
  enum class Kind { Mean, Variance, Custom };
  Kind kind = Kind::Custom;
  std::size_t ell = 1;
  bool symmetric = false;
  std::function<double(const double*)> fn;

  static UStatKernel mean();
  static UStatKernel variance();
  static UStatKernel custom(std::size_t ell, bool symmetric, std::function<double(const double*)> fn);

  double operator()(const double* xs) const { return fn(xs); }
};

struct UStatSpec {
  UStatKernel kernel;
  std::size_t n = 0;  // sample count
  std::size_t m = 0;  // dependency degree of the underlying data graph
};

// (1/(ell! C(n,ell))) sum over ordered ell-tuples of distinct indices.
// Ordered tuples are enumerated when n!/(n-ell)! <= 1e7; beyond that,
// combinations are streamed (with weight ell! for symmetric kernels, else
// with every permutation evaluated).
double u_statistic(const UStatSpec& spec, const std::vector<double>& data);

struct UStatGraphBounds {
  double N;        // n!/(n-ell)!
  double D_upper;  // ell^2 (m+1) C(n-1, ell-1) (ell-1)! - 1
  double ND_cap;   // ell^2 (m+1) n^(2 ell - 1) >= N (D+1)
};

UStatGraphBounds ustat_graph_bounds(std::size_t n, std::size_t ell, std::size_t m);

// Moment ingredients for the corollary bounds.
struct UStatIngredients {
  std::optional<double> A_delta;  // sum over tuples of E|f(X_a)-c_a|^delta
  std::optional<double> delta;
  std::optional<double> L;        // sup over tuples of ||f(X_a)-c_a||_inf
  double var_Vn = 0.0;            // V[V_n], V_n = sum over tuples of f(X_a)
  std::optional<double> K;        // stationary-limit constant (Cor. variant)
};

// Evaluates the applicable corollary bound on (U_n - E U_n)/sqrt(V[U_n]):
//   bounded:       227.5 sqrt(ell^2(m+1)/n) Xi_inf^-3
//   delta in (2,3): 8.015 (ell^2(m+1)/n)^((d-2)/(2(d+1))) Xi^-(d/(d+1))
//   delta >= 3:     max{18.96 ..., 227.5 ...}
// With K supplied, the stationary variant (constants 11.335 / 26.672 / 643.5)
// is reported instead, with validity flagged by V[V_n] >= n^(2l-1) K^2 / 2.
BoundReport ustat_bound(const UStatSpec& spec, const UStatIngredients& ingredients);

// Exact moments of the tuple family (f(X_alpha)) over an exact data family:
// E[V_n], V[V_n], A_delta with mean centering c_alpha = E f(X_alpha), and the
// sup bound L. Enumeration over the data family's joint law.
struct UStatExactMoments {
  double mean_Vn;
  double var_Vn;
  double A_delta;
  double L;
};

UStatExactMoments ustat_exact_moments(const UStatSpec& spec, const DiscreteFamily& data,
                                      double delta);

// Max degree of the explicitly constructed tuple graph: alpha ~ beta iff some
// coordinates collide or are adjacent in the data graph. Brute force; for
// n <= 8, ell <= 3.
std::size_t ustat_tuple_graph_degree(std::size_t n, std::size_t ell, const DependencyGraph& data_graph);

}  // namespace begraph
