#include "begraph/ustat.hpp"

#include <algorithm>
#include <cmath>

#include "begraph/errors.hpp"
#include "begraph/numerics.hpp"

namespace begraph {

UStatKernel UStatKernel::mean() {
  UStatKernel k;
  k.kind = Kind::Mean;
  k.ell = 1;
  k.symmetric = true;
  k.fn = [](const double* xs) { return xs[0]; };
  return k;
}

UStatKernel UStatKernel::variance() {
  UStatKernel k;
  k.kind = Kind::Variance;
  k.ell = 2;
  k.symmetric = true;
  k.fn = [](const double* xs) {
    const double d = xs[0] - xs[1];
    return 0.5 * d * d;
  };
  return k;
}

UStatKernel UStatKernel::custom(std::size_t ell, bool symmetric,
                                std::function<double(const double*)> fn) {
  UStatKernel k;
  k.kind = Kind::Custom;
  k.ell = ell;
  k.symmetric = symmetric;
  k.fn = std::move(fn);
  return k;
}

namespace {

// Ordered ell-tuples of distinct indices in {0..n-1}.
template <class F>
void for_each_ordered_tuple(std::size_t n, std::size_t ell, F&& fn) {
  std::vector<std::size_t> tuple(ell);
  std::vector<bool> used(n, false);
  const std::function<void(std::size_t)> rec = [&](std::size_t depth) {
    if (depth == ell) {
      fn(tuple);
      return;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (used[i]) continue;
      used[i] = true;
      tuple[depth] = i;
      rec(depth + 1);
      used[i] = false;
    }
  };
  rec(0);
}

// Unordered combinations, lexicographic.
template <class F>
void for_each_combination(std::size_t n, std::size_t ell, F&& fn) {
  std::vector<std::size_t> comb(ell);
  for (std::size_t i = 0; i < ell; ++i) comb[i] = i;
  while (true) {
    fn(comb);
    std::size_t i = ell;
    while (i-- > 0) {
      if (comb[i] + (ell - i) < n) {
        ++comb[i];
        for (std::size_t j = i + 1; j < ell; ++j) comb[j] = comb[j - 1] + 1;
        break;
      }
      if (i == 0) return;
    }
  }
}

double factorial(std::size_t k) {
  double r = 1.0;
  for (std::size_t i = 2; i <= k; ++i) r *= double(i);
  return r;
}

}  // namespace

double u_statistic(const UStatSpec& spec, const std::vector<double>& data) {
  const std::size_t n = data.size();
  const std::size_t ell = spec.kernel.ell;
  if (n < ell) throw Insufficient("u_statistic needs n >= ell");
  if (spec.kernel.kind == UStatKernel::Kind::Mean) {
    KahanSum s;
    for (double x : data) s.add(x);
    return s.value() / double(n);
  }
  if (spec.kernel.kind == UStatKernel::Kind::Variance) {
    // (x-y)^2/2 kernel averages to the (n-1)-denominator sample variance.
    KahanSum s;
    for (double x : data) s.add(x);
    const double mean = s.value() / double(n);
    KahanSum q;
    for (double x : data) q.add((x - mean) * (x - mean));
    return q.value() / double(n - 1);
  }
  const double tuples = falling_factorial(n, ell);
  KahanSum sum;
  std::vector<double> xs(ell);
  if (tuples <= 1e7) {
    for_each_ordered_tuple(n, ell, [&](const std::vector<std::size_t>& t) {
      for (std::size_t i = 0; i < ell; ++i) xs[i] = data[t[i]];
      sum.add(spec.kernel(xs.data()));
    });
  } else {
    const double weight = factorial(ell);
    for_each_combination(n, ell, [&](const std::vector<std::size_t>& comb) {
      if (spec.kernel.symmetric) {
        for (std::size_t i = 0; i < ell; ++i) xs[i] = data[comb[i]];
        sum.add(weight * spec.kernel(xs.data()));
      } else {
        std::vector<std::size_t> perm = comb;
        do {
          for (std::size_t i = 0; i < ell; ++i) xs[i] = data[perm[i]];
          sum.add(spec.kernel(xs.data()));
        } while (std::next_permutation(perm.begin(), perm.end()));
      }
    });
  }
  return sum.value() / tuples;
}

UStatGraphBounds ustat_graph_bounds(std::size_t n, std::size_t ell, std::size_t m) {
  if (ell < 1 || n < ell) throw Insufficient("ustat_graph_bounds needs n >= ell >= 1");
  UStatGraphBounds b{};
  b.N = falling_factorial(n, ell);
  b.D_upper = double(ell) * double(ell) * double(m + 1) * binomial(unsigned(n - 1), unsigned(ell - 1)) *
                  factorial(ell - 1) -
              1.0;
  b.ND_cap = double(ell) * double(ell) * double(m + 1) * std::pow(double(n), 2.0 * double(ell) - 1.0);
  return b;
}

BoundReport ustat_bound(const UStatSpec& spec, const UStatIngredients& ing) {
  const std::size_t n = spec.n, ell = spec.kernel.ell, m = spec.m;
  if (n < ell) throw Insufficient("ustat_bound needs n >= ell");
  if (!(ing.var_Vn > 0.0)) throw DegenerateVariance("V[U_n] = 0");
  const double combo = double(ell) * double(ell) * double(m + 1);
  const double scale = std::sqrt(ing.var_Vn / (combo * std::pow(double(n), 2.0 * double(ell) - 1.0)));

  const auto check_xi = [](double v) {
    if (!(v > 0.0 && v <= 1.0 + 1e-12))
      throw InvalidProfile("Xi must lie in (0,1]; inconsistent ingredients");
    return std::min(v, 1.0);
  };

  if (ing.K) {
    if (!ing.A_delta || !ing.delta)
      throw MissingMoment("stationary variant needs A_delta and delta");
    const double d = *ing.delta;
    if (!(d > 2.0)) throw WrongRegime("stationary variant needs delta > 2");
    const double a = std::pow(*ing.A_delta / falling_factorial(n, ell), 1.0 / d);
    const double K = *ing.K;
    const bool large_enough =
        ing.var_Vn >= std::pow(double(n), 2.0 * double(ell) - 1.0) * K * K / 2.0;
    double raw;
    std::string branch;
    const double common = std::pow(K, -d / (d + 1.0)) * std::pow(combo, (d - 1.0) / (d + 1.0)) *
                          std::pow(a, d / (d + 1.0)) *
                          std::pow(double(n), -(d - 2.0) / (2.0 * (d + 1.0)));
    if (d < 3.0) {
      raw = 11.335 * common;
      branch = "only";
    } else {
      const double first = 26.672 * common;
      const double second =
          643.5 * std::pow(K, -3.0) * combo * combo * a * a * a / std::sqrt(double(n));
      raw = std::max(first, second);
      branch = first >= second ? "first" : "second";
    }
    BoundReport r = BoundReport::make(TheoremId::UStatStationary, raw, branch, large_enough,
                                      large_enough ? "" : "V[V_n] < n^(2l-1) K^2/2: asymptotic regime not reached");
    r.metadata["delta"] = d;
    r.metadata["a_delta"] = a;
    r.metadata["variant"] = 2.0;  // stationary
    return r;
  }

  if (ing.A_delta && ing.delta) {
    const double d = *ing.delta;
    if (!(d > 2.0)) throw WrongRegime("corollary needs delta > 2");
    const double a = std::pow(*ing.A_delta / falling_factorial(n, ell), 1.0 / d);
    const double Xi = check_xi(scale / a);
    double raw;
    std::string branch;
    if (d < 3.0) {
      raw = 8.015 * std::pow(combo / double(n), (d - 2.0) / (2.0 * (d + 1.0))) *
            std::pow(Xi, -d / (d + 1.0));
      branch = "only";
    } else {
      const double first = 18.96 * std::pow(combo / double(n), (d - 2.0) / (2.0 * (d + 1.0))) *
                           std::pow(Xi, -d / (d + 1.0));
      const double second = 227.5 * std::sqrt(combo / double(n)) / (Xi * Xi * Xi);
      raw = std::max(first, second);
      branch = first >= second ? "first" : "second";
    }
    BoundReport r = BoundReport::make(TheoremId::UStatMoment, raw, branch);
    r.metadata["delta"] = d;
    r.metadata["Xi"] = Xi;
    r.metadata["variant"] = 1.0;
    return r;
  }

  if (ing.L) {
    const double Xi = check_xi(scale / *ing.L);
    const double raw = 227.5 * std::sqrt(combo / double(n)) / (Xi * Xi * Xi);
    BoundReport r = BoundReport::make(TheoremId::UStatBounded, raw, "only");
    r.metadata["Xi"] = Xi;
    r.metadata["variant"] = 0.0;  // bounded
    return r;
  }
  throw MissingMoment("ustat_bound needs L, or A_delta with delta");
}

UStatExactMoments ustat_exact_moments(const UStatSpec& spec, const DiscreteFamily& data,
                                      double delta) {
  const std::size_t n = data.size(), ell = spec.kernel.ell;
  if (n < ell) throw Insufficient("needs n >= ell");
  std::vector<std::vector<std::size_t>> tuples;
  for_each_ordered_tuple(n, ell, [&](const std::vector<std::size_t>& t) { tuples.push_back(t); });

  std::vector<KahanSum> mean_f(tuples.size());
  KahanSum mean_vn, mean_vn2;
  std::vector<double> xs(ell);
  data.for_each_joint_outcome([&](double p, const std::vector<double>& values) {
    KahanSum vn;
    for (std::size_t t = 0; t < tuples.size(); ++t) {
      for (std::size_t i = 0; i < ell; ++i) xs[i] = values[tuples[t][i]];
      const double f = spec.kernel(xs.data());
      mean_f[t].add(p * f);
      vn.add(f);
    }
    mean_vn.add(p * vn.value());
    mean_vn2.add(p * vn.value() * vn.value());
  });

  KahanSum a_delta;
  std::vector<double> sup(tuples.size(), 0.0);
  std::vector<KahanSum> abs_moment(tuples.size());
  data.for_each_joint_outcome([&](double p, const std::vector<double>& values) {
    for (std::size_t t = 0; t < tuples.size(); ++t) {
      for (std::size_t i = 0; i < ell; ++i) xs[i] = values[tuples[t][i]];
      const double dev = spec.kernel(xs.data()) - mean_f[t].value();
      abs_moment[t].add(p * std::pow(std::abs(dev), delta));
      sup[t] = std::max(sup[t], std::abs(dev));
    }
  });
  double L = 0.0;
  for (std::size_t t = 0; t < tuples.size(); ++t) {
    a_delta.add(abs_moment[t].value());
    L = std::max(L, sup[t]);
  }
  const double ev = mean_vn.value();
  return {ev, mean_vn2.value() - ev * ev, a_delta.value(), L};
}

std::size_t ustat_tuple_graph_degree(std::size_t n, std::size_t ell,
                                     const DependencyGraph& data_graph) {
  std::vector<std::vector<std::size_t>> tuples;
  for_each_ordered_tuple(n, ell, [&](const std::vector<std::size_t>& t) { tuples.push_back(t); });
  const auto connected = [&](const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    for (std::size_t i : a)
      for (std::size_t j : b)
        if (i == j || data_graph.adjacent(std::uint32_t(i), std::uint32_t(j))) return true;
    return false;
  };
  std::size_t max_deg = 0;
  for (std::size_t t = 0; t < tuples.size(); ++t) {
    std::size_t deg = 0;
    for (std::size_t u = 0; u < tuples.size(); ++u)
      if (u != t && connected(tuples[t], tuples[u])) ++deg;
    max_deg = std::max(max_deg, deg);
  }
  return max_deg;
}

}  // namespace begraph
