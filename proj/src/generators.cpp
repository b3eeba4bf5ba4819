#include "begraph/generators.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "begraph/errors.hpp"
#include "begraph/numerics.hpp"
#include "begraph/rng.hpp"

namespace begraph {

const char* window_name(WindowKind w) { return w == WindowKind::Sum ? "sum" : "product"; }

namespace {

double window_apply(WindowKind w, const double* xs, std::size_t t) {
  double acc = w == WindowKind::Sum ? 0.0 : 1.0;
  for (std::size_t i = 0; i < t; ++i) acc = w == WindowKind::Sum ? acc + xs[i] : acc * xs[i];
  return acc;
}

// Enumerates the product law base^t: fn(prob, values[t]).
template <class F>
void for_each_tuple(const DiscreteLaw& base, std::size_t t, F&& fn) {
  std::vector<std::size_t> idx(t, 0);
  std::vector<double> xs(t, base.atoms()[0].x);
  while (true) {
    double p = 1.0;
    for (std::size_t i = 0; i < t; ++i) p *= base.atoms()[idx[i]].p;
    fn(p, xs.data());
    std::size_t i = 0;
    for (; i < t; ++i) {
      if (++idx[i] < base.size()) {
        xs[i] = base.atoms()[idx[i]].x;
        break;
      }
      idx[i] = 0;
      xs[i] = base.atoms()[0].x;
    }
    if (i == t) break;
  }
}

// Exact law of one window Y = w(X_1..X_{m+1}).
DiscreteLaw window_law(const DiscreteLaw& base, std::size_t m, WindowKind w) {
  std::vector<Atom> atoms;
  for_each_tuple(base, m + 1, [&](double p, const double* xs) {
    atoms.push_back({window_apply(w, xs, m + 1), p});
  });
  return DiscreteLaw(std::move(atoms));
}

// Cov(Y_1, Y_{1+d}) for windows over i.i.d. base, 0 <= d <= m.
double window_cov(const DiscreteLaw& base, std::size_t m, WindowKind w, std::size_t d) {
  KahanSum e12, e1, e2;
  for_each_tuple(base, m + 1 + d, [&](double p, const double* xs) {
    const double y1 = window_apply(w, xs, m + 1);
    const double y2 = window_apply(w, xs + d, m + 1);
    e12.add(p * y1 * y2);
    e1.add(p * y1);
    e2.add(p * y2);
  });
  return e12.value() - e1.value() * e2.value();
}

struct ThreePointVertex {
  double value;      // k^(1/delta)
  double side_prob;  // P[Y = +-value]
};

ThreePointVertex three_point_vertex(double delta, std::size_t k) {
  const double kk = double(k);
  const double cur = std::pow(kk, 2.0 / delta);
  const double prev = std::pow(kk - 1.0, 2.0 / delta);
  return {std::pow(kk, 1.0 / delta), (cur - prev) / (2.0 * cur)};
}

DiscreteLaw three_point_law(double delta, std::size_t k) {
  const ThreePointVertex v = three_point_vertex(delta, k);
  return DiscreteLaw({{-v.value, v.side_prob}, {0.0, 1.0 - 2.0 * v.side_prob}, {v.value, v.side_prob}});
}

}  // namespace

FamilySpec::FamilySpec(Variant v, CenteringChoice centering)
    : variant_(std::move(v)), centering_(std::move(centering)) {}

FamilySpec clique_blocks(std::size_t n_blocks, std::size_t block_size, DiscreteLaw base,
                         std::string law_label, CenteringChoice centering) {
  if (n_blocks < 1 || block_size < 1) throw InvalidInput("clique_blocks needs n_blocks, block_size >= 1");
  return FamilySpec(CliqueBlocksSpec{n_blocks, block_size, std::move(base), std::move(law_label)},
                    std::move(centering));
}

FamilySpec m_dependent_window(std::size_t n, std::size_t m, DiscreteLaw base, WindowKind window,
                              std::string law_label, CenteringChoice centering) {
  if (n < m + 1) throw InvalidInput("m_dependent_window needs n >= m+1");
  return FamilySpec(MDependentWindowSpec{n, m, std::move(base), window, std::move(law_label)},
                    std::move(centering));
}

FamilySpec three_point_family(double delta, std::size_t n) {
  if (!(delta >= 3.0)) throw WrongRegime("three_point_family is defined for delta >= 3");
  if (n < 2) throw InvalidInput("three_point_family needs n >= 2");
  return FamilySpec(ThreePointSpec{delta, n}, CenteringChoice::mean());
}

FamilySpec bernoulli_decay(std::size_t n) {
  if (n < 2) throw InvalidInput("bernoulli_decay needs n >= 2");
  return FamilySpec(BernoulliDecaySpec{n}, CenteringChoice::mean());
}

FamilySpec custom_family(DiscreteFamily family) {
  auto fam = std::make_shared<const DiscreteFamily>(std::move(family));
  bool verified = false;
  if (fam->size() <= 8) {
    if (!verify_dependency_graph(*fam))
      throw InvalidInput("declared graph is not a dependency graph of the family");
    verified = true;
  }
  CenteringChoice c = fam->centering();
  return FamilySpec(CustomSpec{std::move(fam), verified}, std::move(c));
}

std::string FamilySpec::id() const {
  return std::visit(
      [&](const auto& s) -> std::string {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, CliqueBlocksSpec>)
          return "clique_blocks(blocks=" + std::to_string(s.n_blocks) +
                 ",size=" + std::to_string(s.block_size) + ",law=" + s.law_label + ")";
        else if constexpr (std::is_same_v<T, MDependentWindowSpec>)
          return "m_dependent_window(n=" + std::to_string(s.n) + ",m=" + std::to_string(s.m) +
                 ",law=" + s.law_label + ",window=" + window_name(s.window) + ")";
        else if constexpr (std::is_same_v<T, ThreePointSpec>)
          return "three_point(delta=" + std::to_string(s.delta) + ",n=" + std::to_string(s.n) + ")";
        else if constexpr (std::is_same_v<T, BernoulliDecaySpec>)
          return "bernoulli_decay(n=" + std::to_string(s.n) + ")";
        else
          return "custom(N=" + std::to_string(s.family->size()) +
                 (s.verified_graph ? ",graph=verified)" : ",graph=unverified)");
      },
      variant_);
}

std::size_t FamilySpec::size() const {
  return std::visit(
      [](const auto& s) -> std::size_t {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, CliqueBlocksSpec>)
          return s.n_blocks * s.block_size;
        else if constexpr (std::is_same_v<T, MDependentWindowSpec>)
          return s.n;
        else if constexpr (std::is_same_v<T, ThreePointSpec>)
          return s.n;
        else if constexpr (std::is_same_v<T, BernoulliDecaySpec>)
          return s.n;
        else
          return s.family->size();
      },
      variant_);
}

DependencyGraph FamilySpec::declared_graph() const {
  return std::visit(
      [this](const auto& s) -> DependencyGraph {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, CliqueBlocksSpec>) {
          std::vector<std::vector<std::uint32_t>> groups(s.n_blocks);
          for (std::size_t b = 0; b < s.n_blocks; ++b)
            for (std::size_t j = 0; j < s.block_size; ++j)
              groups[b].push_back(std::uint32_t(b * s.block_size + j));
          return DependencyGraph::disjoint_cliques(size(), groups);
        } else if constexpr (std::is_same_v<T, MDependentWindowSpec>) {
          return DependencyGraph::banded(s.n, s.m);
        } else if constexpr (std::is_same_v<T, ThreePointSpec>) {
          return DependencyGraph::empty(s.n);
        } else if constexpr (std::is_same_v<T, BernoulliDecaySpec>) {
          return DependencyGraph::empty(s.n);
        } else {
          return s.family->graph();
        }
      },
      variant_);
}

std::size_t FamilySpec::declared_degree() const { return declared_graph().max_degree(); }

bool FamilySpec::independent() const {
  return std::visit(
      [](const auto& s) -> bool {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, CliqueBlocksSpec>)
          return s.block_size == 1;
        else if constexpr (std::is_same_v<T, MDependentWindowSpec>)
          return s.m == 0;
        else if constexpr (std::is_same_v<T, ThreePointSpec>)
          return true;
        else if constexpr (std::is_same_v<T, BernoulliDecaySpec>)
          return true;
        else
          return s.family->graph().edges().empty();
      },
      variant_);
}

double FamilySpec::mean_S() const {
  return std::visit(
      [](const auto& s) -> double {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, CliqueBlocksSpec>)
          return double(s.n_blocks * s.block_size) * s.base.mean();
        else if constexpr (std::is_same_v<T, MDependentWindowSpec>)
          return double(s.n) * window_law(s.base, s.m, s.window).mean();
        else if constexpr (std::is_same_v<T, ThreePointSpec>)
          return 0.0;
        else if constexpr (std::is_same_v<T, BernoulliDecaySpec>) {
          KahanSum e;
          for (std::size_t k = 1; k <= s.n; ++k) e.add(1.0 / double(k));
          return e.value();
        } else {
          return s.family->mean_S();
        }
      },
      variant_);
}

double FamilySpec::var_S() const {
  return std::visit(
      [](const auto& s) -> double {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, CliqueBlocksSpec>) {
          const double bs = double(s.block_size);
          return double(s.n_blocks) * bs * bs * s.base.variance();
        } else if constexpr (std::is_same_v<T, MDependentWindowSpec>) {
          KahanSum v;
          v.add(double(s.n) * window_cov(s.base, s.m, s.window, 0));
          for (std::size_t d = 1; d <= s.m && d < s.n; ++d)
            v.add(2.0 * double(s.n - d) * window_cov(s.base, s.m, s.window, d));
          return v.value();
        } else if constexpr (std::is_same_v<T, ThreePointSpec>) {
          // V[Y_k] = k^(2/d) - (k-1)^(2/d) telescopes to n^(2/d).
          return std::pow(double(s.n), 2.0 / s.delta);
        } else if constexpr (std::is_same_v<T, BernoulliDecaySpec>) {
          KahanSum v;
          for (std::size_t k = 1; k <= s.n; ++k) {
            const double p = 1.0 / double(k);
            v.add(p * (1.0 - p));
          }
          return v.value();
        } else {
          return s.family->variance_S();
        }
      },
      variant_);
}

namespace {

// Per-vertex marginal laws of a spec, without materializing the joint family.
void for_each_marginal(const FamilySpec& spec,
                       const std::function<void(std::size_t, const DiscreteLaw&)>& fn) {
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, CliqueBlocksSpec>) {
          for (std::size_t k = 0; k < s.n_blocks * s.block_size; ++k) fn(k, s.base);
        } else if constexpr (std::is_same_v<T, MDependentWindowSpec>) {
          const DiscreteLaw y = window_law(s.base, s.m, s.window);
          for (std::size_t k = 0; k < s.n; ++k) fn(k, y);
        } else if constexpr (std::is_same_v<T, ThreePointSpec>) {
          for (std::size_t k = 1; k <= s.n; ++k) {
            const DiscreteLaw l = three_point_law(s.delta, k);
            fn(k - 1, l);
          }
        } else if constexpr (std::is_same_v<T, BernoulliDecaySpec>) {
          for (std::size_t k = 1; k <= s.n; ++k) {
            const DiscreteLaw l = DiscreteLaw::bernoulli(1.0 / double(k));
            fn(k - 1, l);
          }
        } else {
          for (std::size_t k = 0; k < s.family->size(); ++k)
            fn(k, s.family->marginal(std::uint32_t(k)));
        }
      },
      spec.variant());
}

}  // namespace

MomentProfile FamilySpec::profile(const std::vector<double>& deltas) const {
  if (const auto* cust = std::get_if<CustomSpec>(&variant_)) {
    MomentProfile p = derive_profile(*cust->family, deltas);
    if (!cust->verified_graph) p.notes.push_back("unverified graph (N > 8)");
    return p;
  }
  MomentProfile p;
  p.N = size();
  p.D = declared_degree();
  p.centering = centering_;
  const double var = var_S();
  if (!(var > 0.0)) throw DegenerateVariance("V[S] = 0");
  p.v = std::sqrt(var);

  std::vector<KahanSum> a(deltas.size());
  std::vector<double> m(deltas.size(), 0.0);
  double sup = 0.0;
  for_each_marginal(*this, [&](std::size_t k, const DiscreteLaw& law) {
    double c = 0.0;
    switch (centering_.mode) {
      case CenteringMode::Zero: c = 0.0; break;
      case CenteringMode::Mean: c = law.mean(); break;
      case CenteringMode::Custom: c = centering_.custom_values.at(k); break;
    }
    for (std::size_t i = 0; i < deltas.size(); ++i) {
      if (deltas[i] < 2.0) throw WrongRegime("profile requires delta >= 2");
      const double ek = law.abs_moment(deltas[i], c);
      a[i].add(ek);
      m[i] = std::max(m[i], std::pow(ek, 1.0 / deltas[i]));
    }
    sup = std::max(sup, law.max_abs_deviation(c));
  });
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    p.A[deltas[i]] = a[i].value();
    p.M[deltas[i]] = m[i];
  }
  p.L = sup;

  // Exact rho where a closed route exists.
  if (const auto* cl = std::get_if<CliqueBlocksSpec>(&variant_)) {
    const double bs = double(cl->block_size);
    p.rho =
        std::abs(double(cl->n_blocks) * bs * bs * bs * cl->base.central_moment(3, cl->base.mean()));
  } else if (std::holds_alternative<ThreePointSpec>(variant_)) {
    p.rho = 0.0;  // symmetric atoms
  } else if (const auto* bd = std::get_if<BernoulliDecaySpec>(&variant_)) {
    KahanSum r;
    for (std::size_t k = 1; k <= bd->n; ++k) {
      const double q = 1.0 / double(k);
      r.add(q * (1.0 - q) * (1.0 - 2.0 * q));
    }
    p.rho = std::abs(r.value());
  } else if (const auto* md = std::get_if<MDependentWindowSpec>(&variant_)) {
    if (md->m == 0) {
      const DiscreteLaw y = window_law(md->base, 0, md->window);
      p.rho = std::abs(double(md->n) * y.central_moment(3, y.mean()));
    } else {
      const double outcomes = std::pow(double(md->base.size()), double(md->n + md->m));
      if (outcomes <= double(kDefaultSupportCap)) {
        p.rho = std::abs(exact_family().third_central_S());
      } else {
        p.notes.push_back("rho omitted: no closed-form route for m-dependent windows at this size");
      }
    }
  }
  p.validate();
  return p;
}

DiscreteFamily FamilySpec::exact_family(std::uint64_t support_cap) const {
  return std::visit(
      [&](const auto& s) -> DiscreteFamily {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, CliqueBlocksSpec>) {
          std::vector<CouplingBlock> blocks;
          std::vector<std::vector<std::uint32_t>> groups(s.n_blocks);
          for (std::size_t b = 0; b < s.n_blocks; ++b) {
            for (std::size_t j = 0; j < s.block_size; ++j)
              groups[b].push_back(std::uint32_t(b * s.block_size + j));
            blocks.push_back(CouplingBlock::copies(groups[b], s.base));
          }
          return DiscreteFamily(std::move(blocks),
                                DependencyGraph::disjoint_cliques(size(), groups), centering_,
                                support_cap);
        } else if constexpr (std::is_same_v<T, MDependentWindowSpec>) {
          const double outcomes = std::pow(double(s.base.size()), double(s.n + s.m));
          if (outcomes > double(support_cap))
            throw OracleTooLarge("m-dependent joint support exceeds enumeration cap");
          std::vector<std::uint32_t> vertices(s.n);
          for (std::size_t k = 0; k < s.n; ++k) vertices[k] = std::uint32_t(k);
          std::vector<JointOutcome> outs;
          for_each_tuple(s.base, s.n + s.m, [&](double p, const double* xs) {
            std::vector<double> ys(s.n);
            for (std::size_t k = 0; k < s.n; ++k) ys[k] = window_apply(s.window, xs + k, s.m + 1);
            outs.push_back({p, std::move(ys)});
          });
          std::vector<CouplingBlock> blocks{CouplingBlock::joint(vertices, std::move(outs))};
          return DiscreteFamily(std::move(blocks), DependencyGraph::banded(s.n, s.m), centering_,
                                support_cap);
        } else if constexpr (std::is_same_v<T, ThreePointSpec>) {
          std::vector<CouplingBlock> blocks;
          for (std::size_t k = 1; k <= s.n; ++k)
            blocks.push_back(
                CouplingBlock::singleton(std::uint32_t(k - 1), three_point_law(s.delta, k)));
          return DiscreteFamily(std::move(blocks), DependencyGraph::empty(s.n), centering_,
                                support_cap);
        } else if constexpr (std::is_same_v<T, BernoulliDecaySpec>) {
          std::vector<CouplingBlock> blocks;
          for (std::size_t k = 1; k <= s.n; ++k)
            blocks.push_back(CouplingBlock::singleton(std::uint32_t(k - 1),
                                                      DiscreteLaw::bernoulli(1.0 / double(k))));
          return DiscreteFamily(std::move(blocks), DependencyGraph::empty(s.n), centering_,
                                support_cap);
        } else {
          return *s.family;
        }
      },
      variant_);
}

// ---- sampling ----

struct SpecSampler::Impl {
  enum class Kind { CliqueBits, CliqueGeneric, MDep, ThreePoint, Bernoulli, Blocks };
  Kind kind;

  // CliqueBits / CliqueGeneric
  std::size_t n_blocks = 0;
  double block_size = 1.0;
  double bit_x0 = 0.0, bit_x1 = 0.0;
  std::vector<double> cum;     // cumulative probs of base
  std::vector<double> values;  // base values

  // MDep
  std::size_t n = 0, m = 0;
  WindowKind window = WindowKind::Sum;

  // ThreePoint
  std::vector<double> tp_side;
  std::vector<double> tp_value;

  // Blocks (custom): per-block cumulative outcome probs and outcome sums
  std::vector<std::vector<double>> blk_cum;
  std::vector<std::vector<double>> blk_sum;
};

namespace {

double sample_from_tables(const std::vector<double>& cum, const std::vector<double>& values,
                          double u) {
  const auto it = std::upper_bound(cum.begin(), cum.end(), u);
  const std::size_t i = std::min<std::size_t>(it - cum.begin(), values.size() - 1);
  return values[i];
}

}  // namespace

SpecSampler::SpecSampler(const FamilySpec& spec) {
  auto impl = std::make_shared<Impl>();
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, CliqueBlocksSpec>) {
          impl->n_blocks = s.n_blocks;
          impl->block_size = double(s.block_size);
          if (s.base.size() == 2 && s.base.atoms()[0].p == 0.5) {
            impl->kind = Impl::Kind::CliqueBits;
            impl->bit_x0 = s.base.atoms()[0].x;
            impl->bit_x1 = s.base.atoms()[1].x;
          } else {
            impl->kind = Impl::Kind::CliqueGeneric;
            double c = 0.0;
            for (const auto& a : s.base.atoms()) {
              c += a.p;
              impl->cum.push_back(c);
              impl->values.push_back(a.x);
            }
          }
        } else if constexpr (std::is_same_v<T, MDependentWindowSpec>) {
          impl->kind = Impl::Kind::MDep;
          impl->n = s.n;
          impl->m = s.m;
          impl->window = s.window;
          double c = 0.0;
          for (const auto& a : s.base.atoms()) {
            c += a.p;
            impl->cum.push_back(c);
            impl->values.push_back(a.x);
          }
        } else if constexpr (std::is_same_v<T, ThreePointSpec>) {
          impl->kind = Impl::Kind::ThreePoint;
          impl->n = s.n;
          for (std::size_t k = 1; k <= s.n; ++k) {
            const ThreePointVertex v = three_point_vertex(s.delta, k);
            impl->tp_side.push_back(v.side_prob);
            impl->tp_value.push_back(v.value);
          }
        } else if constexpr (std::is_same_v<T, BernoulliDecaySpec>) {
          impl->kind = Impl::Kind::Bernoulli;
          impl->n = s.n;
        } else {
          impl->kind = Impl::Kind::Blocks;
          for (const auto& b : s.family->blocks()) {
            std::vector<double> cum, sums;
            double c = 0.0;
            for (const auto& o : b.outcomes) {
              c += o.p;
              cum.push_back(c);
              KahanSum t;
              for (double v : o.values) t.add(v);
              sums.push_back(t.value());
            }
            impl->blk_cum.push_back(std::move(cum));
            impl->blk_sum.push_back(std::move(sums));
          }
        }
      },
      spec.variant());
  impl_ = std::move(impl);
}

double SpecSampler::sample_S(std::uint64_t seed, std::uint64_t index) const {
  const Impl& im = *impl_;
  switch (im.kind) {
    case Impl::Kind::CliqueBits: {
      const Philox gen(seed, index);
      const std::size_t n = im.n_blocks;
      const std::size_t full = n / 64;
      std::uint64_t count = 0;
      std::size_t w = 0;
      std::uint64_t ctr = 0;
      std::array<std::uint64_t, 2> pair{};
      for (; w < full; ++w) {
        if ((w & 1) == 0) pair = gen.words64(ctr++);
        count += std::uint64_t(std::popcount(pair[w & 1]));
      }
      const std::size_t rest = n % 64;
      if (rest) {
        if ((w & 1) == 0) pair = gen.words64(ctr++);
        count += std::uint64_t(std::popcount(pair[w & 1] & ((std::uint64_t(1) << rest) - 1)));
      }
      return im.block_size * (double(count) * im.bit_x1 + double(n - count) * im.bit_x0);
    }
    case Impl::Kind::CliqueGeneric: {
      SubstreamRng rng(seed, index);
      KahanSum s;
      for (std::size_t b = 0; b < im.n_blocks; ++b)
        s.add(sample_from_tables(im.cum, im.values, rng.next_unit()));
      return im.block_size * s.value();
    }
    case Impl::Kind::MDep: {
      SubstreamRng rng(seed, index);
      std::vector<double> xs(im.n + im.m);
      for (auto& x : xs) x = sample_from_tables(im.cum, im.values, rng.next_unit());
      KahanSum s;
      for (std::size_t k = 0; k < im.n; ++k) s.add(window_apply(im.window, xs.data() + k, im.m + 1));
      return s.value();
    }
    case Impl::Kind::ThreePoint: {
      SubstreamRng rng(seed, index);
      KahanSum s;
      for (std::size_t k = 0; k < im.n; ++k) {
        const double u = rng.next_unit();
        if (u < im.tp_side[k])
          s.add(-im.tp_value[k]);
        else if (u < 2.0 * im.tp_side[k])
          s.add(im.tp_value[k]);
      }
      return s.value();
    }
    case Impl::Kind::Bernoulli: {
      SubstreamRng rng(seed, index);
      double s = 0.0;
      for (std::size_t k = 1; k <= im.n; ++k)
        if (rng.next_unit() < 1.0 / double(k)) s += 1.0;
      return s;
    }
    case Impl::Kind::Blocks: {
      SubstreamRng rng(seed, index);
      KahanSum s;
      for (std::size_t b = 0; b < im.blk_cum.size(); ++b)
        s.add(sample_from_tables(im.blk_cum[b], im.blk_sum[b], rng.next_unit()));
      return s.value();
    }
  }
  return 0.0;
}

DiscreteFamily random_block_family(std::uint64_t seed, std::uint64_t index,
                                   const RandomFamilyOptions& opts) {
  SubstreamRng rng(seed, index);
  const std::size_t span = opts.max_n - opts.min_n + 1;
  const std::size_t n = opts.min_n + std::size_t(rng.next_unit() * double(span));

  std::vector<CouplingBlock> blocks;
  std::vector<std::vector<std::uint32_t>> groups;
  std::uint32_t next = 0;
  while (next < n) {
    const std::size_t room = std::min<std::size_t>(opts.max_block, n - next);
    const std::size_t size = 1 + std::size_t(rng.next_unit() * double(room));
    std::vector<std::uint32_t> vertices;
    for (std::size_t i = 0; i < size; ++i) vertices.push_back(next++);
    const std::size_t n_atoms = 2 + std::size_t(rng.next_unit() * double(opts.max_atoms - 1));
    std::vector<Atom> atoms(n_atoms);
    double total = 0.0;
    for (auto& a : atoms) {
      a.x = -2.0 + 4.0 * rng.next_unit();
      a.p = 0.05 + rng.next_unit();
      total += a.p;
    }
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < n_atoms; ++i) {
      atoms[i].p /= total;
      acc += atoms[i].p;
    }
    atoms[n_atoms - 1].p = 1.0 - acc;
    groups.push_back(vertices);
    blocks.push_back(CouplingBlock::copies(std::move(vertices), DiscreteLaw(std::move(atoms))));
  }

  CenteringChoice centering;
  switch (opts.centering) {
    case CenteringMode::Zero: centering = CenteringChoice::zero(); break;
    case CenteringMode::Mean: centering = CenteringChoice::mean(); break;
    case CenteringMode::Custom: {
      std::vector<double> c(n);
      for (auto& v : c) v = -1.0 + 2.0 * rng.next_unit();
      centering = CenteringChoice::custom(std::move(c));
      break;
    }
  }
  return DiscreteFamily(std::move(blocks), DependencyGraph::disjoint_cliques(n, groups),
                        std::move(centering));
}

LindebergFellerReport lindeberg_feller_report(const FamilySpec& spec, double epsilon) {
  if (!spec.independent())
    throw WrongRegime("Lindeberg/Feller report requires an independent family");
  const double var = spec.var_S();
  if (!(var > 0.0)) throw DegenerateVariance("V[S] = 0");
  const double threshold = epsilon * epsilon * var;
  double max_var = 0.0;
  KahanSum lindeberg;
  for_each_marginal(spec, [&](std::size_t, const DiscreteLaw& law) {
    max_var = std::max(max_var, law.variance());
    for (const auto& a : law.atoms())
      if (a.x * a.x > threshold) lindeberg.add(a.p * a.x * a.x);
  });
  return {var, max_var / var, lindeberg.value() / var};
}

}  // namespace begraph
