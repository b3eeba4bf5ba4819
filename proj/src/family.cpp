#include "begraph/family.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "begraph/errors.hpp"
#include "begraph/numerics.hpp"

namespace begraph {

CouplingBlock CouplingBlock::copies(std::vector<std::uint32_t> vertices, const DiscreteLaw& base) {
  CouplingBlock b;
  b.vertices = std::move(vertices);
  b.identical_copies = true;
  b.outcomes.reserve(base.size());
  for (const auto& a : base.atoms()) b.outcomes.push_back({a.p, std::vector<double>(b.vertices.size(), a.x)});
  return b;
}

CouplingBlock CouplingBlock::singleton(std::uint32_t vertex, const DiscreteLaw& law) {
  CouplingBlock b;
  b.vertices = {vertex};
  b.identical_copies = true;
  b.outcomes.reserve(law.size());
  for (const auto& a : law.atoms()) b.outcomes.push_back({a.p, {a.x}});
  return b;
}

CouplingBlock CouplingBlock::joint(std::vector<std::uint32_t> vertices, std::vector<JointOutcome> outcomes) {
  CouplingBlock b;
  b.vertices = std::move(vertices);
  b.outcomes = std::move(outcomes);
  b.identical_copies = false;
  return b;
}

DiscreteFamily::DiscreteFamily(std::vector<CouplingBlock> blocks, DependencyGraph graph,
                               CenteringChoice centering, std::uint64_t support_cap)
    : blocks_(std::move(blocks)), graph_(std::move(graph)), centering_(std::move(centering)), support_cap_(support_cap) {
  const std::size_t n = graph_.vertex_count();
  std::vector<int> seen(n, 0);
  for (const auto& b : blocks_) {
    if (b.vertices.empty()) throw InvalidInput("empty coupling block");
    if (b.outcomes.empty()) throw InvalidInput("coupling block without outcomes");
    KahanSum total;
    for (const auto& o : b.outcomes) {
      if (!(o.p >= 0.0)) throw InvalidInput("negative block outcome probability");
      if (o.values.size() != b.vertices.size()) throw InvalidInput("outcome arity mismatch");
      total.add(o.p);
    }
    if (std::abs(total.value() - 1.0) > 1e-12)
      throw InvalidInput("block outcome probabilities must sum to 1 within 1e-12");
    for (auto v : b.vertices) {
      if (v >= n) throw InvalidInput("block vertex out of range");
      if (seen[v]++) throw InvalidInput("vertex in more than one coupling block");
    }
  }
  for (std::size_t v = 0; v < n; ++v)
    if (!seen[v]) throw InvalidInput("vertex not covered by any coupling block");
  if (centering_.mode == CenteringMode::Custom && centering_.custom_values.size() != n)
    throw InvalidInput("custom centering must list one value per vertex");

  marginals_.reserve(n);
  std::vector<std::vector<Atom>> per_vertex(n);
  for (const auto& b : blocks_)
    for (std::size_t t = 0; t < b.vertices.size(); ++t)
      for (const auto& o : b.outcomes) per_vertex[b.vertices[t]].push_back({o.values[t], o.p});
  for (std::size_t v = 0; v < n; ++v) marginals_.emplace_back(std::move(per_vertex[v]));
}

std::vector<double> DiscreteFamily::centers() const {
  const std::size_t n = size();
  std::vector<double> c(n, 0.0);
  switch (centering_.mode) {
    case CenteringMode::Zero:
      break;
    case CenteringMode::Mean:
      for (std::size_t k = 0; k < n; ++k) c[k] = marginals_[k].mean();
      break;
    case CenteringMode::Custom:
      c = centering_.custom_values;
      break;
  }
  return c;
}

std::uint64_t DiscreteFamily::joint_support_size() const {
  std::uint64_t total = 1;
  for (const auto& b : blocks_) {
    const std::uint64_t m = b.outcomes.size();
    if (total > std::uint64_t(-1) / m) return std::uint64_t(-1);
    total *= m;
  }
  return total;
}

DiscreteLaw DiscreteFamily::block_sum_law(std::size_t b) const {
  std::vector<Atom> atoms;
  atoms.reserve(blocks_[b].outcomes.size());
  for (const auto& o : blocks_[b].outcomes) {
    KahanSum s;
    for (double v : o.values) s.add(v);
    atoms.push_back({s.value(), o.p});
  }
  return DiscreteLaw(std::move(atoms));
}

DiscreteLaw DiscreteFamily::sum_law() const {
  DiscreteLaw acc = DiscreteLaw::point_mass(0.0);
  for (std::size_t b = 0; b < blocks_.size(); ++b)
    acc = convolve(acc, block_sum_law(b), support_cap_);
  return acc;
}

double DiscreteFamily::mean_S() const {
  KahanSum s;
  for (std::size_t b = 0; b < blocks_.size(); ++b) s.add(block_sum_law(b).mean());
  return s.value();
}

double DiscreteFamily::variance_S() const {
  KahanSum s;
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    const DiscreteLaw l = block_sum_law(b);
    s.add(l.central_moment(2, l.mean()));
  }
  return s.value();
}

double DiscreteFamily::third_central_S() const {
  // kappa^(3) is additive over independent groups.
  KahanSum s;
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    const DiscreteLaw l = block_sum_law(b);
    s.add(l.central_moment(3, l.mean()));
  }
  return s.value();
}

DiscreteFamily DiscreteFamily::truncate(double level) const {
  if (!(level > 0.0)) throw InvalidInput("truncation level must be positive");
  const std::vector<double> c = centers();
  std::vector<CouplingBlock> blocks = blocks_;
  for (auto& b : blocks) {
    for (auto& o : b.outcomes) {
      for (std::size_t t = 0; t < b.vertices.size(); ++t) {
        const double ck = c[b.vertices[t]];
        const double d = o.values[t] - ck;
        o.values[t] = std::abs(d) <= level ? o.values[t] : ck;
      }
    }
  }
  return DiscreteFamily(std::move(blocks), graph_, CenteringChoice::custom(c), support_cap_);
}

void DiscreteFamily::for_each_joint_outcome(
    const std::function<void(double, const std::vector<double>&)>& fn) const {
  if (!within_cap()) throw OracleTooLarge("joint support exceeds enumeration cap");
  const std::size_t n = size();
  std::vector<double> values(n, 0.0);
  std::vector<std::size_t> idx(blocks_.size(), 0);
  const auto fill = [&](std::size_t b) {
    const auto& blk = blocks_[b];
    const auto& o = blk.outcomes[idx[b]];
    for (std::size_t t = 0; t < blk.vertices.size(); ++t) values[blk.vertices[t]] = o.values[t];
  };
  for (std::size_t b = 0; b < blocks_.size(); ++b) fill(b);
  while (true) {
    double p = 1.0;
    for (std::size_t b = 0; b < blocks_.size(); ++b) p *= blocks_[b].outcomes[idx[b]].p;
    fn(p, values);
    std::size_t b = 0;
    for (; b < blocks_.size(); ++b) {
      if (++idx[b] < blocks_[b].outcomes.size()) {
        fill(b);
        break;
      }
      idx[b] = 0;
      fill(b);
    }
    if (b == blocks_.size()) break;
  }
}

namespace {

// Joint law of a vertex subset as a map from value tuples to probabilities.
std::map<std::vector<double>, double> subset_law(const DiscreteFamily& fam,
                                                 const std::vector<std::uint32_t>& subset) {
  std::map<std::vector<double>, double> law;
  std::vector<double> key(subset.size());
  fam.for_each_joint_outcome([&](double p, const std::vector<double>& values) {
    for (std::size_t i = 0; i < subset.size(); ++i) key[i] = values[subset[i]];
    law[key] += p;
  });
  return law;
}

}  // namespace

bool verify_dependency_graph(const DiscreteFamily& family, double tol) {
  const std::size_t n = family.size();
  // Assign each vertex to side A (1), side B (2) or neither (0); check every
  // pair of non-connected sides for factorization.
  std::vector<int> side(n, 0);
  const std::function<bool(std::size_t)> rec = [&](std::size_t v) -> bool {
    if (v == n) {
      std::vector<std::uint32_t> a, b;
      for (std::size_t i = 0; i < n; ++i) {
        if (side[i] == 1) a.push_back(std::uint32_t(i));
        if (side[i] == 2) b.push_back(std::uint32_t(i));
      }
      if (a.empty() || b.empty()) return true;
      for (auto i : a)
        for (auto j : b)
          if (family.graph().adjacent(i, j)) return true;  // connected: nothing to check
      const auto la = subset_law(family, a);
      const auto lb = subset_law(family, b);
      std::vector<std::uint32_t> ab = a;
      ab.insert(ab.end(), b.begin(), b.end());
      const auto lab = subset_law(family, ab);
      for (const auto& [ka, pa] : la) {
        for (const auto& [kb, pb] : lb) {
          std::vector<double> kab = ka;
          kab.insert(kab.end(), kb.begin(), kb.end());
          const auto it = lab.find(kab);
          const double pab = it == lab.end() ? 0.0 : it->second;
          if (std::abs(pab - pa * pb) > tol) return false;
        }
      }
      return true;
    }
    for (int s = 0; s <= 2; ++s) {
      side[v] = s;
      if (!rec(v + 1)) return false;
    }
    side[v] = 0;
    return true;
  };
  return rec(0);
}

}  // namespace begraph
