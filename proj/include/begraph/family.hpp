#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "begraph/discrete_law.hpp"
#include "begraph/graph.hpp"

namespace begraph {

enum class CenteringMode { Zero, Mean, Custom };

struct CenteringChoice {
  CenteringMode mode = CenteringMode::Mean;
  std::vector<double> custom_values;  // present iff mode == Custom, length N

  static CenteringChoice zero() { return {CenteringMode::Zero, {}}; }
  static CenteringChoice mean() { return {CenteringMode::Mean, {}}; }
  static CenteringChoice custom(std::vector<double> v) { return {CenteringMode::Custom, std::move(v)}; }
};

// One joint realization of a coupling group: probability and the value of
// every vertex in the group (aligned with CouplingBlock::vertices).
struct JointOutcome {
  double p;
  std::vector<double> values;
};

// A coupling group: vertices that may depend on each other. Distinct groups
// are independent by construction. identical_copies marks groups expressible
// in the family JSON schema (all members equal to one shared draw).
struct CouplingBlock {
  std::vector<std::uint32_t> vertices;
  std::vector<JointOutcome> outcomes;
  bool identical_copies = false;

  static CouplingBlock copies(std::vector<std::uint32_t> vertices, const DiscreteLaw& base);
  static CouplingBlock singleton(std::uint32_t vertex, const DiscreteLaw& law);
  static CouplingBlock joint(std::vector<std::uint32_t> vertices, std::vector<JointOutcome> outcomes);
};

constexpr std::uint64_t kDefaultSupportCap = std::uint64_t(1) << 24;

// Exactly enumerable finite family with a dependency graph; the substrate for
// every exact oracle. Blocks partition {0..N-1}.
class DiscreteFamily {
 public:
  DiscreteFamily(std::vector<CouplingBlock> blocks, DependencyGraph graph,
                 CenteringChoice centering = CenteringChoice::mean(),
                 std::uint64_t support_cap = kDefaultSupportCap);

  std::size_t size() const { return graph_.vertex_count(); }
  const DependencyGraph& graph() const { return graph_; }
  const std::vector<CouplingBlock>& blocks() const { return blocks_; }
  const CenteringChoice& centering() const { return centering_; }
  std::uint64_t support_cap() const { return support_cap_; }

  const DiscreteLaw& marginal(std::uint32_t k) const { return marginals_[k]; }
  // Resolved centering constants c_k.
  std::vector<double> centers() const;

  // Product of coupling-group outcome counts; saturates at uint64 max.
  std::uint64_t joint_support_size() const;
  bool within_cap() const { return joint_support_size() <= support_cap_; }

  // Exact law of S_b = sum of the block's vertices (outcomes collapsed).
  DiscreteLaw block_sum_law(std::size_t b) const;
  // Exact law of S (blocks convolved; throws OracleTooLarge past the cap).
  DiscreteLaw sum_law() const;

  double mean_S() const;            // exact E[S]
  double variance_S() const;        // exact V[S], block-wise (cross-block cov = 0)
  double third_central_S() const;   // exact E[(S-E[S])^3], additive over blocks

  // Truncation at level L around the resolved centers:
  //   Y_k -> c_k + (Y_k - c_k) 1{|Y_k - c_k| <= L}.
  // The result carries the original centers as custom centering.
  DiscreteFamily truncate(double level) const;

  // Enumerates the full joint law (odometer over groups); fn(p, values) gets
  // the per-vertex value vector. Throws OracleTooLarge past the cap.
  void for_each_joint_outcome(const std::function<void(double, const std::vector<double>&)>& fn) const;

 private:
  std::vector<CouplingBlock> blocks_;
  DependencyGraph graph_;
  CenteringChoice centering_;
  std::uint64_t support_cap_;
  std::vector<DiscreteLaw> marginals_;
};

// Exhaustive check that the declared graph is a dependency graph: every pair
// of disjoint vertex sets with no connecting edge has a factorizing joint law.
// Exponential; intended for families with N <= 8.
bool verify_dependency_graph(const DiscreteFamily& family, double tol = 1e-12);

}  // namespace begraph
