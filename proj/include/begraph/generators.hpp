#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "begraph/family.hpp"
#include "begraph/profile.hpp"

namespace begraph {

enum class WindowKind { Sum, Product };

const char* window_name(WindowKind w);

struct CliqueBlocksSpec {
  std::size_t n_blocks;
  std::size_t block_size;
  DiscreteLaw base;
  std::string law_label;
};

struct MDependentWindowSpec {
  std::size_t n;
  std::size_t m;
  DiscreteLaw base;
  WindowKind window;
  std::string law_label;
};

struct ThreePointSpec {
  double delta;
  std::size_t n;
};

struct BernoulliDecaySpec {
  std::size_t n;
};

struct CustomSpec {
  std::shared_ptr<const DiscreteFamily> family;
  bool verified_graph;  // exact independence check ran (only for N <= 8)
};

// A named family construction: exact DiscreteFamily at small N, closed-form
// moment profile and seeded sampler at any N.
class FamilySpec {
 public:
  using Variant = std::variant<CliqueBlocksSpec, MDependentWindowSpec, ThreePointSpec,
                               BernoulliDecaySpec, CustomSpec>;

  FamilySpec(Variant v, CenteringChoice centering);

  const Variant& variant() const { return variant_; }
  const CenteringChoice& centering() const { return centering_; }
  std::string id() const;

  std::size_t size() const;        // N
  std::size_t declared_degree() const;  // D of the declared graph
  DependencyGraph declared_graph() const;

  double mean_S() const;  // exact
  double var_S() const;   // exact

  // Exact moment profile at the requested deltas without materializing the
  // joint law (rho omitted with a note where no exact route exists).
  MomentProfile profile(const std::vector<double>& deltas) const;

  // Materializes the exact DiscreteFamily; throws OracleTooLarge when the
  // construction cannot be enumerated within the cap.
  DiscreteFamily exact_family(std::uint64_t support_cap = kDefaultSupportCap) const;

  bool independent() const;  // declared graph has no edges

 private:
  Variant variant_;
  CenteringChoice centering_;
};

FamilySpec clique_blocks(std::size_t n_blocks, std::size_t block_size, DiscreteLaw base,
                         std::string law_label = "custom",
                         CenteringChoice centering = CenteringChoice::mean());
FamilySpec m_dependent_window(std::size_t n, std::size_t m, DiscreteLaw base, WindowKind window,
                              std::string law_label = "custom",
                              CenteringChoice centering = CenteringChoice::mean());
FamilySpec three_point_family(double delta, std::size_t n);
FamilySpec bernoulli_decay(std::size_t n);
FamilySpec custom_family(DiscreteFamily family);

// One realization of S per sample index; values depend only on
// (seed, sample index), so chunked parallel sampling reproduces a serial run.
class SpecSampler {
 public:
  explicit SpecSampler(const FamilySpec& spec);
  double sample_S(std::uint64_t seed, std::uint64_t index) const;

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

// Seeded random small families (random atoms, random block couplings) used by
// the batch verification harnesses. The declared graph is the union of
// intra-block cliques, a dependency graph by construction.
struct RandomFamilyOptions {
  std::size_t min_n = 2;
  std::size_t max_n = 8;
  std::size_t max_block = 3;
  std::size_t max_atoms = 3;
  CenteringMode centering = CenteringMode::Mean;
};

DiscreteFamily random_block_family(std::uint64_t seed, std::uint64_t index,
                                   const RandomFamilyOptions& opts = {});

struct LindebergFellerReport {
  double variance_S;
  double feller_ratio;   // max_k V[Y_k] / V[S]
  double lindeberg_sum;  // (1/V[S]) sum_k E[Y_k^2 1{Y_k^2 > eps^2 V[S]}]
};

// Exact Feller ratio and Lindeberg sum for an independent family with exact
// per-vertex laws. Dependent specs raise WrongRegime.
LindebergFellerReport lindeberg_feller_report(const FamilySpec& spec, double epsilon);

}  // namespace begraph
