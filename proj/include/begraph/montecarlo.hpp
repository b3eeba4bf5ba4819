#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "begraph/generators.hpp"
#include "begraph/report.hpp"

namespace begraph {

// Which theorem a verification run certifies.
struct TheoremChoice {
  TheoremId id = TheoremId::Linfty;
  double delta = 0.0;  // required for DeltaGe3 / Delta23

  static TheoremChoice parse(const std::string& name, double delta);
  std::string name() const;
};

// n_samples i.i.d. realizations of W = (S - E[S])/v; exact E,v come from the
// generator. Bitwise reproducible given (spec, seed); `threads` only chunks
// the index range.
std::vector<double> sample_standardized_sum(const FamilySpec& spec, std::uint64_t seed,
                                            std::size_t n_samples, unsigned threads = 1);

// sup over the sorted sample of max(|i/n - Phi(x_i)|, |(i-1)/n - Phi(x_i)|).
double empirical_dkol(std::vector<double> samples);

// DKW band half-width sqrt(ln(2/(1-confidence)) / (2 n)).
double dkw_margin(std::size_t n_samples, double confidence);

struct VerificationReport {
  std::string spec_id;
  std::string theorem;
  std::size_t n_samples = 0;
  double empirical_dkol = 0.0;
  double dkw_margin = 0.0;
  double theoretical_bound = 0.0;  // clamped
  double raw_bound = 0.0;
  bool trivially_clamped = false;  // raw >= 1
  bool pass = false;               // empirical - margin <= clamped bound
  std::uint64_t seed = 0;
};

VerificationReport verify_bound(const FamilySpec& spec, const TheoremChoice& theorem,
                                std::size_t n_samples, double confidence, std::uint64_t seed,
                                unsigned threads = 1);

}  // namespace begraph
