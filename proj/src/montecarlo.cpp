#include "begraph/montecarlo.hpp"

#include <algorithm>
#include <cmath>

#include "begraph/bounds.hpp"
#include "begraph/errors.hpp"
#include "begraph/normal.hpp"
#include "begraph/numerics.hpp"

namespace begraph {

TheoremChoice TheoremChoice::parse(const std::string& name, double delta) {
  if (name == "linfty") return {TheoremId::Linfty, 0.0};
  if (name == "linfty_refined") return {TheoremId::LinftyRefined, 0.0};
  if (name == "delta_ge3") return {TheoremId::DeltaGe3, delta};
  if (name == "delta_2_3") return {TheoremId::Delta23, delta};
  throw InvalidInput("unknown theorem '" + name + "' (expected linfty, linfty_refined, delta_ge3, delta_2_3)");
}

std::string TheoremChoice::name() const { return theorem_name(id); }

std::vector<double> sample_standardized_sum(const FamilySpec& spec, std::uint64_t seed,
                                            std::size_t n_samples, unsigned threads) {
  if (n_samples == 0) throw Insufficient("need at least one sample");
  const double var = spec.var_S();
  if (!(var > 0.0)) throw DegenerateVariance("V[S] = 0");
  const double mean = spec.mean_S();
  const double v = std::sqrt(var);
  const SpecSampler sampler(spec);
  std::vector<double> out(n_samples);
  parallel_chunks(n_samples, threads, [&](std::size_t a, std::size_t b) {
    for (std::size_t i = a; i < b; ++i) out[i] = (sampler.sample_S(seed, i) - mean) / v;
  });
  return out;
}

double empirical_dkol(std::vector<double> samples) {
  if (samples.empty()) throw Insufficient("empirical_dkol needs at least one sample");
  std::sort(samples.begin(), samples.end());
  const double n = double(samples.size());
  double best = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double phi = normal_cdf(samples[i]);
    best = std::max(best, std::abs(double(i + 1) / n - phi));
    best = std::max(best, std::abs(double(i) / n - phi));
  }
  return best;
}

double dkw_margin(std::size_t n_samples, double confidence) {
  if (!(confidence > 0.0 && confidence < 1.0)) throw InvalidInput("confidence must lie in (0,1)");
  if (n_samples == 0) throw Insufficient("dkw_margin needs n >= 1");
  return std::sqrt(std::log(2.0 / (1.0 - confidence)) / (2.0 * double(n_samples)));
}

VerificationReport verify_bound(const FamilySpec& spec, const TheoremChoice& theorem,
                                std::size_t n_samples, double confidence, std::uint64_t seed,
                                unsigned threads) {
  std::vector<double> deltas{3.0, 4.0};
  if (theorem.id == TheoremId::DeltaGe3 || theorem.id == TheoremId::Delta23) {
    if (!(theorem.delta > 2.0)) throw WrongRegime("theorem choice needs delta > 2");
    deltas.push_back(theorem.delta);
  }
  const MomentProfile prof = spec.profile(deltas);
  BoundReport bound{};
  switch (theorem.id) {
    case TheoremId::Linfty: bound = bound_linfty(prof); break;
    case TheoremId::LinftyRefined: bound = bound_linfty_refined(prof); break;
    case TheoremId::DeltaGe3: bound = bound_delta_ge3(prof, theorem.delta); break;
    case TheoremId::Delta23: bound = bound_delta_2_3(prof, theorem.delta); break;
    default: throw InvalidInput("verify_bound covers the four main theorems");
  }

  VerificationReport rep;
  rep.spec_id = spec.id();
  rep.theorem = theorem.name();
  rep.n_samples = n_samples;
  rep.seed = seed;
  rep.raw_bound = bound.raw_value;
  rep.theoretical_bound = bound.clamped_value;
  rep.trivially_clamped = bound.raw_value >= 1.0;
  rep.dkw_margin = dkw_margin(n_samples, confidence);
  rep.empirical_dkol = empirical_dkol(sample_standardized_sum(spec, seed, n_samples, threads));
  rep.pass = rep.empirical_dkol - rep.dkw_margin <= rep.theoretical_bound;
  return rep;
}

}  // namespace begraph
