#pragma once

#include <string>
#include <vector>

namespace begraph {

struct RegimePoint {
  double delta;  // in (2, 10]
  double alpha;  // ln(D+1)/ln N, in [0, 1]
};

enum class ExponentKind { JL, P, CS };

const char* exponent_name(ExponentKind k);

struct ExponentTable {
  double jl;
  double cs;
  double p;  // +inf when delta < 4
  ExponentKind best;
  double conjectured;  // (alpha-1)(delta-2)/2, overlay only, never asserted
};

// JL = (a-1)(d-2)/(2(d+1)); P = a - 1/4 + inf*1{d<4};
// CS = 1 - min(3,d)/2 + a(9/2 min(3,d) - 5).
// Ties broken jl < p < cs.
ExponentTable exponents(const RegimePoint& point);

// Closed-form crossover curves (alpha thresholds as functions of delta).
double crossover_cs_jl(double delta);        // CS < JL iff alpha < this
double crossover_p_jl(double delta);         // P < JL iff delta in [4,5) and alpha < this
inline double crossover_p_cs() { return 1.0 / 30.0; }  // P < CS iff delta >= 4 and alpha > 1/30

struct RegionMap {
  std::vector<double> deltas;
  std::vector<double> alphas;
  std::vector<ExponentKind> winner;  // row-major: [ai * deltas.size() + di]

  ExponentKind at(std::size_t di, std::size_t ai) const { return winner[ai * deltas.size() + di]; }
};

// Defaults match the comparison figure: delta step 0.02 over (2,10],
// alpha step 0.001 over [0,0.1].
std::vector<double> default_delta_grid();
std::vector<double> default_alpha_grid();

RegionMap crossover_curves(const std::vector<double>& delta_grid,
                           const std::vector<double>& alpha_grid);

std::string region_map_csv(const RegionMap& map);
// Colors: green = JL, orange = P, blue = CS; legend embedded.
std::string region_map_svg(const RegionMap& map);

}  // namespace begraph
