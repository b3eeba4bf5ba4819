#include "begraph/regimes.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include "begraph/errors.hpp"

namespace begraph {

const char* exponent_name(ExponentKind k) {
  switch (k) {
    case ExponentKind::JL: return "jl";
    case ExponentKind::P: return "p";
    case ExponentKind::CS: return "cs";
  }
  return "?";
}

ExponentTable exponents(const RegimePoint& pt) {
  if (!(pt.delta > 2.0)) throw WrongRegime("exponents require delta > 2");
  if (!(pt.alpha >= 0.0 && pt.alpha <= 1.0)) throw WrongRegime("alpha must lie in [0,1]");
  const double d = pt.delta, a = pt.alpha;
  const double m3 = std::min(3.0, d);
  ExponentTable t{};
  t.jl = (a - 1.0) * (d - 2.0) / (2.0 * (d + 1.0));
  t.cs = 1.0 - 0.5 * m3 + a * (4.5 * m3 - 5.0);
  t.p = d < 4.0 ? std::numeric_limits<double>::infinity() : a - 0.25;
  t.conjectured = (a - 1.0) * (d - 2.0) / 2.0;
  // argmin with tie order jl < p < cs
  t.best = ExponentKind::JL;
  double best = t.jl;
  if (t.p < best) {
    best = t.p;
    t.best = ExponentKind::P;
  }
  if (t.cs < best) {
    best = t.cs;
    t.best = ExponentKind::CS;
  }
  return t;
}

double crossover_cs_jl(double delta) {
  if (delta < 3.0) return (delta * delta - 2.0 * delta) / (9.0 * delta * delta - 2.0 * delta - 8.0);
  return 3.0 / (16.0 * delta + 19.0);
}

double crossover_p_jl(double delta) { return (5.0 - delta) / (8.0 + 2.0 * delta); }

std::vector<double> default_delta_grid() {
  std::vector<double> g;
  for (int i = 1; i <= 400; ++i) g.push_back(2.0 + 0.02 * i);
  return g;
}

std::vector<double> default_alpha_grid() {
  std::vector<double> g;
  for (int i = 0; i <= 100; ++i) g.push_back(0.001 * i);
  return g;
}

RegionMap crossover_curves(const std::vector<double>& delta_grid,
                           const std::vector<double>& alpha_grid) {
  RegionMap map;
  map.deltas = delta_grid;
  map.alphas = alpha_grid;
  map.winner.reserve(delta_grid.size() * alpha_grid.size());
  for (double a : alpha_grid)
    for (double d : delta_grid) map.winner.push_back(exponents({d, a}).best);
  return map;
}

namespace {

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

}  // namespace

std::string region_map_csv(const RegionMap& map) {
  std::string out = "delta,alpha,jl,cs,p,conjectured,winner\n";
  for (std::size_t ai = 0; ai < map.alphas.size(); ++ai) {
    for (std::size_t di = 0; di < map.deltas.size(); ++di) {
      const ExponentTable t = exponents({map.deltas[di], map.alphas[ai]});
      out += num(map.deltas[di]);
      out += ',';
      out += num(map.alphas[ai]);
      out += ',';
      out += num(t.jl);
      out += ',';
      out += num(t.cs);
      out += ',';
      out += std::isinf(t.p) ? "inf" : num(t.p);
      out += ',';
      out += num(t.conjectured);
      out += ',';
      out += exponent_name(map.at(di, ai));
      out += '\n';
    }
  }
  return out;
}

std::string region_map_svg(const RegionMap& map) {
  const int cell = 3;
  const int margin = 60;
  const int w = margin + int(map.deltas.size()) * cell + 20;
  const int h = margin + int(map.alphas.size()) * cell + 40;
  const auto color = [](ExponentKind k) {
    switch (k) {
      case ExponentKind::JL: return "#2ca02c";
      case ExponentKind::P: return "#ff7f0e";
      case ExponentKind::CS: return "#1f77b4";
    }
    return "#000000";
  };
  std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(w) +
                    "\" height=\"" + std::to_string(h) + "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  // alpha grows upward; run-length merge equal-winner cells along each row
  for (std::size_t ai = 0; ai < map.alphas.size(); ++ai) {
    const int y = margin / 2 + int(map.alphas.size() - 1 - ai) * cell;
    std::size_t di = 0;
    while (di < map.deltas.size()) {
      std::size_t dj = di;
      while (dj + 1 < map.deltas.size() && map.at(dj + 1, ai) == map.at(di, ai)) ++dj;
      svg += "<rect x=\"" + std::to_string(margin + int(di) * cell) + "\" y=\"" + std::to_string(y) +
             "\" width=\"" + std::to_string(int(dj - di + 1) * cell) + "\" height=\"" +
             std::to_string(cell) + "\" fill=\"" + color(map.at(di, ai)) + "\"/>\n";
      di = dj + 1;
    }
  }
  const int plot_bottom = margin / 2 + int(map.alphas.size()) * cell;
  svg += "<text x=\"" + std::to_string(margin) + "\" y=\"" + std::to_string(plot_bottom + 16) +
         "\" font-size=\"12\">delta: " + num(map.deltas.front()) + " .. " + num(map.deltas.back()) +
         "</text>\n";
  svg += "<text x=\"8\" y=\"" + std::to_string(margin / 2 + 10) +
         "\" font-size=\"12\">alpha up to " + num(map.alphas.back()) + "</text>\n";
  const int lx = margin, ly = plot_bottom + 30;
  const char* labels[3] = {"JL (this work)", "P (Penrose)", "CS (Chen-Shao)"};
  const ExponentKind kinds[3] = {ExponentKind::JL, ExponentKind::P, ExponentKind::CS};
  for (int i = 0; i < 3; ++i) {
    svg += "<rect x=\"" + std::to_string(lx + i * 140) + "\" y=\"" + std::to_string(ly - 10) +
           "\" width=\"12\" height=\"12\" fill=\"" + color(kinds[i]) + "\"/>\n";
    svg += "<text x=\"" + std::to_string(lx + i * 140 + 16) + "\" y=\"" + std::to_string(ly) +
           "\" font-size=\"12\">" + labels[i] + "</text>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace begraph
