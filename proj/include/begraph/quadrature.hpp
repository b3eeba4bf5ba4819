#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "begraph/errors.hpp"

namespace begraph {

// Adaptive Gauss-Kronrod G7/K15 with bisection on the worst panel.
// abs_tol is on the summed error estimate; panel_cap bounds the total number
// of panel evaluations.
template <class F>
double adaptive_gk15(const F& f, double a, double b, double abs_tol = 1e-9,
                     std::size_t panel_cap = 10000) {
  // K15 nodes (positive half) and weights; rows 0..3 carry the G7 weights.
  static const double node[8] = {
      0.000000000000000, 0.405845151377397, 0.741531185599394, 0.949107912342759,
      0.207784955007898, 0.586087235467691, 0.864864423359769, 0.991455371120813};
  static const double wg[4] = {0.417959183673469, 0.381830050505119, 0.279705391489277,
                               0.129484966168870};
  static const double wk[8] = {0.209482141084728, 0.190350578064785, 0.140653259715525,
                               0.063092092629979, 0.204432940075298, 0.169004726639267,
                               0.104790010322250, 0.022935322010529};

  struct Panel {
    double a, b, value, err;
  };
  const auto eval = [&](double lo, double hi) -> Panel {
    const double mid = 0.5 * (lo + hi);
    const double h = 0.5 * (hi - lo);
    const double f0 = f(mid);
    double g7 = wg[0] * f0;
    double k15 = wk[0] * f0;
    for (int i = 1; i < 8; ++i) {
      const double dx = h * node[i];
      const double fi = f(mid + dx) + f(mid - dx);
      k15 += wk[i] * fi;
      if (i < 4) g7 += wg[i] * fi;
    }
    g7 *= h;
    k15 *= h;
    const double diff = std::abs(g7 - k15);
    return {lo, hi, k15, 200.0 * diff * std::sqrt(200.0 * diff)};
  };

  std::vector<Panel> panels{eval(a, b)};
  std::size_t evaluations = 1;
  while (true) {
    double total_err = 0.0;
    std::size_t worst = 0;
    for (std::size_t i = 0; i < panels.size(); ++i) {
      total_err += panels[i].err;
      if (panels[i].err > panels[worst].err) worst = i;
    }
    if (total_err <= abs_tol) break;
    if (evaluations + 2 > panel_cap)
      throw QuadratureFailure("panel cap reached before meeting tolerance");
    const Panel p = panels[worst];
    const double mid = 0.5 * (p.a + p.b);
    panels[worst] = eval(p.a, mid);
    panels.push_back(eval(mid, p.b));
    evaluations += 2;
  }
  double sum = 0.0;
  for (const auto& p : panels) sum += p.value;
  return sum;
}

}  // namespace begraph
