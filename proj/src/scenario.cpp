#include "begraph/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <set>

#include "CLI11.hpp"
#include "json.hpp"

#include "begraph/bounds.hpp"
#include "begraph/clt.hpp"
#include "begraph/cumulants.hpp"
#include "begraph/errors.hpp"
#include "begraph/fourier.hpp"
#include "begraph/generators.hpp"
#include "begraph/io.hpp"
#include "begraph/montecarlo.hpp"
#include "begraph/regimes.hpp"
#include "begraph/ustat.hpp"
#include "begraph/volatility.hpp"

namespace begraph {

namespace {

std::string sanitize(std::string s) {
  std::replace(s.begin(), s.end(), ',', ';');
  std::replace(s.begin(), s.end(), '\n', ' ');
  return s;
}

std::string fmt_delta(double d) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", d);
  return buf;
}

void append_row(std::string& csv, const std::string& id, const BoundReport& r) {
  csv += id + ',' + csv_num(r.raw_value) + ',' + csv_num(r.clamped_value) + ',' + r.binding_branch +
         ',' + (r.valid ? "true" : "false") + ',' + sanitize(r.validity_notes) + '\n';
}

void append_error_row(std::string& csv, const std::string& id, const std::string& what) {
  csv += id + ",,,,false," + sanitize(what) + '\n';
}

}  // namespace

std::string bounds_csv(const MomentProfile& profile, bool include_baselines) {
  std::string csv = "theorem_id,raw,clamped,branch,valid,notes\n";
  const auto row = [&](const std::string& id, auto&& fn) {
    try {
      append_row(csv, id, fn());
    } catch (const Error& e) {
      append_error_row(csv, id, e.what());
    }
  };
  row("linfty", [&] { return bound_linfty(profile); });
  row("linfty_refined", [&] { return bound_linfty_refined(profile); });
  for (const auto& [delta, a] : profile.A) {
    (void)a;
    if (delta >= 3.0)
      row("delta_ge3(" + fmt_delta(delta) + ")", [&, d = delta] { return bound_delta_ge3(profile, d); });
    else if (delta > 2.0)
      row("delta_2_3(" + fmt_delta(delta) + ")", [&, d = delta] { return bound_delta_2_3(profile, d); });
  }
  if (include_baselines) {
    const std::pair<Baseline, const char*> baselines[] = {
        {Baseline::ClassicalBE, "classical_be"},   {Baseline::FmnCorollary30, "fmn_corollary30"},
        {Baseline::Rinott, "rinott"},              {Baseline::Penrose, "penrose"},
        {Baseline::ChenShao, "chen_shao"},         {Baseline::FmnThm39, "fmn_thm39"},
        {Baseline::SteinW1, "stein_w1"},
    };
    for (const auto& [b, name] : baselines)
      row(name, [&, which = b] { return baseline(profile, which); });
  }
  return csv;
}

std::string cumulant_check_csv(std::size_t count, int rmax, std::uint64_t seed) {
  std::string csv = "family_id,r,delta,exact_abs_cumulant,bound,ratio,pass\n";
  std::vector<double> deltas{2.0, 2.5, 3.0};
  for (int r = 4; r <= rmax; ++r) deltas.push_back(double(r));
  for (std::size_t i = 0; i < count; ++i) {
    const DiscreteFamily fam = random_block_family(seed, i);
    const MomentProfile prof = derive_profile(fam, deltas);
    const double L = *prof.L;
    for (int r = 2; r <= rmax; ++r) {
      std::set<double> ds{double(r)};
      for (double d : {2.0, 2.5, 3.0})
        if (d <= double(r)) ds.insert(d);
      const double exact = std::abs(cumulant_of_sum(fam, r));
      for (double d : ds) {
        const double bound = lemma_cumulant_bound(prof, r, d, L);
        const bool pass = exact <= bound * (1.0 + 1e-9);
        csv += std::to_string(i) + ',' + std::to_string(r) + ',' + fmt_delta(d) + ',' +
               csv_num(exact) + ',' + csv_num(bound) + ',' + csv_num(exact / bound) + ',' +
               (pass ? "true" : "false") + '\n';
      }
    }
  }
  return csv;
}

std::string feller_check_csv(const StandardizedLaw& law, const std::vector<double>& Ts) {
  std::string csv = "T,lhs_exact_dkol,rhs,slack\n";
  const double lhs = exact_dkol(law);
  for (double T : Ts) {
    const double rhs = feller_rhs(law, T);
    csv += csv_num(T) + ',' + csv_num(lhs) + ',' + csv_num(rhs) + ',' + csv_num(rhs - lhs) + '\n';
  }
  return csv;
}

namespace {

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty())
    std::cout << content;
  else
    write_file(out_path, content);
}

std::vector<double> read_csv_column(const std::string& path) {
  const std::string text = read_file(path);
  std::vector<double> values;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string::npos) end = text.size();
    const std::string line = text.substr(pos, end - pos);
    pos = end + 1;
    if (line.empty()) continue;
    try {
      values.push_back(std::stod(line));
    } catch (...) {
      throw ParseError(path + ": expected one number per line, got '" + line + "'");
    }
  }
  return values;
}

DiscreteLaw law_from_flag(const std::string& name) {
  if (name == "rademacher") return DiscreteLaw::rademacher();
  if (name.rfind("bernoulli:", 0) == 0) return DiscreteLaw::bernoulli(std::stod(name.substr(10)));
  throw InvalidInput("unknown --law '" + name + "' (rademacher or bernoulli:p)");
}

int run_cli_impl(const std::vector<std::string>& args) {
  CLI::App app{"Berry-Esseen bounds for sums with dependency graphs"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand name

  std::uint64_t seed = 0;
  unsigned threads = 1;
  std::string out_path;
  std::string format = "csv";
  app.add_option("--seed", seed, "global RNG seed");
  app.add_option("--threads", threads, "worker threads for sampling/grids");
  app.add_option("--out", out_path, "output path (stdout when omitted)");
  app.add_option("--format", format, "csv or json where applicable")
      ->check(CLI::IsMember({"csv", "json"}));

  // bounds
  auto* cmd_bounds = app.add_subcommand("bounds", "evaluate every applicable bound on a profile");
  std::string profile_path, family_path, deltas_flag = "2,2.5,3,4";
  bool all = false;
  cmd_bounds->add_option("--profile", profile_path, "moment profile JSON");
  cmd_bounds->add_option("--family", family_path, "family JSON (profile derived)");
  cmd_bounds->add_option("--deltas", deltas_flag, "deltas for --family derivation");
  cmd_bounds->add_flag("--all", all, "include literature baselines");

  // regimes
  auto* cmd_regimes = app.add_subcommand("regimes", "best-exponent region map");
  std::string svg_path;
  cmd_regimes->add_option("--svg", svg_path, "also write an SVG rendering");

  // verify
  auto* cmd_verify = app.add_subcommand("verify", "Monte Carlo certification of a theorem bound");
  std::string spec_path, theorem = "linfty";
  double verify_delta = 3.0, confidence = 0.99;
  std::size_t n_samples = 1000000;
  cmd_verify->add_option("--spec", spec_path, "family spec JSON")->required();
  cmd_verify->add_option("--theorem", theorem, "linfty, linfty_refined, delta_ge3, delta_2_3");
  cmd_verify->add_option("--delta", verify_delta, "delta for the delta-range theorems");
  cmd_verify->add_option("--samples", n_samples, "number of samples");
  cmd_verify->add_option("--confidence", confidence, "DKW confidence level");

  // cumulant-check
  auto* cmd_cum = app.add_subcommand("cumulant-check", "cumulant-bound batch verification");
  std::string families = "random";
  std::size_t count = 200;
  int rmax = 6;
  cmd_cum->add_option("--families", families, "only 'random' is defined");
  cmd_cum->add_option("--count", count, "number of random families");
  cmd_cum->add_option("--rmax", rmax, "largest cumulant order");

  // feller-check
  auto* cmd_feller = app.add_subcommand("feller-check", "smoothing-inequality check on an exact law");
  std::string law_path, T_flag = "1,2,5,10";
  cmd_feller->add_option("--law", law_path, "standardized law or family JSON")->required();
  cmd_feller->add_option("--T", T_flag, "comma-separated cutoffs");

  // generate
  auto* cmd_gen = app.add_subcommand("generate", "write a family or spec document");
  std::string kind = "clique", law_flag = "rademacher", spec_out, window_flag = "product";
  std::size_t g_blocks = 4, g_size = 2, g_n = 16, g_m = 1;
  double g_delta = 3.0;
  cmd_gen->add_option("--kind", kind, "clique, mdep, three-point, bernoulli");
  cmd_gen->add_option("--blocks", g_blocks, "clique: number of blocks");
  cmd_gen->add_option("--size", g_size, "clique: block size");
  cmd_gen->add_option("--law", law_flag, "base law (rademacher, bernoulli:p)");
  cmd_gen->add_option("--n", g_n, "family size for mdep/three-point/bernoulli");
  cmd_gen->add_option("--m", g_m, "dependence range for mdep");
  cmd_gen->add_option("--window", window_flag, "mdep window: sum or product");
  cmd_gen->add_option("--delta", g_delta, "three-point moment order");
  cmd_gen->add_option("--spec-out", spec_out, "write the generator spec JSON here");

  // ustat
  auto* cmd_ustat = app.add_subcommand("ustat", "U-statistic evaluation and corollary bound");
  std::string kernel_flag = "var", data_path;
  std::size_t u_m = 0;
  double u_delta = 3.0;
  double u_var_vn = 0.0, u_a_delta = 0.0, u_L = 0.0, u_K = 0.0;
  cmd_ustat->add_option("--kernel", kernel_flag, "mean or var");
  cmd_ustat->add_option("--data", data_path, "CSV with one value per line")->required();
  cmd_ustat->add_option("--m", u_m, "data dependency degree");
  cmd_ustat->add_option("--delta", u_delta, "moment order for the bound");
  cmd_ustat->add_option("--var-vn", u_var_vn, "V[V_n] for the corollary bound");
  cmd_ustat->add_option("--a-delta", u_a_delta, "A_delta over tuples");
  cmd_ustat->add_option("--L", u_L, "uniform kernel bound");
  cmd_ustat->add_option("--K", u_K, "stationary-limit constant");

  // volatility
  auto* cmd_vol = app.add_subcommand("volatility", "variance-rate estimators and corollary bound");
  std::string times_path, returns_path;
  double v_delta = 5.0, v_K = 0.0, v_nu = 0.0;
  std::size_t v_m = 0;
  bool unbiased = false;
  cmd_vol->add_option("--times", times_path, "CSV of t_1..t_n")->required();
  cmd_vol->add_option("--returns", returns_path, "CSV of increments X_1..X_n")->required();
  cmd_vol->add_option("--delta", v_delta, "moment order (> 4 for the bound)");
  cmd_vol->add_option("--K", v_K, "lower-bound constant for V[nu_hat]");
  cmd_vol->add_option("--nu", v_nu, "true variance rate, if known");
  cmd_vol->add_option("--m", v_m, "dependency degree of the increments");
  cmd_vol->add_flag("--unbiased", unbiased, "use n-1 denominators");

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  const auto parse_list = [](const std::string& flag) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos <= flag.size()) {
      std::size_t comma = flag.find(',', pos);
      if (comma == std::string::npos) comma = flag.size();
      if (comma > pos) out.push_back(std::stod(flag.substr(pos, comma - pos)));
      pos = comma + 1;
    }
    return out;
  };

  if (*cmd_bounds) {
    MomentProfile prof;
    if (!profile_path.empty())
      prof = profile_from_json(read_file(profile_path));
    else if (!family_path.empty())
      prof = derive_profile(family_from_json(read_file(family_path)), parse_list(deltas_flag));
    else
      throw InvalidInput("bounds needs --profile or --family");
    if (format == "json") {
      // same rows as the CSV, keyed by theorem id
      nlohmann::json j = nlohmann::json::array();
      const std::string csv = bounds_csv(prof, all);
      std::size_t pos = csv.find('\n') + 1;
      while (pos < csv.size()) {
        std::size_t end = csv.find('\n', pos);
        const std::string line = csv.substr(pos, end - pos);
        pos = end + 1;
        nlohmann::json row;
        std::size_t p = 0;
        const char* keys[6] = {"theorem_id", "raw", "clamped", "branch", "valid", "notes"};
        for (int f = 0; f < 6; ++f) {
          std::size_t c = f == 5 ? line.size() : line.find(',', p);
          row[keys[f]] = line.substr(p, c - p);
          p = c + 1;
        }
        j.push_back(row);
      }
      emit(out_path, j.dump(2) + "\n");
    } else {
      emit(out_path, bounds_csv(prof, all));
    }
    return 0;
  }

  if (*cmd_regimes) {
    const RegionMap map = crossover_curves(default_delta_grid(), default_alpha_grid());
    emit(out_path, region_map_csv(map));
    if (!svg_path.empty()) write_file(svg_path, region_map_svg(map));
    return 0;
  }

  if (*cmd_verify) {
    const FamilySpec spec = spec_from_json(read_file(spec_path));
    const TheoremChoice choice = TheoremChoice::parse(theorem, verify_delta);
    const VerificationReport rep = verify_bound(spec, choice, n_samples, confidence, seed, threads);
    emit(out_path, verification_report_to_json(rep));
    return rep.pass ? 0 : 2;
  }

  if (*cmd_cum) {
    if (families != "random") throw InvalidInput("cumulant-check supports --families random");
    emit(out_path, cumulant_check_csv(count, rmax, seed));
    return 0;
  }

  if (*cmd_feller) {
    const StandardizedLaw law = standardized_law_from_json(read_file(law_path));
    emit(out_path, feller_check_csv(law, parse_list(T_flag)));
    return 0;
  }

  if (*cmd_gen) {
    FamilySpec spec = [&]() -> FamilySpec {
      if (kind == "clique") return clique_blocks(g_blocks, g_size, law_from_flag(law_flag), law_flag);
      if (kind == "mdep")
        return m_dependent_window(g_n, g_m, law_from_flag(law_flag),
                                  window_flag == "sum" ? WindowKind::Sum : WindowKind::Product,
                                  law_flag);
      if (kind == "three-point") return three_point_family(g_delta, g_n);
      if (kind == "bernoulli") return bernoulli_decay(g_n);
      throw InvalidInput("unknown --kind '" + kind + "'");
    }();
    if (!spec_out.empty()) write_file(spec_out, spec_to_json(spec));
    if (!out_path.empty()) write_file(out_path, family_to_json(spec.exact_family()));
    if (out_path.empty() && spec_out.empty()) std::cout << spec_to_json(spec);
    return 0;
  }

  if (*cmd_ustat) {
    const std::vector<double> data = read_csv_column(data_path);
    UStatSpec uspec;
    uspec.kernel = kernel_flag == "mean" ? UStatKernel::mean() : UStatKernel::variance();
    uspec.n = data.size();
    uspec.m = u_m;
    nlohmann::json j;
    j["kernel"] = kernel_flag;
    j["n"] = data.size();
    j["ell"] = uspec.kernel.ell;
    j["m"] = u_m;
    j["value"] = u_statistic(uspec, data);
    const UStatGraphBounds gb = ustat_graph_bounds(data.size(), uspec.kernel.ell, u_m);
    j["graph"] = {{"N", gb.N}, {"D_upper", gb.D_upper}, {"ND_cap", gb.ND_cap}};
    if (u_var_vn > 0.0) {
      UStatIngredients ing;
      ing.var_Vn = u_var_vn;
      if (u_a_delta > 0.0) {
        ing.A_delta = u_a_delta;
        ing.delta = u_delta;
      }
      if (u_L > 0.0) ing.L = u_L;
      if (u_K > 0.0) ing.K = u_K;
      const BoundReport r = ustat_bound(uspec, ing);
      j["bound"] = {{"theorem", theorem_name(r.theorem_id)},
                    {"raw", r.raw_value},
                    {"clamped", r.clamped_value},
                    {"branch", r.binding_branch},
                    {"valid", r.valid},
                    {"notes", r.validity_notes}};
    }
    emit(out_path, j.dump(2) + "\n");
    return 0;
  }

  if (*cmd_vol) {
    VolatilitySpec vspec;
    vspec.times = read_csv_column(times_path);
    const std::vector<double> returns = read_csv_column(returns_path);
    vspec.delta = v_delta;
    vspec.m = v_m;
    vspec.nu = v_nu;
    if (v_K > 0.0) vspec.K = v_K;
    const VolatilityEstimates est = volatility_estimators(vspec, returns, unbiased);
    nlohmann::json j;
    j["n"] = vspec.n();
    j["e_hat"] = est.e_hat;
    j["nu_hat"] = est.nu_hat;
    j["unbiased"] = unbiased;
    if (v_K > 0.0 && v_delta > 4.0) {
      // plug-in moment estimates, flagged as empirical
      const std::vector<double> kappa = vspec.kappas();
      vspec.abs_moments.resize(vspec.n());
      for (std::size_t i = 0; i < vspec.n(); ++i)
        vspec.abs_moments[i] = std::pow(std::abs(returns[i] / kappa[i]), v_delta);
      const BoundReport r = volatility_bound(vspec);
      j["bound"] = {{"theorem", theorem_name(r.theorem_id)},
                    {"raw", r.raw_value},
                    {"clamped", r.clamped_value},
                    {"branch", r.binding_branch},
                    {"T", r.metadata.at("T")},
                    {"moment_inputs", "empirical"},
                    {"notes", r.validity_notes}};
    }
    emit(out_path, j.dump(2) + "\n");
    return 0;
  }

  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
  try {
    return run_cli_impl(args);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace begraph
