#include "begraph/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "begraph/errors.hpp"

namespace begraph {

using nlohmann::json;

namespace {

// Converts nlohmann's byte offset into line/column for readable diagnostics.
json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    const std::size_t upto = std::min(e.byte, text.size());
    for (std::size_t i = 0; i + 1 < upto + 1 && i < text.size() && i + 1 <= upto; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError("line " + std::to_string(line) + " column " + std::to_string(col) + ": " +
                     e.what());
  }
}

CenteringChoice centering_from_json(const json& j) {
  if (j.is_null()) return CenteringChoice::mean();
  const std::string mode = j.value("mode", "mean");
  if (mode == "mean") return CenteringChoice::mean();
  if (mode == "zero") return CenteringChoice::zero();
  if (mode == "custom") {
    if (!j.contains("values")) throw ParseError("custom centering needs \"values\"");
    return CenteringChoice::custom(j.at("values").get<std::vector<double>>());
  }
  throw ParseError("unknown centering mode '" + mode + "'");
}

json centering_to_json(const CenteringChoice& c) {
  json j;
  switch (c.mode) {
    case CenteringMode::Mean: j["mode"] = "mean"; break;
    case CenteringMode::Zero: j["mode"] = "zero"; break;
    case CenteringMode::Custom:
      j["mode"] = "custom";
      j["values"] = c.custom_values;
      break;
  }
  return j;
}

DiscreteLaw law_from_json_value(const json& j) {
  if (j.is_string()) {
    const std::string name = j.get<std::string>();
    if (name == "rademacher") return DiscreteLaw::rademacher();
    throw ParseError("unknown law name '" + name + "'");
  }
  if (j.contains("kind")) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "rademacher") return DiscreteLaw::rademacher();
    if (kind == "bernoulli") return DiscreteLaw::bernoulli(j.at("p").get<double>());
    if (kind == "point_mass") return DiscreteLaw::point_mass(j.at("x").get<double>());
    throw ParseError("unknown law kind '" + kind + "'");
  }
  const json& atoms_j = j.contains("atoms") ? j.at("atoms") : j;
  std::vector<Atom> atoms;
  for (const auto& a : atoms_j) atoms.push_back({a.at("x").get<double>(), a.at("p").get<double>()});
  return DiscreteLaw(std::move(atoms));
}

std::vector<Atom> atoms_from_json(const json& arr) {
  std::vector<Atom> atoms;
  for (const auto& a : arr) atoms.push_back({a.at("x").get<double>(), a.at("p").get<double>()});
  return atoms;
}

json atoms_to_json(const std::vector<Atom>& atoms) {
  json arr = json::array();
  for (const auto& a : atoms) arr.push_back({{"x", a.x}, {"p", a.p}});
  return arr;
}

}  // namespace

DiscreteFamily family_from_json(const std::string& text) {
  const json j = parse_json(text);
  if (!j.contains("laws")) throw ParseError("family document needs \"laws\"");
  std::vector<DiscreteLaw> laws;
  for (const auto& l : j.at("laws")) laws.emplace_back(atoms_from_json(l));
  const std::size_t n = laws.size();
  if (n == 0) throw ParseError("family document needs at least one law");

  std::vector<std::vector<std::uint32_t>> copy_groups;
  if (j.contains("blocks"))
    for (const auto& b : j.at("blocks")) copy_groups.push_back(b.get<std::vector<std::uint32_t>>());

  std::vector<bool> grouped(n, false);
  std::vector<CouplingBlock> blocks;
  for (const auto& g : copy_groups) {
    if (g.empty()) throw ParseError("empty block");
    for (auto v : g) {
      if (v >= n) throw ParseError("block vertex out of range");
      if (grouped[v]) throw ParseError("vertex listed in two blocks");
      grouped[v] = true;
      if (!(laws[v] == laws[g.front()]))
        throw ParseError("identical-copy block members must share one law");
    }
    blocks.push_back(CouplingBlock::copies(g, laws[g.front()]));
  }
  for (std::uint32_t v = 0; v < n; ++v)
    if (!grouped[v]) blocks.push_back(CouplingBlock::singleton(v, laws[v]));

  std::vector<Edge> edges;
  if (j.contains("edges"))
    for (const auto& e : j.at("edges")) {
      if (e.size() != 2) throw ParseError("edge must have two endpoints");
      edges.emplace_back(e[0].get<std::uint32_t>(), e[1].get<std::uint32_t>());
    }

  const CenteringChoice centering =
      centering_from_json(j.contains("centering") ? j.at("centering") : json());
  const std::uint64_t cap = j.value("support_cap", kDefaultSupportCap);
  return DiscreteFamily(std::move(blocks), DependencyGraph(n, std::move(edges)), centering, cap);
}

std::string family_to_json(const DiscreteFamily& family) {
  json j;
  json laws = json::array();
  for (std::uint32_t k = 0; k < family.size(); ++k)
    laws.push_back(atoms_to_json(family.marginal(k).atoms()));
  j["laws"] = std::move(laws);
  json blocks = json::array();
  for (const auto& b : family.blocks()) {
    if (b.vertices.size() < 2) continue;
    if (!b.identical_copies)
      throw InvalidInput("family schema cannot carry general joint coupling groups");
    blocks.push_back(b.vertices);
  }
  j["blocks"] = std::move(blocks);
  json edges = json::array();
  for (const auto& [a, b] : family.graph().edges()) edges.push_back({a, b});
  j["edges"] = std::move(edges);
  j["centering"] = centering_to_json(family.centering());
  if (family.support_cap() != kDefaultSupportCap) j["support_cap"] = family.support_cap();
  return j.dump(2) + "\n";
}

MomentProfile profile_from_json(const std::string& text) {
  const json j = parse_json(text);
  MomentProfile p;
  p.N = j.at("N").get<std::size_t>();
  p.D = j.at("D").get<std::size_t>();
  p.v = j.at("v").get<double>();
  if (j.contains("A"))
    for (const auto& [key, val] : j.at("A").items()) p.A[std::stod(key)] = val.get<double>();
  if (j.contains("M"))
    for (const auto& [key, val] : j.at("M").items()) p.M[std::stod(key)] = val.get<double>();
  if (j.contains("L") && !j.at("L").is_null()) p.L = j.at("L").get<double>();
  if (j.contains("rho") && !j.at("rho").is_null()) p.rho = j.at("rho").get<double>();
  p.centering = centering_from_json(j.contains("centering") ? j.at("centering") : json());
  if (j.contains("notes")) p.notes = j.at("notes").get<std::vector<std::string>>();
  p.validate();
  return p;
}

namespace {

std::string delta_key(double d) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", d);
  return buf;
}

}  // namespace

std::string profile_to_json(const MomentProfile& p) {
  json j;
  j["N"] = p.N;
  j["D"] = p.D;
  j["v"] = p.v;
  json a = json::object(), m = json::object();
  for (const auto& [d, v] : p.A) a[delta_key(d)] = v;
  for (const auto& [d, v] : p.M) m[delta_key(d)] = v;
  j["A"] = std::move(a);
  j["M"] = std::move(m);
  if (p.L) j["L"] = *p.L;
  if (p.rho) j["rho"] = *p.rho;
  j["centering"] = centering_to_json(p.centering);
  if (!p.notes.empty()) j["notes"] = p.notes;
  return j.dump(2) + "\n";
}

FamilySpec spec_from_json(const std::string& text) {
  const json j = parse_json(text);
  const std::string kind = j.at("kind").get<std::string>();
  const CenteringChoice centering =
      centering_from_json(j.contains("centering") ? j.at("centering") : json());
  if (kind == "clique_blocks") {
    const json& lj = j.at("law");
    return clique_blocks(j.at("blocks").get<std::size_t>(), j.at("size").get<std::size_t>(),
                         law_from_json_value(lj), lj.is_string() ? lj.get<std::string>() : lj.value("kind", "custom"),
                         centering);
  }
  if (kind == "m_dependent_window") {
    const json& lj = j.at("law");
    const std::string w = j.value("window", "product");
    return m_dependent_window(j.at("n").get<std::size_t>(), j.at("m").get<std::size_t>(),
                              law_from_json_value(lj),
                              w == "sum" ? WindowKind::Sum : WindowKind::Product,
                              lj.is_string() ? lj.get<std::string>() : lj.value("kind", "custom"),
                              centering);
  }
  if (kind == "three_point")
    return three_point_family(j.at("delta").get<double>(), j.at("n").get<std::size_t>());
  if (kind == "bernoulli_decay") return bernoulli_decay(j.at("n").get<std::size_t>());
  if (kind == "custom") return custom_family(family_from_json(j.at("family").dump()));
  throw ParseError("unknown spec kind '" + kind + "'");
}

std::string spec_to_json(const FamilySpec& spec) {
  json j;
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, CliqueBlocksSpec>) {
          j["kind"] = "clique_blocks";
          j["blocks"] = s.n_blocks;
          j["size"] = s.block_size;
          j["law"] = json{{"atoms", atoms_to_json(s.base.atoms())}};
        } else if constexpr (std::is_same_v<T, MDependentWindowSpec>) {
          j["kind"] = "m_dependent_window";
          j["n"] = s.n;
          j["m"] = s.m;
          j["window"] = window_name(s.window);
          j["law"] = json{{"atoms", atoms_to_json(s.base.atoms())}};
        } else if constexpr (std::is_same_v<T, ThreePointSpec>) {
          j["kind"] = "three_point";
          j["delta"] = s.delta;
          j["n"] = s.n;
        } else if constexpr (std::is_same_v<T, BernoulliDecaySpec>) {
          j["kind"] = "bernoulli_decay";
          j["n"] = s.n;
        } else {
          j["kind"] = "custom";
          j["family"] = json::parse(family_to_json(*s.family));
        }
      },
      spec.variant());
  j["centering"] = centering_to_json(spec.centering());
  return j.dump(2) + "\n";
}

StandardizedLaw standardized_law_from_json(const std::string& text) {
  const json j = parse_json(text);
  if (j.contains("laws")) return StandardizedLaw::of_family(family_from_json(text));
  const json& arr = j.contains("atoms") ? j.at("atoms") : j;
  return StandardizedLaw(atoms_from_json(arr));
}

std::string verification_report_to_json(const VerificationReport& r) {
  json j;
  j["spec"] = r.spec_id;
  j["theorem"] = r.theorem;
  j["n_samples"] = r.n_samples;
  j["empirical_dkol"] = r.empirical_dkol;
  j["dkw_margin"] = r.dkw_margin;
  j["theoretical_bound"] = r.theoretical_bound;
  j["raw_bound"] = std::isfinite(r.raw_bound) ? json(r.raw_bound) : json("inf");
  j["trivially_clamped"] = r.trivially_clamped;
  j["pass"] = r.pass;
  j["seed"] = r.seed;
  return j.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write file: " + path);
  out << content;
}

std::string csv_num(double x) {
  if (std::isnan(x)) return "";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

}  // namespace begraph
