// Command-line front end: intersection numbers, structure-constant tables,
// pairing dumps, and formula-vs-oracle verification for the toric manifolds
// of Weyl-chamber fans.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "weylfan/basis_ring.hpp"
#include "weylfan/fan_oracle.hpp"
#include "weylfan/parallel.hpp"

using json = nlohmann::json;
using namespace weylfan;

namespace {

struct CommonOptions {
  std::string type;
  int rank = 0;
  std::string format = "text";
  std::string out;
};

RootSystem system_of(const CommonOptions& opt) {
  if (opt.type == "G2") {
    if (opt.rank != 0 && opt.rank != 2)
      throw std::invalid_argument("G2 admits no rank other than 2");
    return make_system(Family::G2, 2);
  }
  if (opt.rank <= 0)
    throw std::invalid_argument("--rank is required for type " + opt.type);
  return parse_system(opt.type, opt.rank);
}

void emit(const CommonOptions& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(opt.out, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open output file '" + opt.out + "'");
  file << text;
}

void require_format(const CommonOptions& opt,
                    std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (opt.format == f) return;
  throw std::invalid_argument("format '" + opt.format +
                              "' is not supported by this subcommand");
}

json diagram_json(const YoungDiagram& d) {
  json out;
  out["rows"] = d.rows;
  if (!d.labels.empty()) out["labels"] = d.labels;
  return out;
}

// quote fields that contain the separator (signed one-line notation does)
std::string csv_field(const std::string& value) {
  if (value.find(',') == std::string::npos) return value;
  return '"' + value + '"';
}

void add_common(CLI::App* cmd, CommonOptions& opt, bool with_format = true) {
  cmd->add_option("--type", opt.type, "root system family (A, B, C, D, G2)")
      ->required()
      ->check(CLI::IsMember({"A", "B", "C", "D", "G2"}));
  cmd->add_option("--rank", opt.rank, "rank n (fixed to 2 for G2)");
  if (with_format)
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
  cmd->add_option("--out", opt.out, "write output to this file");
}

// ---------------------------------------------------------------- triple --

int run_triple(const CommonOptions& opt, const std::string& u_text,
               const std::string& v_text, const std::string& w_text) {
  require_format(opt, {"text", "json"});
  RootSystem sys = system_of(opt);
  WeylElement u = parse_element(sys, u_text);
  WeylElement v = parse_element(sys, v_text);
  WeylElement w = parse_element(sys, w_text);
  YoungDiagram lambda = build_lambda(u, v, w);
  long long value = triple_number(u, v, w);
  std::ostringstream text;
  if (opt.format == "json") {
    json out;
    out["u"] = format_element(u);
    out["v"] = format_element(v);
    out["w"] = format_element(w);
    out["diagram"] = diagram_json(lambda);
    out["value"] = value;
    text << out.dump(2) << "\n";
  } else {
    text << "u: " << format_element(u) << "\n";
    text << "v: " << format_element(v) << "\n";
    text << "w: " << format_element(w) << "\n";
    text << "diagram: " << format_diagram(lambda) << "\n";
    text << "value: " << value << "\n";
  }
  emit(opt, text.str());
  return 0;
}

// ------------------------------------------------------------- intersect --

int run_intersect(const CommonOptions& opt, const std::string& monomial_text) {
  require_format(opt, {"text", "json"});
  RootSystem sys = system_of(opt);
  TauMonomial m = parse_monomial(sys, monomial_text);
  IntersectionResult r = intersection_number(m);
  std::ostringstream text;
  if (opt.format == "json") {
    json out;
    out["monomial"] = m.str();
    out["reason"] = reason_name(r.reason);
    out["diagram"] = diagram_json(r.diagram);
    out["value"] = r.value;
    text << out.dump(2) << "\n";
  } else {
    text << "monomial: " << m.str() << "\n";
    text << "reason: " << reason_name(r.reason) << "\n";
    text << "diagram: " << format_diagram(r.diagram) << "\n";
    text << "value: " << r.value << "\n";
  }
  emit(opt, text.str());
  return 0;
}

// ----------------------------------------------------------- structconst --

int run_structconst(const CommonOptions& opt, const std::string& u_text,
                    const std::string& v_text, std::size_t cap) {
  require_format(opt, {"text", "json", "csv"});
  RootSystem sys = system_of(opt);
  CohomologyRing ring(sys, cap);
  WeylElement u = parse_element(sys, u_text);
  WeylElement v = parse_element(sys, v_text);
  BasisCombination c = ring.structure_constants(u, v);
  std::ostringstream text;
  if (opt.format == "json") {
    json terms = json::array();
    for (const auto& [w, coeff] : c.terms)
      terms.push_back({{"w", format_element(w)}, {"c", coeff}});
    json out;
    out["type"] = family_name(sys.family);
    out["rank"] = sys.rank;
    out["u"] = format_element(u);
    out["v"] = format_element(v);
    out["terms"] = terms;
    text << out.dump(2) << "\n";
  } else if (opt.format == "csv") {
    text << "type,rank,u,v,w,c\n";
    for (const auto& [w, coeff] : c.terms)
      text << family_name(sys.family) << ',' << sys.rank << ','
           << csv_field(format_element(u)) << ',' << csv_field(format_element(v))
           << ',' << csv_field(format_element(w)) << ',' << coeff << "\n";
  } else {
    text << "[X_" << format_element(u) << "] * [X_" << format_element(v)
         << "] = " << format_combination(c) << "\n";
  }
  emit(opt, text.str());
  return 0;
}

// ----------------------------------------------------------------- table --

int run_table(const CommonOptions& opt, std::size_t cap) {
  require_format(opt, {"csv", "json"});
  RootSystem sys = system_of(opt);
  CohomologyRing ring(sys, cap);
  const WeylGroup& group = ring.group();
  const std::size_t size = group.size();

  // one row of products at a time keeps memory proportional to |W|
  std::ostringstream text;
  json rows = json::array();
  if (opt.format == "csv") text << "type,rank,u,v,w,c\n";
  std::vector<BasisCombination> row(size);
  for (std::size_t ui = 0; ui < size; ++ui) {
    parallel_for(size, [&](std::size_t vi) {
      row[vi] = ring.structure_constants(group.element(ui), group.element(vi));
    });
    const std::string u = format_element(group.element(ui));
    for (std::size_t vi = 0; vi < size; ++vi) {
      const std::string v = format_element(group.element(vi));
      for (const auto& [w, coeff] : row[vi].terms) {
        if (opt.format == "csv") {
          text << family_name(sys.family) << ',' << sys.rank << ','
               << csv_field(u) << ',' << csv_field(v) << ','
               << csv_field(format_element(w)) << ',' << coeff << "\n";
        } else {
          rows.push_back(
              {{"u", u}, {"v", v}, {"w", format_element(w)}, {"c", coeff}});
        }
      }
    }
  }
  if (opt.format == "json") {
    json out;
    out["type"] = family_name(sys.family);
    out["rank"] = sys.rank;
    out["entries"] = rows;
    text << out.dump(2) << "\n";
  }
  emit(opt, text.str());
  return 0;
}

// --------------------------------------------------------------- pairing --

int run_pairing(const CommonOptions& opt, std::size_t cap) {
  require_format(opt, {"csv", "json"});
  RootSystem sys = system_of(opt);
  CohomologyRing ring(sys, cap);
  const WeylGroup& group = ring.group();
  PairingMatrix mat = ring.pairing_matrix();
  std::ostringstream text;
  if (opt.format == "csv") {
    text << "type,rank,u,v,value\n";
    for (const auto& e : mat.entries)
      text << family_name(sys.family) << ',' << sys.rank << ','
           << csv_field(format_element(group.element(e.row))) << ','
           << csv_field(format_element(group.element(e.col))) << ',' << e.value
           << "\n";
  } else {
    json entries = json::array();
    for (const auto& e : mat.entries)
      entries.push_back({{"u", format_element(group.element(e.row))},
                         {"v", format_element(group.element(e.col))},
                         {"value", e.value}});
    json out;
    out["type"] = family_name(sys.family);
    out["rank"] = sys.rank;
    out["entries"] = entries;
    text << out.dump(2) << "\n";
  }
  emit(opt, text.str());
  return 0;
}

// ---------------------------------------------------------------- verify --

int run_verify(const CommonOptions& opt, const std::string& mode,
               std::size_t samples, unsigned long seed, std::size_t cap) {
  require_format(opt, {"text", "json"});
  RootSystem sys = system_of(opt);
  if (weyl_order(sys) > cap)
    throw SizeCapError("Weyl group of " + sys.name() + " has " +
                       std::to_string(weyl_order(sys)) +
                       " elements, above the size cap of " + std::to_string(cap));
  FanModel fan = FanModel::build(sys);
  VerifyMode vm;
  std::size_t work;
  if (mode == "exhaustive") {
    vm = VerifyMode::ExhaustiveAll;
    work = count_degree_n_multisets(fan);
  } else {
    vm = VerifyMode::SampledMonomials;
    work = samples;
  }
  if (work > cap)
    throw SizeCapError("verification sweep of " + std::to_string(work) +
                       " monomials is above the size cap of " +
                       std::to_string(cap));
  LocalizationOracle oracle(fan, seed);
  VerifyReport report = verify_family(oracle, vm, samples, seed);

  std::ostringstream text;
  if (opt.format == "json") {
    json mismatches = json::array();
    for (const auto& mm : report.mismatches)
      mismatches.push_back({{"monomial", mm.monomial.str()},
                            {"formula", mm.formula},
                            {"oracle", mm.oracle}});
    json out;
    out["system"] = sys.name();
    out["mode"] = verify_mode_name(report.mode);
    out["seed"] = report.seed;
    out["total"] = report.total;
    out["mismatches"] = mismatches;
    text << out.dump(2) << "\n";
  } else {
    text << "system: " << sys.name() << "\n";
    text << "mode: " << verify_mode_name(report.mode) << "\n";
    text << "seed: " << report.seed << "\n";
    text << "total: " << report.total << "\n";
    text << "mismatches: " << report.mismatches.size() << "\n";
    for (const auto& mm : report.mismatches)
      text << "mismatch: monomial=" << mm.monomial.str()
           << " formula=" << mm.formula << " oracle=" << mm.oracle << "\n";
  }
  emit(opt, text.str());
  return report.mismatches.empty() ? 0 : 1;
}

// -------------------------------------------------------------- g2-table --

int run_g2_table(const CommonOptions& opt) {
  require_format(opt, {"text", "json"});
  RootSystem sys = make_system(Family::G2, 2);
  FanModel fan = FanModel::build(sys);
  auto monomial_text = [](const TauMonomial& m) {
    if (m.degree() == 0) return std::string("1");
    std::string out;
    for (const auto& s : m.factors) {
      if (!out.empty()) out += '*';
      out += "t[" + s.str() + "]";
    }
    return out;
  };
  const std::vector<std::pair<std::vector<int>, long long>> values = {
      {{2, 1}, I_G2(make_diagram({2, 1}))},
      {{1, 1}, I_G2(make_diagram({1, 1}))},
      {{2, 2}, I_G2(make_diagram({2, 2}))},
  };
  std::ostringstream text;
  if (opt.format == "json") {
    json labels = json::array();
    for (const auto& ray : fan.rays()) labels.push_back(ray.label.str());
    json vals = json::array();
    for (const auto& [rows, value] : values)
      vals.push_back({{"rows", rows}, {"value", value}});
    json classes = json::array();
    for (const auto& u : enumerate_weyl(sys)) {
      json x = json::array(), y = json::array();
      for (const auto& s : class_X(u).factors) x.push_back(s.str());
      for (const auto& s : class_Y(u).factors) y.push_back(s.str());
      classes.push_back({{"u", format_element(u)}, {"x", x}, {"y", y}});
    }
    json out;
    out["labels"] = labels;
    out["values"] = vals;
    out["classes"] = classes;
    text << out.dump(2) << "\n";
  } else {
    text << "coweight labels:";
    for (const auto& ray : fan.rays()) text << " {" << ray.label.str() << "}";
    text << "\n";
    for (const auto& [rows, value] : values)
      text << "I_G2(" << rows[0] << "," << rows[1] << ") = " << value << "\n";
    text << "classes:\n";
    for (const auto& u : enumerate_weyl(sys))
      text << "  u=" << format_element(u) << "  [X_u] = "
           << monomial_text(class_X(u)) << "  [Y^u] = "
           << monomial_text(class_Y(u)) << "\n";
  }
  emit(opt, text.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "intersection numbers and cohomology structure constants of the toric "
      "manifolds of Weyl-chamber fans (types A, B, C, D, G2)"};
  app.require_subcommand(1);

  std::size_t cap = CohomologyRing::default_size_cap();
  app.add_option("--cap", cap,
                 "size cap for full-matrix and exhaustive operations");

  CommonOptions triple_opt;
  std::string triple_u, triple_v, triple_w;
  CLI::App* triple = app.add_subcommand(
      "triple", "intersection number <[Y^w][X_u][X_v]> with its diagram");
  add_common(triple, triple_opt);
  triple->add_option("--u", triple_u)->required();
  triple->add_option("--v", triple_v)->required();
  triple->add_option("--w", triple_w)->required();

  CommonOptions inter_opt;
  std::string inter_monomial;
  CLI::App* inter = app.add_subcommand(
      "intersect", "intersection number of a degree-n monomial of divisors");
  add_common(inter, inter_opt);
  inter->add_option("--monomial", inter_monomial,
                    "semicolon-separated subsets, e.g. '3;1,2,3,5;1,2,3,5;3'")
      ->required();

  CommonOptions sc_opt;
  std::string sc_u, sc_v;
  CLI::App* sc = app.add_subcommand(
      "structconst", "expansion of [X_u][X_v] in the basis {[X_w]}");
  add_common(sc, sc_opt);
  sc->add_option("--u", sc_u)->required();
  sc->add_option("--v", sc_v)->required();

  CommonOptions table_opt;
  table_opt.format = "csv";
  CLI::App* table = app.add_subcommand(
      "table", "all structure constants c_{u,v}^w as CSV or JSON");
  add_common(table, table_opt);

  CommonOptions pairing_opt;
  pairing_opt.format = "csv";
  CLI::App* pairing = app.add_subcommand(
      "pairing", "nonzero entries of the pairing matrix <[Y^u][X_v]>");
  add_common(pairing, pairing_opt);

  CommonOptions verify_opt;
  std::string verify_mode = "exhaustive";
  std::size_t verify_samples = 1000;
  unsigned long verify_seed = kDefaultOracleSeed;
  CLI::App* verify = app.add_subcommand(
      "verify", "compare the formulas against the localization oracle");
  add_common(verify, verify_opt);
  verify->add_option("--mode", verify_mode)
      ->check(CLI::IsMember({"exhaustive", "sampled"}));
  verify->add_option("--samples", verify_samples,
                     "monomials to draw in sampled mode");
  verify->add_option("--seed", verify_seed, "seed for points and sampling");

  CommonOptions g2_opt;
  g2_opt.type = "G2";
  CLI::App* g2 = app.add_subcommand(
      "g2-table", "the G2 coweight labels, class lists, and values");
  g2->add_option("--format", g2_opt.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  g2->add_option("--out", g2_opt.out, "write output to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (triple->parsed()) return run_triple(triple_opt, triple_u, triple_v, triple_w);
    if (inter->parsed()) return run_intersect(inter_opt, inter_monomial);
    if (sc->parsed()) return run_structconst(sc_opt, sc_u, sc_v, cap);
    if (table->parsed()) return run_table(table_opt, cap);
    if (pairing->parsed()) return run_pairing(pairing_opt, cap);
    if (verify->parsed())
      return run_verify(verify_opt, verify_mode, verify_samples, verify_seed, cap);
    if (g2->parsed()) return run_g2_table(g2_opt);
  } catch (const SizeCapError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
