// Command-line front end for the cellular-automata algebra library.
//
// Verbs: info, alpha, ica, aperiodic, bounds, relrank, verify.
// Output formats: table (default), json (schema "ca-algebra/1"), csv.
// Exit codes: 0 success, 1 verification mismatch, 2 usage error,
//             3 invalid input, 4 enumeration cap exceeded.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ca/camonoid.hpp"
#include "ca/configs.hpp"
#include "ca/counting.hpp"
#include "ca/error.hpp"
#include "ca/genset.hpp"
#include "ca/group.hpp"
#include "ca/ica.hpp"
#include "ca/lattice.hpp"

using nlohmann::json;
using namespace ca;

namespace {

struct Options {
  std::string verb;
  std::string group;
  std::string suite;
  int q = 2;
  std::string format = "table";
  std::uint64_t max_enum = 0;  // 0 means library defaults
};

struct Caps {
  std::uint64_t configs = kMaxConfigurations;
  std::uint64_t rules = kMaxRuleSpace;
  std::size_t closure = kMaxClosure;
};

Caps effective_caps(const Options& o) {
  Caps c;
  if (o.max_enum > 0) {
    c.configs = o.max_enum;
    c.rules = o.max_enum;
    c.closure = static_cast<std::size_t>(o.max_enum);
  }
  return c;
}

std::string config_str(const Configuration& x, int q) {
  std::string s;
  for (std::size_t i = 0; i < x.symbols.size(); ++i) {
    if (q > 10 && i) s += ' ';
    s += std::to_string(x.symbols[i]);
  }
  return s;
}

json base_envelope(const Options& o, bool with_q) {
  json j;
  j["schema"] = "ca-algebra/1";
  j["command"] = o.verb;
  j["group"] = o.group;
  if (with_q) j["q"] = o.q;
  return j;
}

// ---------------------------------------------------------------- info ----

json run_info(const Options& o) {
  FiniteGroup G = build_group(o.group);
  SubgroupLattice lat = enumerate_subgroups(G);
  json j = base_envelope(o, false);
  j["order"] = G.n;
  j["abelian"] = is_abelian(G);
  j["dedekind"] = is_dedekind(lat);
  j["subgroups"] = lat.size();
  j["subgroup_classes"] = lat.classes.size();
  if (G.n <= kMaxRankOrder) j["group_rank"] = group_rank(G);
  ClassGraph cg = class_graph(lat);
  j["class_graph_edges"] = cg.edge_count();
  j["index2_classes"] = cg.index2_count;
  return j;
}

// --------------------------------------------------------------- alpha ----

json run_alpha(const Options& o) {
  FiniteGroup G = build_group(o.group);
  SubgroupLattice lat = enumerate_subgroups(G);
  AlphaVector a = alpha_mobius(lat, o.q);
  json j = base_envelope(o, true);
  json alphas = json::array();
  json classes = json::array();
  Int total = 0;
  for (std::size_t c = 0; c < a.classes.size(); ++c) {
    const SubgroupClass& cls = lat.classes[c];
    const Subgroup& h = lat.subgroups[cls.representative];
    alphas.push_back(a.classes[c].alpha.get_str());
    json row;
    row["class"] = c;
    row["subgroup_order"] = h.order;
    row["index"] = G.n / h.order;
    row["class_size"] = cls.members.size();
    row["normalizer_order"] = lat.subgroups[cls.normalizer].order;
    row["alpha"] = a.classes[c].alpha.get_str();
    row["block_size"] = a.classes[c].b_size.get_str();
    row["orbit_size"] = a.classes[c].orbit_size;
    classes.push_back(row);
    total += a.classes[c].alpha;
  }
  j["alpha"] = alphas;
  j["classes"] = classes;
  j["total_orbits"] = total.get_str();
  return j;
}

// ----------------------------------------------------------------- ica ----

json run_ica(const Options& o) {
  FiniteGroup G = build_group(o.group);
  SubgroupLattice lat = enumerate_subgroups(G);
  IcaStructure s = ica_structure(lat, alpha_mobius(lat, o.q));
  json j = base_envelope(o, true);
  json factors = json::array();
  for (const IcaFactor& f : s.factors) {
    json row;
    row["class"] = f.class_index;
    row["quotient_order"] = f.quotient_order.get_str();
    row["alpha"] = f.alpha.get_str();
    factors.push_back(row);
  }
  j["factors"] = factors;
  j["total_order"] = s.total_order.get_str();
  return j;
}

// ----------------------------------------------------------- aperiodic ----

json run_aperiodic(const Options& o) {
  FiniteGroup G = build_group(o.group);
  SubgroupLattice lat = enumerate_subgroups(G);
  ApCount general = ac_general(lat, o.q);
  json methods = json::array();
  methods.push_back("general");
  if (is_cyclic(G) && ac_cyclic(G.n, o.q).value == general.value)
    methods.push_back("cyclic");
  if (p_group_prime(G) && ac_pgroup(lat, o.q).value == general.value)
    methods.push_back("p-group");
  if (auto pm = elem_abelian_params(G);
      pm && ac_elem_abelian(pm->first, pm->second, o.q).value == general.value)
    methods.push_back("elementary-abelian");
  json j = base_envelope(o, true);
  j["value"] = general.value.get_str();
  j["methods_agreeing"] = methods;
  return j;
}

// -------------------------------------------------------------- bounds ----

json run_bounds(const Options& o) {
  FiniteGroup G = build_group(o.group);
  SubgroupLattice lat = enumerate_subgroups(G);
  BoundsReport b = ac_bounds(lat, o.q);
  json j = base_envelope(o, true);
  j["ac"] = b.ac.get_str();
  j["upper"] = b.upper.get_str();
  j["lower"] = b.lower.get_str();
  j["lower_coarse"] = b.lower_coarse.get_str();
  j["p"] = b.p;
  j["coefficient"] = b.coefficient.get_str();
  j["upper_attained"] = (b.ac == b.upper);
  j["coarse_attained"] = (b.ac == b.lower_coarse);
  return j;
}

// ------------------------------------------------------------- relrank ----

json run_relrank(const Options& o) {
  FiniteGroup G = build_group(o.group);
  SubgroupLattice lat = enumerate_subgroups(G);
  AlphaVector a = alpha_mobius(lat, o.q);
  RelRankReport r = relrank(G, lat, a, o.q);
  ClassGraph cg = class_graph(lat);
  json j = base_envelope(o, true);
  j["lower_bound"] = r.lower_bound;
  j["is_exact"] = r.is_exact;
  j["vertices"] = cg.vertices;
  j["edge_count"] = cg.edge_count();
  j["index2_count"] = cg.index2_count;
  json gens = json::array();
  for (const GeneratorDescriptor& d : r.generators) {
    json row;
    row["kind"] = d.kind == GeneratorKind::CrossClass ? "cross-class" : "within-class";
    row["source_class"] = d.source_class;
    row["target_class"] = d.target_class;
    row["source"] = d.source.symbols;
    row["target"] = d.target.symbols;
    gens.push_back(row);
  }
  j["generators"] = gens;
  return j;
}

// -------------------------------------------------------------- verify ----

struct Check {
  std::string name;
  bool ok = false;
  std::string expected;
  std::string actual;
};

void add_check(std::vector<Check>& out, const std::string& name,
               const std::string& expected, const std::string& actual) {
  out.push_back({name, expected == actual, expected, actual});
}

std::vector<Check> verify_orbits(const FiniteGroup& G, int q, const Caps& caps) {
  std::vector<Check> checks;
  SubgroupLattice lat = enumerate_subgroups(G);
  OrbitTable ot = enumerate_orbits(G, lat, q, caps.configs);
  AlphaVector formula = alpha_mobius(lat, q);
  AlphaVector scan = alpha_direct(lat, ot);
  std::string want, got;
  for (std::size_t c = 0; c < formula.classes.size(); ++c) {
    want += formula.classes[c].alpha.get_str() + " ";
    got += scan.classes[c].alpha.get_str() + " ";
  }
  add_check(checks, "alpha formula vs orbit scan", want, got);
  add_check(checks, "orbit total vs averaging count", total_orbits_cf(G, q).get_str(),
            Int(ot.orbit_count()).get_str());
  add_check(checks, "product identity over orbits", "pass",
            product_identity_check(G, ot) ? "pass" : "fail");
  for (std::size_t c = 0; c < lat.classes.size(); ++c) {
    const Subgroup& h = lat.subgroups[lat.classes[c].representative];
    if (h.order == 1 || h.order == G.n) continue;
    if (lat.subgroups[lat.classes[c].normalizer].order != G.n) continue;
    add_check(checks, "block size via quotient, class " + std::to_string(c),
              formula.classes[c].b_size.get_str(),
              b_size_quotient(G, h, q).get_str());
  }
  return checks;
}

std::vector<Check> verify_ica_order(const FiniteGroup& G, int q, const Caps& caps) {
  std::vector<Check> checks;
  SubgroupLattice lat = enumerate_subgroups(G);
  IcaStructure s = ica_structure(lat, alpha_mobius(lat, q));
  CaSpace space = make_ca_space(G, q, caps.configs);
  std::size_t brute = invertible_ca(space, caps.rules).size();
  add_check(checks, "structure order vs brute-force count", s.total_order.get_str(),
            std::to_string(brute));
  return checks;
}

std::vector<Check> verify_counting(const FiniteGroup& G, int q, const Caps& caps) {
  std::vector<Check> checks;
  SubgroupLattice lat = enumerate_subgroups(G);
  ApCount general = ac_general(lat, q);
  OrbitTable ot = enumerate_orbits(G, lat, q, caps.configs);
  Int scan = 0;
  for (int o = 0; o < ot.orbit_count(); ++o)
    if (ot.stabilizers[o].order == 1) scan += ot.orbit_size[o];
  add_check(checks, "formula vs stabilizer scan", general.value.get_str(), scan.get_str());
  if (is_cyclic(G))
    add_check(checks, "cyclic divisor formula", general.value.get_str(),
              ac_cyclic(G.n, q).value.get_str());
  if (p_group_prime(G))
    add_check(checks, "p-group collapse formula", general.value.get_str(),
              ac_pgroup(lat, q).value.get_str());
  if (auto pm = elem_abelian_params(G))
    add_check(checks, "elementary abelian closed form", general.value.get_str(),
              ac_elem_abelian(pm->first, pm->second, q).value.get_str());
  BoundsReport b = ac_bounds(lat, q);
  add_check(checks, "bounds bracket the count", "pass",
            (b.lower <= b.ac && b.lower_coarse <= b.ac && b.ac <= b.upper) ? "pass"
                                                                           : "fail");
  return checks;
}

std::vector<Check> verify_memory(const FiniteGroup& G, int q, const Caps& caps) {
  std::vector<Check> checks;
  CaSpace space = make_ca_space(G, q, caps.configs);
  MemoryTheoremReport m = verify_memory_theorem(space, caps.rules, caps.closure);
  add_check(checks, "small-memory closure is proper", "pass",
            m.closure_proper ? "pass" : "fail");
  add_check(checks, "constant-collapse idempotent excluded", "pass",
            m.sigma_excluded ? "pass" : "fail");
  checks.back().actual += " (closure " + std::to_string(m.closure_size) + " of " +
                          m.ca_total.get_str() + ")";
  checks.back().expected += " (closure " + std::to_string(m.closure_size) + " of " +
                            m.ca_total.get_str() + ")";
  return checks;
}

std::vector<Check> verify_relrank(const FiniteGroup& G, int q, const Caps& caps) {
  std::vector<Check> checks;
  SubgroupLattice lat = enumerate_subgroups(G);
  RelRankReport r = relrank(G, lat, alpha_mobius(lat, q), q);
  GenerationReport rep = verify_generation(G, q, caps.rules, caps.closure);
  add_check(checks, "generator count matches the bound", std::to_string(r.lower_bound),
            std::to_string(rep.generator_count));
  add_check(checks, "closure of units + generators is everything",
            rep.ca_total.get_str(), std::to_string(rep.closure_size));
  add_check(checks, "every generator is needed", "pass",
            rep.irredundant ? "pass" : "fail");
  return checks;
}

json run_verify(const Options& o) {
  FiniteGroup G = build_group(o.group);
  Caps caps = effective_caps(o);
  std::vector<Check> checks;
  if (o.suite == "orbits") checks = verify_orbits(G, o.q, caps);
  else if (o.suite == "ica-order") checks = verify_ica_order(G, o.q, caps);
  else if (o.suite == "counting") checks = verify_counting(G, o.q, caps);
  else if (o.suite == "memory") checks = verify_memory(G, o.q, caps);
  else checks = verify_relrank(G, o.q, caps);

  json j = base_envelope(o, true);
  j["suite"] = o.suite;
  json rows = json::array();
  bool all_ok = true;
  for (const Check& c : checks) {
    json row;
    row["name"] = c.name;
    row["ok"] = c.ok;
    row["expected"] = c.expected;
    row["actual"] = c.actual;
    rows.push_back(row);
    all_ok = all_ok && c.ok;
  }
  j["checks"] = rows;
  j["ok"] = all_ok;
  return j;
}

// ----------------------------------------------------------- rendering ----

void print_kv(const std::string& k, const std::string& v) {
  std::printf("%-22s %s\n", k.c_str(), v.c_str());
}

std::string cell(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void render_rows_table(const json& rows, const std::vector<std::string>& cols) {
  std::vector<std::size_t> width(cols.size());
  for (std::size_t i = 0; i < cols.size(); ++i) width[i] = cols[i].size();
  for (const json& r : rows)
    for (std::size_t i = 0; i < cols.size(); ++i)
      width[i] = std::max(width[i], cell(r.at(cols[i])).size());
  for (std::size_t i = 0; i < cols.size(); ++i)
    std::printf("%-*s ", (int)width[i], cols[i].c_str());
  std::printf("\n");
  for (const json& r : rows) {
    for (std::size_t i = 0; i < cols.size(); ++i)
      std::printf("%-*s ", (int)width[i], cell(r.at(cols[i])).c_str());
    std::printf("\n");
  }
}

void render_rows_csv(const json& rows, const std::vector<std::string>& cols) {
  for (std::size_t i = 0; i < cols.size(); ++i)
    std::printf("%s%s", cols[i].c_str(), i + 1 < cols.size() ? "," : "\n");
  for (const json& r : rows) {
    for (std::size_t i = 0; i < cols.size(); ++i) {
      std::string v = cell(r.at(cols[i]));
      std::printf("%s%s", v.c_str(), i + 1 < cols.size() ? "," : "\n");
    }
  }
}

void render_kv_csv(const json& j, const std::vector<std::string>& keys) {
  std::printf("key,value\n");
  for (const std::string& k : keys) std::printf("%s,%s\n", k.c_str(), cell(j.at(k)).c_str());
}

// Flattens generator configurations for table/csv display.
json generator_rows(const json& j, int q) {
  json rows = json::array();
  for (const json& g : j.at("generators")) {
    Configuration src{g.at("source").get<std::vector<int>>()};
    Configuration tgt{g.at("target").get<std::vector<int>>()};
    json row;
    row["kind"] = g.at("kind");
    row["source_class"] = g.at("source_class");
    row["target_class"] = g.at("target_class");
    row["source"] = config_str(src, q);
    row["target"] = config_str(tgt, q);
    rows.push_back(row);
  }
  return rows;
}

int render(const Options& o, const json& j) {
  if (o.format == "json") {
    std::cout << j.dump(2) << "\n";
  } else if (o.verb == "alpha") {
    std::vector<std::string> cols = {"class",      "subgroup_order", "index",
                                     "class_size", "normalizer_order", "alpha",
                                     "block_size", "orbit_size"};
    if (o.format == "csv") {
      render_rows_csv(j.at("classes"), cols);
    } else {
      render_rows_table(j.at("classes"), cols);
      print_kv("total orbits", cell(j.at("total_orbits")));
    }
  } else if (o.verb == "ica") {
    std::vector<std::string> cols = {"class", "quotient_order", "alpha"};
    if (o.format == "csv") {
      render_rows_csv(j.at("factors"), cols);
    } else {
      render_rows_table(j.at("factors"), cols);
      print_kv("total order", cell(j.at("total_order")));
    }
  } else if (o.verb == "relrank") {
    json rows = generator_rows(j, o.q);
    std::vector<std::string> cols = {"kind", "source_class", "target_class", "source",
                                     "target"};
    if (o.format == "csv") {
      render_rows_csv(rows, cols);
    } else {
      for (const std::string& k :
           {"lower_bound", "is_exact", "vertices", "edge_count", "index2_count"})
        print_kv(k, cell(j.at(k)));
      render_rows_table(rows, cols);
    }
  } else if (o.verb == "verify") {
    std::vector<std::string> cols = {"name", "ok", "expected", "actual"};
    if (o.format == "csv") {
      render_rows_csv(j.at("checks"), cols);
    } else {
      for (const json& c : j.at("checks"))
        std::printf("%s %s: expected %s, got %s\n",
                    c.at("ok").get<bool>() ? "ok  " : "FAIL",
                    c.at("name").get<std::string>().c_str(),
                    cell(c.at("expected")).c_str(), cell(c.at("actual")).c_str());
      std::printf("suite %s: %s\n", j.at("suite").get<std::string>().c_str(),
                  j.at("ok").get<bool>() ? "PASS" : "FAIL");
    }
  } else {
    // scalar reports: info, aperiodic, bounds
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it)
      if (it.key() != "schema" && it.key() != "command") keys.push_back(it.key());
    if (o.format == "csv") {
      render_kv_csv(j, keys);
    } else {
      for (const std::string& k : keys) print_kv(k, cell(j.at(k)));
    }
  }
  if (o.verb == "verify" && !j.at("ok").get<bool>()) return 1;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"Exact algebraic invariants of the monoid of cellular automata "
               "over a finite group"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub, bool with_q) {
    sub->add_option("group", opt.group,
                    "group descriptor: Z<n>, D<n>, Q8, S<n>, A<n> (n <= 5), "
                    "x-separated products, or file:<path>")
        ->required();
    if (with_q)
      sub->add_option("-q,--alphabet", opt.q, "alphabet size (default 2)")
          ->check(CLI::Range(2, 1000000));
    sub->add_option("--format", opt.format, "table, json or csv")
        ->check(CLI::IsMember({"table", "json", "csv"}));
    sub->add_option("--max-enum", opt.max_enum,
                    "override the enumeration caps (configurations, rule space, "
                    "closure size)");
  };

  CLI::App* info = app.add_subcommand("info", "group facts: order, lattice, class graph");
  add_common(info, false);
  CLI::App* alpha = app.add_subcommand(
      "alpha", "orbit counts per conjugacy class of stabilizers");
  add_common(alpha, true);
  CLI::App* ica = app.add_subcommand(
      "ica", "wreath-product structure and order of the invertible group");
  add_common(ica, true);
  CLI::App* aperiodic = app.add_subcommand(
      "aperiodic", "number of configurations with trivial stabilizer");
  add_common(aperiodic, true);
  CLI::App* bounds = app.add_subcommand(
      "bounds", "aperiodic count with its lower and upper bounds");
  add_common(bounds, true);
  CLI::App* relrank = app.add_subcommand(
      "relrank", "relative rank of the invertible group and its generator set");
  add_common(relrank, true);
  CLI::App* verify = app.add_subcommand(
      "verify", "run an independent cross-check suite; nonzero exit on mismatch");
  verify
      ->add_option("suite", opt.suite,
                   "one of: orbits, ica-order, counting, memory, relrank")
      ->required()
      ->check(CLI::IsMember({"orbits", "ica-order", "counting", "memory", "relrank"}));
  add_common(verify, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (opt.max_enum == 0) {
    if (const char* env = std::getenv("CA_ALGEBRA_MAX_ENUM")) {
      char* end = nullptr;
      unsigned long long v = std::strtoull(env, &end, 10);
      if (end == env || *end != '\0' || v == 0) {
        std::fprintf(stderr, "error: CA_ALGEBRA_MAX_ENUM must be a positive integer\n");
        return 2;
      }
      opt.max_enum = v;
    }
  }

  for (CLI::App* sub : {info, alpha, ica, aperiodic, bounds, relrank, verify})
    if (sub->parsed()) opt.verb = sub->get_name();

  try {
    json out;
    if (opt.verb == "info") out = run_info(opt);
    else if (opt.verb == "alpha") out = run_alpha(opt);
    else if (opt.verb == "ica") out = run_ica(opt);
    else if (opt.verb == "aperiodic") out = run_aperiodic(opt);
    else if (opt.verb == "bounds") out = run_bounds(opt);
    else if (opt.verb == "relrank") out = run_relrank(opt);
    else out = run_verify(opt);
    return render(opt, out);
  } catch (const DescriptorError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const CapExceededError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 4;
  } catch (const LimitError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 4;
  } catch (const ValidationError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  } catch (const PreconditionError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  }
}
