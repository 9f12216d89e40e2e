// brauer: Brauer relations, regulator constants and factor equivalence of
// integral group-ring modules from the command line.
//
// Exit codes: 0 success, 2 input error, 3 precondition violation,
// 4 verification failure.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "brauer/arith.hpp"
#include "brauer/burnside.hpp"
#include "brauer/corpus.hpp"
#include "brauer/io.hpp"
#include "brauer/regfe.hpp"
#include "brauer/verify.hpp"

namespace {

using brauer::io::json;

constexpr int kExitInput = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitVerification = 4;

struct RunConfig {
  std::uint64_t seed = 1;
  std::size_t group_size_bound = brauer::default_subgroup_bound;
  int retry_budget = brauer::default_retry_budget;
  std::string format = "text";
  std::string output;
};

json read_json_source(const std::string& source) {
  if (source == "-") return brauer::io::parse(std::cin);
  std::ifstream in(source);
  if (!in) brauer::fail_input("cannot open '" + source + "'");
  return brauer::io::parse(in);
}

/// A corpus name (C2, C4, C6, V4, S3, D4, Q8), a JSON file path, or "-".
brauer::GroupData load_group(const std::string& source, const RunConfig& cfg) {
  for (const auto& name : brauer::corpus_names())
    if (source == name) return brauer::GroupData::make(name, brauer::corpus_group(name), cfg.group_size_bound);
  auto G = std::make_shared<const brauer::FiniteGroup>(brauer::io::group_from_json(read_json_source(source)));
  return brauer::GroupData::make(source, std::move(G), cfg.group_size_bound);
}

std::string rational_text(const brauer::Rational& q) { return q.get_str(); }

std::string join(const std::vector<brauer::Rational>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + rational_text(v[i]);
  return s;
}

std::string relation_text(const brauer::BurnsideElement& theta) {
  std::string s;
  for (std::size_t k = 0; k < theta.size(); ++k) {
    const long c = theta.coeffs[k];
    if (c == 0) continue;
    if (!s.empty()) s += c > 0 ? " + " : " - ";
    else if (c < 0) s += "-";
    const long a = c < 0 ? -c : c;
    if (a != 1) s += std::to_string(a) + "*";
    s += "H" + std::to_string(k);
  }
  return s.empty() ? "0" : s;
}

class Output {
public:
  explicit Output(const RunConfig& cfg) : cfg_(cfg) {}

  void emit(const json& j, const std::string& text) {
    std::string body = cfg_.format == "json" ? j.dump(2) + "\n" : text;
    if (cfg_.output.empty()) {
      std::cout << body;
    } else {
      std::ofstream out(cfg_.output);
      if (!out) brauer::fail_input("cannot write '" + cfg_.output + "'");
      out << body;
    }
  }

private:
  const RunConfig& cfg_;
};

int cmd_group(const RunConfig& cfg, const std::string& group_src) {
  const auto d = load_group(group_src, cfg);
  const json j = brauer::io::class_table_json(*d.table);
  std::ostringstream t;
  t << "order " << d.group->order() << ", " << d.group->classes().size() << " element classes, "
    << d.table->subgroup_count() << " subgroups in " << d.table->size() << " classes\n";
  for (std::size_t c = 0; c < d.table->size(); ++c) {
    const auto& cls = (*d.table)[c];
    t << "H" << c << ": order " << cls.order() << ", " << cls.conjugates.size() << " conjugate(s)"
      << (cls.is_cyclic ? ", cyclic" : "") << ", representative {";
    for (std::size_t i = 0; i < cls.representative.elements.size(); ++i)
      t << (i ? "," : "") << cls.representative.elements[i];
    t << "}\n";
  }
  Output(cfg).emit(j, t.str());
  return 0;
}

int cmd_relations(const RunConfig& cfg, const std::string& group_src) {
  const auto d = load_group(group_src, cfg);
  const json j{{"classes", d.table->size()},
               {"cyclic_classes", d.table->cyclic_class_count()},
               {"relations", brauer::io::relations_json(d.basis)}};
  std::ostringstream t;
  t << "rank K(G) = " << d.basis.size() << "\n";
  for (std::size_t i = 0; i < d.basis.size(); ++i) t << "Theta" << i << " = " << relation_text(d.basis[i]) << "\n";
  Output(cfg).emit(j, t.str());
  return 0;
}

int cmd_regconst(const RunConfig& cfg, const std::string& group_src, const std::string& module_src,
                 const std::string& relation_src) {
  const auto d = load_group(group_src, cfg);
  const auto module = brauer::io::module_from_json(read_json_source(module_src), d.group);
  std::vector<brauer::BurnsideElement> relations = d.basis.relations;
  if (!relation_src.empty())
    relations = {brauer::io::burnside_from_json(read_json_source(relation_src), *d.table)};
  std::vector<brauer::Rational> values;
  for (const auto& theta : relations)
    values.push_back(std::visit([&](const auto& m) { return brauer::regulator_constant(*d.table, theta, m); },
                                module));
  json rel = json::array();
  for (const auto& theta : relations) rel.push_back(theta.coeffs);
  const json j{{"relations", rel}, {"regulator_constants", brauer::io::to_json(values)}};
  std::ostringstream t;
  for (std::size_t i = 0; i < relations.size(); ++i)
    t << "C[" << relation_text(relations[i]) << "] = " << rational_text(values[i]) << "\n";
  if (relations.empty()) t << "no Brauer relations\n";
  Output(cfg).emit(j, t.str());
  return 0;
}

int cmd_factor_equiv(const RunConfig& cfg, const std::string& group_src, const std::string& a_src,
                     const std::string& b_src, const std::string& map_src) {
  const auto d = load_group(group_src, cfg);
  const auto A = brauer::io::module_from_json(read_json_source(a_src), d.group);
  const auto B = brauer::io::module_from_json(read_json_source(b_src), d.group);
  std::optional<brauer::IntMatrix> T;
  if (!map_src.empty()) T = brauer::io::matrix_from_json(read_json_source(map_src));

  brauer::FactorEquivalenceReport r;
  const auto* la = std::get_if<brauer::ZGLattice>(&A);
  const auto* lb = std::get_if<brauer::ZGLattice>(&B);
  if (la && lb) {
    r = T ? brauer::factor_equivalence_via(d.basis, *la, *lb, *T)
          : brauer::factor_equivalent(d.basis, *la, *lb, cfg.seed, cfg.retry_budget);
  } else {
    if (!T) brauer::fail_input("modules with torsion need an explicit --map");
    auto as_fp = [](const brauer::io::Module& m) {
      if (const auto* l = std::get_if<brauer::ZGLattice>(&m)) return brauer::FpModule::from_lattice(*l);
      return std::get<brauer::FpModule>(m);
    };
    r = brauer::factor_equivalence_via(d.basis, as_fp(A), as_fp(B), *T);
  }
  const json j = brauer::io::factor_equivalence_json(d.basis, r);
  std::ostringstream t;
  t << "factor equivalent: " << (r.verdict ? "yes" : "no") << "\n"
    << "defects: " << join(r.defects) << "\n"
    << "C(M): " << join(r.regulator_constants_m) << "\n"
    << "C(N): " << join(r.regulator_constants_n) << "\n"
    << "regulator route agrees: " << (r.regulator_verdict == r.verdict ? "yes" : "no") << "\n";
  Output(cfg).emit(j, t.str());
  return 0;
}

int cmd_verify(const RunConfig& cfg, const std::string& suite_name, const std::vector<std::string>& group_srcs) {
  const brauer::Suite suite = brauer::suite_from_name(suite_name);
  std::vector<brauer::GroupData> groups;
  if (group_srcs.empty()) {
    for (const auto& e : brauer::default_corpus())
      groups.push_back(brauer::GroupData::make(e.name, e.group, cfg.group_size_bound));
  } else {
    for (const auto& s : group_srcs) groups.push_back(load_group(s, cfg));
  }
  const brauer::VerifyOptions opt{cfg.seed, cfg.retry_budget, cfg.group_size_bound};
  const json report = brauer::run_verify(groups, suite, opt);
  std::ostringstream t;
  for (const auto& g : report.at("groups")) {
    for (const auto& c : g.at("checks"))
      t << (c.at("pass").get<bool>() ? "PASS " : "FAIL ") << c.at("suite").get<std::string>() << " "
        << g.at("group").get<std::string>() << " " << c.at("name").get<std::string>() << "\n";
  }
  const auto& s = report.at("summary");
  t << s.at("passed").get<std::size_t>() << "/" << s.at("checks").get<std::size_t>() << " checks passed\n";
  Output(cfg).emit(report, t.str());
  return s.at("failed").get<std::size_t>() == 0 ? 0 : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Brauer relations, regulator constants and factor equivalence"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--seed", cfg.seed, "Seed for equivariant-embedding search");
  app.add_option("--bound", cfg.group_size_bound, "Largest group order for subgroup enumeration")
      ->check(CLI::PositiveNumber);
  app.add_option("--retry", cfg.retry_budget, "Attempts allowed when searching for an embedding")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--output", cfg.output, "Write the report to this path instead of stdout");

  std::string group_src, module_src, relation_src, a_src, b_src, map_src, suite_name;
  std::vector<std::string> verify_groups;

  auto* group = app.add_subcommand("group", "Subgroup class table");
  group->add_option("group", group_src, "Corpus name, JSON file or -")->required();

  auto* relations = app.add_subcommand("relations", "Basis of the Brauer relations K(G)");
  relations->add_option("group", group_src, "Corpus name, JSON file or -")->required();

  auto* regconst = app.add_subcommand("regconst", "Regulator constants of a module");
  regconst->add_option("group", group_src, "Corpus name, JSON file or -")->required();
  regconst->add_option("module", module_src, "Module JSON file or -")->required();
  regconst->add_option("--relation", relation_src, "Burnside element JSON (default: the relation basis)");

  auto* fe = app.add_subcommand("factor-equiv", "Decide factor equivalence of two modules");
  fe->add_option("group", group_src, "Corpus name, JSON file or -")->required();
  fe->add_option("module_a", a_src, "First module JSON")->required();
  fe->add_option("module_b", b_src, "Second module JSON")->required();
  fe->add_option("--map", map_src, "JSON matrix of a G-map A -> B (default: search for an embedding)");

  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("suite", suite_name, "lemma | corollary | sunit | kgroups | all")->required();
  verify->add_option("--group", verify_groups, "Corpus name or JSON file (repeatable; default: whole corpus)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*group) return cmd_group(cfg, group_src);
    if (*relations) return cmd_relations(cfg, group_src);
    if (*regconst) return cmd_regconst(cfg, group_src, module_src, relation_src);
    if (*fe) return cmd_factor_equiv(cfg, group_src, a_src, b_src, map_src);
    if (*verify) return cmd_verify(cfg, suite_name, verify_groups);
  } catch (const brauer::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case brauer::ErrorKind::input: return kExitInput;
      case brauer::ErrorKind::precondition: return kExitPrecondition;
      case brauer::ErrorKind::verification: return kExitVerification;
    }
  }
  return kExitInput;
}
