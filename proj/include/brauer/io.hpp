#pragma once

// JSON encodings of groups, modules, Burnside elements and reports.
// Rationals travel as {"num": "...", "den": "..."} decimal strings.

#include <istream>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "brauer/arith.hpp"
#include "brauer/burnside.hpp"
#include "brauer/corpus.hpp"
#include "brauer/group.hpp"
#include "brauer/regfe.hpp"
#include "brauer/zgmod.hpp"

namespace brauer::io {

using nlohmann::json;

inline json to_json(const Integer& x) { return x.get_str(); }

inline json to_json(const Rational& q) {
  return json{{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}};
}

inline json to_json(const std::vector<Rational>& v) {
  json a = json::array();
  for (const auto& q : v) a.push_back(to_json(q));
  return a;
}

/// Entries that fit in a machine word are written as numbers, others as strings.
inline json to_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).fits_slong_p())
        row.push_back(m(i, j).get_si());
      else
        row.push_back(m(i, j).get_str());
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    Integer x;
    if (x.set_str(j.get<std::string>(), 10) != 0) fail_input("malformed integer '" + j.get<std::string>() + "'");
    return x;
  }
  fail_input("expected an integer");
}

inline Rational rational_from_json(const json& j) {
  if (j.is_object()) return make_rational(integer_from_json(j.at("num")), integer_from_json(j.at("den")));
  return Rational(integer_from_json(j));
}

inline IntMatrix matrix_from_json(const json& j, std::size_t expected_cols = 0) {
  if (!j.is_array()) fail_input("expected a matrix (array of rows)");
  std::vector<std::vector<Integer>> rows;
  for (const auto& r : j) {
    if (!r.is_array()) fail_input("matrix row is not an array");
    std::vector<Integer> row;
    for (const auto& x : r) row.push_back(integer_from_json(x));
    rows.push_back(std::move(row));
  }
  return IntMatrix::from_rows(rows, expected_cols);
}

inline json parse(std::istream& in) {
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    fail_input(std::string("invalid JSON: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// Groups

/// {"generators": [[...], ...]} or {"cayley_table": [[...], ...]}, with
/// optional "labels"; {"corpus": "V4"} selects a built-in group.
inline FiniteGroup group_from_json(const json& j, std::size_t bound = default_closure_bound) {
  try {
    if (j.contains("corpus")) return *corpus_group(j.at("corpus").get<std::string>());
    if (j.contains("generators")) {
      std::vector<Permutation> gens;
      for (const auto& p : j.at("generators")) gens.push_back(p.get<Permutation>());
      return group_from_generators(gens, bound);
    }
    if (j.contains("cayley_table")) {
      auto table = j.at("cayley_table").get<std::vector<std::vector<int>>>();
      std::vector<std::string> labels;
      if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
      return FiniteGroup::from_cayley_table(table, labels);
    }
  } catch (const json::exception& e) {
    fail_input(std::string("malformed group: ") + e.what());
  }
  fail_input("group JSON needs 'generators', 'cayley_table' or 'corpus'");
}

inline json subgroup_json(const Subgroup& H) { return H.elements; }

inline json class_table_json(const SubgroupClassTable& t) {
  const FiniteGroup& G = t.group();
  json classes = json::array();
  for (std::size_t c = 0; c < t.size(); ++c)
    classes.push_back({{"id", c},
                       {"order", t[c].order()},
                       {"size", t[c].conjugates.size()},
                       {"cyclic", t[c].is_cyclic},
                       {"representative", subgroup_json(t[c].representative)}});
  json elem_classes = json::array();
  for (const auto& cls : G.classes()) elem_classes.push_back(cls);
  json out{{"order", G.order()},
           {"element_classes", elem_classes},
           {"subgroup_count", t.subgroup_count()},
           {"subgroup_classes", classes}};
  if (!G.labels().empty()) out["labels"] = G.labels();
  return out;
}

// ---------------------------------------------------------------------------
// Burnside elements

/// {"coeffs": {"<class-id>": n, ...}}; missing classes have coefficient 0.
inline BurnsideElement burnside_from_json(const json& j, const SubgroupClassTable& t) {
  BurnsideElement theta = zero_element(t);
  try {
    for (const auto& [key, value] : j.at("coeffs").items()) {
      std::size_t pos = 0;
      const unsigned long id = std::stoul(key, &pos);
      if (pos != key.size() || id >= t.size()) fail_input("unknown subgroup class id '" + key + "'");
      theta.coeffs[id] = value.get<long>();
    }
  } catch (const json::exception& e) {
    fail_input(std::string("malformed Burnside element: ") + e.what());
  } catch (const std::logic_error&) {
    fail_input("malformed subgroup class id");
  }
  return theta;
}

inline json burnside_json(const BurnsideElement& theta) {
  json coeffs = json::object();
  for (std::size_t k = 0; k < theta.size(); ++k)
    if (theta.coeffs[k] != 0) coeffs[std::to_string(k)] = theta.coeffs[k];
  return json{{"coeffs", coeffs}};
}

inline json relations_json(const BrauerRelationBasis& b) {
  json a = json::array();
  for (const auto& theta : b.relations) a.push_back(theta.coeffs);
  return a;
}

// ---------------------------------------------------------------------------
// Modules

using Module = std::variant<ZGLattice, FpModule>;

inline std::map<int, IntMatrix> action_from_json(const json& j, std::size_t n) {
  std::map<int, IntMatrix> images;
  for (const auto& [key, value] : j.items()) {
    std::size_t pos = 0;
    int g = 0;
    try {
      g = std::stoi(key, &pos);
    } catch (const std::logic_error&) {
      fail_input("malformed element index '" + key + "'");
    }
    if (pos != key.size()) fail_input("malformed element index '" + key + "'");
    IntMatrix m = matrix_from_json(value, n);
    if (m.rows() != n || m.cols() != n) fail_input("action matrix has the wrong size");
    images.emplace(g, std::move(m));
  }
  return images;
}

inline Subgroup subgroup_from_json(const FiniteGroup& G, const json& j) {
  return make_subgroup(G, j.get<std::vector<int>>());
}

inline ZGLattice lattice_from_json(const json& j, const GroupPtr& G);

/// Lattices: {"rank": r, "action": {"<element>": matrix, ...}} with the
/// action given on all elements or on a generating set, or one of the
/// shorthands {"trivial": true}, {"regular": true}, {"permutation": H},
/// {"sign": kernel}, {"induced_sign": D}, {"direct_sum": [module, ...]}.
/// Modules with torsion: {"presentation": {"gens": n, "relations": [v, ...],
/// "action": {...}}} where each relation v is a vector of length n.
inline Module module_from_json(const json& j, const GroupPtr& G) {
  try {
    if (j.contains("presentation")) {
      const json& p = j.at("presentation");
      const std::size_t n = p.at("gens").get<std::size_t>();
      std::vector<std::vector<Integer>> rels;
      for (const auto& v : p.value("relations", json::array())) {
        std::vector<Integer> col;
        for (const auto& x : v) col.push_back(integer_from_json(x));
        rels.push_back(std::move(col));
      }
      const IntMatrix R = IntMatrix::from_columns(rels, n);
      auto images = action_from_json(p.at("action"), n);
      // complete the action from generators (mod relations the products agree)
      std::vector<std::optional<IntMatrix>> rho(G->order());
      rho[0] = IntMatrix::identity(n);
      std::vector<int> queue{0};
      for (std::size_t i = 0; i < queue.size(); ++i)
        for (const auto& [s, m] : images) {
          if (s < 0 || static_cast<std::size_t>(s) >= G->order()) fail_input("element index out of range");
          const int x = G->mul(s, queue[i]);
          if (!rho[x]) {
            rho[x] = images.count(x) ? images.at(x) : m * *rho[queue[i]];
            queue.push_back(x);
          }
        }
      std::vector<IntMatrix> action;
      for (auto& m : rho) {
        if (!m) fail_input("given elements do not generate the group");
        action.push_back(std::move(*m));
      }
      return FpModule(G, n, R, std::move(action));
    }
    return lattice_from_json(j, G);
  } catch (const json::exception& e) {
    fail_input(std::string("malformed module: ") + e.what());
  }
}

inline ZGLattice lattice_from_json(const json& j, const GroupPtr& G) {
  try {
    if (j.contains("trivial")) return trivial_lattice(G);
    if (j.contains("regular")) return regular_lattice(G);
    if (j.contains("permutation")) return permutation_lattice(G, subgroup_from_json(*G, j.at("permutation")));
    if (j.contains("sign")) return sign_lattice(G, subgroup_from_json(*G, j.at("sign")));
    if (j.contains("induced_sign"))
      return induced_lattice(G, sign_subgroup_module(subgroup_from_json(*G, j.at("induced_sign"))));
    if (j.contains("direct_sum")) {
      std::vector<ZGLattice> parts;
      for (const auto& part : j.at("direct_sum")) parts.push_back(lattice_from_json(part, G));
      return direct_sum(parts, G);
    }
    if (j.contains("rank")) {
      const std::size_t r = j.at("rank").get<std::size_t>();
      return ZGLattice::from_generator_images(G, r, action_from_json(j.at("action"), r));
    }
  } catch (const json::exception& e) {
    fail_input(std::string("malformed lattice: ") + e.what());
  }
  fail_input("module JSON needs 'rank'/'action', 'presentation' or a shorthand");
}

// ---------------------------------------------------------------------------
// Reports

inline json factor_equivalence_json(const BrauerRelationBasis& basis, const FactorEquivalenceReport& r) {
  json index = json::array();
  for (const auto& v : r.index.values) index.push_back(to_json(v));
  return json{{"relations", relations_json(basis)},
              {"regulator_constants",
               {{"M", to_json(r.regulator_constants_m)}, {"N", to_json(r.regulator_constants_n)}}},
              {"index_function", index},
              {"defects", to_json(r.defects)},
              {"verdict", r.verdict},
              {"regulator_verdict", r.regulator_verdict},
              {"embedding", to_json(r.embedding)}};
}

}  // namespace brauer::io
