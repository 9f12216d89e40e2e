#pragma once

// Verification suites over a corpus of groups: the determinant identity for
// G-maps, agreement of the two factor-equivalence routes, the S-unit index
// identity and closed form, and triviality of regulator constants of the
// K-group comparison lattices. Instances are fixed per group; the seed only
// drives the construction of equivariant embeddings.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "brauer/arith.hpp"
#include "brauer/corpus.hpp"
#include "brauer/io.hpp"
#include "brauer/regfe.hpp"
#include "brauer/zgmod.hpp"

namespace brauer {

enum class Suite { lemma, corollary, sunit, kgroups, all };

inline Suite suite_from_name(const std::string& name) {
  if (name == "lemma") return Suite::lemma;
  if (name == "corollary") return Suite::corollary;
  if (name == "sunit") return Suite::sunit;
  if (name == "kgroups") return Suite::kgroups;
  if (name == "all") return Suite::all;
  fail_input("unknown suite '" + name + "'");
}

struct VerifyOptions {
  std::uint64_t seed = 1;
  int retry_budget = default_retry_budget;
  std::size_t subgroup_bound = default_subgroup_bound;
};

/// Class table and relation basis of one group.
struct GroupData {
  std::string name;
  GroupPtr group;
  std::shared_ptr<const SubgroupClassTable> table;
  BrauerRelationBasis basis;

  static GroupData make(std::string name, GroupPtr G, std::size_t bound = default_subgroup_bound) {
    auto table = std::make_shared<const SubgroupClassTable>(all_subgroups(G, bound));
    auto basis = brauer_relation_basis(table);
    return {std::move(name), std::move(G), std::move(table), std::move(basis)};
  }

  /// The basis relations, or the zero relation when K(G) = 0.
  std::vector<BurnsideElement> relations_or_zero() const {
    if (basis.size() > 0) return basis.relations;
    return {zero_element(*table)};
  }
};

/// {x ∈ Z[G] : Σ x_g ≡ 0 mod p}, a G-stable sublattice of index p.
inline ZGLattice augmentation_sublattice(const ZGLattice& M, long p) {
  IntMatrix B(M.rank(), M.rank());
  B(0, 0) = p;
  for (std::size_t i = 1; i < M.rank(); ++i) {
    B(0, i) = 1;
    B(i, i) = -1;
  }
  return sublattice(M, B);
}

/// ker(Z[X] → Z) for a permutation lattice Z[X].
inline ZGLattice augmentation_kernel(const ZGLattice& M) {
  IntMatrix B(M.rank(), M.rank() - 1);
  for (std::size_t i = 1; i < M.rank(); ++i) {
    B(0, i - 1) = 1;
    B(i, i - 1) = -1;
  }
  return sublattice(M, B);
}

/// The two sides of Θ as permutation lattices ⊕ Z[G/H]^{±n_H}.
inline std::pair<ZGLattice, ZGLattice> relation_sides(const GroupData& d, const BurnsideElement& theta) {
  std::vector<ZGLattice> pos, neg;
  for (std::size_t k = 0; k < theta.size(); ++k) {
    const ZGLattice P = permutation_lattice(d.group, (*d.table)[k].representative);
    for (long i = 0; i < theta.coeffs[k]; ++i) pos.push_back(P);
    for (long i = 0; i < -theta.coeffs[k]; ++i) neg.push_back(P);
  }
  return {direct_sum(pos, d.group), direct_sum(neg, d.group)};
}

struct LatticePair {
  std::string name;
  ZGLattice m;
  ZGLattice n;
};

/// Rationally isomorphic lattice pairs used by the lemma and corollary suites.
inline std::vector<LatticePair> lattice_pairs(const GroupData& d) {
  const GroupPtr& G = d.group;
  std::vector<LatticePair> pairs;
  const ZGLattice ZG = regular_lattice(G);
  pairs.push_back({"regular/regular", ZG, ZG});
  pairs.push_back({"trivial/trivial", trivial_lattice(G), trivial_lattice(G)});
  for (std::size_t i = 0; i < d.basis.size(); ++i) {
    auto [pos, neg] = relation_sides(d, d.basis[i]);
    pairs.push_back({"relation" + std::to_string(i) + "-sides", pos, neg});
  }
  for (long p : {2L, 3L, 5L})
    pairs.push_back({"regular/augmentation-mod-" + std::to_string(p), ZG, augmentation_sublattice(ZG, p)});
  pairs.push_back(
      {"regular/augmentation-kernel+trivial", ZG, direct_sum(augmentation_kernel(ZG), trivial_lattice(G))});
  for (std::size_t k = 1; k + 1 < d.table->size(); ++k) {
    const ZGLattice P = permutation_lattice(G, (*d.table)[k].representative);
    pairs.push_back({"permutation" + std::to_string(k) + "/augmentation-kernel+trivial", P,
                     direct_sum(augmentation_kernel(P), trivial_lattice(G))});
  }
  return pairs;
}

struct FpInstance {
  std::string name;
  FpModule m;
  FpModule n;
  IntMatrix map;
};

/// G-maps between modules with torsion of orders 3, 5 and 9.
inline std::vector<FpInstance> torsion_instances(const GroupData& d) {
  const GroupPtr& G = d.group;
  const ZGLattice ZG = regular_lattice(G);
  const ZGLattice triv = trivial_lattice(G);
  const std::size_t g = ZG.rank();
  const FpModule ZGfp = FpModule::from_lattice(ZG);
  std::vector<FpInstance> out;

  out.push_back({"regular+regular/3 -> regular", direct_sum(ZGfp, reduction_mod(ZG, 3)), ZGfp,
                 hstack(IntMatrix::identity(g), IntMatrix(g, g))});
  {
    IntMatrix T(1, 2);
    T(0, 0) = 1;
    out.push_back({"trivial+Z/5 -> trivial", direct_sum(FpModule::from_lattice(triv), reduction_mod(triv, 5)),
                   FpModule::from_lattice(triv), T});
  }
  out.push_back({"regular -> regular+Z/9", ZGfp, direct_sum(ZGfp, reduction_mod(triv, 9)),
                 vstack(IntMatrix::identity(g), IntMatrix(1, g))});
  {
    const IntMatrix fixed = fixed_sublattice(ZG, whole_group(*G));
    out.push_back({"regular/9N -> regular/3N", quotient(ZG, Integer(9) * fixed), quotient(ZG, Integer(3) * fixed),
                   IntMatrix::identity(g)});
  }
  {
    const FpModule M = direct_sum(ZGfp, reduction_mod(ZG, 5));
    IntMatrix T(2 * g, 2 * g);
    T.set_block(0, 0, Integer(3) * IntMatrix::identity(g));
    T.set_block(g, 0, IntMatrix::identity(g));
    T.set_block(g, g, Integer(2) * IntMatrix::identity(g));
    out.push_back({"regular+regular/5 mixed map", M, M, T});
  }
  return out;
}

/// D lists for the place model: every class alone and every pair of classes.
inline std::vector<std::vector<std::size_t>> place_model_choices(const GroupData& d) {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t a = 0; a < d.table->size(); ++a) out.push_back({a});
  for (std::size_t a = 0; a < d.table->size(); ++a)
    for (std::size_t b = a; b < d.table->size(); ++b) out.push_back({a, b});
  return out;
}

struct KGroupChoice {
  std::vector<std::size_t> classes;
  std::size_t s2 = 0;
  Parity parity = Parity::odd;
};

/// D_real lists of length up to 2 drawn from admissible classes (order ≤ 2
/// for odd parity, exactly 2 for even), each with 0 or 1 complex places, and
/// complex places alone.
inline std::vector<KGroupChoice> kgroup_choices(const GroupData& d) {
  std::vector<KGroupChoice> out;
  for (Parity parity : {Parity::odd, Parity::even}) {
    std::vector<std::size_t> admissible;
    for (std::size_t k = 0; k < d.table->size(); ++k) {
      const std::size_t o = (*d.table)[k].order();
      if (parity == Parity::even ? o == 2 : o <= 2) admissible.push_back(k);
    }
    for (std::size_t s2 : {1, 2}) out.push_back({{}, s2, parity});
    for (std::size_t s2 : {0, 1}) {
      for (std::size_t a = 0; a < admissible.size(); ++a) {
        out.push_back({{admissible[a]}, s2, parity});
        for (std::size_t b = a; b < admissible.size(); ++b)
          out.push_back({{admissible[a], admissible[b]}, s2, parity});
      }
    }
  }
  return out;
}

inline std::string class_list_name(const std::vector<std::size_t>& ks) {
  std::string s = "[";
  for (std::size_t i = 0; i < ks.size(); ++i) s += (i ? "," : "") + std::to_string(ks[i]);
  return s + "]";
}

/// Runs the requested suites and returns the report. Identical inputs give
/// byte-identical reports.
inline io::json run_verify(const std::vector<GroupData>& groups, Suite suite, const VerifyOptions& opt) {
  using io::json;
  using io::to_json;
  const bool all = suite == Suite::all;
  std::size_t passed = 0, failed = 0;
  json group_reports = json::array();

  for (const GroupData& d : groups) {
    json checks = json::array();
    auto record = [&](const std::string& s, const std::string& name, bool pass, json details) {
      (pass ? passed : failed)++;
      details["suite"] = s;
      details["name"] = name;
      details["pass"] = pass;
      checks.push_back(std::move(details));
    };
    // Errors inside one check are reported as failures of that check.
    auto guarded = [&](const std::string& s, const std::string& name, const std::function<void()>& body) {
      try {
        body();
      } catch (const Error& e) {
        record(s, name, false, json{{"error", e.what()}});
      }
    };
    const auto relations = d.relations_or_zero();
    std::uint64_t seed_offset = 0;

    if (all || suite == Suite::lemma) {
      for (const auto& pair : lattice_pairs(d)) {
        const std::uint64_t seed = opt.seed + seed_offset++;
        guarded("lemma", pair.name, [&] {
          const IntMatrix T = find_equivariant_embedding(pair.m, pair.n, seed, opt.retry_budget);
          for (std::size_t i = 0; i < relations.size(); ++i) {
            const LemmaCheck c = verify_lemma(*d.table, pair.m, pair.n, T, relations[i]);
            record("lemma", pair.name + " rel" + std::to_string(i), c.holds,
                   json{{"lhs", to_json(c.lhs)}, {"rhs", to_json(c.rhs)}});
          }
        });
      }
      for (const auto& inst : torsion_instances(d)) {
        guarded("lemma", inst.name, [&] {
          for (std::size_t i = 0; i < relations.size(); ++i) {
            const LemmaCheck c = verify_lemma(*d.table, inst.m, inst.n, inst.map, relations[i]);
            record("lemma", inst.name + " rel" + std::to_string(i), c.holds,
                   json{{"lhs", to_json(c.lhs)}, {"rhs", to_json(c.rhs)}});
          }
        });
      }
    }

    if (all || suite == Suite::corollary) {
      for (const auto& pair : lattice_pairs(d)) {
        const std::uint64_t seed = opt.seed + seed_offset++;
        guarded("corollary", pair.name, [&] {
          const auto r = factor_equivalent(d.basis, pair.m, pair.n, seed, opt.retry_budget);
          record("corollary", pair.name, r.verdict == r.regulator_verdict,
                 json{{"verdict", r.verdict},
                      {"defects", to_json(r.defects)},
                      {"regulator_constants",
                       {{"M", to_json(r.regulator_constants_m)}, {"N", to_json(r.regulator_constants_n)}}}});
        });
      }
      for (const auto& inst : torsion_instances(d)) {
        guarded("corollary", inst.name, [&] {
          const auto r = factor_equivalence_via(d.basis, inst.m, inst.n, inst.map);
          record("corollary", inst.name, r.verdict == r.regulator_verdict,
                 json{{"verdict", r.verdict},
                      {"defects", to_json(r.defects)},
                      {"regulator_constants",
                       {{"M", to_json(r.regulator_constants_m)}, {"N", to_json(r.regulator_constants_n)}}}});
        });
      }
    }

    if (all || suite == Suite::sunit) {
      for (const auto& choice : place_model_choices(d)) {
        const std::string model_name = "D=" + class_list_name(choice);
        guarded("sunit", model_name, [&] {
          std::vector<Subgroup> D_list;
          for (std::size_t k : choice) D_list.push_back((*d.table)[k].representative);
          const PlaceModel model = make_place_model(d.group, D_list);
          for (std::size_t h = 0; h < d.table->size(); ++h) {
            const auto c = verify_sunit_index(model, (*d.table)[h].representative);
            record("sunit", model_name + " index H=" + std::to_string(h), c.holds,
                   json{{"index", to_json(c.index)}, {"n_over_l", to_json(c.expected)}});
          }
          for (std::size_t i = 0; i < relations.size(); ++i) {
            const auto c = verify_sunit_closed_form(model, *d.table, relations[i]);
            record("sunit", model_name + " closed-form rel" + std::to_string(i), c.holds,
                   json{{"lhs", to_json(c.lhs)}, {"rhs", to_json(c.rhs)}});
          }
        });
      }
    }

    if (all || suite == Suite::kgroups) {
      for (const auto& choice : kgroup_choices(d)) {
        const std::string name = std::string(choice.parity == Parity::odd ? "odd" : "even") +
                                 " D=" + class_list_name(choice.classes) + " s2=" + std::to_string(choice.s2);
        guarded("kgroups", name, [&] {
          std::vector<Subgroup> D_real;
          for (std::size_t k : choice.classes) D_real.push_back((*d.table)[k].representative);
          const ZGLattice M = kgroup_comparison_module(d.group, D_real, choice.s2, choice.parity);
          const auto table = regulator_constants_table(d.basis, M);
          bool ones = true;
          for (const auto& c : table) ones = ones && c == 1;
          record("kgroups", name, ones, json{{"rank", M.rank()}, {"regulator_constants", to_json(table)}});
        });
      }
    }

    group_reports.push_back(json{{"group", d.name},
                                 {"order", d.group->order()},
                                 {"relations", io::relations_json(d.basis)},
                                 {"checks", std::move(checks)}});
  }
  return json{{"seed", opt.seed},
              {"groups", std::move(group_reports)},
              {"summary", {{"checks", passed + failed}, {"passed", passed}, {"failed", failed}}}};
}

}  // namespace brauer
