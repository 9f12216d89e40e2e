#pragma once

// Group-theoretic models of two arithmetic comparisons: the augmentation
// kernel I_S of a permutation lattice Z[S] (the rational shadow of S-units,
// with residue degrees taken in the everywhere-unramified model), and the
// lattices that K-groups of rings of integers are compared against.

#include <numeric>
#include <set>
#include <vector>

#include "brauer/burnside.hpp"
#include "brauer/exactla.hpp"
#include "brauer/group.hpp"
#include "brauer/regfe.hpp"
#include "brauer/zgmod.hpp"

namespace brauer {

/// S = ⊔_i G/D_i. Point (i, c) has stabilizer x D_i x⁻¹ for the coset xD_i.
struct PlaceModel {
  GroupPtr group;
  std::vector<Subgroup> decomposition_groups;
  std::vector<Permutation> action;   // one permutation of S per group element
  std::vector<Subgroup> stabilizers;  // per point of S

  std::size_t size() const noexcept { return stabilizers.size(); }
};

inline PlaceModel make_place_model(const GroupPtr& Gp, const std::vector<Subgroup>& D_list) {
  if (D_list.empty()) fail_precondition("need at least one decomposition group");
  const FiniteGroup& G = *Gp;
  PlaceModel model{Gp, D_list, std::vector<Permutation>(G.order()), {}};
  for (const Subgroup& D : D_list) {
    make_subgroup(G, D.elements);
    const std::size_t offset = model.stabilizers.size();
    const CosetSpace cs = left_cosets(G, D);
    const auto act = coset_action(G, D);
    for (std::size_t g = 0; g < G.order(); ++g)
      for (int c : act[g]) model.action[g].push_back(static_cast<int>(offset) + c);
    for (int x : cs.representatives) model.stabilizers.push_back(conjugate(G, D, x));
  }
  return model;
}

struct SUnitLattice {
  ZGLattice ambient;  // Z[S]
  IntMatrix basis;    // columns e_0 − e_i, i ≥ 1, in Z[S] coordinates
  ZGLattice lattice;  // I_S = ker(Z[S] → Z) in that basis
};

inline SUnitLattice sunit_lattice(const PlaceModel& model) {
  ZGLattice ambient = permutation_lattice(model.group, model.action);
  const std::size_t s = model.size();
  IntMatrix B(s, s - 1);
  for (std::size_t i = 1; i < s; ++i) {
    B(0, i - 1) = 1;
    B(i, i - 1) = -1;
  }
  ZGLattice I = sublattice(ambient, B);
  return {std::move(ambient), std::move(B), std::move(I)};
}

/// Pairing on I_S induced by the one making the points of S orthonormal.
inline InvariantPairing orthonormal_pairing(const SUnitLattice& su) {
  return make_pairing(su.lattice, su.basis.transpose() * su.basis);
}

struct PlaceOrbit {
  std::vector<int> points;
  int representative = 0;
  Integer residue_degree;  // |H ∩ Stab(representative)|
};

struct ResidueDegrees {
  std::vector<PlaceOrbit> orbits;  // the places of the fixed field, in order of least point
  Integer n = 1;                   // product of residue degrees
  Integer l = 1;                   // their lcm
};

/// H-orbits on S with f = |H ∩ Stab(q)|. Orbit–stabilizer forces
/// |orbit|·f = |H|, which is checked.
inline ResidueDegrees residue_degrees(const PlaceModel& model, const Subgroup& H) {
  ResidueDegrees rd;
  std::vector<bool> seen(model.size(), false);
  for (std::size_t p = 0; p < model.size(); ++p) {
    if (seen[p]) continue;
    PlaceOrbit o;
    std::set<int> pts;
    for (int h : H.elements) pts.insert(model.action[h][p]);
    for (int q : pts) seen[q] = true;
    o.points.assign(pts.begin(), pts.end());
    o.representative = static_cast<int>(p);
    o.residue_degree = static_cast<unsigned long>(intersect(H, model.stabilizers[p]).order());
    if (o.residue_degree * static_cast<unsigned long>(o.points.size()) != static_cast<unsigned long>(H.order()))
      fail_verification("orbit size times residue degree differs from |H|");
    rd.n *= o.residue_degree;
    rd.l = lcm(rd.l, o.residue_degree);
    rd.orbits.push_back(std::move(o));
  }
  return rd;
}

/// Images of the generators p_1 − p_i of I_{S_H} under p ↦ f_p·Σ_{q|p} q,
/// in Z[S] coordinates.
inline IntMatrix subfield_lattice_embedding(const PlaceModel& model, const Subgroup& H) {
  const ResidueDegrees rd = residue_degrees(model, H);
  const std::size_t k = rd.orbits.size();
  IntMatrix img(model.size(), k - 1);
  for (std::size_t i = 1; i < k; ++i) {
    for (int q : rd.orbits[0].points) img(q, i - 1) += rd.orbits[0].residue_degree;
    for (int q : rd.orbits[i].points) img(q, i - 1) -= rd.orbits[i].residue_degree;
  }
  return img;
}

struct SUnitIndexCheck {
  Rational index;     // [(I_S)^H : image of I_{S_H}]
  Rational expected;  // n(H)/l(H)
  bool holds = false;
};

inline SUnitIndexCheck verify_sunit_index(const PlaceModel& model, const Subgroup& H) {
  const SUnitLattice su = sunit_lattice(model);
  const IntMatrix fixed = su.basis * fixed_sublattice(su.lattice, H);
  const ResidueDegrees rd = residue_degrees(model, H);
  SUnitIndexCheck c;
  c.index = Rational(lattice_index(subfield_lattice_embedding(model, H), fixed));
  c.expected = make_rational(rd.n, rd.l);
  c.holds = c.index == c.expected;
  return c;
}

struct ClosedFormCheck {
  Rational lhs;  // C_Θ(I_S), orthonormal pairing
  Rational rhs;  // C_Θ(triv) / ∏_i C_Θ(Z[G/D_i]) · ∏_H (l(H)/n(H))^{2 n_H}
  Rational lhs_averaged;  // C_Θ(I_S) with the averaged pairing
  bool holds = false;
};

inline ClosedFormCheck verify_sunit_closed_form(const PlaceModel& model, const SubgroupClassTable& table,
                                                const BurnsideElement& theta) {
  require_relation(table, theta);
  const SUnitLattice su = sunit_lattice(model);
  ClosedFormCheck c;
  c.lhs = regulator_constant(table, theta, su.lattice, orthonormal_pairing(su));
  c.lhs_averaged = regulator_constant(table, theta, su.lattice);
  c.rhs = regulator_constant(table, theta, trivial_lattice(model.group));
  for (const Subgroup& D : model.decomposition_groups)
    c.rhs /= regulator_constant(table, theta, permutation_lattice(model.group, D));
  for (std::size_t k = 0; k < table.size(); ++k) {
    if (theta.coeffs[k] == 0) continue;
    const ResidueDegrees rd = residue_degrees(model, table[k].representative);
    c.rhs *= rational_pow(make_rational(rd.l, rd.n), 2 * theta.coeffs[k]);
  }
  c.holds = c.lhs == c.rhs && c.lhs == c.lhs_averaged;
  return c;
}

// ---------------------------------------------------------------------------
// K-group comparison lattices

enum class Parity { odd, even };

/// Odd: ⊕_{D} Z[G/D] ⊕ Z[G]^{s2}. Even: ⊕_{D} Ind_D^G ε_D ⊕ Z[G]^{s2}, where
/// every D must have order 2 and ε_D is its sign character.
inline ZGLattice kgroup_comparison_module(const GroupPtr& G, const std::vector<Subgroup>& D_real,
                                          std::size_t s2_count, Parity parity) {
  std::vector<ZGLattice> parts;
  for (const Subgroup& D : D_real) {
    make_subgroup(*G, D.elements);
    if (parity == Parity::even) {
      if (D.order() != 2) fail_precondition("even parity needs decomposition groups of order 2");
      parts.push_back(induced_lattice(G, sign_subgroup_module(D)));
    } else {
      if (D.order() > 2) fail_precondition("decomposition groups at infinity have order at most 2");
      parts.push_back(permutation_lattice(G, D));
    }
  }
  for (std::size_t i = 0; i < s2_count; ++i) parts.push_back(regular_lattice(G));
  return direct_sum(parts, G);
}

inline bool verify_kgroup_triviality(const ZGLattice& M, const BrauerRelationBasis& basis) {
  for (const auto& c : regulator_constants_table(basis, M))
    if (c != 1) return false;
  return true;
}

}  // namespace brauer
