#pragma once

// Burnside-ring elements and the lattice K(G) of Brauer relations, computed
// from fixed-point counts of group elements on the transitive G-sets G/H.

#include <memory>
#include <vector>

#include "brauer/exactla.hpp"
#include "brauer/group.hpp"

namespace brauer {

/// Σ n_H H over conjugacy classes of subgroups, indexed like the class table.
struct BurnsideElement {
  std::vector<long> coeffs;

  std::size_t size() const noexcept { return coeffs.size(); }
  bool is_zero() const {
    for (long c : coeffs)
      if (c != 0) return false;
    return true;
  }
  friend bool operator==(const BurnsideElement&, const BurnsideElement&) = default;

  friend BurnsideElement operator+(BurnsideElement a, const BurnsideElement& b) {
    if (a.size() != b.size()) fail_precondition("Burnside elements over different class tables");
    for (std::size_t i = 0; i < a.size(); ++i) a.coeffs[i] += b.coeffs[i];
    return a;
  }
  friend BurnsideElement operator*(long k, BurnsideElement a) {
    for (auto& c : a.coeffs) c *= k;
    return a;
  }
  BurnsideElement operator-() const { return -1 * *this; }
};

inline BurnsideElement zero_element(const SubgroupClassTable& table) {
  return {std::vector<long>(table.size(), 0)};
}

/// The permutation action of G on the left cosets G/H: action[g][c] = g·c.
inline std::vector<Permutation> coset_action(const FiniteGroup& G, const Subgroup& H) {
  const CosetSpace cs = left_cosets(G, H);
  std::vector<Permutation> action(G.order(), Permutation(cs.size()));
  for (std::size_t g = 0; g < G.order(); ++g)
    for (std::size_t c = 0; c < cs.size(); ++c)
      action[g][c] = cs.coset_of[G.mul(static_cast<int>(g), cs.representatives[c])];
  return action;
}

/// Table of marks restricted to cyclic subgroups: entry (c, K) is the number
/// of cosets xK fixed by the representative of element class c.
inline IntMatrix fixed_point_matrix(const SubgroupClassTable& table) {
  const FiniteGroup& G = table.group();
  IntMatrix F(G.classes().size(), table.size());
  for (std::size_t k = 0; k < table.size(); ++k) {
    const Subgroup& K = table[k].representative;
    const CosetSpace cs = left_cosets(G, K);
    for (std::size_t c = 0; c < G.classes().size(); ++c) {
      const int g = G.class_representative(c);
      long fixed = 0;
      for (int x : cs.representatives)
        if (K.contains(G.mul(G.inv(x), G.mul(g, x)))) ++fixed;
      F(c, k) = fixed;
    }
  }
  return F;
}

inline bool is_brauer_relation(const SubgroupClassTable& table, const BurnsideElement& theta) {
  if (theta.size() != table.size()) fail_precondition("Burnside element has the wrong length");
  const IntMatrix F = fixed_point_matrix(table);
  for (std::size_t c = 0; c < F.rows(); ++c) {
    Integer s = 0;
    for (std::size_t k = 0; k < F.cols(); ++k) s += F(c, k) * theta.coeffs[k];
    if (s != 0) return false;
  }
  return true;
}

/// A Z-basis of K(G), each relation verified.
struct BrauerRelationBasis {
  std::shared_ptr<const SubgroupClassTable> table;
  std::vector<BurnsideElement> relations;

  std::size_t size() const noexcept { return relations.size(); }
  const BurnsideElement& operator[](std::size_t i) const { return relations[i]; }
};

/// Saturated integer kernel of the fixed-point matrix, in row Hermite form,
/// so the first nonzero coefficient of every relation is positive.
inline BrauerRelationBasis brauer_relation_basis(std::shared_ptr<const SubgroupClassTable> table) {
  const IntMatrix K = integer_kernel(fixed_point_matrix(*table));
  const IntMatrix H = hermite_rows(K.transpose());
  BrauerRelationBasis basis{table, {}};
  for (std::size_t r = 0; r < H.rows(); ++r) {
    BurnsideElement theta{std::vector<long>(H.cols())};
    for (std::size_t k = 0; k < H.cols(); ++k) {
      if (!H(r, k).fits_slong_p()) fail_verification("relation coefficient overflow");
      theta.coeffs[k] = H(r, k).get_si();
    }
    if (!is_brauer_relation(*table, theta)) fail_verification("kernel vector is not a Brauer relation");
    basis.relations.push_back(std::move(theta));
  }
  return basis;
}

/// Coefficients of Θ ∈ K(G) in the given basis; throws if Θ is not a relation.
inline std::vector<Integer> relation_coordinates(const BrauerRelationBasis& basis,
                                                 const BurnsideElement& theta) {
  IntMatrix B(theta.size(), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t k = 0; k < theta.size(); ++k) B(k, j) = basis[j].coeffs[k];
  std::vector<Integer> t(theta.coeffs.begin(), theta.coeffs.end());
  auto x = IntegerSolver(B).solve(t);
  if (!x) fail_precondition("not a Brauer relation");
  return *x;
}

}  // namespace brauer
