#pragma once

// Integral representations of a finite group: Z-free lattices with one
// action matrix per group element, finitely presented modules with torsion,
// their standard constructions, fixed points and equivariant maps.

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "brauer/burnside.hpp"
#include "brauer/exactla.hpp"
#include "brauer/group.hpp"

namespace brauer {

inline constexpr int default_retry_budget = 64;

/// A Z[G]-lattice of rank r: ρ(g) is an r×r integer matrix for every g.
class ZGLattice {
public:
  /// Checks ρ(e) = 1 and ρ(g)ρ(h) = ρ(gh) for all pairs.
  ZGLattice(GroupPtr group, std::size_t rank, std::vector<IntMatrix> action)
      : group_(std::move(group)), rank_(rank), action_(std::move(action)) {
    const FiniteGroup& G = *group_;
    if (action_.size() != G.order()) fail_input("need one action matrix per group element");
    for (const auto& m : action_)
      if (m.rows() != rank_ || m.cols() != rank_) fail_input("action matrix has the wrong size");
    if (action_[0] != IntMatrix::identity(rank_)) fail_input("identity does not act trivially");
    for (std::size_t g = 0; g < G.order(); ++g)
      for (std::size_t h = 0; h < G.order(); ++h)
        if (action_[g] * action_[h] != action_[G.mul(static_cast<int>(g), static_cast<int>(h))])
          fail_input("action is not a homomorphism");
  }

  /// Builds ρ from the images of a generating set by closing under products.
  static ZGLattice from_generator_images(GroupPtr group, std::size_t rank,
                                         const std::map<int, IntMatrix>& images) {
    const FiniteGroup& G = *group;
    std::vector<std::optional<IntMatrix>> rho(G.order());
    rho[0] = IntMatrix::identity(rank);
    std::vector<int> queue{0};
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (const auto& [s, m] : images) {
        if (s < 0 || static_cast<std::size_t>(s) >= G.order()) fail_input("element index out of range");
        const int x = G.mul(s, queue[i]);
        if (!rho[x]) {
          rho[x] = m * *rho[queue[i]];
          queue.push_back(x);
        }
      }
    std::vector<IntMatrix> action;
    for (auto& m : rho) {
      if (!m) fail_input("given elements do not generate the group");
      action.push_back(std::move(*m));
    }
    for (const auto& [s, m] : images)
      if (action[s] != m) fail_input("action is not a homomorphism");
    return ZGLattice(std::move(group), rank, std::move(action));
  }

  const FiniteGroup& group() const noexcept { return *group_; }
  const GroupPtr& group_ptr() const noexcept { return group_; }
  std::size_t rank() const noexcept { return rank_; }
  const IntMatrix& action(int g) const { return action_[g]; }
  const std::vector<IntMatrix>& actions() const noexcept { return action_; }

private:
  GroupPtr group_;
  std::size_t rank_;
  std::vector<IntMatrix> action_;
};

// ---------------------------------------------------------------------------
// Constructors

inline ZGLattice trivial_lattice(const GroupPtr& G) {
  return ZGLattice(G, 1, std::vector<IntMatrix>(G->order(), IntMatrix::identity(1)));
}

inline ZGLattice zero_lattice(const GroupPtr& G) {
  return ZGLattice(G, 0, std::vector<IntMatrix>(G->order(), IntMatrix(0, 0)));
}

inline IntMatrix permutation_matrix(const Permutation& p) {
  IntMatrix m(p.size(), p.size());
  for (std::size_t x = 0; x < p.size(); ++x) m(p[x], x) = 1;
  return m;
}

/// Z[X] for a G-set X given as one permutation per group element.
inline ZGLattice permutation_lattice(const GroupPtr& G, const std::vector<Permutation>& gset) {
  if (gset.size() != G->order()) fail_input("need one permutation per group element");
  std::vector<IntMatrix> action;
  for (const auto& p : gset) {
    check_permutation(p);
    action.push_back(permutation_matrix(p));
  }
  const std::size_t n = gset.front().size();
  return ZGLattice(G, n, std::move(action));
}

/// Z[G/H].
inline ZGLattice permutation_lattice(const GroupPtr& G, const Subgroup& H) {
  return permutation_lattice(G, coset_action(*G, H));
}

inline ZGLattice regular_lattice(const GroupPtr& G) { return permutation_lattice(G, trivial_subgroup()); }

/// Rank one, ρ(g) = +1 on the index-2 subgroup `kernel` and −1 off it.
inline ZGLattice sign_lattice(const GroupPtr& G, const Subgroup& kernel) {
  if (2 * kernel.order() != G->order()) fail_precondition("sign lattice needs an index-2 kernel");
  std::vector<IntMatrix> action;
  for (std::size_t g = 0; g < G->order(); ++g)
    action.push_back(IntMatrix{{kernel.contains(static_cast<int>(g)) ? 1L : -1L}});
  return ZGLattice(G, 1, std::move(action));
}

inline ZGLattice direct_sum(const ZGLattice& M, const ZGLattice& N) {
  if (M.group_ptr() != N.group_ptr() && M.group().order() != N.group().order())
    fail_precondition("direct sum of modules over different groups");
  std::vector<IntMatrix> action;
  for (std::size_t g = 0; g < M.group().order(); ++g)
    action.push_back(block_diagonal(M.action(static_cast<int>(g)), N.action(static_cast<int>(g))));
  return ZGLattice(M.group_ptr(), M.rank() + N.rank(), std::move(action));
}

inline ZGLattice direct_sum(const std::vector<ZGLattice>& parts, const GroupPtr& G) {
  ZGLattice acc = zero_lattice(G);
  for (const auto& p : parts) acc = direct_sum(acc, p);
  return acc;
}

inline ZGLattice direct_power(const ZGLattice& M, std::size_t k) {
  return direct_sum(std::vector<ZGLattice>(k, M), M.group_ptr());
}

/// The G-stable lattice spanned by the columns of `basis` (full column rank),
/// with the action written in that basis.
inline ZGLattice sublattice(const ZGLattice& M, const IntMatrix& basis) {
  if (basis.rows() != M.rank()) fail_precondition("sublattice basis has the wrong length");
  if (rank(basis) != basis.cols()) fail_precondition("sublattice basis is not independent");
  IntegerSolver solver(basis);
  std::vector<IntMatrix> action;
  for (const auto& rho : M.actions()) {
    auto x = solver.solve(rho * basis);
    if (!x) fail_precondition("sublattice is not G-stable");
    action.push_back(std::move(*x));
  }
  return ZGLattice(M.group_ptr(), basis.cols(), std::move(action));
}

/// Action of a subgroup D on a lattice: action[i] belongs to D.elements[i].
struct SubgroupModule {
  Subgroup subgroup;
  std::size_t rank = 0;
  std::vector<IntMatrix> action;

  const IntMatrix& at(int d) const {
    auto it = std::lower_bound(subgroup.elements.begin(), subgroup.elements.end(), d);
    return action[static_cast<std::size_t>(it - subgroup.elements.begin())];
  }
};

inline SubgroupModule trivial_subgroup_module(const Subgroup& D) {
  return {D, 1, std::vector<IntMatrix>(D.order(), IntMatrix::identity(1))};
}

/// ε: the nontrivial rank-one module of an order-2 subgroup.
inline SubgroupModule sign_subgroup_module(const Subgroup& D) {
  if (D.order() != 2) fail_precondition("sign character needs a subgroup of order 2");
  return {D, 1, {IntMatrix{{1}}, IntMatrix{{-1}}}};
}

inline SubgroupModule restrict_to(const ZGLattice& M, const Subgroup& D) {
  SubgroupModule r{D, M.rank(), {}};
  for (int d : D.elements) r.action.push_back(M.action(d));
  return r;
}

/// Ind_D^G L, built on the left cosets t_i D (least-element representatives):
/// g·t_j = t_i·d puts L(d) in block (i, j).
inline ZGLattice induced_lattice(const GroupPtr& Gp, const SubgroupModule& L) {
  const FiniteGroup& G = *Gp;
  const Subgroup& D = L.subgroup;
  for (int d : D.elements)
    for (int e : D.elements)
      if (L.at(G.mul(d, e)) != L.at(d) * L.at(e)) fail_input("subgroup action is not a homomorphism");
  const CosetSpace cs = left_cosets(G, D);
  const std::size_t k = cs.size(), r = L.rank;
  std::vector<IntMatrix> action;
  for (std::size_t g = 0; g < G.order(); ++g) {
    IntMatrix m(k * r, k * r);
    for (std::size_t j = 0; j < k; ++j) {
      const int gt = G.mul(static_cast<int>(g), cs.representatives[j]);
      const int i = cs.coset_of[gt];
      const int d = G.mul(G.inv(cs.representatives[i]), gt);
      m.set_block(i * r, j * r, L.at(d));
    }
    action.push_back(std::move(m));
  }
  return ZGLattice(Gp, k * r, std::move(action));
}

// ---------------------------------------------------------------------------
// Characters and fixed points

/// Trace of ρ on each element conjugacy class.
using CharacterVector = std::vector<Integer>;

inline CharacterVector character(const ZGLattice& M) {
  const FiniteGroup& G = M.group();
  CharacterVector chi;
  for (std::size_t c = 0; c < G.classes().size(); ++c)
    chi.push_back(M.action(G.class_representative(c)).trace());
  return chi;
}

/// Rational representations are determined by their characters.
inline bool rationally_isomorphic(const ZGLattice& M, const ZGLattice& N) {
  return M.group().order() == N.group().order() && character(M) == character(N);
}

/// Saturated basis of M^H, the kernel of the stacked (ρ(h) − 1), h ∈ H.
inline IntMatrix fixed_sublattice(const ZGLattice& M, const Subgroup& H) {
  const std::size_t r = M.rank();
  IntMatrix stacked(0, r);
  const IntMatrix I = IntMatrix::identity(r);
  for (int h : H.elements)
    if (h != 0) stacked = vstack(stacked, M.action(h) - I);
  return integer_kernel(stacked);
}

/// T·ρ_M(g) = ρ_N(g)·T for every g.
inline bool is_equivariant(const IntMatrix& T, const ZGLattice& M, const ZGLattice& N) {
  if (T.rows() != N.rank() || T.cols() != M.rank()) return false;
  for (std::size_t g = 0; g < M.group().order(); ++g)
    if (T * M.action(static_cast<int>(g)) != N.action(static_cast<int>(g)) * T) return false;
  return true;
}

/// Σ_g ρ_N(g)·X·ρ_M(g)⁻¹, an equivariant map for any X.
inline IntMatrix average_map(const IntMatrix& X, const ZGLattice& M, const ZGLattice& N) {
  const FiniteGroup& G = M.group();
  IntMatrix T(N.rank(), M.rank());
  for (std::size_t g = 0; g < G.order(); ++g)
    T = T + N.action(static_cast<int>(g)) * X * M.action(G.inv(static_cast<int>(g)));
  return T;
}

/// T divided by its content, signed so the first nonzero entry is positive.
inline IntMatrix primitive_part(const IntMatrix& T) {
  Integer c = T.content();
  for (std::size_t j = 0; j < T.cols(); ++j)
    for (std::size_t i = 0; i < T.rows(); ++i)
      if (T(i, j) != 0) {
        if (T(i, j) < 0) c = -c;
        return c == 1 ? T : T.divided_exactly(c);
      }
  return T;
}

/// An injective equivariant map M → N with finite cokernel, obtained by
/// averaging random integer matrices (entries in [−3, 3]) until the average
/// has full column rank, then dividing out the content.
inline IntMatrix find_equivariant_embedding(const ZGLattice& M, const ZGLattice& N, std::uint64_t seed,
                                            int retry_budget = default_retry_budget) {
  if (!rationally_isomorphic(M, N)) fail_precondition("not rationally isomorphic");
  if (M.rank() == 0) return IntMatrix(0, 0);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> entry(-3, 3);
  for (int attempt = 0; attempt < retry_budget; ++attempt) {
    IntMatrix X(N.rank(), M.rank());
    for (std::size_t i = 0; i < X.rows(); ++i)
      for (std::size_t j = 0; j < X.cols(); ++j) X(i, j) = entry(rng);
    IntMatrix T = average_map(X, M, N);
    if (rank(T) == M.rank()) return primitive_part(T);
  }
  fail_verification("retry budget exhausted while searching for an equivariant embedding");
}

// ---------------------------------------------------------------------------
// Finitely presented modules

/// Z^n / im(R) with ρ(g) acting on Z^n and preserving im(R).
class FpModule {
public:
  FpModule(GroupPtr group, std::size_t generators, IntMatrix relations, std::vector<IntMatrix> action)
      : group_(std::move(group)), gens_(generators), relations_(std::move(relations)),
        action_(std::move(action)) {
    const FiniteGroup& G = *group_;
    if (relations_.rows() != gens_) fail_input("relation matrix has the wrong number of rows");
    if (action_.size() != G.order()) fail_input("need one action matrix per group element");
    for (const auto& m : action_)
      if (m.rows() != gens_ || m.cols() != gens_) fail_input("action matrix has the wrong size");
    const IntegerSolver rel(relations_);
    const IntMatrix I = IntMatrix::identity(gens_);
    if (!rel.contains_columns(action_[0] - I)) fail_input("identity does not act trivially");
    for (std::size_t g = 0; g < G.order(); ++g) {
      if (!rel.contains_columns(action_[g] * relations_))
        fail_input("action does not preserve the relations");
      for (std::size_t h = 0; h < G.order(); ++h)
        if (!rel.contains_columns(action_[g] * action_[h] -
                                  action_[G.mul(static_cast<int>(g), static_cast<int>(h))]))
          fail_input("action is not a homomorphism");
    }
  }

  static FpModule from_lattice(const ZGLattice& M) {
    return FpModule(M.group_ptr(), M.rank(), IntMatrix(M.rank(), 0), M.actions());
  }

  const FiniteGroup& group() const noexcept { return *group_; }
  const GroupPtr& group_ptr() const noexcept { return group_; }
  std::size_t generators() const noexcept { return gens_; }
  const IntMatrix& relations() const noexcept { return relations_; }
  const IntMatrix& action(int g) const { return action_[g]; }
  const std::vector<IntMatrix>& actions() const noexcept { return action_; }

private:
  GroupPtr group_;
  std::size_t gens_;
  IntMatrix relations_;
  std::vector<IntMatrix> action_;
};

inline FpModule direct_sum(const FpModule& M, const FpModule& N) {
  std::vector<IntMatrix> action;
  for (std::size_t g = 0; g < M.group().order(); ++g)
    action.push_back(block_diagonal(M.action(static_cast<int>(g)), N.action(static_cast<int>(g))));
  return FpModule(M.group_ptr(), M.generators() + N.generators(),
                  block_diagonal(M.relations(), N.relations()), std::move(action));
}

/// M / (k·M) for a lattice M.
inline FpModule reduction_mod(const ZGLattice& M, const Integer& k) {
  return FpModule(M.group_ptr(), M.rank(), k * IntMatrix::identity(M.rank()), M.actions());
}

/// M / U for a lattice M and a G-stable sublattice spanned by the columns of U.
inline FpModule quotient(const ZGLattice& M, const IntMatrix& U) {
  return FpModule(M.group_ptr(), M.rank(), U, M.actions());
}

struct FpFixedData {
  std::size_t free_rank = 0;
  Integer torsion = 1;
  /// Basis of the preimage of M^H in Z^n; it contains im(R).
  IntMatrix preimage;
};

/// M^H = {x : (ρ(h) − 1)x ∈ im R for all h ∈ H} / im R, via one integer
/// kernel of [ρ(h) − 1 | −R] stacked over h.
inline FpFixedData fp_fixed_data(const FpModule& M, const Subgroup& H) {
  const std::size_t n = M.generators(), m = M.relations().cols();
  std::vector<int> hs;
  for (int h : H.elements)
    if (h != 0) hs.push_back(h);
  IntMatrix gens;
  if (hs.empty()) {
    gens = IntMatrix::identity(n);
  } else {
    IntMatrix A(hs.size() * n, n + hs.size() * m);
    const IntMatrix I = IntMatrix::identity(n);
    const IntMatrix negR = Integer(-1) * M.relations();
    for (std::size_t b = 0; b < hs.size(); ++b) {
      A.set_block(b * n, 0, M.action(hs[b]) - I);
      A.set_block(b * n, n + b * m, negR);
    }
    const IntMatrix K = integer_kernel(A);
    gens = hstack(K.block(0, n, 0, K.cols()), M.relations());
  }
  FpFixedData out;
  out.preimage = column_basis(hstack(gens, M.relations()));
  const std::size_t k = out.preimage.cols();
  auto coords = IntegerSolver(out.preimage).solve(M.relations());
  if (!coords) fail_verification("relations are not inside the fixed preimage");
  const SmithForm s = smith_normal_form(*coords);
  out.free_rank = k - s.rank;
  for (const auto& d : s.invariant_factors()) out.torsion *= d;
  return out;
}

inline Integer torsion_order(const FpModule& M) { return fp_fixed_data(M, trivial_subgroup()).torsion; }

/// M/tors as a lattice, with the projection π : Z^n → M/tors.
struct FreeQuotient {
  ZGLattice lattice;
  IntMatrix projection;
};

inline FreeQuotient free_quotient(const FpModule& M) {
  const std::size_t n = M.generators();
  const SmithForm s = smith_normal_form(M.relations());
  const std::size_t f = n - s.rank;
  const IntMatrix pi = s.U.block(s.rank, f, 0, n);
  const IntMatrix section = unimodular_inverse(s.U).block(0, n, s.rank, f);
  std::vector<IntMatrix> action;
  for (const auto& rho : M.actions()) action.push_back(pi * rho * section);
  return {ZGLattice(M.group_ptr(), f, std::move(action)), pi};
}

/// A G-map M → N given on generators: T·R_M ⊆ im R_N and
/// T·ρ_M(g) ≡ ρ_N(g)·T modulo im R_N.
inline bool is_equivariant(const IntMatrix& T, const FpModule& M, const FpModule& N) {
  if (T.rows() != N.generators() || T.cols() != M.generators()) return false;
  const IntegerSolver rel(N.relations());
  if (!rel.contains_columns(T * M.relations())) return false;
  for (std::size_t g = 0; g < M.group().order(); ++g)
    if (!rel.contains_columns(T * M.action(static_cast<int>(g)) - N.action(static_cast<int>(g)) * T))
      return false;
  return true;
}

}  // namespace brauer
