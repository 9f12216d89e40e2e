#pragma once

// Test-only helpers: random module generators and brute-force oracles that
// do not go through the library's normal-form machinery.

#include <algorithm>
#include <array>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "brauer/arith.hpp"
#include "brauer/corpus.hpp"
#include "brauer/regfe.hpp"
#include "brauer/verify.hpp"
#include "brauer/zgmod.hpp"

namespace brauer::testing {

inline GroupPtr shared(FiniteGroup G) { return std::make_shared<const FiniteGroup>(std::move(G)); }

inline GroupData corpus_data(const std::string& name) { return GroupData::make(name, corpus_group(name)); }

inline BurnsideElement element(std::vector<long> c) { return {std::move(c)}; }

// ---------------------------------------------------------------------------
// Oracles

/// All subgroups by testing every subset containing the identity for closure.
inline std::set<std::vector<int>> brute_force_subgroups(const FiniteGroup& G) {
  const std::size_t n = G.order();
  std::set<std::vector<int>> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); mask += 2) {
    std::vector<int> s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) s.push_back(static_cast<int>(i));
    bool closed = true;
    for (int a : s) {
      for (int b : s)
        if (!(mask >> G.mul(a, b) & 1)) { closed = false; break; }
      if (!closed) break;
    }
    if (closed) out.insert(s);
  }
  return out;
}

/// Index of the lattice spanned by a square integer basis in Z^2, by
/// counting integer points in the half-open fundamental parallelogram.
inline long parallelogram_point_count(long a, long b, long c, long d) {
  // columns (a, c) and (b, d)
  const long det = a * d - b * c;
  const long lo_x = std::min({0L, a, b, a + b}), hi_x = std::max({0L, a, b, a + b});
  const long lo_y = std::min({0L, c, d, c + d}), hi_y = std::max({0L, c, d, c + d});
  long count = 0;
  for (long x = lo_x; x <= hi_x; ++x)
    for (long y = lo_y; y <= hi_y; ++y) {
      // coordinates s = (d x − b y)/det, t = (−c x + a y)/det in [0, 1)
      const long s = d * x - b * y, t = -c * x + a * y;
      auto in_unit = [&](long v) { return det > 0 ? (v >= 0 && v < det) : (v <= 0 && v > det); };
      if (in_unit(s) && in_unit(t)) ++count;
    }
  return count;
}

/// Character of Ind_D^G L by the induced-character formula.
inline CharacterVector induced_character_oracle(const FiniteGroup& G, const SubgroupModule& L) {
  CharacterVector chi;
  for (std::size_t c = 0; c < G.classes().size(); ++c) {
    const int g = G.class_representative(c);
    Integer sum = 0;
    for (std::size_t t = 0; t < G.order(); ++t) {
      const int x = G.mul(G.inv(static_cast<int>(t)), G.mul(g, static_cast<int>(t)));
      if (L.subgroup.contains(x)) sum += L.at(x).trace();
    }
    chi.push_back(sum / static_cast<unsigned long>(L.subgroup.order()));
  }
  return chi;
}

/// rank M^H from the character: (1/|H|) Σ_{h∈H} tr ρ(h).
inline Integer fixed_rank_from_character(const ZGLattice& M, const Subgroup& H) {
  Integer s = 0;
  for (int h : H.elements) s += M.action(h).trace();
  return s / static_cast<unsigned long>(H.order());
}

// ---------------------------------------------------------------------------
// Random instances

class Generator {
public:
  Generator(const GroupData& d, std::uint64_t seed) : d_(d), rng_(seed) {
    const GroupPtr& G = d.group;
    pool_.push_back(trivial_lattice(G));
    for (std::size_t k = 0; k < d.table->size(); ++k) {
      const Subgroup& H = (*d.table)[k].representative;
      if (k + 1 < d.table->size()) pool_.push_back(permutation_lattice(G, H));
      if (2 * H.order() == G->order()) pool_.push_back(sign_lattice(G, H));
      if (H.order() == 2) pool_.push_back(induced_lattice(G, sign_subgroup_module(H)));
    }
  }

  std::mt19937_64& rng() { return rng_; }

  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  /// Direct sum of 1–3 pool members, rank capped at 12.
  ZGLattice lattice() {
    for (;;) {
      const long parts = uniform(1, 3);
      std::vector<ZGLattice> chosen;
      std::size_t r = 0;
      for (long i = 0; i < parts; ++i) {
        chosen.push_back(pool_[uniform(0, static_cast<long>(pool_.size()) - 1)]);
        r += chosen.back().rank();
      }
      if (r <= 12) return direct_sum(chosen, d_.group);
    }
  }

  /// M written in a random unimodular basis.
  ZGLattice rebased(const ZGLattice& M) {
    IntMatrix U = IntMatrix::identity(M.rank());
    for (int k = 0; k < 3 * static_cast<int>(M.rank()); ++k) {
      if (M.rank() < 2) break;
      const long i = uniform(0, static_cast<long>(M.rank()) - 1);
      long j = uniform(0, static_cast<long>(M.rank()) - 2);
      if (j >= i) ++j;
      U.add_col_multiple(i, j, uniform(-1, 1));
    }
    return sublattice(M, U);
  }

  /// The G-stable sublattice generated by the orbit of a random vector and k·M.
  ZGLattice stable_sublattice(const ZGLattice& M) {
    const long k = std::array<long, 4>{2, 3, 5, 9}[uniform(0, 3)];
    std::vector<Integer> v(M.rank());
    for (auto& x : v) x = uniform(-2, 2);
    IntMatrix gens = Integer(k) * IntMatrix::identity(M.rank());
    for (const auto& rho : M.actions())
      gens = hstack(gens, IntMatrix::from_columns({rho.apply(v)}, M.rank()));
    return sublattice(M, column_basis(gens));
  }

  /// A lattice rationally isomorphic to M.
  ZGLattice partner(const ZGLattice& M) {
    switch (uniform(0, 2)) {
      case 0: return rebased(M);
      case 1: return stable_sublattice(M);
      default: return rebased(stable_sublattice(M));
    }
  }

  /// A random relation Σ c_i Θ_i with small coefficients.
  BurnsideElement relation() {
    BurnsideElement theta = zero_element(*d_.table);
    for (const auto& b : d_.basis.relations) theta = theta + uniform(-2, 2) * b;
    return theta;
  }

  /// Positive diagonal weight for an alternative invariant pairing.
  IntMatrix diagonal_weight(std::size_t r) {
    IntMatrix W(r, r);
    for (std::size_t i = 0; i < r; ++i) W(i, i) = uniform(1, 6);
    return W;
  }

  const std::vector<ZGLattice>& pool() const { return pool_; }

private:
  const GroupData& d_;
  std::mt19937_64 rng_;
  std::vector<ZGLattice> pool_;
};

struct FpCase {
  std::string kind;
  FpModule m;
  FpModule n;
  IntMatrix map;
};

/// Random G-map with finite kernel and cokernel between modules whose torsion
/// has order 3, 5 or 9, cycling through split, non-split and mixed shapes.
inline FpCase random_fp_case(Generator& gen, const GroupData& d, int shape, std::uint64_t seed) {
  const ZGLattice A = gen.lattice();
  const ZGLattice B = gen.partner(A);
  const IntMatrix T0 = find_equivariant_embedding(A, B, seed);
  const long q = std::array<long, 3>{3, 5, 9}[gen.uniform(0, 2)];
  const FpModule Afp = FpModule::from_lattice(A), Bfp = FpModule::from_lattice(B);
  const ZGLattice C = gen.pool()[gen.uniform(0, static_cast<long>(gen.pool().size()) - 1)];
  const std::size_t a = A.rank(), b = B.rank(), c = C.rank();
  switch (shape % 5) {
    case 0: {  // torsion in the kernel
      FpModule M = direct_sum(Afp, reduction_mod(C, q));
      return {"kernel torsion", M, Bfp, hstack(T0, IntMatrix(b, c))};
    }
    case 1: {  // torsion in the cokernel
      FpModule N = direct_sum(Bfp, reduction_mod(C, q));
      return {"cokernel torsion", Afp, N, vstack(T0, IntMatrix(c, a))};
    }
    case 2: {  // C/q → C/q' with q' | q
      const long qp = q == 9 && gen.uniform(0, 1) == 0 ? 3 : q;
      FpModule M = direct_sum(Afp, reduction_mod(C, q));
      FpModule N = direct_sum(Bfp, reduction_mod(C, qp));
      return {"torsion to torsion", M, N, block_diagonal(T0, IntMatrix::identity(c))};
    }
    case 3: {  // non-split: A / q·U → B / q'·T0·U, U = fixed lattice of a normal subgroup
      std::vector<std::size_t> normal;
      for (std::size_t k = 0; k < d.table->size(); ++k)
        if ((*d.table)[k].conjugates.size() == 1) normal.push_back(k);
      const Subgroup& H = (*d.table)[normal[gen.uniform(0, static_cast<long>(normal.size()) - 1)]].representative;
      const IntMatrix U = fixed_sublattice(A, H);
      const long qp = q == 9 ? 3 : q;
      return {"non-split", quotient(A, Integer(q) * U), quotient(B, Integer(qp) * (T0 * U)), T0};
    }
    default: {  // mixed: lattice part also maps into the torsion
      IntMatrix X(c, a);
      for (std::size_t i = 0; i < c; ++i)
        for (std::size_t j = 0; j < a; ++j) X(i, j) = gen.uniform(-1, 1);
      const IntMatrix cross = average_map(X, A, C);
      FpModule M = direct_sum(Afp, reduction_mod(C, q));
      FpModule N = direct_sum(Bfp, reduction_mod(C, q));
      IntMatrix T(b + c, a + c);
      T.set_block(0, 0, T0);
      T.set_block(b, 0, cross);
      T.set_block(b, a, Integer(gen.uniform(1, 2)) * IntMatrix::identity(c));
      return {"mixed", M, N, T};
    }
  }
}

}  // namespace brauer::testing
