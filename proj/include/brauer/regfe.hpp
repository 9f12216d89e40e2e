#pragma once

// Regulator constants, factorisability of subgroup functions and factor
// equivalence of Z[G]-modules, with the determinant-identity verifier that
// ties the two notions together.

#include <cstdint>
#include <optional>
#include <vector>

#include "brauer/burnside.hpp"
#include "brauer/exactla.hpp"
#include "brauer/zgmod.hpp"

namespace brauer {

/// Symmetric, positive definite, G-invariant Gram matrix on a lattice.
struct InvariantPairing {
  IntMatrix gram;
};

inline bool is_positive_definite(const IntMatrix& P) {
  if (!P.is_symmetric()) return false;
  for (std::size_t k = 1; k <= P.rows(); ++k)
    if (determinant(P.block(0, k, 0, k)) <= 0) return false;
  return true;
}

inline InvariantPairing make_pairing(const ZGLattice& M, IntMatrix P) {
  if (P.rows() != M.rank() || !P.is_symmetric()) fail_precondition("pairing is not symmetric");
  if (!is_positive_definite(P)) fail_precondition("pairing is not positive definite");
  for (const auto& rho : M.actions())
    if (rho.transpose() * P * rho != P) fail_precondition("pairing is not G-invariant");
  return {std::move(P)};
}

/// Σ_g ρ(g)ᵀ·W·ρ(g) for a positive definite weight W (identity by default).
inline InvariantPairing averaged_pairing(const ZGLattice& M, const std::optional<IntMatrix>& weight = {}) {
  IntMatrix P(M.rank(), M.rank());
  for (const auto& rho : M.actions())
    P = P + (weight ? rho.transpose() * *weight * rho : rho.transpose() * rho);
  return {std::move(P)};
}

inline void require_relation(const SubgroupClassTable& table, const BurnsideElement& theta) {
  if (!is_brauer_relation(table, theta)) fail_precondition("not a Brauer relation");
}

/// ∏_H det((1/|H|)·⟨,⟩ | M^H)^{n_H}, one representative per subgroup class.
inline Rational regulator_constant(const SubgroupClassTable& table, const BurnsideElement& theta,
                                   const ZGLattice& M, const std::optional<InvariantPairing>& pairing = {}) {
  require_relation(table, theta);
  const IntMatrix P = pairing ? pairing->gram : averaged_pairing(M).gram;
  Rational c = 1;
  for (std::size_t k = 0; k < table.size(); ++k) {
    if (theta.coeffs[k] == 0) continue;
    const Subgroup& H = table[k].representative;
    const Rational d = gram_determinant(P, fixed_sublattice(M, H), Rational(1, H.order()));
    c *= rational_pow(d, theta.coeffs[k]);
  }
  return c;
}

/// For a module with torsion the determinant is taken on M^H/tors, the image
/// of M^H in the lattice M/tors, with a pairing on M/tors.
inline Rational regulator_constant(const SubgroupClassTable& table, const BurnsideElement& theta,
                                   const FpModule& M, const std::optional<InvariantPairing>& pairing = {}) {
  require_relation(table, theta);
  const FreeQuotient fq = free_quotient(M);
  const IntMatrix P = pairing ? pairing->gram : averaged_pairing(fq.lattice).gram;
  Rational c = 1;
  for (std::size_t k = 0; k < table.size(); ++k) {
    if (theta.coeffs[k] == 0) continue;
    const Subgroup& H = table[k].representative;
    const IntMatrix image = column_basis(fq.projection * fp_fixed_data(M, H).preimage);
    const Rational d = gram_determinant(P, image, Rational(1, H.order()));
    c *= rational_pow(d, theta.coeffs[k]);
  }
  return c;
}

template <class Module>
std::vector<Rational> regulator_constants_table(const BrauerRelationBasis& basis, const Module& M) {
  std::vector<Rational> out;
  for (const auto& theta : basis.relations) out.push_back(regulator_constant(*basis.table, theta, M));
  return out;
}

// ---------------------------------------------------------------------------
// Subgroup functions and factorisability

/// One positive rational per conjugacy class of subgroups.
struct SubgroupFunction {
  std::vector<Rational> values;
};

/// f extended to B(G) and evaluated at Θ: ∏_H f(H)^{n_H}.
inline Rational defect(const SubgroupFunction& f, const BurnsideElement& theta) {
  if (f.values.size() != theta.size()) fail_precondition("subgroup function has the wrong length");
  Rational d = 1;
  for (std::size_t k = 0; k < theta.size(); ++k)
    if (theta.coeffs[k] != 0) d *= rational_pow(f.values[k], theta.coeffs[k]);
  return d;
}

struct FactorisabilityResult {
  bool factorisable = true;
  std::vector<Rational> defects;  // one per basis relation
};

/// f is factorisable iff its homomorphism on B(G) kills K(G). The target
/// group Q_{>0} is torsion free, so checking a basis suffices.
inline FactorisabilityResult is_factorisable(const SubgroupFunction& f, const BrauerRelationBasis& basis) {
  for (const auto& v : f.values)
    if (v <= 0) fail_precondition("subgroup function must take positive values");
  FactorisabilityResult r;
  for (const auto& theta : basis.relations) {
    r.defects.push_back(defect(f, theta));
    if (r.defects.back() != 1) r.factorisable = false;
  }
  return r;
}

/// [N^H : T(M^H)] and |ker(T) ∩ M^H| for a G-map with finite kernel and cokernel.
struct IndexData {
  Integer cokernel_index;
  Integer kernel_order;
};

inline IndexData fixed_point_index(const FpModule& M, const FpModule& N, const IntMatrix& T,
                                   const Subgroup& H) {
  const FpFixedData dm = fp_fixed_data(M, H);
  const FpFixedData dn = fp_fixed_data(N, H);
  IndexData out;
  const IntMatrix image = hstack(T * dm.preimage, N.relations());
  if (rank(image) != dn.preimage.cols()) fail_precondition("infinite cokernel");
  out.cokernel_index = lattice_index(image, dn.preimage);

  // ker = {x ∈ preimage_M : T x ∈ im R_N} / im R_M
  const std::size_t k = dm.preimage.cols();
  const IntMatrix A = hstack(T * dm.preimage, Integer(-1) * N.relations());
  const IntMatrix C = integer_kernel(A);
  const IntMatrix kernel_gens = hstack(dm.preimage * C.block(0, k, 0, C.cols()), M.relations());
  if (rank(kernel_gens) != rank(M.relations())) fail_precondition("infinite kernel");
  out.kernel_order = lattice_index(M.relations(), kernel_gens);
  return out;
}

/// H ↦ [N^H : T(M^H)] · |ker(T)^H|⁻¹.
inline SubgroupFunction index_function(const SubgroupClassTable& table, const FpModule& M, const FpModule& N,
                                       const IntMatrix& T) {
  if (!is_equivariant(T, M, N)) fail_precondition("map is not G-equivariant");
  SubgroupFunction f;
  for (const auto& cls : table.classes()) {
    const IndexData d = fixed_point_index(M, N, T, cls.representative);
    f.values.push_back(make_rational(d.cokernel_index, d.kernel_order));
  }
  return f;
}

inline SubgroupFunction index_function(const SubgroupClassTable& table, const ZGLattice& M, const ZGLattice& N,
                                       const IntMatrix& T) {
  if (!is_equivariant(T, M, N)) fail_precondition("map is not G-equivariant");
  if (rank(T) != M.rank() || M.rank() != N.rank()) fail_precondition("infinite cokernel");
  SubgroupFunction f;
  for (const auto& cls : table.classes()) {
    const Subgroup& H = cls.representative;
    f.values.push_back(Rational(lattice_index(T * fixed_sublattice(M, H), fixed_sublattice(N, H))));
  }
  return f;
}

// ---------------------------------------------------------------------------
// Factor equivalence

struct FactorEquivalenceReport {
  bool verdict = false;
  std::vector<Rational> defects;
  IntMatrix embedding;
  SubgroupFunction index;
  std::vector<Rational> regulator_constants_m;
  std::vector<Rational> regulator_constants_n;
  /// Equality of the two regulator-constant tables (with torsion correction
  /// for modules that are not Z-free).
  bool regulator_verdict = false;
};

inline FactorEquivalenceReport factor_equivalence_via(const BrauerRelationBasis& basis, const ZGLattice& M,
                                                      const ZGLattice& N, const IntMatrix& T) {
  if (!rationally_isomorphic(M, N)) fail_precondition("not rationally isomorphic");
  FactorEquivalenceReport r;
  r.embedding = T;
  r.index = index_function(*basis.table, M, N, T);
  const auto fact = is_factorisable(r.index, basis);
  r.verdict = fact.factorisable;
  r.defects = fact.defects;
  r.regulator_constants_m = regulator_constants_table(basis, M);
  r.regulator_constants_n = regulator_constants_table(basis, N);
  r.regulator_verdict = r.regulator_constants_m == r.regulator_constants_n;
  if (r.verdict != r.regulator_verdict)
    fail_verification("index-function and regulator-constant routes disagree");
  return r;
}

/// Decides M ∧ N for lattices through both routes; they must agree.
inline FactorEquivalenceReport factor_equivalent(const BrauerRelationBasis& basis, const ZGLattice& M,
                                                 const ZGLattice& N, std::uint64_t seed,
                                                 int retry_budget = default_retry_budget) {
  const IntMatrix T = find_equivariant_embedding(M, N, seed, retry_budget);
  return factor_equivalence_via(basis, M, N, T);
}

/// ∏_H (|M_tors^H| / |N_tors^H|)^{2 n_H}.
inline Rational torsion_correction(const SubgroupClassTable& table, const BurnsideElement& theta,
                                   const FpModule& M, const FpModule& N) {
  Rational c = 1;
  for (std::size_t k = 0; k < table.size(); ++k) {
    if (theta.coeffs[k] == 0) continue;
    const Subgroup& H = table[k].representative;
    const Rational q = make_rational(fp_fixed_data(M, H).torsion, fp_fixed_data(N, H).torsion);
    c *= rational_pow(q, 2 * theta.coeffs[k]);
  }
  return c;
}

/// Factor equivalence for modules with torsion, given a G-map with finite
/// kernel and cokernel. The regulator route compares C_Θ(M)/C_Θ(N) with the
/// torsion correction.
inline FactorEquivalenceReport factor_equivalence_via(const BrauerRelationBasis& basis, const FpModule& M,
                                                      const FpModule& N, const IntMatrix& T) {
  if (!rationally_isomorphic(free_quotient(M).lattice, free_quotient(N).lattice))
    fail_precondition("not rationally isomorphic");
  FactorEquivalenceReport r;
  r.embedding = T;
  r.index = index_function(*basis.table, M, N, T);
  const auto fact = is_factorisable(r.index, basis);
  r.verdict = fact.factorisable;
  r.defects = fact.defects;
  r.regulator_constants_m = regulator_constants_table(basis, M);
  r.regulator_constants_n = regulator_constants_table(basis, N);
  r.regulator_verdict = true;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (r.regulator_constants_m[i] / r.regulator_constants_n[i] !=
        torsion_correction(*basis.table, basis[i], M, N))
      r.regulator_verdict = false;
  if (r.verdict != r.regulator_verdict)
    fail_verification("index-function and regulator-constant routes disagree");
  return r;
}

// ---------------------------------------------------------------------------
// The determinant identity relating C_Θ(M) and C_Θ(N) through a G-map

struct LemmaCheck {
  Rational lhs;  // C_Θ(M)
  Rational rhs;  // ∏_H (index/kernel · |M_tors^H|/|N_tors^H|)^{2 n_H} · C_Θ(N)
  bool holds = false;
};

inline LemmaCheck verify_lemma(const SubgroupClassTable& table, const FpModule& M, const FpModule& N,
                               const IntMatrix& T, const BurnsideElement& theta) {
  require_relation(table, theta);
  if (!is_equivariant(T, M, N)) fail_precondition("map is not G-equivariant");
  LemmaCheck c;
  c.lhs = regulator_constant(table, theta, M);
  c.rhs = regulator_constant(table, theta, N);
  for (std::size_t k = 0; k < table.size(); ++k) {
    if (theta.coeffs[k] == 0) continue;
    const Subgroup& H = table[k].representative;
    const IndexData d = fixed_point_index(M, N, T, H);
    const Rational q = make_rational(d.cokernel_index, d.kernel_order) *
                       make_rational(fp_fixed_data(M, H).torsion, fp_fixed_data(N, H).torsion);
    c.rhs *= rational_pow(q, 2 * theta.coeffs[k]);
  }
  c.holds = c.lhs == c.rhs;
  return c;
}

inline LemmaCheck verify_lemma(const SubgroupClassTable& table, const ZGLattice& M, const ZGLattice& N,
                               const IntMatrix& T, const BurnsideElement& theta) {
  return verify_lemma(table, FpModule::from_lattice(M), FpModule::from_lattice(N), T, theta);
}

}  // namespace brauer
