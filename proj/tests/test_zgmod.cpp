#include <gtest/gtest.h>

#include "brauer/corpus.hpp"
#include "brauer/verify.hpp"
#include "brauer/zgmod.hpp"
#include "support.hpp"

using namespace brauer;
using namespace brauer::testing;

namespace {

// Fixed points of an FpModule by enumerating Z^n / im R when R is diagonal.
Integer enumerate_fixed_diagonal(const FpModule& M, const Subgroup& H) {
  const std::size_t n = M.generators();
  std::vector<long> mod(n);
  for (std::size_t i = 0; i < n; ++i) mod[i] = M.relations()(i, i).get_si();
  std::vector<long> x(n, 0);
  Integer count = 0;
  for (;;) {
    bool fixed = true;
    for (int h : H.elements) {
      const auto y = M.action(h).apply(std::vector<Integer>(x.begin(), x.end()));
      for (std::size_t i = 0; i < n && fixed; ++i) {
        Integer diff = y[i] - x[i];
        fixed = mpz_divisible_ui_p(diff.get_mpz_t(), mod[i]);
      }
    }
    if (fixed) ++count;
    std::size_t k = 0;
    while (k < n && x[k] == mod[k] - 1) x[k++] = 0;
    if (k == n) break;
    ++x[k];
  }
  return count;
}

}  // namespace

TEST(ZGLattice, TrivialAndRegular) {
  for (const auto& e : default_corpus()) {
    const ZGLattice T = trivial_lattice(e.group);
    EXPECT_EQ(T.rank(), 1u);
    for (const auto& c : character(T)) EXPECT_EQ(c, 1);
    const ZGLattice R = regular_lattice(e.group);
    EXPECT_EQ(R.rank(), e.group->order());
    const auto chi = character(R);
    for (std::size_t c = 1; c < chi.size(); ++c) EXPECT_EQ(chi[c], 0);
    const ZGLattice W = permutation_lattice(e.group, whole_group(*e.group));
    EXPECT_EQ(W.actions(), T.actions());
  }
}

TEST(ZGLattice, RejectsNonHomomorphism) {
  const GroupPtr G = shared(cyclic_group(2));
  EXPECT_THROW(ZGLattice(G, 1, {IntMatrix{{1}}, IntMatrix{{2}}}), Error);
  EXPECT_THROW(ZGLattice(G, 1, {IntMatrix{{-1}}, IntMatrix{{-1}}}), Error);
  EXPECT_THROW(ZGLattice::from_generator_images(shared(cyclic_group(3)), 1, {{1, IntMatrix{{-1}}}}), Error);
}

TEST(ZGLattice, GeneratorImagesClose) {
  const GroupPtr G = shared(cyclic_group(4));
  const ZGLattice M = ZGLattice::from_generator_images(G, 2, {{1, IntMatrix{{0, -1}, {1, 0}}}});
  EXPECT_EQ(M.action(2), Integer(-1) * IntMatrix::identity(2));
}

TEST(SignLattice, Examples) {
  const GroupPtr G = shared(cyclic_group(2));
  const ZGLattice S = sign_lattice(G, trivial_subgroup());
  EXPECT_EQ(S.action(1), IntMatrix{{-1}});
  EXPECT_THROW(sign_lattice(shared(symmetric_group_3()), trivial_subgroup()), Error);
}

TEST(InducedLattice, FromWholeGroupIsIdentity) {
  const GroupPtr G = shared(symmetric_group_3());
  const ZGLattice S = sign_lattice(G, all_subgroups(G)[2].representative);
  EXPECT_EQ(induced_lattice(G, restrict_to(S, whole_group(*G))).actions(), S.actions());
}

TEST(InducedLattice, OfTrivialIsPermutation) {
  for (const auto& e : default_corpus()) {
    const auto t = all_subgroups(e.group);
    for (const auto& cls : t.classes()) {
      const ZGLattice I = induced_lattice(e.group, trivial_subgroup_module(cls.representative));
      const ZGLattice P = permutation_lattice(e.group, cls.representative);
      EXPECT_EQ(character(I), character(P));
      EXPECT_TRUE(is_equivariant(IntMatrix::identity(P.rank()), I, P));
    }
  }
}

TEST(InducedLattice, SignOnKleinFour) {
  const GroupPtr G = shared(klein_four_group());
  const auto t = all_subgroups(G);
  for (std::size_t k = 1; k <= 3; ++k) {
    const SubgroupModule eps = sign_subgroup_module(t[k].representative);
    const ZGLattice I = induced_lattice(G, eps);
    EXPECT_EQ(I.rank(), 2u);
    const auto chi = character(I);
    EXPECT_EQ(chi, induced_character_oracle(*G, eps));
    // (2, −2, 0, 0) up to the order of the nonidentity classes
    std::multiset<Integer> values(chi.begin(), chi.end());
    EXPECT_EQ(values, (std::multiset<Integer>{2, -2, 0, 0}));
  }
}

TEST(InducedLattice, CharacterOracleOnCorpus) {
  for (const auto& e : default_corpus()) {
    const auto t = all_subgroups(e.group);
    for (const auto& cls : t.classes())
      if (cls.order() == 2) {
        const SubgroupModule eps = sign_subgroup_module(cls.representative);
        EXPECT_EQ(character(induced_lattice(e.group, eps)), induced_character_oracle(*e.group, eps)) << e.name;
      }
  }
}

TEST(RationalIsomorphism, Examples) {
  const GroupPtr C2 = shared(cyclic_group(2));
  EXPECT_FALSE(rationally_isomorphic(trivial_lattice(C2), sign_lattice(C2, trivial_subgroup())));
  const auto d = corpus_data("V4");
  const auto [lhs, rhs] = relation_sides(d, d.basis[0]);
  EXPECT_TRUE(rationally_isomorphic(lhs, rhs));
  EXPECT_EQ(character(lhs), (CharacterVector{6, 2, 2, 2}));
}

TEST(FixedSublattice, Ranks) {
  for (const auto& e : default_corpus()) {
    const auto t = all_subgroups(e.group);
    const ZGLattice R = regular_lattice(e.group);
    for (const auto& cls : t.classes()) {
      const IntMatrix F = fixed_sublattice(R, cls.representative);
      EXPECT_EQ(F.cols(), e.group->order() / cls.order());
      EXPECT_EQ(fixed_sublattice(trivial_lattice(e.group), cls.representative).cols(), 1u);
    }
  }
  const GroupPtr S3 = shared(symmetric_group_3());
  const auto t = all_subgroups(S3);
  const ZGLattice S = sign_lattice(S3, t[2].representative);
  EXPECT_EQ(fixed_sublattice(S, t[1].representative).cols(), 0u);
  EXPECT_EQ(fixed_sublattice(S, t[2].representative).cols(), 1u);
}

TEST(FixedSublattice, RankMatchesCharacterAndIsSaturated) {
  for (const std::string name : {"V4", "S3", "D4", "Q8"}) {
    const auto d = corpus_data(name);
    Generator gen(d, 17);
    for (int trial = 0; trial < 15; ++trial) {
      const ZGLattice M = gen.partner(gen.lattice());
      for (const auto& cls : d.table->classes()) {
        const IntMatrix F = fixed_sublattice(M, cls.representative);
        EXPECT_EQ(Integer(F.cols()), fixed_rank_from_character(M, cls.representative));
        for (const auto& f : smith_normal_form(F).invariant_factors()) EXPECT_EQ(f, 1);
        for (int h : cls.representative.elements) EXPECT_EQ(M.action(h) * F, F);
      }
    }
  }
}

TEST(Embedding, TrivialToTrivial) {
  const GroupPtr G = shared(klein_four_group());
  EXPECT_EQ(find_equivariant_embedding(trivial_lattice(G), trivial_lattice(G), 1), IntMatrix{{1}});
}

TEST(Embedding, EquivariantAndInjective) {
  for (const std::string name : {"V4", "S3", "D4", "Q8"}) {
    const auto d = corpus_data(name);
    Generator gen(d, 99);
    for (int trial = 0; trial < 10; ++trial) {
      const ZGLattice M = gen.lattice();
      const ZGLattice N = gen.partner(M);
      const IntMatrix T = find_equivariant_embedding(M, N, 1000 + trial);
      EXPECT_TRUE(is_equivariant(T, M, N));
      EXPECT_EQ(rank(T), M.rank());
      EXPECT_EQ(T.content(), 1);
    }
  }
  const auto d = corpus_data("V4");
  const auto [lhs, rhs] = relation_sides(d, d.basis[0]);
  const IntMatrix T = find_equivariant_embedding(lhs, rhs, 3);
  EXPECT_TRUE(is_equivariant(T, lhs, rhs));
  EXPECT_EQ(rank(T), 6u);
}

TEST(Embedding, RejectsNonIsomorphic) {
  const GroupPtr C2 = shared(cyclic_group(2));
  try {
    find_equivariant_embedding(trivial_lattice(C2), sign_lattice(C2, trivial_subgroup()), 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::precondition);
    EXPECT_STREQ(e.what(), "not rationally isomorphic");
  }
}

TEST(Embedding, DeterministicInSeed) {
  const auto d = corpus_data("D4");
  const ZGLattice R = regular_lattice(d.group);
  EXPECT_EQ(find_equivariant_embedding(R, R, 42), find_equivariant_embedding(R, R, 42));
}

TEST(FpModule, TrivialZ5) {
  const GroupPtr G = shared(klein_four_group());
  const FpModule M = reduction_mod(trivial_lattice(G), 5);
  const auto t = all_subgroups(G);
  for (const auto& cls : t.classes()) {
    const FpFixedData f = fp_fixed_data(M, cls.representative);
    EXPECT_EQ(f.free_rank, 0u);
    EXPECT_EQ(f.torsion, 5);
  }
}

TEST(FpModule, NegationOnZ3) {
  const GroupPtr G = shared(cyclic_group(2));
  const FpModule M(G, 1, IntMatrix{{3}}, {IntMatrix{{1}}, IntMatrix{{-1}}});
  const FpFixedData f = fp_fixed_data(M, whole_group(*G));
  EXPECT_EQ(f.free_rank, 0u);
  EXPECT_EQ(f.torsion, 1);
  EXPECT_EQ(enumerate_fixed_diagonal(M, whole_group(*G)), 1);
  EXPECT_EQ(fp_fixed_data(M, trivial_subgroup()).torsion, 3);
}

TEST(FpModule, LatticeAgreesWithFixedSublattice) {
  const auto d = corpus_data("D4");
  Generator gen(d, 4);
  for (int trial = 0; trial < 10; ++trial) {
    const ZGLattice M = gen.lattice();
    const FpModule F = FpModule::from_lattice(M);
    for (const auto& cls : d.table->classes()) {
      const FpFixedData f = fp_fixed_data(F, cls.representative);
      EXPECT_EQ(f.free_rank, fixed_sublattice(M, cls.representative).cols());
      EXPECT_EQ(f.torsion, 1);
    }
  }
}

TEST(FpModule, FixedTorsionMatchesEnumeration) {
  // M/qM for small permutation and sign lattices: count fixed vectors directly
  for (const std::string name : {"V4", "S3"}) {
    const auto d = corpus_data(name);
    Generator gen(d, 8);
    for (const auto& L : gen.pool()) {
      if (L.rank() > 4) continue;
      for (long q : {3L, 5L}) {
        const FpModule M = reduction_mod(L, q);
        for (const auto& cls : d.table->classes()) {
          const FpFixedData f = fp_fixed_data(M, cls.representative);
          EXPECT_EQ(f.free_rank, 0u);
          EXPECT_EQ(f.torsion, enumerate_fixed_diagonal(M, cls.representative)) << name << " q=" << q;
        }
      }
    }
  }
}

TEST(FpModule, RejectsBadAction) {
  const GroupPtr G = shared(cyclic_group(2));
  // swapping the two generators does not preserve im (3, 0)ᵀ
  EXPECT_THROW(FpModule(G, 2, IntMatrix{{3}, {0}}, {IntMatrix::identity(2), IntMatrix{{0, 1}, {1, 0}}}), Error);
}

TEST(FpModule, FreeQuotient) {
  const GroupPtr G = shared(symmetric_group_3());
  const ZGLattice R = regular_lattice(G);
  const FpModule M = direct_sum(FpModule::from_lattice(R), reduction_mod(trivial_lattice(G), 9));
  const FreeQuotient fq = free_quotient(M);
  EXPECT_EQ(fq.lattice.rank(), 6u);
  EXPECT_EQ(character(fq.lattice), character(R));
  EXPECT_EQ(torsion_order(M), 9);
}

TEST(FpModule, Equivariance) {
  const GroupPtr G = shared(cyclic_group(2));
  const FpModule Z3neg(G, 1, IntMatrix{{3}}, {IntMatrix{{1}}, IntMatrix{{-1}}});
  const FpModule Z3triv = reduction_mod(trivial_lattice(G), 3);
  EXPECT_TRUE(is_equivariant(IntMatrix{{1}}, Z3neg, Z3neg));
  EXPECT_FALSE(is_equivariant(IntMatrix{{1}}, Z3neg, Z3triv));
  EXPECT_TRUE(is_equivariant(IntMatrix{{3}}, Z3neg, Z3triv));  // zero map
}
