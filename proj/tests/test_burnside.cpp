#include <gtest/gtest.h>

#include <map>

#include "brauer/burnside.hpp"
#include "brauer/corpus.hpp"
#include "support.hpp"

using namespace brauer;
using brauer::testing::corpus_data;
using brauer::testing::element;
using brauer::testing::shared;

namespace {

// Fixed points of g on G/K by direct counting of cosets xK with gxK = xK.
long count_fixed_cosets(const FiniteGroup& G, int g, const Subgroup& K) {
  const CosetSpace cs = left_cosets(G, K);
  long n = 0;
  for (int x : cs.representatives) n += cs.coset_of[G.mul(g, x)] == cs.coset_of[x];
  return n;
}

// All integer vectors with entries in [-r, r] in the kernel of F.
std::vector<std::vector<long>> brute_force_kernel(const IntMatrix& F, long r) {
  const std::size_t n = F.cols();
  std::vector<std::vector<long>> out;
  std::vector<long> v(n, -r);
  for (;;) {
    bool zero = true;
    for (std::size_t i = 0; i < F.rows() && zero; ++i) {
      Integer s = 0;
      for (std::size_t j = 0; j < n; ++j) s += F(i, j) * v[j];
      zero = s == 0;
    }
    if (zero) out.push_back(v);
    std::size_t k = 0;
    while (k < n && v[k] == r) v[k++] = -r;
    if (k == n) break;
    ++v[k];
  }
  return out;
}

std::multiset<std::vector<int>> cycle_type(const std::vector<Permutation>& act) {
  std::multiset<std::vector<int>> out;
  for (const auto& p : act) {
    std::vector<int> lens;
    std::vector<bool> seen(p.size(), false);
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (seen[i]) continue;
      int len = 0;
      for (std::size_t j = i; !seen[j]; j = p[j]) seen[j] = true, ++len;
      lens.push_back(len);
    }
    std::sort(lens.begin(), lens.end());
    out.insert(lens);
  }
  return out;
}

}  // namespace

TEST(CosetAction, Examples) {
  const GroupPtr G = shared(symmetric_group_3());
  const auto whole = coset_action(*G, whole_group(*G));
  for (const auto& p : whole) EXPECT_EQ(p, Permutation{0});
  const auto reg = coset_action(*G, trivial_subgroup());
  for (const auto& p : reg) EXPECT_EQ(p.size(), 6u);
  const auto t = all_subgroups(G);
  const auto nat = coset_action(*G, t[1].representative);  // an order-2 subgroup
  ASSERT_EQ(t[1].order(), 2u);
  // the natural action of S3 on 3 points: its cycle types are 1+1+1, three 2+1, two 3
  const auto ct = cycle_type(nat);
  EXPECT_EQ(ct.count({1, 1, 1}), 1u);
  EXPECT_EQ(ct.count({1, 2}), 3u);
  EXPECT_EQ(ct.count({3}), 2u);
}

TEST(CosetAction, IsAHomomorphism) {
  const GroupPtr G = shared(dihedral_group_8());
  const auto t = all_subgroups(G);
  for (const auto& cls : t.classes()) {
    const auto act = coset_action(*G, cls.representative);
    for (std::size_t a = 0; a < G->order(); ++a)
      for (std::size_t b = 0; b < G->order(); ++b) EXPECT_EQ(act[G->mul(a, b)], compose(act[a], act[b]));
  }
}

TEST(FixedPointMatrix, S3IdentityRow) {
  const auto t = all_subgroups(shared(symmetric_group_3()));
  const IntMatrix F = fixed_point_matrix(t);
  EXPECT_EQ(F.row(0), (std::vector<Integer>{6, 3, 2, 1}));
}

TEST(FixedPointMatrix, RegularAndWholeColumns) {
  for (const auto& e : default_corpus()) {
    const auto t = all_subgroups(e.group);
    const IntMatrix F = fixed_point_matrix(t);
    for (std::size_t c = 0; c < F.rows(); ++c) {
      EXPECT_EQ(F(c, t.whole_group_class()), 1);
      EXPECT_EQ(F(c, 0), c == 0 ? Integer(e.group->order()) : Integer(0));
    }
  }
}

TEST(FixedPointMatrix, MatchesCosetCounting) {
  for (const auto& e : default_corpus()) {
    const auto t = all_subgroups(e.group);
    const IntMatrix F = fixed_point_matrix(t);
    for (std::size_t c = 0; c < F.rows(); ++c)
      for (std::size_t k = 0; k < t.size(); ++k)
        EXPECT_EQ(F(c, k), count_fixed_cosets(*e.group, e.group->class_representative(c), t[k].representative));
  }
}

TEST(BrauerRelations, CyclicGroupsHaveNone) {
  for (int n : {1, 2, 3, 4, 5, 6, 8, 12}) {
    auto t = std::make_shared<const SubgroupClassTable>(all_subgroups(shared(cyclic_group(n))));
    EXPECT_EQ(brauer_relation_basis(t).size(), 0u) << n;
  }
}

TEST(BrauerRelations, KleinFour) {
  const auto d = corpus_data("V4");
  ASSERT_EQ(d.basis.size(), 1u);
  EXPECT_EQ(d.basis[0].coeffs, (std::vector<long>{1, -1, -1, -1, 2}));
  // every small kernel vector is a multiple of the basis relation
  const auto all = brute_force_kernel(fixed_point_matrix(*d.table), 2);
  EXPECT_EQ(all.size(), 3u);  // 0, ±Θ
  for (const auto& v : all) {
    const auto coords = relation_coordinates(d.basis, element(v));
    ASSERT_EQ(coords.size(), 1u);
    EXPECT_EQ(Integer(v[0]), coords[0]);
  }
}

TEST(BrauerRelations, S3) {
  const auto d = corpus_data("S3");
  ASSERT_EQ(d.basis.size(), 1u);
  EXPECT_EQ(d.basis[0].coeffs, (std::vector<long>{1, -2, -1, 2}));
  const auto all = brute_force_kernel(fixed_point_matrix(*d.table), 2);
  EXPECT_EQ(all.size(), 3u);
}

TEST(BrauerRelations, RankIsNonCyclicClassCount) {
  for (const auto& e : default_corpus()) {
    const auto d = corpus_data(e.name);
    EXPECT_EQ(d.basis.size(), d.table->size() - d.table->cyclic_class_count()) << e.name;
    EXPECT_EQ(d.basis.size(), d.table->size() - rank(fixed_point_matrix(*d.table))) << e.name;
    for (const auto& theta : d.basis.relations) {
      EXPECT_TRUE(is_brauer_relation(*d.table, theta));
      // normalized: first nonzero coefficient positive
      for (long c : theta.coeffs)
        if (c != 0) {
          EXPECT_GT(c, 0);
          break;
        }
    }
  }
}

TEST(BrauerRelations, BasisIsSaturated) {
  // a relation divisible by k in Z^classes has basis coordinates divisible by k
  for (const std::string name : {"D4", "Q8", "V4"}) {
    const auto d = corpus_data(name);
    IntMatrix B(d.table->size(), d.basis.size());
    for (std::size_t j = 0; j < d.basis.size(); ++j)
      for (std::size_t k = 0; k < d.table->size(); ++k) B(k, j) = d.basis[j].coeffs[k];
    for (const auto& f : smith_normal_form(B).invariant_factors()) EXPECT_EQ(f, 1) << name;
  }
}

TEST(IsBrauerRelation, Examples) {
  const auto d = corpus_data("V4");
  EXPECT_TRUE(is_brauer_relation(*d.table, zero_element(*d.table)));
  EXPECT_FALSE(is_brauer_relation(*d.table, element({0, 0, 0, 0, 1})));
  EXPECT_TRUE(is_brauer_relation(*d.table, element({1, -1, -1, -1, 2})));
  EXPECT_TRUE(is_brauer_relation(*d.table, element({-3, 3, 3, 3, -6})));
  EXPECT_THROW(relation_coordinates(d.basis, element({0, 0, 0, 0, 1})), Error);
}

TEST(BurnsideElement, Arithmetic) {
  const auto a = element({1, 2, 3}), b = element({0, -2, 1});
  EXPECT_EQ((a + b).coeffs, (std::vector<long>{1, 0, 4}));
  EXPECT_EQ((3 * a).coeffs, (std::vector<long>{3, 6, 9}));
  EXPECT_EQ((-a).coeffs, (std::vector<long>{-1, -2, -3}));
  EXPECT_TRUE((a + -a).is_zero());
}
