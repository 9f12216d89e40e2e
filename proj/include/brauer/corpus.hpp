#pragma once

// The built-in corpus of small groups: C2, C4, C6, V4, S3, D4, Q8.

#include <array>
#include <string>
#include <vector>

#include "brauer/group.hpp"

namespace brauer {

inline Permutation cycle_permutation(int n) {
  Permutation p(n);
  for (int i = 0; i < n; ++i) p[i] = (i + 1) % n;
  return p;
}

inline FiniteGroup cyclic_group(int n) { return group_from_generators({cycle_permutation(n)}); }

inline FiniteGroup klein_four_group() { return group_from_generators({{1, 0, 2, 3}, {0, 1, 3, 2}}); }

inline FiniteGroup symmetric_group_3() { return group_from_generators({{1, 2, 0}, {1, 0, 2}}); }

/// Symmetries of a square with vertices 0..3.
inline FiniteGroup dihedral_group_8() { return group_from_generators({{1, 2, 3, 0}, {0, 3, 2, 1}}); }

/// Quaternion units; element 4*s + u stands for (-1)^s · {1, i, j, k}[u].
inline FiniteGroup quaternion_group() {
  // unit products: kMul[a][b] = {sign, unit} of e_a * e_b
  static constexpr std::array<std::array<std::array<int, 2>, 4>, 4> kMul{{
      {{{0, 0}, {0, 1}, {0, 2}, {0, 3}}},
      {{{0, 1}, {1, 0}, {0, 3}, {1, 2}}},
      {{{0, 2}, {1, 3}, {1, 0}, {0, 1}}},
      {{{0, 3}, {0, 2}, {1, 1}, {1, 0}}},
  }};
  std::vector<std::vector<int>> table(8, std::vector<int>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      const auto& [s, u] = kMul[a % 4][b % 4];
      table[a][b] = 4 * ((s + a / 4 + b / 4) % 2) + u;
    }
  return FiniteGroup::from_cayley_table(table, {"1", "i", "j", "k", "-1", "-i", "-j", "-k"});
}

struct CorpusEntry {
  std::string name;
  GroupPtr group;
};

inline std::vector<std::string> corpus_names() { return {"C2", "C4", "C6", "V4", "S3", "D4", "Q8"}; }

inline GroupPtr corpus_group(const std::string& name) {
  if (name == "C2") return std::make_shared<const FiniteGroup>(cyclic_group(2));
  if (name == "C4") return std::make_shared<const FiniteGroup>(cyclic_group(4));
  if (name == "C6") return std::make_shared<const FiniteGroup>(cyclic_group(6));
  if (name == "V4") return std::make_shared<const FiniteGroup>(klein_four_group());
  if (name == "S3") return std::make_shared<const FiniteGroup>(symmetric_group_3());
  if (name == "D4") return std::make_shared<const FiniteGroup>(dihedral_group_8());
  if (name == "Q8") return std::make_shared<const FiniteGroup>(quaternion_group());
  fail_input("unknown corpus group '" + name + "'");
}

inline std::vector<CorpusEntry> default_corpus() {
  std::vector<CorpusEntry> c;
  for (const auto& n : corpus_names()) c.push_back({n, corpus_group(n)});
  return c;
}

}  // namespace brauer
