#pragma once

// Finite groups given by Cayley tables, their element conjugacy classes,
// and the lattice of subgroups up to conjugacy.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <memory>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "brauer/error.hpp"

namespace brauer {

using Permutation = std::vector<int>;

inline constexpr std::size_t default_closure_bound = 2000;
inline constexpr std::size_t default_subgroup_bound = 64;

/// A finite group stored as its multiplication table. Element 0 is the identity.
class FiniteGroup {
public:
  /// Validates the table, moves the identity to index 0 and computes the
  /// element conjugacy classes.
  static FiniteGroup from_cayley_table(const std::vector<std::vector<int>>& table,
                                       std::vector<std::string> labels = {}) {
    const std::size_t n = table.size();
    if (n == 0) fail_input("empty Cayley table");
    for (const auto& row : table) {
      if (row.size() != n) fail_input("Cayley table is not square");
      std::vector<bool> seen(n, false);
      for (int x : row) {
        if (x < 0 || static_cast<std::size_t>(x) >= n || seen[x])
          fail_input("Cayley table row is not a permutation");
        seen[x] = true;
      }
    }
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<bool> seen(n, false);
      for (std::size_t i = 0; i < n; ++i) {
        const int x = table[i][j];
        if (seen[x]) fail_input("Cayley table column is not a permutation");
        seen[x] = true;
      }
    }
    std::size_t e = n;
    for (std::size_t a = 0; a < n && e == n; ++a) {
      bool left = true;
      for (std::size_t x = 0; x < n && left; ++x) left = table[a][x] == static_cast<int>(x);
      if (left) e = a;
    }
    if (e == n) fail_input("Cayley table has no identity element");
    for (std::size_t x = 0; x < n; ++x)
      if (table[x][e] != static_cast<int>(x)) fail_input("Cayley table has no two-sided identity");

    // Renumber so that the identity is 0: swap labels 0 and e.
    std::vector<int> relabel(n);
    std::iota(relabel.begin(), relabel.end(), 0);
    std::swap(relabel[0], relabel[e]);
    FiniteGroup g;
    g.order_ = n;
    g.table_.assign(n * n, 0);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        g.table_[relabel[a] * n + relabel[b]] = relabel[table[a][b]];
    if (!labels.empty()) {
      if (labels.size() != n) fail_input("label count does not match group order");
      std::swap(labels[0], labels[e]);
      g.labels_ = std::move(labels);
    }
    g.check_associative();
    g.finish();
    return g;
  }

  std::size_t order() const noexcept { return order_; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * order_ + b]; }
  int inv(int a) const { return inverse_[a]; }
  int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }  // g x g^-1

  int element_order(int a) const {
    int k = 1;
    for (int x = a; x != 0; x = mul(x, a)) ++k;
    return k;
  }

  /// Element conjugacy classes; class 0 is {identity}, classes ordered by
  /// their least member, which is also the chosen representative.
  const std::vector<std::vector<int>>& classes() const noexcept { return classes_; }
  int class_of(int a) const { return class_of_[a]; }
  int class_representative(std::size_t c) const { return classes_[c].front(); }

  const std::vector<std::string>& labels() const noexcept { return labels_; }

  std::vector<std::vector<int>> cayley_table() const {
    std::vector<std::vector<int>> t(order_, std::vector<int>(order_));
    for (std::size_t a = 0; a < order_; ++a)
      for (std::size_t b = 0; b < order_; ++b) t[a][b] = table_[a * order_ + b];
    return t;
  }

private:
  void check_associative() const {
    const std::size_t n = order_;
    auto triple_ok = [&](int a, int b, int c) { return mul(mul(a, b), c) == mul(a, mul(b, c)); };
    if (n <= 64) {
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          for (std::size_t c = 0; c < n; ++c)
            if (!triple_ok(a, b, c)) fail_input("Cayley table is not associative");
      return;
    }
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<int> pick(0, static_cast<int>(n) - 1);
    for (int k = 0; k < 200000; ++k)
      if (!triple_ok(pick(rng), pick(rng), pick(rng))) fail_input("Cayley table is not associative");
  }

  void finish() {
    const std::size_t n = order_;
    inverse_.assign(n, -1);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (mul(a, b) == 0) inverse_[a] = static_cast<int>(b);
    class_of_.assign(n, -1);
    for (std::size_t a = 0; a < n; ++a) {
      if (class_of_[a] != -1) continue;
      std::set<int> cls;
      for (std::size_t g = 0; g < n; ++g) cls.insert(conj(g, a));
      const int id = static_cast<int>(classes_.size());
      for (int x : cls) class_of_[x] = id;
      classes_.emplace_back(cls.begin(), cls.end());
    }
  }

  std::size_t order_ = 0;
  std::vector<int> table_;
  std::vector<int> inverse_;
  std::vector<std::vector<int>> classes_;
  std::vector<int> class_of_;
  std::vector<std::string> labels_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

inline void check_permutation(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  for (int x : p) {
    if (x < 0 || static_cast<std::size_t>(x) >= p.size() || seen[x]) fail_input("not a permutation");
    seen[x] = true;
  }
}

/// (a*b)(x) = a(b(x)): b acts first.
inline Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation c(b.size());
  for (std::size_t x = 0; x < b.size(); ++x) c[x] = a[b[x]];
  return c;
}

/// Closure of a set of permutations, as a Cayley-table group. Elements are
/// numbered in breadth-first order from the identity.
inline FiniteGroup group_from_generators(const std::vector<Permutation>& gens,
                                         std::size_t bound = default_closure_bound) {
  std::size_t degree = gens.empty() ? 0 : gens.front().size();
  for (const auto& p : gens) {
    if (p.size() != degree) fail_input("generators act on different sets");
    check_permutation(p);
  }
  Permutation id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::vector<Permutation> elements{id};
  std::map<Permutation, int> index{{id, 0}};
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const auto& s : gens) {
      Permutation p = compose(s, elements[i]);
      if (index.count(p)) continue;
      if (elements.size() >= bound) fail_input("group too large");
      index.emplace(p, static_cast<int>(elements.size()));
      elements.push_back(std::move(p));
    }
  }
  const std::size_t n = elements.size();
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a][b] = index.at(compose(elements[a], elements[b]));
  return FiniteGroup::from_cayley_table(table);
}

/// Sorted element list of a subgroup.
struct Subgroup {
  std::vector<int> elements;

  std::size_t order() const noexcept { return elements.size(); }
  bool contains(int x) const { return std::binary_search(elements.begin(), elements.end(), x); }
  friend bool operator==(const Subgroup&, const Subgroup&) = default;
  friend auto operator<=>(const Subgroup&, const Subgroup&) = default;
};

/// Subgroup generated by the given elements.
inline Subgroup generated_subgroup(const FiniteGroup& G, const std::vector<int>& gens) {
  std::vector<bool> in(G.order(), false);
  std::vector<int> elems{0};
  in[0] = true;
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (int s : gens) {
      const int x = G.mul(elems[i], s);
      if (!in[x]) {
        in[x] = true;
        elems.push_back(x);
      }
    }
  std::sort(elems.begin(), elems.end());
  return {elems};
}

/// Validates that the element list is a subgroup; returns it sorted.
inline Subgroup make_subgroup(const FiniteGroup& G, std::vector<int> elems) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  for (int x : elems)
    if (x < 0 || static_cast<std::size_t>(x) >= G.order()) fail_input("element index out of range");
  Subgroup H{elems};
  if (!H.contains(0)) fail_precondition("not a subgroup: identity missing");
  for (int a : elems)
    for (int b : elems)
      if (!H.contains(G.mul(a, b))) fail_precondition("not a subgroup: not closed");
  return H;
}

inline Subgroup trivial_subgroup() { return {{0}}; }

inline Subgroup whole_group(const FiniteGroup& G) {
  Subgroup H;
  H.elements.resize(G.order());
  std::iota(H.elements.begin(), H.elements.end(), 0);
  return H;
}

inline Subgroup conjugate(const FiniteGroup& G, const Subgroup& H, int g) {
  Subgroup K;
  for (int h : H.elements) K.elements.push_back(G.conj(g, h));
  std::sort(K.elements.begin(), K.elements.end());
  return K;
}

inline Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  Subgroup c;
  std::set_intersection(a.elements.begin(), a.elements.end(), b.elements.begin(), b.elements.end(),
                        std::back_inserter(c.elements));
  return c;
}

inline bool is_cyclic(const FiniteGroup& G, const Subgroup& H) {
  return std::any_of(H.elements.begin(), H.elements.end(), [&](int h) {
    return static_cast<std::size_t>(G.element_order(h)) == H.order();
  });
}

inline bool is_normal(const FiniteGroup& G, const Subgroup& H) {
  for (std::size_t g = 0; g < G.order(); ++g)
    if (conjugate(G, H, static_cast<int>(g)) != H) return false;
  return true;
}

struct SubgroupClass {
  Subgroup representative;  // lexicographically least conjugate
  std::vector<Subgroup> conjugates;
  bool is_cyclic = false;

  std::size_t order() const noexcept { return representative.order(); }
};

/// Conjugacy classes of subgroups in canonical order: by subgroup order,
/// then by the least conjugate's element list.
class SubgroupClassTable {
public:
  SubgroupClassTable(GroupPtr group, std::vector<SubgroupClass> classes)
      : group_(std::move(group)), classes_(std::move(classes)) {
    for (std::size_t c = 0; c < classes_.size(); ++c)
      for (const auto& H : classes_[c].conjugates) class_of_.emplace(H.elements, static_cast<int>(c));
  }

  const FiniteGroup& group() const noexcept { return *group_; }
  const GroupPtr& group_ptr() const noexcept { return group_; }
  std::size_t size() const noexcept { return classes_.size(); }
  const SubgroupClass& operator[](std::size_t c) const { return classes_[c]; }
  const std::vector<SubgroupClass>& classes() const noexcept { return classes_; }

  std::size_t subgroup_count() const noexcept { return class_of_.size(); }
  std::size_t cyclic_class_count() const {
    return static_cast<std::size_t>(
        std::count_if(classes_.begin(), classes_.end(), [](const SubgroupClass& c) { return c.is_cyclic; }));
  }

  /// Index of the class containing H; throws if H is not a subgroup.
  std::size_t class_of(const Subgroup& H) const {
    auto it = class_of_.find(H.elements);
    if (it == class_of_.end()) fail_precondition("not a subgroup of the group");
    return static_cast<std::size_t>(it->second);
  }

  std::size_t trivial_class() const { return 0; }
  std::size_t whole_group_class() const { return classes_.size() - 1; }

private:
  GroupPtr group_;
  std::vector<SubgroupClass> classes_;
  std::map<std::vector<int>, int> class_of_;
};

/// Every subgroup of G, grouped into conjugacy classes. Enumeration is a
/// layered closure: cyclic subgroups first, then <H, g> for every known H
/// and g outside H until nothing new appears.
inline SubgroupClassTable all_subgroups(GroupPtr group, std::size_t bound = default_subgroup_bound) {
  const FiniteGroup& G = *group;
  if (G.order() > bound) fail_input("group too large for subgroup enumeration");
  std::set<Subgroup> found;
  std::deque<Subgroup> pending;
  std::vector<int> cyclic_gens;
  for (std::size_t g = 0; g < G.order(); ++g) {
    Subgroup C = generated_subgroup(G, {static_cast<int>(g)});
    if (found.insert(C).second) {
      pending.push_back(C);
      cyclic_gens.push_back(static_cast<int>(g));
    }
  }
  while (!pending.empty()) {
    Subgroup H = pending.front();
    pending.pop_front();
    for (int g : cyclic_gens) {
      if (H.contains(g)) continue;
      std::vector<int> gens = H.elements;
      gens.push_back(g);
      Subgroup K = generated_subgroup(G, gens);
      if (found.insert(K).second) pending.push_back(std::move(K));
    }
  }

  std::vector<SubgroupClass> classes;
  std::set<Subgroup> assigned;
  for (const Subgroup& H : found) {
    if (assigned.count(H)) continue;
    std::set<Subgroup> conj;
    for (std::size_t g = 0; g < G.order(); ++g) conj.insert(conjugate(G, H, static_cast<int>(g)));
    assigned.insert(conj.begin(), conj.end());
    SubgroupClass cls;
    cls.conjugates.assign(conj.begin(), conj.end());
    cls.representative = cls.conjugates.front();
    cls.is_cyclic = is_cyclic(G, cls.representative);
    classes.push_back(std::move(cls));
  }
  std::sort(classes.begin(), classes.end(), [](const SubgroupClass& a, const SubgroupClass& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.representative.elements < b.representative.elements;
  });
  return SubgroupClassTable(std::move(group), std::move(classes));
}

inline std::size_t conjugacy_class_of_subgroup(const SubgroupClassTable& table, const Subgroup& H) {
  return table.class_of(H);
}

// ---------------------------------------------------------------------------
// Cosets and double cosets

/// Left cosets xK, numbered by increasing least element.
struct CosetSpace {
  std::vector<int> coset_of;        // element -> coset index
  std::vector<int> representatives;  // least element of each coset

  std::size_t size() const noexcept { return representatives.size(); }
};

inline CosetSpace left_cosets(const FiniteGroup& G, const Subgroup& K) {
  CosetSpace cs;
  cs.coset_of.assign(G.order(), -1);
  for (std::size_t x = 0; x < G.order(); ++x) {
    if (cs.coset_of[x] != -1) continue;
    const int id = static_cast<int>(cs.representatives.size());
    cs.representatives.push_back(static_cast<int>(x));
    for (int k : K.elements) cs.coset_of[G.mul(static_cast<int>(x), k)] = id;
  }
  return cs;
}

struct DoubleCosetOrbit {
  int representative;  // least element x with xK in the orbit
  std::vector<int> cosets;
  std::size_t stabilizer_order;  // |H ∩ xKx^-1|

  std::size_t size() const noexcept { return cosets.size(); }
};

/// H-orbits on G/K, i.e. the double cosets H\G/K.
inline std::vector<DoubleCosetOrbit> double_cosets(const FiniteGroup& G, const Subgroup& H,
                                                   const Subgroup& K) {
  const CosetSpace cs = left_cosets(G, K);
  std::vector<bool> seen(cs.size(), false);
  std::vector<DoubleCosetOrbit> orbits;
  for (std::size_t c = 0; c < cs.size(); ++c) {
    if (seen[c]) continue;
    DoubleCosetOrbit o;
    o.representative = cs.representatives[c];
    std::set<int> members;
    for (int h : H.elements) members.insert(cs.coset_of[G.mul(h, o.representative)]);
    for (int m : members) seen[m] = true;
    o.cosets.assign(members.begin(), members.end());
    o.stabilizer_order = intersect(H, conjugate(G, K, o.representative)).order();
    orbits.push_back(std::move(o));
  }
  return orbits;
}

}  // namespace brauer
