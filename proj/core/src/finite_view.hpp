#pragma once

// Internal index-level machinery for finite backends. Not installed.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "gentuple/group.hpp"

namespace gentuple::detail {

// Working copy of a finite group on uint32 indices. Multiplication is cached
// as a full table when it fits.
struct FiniteView {
  Group g;
  std::uint32_t n = 0;
  std::vector<GroupElement> elems;
  std::vector<std::uint32_t> inv_tab;
  std::vector<std::uint32_t> mul_tab;  // empty when too large
  std::uint32_t id = 0;

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (!mul_tab.empty()) return mul_tab[(std::size_t)a * n + b];
    return (std::uint32_t)g.element_index(g.mul(elems[a], elems[b]));
  }
  std::uint32_t inv(std::uint32_t a) const { return inv_tab[a]; }
  std::uint32_t conj(std::uint32_t a, std::uint32_t s) const { return mul(mul(inv(s), a), s); }
  std::uint32_t index(const GroupElement& e) const {
    return (std::uint32_t)g.element_index(e);
  }
};

inline FiniteView make_view(const Group& g) {
  if (!g.is_finite()) throw validation_error("operation requires a finite group");
  FiniteView v;
  v.g = g;
  v.n = (std::uint32_t)g.element_count();
  v.elems.reserve(v.n);
  for (std::uint32_t i = 0; i < v.n; ++i) v.elems.push_back(g.element_at(i));
  v.id = (std::uint32_t)g.element_index(g.identity());
  v.inv_tab.resize(v.n);
  for (std::uint32_t i = 0; i < v.n; ++i)
    v.inv_tab[i] = (std::uint32_t)g.element_index(g.inv(v.elems[i]));
  if ((std::size_t)v.n * v.n <= (std::size_t)1 << 22) {
    v.mul_tab.resize((std::size_t)v.n * v.n);
    for (std::uint32_t a = 0; a < v.n; ++a)
      for (std::uint32_t b = 0; b < v.n; ++b)
        v.mul_tab[(std::size_t)a * v.n + b] =
            (std::uint32_t)g.element_index(g.mul(v.elems[a], v.elems[b]));
  }
  return v;
}

// Subgroup generated by `gens`, as a sorted index list.
inline std::vector<std::uint32_t> closure(const FiniteView& v,
                                          const std::vector<std::uint32_t>& gens) {
  std::vector<char> in(v.n, 0);
  in[v.id] = 1;
  std::vector<std::uint32_t> members{v.id};
  for (std::size_t head = 0; head < members.size(); ++head)
    for (auto s : gens) {
      auto y = v.mul(members[head], s);
      if (!in[y]) {
        in[y] = 1;
        members.push_back(y);
      }
    }
  std::sort(members.begin(), members.end());
  return members;
}

inline std::vector<std::uint32_t> normal_closure(const FiniteView& v,
                                                 const std::vector<std::uint32_t>& gens) {
  std::vector<char> seen(v.n, 0);
  std::vector<std::uint32_t> all;
  for (auto s : gens)
    for (std::uint32_t x = 0; x < v.n; ++x) {
      auto c = v.conj(s, x);
      if (!seen[c]) {
        seen[c] = 1;
        all.push_back(c);
      }
    }
  return closure(v, all);
}

// Subgroup generated by all commutators [a, b], a in a_set, b in b_set.
inline std::vector<std::uint32_t> commutator_span(const FiniteView& v,
                                                  const std::vector<std::uint32_t>& a_set,
                                                  const std::vector<std::uint32_t>& b_set) {
  std::vector<char> seen(v.n, 0);
  std::vector<std::uint32_t> gens;
  for (auto a : a_set)
    for (auto b : b_set) {
      auto c = v.mul(v.mul(v.inv(a), v.inv(b)), v.mul(a, b));
      if (!seen[c]) {
        seen[c] = 1;
        gens.push_back(c);
      }
    }
  return closure(v, gens);
}

// Union-find with path halving and union by size.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1) {
    for (std::size_t i = 0; i < n; ++i) parent_[i] = (std::uint32_t)i;
  }

  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
  }

 private:
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> size_;
};

}  // namespace gentuple::detail
