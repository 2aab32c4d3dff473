#pragma once

// Shared test helpers: deterministic randomness and small brute-force
// oracles kept independent of the library code paths they check.

#include <random>
#include <set>
#include <vector>

#include "gentuple/group.hpp"
#include "gentuple/word.hpp"

namespace testsupport {

using namespace gentuple;

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline Word random_word(std::mt19937_64& gen, int rank, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> pick(1, rank);
  std::uniform_int_distribution<int> sign(0, 1);
  std::vector<Letter> letters;
  const int l = len(gen);
  for (int i = 0; i < l; ++i) letters.push_back(Letter{pick(gen), sign(gen) ? +1 : -1});
  return Word(rank, std::move(letters));
}

inline GroupElement random_element(std::mt19937_64& gen, const Group& g, long long lo,
                                   long long hi) {
  std::uniform_int_distribution<long long> pick(lo, hi);
  std::size_t size = g.identity().coords.size();
  std::vector<Int> coords;
  for (std::size_t i = 0; i < size; ++i) coords.push_back(Int(pick(gen)));
  return g.canonicalize(std::move(coords));
}

// Subgroup generated by the entries, computed with nothing but the public
// element operations.
inline std::set<std::vector<Int>> brute_closure(const Group& g,
                                                const std::vector<GroupElement>& gens) {
  std::set<std::vector<Int>> seen{g.identity().coords};
  std::vector<GroupElement> frontier{g.identity()};
  while (!frontier.empty()) {
    std::vector<GroupElement> next;
    for (const auto& e : frontier)
      for (const auto& s : gens) {
        GroupElement y = g.mul(e, s);
        if (seen.insert(y.coords).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return seen;
}

inline std::set<std::vector<Int>> brute_normal_closure(const Group& g,
                                                       const std::vector<GroupElement>& gens) {
  std::vector<GroupElement> conjugates;
  std::set<std::vector<Int>> seen;
  const std::uint64_t n = g.element_count();
  for (const auto& s : gens)
    for (std::uint64_t i = 0; i < n; ++i) {
      GroupElement c = g.conj(s, g.element_at(i));
      if (seen.insert(c.coords).second) conjugates.push_back(c);
    }
  return brute_closure(g, conjugates);
}

inline bool brute_generates(const Group& g, const std::vector<GroupElement>& gens) {
  return brute_closure(g, gens).size() == g.element_count();
}

inline bool brute_normally_generates(const Group& g, const std::vector<GroupElement>& gens) {
  return brute_normal_closure(g, gens).size() == g.element_count();
}

inline Tuple tuple_of(const Group& g, std::vector<GroupElement> entries) {
  Tuple t;
  t.group = g;
  t.entries = std::move(entries);
  return t;
}

inline GroupElement coords(const Group& g, std::vector<long long> cs) {
  std::vector<Int> v(cs.begin(), cs.end());
  return g.canonicalize(std::move(v));
}

}  // namespace testsupport
