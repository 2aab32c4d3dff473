#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "gentuple/group.hpp"
#include "gentuple/word.hpp"

namespace gentuple {

// An explicit subgroup of a finite group: the full element set, sorted by
// element index, plus its normality flag.
struct Subgroup {
  Group group;
  std::vector<GroupElement> elements;
  bool is_normal = false;

  std::size_t size() const { return elements.size(); }
  bool contains(const GroupElement& e) const;
};

// True iff the entries generate the whole group. Backends: cayley tables use
// an orbit closure; abelian groups a Smith-form criterion on the exponent
// matrix; Heisenberg and free nilpotent groups reduce to their abelianization
// (the derived subgroup sits inside the Frattini subgroup there, so
// generating modulo it is enough).
bool generates(const Group& g, const std::vector<GroupElement>& entries);
bool generates(const Group& g, const Tuple& t);

// True iff the normal closure of the entries is the whole group. Nilpotent
// backends coincide with generates(); finite tables use a conjugation-closed
// orbit.
bool normally_generates(const Group& g, const std::vector<GroupElement>& entries);
bool normally_generates(const Group& g, const Tuple& t);

// All maximal proper subgroups of a finite group.
std::vector<Subgroup> maximal_subgroups(const Group& g);

// Intersection of all maximal subgroups (the set of non-generators).
Subgroup frattini(const Group& g);

Subgroup derived_subgroup(const Group& g);

// Lower central series reaches the trivial subgroup.
bool is_nilpotent(const Group& g);

// Every maximal subgroup is normal. For finite groups this is equivalent to
// nilpotency.
bool is_class_c(const Group& g);

// Minimal sizes of a generating tuple and of a normally generating tuple,
// found by increasing-length search. weight <= rank always; they agree on
// finite groups in which every maximal subgroup is normal.
struct RankWeight {
  int rank = 0;
  int weight = 0;
};
RankWeight rank_and_weight(const Group& g);

// Commutator-subgroup generators obtained by rewriting against the coset
// representatives x^{n1} y^{n2}: each generator is
//   x^{n1} y^{n2} x (x^{n1+1} y^{n2})^{-1}.
struct SchreierGenerator {
  GroupElement element;
  long long n1 = 0, n2 = 0;
  int slot = 1;  // index of the inserted generator (always the first here)
};

enum class SchreierRange {
  abelianization,  // n_i in [0, ord of the image in Ab(G))   (small)
  group_order,     // n_i in [0, ord_G)                        (complete)
  symmetric,       // n_i in (-ord_G, ord_G)                   (redundant)
};

struct SchreierSet {
  GroupElement x, y;
  SchreierRange range = SchreierRange::abelianization;
  std::vector<SchreierGenerator> generators;
};

// Requires <x,y> = G. The returned set is verified to generate [G,G] by
// closure; the range escalates from the requested one if verification fails.
SchreierSet schreier_commutator_generators(const Group& g, const GroupElement& x,
                                           const GroupElement& y,
                                           SchreierRange range = SchreierRange::abelianization);

// Shortest word w over the tuple's entries (positive letters only) with
// evaluate_word(w, g, t) = target, by breadth-first search in the Cayley
// graph. Every call re-checks its own answer.
Word express_in_generators(const Group& g, const Tuple& t, const GroupElement& target);

// Same search over an arbitrary alphabet; returns alphabet indices.
std::vector<int> express_over_alphabet(const Group& g,
                                       const std::vector<GroupElement>& alphabet,
                                       const GroupElement& target);

// Finite groups only: re-realize any backend as an explicit multiplication
// table (labels are the element strings of the source backend).
Group to_cayley_table(const Group& g);

// Quotient of a finite group by a normal subgroup, as a table group, together
// with the projection.
struct QuotientGroup {
  Group quotient;
  std::function<GroupElement(const GroupElement&)> project;
};
QuotientGroup quotient_by(const Group& g, const Subgroup& normal);

}  // namespace gentuple
