#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gentuple/abelian.hpp"
#include "gentuple/errors.hpp"
#include "gentuple/ints.hpp"
#include "gentuple/word.hpp"

namespace gentuple {

enum class GroupKind { cayley_table, abelian, heisenberg, free_nilpotent };

// Parsed construction data for one group backend. Validation happens in
// Group::from_spec, not here.
struct GroupSpec {
  GroupKind kind = GroupKind::abelian;

  // cayley_table
  std::vector<std::string> labels;
  std::vector<std::vector<int>> table;          // table[a][b] = index of a*b
  std::vector<std::string> generator_labels;

  // abelian: Z_{m1} x ... x Z_{mr} x Z^s
  std::vector<Int> torsion;
  int free_rank = 0;

  // heisenberg: coordinates (x_1..x_k, y_1..y_k, z), optionally mod m
  int heis_k = 1;
  std::optional<Int> modulus;

  // free_nilpotent: rank 2, class c in {1,2,3}
  int fn_rank = 2;
  int fn_class = 2;
};

// An element in canonical coordinates. The meaning of the coordinate vector
// depends on the owning group's backend:
//   cayley_table   [table index]
//   abelian        r+s coordinates, torsion entries reduced into [0, mi)
//   heisenberg     (x_1..x_k, y_1..y_k, z), reduced into [0, m) when modular
//   free_nilpotent Mal'cev exponents (a, b, e, f, g) in the ordered basis
//                  x, y, [y,x], [y,x,x], [y,x,y]; unused tail is kept zero
struct GroupElement {
  std::vector<Int> coords;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  bool operator<(const GroupElement& o) const;  // coordinate-lexicographic
};

class GroupImpl;
struct Abelianization;

// Immutable shared handle to a validated group. Cheap to copy; all element
// operations are const and safe for concurrent use.
class Group {
 public:
  Group() = default;
  static Group from_spec(const GroupSpec& spec);

  bool valid() const { return impl_ != nullptr; }
  GroupKind kind() const;
  const GroupSpec& spec() const;

  GroupElement identity() const;
  GroupElement mul(const GroupElement& a, const GroupElement& b) const;
  GroupElement inv(const GroupElement& a) const;
  GroupElement pow(const GroupElement& a, const Int& e) const;
  GroupElement conj(const GroupElement& a, const GroupElement& s) const;  // s^-1 a s
  GroupElement commutator(const GroupElement& a, const GroupElement& b) const;

  // Brings raw coordinates into canonical form (reduces modular entries,
  // zeroes unused Mal'cev coordinates, checks the shape).
  GroupElement canonicalize(std::vector<Int> coords) const;

  // Least k >= 1 with a^k = 1, or nullopt for infinite order.
  std::optional<Int> element_order(const GroupElement& a) const;

  bool is_finite() const;
  Int order() const;                       // finite backends only
  std::uint64_t element_count() const;     // finite backends only
  GroupElement element_at(std::uint64_t index) const;
  std::uint64_t element_index(const GroupElement& a) const;

  // Canonical generating tuple: listed generators (cayley), the standard
  // basis (abelian, heisenberg), or x, y (free nilpotent).
  std::vector<GroupElement> distinguished_generators() const;

  std::string element_to_string(const GroupElement& a) const;
  GroupElement element_from_label(const std::string& label) const;  // cayley only

  // Invariant-factor form of G/[G,G] together with the projection onto its
  // coordinates. Computed once per group and cached.
  const Abelianization& abelianization() const;

  // Identity of the underlying shared state; used to detect backend mixups.
  const void* id() const { return impl_.get(); }
  friend bool operator==(const Group& a, const Group& b) { return a.impl_ == b.impl_; }

 private:
  std::shared_ptr<const GroupImpl> impl_;
  const GroupImpl& impl() const;
};

// Invariant-factor form of G/[G,G] together with the projection onto its
// coordinates.
struct Abelianization {
  AbelianForm form;
  Group ab_group;  // abelian backend realizing `form`
  std::function<GroupElement(const GroupElement&)> project;
};

// An ordered tuple of elements of one group.
struct Tuple {
  Group group;
  std::vector<GroupElement> entries;

  int size() const { return (int)entries.size(); }
  friend bool operator==(const Tuple& a, const Tuple& b) {
    return a.group == b.group && a.entries == b.entries;
  }
  bool lex_less(const Tuple& o) const;
};

// Image of w under the homomorphism F_n -> G sending x_i to assignment[i-1].
GroupElement evaluate_word(const Word& w, const Group& g,
                           const std::vector<GroupElement>& assignment);

std::string tuple_to_string(const Tuple& t);

}  // namespace gentuple
