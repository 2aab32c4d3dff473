#pragma once

#include "gentuple/abelian.hpp"
#include "gentuple/moves.hpp"

namespace gentuple {

// Unordered residue pair {d, m1 - d} mod the first invariant factor. The
// determinant of the exponent matrix is preserved by R/L moves and negated
// by I moves, so the pair is constant on Nielsen components. It separates
// them on the validated corpus; outside that range treat it as advisory.
struct DetInvariant {
  Int low, high;  // low <= high, low + high == m1 (or low == high for m1 = 2)

  friend bool operator==(const DetInvariant&, const DetInvariant&) = default;
};

// Requires: no free part, tuple length == rank == torsion count, m1 >= 3,
// and a generating tuple.
DetInvariant nielsen_det_invariant(const AbelianForm& a, const Tuple& t);

// Constructive Nielsen certificate from a generating tuple over an abelian
// backend to the canonical tuple (basis vectors padded with identities), or,
// when n == rank and m1 >= 3, to the canonical representative of its
// component (basis with the last torsion entry scaled to match the
// determinant class). Row reduction is realized move by move; a residual
// torsion correction falls back to breadth-first search when the recipe
// cannot finish (flagged in the certificate steps).
Certificate abelian_reduce(const AbelianForm& a, const Tuple& t);

// Integer determinant (Bareiss), for square matrices.
Int determinant(const IntMatrix& m);

}  // namespace gentuple
