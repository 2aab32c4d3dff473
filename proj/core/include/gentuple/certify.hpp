#pragma once

#include <utility>

#include "gentuple/abelian_reduce.hpp"
#include "gentuple/explorer.hpp"
#include "gentuple/moves.hpp"
#include "gentuple/structure.hpp"

namespace gentuple {

// Nielsen certificate from a generating 2k-tuple of the Heisenberg group H_k
// to the standard tuple of unit-coordinate generators. The projected tuple is
// row-reduced over Z^{2k} (moves replayed on the Heisenberg entries), leaving
// basis vectors with residual central coordinates, which the paired
// left/right clearing moves remove one unit at a time.
Certificate heisenberg_canonicalize(const Group& g, const Tuple& t);

// AC certificate from a generating pair of a finite nilpotent-like group
// (every maximal subgroup normal, rank 2) to the given basis pair. Requires
// the abelianized pairs to be AC equivalent; otherwise no certificate exists
// and no_certificate_error is thrown. Each recipe step is replay-validated
// and patched by a breadth-first path segment on failure (flagged in the
// step metadata).
Certificate ac_normalize_2gen_nilpotent(const Group& g, const Tuple& t,
                                        const std::pair<GroupElement, GroupElement>& basis);

// Nielsen certificate from a generating n-tuple (n >= rank+1) to
// (x_1,...,x_d, 1,...,1): a path on the Frattini quotient is lifted, then the
// leftover Frattini entries are expressed as words in the leading entries and
// cleared slot by slot.
Certificate frattini_lift(const Group& g, int n, const Tuple& t);

// Extends an n-tuple certificate to an (n+1)-tuple one: AC certificate from
// extended_source to (target of cert, 1). Requires every maximal subgroup of
// g to be normal.
Certificate stabilize_certificate(const Group& g, const Certificate& cert,
                                  const Tuple& extended_source);

// Parameters of the central automorphism
//   x -> x [y,x,x]^{lambda1} [y,x,y]^{lambda2}
//   y -> y [y,x,x]^{mu1}     [y,x,y]^{mu2}
// of the rank-2 free nilpotent group of class 3.
struct CentralAutParams {
  long long lambda1 = 0, lambda2 = 0, mu1 = 0, mu2 = 0;
};

// The stated tameness criterion: lambda1 == mu2 and lambda2 == mu1 == 0.
// (Only this direction of the criterion is used.)
bool is_tame_central(const CentralAutParams& p);

// k-th power of the twist x -> x[y,x,x], y -> y, applied to x and returned in
// Mal'cev coordinates; computed by iterating the substitution through the
// collection arithmetic. Equals x [y,x,x]^k.
GroupElement central_twist_power(long long k);

// The pair (x y x y^-1 x^-1 y^-1, x^l y^-(l+1)) as reduced rank-2 words.
std::pair<Word, Word> akbulut_kirby_pair(long long l);

}  // namespace gentuple
