#pragma once

#include <vector>

#include "gentuple/group.hpp"

namespace gentuple {

// Construction helpers for the groups used throughout the test corpus.
// Table-backed groups come with distinguished generators and stable label
// schemes; element orderings are part of the contract (canonical
// representatives depend on them).

Group make_cyclic(int n);                       // abelian backend Z_n
Group make_abelian(std::vector<Int> torsion, int free_rank = 0);
Group make_heisenberg(int k);                   // integer H_k
Group make_modular_heisenberg(int k, Int modulus);
Group make_free_nilpotent(int nil_class);       // rank 2, class 1..3

// Table-backed groups.
Group make_quaternion();                        // labels 1,-1,i,-i,j,-j,k,-k
Group make_dihedral(int n);                     // order 2n, labels r0..,s-prefixed
Group make_symmetric(int n);                    // n <= 5, one-line labels
Group make_alternating(int n);                  // n <= 5

// A named corpus of small finite groups (one entry per group) for the
// characterization harnesses.
struct CorpusEntry {
  std::string name;
  Group group;
};
std::vector<CorpusEntry> standard_corpus();

}  // namespace gentuple
