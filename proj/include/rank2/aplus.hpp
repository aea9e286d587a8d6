#pragma once

#include <cstddef>
#include <vector>

#include "rank2/mat2.hpp"
#include "rank2/seq.hpp"

namespace rank2 {

// The sequence calculus behind rank-two root systems: sequences whose
// eta-product is -identity, the positive subclass A+, the contraction /
// expansion moves, dihedral normal forms and the reduction to (1,1,1).

// s is in A: n >= 1 and eta(c_1)...eta(c_n) = -id.
bool is_in_A(const Seq& s);

// s is in A+: s in A, all entries >= 1, and every proper prefix product has a
// nonnegative first column.
bool is_in_Aplus(const Seq& s);

// Removes the 1 at cyclic position pos and decrements both cyclic neighbours.
// Requires n >= 3 and s[pos] == 1. Membership in A is preserved in both
// directions; membership in A+ iff both neighbours were >= 2.
Seq contract(const Seq& s, std::size_t pos);

// Inserts a 1 into the cyclic gap after position gap and increments the two
// adjacent entries; inverse of contract at the inserted position. Requires n >= 2.
Seq expand(const Seq& s, std::size_t gap);

// Lexicographic minimum over all rotations of s and of reversed s. Two
// sequences are dihedrally equivalent iff their normal forms coincide.
Seq dihedral_normal_form(const Seq& s);

struct MoveStep {
  std::size_t rotation = 0;  // applied before the contraction
  bool reflected = false;
  std::size_t position = 0;  // contraction position in the adjusted sequence
  Seq before;                // sequence after rotation/reflection, before contraction
  Seq after;
};

struct MoveCertificate {
  Seq initial;
  std::vector<MoveStep> steps;
};

// Reduces an A+ sequence to (1,1,1) by n-3 contractions, each at the smallest
// cyclic index holding a 1 with both neighbours >= 2. Every intermediate stays
// in A+. Requires is_in_Aplus(s).
MoveCertificate reduce_certificate(const Seq& s);

// Replays a certificate step by step; throws std::runtime_error on the first
// mismatch with the recorded intermediates or a final state other than (1,1,1).
void replay(const MoveCertificate& cert);

// All dihedral classes of A+ sequences of length n (n >= 3), generated by
// breadth-first expansion from (1,1,1); returned as sorted normal forms.
std::vector<Seq> enumerate_aplus(std::size_t n);

}  // namespace rank2
