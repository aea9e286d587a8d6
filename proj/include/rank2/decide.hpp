#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rank2/roots.hpp"
#include "rank2/scheme.hpp"

namespace rank2 {

// The decision procedure: whether a connected rank-two Cartan scheme admits a
// finite root system, together with a replayable reduction certificate and the
// invariants h, q, |R+| tied by h(6|A| - q) = 24.

enum class StepKind {
  ChainToCycle,     // replace a chain by its double covering cycle
  NonCSDouble,      // replace a non-centrally-symmetric cycle by its double
  ZeroCase,         // off-diagonal zeros present: reducible or obstructed
  AllGeTwo,         // all half-sequence entries >= 2: not finite
  TripleOnes,       // adjacent 1s in the half: finite iff |A| = 6, half (1,1,1)
  BaseFour,         // |A| = 4, half (c,1) with c >= 2: finite iff c in {2,3}
  Contract,         // contract the half at an isolated 1; |A| drops by 2
  SmallCaseOracle,  // |A| = 2: universal-cover membership test
};

const char* step_name(StepKind kind);

struct DecisionStep {
  StepKind kind = StepKind::ZeroCase;
  CartanScheme2 before;
  CartanScheme2 after;  // equals before on terminal steps
  std::optional<std::size_t> position;  // Contract: index of the removed 1 in the half
  std::optional<std::int64_t> entry;    // BaseFour: the entry tested against {2,3}
};

struct Stats {
  std::int64_t q = 0;               // minus the sum of all off-diagonal Cartan entries
  std::int64_t h = 0;               // |End(a)|
  std::int64_t positive_roots = 0;  // |R^a_+| = 12|A| / (6|A| - q)

  friend bool operator==(const Stats&, const Stats&) = default;
};

struct Decision {
  bool finite = false;
  bool irreducible = false;
  std::vector<DecisionStep> certificate;
  std::optional<Stats> stats;
};

// Requires validate(scheme).ok(); mixed-zero schemes are allowed and decide
// false immediately.
Decision decide(const CartanScheme2& scheme);

// Invariants of a finite-deciding scheme. Cross-checks h against the End(a)
// order, the m-classification and the entry bounds; a failed check throws
// std::logic_error (it signals a bug, never valid data).
Stats stats(const CartanScheme2& scheme, const Decision& decision);

// The extremal pair for n >= 1: a 2n-object cycle and the n-object chain it
// double-covers, both finite, both with Cartan entry -(2n+1) (the sharp bound).
std::pair<CartanScheme2, CartanScheme2> extremal_scheme(std::size_t n);

// Replays every certificate step from the input scheme and recomputes every
// terminal verdict; throws std::runtime_error on the first mismatch.
void replay_certificate(const CartanScheme2& scheme, const Decision& decision);

// The finite root system of a finite-deciding scheme: the trivial system in
// the reducible case, otherwise built on the universal cover and transported
// down. Throws std::domain_error when the scheme decides not finite.
RootSystem2 realize_root_system(const CartanScheme2& scheme);

}  // namespace rank2
