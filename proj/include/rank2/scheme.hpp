#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "rank2/mat2.hpp"
#include "rank2/seq.hpp"

namespace rank2 {

// Connected rank-two Cartan schemes. The object change diagram of a connected
// rank-two scheme is a chain or a cycle; cycles are stored by their
// characteristic sequence, chains by their spine. Objects and labels are
// 0-based throughout the library.

struct CartanMatrix2 {
  std::int64_t c11 = 2, c12 = 0, c21 = 0, c22 = 2;

  friend bool operator==(const CartanMatrix2&, const CartanMatrix2&) = default;
};

enum class DiagramKind { Cycle, Chain };

struct CartanScheme2 {
  DiagramKind kind = DiagramKind::Cycle;
  // Characteristic sequence (cycle, even length |A| >= 2) or spine
  // (chain, length N+1 for N objects).
  Seq seq;

  std::size_t object_count() const {
    return kind == DiagramKind::Cycle ? seq.size() : seq.size() - 1;
  }

  friend bool operator==(const CartanScheme2&, const CartanScheme2&) = default;
};

// Validating constructors; throw std::invalid_argument on malformed data
// (odd cycle length, length < 2, negative entries).
CartanScheme2 cycle_from_char_seq(Seq char_seq);
CartanScheme2 chain_from_spine(Seq spine);

// Explicit object tables: reflection maps rho[0], rho[1] and the Cartan
// matrix at each object.
struct ObjectTable {
  std::size_t count = 0;
  std::array<std::vector<std::size_t>, 2> rho;
  std::vector<CartanMatrix2> cartan;
};

ObjectTable materialize(const CartanScheme2& scheme);

// sigma_i^a as a matrix acting on column vectors: alpha_j |-> alpha_j - c_ij alpha_i.
Mat2 reflection(const CartanMatrix2& cm, int label);

// Characteristic sequence of a cycle with respect to (label, object), read off
// the alternating reflection walk. The stored sequence is char_seq(s, 0, 0).
Seq char_seq(const CartanScheme2& scheme, int label, std::size_t object);

// c_k = c_{k + |A|/2} for all k; independent of the reference pair.
bool is_centrally_symmetric(const CartanScheme2& scheme);

// First half of the characteristic sequence of a centrally symmetric cycle.
Seq half_seq(const CartanScheme2& scheme);

struct ValidationReport {
  std::vector<std::string> violations;
  // Zero and nonzero off-diagonal entries mixed in one scheme: structurally a
  // scheme document, but it violates (M2) somewhere and admits no root system.
  bool mixed_zero = false;

  bool ok() const { return violations.empty(); }
};

// Checks (M1), (M2) per object, (C1), (C2) across the diagram, connectedness,
// and the mixed-zero obstruction.
ValidationReport validate(const CartanScheme2& scheme);

// Scheme equivalence: for cycles, dihedral equivalence of characteristic
// sequences (rotation = moving the base object, reversal = swapping labels);
// for chains, spine equality up to reversal.
bool equivalent(const CartanScheme2& s1, const CartanScheme2& s2);

// "(3,1)^2" for centrally symmetric cycles, "(5,1,2,2)" for other cycles,
// "chain(1,2,1)" for chains.
std::string scheme_to_string(const CartanScheme2& scheme);

}  // namespace rank2
