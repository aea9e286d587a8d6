#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rank2/mat2.hpp"
#include "rank2/scheme.hpp"
#include "rank2/seq.hpp"

namespace rank2 {

using Root = Vec2;

// A root system attached to a scheme: one sorted set of integer vectors per
// object, coordinates in the basis (alpha_1, alpha_2).
struct RootSystem2 {
  CartanScheme2 scheme;
  std::vector<std::vector<Root>> roots;

  friend bool operator==(const RootSystem2&, const RootSystem2&) = default;
};

// The simply connected root system attached to an A+ sequence d of length n:
// a cycle on 2n objects with characteristic sequence d^2, where the object
// starting at position r carries the +-orbit of the partial eta-products of
// the periodic extension of d applied to (1,0) (tau-twisted at even objects).
// Throws std::invalid_argument unless is_in_Aplus(d).
RootSystem2 build_root_system(const Seq& d);

// Reducible systems carry {+-alpha_1, +-alpha_2} at every object; this is the
// only shape compatible with all off-diagonal Cartan entries equal to zero.
RootSystem2 trivial_root_system(const CartanScheme2& scheme);

struct AxiomReport {
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

// Checks (R1), (R2) per object, (R3) along every edge with sigma_i^a rebuilt
// from the scheme, and (R4) by walking the diagram.
AxiomReport verify_axioms(const RootSystem2& rs);

// Reads the A+ sequence off the alternating reflection walk starting at
// (label, object). Requires a finite irreducible verified system; the walk of
// length 2n is checked to be n-periodic.
Seq phi(const RootSystem2& rs, int label, std::size_t object);

// The common value |R^a_+|; throws std::invalid_argument if objects disagree.
std::size_t positive_root_count(const RootSystem2& rs);

}  // namespace rank2
