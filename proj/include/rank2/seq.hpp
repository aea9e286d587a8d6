#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rank2 {

// Finite sequences of integers. Used both for the positive sequences of the
// A+ calculus and for characteristic sequences / chain spines, which may
// contain zeros; the membership predicates keep the two roles apart.
using Seq = std::vector<std::int64_t>;

Seq rotated(const Seq& s, std::size_t offset);
Seq reversed(const Seq& s);

// First `count` entries of the periodic extension of s.
Seq periodic_prefix(const Seq& s, std::size_t count);

// Renders "(1,2,3)".
std::string seq_to_string(const Seq& s);

}  // namespace rank2
