#pragma once

#include <cstddef>
#include <vector>

#include "rank2/mat2.hpp"
#include "rank2/scheme.hpp"
#include "rank2/seq.hpp"

namespace rank2::oracle {

// Independent brute-force checkers. They deliberately share no code with the
// reduction in decide(): only eta-products, matrix orders, prefix checks and
// set-based breadth-first search over the groupoid semantics.

// Definition-level decision. Reducible branch: all off-diagonals zero and the
// (rho_i rho_j)^2 walk closes. Irreducible cycles: the loop matrix has finite
// order h and the universal cover carries an A+ structure, i.e. its
// characteristic sequence is d^2 with d the first h|A|/2 entries of the
// periodic extension (for odd h this forces central symmetry). Chains decide
// on their palindromic double cover.
bool decide_bruteforce(const CartanScheme2& scheme);

// Filters positive compositions of 3(n-2) into n parts through is_in_Aplus;
// sound because every A+ sequence has that entry sum. Supported for 3 <= n <= 12.
std::vector<Seq> enumerate_aplus_bruteforce(std::size_t n);

struct BFSReport {
  std::size_t states = 0;      // distinct (object, matrix) pairs reached
  std::size_t end_order = 0;   // states at the base object = |End(a)|
  bool c3_ok = true;           // no two distinct objects share a word image
  bool end_all_even = true;    // every End(a) element has determinant 1
  bool budget_exceeded = false;
};

// Breadth-first search over morphism words from (object 0, identity); state
// counts are only meaningful when the budget was not exceeded.
BFSReport groupoid_bfs(const CartanScheme2& scheme, std::size_t cap);

// 24|A| + 1 covers every finite case (h <= 12), so exceeding it certifies an
// infinite groupoid for test purposes.
std::size_t default_cap(const CartanScheme2& scheme);

// Naive power iteration, the cross-check for the trace classification.
OrderResult matrix_order_by_iteration(const Mat2& m, int max_power = 13);

}  // namespace rank2::oracle
