#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "rank2/mat2.hpp"
#include "rank2/roots.hpp"
#include "rank2/scheme.hpp"
#include "rank2/seq.hpp"

namespace rank2 {

// Coverings of rank-two schemes: the covering map preserves Cartan matrices
// and commutes with the reflections; all fibers have the same size.
struct CoveringRelation {
  CartanScheme2 base;
  CartanScheme2 cover;
  std::size_t fold = 1;
  std::vector<std::size_t> object_map;  // cover object -> base object
};

// Full-cycle eta-product L = eta(c_{2n}) eta(c_{2n-1}) ... eta(c_1). The loop
// generator of End(a_1) is tau L tau, so orders agree.
Mat2 loop_matrix(const CartanScheme2& cycle);

// |End(a)| for a cycle scheme = order of the loop matrix.
OrderResult end_order(const CartanScheme2& cycle);

// Cover of a cycle with the characteristic sequence repeated k times; the
// object map reduces indices mod |A|.
CoveringRelation k_fold_cover(const CartanScheme2& cycle, std::size_t k);

// The unique double covering of a chain with a cycle diagram: spine
// (c_1,...,c_{N+1}) lifts to the palindromic characteristic sequence
// (c_1,...,c_N,c_{N+1},c_N,...,c_2).
CoveringRelation chain_double_cover(const CartanScheme2& chain);

// The simply connected h-fold cover, h = |End(a)|. Throws std::domain_error
// when End(a) is infinite (no finite root system exists then).
CoveringRelation universal_cover(const CartanScheme2& cycle);

struct QuotientReport {
  struct ChainQuotient {
    int label = 0;
    std::size_t object = 0;
    Seq spine;
  };
  // Reference pairs whose characteristic sequence reads palindromically as
  // (c_1,...,c_n,c_{n+1},c_n,...,c_2), each with the chain spine it covers.
  std::vector<ChainQuotient> chain_quotients;
  std::vector<Seq> chain_spines;  // deduplicated, sorted
  // Set when the scheme is the double cover of a non-centrally-symmetric
  // cycle: |A| in 4N, sequence = d^2 with d not itself a doubled quarter.
  std::optional<Seq> half_quotient;
};

QuotientReport detect_quotients(const CartanScheme2& cycle);

enum class TransportDirection { Up, Down };

// Up: R'^{a'} = R^{pi(a')} copies root sets along the covering map.
// Down: R^a is the intersection of R'^{a'} over the fiber of a.
RootSystem2 transport_roots(const CoveringRelation& rel, const RootSystem2& roots,
                            TransportDirection direction);

}  // namespace rank2
