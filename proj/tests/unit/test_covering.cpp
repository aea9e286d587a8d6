#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <set>

#include "rank2/aplus.hpp"
#include "rank2/covering.hpp"
#include "rank2/decide.hpp"
#include "rank2/oracle.hpp"

using namespace rank2;

namespace {

// Covering laws: Cartan matrices agree along the map, the map commutes with
// both reflections, and all fibers have size `fold`.
void check_covering_laws(const CoveringRelation& rel) {
  const ObjectTable base = materialize(rel.base);
  const ObjectTable cover = materialize(rel.cover);
  REQUIRE(rel.object_map.size() == cover.count);
  std::vector<std::size_t> fiber(base.count, 0);
  for (std::size_t m = 0; m < cover.count; ++m) {
    const std::size_t b = rel.object_map[m];
    REQUIRE(b < base.count);
    ++fiber[b];
    CHECK(cover.cartan[m] == base.cartan[b]);
    for (int label = 0; label < 2; ++label)
      CHECK(rel.object_map[cover.rho[label][m]] == base.rho[label][b]);
  }
  for (std::size_t count : fiber) CHECK(count == rel.fold);
}

}  // namespace

TEST_CASE("loop matrices") {
  CHECK(loop_matrix(cycle_from_char_seq({1, 1})) == Mat2{0, -1, 1, -1});
  CHECK(trace(loop_matrix(cycle_from_char_seq({1, 2}))) == 0);
  const Mat2 m = loop_matrix(cycle_from_char_seq({2, 2}));
  CHECK(trace(m) == 2);
  CHECK(m != Mat2::identity());
  CHECK_THROWS_AS(loop_matrix(chain_from_spine({1, 1})), std::invalid_argument);
}

TEST_CASE("end orders") {
  CHECK(end_order(cycle_from_char_seq({1, 1})) == OrderResult::finite(3));
  CHECK(end_order(cycle_from_char_seq({1, 2})) == OrderResult::finite(4));
  CHECK(end_order(cycle_from_char_seq({2, 2})) == OrderResult::infinite());
}

TEST_CASE("k-fold covers") {
  const CartanScheme2 base = cycle_from_char_seq({5, 1, 2, 2});
  const CoveringRelation rel = k_fold_cover(base, 2);
  CHECK(rel.cover == cycle_from_char_seq({5, 1, 2, 2, 5, 1, 2, 2}));
  CHECK(rel.fold == 2);
  check_covering_laws(rel);

  const CoveringRelation identity = k_fold_cover(cycle_from_char_seq({1, 1}), 1);
  CHECK(identity.cover == identity.base);
  check_covering_laws(identity);

  const CoveringRelation triple = k_fold_cover(cycle_from_char_seq({1, 1}), 3);
  CHECK(triple.cover == cycle_from_char_seq({1, 1, 1, 1, 1, 1}));
  check_covering_laws(triple);

  CHECK_THROWS_AS(k_fold_cover(base, 0), std::invalid_argument);
}

TEST_CASE("chain double covers") {
  CHECK(chain_double_cover(chain_from_spine({1, 1})).cover == cycle_from_char_seq({1, 1}));
  CHECK(chain_double_cover(chain_from_spine({1, 2, 1})).cover ==
        cycle_from_char_seq({1, 2, 1, 2}));
  CHECK(chain_double_cover(chain_from_spine({3, 1, 5})).cover ==
        cycle_from_char_seq({3, 1, 5, 1}));
  for (const Seq& spine : {Seq{1, 1}, Seq{1, 2, 1}, Seq{3, 1, 5}, Seq{2, 1, 3, 4, 1}})
    check_covering_laws(chain_double_cover(chain_from_spine(spine)));
  CHECK_THROWS_AS(chain_double_cover(cycle_from_char_seq({1, 1})), std::invalid_argument);
}

TEST_CASE("universal covers") {
  const CoveringRelation a2 = universal_cover(cycle_from_char_seq({1, 1}));
  CHECK(a2.cover == cycle_from_char_seq({1, 1, 1, 1, 1, 1}));
  CHECK(a2.fold == 3);
  CHECK(end_order(a2.cover) == OrderResult::finite(1));
  check_covering_laws(a2);

  const CoveringRelation b2 = universal_cover(cycle_from_char_seq({1, 2}));
  CHECK(b2.cover == cycle_from_char_seq({1, 2, 1, 2, 1, 2, 1, 2}));
  CHECK(end_order(b2.cover) == OrderResult::finite(1));

  CHECK_THROWS_AS(universal_cover(cycle_from_char_seq({2, 2})), std::domain_error);
}

TEST_CASE("cover end order follows the loop matrix power") {
  for (const Seq& seq : {Seq{1, 1}, Seq{1, 2}, Seq{5, 1, 2, 2}, Seq{2, 2}}) {
    const CartanScheme2 base = cycle_from_char_seq(seq);
    const Mat2 loop = loop_matrix(base);
    for (std::size_t k = 1; k <= 3; ++k) {
      Mat2 power = Mat2::identity();
      for (std::size_t t = 0; t < k; ++t) power = power * loop;
      CHECK(end_order(k_fold_cover(base, k).cover) == matrix_order(power));
    }
  }
}

TEST_CASE("quotient detection") {
  SUBCASE("(1,2,1,2) folds both ways") {
    const QuotientReport rep = detect_quotients(cycle_from_char_seq({1, 2, 1, 2}));
    CHECK(std::find(rep.chain_spines.begin(), rep.chain_spines.end(), Seq{1, 2, 1}) !=
          rep.chain_spines.end());
    REQUIRE(rep.half_quotient.has_value());
    CHECK(*rep.half_quotient == Seq{1, 2});
  }
  SUBCASE("(5,1,2,2) folds neither way") {
    const QuotientReport rep = detect_quotients(cycle_from_char_seq({5, 1, 2, 2}));
    CHECK(rep.chain_spines.empty());
    CHECK_FALSE(rep.half_quotient.has_value());
  }
  SUBCASE("(1,1,1,1) has only the chain quotient") {
    const QuotientReport rep = detect_quotients(cycle_from_char_seq({1, 1, 1, 1}));
    CHECK(rep.chain_spines == std::vector<Seq>{{1, 1, 1}});
    CHECK_FALSE(rep.half_quotient.has_value());
  }
  SUBCASE("chain quotient detection inverts chain_double_cover") {
    for (const Seq& spine : {Seq{1, 1}, Seq{1, 2, 1}, Seq{3, 1, 5}, Seq{2, 1, 3, 4, 1}}) {
      const CoveringRelation rel = chain_double_cover(chain_from_spine(spine));
      const QuotientReport rep = detect_quotients(rel.cover);
      bool found = false;
      for (const Seq& s : rep.chain_spines)
        found = found || s == spine || s == reversed(spine);
      CHECK(found);
    }
  }
}

TEST_CASE("root transport") {
  SUBCASE("upward copies along the fibers") {
    const CartanScheme2 base = cycle_from_char_seq({1, 1});
    const RootSystem2 down = realize_root_system(base);
    const CoveringRelation rel = k_fold_cover(base, 3);
    const RootSystem2 up = transport_roots(rel, down, TransportDirection::Up);
    CHECK(up.scheme == rel.cover);
    for (std::size_t m = 0; m < 6; ++m) CHECK(up.roots[m] == down.roots[m % 2]);
    CHECK(verify_axioms(up).ok());
    SUBCASE("down then up is a fixed point") {
      const RootSystem2 down2 = transport_roots(rel, up, TransportDirection::Down);
      CHECK(down2 == down);
      CHECK(transport_roots(rel, down2, TransportDirection::Up) == up);
    }
  }
  SUBCASE("downward intersection over a chain fiber") {
    const CoveringRelation rel = chain_double_cover(chain_from_spine({1, 2, 1}));
    const RootSystem2 cycle_rs = realize_root_system(rel.cover);
    const RootSystem2 chain_rs = transport_roots(rel, cycle_rs, TransportDirection::Down);
    CHECK(chain_rs.roots.size() == 2);
    CHECK(positive_root_count(chain_rs) == 4);
    CHECK(verify_axioms(chain_rs).ok());
  }
  SUBCASE("mismatched attachments are rejected") {
    const CoveringRelation rel = k_fold_cover(cycle_from_char_seq({1, 1}), 2);
    const RootSystem2 wrong = realize_root_system(cycle_from_char_seq({1, 2}));
    CHECK_THROWS_AS(transport_roots(rel, wrong, TransportDirection::Up), std::invalid_argument);
    CHECK_THROWS_AS(transport_roots(rel, wrong, TransportDirection::Down), std::invalid_argument);
  }
}

TEST_CASE("decide under coverings") {
  // Downward transport never needs (C3), so a finite cover forces a finite
  // base. Upward transport needs (C3) on the cover, which the k-fold
  // repetition satisfies exactly when k divides h; the 4-cycle (1,1,1,1)
  // over the A2 pair (h = 3, k = 2) is the standard failure.
  for (const Seq& seq : {Seq{1, 1}, Seq{1, 2}, Seq{1, 3}, Seq{2, 2}, Seq{5, 1, 2, 2},
                         Seq{5, 1, 2, 3}, Seq{3, 1, 3, 1}, Seq{1, 1, 1, 1}}) {
    const CartanScheme2 base = cycle_from_char_seq(seq);
    const Decision base_dec = decide(base);
    for (std::size_t k = 1; k <= 3; ++k) {
      const bool cover_finite = decide(k_fold_cover(base, k).cover).finite;
      if (cover_finite) CHECK(base_dec.finite);
      if (base_dec.finite) {
        const std::size_t h = static_cast<std::size_t>(base_dec.stats->h);
        if (h % k == 0) CHECK(cover_finite);
      }
    }
  }
  CHECK_FALSE(decide(cycle_from_char_seq({1, 1, 1, 1})).finite);
  // Chain double covers preserve the verdict in both directions.
  for (const Seq& spine : {Seq{1, 1}, Seq{1, 2}, Seq{3, 1, 5}, Seq{2, 2}, Seq{1, 2, 1}}) {
    const CartanScheme2 chain = chain_from_spine(spine);
    CHECK(decide(chain).finite == decide(chain_double_cover(chain).cover).finite);
  }
}

TEST_CASE("universal cover half-sequence matches the A+ criterion") {
  for (const Seq& seq : {Seq{1, 1}, Seq{1, 2}, Seq{1, 3}, Seq{3, 1, 3, 1}, Seq{5, 1, 2, 2},
                         Seq{1, 1, 1, 1}, Seq{2, 1, 2, 1, 1, 2, 1, 2}}) {
    const CartanScheme2 base = cycle_from_char_seq(seq);
    const OrderResult order = end_order(base);
    if (!order.is_finite()) {
      CHECK_FALSE(decide(base).finite);
      continue;
    }
    const CoveringRelation urel = universal_cover(base);
    const Seq d = periodic_prefix(seq, urel.cover.seq.size() / 2);
    const bool doubled_matches =
        urel.cover.seq == [&] {
          Seq twice = d;
          twice.insert(twice.end(), d.begin(), d.end());
          return twice;
        }();
    CHECK(decide(base).finite == (is_in_Aplus(d) && doubled_matches));
  }
}
