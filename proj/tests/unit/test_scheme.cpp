#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <set>

#include "rank2/aplus.hpp"
#include "rank2/scheme.hpp"

using namespace rank2;

TEST_CASE("cycle construction") {
  const CartanScheme2 s = cycle_from_char_seq({5, 1, 2, 2});
  CHECK(s.object_count() == 4);
  const ObjectTable t = materialize(s);
  // object a_1 has off-diagonals (-c_1, -c_4), object a_2 has (-c_1, -c_2)
  CHECK(t.cartan[0] == CartanMatrix2{2, -5, -2, 2});
  CHECK(t.cartan[1] == CartanMatrix2{2, -5, -1, 2});
  CHECK(t.cartan[2] == CartanMatrix2{2, -2, -1, 2});
  CHECK(t.cartan[3] == CartanMatrix2{2, -2, -2, 2});
  CHECK_THROWS_AS(cycle_from_char_seq({1, 2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(cycle_from_char_seq({1, -2}), std::invalid_argument);
}

TEST_CASE("two-object cycles and all-ones matrices") {
  const CartanScheme2 s = cycle_from_char_seq({1, 1});
  const ObjectTable t = materialize(s);
  CHECK(t.count == 2);
  CHECK(t.cartan[0] == CartanMatrix2{2, -1, -1, 2});
  CHECK(t.cartan[1] == CartanMatrix2{2, -1, -1, 2});
  CHECK(t.rho[0] == std::vector<std::size_t>{1, 0});
  CHECK(t.rho[1] == std::vector<std::size_t>{1, 0});

  const CartanScheme2 zero = cycle_from_char_seq({0, 0});
  for (const CartanMatrix2& cm : materialize(zero).cartan)
    CHECK(cm == CartanMatrix2{2, 0, 0, 2});
}

TEST_CASE("chain construction") {
  SUBCASE("one object") {
    const CartanScheme2 s = chain_from_spine({1, 1});
    CHECK(s.object_count() == 1);
    const ObjectTable t = materialize(s);
    CHECK(t.cartan[0] == CartanMatrix2{2, -1, -1, 2});
    CHECK(t.rho[0][0] == 0);
    CHECK(t.rho[1][0] == 0);
  }
  SUBCASE("two objects share the spine middle") {
    const CartanScheme2 s = chain_from_spine({1, 2, 1});
    const ObjectTable t = materialize(s);
    CHECK(t.count == 2);
    CHECK(t.cartan[0] == CartanMatrix2{2, -1, -2, 2});
    CHECK(t.cartan[1] == CartanMatrix2{2, -1, -2, 2});
    CHECK(t.rho[0] == std::vector<std::size_t>{0, 1});  // label 0 fixes both ends
    CHECK(t.rho[1] == std::vector<std::size_t>{1, 0});
  }
  SUBCASE("entry -5 realized on two objects") {
    const CartanScheme2 s = chain_from_spine({3, 1, 5});
    const ObjectTable t = materialize(s);
    CHECK(t.cartan[0] == CartanMatrix2{2, -3, -1, 2});
    CHECK(t.cartan[1] == CartanMatrix2{2, -5, -1, 2});
  }
  CHECK_THROWS_AS(chain_from_spine({1}), std::invalid_argument);
}

TEST_CASE("characteristic sequences under reference changes") {
  const CartanScheme2 s = cycle_from_char_seq({5, 1, 2, 2});
  CHECK(char_seq(s, 0, 0) == Seq{5, 1, 2, 2});
  CHECK(char_seq(s, 1, 0) == Seq{2, 2, 1, 5});
  CHECK(char_seq(s, 0, 1) == Seq{5, 2, 2, 1});  // base moved to rho_0(a_1)
  CHECK_THROWS_AS(char_seq(chain_from_spine({1, 1}), 0, 0), std::invalid_argument);
}

TEST_CASE("reference pairs sweep the dihedral orbit") {
  for (const Seq& seq : {Seq{5, 1, 2, 2}, Seq{1, 2, 1, 2}, Seq{3, 1, 4, 1, 5, 1}}) {
    const CartanScheme2 s = cycle_from_char_seq(seq);
    std::set<Seq> read;
    for (int label = 0; label < 2; ++label)
      for (std::size_t a = 0; a < s.object_count(); ++a)
        read.insert(char_seq(s, label, a));
    std::set<Seq> orbit;
    for (std::size_t r = 0; r < seq.size(); ++r) {
      orbit.insert(rotated(seq, r));
      orbit.insert(rotated(reversed(seq), r));
    }
    CHECK(read == orbit);
  }
}

TEST_CASE("central symmetry") {
  CHECK(is_centrally_symmetric(cycle_from_char_seq({3, 1, 3, 1})));
  CHECK_FALSE(is_centrally_symmetric(cycle_from_char_seq({5, 1, 2, 2})));
  CHECK(is_centrally_symmetric(cycle_from_char_seq({1, 2, 1, 2})));
  CHECK(half_seq(cycle_from_char_seq({3, 1, 3, 1})) == Seq{3, 1});
  // independence of the reference pair
  const CartanScheme2 s = cycle_from_char_seq({2, 1, 3, 2, 1, 3});
  for (int label = 0; label < 2; ++label)
    for (std::size_t a = 0; a < 6; ++a)
      CHECK(is_centrally_symmetric(cycle_from_char_seq(char_seq(s, label, a))));
}

TEST_CASE("validate") {
  CHECK(validate(cycle_from_char_seq({1, 1, 1, 1})).ok());
  CHECK_FALSE(validate(cycle_from_char_seq({1, 1, 1, 1})).mixed_zero);

  const CartanScheme2 negative{DiagramKind::Cycle, {1, -2}};
  const ValidationReport neg_rep = validate(negative);
  CHECK_FALSE(neg_rep.ok());
  CHECK(neg_rep.violations.front().find("(M1)") != std::string::npos);

  const ValidationReport mixed = validate(cycle_from_char_seq({0, 1, 0, 1}));
  CHECK(mixed.ok());
  CHECK(mixed.mixed_zero);

  const ValidationReport odd = validate(CartanScheme2{DiagramKind::Cycle, {1, 1, 1}});
  CHECK_FALSE(odd.ok());

  // every constructible scheme without mixed zeros validates cleanly
  for (const Seq& seq : {Seq{0, 0}, Seq{7, 7, 7, 7}, Seq{1, 2, 3, 4, 5, 6}})
    CHECK(validate(cycle_from_char_seq(seq)).ok());
  for (const Seq& spine : {Seq{0, 0, 0}, Seq{3, 1, 5}, Seq{2, 2, 2, 2, 2}})
    CHECK(validate(chain_from_spine(spine)).ok());
}

TEST_CASE("equivalence") {
  CHECK(equivalent(cycle_from_char_seq({5, 1, 2, 2}), cycle_from_char_seq({2, 2, 1, 5})));
  CHECK(equivalent(cycle_from_char_seq({1, 2, 1, 2}), cycle_from_char_seq({2, 1, 2, 1})));
  CHECK_FALSE(equivalent(cycle_from_char_seq({1, 1, 1, 1}), chain_from_spine({1, 1})));
  CHECK(equivalent(chain_from_spine({3, 1, 5}), chain_from_spine({5, 1, 3})));
  CHECK_FALSE(equivalent(chain_from_spine({3, 1, 5}), chain_from_spine({3, 5, 1})));

  SUBCASE("equivalence relation spot checks") {
    const CartanScheme2 reps[] = {cycle_from_char_seq({5, 1, 2, 2}),
                                  cycle_from_char_seq({2, 1, 5, 2}),
                                  cycle_from_char_seq({2, 2, 1, 5}),
                                  cycle_from_char_seq({1, 2, 1, 2})};
    for (const auto& a : reps) CHECK(equivalent(a, a));
    for (const auto& a : reps)
      for (const auto& b : reps) CHECK(equivalent(a, b) == equivalent(b, a));
    for (const auto& a : reps)
      for (const auto& b : reps)
        for (const auto& c : reps)
          if (equivalent(a, b) && equivalent(b, c)) CHECK(equivalent(a, c));
  }
}

TEST_CASE("round trip through the base reference pair") {
  for (const Seq& seq : {Seq{5, 1, 2, 2}, Seq{1, 1}, Seq{4, 4, 4, 4, 4, 4}})
    CHECK(char_seq(cycle_from_char_seq(seq), 0, 0) == seq);
}

TEST_CASE("scheme formatting") {
  CHECK(scheme_to_string(cycle_from_char_seq({3, 1, 3, 1})) == "(3,1)^2");
  CHECK(scheme_to_string(cycle_from_char_seq({5, 1, 2, 2})) == "(5,1,2,2)");
  CHECK(scheme_to_string(chain_from_spine({1, 2, 1})) == "chain(1,2,1)");
}
