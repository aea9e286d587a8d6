#include <doctest.h>

#include <stdexcept>

#include <algorithm>

#include "rank2/aplus.hpp"
#include "rank2/covering.hpp"
#include "rank2/decide.hpp"
#include "rank2/roots.hpp"

using namespace rank2;

namespace {

std::vector<Root> positives(const RootSystem2& rs, std::size_t object) {
  std::vector<Root> out;
  for (const Root& r : rs.roots[object])
    if (r[0] >= 0 && r[1] >= 0) out.push_back(r);
  return out;
}

}  // namespace

TEST_CASE("build_root_system on (1,1,1)") {
  const RootSystem2 rs = build_root_system({1, 1, 1});
  CHECK(rs.scheme == cycle_from_char_seq({1, 1, 1, 1, 1, 1}));
  CHECK(rs.roots.size() == 6);
  CHECK(positives(rs, 0) == std::vector<Root>{{0, 1}, {1, 0}, {1, 1}});
  CHECK(positive_root_count(rs) == 3);
  CHECK(verify_axioms(rs).ok());
}

TEST_CASE("build_root_system on (1,2,1,2)") {
  const RootSystem2 rs = build_root_system({1, 2, 1, 2});
  CHECK(rs.roots.size() == 8);
  CHECK(positives(rs, 0) == std::vector<Root>{{0, 1}, {1, 0}, {1, 1}, {1, 2}});
  CHECK(positive_root_count(rs) == 4);
  CHECK(verify_axioms(rs).ok());
}

TEST_CASE("build_root_system rejects non-members") {
  CHECK_THROWS_AS(build_root_system({2, 2}), std::invalid_argument);
  CHECK_THROWS_AS(build_root_system({5, 1, 2, 2}), std::invalid_argument);
}

TEST_CASE("verify_axioms flags deliberate mutations") {
  SUBCASE("deleting -alpha_1 breaks (R1)/(R2)") {
    RootSystem2 rs = build_root_system({1, 1, 1});
    auto& roots = rs.roots[2];
    roots.erase(std::remove(roots.begin(), roots.end(), Root{-1, 0}), roots.end());
    const AxiomReport rep = verify_axioms(rs);
    CHECK_FALSE(rep.ok());
    bool r1 = false, r2 = false;
    for (const std::string& v : rep.violations) {
      r1 = r1 || v.find("(R1)") != std::string::npos;
      r2 = r2 || v.find("(R2)") != std::string::npos;
    }
    CHECK(r1);
    CHECK(r2);
  }
  SUBCASE("swapping in another object's roots breaks (R3)") {
    RootSystem2 rs = build_root_system(dihedral_normal_form({1, 3, 1, 2, 2}));
    REQUIRE(rs.roots[0] != rs.roots[2]);
    rs.roots[0] = rs.roots[2];
    const AxiomReport rep = verify_axioms(rs);
    CHECK_FALSE(rep.ok());
    bool r3 = false;
    for (const std::string& v : rep.violations)
      r3 = r3 || v.find("(R3)") != std::string::npos;
    CHECK(r3);
  }
}

TEST_CASE("phi recovers the defining sequence") {
  const Seq d{1, 2, 1, 2};
  const RootSystem2 rs = build_root_system(d);
  CHECK(phi(rs, 0, 0) == d);
  SUBCASE("label swap reverses") {
    for (std::size_t a = 0; a < rs.roots.size(); ++a)
      CHECK(phi(rs, 1, a) == reversed(phi(rs, 0, a)));
  }
  SUBCASE("base move rotates") {
    const ObjectTable t = materialize(rs.scheme);
    for (std::size_t a = 0; a < rs.roots.size(); ++a)
      CHECK(phi(rs, 1, t.rho[0][a]) == rotated(phi(rs, 0, a), 1));
  }
}

TEST_CASE("phi rejects reducible systems") {
  const RootSystem2 rs = trivial_root_system(cycle_from_char_seq({0, 0, 0, 0}));
  CHECK(verify_axioms(rs).ok());
  CHECK(positive_root_count(rs) == 2);
  CHECK_THROWS_AS(phi(rs, 0, 0), std::invalid_argument);
}

TEST_CASE("positive_root_count rejects uneven systems") {
  RootSystem2 rs = build_root_system({1, 1, 1});
  rs.roots[1].push_back(Root{2, 1});
  std::sort(rs.roots[1].begin(), rs.roots[1].end());
  CHECK_THROWS_AS(positive_root_count(rs), std::invalid_argument);
}

TEST_CASE("transported chain system keeps four positive roots") {
  // B2 on one chain object: universal cover of the 2-cycle (1,2), down twice.
  const RootSystem2 rs = realize_root_system(chain_from_spine({1, 2}));
  CHECK(rs.roots.size() == 1);
  CHECK(positive_root_count(rs) == 4);
  CHECK(verify_axioms(rs).ok());
  CHECK(phi(rs, 0, 0) == Seq{1, 2, 1, 2});
}

TEST_CASE("every enumerated class builds a valid system") {
  for (std::size_t n = 3; n <= 6; ++n) {
    for (const Seq& d : enumerate_aplus(n)) {
      const RootSystem2 rs = build_root_system(d);
      CHECK(verify_axioms(rs).ok());
      CHECK(positive_root_count(rs) == n);
      CHECK(phi(rs, 0, 0) == d);
      CHECK(dihedral_normal_form(phi(rs, 0, 2)) == d);  // up to the dihedral action
    }
  }
}
