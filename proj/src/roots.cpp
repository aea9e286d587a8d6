#include "rank2/roots.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "rank2/aplus.hpp"

namespace rank2 {

namespace {

std::vector<Root> sorted_unique(std::set<Root> roots) {
  return std::vector<Root>(roots.begin(), roots.end());
}

bool is_nonnegative(const Root& r) { return r[0] >= 0 && r[1] >= 0; }

Root negated(const Root& r) { return Root{checked_neg(r[0]), checked_neg(r[1])}; }

bool contains(const std::vector<Root>& sorted, const Root& r) {
  return std::binary_search(sorted.begin(), sorted.end(), r);
}

}  // namespace

RootSystem2 build_root_system(const Seq& d) {
  if (!is_in_Aplus(d))
    throw std::invalid_argument("build_root_system: sequence is not in A+");
  const std::size_t n = d.size();
  Seq doubled = d;
  doubled.insert(doubled.end(), d.begin(), d.end());
  RootSystem2 rs;
  rs.scheme = cycle_from_char_seq(std::move(doubled));
  rs.roots.resize(2 * n);
  for (std::size_t m = 0; m < 2 * n; ++m) {
    std::set<Root> roots;
    Mat2 acc = m % 2 == 0 ? Mat2::identity() : tau();
    for (std::size_t l = 0; l < n; ++l) {
      const Root r = acc * Root{1, 0};
      roots.insert(r);
      roots.insert(negated(r));
      acc = acc * eta(d[(m + l) % n]);
    }
    rs.roots[m] = sorted_unique(std::move(roots));
  }
  return rs;
}

RootSystem2 trivial_root_system(const CartanScheme2& scheme) {
  const ObjectTable t = materialize(scheme);
  for (const CartanMatrix2& cm : t.cartan)
    if (cm.c12 != 0 || cm.c21 != 0)
      throw std::invalid_argument(
          "trivial_root_system: scheme has a nonzero off-diagonal entry");
  RootSystem2 rs;
  rs.scheme = scheme;
  rs.roots.assign(t.count, {Root{-1, 0}, Root{0, -1}, Root{0, 1}, Root{1, 0}});
  return rs;
}

AxiomReport verify_axioms(const RootSystem2& rs) {
  AxiomReport rep;
  const ObjectTable t = materialize(rs.scheme);
  if (rs.roots.size() != t.count) {
    rep.violations.push_back("root sets and scheme objects do not match up");
    return rep;
  }
  const auto complain = [&rep](const char* axiom, std::size_t object, const char* what) {
    std::ostringstream os;
    os << "(" << axiom << ") object " << object + 1 << ": " << what;
    rep.violations.push_back(os.str());
  };

  for (std::size_t a = 0; a < t.count; ++a) {
    const std::vector<Root>& R = rs.roots[a];
    // (R1)
    std::set<Root> spanned;
    for (const Root& r : R)
      if (is_nonnegative(r)) {
        spanned.insert(r);
        spanned.insert(negated(r));
      }
    if (std::set<Root>(R.begin(), R.end()) != spanned)
      complain("R1", a, "R != R+ union -R+");
    // (R2)
    for (int axis = 0; axis < 2; ++axis) {
      Root unit{0, 0};
      unit[axis] = 1;
      if (!contains(R, unit) || !contains(R, negated(unit)))
        complain("R2", a, "a simple root or its negative is missing");
      for (const Root& r : R)
        if (r[1 - axis] == 0 && r[axis] != 1 && r[axis] != -1)
          complain("R2", a, "an axis multiple other than +-alpha is present");
    }
    // (R3)
    for (int label = 0; label < 2; ++label) {
      const Mat2 sigma = reflection(t.cartan[a], label);
      std::set<Root> image;
      for (const Root& r : R) image.insert(sigma * r);
      const std::vector<Root>& target = rs.roots[t.rho[label][a]];
      if (std::set<Root>(target.begin(), target.end()) != image)
        complain("R3", a, "sigma_i^a(R^a) != R^{rho_i(a)}");
    }
    // (R4)
    std::size_t m = 0;
    for (const Root& r : R)
      if (is_nonnegative(r)) ++m;
    for (int first = 0; first < 2; ++first) {
      std::size_t cur = a;
      for (std::size_t k = 0; k < m; ++k) cur = t.rho[first][t.rho[1 - first][cur]];
      if (cur != a) complain("R4", a, "(rho_i rho_j)^m does not fix the object");
    }
  }
  return rep;
}

Seq phi(const RootSystem2& rs, int label, std::size_t object) {
  if (label != 0 && label != 1) throw std::invalid_argument("phi: label must be 0 or 1");
  const ObjectTable t = materialize(rs.scheme);
  if (object >= t.count) throw std::invalid_argument("phi: object index out of range");
  for (const CartanMatrix2& cm : t.cartan)
    if (cm.c12 == 0 || cm.c21 == 0)
      throw std::invalid_argument("phi: the root system is reducible");
  const std::size_t n = positive_root_count(rs);
  Seq walk;
  walk.reserve(2 * n);
  std::size_t cur = object;
  for (std::size_t step = 0; step < 2 * n; ++step) {
    const int walk_label = step % 2 == 0 ? label : 1 - label;
    const CartanMatrix2& cm = t.cartan[cur];
    walk.push_back(walk_label == 0 ? -cm.c12 : -cm.c21);
    cur = t.rho[walk_label][cur];
  }
  if (cur != object) throw std::logic_error("phi: the reflection walk did not close");
  for (std::size_t r = 0; r < n; ++r)
    if (walk[r] != walk[n + r])
      throw std::logic_error("phi: the reflection walk is not n-periodic");
  walk.resize(n);
  if (!is_in_Aplus(walk)) throw std::logic_error("phi: extracted sequence is not in A+");
  return walk;
}

std::size_t positive_root_count(const RootSystem2& rs) {
  if (rs.roots.empty()) throw std::invalid_argument("positive_root_count: no objects");
  std::size_t common = 0;
  for (std::size_t a = 0; a < rs.roots.size(); ++a) {
    std::size_t m = 0;
    for (const Root& r : rs.roots[a])
      if (is_nonnegative(r)) ++m;
    if (a == 0)
      common = m;
    else if (m != common)
      throw std::invalid_argument("positive_root_count: objects carry different counts");
  }
  return common;
}

}  // namespace rank2
