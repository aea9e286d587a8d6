#include "rank2/covering.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace rank2 {

namespace {

void require_cycle(const CartanScheme2& s, const char* who) {
  if (s.kind != DiagramKind::Cycle)
    throw std::invalid_argument(std::string(who) + ": expected a cycle scheme");
}

}  // namespace

Mat2 loop_matrix(const CartanScheme2& cycle) {
  require_cycle(cycle, "loop_matrix");
  Mat2 m = Mat2::identity();
  for (auto it = cycle.seq.rbegin(); it != cycle.seq.rend(); ++it) m = m * eta(*it);
  return m;
}

OrderResult end_order(const CartanScheme2& cycle) {
  require_cycle(cycle, "end_order");
  return matrix_order(loop_matrix(cycle));
}

CoveringRelation k_fold_cover(const CartanScheme2& cycle, std::size_t k) {
  require_cycle(cycle, "k_fold_cover");
  if (k < 1) throw std::invalid_argument("k_fold_cover: fold must be >= 1");
  const std::size_t base_count = cycle.seq.size();
  CoveringRelation rel;
  rel.base = cycle;
  rel.fold = k;
  Seq repeated;
  repeated.reserve(base_count * k);
  for (std::size_t rep = 0; rep < k; ++rep)
    repeated.insert(repeated.end(), cycle.seq.begin(), cycle.seq.end());
  rel.cover = cycle_from_char_seq(std::move(repeated));
  rel.object_map.resize(base_count * k);
  for (std::size_t m = 0; m < rel.object_map.size(); ++m) rel.object_map[m] = m % base_count;
  return rel;
}

CoveringRelation chain_double_cover(const CartanScheme2& chain) {
  if (chain.kind != DiagramKind::Chain)
    throw std::invalid_argument("chain_double_cover: expected a chain scheme");
  const Seq& s = chain.seq;
  const std::size_t count = chain.object_count();  // N
  CoveringRelation rel;
  rel.base = chain;
  rel.fold = 2;
  Seq palindrome(s.begin(), s.end());  // c_1 ... c_{N+1}
  for (std::size_t k = count; k-- > 1;) palindrome.push_back(s[k]);  // c_N ... c_2
  rel.cover = cycle_from_char_seq(std::move(palindrome));
  rel.object_map.resize(2 * count);
  // The deck involution of the palindromic cycle swaps objects m and 3-m
  // (1-based, mod 2N); fibers fold onto chain objects 1..N in order.
  for (std::size_t m = 1; m <= 2 * count; ++m) {
    std::size_t folded;
    if (m <= 2)
      folded = 1;
    else if (m <= count + 1)
      folded = m - 1;
    else
      folded = 2 * count - m + 2;
    rel.object_map[m - 1] = folded - 1;
  }
  return rel;
}

CoveringRelation universal_cover(const CartanScheme2& cycle) {
  const OrderResult h = end_order(cycle);
  if (!h.is_finite())
    throw std::domain_error(
        "universal_cover: End(a) is infinite; the scheme admits no finite root system");
  return k_fold_cover(cycle, static_cast<std::size_t>(h.order()));
}

QuotientReport detect_quotients(const CartanScheme2& cycle) {
  require_cycle(cycle, "detect_quotients");
  QuotientReport rep;
  const std::size_t len = cycle.seq.size();  // 2n
  std::set<Seq> spines;
  for (int label = 0; label < 2; ++label) {
    for (std::size_t object = 0; object < len; ++object) {
      const Seq t = char_seq(cycle, label, object);
      bool palindromic = true;
      for (std::size_t j = 1; 2 * j < len + 1; ++j)
        if (t[j] != t[(len - j) % len]) {
          palindromic = false;
          break;
        }
      if (!palindromic) continue;
      Seq spine(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(len / 2 + 1));
      spines.insert(spine);
      rep.chain_quotients.push_back(QuotientReport::ChainQuotient{label, object, std::move(spine)});
    }
  }
  rep.chain_spines.assign(spines.begin(), spines.end());

  if (len % 4 == 0 && is_centrally_symmetric(cycle)) {
    const Seq half = half_seq(cycle);
    const std::size_t quarter = half.size() / 2;
    bool doubled_quarter = true;
    for (std::size_t k = 0; k < quarter; ++k)
      if (half[k] != half[k + quarter]) {
        doubled_quarter = false;
        break;
      }
    if (!doubled_quarter) rep.half_quotient = half;
  }
  return rep;
}

RootSystem2 transport_roots(const CoveringRelation& rel, const RootSystem2& roots,
                            TransportDirection direction) {
  if (direction == TransportDirection::Up) {
    if (roots.scheme != rel.base)
      throw std::invalid_argument("transport_roots: root system is not attached to the base");
    RootSystem2 out;
    out.scheme = rel.cover;
    out.roots.resize(rel.object_map.size());
    for (std::size_t m = 0; m < rel.object_map.size(); ++m)
      out.roots[m] = roots.roots[rel.object_map[m]];
    return out;
  }
  if (roots.scheme != rel.cover)
    throw std::invalid_argument("transport_roots: root system is not attached to the cover");
  RootSystem2 out;
  out.scheme = rel.base;
  out.roots.resize(rel.base.object_count());
  std::vector<bool> started(out.roots.size(), false);
  for (std::size_t m = 0; m < rel.object_map.size(); ++m) {
    const std::size_t b = rel.object_map[m];
    if (!started[b]) {
      out.roots[b] = roots.roots[m];
      started[b] = true;
      continue;
    }
    std::vector<Root> meet;
    std::set_intersection(out.roots[b].begin(), out.roots[b].end(), roots.roots[m].begin(),
                          roots.roots[m].end(), std::back_inserter(meet));
    out.roots[b] = std::move(meet);
  }
  return out;
}

}  // namespace rank2
