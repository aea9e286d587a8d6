#include "rank2/decide.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "rank2/aplus.hpp"
#include "rank2/covering.hpp"

namespace rank2 {

namespace {

bool has_zero(const Seq& s) {
  return std::find(s.begin(), s.end(), 0) != s.end();
}

bool all_zero(const Seq& s) {
  return std::all_of(s.begin(), s.end(), [](std::int64_t c) { return c == 0; });
}

// (rho_i rho_j)^2(a) = a for all objects: the (R4) condition of the reducible
// root system {+-alpha_1, +-alpha_2}, where every m_[i,j] equals 2.
bool reducible_walk_closes(const ObjectTable& t) {
  for (std::size_t a = 0; a < t.count; ++a) {
    std::size_t cur = a;
    for (int k = 0; k < 2; ++k) cur = t.rho[0][t.rho[1][cur]];
    if (cur != a) return false;
  }
  return true;
}

bool has_adjacent_ones(const Seq& half) {
  const std::size_t n = half.size();
  for (std::size_t k = 0; k < n; ++k)
    if (half[k] == 1 && half[(k + 1) % n] == 1) return true;
  return false;
}

CartanScheme2 doubled_cycle(const Seq& half) {
  Seq full = half;
  full.insert(full.end(), half.begin(), half.end());
  return cycle_from_char_seq(std::move(full));
}

bool small_case_verdict(const CartanScheme2& two_cycle) {
  const OrderResult h = end_order(two_cycle);
  if (!h.is_finite()) return false;
  const std::size_t half_len =
      static_cast<std::size_t>(h.order()) * two_cycle.object_count() / 2;
  return is_in_Aplus(periodic_prefix(two_cycle.seq, half_len));
}

}  // namespace

const char* step_name(StepKind kind) {
  switch (kind) {
    case StepKind::ChainToCycle: return "chain-to-cycle";
    case StepKind::NonCSDouble: return "non-cs-double";
    case StepKind::ZeroCase: return "zero-case";
    case StepKind::AllGeTwo: return "all-ge-two";
    case StepKind::TripleOnes: return "triple-ones";
    case StepKind::BaseFour: return "base-four";
    case StepKind::Contract: return "contract";
    case StepKind::SmallCaseOracle: return "small-case-oracle";
  }
  return "unknown";
}

Decision decide(const CartanScheme2& scheme) {
  const ValidationReport rep = validate(scheme);
  if (!rep.ok())
    throw std::invalid_argument("decide: invalid scheme: " + rep.violations.front());

  Decision dec;
  if (has_zero(scheme.seq)) {
    dec.irreducible = false;
    dec.finite = all_zero(scheme.seq) && reducible_walk_closes(materialize(scheme));
    dec.certificate.push_back(DecisionStep{StepKind::ZeroCase, scheme, scheme, {}, {}});
    if (dec.finite) dec.stats = stats(scheme, dec);
    return dec;
  }
  dec.irreducible = true;

  CartanScheme2 cur = scheme;
  if (cur.kind == DiagramKind::Chain) {
    CartanScheme2 cover = chain_double_cover(cur).cover;
    dec.certificate.push_back(DecisionStep{StepKind::ChainToCycle, cur, cover, {}, {}});
    cur = std::move(cover);
  }
  if (!is_centrally_symmetric(cur)) {
    CartanScheme2 dbl = k_fold_cover(cur, 2).cover;
    dec.certificate.push_back(DecisionStep{StepKind::NonCSDouble, cur, dbl, {}, {}});
    cur = std::move(dbl);
  }

  for (;;) {
    const std::size_t objects = cur.object_count();
    if (objects == 2) {
      dec.finite = small_case_verdict(cur);
      dec.certificate.push_back(DecisionStep{StepKind::SmallCaseOracle, cur, cur, {}, {}});
      break;
    }
    const Seq half = half_seq(cur);
    if (*std::min_element(half.begin(), half.end()) >= 2) {
      dec.finite = false;
      dec.certificate.push_back(DecisionStep{StepKind::AllGeTwo, cur, cur, {}, {}});
      break;
    }
    if (has_adjacent_ones(half)) {
      dec.finite = objects == 6 && half == Seq{1, 1, 1};
      dec.certificate.push_back(DecisionStep{StepKind::TripleOnes, cur, cur, {}, {}});
      break;
    }
    if (objects == 4) {
      const std::int64_t entry = half[0] == 1 ? half[1] : half[0];
      dec.finite = entry == 2 || entry == 3;
      dec.certificate.push_back(DecisionStep{StepKind::BaseFour, cur, cur, {}, entry});
      break;
    }
    // Every 1 in the half is isolated, so both its neighbours are >= 2 and the
    // contraction of the theorem applies; pick the smallest such index.
    std::size_t pos = 0;
    while (half[pos] != 1) ++pos;
    CartanScheme2 next = doubled_cycle(contract(half, pos));
    dec.certificate.push_back(DecisionStep{StepKind::Contract, cur, next, pos, {}});
    cur = std::move(next);
  }
  if (dec.finite) dec.stats = stats(scheme, dec);
  return dec;
}

Stats stats(const CartanScheme2& scheme, const Decision& decision) {
  if (!decision.finite) throw std::invalid_argument("stats: decision is not finite");
  const ObjectTable t = materialize(scheme);
  std::int64_t q = 0;
  for (const CartanMatrix2& cm : t.cartan)
    q = checked_add(q, checked_add(checked_neg(cm.c12), checked_neg(cm.c21)));
  const std::int64_t objects = static_cast<std::int64_t>(t.count);
  const std::int64_t denom = 6 * objects - q;
  if (denom <= 0 || 24 % denom != 0)
    throw std::logic_error("stats: h(6|A| - q) = 24 has no positive integer solution");
  const std::int64_t h = 24 / denom;

  if (scheme.kind == DiagramKind::Cycle) {
    const OrderResult e = end_order(scheme);
    if (!e.is_finite() || e.order() != h)
      throw std::logic_error("stats: h disagrees with the loop matrix order");
  } else {
    const OrderResult e = end_order(chain_double_cover(scheme).cover);
    if (h % 2 != 0 || !e.is_finite() || 2 * e.order() != h)
      throw std::logic_error("stats: h disagrees with the double cover's End order");
  }
  const std::int64_t m = scheme.kind == DiagramKind::Cycle ? h : h / 2;
  if (m != 1 && m != 2 && m != 3 && m != 4 && m != 6)
    throw std::logic_error("stats: |R+| multiplier falls outside {1,2,3,4,6}");
  const std::int64_t bound =
      scheme.kind == DiagramKind::Cycle ? objects + 1 : 2 * objects + 1;
  for (std::int64_t c : scheme.seq)
    if (c > bound) throw std::logic_error("stats: a Cartan entry violates the sharp bound");

  if ((12 * objects) % denom != 0)
    throw std::logic_error("stats: |R+| = 12|A|/(6|A| - q) is not an integer");
  const std::int64_t positive_roots = 12 * objects / denom;
  if (positive_roots <= 0 || 2 * positive_roots != h * objects)
    throw std::logic_error("stats: |R+| does not equal h|A|/2");
  return Stats{q, h, positive_roots};
}

std::pair<CartanScheme2, CartanScheme2> extremal_scheme(std::size_t n) {
  if (n < 1) throw std::invalid_argument("extremal_scheme: n must be >= 1");
  if (n == 1)
    return {cycle_from_char_seq({1, 3}), chain_from_spine({1, 3})};
  Seq spine;
  spine.push_back(3);
  spine.insert(spine.end(), n - 2, 2);
  spine.push_back(1);
  spine.push_back(2 * static_cast<std::int64_t>(n) + 1);
  Seq cycle = spine;  // (3, 2^{n-2}, 1, 2n+1, 1, 2^{n-2})
  cycle.push_back(1);
  cycle.insert(cycle.end(), n - 2, 2);
  return {cycle_from_char_seq(std::move(cycle)), chain_from_spine(std::move(spine))};
}

void replay_certificate(const CartanScheme2& scheme, const Decision& decision) {
  const auto fail = [](std::size_t index, const char* what) {
    std::ostringstream os;
    os << "certificate step " << index + 1 << ": " << what;
    throw std::runtime_error(os.str());
  };
  if (decision.certificate.empty())
    throw std::runtime_error("certificate is empty");

  CartanScheme2 cur = scheme;
  bool verdict = false;
  for (std::size_t k = 0; k < decision.certificate.size(); ++k) {
    const DecisionStep& step = decision.certificate[k];
    const bool last = k + 1 == decision.certificate.size();
    if (step.before != cur) fail(k, "recorded scheme does not match replay");
    bool terminal = true;
    switch (step.kind) {
      case StepKind::ZeroCase: {
        if (k != 0 || !has_zero(cur.seq)) fail(k, "zero-case does not apply");
        verdict = all_zero(cur.seq) && reducible_walk_closes(materialize(cur));
        break;
      }
      case StepKind::ChainToCycle: {
        if (cur.kind != DiagramKind::Chain) fail(k, "chain-to-cycle on a cycle");
        if (step.after != chain_double_cover(cur).cover)
          fail(k, "recorded double cover is wrong");
        terminal = false;
        break;
      }
      case StepKind::NonCSDouble: {
        if (cur.kind != DiagramKind::Cycle || is_centrally_symmetric(cur))
          fail(k, "non-cs-double on a centrally symmetric scheme");
        if (step.after != k_fold_cover(cur, 2).cover) fail(k, "recorded double is wrong");
        terminal = false;
        break;
      }
      case StepKind::AllGeTwo: {
        const Seq half = half_seq(cur);
        if (*std::min_element(half.begin(), half.end()) < 2)
          fail(k, "half sequence has an entry below 2");
        verdict = false;
        break;
      }
      case StepKind::TripleOnes: {
        const Seq half = half_seq(cur);
        if (!has_adjacent_ones(half)) fail(k, "half sequence has no adjacent 1s");
        verdict = cur.object_count() == 6 && half == Seq{1, 1, 1};
        break;
      }
      case StepKind::BaseFour: {
        if (cur.object_count() != 4) fail(k, "base-four on |A| != 4");
        const Seq half = half_seq(cur);
        if (!step.entry) fail(k, "base-four step lacks its entry");
        const std::int64_t entry = *step.entry;
        if (entry < 2 || !((half[0] == 1 && half[1] == entry) ||
                           (half[1] == 1 && half[0] == entry)))
          fail(k, "recorded entry does not match the half sequence");
        verdict = entry == 2 || entry == 3;
        break;
      }
      case StepKind::Contract: {
        if (!step.position) fail(k, "contract step lacks its position");
        const Seq half = half_seq(cur);
        const std::size_t n = half.size();
        const std::size_t pos = *step.position;
        if (pos >= n || half[pos] != 1 || half[(pos + n - 1) % n] < 2 ||
            half[(pos + 1) % n] < 2)
          fail(k, "contraction position is not an isolated 1");
        if (step.after != doubled_cycle(contract(half, pos)))
          fail(k, "recorded contraction result is wrong");
        terminal = false;
        break;
      }
      case StepKind::SmallCaseOracle: {
        if (cur.object_count() != 2 || !is_centrally_symmetric(cur))
          fail(k, "small-case step on a scheme with more than two objects");
        verdict = small_case_verdict(cur);
        break;
      }
    }
    if (terminal != last)
      fail(k, terminal ? "terminal step is not last" : "certificate ends without a verdict");
    if (!terminal) cur = step.after;
  }
  if (verdict != decision.finite)
    throw std::runtime_error("certificate verdict does not match the decision");
  if (decision.finite) {
    if (!decision.stats) throw std::runtime_error("finite decision lacks stats");
    if (stats(scheme, decision) != *decision.stats)
      throw std::runtime_error("recorded stats do not match recomputation");
  }
}

RootSystem2 realize_root_system(const CartanScheme2& scheme) {
  const Decision dec = decide(scheme);
  if (!dec.finite)
    throw std::domain_error("realize_root_system: scheme admits no finite root system");
  if (!dec.irreducible) return trivial_root_system(scheme);

  const bool is_chain = scheme.kind == DiagramKind::Chain;
  CoveringRelation chain_rel;
  CartanScheme2 cycle = scheme;
  if (is_chain) {
    chain_rel = chain_double_cover(scheme);
    cycle = chain_rel.cover;
  }
  const CoveringRelation urel = universal_cover(cycle);
  const Seq d = periodic_prefix(cycle.seq, urel.cover.seq.size() / 2);
  RootSystem2 rs = build_root_system(d);
  if (rs.scheme != urel.cover)
    throw std::logic_error("realize_root_system: universal cover mismatch");
  RootSystem2 down = transport_roots(urel, rs, TransportDirection::Down);
  return is_chain ? transport_roots(chain_rel, down, TransportDirection::Down) : down;
}

}  // namespace rank2
