#include "rank2/scheme.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "rank2/aplus.hpp"

namespace rank2 {

CartanScheme2 cycle_from_char_seq(Seq char_seq) {
  if (char_seq.size() < 2 || char_seq.size() % 2 != 0)
    throw std::invalid_argument("cycle_from_char_seq: need an even length >= 2");
  for (std::int64_t c : char_seq)
    if (c < 0) throw std::invalid_argument("cycle_from_char_seq: entries must be >= 0");
  return CartanScheme2{DiagramKind::Cycle, std::move(char_seq)};
}

CartanScheme2 chain_from_spine(Seq spine) {
  if (spine.size() < 2)
    throw std::invalid_argument("chain_from_spine: need a spine of length >= 2");
  for (std::int64_t c : spine)
    if (c < 0) throw std::invalid_argument("chain_from_spine: entries must be >= 0");
  return CartanScheme2{DiagramKind::Chain, std::move(spine)};
}

ObjectTable materialize(const CartanScheme2& scheme) {
  ObjectTable t;
  const Seq& s = scheme.seq;
  if (scheme.kind == DiagramKind::Cycle) {
    const std::size_t n = s.size();
    if (n < 2 || n % 2 != 0)
      throw std::invalid_argument("materialize: malformed cycle characteristic sequence");
    t.count = n;
    t.rho[0].resize(n);
    t.rho[1].resize(n);
    t.cartan.resize(n);
    for (std::size_t m = 0; m < n; m += 2) {
      t.rho[0][m] = m + 1;
      t.rho[0][m + 1] = m;
      t.rho[1][m + 1] = (m + 2) % n;
      t.rho[1][(m + 2) % n] = m + 1;
    }
    for (std::size_t m = 0; m < n; ++m) {
      const std::size_t odd_idx = m % 2 == 0 ? m : m - 1;
      const std::size_t even_idx = m % 2 == 0 ? (m + n - 1) % n : m;
      t.cartan[m].c12 = -s[odd_idx];
      t.cartan[m].c21 = -s[even_idx];
    }
  } else {
    if (s.size() < 2) throw std::invalid_argument("materialize: malformed chain spine");
    const std::size_t count = s.size() - 1;
    t.count = count;
    t.rho[0].resize(count);
    t.rho[1].resize(count);
    t.cartan.resize(count);
    for (std::size_t o = 0; o < count; ++o) {
      t.rho[0][o] = o;
      t.rho[1][o] = o;
    }
    // Edges alternate labels along the chain, starting with label 1 so that
    // label 0 has its fixed point at the left end.
    for (std::size_t o = 0; o + 1 < count; ++o) {
      const int label = o % 2 == 0 ? 1 : 0;
      t.rho[label][o] = o + 1;
      t.rho[label][o + 1] = o;
    }
    for (std::size_t o = 0; o < count; ++o) {
      t.cartan[o].c12 = -(o % 2 == 0 ? s[o] : s[o + 1]);
      t.cartan[o].c21 = -(o % 2 == 0 ? s[o + 1] : s[o]);
    }
  }
  return t;
}

Mat2 reflection(const CartanMatrix2& cm, int label) {
  if (label == 0) return Mat2{-1, checked_neg(cm.c12), 0, 1};
  if (label == 1) return Mat2{1, 0, checked_neg(cm.c21), -1};
  throw std::invalid_argument("reflection: label must be 0 or 1");
}

Seq char_seq(const CartanScheme2& scheme, int label, std::size_t object) {
  if (scheme.kind != DiagramKind::Cycle)
    throw std::invalid_argument("char_seq: characteristic sequences are defined for cycles");
  if (label != 0 && label != 1) throw std::invalid_argument("char_seq: label must be 0 or 1");
  const ObjectTable t = materialize(scheme);
  if (object >= t.count) throw std::invalid_argument("char_seq: object index out of range");
  Seq out;
  out.reserve(t.count);
  std::size_t cur = object;
  for (std::size_t step = 0; step < t.count; ++step) {
    const int walk_label = step % 2 == 0 ? label : 1 - label;
    const CartanMatrix2& cm = t.cartan[cur];
    out.push_back(walk_label == 0 ? -cm.c12 : -cm.c21);
    cur = t.rho[walk_label][cur];
  }
  if (cur != object) throw std::logic_error("char_seq: alternating walk did not close");
  return out;
}

bool is_centrally_symmetric(const CartanScheme2& scheme) {
  if (scheme.kind != DiagramKind::Cycle)
    throw std::invalid_argument("is_centrally_symmetric: defined for cycles");
  const Seq& s = scheme.seq;
  const std::size_t half = s.size() / 2;
  for (std::size_t k = 0; k < half; ++k)
    if (s[k] != s[k + half]) return false;
  return true;
}

Seq half_seq(const CartanScheme2& scheme) {
  if (!is_centrally_symmetric(scheme))
    throw std::invalid_argument("half_seq: scheme is not centrally symmetric");
  return Seq(scheme.seq.begin(),
             scheme.seq.begin() + static_cast<std::ptrdiff_t>(scheme.seq.size() / 2));
}

ValidationReport validate(const CartanScheme2& scheme) {
  ValidationReport rep;
  const Seq& s = scheme.seq;
  if (scheme.kind == DiagramKind::Cycle) {
    if (s.size() < 2 || s.size() % 2 != 0) {
      rep.violations.push_back(
          "structure: a cycle characteristic sequence needs an even length >= 2");
      return rep;
    }
  } else {
    if (s.size() < 2) {
      rep.violations.push_back("structure: a chain spine needs length >= 2");
      return rep;
    }
  }
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (s[k] < 0) {
      std::ostringstream os;
      os << "(M1) off-diagonal Cartan entries must be <= 0: sequence entry " << k + 1
         << " is " << s[k];
      rep.violations.push_back(os.str());
    }
  }
  if (!rep.violations.empty()) return rep;

  const ObjectTable t = materialize(scheme);
  for (int label = 0; label < 2; ++label)
    for (std::size_t a = 0; a < t.count; ++a)
      if (t.rho[label][t.rho[label][a]] != a) {
        rep.violations.push_back("(C1) a reflection map is not an involution");
        return rep;
      }
  for (std::size_t a = 0; a < t.count; ++a) {
    if (t.cartan[a].c12 != t.cartan[t.rho[0][a]].c12 ||
        t.cartan[a].c21 != t.cartan[t.rho[1][a]].c21) {
      std::ostringstream os;
      os << "(C2) Cartan rows disagree across the edge at object " << a + 1;
      rep.violations.push_back(os.str());
    }
  }
  std::vector<char> seen(t.count, 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    const std::size_t a = stack.back();
    stack.pop_back();
    for (int label = 0; label < 2; ++label) {
      const std::size_t b = t.rho[label][a];
      if (!seen[b]) {
        seen[b] = 1;
        stack.push_back(b);
      }
    }
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end())
    rep.violations.push_back("structure: the object change diagram is not connected");

  for (std::size_t a = 0; a < t.count; ++a)
    if ((t.cartan[a].c12 == 0) != (t.cartan[a].c21 == 0)) rep.mixed_zero = true;
  return rep;
}

bool equivalent(const CartanScheme2& s1, const CartanScheme2& s2) {
  if (s1.kind != s2.kind) return false;
  if (s1.seq.size() != s2.seq.size()) return false;
  if (s1.kind == DiagramKind::Cycle)
    return dihedral_normal_form(s1.seq) == dihedral_normal_form(s2.seq);
  return s1.seq == s2.seq || s1.seq == reversed(s2.seq);
}

std::string scheme_to_string(const CartanScheme2& scheme) {
  if (scheme.kind == DiagramKind::Chain) return "chain" + seq_to_string(scheme.seq);
  if (scheme.seq.size() >= 2 && scheme.seq.size() % 2 == 0 && is_centrally_symmetric(scheme))
    return seq_to_string(half_seq(scheme)) + "^2";
  return seq_to_string(scheme.seq);
}

}  // namespace rank2
