#include "rank2/aplus.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace rank2 {

namespace {

void require_nonempty(const Seq& s, const char* who) {
  if (s.empty()) throw std::invalid_argument(std::string(who) + ": sequence must be nonempty");
}

}  // namespace

bool is_in_A(const Seq& s) {
  require_nonempty(s, "is_in_A");
  return eta_product(s) == -Mat2::identity();
}

bool is_in_Aplus(const Seq& s) {
  require_nonempty(s, "is_in_Aplus");
  for (std::int64_t c : s)
    if (c < 1) return false;
  Mat2 m = Mat2::identity();
  for (std::size_t i = 0; i < s.size(); ++i) {
    m = m * eta(s[i]);
    if (i + 1 < s.size() && (m.a < 0 || m.c < 0)) return false;
  }
  return m == -Mat2::identity();
}

Seq contract(const Seq& s, std::size_t pos) {
  const std::size_t n = s.size();
  if (n < 3) throw std::invalid_argument("contract: sequence must have length >= 3");
  pos %= n;
  if (s[pos] != 1) throw std::invalid_argument("contract: entry at position is not 1");
  Seq out;
  out.reserve(n - 1);
  for (std::size_t k = 0; k < n; ++k)
    if (k != pos) out.push_back(s[k]);
  const std::size_t left = (pos + n - 1) % n;
  const std::size_t right = (pos + 1) % n;
  const auto shifted = [pos](std::size_t k) { return k < pos ? k : k - 1; };
  out[shifted(left)] -= 1;
  out[shifted(right)] -= 1;
  return out;
}

Seq expand(const Seq& s, std::size_t gap) {
  const std::size_t n = s.size();
  if (n < 2) throw std::invalid_argument("expand: sequence must have length >= 2");
  gap %= n;
  Seq out;
  out.reserve(n + 1);
  for (std::size_t k = 0; k < n; ++k) {
    out.push_back(s[k]);
    if (k == gap) out.push_back(1);
  }
  const std::size_t right = (gap + 1) % n;
  out[gap] += 1;
  out[right <= gap ? right : right + 1] += 1;
  return out;
}

Seq dihedral_normal_form(const Seq& s) {
  if (s.empty()) return s;
  Seq best = s;
  const Seq rev = reversed(s);
  for (const Seq* base : {&s, &rev})
    for (std::size_t r = 0; r < s.size(); ++r) {
      Seq cand = rotated(*base, r);
      if (cand < best) best = std::move(cand);
    }
  return best;
}

MoveCertificate reduce_certificate(const Seq& s) {
  if (!is_in_Aplus(s)) throw std::invalid_argument("reduce_certificate: sequence is not in A+");
  MoveCertificate cert;
  cert.initial = s;
  Seq cur = s;
  while (cur.size() > 3) {
    const std::size_t n = cur.size();
    std::size_t pos = n;
    for (std::size_t p = 0; p < n; ++p) {
      if (cur[p] == 1 && cur[(p + n - 1) % n] >= 2 && cur[(p + 1) % n] >= 2) {
        pos = p;
        break;
      }
    }
    if (pos == n)
      throw std::logic_error("reduce_certificate: no contractible 1 found in an A+ sequence");
    MoveStep step;
    step.position = pos;
    step.before = cur;
    step.after = contract(cur, pos);
    cur = step.after;
    if (!is_in_Aplus(cur))
      throw std::logic_error("reduce_certificate: contraction left A+");
    cert.steps.push_back(std::move(step));
  }
  if (cur != Seq{1, 1, 1})
    throw std::logic_error("reduce_certificate: reduction did not end at (1,1,1)");
  return cert;
}

void replay(const MoveCertificate& cert) {
  Seq cur = cert.initial;
  for (std::size_t k = 0; k < cert.steps.size(); ++k) {
    const MoveStep& step = cert.steps[k];
    Seq adjusted = rotated(cur, step.rotation);
    if (step.reflected) adjusted = reversed(adjusted);
    const auto fail = [&](const char* what) {
      std::ostringstream os;
      os << "certificate step " << k + 1 << ": " << what;
      throw std::runtime_error(os.str());
    };
    if (adjusted != step.before) fail("recorded state does not match replay");
    Seq next;
    try {
      next = contract(adjusted, step.position);
    } catch (const std::invalid_argument&) {
      fail("contraction position is not a removable 1");
    }
    if (next != step.after) fail("recorded result does not match replay");
    cur = std::move(next);
  }
  if (cur != Seq{1, 1, 1})
    throw std::runtime_error("certificate does not end at (1,1,1)");
}

std::vector<Seq> enumerate_aplus(std::size_t n) {
  if (n < 3) throw std::invalid_argument("enumerate_aplus: length must be >= 3");
  std::set<Seq> level{Seq{1, 1, 1}};
  for (std::size_t len = 3; len < n; ++len) {
    std::set<Seq> next;
    for (const Seq& c : level)
      for (std::size_t gap = 0; gap < len; ++gap)
        next.insert(dihedral_normal_form(expand(c, gap)));
    level = std::move(next);
  }
  return std::vector<Seq>(level.begin(), level.end());
}

}  // namespace rank2
