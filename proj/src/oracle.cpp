#include "rank2/oracle.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <deque>
#include <map>
#include <stdexcept>
#include <unordered_set>

#include "rank2/aplus.hpp"

namespace rank2::oracle {

namespace {

bool all_zero(const Seq& s) {
  return std::all_of(s.begin(), s.end(), [](std::int64_t c) { return c == 0; });
}

bool walk_closes(const ObjectTable& t) {
  for (std::size_t a = 0; a < t.count; ++a) {
    std::size_t cur = a;
    for (int k = 0; k < 2; ++k) cur = t.rho[0][t.rho[1][cur]];
    if (cur != a) return false;
  }
  return true;
}

struct State {
  std::size_t object;
  Mat2 m;
};

struct StateHash {
  std::size_t operator()(const State& s) const {
    std::size_t h = s.object;
    for (std::int64_t v : {s.m.a, s.m.b, s.m.c, s.m.d})
      h = h * 1000003u + std::hash<std::int64_t>{}(v);
    return h;
  }
};

struct StateEq {
  bool operator()(const State& x, const State& y) const {
    return x.object == y.object && x.m == y.m;
  }
};

}  // namespace

bool decide_bruteforce(const CartanScheme2& scheme) {
  const ValidationReport rep = validate(scheme);
  if (!rep.ok())
    throw std::invalid_argument("decide_bruteforce: invalid scheme: " + rep.violations.front());

  if (std::find(scheme.seq.begin(), scheme.seq.end(), 0) != scheme.seq.end()) {
    if (!all_zero(scheme.seq)) return false;
    return walk_closes(materialize(scheme));
  }

  // Chains decide on the palindromic characteristic sequence of their double cover.
  Seq cyc = scheme.seq;
  if (scheme.kind == DiagramKind::Chain) {
    const Seq& s = scheme.seq;
    cyc.assign(s.begin(), s.end());
    for (std::size_t k = s.size() - 1; k-- > 1;) cyc.push_back(s[k]);
  }

  Mat2 loop = Mat2::identity();
  for (auto it = cyc.rbegin(); it != cyc.rend(); ++it) loop = loop * eta(*it);
  const OrderResult order = matrix_order(loop);
  if (!order.is_finite()) return false;

  const std::size_t h = static_cast<std::size_t>(order.order());
  const Seq d = periodic_prefix(cyc, h * cyc.size() / 2);
  // Membership forces the entry sum 3(n-2); checking it first also keeps the
  // prefix products of the remaining candidates inside the machine word.
  std::int64_t sum = 0;
  for (std::int64_t c : d) sum += c;
  if (sum != 3 * (static_cast<std::int64_t>(d.size()) - 2)) return false;
  if (!is_in_Aplus(d)) return false;
  // The universal cover's characteristic sequence is the h-fold repetition;
  // it must equal d^2 exactly, which for odd h forces central symmetry.
  if (h % 2 == 1) {
    const std::size_t half = cyc.size() / 2;
    for (std::size_t k = 0; k < half; ++k)
      if (cyc[k] != cyc[k + half]) return false;
  }
  return true;
}

std::vector<Seq> enumerate_aplus_bruteforce(std::size_t n) {
  if (n < 3 || n > 12)
    throw std::out_of_range("enumerate_aplus_bruteforce: supported lengths are 3..12");
  const std::int64_t total = 3 * (static_cast<std::int64_t>(n) - 2);
  std::vector<Seq> found;
  Seq cur(n, 1);
  // Enumerate positive compositions of `total` into n parts.
  const auto rec = [&](auto&& self, std::size_t pos, std::int64_t remaining) -> void {
    if (pos + 1 == n) {
      cur[pos] = remaining;
      if (is_in_Aplus(cur)) found.push_back(dihedral_normal_form(cur));
      return;
    }
    const std::int64_t slack = remaining - static_cast<std::int64_t>(n - pos - 1);
    for (std::int64_t v = 1; v <= slack; ++v) {
      cur[pos] = v;
      self(self, pos + 1, remaining - v);
    }
  };
  rec(rec, 0, total);
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  return found;
}

BFSReport groupoid_bfs(const CartanScheme2& scheme, std::size_t cap) {
  if (cap < 1) throw std::invalid_argument("groupoid_bfs: cap must be >= 1");
  const ObjectTable t = materialize(scheme);
  BFSReport rep;
  std::unordered_set<State, StateHash, StateEq> visited;
  std::deque<State> queue;
  visited.insert(State{0, Mat2::identity()});
  queue.push_back(State{0, Mat2::identity()});
  try {
    while (!queue.empty()) {
      if (visited.size() > cap) {
        rep.budget_exceeded = true;
        break;
      }
      const State state = queue.front();
      queue.pop_front();
      for (int label = 0; label < 2; ++label) {
        State next{t.rho[label][state.object],
                   reflection(t.cartan[state.object], label) * state.m};
        if (visited.insert(next).second) queue.push_back(next);
      }
    }
  } catch (const std::overflow_error&) {
    // Word images outgrew the machine word; only an infinite groupoid gets there.
    rep.budget_exceeded = true;
  }
  rep.states = visited.size();
  // Word images near the budget can carry entries whose cross products leave
  // the machine word, so take determinants in 128 bits.
  const auto wide_det = [](const Mat2& m) {
    return static_cast<__int128>(m.a) * m.d - static_cast<__int128>(m.b) * m.c;
  };
  std::map<std::array<std::int64_t, 4>, std::size_t> object_by_matrix;
  for (const State& s : visited) {
    if (s.object == 0) {
      ++rep.end_order;
      if (wide_det(s.m) == -1) rep.end_all_even = false;
    }
    const std::array<std::int64_t, 4> key{s.m.a, s.m.b, s.m.c, s.m.d};
    const auto [it, inserted] = object_by_matrix.emplace(key, s.object);
    if (!inserted && it->second != s.object) rep.c3_ok = false;
  }
  return rep;
}

std::size_t default_cap(const CartanScheme2& scheme) {
  return 24 * scheme.object_count() + 1;
}

OrderResult matrix_order_by_iteration(const Mat2& m, int max_power) {
  Mat2 acc = m;
  try {
    for (int k = 1; k <= max_power; ++k) {
      if (acc == Mat2::identity()) return OrderResult::finite(k);
      acc = acc * m;
    }
  } catch (const std::overflow_error&) {
    // powers of a finite-order matrix stay bounded, so growth past the
    // machine word settles the question
  }
  return OrderResult::infinite();
}

}  // namespace rank2::oracle
