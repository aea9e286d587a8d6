#include "rank2/mat2.hpp"

#include <sstream>
#include <stdexcept>

namespace rank2 {

std::int64_t checked_add(std::int64_t x, std::int64_t y) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(x, y, &r))
    throw std::overflow_error("integer overflow in exact 2x2 arithmetic (add)");
  return r;
}

std::int64_t checked_sub(std::int64_t x, std::int64_t y) {
  std::int64_t r = 0;
  if (__builtin_sub_overflow(x, y, &r))
    throw std::overflow_error("integer overflow in exact 2x2 arithmetic (sub)");
  return r;
}

std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(x, y, &r))
    throw std::overflow_error("integer overflow in exact 2x2 arithmetic (mul)");
  return r;
}

std::int64_t checked_neg(std::int64_t x) { return checked_sub(0, x); }

Mat2 operator*(const Mat2& x, const Mat2& y) {
  return Mat2{checked_add(checked_mul(x.a, y.a), checked_mul(x.b, y.c)),
              checked_add(checked_mul(x.a, y.b), checked_mul(x.b, y.d)),
              checked_add(checked_mul(x.c, y.a), checked_mul(x.d, y.c)),
              checked_add(checked_mul(x.c, y.b), checked_mul(x.d, y.d))};
}

Mat2 operator-(const Mat2& x) {
  return Mat2{checked_neg(x.a), checked_neg(x.b), checked_neg(x.c), checked_neg(x.d)};
}

std::int64_t det(const Mat2& m) {
  return checked_sub(checked_mul(m.a, m.d), checked_mul(m.b, m.c));
}

std::int64_t trace(const Mat2& m) { return checked_add(m.a, m.d); }

Vec2 operator*(const Mat2& m, const Vec2& v) {
  return Vec2{checked_add(checked_mul(m.a, v[0]), checked_mul(m.b, v[1])),
              checked_add(checked_mul(m.c, v[0]), checked_mul(m.d, v[1]))};
}

Mat2 eta(std::int64_t i) { return Mat2{i, -1, 1, 0}; }

Mat2 tau() { return Mat2{0, 1, 1, 0}; }

Mat2 eta_product(const Seq& coeffs) {
  Mat2 m = Mat2::identity();
  for (std::int64_t c : coeffs) m = m * eta(c);
  return m;
}

OrderResult OrderResult::finite(int k) {
  if (k < 1) throw std::invalid_argument("OrderResult::finite: order must be positive");
  OrderResult r;
  r.order_ = k;
  return r;
}

int OrderResult::order() const {
  if (!is_finite()) throw std::logic_error("OrderResult::order: order is infinite");
  return order_;
}

OrderResult matrix_order(const Mat2& m) {
  const std::int64_t dt = det(m);
  if (dt != 1 && dt != -1)
    throw std::invalid_argument("matrix_order: matrix is not unimodular");
  if (dt == 1) {
    if (m == Mat2::identity()) return OrderResult::finite(1);
    if (m == -Mat2::identity()) return OrderResult::finite(2);
    switch (trace(m)) {
      case -1: return OrderResult::finite(3);
      case 0: return OrderResult::finite(4);
      case 1: return OrderResult::finite(6);
      default: return OrderResult::infinite();
    }
  }
  // det = -1: the characteristic polynomial is t^2 - tr(m) t - 1, so m^2 = id
  // exactly when the trace vanishes.
  return trace(m) == 0 ? OrderResult::finite(2) : OrderResult::infinite();
}

std::vector<ConvergentPair> convergents(
    std::int64_t b0,
    const std::vector<std::pair<std::int64_t, std::int64_t>>& coeffs,
    std::size_t n) {
  if (n > coeffs.size())
    throw std::invalid_argument("convergents: n exceeds the number of coefficients");
  std::vector<ConvergentPair> out;
  out.reserve(n + 1);
  std::int64_t A_prev = 1, A_cur = b0;
  std::int64_t B_prev = 0, B_cur = 1;
  out.push_back(ConvergentPair{A_cur, B_cur});
  for (std::size_t nu = 1; nu <= n; ++nu) {
    const auto [a_nu, b_nu] = coeffs[nu - 1];
    const std::int64_t A_next = checked_add(checked_mul(b_nu, A_cur), checked_mul(a_nu, A_prev));
    const std::int64_t B_next = checked_add(checked_mul(b_nu, B_cur), checked_mul(a_nu, B_prev));
    A_prev = A_cur;
    A_cur = A_next;
    B_prev = B_cur;
    B_cur = B_next;
    out.push_back(ConvergentPair{A_cur, B_cur});
  }
  return out;
}

}  // namespace rank2
