#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "rank2/seq.hpp"

namespace rank2 {

// Exact 2x2 integer arithmetic on checked machine words. Every operation
// throws std::overflow_error instead of wrapping silently.

std::int64_t checked_add(std::int64_t x, std::int64_t y);
std::int64_t checked_sub(std::int64_t x, std::int64_t y);
std::int64_t checked_mul(std::int64_t x, std::int64_t y);
std::int64_t checked_neg(std::int64_t x);

// Row-major [[a, b], [c, d]].
struct Mat2 {
  std::int64_t a = 1, b = 0, c = 0, d = 1;

  static Mat2 identity() { return Mat2{}; }

  friend bool operator==(const Mat2&, const Mat2&) = default;
};

Mat2 operator*(const Mat2& x, const Mat2& y);
Mat2 operator-(const Mat2& x);

std::int64_t det(const Mat2& m);
std::int64_t trace(const Mat2& m);

// Column vector in the basis (alpha_1, alpha_2).
using Vec2 = std::array<std::int64_t, 2>;

Vec2 operator*(const Mat2& m, const Vec2& v);

// eta(i) = [[i, -1], [1, 0]], the elementary continued-fraction step.
Mat2 eta(std::int64_t i);

// tau = [[0, 1], [1, 0]]; conjugation by tau inverts eta: tau eta(i) tau = eta(i)^-1.
Mat2 tau();

// eta(c_1) * eta(c_2) * ... * eta(c_n); the empty product is the identity.
Mat2 eta_product(const Seq& coeffs);

// Order of a unimodular matrix: either a finite value in {1,2,3,4,6}
// (det = 1) resp. {1,2} (det = -1), or infinite.
class OrderResult {
 public:
  static OrderResult finite(int k);
  static OrderResult infinite() { return OrderResult{}; }

  bool is_finite() const { return order_ > 0; }
  int order() const;  // throws std::logic_error when infinite

  friend bool operator==(const OrderResult&, const OrderResult&) = default;

 private:
  int order_ = 0;
};

// Trace/determinant classification; requires det(m) = +-1.
OrderResult matrix_order(const Mat2& m);

// One convergent A_nu / B_nu of a continued fraction.
struct ConvergentPair {
  std::int64_t A = 0;
  std::int64_t B = 0;

  friend bool operator==(const ConvergentPair&, const ConvergentPair&) = default;
};

// Convergents (A_0,B_0), ..., (A_n,B_n) of b0 + a1|/|b1 + a2|/|b2 + ...
// from the two-term recursion A_nu = b_nu A_{nu-1} + a_nu A_{nu-2} (same for B)
// with A_{-1} = 1, A_0 = b0, B_{-1} = 0, B_0 = 1. coeffs holds (a_nu, b_nu).
std::vector<ConvergentPair> convergents(
    std::int64_t b0,
    const std::vector<std::pair<std::int64_t, std::int64_t>>& coeffs,
    std::size_t n);

}  // namespace rank2
