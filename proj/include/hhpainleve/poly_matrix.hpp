#ifndef HHPAINLEVE_POLY_MATRIX_HPP
#define HHPAINLEVE_POLY_MATRIX_HPP

#include <array>
#include <functional>
#include <string>

#include "hhpainleve/laurent_poly.hpp"

namespace hhp {

// 2x2 matrix over the Laurent ring, row-major.
class PolyMatrix2 {
 public:
  PolyMatrix2() = default;
  PolyMatrix2(LaurentPoly a11, LaurentPoly a12, LaurentPoly a21, LaurentPoly a22)
      : entries_{{{std::move(a11), std::move(a12)}, {std::move(a21), std::move(a22)}}} {}

  static PolyMatrix2 identity() { return {1, 0, 0, 1}; }

  // Indices are 0-based; (1, 0) is the lower-left entry.
  const LaurentPoly& operator()(int row, int col) const { return entries_[row][col]; }
  LaurentPoly& operator()(int row, int col) { return entries_[row][col]; }

  bool is_zero() const {
    for (const auto& row : entries_)
      for (const auto& e : row)
        if (!e.is_zero()) return false;
    return true;
  }

  PolyMatrix2 map(const std::function<LaurentPoly(const LaurentPoly&)>& fn) const {
    return {fn(entries_[0][0]), fn(entries_[0][1]), fn(entries_[1][0]), fn(entries_[1][1])};
  }

  friend PolyMatrix2 operator+(const PolyMatrix2& a, const PolyMatrix2& b) {
    return {a(0, 0) + b(0, 0), a(0, 1) + b(0, 1), a(1, 0) + b(1, 0), a(1, 1) + b(1, 1)};
  }
  friend PolyMatrix2 operator-(const PolyMatrix2& a, const PolyMatrix2& b) {
    return {a(0, 0) - b(0, 0), a(0, 1) - b(0, 1), a(1, 0) - b(1, 0), a(1, 1) - b(1, 1)};
  }
  friend PolyMatrix2 operator*(const PolyMatrix2& a, const PolyMatrix2& b) {
    return {a(0, 0) * b(0, 0) + a(0, 1) * b(1, 0), a(0, 0) * b(0, 1) + a(0, 1) * b(1, 1),
            a(1, 0) * b(0, 0) + a(1, 1) * b(1, 0), a(1, 0) * b(0, 1) + a(1, 1) * b(1, 1)};
  }
  friend PolyMatrix2 operator*(const LaurentPoly& s, const PolyMatrix2& a) {
    return a.map([&](const LaurentPoly& e) { return s * e; });
  }

  friend bool operator==(const PolyMatrix2& a, const PolyMatrix2& b) { return a.entries_ == b.entries_; }

  std::string to_string() const {
    return "[[" + entries_[0][0].to_string() + ", " + entries_[0][1].to_string() + "], [" +
           entries_[1][0].to_string() + ", " + entries_[1][1].to_string() + "]]";
  }

 private:
  std::array<std::array<LaurentPoly, 2>, 2> entries_;
};

inline PolyMatrix2 commutator(const PolyMatrix2& a, const PolyMatrix2& b) { return a * b - b * a; }

inline LaurentPoly trace(const PolyMatrix2& a) { return a(0, 0) + a(1, 1); }

inline LaurentPoly det(const PolyMatrix2& a) { return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0); }

inline PolyMatrix2 partial_derivative(const PolyMatrix2& a, Var v) {
  return a.map([v](const LaurentPoly& e) { return partial_derivative(e, v); });
}

}  // namespace hhp

#endif  // HHPAINLEVE_POLY_MATRIX_HPP
