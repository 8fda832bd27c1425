#ifndef HHPAINLEVE_NUMERIC_HPP
#define HHPAINLEVE_NUMERIC_HPP

// Bridge from the exact symbolic layer to floating point.

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hhpainleve/errors.hpp"
#include "hhpainleve/laurent_poly.hpp"

namespace hhp {

// Partial assignment VarId -> double.
class NumericPoint {
 public:
  NumericPoint() = default;

  NumericPoint& set(Var v, double value) {
    values_[index_of(v)] = value;
    return *this;
  }
  std::optional<double> get(Var v) const { return values_[index_of(v)]; }
  bool has(Var v) const { return values_[index_of(v)].has_value(); }

 private:
  std::array<std::optional<double>, kNumVars> values_{};
};

namespace detail {

inline double int_power(double base, int e) {
  double r = 1.0;
  const int n = e < 0 ? -e : e;
  for (int i = 0; i < n; ++i) r *= base;
  return e < 0 ? 1.0 / r : r;
}

}  // namespace detail

// Each monomial is evaluated in double and scaled by its coefficient, which
// is converted from the exact rational only at that point.
inline double substitute_numeric(const LaurentPoly& f, const NumericPoint& point) {
  double sum = 0.0;
  for (const auto& [m, c] : f.terms()) {
    double value = 1.0;
    for (Var v : kAllVars) {
      const int e = m[v];
      if (e == 0) continue;
      const auto x = point.get(v);
      if (!x) throw MissingAssignment("no value assigned to " + std::string(var_name(v)));
      if (e < 0 && *x == 0.0)
        throw DivisionByZero(std::string(var_name(v)) + " = 0 raised to a negative power");
      value *= detail::int_power(*x, e);
    }
    sum += to_double(c) * value;
  }
  return sum;
}

// A LaurentPoly frozen into double coefficients for repeated evaluation in
// the integrators. Missing variables are treated as a caller bug; the dense
// argument always supplies all eight values.
class CompiledPoly {
 public:
  CompiledPoly() = default;
  explicit CompiledPoly(const LaurentPoly& f) {
    terms_.reserve(f.size());
    for (const auto& [m, c] : f.terms()) terms_.push_back({to_double(c), m.exponents()});
  }

  // A term whose positive-power part vanishes is zero even if it also carries
  // a negative power of a zero variable (alpha * x2^-2 at alpha = 0, x2 = 0).
  double operator()(const std::array<double, kNumVars>& x) const {
    double sum = 0.0;
    for (const auto& t : terms_) {
      double value = t.coefficient;
      for (std::size_t i = 0; i < kNumVars; ++i)
        if (t.exponents[i] > 0) value *= detail::int_power(x[i], t.exponents[i]);
      if (value == 0.0) continue;
      for (std::size_t i = 0; i < kNumVars; ++i)
        if (t.exponents[i] < 0) value *= detail::int_power(x[i], t.exponents[i]);
      sum += value;
    }
    return sum;
  }

 private:
  struct Term {
    double coefficient;
    Monomial::Exponents exponents;
  };
  std::vector<Term> terms_;
};

}  // namespace hhp

#endif  // HHPAINLEVE_NUMERIC_HPP
