#ifndef HHPAINLEVE_LAURENT_POLY_HPP
#define HHPAINLEVE_LAURENT_POLY_HPP

// Exact multivariate Laurent polynomials over Q in a closed set of eight
// variables. Every symbolic object of the library (Hamiltonians, vector-field
// components, Lax matrix entries) lives in this ring.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "hhpainleve/errors.hpp"

namespace hhp {

// Canonical (reduced, positive denominator) arbitrary-precision rational.
using Rational = boost::multiprecision::cpp_rational;

enum class Var : std::uint8_t { X1, X2, P1, P2, T1, T2, Lambda, Alpha };

inline constexpr std::size_t kNumVars = 8;

inline constexpr std::array<Var, kNumVars> kAllVars = {
    Var::X1, Var::X2, Var::P1, Var::P2, Var::T1, Var::T2, Var::Lambda, Var::Alpha};

// Canonical phase coordinates, in (x1, x2, p1, p2) order.
inline constexpr std::array<Var, 4> kPhaseVars = {Var::X1, Var::X2, Var::P1, Var::P2};

constexpr std::size_t index_of(Var v) { return static_cast<std::size_t>(v); }

constexpr std::string_view var_name(Var v) {
  constexpr std::array<std::string_view, kNumVars> names = {
      "x1", "x2", "p1", "p2", "t1", "t2", "lambda", "alpha"};
  return names[index_of(v)];
}

inline std::optional<Var> parse_var(std::string_view name) {
  for (Var v : kAllVars)
    if (var_name(v) == name) return v;
  return std::nullopt;
}

inline std::string to_string(const Rational& q) {
  std::ostringstream os;
  os << boost::multiprecision::numerator(q);
  if (boost::multiprecision::denominator(q) != 1) os << '/' << boost::multiprecision::denominator(q);
  return os.str();
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

// Dense exponent vector; negative entries are allowed for every variable.
class Monomial {
 public:
  using Exponents = std::array<int, kNumVars>;

  constexpr Monomial() = default;
  constexpr explicit Monomial(const Exponents& e) : exponents_(e) {}

  static constexpr Monomial of(Var v, int power = 1) {
    Monomial m;
    m.exponents_[index_of(v)] = power;
    return m;
  }

  constexpr int operator[](Var v) const { return exponents_[index_of(v)]; }
  constexpr int& operator[](Var v) { return exponents_[index_of(v)]; }
  constexpr const Exponents& exponents() const { return exponents_; }

  constexpr int degree() const {
    int d = 0;
    for (int e : exponents_) d += e;
    return d;
  }

  constexpr bool is_unit() const {
    for (int e : exponents_)
      if (e != 0) return false;
    return true;
  }

  constexpr Monomial operator*(const Monomial& o) const {
    Monomial r;
    for (std::size_t i = 0; i < kNumVars; ++i) r.exponents_[i] = exponents_[i] + o.exponents_[i];
    return r;
  }

  constexpr bool operator==(const Monomial&) const = default;

  std::string to_string() const {
    std::string out;
    for (Var v : kAllVars) {
      const int e = (*this)[v];
      if (e == 0) continue;
      if (!out.empty()) out += '*';
      out += var_name(v);
      if (e != 1) out += '^' + std::to_string(e);
    }
    return out;
  }

 private:
  Exponents exponents_{};
};

// Graded order: ascending total degree, ties broken lexicographically with
// x1 the most significant variable and higher exponents first. Rendering
// follows this order, e.g. "-t1 - 3*t2^2" and "x1^2 + 1/4*x2^2".
struct TermOrder {
  constexpr bool operator()(const Monomial& a, const Monomial& b) const {
    const int da = a.degree();
    const int db = b.degree();
    if (da != db) return da < db;
    return a.exponents() > b.exponents();
  }
};

class LaurentPoly {
 public:
  using TermMap = std::map<Monomial, Rational, TermOrder>;

  LaurentPoly() = default;
  LaurentPoly(const Rational& c) {  // NOLINT(google-explicit-constructor)
    if (c != 0) terms_.emplace(Monomial{}, c);
  }
  LaurentPoly(int c) : LaurentPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)

  static LaurentPoly term(const Rational& c, const Monomial& m) {
    LaurentPoly p;
    if (c != 0) p.terms_.emplace(m, c);
    return p;
  }

  static LaurentPoly var(Var v, int power = 1) { return term(Rational(1), Monomial::of(v, power)); }

  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  bool depends_on(Var v) const {
    for (const auto& [m, c] : terms_)
      if (m[v] != 0) return true;
    return false;
  }

  // Largest / smallest exponent of v among the terms; 0 for the zero polynomial.
  int max_degree(Var v) const {
    std::optional<int> d;
    for (const auto& [m, c] : terms_) d = d ? std::max(*d, m[v]) : m[v];
    return d.value_or(0);
  }
  int min_degree(Var v) const {
    std::optional<int> d;
    for (const auto& [m, c] : terms_) d = d ? std::min(*d, m[v]) : m[v];
    return d.value_or(0);
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  LaurentPoly& operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
  }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator-(const LaurentPoly& a) {
    LaurentPoly r = a;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
  }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
  }

  friend LaurentPoly operator*(const Rational& s, const LaurentPoly& a) {
    if (s == 0) return {};
    LaurentPoly r = a;
    for (auto& [m, c] : r.terms_) c *= s;
    return r;
  }

  friend LaurentPoly operator*(int s, const LaurentPoly& a) { return Rational(s) * a; }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  LaurentPoly pow(unsigned n) const {
    LaurentPoly result(1);
    LaurentPoly base = *this;
    while (n != 0) {
      if (n & 1U) result *= base;
      n >>= 1U;
      if (n != 0) base *= base;
    }
    return result;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      const bool negative = c < 0;
      const Rational mag = negative ? Rational(-c) : c;
      if (first) {
        if (negative) out += '-';
      } else {
        out += negative ? " - " : " + ";
      }
      first = false;
      if (m.is_unit()) {
        out += hhp::to_string(mag);
      } else if (mag == 1) {
        out += m.to_string();
      } else {
        out += hhp::to_string(mag) + '*' + m.to_string();
      }
    }
    return out;
  }

 private:
  void add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (inserted) return;
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }

  TermMap terms_;
};

inline std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

// d/dv with d(v^n)/dv = n v^(n-1) for every integer n.
inline LaurentPoly partial_derivative(const LaurentPoly& f, Var v) {
  LaurentPoly r;
  for (const auto& [m, c] : f.terms()) {
    const int e = m[v];
    if (e == 0) continue;
    Monomial dm = m;
    dm[v] = e - 1;
    r += LaurentPoly::term(c * e, dm);
  }
  return r;
}

// Canonical bracket with {x_i, p_j} = delta_ij; t1, t2, lambda, alpha are inert.
inline LaurentPoly poisson_bracket(const LaurentPoly& f, const LaurentPoly& g) {
  LaurentPoly r;
  r += partial_derivative(f, Var::X1) * partial_derivative(g, Var::P1);
  r -= partial_derivative(f, Var::P1) * partial_derivative(g, Var::X1);
  r += partial_derivative(f, Var::X2) * partial_derivative(g, Var::P2);
  r -= partial_derivative(f, Var::P2) * partial_derivative(g, Var::X2);
  return r;
}

// Exact specialization v -> value; throws DivisionByZero for v^-n at v = 0.
inline LaurentPoly specialize(const LaurentPoly& f, Var v, const Rational& value) {
  LaurentPoly r;
  for (const auto& [m, c] : f.terms()) {
    const int e = m[v];
    if (e < 0 && value == 0)
      throw DivisionByZero("specialize: " + std::string(var_name(v)) + " = 0 in negative power");
    Rational factor(1);
    const Rational base = e >= 0 ? value : Rational(1) / value;
    for (int i = 0; i < std::abs(e); ++i) factor *= base;
    Monomial rest = m;
    rest[v] = 0;
    r += LaurentPoly::term(c * factor, rest);
  }
  return r;
}

// Coefficients of f viewed as a Laurent polynomial in v, keyed by power.
inline std::map<int, LaurentPoly> collect(const LaurentPoly& f, Var v) {
  std::map<int, LaurentPoly> out;
  for (const auto& [m, c] : f.terms()) {
    Monomial rest = m;
    rest[v] = 0;
    out[m[v]] += LaurentPoly::term(c, rest);
  }
  return out;
}

}  // namespace hhp

#endif  // HHPAINLEVE_LAURENT_POLY_HPP
