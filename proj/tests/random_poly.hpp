#ifndef HHPAINLEVE_TESTS_RANDOM_POLY_HPP
#define HHPAINLEVE_TESTS_RANDOM_POLY_HPP

// Seeded generators for property tests.

#include <random>

#include "hhpainleve/laurent_poly.hpp"
#include "hhpainleve/model.hpp"
#include "hhpainleve/poly_matrix.hpp"

namespace hhp::testing {

class PolyGen {
 public:
  explicit PolyGen(unsigned seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

  Rational rational() {
    int num = uniform(-9, 9);
    if (num == 0) num = 1;
    return Rational(num) / uniform(1, 5);
  }

  // Up to `max_terms` terms, exponents in [min_exp, max_exp] on the variables
  // listed (defaults to the phase variables plus t1, alpha).
  LaurentPoly poly(int max_terms = 4, int min_exp = -1, int max_exp = 2,
                   std::initializer_list<Var> vars = {Var::X1, Var::X2, Var::P1, Var::P2, Var::T1, Var::Alpha}) {
    LaurentPoly p;
    const int n = uniform(0, max_terms);
    for (int i = 0; i < n; ++i) {
      Monomial m;
      for (Var v : vars) m[v] = uniform(min_exp, max_exp);
      p += LaurentPoly::term(rational(), m);
    }
    return p;
  }

  PolyMatrix2 matrix() {
    auto e = [&] { return poly(3, 0, 2, {Var::X1, Var::P1, Var::Lambda}); };
    return {e(), e(), e(), e()};
  }

  VectorField4 field() {
    auto e = [&] { return poly(3, 0, 2, {Var::X1, Var::X2, Var::P1, Var::P2}); };
    return {{e(), e(), e(), e()}};
  }

 private:
  std::mt19937 rng_;
};

}  // namespace hhp::testing

#endif  // HHPAINLEVE_TESTS_RANDOM_POLY_HPP
