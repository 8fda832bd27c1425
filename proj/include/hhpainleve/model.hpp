#ifndef HHPAINLEVE_MODEL_HPP
#define HHPAINLEVE_MODEL_HPP

// The extended Henon-Heiles system, its separable potential hierarchy, the
// non-autonomous (Painleve-type) deformation, Hamiltonian vector fields and
// the autonomous / deformed Lax matrices.

#include <array>
#include <cstdlib>
#include <string>

#include "hhpainleve/errors.hpp"
#include "hhpainleve/laurent_poly.hpp"
#include "hhpainleve/poly_matrix.hpp"

namespace hhp {

namespace sym {
inline LaurentPoly x1() { return LaurentPoly::var(Var::X1); }
inline LaurentPoly x2(int n = 1) { return LaurentPoly::var(Var::X2, n); }
inline LaurentPoly p1() { return LaurentPoly::var(Var::P1); }
inline LaurentPoly p2() { return LaurentPoly::var(Var::P2); }
inline LaurentPoly t1() { return LaurentPoly::var(Var::T1); }
inline LaurentPoly t2() { return LaurentPoly::var(Var::T2); }
inline LaurentPoly lambda(int n = 1) { return LaurentPoly::var(Var::Lambda, n); }
inline LaurentPoly alpha() { return LaurentPoly::var(Var::Alpha); }
inline Rational q(long num, long den = 1) { return Rational(num) / den; }
}  // namespace sym

// ---------------------------------------------------------------------------
// Separable potentials V^(k) = R^k (0, 1)^T, R = [[x1, 1], [x2^2/4, 0]].

struct PotentialPair {
  LaurentPoly v1;
  LaurentPoly v2;

  friend bool operator==(const PotentialPair&, const PotentialPair&) = default;
};

inline PotentialPair recursion_step(const PotentialPair& v) {
  using namespace sym;
  return {x1() * v.v1 + v.v2, q(1, 4) * x2(2) * v.v1};
}

// R^-1 = adj(R) / det(R) with det(R) = -x2^2/4, i.e. [[0, 4 x2^-2], [1, -4 x1 x2^-2]].
inline PotentialPair inverse_recursion_step(const PotentialPair& v) {
  using namespace sym;
  return {4 * x2(-2) * v.v2, v.v1 - 4 * x1() * x2(-2) * v.v2};
}

inline PotentialPair potential(int k) {
  PotentialPair v{0, 1};
  const int steps = std::abs(k);
  for (int i = 0; i < steps; ++i) v = k > 0 ? recursion_step(v) : inverse_recursion_step(v);
  return v;
}

// ---------------------------------------------------------------------------
// Hamiltonians.

struct HamiltonianSet {
  LaurentPoly h1;
  LaurentPoly h2;
  bool deformed = false;
};

// Geodesic parts E1, E2.
inline LaurentPoly geodesic_part(int r) {
  using namespace sym;
  if (r == 1) return q(1, 2) * p1().pow(2) + q(1, 2) * p2().pow(2);
  return q(1, 2) * x2() * p1() * p2() - q(1, 2) * x1() * p2().pow(2);
}

// The alpha terms of h1, h2 as written: alpha x2^-2 and -alpha x1 x2^-2.
inline LaurentPoly alpha_term(int r) {
  using namespace sym;
  if (r == 1) return alpha() * x2(-2);
  return -(alpha() * x1() * x2(-2));
}

// Killing-vector term W2 = -p1 added to the second Hamiltonian.
inline LaurentPoly killing_term() { return -sym::p1(); }

// Deformation coefficients solving the Frobenius condition.
inline LaurentPoly deformation_c3() { return 3 * sym::t2(); }
inline LaurentPoly deformation_c2() { return sym::t1() + 3 * sym::t2().pow(2); }
inline LaurentPoly frobenius_f12() { return -deformation_c2(); }

inline HamiltonianSet autonomous_hamiltonians() {
  const PotentialPair hh = potential(4);
  return {geodesic_part(1) + hh.v1 + alpha_term(1), geodesic_part(2) + hh.v2 + alpha_term(2), false};
}

// H_r = h_r + c3 V_r^(3) + c2 V_r^(2), with W2 added to H2 when requested.
// Exposed with free coefficients so corrupted deformations can be checked.
inline HamiltonianSet deformed_hamiltonians(const LaurentPoly& c3, const LaurentPoly& c2,
                                            bool with_killing_term = true) {
  const HamiltonianSet h = autonomous_hamiltonians();
  const PotentialPair v3 = potential(3);
  const PotentialPair v2 = potential(2);
  LaurentPoly H1 = h.h1 + c3 * v3.v1 + c2 * v2.v1;
  LaurentPoly H2 = h.h2 + c3 * v3.v2 + c2 * v2.v2;
  if (with_killing_term) H2 += killing_term();
  return {std::move(H1), std::move(H2), true};
}

inline HamiltonianSet hamiltonians(bool deformed) {
  return deformed ? deformed_hamiltonians(deformation_c3(), deformation_c2()) : autonomous_hamiltonians();
}

// ---------------------------------------------------------------------------
// Vector fields on the phase space, components ordered (x1', x2', p1', p2').

struct VectorField4 {
  std::array<LaurentPoly, 4> components;

  const LaurentPoly& operator[](std::size_t i) const { return components[i]; }
  LaurentPoly& operator[](std::size_t i) { return components[i]; }

  bool is_zero() const {
    for (const auto& c : components)
      if (!c.is_zero()) return false;
    return true;
  }

  friend VectorField4 operator+(const VectorField4& a, const VectorField4& b) {
    VectorField4 r;
    for (std::size_t i = 0; i < 4; ++i) r[i] = a[i] + b[i];
    return r;
  }
  friend VectorField4 operator-(const VectorField4& a, const VectorField4& b) {
    VectorField4 r;
    for (std::size_t i = 0; i < 4; ++i) r[i] = a[i] - b[i];
    return r;
  }
  friend VectorField4 operator*(const LaurentPoly& s, const VectorField4& a) {
    VectorField4 r;
    for (std::size_t i = 0; i < 4; ++i) r[i] = s * a[i];
    return r;
  }
  friend bool operator==(const VectorField4& a, const VectorField4& b) { return a.components == b.components; }

  std::string to_string() const {
    return "(" + components[0].to_string() + ", " + components[1].to_string() + ", " +
           components[2].to_string() + ", " + components[3].to_string() + ")";
  }
};

inline VectorField4 hamiltonian_vector_field(const LaurentPoly& H) {
  return {{partial_derivative(H, Var::P1), partial_derivative(H, Var::P2), -partial_derivative(H, Var::X1),
           -partial_derivative(H, Var::X2)}};
}

inline VectorField4 partial_derivative(const VectorField4& Y, Var v) {
  VectorField4 r;
  for (std::size_t i = 0; i < 4; ++i) r[i] = partial_derivative(Y[i], v);
  return r;
}

// Directional derivative Y(f) = sum_j Y^j d f / d xi_j over the phase coordinates.
inline LaurentPoly flow_derivative(const LaurentPoly& f, const VectorField4& Y) {
  LaurentPoly r;
  for (std::size_t j = 0; j < 4; ++j) r += Y[j] * partial_derivative(f, kPhaseVars[j]);
  return r;
}

inline PolyMatrix2 flow_derivative(const PolyMatrix2& A, const VectorField4& Y) {
  return A.map([&](const LaurentPoly& e) { return flow_derivative(e, Y); });
}

// [Y, Z]^i = Y(Z^i) - Z(Y^i).
inline VectorField4 lie_bracket(const VectorField4& Y, const VectorField4& Z) {
  VectorField4 r;
  for (std::size_t i = 0; i < 4; ++i) r[i] = flow_derivative(Z[i], Y) - flow_derivative(Y[i], Z);
  return r;
}

// ---------------------------------------------------------------------------
// Lax matrices, transcribed entry by entry.

struct LaxTriple {
  PolyMatrix2 L;
  PolyMatrix2 U1;
  PolyMatrix2 U2;
  bool deformed = false;

  const PolyMatrix2& U(int k) const {
    if (k != 1 && k != 2) throw InvalidArgument("flow index must be 1 or 2, got " + std::to_string(k));
    return k == 1 ? U1 : U2;
  }
};

inline LaxTriple lax_matrices(bool deformed) {
  using namespace sym;
  const LaurentPoly l = lambda();
  const LaurentPoly L11 = p1() * l + q(1, 2) * x2() * p2();
  const LaurentPoly L12 = lambda(2) - x1() * l - q(1, 4) * x2(2);
  const LaurentPoly tail = p2().pow(2) + 2 * alpha() * x2(-2);

  if (!deformed) {
    LaxTriple lax;
    lax.L = {L11, L12,
             -2 * lambda(3) - 2 * x1() * lambda(2) - (2 * x1().pow(2) + q(1, 2) * x2(2)) * l + tail, -L11};
    lax.U1 = {0, q(1, 2), -l - 2 * x1(), 0};
    lax.U2 = {q(1, 2) * p1(), q(1, 2) * l - q(1, 2) * x1(),
              -lambda(2) - x1() * l - x1().pow(2) - q(1, 2) * x2(2), -(q(1, 2) * p1())};
    lax.deformed = false;
    return lax;
  }

  LaxTriple lax;
  lax.L = {L11, L12,
           -2 * lambda(3) - 2 * (x1() + 3 * t2()) * lambda(2) -
               (2 * x1().pow(2) + q(1, 2) * x2(2) + 6 * x1() * t2() + 6 * t2().pow(2) + 2 * t1()) * l + tail,
           -L11};
  lax.U1 = {0, q(1, 2), -l - 2 * x1() - 3 * t2(), 0};
  lax.U2 = {q(1, 2) * p1(), q(1, 2) * l - q(1, 2) * x1(),
            -lambda(2) - (x1() + 3 * t2()) * l - x1().pow(2) - q(1, 2) * x2(2) - 3 * x1() * t2() -
                3 * t2().pow(2) - t1(),
            -(q(1, 2) * p1())};
  lax.deformed = true;
  return lax;
}

}  // namespace hhp

#endif  // HHPAINLEVE_MODEL_HPP
