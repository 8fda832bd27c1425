#ifndef HHPAINLEVE_VERIFY_HPP
#define HHPAINLEVE_VERIFY_HPP

// Exact checks of the structural identities of the model. Every check is a
// statement about structural equality in the Laurent ring; no tolerances.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hhpainleve/laurent_poly.hpp"
#include "hhpainleve/model.hpp"
#include "hhpainleve/poly_matrix.hpp"

namespace hhp {

using Residual = std::variant<LaurentPoly, PolyMatrix2, VectorField4>;

inline std::string render(const Residual& r) {
  return std::visit([](const auto& v) { return v.to_string(); }, r);
}

inline bool is_zero(const Residual& r) {
  return std::visit([](const auto& v) { return v.is_zero(); }, r);
}

struct IdentityReport {
  std::string name;
  Residual residual;
  // Value the residual must equal; zero when absent.
  std::optional<Residual> expected;
  bool passed = false;
  // Sub-identities that must also hold (e.g. a printed intermediate matrix).
  std::vector<IdentityReport> parts;

  static IdentityReport make(std::string name, Residual residual, std::optional<Residual> expected = {}) {
    IdentityReport r{std::move(name), std::move(residual), std::move(expected), false, {}};
    r.passed = r.expected ? r.residual == *r.expected : is_zero(r.residual);
    return r;
  }

  IdentityReport& with_part(IdentityReport part) {
    passed = passed && part.passed;
    parts.push_back(std::move(part));
    return *this;
  }
};

// {h1, h2}.
inline IdentityReport check_involution(const LaurentPoly& h1, const LaurentPoly& h2) {
  return IdentityReport::make("involution", poisson_bracket(h1, h2));
}

inline IdentityReport check_involution() {
  const HamiltonianSet h = hamiltonians(false);
  return check_involution(h.h1, h.h2);
}

// dH1/dt2 - dH2/dt1 + {H1, H2}, compared against `expected`.
inline IdentityReport check_frobenius(const HamiltonianSet& H, const LaurentPoly& expected) {
  LaurentPoly residual = partial_derivative(H.h1, Var::T2) - partial_derivative(H.h2, Var::T1) +
                         poisson_bracket(H.h1, H.h2);
  return IdentityReport::make("frobenius", std::move(residual), expected);
}

inline IdentityReport check_frobenius() { return check_frobenius(hamiltonians(true), frobenius_f12()); }

// dY1/dt2 - dY2/dt1 + [Y2, Y1] over the Hamiltonian fields of H.
inline IdentityReport check_zero_curvature(const HamiltonianSet& H) {
  const VectorField4 Y1 = hamiltonian_vector_field(H.h1);
  const VectorField4 Y2 = hamiltonian_vector_field(H.h2);
  VectorField4 residual = partial_derivative(Y1, Var::T2) - partial_derivative(Y2, Var::T1) + lie_bracket(Y2, Y1);
  return IdentityReport::make("zero_curvature", std::move(residual));
}

inline IdentityReport check_zero_curvature() { return check_zero_curvature(hamiltonians(true)); }

// Total derivative of L along X_{h_k} minus [U_k, L].
inline IdentityReport check_isospectral_lax(int k, const LaxTriple& lax, const HamiltonianSet& h) {
  const VectorField4 X = hamiltonian_vector_field(k == 1 ? h.h1 : h.h2);
  PolyMatrix2 residual = flow_derivative(lax.L, X) - commutator(lax.U(k), lax.L);
  return IdentityReport::make("isospectral_lax_k" + std::to_string(k), std::move(residual));
}

inline IdentityReport check_isospectral_lax(int k) {
  return check_isospectral_lax(k, lax_matrices(false), hamiltonians(false));
}

// Residual matrices printed for D_{t_k} L - [U_k, L] in the deformed system.
inline PolyMatrix2 printed_isomonodromic_display(int k) {
  using namespace sym;
  if (k == 1) return {0, 0, -2 * lambda(), 0};
  return {0, lambda(), -4 * lambda(2) - 2 * (x1() + 3 * t2()) * lambda(), 0};
}

// D_{t_k} L = dL/dt_k (explicit) + transport along Y_{H_k}. The full residual
// is D_{t_k} L - [U_k, L] - 2 lambda dU_k/dlambda; the intermediate
// D_{t_k} L - [U_k, L] is also compared with the printed display.
inline IdentityReport check_isomonodromic_lax(int k, const LaxTriple& lax, const HamiltonianSet& H) {
  const Var tk = k == 1 ? Var::T1 : Var::T2;
  const VectorField4 Y = hamiltonian_vector_field(k == 1 ? H.h1 : H.h2);
  const PolyMatrix2 total = partial_derivative(lax.L, tk) + flow_derivative(lax.L, Y);
  const PolyMatrix2 intermediate = total - commutator(lax.U(k), lax.L);
  const PolyMatrix2 spectral_term = 2 * sym::lambda() * partial_derivative(lax.U(k), Var::Lambda);

  const std::string name = "isomonodromic_lax_k" + std::to_string(k);
  IdentityReport report = IdentityReport::make(name, intermediate - spectral_term);
  report.with_part(IdentityReport::make(name + "_display", intermediate, printed_isomonodromic_display(k)));
  return report;
}

inline IdentityReport check_isomonodromic_lax(int k) {
  return check_isomonodromic_lax(k, lax_matrices(true), hamiltonians(true));
}

// Y_{{F,G}} + [Y_F, Y_G].
inline IdentityReport check_sign_convention(const LaurentPoly& F, const LaurentPoly& G) {
  VectorField4 residual = hamiltonian_vector_field(poisson_bracket(F, G)) +
                          lie_bracket(hamiltonian_vector_field(F), hamiltonian_vector_field(G));
  return IdentityReport::make("sign_convention", std::move(residual));
}

inline IdentityReport check_sign_convention() {
  const HamiltonianSet H = hamiltonians(true);
  return check_sign_convention(H.h1, H.h2);
}

// -det L(lambda); since trace L = 0 this is z^2 on the spectral curve det(L - z) = 0.
inline LaurentPoly spectral_curve(bool deformed) { return -det(lax_matrices(deformed).L); }

// The seven identities reported by `verify`.
inline std::vector<IdentityReport> run_all_checks() {
  return {check_involution(),        check_frobenius(),         check_zero_curvature(),
          check_isospectral_lax(1),  check_isospectral_lax(2),  check_isomonodromic_lax(1),
          check_isomonodromic_lax(2)};
}

}  // namespace hhp

#endif  // HHPAINLEVE_VERIFY_HPP
