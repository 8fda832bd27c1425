#include <gtest/gtest.h>

#include "hhpainleve/model.hpp"
#include "random_poly.hpp"

namespace hhp {
namespace {

using namespace sym;

TEST(Potential, BaseVector) { EXPECT_EQ(potential(0), (PotentialPair{0, 1})); }

TEST(Potential, HenonHeilesIndex) {
  const PotentialPair v = potential(4);
  EXPECT_EQ(v.v1, x1().pow(3) + q(1, 2) * x1() * x2(2));
  EXPECT_EQ(v.v2, q(1, 16) * x2(4) + q(1, 4) * x1().pow(2) * x2(2));
}

TEST(Potential, LowIndices) {
  EXPECT_EQ(potential(2), (PotentialPair{x1(), q(1, 4) * x2(2)}));
  EXPECT_EQ(potential(3), (PotentialPair{x1().pow(2) + q(1, 4) * x2(2), q(1, 4) * x1() * x2(2)}));
  // adj(R)/det(R) applied once to (0, 1).
  EXPECT_EQ(potential(-1), (PotentialPair{4 * x2(-2), -4 * x1() * x2(-2)}));
}

TEST(Potential, DependsOnlyOnPositions) {
  for (int k = -4; k <= 8; ++k) {
    const PotentialPair v = potential(k);
    for (Var var : {Var::P1, Var::P2, Var::T1, Var::T2, Var::Lambda, Var::Alpha}) {
      EXPECT_FALSE(v.v1.depends_on(var)) << k;
      EXPECT_FALSE(v.v2.depends_on(var)) << k;
    }
  }
}

TEST(Potential, RecursionHoldsAcrossIntegers) {
  for (int k = -4; k <= 8; ++k) {
    const PotentialPair v = potential(k);
    const PotentialPair next = potential(k + 1);
    EXPECT_EQ(next.v1, x1() * v.v1 + v.v2) << k;
    EXPECT_EQ(next.v2, q(1, 4) * x2(2) * v.v1) << k;
    EXPECT_EQ(inverse_recursion_step(next), v) << k;
    EXPECT_EQ(recursion_step(inverse_recursion_step(v)), v) << k;
  }
}

TEST(Hamiltonians, AutonomousTerms) {
  const HamiltonianSet h = hamiltonians(false);
  EXPECT_FALSE(h.deformed);
  EXPECT_EQ(h.h2.coefficient(Monomial({0, 1, 1, 1, 0, 0, 0, 0})), q(1, 2));
  EXPECT_FALSE(h.h1.depends_on(Var::T1) || h.h1.depends_on(Var::T2));
  EXPECT_FALSE(h.h2.depends_on(Var::T1) || h.h2.depends_on(Var::T2));
  EXPECT_EQ(h.h2, q(1, 2) * x2() * p1() * p2() - q(1, 2) * x1() * p2().pow(2) + q(1, 16) * x2(4) +
                      q(1, 4) * x1().pow(2) * x2(2) - alpha() * x1() * x2(-2));
}

TEST(Hamiltonians, AlphaTermIsQuarterOfInversePotential) {
  const HamiltonianSet h = hamiltonians(false);
  const PotentialPair vm1 = potential(-1);
  EXPECT_EQ(h.h1 - geodesic_part(1), potential(4).v1 + q(1, 4) * alpha() * vm1.v1);
  EXPECT_EQ(h.h2 - geodesic_part(2), potential(4).v2 + q(1, 4) * alpha() * vm1.v2);
}

TEST(Hamiltonians, DeformedMatchesExpandedForm) {
  const HamiltonianSet H = hamiltonians(true);
  EXPECT_TRUE(H.deformed);
  EXPECT_EQ(H.h1, q(1, 2) * p1().pow(2) + q(1, 2) * p2().pow(2) + x1().pow(3) + q(1, 2) * x1() * x2(2) +
                      3 * t2() * (x1().pow(2) + q(1, 4) * x2(2)) + (t1() + 3 * t2().pow(2)) * x1() +
                      alpha() * x2(-2));
  EXPECT_EQ(H.h2, q(1, 2) * x2() * p1() * p2() - q(1, 2) * x1() * p2().pow(2) - p1() + q(1, 16) * x2(4) +
                      q(1, 4) * x1().pow(2) * x2(2) + q(1, 4) * 3 * t2() * x1() * x2(2) +
                      q(1, 4) * (t1() + 3 * t2().pow(2)) * x2(2) - alpha() * x1() * x2(-2));
}

TEST(Hamiltonians, DeformedReducesAtOrigin) {
  const HamiltonianSet H = hamiltonians(true);
  const HamiltonianSet h = hamiltonians(false);
  auto at_origin = [](const LaurentPoly& f) { return specialize(specialize(f, Var::T1, 0), Var::T2, 0); };
  EXPECT_EQ(at_origin(H.h1), h.h1);
  EXPECT_EQ(at_origin(H.h2), h.h2 - p1());
}

TEST(VectorField, HenonHeilesFlow) {
  const HamiltonianSet h = hamiltonians(false);
  const VectorField4 X1 = hamiltonian_vector_field(h.h1);
  EXPECT_EQ(X1[0], p1());
  EXPECT_EQ(X1[1], p2());
  EXPECT_EQ(X1[2], -3 * x1().pow(2) - q(1, 2) * x2(2));
  EXPECT_EQ(X1[3], -x1() * x2() + 2 * alpha() * x2(-3));

  const VectorField4 X2 = hamiltonian_vector_field(h.h2);
  EXPECT_EQ(X2[0], q(1, 2) * x2() * p2());
  EXPECT_EQ(X2[1], q(1, 2) * x2() * p1() - x1() * p2());
  EXPECT_EQ(X2[2], q(1, 2) * p2().pow(2) - q(1, 2) * x1() * x2(2) + alpha() * x2(-2));
  EXPECT_EQ(X2[3], -q(1, 2) * p1() * p2() - q(1, 4) * x2(3) - q(1, 2) * x1().pow(2) * x2() -
                       2 * alpha() * x1() * x2(-3));
}

TEST(VectorField, DeformedFlows) {
  const HamiltonianSet H = hamiltonians(true);
  const VectorField4 Y1 = hamiltonian_vector_field(H.h1);
  EXPECT_EQ(Y1[2], -3 * x1().pow(2) - q(1, 2) * x2(2) - 6 * t2() * x1() - t1() - 3 * t2().pow(2));
  EXPECT_EQ(Y1[3], -x1() * x2() - q(3, 2) * t2() * x2() + 2 * alpha() * x2(-3));

  const VectorField4 Y2 = hamiltonian_vector_field(H.h2);
  EXPECT_EQ(Y2[0], q(1, 2) * x2() * p2() - 1);
  EXPECT_EQ(Y2[1], q(1, 2) * x2() * p1() - x1() * p2());
  EXPECT_EQ(Y2[2], q(1, 2) * p2().pow(2) - q(1, 2) * x1() * x2(2) - q(3, 4) * t2() * x2(2) + alpha() * x2(-2));
  EXPECT_EQ(Y2[3], -q(1, 2) * p1() * p2() - q(1, 4) * x2(3) - q(1, 2) * x1().pow(2) * x2() -
                       q(3, 2) * t2() * x1() * x2() - q(1, 2) * (t1() + 3 * t2().pow(2)) * x2() -
                       2 * alpha() * x1() * x2(-3));
}

TEST(VectorField, ConstantHamiltonianGivesZeroField) {
  EXPECT_TRUE(hamiltonian_vector_field(LaurentPoly(q(5, 2)) + t1()).is_zero());
}

// -dH1/dx1 contributes -c2 = -(t1 + 3 t2^2) to the p1 force.
TEST(VectorField, DeformedForceSign) {
  const VectorField4 Y1 = hamiltonian_vector_field(hamiltonians(true).h1);
  EXPECT_EQ(Y1[2].coefficient(Monomial::of(Var::T1)), -1);
}

TEST(LieBracket, SelfBracketAndCommutingFlows) {
  const HamiltonianSet h = hamiltonians(false);
  const VectorField4 X1 = hamiltonian_vector_field(h.h1);
  const VectorField4 X2 = hamiltonian_vector_field(h.h2);
  EXPECT_TRUE(lie_bracket(X1, X1).is_zero());
  EXPECT_TRUE(lie_bracket(X1, X2).is_zero());
}

TEST(LieBracket, DeformedFieldsBracketToMinusBracketField) {
  const HamiltonianSet H = hamiltonians(true);
  const VectorField4 lhs = lie_bracket(hamiltonian_vector_field(H.h1), hamiltonian_vector_field(H.h2));
  const VectorField4 rhs = hamiltonian_vector_field(poisson_bracket(H.h1, H.h2));
  EXPECT_FALSE(lhs.is_zero());
  EXPECT_EQ(lhs, VectorField4{} - rhs);
}

TEST(LieBracket, AntisymmetryAndJacobi) {
  testing::PolyGen gen(7U);
  for (int i = 0; i < 25; ++i) {
    const VectorField4 A = gen.field(), B = gen.field(), C = gen.field();
    EXPECT_EQ(lie_bracket(A, B), VectorField4{} - lie_bracket(B, A));
    const VectorField4 jacobi =
        lie_bracket(A, lie_bracket(B, C)) + lie_bracket(B, lie_bracket(C, A)) + lie_bracket(C, lie_bracket(A, B));
    EXPECT_TRUE(jacobi.is_zero()) << jacobi.to_string();
  }
}

TEST(VectorField, LinearInHamiltonian) {
  testing::PolyGen gen(11U);
  for (int i = 0; i < 50; ++i) {
    const LaurentPoly f = gen.poly(), g = gen.poly();
    const Rational s = gen.rational();
    EXPECT_EQ(hamiltonian_vector_field(s * f + g), s * hamiltonian_vector_field(f) + hamiltonian_vector_field(g));
  }
}

TEST(Lax, AutonomousEntries) {
  const LaxTriple lax = lax_matrices(false);
  EXPECT_EQ(lax.L(0, 1), lambda(2) - x1() * lambda() - q(1, 4) * x2(2));
  EXPECT_EQ(lax.L(0, 0), p1() * lambda() + q(1, 2) * x2() * p2());
  EXPECT_EQ(lax.L(1, 1), -lax.L(0, 0));
  EXPECT_EQ(lax.U1(1, 0), -lambda() - 2 * x1());
  EXPECT_LE(lax.L(1, 0).max_degree(Var::Lambda), 3);
  EXPECT_THROW(static_cast<void>(lax.U(3)), InvalidArgument);
}

TEST(Lax, DeformedEntries) {
  const LaxTriple lax = lax_matrices(true);
  EXPECT_EQ(lax.U1(1, 0), -lambda() - 2 * x1() - 3 * t2());
  const auto l21 = collect(lax.L(1, 0), Var::Lambda);
  EXPECT_EQ(l21.at(1), -(2 * x1().pow(2) + q(1, 2) * x2(2) + 6 * x1() * t2() + 6 * t2().pow(2) + 2 * t1()));
  EXPECT_EQ(l21.at(2), -2 * (x1() + 3 * t2()));
  EXPECT_EQ(l21.at(3), LaurentPoly(-2));
  EXPECT_EQ(l21.at(0), p2().pow(2) + 2 * alpha() * x2(-2));
}

TEST(Lax, DeformedReducesAtOrigin) {
  const LaxTriple d = lax_matrices(true);
  const LaxTriple a = lax_matrices(false);
  auto at_origin = [](const PolyMatrix2& m) {
    return m.map([](const LaurentPoly& e) { return specialize(specialize(e, Var::T1, 0), Var::T2, 0); });
  };
  EXPECT_EQ(at_origin(d.L), a.L);
  EXPECT_EQ(at_origin(d.U1), a.U1);
  EXPECT_EQ(at_origin(d.U2), a.U2);
}

}  // namespace
}  // namespace hhp
