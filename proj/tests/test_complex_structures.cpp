#include <gtest/gtest.h>

#include <cmath>

#include "test_util.hpp"
#include "twistor4/complex_structures.hpp"

using namespace twistor4;
using namespace twistor4::testing;

namespace {

const Mat4 Ip1 = basis_I(Chirality::Plus, 1).matrix();
const Mat4 Im1 = basis_I(Chirality::Minus, 1).matrix();

}  // namespace

TEST(ClassifyOcs, Examples) {
  const OCS a = classify_ocs(basis_I(Chirality::Plus, 3).matrix());
  EXPECT_EQ(a.chirality(), Chirality::Plus);
  EXPECT_EQ(a.coords(), Vec3(0, 0, 1));

  const Mat4 m = (basis_I(Chirality::Minus, 1) + basis_I(Chirality::Minus, 2) + basis_I(Chirality::Minus, 3)).matrix() /
                 std::sqrt(3.0);
  const OCS b = classify_ocs(m);
  EXPECT_EQ(b.chirality(), Chirality::Minus);
  EXPECT_LE((b.coords() - Vec3(1, 1, 1) / std::sqrt(3.0)).norm(), 1e-15);
}

TEST(ClassifyOcs, BothChiralityBranches) {
  // c = 0 in the e1 column except the first entry: the a34·a12 branch decides.
  EXPECT_EQ(classify_ocs(Ip1).chirality(), Chirality::Plus);
  EXPECT_EQ(classify_ocs(Im1).chirality(), Chirality::Minus);
  EXPECT_EQ(classify_ocs(-Im1).chirality(), Chirality::Minus);
}

TEST(ClassifyOcs, RejectsNonStructures) {
  EXPECT_THROW(classify_ocs(Mat4::Identity()), NotAComplexStructure);
  EXPECT_THROW(classify_ocs(2 * Ip1), NotAComplexStructure);
  EXPECT_THROW(classify_ocs(wedge(unit(1), unit(2)).matrix()), NotAComplexStructure);
}

TEST(ComposeOcs, Examples) {
  EXPECT_EQ(compose_ocs(Chirality::Plus, Vec3(1, 0, 0)).matrix(), Ip1);
  EXPECT_EQ(compose_ocs(Chirality::Minus, Vec3(0, 0, 1)).matrix(), basis_I(Chirality::Minus, 3).matrix());

  const OCS a = compose_ocs(Chirality::Plus, Vec3(0.6, 0, 0.8));
  const Mat4 expected = (3 * basis_I(Chirality::Plus, 1) + 4 * basis_I(Chirality::Plus, 3)).matrix() / 5;
  EXPECT_LE(distance(a.matrix(), expected), 1e-15);
  EXPECT_LE(distance(a.matrix() * a.matrix(), -Mat4::Identity()), 1e-15);
}

TEST(ComposeOcs, RejectsNonUnit) { EXPECT_THROW(compose_ocs(Chirality::Plus, Vec3(1, 1, 0)), NonUnitCoords); }

TEST(ComposeOcs, RoundTripsAndStructureProperties) {
  for (int t = 0; t < 500; ++t) {
    const Chirality eps = random_chirality();
    const Vec3 c = random_unit3();
    const OCS a = compose_ocs(eps, c);
    const OCS back = classify_ocs(a.matrix());
    EXPECT_EQ(back.chirality(), eps);
    EXPECT_LE((back.coords() - c).norm(), 1e-12);
    EXPECT_LE(distance(compose_ocs(back.chirality(), back.coords()).matrix(), a.matrix()), 1e-12);
    EXPECT_LE(distance(a.matrix().transpose() * a.matrix(), Mat4::Identity()), 1e-13);
    EXPECT_LE(distance(a.matrix() * a.matrix(), -Mat4::Identity()), 1e-13);
    const Vec4 u = random_unit4();
    EXPECT_LE(std::abs(inner4(a.matrix() * u, u)), 1e-14);
  }
}

TEST(ComposeOcs, Negation) {
  const OCS a = compose_ocs(Chirality::Minus, Vec3(0, 1, 0));
  const OCS n = -a;
  EXPECT_EQ(n.matrix(), -a.matrix());
  EXPECT_EQ(n.coords(), Vec3(0, -1, 0));
  EXPECT_EQ(n.chirality(), Chirality::Minus);
}

TEST(OrientedPlane, RejectsDegeneratePairs) {
  EXPECT_THROW(OrientedPlane(unit(1), unit(1)), DegeneratePair);
  EXPECT_THROW(OrientedPlane(unit(1), 2 * unit(2)), DegeneratePair);
}

TEST(PlaneToPair, Examples) {
  const auto p12 = plane_to_pair(OrientedPlane(unit(1), unit(2)));
  EXPECT_EQ(p12.plus.matrix(), Ip1);
  EXPECT_EQ(p12.minus.matrix(), Im1);

  const auto p34 = plane_to_pair(OrientedPlane(unit(3), unit(4)));
  EXPECT_EQ(p34.plus.matrix(), Ip1);
  EXPECT_EQ(p34.minus.matrix(), -Im1);
}

TEST(PlaneToPair, StructuresRotateTheBasis) {
  for (int t = 0; t < 200; ++t) {
    const auto [a, b] = random_orthonormal_pair();
    const auto pair = plane_to_pair(OrientedPlane(a, b));
    EXPECT_LE((pair.plus.matrix() * a - b).norm(), 1e-12);
    EXPECT_LE((pair.minus.matrix() * a - b).norm(), 1e-12);
    EXPECT_EQ(pair.plus.chirality(), Chirality::Plus);
    EXPECT_EQ(pair.minus.chirality(), Chirality::Minus);
  }
}

TEST(PlaneToPair, OrderReversalNegatesBoth) {
  for (int t = 0; t < 100; ++t) {
    const auto [a, b] = random_orthonormal_pair();
    const auto ab = plane_to_pair(OrientedPlane(a, b));
    const auto ba = plane_to_pair(OrientedPlane(b, a));
    EXPECT_LE(distance(ba.plus.matrix(), -ab.plus.matrix()), 1e-12);
    EXPECT_LE(distance(ba.minus.matrix(), -ab.minus.matrix()), 1e-12);
  }
}

TEST(PlaneToPair, RotationWithinOrientationClassIsInvariant) {
  for (int t = 0; t < 100; ++t) {
    const auto [a, b] = random_orthonormal_pair();
    const double th = uniform(-M_PI, M_PI);
    const Vec4 a2 = std::cos(th) * a + std::sin(th) * b;
    const Vec4 b2 = -std::sin(th) * a + std::cos(th) * b;
    const auto p = plane_to_pair(OrientedPlane(a, b));
    const auto q = plane_to_pair(OrientedPlane(a2, b2));
    EXPECT_LE(distance(p.plus.matrix(), q.plus.matrix()), 1e-12);
    EXPECT_LE(distance(p.minus.matrix(), q.minus.matrix()), 1e-12);
  }
}

TEST(PairToPlane, Examples) {
  const OCS plus = classify_ocs(Ip1);
  const OCS minus = classify_ocs(Im1);
  const OrientedPlane p = pair_to_plane(plus, minus);
  EXPECT_LE(distance(p.projector(), OrientedPlane(unit(1), unit(2)).projector()), 1e-12);
  EXPECT_TRUE(same_oriented_plane(p, OrientedPlane(unit(1), unit(2))));

  const OrientedPlane q = pair_to_plane(plus, -minus);
  EXPECT_LE(distance(q.projector(), OrientedPlane(unit(3), unit(4)).projector()), 1e-12);
  EXPECT_LE((q.b() - Ip1 * q.a()).norm(), 1e-12);
  EXPECT_TRUE(same_oriented_plane(q, OrientedPlane(unit(3), unit(4))));
  EXPECT_FALSE(same_oriented_plane(q, OrientedPlane(unit(4), unit(3))));
}

TEST(PairToPlane, RejectsWrongChiralities) {
  const OCS plus = classify_ocs(Ip1);
  EXPECT_THROW(pair_to_plane(plus, plus), InvalidArgument);
}

TEST(PairToPlane, BijectionBothDirections) {
  for (int t = 0; t < 200; ++t) {
    const auto [a, b] = random_orthonormal_pair();
    const OrientedPlane p(a, b);
    const auto pair = plane_to_pair(p);
    const OrientedPlane back = pair_to_plane(pair.plus, pair.minus);
    EXPECT_LE(distance(back.projector(), p.projector()), 1e-10);
    EXPECT_TRUE(same_oriented_plane(back, p, 1e-10));

    const OCS plus = compose_ocs(Chirality::Plus, random_unit3());
    const OCS minus = compose_ocs(Chirality::Minus, random_unit3());
    const auto again = plane_to_pair(pair_to_plane(plus, minus));
    EXPECT_LE(distance(again.plus.matrix(), plus.matrix()), 1e-10);
    EXPECT_LE(distance(again.minus.matrix(), minus.matrix()), 1e-10);
  }
}

TEST(H1H2, Examples) {
  const auto f = h1h2_factorize(Mat4::Identity());
  EXPECT_EQ(f.b_quat, Vec4(1, 0, 0, 0));
  EXPECT_EQ(f.c_matrix(), Mat4::Identity());

  const Mat4 b0 = h1_matrix(Vec4(0, 1, 0, 0));
  const auto g = h1h2_factorize(b0);
  EXPECT_EQ(g.b_matrix(), b0);
  EXPECT_LE(distance(g.c_matrix(), Mat4::Identity()), 1e-15);
}

TEST(H1H2, RecoversRandomFactors) {
  for (int t = 0; t < 200; ++t) {
    const Vec4 b = random_unit4();
    const Mat3 c = random_rotation<3>();
    const Mat4 a = h1_matrix(b) * h2_matrix(c);
    const auto f = h1h2_factorize(a);
    EXPECT_LE((f.b_quat - b).norm(), 1e-12);
    EXPECT_LE((f.c_block - c).norm(), 1e-12);
    EXPECT_LE(distance(f.b_matrix() * f.c_matrix(), a), 1e-12);
  }
}

TEST(H1H2, H1IsClosedUnderProducts) {
  for (int t = 0; t < 100; ++t) {
    const Vec4 b = random_unit4(), bp = random_unit4();
    EXPECT_LE(distance(h1_matrix(b) * h1_matrix(bp), h1_matrix(h1_product(b, bp))), 1e-14);
    EXPECT_TRUE(is_special_orthogonal(h1_matrix(b), 1e-12));
  }
}

TEST(H1H2, RejectsNonRotations) {
  const Mat4 d = Vec4(1, 1, 1, -1).asDiagonal();
  EXPECT_THROW(h1h2_factorize(d), NotSO4);
  EXPECT_THROW(h1h2_factorize(2 * Mat4::Identity()), NotSO4);
}

TEST(Phi, Examples) {
  EXPECT_EQ(phi(Vec4(1, 0, 0, 0)), Mat3::Identity());
  for (int t = 0; t < 100; ++t) {
    const Vec4 b = random_unit4();
    EXPECT_EQ(phi(b), phi(-b));
  }
  EXPECT_THROW(phi(Vec4(1, 1, 0, 0)), NonUnitQuaternion);
}

TEST(Phi, IsAHomomorphismIntoSO3) {
  for (int t = 0; t < 200; ++t) {
    const Vec4 b = random_unit4(), bp = random_unit4();
    const Mat3 lhs = phi(h1_product(b, bp));
    EXPECT_LE((lhs - phi(b) * phi(bp)).norm(), 1e-12);
    EXPECT_LE((lhs.transpose() * lhs - Mat3::Identity()).norm(), 1e-12);
    EXPECT_NEAR(lhs.determinant(), 1.0, 1e-12);
  }
}

TEST(PhiTilde, Examples) {
  const auto [c, bc] = phi_tilde(Mat4::Identity());
  EXPECT_EQ(c, Mat3::Identity());
  EXPECT_EQ(bc, Mat3::Identity());

  const Mat3 c3 = random_rotation<3>();
  const auto [x, y] = phi_tilde(h2_matrix(c3));
  EXPECT_LE((x - c3).norm(), 1e-14);
  EXPECT_LE((y - c3).norm(), 1e-14);
}

TEST(PhiTilde, HomomorphismAndKernel) {
  for (int t = 0; t < 200; ++t) {
    const Mat4 a = random_rotation<4>(), b = random_rotation<4>();
    const auto pa = phi_tilde(a), pb = phi_tilde(b), pab = phi_tilde(a * b);
    EXPECT_LE((pab.first - pa.first * pb.first).norm(), 1e-12);
    EXPECT_LE((pab.second - pa.second * pb.second).norm(), 1e-12);
    const auto pm = phi_tilde(-a);
    EXPECT_EQ(pm.first, pa.first);
    EXPECT_EQ(pm.second, pa.second);
  }
}

TEST(ChiralityViaFrame, Examples) {
  EXPECT_EQ(chirality_via_frame(Ip1, unit(1), unit(3)), Chirality::Plus);
  EXPECT_EQ(chirality_via_frame(Im1, unit(1), unit(3)), Chirality::Minus);
  EXPECT_THROW(chirality_via_frame(Ip1, unit(1), unit(2)), FrameConditionViolated);
  EXPECT_THROW(chirality_via_frame(Mat4::Identity(), unit(1), unit(3)), NotAComplexStructure);
}

TEST(ChiralityViaFrame, IndependentOfTheFrame) {
  for (int t = 0; t < 100; ++t) {
    const OCS a = compose_ocs(random_chirality(), random_unit3());
    const Mat4& m = a.matrix();
    // Two frames (u, u′) with u′ ⟂ u, Au.
    for (int k = 0; k < 2; ++k) {
      const Vec4 u = random_unit4();
      Vec4 w = random_vec4();
      w -= inner4(w, u) * u + inner4(w, m * u) * (m * u);
      EXPECT_EQ(chirality_via_frame(m, u, w.normalized(), 1e-10), a.chirality());
    }
  }
}
