#include <gtest/gtest.h>

#include "test_util.hpp"
#include "twistor4/linalg4.hpp"

using namespace twistor4;
using namespace twistor4::testing;

TEST(Inner4, Examples) {
  EXPECT_EQ(inner4(unit(1), unit(1)), 1.0);
  EXPECT_EQ(inner4(unit(1), unit(2)), 0.0);
  EXPECT_EQ(inner4(Vec4(1, 2, 3, 4), Vec4(4, 3, 2, 1)), 20.0);
}

TEST(Wedge, SelfWedgeIsZero) {
  const Vec4 a = random_vec4();
  EXPECT_EQ(wedge(a, a).matrix(), Mat4::Zero());
}

TEST(Wedge, EntryConvention) {
  // a ∧ b = b ᵗa − a ᵗb, so (e1 ∧ e2)(2,1) = 1
  const Mat4 m = wedge(unit(1), unit(2)).matrix();
  EXPECT_EQ(m(1, 0), 1.0);
  EXPECT_EQ(m(0, 1), -1.0);
}

TEST(Wedge, BasisIdentities) {
  EXPECT_EQ((wedge(unit(1), unit(2)) + wedge(unit(3), unit(4))).matrix(), basis_I(Chirality::Plus, 1).matrix());
  EXPECT_EQ((wedge(unit(1), unit(2)) - wedge(unit(3), unit(4))).matrix(), basis_I(Chirality::Minus, 1).matrix());
}

TEST(Wedge, AntisymmetryExact) {
  for (int t = 0; t < 100; ++t) {
    const Vec4 a = random_vec4(), b = random_vec4();
    EXPECT_EQ((wedge(a, b) + wedge(b, a)).matrix(), Mat4::Zero());
  }
}

TEST(MatInner, Examples) {
  const Mat4 ip1 = basis_I(Chirality::Plus, 1).matrix();
  EXPECT_EQ(mat_inner(ip1, ip1), 1.0);
  EXPECT_EQ(mat_inner(ip1, basis_I(Chirality::Minus, 2).matrix()), 0.0);
  EXPECT_EQ(mat_inner(Mat4::Identity(), Mat4::Identity()), 1.0);
}

TEST(BasisI, OrthonormalityIsExact) {
  const Chirality eps[2] = {Chirality::Plus, Chirality::Minus};
  for (auto e1 : eps) {
    for (int k = 1; k <= 3; ++k) {
      for (auto e2 : eps) {
        for (int l = 1; l <= 3; ++l) {
          const double expected = (e1 == e2 && k == l) ? 1.0 : 0.0;
          EXPECT_EQ(mat_inner(basis_I(e1, k).matrix(), basis_I(e2, l).matrix()), expected);
        }
      }
    }
  }
}

TEST(BasisI, DisplayedEntries) {
  const Mat4 p = basis_I(Chirality::Plus, 1).matrix();
  EXPECT_EQ(p(1, 0), 1.0);
  EXPECT_EQ(p(3, 2), 1.0);
  const Mat4 m = basis_I(Chirality::Minus, 1).matrix();
  EXPECT_EQ(m(1, 0), 1.0);
  EXPECT_EQ(m(2, 3), 1.0);
  EXPECT_TRUE(is_alternating(p));
}

TEST(BasisI, SquaresToMinusIdentity) {
  for (auto eps : {Chirality::Plus, Chirality::Minus}) {
    for (int k = 1; k <= 3; ++k) {
      const Mat4 a = basis_I(eps, k).matrix();
      EXPECT_EQ(a * a, -Mat4::Identity());
    }
  }
}

TEST(BasisI, RejectsBadIndex) {
  EXPECT_THROW(basis_I(Chirality::Plus, 0), InvalidArgument);
  EXPECT_THROW(basis_I(Chirality::Plus, 4), InvalidArgument);
}

TEST(BivectorCoords, Examples) {
  const auto c2 = bivector_coords(basis_I(Chirality::Plus, 2));
  EXPECT_EQ(c2.plus, Vec3(0, 1, 0));
  EXPECT_EQ(c2.minus, Vec3::Zero());

  const auto c = bivector_coords(wedge(unit(1), unit(2)));
  EXPECT_EQ(c.plus, Vec3(0.5, 0, 0));
  EXPECT_EQ(c.minus, Vec3(0.5, 0, 0));

  const auto z = bivector_coords(Bivector());
  EXPECT_EQ(z.plus, Vec3::Zero());
  EXPECT_EQ(z.minus, Vec3::Zero());
}

TEST(BivectorCoords, RoundTrip) {
  for (int t = 0; t < 200; ++t) {
    const Bivector b = wedge(random_vec4(), random_vec4());
    EXPECT_LE(distance(from_coords(bivector_coords(b)).matrix(), b.matrix()), 1e-14 * (1 + b.matrix().norm()));
  }
}

TEST(BivectorCoords, RejectsNonAlternating) {
  EXPECT_THROW(bivector_coords(Mat4::Identity()), InvalidArgument);
  EXPECT_THROW(Bivector::from_matrix(Mat4::Identity()), InvalidArgument);
}

TEST(Predicates, Examples) {
  EXPECT_TRUE(is_orthogonal(Mat4::Identity()));
  EXPECT_TRUE(is_special_orthogonal(Mat4::Identity()));

  const Mat4 d = Vec4(1, 1, 1, -1).asDiagonal();
  EXPECT_TRUE(is_orthogonal(d));
  EXPECT_FALSE(is_special_orthogonal(d));
  EXPECT_EQ(det4(d), -1.0);

  const Mat4 i1 = basis_I(Chirality::Plus, 1).matrix();
  EXPECT_TRUE(is_special_orthogonal(i1));
  EXPECT_NEAR(det4(i1), 1.0, 1e-15);

  EXPECT_FALSE(is_orthogonal(2 * Mat4::Identity()));
}

TEST(Predicates, OrthogonalPreservesInnerProduct) {
  for (int t = 0; t < 100; ++t) {
    const Mat4 a = random_rotation<4>();
    const Vec4 x = random_vec4(), y = random_vec4();
    EXPECT_NEAR(inner4(a * x, a * y), inner4(x, y), 1e-12);
  }
}

TEST(Chirality, Helpers) {
  EXPECT_EQ(sign(Chirality::Plus), 1.0);
  EXPECT_EQ(sign(Chirality::Minus), -1.0);
  EXPECT_EQ(opposite(Chirality::Plus), Chirality::Minus);
  EXPECT_EQ(symbol(Chirality::Minus), '-');
}
