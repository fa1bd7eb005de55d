#include <cmath>

#include <gtest/gtest.h>

#include "liecurv/cartan_structures.hpp"
#include "test_support.hpp"

namespace liecurv {
namespace {

TEST(GlReal, ThetaIsNegativeTranspose) {
  const CartanStructure s = gl_real(2);
  EXPECT_EQ(s.theta(MatrixElement::unit(2, 0, 1)), -MatrixElement::unit(2, 1, 0));
  EXPECT_EQ(s.real_dimension(), 4);
  EXPECT_EQ(s.name(), "gl:real:2");
}

TEST(GlReal, BThetaIsFrobenius) {
  const CartanStructure s = gl_real(3);
  SampleStream stream(Seed{1});
  for (int trial = 0; trial < 100; ++trial) {
    const MatrixElement u = random_element(stream, 3);
    const MatrixElement v = random_element(stream, 3);
    EXPECT_NEAR(s.inner(u, u), u.real_part().array().square().sum(), 1e-14 * u.squared_norm());
    EXPECT_NEAR(s.inner(u, v), frobenius_inner(u, v), 1e-14 * (u.norm() * v.norm()));
  }
}

TEST(GlComplex, ThetaFixesSkewHermitian) {
  const CartanStructure s = gl_complex(2);
  const MatrixElement i_id = MatrixElement::identity(2, Field::kComplex).scaled(Scalar(0, 1));
  EXPECT_EQ(s.theta(i_id), i_id);
  const MatrixElement e11 = MatrixElement::unit(2, 0, 0, Field::kComplex);
  EXPECT_EQ(s.inner(e11.scaled(Scalar(0, 1)), e11), 0.0);
  EXPECT_EQ(s.real_dimension(), 8);
}

TEST(GlComplex, BThetaIsRealPartOfHermitianProduct) {
  const CartanStructure s = gl_complex(3);
  SampleStream stream(Seed{2});
  for (int trial = 0; trial < 100; ++trial) {
    const MatrixElement u = random_element(stream, 3, Field::kComplex);
    const MatrixElement v = random_element(stream, 3, Field::kComplex);
    const double expected = (u.data().adjoint() * v.data()).trace().real();
    EXPECT_NEAR(s.inner(u, v), expected, 1e-14 * (u.norm() * v.norm()));
  }
}

TEST(ThetaSplit, FlatPairSplit) {
  const ThetaSplit split = theta_split(gl_real(2), testing::flat_pair_u());
  const double a = std::sqrt(7.0) / 2.0;
  EXPECT_EQ(split.p_part, MatrixElement::diagonal({1, 2}));
  EXPECT_LE((split.k_part - MatrixElement::from_rows({{0, a}, {-a, 0}})).norm(), 1e-15);
}

TEST(ThetaSplit, PureInputs) {
  const CartanStructure s = gl_real(3);
  SampleStream stream(Seed{3});
  const MatrixElement x = random_element(stream, 3);
  const MatrixElement sym = x + x.transpose();
  const MatrixElement skew = x - x.transpose();
  EXPECT_EQ(theta_split(s, sym).p_part, sym);
  EXPECT_EQ(theta_split(s, sym).k_part, MatrixElement::zero(3));
  EXPECT_EQ(theta_split(s, skew).p_part, MatrixElement::zero(3));
  EXPECT_EQ(theta_split(s, skew).k_part, skew);
}

TEST(ThetaSplit, ReconstructsAndLandsInEigenspaces) {
  for (const CartanStructure& s : {gl_real(4), gl_complex(3)}) {
    SampleStream stream(Seed{4});
    for (int trial = 0; trial < 100; ++trial) {
      const MatrixElement u = random_in_algebra(s, stream);
      const ThetaSplit split = theta_split(s, u);
      EXPECT_LE((split.p_part + split.k_part - u).norm(), 1e-15 * u.norm());
      EXPECT_LE((s.theta(split.p_part) + split.p_part).norm(), 1e-13 * u.norm());
      EXPECT_LE((s.theta(split.k_part) - split.k_part).norm(), 1e-13 * u.norm());
    }
  }
}

TEST(ThetaSplit, GlRealMatchesSymmetricPartExactly) {
  const CartanStructure s = gl_real(3);
  const MatrixElement u = random_element(Seed{5}, 3);
  EXPECT_EQ(theta_split(s, u).p_part, 0.5 * (u + u.transpose()));
}

TEST(ThetaSplit, RejectsForeignElements) {
  EXPECT_THROW(theta_split(gl_real(2), MatrixElement::zero(3)), DimensionMismatch);
  EXPECT_THROW(theta_split(gl_real(2), MatrixElement::zero(2, Field::kComplex)), DimensionMismatch);
}

TEST(Classify, Classes) {
  const CartanStructure s = gl_real(2);
  EXPECT_EQ(classify(s, MatrixElement::zero(2)), Purity::kZero);
  EXPECT_EQ(classify(s, MatrixElement::diagonal({1, 2})), Purity::kP);
  EXPECT_EQ(classify(s, MatrixElement::from_rows({{0, 1}, {-1, 0}})), Purity::kK);
  EXPECT_EQ(classify(s, testing::flat_pair_u()), Purity::kMixed);
  // off-class component just under the purity tolerance still counts as pure
  EXPECT_EQ(classify(s, MatrixElement::from_rows({{1, 1e-12}, {0, 1}})), Purity::kP);
}

TEST(BracketInclusions, ProjectionsVanish) {
  for (const CartanStructure& s : {gl_real(3), gl_complex(2)}) {
    SampleStream stream(Seed{6});
    for (int trial = 0; trial < 100; ++trial) {
      const MatrixElement k1 = random_in_k(s, stream);
      const MatrixElement k2 = random_in_k(s, stream);
      const MatrixElement p1 = random_in_p(s, stream);
      const MatrixElement p2 = random_in_p(s, stream);
      EXPECT_LE(theta_split(s, bracket(k1, k2)).p_part.norm(), 1e-13 * k1.norm() * k2.norm());
      EXPECT_LE(theta_split(s, bracket(p1, p2)).p_part.norm(), 1e-13 * p1.norm() * p2.norm());
      EXPECT_LE(theta_split(s, bracket(k1, p1)).k_part.norm(), 1e-13 * k1.norm() * p1.norm());
    }
  }
}

TEST(AdjointIdentity, HoldsOnRandomTriples) {
  for (const CartanStructure& s : {gl_real(3), gl_complex(3)}) {
    SampleStream stream(Seed{7});
    for (int trial = 0; trial < 200; ++trial) {
      const MatrixElement u = random_in_algebra(s, stream);
      const MatrixElement v = random_in_algebra(s, stream);
      const MatrixElement w = random_in_algebra(s, stream);
      const double lhs = s.inner(bracket(u, w), v);
      const double rhs = -s.inner(w, bracket(s.theta(u), v));
      EXPECT_NEAR(lhs, rhs, 1e-12 * (u.norm() * v.norm() * w.norm() + 1e-14));
    }
  }
}

TEST(Validate, BuiltinStructuresPass) {
  for (const CartanStructure& s : {gl_real(3), gl_complex(2), gl_real(1), gl_real(5)}) {
    const ValidationReport report = validate(s);
    EXPECT_TRUE(report.all_passed()) << s.name();
    EXPECT_EQ(report.checks.size(), 11u);
    for (const auto& c : report.checks) EXPECT_TRUE(c.passed) << s.name() << " " << c.name;
  }
}

TEST(Validate, PositiveTransposeFailsPositivity) {
  const CartanStructure corrupted(
      "corrupted", 3, Field::kReal, [](const MatrixElement& x) { return x.transpose(); },
      [](const MatrixElement& x, const MatrixElement& y) {
        return x.data().cwiseProduct(y.data().transpose()).sum().real();
      });
  // <I, I> = -tr(I I) < 0
  EXPECT_LT(corrupted.inner(MatrixElement::identity(3), MatrixElement::identity(3)), 0.0);
  const ValidationReport report = validate(corrupted);
  EXPECT_FALSE(report.all_passed());
  ASSERT_NE(report.find("b_theta_positive_definite"), nullptr);
  EXPECT_FALSE(report.find("b_theta_positive_definite")->passed);
  EXPECT_LT(report.find("b_theta_positive_definite")->measure, 0.0);
  EXPECT_FALSE(report.find("theta_automorphism")->passed);
  EXPECT_TRUE(report.find("theta_involution")->passed);
}

TEST(Validate, CustomStructureCanBeRegistered) {
  // gl(n,R) with the metric scaled by 2: still a valid structure.
  const CartanStructure scaled(
      "gl:real:3x2", 3, Field::kReal, [](const MatrixElement& x) { return -x.transpose(); },
      [](const MatrixElement& x, const MatrixElement& y) {
        return 2.0 * x.data().cwiseProduct(y.data().transpose()).sum().real();
      });
  EXPECT_TRUE(validate(scaled).all_passed());
  EXPECT_DOUBLE_EQ(scaled.inner(MatrixElement::unit(3, 0, 1), MatrixElement::unit(3, 0, 1)), 2.0);
}

TEST(ParseStructure, Selectors) {
  EXPECT_EQ(parse_structure("gl:real:3").n(), 3);
  EXPECT_EQ(parse_structure("gl:complex:2").field(), Field::kComplex);
  for (const char* bad : {"gl:real:", "gl:real:0", "gl:real:x", "sl:real:2", "gl:quat:2", "gl:real:3x"}) {
    EXPECT_THROW(parse_structure(bad), ParseError) << bad;
  }
}

}  // namespace
}  // namespace liecurv
