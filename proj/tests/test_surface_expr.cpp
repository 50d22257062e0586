#include <gtest/gtest.h>

#include <cmath>

#include "test_util.hpp"
#include "twistor4/catalog.hpp"
#include "twistor4/surface_expr.hpp"

using namespace twistor4;
using namespace twistor4::testing;

namespace {

void expect_jet(const Jet2& j, std::array<double, 6> e, double tol = 0) {
  EXPECT_NEAR(j.val, e[0], tol);
  EXPECT_NEAR(j.du, e[1], tol);
  EXPECT_NEAR(j.dv, e[2], tol);
  EXPECT_NEAR(j.duu, e[3], tol);
  EXPECT_NEAR(j.duv, e[4], tol);
  EXPECT_NEAR(j.dvv, e[5], tol);
}

double value(const Expr& e, double u, double v) { return eval_jet2(e, u, v).val; }

// Largest jet-entry error against central differences with step h.
double fd_error(const Expr& e, double u, double v, double h) {
  const Jet2 j = eval_jet2(e, u, v);
  const double f = value(e, u, v);
  const double fu = (value(e, u + h, v) - value(e, u - h, v)) / (2 * h);
  const double fv = (value(e, u, v + h) - value(e, u, v - h)) / (2 * h);
  const double fuu = (value(e, u + h, v) - 2 * f + value(e, u - h, v)) / (h * h);
  const double fvv = (value(e, u, v + h) - 2 * f + value(e, u, v - h)) / (h * h);
  const double fuv = (value(e, u + h, v + h) - value(e, u + h, v - h) - value(e, u - h, v + h) +
                      value(e, u - h, v - h)) /
                     (4 * h * h);
  return std::max({std::abs(j.du - fu), std::abs(j.dv - fv), std::abs(j.duu - fuu), std::abs(j.duv - fuv),
                   std::abs(j.dvv - fvv)});
}

}  // namespace

TEST(Parse, SurfaceExample) {
  const SurfaceDef s = parse_surface("u, v, u^2 - v^2, 2*u*v", "holo");
  EXPECT_EQ(s.sources[2], "u^2 - v^2");
  EXPECT_EQ(s.sources[3], "2*u*v");
  EXPECT_EQ(s.name, "holo");
}

TEST(Parse, SyntaxErrorOffset) {
  try {
    Expr::parse("sin(u");
    FAIL() << "expected SyntaxError";
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.position(), 6u);
  }
  EXPECT_THROW(parse_surface("u, v, (u, 0"), SyntaxError);
  EXPECT_THROW(Expr::parse("u +"), SyntaxError);
  EXPECT_THROW(Expr::parse("2uv"), SyntaxError);
  EXPECT_THROW(Expr::parse(""), SyntaxError);
}

TEST(Parse, UnknownIdentifier) {
  try {
    parse_surface("u, v, w, 0");
    FAIL() << "expected UnknownIdentifier";
  } catch (const UnknownIdentifier& e) {
    EXPECT_EQ(e.name(), "w");
  }
}

TEST(Parse, Arity) {
  EXPECT_THROW(parse_surface("u, v, 0"), ArityError);
  EXPECT_THROW(parse_surface("u, v, 0, 0, 0"), ArityError);
  EXPECT_THROW(Expr::parse("sin(u, v)"), ArityError);
}

TEST(Parse, Precedence) {
  // ^ is right-associative and binds tighter than unary minus.
  EXPECT_EQ(value(Expr::parse("2^3^2"), 0, 0), 512.0);
  EXPECT_EQ(value(Expr::parse("-2^2"), 0, 0), -4.0);
  EXPECT_EQ(value(Expr::parse("1 - 2 - 3"), 0, 0), -4.0);
  EXPECT_EQ(value(Expr::parse("8 / 4 / 2"), 0, 0), 1.0);
  EXPECT_EQ(value(Expr::parse("1 + 2 * 3"), 0, 0), 7.0);
  EXPECT_NEAR(value(Expr::parse("pi"), 0, 0), M_PI, 0);
  EXPECT_NEAR(value(Expr::parse("e"), 0, 0), M_E, 0);
}

TEST(Parse, PrintRoundTrip) {
  for (const auto& entry : catalog()) {
    for (const auto& src : entry.surface().sources) {
      const Expr e = Expr::parse(src);
      const Expr again = Expr::parse(e.to_string());
      EXPECT_TRUE(again == e) << src << " -> " << e.to_string();
    }
  }
  const Expr e = Expr::parse("-(u^-2) + atan(v)/sqrt(u^2 + 1) - 0.1*tan(u)");
  EXPECT_TRUE(Expr::parse(e.to_string()) == e);
}

TEST(Parse, JsonForm) {
  const SurfaceDef s = parse_surface_json(
      R"({"name": "g", "f1": "u", "f2": "v", "f3": "u^2", "f4": "0", "domain": [0, 1, -2, 2]})");
  EXPECT_EQ(s.name, "g");
  EXPECT_EQ(s.domain.u1, 1.0);
  EXPECT_EQ(s.domain.v0, -2.0);
  const SurfaceDef back = parse_surface_json(surface_to_json(s));
  EXPECT_EQ(back.to_string(), s.to_string());
  for (int k = 0; k < 4; ++k) EXPECT_TRUE(back.components[k] == s.components[k]);
  EXPECT_ANY_THROW(parse_surface_json(R"({"f1": "u"})"));
}

TEST(Jet, PolynomialExample) {
  expect_jet(eval_jet2(Expr::parse("u^2 - v^2"), 1, 2), {-3, 2, -4, 2, 0, -2});
}

TEST(Jet, TranscendentalExample) {
  expect_jet(eval_jet2(Expr::parse("sin(u)*cosh(v)"), 0, 0), {0, 1, 0, 0, 0, 0});
}

TEST(Jet, HandDerivatives) {
  const double u = 0.3, v = -0.7;
  // exp(u v): du = v e, duu = v² e, duv = (1 + u v) e
  const double ex = std::exp(u * v);
  expect_jet(eval_jet2(Expr::parse("exp(u*v)"), u, v), {ex, v * ex, u * ex, v * v * ex, (1 + u * v) * ex, u * u * ex},
             1e-15);
  // log(u^2 + v^2)
  const double r = u * u + v * v;
  expect_jet(eval_jet2(Expr::parse("log(u^2 + v^2)"), u, v),
             {std::log(r), 2 * u / r, 2 * v / r, 2 * (v * v - u * u) / (r * r), -4 * u * v / (r * r),
              2 * (u * u - v * v) / (r * r)},
             1e-14);
}

TEST(Jet, ExactOnLowDegreePolynomials) {
  for (int t = 0; t < 50; ++t) {
    const double u = uniform(-2, 2), v = uniform(-2, 2);
    expect_jet(eval_jet2(Expr::parse("3*u^2 - 2*u*v + 5*v^2 - u + 7"), u, v),
               {3 * u * u - 2 * u * v + 5 * v * v - u + 7, 6 * u - 2 * v - 1, -2 * u + 10 * v, 6, -2, 10}, 1e-13);
  }
}

TEST(Jet, FiniteDifferenceConvergence) {
  for (const char* src : {"sin(u)*cosh(v)", "atan(u*v) + sqrt(2 + u)", "tan(u/3)^3 - exp(-v^2)", "(1 + u^2)^1.5"}) {
    const Expr e = Expr::parse(src);
    const double e1 = fd_error(e, 0.37, -0.21, 1e-2);
    const double e2 = fd_error(e, 0.37, -0.21, 5e-3);
    const double ratio = e1 / e2;
    EXPECT_GT(ratio, 3.5) << src;
    EXPECT_LT(ratio, 4.5) << src;
  }
}

TEST(Jet, DomainErrors) {
  EXPECT_THROW(eval_jet2(Expr::parse("log(u)"), 0, 0), DomainError);
  EXPECT_THROW(eval_jet2(Expr::parse("sqrt(u)"), -1, 0), DomainError);
  EXPECT_THROW(eval_jet2(Expr::parse("1/u"), 0, 0), DomainError);
  EXPECT_THROW(eval_jet2(Expr::parse("u^0.5"), -1, 0), DomainError);
  EXPECT_THROW(eval_jet2(Expr::parse("u^-1"), 0, 0), DomainError);
  EXPECT_THROW(eval_jet2(Expr::parse("tan(u)"), M_PI / 2, 0), DomainError);
  try {
    eval_jet2(Expr::parse("u + log(v - 1)"), 0, 0);
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_NE(e.subexpression().find("log"), std::string::npos);
  }
}

TEST(Jet, IntegerPowersOfNegativeBase) {
  expect_jet(eval_jet2(Expr::parse("u^3"), -2, 0), {-8, 12, 0, -12, 0, 0});
  expect_jet(eval_jet2(Expr::parse("u^-2"), -2, 0), {0.25, 0.25, 0, 0.375, 0, 0}, 1e-15);
}

TEST(SurfaceJet, Examples) {
  const SurfaceDef plane = parse_surface("u, v, 0, 0");
  const auto d = SurfaceDerivatives::from_jets(eval_surface_jet(plane, 0.4, -0.9));
  EXPECT_EQ(d.Fu, unit(1));
  EXPECT_EQ(d.Fv, unit(2));
  EXPECT_EQ(d.Fuu, Vec4::Zero());
  EXPECT_EQ(d.Fuv, Vec4::Zero());
  EXPECT_EQ(d.Fvv, Vec4::Zero());

  const SurfaceDef holo = parse_surface("u, v, u^2 - v^2, 2*u*v");
  const auto h = SurfaceDerivatives::from_jets(eval_surface_jet(holo, 0.3, 0.8));
  EXPECT_EQ(h.Fuu, Vec4(0, 0, 2, 0));
  EXPECT_EQ(h.Fvv, Vec4(0, 0, -2, 0));
}

TEST(SurfaceJet, CatalogEvaluatesOnDomains) {
  for (const auto& entry : catalog()) {
    const SurfaceDef s = entry.surface();
    for (int i = 0; i <= 10; ++i) {
      for (int j = 0; j <= 10; ++j) {
        const double u = s.domain.u0 + i * (s.domain.u1 - s.domain.u0) / 10;
        const double v = s.domain.v0 + j * (s.domain.v1 - s.domain.v0) / 10;
        EXPECT_NO_THROW(eval_surface_jet(s, u, v)) << entry.name;
      }
    }
  }
}
