#include <gtest/gtest.h>

#include <random>

#include "jacnewton/error.hpp"
#include "jacnewton/polyalg.hpp"
#include "oracles.hpp"
#include "printers.hpp"

using namespace jacnewton;

namespace {

BiPoly P(const char* s) { return parse_poly(s); }
BiPoly U(const char* s) { return parse_poly(s).with_vars(VarPair::uv); }

Errc error_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an error";
  return Errc::internal;
}

TEST(BigRatTest, ParseAndPrint) {
  EXPECT_EQ(to_string(parse_rat("6/4")), "3/2");
  EXPECT_EQ(to_string(parse_rat("-10/5")), "-2");
  EXPECT_EQ(to_string(parse_rat("0")), "0");
  EXPECT_EQ(error_of([] { parse_rat("1/0"); }), Errc::syntax);
  EXPECT_EQ(error_of([] { parse_rat("1.5"); }), Errc::syntax);
  EXPECT_TRUE(is_integer(parse_rat("8/4")));
  EXPECT_EQ(gcd(BigInt(12), BigInt(18)), 6);
  EXPECT_EQ(lcm(BigInt(4), BigInt(6)), 12);
}

TEST(ParseTest, KuoExpansion) {
  BiPoly f = P("(y^2-x^3)^2-x^7");
  std::vector<Monomial> want{{0, 4}, {3, 2}, {6, 0}, {7, 0}};
  std::vector<Monomial> got = f.support();
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  EXPECT_EQ(got, want);
  EXPECT_EQ(f.coeff(3, 2), -2);
  EXPECT_EQ(f.coeff(7, 0), -1);
}

TEST(ParseTest, CoefficientTimesMonomial) {
  BiPoly f = P("4x^5y");
  EXPECT_EQ(f, BiPoly::monomial(4, 5, 1));
  EXPECT_EQ(P("x"), BiPoly::monomial(1, 1, 0));
  EXPECT_EQ(P("3/4 x y^2"), BiPoly::monomial(parse_rat("3/4"), 1, 2));
  EXPECT_EQ(P("2^3"), BiPoly::constant(8));
}

TEST(ParseTest, Errors) {
  try {
    P("y^2 + + x");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.position(), 6u);
  }
  EXPECT_EQ(error_of([] { P("z + 1"); }), Errc::syntax);
  EXPECT_EQ(error_of([] { P("x^-2"); }), Errc::syntax);
  EXPECT_EQ(error_of([] { P("x + u"); }), Errc::syntax);
  EXPECT_EQ(error_of([] { P("(x+1"); }), Errc::syntax);
  EXPECT_EQ(error_of([] { P(""); }), Errc::syntax);
}

TEST(ParseTest, PrintParseFixedPoint) {
  std::mt19937 rng(7);
  for (int k = 0; k < 200; ++k) {
    BiPoly f = oracle::random_poly(rng, 6, 6, 9);
    f *= make_rat(1, 1 + k % 5);
    const std::string s = to_string(f);
    EXPECT_EQ(parse_poly(s), f) << s;
    EXPECT_EQ(to_string(parse_poly(s)), s);
  }
  EXPECT_EQ(to_string(BiPoly()), "0");
  EXPECT_EQ(to_string(U("v + u^3")), "v + u^3");
}

TEST(OrderTest, Examples) {
  EXPECT_EQ(order_at_origin(P("(y^2-x^3)^2-x^7")), 4u);
  EXPECT_EQ(order_at_origin(P("y-x^2")), 1u);
  EXPECT_EQ(error_of([] { order_at_origin(BiPoly()); }), Errc::zero_polynomial);
  EXPECT_EQ(lowest_form(P("y^2-x^3+x^2")), P("y^2+x^2"));
}

TEST(SquarefreeTest, Examples) {
  EXPECT_TRUE(is_squarefree(P("(y^2-x^3)^2-x^7")));
  EXPECT_FALSE(is_squarefree(P("(y-x)^2")));
  EXPECT_TRUE(is_squarefree(P("y^2-x^3")));
  EXPECT_FALSE(is_squarefree(P("(y^2-x^3)^2")));
  EXPECT_FALSE(is_squarefree(P("x*(y-x^2)^2*(y+1)")));
  EXPECT_EQ(error_of([] { is_squarefree(BiPoly()); }), Errc::zero_polynomial);
}

// For f monic in y, squarefree iff Res_y(f, f_y) != 0; the resultant path shares
// no code with the gcd.
TEST(SquarefreeTest, AgreesWithResultantOracle) {
  std::mt19937 rng(11);
  int squares = 0;
  for (int k = 0; k < 120; ++k) {
    BiPoly g = oracle::random_poly(rng, 2, 3, 3);
    BiPoly f = BiPoly::monomial(1, 0, 3) + oracle::random_poly(rng, 2, 3, 3);
    if (k % 3 == 0) {
      BiPoly h = BiPoly::monomial(1, 0, 1) + g;
      f = h * h * (BiPoly::monomial(1, 0, 1) + BiPoly::monomial(1, 1, 0));
      ++squares;
    }
    if (f.degree_y() == 0) continue;
    YPoly fy = YPoly::from_bipoly(f);
    bool oracle_sf = !oracle::cofactor_determinant(sylvester_matrix(fy, derivative(fy))).is_zero();
    EXPECT_EQ(is_squarefree(f), oracle_sf) << to_string(f);
  }
  EXPECT_GT(squares, 0);
}

TEST(SquarefreeTest, SquareIsNeverSquarefree) {
  std::mt19937 rng(3);
  for (int k = 0; k < 60; ++k) {
    BiPoly f = oracle::random_poly(rng, 3, 4, 5);
    if (f.is_constant()) continue;
    EXPECT_FALSE(is_squarefree(f * f)) << to_string(f);
  }
}

TEST(GcdTest, CommonFactor) {
  BiPoly a = P("(y^2-x^3)*(x+y+1)");
  BiPoly b = P("(y^2-x^3)*(x-y)^2");
  EXPECT_EQ(poly_gcd(a, b), P("y^2-x^3"));
  EXPECT_EQ(poly_gcd(P("x+1"), P("y")), P("1"));
}

TEST(ResultantTest, Examples) {
  // Res_y(y^2 - (u^3 + v), 2y) = -4(u^3 + v)
  YPoly a({U("-u^3 - v"), BiPoly::constant(0, VarPair::uv), BiPoly::constant(1, VarPair::uv)});
  YPoly b({BiPoly::constant(0, VarPair::uv), BiPoly::constant(2, VarPair::uv)});
  EXPECT_EQ(resultant_y(a, b), U("-4u^3 - 4v"));
  // Res_y(y - a, y - b) = a - b
  YPoly ya({U("-u"), BiPoly::constant(1, VarPair::uv)});
  YPoly yb({U("-v"), BiPoly::constant(1, VarPair::uv)});
  EXPECT_EQ(resultant_y(ya, yb), U("u - v"));
  // Res_y(p, c) = c^deg p
  YPoly c({BiPoly::constant(3, VarPair::uv)});
  EXPECT_EQ(resultant_y(a, c), BiPoly::constant(9, VarPair::uv));
  bool flag = false;
  EXPECT_EQ(resultant_y(c, c, &flag), BiPoly::constant(1, VarPair::uv));
  EXPECT_TRUE(flag);
}

TEST(ResultantTest, BareissMatchesCofactorOracle) {
  std::mt19937 rng(5);
  for (int k = 0; k < 80; ++k) {
    std::uniform_int_distribution<int> deg(1, 4);
    auto rand_y = [&](int d) {
      std::vector<BiPoly> cs;
      for (int j = 0; j <= d; ++j) {
        BiPoly c = oracle::random_poly(rng, 2, 2, 4);
        if (k % 2) c *= make_rat(1, 1 + j);
        cs.push_back(c);
      }
      if (cs.back().is_zero()) cs.back() = BiPoly::constant(1);
      return YPoly(cs);
    };
    YPoly p = rand_y(deg(rng));
    YPoly q = rand_y(deg(rng));
    auto m = sylvester_matrix(p, q);
    EXPECT_EQ(bareiss_determinant(m), oracle::cofactor_determinant(m));
  }
}

TEST(ResultantTest, SwapSignAndMultiplicativity) {
  std::mt19937 rng(9);
  auto monic = [&](int d) {
    std::vector<BiPoly> cs;
    for (int j = 0; j < d; ++j) cs.push_back(oracle::random_poly(rng, 2, 2, 3));
    cs.push_back(BiPoly::constant(1));
    return YPoly(cs);
  };
  for (int k = 0; k < 30; ++k) {
    YPoly p = monic(1 + k % 3), q = monic(1 + (k / 3) % 3), r = monic(1 + k % 2);
    BiPoly pq = resultant_y(p, q), qp = resultant_y(q, p);
    if ((p.degree() * q.degree()) % 2)
      EXPECT_EQ(pq, -qp);
    else
      EXPECT_EQ(pq, qp);
    EXPECT_EQ(resultant_y(p * r, q), resultant_y(p, q) * resultant_y(r, q));
  }
}

TEST(DiscriminantTest, Examples) {
  EXPECT_EQ(discriminant_surface(P("y^2-x^3")), U("-4v - 4u^3"));
  EXPECT_EQ(discriminant_surface(P("y")), BiPoly::constant(1, VarPair::uv));
  EXPECT_EQ(discriminant_surface(P("y^2")), U("-4v"));
  EXPECT_EQ(error_of([] { discriminant_surface(P("x*y^2 + y + x")); }), Errc::not_transverse);
  EXPECT_EQ(error_of([] { discriminant_surface(BiPoly()); }), Errc::zero_polynomial);
}

// Closed form: Res_y(y^n - u^m - v, n y^(n-1)) = +-n^n (u^m + v)^(n-1).
TEST(DiscriminantTest, BinomialClosedForm) {
  for (unsigned n = 2; n <= 5; ++n) {
    for (unsigned m = 2; m <= 6; ++m) {
      BiPoly f = BiPoly::monomial(1, 0, n) - BiPoly::monomial(1, m, 0);
      BiPoly d = discriminant_surface(f);
      BiPoly base = BiPoly::monomial(1, m, 0, VarPair::uv) + BiPoly::monomial(1, 0, 1, VarPair::uv);
      BiPoly expect = jacnewton::pow(base, n - 1) * jacnewton::pow(BigRat(n), n);
      EXPECT_TRUE(d == expect || d == -expect) << n << " " << m << ": " << to_string(d);
    }
  }
}

TEST(ShearTest, Examples) {
  EXPECT_EQ(shear(P("x"), Axis::x, 2), P("x+2y"));
  EXPECT_EQ(shear(P("y^2-x^3"), Axis::y, 1), P("(y+x)^2-x^3"));
  EXPECT_EQ(shear(shear(P("x^3y+y^4"), Axis::x, 3), Axis::x, -3), P("x^3y+y^4"));
}

TEST(ExactDivideTest, Examples) {
  EXPECT_EQ(exact_divide(P("(x+y)*(x-y^2)"), P("x-y^2")), P("x+y"));
  EXPECT_EQ(error_of([] { exact_divide(P("x+1"), P("y")); }), Errc::invalid_input);
}

TEST(ApproximateRootTest, PositiveControl) {
  YPoly f = YPoly::from_bipoly(P("(y^2-x^3)^2-4x^5y-x^7"));
  YPoly g = approximate_root(f, 2);
  EXPECT_EQ(g.to_bipoly(), P("y^2-x^3"));
  EXPECT_EQ(approximate_root(f, 1).to_bipoly(), f.to_bipoly());
  EXPECT_EQ(approximate_root(f, 4).to_bipoly(), P("y"));
}

TEST(ApproximateRootTest, DefiningInequality) {
  std::mt19937 rng(13);
  for (int k = 0; k < 40; ++k) {
    const int d = 4 + 2 * (k % 3);
    std::vector<BiPoly> cs;
    for (int j = 0; j < d; ++j) cs.push_back(oracle::random_poly(rng, 4, 2, 5));
    cs.push_back(BiPoly::constant(1));
    YPoly f(cs);
    for (unsigned p : {1u, 2u}) {
      YPoly g = approximate_root(f, p);
      EXPECT_TRUE(g.is_monic());
      EXPECT_EQ(g.degree(), d / static_cast<int>(p));
      EXPECT_LT((f - pow(g, p)).degree(), d - d / static_cast<int>(p));
    }
  }
  YPoly f = YPoly::from_bipoly(P("y^3 + x"));
  EXPECT_EQ(error_of([&] { approximate_root(f, 2); }), Errc::invalid_input);
  YPoly nm = YPoly::from_bipoly(P("2y^2 + x"));
  EXPECT_EQ(error_of([&] { approximate_root(nm, 2); }), Errc::invalid_input);
}

TEST(IntersectionTest, Examples) {
  auto Y = [](const char* s) { return YPoly::from_bipoly(parse_poly(s)); };
  EXPECT_EQ(intersection_number(Y("y^2-x^3"), Y("y")), 3u);
  EXPECT_EQ(intersection_number(Y("y-x"), Y("y+x")), 1u);
  EXPECT_EQ(intersection_number(Y("(y^2-x^3)^2-4x^5y-x^7"), Y("y^2-x^3")), 13u);
  EXPECT_EQ(error_of([&] { intersection_number(Y("y-1"), Y("y")); }), Errc::invalid_input);
  EXPECT_EQ(error_of([&] { intersection_number(Y("y^2-x^3"), Y("y^2-x^3")); }), Errc::invalid_input);
}

// Substitution oracle: f(t^4, t^6 + t^7) = 0 and (y^2 - x^3)(t^4, t^6 + t^7) has
// order 13 in t.
TEST(IntersectionTest, ParametrizationOracle) {
  BiPoly X = BiPoly::monomial(1, 4, 0);
  BiPoly Yt = BiPoly::monomial(1, 6, 0) + BiPoly::monomial(1, 7, 0);
  EXPECT_TRUE(oracle::substitute(P("(y^2-x^3)^2-4x^5y-x^7"), X, Yt).is_zero());
  EXPECT_EQ(oracle::t_order(oracle::substitute(P("y^2-x^3"), X, Yt)), 13u);
  BiPoly X2 = BiPoly::monomial(1, 2, 0), Y2 = BiPoly::monomial(1, 3, 0);
  EXPECT_EQ(oracle::t_order(oracle::substitute(P("(y^2-x^3)^2-4x^5y-x^7"), X2, Y2)), 13u);
}

TEST(LocalDiscriminantTest, Examples) {
  EXPECT_EQ(local_discriminant(P("y^2-x^3"), 2), P("-u^3-v").with_vars(VarPair::uv));
  EXPECT_EQ(local_discriminant(P("y-x^2"), 1), BiPoly::constant(1, VarPair::uv));
  EXPECT_THROW(local_discriminant(P("x^2+y^3"), 2), Error);
}

// The truncated local factor and the full Sylvester resultant are computed by
// unrelated routes; their Newton polygons must coincide.
TEST(LocalDiscriminantTest, SamePolygonAsFullResultant) {
  std::mt19937 rng(51);
  std::uniform_int_distribution<int> coeff(-3, 3), dd(1, 4), extra(0, 2), xdeg(1, 6), count(1, 5);
  int checked = 0;
  while (checked < 150) {
    const unsigned d = dd(rng), n = d + extra(rng);
    BiPoly f = BiPoly::monomial(1, 0, n);
    BiPoly g = BiPoly::monomial(1, 0, n - d);  // f(0,y) / y^d
    for (unsigned j = d; j < n; ++j) {
      int c = coeff(rng);
      f += BiPoly::monomial(c, 0, j);
      g += BiPoly::monomial(c, 0, j - d);
    }
    if (g.coeff(0, 0) == 0 || !is_squarefree(g)) continue;
    int k = count(rng);
    for (int i = 0; i < k; ++i) {
      int c = coeff(rng);
      if (c != 0) f += BiPoly::monomial(c, xdeg(rng), std::uniform_int_distribution<unsigned>(0, n - 1)(rng));
    }
    if (f.coeff(0, 0) != 0 || order_at_origin(f) != d || !is_squarefree(f)) continue;
    BiPoly full = discriminant_surface(f);
    EXPECT_EQ(newton_polygon(local_discriminant(f, d)), newton_polygon(full)) << to_string(f);
    ++checked;
  }
}

}  // namespace
