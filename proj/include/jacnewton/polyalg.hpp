#pragma once

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "jacnewton/bigrat.hpp"

namespace jacnewton {

// Variable roles. Input curves live in (x,y); discriminants in (u,v).
enum class VarPair { xy, uv };
enum class Axis { x, y };

struct Monomial {
  unsigned i = 0;  // exponent of the first variable
  unsigned j = 0;  // exponent of the second variable
  auto operator<=>(const Monomial&) const = default;
};

/// Exact bivariate polynomial over the rationals. Zero coefficients are never
/// stored, so two polynomials are equal iff their term maps are equal.
class BiPoly {
 public:
  using Terms = std::map<Monomial, BigRat>;

  BiPoly() = default;
  explicit BiPoly(VarPair vars) : vars_(vars) {}

  static BiPoly constant(const BigRat& c, VarPair vars = VarPair::xy);
  static BiPoly monomial(const BigRat& c, unsigned i, unsigned j,
                         VarPair vars = VarPair::xy);

  const Terms& terms() const { return terms_; }
  VarPair vars() const { return vars_; }
  BiPoly with_vars(VarPair vars) const;

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  BigRat coeff(unsigned i, unsigned j) const;
  unsigned degree_x() const;
  unsigned degree_y() const;
  unsigned total_degree() const;
  std::vector<Monomial> support() const;

  void add_term(Monomial m, const BigRat& c);

  BiPoly& operator+=(const BiPoly& other);
  BiPoly& operator-=(const BiPoly& other);
  BiPoly& operator*=(const BiPoly& other);
  BiPoly& operator*=(const BigRat& c);
  BiPoly operator-() const;

  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(BiPoly a, const BigRat& c) { return a *= c; }
  friend BiPoly operator*(const BigRat& c, BiPoly a) { return a *= c; }

  // Variable labels do not take part in equality.
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
  VarPair vars_ = VarPair::xy;
};

BiPoly pow(const BiPoly& base, unsigned exponent);
BiPoly derivative(const BiPoly& f, Axis axis);

// Throws Errc::invalid_input when b does not divide a.
BiPoly exact_divide(const BiPoly& a, const BiPoly& b);

// f(x+c*y, y) for Axis::x, f(x, y+c*x) for Axis::y.
BiPoly shear(const BiPoly& f, Axis axis, const BigRat& c);

// Canonical printed form; parse_poly(to_string(f)) == f.
std::string to_string(const BiPoly& f);
BiPoly parse_poly(std::string_view text);

unsigned order_at_origin(const BiPoly& f);
BiPoly lowest_form(const BiPoly& f);

// gcd(f, f_x, f_y) is a nonzero constant.
bool is_squarefree(const BiPoly& f);

// gcd over Q[x,y], normalized to have leading coefficient 1 in (y, x) lex order.
BiPoly poly_gcd(const BiPoly& a, const BiPoly& b);

/// Polynomial in y whose coefficients are BiPolys in the remaining variables.
/// For a curve f(x,y) the coefficients only involve x; for f(u,y)-v they live
/// in Q[u,v].
class YPoly {
 public:
  YPoly() = default;
  explicit YPoly(std::vector<BiPoly> coefficients);

  // Views f(x,y) as a polynomial in y over Q[x]; coefficient k is stored with
  // monomials (i, 0) and inherits f's variable labels.
  static YPoly from_bipoly(const BiPoly& f);
  BiPoly to_bipoly() const;

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const;
  const std::vector<BiPoly>& coefficients() const { return coeffs_; }
  const BiPoly& coeff(std::size_t k) const;
  const BiPoly& leading() const { return coeffs_.back(); }

  YPoly& operator+=(const YPoly& other);
  YPoly& operator-=(const YPoly& other);
  friend YPoly operator+(YPoly a, const YPoly& b) { return a += b; }
  friend YPoly operator-(YPoly a, const YPoly& b) { return a -= b; }
  friend YPoly operator*(const YPoly& a, const YPoly& b);
  friend YPoly operator*(const BiPoly& c, const YPoly& a);
  friend bool operator==(const YPoly& a, const YPoly& b) = default;

 private:
  void trim();
  std::vector<BiPoly> coeffs_;
};

YPoly pow(const YPoly& base, unsigned exponent);
YPoly derivative(const YPoly& f);

struct YDivision {
  YPoly quotient;
  YPoly remainder;
};
// Requires the divisor's leading coefficient to be a nonzero constant.
YDivision divide(const YPoly& dividend, const YPoly& divisor);

// Rows of p first (deg q of them), then rows of q (deg p of them).
std::vector<std::vector<BiPoly>> sylvester_matrix(const YPoly& p, const YPoly& q);

// Fraction-free Gaussian elimination over Z[a,b] after clearing denominators.
BiPoly bareiss_determinant(const std::vector<std::vector<BiPoly>>& matrix);

// Determinant of the Sylvester matrix. When both inputs have degree 0 the
// result is 1 and `both_constant` (if given) is set.
BiPoly resultant_y(const YPoly& p, const YPoly& q, bool* both_constant = nullptr);

// D(u,v) = Res_y(f(u,y) - v, f_y(u,y)), raw (no sign or content normalization).
BiPoly discriminant_surface(const BiPoly& f);

// A polynomial with the same Newton polygon as discriminant_surface(f): the
// factor carried by the d - 1 roots of f_y through the origin, truncated at
// the first power of u that cannot affect the polygon. f must have constant
// leading y-coefficient and f(0,y) = y^d g(y) with g(0) != 0 and g
// squarefree, where d = order.
BiPoly local_discriminant(const BiPoly& f, unsigned order);

// Unique monic g with deg_y g = d/p and deg_y(f - g^p) < d - d/p.
YPoly approximate_root(const YPoly& f, unsigned p);

// ord_x Res_y(f, g) for monic f, g whose fibres over x = 0 sit at y = 0.
unsigned intersection_number(const YPoly& f, const YPoly& g);

}  // namespace jacnewton
