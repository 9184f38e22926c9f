// Bivariate gcd over Q: recursive content / primitive part with the
// subresultant pseudo-remainder sequence in y over the Euclidean ring Q[x].

#include <utility>

#include "jacnewton/error.hpp"
#include "jacnewton/polyalg.hpp"

namespace jacnewton {
namespace {

using QPoly = std::vector<BigRat>;  // dense in x
using XYPoly = std::vector<QPoly>;  // dense in y, coefficients in Q[x]

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}
void trim(XYPoly& p) {
  while (!p.empty() && p.back().empty()) p.pop_back();
}

QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

QPoly sub(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

std::pair<QPoly, QPoly> divmod(QPoly a, const QPoly& b) {
  if (b.empty()) throw Error(Errc::internal, "division by zero in Q[x]");
  QPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
  while (!a.empty() && a.size() >= b.size()) {
    std::size_t shift = a.size() - b.size();
    BigRat t = a.back() / b.back();
    q[shift] = t;
    for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] -= t * b[k];
    trim(a);
  }
  trim(q);
  return {q, a};
}

QPoly exact_div(const QPoly& a, const QPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.empty()) throw Error(Errc::internal, "inexact division in Q[x]");
  return q;
}

QPoly monic(QPoly p) {
  if (p.empty()) return p;
  BigRat lead = p.back();
  for (auto& c : p) c /= lead;
  return p;
}

QPoly gcd1(QPoly a, QPoly b) {
  while (!b.empty()) {
    QPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

QPoly pow1(const QPoly& a, unsigned e) {
  QPoly r{BigRat(1)};
  for (unsigned k = 0; k < e; ++k) r = mul(r, a);
  return r;
}

int degree(const XYPoly& p) { return static_cast<int>(p.size()) - 1; }

QPoly content(const XYPoly& p) {
  QPoly g;
  for (const auto& c : p) g = gcd1(g, c);
  return g;
}

XYPoly divide_coeffs(XYPoly p, const QPoly& c) {
  for (auto& k : p) k = exact_div(k, c);
  return p;
}

XYPoly primitive_part(const XYPoly& p) {
  if (p.empty()) return p;
  return divide_coeffs(p, content(p));
}

// lc(b)^(deg a - deg b + 1) * a  mod  b
XYPoly pseudo_remainder(XYPoly a, const XYPoly& b) {
  const int db = degree(b);
  int steps = degree(a) - db + 1;
  while (!a.empty() && degree(a) >= db) {
    const int shift = degree(a) - db;
    QPoly lead_a = a.back();
    for (auto& c : a) c = mul(c, b.back());
    for (int k = 0; k <= db; ++k) a[k + shift] = sub(a[k + shift], mul(lead_a, b[k]));
    trim(a);
    --steps;
  }
  if (steps > 0) {
    QPoly scale = pow1(b.back(), static_cast<unsigned>(steps));
    for (auto& c : a) c = mul(c, scale);
  }
  return a;
}

XYPoly gcd2(XYPoly a, XYPoly b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  QPoly ca = content(a);
  QPoly cb = content(b);
  QPoly d = gcd1(ca, cb);
  a = divide_coeffs(a, ca);
  b = divide_coeffs(b, cb);
  if (degree(a) < degree(b)) std::swap(a, b);

  QPoly g{BigRat(1)};
  QPoly h{BigRat(1)};
  while (true) {
    const int delta = degree(a) - degree(b);
    XYPoly r = pseudo_remainder(a, b);
    if (r.empty()) break;
    if (degree(r) == 0) {
      b = XYPoly{QPoly{BigRat(1)}};
      break;
    }
    a = std::move(b);
    QPoly divisor = mul(g, pow1(h, static_cast<unsigned>(delta)));
    b = divide_coeffs(std::move(r), divisor);
    g = a.back();
    if (delta > 0)
      h = exact_div(pow1(g, static_cast<unsigned>(delta)),
                    pow1(h, static_cast<unsigned>(delta - 1)));
  }
  XYPoly result = primitive_part(b);
  for (auto& c : result) c = mul(c, d);
  return result;
}

XYPoly to_xy(const BiPoly& f) {
  XYPoly r(f.is_zero() ? 0 : f.degree_y() + 1);
  for (const auto& [m, c] : f.terms()) {
    if (r[m.j].size() <= m.i) r[m.j].resize(m.i + 1);
    r[m.j][m.i] = c;
  }
  for (auto& q : r) trim(q);
  trim(r);
  return r;
}

BiPoly from_xy(const XYPoly& p, VarPair vars) {
  BiPoly r(vars);
  for (std::size_t j = 0; j < p.size(); ++j)
    for (std::size_t i = 0; i < p[j].size(); ++i)
      r.add_term({static_cast<unsigned>(i), static_cast<unsigned>(j)}, p[j][i]);
  return r;
}

}  // namespace

BiPoly poly_gcd(const BiPoly& a, const BiPoly& b) {
  XYPoly g = gcd2(to_xy(a), to_xy(b));
  BiPoly r = from_xy(g, a.vars());
  if (r.is_zero()) return r;
  // Leading term in (y, x) lex order gets coefficient 1.
  Monomial lead{0, 0};
  for (const auto& [m, c] : r.terms())
    if (m.j > lead.j || (m.j == lead.j && m.i > lead.i)) lead = m;
  return r * (1 / r.coeff(lead.i, lead.j));
}

bool is_squarefree(const BiPoly& f) {
  if (f.is_zero()) throw Error(Errc::zero_polynomial, "squarefreeness of the zero polynomial");
  BiPoly g = poly_gcd(poly_gcd(f, derivative(f, Axis::x)), derivative(f, Axis::y));
  return g.is_constant() && !g.is_zero();
}

}  // namespace jacnewton
