#include "jacnewton/polyalg.hpp"

#include <algorithm>
#include <limits>

#include "jacnewton/error.hpp"

namespace jacnewton {

BiPoly BiPoly::constant(const BigRat& c, VarPair vars) {
  BiPoly p(vars);
  p.add_term({0, 0}, c);
  return p;
}

BiPoly BiPoly::monomial(const BigRat& c, unsigned i, unsigned j, VarPair vars) {
  BiPoly p(vars);
  p.add_term({i, j}, c);
  return p;
}

BiPoly BiPoly::with_vars(VarPair vars) const {
  BiPoly p = *this;
  p.vars_ = vars;
  return p;
}

bool BiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{0, 0});
}

BigRat BiPoly::coeff(unsigned i, unsigned j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? BigRat(0) : it->second;
}

unsigned BiPoly::degree_x() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.i);
  return d;
}

unsigned BiPoly::degree_y() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.j);
  return d;
}

unsigned BiPoly::total_degree() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.i + m.j);
  return d;
}

std::vector<Monomial> BiPoly::support() const {
  std::vector<Monomial> s;
  s.reserve(terms_.size());
  for (const auto& [m, c] : terms_) s.push_back(m);
  return s;
}

void BiPoly::add_term(Monomial m, const BigRat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

BiPoly& BiPoly::operator+=(const BiPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly r(a.vars_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term({ma.i + mb.i, ma.j + mb.j}, ca * cb);
  return r;
}

BiPoly& BiPoly::operator*=(const BiPoly& other) { return *this = *this * other; }

BiPoly& BiPoly::operator*=(const BigRat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

BiPoly BiPoly::operator-() const {
  BiPoly r = *this;
  for (auto& [m, v] : r.terms_) v = -v;
  return r;
}

BiPoly pow(const BiPoly& base, unsigned exponent) {
  BiPoly result = BiPoly::constant(1, base.vars());
  BiPoly square = base;
  while (exponent > 0) {
    if (exponent & 1u) result *= square;
    exponent >>= 1;
    if (exponent > 0) square *= square;
  }
  return result;
}

BiPoly derivative(const BiPoly& f, Axis axis) {
  BiPoly r(f.vars());
  for (const auto& [m, c] : f.terms()) {
    if (axis == Axis::x && m.i > 0) r.add_term({m.i - 1, m.j}, c * m.i);
    if (axis == Axis::y && m.j > 0) r.add_term({m.i, m.j - 1}, c * m.j);
  }
  return r;
}

BiPoly exact_divide(const BiPoly& a, const BiPoly& b) {
  if (b.is_zero()) throw Error(Errc::zero_polynomial, "division by the zero polynomial");
  BiPoly quotient(a.vars());
  BiPoly rem = a;
  const auto& [lead_m, lead_c] = *b.terms().rbegin();
  while (!rem.is_zero()) {
    const auto& [m, c] = *rem.terms().rbegin();
    if (m.i < lead_m.i || m.j < lead_m.j)
      throw Error(Errc::invalid_input, "polynomial division is not exact");
    BiPoly t = BiPoly::monomial(c / lead_c, m.i - lead_m.i, m.j - lead_m.j, a.vars());
    quotient += t;
    rem -= t * b;
  }
  return quotient;
}

namespace {

BigInt binomial(unsigned n, unsigned k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace

BiPoly shear(const BiPoly& f, Axis axis, const BigRat& c) {
  if (c == 0) return f;
  BiPoly r(f.vars());
  for (const auto& [m, coef] : f.terms()) {
    // Expand (x + c y)^i or (y + c x)^j binomially.
    const unsigned n = axis == Axis::x ? m.i : m.j;
    BigRat cpow = 1;
    for (unsigned k = 0; k <= n; ++k) {
      // k counts the factors of the added term c*(other variable).
      BigRat term = coef * BigRat(binomial(n, k)) * cpow;
      if (axis == Axis::x)
        r.add_term({m.i - k, m.j + k}, term);
      else
        r.add_term({m.i + k, m.j - k}, term);
      cpow *= c;
    }
  }
  return r;
}

unsigned order_at_origin(const BiPoly& f) {
  if (f.is_zero()) throw Error(Errc::zero_polynomial, "order of the zero polynomial");
  unsigned d = std::numeric_limits<unsigned>::max();
  for (const auto& [m, c] : f.terms()) d = std::min(d, m.i + m.j);
  return d;
}

BiPoly lowest_form(const BiPoly& f) {
  const unsigned d = order_at_origin(f);
  BiPoly r(f.vars());
  for (const auto& [m, c] : f.terms())
    if (m.i + m.j == d) r.add_term(m, c);
  return r;
}

// ---------------------------------------------------------------------------
// YPoly

YPoly::YPoly(std::vector<BiPoly> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

void YPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

YPoly YPoly::from_bipoly(const BiPoly& f) {
  std::vector<BiPoly> coeffs(f.is_zero() ? 0 : f.degree_y() + 1, BiPoly(f.vars()));
  for (const auto& [m, c] : f.terms()) coeffs[m.j].add_term({m.i, 0}, c);
  return YPoly(std::move(coeffs));
}

BiPoly YPoly::to_bipoly() const {
  BiPoly r;
  if (!coeffs_.empty()) r = BiPoly(coeffs_.front().vars());
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    for (const auto& [m, c] : coeffs_[k].terms()) {
      if (m.j != 0)
        throw Error(Errc::invalid_input, "coefficient depends on the second base variable");
      r.add_term({m.i, static_cast<unsigned>(k)}, c);
    }
  }
  return r;
}

bool YPoly::is_monic() const {
  return !coeffs_.empty() && coeffs_.back() == BiPoly::constant(1);
}

const BiPoly& YPoly::coeff(std::size_t k) const {
  static const BiPoly zero;
  return k < coeffs_.size() ? coeffs_[k] : zero;
}

YPoly& YPoly::operator+=(const YPoly& other) {
  if (coeffs_.size() < other.coeffs_.size()) {
    VarPair vars = other.coeffs_.front().vars();
    coeffs_.resize(other.coeffs_.size(), BiPoly(vars));
  }
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  trim();
  return *this;
}

YPoly& YPoly::operator-=(const YPoly& other) {
  if (coeffs_.size() < other.coeffs_.size()) {
    VarPair vars = other.coeffs_.front().vars();
    coeffs_.resize(other.coeffs_.size(), BiPoly(vars));
  }
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  trim();
  return *this;
}

YPoly operator*(const YPoly& a, const YPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BiPoly> r(a.coeffs_.size() + b.coeffs_.size() - 1, BiPoly(a.leading().vars()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return YPoly(std::move(r));
}

YPoly operator*(const BiPoly& c, const YPoly& a) {
  std::vector<BiPoly> r = a.coeffs_;
  for (auto& k : r) k = c * k;
  return YPoly(std::move(r));
}

YPoly pow(const YPoly& base, unsigned exponent) {
  YPoly result({BiPoly::constant(1)});
  for (unsigned k = 0; k < exponent; ++k) result = result * base;
  return result;
}

YPoly derivative(const YPoly& f) {
  if (f.degree() <= 0) return {};
  std::vector<BiPoly> r;
  for (int k = 1; k <= f.degree(); ++k) r.push_back(f.coeff(k) * BigRat(k));
  return YPoly(std::move(r));
}

YDivision divide(const YPoly& dividend, const YPoly& divisor) {
  if (divisor.is_zero()) throw Error(Errc::zero_polynomial, "division by the zero polynomial");
  if (!divisor.leading().is_constant())
    throw Error(Errc::invalid_input, "divisor leading coefficient must be constant");
  const BigRat inv_lead = 1 / divisor.leading().coeff(0, 0);
  const int dd = divisor.degree();
  YPoly rem = dividend;
  std::vector<BiPoly> quot(std::max(0, dividend.degree() - dd + 1));
  while (!rem.is_zero() && rem.degree() >= dd) {
    const int shift = rem.degree() - dd;
    BiPoly t = rem.leading() * inv_lead;
    quot[shift] += t;
    std::vector<BiPoly> shifted(shift + 1, BiPoly(t.vars()));
    shifted[shift] = t;
    rem -= YPoly(std::move(shifted)) * divisor;
  }
  return {YPoly(std::move(quot)), rem};
}

// ---------------------------------------------------------------------------

std::vector<std::vector<BiPoly>> sylvester_matrix(const YPoly& p, const YPoly& q) {
  const int m = p.degree();
  const int n = q.degree();
  const int size = m + n;
  VarPair vars = p.leading().vars();
  std::vector<std::vector<BiPoly>> s(size, std::vector<BiPoly>(size, BiPoly(vars)));
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) s[r][r + k] = p.coeff(m - k);
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k) s[n + r][r + k] = q.coeff(n - k);
  return s;
}

BiPoly resultant_y(const YPoly& p, const YPoly& q, bool* both_constant) {
  if (p.is_zero() || q.is_zero())
    throw Error(Errc::zero_polynomial, "resultant with the zero polynomial");
  VarPair vars = p.leading().vars();
  if (both_constant) *both_constant = false;
  if (p.degree() == 0 && q.degree() == 0) {
    if (both_constant) *both_constant = true;
    return BiPoly::constant(1, vars);
  }
  return bareiss_determinant(sylvester_matrix(p, q)).with_vars(vars);
}

BiPoly discriminant_surface(const BiPoly& f) {
  if (f.is_zero()) throw Error(Errc::zero_polynomial, "discriminant of the zero polynomial");
  const YPoly fy = YPoly::from_bipoly(f);
  if (fy.degree() < 1) throw Error(Errc::invalid_input, "polynomial does not depend on y");
  if (!fy.leading().is_constant())
    throw Error(Errc::not_transverse,
                "leading y-coefficient is not constant; apply a shear x -> x + c*y first");
  std::vector<BiPoly> coeffs;
  for (const auto& c : fy.coefficients()) coeffs.push_back(c.with_vars(VarPair::uv));
  coeffs[0] -= BiPoly::monomial(1, 0, 1, VarPair::uv);
  YPoly shifted(std::move(coeffs));
  return resultant_y(shifted, derivative(shifted)).with_vars(VarPair::uv);
}

YPoly approximate_root(const YPoly& f, unsigned p) {
  if (p == 0) throw Error(Errc::invalid_input, "root index must be positive");
  if (!f.is_monic()) throw Error(Errc::invalid_input, "approximate roots need a monic polynomial");
  const int d = f.degree();
  if (d % static_cast<int>(p) != 0)
    throw Error(Errc::invalid_input,
                std::to_string(p) + " does not divide the y-degree " + std::to_string(d));
  const int m = d / static_cast<int>(p);
  const VarPair vars = f.leading().vars();
  std::vector<BiPoly> start(m + 1, BiPoly(vars));
  start[m] = BiPoly::constant(1, vars);
  YPoly g(std::move(start));
  for (int iter = 0; iter <= d + 1; ++iter) {
    YPoly h = f - pow(g, p);
    if (h.degree() < d - m) return g;
    YPoly denom = BiPoly::constant(BigRat(p), vars) * pow(g, p - 1);
    g += divide(h, denom).quotient;
  }
  throw Error(Errc::internal, "approximate root iteration did not converge");
}

unsigned intersection_number(const YPoly& f, const YPoly& g) {
  for (const YPoly* h : {&f, &g}) {
    if (!h->is_monic()) throw Error(Errc::invalid_input, "intersection_number needs monic inputs");
    for (int k = 0; k < h->degree(); ++k) {
      if (h->coeff(k).coeff(0, 0) != 0)
        throw Error(Errc::invalid_input,
                    "fibre over x = 0 is not concentrated at the origin");
    }
  }
  BiPoly res = resultant_y(f, g);
  if (res.is_zero()) throw Error(Errc::invalid_input, "common factor: intersection is infinite");
  unsigned ord = std::numeric_limits<unsigned>::max();
  for (const auto& [m, c] : res.terms()) {
    if (m.j != 0) throw Error(Errc::invalid_input, "coefficients must depend on x only");
    ord = std::min(ord, m.i);
  }
  return ord;
}

}  // namespace jacnewton
