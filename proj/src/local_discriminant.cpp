// The part of D(u,v) = Res_y(f(u,y) - v, f_y) that decides its Newton polygon.
//
// f_y splits over Q[[u]] as W * U with W monic of degree d - 1 whose roots
// pass through the origin. Res_y(f - v, U) is a unit at the origin, so
// N(D) = N(Res_y(f - v, W)), and Res_y(f - v, W) is, up to sign, the
// characteristic polynomial in v of multiplication by f on Q[[u]][y] / (W).
// Everything runs on power series truncated at u^N; N is doubled until
// D(u, 0) is visibly nonzero, after which higher powers of u cannot touch
// the polygon.

#include <optional>

#include "jacnewton/error.hpp"
#include "jacnewton/polyalg.hpp"

namespace jacnewton {
namespace {

using Series = std::vector<BigRat>;  // coefficients of u^0 .. u^(N-1)
using SPoly = std::vector<Series>;   // coefficients of y^0 .. in Q[[u]]
using UPoly = std::vector<BigRat>;   // univariate over Q, constant term first

struct Ring {
  std::size_t n;  // truncation order

  Series zero() const { return Series(n); }
  Series one() const {
    Series s(n);
    s[0] = 1;
    return s;
  }
  Series mul(const Series& a, const Series& b) const {
    Series r(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; i + j < n; ++j)
        if (b[j] != 0) r[i + j] += a[i] * b[j];
    }
    return r;
  }
  void add_to(Series& acc, const Series& a) const {
    for (std::size_t i = 0; i < n; ++i) acc[i] += a[i];
  }
  void sub_mul(Series& acc, const Series& a, const Series& b) const {
    for (std::size_t i = 0; i < n; ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; i + j < n; ++j)
        if (b[j] != 0) acc[i + j] -= a[i] * b[j];
    }
  }
};

void trim(UPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

UPoly umul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

UPoly usub(UPoly a, const UPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

void udivmod(UPoly a, const UPoly& b, UPoly& q, UPoly& r) {
  trim(a);
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, BigRat(0));
  while (a.size() >= b.size()) {
    std::size_t shift = a.size() - b.size();
    BigRat c = a.back() / b.back();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
    trim(a);
  }
  r = std::move(a);
}

// s, t with s*a + t*b = 1 for coprime a, b.
void bezout(const UPoly& a, const UPoly& b, UPoly& s, UPoly& t) {
  UPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    UPoly q, r;
    udivmod(r0, r1, q, r);
    UPoly s2 = usub(s0, umul(q, s1)), t2 = usub(t0, umul(q, t1));
    r0 = std::move(r1), r1 = std::move(r);
    s0 = std::move(s1), s1 = std::move(s2);
    t0 = std::move(t1), t1 = std::move(t2);
  }
  if (r0.size() != 1) throw Error(Errc::internal, "Hensel factors are not coprime");
  BigRat inv = 1 / r0[0];
  for (auto& c : s0) c *= inv;
  for (auto& c : t0) c *= inv;
  s = std::move(s0);
  t = std::move(t0);
}

// Coefficient of u^k in an SPoly, as a univariate polynomial in y.
UPoly slice(const SPoly& p, std::size_t k) {
  UPoly out(p.size());
  for (std::size_t j = 0; j < p.size(); ++j) out[j] = p[j][k];
  trim(out);
  return out;
}

// Monic W of degree m with W = y^m mod u and W | fy over Q[[u]] / (u^N).
SPoly hensel_factor(const SPoly& fy, std::size_t m, const Ring& R) {
  const std::size_t deg = fy.size() - 1;
  UPoly a0(m + 1);
  a0[m] = 1;
  UPoly b0;
  for (std::size_t j = m; j <= deg; ++j) b0.push_back(fy[j][0]);
  for (std::size_t j = 0; j < m; ++j)
    if (fy[j][0] != 0) throw Error(Errc::internal, "f_y(0, y) has order below d - 1");
  trim(b0);
  if (b0.empty() || b0[0] == 0) throw Error(Errc::internal, "f_y(0, y) has order above d - 1");
  UPoly s, t;
  bezout(a0, b0, s, t);

  std::vector<UPoly> A{a0}, B{b0};  // u-adic digits of W and U
  for (std::size_t k = 1; k < R.n; ++k) {
    UPoly e = slice(fy, k);
    for (std::size_t i = 1; i < k; ++i) e = usub(e, umul(A[i], B[k - i]));
    // A_k b0 + a0 B_k = e with deg A_k < m.
    UPoly ak = umul(e, t);
    if (ak.size() > m) ak.resize(m);
    trim(ak);
    UPoly rest = usub(e, umul(ak, b0));
    UPoly bk;
    for (std::size_t j = m; j < rest.size(); ++j) bk.push_back(rest[j]);
    for (std::size_t j = 0; j < std::min(m, rest.size()); ++j)
      if (rest[j] != 0) throw Error(Errc::internal, "Hensel step is not exact");
    A.push_back(std::move(ak));
    B.push_back(std::move(bk));
  }
  SPoly w(m + 1, R.zero());
  for (std::size_t k = 0; k < R.n; ++k)
    for (std::size_t j = 0; j < A[k].size(); ++j) w[j][k] = A[k][j];
  return w;
}

// p mod w for monic w.
SPoly reduce_mod(SPoly p, const SPoly& w, const Ring& R) {
  const std::size_t m = w.size() - 1;
  for (std::size_t top = p.size(); top-- > m;) {
    Series c = p[top];
    for (std::size_t j = 0; j < m; ++j) R.sub_mul(p[top - m + j], c, w[j]);
    p.pop_back();
  }
  p.resize(m, R.zero());
  return p;
}

// det(x I - M) by Berkowitz's division-free recursion; coefficients of
// x^m, x^(m-1), ..., x^0.
std::vector<Series> charpoly(const std::vector<std::vector<Series>>& M, const Ring& R) {
  const std::size_t m = M.size();
  std::vector<Series> p{R.one()};
  for (std::size_t r = 0; r < m; ++r) {
    // Split the leading (r+1) block as [[A, S], [Rw, a]].
    // First column of the Toeplitz factor: 1, -a, -Rw S, -Rw A S, ...
    std::vector<Series> col(r + 2, R.zero());
    col[0] = R.one();
    R.sub_mul(col[1], R.one(), M[r][r]);
    std::vector<Series> v(r);  // A^k S
    for (std::size_t i = 0; i < r; ++i) v[i] = M[i][r];
    for (std::size_t k = 2; k <= r + 1; ++k) {
      Series acc = R.zero();
      for (std::size_t i = 0; i < r; ++i) R.sub_mul(acc, M[r][i], v[i]);
      col[k] = acc;
      if (k == r + 1) break;
      std::vector<Series> next(r, R.zero());
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
          Series prod = R.mul(M[i][j], v[j]);
          R.add_to(next[i], prod);
        }
      v = std::move(next);
    }
    std::vector<Series> q(r + 2, R.zero());
    for (std::size_t i = 0; i < r + 2; ++i)
      for (std::size_t j = 0; j < p.size() && j <= i; ++j) R.add_to(q[i], R.mul(col[i - j], p[j]));
    p = std::move(q);
  }
  return p;
}

std::optional<BiPoly> attempt(const BiPoly& f, unsigned order, std::size_t precision) {
  Ring R{precision};
  const unsigned n = f.degree_y();
  SPoly fs(n + 1, R.zero());
  for (const auto& [mono, c] : f.terms())
    if (mono.i < precision) fs[mono.j][mono.i] = c;
  SPoly fy(n, R.zero());
  for (unsigned j = 1; j <= n; ++j)
    for (std::size_t i = 0; i < precision; ++i) fy[j - 1][i] = fs[j][i] * j;

  const std::size_t m = order - 1;
  SPoly w = hensel_factor(fy, m, R);
  SPoly fr = reduce_mod(fs, w, R);

  // Column k of the multiplication matrix is y^k f mod w.
  std::vector<std::vector<Series>> M(m, std::vector<Series>(m, R.zero()));
  SPoly cur = fr;
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t i = 0; i < m; ++i) M[i][k] = cur[i];
    cur.insert(cur.begin(), R.zero());
    cur = reduce_mod(cur, w, R);
  }
  std::vector<Series> chi = charpoly(M, R);  // chi[k] multiplies v^(m-k)

  const Series& constant = chi[m];
  bool visible = false;
  for (const auto& c : constant) visible = visible || c != 0;
  if (!visible) return std::nullopt;

  // prod (f(eta) - v) = (-1)^m chi(v)
  BiPoly out(VarPair::uv);
  const int sign = m % 2 ? -1 : 1;
  for (std::size_t k = 0; k <= m; ++k)
    for (std::size_t i = 0; i < precision; ++i)
      if (chi[k][i] != 0) out.add_term({static_cast<unsigned>(i), static_cast<unsigned>(m - k)}, sign * chi[k][i]);
  return out;
}

}  // namespace

BiPoly local_discriminant(const BiPoly& f, unsigned order) {
  if (order == 0) throw Error(Errc::invalid_input, "f does not vanish at the origin");
  if (YPoly::from_bipoly(f).leading().degree_x() > 0 || f.coeff(0, order) == 0)
    throw Error(Errc::not_transverse, "local discriminant needs a transverse f with constant leading coefficient");
  if (order == 1) return BiPoly::constant(1, VarPair::uv);
  for (std::size_t precision = 16; precision <= (1u << 16); precision *= 2)
    if (auto d = attempt(f, order, precision)) return *d;
  throw Error(Errc::internal, "local discriminant vanished to very high order");
}

}  // namespace jacnewton
