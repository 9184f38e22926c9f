#include "jacnewton/cyclotomic.hpp"

#include <map>
#include <numeric>

#include "jacnewton/error.hpp"

namespace jacnewton {
namespace {

// Exact quotient of integer polynomials by a monic divisor.
std::vector<BigInt> divide_monic(std::vector<BigInt> a, const std::vector<BigInt>& b) {
  const std::size_t db = b.size() - 1;
  std::vector<BigInt> q(a.size() - db, 0);
  for (std::size_t k = a.size(); k-- > db;) {
    BigInt c = a[k];
    q[k - db] = c;
    for (std::size_t t = 0; t <= db; ++t) a[k - db + t] -= c * b[t];
  }
  return q;
}

// Remainder of a rational polynomial modulo the monic cyclotomic polynomial.
std::vector<BigRat> reduce_mod(std::vector<BigRat> a, unsigned n) {
  const std::vector<BigInt> phi = cyclotomic_polynomial(n);
  const std::size_t d = phi.size() - 1;
  for (std::size_t k = a.size(); k-- > d;) {
    if (a[k] == 0) continue;
    BigRat c = a[k];
    for (std::size_t t = 0; t <= d; ++t) a[k - d + t] -= c * BigRat(phi[t]);
  }
  a.resize(d, BigRat(0));
  return a;
}

unsigned lcm_order(unsigned a, unsigned b) { return std::lcm(a, b); }

}  // namespace

std::vector<BigInt> cyclotomic_polynomial(unsigned n) {
  if (n == 0) throw Error(Errc::invalid_input, "cyclotomic order must be positive");
  thread_local std::map<unsigned, std::vector<BigInt>> cache;
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  // x^n - 1 divided by Phi_d for every proper divisor d of n.
  std::vector<BigInt> p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (unsigned d = 1; d < n; ++d)
    if (n % d == 0) p = divide_monic(std::move(p), cyclotomic_polynomial(d));
  cache.emplace(n, p);
  return p;
}

unsigned euler_phi(unsigned n) {
  unsigned count = 0;
  for (unsigned k = 1; k <= n; ++k)
    if (std::gcd(k, n) == 1) ++count;
  return count;
}

CycloNum::CycloNum(unsigned order) : order_(order), coords_(euler_phi(order), BigRat(0)) {
  if (order == 0) throw Error(Errc::invalid_input, "cyclotomic order must be positive");
}

CycloNum::CycloNum(unsigned order, std::vector<BigRat> coords)
    : order_(order), coords_(std::move(coords)) {
  if (order == 0) throw Error(Errc::invalid_input, "cyclotomic order must be positive");
  if (coords_.size() != euler_phi(order))
    throw Error(Errc::invalid_input, "Q(zeta_" + std::to_string(order) + ") needs " +
                                         std::to_string(euler_phi(order)) + " coordinates, got " +
                                         std::to_string(coords_.size()));
}

CycloNum CycloNum::rational(const BigRat& value, unsigned order) {
  CycloNum c(order);
  c.coords_[0] = value;
  return c;
}

CycloNum CycloNum::zeta_power(unsigned order, unsigned k) {
  std::vector<BigRat> poly(k % order + 1, BigRat(0));
  poly.back() = 1;
  return CycloNum(order, reduce_mod(std::move(poly), order));
}

bool CycloNum::is_zero() const {
  for (const auto& c : coords_)
    if (c != 0) return false;
  return true;
}

CycloNum CycloNum::embed(unsigned m) const {
  if (m == 0 || m % order_ != 0)
    throw Error(Errc::invalid_input, "cannot embed Q(zeta_" + std::to_string(order_) +
                                         ") into Q(zeta_" + std::to_string(m) + ")");
  if (m == order_) return *this;
  const unsigned step = m / order_;
  std::vector<BigRat> poly(step * (coords_.size() - 1) + 1, BigRat(0));
  for (std::size_t k = 0; k < coords_.size(); ++k) poly[k * step] = coords_[k];
  return CycloNum(m, reduce_mod(std::move(poly), m));
}

CycloNum operator+(const CycloNum& a, const CycloNum& b) {
  const unsigned m = lcm_order(a.order_, b.order_);
  CycloNum x = a.embed(m);
  const CycloNum y = b.embed(m);
  for (std::size_t k = 0; k < x.coords_.size(); ++k) x.coords_[k] += y.coords_[k];
  return x;
}

CycloNum operator-(const CycloNum& a, const CycloNum& b) {
  const unsigned m = lcm_order(a.order_, b.order_);
  CycloNum x = a.embed(m);
  const CycloNum y = b.embed(m);
  for (std::size_t k = 0; k < x.coords_.size(); ++k) x.coords_[k] -= y.coords_[k];
  return x;
}

CycloNum operator*(const CycloNum& a, const CycloNum& b) {
  const unsigned m = lcm_order(a.order_, b.order_);
  const CycloNum x = a.embed(m);
  const CycloNum y = b.embed(m);
  std::vector<BigRat> prod(x.coords_.size() + y.coords_.size() - 1, BigRat(0));
  for (std::size_t i = 0; i < x.coords_.size(); ++i)
    for (std::size_t j = 0; j < y.coords_.size(); ++j) prod[i + j] += x.coords_[i] * y.coords_[j];
  return CycloNum(m, reduce_mod(std::move(prod), m));
}

bool operator==(const CycloNum& a, const CycloNum& b) {
  const unsigned m = lcm_order(a.order_, b.order_);
  return a.embed(m).coords_ == b.embed(m).coords_;
}

std::string to_string(const CycloNum& c) {
  std::string out = "[";
  for (std::size_t k = 0; k < c.coords().size(); ++k) {
    if (k) out += ",";
    out += to_string(c.coords()[k]);
  }
  return out + "]_" + std::to_string(c.order());
}

}  // namespace jacnewton
