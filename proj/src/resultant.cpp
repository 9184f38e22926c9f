// Determinants of polynomial matrices by fraction-free (Bareiss) elimination.
//
// Entries are moved into a dense representation over Z[a,b] so the inner
// loops run on mpz_t without rational normalization.

#include <utility>

#include "jacnewton/error.hpp"
#include "jacnewton/polyalg.hpp"

namespace jacnewton {
namespace {

using Dense1 = std::vector<BigInt>;  // coefficients in the first variable

void trim(Dense1& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Dense1 mul(const Dense1& a, const Dense1& b) {
  if (a.empty() || b.empty()) return {};
  Dense1 r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
  trim(r);
  return r;
}

void sub_shifted_product(Dense1& acc, const Dense1& a, const Dense1& b, std::size_t shift) {
  if (a.empty() || b.empty()) return;
  if (acc.size() < a.size() + b.size() - 1 + shift) acc.resize(a.size() + b.size() - 1 + shift);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      mpz_submul(acc[i + j + shift].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
  trim(acc);
}

Dense1 exact_div(Dense1 a, const Dense1& b) {
  if (b.empty()) throw Error(Errc::internal, "Bareiss division by zero");
  if (a.empty()) return {};
  if (a.size() < b.size()) throw Error(Errc::internal, "Bareiss division is not exact");
  Dense1 q(a.size() - b.size() + 1);
  const BigInt& lead = b.back();
  while (!a.empty() && a.size() >= b.size()) {
    std::size_t shift = a.size() - b.size();
    if (!mpz_divisible_p(a.back().get_mpz_t(), lead.get_mpz_t()))
      throw Error(Errc::internal, "Bareiss division is not exact");
    BigInt t;
    mpz_divexact(t.get_mpz_t(), a.back().get_mpz_t(), lead.get_mpz_t());
    q[shift] = t;
    sub_shifted_product(a, Dense1{t}, b, shift);
  }
  if (!a.empty()) throw Error(Errc::internal, "Bareiss division is not exact");
  trim(q);
  return q;
}

// Polynomial in the second variable with Dense1 coefficients.
using Dense2 = std::vector<Dense1>;

void trim(Dense2& p) {
  while (!p.empty() && p.back().empty()) p.pop_back();
}

Dense2 mul(const Dense2& a, const Dense2& b) {
  if (a.empty() || b.empty()) return {};
  Dense2 r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].empty()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j].empty()) continue;
      Dense1 t = mul(a[i], b[j]);
      Dense1& acc = r[i + j];
      if (acc.size() < t.size()) acc.resize(t.size());
      for (std::size_t k = 0; k < t.size(); ++k) acc[k] += t[k];
      trim(acc);
    }
  }
  trim(r);
  return r;
}

Dense2 sub(Dense2 a, const Dense2& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (a[i].size() < b[i].size()) a[i].resize(b[i].size());
    for (std::size_t k = 0; k < b[i].size(); ++k) a[i][k] -= b[i][k];
    trim(a[i]);
  }
  trim(a);
  return a;
}

Dense2 exact_div(Dense2 a, const Dense2& b) {
  if (b.empty()) throw Error(Errc::internal, "Bareiss division by zero");
  if (a.empty()) return {};
  if (a.size() < b.size()) throw Error(Errc::internal, "Bareiss division is not exact");
  Dense2 q(a.size() - b.size() + 1);
  while (!a.empty() && a.size() >= b.size()) {
    std::size_t shift = a.size() - b.size();
    Dense1 t = exact_div(a.back(), b.back());
    Dense2 shifted(shift + 1);
    shifted[shift] = t;
    a = sub(std::move(a), mul(shifted, b));
    q[shift] = std::move(t);
  }
  if (!a.empty()) throw Error(Errc::internal, "Bareiss division is not exact");
  trim(q);
  return q;
}

Dense2 to_dense(const BiPoly& p, const BigInt& scale) {
  Dense2 r;
  for (const auto& [m, c] : p.terms()) {
    if (r.size() <= m.j) r.resize(m.j + 1);
    if (r[m.j].size() <= m.i) r[m.j].resize(m.i + 1);
    BigRat scaled = c * BigRat(scale);
    r[m.j][m.i] = scaled.get_num();  // scale clears every denominator in the row
  }
  for (auto& row : r) trim(row);
  trim(r);
  return r;
}

BiPoly from_dense(const Dense2& p, VarPair vars) {
  BiPoly r(vars);
  for (std::size_t j = 0; j < p.size(); ++j)
    for (std::size_t i = 0; i < p[j].size(); ++i)
      r.add_term({static_cast<unsigned>(i), static_cast<unsigned>(j)}, BigRat(p[j][i]));
  return r;
}

}  // namespace

BiPoly bareiss_determinant(const std::vector<std::vector<BiPoly>>& matrix) {
  const std::size_t n = matrix.size();
  VarPair vars = VarPair::xy;
  if (n == 0) return BiPoly::constant(1, vars);
  vars = matrix[0][0].vars();

  BigInt total_scale = 1;
  std::vector<std::vector<Dense2>> m(n, std::vector<Dense2>(n));
  for (std::size_t r = 0; r < n; ++r) {
    if (matrix[r].size() != n) throw Error(Errc::invalid_input, "matrix is not square");
    BigInt row_scale = 1;
    for (const auto& entry : matrix[r])
      for (const auto& [mono, c] : entry.terms()) row_scale = lcm(row_scale, c.get_den());
    total_scale *= row_scale;
    for (std::size_t c = 0; c < n; ++c) m[r][c] = to_dense(matrix[r][c], row_scale);
  }

  int sign = 1;
  Dense2 prev{Dense1{1}};
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].empty()) {
      std::size_t pivot = k + 1;
      while (pivot < n && m[pivot][k].empty()) ++pivot;
      if (pivot == n) return BiPoly(vars);
      std::swap(m[k], m[pivot]);
      sign = -sign;
    }
    const bool unit_prev = prev.size() == 1 && prev[0].size() == 1 && prev[0][0] == 1;
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Dense2 v = sub(mul(m[k][k], m[i][j]), mul(m[i][k], m[k][j]));
        m[i][j] = unit_prev ? std::move(v) : exact_div(std::move(v), prev);
      }
      m[i][k].clear();
    }
    prev = m[k][k];
  }
  BiPoly det = from_dense(m[n - 1][n - 1], vars);
  return det * make_rat(sign, total_scale);
}

}  // namespace jacnewton
