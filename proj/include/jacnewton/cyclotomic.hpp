#pragma once

#include <vector>

#include "jacnewton/bigrat.hpp"

namespace jacnewton {

// Coefficients of the n-th cyclotomic polynomial, constant term first.
std::vector<BigInt> cyclotomic_polynomial(unsigned n);
unsigned euler_phi(unsigned n);

/// Element of Q(zeta_n) in the power basis 1, zeta, ..., zeta^(phi(n)-1).
class CycloNum {
 public:
  // Zero of Q(zeta_n).
  explicit CycloNum(unsigned order = 1);
  // Throws Errc::invalid_input unless coords.size() == phi(order).
  CycloNum(unsigned order, std::vector<BigRat> coords);

  static CycloNum rational(const BigRat& value, unsigned order = 1);
  static CycloNum zeta_power(unsigned order, unsigned k);

  unsigned order() const { return order_; }
  const std::vector<BigRat>& coords() const { return coords_; }
  bool is_zero() const;

  // Image under zeta_n -> zeta_m^(m/n); m must be a multiple of order().
  CycloNum embed(unsigned m) const;

  // Operands of different orders are first embedded into the lcm field.
  friend CycloNum operator+(const CycloNum& a, const CycloNum& b);
  friend CycloNum operator-(const CycloNum& a, const CycloNum& b);
  friend CycloNum operator*(const CycloNum& a, const CycloNum& b);
  friend bool operator==(const CycloNum& a, const CycloNum& b);

 private:
  unsigned order_;
  std::vector<BigRat> coords_;
};

std::string to_string(const CycloNum& c);

}  // namespace jacnewton
