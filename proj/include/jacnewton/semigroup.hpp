#pragma once

#include <optional>
#include <span>
#include <vector>

#include "jacnewton/bigrat.hpp"
#include "jacnewton/polygon.hpp"

namespace jacnewton {

using IntSeq = std::vector<BigInt>;

// Parses "4,6,13" (whitespace tolerated). Throws SyntaxError.
IntSeq parse_int_list(std::string_view text);
std::string to_string(const IntSeq& seq);

/// Puiseux characteristic (beta_0, ..., beta_g).
class CharSeq {
 public:
  // Throws Errc::invalid_input unless validate_characteristic holds.
  explicit CharSeq(IntSeq entries);

  const IntSeq& entries() const { return entries_; }
  std::size_t genus() const { return entries_.size() - 1; }
  const BigInt& operator[](std::size_t k) const { return entries_[k]; }

  friend bool operator==(const CharSeq&, const CharSeq&) = default;

 private:
  IntSeq entries_;
};

/// Minimal generators of the semigroup of a plane branch, with the derived
/// gcd chain e_k = gcd(gen_0..gen_k) and n_k = e_{k-1} / e_k.
class SgpGens {
 public:
  // Throws Errc::not_plane_branch unless bresinsky_check passes.
  explicit SgpGens(IntSeq gens);

  const IntSeq& gens() const { return gens_; }
  std::size_t genus() const { return gens_.size() - 1; }
  const BigInt& operator[](std::size_t k) const { return gens_[k]; }
  const BigInt& e(std::size_t k) const { return gcds_[k]; }
  BigInt n(std::size_t k) const;  // k >= 1
  const BigInt& l(std::size_t k) const { return gcds_[k]; }

  friend bool operator==(const SgpGens& a, const SgpGens& b) { return a.gens_ == b.gens_; }

 private:
  IntSeq gens_;
  IntSeq gcds_;
};

struct BresinskyReport {
  bool valid = true;
  std::optional<int> failing_condition;  // 1, 2 or 3
  std::optional<std::size_t> index;      // offending i for conditions 2 and 3
};

// Throws Errc::invalid_input on an empty or non-increasing list.
bool validate_characteristic(std::span<const BigInt> seq);
BresinskyReport bresinsky_check(std::span<const BigInt> gens);

SgpGens char_to_semigroup(const CharSeq& c);
CharSeq semigroup_to_char(const SgpGens& g);

// Jacobian polygon of a branch with this semigroup; empty for the smooth branch.
Polygon merle_polygon(const SgpGens& g);

BigInt property1_gcd(const SgpGens& g);

}  // namespace jacnewton
