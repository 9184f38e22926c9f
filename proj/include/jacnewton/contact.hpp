#pragma once

#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "jacnewton/cyclotomic.hpp"
#include "jacnewton/polygon.hpp"

namespace jacnewton {

/// Truncated fractional power series sum c_e x^e with coefficients in a
/// cyclotomic field. Terms at or above the truncation order are unknown.
class FracSeries {
 public:
  using Terms = std::map<BigRat, CycloNum>;

  FracSeries() = default;
  // Drops zero coefficients. Throws Errc::invalid_input on non-positive
  // exponents or exponents at or above the truncation order.
  FracSeries(Terms terms, std::optional<BigRat> truncation);

  const Terms& terms() const { return terms_; }
  const std::optional<BigRat>& truncation() const { return truncation_; }
  // lcm of the exponent denominators.
  BigInt denominator() const;

 private:
  Terms terms_;
  std::optional<BigRat> truncation_;
};

struct ContactOrder {
  std::optional<BigRat> order;      // nullopt means no difference was seen
  bool truncation_limited = false;  // identical only up to a finite truncation
};

ContactOrder contact_order(const FracSeries& a, const FracSeries& b);

// The two smallest of the three pairwise contacts coincide.
bool satisfies_ultrametric(const FracSeries& a, const FracSeries& b, const FracSeries& c);

/// Pseudo-ball of the Kuo-Lu tree. Members are indices into the root list.
struct ContactNode {
  BigRat h;
  BigRat q;
  std::vector<std::size_t> members;
  std::vector<ContactNode> children;  // sub-balls with at least two members
  std::vector<std::size_t> leaves;    // members alone in their class
  std::size_t t() const { return children.size() + leaves.size(); }
};

struct ContactTree {
  std::size_t root_count = 0;
  std::optional<ContactNode> root;  // absent for a single root
};

// Throws Errc::duplicate_roots for identical series, Errc::truncation_limited
// when two roots agree up to a truncation order, Errc::invalid_input on an
// empty list or contacts that are not ultrametric.
ContactTree build_tree(const std::vector<FracSeries>& roots);

// Sum over internal nodes of {(t-1) q | t-1}.
Polygon tree_polygon(const ContactTree& tree);

// Preorder list of the internal nodes.
std::vector<const ContactNode*> internal_nodes(const ContactTree& tree);

// {"cyclotomic_order":n,"roots":[{"terms":[{"exp":"5/3","coeff":["0","1"]}],"trunc":"3"}]}
// A root may override "cyclotomic_order"; a missing or "inf" trunc means the
// series is exact. Throws SyntaxError on malformed documents.
std::vector<FracSeries> parse_roots_json(std::string_view text);

}  // namespace jacnewton
