#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jacnewton/polygon.hpp"
#include "jacnewton/semigroup.hpp"

namespace jacnewton {

// Candidate semigroup generators read off a polygon:
//   gamma_0 = 1 + ht,  gamma_i = (1 + M_1 + ... + M_{i-1}) L_i / M_i.
struct GammaSeq {
  std::vector<BigRat> gammas;
};

/// Outcome of one characterization. On failure `condition` is 0 for the shape
/// requirement (special, convenient, integral) or the failing condition 1..3,
/// and `stage` the iterate index i at which it failed.
struct CriterionVerdict {
  bool pass = false;
  std::optional<CharSeq> characteristic;
  std::optional<SgpGens> semigroup;
  int condition = 0;
  std::size_t stage = 0;
  std::string detail;
};

// Characterization through iterated reductions; on success the witness is the
// characteristic (1 + ht, L_1/M_1 of R^0, ..., L_1/M_1 of R^{r-1}).
CriterionVerdict reduction_criterion(const Polygon& p);

// Characterization through iterated abrasions; on success the witness is the
// semigroup generated by the gamma sequence.
CriterionVerdict abrasion_criterion(const Polygon& p);

// Throws Errc::invalid_input for non-convenient or empty polygons.
GammaSeq gamma_sequence(const Polygon& p);

// Bresinsky's conditions on the gamma sequence. Meaningful for polygons that
// are known to be jacobian polygons of some curve. Non-integral or
// non-increasing gammas are reported as condition 0 at the offending index.
CriterionVerdict gamma_criterion(const Polygon& p);

// Throws Errc::criterion_failed when reduction_criterion fails.
CharSeq recover_characteristic(const Polygon& p);

}  // namespace jacnewton
