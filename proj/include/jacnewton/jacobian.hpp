#pragma once

#include <optional>
#include <vector>

#include "jacnewton/criteria.hpp"
#include "jacnewton/polyalg.hpp"
#include "jacnewton/polygon.hpp"

namespace jacnewton {

struct JacobianOptions {
  // Largest c tried in the shear x := x + c*y.
  unsigned max_shear = 16;
  // Also recompute D after y := y + c*x for c = 1, 2 and insist on the same
  // polygon.
  bool check_translations = true;
  // Also compute the full D(u,v) for the accepted coordinates and check that
  // it has the same polygon.
  bool full_discriminant = false;
};

struct JacobianResult {
  Polygon polygon;
  BiPoly discriminant{VarPair::uv};  // D(u,v) in the accepted coordinates, when requested
  BiPoly normalized;                 // f after the accepted shear
  unsigned shear = 0;                // accepted c in x := x + c*y
  unsigned confirming_shear = 0;     // second shear giving the same polygon
  // Set when the original coordinates were not usable (shear != 0).
  bool flagged = false;
};

// f must be nonzero, vanish at the origin and be squarefree. Coordinates are
// sheared until the vertical axis is transverse, the leading y-coefficient is
// constant and f(0,y) has no multiple roots away from y = 0; the polygon is
// certified by two distinct accepted shears agreeing.
JacobianResult jacobian_polygon(const BiPoly& f, const JacobianOptions& options = {});

struct PolarInvariant {
  BigRat q;  // inclination L/M
  BigInt m;  // multiplicity M
  friend bool operator==(const PolarInvariant&, const PolarInvariant&) = default;
};

std::vector<PolarInvariant> polar_invariants(const Polygon& jacobian);
std::vector<PolarInvariant> polar_invariants(const BiPoly& f, const JacobianOptions& options = {});

struct IrreducibilityVerdict {
  bool irreducible = false;
  JacobianResult jacobian;
  CriterionVerdict reduction;
  CriterionVerdict abrasion;
  CriterionVerdict gamma;
  std::optional<GammaSeq> gammas;  // absent for the empty polygon
};

// Throws Errc::internal if the three criteria disagree.
IrreducibilityVerdict judge_polygon(const Polygon& p);
IrreducibilityVerdict test_irreducible(const BiPoly& f, const JacobianOptions& options = {});

}  // namespace jacnewton
