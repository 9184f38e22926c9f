#include "jacnewton/jacobian.hpp"

#include "jacnewton/error.hpp"

namespace jacnewton {
namespace {

void require_valid_curve(const BiPoly& f) {
  if (f.is_zero()) throw Error(Errc::zero_polynomial, "the zero polynomial does not define a curve");
  if (f.coeff(0, 0) != 0)
    throw Error(Errc::invalid_input, "f does not vanish at the origin (it is a unit)");
  if (!is_squarefree(f)) throw Error(Errc::not_squarefree, "f has a multiple factor");
}

bool acceptable(const BiPoly& f, unsigned order) {
  if (f.coeff(0, order) == 0) return false;  // x divides the lowest form
  const unsigned d = f.degree_y();
  BiPoly top(f.vars());
  BiPoly fibre(f.vars());
  for (const auto& [m, c] : f.terms()) {
    if (m.j == d) top.add_term({m.i, 0}, c);
    if (m.i == 0) fibre.add_term({0, m.j - order}, c);
  }
  if (!top.is_constant()) return false;
  return is_squarefree(fibre);
}

Polygon polygon_of(const BiPoly& g, unsigned order) { return newton_polygon(local_discriminant(g, order)); }

}  // namespace

JacobianResult jacobian_polygon(const BiPoly& f, const JacobianOptions& options) {
  require_valid_curve(f);
  const unsigned order = order_at_origin(f);

  std::vector<JacobianResult> accepted;
  for (unsigned c = 0; c <= options.max_shear; ++c) {
    BiPoly g = c == 0 ? f : shear(f, Axis::x, BigRat(c));
    if (!acceptable(g, order)) continue;
    JacobianResult r;
    r.normalized = g;
    r.shear = c;
    r.flagged = c != 0;
    r.polygon = polygon_of(g, order);
    for (const auto& earlier : accepted) {
      if (earlier.polygon != r.polygon) continue;
      JacobianResult out = earlier;
      out.confirming_shear = c;
      if (options.check_translations) {
        for (unsigned t = 1; t <= 2; ++t) {
          Polygon moved = polygon_of(shear(out.normalized, Axis::y, BigRat(t)), order);
          if (moved != out.polygon)
            throw Error(Errc::internal, "translating y changed the jacobian polygon");
        }
      }
      if (options.full_discriminant) {
        out.discriminant = discriminant_surface(out.normalized);
        if (out.discriminant.is_zero() || newton_polygon(out.discriminant) != out.polygon)
          throw Error(Errc::internal, "full and local discriminants have different polygons");
      }
      return out;
    }
    accepted.push_back(std::move(r));
  }
  if (accepted.size() < 2)
    throw Error(Errc::normalization_failed,
                "found " + std::to_string(accepted.size()) + " usable shear(s) up to c = " +
                    std::to_string(options.max_shear) + "; two are needed to certify the polygon");
  throw Error(Errc::normalization_failed,
              "no two of the " + std::to_string(accepted.size()) +
                  " usable shears up to c = " + std::to_string(options.max_shear) +
                  " gave the same polygon");
}

std::vector<PolarInvariant> polar_invariants(const Polygon& jacobian) {
  std::vector<PolarInvariant> out;
  for (const auto& t : jacobian.terms()) {
    if (!is_integer(t.height))
      throw Error(Errc::invalid_input, "edge height " + to_string(t.height) + " is not an integer");
    out.push_back({t.inclination(), to_integer(t.height)});
  }
  return out;
}

std::vector<PolarInvariant> polar_invariants(const BiPoly& f, const JacobianOptions& options) {
  return polar_invariants(jacobian_polygon(f, options).polygon);
}

IrreducibilityVerdict judge_polygon(const Polygon& p) {
  IrreducibilityVerdict v;
  v.jacobian.polygon = p;
  v.reduction = reduction_criterion(p);
  v.abrasion = abrasion_criterion(p);
  v.gamma = gamma_criterion(p);
  if (p.convenient() && !p.empty()) v.gammas = gamma_sequence(p);
  if (v.reduction.pass != v.abrasion.pass || v.reduction.pass != v.gamma.pass)
    throw Error(Errc::internal, std::string("criteria disagree: reduction ") +
                                    (v.reduction.pass ? "passes" : "fails") + ", abrasion " +
                                    (v.abrasion.pass ? "passes" : "fails") + ", gamma " +
                                    (v.gamma.pass ? "passes" : "fails"));
  if (v.reduction.pass &&
      (v.reduction.semigroup != v.abrasion.semigroup || v.reduction.semigroup != v.gamma.semigroup))
    throw Error(Errc::internal, "criteria pass with different semigroups");
  v.irreducible = v.reduction.pass;
  return v;
}

IrreducibilityVerdict test_irreducible(const BiPoly& f, const JacobianOptions& options) {
  JacobianResult j = jacobian_polygon(f, options);
  IrreducibilityVerdict v = judge_polygon(j.polygon);
  v.jacobian = std::move(j);
  return v;
}

}  // namespace jacnewton
