#include "jacnewton/criteria.hpp"

#include "jacnewton/error.hpp"
#include "jacnewton/transform.hpp"

namespace jacnewton {
namespace {

CriterionVerdict fail(int condition, std::size_t stage, std::string detail) {
  CriterionVerdict v;
  v.pass = false;
  v.condition = condition;
  v.stage = stage;
  v.detail = std::move(detail);
  return v;
}

std::optional<CriterionVerdict> check_shape(const Polygon& p) {
  PolygonClass c = classify(p);
  if (!c.convenient) return fail(0, 0, "polygon is not convenient");
  if (!c.special) return fail(0, 0, "polygon is not special (an inclination is <= 1)");
  if (!c.integral) return fail(0, 0, "polygon is not integral");
  return std::nullopt;
}

CriterionVerdict smooth_branch() {
  CriterionVerdict v;
  v.pass = true;
  v.characteristic = CharSeq({BigInt(1)});
  v.semigroup = SgpGens({BigInt(1)});
  return v;
}

std::optional<CriterionVerdict> check_first_inclination(const Polygon& p) {
  const BigRat bound = 1 + p.height();
  const BigRat first = p.terms().front().inclination();
  if (!(bound < first))
    return fail(1, 0, "1 + ht = " + to_string(bound) + " is not below L1/M1 = " + to_string(first));
  return std::nullopt;
}

}  // namespace

CriterionVerdict reduction_criterion(const Polygon& p) {
  if (auto bad = check_shape(p)) return *bad;
  if (p.empty()) return smooth_branch();
  if (auto bad = check_first_inclination(p)) return *bad;

  IntSeq characteristic{to_integer(1 + p.height())};
  Polygon cur = p;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i > 0) cur = reduce(cur);
    const ElementaryTerm& first = cur.terms().front();
    if (!classify(cur).integral)
      return fail(2, i, "R^" + std::to_string(i) + " is not integral");
    if (!is_integer(first.inclination()))
      return fail(2, i, "L1/M1 = " + to_string(first.inclination()) + " of R^" +
                            std::to_string(i) + " is not an integer");
    const BigInt ratio = to_integer(first.inclination());
    const BigInt top = to_integer(1 + cur.height());
    const BigInt lhs = to_integer(1 + first.height) * gcd(ratio, top);
    if (lhs != top)
      return fail(3, i, "(1 + M1) gcd(L1/M1, 1 + ht) = " + lhs.get_str() + " differs from 1 + ht = " +
                            top.get_str() + " at R^" + std::to_string(i));
    characteristic.push_back(ratio);
  }
  if (!validate_characteristic(characteristic))
    throw Error(Errc::internal, "reduction criterion produced an invalid characteristic " +
                                    to_string(characteristic));
  CriterionVerdict v;
  v.pass = true;
  v.characteristic = CharSeq(std::move(characteristic));
  v.semigroup = char_to_semigroup(*v.characteristic);
  return v;
}

CriterionVerdict abrasion_criterion(const Polygon& p) {
  if (auto bad = check_shape(p)) return *bad;
  if (p.empty()) return smooth_branch();
  if (auto bad = check_first_inclination(p)) return *bad;

  const std::size_t r = p.size();
  Polygon cur = p;
  for (std::size_t i = 0; i < r; ++i) {
    if (i > 0) cur = abrade(cur);
    const std::string tag = "A^" + std::to_string(i);
    PolygonClass c = classify(cur);
    if (!c.special || !c.convenient || !c.integral)
      return fail(2, i, tag + " is not a special convenient integral polygon");
    const auto& t = cur.terms();
    if (!is_integer(t.front().inclination()))
      return fail(2, i, "L1/M1 of " + tag + " is not an integer");
    if (i + 2 <= r) {
      BigRat head = 1;
      for (std::size_t k = 0; k + 1 < t.size(); ++k) head += t[k].height;
      BigRat last = head * t.back().inclination();
      if (!is_integer(last))
        return fail(2, i, "(1 + M1 + ... ) L/M of the last edge of " + tag + " = " +
                              to_string(last) + " is not an integer");
    }
    BigInt g = to_integer(1 + cur.height());
    for (const auto& term : t) g = gcd(g, to_integer(term.length));
    if (g != 1)
      return fail(3, i, "gcd(1 + ht, L_1, ..., L_k) of " + tag + " is " + g.get_str());
  }
  IntSeq gens;
  for (const auto& gamma : gamma_sequence(p).gammas) {
    if (!is_integer(gamma))
      throw Error(Errc::internal, "abrasion criterion passed with a non-integral generator");
    gens.push_back(gamma.get_num());
  }
  if (!bresinsky_check(gens).valid)
    throw Error(Errc::internal, "abrasion criterion produced " + to_string(gens) +
                                    ", which fails Bresinsky's conditions");
  CriterionVerdict v;
  v.pass = true;
  v.semigroup = SgpGens(std::move(gens));
  v.characteristic = semigroup_to_char(*v.semigroup);
  return v;
}

GammaSeq gamma_sequence(const Polygon& p) {
  if (!p.convenient()) throw Error(Errc::not_convenient, "gamma sequence needs a convenient polygon");
  if (p.empty()) throw Error(Errc::invalid_input, "gamma sequence of a polygon without edges");
  GammaSeq out;
  out.gammas.push_back(1 + p.height());
  BigRat prefix = 1;
  for (const auto& t : p.terms()) {
    out.gammas.push_back(prefix * t.inclination());
    prefix += t.height;
  }
  return out;
}

CriterionVerdict gamma_criterion(const Polygon& p) {
  if (!p.convenient()) return fail(0, 0, "polygon is not convenient");
  if (p.empty()) return smooth_branch();
  const auto gammas = gamma_sequence(p).gammas;
  IntSeq ints;
  for (std::size_t k = 0; k < gammas.size(); ++k) {
    if (!is_integer(gammas[k]))
      return fail(0, k, "gamma_" + std::to_string(k) + " = " + to_string(gammas[k]) +
                            " is not an integer");
    if (gammas[k] <= 0) return fail(0, k, "gamma_" + std::to_string(k) + " is not positive");
    if (k > 0 && gammas[k] <= gammas[k - 1])
      return fail(0, k, "gamma sequence is not strictly increasing");
    ints.push_back(gammas[k].get_num());
  }
  BresinskyReport report = bresinsky_check(ints);
  if (!report.valid) {
    std::string detail = "gammas " + to_string(ints) + " fail Bresinsky condition " +
                         std::to_string(*report.failing_condition);
    if (report.failing_condition == 1) detail += " (gcd = " + gcd(ints).get_str() + ")";
    return fail(*report.failing_condition, report.index.value_or(0), detail);
  }
  CriterionVerdict v;
  v.pass = true;
  v.semigroup = SgpGens(std::move(ints));
  v.characteristic = semigroup_to_char(*v.semigroup);
  return v;
}

CharSeq recover_characteristic(const Polygon& p) {
  CriterionVerdict v = reduction_criterion(p);
  if (!v.pass)
    throw Error(Errc::criterion_failed, "not the jacobian polygon of a branch: condition " +
                                            std::to_string(v.condition) + " fails at stage " +
                                            std::to_string(v.stage) + " (" + v.detail + ")");
  return *v.characteristic;
}

}  // namespace jacnewton
