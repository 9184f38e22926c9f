#include "jacnewton/transform.hpp"

#include "jacnewton/error.hpp"

namespace jacnewton {
namespace {

void require_operable(const Polygon& p, const char* op) {
  if (!p.convenient())
    throw Error(Errc::not_convenient, std::string(op) + " is only defined for convenient polygons");
  if (p.size() < 2)
    throw Error(Errc::too_few_terms, std::string(op) + " needs at least two compact edges");
}

}  // namespace

Polygon reduce(const Polygon& p) {
  require_operable(p, "reduction");
  const auto& t = p.terms();
  const BigRat denom = 1 + t[0].height;
  const BigRat slope = t[0].length / denom;
  std::vector<ElementaryTerm> out;
  for (std::size_t i = 1; i < t.size(); ++i)
    out.push_back({t[i].length - slope * t[i].height, t[i].height / denom});
  return Polygon::from_terms(std::move(out));
}

Polygon abrade(const Polygon& p) {
  require_operable(p, "abrasion");
  const auto& t = p.terms();
  BigRat head = 1;
  for (std::size_t i = 0; i + 1 < t.size(); ++i) head += t[i].height;
  const BigRat factor = head / (head + t.back().height);
  std::vector<ElementaryTerm> out;
  for (std::size_t i = 0; i + 1 < t.size(); ++i) out.push_back({factor * t[i].length, t[i].height});
  return Polygon::from_terms(std::move(out));
}

Polygon iterate(PolygonOp op, const Polygon& p, std::size_t times) {
  if (times > 0 && times >= p.size())
    throw Error(Errc::too_few_terms, "cannot apply the operator " + std::to_string(times) +
                                         " times to a polygon with " + std::to_string(p.size()) +
                                         " edges");
  Polygon cur = p;
  for (std::size_t k = 0; k < times; ++k) cur = op == PolygonOp::reduce ? reduce(cur) : abrade(cur);
  return cur;
}

Polygon unreduce(const Polygon& reduced, const ElementaryTerm& first) {
  if (first.length <= 0 || first.height <= 0)
    throw Error(Errc::invalid_input, "first edge needs positive L and M");
  const BigRat denom = 1 + first.height;
  std::vector<ElementaryTerm> out{first};
  for (const auto& t : reduced.terms()) {
    BigRat m = t.height * denom;
    out.push_back({t.length + first.length / denom * m, m});
  }
  return Polygon::from_terms(std::move(out));
}

}  // namespace jacnewton
