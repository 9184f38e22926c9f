#include "jacnewton/polygon.hpp"

#include <algorithm>

#include "jacnewton/error.hpp"

namespace jacnewton {

Polygon Polygon::from_terms(std::vector<ElementaryTerm> terms, bool touches_horizontal,
                            bool touches_vertical) {
  for (const auto& t : terms) {
    if (t.length <= 0 || t.height <= 0)
      throw Error(Errc::invalid_input, "elementary terms need positive L and M, got {" +
                                           to_string(t.length) + "|" + to_string(t.height) + "}");
  }
  std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    return a.inclination() < b.inclination();
  });
  Polygon p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().inclination() == t.inclination()) {
      p.terms_.back().length += t.length;
      p.terms_.back().height += t.height;
    } else {
      p.terms_.push_back(std::move(t));
    }
  }
  p.horizontal_ = touches_horizontal;
  p.vertical_ = touches_vertical;
  return p;
}

BigRat Polygon::height() const {
  BigRat h = 0;
  for (const auto& t : terms_) h += t.height;
  return h;
}

BigRat Polygon::width() const {
  BigRat w = 0;
  for (const auto& t : terms_) w += t.length;
  return w;
}

std::vector<Point> Polygon::vertices() const {
  std::vector<Point> v;
  Point cur{0, height()};
  v.push_back(cur);
  for (const auto& t : terms_) {
    cur.i += t.length;
    cur.j -= t.height;
    v.push_back(cur);
  }
  return v;
}

namespace {

// z-component of (b - a) x (c - a)
BigRat cross(const Point& a, const Point& b, const Point& c) {
  return (b.i - a.i) * (c.j - a.j) - (b.j - a.j) * (c.i - a.i);
}

}  // namespace

Polygon polygon_from_support(std::span<const Point> points) {
  if (points.empty()) throw Error(Errc::invalid_input, "Newton polygon of an empty set");
  for (const auto& p : points) {
    if (p.i < 0 || p.j < 0) throw Error(Errc::invalid_input, "support points must be non-negative");
  }
  // Keep, for each abscissa, the lowest point; then the staircase of points
  // that are strictly lower than everything to their left.
  std::vector<Point> sorted(points.begin(), points.end());
  std::sort(sorted.begin(), sorted.end(), [](const Point& a, const Point& b) {
    return a.i != b.i ? a.i < b.i : a.j < b.j;
  });
  std::vector<Point> stair;
  for (const auto& p : sorted) {
    if (stair.empty() || p.j < stair.back().j) stair.push_back(p);
  }
  // Lower convex chain (Andrew's monotone chain); collinear points dropped so
  // edges of equal inclination come out merged.
  std::vector<Point> hull;
  for (const auto& p : stair) {
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0) hull.pop_back();
    hull.push_back(p);
  }
  std::vector<ElementaryTerm> terms;
  for (std::size_t k = 1; k < hull.size(); ++k)
    terms.push_back({hull[k].i - hull[k - 1].i, hull[k - 1].j - hull[k].j});
  return Polygon::from_terms(std::move(terms), hull.back().j == 0, hull.front().i == 0);
}

Polygon newton_polygon(const BiPoly& f) {
  if (f.is_zero()) throw Error(Errc::zero_polynomial, "Newton polygon of the zero polynomial");
  std::vector<Point> pts;
  for (const auto& m : f.support()) pts.push_back({BigRat(m.i), BigRat(m.j)});
  return polygon_from_support(pts);
}

std::vector<ElementaryTerm> canonical_terms(const Polygon& p) { return p.terms(); }

Polygon minkowski_sum(const Polygon& a, const Polygon& b) {
  std::vector<ElementaryTerm> terms = a.terms();
  terms.insert(terms.end(), b.terms().begin(), b.terms().end());
  return Polygon::from_terms(std::move(terms), a.touches_horizontal() && b.touches_horizontal(),
                             a.touches_vertical() && b.touches_vertical());
}

PolygonClass classify(const Polygon& p) {
  PolygonClass c;
  c.height = p.height();
  c.convenient = p.convenient();
  c.integral = std::all_of(p.terms().begin(), p.terms().end(), [](const ElementaryTerm& t) {
    return is_integer(t.length) && is_integer(t.height);
  });
  c.special = p.touches_vertical() &&
              std::all_of(p.terms().begin(), p.terms().end(),
                          [](const ElementaryTerm& t) { return t.inclination() > 1; });
  return c;
}

}  // namespace jacnewton
