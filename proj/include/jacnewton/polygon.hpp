#pragma once

#include <span>
#include <vector>

#include "jacnewton/bigrat.hpp"
#include "jacnewton/polyalg.hpp"

namespace jacnewton {

struct Point {
  BigRat i;  // horizontal coordinate (exponent of x or u)
  BigRat j;  // vertical coordinate (exponent of y or v)
  friend bool operator==(const Point&, const Point&) = default;
};

/// Elementary polygon {L|M}: one compact edge from (0, M) to (L, 0).
struct ElementaryTerm {
  BigRat length;  // L, horizontal extent
  BigRat height;  // M, vertical extent
  BigRat inclination() const { return length / height; }
  friend bool operator==(const ElementaryTerm&, const ElementaryTerm&) = default;
};

/// Rational Newton polygon in canonical form: compact edges as elementary
/// terms sorted by strictly increasing inclination, plus whether the polygon
/// reaches each coordinate axis. The polygon is stored up to translation; when
/// it touches the vertical axis its top vertex is (0, height()).
class Polygon {
 public:
  // The unit polygon: R_+^2 itself (no compact edges, touches both axes).
  Polygon() = default;

  // Sorts by inclination and merges equal inclinations. Throws on L <= 0 or M <= 0.
  static Polygon from_terms(std::vector<ElementaryTerm> terms, bool touches_horizontal = true,
                            bool touches_vertical = true);

  const std::vector<ElementaryTerm>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  bool touches_horizontal() const { return horizontal_; }
  bool touches_vertical() const { return vertical_; }
  bool convenient() const { return horizontal_ && vertical_; }

  BigRat height() const;
  BigRat width() const;

  // Vertices from the vertical-axis end, anchored at (0, height()).
  std::vector<Point> vertices() const;

  friend bool operator==(const Polygon&, const Polygon&) = default;

 private:
  std::vector<ElementaryTerm> terms_;
  bool horizontal_ = true;
  bool vertical_ = true;
};

struct PolygonClass {
  BigRat height;
  bool integral = false;
  bool convenient = false;
  bool special = false;
};

// Lower-left boundary of conv(points + R_+^2). Throws on an empty set or
// negative coordinates.
Polygon polygon_from_support(std::span<const Point> points);
Polygon newton_polygon(const BiPoly& f);

std::vector<ElementaryTerm> canonical_terms(const Polygon& p);
Polygon minkowski_sum(const Polygon& a, const Polygon& b);
inline Polygon operator+(const Polygon& a, const Polygon& b) { return minkowski_sum(a, b); }
PolygonClass classify(const Polygon& p);

}  // namespace jacnewton
