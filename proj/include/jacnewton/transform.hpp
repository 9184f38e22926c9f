#pragma once

#include "jacnewton/polygon.hpp"

namespace jacnewton {

enum class PolygonOp { reduce, abrade };

// Both operators need a convenient polygon with at least two compact edges.
//
// reduce drops the first edge:  L'_i = L_{i+1} - L_1 M_{i+1} / (1 + M_1),
//                               M'_i = M_{i+1} / (1 + M_1).
// abrade drops the last edge and scales every remaining L_i by
// (1 + M_1 + ... + M_{r-1}) / (1 + M_1 + ... + M_r).
Polygon reduce(const Polygon& p);
Polygon abrade(const Polygon& p);

// i-fold application; i = 0 returns p. Throws when i exceeds size() - 1.
Polygon iterate(PolygonOp op, const Polygon& p, std::size_t times);

// Inverse of reduce given the dropped first edge.
Polygon unreduce(const Polygon& reduced, const ElementaryTerm& first);

}  // namespace jacnewton
