#pragma once

// gtest value printers so failures show polygons and polynomials readably.

#include <ostream>

#include "jacnewton/polyalg.hpp"
#include "jacnewton/polygon.hpp"
#include "jacnewton/report.hpp"

namespace jacnewton {

inline void PrintTo(const Polygon& p, std::ostream* os) { *os << polygon_text(p); }
inline void PrintTo(const BiPoly& f, std::ostream* os) { *os << to_string(f); }

}  // namespace jacnewton
