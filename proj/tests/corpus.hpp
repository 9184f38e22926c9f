#pragma once

// Curves shared by the jacobian tests and the acceptance binary. An empty
// expected string means only invariants are checked.

#include <string>
#include <vector>

namespace corpus {

struct Curve {
  const char* name;
  const char* poly;
  const char* njp;
};

inline const std::vector<Curve>& curves() {
  static const std::vector<Curve> all = {
      {"kuo", "(y^2-x^3)^2-x^7", "{6|1}+{14|2}"},
      {"control", "(y^2-x^3)^2-4x^5y-x^7", "{6|1}+{13|2}"},
      {"remark_a", "y^2*(y-x^2)^2+x^11", "{8|1}+{22|2}"},
      {"remark_b", "y^3*(y-x^2)+x^11", "{8|1}+{22|2}"},
      {"example1_g", "(y^3-x^5)^2-9x^11", "{20|2}+{33|3}"},
      {"example1_f", "(y-x^2)*(y-2x^2)*(y-3x^2)*(y^3-x^5)", "{30|3}+{22|2}"},
      {"cusp", "y^2-x^3", "{3|1}"},
      {"smooth", "y-x^2", "{}"},
      {"tacnode", "y^2-x^4", "{4|1}"},
      {"node", "x*y", "{2|1}"},
      {"lines", "y^3-x^3", "{6|2}"},
      {"e6", "y^3-x^4", "{8|2}"},
      {"transverse_cusp", "x^2-y^3", "{3|1}"},
      {"e8_plus", "y^3-x^5+x^4*y", ""},
      {"two_cusps", "(y^2-x^3)*(y^2-2x^3)", ""},
      {"mixed", "(y^2-x^5)*(y-x)", ""},
      {"genus2_b", "(y^2-x^3)^2-x^5*y", "{6|1}+{13|2}"},
      {"a4", "y^2-x^5+x^3*y^2", "{5|1}"},
  };
  return all;
}

}  // namespace corpus
