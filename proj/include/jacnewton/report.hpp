#pragma once

#include <string>
#include <string_view>

#include "jacnewton/contact.hpp"
#include "jacnewton/error.hpp"
#include "jacnewton/jacobian.hpp"
#include "jacnewton/semigroup.hpp"

// Text, JSON and SVG renderings shared by the C API and the command line.
// JSON carries every number as a decimal string; text output lists the same
// fields as "key: value" lines, except where a verb prints a single value.

namespace jacnewton {

enum class Format { text, json };

// Accepts "{6|1}+{14|2}", "{}" and the JSON object produced by
// render_polygon. A text polygon that misses an axis carries a suffix:
// "[h]" (touches only the horizontal axis), "[v]" or "[]".
Polygon parse_polygon(std::string_view text);
std::string polygon_text(const Polygon& p);

std::string render_polygon(const Polygon& p, Format format);
std::string render_njp(const JacobianResult& r, Format format);
std::string render_discriminant(const JacobianResult& r, Format format);
std::string render_polar(const JacobianResult& r, Format format);
std::string render_irreducible(const IrreducibilityVerdict& v, Format format);
std::string render_criteria(const Polygon& p, Format format);
// key is "semigroup" or "characteristic".
std::string render_sequence(std::string_view key, const IntSeq& seq, Format format);
std::string render_bresinsky(const IntSeq& gens, Format format);
std::string render_tree(const ContactTree& tree, Format format);
std::string render_approximate_root(const BiPoly& f, unsigned p, Format format);
// code is an errc_name() or one of the C interface's extra codes.
std::string render_error(std::string_view code, std::string_view message, Format format);

std::string render_svg(const Polygon& p);

}  // namespace jacnewton
