#include "jacnewton/jacnewton.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <new>
#include <sstream>

#include "jacnewton/report.hpp"
#include "jacnewton/transform.hpp"

struct jn_poly {
  jacnewton::BiPoly value;
};

struct jn_polygon {
  jacnewton::Polygon value;
};

namespace {

using namespace jacnewton;

thread_local std::string last_message;
thread_local std::string last_code = "ok";

struct ApiError {
  jn_status status;
  const char* code;
  std::string message;
};

jn_status record(jn_status status, std::string code, std::string message) {
  last_code = std::move(code);
  last_message = std::move(message);
  return status;
}

template <class Fn>
jn_status guarded(Fn&& fn) {
  try {
    fn();
    return record(JN_OK, "ok", "");
  } catch (const ApiError& e) {
    return record(e.status, e.code, e.message);
  } catch (const Error& e) {
    jn_status s = e.code() == Errc::syntax     ? JN_ERR_SYNTAX
                  : e.code() == Errc::internal ? JN_ERR_INTERNAL
                                               : JN_ERR_DOMAIN;
    return record(s, errc_name(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return record(JN_ERR_INTERNAL, "out_of_memory", "out of memory");
  } catch (const std::exception& e) {
    return record(JN_ERR_INTERNAL, "internal", e.what());
  }
}

template <class T>
const T& deref(const T* p, const char* what) {
  if (!p) throw ApiError{JN_ERR_INVALID_ARGUMENT, "invalid_argument", std::string(what) + " is null"};
  return *p;
}

void require_in(const char* p, const char* what) {
  if (!p) throw ApiError{JN_ERR_INVALID_ARGUMENT, "invalid_argument", std::string(what) + " is null"};
}

void require_out(const void* p, const char* what) {
  if (!p) throw ApiError{JN_ERR_INVALID_ARGUMENT, "invalid_argument", std::string(what) + " is null"};
}

Format to_format(jn_format f) {
  if (f != JN_FORMAT_TEXT && f != JN_FORMAT_JSON)
    throw ApiError{JN_ERR_INVALID_ARGUMENT, "invalid_argument", "unknown output format"};
  return f == JN_FORMAT_JSON ? Format::json : Format::text;
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void give_polygon(jn_polygon** out, const Polygon& p) {
  if (out) *out = new jn_polygon{p};
}

JacobianOptions options(unsigned max_shear, bool full_discriminant = false) {
  JacobianOptions o;
  o.max_shear = max_shear;
  o.full_discriminant = full_discriminant;
  return o;
}

std::string read_file(const char* path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ApiError{JN_ERR_IO, "io", std::string("cannot read ") + path};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

extern "C" {

const char* jn_version(void) { return "1.0.0"; }
const char* jn_last_error_message(void) { return last_message.c_str(); }
const char* jn_last_error_code(void) { return last_code.c_str(); }

jn_status jn_last_error_render(jn_format format, char** out) {
  const std::string code = last_code;
  const std::string message = last_message;
  return guarded([&] {
    require_out(out, "out");
    *out = dup(render_error(code, message, to_format(format)));
  });
}

void jn_string_free(char* s) { std::free(s); }

jn_status jn_poly_parse(const char* text, jn_poly** out) {
  return guarded([&] {
    require_out(out, "out");
    require_in(text, "text");
    *out = new jn_poly{parse_poly(text)};
  });
}

void jn_poly_free(jn_poly* f) { delete f; }

jn_status jn_poly_to_string(const jn_poly* f, char** out) {
  return guarded([&] {
    require_out(out, "out");
    *out = dup(to_string(deref(f, "polynomial").value));
  });
}

jn_status jn_polygon_parse(const char* text, jn_polygon** out) {
  return guarded([&] {
    require_out(out, "out");
    require_in(text, "text");
    *out = new jn_polygon{parse_polygon(text)};
  });
}

void jn_polygon_free(jn_polygon* p) { delete p; }

jn_status jn_polygon_render(const jn_polygon* p, jn_format format, char** out) {
  return guarded([&] {
    require_out(out, "out");
    *out = dup(render_polygon(deref(p, "polygon").value, to_format(format)));
  });
}

jn_status jn_polygon_svg(const jn_polygon* p, char** out) {
  return guarded([&] {
    require_out(out, "out");
    *out = dup(render_svg(deref(p, "polygon").value));
  });
}

jn_status jn_polygon_equal(const jn_polygon* a, const jn_polygon* b, int* equal) {
  return guarded([&] {
    require_out(equal, "equal");
    *equal = deref(a, "a").value == deref(b, "b").value ? 1 : 0;
  });
}

jn_status jn_njp(const jn_poly* f, unsigned max_shear, jn_format format, char** report,
                 jn_polygon** polygon) {
  return guarded([&] {
    require_out(report, "report");
    Format fmt = to_format(format);
    JacobianResult r = jacobian_polygon(deref(f, "polynomial").value, options(max_shear));
    *report = dup(render_njp(r, fmt));
    give_polygon(polygon, r.polygon);
  });
}

jn_status jn_discriminant(const jn_poly* f, unsigned max_shear, jn_format format, char** report,
                          jn_polygon** polygon) {
  return guarded([&] {
    require_out(report, "report");
    Format fmt = to_format(format);
    JacobianResult r = jacobian_polygon(deref(f, "polynomial").value, options(max_shear, true));
    *report = dup(render_discriminant(r, fmt));
    give_polygon(polygon, r.polygon);
  });
}

jn_status jn_polar(const jn_poly* f, unsigned max_shear, jn_format format, char** report,
                   jn_polygon** polygon) {
  return guarded([&] {
    require_out(report, "report");
    Format fmt = to_format(format);
    JacobianResult r = jacobian_polygon(deref(f, "polynomial").value, options(max_shear));
    *report = dup(render_polar(r, fmt));
    give_polygon(polygon, r.polygon);
  });
}

jn_status jn_irreducible(const jn_poly* f, unsigned max_shear, jn_format format, char** report,
                         jn_polygon** polygon) {
  return guarded([&] {
    require_out(report, "report");
    Format fmt = to_format(format);
    IrreducibilityVerdict v = test_irreducible(deref(f, "polynomial").value, options(max_shear));
    *report = dup(render_irreducible(v, fmt));
    give_polygon(polygon, v.jacobian.polygon);
  });
}

jn_status jn_is_irreducible(const jn_poly* f, unsigned max_shear, int* irreducible) {
  return guarded([&] {
    require_out(irreducible, "irreducible");
    *irreducible = test_irreducible(deref(f, "polynomial").value, options(max_shear)).irreducible;
  });
}

jn_status jn_criteria(const jn_polygon* p, jn_format format, char** report) {
  return guarded([&] {
    require_out(report, "report");
    *report = dup(render_criteria(deref(p, "polygon").value, to_format(format)));
  });
}

jn_status jn_reduce(const jn_polygon* p, unsigned times, jn_polygon** out) {
  return guarded([&] {
    require_out(out, "out");
    *out = new jn_polygon{iterate(PolygonOp::reduce, deref(p, "polygon").value, times)};
  });
}

jn_status jn_abrade(const jn_polygon* p, unsigned times, jn_polygon** out) {
  return guarded([&] {
    require_out(out, "out");
    *out = new jn_polygon{iterate(PolygonOp::abrade, deref(p, "polygon").value, times)};
  });
}

jn_status jn_merle(const char* generators, jn_polygon** out) {
  return guarded([&] {
    require_out(out, "out");
    require_in(generators, "generators");
    *out = new jn_polygon{merle_polygon(SgpGens(parse_int_list(generators)))};
  });
}

jn_status jn_char_to_semigroup(const char* characteristic, jn_format format, char** report) {
  return guarded([&] {
    require_out(report, "report");
    require_in(characteristic, "characteristic");
    Format fmt = to_format(format);
    SgpGens g = char_to_semigroup(CharSeq(parse_int_list(characteristic)));
    *report = dup(render_sequence("semigroup", g.gens(), fmt));
  });
}

jn_status jn_semigroup_to_char(const char* generators, jn_format format, char** report) {
  return guarded([&] {
    require_out(report, "report");
    require_in(generators, "generators");
    Format fmt = to_format(format);
    CharSeq c = semigroup_to_char(SgpGens(parse_int_list(generators)));
    *report = dup(render_sequence("characteristic", c.entries(), fmt));
  });
}

jn_status jn_bresinsky(const char* generators, jn_format format, char** report) {
  return guarded([&] {
    require_out(report, "report");
    require_in(generators, "generators");
    Format fmt = to_format(format);
    *report = dup(render_bresinsky(parse_int_list(generators), fmt));
  });
}

jn_status jn_tree(const char* roots_json, jn_format format, char** report, jn_polygon** polygon) {
  return guarded([&] {
    require_out(report, "report");
    require_in(roots_json, "roots_json");
    Format fmt = to_format(format);
    ContactTree tree = build_tree(parse_roots_json(roots_json));
    *report = dup(render_tree(tree, fmt));
    give_polygon(polygon, tree_polygon(tree));
  });
}

jn_status jn_tree_file(const char* path, jn_format format, char** report, jn_polygon** polygon) {
  std::string text;
  jn_status s = guarded([&] { require_in(path, "path");
    text = read_file(path); });
  if (s != JN_OK) return s;
  return jn_tree(text.c_str(), format, report, polygon);
}

jn_status jn_approximate_root(const jn_poly* f, unsigned p, jn_format format, char** report) {
  return guarded([&] {
    require_out(report, "report");
    Format fmt = to_format(format);
    *report = dup(render_approximate_root(deref(f, "polynomial").value, p, fmt));
  });
}

}  // extern "C"
