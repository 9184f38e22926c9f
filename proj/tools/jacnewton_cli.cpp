// Command line front end over the C interface.
//
//   jacnewton njp "(y^2-x^3)^2-x^7"            -> {6|1}+{14|2}
//   jacnewton irreducible POLY --format json
//   jacnewton reduce "{6|1}+{14|2}" --times 1
//
// Exit status: 0 success, 1 domain error, 2 usage or malformed input.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include "jacnewton/jacnewton.h"

namespace {

struct Settings {
  std::string format = "text";
  std::string svg_path;
  unsigned max_shear = 16;
  unsigned times = 1;
  std::string arg;
  unsigned p = 0;
};

using PolyPtr = std::unique_ptr<jn_poly, decltype(&jn_poly_free)>;
using PolygonPtr = std::unique_ptr<jn_polygon, decltype(&jn_polygon_free)>;

// Thrown after an API failure has been reported.
struct Failed {
  int exit_code;
};

jn_format output_format(const Settings& s) { return s.format == "json" ? JN_FORMAT_JSON : JN_FORMAT_TEXT; }

[[noreturn]] void fail(jn_status status, const Settings& s) {
  char* rendered = nullptr;
  if (jn_last_error_render(output_format(s), &rendered) == JN_OK) {
    if (output_format(s) == JN_FORMAT_JSON)
      std::cout << rendered << "\n";
    else
      std::cerr << rendered << "\n";
    jn_string_free(rendered);
  }
  const bool usage = status == JN_ERR_SYNTAX || status == JN_ERR_INVALID_ARGUMENT;
  throw Failed{usage ? 2 : 1};
}

void check(jn_status status, const Settings& s) {
  if (status != JN_OK) fail(status, s);
}

void emit(char* report) {
  std::cout << report << "\n";
  jn_string_free(report);
}

void write_svg(const jn_polygon* polygon, const Settings& s) {
  if (s.svg_path.empty() || !polygon) return;
  char* svg = nullptr;
  check(jn_polygon_svg(polygon, &svg), s);
  std::ofstream out(s.svg_path);
  out << svg;
  jn_string_free(svg);
  if (!out) {
    std::cerr << "error: cannot write " << s.svg_path << "\n";
    throw Failed{1};
  }
}

PolyPtr parse_poly(const Settings& s) {
  jn_poly* f = nullptr;
  check(jn_poly_parse(s.arg.c_str(), &f), s);
  return PolyPtr(f, jn_poly_free);
}

PolygonPtr parse_polygon(const Settings& s) {
  jn_polygon* p = nullptr;
  check(jn_polygon_parse(s.arg.c_str(), &p), s);
  return PolygonPtr(p, jn_polygon_free);
}

using CurveVerb = jn_status (*)(const jn_poly*, unsigned, jn_format, char**, jn_polygon**);

void run_curve(CurveVerb verb, const Settings& s) {
  PolyPtr f = parse_poly(s);
  char* report = nullptr;
  jn_polygon* raw = nullptr;
  check(verb(f.get(), s.max_shear, output_format(s), &report, &raw), s);
  PolygonPtr polygon(raw, jn_polygon_free);
  emit(report);
  write_svg(polygon.get(), s);
}

void print_polygon(const jn_polygon* p, const Settings& s) {
  char* text = nullptr;
  check(jn_polygon_render(p, output_format(s), &text), s);
  emit(text);
  write_svg(p, s);
}

using PolygonOp = jn_status (*)(const jn_polygon*, unsigned, jn_polygon**);

void run_operator(PolygonOp op, const Settings& s) {
  PolygonPtr input = parse_polygon(s);
  jn_polygon* raw = nullptr;
  check(op(input.get(), s.times, &raw), s);
  PolygonPtr out(raw, jn_polygon_free);
  print_polygon(out.get(), s);
}

using SequenceVerb = jn_status (*)(const char*, jn_format, char**);

void run_sequence(SequenceVerb verb, const Settings& s) {
  char* report = nullptr;
  check(verb(s.arg.c_str(), output_format(s), &report), s);
  emit(report);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Jacobian Newton polygons and irreducibility criteria for plane curve germs"};
  app.require_subcommand(1);
  Settings s;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", s.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--svg", s.svg_path, "Write an SVG drawing of the polygon to PATH");
    cmd->add_option("--max-shear", s.max_shear, "Largest c tried in the shear x := x + c*y");
  };
  auto verb = [&](const char* name, const char* help, const char* arg_name) {
    CLI::App* cmd = app.add_subcommand(name, help);
    cmd->add_option(arg_name, s.arg)->required();
    add_common(cmd);
    return cmd;
  };

  CLI::App* njp = verb("njp", "Jacobian Newton polygon of a curve", "POLY");
  CLI::App* disc = verb("disc", "Discriminant D(u,v) = Res_y(f(u,y) - v, f_y)", "POLY");
  CLI::App* polar = verb("polar", "Polar invariants <q:m, ...>", "POLY");
  CLI::App* irreducible = verb("irreducible", "Decide irreducibility of the germ", "POLY");
  CLI::App* criteria = verb("criteria", "Run the three criteria on a polygon", "POLYGON");
  CLI::App* reduce = verb("reduce", "Reduction operator", "POLYGON");
  CLI::App* abrade = verb("abrade", "Abrasion operator", "POLYGON");
  CLI::App* merle = verb("merle", "Jacobian polygon of a branch with the given semigroup", "GENS");
  CLI::App* char2sgp = verb("char2sgp", "Characteristic to semigroup generators", "SEQ");
  CLI::App* sgp2char = verb("sgp2char", "Semigroup generators to characteristic", "GENS");
  CLI::App* bresinsky = verb("bresinsky", "Check Bresinsky's conditions", "GENS");
  CLI::App* tree = verb("tree", "Kuo-Lu tree and polygon of a roots file", "FILE");
  CLI::App* approx = verb("approx", "Approximate root of a monic polynomial", "POLY");
  approx->add_option("P", s.p, "Root index")->required();
  for (CLI::App* op : {reduce, abrade})
    op->add_option("--times", s.times, "Number of applications")->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (njp->parsed()) run_curve(jn_njp, s);
    else if (disc->parsed()) run_curve(jn_discriminant, s);
    else if (polar->parsed()) run_curve(jn_polar, s);
    else if (irreducible->parsed()) run_curve(jn_irreducible, s);
    else if (criteria->parsed()) {
      PolygonPtr p = parse_polygon(s);
      char* report = nullptr;
      check(jn_criteria(p.get(), output_format(s), &report), s);
      emit(report);
      write_svg(p.get(), s);
    } else if (reduce->parsed()) run_operator(jn_reduce, s);
    else if (abrade->parsed()) run_operator(jn_abrade, s);
    else if (merle->parsed()) {
      jn_polygon* raw = nullptr;
      check(jn_merle(s.arg.c_str(), &raw), s);
      PolygonPtr p(raw, jn_polygon_free);
      print_polygon(p.get(), s);
    } else if (char2sgp->parsed()) run_sequence(jn_char_to_semigroup, s);
    else if (sgp2char->parsed()) run_sequence(jn_semigroup_to_char, s);
    else if (bresinsky->parsed()) run_sequence(jn_bresinsky, s);
    else if (tree->parsed()) {
      char* report = nullptr;
      jn_polygon* raw = nullptr;
      jn_status st = jn_tree_file(s.arg.c_str(), output_format(s), &report, &raw);
      check(st, s);
      PolygonPtr p(raw, jn_polygon_free);
      emit(report);
      write_svg(p.get(), s);
    } else if (approx->parsed()) {
      PolyPtr f = parse_poly(s);
      char* report = nullptr;
      check(jn_approximate_root(f.get(), s.p, output_format(s), &report), s);
      emit(report);
    }
  } catch (const Failed& f) {
    return f.exit_code;
  }
  return 0;
}
