#include "jacnewton/report.hpp"

#include <cctype>
#include <cstdio>
#include <json.hpp>

namespace jacnewton {
namespace {

using json = nlohmann::ordered_json;

json str(const BigRat& v) { return to_string(v); }
json str(const BigInt& v) { return v.get_str(); }

json seq_json(const IntSeq& s) {
  json a = json::array();
  for (const auto& v : s) a.push_back(str(v));
  return a;
}

json polygon_json(const Polygon& p) {
  json terms = json::array();
  for (const auto& t : p.terms()) terms.push_back(json::array({str(t.length), str(t.height)}));
  return {{"terms", terms}, {"horizontal", p.touches_horizontal()}, {"vertical", p.touches_vertical()}};
}

json verdict_json(const CriterionVerdict& v) {
  json out = {{"pass", v.pass}};
  if (v.pass) {
    out["characteristic"] = seq_json(v.characteristic->entries());
    out["semigroup"] = seq_json(v.semigroup->gens());
  } else {
    out["condition"] = v.condition;
    out["stage"] = v.stage;
    out["detail"] = v.detail;
  }
  return out;
}

json polar_json(const Polygon& p) {
  json a = json::array();
  for (const auto& pi : polar_invariants(p)) a.push_back({{"q", str(pi.q)}, {"m", str(pi.m)}});
  return a;
}

std::string polar_text(const json& a) {
  std::string out = "<";
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (k) out += ", ";
    out += a[k]["q"].get<std::string>() + ":" + a[k]["m"].get<std::string>();
  }
  return out + ">";
}

Polygon polygon_from_json(const json& j);

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "none";
  return v.dump();
}

// One "key: value" line per leaf; nested objects get dotted keys.
void text_lines(const json& obj, const std::string& prefix, std::string& out) {
  for (const auto& [key, v] : obj.items()) {
    const std::string name = prefix + key;
    std::string value;
    if (key == "polar_invariants") {
      value = polar_text(v);
    } else if (v.is_object() && v.contains("terms")) {
      value = polygon_text(polygon_from_json(v));
    } else if (v.is_object()) {
      text_lines(v, name + ".", out);
      continue;
    } else if (v.is_array()) {
      for (std::size_t k = 0; k < v.size(); ++k) value += (k ? "," : "") + scalar_text(v[k]);
    } else {
      value = scalar_text(v);
    }
    out += name + ": " + value + "\n";
  }
}

std::string render(const json& obj, Format format) {
  if (format == Format::json) return obj.dump();
  std::string out;
  text_lines(obj, "", out);
  if (!out.empty()) out.pop_back();
  return out;
}

BigRat rat_value(const json& v) {
  if (v.is_number_integer()) return BigRat(std::to_string(v.get<long long>()));
  if (!v.is_string()) throw SyntaxError("polygon entries must be rational strings", 0);
  return parse_rat(v.get<std::string>());
}

Polygon polygon_from_json(const json& j) {
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
    throw SyntaxError("polygon JSON needs a \"terms\" array", 0);
  std::vector<ElementaryTerm> terms;
  for (const auto& t : j["terms"]) {
    if (!t.is_array() || t.size() != 2) throw SyntaxError("each polygon term must be [L, M]", 0);
    terms.push_back({rat_value(t[0]), rat_value(t[1])});
  }
  auto flag = [&](const char* key) {
    if (!j.contains(key)) return true;
    if (!j[key].is_boolean()) throw SyntaxError(std::string("\"") + key + "\" must be a boolean", 0);
    return j[key].get<bool>();
  };
  return Polygon::from_terms(std::move(terms), flag("horizontal"), flag("vertical"));
}

class PolygonTextParser {
 public:
  explicit PolygonTextParser(std::string_view text) : text_(text) {}

  Polygon parse() {
    std::vector<ElementaryTerm> terms;
    skip_ws();
    const std::size_t open = pos_;
    expect('{');
    skip_ws();
    if (peek() == '}') {
      ++pos_;
    } else {
      pos_ = open;
      while (true) {
        expect('{');
        BigRat l = number();
        expect('|');
        BigRat m = number();
        expect('}');
        if (l <= 0 || m <= 0) throw SyntaxError("L and M must be positive", pos_);
        terms.push_back({l, m});
        skip_ws();
        if (peek() != '+') break;
        ++pos_;
      }
    }
    bool horizontal = true;
    bool vertical = true;
    skip_ws();
    if (peek() == '[') {
      ++pos_;
      horizontal = vertical = false;
      while (peek() == 'h' || peek() == 'v') (text_[pos_++] == 'h' ? horizontal : vertical) = true;
      expect(']');
      if (horizontal && vertical) throw SyntaxError("a convenient polygon takes no suffix", pos_);
    }
    skip_ws();
    if (pos_ != text_.size()) unexpected();
    return Polygon::from_terms(std::move(terms), horizontal, vertical);
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  [[noreturn]] void unexpected() const {
    if (pos_ >= text_.size()) throw SyntaxError("unexpected end of polygon", pos_);
    throw SyntaxError(std::string("unexpected '") + text_[pos_] + "' in polygon", pos_);
  }
  void expect(char c) {
    skip_ws();
    if (peek() != c) unexpected();
    ++pos_;
  }
  BigRat number() {
    skip_ws();
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/' || peek() == '-') ++pos_;
    if (start == pos_) unexpected();
    try {
      return parse_rat(text_.substr(start, pos_ - start));
    } catch (const Error&) {
      throw SyntaxError("bad number '" + std::string(text_.substr(start, pos_ - start)) + "'", start);
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

json tree_node_json(const ContactNode& node) {
  json members = json::array();
  for (auto m : node.members) members.push_back(std::to_string(m));
  json leaves = json::array();
  for (auto m : node.leaves) leaves.push_back(std::to_string(m));
  json children = json::array();
  for (const auto& c : node.children) children.push_back(tree_node_json(c));
  return {{"h", str(node.h)},
          {"t", std::to_string(node.t())},
          {"q", str(node.q)},
          {"members", members},
          {"leaves", leaves},
          {"children", children}};
}

void tree_node_text(const ContactNode& node, int depth, std::string& out) {
  out += std::string(2 * depth, ' ') + "node h=" + to_string(node.h) + " t=" +
         std::to_string(node.t()) + " q=" + to_string(node.q) + " members=";
  for (std::size_t k = 0; k < node.members.size(); ++k)
    out += (k ? "," : "") + std::to_string(node.members[k]);
  out += "\n";
  for (const auto& c : node.children) tree_node_text(c, depth + 1, out);
}

json shear_fields(const JacobianResult& r) {
  return {{"shear", std::to_string(r.shear)},
          {"confirming_shear", std::to_string(r.confirming_shear)},
          {"shear_flagged", r.flagged}};
}

}  // namespace

Polygon parse_polygon(std::string_view text) {
  std::size_t k = 0;
  while (k < text.size() && std::isspace(static_cast<unsigned char>(text[k]))) ++k;
  std::size_t n = k + 1;
  while (n < text.size() && std::isspace(static_cast<unsigned char>(text[n]))) ++n;
  if (k < text.size() && text[k] == '{' && n < text.size() && text[n] == '"') {
    json j = json::parse(text.begin(), text.end(), nullptr, false);
    if (j.is_discarded()) throw SyntaxError("polygon is not valid JSON", 0);
    try {
      return polygon_from_json(j);
    } catch (const SyntaxError&) {
      throw;
    } catch (const Error& e) {
      throw SyntaxError(e.what(), 0);
    }
  }
  return PolygonTextParser(text).parse();
}

std::string polygon_text(const Polygon& p) {
  std::string out;
  for (const auto& t : p.terms()) {
    if (!out.empty()) out += "+";
    out += "{" + to_string(t.length) + "|" + to_string(t.height) + "}";
  }
  if (out.empty()) out = "{}";
  if (!p.convenient()) {
    out += "[";
    if (p.touches_horizontal()) out += "h";
    if (p.touches_vertical()) out += "v";
    out += "]";
  }
  return out;
}

std::string render_polygon(const Polygon& p, Format format) {
  return format == Format::json ? polygon_json(p).dump() : polygon_text(p);
}

std::string render_njp(const JacobianResult& r, Format format) {
  if (format == Format::json) {
    json out = polygon_json(r.polygon);
    out.update(shear_fields(r));
    return out.dump();
  }
  std::string out = polygon_text(r.polygon);
  if (r.flagged) out += "\nshear: " + std::to_string(r.shear) + " (original coordinates not usable)";
  return out;
}

std::string render_discriminant(const JacobianResult& r, Format format) {
  json out = {{"discriminant", to_string(r.discriminant)}, {"polygon", polygon_json(r.polygon)}};
  out.update(shear_fields(r));
  return render(out, format);
}

std::string render_polar(const JacobianResult& r, Format format) {
  json out = {{"polar_invariants", polar_json(r.polygon)}};
  if (format == Format::json) return out.dump();
  return polar_text(out["polar_invariants"]);
}

std::string render_irreducible(const IrreducibilityVerdict& v, Format format) {
  json out = {{"irreducible", v.irreducible}};
  out.update(verdict_json(v.gamma));
  if (v.gammas) {
    json g = json::array();
    for (const auto& x : v.gammas->gammas) g.push_back(str(x));
    out["gamma"] = g;
  }
  out["polygon"] = polygon_json(v.jacobian.polygon);
  out.update(shear_fields(v.jacobian));
  out["reduction"] = verdict_json(v.reduction);
  out["abrasion"] = verdict_json(v.abrasion);
  out["gamma_criterion"] = verdict_json(v.gamma);
  return render(out, format);
}

std::string render_criteria(const Polygon& p, Format format) {
  json out = {{"polygon", polygon_json(p)}};
  out["reduction"] = verdict_json(reduction_criterion(p));
  out["abrasion"] = verdict_json(abrasion_criterion(p));
  out["gamma_criterion"] = verdict_json(gamma_criterion(p));
  if (p.convenient() && !p.empty()) {
    json g = json::array();
    for (const auto& x : gamma_sequence(p).gammas) g.push_back(str(x));
    out["gamma"] = g;
  }
  return render(out, format);
}

std::string render_sequence(std::string_view key, const IntSeq& seq, Format format) {
  if (format == Format::text) return to_string(seq);
  return json{{std::string(key), seq_json(seq)}}.dump();
}

std::string render_bresinsky(const IntSeq& gens, Format format) {
  BresinskyReport r = bresinsky_check(gens);
  json out = {{"valid", r.valid}};
  if (!r.valid) {
    out["condition"] = *r.failing_condition;
    if (r.index) out["index"] = *r.index;
    out["gcd"] = str(gcd(gens));
  }
  return render(out, format);
}

std::string render_tree(const ContactTree& tree, Format format) {
  Polygon p = tree_polygon(tree);
  if (format == Format::json) {
    json out = {{"roots", std::to_string(tree.root_count)}};
    out["tree"] = tree.root ? tree_node_json(*tree.root) : json(nullptr);
    out["polygon"] = polygon_json(p);
    out["polar_invariants"] = polar_json(p);
    return out.dump();
  }
  std::string out = "roots: " + std::to_string(tree.root_count) + "\n";
  if (tree.root) tree_node_text(*tree.root, 0, out);
  out += "polygon: " + polygon_text(p) + "\n";
  out += "polar_invariants: " + polar_text(polar_json(p));
  return out;
}

std::string render_approximate_root(const BiPoly& f, unsigned p, Format format) {
  const YPoly fy = YPoly::from_bipoly(f);
  const YPoly root = approximate_root(fy, p);
  json out = {{"approximate_root", to_string(root.to_bipoly())}, {"p", std::to_string(p)}};
  // Only reported when the intersection number is defined at the origin.
  try {
    out["intersection_number"] = std::to_string(intersection_number(fy, root));
  } catch (const Error&) {
  }
  return render(out, format);
}

std::string render_error(std::string_view code, std::string_view message, Format format) {
  if (format == Format::text) return "error (" + std::string(code) + "): " + std::string(message);
  return json{{"error", {{"code", std::string(code)}, {"message", std::string(message)}}}}.dump();
}

std::string render_svg(const Polygon& p) {
  const double width = 520, height = 420, margin = 50;
  std::vector<Point> verts = p.vertices();
  double max_i = std::max(1.0, p.width().get_d());
  double max_j = std::max(1.0, p.height().get_d());
  const double sx = (width - 2 * margin) / (max_i * 1.15);
  const double sy = (height - 2 * margin) / (max_j * 1.15);
  auto X = [&](double i) { return margin + i * sx; };
  auto Y = [&](double j) { return height - margin - j * sy; };
  char buf[256];
  std::string out;
  std::snprintf(buf, sizeof buf,
                "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.0f\" height=\"%.0f\" "
                "viewBox=\"0 0 %.0f %.0f\">\n",
                width, height, width, height);
  out += buf;
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  std::snprintf(buf, sizeof buf,
                "<g stroke=\"#888\" stroke-width=\"1\"><line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\"/>"
                "<line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\"/></g>\n",
                X(0), Y(0), width - margin / 2, Y(0), X(0), Y(0), X(0), margin / 2);
  out += buf;

  std::string path;
  auto add = [&](double x, double y) {
    std::snprintf(buf, sizeof buf, "%s%.1f,%.1f", path.empty() ? "" : " ", x, y);
    path += buf;
  };
  const Point& first = verts.front();
  const Point& last = verts.back();
  add(X(first.i.get_d()), margin / 2);  // ray up, along the axis when convenient
  for (const auto& v : verts) add(X(v.i.get_d()), Y(v.j.get_d()));
  add(width - margin / 2, Y(last.j.get_d()));
  out += "<polyline fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"2\" points=\"" + path + "\"/>\n";

  for (const auto& v : verts) {
    std::snprintf(buf, sizeof buf, "<circle cx=\"%.1f\" cy=\"%.1f\" r=\"3\" fill=\"#1f4e9c\"/>\n",
                  X(v.i.get_d()), Y(v.j.get_d()));
    out += buf;
    std::snprintf(buf, sizeof buf,
                  "<text x=\"%.1f\" y=\"%.1f\" font-size=\"11\" fill=\"#555\">(%s, %s)</text>\n",
                  X(v.i.get_d()) + 5, Y(v.j.get_d()) + 14, to_string(v.i).c_str(), to_string(v.j).c_str());
    out += buf;
  }
  for (std::size_t k = 0; k + 1 < verts.size(); ++k) {
    const double mx = (X(verts[k].i.get_d()) + X(verts[k + 1].i.get_d())) / 2;
    const double my = (Y(verts[k].j.get_d()) + Y(verts[k + 1].j.get_d())) / 2;
    std::snprintf(buf, sizeof buf,
                  "<text x=\"%.1f\" y=\"%.1f\" font-size=\"13\" fill=\"#b03a2e\">%s</text>\n", mx + 6,
                  my - 6, to_string(p.terms()[k].inclination()).c_str());
    out += buf;
  }
  out += "<text x=\"" + std::to_string(int(margin)) + "\" y=\"20\" font-size=\"14\">" +
         polygon_text(p) + "</text>\n";
  out += "</svg>\n";
  return out;
}

}  // namespace jacnewton
