#include "jacnewton/contact.hpp"

#include <algorithm>
#include <json.hpp>

#include "jacnewton/error.hpp"

namespace jacnewton {

FracSeries::FracSeries(Terms terms, std::optional<BigRat> truncation)
    : truncation_(std::move(truncation)) {
  for (auto& [e, c] : terms) {
    if (e <= 0) throw Error(Errc::invalid_input, "exponent " + to_string(e) + " is not positive");
    if (truncation_ && e >= *truncation_)
      throw Error(Errc::invalid_input, "exponent " + to_string(e) + " is not below the truncation " +
                                           to_string(*truncation_));
    if (!c.is_zero()) terms_.emplace(e, std::move(c));
  }
}

BigInt FracSeries::denominator() const {
  BigInt d = 1;
  for (const auto& [e, c] : terms_) d = lcm(d, e.get_den());
  return d;
}

ContactOrder contact_order(const FracSeries& a, const FracSeries& b) {
  std::optional<BigRat> limit = a.truncation();
  if (b.truncation() && (!limit || *b.truncation() < *limit)) limit = b.truncation();

  auto ia = a.terms().begin();
  auto ib = b.terms().begin();
  const auto ea = a.terms().end();
  const auto eb = b.terms().end();
  while (ia != ea || ib != eb) {
    BigRat e;
    bool differ;
    if (ib == eb || (ia != ea && ia->first < ib->first)) {
      e = ia->first;
      differ = true;
      ++ia;
    } else if (ia == ea || ib->first < ia->first) {
      e = ib->first;
      differ = true;
      ++ib;
    } else {
      e = ia->first;
      differ = !(ia->second == ib->second);
      ++ia;
      ++ib;
    }
    if (limit && e >= *limit) break;
    if (differ) return {e, false};
  }
  return {std::nullopt, limit.has_value()};
}

namespace {

struct ContactMatrix {
  std::vector<std::vector<BigRat>> c;

  explicit ContactMatrix(const std::vector<FracSeries>& roots) : c(roots.size(), std::vector<BigRat>(roots.size())) {
    for (std::size_t i = 0; i < roots.size(); ++i) {
      for (std::size_t j = i + 1; j < roots.size(); ++j) {
        ContactOrder o = contact_order(roots[i], roots[j]);
        if (!o.order) {
          const std::string pair = std::to_string(i) + " and " + std::to_string(j);
          if (o.truncation_limited)
            throw Error(Errc::truncation_limited,
                        "roots " + pair + " agree up to their truncation; supply more terms");
          throw Error(Errc::duplicate_roots, "roots " + pair + " are identical");
        }
        c[i][j] = c[j][i] = *o.order;
      }
    }
  }
};

ContactNode build_node(const ContactMatrix& m, std::vector<std::size_t> members) {
  ContactNode node;
  node.h = m.c[members[0]][members[1]];
  for (std::size_t a = 0; a < members.size(); ++a)
    for (std::size_t b = a + 1; b < members.size(); ++b)
      node.h = std::min(node.h, m.c[members[a]][members[b]]);

  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t r : members) {
    auto it = std::find_if(classes.begin(), classes.end(),
                           [&](const auto& cls) { return m.c[cls.front()][r] > node.h; });
    if (it == classes.end()) {
      classes.push_back({r});
      continue;
    }
    for (std::size_t s : *it)
      if (!(m.c[s][r] > node.h))
        throw Error(Errc::invalid_input, "contact orders are not ultrametric");
    it->push_back(r);
  }
  for (std::size_t a = 0; a < classes.size(); ++a)
    for (std::size_t b = a + 1; b < classes.size(); ++b)
      for (std::size_t r : classes[a])
        for (std::size_t s : classes[b])
          if (m.c[r][s] > node.h) throw Error(Errc::invalid_input, "contact orders are not ultrametric");

  // q(B) = sum over all roots of min(h(B), contact with a member of B).
  const std::size_t centre = members.front();
  node.q = 0;
  for (std::size_t r = 0; r < m.c.size(); ++r)
    node.q += r == centre ? node.h : std::min(node.h, m.c[centre][r]);

  for (auto& cls : classes) {
    if (cls.size() == 1)
      node.leaves.push_back(cls.front());
    else
      node.children.push_back(build_node(m, cls));
  }
  node.members = std::move(members);
  return node;
}

void collect(const ContactNode& node, std::vector<const ContactNode*>& out) {
  out.push_back(&node);
  for (const auto& child : node.children) collect(child, out);
}

}  // namespace

bool satisfies_ultrametric(const FracSeries& a, const FracSeries& b, const FracSeries& c) {
  std::vector<ContactOrder> o{contact_order(a, b), contact_order(b, c), contact_order(a, c)};
  // Infinite contacts sort last.
  std::sort(o.begin(), o.end(), [](const ContactOrder& x, const ContactOrder& y) {
    if (!x.order) return false;
    if (!y.order) return true;
    return *x.order < *y.order;
  });
  return o[0].order == o[1].order;
}

ContactTree build_tree(const std::vector<FracSeries>& roots) {
  if (roots.empty()) throw Error(Errc::invalid_input, "a contact tree needs at least one root");
  ContactMatrix m(roots);
  ContactTree tree;
  tree.root_count = roots.size();
  if (roots.size() == 1) return tree;
  std::vector<std::size_t> all(roots.size());
  for (std::size_t k = 0; k < all.size(); ++k) all[k] = k;
  tree.root = build_node(m, std::move(all));
  return tree;
}

std::vector<const ContactNode*> internal_nodes(const ContactTree& tree) {
  std::vector<const ContactNode*> out;
  if (tree.root) collect(*tree.root, out);
  return out;
}

Polygon tree_polygon(const ContactTree& tree) {
  std::vector<ElementaryTerm> terms;
  for (const ContactNode* node : internal_nodes(tree)) {
    const BigRat t1 = BigRat(static_cast<unsigned long>(node->t() - 1));
    terms.push_back({t1 * node->q, t1});
  }
  return Polygon::from_terms(std::move(terms));
}

namespace {

using nlohmann::json;

[[noreturn]] void malformed(const std::string& what) { throw SyntaxError("roots file: " + what, 0); }

BigRat rat_field(const json& v, const std::string& what) {
  if (v.is_number_integer()) return BigRat(std::to_string(v.get<long long>()));
  if (!v.is_string()) malformed(what + " must be a rational string");
  try {
    return parse_rat(v.get<std::string>());
  } catch (const Error&) {
    malformed(what + " \"" + v.get<std::string>() + "\" is not a rational number");
  }
}

unsigned order_field(const json& v) {
  if (!v.is_number_integer() || v.get<long long>() <= 0 || v.get<long long>() > 100000)
    malformed("cyclotomic_order must be a positive integer");
  return static_cast<unsigned>(v.get<long long>());
}

}  // namespace

std::vector<FracSeries> parse_roots_json(std::string_view text) {
  json doc = json::parse(text.begin(), text.end(), nullptr, false);
  if (doc.is_discarded()) malformed("not valid JSON");
  if (!doc.is_object()) malformed("top level must be an object");
  unsigned order = 1;
  if (doc.contains("cyclotomic_order")) order = order_field(doc["cyclotomic_order"]);
  if (!doc.contains("roots") || !doc["roots"].is_array()) malformed("missing \"roots\" array");

  std::vector<FracSeries> out;
  for (const auto& root : doc["roots"]) {
    const std::string tag = "root " + std::to_string(out.size());
    if (!root.is_object()) malformed(tag + " must be an object");
    unsigned n = root.contains("cyclotomic_order") ? order_field(root["cyclotomic_order"]) : order;
    std::optional<BigRat> trunc;
    if (root.contains("trunc") && !root["trunc"].is_null() &&
        !(root["trunc"].is_string() && root["trunc"].get<std::string>() == "inf"))
      trunc = rat_field(root["trunc"], tag + " trunc");
    if (!root.contains("terms") || !root["terms"].is_array()) malformed(tag + " has no \"terms\" array");
    FracSeries::Terms terms;
    for (const auto& term : root["terms"]) {
      if (!term.is_object() || !term.contains("exp") || !term.contains("coeff") ||
          !term["coeff"].is_array())
        malformed(tag + ": each term needs \"exp\" and a \"coeff\" array");
      BigRat e = rat_field(term["exp"], tag + " exponent");
      std::vector<BigRat> coords;
      for (const auto& c : term["coeff"]) coords.push_back(rat_field(c, tag + " coefficient"));
      CycloNum coeff(n, std::move(coords));
      auto [it, inserted] = terms.emplace(e, coeff);
      if (!inserted) it->second = it->second + coeff;
    }
    out.emplace_back(std::move(terms), std::move(trunc));
  }
  return out;
}

}  // namespace jacnewton
