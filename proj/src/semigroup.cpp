#include "jacnewton/semigroup.hpp"

#include <cctype>

#include "jacnewton/error.hpp"

namespace jacnewton {

IntSeq parse_int_list(std::string_view text) {
  IntSeq out;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  while (true) {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) {
      if (pos >= text.size()) throw SyntaxError("expected an integer", pos);
      throw SyntaxError(std::string("unexpected '") + text[pos] + "'", pos);
    }
    out.emplace_back(std::string(text.substr(start, pos - start)), 10);
    skip_ws();
    if (pos >= text.size()) break;
    if (text[pos] != ',') throw SyntaxError(std::string("unexpected '") + text[pos] + "'", pos);
    ++pos;
  }
  return out;
}

std::string to_string(const IntSeq& seq) {
  std::string out;
  for (std::size_t k = 0; k < seq.size(); ++k) {
    if (k) out += ",";
    out += seq[k].get_str();
  }
  return out;
}

namespace {

void require_increasing_positive(std::span<const BigInt> seq, const char* what) {
  if (seq.empty()) throw Error(Errc::invalid_input, std::string(what) + " is empty");
  for (std::size_t k = 0; k < seq.size(); ++k) {
    if (seq[k] <= 0) throw Error(Errc::invalid_input, std::string(what) + " entries must be positive");
    if (k > 0 && seq[k] <= seq[k - 1])
      throw Error(Errc::invalid_input, std::string(what) + " must be strictly increasing");
  }
}

IntSeq gcd_chain(std::span<const BigInt> seq) {
  IntSeq chain;
  BigInt g = 0;
  for (const auto& v : seq) {
    g = gcd(g, v);
    chain.push_back(g);
  }
  return chain;
}

}  // namespace

bool validate_characteristic(std::span<const BigInt> seq) {
  require_increasing_positive(seq, "characteristic");
  IntSeq chain = gcd_chain(seq);
  if (chain.back() != 1) return false;
  for (std::size_t k = 1; k < chain.size(); ++k)
    if (chain[k] >= chain[k - 1]) return false;
  return true;
}

BresinskyReport bresinsky_check(std::span<const BigInt> gens) {
  require_increasing_positive(gens, "generator list");
  IntSeq chain = gcd_chain(gens);
  BresinskyReport report;
  auto fail = [&](int condition, std::optional<std::size_t> index) {
    report.valid = false;
    report.failing_condition = condition;
    report.index = index;
    return report;
  };
  if (chain.back() != 1) return fail(1, std::nullopt);
  for (std::size_t i = 1; i < chain.size(); ++i)
    if (chain[i] >= chain[i - 1]) return fail(2, i);
  const std::size_t r = gens.size() - 1;
  for (std::size_t i = 1; i + 1 <= r; ++i) {
    BigInt lhs = (chain[i - 1] / chain[i]) * gens[i];
    if (!(lhs < gens[i + 1])) return fail(3, i);
  }
  return report;
}

CharSeq::CharSeq(IntSeq entries) : entries_(std::move(entries)) {
  if (!validate_characteristic(entries_))
    throw Error(Errc::invalid_input, "not a Puiseux characteristic: " + to_string(entries_));
}

SgpGens::SgpGens(IntSeq gens) : gens_(std::move(gens)) {
  BresinskyReport report = bresinsky_check(gens_);
  if (!report.valid) {
    std::string msg = "not the semigroup of a plane branch: " + to_string(gens_) +
                      " fails condition " + std::to_string(*report.failing_condition);
    if (report.failing_condition == 1) msg += " (gcd = " + gcd(gens_).get_str() + ")";
    if (report.index) msg += " at i = " + std::to_string(*report.index);
    throw Error(Errc::not_plane_branch, msg);
  }
  gcds_ = gcd_chain(gens_);
}

BigInt SgpGens::n(std::size_t k) const { return gcds_[k - 1] / gcds_[k]; }

SgpGens char_to_semigroup(const CharSeq& c) {
  const IntSeq& beta = c.entries();
  IntSeq chain = gcd_chain(beta);
  IntSeq bar(beta.size());
  bar[0] = beta[0];
  if (beta.size() > 1) bar[1] = beta[1];
  for (std::size_t i = 1; i + 1 < beta.size(); ++i) {
    BigInt n_i = chain[i - 1] / chain[i];
    bar[i + 1] = n_i * bar[i] + beta[i + 1] - beta[i];
  }
  return SgpGens(std::move(bar));
}

CharSeq semigroup_to_char(const SgpGens& g) {
  const IntSeq& bar = g.gens();
  IntSeq beta(bar.size());
  beta[0] = bar[0];
  if (bar.size() > 1) beta[1] = bar[1];
  for (std::size_t i = 1; i + 1 < bar.size(); ++i) beta[i + 1] = bar[i + 1] - g.n(i) * bar[i] + beta[i];
  return CharSeq(std::move(beta));
}

Polygon merle_polygon(const SgpGens& g) {
  std::vector<ElementaryTerm> terms;
  BigInt prefix = 1;  // n_1 ... n_{k-1}
  for (std::size_t k = 1; k <= g.genus(); ++k) {
    BigInt nk = g.n(k);
    terms.push_back({BigRat((nk - 1) * g[k]), BigRat((nk - 1) * prefix)});
    prefix *= nk;
  }
  return Polygon::from_terms(std::move(terms));
}

BigInt property1_gcd(const SgpGens& g) {
  BigInt acc = g[0];
  for (std::size_t k = 1; k <= g.genus(); ++k) acc = gcd(acc, (g.n(k) - 1) * g[k]);
  return acc;
}

}  // namespace jacnewton
