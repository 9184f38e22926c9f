#include <gtest/gtest.h>

#include "jacnewton/error.hpp"
#include "jacnewton/semigroup.hpp"
#include "oracles.hpp"
#include "printers.hpp"

using namespace jacnewton;

namespace {

IntSeq S(std::initializer_list<long> v) {
  IntSeq out;
  for (long x : v) out.emplace_back(x);
  return out;
}

// Membership table of the numerical semigroup generated by gens, up to bound.
std::vector<bool> members(const IntSeq& gens, unsigned long bound) {
  std::vector<bool> in(bound + 1, false);
  in[0] = true;
  for (unsigned long x = 1; x <= bound; ++x)
    for (const BigInt& g : gens)
      if (g.get_ui() <= x && in[x - g.get_ui()]) {
        in[x] = true;
        break;
      }
  return in;
}

// Independent formula: sgp_k = beta_k + sum_{i<k} (e_{i-1} - e_i) / e_{k-1} * beta_i.
IntSeq semigroup_by_sum(const IntSeq& beta) {
  IntSeq e{beta[0]};
  for (std::size_t k = 1; k < beta.size(); ++k) e.push_back(gcd(e.back(), beta[k]));
  IntSeq out{beta[0]};
  for (std::size_t k = 1; k < beta.size(); ++k) {
    BigInt acc = beta[k];
    for (std::size_t i = 1; i < k; ++i) acc += (e[i - 1] - e[i]) / e[k - 1] * beta[i];
    out.push_back(acc);
  }
  return out;
}

TEST(SemigroupTest, Parsing) {
  EXPECT_EQ(parse_int_list("4,6,13"), S({4, 6, 13}));
  EXPECT_EQ(parse_int_list(" 4 , 6 ,13 "), S({4, 6, 13}));
  EXPECT_EQ(to_string(S({4, 6, 13})), "4,6,13");
  EXPECT_THROW(parse_int_list("4,,6"), SyntaxError);
  EXPECT_THROW(parse_int_list(""), SyntaxError);
  EXPECT_THROW(parse_int_list("4,x"), SyntaxError);
}

TEST(SemigroupTest, CharacteristicValidation) {
  EXPECT_TRUE(validate_characteristic(S({4, 6, 7})));
  EXPECT_TRUE(validate_characteristic(S({1})));
  EXPECT_TRUE(validate_characteristic(S({2, 3})));
  EXPECT_FALSE(validate_characteristic(S({4, 6})));      // gcd 2 at the end
  EXPECT_FALSE(validate_characteristic(S({4, 6, 8, 9})));  // chain stalls at 2
  EXPECT_FALSE(validate_characteristic(S({4, 8, 9})));   // 4 | 8
  EXPECT_THROW(validate_characteristic(S({4, 3})), Error);
  EXPECT_THROW(CharSeq(S({4, 6})), Error);
}

TEST(SemigroupTest, KnownConversions) {
  EXPECT_EQ(char_to_semigroup(CharSeq(S({4, 6, 7}))).gens(), S({4, 6, 13}));
  EXPECT_EQ(char_to_semigroup(CharSeq(S({4, 6, 13}))).gens(), S({4, 6, 19}));
  EXPECT_EQ(char_to_semigroup(CharSeq(S({6, 9, 10}))).gens(), S({6, 9, 19}));
  EXPECT_EQ(char_to_semigroup(CharSeq(S({1}))).gens(), S({1}));
  EXPECT_EQ(semigroup_to_char(SgpGens(S({4, 6, 13}))).entries(), S({4, 6, 7}));
  EXPECT_EQ(semigroup_to_char(SgpGens(S({6, 9, 31}))).entries(), S({6, 9, 22}));
}

TEST(SemigroupTest, BresinskyExamples) {
  EXPECT_TRUE(bresinsky_check(S({4, 6, 13})).valid);
  BresinskyReport r = bresinsky_check(S({4, 6, 14}));
  EXPECT_FALSE(r.valid);
  EXPECT_EQ(r.failing_condition, 1);
  r = bresinsky_check(S({4, 6, 10, 13}));
  EXPECT_EQ(r.failing_condition, 2);
  EXPECT_EQ(r.index, 2u);
  r = bresinsky_check(S({4, 6, 11}));
  EXPECT_EQ(r.failing_condition, 3);
  EXPECT_EQ(r.index, 1u);
  EXPECT_THROW(SgpGens(S({4, 6, 11})), Error);
  EXPECT_THROW(bresinsky_check(S({6, 4})), Error);
}

TEST(SemigroupTest, DerivedChain) {
  SgpGens g(S({8, 12, 26, 53}));
  EXPECT_EQ(g.e(0), 8);
  EXPECT_EQ(g.e(1), 4);
  EXPECT_EQ(g.e(2), 2);
  EXPECT_EQ(g.e(3), 1);
  EXPECT_EQ(g.n(1), 2);
  EXPECT_EQ(g.n(3), 2);
  EXPECT_EQ(g.genus(), 3u);
}

TEST(SemigroupTest, MerleExamples) {
  EXPECT_EQ(merle_polygon(SgpGens(S({4, 6, 13}))), Polygon::from_terms({{6, 1}, {13, 2}}));
  EXPECT_EQ(merle_polygon(SgpGens(S({2, 3}))), Polygon::from_terms({{3, 1}}));
  EXPECT_TRUE(merle_polygon(SgpGens(S({1}))).empty());
  EXPECT_EQ(property1_gcd(SgpGens(S({4, 6, 13}))), 1);
  EXPECT_EQ(property1_gcd(SgpGens(S({6, 9, 31}))), 1);
}

// Every valid characteristic in the enumeration: both conversions round trip,
// the semigroup matches the closed sum, and the Merle polygon has height
// beta_0 - 1 with strictly increasing inclinations sgp_k / (n_1 ... n_{k-1}).
TEST(SemigroupTest, EnumeratedRoundTrips) {
  auto all = oracle::enumerate_characteristics(24, 48);
  ASSERT_GT(all.size(), 1000u);
  for (const IntSeq& beta : all) {
    CharSeq c(beta);
    SgpGens g = char_to_semigroup(c);
    ASSERT_EQ(g.gens(), semigroup_by_sum(beta)) << to_string(beta);
    EXPECT_EQ(semigroup_to_char(g), c);
    EXPECT_TRUE(bresinsky_check(g.gens()).valid);
    EXPECT_EQ(property1_gcd(g), 1) << to_string(g.gens());
    Polygon m = merle_polygon(g);
    EXPECT_EQ(m.height(), BigRat(beta[0] - 1));
    ASSERT_EQ(m.size(), g.genus());
    BigInt prefix = 1;
    for (std::size_t k = 1; k <= g.genus(); ++k) {
      EXPECT_EQ(m.terms()[k - 1].inclination(), BigRat(g[k]) / BigRat(prefix));
      prefix *= g.n(k);
    }
  }
}

// Plane branch semigroups are symmetric with conductor
// sum (n_k - 1) sgp_k - sgp_0 + 1, and the generators are minimal.
TEST(SemigroupTest, SymmetryAndConductor) {
  for (const IntSeq& beta : oracle::enumerate_characteristics(12, 30)) {
    SgpGens g = char_to_semigroup(CharSeq(beta));
    BigInt c = 1 - g[0];
    for (std::size_t k = 1; k <= g.genus(); ++k) c += (g.n(k) - 1) * g[k];
    const unsigned long cu = c.get_ui();
    auto in = members(g.gens(), cu + g[0].get_ui() + 1);
    for (unsigned long x = cu; x < in.size(); ++x) EXPECT_TRUE(in[x]);
    if (cu > 0) {
      EXPECT_FALSE(in[cu - 1]);
      for (unsigned long x = 0; x < cu; ++x) EXPECT_NE(in[x], in[cu - 1 - x]) << to_string(g.gens()) << " at " << x;
    }
    for (std::size_t k = 1; k <= g.genus(); ++k) {
      IntSeq others(g.gens().begin(), g.gens().begin() + k);
      EXPECT_FALSE(members(others, g[k].get_ui())[g[k].get_ui()]);
    }
  }
}

// Sequences that are not semigroups of branches are rejected by Bresinsky.
TEST(SemigroupTest, BresinskyRejectsPerturbations) {
  for (const IntSeq& beta : oracle::enumerate_characteristics(12, 30)) {
    if (beta.size() < 3) continue;
    IntSeq g = char_to_semigroup(CharSeq(beta)).gens();
    IntSeq bad = g;
    bad[2] = g[1] * (g[0] / gcd(g[0], g[1]));  // n_1 sgp_1, violates the strict bound
    if (bad[2] <= bad[1]) continue;
    EXPECT_FALSE(bresinsky_check(bad).valid) << to_string(bad);
  }
}

}  // namespace
