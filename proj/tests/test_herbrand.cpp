#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "helpers.hpp"
#include "hfi/error.hpp"
#include "hfi/generators.hpp"
#include "hfi/herbrand.hpp"
#include "hfi/interpretation.hpp"
#include "hfi/kernel.hpp"

using namespace hfi;
using namespace testing_helpers;

namespace {

std::vector<std::string> strs(const std::vector<Term>& ts) {
  std::vector<std::string> out;
  for (const auto& t : ts) out.push_back(t.str());
  return out;
}

TEST(ReadOff, Examples) {
  EXPECT_EQ(strs(read_off(T("(pair c (lam z null eps))"))), std::vector<std::string>{"c"});
  EXPECT_EQ(strs(read_off(T("(case (P c) (pair c (lam z null eps)) (pair (f c) (lam y null eps)))"))),
            (std::vector<std::string>{"c", "f(c)"}));
  EXPECT_EQ(strs(read_off(T("(pair (case (P c) c (f c)) (lam z null eps))"))),
            (std::vector<std::string>{"c", "f(c)"}));
}

TEST(ReadOff, Malformed) { EXPECT_THROW(read_off(T("(lam z null eps)")), MalformedNormalForm); }

TEST(Extract, ExcludedMiddle) {
  HerbrandResult r = extract(corpus_one_sided("x1_excluded_middle.prf"));
  EXPECT_EQ(strs(r.witnesses), std::vector<std::string>{"c"});
  EXPECT_TRUE(alpha_equal(r.disjunction, Proposition::disj(Proposition::atom("P", {T("c")}),
                                                           Proposition::neg(Proposition::atom("P", {T("c")})))));
  EXPECT_TRUE(r.verified);
}

// P(t) ∨ ¬P(f(t)) evaluated over the atoms P(c), P(f(c)), P(f(f(c))).
bool x2_instance(const std::string& t, const std::map<std::string, bool>& s) {
  return s.at("P(" + t + ")") || !s.at("P(f(" + t + "))");
}

TEST(Extract, TwoWitnessesNeeded) {
  HerbrandResult r = extract(corpus_one_sided("x2_two_witnesses.prf"));
  EXPECT_TRUE(r.verified);
  std::vector<std::string> w = strs(r.witnesses);
  EXPECT_NE(std::find(w.begin(), w.end(), "c"), w.end());
  EXPECT_NE(std::find(w.begin(), w.end(), "f(c)"), w.end());

  const std::vector<std::string> atoms = {"P(c)", "P(f(c))", "P(f(f(c)))"};
  bool pair_valid = true, c_valid = true, fc_valid = true;
  for (int bits = 0; bits < 8; ++bits) {
    std::map<std::string, bool> s;
    for (int i = 0; i < 3; ++i) s[atoms[i]] = (bits >> i) & 1;
    bool a = x2_instance("c", s), b = x2_instance("f(c)", s);
    pair_valid = pair_valid && (a || b);
    c_valid = c_valid && a;
    fc_valid = fc_valid && b;
  }
  EXPECT_TRUE(pair_valid);
  EXPECT_FALSE(c_valid);
  EXPECT_FALSE(fc_valid);
}

TEST(Extract, Cut) {
  EXPECT_TRUE(extract(corpus_one_sided("x3_cut.prf")).verified);
  HerbrandResult r = extract(corpus_one_sided("x4_cut_exists.prf"), std::nullopt, "d");
  EXPECT_TRUE(r.verified);
}

TEST(Extract, AlternativeCounterEvidence) {
  OneSidedProof p = corpus_one_sided("x2_two_witnesses.prf");
  Formula goal = check_one_sided(p)[0];
  gen::Rng rng(11);
  for (int k = 0; k < 20; ++k) {
    Term v = gen::random_inhabitant(rng, counter_type(goal), 3);
    EXPECT_TRUE(extract(p, v).verified) << v;
  }
  EXPECT_TRUE(extract(p, inhabitant(counter_type(goal))).verified);
}

TEST(Extract, NotAGoal) {
  EXPECT_THROW(extract(corpus_one_sided("x5_negex.prf")), NotHerbrandGoal);
  EXPECT_THROW(extract(OneSidedProof::lem(F("(P c)"))), NotHerbrandGoal);
}

}  // namespace
