#include <gtest/gtest.h>

#include "helpers.hpp"
#include "hfi/error.hpp"
#include "hfi/interpretation.hpp"
#include "hfi/properties.hpp"
#include "hfi/verifier.hpp"

using namespace hfi;
using namespace testing_helpers;

namespace {

Proposition P(const std::string& arg) { return Proposition::atom("P", {T(arg)}); }
Proposition Q(const std::string& arg) { return Proposition::atom("Q", {T(arg)}); }

bool has_case(const Term& t) {
  if (t.is(TermKind::Case)) return true;
  for (const auto& k : t.children())
    if (has_case(k)) return true;
  return false;
}

bool has_case(const Proposition& p) {
  for (const auto& t : p.terms())
    if (has_case(t)) return true;
  for (const auto& s : p.subs())
    if (has_case(s)) return true;
  return false;
}

TEST(EliminateCases, NoCase) { EXPECT_TRUE(alpha_equal(eliminate_cases(P("c")), P("c"))); }

TEST(EliminateCases, SingleSplit) {
  Proposition in = Proposition::atom("P", {T("(case (Q c) c (f c))")});
  Proposition out = eliminate_cases(in);
  EXPECT_FALSE(has_case(out));
  Proposition want = Proposition::disj(conj(Q("c"), P("c")), conj(Proposition::neg(Q("c")), P("(f c)")));
  EXPECT_TRUE(tautology(conj(implies(out, want), implies(want, out))));
  // same truth table as the case-evaluating oracle
  for (const auto& sigma : props::assignments({"P(c)", "P(f(c))", "Q(c)"}))
    EXPECT_EQ(props::eval_with_cases(out, sigma), props::eval_with_cases(in, sigma));
  EXPECT_TRUE(alpha_equal(eliminate_cases(out), out));
}

TEST(EliminateCases, OpenTermRejected) {
  Proposition in = Proposition::atom("P", {Term::case_of(P("x"), T("c"), T("d"))});
  EXPECT_THROW(eliminate_cases(in), NonClosedTerm);
}

TEST(Tautology, Examples) {
  EXPECT_TRUE(tautology(Proposition::disj(P("c"), Proposition::neg(P("c")))));
  EXPECT_FALSE(tautology(Proposition::disj(P("c"), Proposition::neg(P("(f c)")))));
  EXPECT_TRUE(tautology(Proposition::disj(P("c"), Proposition::neg(P("(pi1 (pair c eps))")))));
}

TEST(Tautology, Counterexample) {
  TautologyResult r = tautology_check(Proposition::disj(P("c"), Proposition::neg(P("(f c)"))));
  EXPECT_FALSE(r.valid);
  EXPECT_EQ(r.keys, 2u);
  ASSERT_EQ(r.counterexample.size(), 2u);
}

TEST(Tautology, Equations) {
  EXPECT_TRUE(tautology(Proposition::eq(T("(pi1 (pair c eps))"), T("c"))));
  EXPECT_FALSE(tautology(Proposition::eq(T("c"), T("d"))));
}

TEST(Soundness, QuantifierFreeSequent) {
  OneSidedProof p = OneSidedProof::lem(F("(P c)"));
  EXPECT_TRUE(check_soundness(p, canonical_args(check_one_sided(p))));
  EXPECT_TRUE(check_soundness(p, {T("(lam z null eps)"), Term::epsilon()}));
}

TEST(Soundness, Corpus) {
  for (const char* name : {"x1_excluded_middle.prf", "x3_cut.prf", "x2_two_witnesses.prf", "x5_negex.prf"}) {
    OneSidedProof p = corpus_one_sided(name);
    SoundnessReport r = check_soundness_report(p, canonical_args(check_one_sided(p)));
    EXPECT_TRUE(r.sound) << name << ": " << r.eliminated.str();
  }
}

}  // namespace
