#include <gtest/gtest.h>

#include "helpers.hpp"
#include "hfi/error.hpp"
#include "hfi/interpretation.hpp"
#include "hfi/kernel.hpp"

using namespace hfi;
using namespace testing_helpers;

namespace {

TEST(Types, Examples) {
  EXPECT_EQ(evidence_type(F("(P c)")), Ty("null"));
  EXPECT_EQ(counter_type(F("(P c)")), Ty("null"));
  EXPECT_EQ(evidence_type(F("(exists x (P x))")), Ty("(prod iota (arrow null null))"));
  EXPECT_EQ(counter_type(F("(not (P c))")), Ty("(arrow null null)"));
}

TEST(Types, Unfolding) {
  Formula a = F("(or (P c) (Q c))");
  Formula na = F("(not (P c))");
  Formula nb = F("(not (Q c))");
  EXPECT_EQ(evidence_type(a), SimpleType::product(counter_type(na), counter_type(nb)));
  EXPECT_EQ(counter_type(a), SimpleType::product(SimpleType::arrow(counter_type(na), evidence_type(na)),
                                                 SimpleType::arrow(counter_type(nb), evidence_type(nb))));
  Formula e = F("(exists x (P x))");
  EXPECT_EQ(counter_type(e), SimpleType::arrow(evidence_type(e), evidence_type(F("(not (P x))"))));
}

TEST(CanonicalEvidence, Examples) {
  EXPECT_TRUE(alpha_equal(canonical_evidence(F("(P c)")), Term::epsilon()));
  EXPECT_TRUE(alpha_equal(canonical_evidence(F("(exists x (P x))")), T("(pair c (lam z null eps))")));
  EXPECT_TRUE(alpha_equal(canonical_evidence(F("(not (P c))")), T("(lam z (arrow null null) eps)")));
  EXPECT_TRUE(alpha_equal(canonical_evidence(F("(exists x (P x))"), "d"), T("(pair d (lam z null eps))")));
}

TEST(Winning, Examples) {
  EXPECT_TRUE(alpha_equal(winning(F("(P c)"), Term::epsilon(), Term::epsilon()), Proposition::atom("P", {T("c")})));
  Proposition w = winning(F("(not (P c))"), T("(lam z (arrow null null) eps)"), T("(lam z null eps)"));
  EXPECT_TRUE(alpha_equal(w, Proposition::neg(Proposition::atom("P", {T("c")}))));
}

TEST(Winning, QuantifierFreeIsIdentity) {
  Formula a = F("(or (not (P c)) (not (or (Q c) (P (f c)))))");
  Term u = canonical_evidence(a);
  Term v = inhabitant(counter_type(a));
  EXPECT_TRUE(alpha_equal(winning(a, u, v), to_proposition(a)));
}

TEST(Winning, Existential) {
  Term u = T("(pair c (lam z null eps))");
  Term v = T("(lam y (prod iota (arrow null null)) (lam z (arrow null null) eps))");
  Proposition w = winning(F("(exists x (P x))"), u, v);
  auto [n, steps] = normalize_deep(w);
  EXPECT_TRUE(alpha_equal(n, Proposition::atom("P", {T("c")})));
}

TEST(Winning, IllTypedArguments) {
  EXPECT_THROW(winning(F("(P c)"), T("c"), Term::epsilon()), TypeError);
}

TEST(Transform, LemPrincipalAppliesFirstArgument) {
  OneSidedProof p = OneSidedProof::lem(F("(P c)"));
  Term u = Term::var("u", Ty("(arrow null null)"));
  Term v = Term::var("v", Ty("null"));
  EXPECT_TRUE(alpha_equal(transform(p, 2, {u, v}), Term::app(u, v)));
}

TEST(Transform, WeakPrincipalIsCanonicalEvidence) {
  Formula a = F("(exists x (Q x))");
  OneSidedProof p = OneSidedProof::weak(a, OneSidedProof::lem(F("(P c)")));
  std::vector<Term> args = canonical_args(check_one_sided(p));
  EXPECT_TRUE(alpha_equal(transform(p, 3, args), canonical_evidence(a)));
}

TEST(Transform, ExcludedMiddleWitness) {
  OneSidedProof p = corpus_one_sided("x1_excluded_middle.prf");
  Formula goal = check_one_sided(p)[0];
  Term t = normalize(transform(p, 1, {inhabitant(counter_type(goal))}));
  ASSERT_TRUE(t.is(TermKind::Pair));
  EXPECT_TRUE(alpha_equal(normalize(t.child(0)), T("c")));
}

TEST(Transform, CorpusTyping) {
  for (const char* name : {"x1_excluded_middle.prf", "x2_two_witnesses.prf", "x3_cut.prf", "x4_cut_exists.prf",
                           "x5_negex.prf", "x6_double_negation.prf", "two_sided_quantifiers.prf"}) {
    TransformerEnv env(corpus_one_sided(name));
    std::vector<Term> args = canonical_args(env.end_sequent());
    for (std::size_t i = 1; i <= args.size(); ++i) {
      Term t = env.transform(i, args);
      EXPECT_TRUE(t.is_closed()) << name << " " << i;
      EXPECT_EQ(typecheck({}, t), evidence_type(env.end_sequent()[i - 1])) << name << " " << i;
    }
  }
}

TEST(Transform, BadIndexAndArguments) {
  OneSidedProof p = OneSidedProof::lem(F("(P c)"));
  std::vector<Term> args = canonical_args(check_one_sided(p));
  EXPECT_THROW(transform(p, 0, args), IndexOutOfRange);
  EXPECT_THROW(transform(p, 3, args), IndexOutOfRange);
  EXPECT_THROW(transform(p, 1, {Term::epsilon(), Term::epsilon()}), TypeError);
}

TEST(Transform, RepeatedCallsAgree) {
  TransformerEnv env(corpus_one_sided("x3_cut.prf"));
  std::vector<Term> args = canonical_args(env.end_sequent());
  EXPECT_TRUE(alpha_equal(env.transform(1, args), env.transform(1, args)));
}

}  // namespace
