#include <gtest/gtest.h>

#include <algorithm>

#include "helpers.hpp"
#include "hfi/calculus.hpp"
#include "hfi/error.hpp"

using namespace hfi;
using namespace testing_helpers;

namespace {

bool seq_is(const Sequent& s, std::initializer_list<const char*> fs) {
  if (s.size() != fs.size()) return false;
  std::size_t i = 0;
  for (const char* f : fs)
    if (!alpha_equal(s[i++], F(f))) return false;
  return true;
}

// ⊢ ∃y P(y), ¬∃x P(x), with eigenvariable a
OneSidedProof negex_proof() {
  OneSidedProof ex = OneSidedProof::ex(Term::ivar("a"), "y", F("(P y)"), OneSidedProof::lem(F("(P a)")));
  return OneSidedProof::neg_ex("a", OneSidedProof::perm({2, 1}, ex), "x");
}

TEST(TwoSided, Id) {
  TwoSequent s = check_two_sided(TwoSidedProof::id(F("(P c)")));
  ASSERT_EQ(s.antecedent.size(), 1u);
  ASSERT_EQ(s.succedent.size(), 1u);
  EXPECT_TRUE(alpha_equal(s.antecedent[0], F("(P c)")));
  EXPECT_TRUE(alpha_equal(s.succedent[0], F("(P c)")));
}

TEST(TwoSided, ExRight) {
  TwoSequent s = check_two_sided(TwoSidedProof::ex_right(T("c"), "x", F("(P x)"), TwoSidedProof::id(F("(P c)"))));
  EXPECT_TRUE(alpha_equal(s.succedent[0], F("(exists x (P x))")));
}

TEST(TwoSided, ExLeftEigenvariableInConclusion) {
  TwoSidedProof p = TwoSidedProof::ex_left("a", TwoSidedProof::id(F("(P a)")));
  EXPECT_THROW(check_two_sided(p), EigenvariableViolation);
}

TEST(OneSided, Lem) {
  EXPECT_TRUE(seq_is(check_one_sided(OneSidedProof::lem(F("(P c)"))), {"(not (P c))", "(P c)"}));
}

TEST(OneSided, ContractMismatch) {
  OneSidedProof p = OneSidedProof::contract(OneSidedProof::weak(F("(Q c)"), OneSidedProof::lem(F("(P c)"))));
  try {
    check_one_sided(p);
    FAIL() << "expected RuleMismatch";
  } catch (const RuleMismatch& e) {
    EXPECT_TRUE(e.path.empty());
  }
}

TEST(OneSided, MismatchReportsPath) {
  OneSidedProof bad = OneSidedProof::contract(OneSidedProof::lem(F("(P c)")));
  OneSidedProof p = OneSidedProof::weak(F("(Q c)"), bad);
  try {
    check_one_sided(p);
    FAIL() << "expected RuleMismatch";
  } catch (const RuleMismatch& e) {
    EXPECT_EQ(e.path, std::vector<int>{0});
  }
}

TEST(OneSided, ExcludedMiddleCorpus) {
  EXPECT_TRUE(seq_is(check_one_sided(corpus_one_sided("x1_excluded_middle.prf")),
                     {"(exists x (or (P x) (not (P x))))"}));
}

TEST(OneSided, NegEx) {
  EXPECT_TRUE(seq_is(check_one_sided(negex_proof()), {"(exists y (P y))", "(not (exists x (P x)))"}));
}

TEST(OneSided, NegExEigenvariableInConclusion) {
  OneSidedProof p = OneSidedProof::neg_ex("a", OneSidedProof::perm({2, 1}, OneSidedProof::lem(F("(P a)"))));
  EXPECT_THROW(check_one_sided(p), EigenvariableViolation);
}

TEST(OneSided, BadPermutation) {
  EXPECT_THROW(check_one_sided(OneSidedProof::perm({1, 1}, OneSidedProof::lem(F("(P c)")))), RuleMismatch);
  EXPECT_THROW(check_one_sided(OneSidedProof::perm({1}, OneSidedProof::lem(F("(P c)")))), RuleMismatch);
}

TEST(OneSided, CutAndNegOr) {
  // ⊢ ¬P(c), P(c) and ⊢ ¬¬P(c), ¬P(c)
  OneSidedProof l = OneSidedProof::lem(F("(P c)"));
  OneSidedProof r = OneSidedProof::lem(F("(not (P c))"));
  Sequent s = check_one_sided(OneSidedProof::cut(F("(P c)"), l, r));
  EXPECT_TRUE(seq_is(s, {"(not (P c))", "(not (not (P c)))"}));

  OneSidedProof nor = OneSidedProof::neg_or(OneSidedProof::perm({2, 1}, OneSidedProof::lem(F("(P c)"))),
                                            OneSidedProof::perm({2, 1}, OneSidedProof::lem(F("(Q c)"))));
  EXPECT_TRUE(seq_is(check_one_sided(nor), {"(P c)", "(Q c)", "(not (or (P c) (Q c)))"}));
}

TEST(Translate, IdIsLem) {
  OneSidedProof p = translate(TwoSidedProof::id(F("(P c)")));
  EXPECT_EQ(p.rule(), OneRule::Lem);
  EXPECT_TRUE(seq_is(check_one_sided(p), {"(not (P c))", "(P c)"}));
}

TEST(Translate, NegLeftIsNegNeg) {
  // P(c), ¬P(c) ⊢
  TwoSidedProof p = TwoSidedProof::neg_left(TwoSidedProof::id(F("(P c)")));
  OneSidedProof q = translate(p);
  EXPECT_EQ(count_rule(q, OneRule::NegNeg), 1u);
  EXPECT_TRUE(seq_is(check_one_sided(q), {"(not (P c))", "(not (not (P c)))"}));
}

TEST(Translate, NegRightKeepsPremise) {
  // ⊢ ¬P(c), P(c)
  OneSidedProof q = translate(TwoSidedProof::neg_right(TwoSidedProof::id(F("(P c)"))));
  EXPECT_EQ(count_rule(q, OneRule::NegNeg), 0u);
  EXPECT_TRUE(seq_is(check_one_sided(q), {"(not (P c))", "(P c)"}));
}

TEST(Translate, OrLeftContractsContext) {
  // ¬P(c), P(c) ⊢  twice, then ¬P(c), P(c) ∨ P(c) ⊢
  TwoSidedProof prem = TwoSidedProof::perm({2, 1}, {}, TwoSidedProof::neg_left(TwoSidedProof::id(F("(P c)"))));
  TwoSidedProof p = TwoSidedProof::or_left(prem, prem);
  TwoSequent s = check_two_sided(p);
  ASSERT_EQ(s.antecedent.size(), 2u);
  EXPECT_TRUE(s.succedent.empty());
  OneSidedProof q = translate(p);
  EXPECT_EQ(count_rule(q, OneRule::NegOr), 1u);
  EXPECT_EQ(count_rule(q, OneRule::Contract), 1u);
  EXPECT_TRUE(seq_is(check_one_sided(q), {"(not (not (P c)))", "(not (or (P c) (P c)))"}));
}

TEST(Translate, CorpusEndSequents) {
  for (const char* name : {"two_sided_id.prf", "two_sided_excluded_middle.prf", "two_sided_orl.prf",
                           "two_sided_quantifiers.prf"}) {
    ProofFile f = corpus_file(name);
    ASSERT_TRUE(f.two_sided) << name;
    TwoSequent two = check_two_sided(*f.two_sided);
    Sequent want;
    for (const auto& a : two.antecedent) want.formulas.push_back(Formula::neg(a));
    for (const auto& a : two.succedent) want.formulas.push_back(a);
    EXPECT_TRUE(alpha_equal(check_one_sided(translate(*f.two_sided)), want)) << name;
  }
}

TEST(ProofSubst, Examples) {
  OneSidedProof p = proof_subst(OneSidedProof::lem(F("(P a)")), "a", T("c"));
  EXPECT_EQ(p.rule(), OneRule::Lem);
  EXPECT_TRUE(alpha_equal(p.formula(), F("(P c)")));

  OneSidedProof q = OneSidedProof::ex(T("(f a)"), "x", F("(P x)"), OneSidedProof::lem(F("(P (f a))")));
  EXPECT_TRUE(alpha_equal(check_one_sided(proof_subst(q, "a", Term::ivar("a"))), check_one_sided(q)));
  OneSidedProof qc = proof_subst(q, "a", T("c"));
  EXPECT_TRUE(alpha_equal(qc.witness(), T("(f c)")));
  EXPECT_TRUE(seq_is(check_one_sided(qc), {"(not (P (f c)))", "(exists x (P x))"}));
}

TEST(ProofSubst, EigenvariableIsCaptureRisk) {
  EXPECT_THROW(proof_subst(negex_proof(), "a", T("c")), CaptureRisk);
}

TEST(Regularize, RenamesSharedEigenvariables) {
  OneSidedProof n = negex_proof();
  OneSidedProof p = OneSidedProof::neg_or(n, n);
  EXPECT_THROW(check_one_sided_full(p, true), RegularityViolation);
  OneSidedProof r = regularize(p);
  std::vector<Ident> eig = eigenvariables(r);
  ASSERT_EQ(eig.size(), 2u);
  EXPECT_NE(eig[0], eig[1]);
  EXPECT_TRUE(alpha_equal(check_one_sided(r), check_one_sided_full(p, false).end));
  EXPECT_EQ(eigenvariables(regularize(r)), eig);
}

TEST(Regularize, RegularProofUnchanged) {
  OneSidedProof n = negex_proof();
  EXPECT_EQ(eigenvariables(regularize(n)), std::vector<Ident>{"a"});
  EXPECT_EQ(print_proof(regularize(n), sig()), print_proof(n, sig()));
}

}  // namespace
