#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"
#include "hfi/error.hpp"
#include "hfi/kernel.hpp"

using namespace hfi;
using namespace testing_helpers;

namespace {

const SimpleType iota = SimpleType::iota();
const SimpleType null = SimpleType::null();

TEST(Typecheck, Examples) {
  EXPECT_EQ(typecheck({}, Term::epsilon()), null);
  EXPECT_EQ(typecheck({}, T("(pair c eps)")), SimpleType::product(iota, null));
  EXPECT_EQ(typecheck({}, T("(case (P c) eps eps)")), null);
  EXPECT_THROW(typecheck({}, T("(pi1 eps)")), TypeError);
}

TEST(Typecheck, ContextAndErrors) {
  EXPECT_EQ(typecheck({}, T("(lam z null c)")), SimpleType::arrow(null, iota));
  EXPECT_THROW(typecheck({}, T("x")), UnboundVariable);
  EXPECT_EQ(typecheck({{"x", iota}}, T("(f x)")), iota);
  EXPECT_THROW(typecheck({}, T("(app c eps)")), TypeError);
  EXPECT_THROW(typecheck({}, T("(case (P c) c eps)")), TypeError);
  // atom arguments must be individuals
  Term bad = Term::case_of(Proposition::atom("P", {Term::epsilon()}), T("c"), T("c"));
  EXPECT_THROW(typecheck({}, bad), TypeError);
}

TEST(Substitute, Examples) {
  EXPECT_TRUE(alpha_equal(substitute(Term::ivar("x"), "x", T("c")), T("c")));

  Term body = Term::abs("y", iota, Term::ivar("x"));
  Term r = substitute(body, "x", Term::ivar("y"));
  ASSERT_TRUE(r.is(TermKind::Abs));
  EXPECT_NE(r.name(), "y");
  EXPECT_TRUE(r.child(0).is(TermKind::Var));
  EXPECT_EQ(r.child(0).name(), "y");

  Term c = Term::case_of(Proposition::atom("P", {Term::ivar("x")}), Term::epsilon(), Term::epsilon());
  Term rc = substitute(c, "x", T("c"));
  EXPECT_TRUE(alpha_equal(rc.condition(), Proposition::atom("P", {T("c")})));
}

TEST(Substitute, BoundOccurrencesUntouched) {
  Term t = T("(lam x iota (f x))");
  EXPECT_TRUE(substitute(t, "x", T("c")).same(t));
}

TEST(Step, Examples) {
  auto s = step(T("(pi1 (pair c eps))"));
  ASSERT_TRUE(s);
  EXPECT_TRUE(alpha_equal(*s, T("c")));

  auto s2 = step(T("(app (case (P c) (lam z null c) (lam z null d)) eps)"));
  ASSERT_TRUE(s2);
  EXPECT_TRUE(alpha_equal(*s2, T("(case (P c) (app (lam z null c) eps) (app (lam z null d) eps))")));

  EXPECT_FALSE(step(T("c")));
}

TEST(Step, CaseRules) {
  // argument is a case
  auto a = step(T("(app (lam z null c) (case (P c) eps eps))"));
  ASSERT_TRUE(a);
  // β comes first at the root
  EXPECT_TRUE(alpha_equal(*a, T("c")));

  auto b = step(T("(app (var h (arrow null iota)) (case (P c) eps eps))"));
  ASSERT_TRUE(b);
  EXPECT_TRUE(alpha_equal(*b, T("(case (P c) (app (var h (arrow null iota)) eps) (app (var h (arrow null iota)) eps))")));

  auto p = step(T("(pi2 (case (P c) (pair c eps) (pair d eps)))"));
  ASSERT_TRUE(p);
  EXPECT_TRUE(alpha_equal(*p, T("(case (P c) (pi2 (pair c eps)) (pi2 (pair d eps)))")));

  auto f = step(T("(f (case (P c) c d))"));
  ASSERT_TRUE(f);
  EXPECT_TRUE(alpha_equal(*f, T("(case (P c) (f c) (f d))")));
}

TEST(Step, ConditionsAreNotReduced) {
  Term t = T("(case (P (pi1 (pair c eps))) c d)");
  EXPECT_FALSE(step(t));
  EXPECT_TRUE(is_normal(t));
}

TEST(Normalize, Examples) {
  EXPECT_TRUE(alpha_equal(normalize(T("(app (lam z null c) eps)")), T("c")));
  EXPECT_TRUE(alpha_equal(normalize(T("(pi2 (pair c eps))")), Term::epsilon()));
  EXPECT_TRUE(alpha_equal(normalize(T("(app (case (P c) (lam z null eps) (lam z null eps)) eps)")),
                          T("(case (P c) eps eps)")));
}

TEST(Normalize, StepCountAndFuel) {
  Normalized n = normalize_counted(T("(app (lam z null (pi1 (pair c eps))) eps)"));
  EXPECT_EQ(n.steps, 2u);
  EXPECT_THROW(normalize(T("(app (lam z null (pi1 (pair c eps))) eps)"), 1), StepBudgetExceeded);
}

TEST(Normalize, DeepReducesConditions) {
  Normalized n = normalize_deep(T("(case (P (pi1 (pair c eps))) c d)"));
  EXPECT_TRUE(alpha_equal(n.term, T("(case (P c) c d)")));
}

TEST(Convertible, Examples) {
  EXPECT_TRUE(convertible(T("(app (lam x iota x) c)"), T("c")));
  EXPECT_FALSE(convertible(T("c"), T("(f c)")));
  EXPECT_TRUE(convertible(T("(pi1 (pair c eps))"), T("(app (lam x iota x) c)")));
}

TEST(Inhabitant, Examples) {
  EXPECT_TRUE(alpha_equal(inhabitant(null), Term::epsilon()));
  EXPECT_TRUE(alpha_equal(inhabitant(iota), T("c")));
  Term t = inhabitant(SimpleType::arrow(null, iota));
  ASSERT_TRUE(t.is(TermKind::Abs));
  EXPECT_TRUE(alpha_equal(t, T("(lam z null c)")));
  EXPECT_TRUE(alpha_equal(inhabitant(iota, "d"), T("d")));
}

// Random types of depth exactly 6; the exhaustive sweep in the acceptance run
// only reaches 6 constructors.
SimpleType random_type(std::mt19937& rng, int depth) {
  if (depth == 0) return rng() % 2 ? iota : null;
  int deep_side = static_cast<int>(rng() % 2);
  SimpleType a = random_type(rng, depth - 1);
  SimpleType b = random_type(rng, static_cast<int>(rng() % static_cast<unsigned>(depth)));
  if (deep_side) std::swap(a, b);
  return rng() % 2 ? SimpleType::product(a, b) : SimpleType::arrow(a, b);
}

TEST(Inhabitant, DepthSixTypes) {
  std::mt19937 rng(6);
  for (int n = 0; n < 300; ++n) {
    SimpleType u = random_type(rng, 6);
    ASSERT_EQ(u.depth(), 6u) << u.str();
    Term t = inhabitant(u);
    EXPECT_TRUE(t.is_closed());
    EXPECT_EQ(typecheck(TypingContext{}, t), u) << u.str();
  }
}

TEST(Alpha, BinderNamesDoNotMatter) {
  EXPECT_TRUE(alpha_equal(T("(lam x iota (f x))"), T("(lam y iota (f y))")));
  EXPECT_FALSE(alpha_equal(T("(lam x iota (lam y iota x))"), T("(lam x iota (lam y iota y))")));
  EXPECT_EQ(canonical_string(T("(lam x iota (f x))")), canonical_string(T("(lam y iota (f y))")));
}

}  // namespace
