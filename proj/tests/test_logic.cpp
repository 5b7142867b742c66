#include <gtest/gtest.h>

#include "helpers.hpp"
#include "hfi/error.hpp"
#include "hfi/logic.hpp"

using namespace hfi;
using namespace testing_helpers;

namespace {

TEST(SubstFormula, Examples) {
  EXPECT_TRUE(alpha_equal(subst_formula(F("(P x)"), "x", T("c")), F("(P c)")));
  EXPECT_TRUE(alpha_equal(subst_formula(F("(exists x (P x))"), "x", T("c")), F("(exists x (P x))")));
  EXPECT_TRUE(alpha_equal(subst_formula(F("(or (P x) (not (P (f x))))"), "x", T("c")),
                          F("(or (P c) (not (P (f c))))")));
}

TEST(SubstFormula, AvoidsCapture) {
  Formula a = subst_formula(F("(exists y (R x y))"), "x", Term::ivar("y"));
  ASSERT_TRUE(a.is(FormulaKind::Exists));
  EXPECT_NE(a.var(), "y");
  EXPECT_EQ(free_individual_vars(a), std::set<Ident>{"y"});
}

TEST(FreeVars, Examples) {
  EXPECT_TRUE(free_individual_vars(F("(P c)")).empty());
  EXPECT_TRUE(free_individual_vars(F("(exists x (P x))")).empty());
  EXPECT_EQ(free_individual_vars(F("(or (P a) (exists x (P (f x))))")), std::set<Ident>{"a"});
}

TEST(QuantifierFree, Examples) {
  EXPECT_TRUE(is_quantifier_free(F("(P c)")));
  EXPECT_TRUE(is_quantifier_free(F("(not (or (P c) (P (f c))))")));
  EXPECT_FALSE(is_quantifier_free(F("(not (exists x (P x)))")));
}

TEST(Formula, AlphaEquality) {
  EXPECT_TRUE(alpha_equal(F("(exists x (P x))"), F("(exists y (P y))")));
  EXPECT_FALSE(alpha_equal(F("(exists x (P x))"), F("(exists y (P c))")));
}

TEST(Signature, Validation) {
  Signature s;
  EXPECT_THROW(s.validate(), Error);
  s.constants = {"c"};
  s.predicates = {{"P", 1}};
  EXPECT_NO_THROW(s.validate());
  s.functions = {{"c", 1}};
  EXPECT_THROW(s.validate(), Error);
}

}  // namespace
