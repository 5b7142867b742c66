#include <gtest/gtest.h>

#include <filesystem>

#include "helpers.hpp"
#include "hfi/error.hpp"

using namespace hfi;
using namespace testing_helpers;

namespace {

std::vector<std::string> corpus_paths() {
  std::vector<std::string> out;
  for (const auto& e : std::filesystem::directory_iterator(HFI_CORPUS_DIR))
    if (e.path().extension() == ".prf") out.push_back(e.path().string());
  std::sort(out.begin(), out.end());
  return out;
}

TEST(Parse, MinimalFile) {
  ProofFile f = parse_proof_file("(sig (const c) (pred P 1)) (proof1 (lem (P c)))");
  ASSERT_TRUE(f.one_sided);
  EXPECT_FALSE(f.two_sided);
  EXPECT_EQ(f.one_sided->rule(), OneRule::Lem);
  EXPECT_EQ(f.signature.constants, std::vector<Ident>{"c"});
}

TEST(Parse, MissingParen) {
  try {
    parse_proof_file("(sig (const c) (pred P 1))\n(proof1 (lem (P c))");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line, 2u);
    EXPECT_GE(e.col, 1u);
  }
}

TEST(Parse, UnknownRule) {
  try {
    parse_proof_file("(sig (const c) (pred P 1))\n(proof1 (foo (P c)))");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line, 2u);
    EXPECT_EQ(e.col, 10u);
    std::string msg = e.what();
    for (const auto& r : one_sided_rule_names()) EXPECT_NE(msg.find(r), std::string::npos) << r;
  }
}

TEST(Parse, UndeclaredSymbols) {
  EXPECT_THROW(parse_proof_file("(sig (const c) (pred P 1)) (proof1 (lem (Q c)))"), ParseError);
  EXPECT_THROW(parse_proof_file("(sig (const c) (pred P 1)) (proof1 (lem (P c c)))"), ParseError);
  EXPECT_THROW(parse_proof_file("(sig (pred P 1)) (proof1 (lem (P x)))"), ParseError);
}

TEST(Parse, Fragments) {
  EXPECT_EQ(parse_type("(arrow (prod iota null) null)").str(), "((ι × □) → □)");
  EXPECT_TRUE(alpha_equal(T("(app (lam x iota (f x)) c)"),
                          Term::app(Term::abs("x", SimpleType::iota(), Term::fun("f", {Term::ivar("x")})),
                                    Term::constant("c"))));
  EXPECT_TRUE(F("(exists x (or (P x) (not (Q (f x)))))").is(FormulaKind::Exists));
  EXPECT_THROW(T("(pair c)"), ParseError);
}

TEST(Print, TermRoundTrip) {
  for (const char* text : {"(lam x iota (f x))", "(case (or (P c) (not (Q (pi1 (pair c eps))))) c d)",
                           "(app (var h (arrow null iota)) eps)", "(pi2 (pair (g c d) eps))"}) {
    Term t = T(text);
    EXPECT_TRUE(alpha_equal(T(print_term(t, sig())), t)) << text;
  }
}

TEST(Print, CorpusRoundTrip) {
  for (const auto& path : corpus_paths()) {
    ProofFile f = parse_proof_file(slurp(path));
    std::string once = print_proof_file(f);
    ProofFile g = parse_proof_file(once);
    EXPECT_EQ(print_proof_file(g), once) << path;
    if (f.one_sided) {
      EXPECT_TRUE(alpha_equal(check_one_sided(*g.one_sided), check_one_sided(*f.one_sided))) << path;
    } else {
      EXPECT_TRUE(alpha_equal(check_two_sided(*g.two_sided), check_two_sided(*f.two_sided))) << path;
    }
  }
}

TEST(Print, TranslationReparses) {
  for (const auto& path : corpus_paths()) {
    ProofFile f = parse_proof_file(slurp(path));
    if (!f.two_sided) continue;
    ProofFile out;
    out.signature = f.signature;
    out.one_sided = translate(*f.two_sided);
    ProofFile back = parse_proof_file(print_proof_file(out));
    ASSERT_TRUE(back.one_sided) << path;
    EXPECT_TRUE(alpha_equal(check_one_sided(*back.one_sided), check_one_sided(*out.one_sided))) << path;
  }
}

}  // namespace
