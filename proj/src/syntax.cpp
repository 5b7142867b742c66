#include "hfi/syntax.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "hfi/error.hpp"
#include "hfi/kernel.hpp"

namespace hfi {

// ---------------------------------------------------------------------------
// Reader

namespace {

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  std::vector<SExpr> all() {
    std::vector<SExpr> out;
    skip();
    while (pos_ < text_.size()) {
      out.push_back(read());
      skip();
    }
    return out;
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else if ((static_cast<unsigned char>(text_[pos_]) & 0xC0) != 0x80) {
      ++col_;
    }
    ++pos_;
  }

  void skip() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == ';') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        advance();
      } else {
        break;
      }
    }
  }

  SExpr read() {
    SExpr e;
    e.line = line_;
    e.col = col_;
    char c = text_[pos_];
    if (c == ')') throw ParseError(line_, col_, "an expression, found ')'");
    if (c == '(') {
      e.is_list = true;
      advance();
      skip();
      while (pos_ < text_.size() && text_[pos_] != ')') {
        e.items.push_back(read());
        skip();
      }
      if (pos_ >= text_.size()) throw ParseError(line_, col_, "')' to close the list opened at " +
                                                              std::to_string(e.line) + ":" + std::to_string(e.col));
      advance();
      return e;
    }
    std::size_t start = pos_;
    while (pos_ < text_.size()) {
      char d = text_[pos_];
      if (d == '(' || d == ')' || d == ' ' || d == '\t' || d == '\n' || d == '\r' || d == ';') break;
      advance();
    }
    e.atom = std::string(text_.substr(start, pos_ - start));
    return e;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

[[noreturn]] void fail(const SExpr& e, const std::string& expected) { throw ParseError(e.line, e.col, expected); }

bool is_head(const SExpr& e, const char* name) {
  return e.is_list && !e.items.empty() && !e.items[0].is_list && e.items[0].atom == name;
}

const std::string& atom_of(const SExpr& e, const std::string& what) {
  if (e.is_list) fail(e, what);
  return e.atom;
}

std::size_t number_of(const SExpr& e, const std::string& what) {
  const std::string& s = atom_of(e, what);
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) fail(e, what);
  return static_cast<std::size_t>(std::stoul(s));
}

void arity(const SExpr& e, std::size_t n, const std::string& form) {
  if (e.items.size() != n) fail(e, form);
}

const std::vector<std::string> kReserved = {"or", "not", "exists", "eq", "eps", "pair", "pi1", "pi2",
                                            "lam", "app", "case", "var", "iota", "null", "prod", "arrow"};

bool valid_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (s[0] >= '0' && s[0] <= '9') return false;
  return std::find(kReserved.begin(), kReserved.end(), s) == kReserved.end();
}

// ---------------------------------------------------------------------------
// Terms, propositions, formulas

class Parser {
 public:
  explicit Parser(const Signature& sig) : sig_(sig) {}

  SimpleType type(const SExpr& e) {
    if (!e.is_list) {
      if (e.atom == "iota") return SimpleType::iota();
      if (e.atom == "null") return SimpleType::null();
      fail(e, "a type (iota, null, (prod U V), (arrow U V))");
    }
    if (is_head(e, "prod")) {
      arity(e, 3, "(prod U V)");
      return SimpleType::product(type(e.items[1]), type(e.items[2]));
    }
    if (is_head(e, "arrow")) {
      arity(e, 3, "(arrow U V)");
      return SimpleType::arrow(type(e.items[1]), type(e.items[2]));
    }
    fail(e, "a type (iota, null, (prod U V), (arrow U V))");
  }

  Ident binder(const SExpr& e) {
    const std::string& s = atom_of(e, "a variable name");
    if (!valid_identifier(s) || sig_.is_constant(s) || sig_.function_arity(s) || sig_.predicate_arity(s))
      fail(e, "a variable name distinct from keywords and declared symbols");
    return s;
  }

  Term term(const SExpr& e) {
    if (!e.is_list) {
      if (e.atom == "eps") return Term::epsilon();
      if (auto t = lookup(e.atom)) return Term::var(e.atom, *t);
      if (sig_.is_constant(e.atom)) return Term::constant(e.atom);
      if (sig_.function_arity(e.atom) || sig_.predicate_arity(e.atom) || !valid_identifier(e.atom))
        fail(e, "a term");
      return Term::ivar(e.atom);
    }
    if (e.items.empty() || e.items[0].is_list) fail(e, "a term");
    const std::string& head = e.items[0].atom;
    if (head == "pair") {
      arity(e, 3, "(pair u v)");
      return Term::pair(term(e.items[1]), term(e.items[2]));
    }
    if (head == "pi1" || head == "pi2") {
      arity(e, 2, "(" + head + " u)");
      return Term::proj(head == "pi1" ? 1 : 2, term(e.items[1]));
    }
    if (head == "lam") {
      arity(e, 4, "(lam x T u)");
      Ident x = binder(e.items[1]);
      SimpleType t = type(e.items[2]);
      scope_.emplace_back(x, t);
      Term body = term(e.items[3]);
      scope_.pop_back();
      return Term::abs(x, t, body);
    }
    if (head == "app") {
      arity(e, 3, "(app u v)");
      return Term::app(term(e.items[1]), term(e.items[2]));
    }
    if (head == "case") {
      arity(e, 4, "(case A u v)");
      return Term::case_of(prop(e.items[1]), term(e.items[2]), term(e.items[3]));
    }
    if (head == "var") {
      arity(e, 3, "(var x T)");
      return Term::var(binder(e.items[1]), type(e.items[2]));
    }
    if (auto n = sig_.function_arity(head)) {
      if (e.items.size() != static_cast<std::size_t>(*n) + 1)
        fail(e, "function " + head + " applied to " + std::to_string(*n) + " argument(s)");
      std::vector<Term> args;
      for (std::size_t i = 1; i < e.items.size(); ++i) args.push_back(term(e.items[i]));
      return Term::fun(head, std::move(args));
    }
    fail(e.items[0], "a function symbol or one of pair, pi1, pi2, lam, app, case, var");
  }

  Proposition prop(const SExpr& e) {
    if (is_head(e, "or")) {
      arity(e, 3, "(or A B)");
      return Proposition::disj(prop(e.items[1]), prop(e.items[2]));
    }
    if (is_head(e, "not")) {
      arity(e, 2, "(not A)");
      return Proposition::neg(prop(e.items[1]));
    }
    if (is_head(e, "eq")) {
      arity(e, 3, "(eq u v)");
      return Proposition::eq(term(e.items[1]), term(e.items[2]));
    }
    auto [pred, args] = atom_parts(e);
    return Proposition::atom(pred, std::move(args));
  }

  Formula formula(const SExpr& e) {
    if (is_head(e, "or")) {
      arity(e, 3, "(or A B)");
      return Formula::disj(formula(e.items[1]), formula(e.items[2]));
    }
    if (is_head(e, "not")) {
      arity(e, 2, "(not A)");
      return Formula::neg(formula(e.items[1]));
    }
    if (is_head(e, "exists")) {
      arity(e, 3, "(exists x A)");
      Ident x = binder(e.items[1]);
      scope_.emplace_back(x, SimpleType::iota());
      Formula body = formula(e.items[2]);
      scope_.pop_back();
      return Formula::exists(x, body);
    }
    auto [pred, args] = atom_parts(e);
    for (std::size_t i = 0; i < args.size(); ++i) {
      SimpleType t;
      try {
        t = infer_type(args[i]);
      } catch (const TypeError& err) {
        fail(e.items[i + 1], std::string("a well-typed term (") + err.what() + ")");
      }
      if (!t.is_iota()) fail(e.items[i + 1], "a term of type ι");
    }
    return Formula::atom(pred, std::move(args));
  }

  void push_scope(const Ident& x, const SimpleType& t) { scope_.emplace_back(x, t); }
  void pop_scope() { scope_.pop_back(); }

 private:
  std::pair<Ident, std::vector<Term>> atom_parts(const SExpr& e) {
    if (!e.is_list || e.items.empty() || e.items[0].is_list) fail(e, "a formula");
    const std::string& pred = e.items[0].atom;
    auto n = sig_.predicate_arity(pred);
    if (!n) fail(e.items[0], "a declared predicate or one of or, not, exists");
    if (e.items.size() != static_cast<std::size_t>(*n) + 1)
      fail(e, "predicate " + pred + " applied to " + std::to_string(*n) + " argument(s)");
    std::vector<Term> args;
    for (std::size_t i = 1; i < e.items.size(); ++i) args.push_back(term(e.items[i]));
    return {pred, std::move(args)};
  }

  std::optional<SimpleType> lookup(const Ident& name) const {
    for (std::size_t i = scope_.size(); i-- > 0;)
      if (scope_[i].first == name) return scope_[i].second;
    return std::nullopt;
  }

  const Signature& sig_;
  std::vector<std::pair<Ident, SimpleType>> scope_;
};

// ---------------------------------------------------------------------------
// Proofs

std::string join(const std::vector<std::string>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i];
  return out;
}

std::vector<std::size_t> permutation(const SExpr& e) {
  if (!e.is_list) fail(e, "a permutation list such as (2 1)");
  std::vector<std::size_t> out;
  for (const auto& x : e.items) out.push_back(number_of(x, "a position (positive integer)"));
  return out;
}

Term witness(Parser& ps, const SExpr& e) {
  if (!is_head(e, "witness")) fail(e, "(witness t)");
  arity(e, 2, "(witness t)");
  return ps.term(e.items[1]);
}

Ident eigen(Parser& ps, const SExpr& e) {
  if (!is_head(e, "eigen")) fail(e, "(eigen a)");
  arity(e, 2, "(eigen a)");
  return ps.binder(e.items[1]);
}

Ident bound_var(Parser& ps, const SExpr& e) {
  if (!e.is_list || e.items.size() != 1) fail(e, "(x)");
  return ps.binder(e.items[0]);
}

int side(const SExpr& e) {
  std::size_t i = number_of(e, "disjunct index 1 or 2");
  if (i != 1 && i != 2) fail(e, "disjunct index 1 or 2");
  return static_cast<int>(i);
}

// Parses the matrix of (ex (witness t) (x) A sub) with x in scope.
Formula matrix(Parser& ps, const Ident& x, const SExpr& e) {
  ps.push_scope(x, SimpleType::iota());
  Formula a = ps.formula(e);
  ps.pop_scope();
  return a;
}

OneSidedProof one_sided(Parser& ps, const SExpr& e) {
  if (!e.is_list || e.items.empty() || e.items[0].is_list)
    fail(e, "a proof node (" + join(one_sided_rule_names()) + ")");
  const SExpr& h = e.items[0];
  const std::string& r = h.atom;
  if (r == "lem") {
    arity(e, 2, "(lem A)");
    return OneSidedProof::lem(ps.formula(e.items[1]));
  }
  if (r == "or") {
    arity(e, 4, "(or i B sub)");
    return OneSidedProof::or_intro(side(e.items[1]), ps.formula(e.items[2]), one_sided(ps, e.items[3]));
  }
  if (r == "nor") {
    arity(e, 3, "(nor sub1 sub2)");
    return OneSidedProof::neg_or(one_sided(ps, e.items[1]), one_sided(ps, e.items[2]));
  }
  if (r == "ex") {
    arity(e, 5, "(ex (witness t) (x) A sub)");
    Term t = witness(ps, e.items[1]);
    Ident x = bound_var(ps, e.items[2]);
    Formula a = matrix(ps, x, e.items[3]);
    return OneSidedProof::ex(t, x, a, one_sided(ps, e.items[4]));
  }
  if (r == "nex") {
    if (e.items.size() != 3 && e.items.size() != 4) fail(e, "(nex (eigen a) [(x)] sub)");
    Ident a = eigen(ps, e.items[1]);
    std::optional<Ident> x;
    if (e.items.size() == 4) x = bound_var(ps, e.items[2]);
    return OneSidedProof::neg_ex(a, one_sided(ps, e.items.back()), x);
  }
  if (r == "contr") {
    arity(e, 2, "(contr sub)");
    return OneSidedProof::contract(one_sided(ps, e.items[1]));
  }
  if (r == "weak") {
    arity(e, 3, "(weak A sub)");
    return OneSidedProof::weak(ps.formula(e.items[1]), one_sided(ps, e.items[2]));
  }
  if (r == "nn") {
    arity(e, 2, "(nn sub)");
    return OneSidedProof::neg_neg(one_sided(ps, e.items[1]));
  }
  if (r == "cut") {
    arity(e, 4, "(cut A sub1 sub2)");
    return OneSidedProof::cut(ps.formula(e.items[1]), one_sided(ps, e.items[2]), one_sided(ps, e.items[3]));
  }
  if (r == "perm") {
    arity(e, 3, "(perm (i ...) sub)");
    return OneSidedProof::perm(permutation(e.items[1]), one_sided(ps, e.items[2]));
  }
  fail(h, "a rule name (" + join(one_sided_rule_names()) + ")");
}

TwoSidedProof two_sided(Parser& ps, const SExpr& e) {
  if (!e.is_list || e.items.empty() || e.items[0].is_list)
    fail(e, "a proof node (" + join(two_sided_rule_names()) + ")");
  const SExpr& h = e.items[0];
  const std::string& r = h.atom;
  if (r == "id") {
    arity(e, 2, "(id A)");
    return TwoSidedProof::id(ps.formula(e.items[1]));
  }
  if (r == "orR") {
    arity(e, 4, "(orR i B sub)");
    return TwoSidedProof::or_right(side(e.items[1]), ps.formula(e.items[2]), two_sided(ps, e.items[3]));
  }
  if (r == "orL") {
    arity(e, 3, "(orL sub1 sub2)");
    return TwoSidedProof::or_left(two_sided(ps, e.items[1]), two_sided(ps, e.items[2]));
  }
  if (r == "negR" || r == "negL" || r == "contrR" || r == "contrL") {
    arity(e, 2, "(" + r + " sub)");
    TwoSidedProof s = two_sided(ps, e.items[1]);
    if (r == "negR") return TwoSidedProof::neg_right(s);
    if (r == "negL") return TwoSidedProof::neg_left(s);
    if (r == "contrR") return TwoSidedProof::contract_right(s);
    return TwoSidedProof::contract_left(s);
  }
  if (r == "exR") {
    arity(e, 5, "(exR (witness t) (x) A sub)");
    Term t = witness(ps, e.items[1]);
    Ident x = bound_var(ps, e.items[2]);
    Formula a = matrix(ps, x, e.items[3]);
    return TwoSidedProof::ex_right(t, x, a, two_sided(ps, e.items[4]));
  }
  if (r == "exL") {
    if (e.items.size() != 3 && e.items.size() != 4) fail(e, "(exL (eigen a) [(x)] sub)");
    Ident a = eigen(ps, e.items[1]);
    std::optional<Ident> x;
    if (e.items.size() == 4) x = bound_var(ps, e.items[2]);
    return TwoSidedProof::ex_left(a, two_sided(ps, e.items.back()), x);
  }
  if (r == "weakR" || r == "weakL") {
    arity(e, 3, "(" + r + " A sub)");
    Formula a = ps.formula(e.items[1]);
    TwoSidedProof s = two_sided(ps, e.items[2]);
    return r == "weakR" ? TwoSidedProof::weak_right(a, s) : TwoSidedProof::weak_left(a, s);
  }
  if (r == "cut") {
    arity(e, 4, "(cut A sub1 sub2)");
    return TwoSidedProof::cut(ps.formula(e.items[1]), two_sided(ps, e.items[2]), two_sided(ps, e.items[3]));
  }
  if (r == "perm") {
    arity(e, 4, "(perm (i ...) (j ...) sub)");
    return TwoSidedProof::perm(permutation(e.items[1]), permutation(e.items[2]), two_sided(ps, e.items[3]));
  }
  fail(h, "a rule name (" + join(two_sided_rule_names()) + ")");
}

Signature signature(const SExpr& e) {
  if (!is_head(e, "sig")) fail(e, "(sig ...) header");
  Signature sig;
  for (std::size_t i = 1; i < e.items.size(); ++i) {
    const SExpr& d = e.items[i];
    if (is_head(d, "const")) {
      if (d.items.size() < 2) fail(d, "(const c ...)");
      for (std::size_t j = 1; j < d.items.size(); ++j) {
        const std::string& n = atom_of(d.items[j], "a constant name");
        if (!valid_identifier(n)) fail(d.items[j], "a constant name distinct from keywords");
        sig.constants.push_back(n);
      }
    } else if (is_head(d, "fun") || is_head(d, "pred")) {
      arity(d, 3, "(" + d.items[0].atom + " name arity)");
      const std::string& n = atom_of(d.items[1], "a symbol name");
      if (!valid_identifier(n)) fail(d.items[1], "a symbol name distinct from keywords");
      int k = static_cast<int>(number_of(d.items[2], "an arity"));
      if (d.items[0].atom == "fun") {
        if (k < 1) fail(d.items[2], "a function arity of at least 1");
        sig.functions.emplace_back(n, k);
      } else {
        sig.predicates.emplace_back(n, k);
      }
    } else {
      fail(d, "(const ...), (fun f n) or (pred P n)");
    }
  }
  try {
    sig.validate();
  } catch (const Error& err) {
    fail(e, std::string("a valid signature (") + err.what() + ")");
  }
  return sig;
}

SExpr single(std::string_view text) {
  auto es = parse_sexprs(text);
  if (es.size() != 1) throw ParseError(1, 1, "exactly one expression");
  return es[0];
}

}  // namespace

std::vector<SExpr> parse_sexprs(std::string_view text) { return Reader(text).all(); }

std::vector<std::string> one_sided_rule_names() {
  return {"lem", "or", "nor", "ex", "nex", "contr", "weak", "nn", "cut", "perm"};
}

std::vector<std::string> two_sided_rule_names() {
  return {"id", "orR", "orL", "negR", "negL", "exR", "exL", "contrR", "contrL", "weakR", "weakL", "cut", "perm"};
}

ProofFile parse_proof_file(std::string_view text) {
  auto es = parse_sexprs(text);
  if (es.empty()) throw ParseError(1, 1, "(sig ...) header");
  ProofFile out;
  out.signature = signature(es[0]);
  if (es.size() < 2) throw ParseError(es[0].line, es[0].col, "a (proof1 ...) or (proof2 ...) body after the header");
  if (es.size() > 2) fail(es[2], "end of input after the proof body");
  const SExpr& body = es[1];
  Parser ps(out.signature);
  if (is_head(body, "proof1")) {
    arity(body, 2, "(proof1 node)");
    out.one_sided = one_sided(ps, body.items[1]);
  } else if (is_head(body, "proof2")) {
    arity(body, 2, "(proof2 node)");
    out.two_sided = two_sided(ps, body.items[1]);
  } else {
    fail(body, "(proof1 ...) or (proof2 ...)");
  }
  return out;
}

Formula parse_formula(std::string_view text, const Signature& sig) {
  Parser ps(sig);
  return ps.formula(single(text));
}

Term parse_term(std::string_view text, const Signature& sig) {
  Parser ps(sig);
  return ps.term(single(text));
}

SimpleType parse_type(std::string_view text) {
  Signature sig;
  Parser ps(sig);
  return ps.type(single(text));
}

// ---------------------------------------------------------------------------
// Printer

namespace {

class Printer {
 public:
  explicit Printer(const Signature& sig) : sig_(sig) {}

  std::string type(const SimpleType& t) {
    switch (t.kind()) {
      case SimpleType::Kind::Iota: return "iota";
      case SimpleType::Kind::Null: return "null";
      case SimpleType::Kind::Product: return "(prod " + type(t.left()) + " " + type(t.right()) + ")";
      case SimpleType::Kind::Arrow: return "(arrow " + type(t.domain()) + " " + type(t.codomain()) + ")";
    }
    return "?";
  }

  std::string term(const Term& t) {
    switch (t.kind()) {
      case TermKind::Epsilon:
        return "eps";
      case TermKind::Const:
        return t.name();
      case TermKind::Var: {
        // Bare names read back as the innermost binding, else as ι variables.
        auto bound = lookup(t.name());
        bool bare = bound ? *bound == t.var_type() : (t.var_type().is_iota() && !sig_.is_constant(t.name()));
        if (bare) return t.name();
        return "(var " + t.name() + " " + type(t.var_type()) + ")";
      }
      case TermKind::Fun: {
        std::string out = "(" + t.name();
        for (const auto& a : t.children()) out += " " + term(a);
        return out + ")";
      }
      case TermKind::Pair:
        return "(pair " + term(t.child(0)) + " " + term(t.child(1)) + ")";
      case TermKind::Proj:
        return "(pi" + std::to_string(t.index()) + " " + term(t.child(0)) + ")";
      case TermKind::Abs: {
        scope_.emplace_back(t.name(), t.var_type());
        std::string body = term(t.child(0));
        scope_.pop_back();
        return "(lam " + t.name() + " " + type(t.var_type()) + " " + body + ")";
      }
      case TermKind::App:
        return "(app " + term(t.child(0)) + " " + term(t.child(1)) + ")";
      case TermKind::Case:
        return "(case " + prop(t.condition()) + " " + term(t.child(0)) + " " + term(t.child(1)) + ")";
    }
    return "?";
  }

  std::string prop(const Proposition& p) {
    switch (p.kind()) {
      case PropKind::Atom: {
        std::string out = "(" + p.pred();
        for (const auto& a : p.terms()) out += " " + term(a);
        return out + ")";
      }
      case PropKind::Eq:
        return "(eq " + term(p.terms()[0]) + " " + term(p.terms()[1]) + ")";
      case PropKind::Or:
        return "(or " + prop(p.sub(0)) + " " + prop(p.sub(1)) + ")";
      case PropKind::Not:
        return "(not " + prop(p.sub(0)) + ")";
    }
    return "?";
  }

  std::string formula(const Formula& a) {
    switch (a.kind()) {
      case FormulaKind::Atom: {
        std::string out = "(" + a.pred();
        for (const auto& t : a.args()) out += " " + term(t);
        return out + ")";
      }
      case FormulaKind::Or:
        return "(or " + formula(a.sub(0)) + " " + formula(a.sub(1)) + ")";
      case FormulaKind::Not:
        return "(not " + formula(a.sub(0)) + ")";
      case FormulaKind::Exists: {
        scope_.emplace_back(a.var(), SimpleType::iota());
        std::string body = formula(a.sub(0));
        scope_.pop_back();
        return "(exists " + a.var() + " " + body + ")";
      }
    }
    return "?";
  }

  std::string matrix(const Ident& x, const Formula& a) {
    scope_.emplace_back(x, SimpleType::iota());
    std::string out = formula(a);
    scope_.pop_back();
    return out;
  }

  static std::string perm(const std::vector<std::size_t>& p) {
    std::string out = "(";
    for (std::size_t i = 0; i < p.size(); ++i) out += (i ? " " : "") + std::to_string(p[i]);
    return out + ")";
  }

  void proof(const OneSidedProof& p, int depth, std::string& out) {
    std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
    out += pad + "(" + rule_name(p.rule());
    switch (p.rule()) {
      case OneRule::Lem:
      case OneRule::Weak:
      case OneRule::Cut:
        out += " " + formula(p.formula());
        break;
      case OneRule::Or:
        out += " " + std::to_string(p.side()) + " " + formula(p.formula());
        break;
      case OneRule::Ex:
        out += " (witness " + term(p.witness()) + ") (" + p.var() + ") " + matrix(p.var(), p.formula());
        break;
      case OneRule::NegEx:
        out += " (eigen " + p.eigen() + ")";
        if (!p.var().empty()) out += " (" + p.var() + ")";
        break;
      case OneRule::Perm:
        out += " " + perm(p.permutation());
        break;
      default:
        break;
    }
    for (const auto& q : p.premises()) {
      out += "\n";
      proof(q, depth + 1, out);
    }
    out += ")";
  }

  void proof(const TwoSidedProof& p, int depth, std::string& out) {
    std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
    out += pad + "(" + rule_name(p.rule());
    switch (p.rule()) {
      case TwoRule::Id:
      case TwoRule::WeakR:
      case TwoRule::WeakL:
      case TwoRule::Cut:
        out += " " + formula(p.formula());
        break;
      case TwoRule::OrR:
        out += " " + std::to_string(p.side()) + " " + formula(p.formula());
        break;
      case TwoRule::ExR:
        out += " (witness " + term(p.witness()) + ") (" + p.var() + ") " + matrix(p.var(), p.formula());
        break;
      case TwoRule::ExL:
        out += " (eigen " + p.eigen() + ")";
        if (!p.var().empty()) out += " (" + p.var() + ")";
        break;
      case TwoRule::Perm:
        out += " " + perm(p.permutation()) + " " + perm(p.right_permutation());
        break;
      default:
        break;
    }
    for (const auto& q : p.premises()) {
      out += "\n";
      proof(q, depth + 1, out);
    }
    out += ")";
  }

 private:
  std::optional<SimpleType> lookup(const Ident& name) const {
    for (std::size_t i = scope_.size(); i-- > 0;)
      if (scope_[i].first == name) return scope_[i].second;
    return std::nullopt;
  }

  const Signature& sig_;
  std::vector<std::pair<Ident, SimpleType>> scope_;
};

}  // namespace

std::string print_signature(const Signature& sig) {
  std::string out = "(sig";
  if (!sig.constants.empty()) {
    out += " (const";
    for (const auto& c : sig.constants) out += " " + c;
    out += ")";
  }
  for (const auto& [f, n] : sig.functions) out += " (fun " + f + " " + std::to_string(n) + ")";
  for (const auto& [p, n] : sig.predicates) out += " (pred " + p + " " + std::to_string(n) + ")";
  return out + ")";
}

std::string print_formula(const Formula& a, const Signature& sig) { return Printer(sig).formula(a); }
std::string print_term(const Term& t, const Signature& sig) { return Printer(sig).term(t); }
std::string print_proposition(const Proposition& p, const Signature& sig) { return Printer(sig).prop(p); }

std::string print_type(const SimpleType& t) {
  Signature sig;
  return Printer(sig).type(t);
}

std::string print_proof(const OneSidedProof& p, const Signature& sig) {
  std::string out;
  Printer(sig).proof(p, 0, out);
  return out;
}

std::string print_proof(const TwoSidedProof& p, const Signature& sig) {
  std::string out;
  Printer(sig).proof(p, 0, out);
  return out;
}

std::string print_proof_file(const ProofFile& file) {
  std::string out = print_signature(file.signature) + "\n";
  Printer pr(file.signature);
  std::string body;
  if (file.one_sided) {
    pr.proof(*file.one_sided, 1, body);
    out += "(proof1\n" + body + ")\n";
  } else if (file.two_sided) {
    pr.proof(*file.two_sided, 1, body);
    out += "(proof2\n" + body + ")\n";
  }
  return out;
}

}  // namespace hfi
