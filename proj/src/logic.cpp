#include "hfi/logic.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "hfi/detail/alpha.hpp"
#include "hfi/error.hpp"
#include "hfi/kernel.hpp"

namespace hfi {

using detail::FormulaNode;

// ---------------------------------------------------------------------------
// Signature

Signature Signature::standard() {
  Signature s;
  s.constants = {"c", "d"};
  s.functions = {{"f", 1}, {"g", 2}};
  s.predicates = {{"P", 1}, {"Q", 1}, {"R", 2}};
  return s;
}

void Signature::validate() const {
  if (constants.empty()) throw Error("signature declares no constant");
  bool unary = std::any_of(predicates.begin(), predicates.end(), [](const auto& p) { return p.second == 1; });
  if (!unary) throw Error("signature declares no unary predicate");
  std::unordered_set<Ident> seen;
  auto add = [&](const Ident& n) {
    if (!seen.insert(n).second) throw Error("symbol " + n + " declared twice");
  };
  for (const auto& c : constants) add(c);
  for (const auto& [f, n] : functions) {
    add(f);
    if (n < 1) throw Error("function " + f + " must have arity at least 1");
  }
  for (const auto& [p, n] : predicates) {
    add(p);
    if (n < 0) throw Error("predicate " + p + " has negative arity");
  }
}

const Ident& Signature::designated_constant() const {
  if (constants.empty()) throw Error("signature declares no constant");
  return constants.front();
}

bool Signature::is_constant(const Ident& name) const {
  return std::find(constants.begin(), constants.end(), name) != constants.end();
}

std::optional<int> Signature::function_arity(const Ident& name) const {
  for (const auto& [f, n] : functions)
    if (f == name) return n;
  return std::nullopt;
}

std::optional<int> Signature::predicate_arity(const Ident& name) const {
  for (const auto& [p, n] : predicates)
    if (p == name) return n;
  return std::nullopt;
}

namespace {

void check_symbols(const Signature& sig, const Term& t);

void check_symbols(const Signature& sig, const Proposition& p) {
  switch (p.kind()) {
    case PropKind::Atom: {
      auto n = sig.predicate_arity(p.pred());
      if (!n) throw Error("undeclared predicate " + p.pred());
      if (static_cast<std::size_t>(*n) != p.terms().size())
        throw Error("predicate " + p.pred() + " expects " + std::to_string(*n) + " arguments");
      for (const auto& a : p.terms()) check_symbols(sig, a);
      return;
    }
    case PropKind::Eq:
      for (const auto& a : p.terms()) check_symbols(sig, a);
      return;
    default:
      for (const auto& s : p.subs()) check_symbols(sig, s);
  }
}

void check_symbols(const Signature& sig, const Term& t) {
  switch (t.kind()) {
    case TermKind::Const:
      if (!sig.is_constant(t.name())) throw Error("undeclared constant " + t.name());
      return;
    case TermKind::Fun: {
      auto n = sig.function_arity(t.name());
      if (!n) throw Error("undeclared function " + t.name());
      if (static_cast<std::size_t>(*n) != t.children().size())
        throw Error("function " + t.name() + " expects " + std::to_string(*n) + " arguments");
      break;
    }
    case TermKind::Case:
      check_symbols(sig, t.condition());
      break;
    default:
      break;
  }
  for (const auto& k : t.children()) check_symbols(sig, k);
}

}  // namespace

void Signature::check(const Term& t) const {
  check_symbols(*this, t);
  infer_type(t);
}

void Signature::check(const Formula& a) const {
  switch (a.kind()) {
    case FormulaKind::Atom: {
      auto n = predicate_arity(a.pred());
      if (!n) throw Error("undeclared predicate " + a.pred());
      if (static_cast<std::size_t>(*n) != a.args().size())
        throw Error("predicate " + a.pred() + " expects " + std::to_string(*n) + " arguments");
      for (const auto& t : a.args()) {
        check(t);
        SimpleType ty = infer_type(t);
        if (!ty.is_iota()) throw TypeError(a.str(), "ι argument", ty.str());
      }
      return;
    }
    default:
      for (const auto& s : a.subs()) check(s);
  }
}

// ---------------------------------------------------------------------------
// Formula construction

Formula Formula::atom(Ident pred, std::vector<Term> args) {
  auto n = std::make_shared<FormulaNode>();
  n->kind = FormulaKind::Atom;
  n->name = std::move(pred);
  for (const auto& a : args) {
    n->fv = merge_free_vars(n->fv, a.free_vars());
    n->size += a.size();
  }
  n->args = std::move(args);
  return Formula(n);
}

Formula Formula::disj(Formula left, Formula right) {
  auto n = std::make_shared<FormulaNode>();
  n->kind = FormulaKind::Or;
  n->fv = merge_free_vars(left.free_vars(), right.free_vars());
  n->size += left.size() + right.size();
  n->subs = {std::move(left), std::move(right)};
  return Formula(n);
}

Formula Formula::neg(Formula body) {
  auto n = std::make_shared<FormulaNode>();
  n->kind = FormulaKind::Not;
  n->fv = body.free_vars();
  n->size += body.size();
  n->subs = {std::move(body)};
  return Formula(n);
}

Formula Formula::exists(Ident var, Formula body) {
  auto n = std::make_shared<FormulaNode>();
  n->kind = FormulaKind::Exists;
  n->fv = remove_free_var(body.free_vars(), var);
  n->size += body.size();
  n->name = std::move(var);
  n->subs = {std::move(body)};
  return Formula(n);
}

FormulaKind Formula::kind() const { return node_->kind; }
const Ident& Formula::pred() const { return node_->name; }
const std::vector<Term>& Formula::args() const { return node_->args; }
const Ident& Formula::var() const { return node_->name; }
const std::vector<Formula>& Formula::subs() const { return node_->subs; }
const FreeVarSet& Formula::free_vars() const { return node_->fv; }
bool Formula::has_free(const Ident& name) const { return contains_name(node_->fv, name); }
std::size_t Formula::size() const { return node_->size; }

// ---------------------------------------------------------------------------
// Alpha-equality and printing

namespace {

bool alpha_eq(const Formula& a, const Formula& b, detail::AlphaEnv& env) {
  if (a.same(b) && env.shared_ok(a.free_vars())) return true;
  if (a.kind() != b.kind() || a.size() != b.size()) return false;
  switch (a.kind()) {
    case FormulaKind::Atom:
      if (a.pred() != b.pred() || a.args().size() != b.args().size()) return false;
      for (std::size_t i = 0; i < a.args().size(); ++i)
        if (!detail::alpha_eq(a.args()[i], b.args()[i], env)) return false;
      return true;
    case FormulaKind::Or:
      return alpha_eq(a.sub(0), b.sub(0), env) && alpha_eq(a.sub(1), b.sub(1), env);
    case FormulaKind::Not:
      return alpha_eq(a.sub(0), b.sub(0), env);
    case FormulaKind::Exists: {
      env.left.push_back(a.var());
      env.right.push_back(b.var());
      bool r = alpha_eq(a.sub(0), b.sub(0), env);
      env.left.pop_back();
      env.right.pop_back();
      return r;
    }
  }
  return false;
}

void print(std::ostream& os, const Formula& a, bool canonical, std::vector<std::pair<Ident, std::string>>& bound) {
  switch (a.kind()) {
    case FormulaKind::Atom:
      os << a.pred();
      if (!a.args().empty()) {
        os << "(";
        for (std::size_t i = 0; i < a.args().size(); ++i) {
          if (i) os << ", ";
          os << detail::print_term(a.args()[i], canonical, bound);
        }
        os << ")";
      }
      return;
    case FormulaKind::Or:
      os << "(";
      print(os, a.sub(0), canonical, bound);
      os << " ∨ ";
      print(os, a.sub(1), canonical, bound);
      os << ")";
      return;
    case FormulaKind::Not:
      os << "¬";
      print(os, a.sub(0), canonical, bound);
      return;
    case FormulaKind::Exists: {
      std::string shown = a.var();
      if (canonical) {
        shown = "#" + std::to_string(bound.size());
        bound.emplace_back(a.var(), shown);
      }
      os << "∃" << shown << " ";
      print(os, a.sub(0), canonical, bound);
      if (canonical) bound.pop_back();
      return;
    }
  }
}

}  // namespace

bool alpha_equal(const Formula& a, const Formula& b) {
  detail::AlphaEnv env;
  return alpha_eq(a, b, env);
}

std::string Formula::str() const {
  std::ostringstream os;
  std::vector<std::pair<Ident, std::string>> bound;
  print(os, *this, false, bound);
  return os.str();
}

std::string canonical_string(const Formula& a) {
  std::ostringstream os;
  std::vector<std::pair<Ident, std::string>> bound;
  print(os, a, true, bound);
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Formula& a) { return os << a.str(); }

// ---------------------------------------------------------------------------
// Substitution and queries

Formula subst_formula(const Formula& a, const Ident& x, const Term& t) {
  if (!a.has_free(x)) return a;
  switch (a.kind()) {
    case FormulaKind::Atom: {
      std::vector<Term> args;
      args.reserve(a.args().size());
      for (const auto& s : a.args()) args.push_back(substitute(s, x, t));
      return Formula::atom(a.pred(), std::move(args));
    }
    case FormulaKind::Or:
      return Formula::disj(subst_formula(a.sub(0), x, t), subst_formula(a.sub(1), x, t));
    case FormulaKind::Not:
      return Formula::neg(subst_formula(a.sub(0), x, t));
    case FormulaKind::Exists: {
      Ident y = a.var();
      Formula body = a.sub(0);
      if (t.has_free(y)) {
        Ident fresh = fresh_name(y, [&](const Ident& n) {
          return n == x || contains_name(t.free_vars(), n) || contains_name(body.free_vars(), n);
        });
        body = subst_formula(body, y, Term::ivar(fresh));
        y = fresh;
      }
      return Formula::exists(y, subst_formula(body, x, t));
    }
  }
  return a;
}

std::set<Ident> free_individual_vars(const Formula& a) {
  std::set<Ident> out;
  for (const auto& v : a.free_vars())
    if (v.type.is_iota()) out.insert(v.name);
  return out;
}

bool is_quantifier_free(const Formula& a) {
  if (a.is(FormulaKind::Exists)) return false;
  return std::all_of(a.subs().begin(), a.subs().end(), [](const Formula& s) { return is_quantifier_free(s); });
}

Proposition to_proposition(const Formula& a) {
  switch (a.kind()) {
    case FormulaKind::Atom:
      return Proposition::atom(a.pred(), a.args());
    case FormulaKind::Or:
      return Proposition::disj(to_proposition(a.sub(0)), to_proposition(a.sub(1)));
    case FormulaKind::Not:
      return Proposition::neg(to_proposition(a.sub(0)));
    case FormulaKind::Exists:
      break;
  }
  throw Error("formula " + a.str() + " is not quantifier-free");
}

std::string Sequent::str() const {
  std::string out;
  for (std::size_t i = 0; i < formulas.size(); ++i) {
    if (i) out += ", ";
    out += formulas[i].str();
  }
  return out;
}

bool alpha_equal(const Sequent& a, const Sequent& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!alpha_equal(a[i], b[i])) return false;
  return true;
}

Sequent subst_sequent(const Sequent& s, const Ident& x, const Term& t) {
  Sequent out;
  out.formulas.reserve(s.size());
  for (const auto& f : s.formulas) out.formulas.push_back(subst_formula(f, x, t));
  return out;
}

}  // namespace hfi
