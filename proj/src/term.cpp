#include "hfi/term.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "hfi/detail/alpha.hpp"
#include "hfi/error.hpp"

namespace hfi {

using detail::PropNode;
using detail::TermNode;

// ---------------------------------------------------------------------------
// Free-variable sets

namespace {

bool fv_less(const FreeVar& a, const FreeVar& b) {
  if (a.name != b.name) return a.name < b.name;
  return a.type.hash() < b.type.hash();
}

}  // namespace

FreeVarSet merge_free_vars(const FreeVarSet& a, const FreeVarSet& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  FreeVarSet out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (fv_less(a[i], b[j])) {
      out.push_back(a[i++]);
    } else if (fv_less(b[j], a[i])) {
      out.push_back(b[j++]);
    } else {
      out.push_back(a[i++]);
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back(b[j]);
  return out;
}

FreeVarSet remove_free_var(const FreeVarSet& s, const Ident& name) {
  FreeVarSet out;
  out.reserve(s.size());
  for (const auto& v : s)
    if (v.name != name) out.push_back(v);
  return out;
}

bool contains_name(const FreeVarSet& s, const Ident& name) {
  auto it = std::lower_bound(s.begin(), s.end(), name,
                             [](const FreeVar& v, const Ident& n) { return v.name < n; });
  return it != s.end() && it->name == name;
}

// ---------------------------------------------------------------------------
// Term construction

namespace {

std::shared_ptr<TermNode> make_term(TermKind k) {
  auto n = std::make_shared<TermNode>();
  n->kind = k;
  return n;
}

void absorb(TermNode& n, const Term& t) {
  n.fv = merge_free_vars(n.fv, t.free_vars());
  n.size += t.size();
}

}  // namespace

Term Term::epsilon() {
  static const Term e(make_term(TermKind::Epsilon));
  return e;
}

Term Term::constant(Ident name) {
  auto n = make_term(TermKind::Const);
  n->name = std::move(name);
  n->type = SimpleType::iota();
  return Term(std::move(n));
}

Term Term::var(Ident name, SimpleType type) {
  auto n = make_term(TermKind::Var);
  n->fv.push_back(FreeVar{name, type});
  n->name = std::move(name);
  n->type = std::move(type);
  return Term(std::move(n));
}

Term Term::fun(Ident name, std::vector<Term> args) {
  auto n = make_term(TermKind::Fun);
  n->name = std::move(name);
  n->type = SimpleType::iota();
  for (const auto& a : args) absorb(*n, a);
  n->kids = std::move(args);
  return Term(std::move(n));
}

Term Term::pair(Term fst, Term snd) {
  auto n = make_term(TermKind::Pair);
  absorb(*n, fst);
  absorb(*n, snd);
  n->kids = {std::move(fst), std::move(snd)};
  return Term(std::move(n));
}

Term Term::proj(int index, Term arg) {
  if (index != 1 && index != 2) throw Error("projection index must be 1 or 2");
  auto n = make_term(TermKind::Proj);
  n->index = index;
  absorb(*n, arg);
  n->kids = {std::move(arg)};
  return Term(std::move(n));
}

Term Term::abs(Ident var, SimpleType var_type, Term body) {
  auto n = make_term(TermKind::Abs);
  n->fv = remove_free_var(body.free_vars(), var);
  n->size += body.size();
  n->name = std::move(var);
  n->type = std::move(var_type);
  n->kids = {std::move(body)};
  return Term(std::move(n));
}

Term Term::app(Term fun, Term arg) {
  auto n = make_term(TermKind::App);
  absorb(*n, fun);
  absorb(*n, arg);
  n->kids = {std::move(fun), std::move(arg)};
  return Term(std::move(n));
}

Term Term::case_of(Proposition condition, Term then_branch, Term else_branch) {
  auto n = make_term(TermKind::Case);
  n->fv = condition.free_vars();
  n->size += condition.size();
  absorb(*n, then_branch);
  absorb(*n, else_branch);
  n->kids = {std::move(then_branch), std::move(else_branch)};
  n->cond = {std::move(condition)};
  return Term(std::move(n));
}

TermKind Term::kind() const { return node_->kind; }
const Ident& Term::name() const { return node_->name; }
const SimpleType& Term::var_type() const { return node_->type; }
int Term::index() const { return node_->index; }
const std::vector<Term>& Term::children() const { return node_->kids; }

const Proposition& Term::condition() const {
  if (node_->cond.empty()) throw Error("term has no condition");
  return node_->cond.front();
}

const FreeVarSet& Term::free_vars() const { return node_->fv; }
bool Term::has_free(const Ident& name) const { return contains_name(node_->fv, name); }
std::size_t Term::size() const { return node_->size; }

std::uint8_t Term::normal_flag() const { return node_->normal.load(std::memory_order_relaxed); }
void Term::set_normal_flag(std::uint8_t f) const { node_->normal.store(f, std::memory_order_relaxed); }

bool Term::is_first_order() const {
  switch (kind()) {
    case TermKind::Const:
      return true;
    case TermKind::Var:
      return var_type().is_iota();
    case TermKind::Fun:
      return std::all_of(children().begin(), children().end(),
                         [](const Term& t) { return t.is_first_order(); });
    default:
      return false;
  }
}

// ---------------------------------------------------------------------------
// Proposition construction

namespace {

std::shared_ptr<PropNode> make_prop(PropKind k) {
  auto n = std::make_shared<PropNode>();
  n->kind = k;
  return n;
}

}  // namespace

Proposition Proposition::atom(Ident pred, std::vector<Term> args) {
  auto n = make_prop(PropKind::Atom);
  n->pred = std::move(pred);
  for (const auto& a : args) {
    n->fv = merge_free_vars(n->fv, a.free_vars());
    n->size += a.size();
  }
  n->terms = std::move(args);
  return Proposition(std::move(n));
}

Proposition Proposition::disj(Proposition left, Proposition right) {
  auto n = make_prop(PropKind::Or);
  n->fv = merge_free_vars(left.free_vars(), right.free_vars());
  n->size += left.size() + right.size();
  n->subs = {std::move(left), std::move(right)};
  return Proposition(std::move(n));
}

Proposition Proposition::neg(Proposition body) {
  auto n = make_prop(PropKind::Not);
  n->fv = body.free_vars();
  n->size += body.size();
  n->subs = {std::move(body)};
  return Proposition(std::move(n));
}

Proposition Proposition::eq(Term left, Term right) {
  auto n = make_prop(PropKind::Eq);
  n->fv = merge_free_vars(left.free_vars(), right.free_vars());
  n->size += left.size() + right.size();
  n->terms = {std::move(left), std::move(right)};
  return Proposition(std::move(n));
}

PropKind Proposition::kind() const { return node_->kind; }
const Ident& Proposition::pred() const { return node_->pred; }
const std::vector<Term>& Proposition::terms() const { return node_->terms; }
const std::vector<Proposition>& Proposition::subs() const { return node_->subs; }
const FreeVarSet& Proposition::free_vars() const { return node_->fv; }
bool Proposition::has_free(const Ident& name) const { return contains_name(node_->fv, name); }
std::size_t Proposition::size() const { return node_->size; }

Proposition conj(const Proposition& a, const Proposition& b) {
  return Proposition::neg(Proposition::disj(Proposition::neg(a), Proposition::neg(b)));
}

Proposition implies(const Proposition& a, const Proposition& b) {
  return Proposition::disj(Proposition::neg(a), b);
}

Proposition disjunction(const std::vector<Proposition>& parts) {
  if (parts.empty()) throw Error("empty disjunction");
  Proposition acc = parts.back();
  for (std::size_t i = parts.size() - 1; i-- > 0;) acc = Proposition::disj(parts[i], acc);
  return acc;
}

// ---------------------------------------------------------------------------
// Alpha-equivalence

namespace detail {

namespace {
bool alpha_eq_node(const Term& a, const Term& b, AlphaEnv& env);
}

bool alpha_eq(const Term& a, const Term& b, AlphaEnv& env) {
  if (a.same(b) && env.shared_ok(a.free_vars())) return true;
  if (a.kind() != b.kind() || a.size() != b.size()) return false;
  if (a.kind() == TermKind::Var || a.kind() == TermKind::Const || a.kind() == TermKind::Epsilon)
    return alpha_eq_node(a, b, env);
  AlphaEnv::Key key{a.id(), b.id(), {}};
  for (const auto& v : a.free_vars()) key.levels.push_back(AlphaEnv::resolve(env.left, v.name));
  key.levels.push_back(-2);
  for (const auto& v : b.free_vars()) key.levels.push_back(AlphaEnv::resolve(env.right, v.name));
  if (auto it = env.memo.find(key); it != env.memo.end()) return it->second;
  bool r = alpha_eq_node(a, b, env);
  env.memo.emplace(key, r);
  return r;
}

namespace {

bool alpha_eq_node(const Term& a, const Term& b, AlphaEnv& env) {
  switch (a.kind()) {
    case TermKind::Epsilon:
      return true;
    case TermKind::Const:
      return a.name() == b.name();
    case TermKind::Var:
      return a.var_type() == b.var_type() && env.same_variable(a.name(), b.name());
    case TermKind::Fun:
      if (a.name() != b.name() || a.children().size() != b.children().size()) return false;
      for (std::size_t i = 0; i < a.children().size(); ++i)
        if (!alpha_eq(a.child(i), b.child(i), env)) return false;
      return true;
    case TermKind::Proj:
      return a.index() == b.index() && alpha_eq(a.child(0), b.child(0), env);
    case TermKind::Pair:
    case TermKind::App:
      return alpha_eq(a.child(0), b.child(0), env) && alpha_eq(a.child(1), b.child(1), env);
    case TermKind::Abs: {
      if (a.var_type() != b.var_type()) return false;
      env.left.push_back(a.name());
      env.right.push_back(b.name());
      bool r = alpha_eq(a.child(0), b.child(0), env);
      env.left.pop_back();
      env.right.pop_back();
      return r;
    }
    case TermKind::Case:
      return alpha_eq(a.condition(), b.condition(), env) && alpha_eq(a.child(0), b.child(0), env) &&
             alpha_eq(a.child(1), b.child(1), env);
  }
  return false;
}

}  // namespace

bool alpha_eq(const Proposition& a, const Proposition& b, AlphaEnv& env) {
  if (a.same(b) && env.shared_ok(a.free_vars())) return true;
  if (a.kind() != b.kind() || a.size() != b.size()) return false;
  switch (a.kind()) {
    case PropKind::Atom:
    case PropKind::Eq:
      if (a.pred() != b.pred() || a.terms().size() != b.terms().size()) return false;
      for (std::size_t i = 0; i < a.terms().size(); ++i)
        if (!alpha_eq(a.terms()[i], b.terms()[i], env)) return false;
      return true;
    case PropKind::Or:
      return alpha_eq(a.sub(0), b.sub(0), env) && alpha_eq(a.sub(1), b.sub(1), env);
    case PropKind::Not:
      return alpha_eq(a.sub(0), b.sub(0), env);
  }
  return false;
}

}  // namespace detail

bool alpha_equal(const Term& a, const Term& b) {
  detail::AlphaEnv env;
  return detail::alpha_eq(a, b, env);
}

bool alpha_equal(const Proposition& a, const Proposition& b) {
  detail::AlphaEnv env;
  return detail::alpha_eq(a, b, env);
}

// ---------------------------------------------------------------------------
// Printing

namespace {

struct Printer {
  std::ostream& os;
  bool canonical;
  std::vector<std::pair<Ident, std::string>> bound;  // canonical mode only

  std::string var_name(const Ident& n) const {
    if (!canonical) return n;
    for (std::size_t i = bound.size(); i-- > 0;)
      if (bound[i].first == n) return bound[i].second;
    return n;
  }

  void term(const Term& t) {
    switch (t.kind()) {
      case TermKind::Epsilon:
        os << "ε";
        return;
      case TermKind::Const:
        os << t.name();
        return;
      case TermKind::Var:
        os << var_name(t.name());
        return;
      case TermKind::Fun:
        os << t.name() << "(";
        for (std::size_t i = 0; i < t.children().size(); ++i) {
          if (i) os << ", ";
          term(t.child(i));
        }
        os << ")";
        return;
      case TermKind::Pair:
        os << "⟨";
        term(t.child(0));
        os << ",";
        term(t.child(1));
        os << "⟩";
        return;
      case TermKind::Proj:
        os << "π" << t.index() << " ";
        operand(t.child(0));
        return;
      case TermKind::Abs: {
        std::string shown = t.name();
        if (canonical) {
          shown = "#" + std::to_string(bound.size());
          bound.emplace_back(t.name(), shown);
        }
        os << "(λ" << shown << ":" << t.var_type().str() << ". ";
        term(t.child(0));
        os << ")";
        if (canonical) bound.pop_back();
        return;
      }
      case TermKind::App:
        os << "(";
        operand(t.child(0));
        os << " ";
        operand(t.child(1));
        os << ")";
        return;
      case TermKind::Case:
        os << "case[";
        prop(t.condition());
        os << "]{";
        term(t.child(0));
        os << "}{";
        term(t.child(1));
        os << "}";
        return;
    }
  }

  void operand(const Term& t) {
    if (t.is(TermKind::Proj)) {
      os << "(";
      term(t);
      os << ")";
    } else {
      term(t);
    }
  }

  void prop(const Proposition& p) {
    switch (p.kind()) {
      case PropKind::Atom:
        os << p.pred();
        if (!p.terms().empty()) {
          os << "(";
          for (std::size_t i = 0; i < p.terms().size(); ++i) {
            if (i) os << ", ";
            term(p.terms()[i]);
          }
          os << ")";
        }
        return;
      case PropKind::Eq:
        os << "(";
        term(p.terms()[0]);
        os << " ≡ ";
        term(p.terms()[1]);
        os << ")";
        return;
      case PropKind::Or:
        os << "(";
        prop(p.sub(0));
        os << " ∨ ";
        prop(p.sub(1));
        os << ")";
        return;
      case PropKind::Not: {
        const Proposition& b = p.sub(0);
        if (!canonical && b.is(PropKind::Or) && b.sub(0).is(PropKind::Not) && b.sub(1).is(PropKind::Not)) {
          os << "(";
          prop(b.sub(0).sub(0));
          os << " ∧ ";
          prop(b.sub(1).sub(0));
          os << ")";
          return;
        }
        os << "¬";
        prop(b);
        return;
      }
    }
  }
};

}  // namespace

std::string Term::str() const {
  std::ostringstream os;
  Printer{os, false, {}}.term(*this);
  return os.str();
}

std::string Proposition::str() const {
  std::ostringstream os;
  Printer{os, false, {}}.prop(*this);
  return os.str();
}

std::string canonical_string(const Term& t) {
  std::ostringstream os;
  Printer{os, true, {}}.term(t);
  return os.str();
}

std::string canonical_string(const Proposition& p) {
  std::ostringstream os;
  Printer{os, true, {}}.prop(p);
  return os.str();
}

namespace detail {

std::string print_term(const Term& t, bool canonical, std::vector<std::pair<Ident, std::string>>& bound) {
  std::ostringstream os;
  Printer pr{os, canonical, std::move(bound)};
  pr.term(t);
  bound = std::move(pr.bound);
  return os.str();
}

}  // namespace detail

std::ostream& operator<<(std::ostream& os, const Term& t) { return os << t.str(); }
std::ostream& operator<<(std::ostream& os, const Proposition& p) { return os << p.str(); }

}  // namespace hfi
