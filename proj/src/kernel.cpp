#include "hfi/kernel.hpp"

#include <unordered_map>

#include "hfi/error.hpp"

namespace hfi {

TypingContext TypingContext::bind(const Ident& name, const SimpleType& type) const {
  TypingContext out = *this;
  out.bindings_.emplace_back(name, type);
  return out;
}

std::optional<SimpleType> TypingContext::lookup(const Ident& name) const {
  for (std::size_t i = bindings_.size(); i-- > 0;)
    if (bindings_[i].first == name) return bindings_[i].second;
  return std::nullopt;
}

namespace {

std::string where(const Term& t) {
  std::string s = t.str();
  if (s.size() > 80) s = s.substr(0, 77) + "...";
  return s;
}

std::string where(const Proposition& p) {
  std::string s = p.str();
  if (s.size() > 80) s = s.substr(0, 77) + "...";
  return s;
}

// Typing is context-free once variables carry annotations, so results are
// memoized per node and shared subterms are checked once.
class Typer {
 public:
  SimpleType type(const Term& t) {
    auto it = memo_.find(t.id());
    if (it != memo_.end()) return it->second;
    SimpleType ty = compute(t);
    memo_.emplace(t.id(), ty);
    return ty;
  }

  void prop(const Proposition& p) {
    if (!seen_props_.emplace(p.id(), true).second) return;
    switch (p.kind()) {
      case PropKind::Atom:
        for (const auto& a : p.terms()) {
          SimpleType ty = type(a);
          if (!ty.is_iota()) throw TypeError(where(p), "ι argument", ty.str());
        }
        return;
      case PropKind::Eq: {
        SimpleType l = type(p.terms()[0]);
        SimpleType r = type(p.terms()[1]);
        if (l != r) throw TypeError(where(p), l.str(), r.str());
        return;
      }
      case PropKind::Or:
        prop(p.sub(0));
        prop(p.sub(1));
        return;
      case PropKind::Not:
        prop(p.sub(0));
        return;
    }
  }

 private:
  SimpleType compute(const Term& t) {
    switch (t.kind()) {
      case TermKind::Epsilon:
        return SimpleType::null();
      case TermKind::Const:
        return SimpleType::iota();
      case TermKind::Var:
        return t.var_type();
      case TermKind::Fun:
        for (const auto& a : t.children()) {
          SimpleType ty = type(a);
          if (!ty.is_iota()) throw TypeError(where(t), "ι argument", ty.str());
        }
        return SimpleType::iota();
      case TermKind::Pair:
        return SimpleType::product(type(t.child(0)), type(t.child(1)));
      case TermKind::Proj: {
        SimpleType ty = type(t.child(0));
        if (!ty.is_product()) throw TypeError(where(t), "product", ty.str());
        return t.index() == 1 ? ty.left() : ty.right();
      }
      case TermKind::Abs: {
        for (const auto& v : t.child(0).free_vars())
          if (v.name == t.name() && v.type != t.var_type())
            throw TypeError(where(t), "occurrence of " + t.name() + " at " + t.var_type().str(), v.type.str());
        return SimpleType::arrow(t.var_type(), type(t.child(0)));
      }
      case TermKind::App: {
        SimpleType f = type(t.child(0));
        SimpleType a = type(t.child(1));
        if (!f.is_arrow()) throw TypeError(where(t), "function", f.str());
        if (f.domain() != a) throw TypeError(where(t), f.domain().str(), a.str());
        return f.codomain();
      }
      case TermKind::Case: {
        prop(t.condition());
        SimpleType l = type(t.child(0));
        SimpleType r = type(t.child(1));
        if (l != r) throw TypeError(where(t), l.str(), r.str());
        return l;
      }
    }
    throw Error("unknown term kind");
  }

  std::unordered_map<const void*, SimpleType> memo_;
  std::unordered_map<const void*, bool> seen_props_;
};

void check_free(const TypingContext& ctx, const FreeVarSet& fv) {
  for (const auto& v : fv) {
    auto bound = ctx.lookup(v.name);
    if (!bound) throw UnboundVariable(v.name);
    if (*bound != v.type) throw TypeError("variable " + v.name, bound->str(), v.type.str());
  }
}

}  // namespace

SimpleType typecheck(const TypingContext& ctx, const Term& t) {
  Typer typer;
  SimpleType ty = typer.type(t);
  check_free(ctx, t.free_vars());
  return ty;
}

void check_proposition(const TypingContext& ctx, const Proposition& p) {
  Typer typer;
  typer.prop(p);
  check_free(ctx, p.free_vars());
}

SimpleType infer_type(const Term& t) {
  Typer typer;
  return typer.type(t);
}

// ---------------------------------------------------------------------------
// Substitution

namespace {

Term rebuild(const Term& t, std::vector<Term> kids) {
  switch (t.kind()) {
    case TermKind::Fun:
      return Term::fun(t.name(), std::move(kids));
    case TermKind::Pair:
      return Term::pair(kids[0], kids[1]);
    case TermKind::Proj:
      return Term::proj(t.index(), kids[0]);
    case TermKind::Abs:
      return Term::abs(t.name(), t.var_type(), kids[0]);
    case TermKind::App:
      return Term::app(kids[0], kids[1]);
    case TermKind::Case:
      return Term::case_of(t.condition(), kids[0], kids[1]);
    default:
      return t;
  }
}

Term with_child(const Term& t, std::size_t i, const Term& c) {
  std::vector<Term> kids = t.children();
  kids[i] = c;
  return rebuild(t, std::move(kids));
}

Proposition with_terms(const Proposition& p, std::vector<Term> terms) {
  if (p.is(PropKind::Eq)) return Proposition::eq(terms[0], terms[1]);
  return Proposition::atom(p.pred(), std::move(terms));
}

}  // namespace

namespace {

// One substitution [s/x] over a shared DAG. Each distinct node is rewritten
// once; the memo also holds the source node so its address stays unique.
struct Subst {
  const Ident& x;
  const Term& s;
  std::unordered_map<const void*, std::pair<Term, Term>> terms;
  std::unordered_map<const void*, std::pair<Proposition, Proposition>> props;

  Term term(const Term& t) {
    if (!t.has_free(x)) return t;
    if (t.kind() == TermKind::Var) return s;
    if (auto it = terms.find(t.id()); it != terms.end()) return it->second.second;
    Term out = term_node(t);
    terms.emplace(t.id(), std::make_pair(t, out));
    return out;
  }

  Term term_node(const Term& t) {
    switch (t.kind()) {
      case TermKind::Abs: {
        const Term& body = t.child(0);
        Ident y = t.name();
        Term b = body;
        if (s.has_free(y)) {
          Ident fresh = fresh_name(y, [&](const Ident& n) {
            return n == x || contains_name(s.free_vars(), n) || contains_name(body.free_vars(), n);
          });
          b = substitute(body, y, Term::var(fresh, t.var_type()));
          y = fresh;
        }
        return Term::abs(y, t.var_type(), term(b));
      }
      case TermKind::Case:
        return Term::case_of(prop(t.condition()), term(t.child(0)), term(t.child(1)));
      default: {
        std::vector<Term> kids;
        kids.reserve(t.children().size());
        for (const auto& k : t.children()) kids.push_back(term(k));
        return rebuild(t, std::move(kids));
      }
    }
  }

  Proposition prop(const Proposition& p) {
    if (!p.has_free(x)) return p;
    if (auto it = props.find(p.id()); it != props.end()) return it->second.second;
    Proposition out = prop_node(p);
    props.emplace(p.id(), std::make_pair(p, out));
    return out;
  }

  Proposition prop_node(const Proposition& p) {
    switch (p.kind()) {
      case PropKind::Atom:
      case PropKind::Eq: {
        std::vector<Term> ts;
        for (const auto& a : p.terms()) ts.push_back(term(a));
        return with_terms(p, std::move(ts));
      }
      case PropKind::Or:
        return Proposition::disj(prop(p.sub(0)), prop(p.sub(1)));
      case PropKind::Not:
        return Proposition::neg(prop(p.sub(0)));
    }
    return p;
  }
};

}  // namespace

Term substitute(const Term& t, const Ident& x, const Term& s) {
  if (!t.has_free(x)) return t;
  Subst sub{x, s, {}, {}};
  return sub.term(t);
}

Proposition substitute(const Proposition& p, const Ident& x, const Term& s) {
  if (!p.has_free(x)) return p;
  Subst sub{x, s, {}, {}};
  return sub.prop(p);
}

// ---------------------------------------------------------------------------
// Reduction
//
// Rules, tried in this order at a node:
//   (λx.b) u → b[u/x]
//   (case{f}{g}) u → case{f u}{g u}
//   f (case{u}{v}) → case{f u}{f v}
//   π_i⟨u1,u2⟩ → u_i
//   π_i(case{u}{v}) → case{π_i u}{π_i v}
//   g(…, case{u}{v}, …) → case{g(…u…)}{g(…v…)}   (first Case argument)

namespace {

int first_case_arg(const Term& t) {
  for (std::size_t i = 0; i < t.children().size(); ++i)
    if (t.child(i).is(TermKind::Case)) return static_cast<int>(i);
  return -1;
}

Term distribute_fun(const Term& t, int j, const Term& c) {
  std::vector<Term> l = t.children();
  std::vector<Term> r = t.children();
  l[j] = c.child(0);
  r[j] = c.child(1);
  return Term::case_of(c.condition(), Term::fun(t.name(), std::move(l)), Term::fun(t.name(), std::move(r)));
}

std::optional<Term> contract_root(const Term& t) {
  switch (t.kind()) {
    case TermKind::App: {
      const Term& f = t.child(0);
      const Term& a = t.child(1);
      if (f.is(TermKind::Abs)) return substitute(f.child(0), f.name(), a);
      if (f.is(TermKind::Case))
        return Term::case_of(f.condition(), Term::app(f.child(0), a), Term::app(f.child(1), a));
      if (a.is(TermKind::Case))
        return Term::case_of(a.condition(), Term::app(f, a.child(0)), Term::app(f, a.child(1)));
      return std::nullopt;
    }
    case TermKind::Proj: {
      const Term& s = t.child(0);
      if (s.is(TermKind::Pair)) return s.child(t.index() - 1);
      if (s.is(TermKind::Case))
        return Term::case_of(s.condition(), Term::proj(t.index(), s.child(0)), Term::proj(t.index(), s.child(1)));
      return std::nullopt;
    }
    case TermKind::Fun: {
      int j = first_case_arg(t);
      if (j < 0) return std::nullopt;
      return distribute_fun(t, j, t.child(j));
    }
    default:
      return std::nullopt;
  }
}

unsigned bit(TermKind k) { return 1u << static_cast<unsigned>(k); }

// Reduces in leftmost-outermost order. reduce(t, stop) performs exactly the
// steps that whole-term leftmost-outermost reduction would perform inside t,
// returning as soon as t's head kind is in `stop` (the enclosing node has
// become a redex) or t is normal.
class Normalizer {
 public:
  explicit Normalizer(std::size_t fuel) : fuel_(fuel) {}

  std::size_t steps() const { return steps_; }

  Term full(const Term& t) {
    if (t.normal_flag() == 1) return t;
    auto it = memo_.find(t.id());
    if (it != memo_.end()) return it->second.nf;
    Term r = reduce(t, 0);
    r.set_normal_flag(1);
    memo_.emplace(t.id(), Entry{t, r});
    return r;
  }

  Term deep(const Term& t) {
    Term n = full(t);
    return deep_conditions(n);
  }

  Proposition deep(const Proposition& p) {
    auto it = prop_memo_.find(p.id());
    if (it != prop_memo_.end()) return it->second.second;
    Proposition out = p;
    switch (p.kind()) {
      case PropKind::Atom:
      case PropKind::Eq: {
        std::vector<Term> terms;
        bool changed = false;
        for (const auto& a : p.terms()) {
          terms.push_back(deep(a));
          changed |= !terms.back().same(a);
        }
        if (changed) out = with_terms(p, std::move(terms));
        break;
      }
      case PropKind::Or: {
        Proposition l = deep(p.sub(0));
        Proposition r = deep(p.sub(1));
        if (!l.same(p.sub(0)) || !r.same(p.sub(1))) out = Proposition::disj(l, r);
        break;
      }
      case PropKind::Not: {
        Proposition b = deep(p.sub(0));
        if (!b.same(p.sub(0))) out = Proposition::neg(b);
        break;
      }
    }
    prop_memo_.emplace(p.id(), std::make_pair(p, out));
    return out;
  }

 private:
  struct Entry {
    Term keep;
    Term nf;
  };

  void tick(std::size_t n = 1) {
    steps_ += n;
    if (steps_ > fuel_) throw StepBudgetExceeded(fuel_);
  }

  // Rewrites conditions of Case nodes inside an already normal term.
  Term deep_conditions(const Term& t) {
    auto it = cond_memo_.find(t.id());
    if (it != cond_memo_.end()) return it->second.second;
    Term out = t;
    if (t.is(TermKind::Case)) {
      Proposition c = deep(t.condition());
      Term a = deep_conditions(t.child(0));
      Term b = deep_conditions(t.child(1));
      if (!c.same(t.condition()) || !a.same(t.child(0)) || !b.same(t.child(1))) out = Term::case_of(c, a, b);
    } else if (!t.children().empty()) {
      std::vector<Term> kids;
      bool changed = false;
      for (const auto& k : t.children()) {
        kids.push_back(deep_conditions(k));
        changed |= !kids.back().same(k);
      }
      if (changed) out = rebuild(t, std::move(kids));
    }
    if (!out.same(t)) out.set_normal_flag(1);
    cond_memo_.emplace(t.id(), std::make_pair(t, out));
    return out;
  }

  Term finish(const Term& original, std::vector<Term> kids) {
    bool changed = false;
    for (std::size_t i = 0; i < kids.size(); ++i) changed |= !kids[i].same(original.child(i));
    Term out = changed ? rebuild(original, std::move(kids)) : original;
    out.set_normal_flag(1);
    return out;
  }

  Term reduce(Term t, unsigned stop) {
    for (;;) {
      if (stop & bit(t.kind())) return t;
      if (t.normal_flag() == 1) return t;
      switch (t.kind()) {
        case TermKind::Epsilon:
        case TermKind::Const:
        case TermKind::Var:
          t.set_normal_flag(1);
          return t;
        case TermKind::Pair:
        case TermKind::Abs:
        case TermKind::Case: {
          std::vector<Term> kids;
          for (const auto& k : t.children()) kids.push_back(full(k));
          return finish(t, std::move(kids));
        }
        case TermKind::App: {
          if (auto r = contract_root(t)) {
            tick();
            t = *r;
            continue;
          }
          Term f = reduce(t.child(0), bit(TermKind::Abs) | bit(TermKind::Case));
          if (f.is(TermKind::Abs) || f.is(TermKind::Case)) {
            t = Term::app(f, t.child(1));
            continue;
          }
          Term a = reduce(t.child(1), bit(TermKind::Case));
          if (a.is(TermKind::Case)) {
            t = Term::app(f, a);
            continue;
          }
          return finish(t, {f, a});
        }
        case TermKind::Proj: {
          if (auto r = contract_root(t)) {
            tick();
            t = *r;
            continue;
          }
          Term s = reduce(t.child(0), bit(TermKind::Pair) | bit(TermKind::Case));
          if (s.is(TermKind::Pair) || s.is(TermKind::Case)) {
            t = Term::proj(t.index(), s);
            continue;
          }
          return finish(t, {s});
        }
        case TermKind::Fun: {
          if (auto r = contract_root(t)) {
            tick();
            t = *r;
            continue;
          }
          std::vector<Term> kids = t.children();
          bool redex = false;
          for (std::size_t i = 0; i < kids.size(); ++i) {
            kids[i] = reduce(kids[i], bit(TermKind::Case));
            if (kids[i].is(TermKind::Case)) {
              redex = true;
              break;
            }
          }
          if (redex) {
            t = Term::fun(t.name(), std::move(kids));
            continue;
          }
          return finish(t, std::move(kids));
        }
      }
    }
  }

  std::size_t fuel_;
  std::size_t steps_ = 0;
  std::unordered_map<const void*, Entry> memo_;
  std::unordered_map<const void*, std::pair<Term, Term>> cond_memo_;
  std::unordered_map<const void*, std::pair<Proposition, Proposition>> prop_memo_;
};

}  // namespace

std::optional<Term> step(const Term& t) {
  if (t.normal_flag() == 1) return std::nullopt;
  if (auto r = contract_root(t)) return r;
  // Case conditions are not reduction positions; children() excludes them.
  for (std::size_t i = 0; i < t.children().size(); ++i) {
    if (auto r = step(t.child(i))) return with_child(t, i, *r);
  }
  t.set_normal_flag(1);
  return std::nullopt;
}

bool is_normal(const Term& t) { return !step(t).has_value(); }

Normalized normalize_counted(const Term& t, std::size_t fuel) {
  Normalizer n(fuel);
  Term r = n.full(t);
  return {r, n.steps()};
}

Term normalize(const Term& t, std::size_t fuel) { return normalize_counted(t, fuel).term; }

Normalized normalize_deep(const Term& t, std::size_t fuel) {
  Normalizer n(fuel);
  Term r = n.deep(t);
  return {r, n.steps()};
}

std::pair<Proposition, std::size_t> normalize_deep(const Proposition& p, std::size_t fuel) {
  Normalizer n(fuel);
  Proposition r = n.deep(p);
  return {r, n.steps()};
}

bool convertible(const Term& u, const Term& v, std::size_t fuel) {
  if (u.same(v)) return true;
  return alpha_equal(normalize(u, fuel), normalize(v, fuel));
}

Term inhabitant(const SimpleType& type, const Ident& base_constant) {
  switch (type.kind()) {
    case SimpleType::Kind::Null:
      return Term::epsilon();
    case SimpleType::Kind::Iota:
      return Term::constant(base_constant);
    case SimpleType::Kind::Product:
      return Term::pair(inhabitant(type.left(), base_constant), inhabitant(type.right(), base_constant));
    case SimpleType::Kind::Arrow:
      return Term::abs("z", type.domain(), inhabitant(type.codomain(), base_constant));
  }
  return Term::epsilon();
}

}  // namespace hfi
