#include "hfi/generators.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "hfi/error.hpp"
#include "hfi/kernel.hpp"

namespace hfi::gen {

namespace {

int pick(Rng& rng, int n) { return static_cast<int>(std::uniform_int_distribution<int>(0, n - 1)(rng)); }
bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

template <typename T>
const T& choose(Rng& rng, const std::vector<T>& v) {
  return v[static_cast<std::size_t>(pick(rng, static_cast<int>(v.size())))];
}

const SimpleType kIota = SimpleType::iota();
const SimpleType kNull = SimpleType::null();

// Least height of a closed term of type u built from introduction forms.
std::size_t min_height(const SimpleType& u) {
  if (u.is_product()) return 1 + std::max(min_height(u.left()), min_height(u.right()));
  if (u.is_arrow()) return 1 + min_height(u.codomain());
  return 1;
}

using Ctx = std::vector<std::pair<Ident, SimpleType>>;

// Innermost bindings only; shadowed entries are not usable.
std::vector<std::pair<Ident, SimpleType>> visible(const Ctx& ctx) {
  std::vector<std::pair<Ident, SimpleType>> out;
  std::set<Ident> seen;
  for (std::size_t i = ctx.size(); i-- > 0;)
    if (seen.insert(ctx[i].first).second) out.push_back(ctx[i]);
  return out;
}

std::vector<Ident> vars_of_type(const Ctx& ctx, const SimpleType& u) {
  std::vector<Ident> out;
  for (const auto& [n, t] : visible(ctx))
    if (t == u) out.push_back(n);
  return out;
}

const std::vector<Ident> kBinders = {"x", "y", "z"};

class TermGen {
 public:
  explicit TermGen(Rng& rng) : rng_(rng) {}

  Term term(const SimpleType& u, std::size_t d) {
    d = std::max(d, min_height(u));
    enum Opt { Var, Intro, App, Proj, Case };
    std::vector<Opt> opts;
    std::vector<Ident> vs = vars_of_type(ctx_, u);
    if (!vs.empty()) opts.insert(opts.end(), 2, Var);
    opts.insert(opts.end(), 2, Intro);
    if (d >= 2 + min_height(u)) opts.insert(opts.end(), 3, App);
    if (d >= 2 + min_height(u)) opts.insert(opts.end(), 2, Proj);
    if (d >= 1 + min_height(u)) opts.push_back(Case);
    switch (choose(rng_, opts)) {
      case Var:
        return Term::var(choose(rng_, vs), u);
      case Intro:
        return intro(u, d);
      case App: {
        SimpleType w = small_type(d - 2);
        SimpleType fun = SimpleType::arrow(w, u);
        Term f = coin(rng_, 0.7) ? abs_of(fun, d - 1) : term(fun, d - 1);
        return Term::app(f, term(w, d - 1));
      }
      case Proj: {
        SimpleType w = small_type(d - 2);
        bool first = coin(rng_);
        SimpleType prod = first ? SimpleType::product(u, w) : SimpleType::product(w, u);
        return Term::proj(first ? 1 : 2, term(prod, d - 1));
      }
      case Case:
        return Term::case_of(condition(d - 1), term(u, d - 1), term(u, d - 1));
    }
    return intro(u, d);
  }

 private:
  SimpleType small_type(std::size_t budget) {
    // Types whose minimal inhabitants fit in the remaining height.
    for (;;) {
      SimpleType t = random_type(rng_, 2);
      if (min_height(t) <= budget) return t;
    }
  }

  Term intro(const SimpleType& u, std::size_t d) {
    if (u.is_null()) return Term::epsilon();
    if (u.is_iota()) {
      if (d >= 2 && coin(rng_, 0.4)) {
        if (coin(rng_)) return Term::fun("f", {term(kIota, d - 1)});
        return Term::fun("g", {term(kIota, d - 1), term(kIota, d - 1)});
      }
      return Term::constant(coin(rng_) ? "c" : "d");
    }
    if (u.is_product()) return Term::pair(term(u.left(), d - 1), term(u.right(), d - 1));
    return abs_of(u, d);
  }

  Term abs_of(const SimpleType& u, std::size_t d) {
    const Ident& x = choose(rng_, kBinders);
    ctx_.emplace_back(x, u.domain());
    Term body = term(u.codomain(), d - 1);
    ctx_.pop_back();
    return Term::abs(x, u.domain(), body);
  }

  Proposition condition(std::size_t d) {
    static const std::vector<Ident> preds = {"P", "Q"};
    Proposition a = Proposition::atom(choose(rng_, preds), {term(kIota, std::min<std::size_t>(d, 3))});
    return coin(rng_, 0.3) ? Proposition::neg(a) : a;
  }

  Rng& rng_;
  Ctx ctx_;
};

}  // namespace

const Signature& signature() {
  static const Signature sig = Signature::standard();
  return sig;
}

std::size_t term_depth(const Term& t) {
  std::size_t d = 0;
  for (const auto& c : t.children()) d = std::max(d, term_depth(c));
  return d + 1;
}

SimpleType random_type(Rng& rng, int depth) {
  if (depth <= 0 || coin(rng, 0.45)) return coin(rng) ? kIota : kNull;
  SimpleType l = random_type(rng, depth - 1);
  SimpleType r = random_type(rng, depth - 1);
  return coin(rng) ? SimpleType::product(l, r) : SimpleType::arrow(l, r);
}

std::size_t enumerate_types(int max_constructors, const std::function<void(const SimpleType&)>& visit) {
  std::size_t count = 0;
  std::function<void(int, const std::function<void(const SimpleType&)>&)> exact =
      [&](int k, const std::function<void(const SimpleType&)>& cb) {
        if (k == 0) {
          cb(kIota);
          cb(kNull);
          return;
        }
        for (int i = 0; i < k; ++i)
          exact(i, [&](const SimpleType& l) {
            exact(k - 1 - i, [&](const SimpleType& r) {
              cb(SimpleType::product(l, r));
              cb(SimpleType::arrow(l, r));
            });
          });
      };
  for (int k = 0; k <= max_constructors; ++k)
    exact(k, [&](const SimpleType& t) {
      ++count;
      visit(t);
    });
  return count;
}

Term random_closed_term(Rng& rng, int max_depth) {
  TermGen g(rng);
  SimpleType u;
  do {
    u = random_type(rng, 2);
  } while (min_height(u) + 2 > static_cast<std::size_t>(max_depth));
  std::size_t d = static_cast<std::size_t>(std::uniform_int_distribution<int>(3, max_depth)(rng));
  return g.term(u, d);
}

// ---------------------------------------------------------------------------
// Counter-evidence style inhabitants

namespace {

class InhabitantGen {
 public:
  InhabitantGen(Rng& rng, Ident free_iota) : rng_(rng), free_(std::move(free_iota)) {}

  Term gen(const SimpleType& u, int d) {
    std::vector<Term> uses;
    for (const auto& [x, s] : visible(ctx_)) use(Term::var(x, s), u, d, uses);
    if (!uses.empty() && coin(rng_, 0.5)) return choose(rng_, uses);
    if (u.is_iota()) {
      int k = pick(rng_, d > 0 ? 5 : 3);
      if (k == 0 && !free_.empty()) return Term::ivar(free_);
      if (k == 3) return Term::fun("f", {gen(u, d - 1)});
      if (k == 4) return Term::case_of(cond(d - 1), gen(u, d - 1), gen(u, d - 1));
      return Term::constant(coin(rng_) ? "c" : "d");
    }
    if (u.is_null()) {
      if (d > 0 && coin(rng_, 0.2)) return Term::case_of(cond(d - 1), gen(u, d - 1), gen(u, d - 1));
      return Term::epsilon();
    }
    if (u.is_product()) return Term::pair(gen(u.left(), d - 1), gen(u.right(), d - 1));
    const Ident& z = choose(rng_, kBinders);
    ctx_.emplace_back(z, u.domain());
    Term body = gen(u.codomain(), d - 1);
    ctx_.pop_back();
    return Term::abs(z, u.domain(), body);
  }

 private:
  // Elimination paths from a variable to the target type.
  void use(const Term& head, const SimpleType& target, int d, std::vector<Term>& out) {
    SimpleType s = infer_type(head);
    if (s == target) out.push_back(head);
    if (d <= 0) return;
    if (s.is_product()) {
      use(Term::proj(1, head), target, d - 1, out);
      use(Term::proj(2, head), target, d - 1, out);
    } else if (s.is_arrow()) {
      use(Term::app(head, gen(s.domain(), d - 1)), target, d - 1, out);
    }
  }

  Proposition cond(int d) {
    return Proposition::atom(coin(rng_) ? "P" : "Q", {gen(kIota, std::min(d, 1))});
  }

  Rng& rng_;
  Ident free_;
  Ctx ctx_;
};

}  // namespace

Term random_inhabitant(Rng& rng, const SimpleType& type, int depth, const Ident& free_iota) {
  return InhabitantGen(rng, free_iota).gen(type, depth);
}

// ---------------------------------------------------------------------------
// Formulas

Term random_fo_term(Rng& rng, int depth, const std::vector<Ident>& vars) {
  if (depth <= 1 || coin(rng, 0.55)) {
    if (!vars.empty() && coin(rng, 0.5)) return Term::ivar(choose(rng, vars));
    return Term::constant(coin(rng) ? "c" : "d");
  }
  if (coin(rng, 0.75)) return Term::fun("f", {random_fo_term(rng, depth - 1, vars)});
  return Term::fun("g", {random_fo_term(rng, depth - 1, vars), random_fo_term(rng, depth - 1, vars)});
}

namespace {

// An ι-term that is first-order or, sometimes, an L⁺ detour around one.
Term atom_arg(Rng& rng, const std::vector<Ident>& vars, bool l_plus) {
  Term t = random_fo_term(rng, 2, vars);
  if (!l_plus || !coin(rng, 0.15)) return t;
  switch (pick(rng, 3)) {
    case 0: return Term::proj(1, Term::pair(t, Term::epsilon()));
    case 1: return Term::app(Term::abs("y", kIota, Term::fun("f", {Term::ivar("y")})), t);
    default: return Term::case_of(Proposition::atom("P", {Term::constant("c")}), t, Term::constant("d"));
  }
}

Formula random_atom(Rng& rng, const std::vector<Ident>& vars, bool l_plus) {
  switch (pick(rng, 3)) {
    case 0: return Formula::atom("P", {atom_arg(rng, vars, l_plus)});
    case 1: return Formula::atom("Q", {atom_arg(rng, vars, l_plus)});
    default: return Formula::atom("R", {atom_arg(rng, vars, l_plus), atom_arg(rng, vars, l_plus)});
  }
}

Formula formula_impl(Rng& rng, int depth, std::vector<Ident> vars, bool quantifiers, bool l_plus) {
  if (depth <= 0 || coin(rng, 0.3)) return random_atom(rng, vars, l_plus);
  int k = pick(rng, quantifiers ? 4 : 3);
  if (k == 0) return Formula::neg(formula_impl(rng, depth - 1, vars, quantifiers, l_plus));
  if (k == 1 || k == 2)
    return Formula::disj(formula_impl(rng, depth - 1, vars, quantifiers, l_plus),
                         formula_impl(rng, depth - 1, vars, quantifiers, l_plus));
  Ident x = coin(rng) ? "x" : "y";
  vars.push_back(x);
  Formula body = formula_impl(rng, depth - 1, vars, quantifiers, l_plus);
  return Formula::exists(x, body);
}

}  // namespace

Formula random_formula(Rng& rng, int depth, const std::vector<Ident>& vars, bool quantifiers) {
  return formula_impl(rng, depth, vars, quantifiers, false);
}

// ---------------------------------------------------------------------------
// One-sided proof construction

namespace {

struct Built {
  OneSidedProof proof;
  std::vector<Formula> fs;
};

// new[j] = old[order[j]] (0-based); identity permutations are skipped.
Built permute(const Built& b, const std::vector<std::size_t>& order) {
  bool identity = true;
  for (std::size_t j = 0; j < order.size(); ++j) identity = identity && order[j] == j;
  if (identity) return b;
  std::vector<std::size_t> perm;
  std::vector<Formula> fs;
  for (std::size_t j : order) {
    perm.push_back(j + 1);
    fs.push_back(b.fs[j]);
  }
  return {OneSidedProof::perm(perm, b.proof), fs};
}

Built move_to_end(const Built& b, std::size_t j) {
  std::vector<std::size_t> order;
  for (std::size_t k = 0; k < b.fs.size(); ++k)
    if (k != j) order.push_back(k);
  order.push_back(j);
  return permute(b, order);
}

Built lem(const Formula& a) { return {OneSidedProof::lem(a), {Formula::neg(a), a}}; }

Built contract_last(const Built& b) {
  std::vector<Formula> fs(b.fs.begin(), b.fs.end() - 1);
  return {OneSidedProof::contract(b.proof), fs};
}

// Moves positions i < j to the end and contracts them.
Built contract_pair(const Built& b, std::size_t i, std::size_t j) {
  std::vector<std::size_t> order;
  for (std::size_t k = 0; k < b.fs.size(); ++k)
    if (k != i && k != j) order.push_back(k);
  order.push_back(i);
  order.push_back(j);
  return contract_last(permute(b, order));
}

// Adds the formulas of `target` that b lacks and rearranges into target order.
Built weaken_to(Built b, const std::vector<Formula>& target) {
  std::vector<bool> used(b.fs.size(), false);
  for (const auto& t : target) {
    bool found = false;
    for (std::size_t k = 0; k < used.size() && !found; ++k)
      if (!used[k] && alpha_equal(b.fs[k], t)) used[k] = found = true;
    if (!found) {
      b = {OneSidedProof::weak(t, b.proof), [&] {
             auto fs = b.fs;
             fs.push_back(t);
             return fs;
           }()};
      used.push_back(true);
    }
  }
  if (b.fs.size() != target.size()) throw Error("internal: weaken_to target is not a supersequent");
  std::vector<bool> taken(b.fs.size(), false);
  std::vector<std::size_t> order;
  for (const auto& t : target)
    for (std::size_t k = 0; k < b.fs.size(); ++k)
      if (!taken[k] && alpha_equal(b.fs[k], t)) {
        taken[k] = true;
        order.push_back(k);
        break;
      }
  return permute(b, order);
}

std::set<Ident> bound_names(const Formula& a) {
  std::set<Ident> out;
  std::function<void(const Formula&)> go = [&](const Formula& f) {
    if (f.is(FormulaKind::Exists)) out.insert(f.var());
    for (const auto& s : f.subs()) go(s);
  };
  go(a);
  return out;
}

Ident abstraction_var(const Formula& b) {
  std::set<Ident> bound = bound_names(b);
  for (const char* n : {"x", "y", "u", "v", "w"})
    if (!b.has_free(n) && !bound.count(n)) return n;
  return fresh_name("x", [&](const Ident& n) { return b.has_free(n) || bound.count(n) > 0; });
}

// ι-subterms reachable through atom arguments and function applications.
void collect_terms(const Term& t, std::vector<Term>& out) {
  out.push_back(t);
  if (t.is(TermKind::Fun))
    for (const auto& c : t.children()) collect_terms(c, out);
}

// Skips terms mentioning a variable bound by an enclosing ∃.
void collect_terms(const Formula& a, std::vector<Term>& out, std::vector<Ident> bound = {}) {
  if (a.is(FormulaKind::Atom)) {
    std::vector<Term> all;
    for (const auto& t : a.args()) collect_terms(t, all);
    for (const auto& t : all)
      if (std::none_of(bound.begin(), bound.end(), [&](const Ident& x) { return t.has_free(x); })) out.push_back(t);
    return;
  }
  if (a.is(FormulaKind::Exists)) bound.push_back(a.var());
  for (const auto& s : a.subs()) collect_terms(s, out, bound);
}

Term replace_in(Rng& rng, const Term& t, const Term& target, const Ident& x) {
  if (alpha_equal(t, target) && coin(rng, 0.75)) return Term::ivar(x);
  if (!t.is(TermKind::Fun)) return t;
  std::vector<Term> kids;
  for (const auto& c : t.children()) kids.push_back(replace_in(rng, c, target, x));
  return Term::fun(t.name(), kids);
}

Formula replace_in(Rng& rng, const Formula& a, const Term& target, const Ident& x) {
  switch (a.kind()) {
    case FormulaKind::Atom: {
      std::vector<Term> args;
      for (const auto& t : a.args()) args.push_back(replace_in(rng, t, target, x));
      return Formula::atom(a.pred(), args);
    }
    case FormulaKind::Or:
      return Formula::disj(replace_in(rng, a.sub(0), target, x), replace_in(rng, a.sub(1), target, x));
    case FormulaKind::Not:
      return Formula::neg(replace_in(rng, a.sub(0), target, x));
    case FormulaKind::Exists:
      if (target.has_free(a.var())) return a;
      return Formula::exists(a.var(), replace_in(rng, a.sub(0), target, x));
  }
  return a;
}

const std::vector<Ident> kFreeVars = {"a", "b"};

class OneGen {
 public:
  OneGen(Rng& rng, const ProofOptions& opt) : rng_(rng), opt_(opt) {}

  Formula formula() { return formula_impl(rng_, opt_.formula_depth, kFreeVars, true, opt_.l_plus_witnesses); }

  Built axiom() { return lem(formula()); }

  // Applies `steps` random rules; the formula at `protect` (if any) ends last.
  Built grow(Built b, int steps, std::optional<std::size_t> protect = std::nullopt, int nest = 0) {
    for (int s = 0; s < steps; ++s) {
      std::size_t n = b.fs.size();
      std::size_t j = static_cast<std::size_t>(pick(rng_, static_cast<int>(n)));
      if (protect && j == *protect) {
        if (n == 1) break;
        j = (j + 1) % n;
      }
      if (protect && *protect > j) --*protect;  // index after moving j to the end
      // Guarded steps only touch the last position or append behind it.
      b = unary_or_binary(move_to_end(b, j), nest, protect.has_value());
    }
    if (protect) b = move_to_end(b, *protect);
    return b;
  }

  Built close(Built b) {
    OneSidedProof p = regularize(b.proof);
    if (opt_.closed) {
      // Cut formulas and witnesses may mention a or b too, not just the end sequent.
      auto eig = eigenvariables(p);
      for (const Ident v : {"a", "b"})
        if (std::find(eig.begin(), eig.end(), v) == eig.end()) p = proof_subst(p, v, random_fo_term(rng_, 2));
    }
    Sequent end = check_one_sided(p);
    return {p, end.formulas};
  }

 private:
  Built unary_or_binary(Built b, int nest, bool guarded) {
    const Formula last = b.fs.back();
    std::vector<Formula> ctx(b.fs.begin(), b.fs.end() - 1);
    auto with_last = [&](const OneSidedProof& p, const Formula& a) {
      auto fs = ctx;
      fs.push_back(a);
      return Built{p, fs};
    };
    int k = pick(rng_, nest < 2 ? 10 : 7);
    if (guarded && (k == 6 || k == 8)) return b;
    switch (k) {
      case 0: {  // or
        int side = coin(rng_) ? 1 : 2;
        Formula other = formula();
        Formula d = side == 1 ? Formula::disj(last, other) : Formula::disj(other, last);
        return with_last(OneSidedProof::or_intro(side, other, b.proof), d);
      }
      case 1: {  // weak
        Formula a = formula();
        auto fs = b.fs;
        fs.push_back(a);
        return {OneSidedProof::weak(a, b.proof), fs};
      }
      case 2:  // nn
        return with_last(OneSidedProof::neg_neg(b.proof), Formula::neg(Formula::neg(last)));
      case 3:
      case 4: {  // ex
        std::vector<Term> ts;
        collect_terms(last, ts);
        if (ts.empty()) return b;
        Term t = choose(rng_, ts);
        Ident x = abstraction_var(last);
        Formula a = replace_in(rng_, last, t, x);
        if (!alpha_equal(subst_formula(a, x, t), last)) return b;
        return with_last(OneSidedProof::ex(t, x, a, b.proof), Formula::exists(x, a));
      }
      case 5: {  // nex on ¬B with a free variable private to B
        if (!last.is(FormulaKind::Not)) return b;
        for (const auto& v : last.free_vars()) {
          bool elsewhere = std::any_of(ctx.begin(), ctx.end(), [&](const Formula& f) { return f.has_free(v.name); });
          if (elsewhere) continue;
          Ident x = abstraction_var(last.sub(0));
          Formula ex = abstract_eigenvariable(last.sub(0), v.name, x);
          return with_last(OneSidedProof::neg_ex(v.name, b.proof, x), Formula::neg(ex));
        }
        return b;
      }
      case 6: {  // contract an equal pair if one exists
        for (std::size_t i = 0; i < b.fs.size(); ++i)
          for (std::size_t j = i + 1; j < b.fs.size(); ++j)
            if (alpha_equal(b.fs[i], b.fs[j])) {
              return contract_pair(b, i, j);
            }
        return b;
      }
      case 7: {  // cut against a proof of Δ, ¬last
        Built right = grow(permute(lem(last), {1, 0}), pick(rng_, 3), std::size_t{1}, nest + 1);
        auto fs = ctx;
        fs.insert(fs.end(), right.fs.begin(), right.fs.end() - 1);
        if (fs.empty()) return b;
        return {OneSidedProof::cut(last, b.proof, right.proof), fs};
      }
      case 8: {  // cut with last = ¬A as the right premise
        if (!last.is(FormulaKind::Not)) return b;
        const Formula& a = last.sub(0);
        Built left = grow(lem(a), 1 + pick(rng_, 3), std::size_t{1}, nest + 1);
        auto fs = left.fs;
        fs.pop_back();
        fs.insert(fs.end(), ctx.begin(), ctx.end());
        if (fs.empty()) return b;
        return {OneSidedProof::cut(a, left.proof, b.proof), fs};
      }
      case 9: {  // nor
        if (!last.is(FormulaKind::Not)) return b;
        Formula c = formula();
        Built right = grow(permute(lem(c), {1, 0}), pick(rng_, 3), std::size_t{1}, nest + 1);
        auto fs = ctx;
        fs.insert(fs.end(), right.fs.begin(), right.fs.end() - 1);
        fs.push_back(Formula::neg(Formula::disj(last.sub(0), c)));
        return {OneSidedProof::neg_or(b.proof, right.proof), fs};
      }
    }
    return b;
  }

  Rng& rng_;
  ProofOptions opt_;
};

}  // namespace

OneSidedProof random_one_sided(Rng& rng, const ProofOptions& opt) {
  OneGen g(rng, opt);
  return g.close(g.grow(g.axiom(), opt.steps)).proof;
}

OpenProof random_open_one_sided(Rng& rng, const ProofOptions& opt) {
  ProofOptions o = opt;
  o.closed = false;
  OneGen g(rng, o);
  OneSidedProof p = g.close(g.grow(g.axiom(), o.steps)).proof;
  Sequent end = check_one_sided(p);
  std::vector<Ident> fv;
  for (const auto& a : end.formulas)
    for (const auto& v : a.free_vars())
      if (std::find(fv.begin(), fv.end(), v.name) == fv.end()) fv.push_back(v.name);
  return {p, fv.empty() ? Ident() : choose(rng, fv)};
}

// ---------------------------------------------------------------------------
// Propositional proof search

namespace {

std::optional<Built> prove(const std::vector<Formula>& s, int budget) {
  if (budget <= 0) return std::nullopt;
  // Axiom: a complementary pair.
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j)
      if (s[j].is(FormulaKind::Not) && alpha_equal(s[j].sub(0), s[i])) return weaken_to(lem(s[i]), s);

  for (std::size_t k = 0; k < s.size(); ++k) {
    const Formula& f = s[k];
    std::vector<Formula> rest;
    for (std::size_t j = 0; j < s.size(); ++j)
      if (j != k) rest.push_back(s[j]);
    auto finish = [&](Built b) {
      // b ends with rest, f; put f back at k.
      std::vector<std::size_t> order;
      for (std::size_t j = 0; j < s.size(); ++j) order.push_back(j < k ? j : j == k ? s.size() - 1 : j - 1);
      return permute(b, order);
    };
    if (f.is(FormulaKind::Or)) {
      auto seq = rest;
      seq.push_back(f.sub(0));
      seq.push_back(f.sub(1));
      auto q = prove(seq, budget - 1);
      if (!q) return std::nullopt;
      std::size_t n = rest.size();
      Built b = {OneSidedProof::or_intro(2, f.sub(0), q->proof), q->fs};
      b.fs.back() = f;
      b = move_to_end(b, n);  // A last
      b = {OneSidedProof::or_intro(1, f.sub(1), b.proof), b.fs};
      b.fs.back() = f;
      return finish(contract_last(b));
    }
    if (f.is(FormulaKind::Not) && f.sub(0).is(FormulaKind::Not)) {
      auto seq = rest;
      seq.push_back(f.sub(0).sub(0));
      auto q = prove(seq, budget - 1);
      if (!q) return std::nullopt;
      Built b = {OneSidedProof::neg_neg(q->proof), q->fs};
      b.fs.back() = f;
      return finish(b);
    }
    if (f.is(FormulaKind::Not) && f.sub(0).is(FormulaKind::Or)) {
      auto s1 = rest;
      s1.push_back(Formula::neg(f.sub(0).sub(0)));
      auto s2 = rest;
      s2.push_back(Formula::neg(f.sub(0).sub(1)));
      auto q1 = prove(s1, budget - 1);
      if (!q1) return std::nullopt;
      auto q2 = prove(s2, budget - 1);
      if (!q2) return std::nullopt;
      std::size_t n = rest.size();
      std::vector<Formula> fs = rest;
      fs.insert(fs.end(), rest.begin(), rest.end());
      fs.push_back(f);
      Built b = {OneSidedProof::neg_or(q1->proof, q2->proof), fs};
      // Contract the two copies of rest, last element first. After t merges the
      // second copy of element i = n-1-t sits at i + (n - t) = 2i + 1.
      for (std::size_t i = n; i-- > 0;) b = contract_pair(b, i, 2 * i + 1);
      return finish(weaken_to(b, [&] {
        auto t = rest;
        t.push_back(f);
        return t;
      }()));
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<OneSidedProof> prove_propositional(const Sequent& s) {
  for (const auto& a : s.formulas)
    if (!is_quantifier_free(a)) return std::nullopt;
  auto b = prove(s.formulas, 64);
  if (!b) return std::nullopt;
  return b->proof;
}

// ---------------------------------------------------------------------------
// ∃-goals

namespace {

// Truth of a quantifier-free closed formula under an assignment to atom strings.
bool eval_qf(const Formula& a, const std::map<std::string, bool>& sigma) {
  switch (a.kind()) {
    case FormulaKind::Atom: return sigma.at(canonical_string(a));
    case FormulaKind::Or: return eval_qf(a.sub(0), sigma) || eval_qf(a.sub(1), sigma);
    case FormulaKind::Not: return !eval_qf(a.sub(0), sigma);
    case FormulaKind::Exists: break;
  }
  throw Error("internal: quantifier in eval_qf");
}

void atoms_of(const Formula& a, std::set<std::string>& out) {
  if (a.is(FormulaKind::Atom)) {
    out.insert(canonical_string(a));
    return;
  }
  for (const auto& s : a.subs()) atoms_of(s, out);
}

bool is_tautology(const std::vector<Formula>& fs) {
  std::set<std::string> atoms;
  for (const auto& f : fs) atoms_of(f, atoms);
  std::vector<std::string> keys(atoms.begin(), atoms.end());
  if (keys.size() > 16) return false;
  for (std::uint32_t m = 0; m < (1u << keys.size()); ++m) {
    std::map<std::string, bool> sigma;
    for (std::size_t i = 0; i < keys.size(); ++i) sigma[keys[i]] = (m >> i) & 1u;
    if (std::none_of(fs.begin(), fs.end(), [&](const Formula& f) { return eval_qf(f, sigma); })) return false;
  }
  return true;
}

Formula matrix_atom(Rng& rng) {
  static const std::vector<Term> args = {Term::ivar("x"), Term::fun("f", {Term::ivar("x")}), Term::constant("c"),
                                         Term::constant("d")};
  const Term& t = args[static_cast<std::size_t>(pick(rng, coin(rng, 0.8) ? 2 : 4))];
  return Formula::atom(coin(rng, 0.7) ? "P" : "Q", {t});
}

Formula random_matrix(Rng& rng, int depth) {
  if (depth <= 0 || coin(rng, 0.25)) return matrix_atom(rng);
  if (coin(rng, 0.35)) return Formula::neg(random_matrix(rng, depth - 1));
  return Formula::disj(random_matrix(rng, depth - 1), random_matrix(rng, depth - 1));
}

}  // namespace

OneSidedProof random_exists_goal(Rng& rng) {
  static const std::vector<Term> witnesses = {Term::constant("c"), Term::constant("d"),
                                              Term::fun("f", {Term::constant("c")}),
                                              Term::fun("f", {Term::constant("d")})};
  for (int attempt = 0;; ++attempt) {
    Formula a = random_matrix(rng, 3);
    if (!a.has_free("x")) continue;
    int n = 1 + pick(rng, 3);
    std::vector<Term> ts;
    for (int i = 0; i < n; ++i) ts.push_back(choose(rng, witnesses));
    std::vector<Formula> inst;
    for (const auto& t : ts) inst.push_back(subst_formula(a, "x", t));
    if (!is_tautology(inst)) continue;

    std::optional<Built> base;
    if (coin(rng, 0.3)) {
      // Detour through a propositional cut.
      Formula c = random_matrix(rng, 1);
      c = subst_formula(c, "x", choose(rng, witnesses));
      auto s1 = inst;
      s1.push_back(c);
      auto s2 = inst;
      s2.push_back(Formula::neg(c));
      auto q1 = prove(s1, 64);
      auto q2 = prove(s2, 64);
      if (!q1 || !q2) continue;
      std::vector<Formula> fs = inst;
      fs.insert(fs.end(), inst.begin(), inst.end());
      Built b = {OneSidedProof::cut(c, q1->proof, q2->proof), fs};
      for (std::size_t i = inst.size(); i-- > 0;) b = contract_pair(b, i, 2 * i + 1);
      base = weaken_to(b, inst);
    } else {
      base = prove(inst, 64);
    }
    if (!base) continue;

    Formula goal = Formula::exists("x", a);
    Built b = *base;
    for (std::size_t k = ts.size(); k-- > 0;) {
      // The last formula is A[t_k/x].
      b = {OneSidedProof::ex(ts[k], "x", a, b.proof), b.fs};
      b.fs.back() = goal;
      if (k > 0) {
        std::vector<std::size_t> order;
        order.push_back(b.fs.size() - 1);
        for (std::size_t j = 0; j + 1 < b.fs.size(); ++j) order.push_back(j);
        b = permute(b, order);
      }
    }
    while (b.fs.size() > 1) b = contract_last(b);
    if (coin(rng, 0.25)) {
      // Cut against the axiom for the goal itself.
      Built right = permute(lem(goal), {1, 0});
      b = {OneSidedProof::cut(goal, b.proof, right.proof), {goal}};
    }
    return b.proof;
  }
}

// ---------------------------------------------------------------------------
// Two-sided proofs

namespace {

struct Built2 {
  TwoSidedProof proof;
  std::vector<Formula> ante;
  std::vector<Formula> succ;
};

Built2 permute2(const Built2& b, const std::vector<std::size_t>& lo, const std::vector<std::size_t>& ro) {
  bool id = true;
  for (std::size_t j = 0; j < lo.size(); ++j) id = id && lo[j] == j;
  for (std::size_t j = 0; j < ro.size(); ++j) id = id && ro[j] == j;
  if (id) return b;
  std::vector<std::size_t> lp, rp;
  Built2 out{b.proof, {}, {}};
  for (std::size_t j : lo) {
    lp.push_back(j + 1);
    out.ante.push_back(b.ante[j]);
  }
  for (std::size_t j : ro) {
    rp.push_back(j + 1);
    out.succ.push_back(b.succ[j]);
  }
  out.proof = TwoSidedProof::perm(lp, rp, b.proof);
  return out;
}

std::vector<std::size_t> iota_order(std::size_t n) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

// Antecedent position j to the end.
Built2 ante_to_end(const Built2& b, std::size_t j) {
  std::vector<std::size_t> lo;
  for (std::size_t k = 0; k < b.ante.size(); ++k)
    if (k != j) lo.push_back(k);
  lo.push_back(j);
  return permute2(b, lo, iota_order(b.succ.size()));
}

// Succedent position j to the front.
Built2 succ_to_front(const Built2& b, std::size_t j) {
  std::vector<std::size_t> ro = {j};
  for (std::size_t k = 0; k < b.succ.size(); ++k)
    if (k != j) ro.push_back(k);
  return permute2(b, iota_order(b.ante.size()), ro);
}

std::vector<std::size_t> match_order(const std::vector<Formula>& have, const std::vector<Formula>& want) {
  std::vector<bool> taken(have.size(), false);
  std::vector<std::size_t> order;
  for (const auto& t : want)
    for (std::size_t k = 0; k < have.size(); ++k)
      if (!taken[k] && alpha_equal(have[k], t)) {
        taken[k] = true;
        order.push_back(k);
        break;
      }
  if (order.size() != want.size()) throw Error("internal: two-sided weakening mismatch");
  return order;
}

Built2 weaken2_to(Built2 b, const std::vector<Formula>& ante, const std::vector<Formula>& succ) {
  auto add_missing = [&](const std::vector<Formula>& target, bool left) {
    std::vector<Formula>& have = left ? b.ante : b.succ;
    std::vector<bool> used(have.size(), false);
    for (const auto& t : target) {
      bool found = false;
      for (std::size_t k = 0; k < used.size() && !found; ++k)
        if (!used[k] && alpha_equal(have[k], t)) used[k] = found = true;
      if (found) continue;
      if (left) {
        b.proof = TwoSidedProof::weak_left(t, b.proof);
        b.ante.push_back(t);
        used.push_back(true);
      } else {
        b.proof = TwoSidedProof::weak_right(t, b.proof);
        b.succ.insert(b.succ.begin(), t);
        used.insert(used.begin(), true);
      }
    }
  };
  add_missing(ante, true);
  add_missing(succ, false);
  return permute2(b, match_order(b.ante, ante), match_order(b.succ, succ));
}

class TwoGen {
 public:
  explicit TwoGen(Rng& rng) : rng_(rng) {}

  Formula formula() { return formula_impl(rng_, 2, kFreeVars, true, false); }

  Built2 axiom() {
    Formula a = formula();
    return {TwoSidedProof::id(a), {a}, {a}};
  }

  Built2 grow(Built2 b, int steps, int nest = 0) {
    for (int s = 0; s < steps; ++s) b = apply(b, nest);
    return b;
  }

 private:
  Built2 apply(Built2 b, int nest) {
    int k = pick(rng_, nest < 2 ? 14 : 11);
    bool left = coin(rng_);
    if (left && b.ante.empty()) left = false;
    if (!left && b.succ.empty()) left = true;
    if (b.ante.empty() && b.succ.empty()) return b;
    // Bring a random formula into principal position on the chosen side.
    if (left)
      b = ante_to_end(b, static_cast<std::size_t>(pick(rng_, static_cast<int>(b.ante.size()))));
    else
      b = succ_to_front(b, static_cast<std::size_t>(pick(rng_, static_cast<int>(b.succ.size()))));

    switch (k) {
      case 0:
      case 1: {  // negation moves the principal formula across
        if (left) {
          Formula a = b.ante.back();
          b.ante.pop_back();
          b.succ.insert(b.succ.begin(), Formula::neg(a));
          b.proof = TwoSidedProof::neg_right(b.proof);
        } else {
          Formula a = b.succ.front();
          b.succ.erase(b.succ.begin());
          b.ante.push_back(Formula::neg(a));
          b.proof = TwoSidedProof::neg_left(b.proof);
        }
        return b;
      }
      case 2: {  // orR
        if (left) return b;
        int side = coin(rng_) ? 1 : 2;
        Formula other = formula();
        Formula a = b.succ.front();
        b.succ.front() = side == 1 ? Formula::disj(a, other) : Formula::disj(other, a);
        b.proof = TwoSidedProof::or_right(side, other, b.proof);
        return b;
      }
      case 3: {  // exR
        if (left) return b;
        const Formula last = b.succ.front();
        std::vector<Term> ts;
        collect_terms(last, ts);
        if (ts.empty()) return b;
        Term t = choose(rng_, ts);
        Ident x = abstraction_var(last);
        Formula a = replace_in(rng_, last, t, x);
        if (!alpha_equal(subst_formula(a, x, t), last)) return b;
        b.succ.front() = Formula::exists(x, a);
        b.proof = TwoSidedProof::ex_right(t, x, a, b.proof);
        return b;
      }
      case 4: {  // exL on a variable private to the principal formula
        if (!left) return b;
        const Formula last = b.ante.back();
        for (const auto& v : last.free_vars()) {
          auto in = [&](const std::vector<Formula>& fs, std::size_t skip_last) {
            for (std::size_t i = 0; i + skip_last < fs.size(); ++i)
              if (fs[i].has_free(v.name)) return true;
            return false;
          };
          if (in(b.ante, 1) || in(b.succ, 0)) continue;
          Ident x = abstraction_var(last);
          b.ante.back() = abstract_eigenvariable(last, v.name, x);
          b.proof = TwoSidedProof::ex_left(v.name, b.proof, x);
          return b;
        }
        return b;
      }
      case 5: {  // weakening
        Formula a = formula();
        if (left) {
          b.ante.push_back(a);
          b.proof = TwoSidedProof::weak_left(a, b.proof);
        } else {
          b.succ.insert(b.succ.begin(), a);
          b.proof = TwoSidedProof::weak_right(a, b.proof);
        }
        return b;
      }
      case 6:
      case 7: {  // contraction of an equal pair on the chosen side
        std::vector<Formula>& fs = left ? b.ante : b.succ;
        for (std::size_t i = 0; i < fs.size(); ++i)
          for (std::size_t j = i + 1; j < fs.size(); ++j) {
            if (!alpha_equal(fs[i], fs[j])) continue;
            if (left) {
              std::vector<std::size_t> lo;
              for (std::size_t q = 0; q < fs.size(); ++q)
                if (q != i && q != j) lo.push_back(q);
              lo.push_back(i);
              lo.push_back(j);
              b = permute2(b, lo, iota_order(b.succ.size()));
              b.ante.pop_back();
              b.proof = TwoSidedProof::contract_left(b.proof);
            } else {
              std::vector<std::size_t> ro = {i, j};
              for (std::size_t q = 0; q < fs.size(); ++q)
                if (q != i && q != j) ro.push_back(q);
              b = permute2(b, iota_order(b.ante.size()), ro);
              b.succ.erase(b.succ.begin());
              b.proof = TwoSidedProof::contract_right(b.proof);
            }
            return b;
          }
        return b;
      }
      case 8:
      case 9:
      case 10: {  // duplicate a formula by a weakening so later contractions fire
        Formula a = left ? b.ante.back() : b.succ.front();
        if (left) {
          b.ante.push_back(a);
          b.proof = TwoSidedProof::weak_left(a, b.proof);
        } else {
          b.succ.insert(b.succ.begin(), a);
          b.proof = TwoSidedProof::weak_right(a, b.proof);
        }
        return b;
      }
      case 11:
      case 12: {  // cut
        if (!left) {
          // b : Γ₁ ⊢ A, Δ₁; right premise Γ₂, A ⊢ Δ₂ grown from id(A).
          Formula a = b.succ.front();
          Built2 r = grow({TwoSidedProof::id(a), {a}, {a}}, pick(rng_, 3), nest + 1);
          auto it = std::find_if(r.ante.begin(), r.ante.end(), [&](const Formula& f) { return alpha_equal(f, a); });
          if (it == r.ante.end()) return b;
          r = ante_to_end(r, static_cast<std::size_t>(it - r.ante.begin()));
          Built2 out{TwoSidedProof::cut(a, b.proof, r.proof), b.ante, {}};
          out.ante.insert(out.ante.end(), r.ante.begin(), r.ante.end() - 1);
          out.succ.assign(b.succ.begin() + 1, b.succ.end());
          out.succ.insert(out.succ.end(), r.succ.begin(), r.succ.end());
          return out;
        }
        // b : Γ₂, A ⊢ Δ₂; left premise Γ₁ ⊢ A, Δ₁ grown from id(A).
        Formula a = b.ante.back();
        Built2 l = grow({TwoSidedProof::id(a), {a}, {a}}, pick(rng_, 3), nest + 1);
        auto it = std::find_if(l.succ.begin(), l.succ.end(), [&](const Formula& f) { return alpha_equal(f, a); });
        if (it == l.succ.end()) return b;
        l = succ_to_front(l, static_cast<std::size_t>(it - l.succ.begin()));
        Built2 out{TwoSidedProof::cut(a, l.proof, b.proof), l.ante, {}};
        out.ante.insert(out.ante.end(), b.ante.begin(), b.ante.end() - 1);
        out.succ.assign(l.succ.begin() + 1, l.succ.end());
        out.succ.insert(out.succ.end(), b.succ.begin(), b.succ.end());
        return out;
      }
      case 13: {  // orL: the other premise weakens id(B) for some B on the right
        if (!left || b.succ.empty()) return b;
        Formula bf = choose(rng_, b.succ);
        std::vector<Formula> gamma(b.ante.begin(), b.ante.end() - 1);
        std::vector<Formula> target = gamma;
        target.push_back(bf);
        Built2 r = weaken2_to({TwoSidedProof::id(bf), {bf}, {bf}}, target, b.succ);
        Formula a = b.ante.back();
        b.ante.back() = Formula::disj(a, bf);
        b.proof = TwoSidedProof::or_left(b.proof, r.proof);
        return b;
      }
    }
    return b;
  }

  Rng& rng_;
};

}  // namespace

TwoSidedProof random_two_sided(Rng& rng, int steps) {
  TwoGen g(rng);
  return g.grow(g.axiom(), steps).proof;
}

// ---------------------------------------------------------------------------
// Propositions for the verifier

const std::vector<Proposition>& atom_pool() {
  static const std::vector<Proposition> pool = {
      Proposition::atom("P", {Term::constant("c")}),
      Proposition::atom("P", {Term::fun("f", {Term::constant("c")})}),
      Proposition::atom("Q", {Term::constant("c")}),
      Proposition::atom("Q", {Term::fun("f", {Term::constant("c")})}),
  };
  return pool;
}

namespace {

// A closed ι-term denoting c (value 0) or f(c) (value 1), possibly via detours.
// value -1: either, and Case branches may then differ.
Term pool_arg(Rng& rng, int value, int depth, bool with_cases);

Proposition prop_impl(Rng& rng, int depth, bool with_cases) {
  if (depth <= 0 || coin(rng, 0.3)) {
    Ident pred = coin(rng) ? "P" : "Q";
    return Proposition::atom(pred, {pool_arg(rng, -1, 2, with_cases)});
  }
  if (coin(rng, 0.35)) return Proposition::neg(prop_impl(rng, depth - 1, with_cases));
  return Proposition::disj(prop_impl(rng, depth - 1, with_cases), prop_impl(rng, depth - 1, with_cases));
}

Term pool_arg(Rng& rng, int value, int depth, bool with_cases) {
  Term c = Term::constant("c");
  bool any = value < 0;
  if (any) value = pick(rng, 2);
  int k = depth > 0 ? pick(rng, with_cases ? 5 : 4) : 0;
  switch (k) {
    case 1:
      return Term::proj(1, Term::pair(pool_arg(rng, any ? -1 : value, depth - 1, with_cases), Term::epsilon()));
    case 2:
      return Term::app(Term::abs("y", kIota, Term::ivar("y")), pool_arg(rng, any ? -1 : value, depth - 1, with_cases));
    case 3:
      if (value == 1) return Term::fun("f", {pool_arg(rng, 0, depth - 1, with_cases)});
      return value == 0 ? c : Term::fun("f", {c});
    case 4: {
      Proposition cond = prop_impl(rng, 1, depth > 1);
      return Term::case_of(cond, pool_arg(rng, any ? -1 : value, depth - 1, with_cases),
                           pool_arg(rng, any ? -1 : value, depth - 1, with_cases));
    }
    default:
      return value == 0 ? c : Term::fun("f", {c});
  }
}

}  // namespace

Proposition random_proposition(Rng& rng, int depth, bool with_cases) { return prop_impl(rng, depth, with_cases); }

}  // namespace hfi::gen
