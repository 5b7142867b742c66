#include "hfi/calculus.hpp"

#include <algorithm>
#include <functional>

#include "hfi/error.hpp"
#include "hfi/kernel.hpp"

namespace hfi {

std::string rule_name(OneRule r) {
  switch (r) {
    case OneRule::Lem: return "lem";
    case OneRule::Or: return "or";
    case OneRule::NegOr: return "nor";
    case OneRule::Ex: return "ex";
    case OneRule::NegEx: return "nex";
    case OneRule::Contract: return "contr";
    case OneRule::Weak: return "weak";
    case OneRule::NegNeg: return "nn";
    case OneRule::Cut: return "cut";
    case OneRule::Perm: return "perm";
  }
  return "?";
}

std::string rule_name(TwoRule r) {
  switch (r) {
    case TwoRule::Id: return "id";
    case TwoRule::OrR: return "orR";
    case TwoRule::OrL: return "orL";
    case TwoRule::NegR: return "negR";
    case TwoRule::NegL: return "negL";
    case TwoRule::ExR: return "exR";
    case TwoRule::ExL: return "exL";
    case TwoRule::ContrR: return "contrR";
    case TwoRule::ContrL: return "contrL";
    case TwoRule::WeakR: return "weakR";
    case TwoRule::WeakL: return "weakL";
    case TwoRule::Cut: return "cut";
    case TwoRule::Perm: return "perm";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Construction

namespace {

template <typename Rule, typename Self>
std::shared_ptr<detail::ProofNode<Rule, Self>> node(Rule r, std::vector<Self> premises) {
  auto n = std::make_shared<detail::ProofNode<Rule, Self>>();
  n->rule = r;
  for (const auto& p : premises) n->size += p.size();
  n->premises = std::move(premises);
  return n;
}

const Formula& need(const std::optional<Formula>& f, const char* what) {
  if (!f) throw Error(std::string("proof node has no ") + what);
  return *f;
}

}  // namespace

OneSidedProof OneSidedProof::lem(Formula a) {
  auto n = node<OneRule, OneSidedProof>(OneRule::Lem, {});
  n->formula = std::move(a);
  return OneSidedProof(n);
}

OneSidedProof OneSidedProof::or_intro(int side, Formula other, OneSidedProof premise) {
  if (side != 1 && side != 2) throw Error("disjunct index must be 1 or 2");
  auto n = node<OneRule, OneSidedProof>(OneRule::Or, {std::move(premise)});
  n->side = side;
  n->formula = std::move(other);
  return OneSidedProof(n);
}

OneSidedProof OneSidedProof::neg_or(OneSidedProof left, OneSidedProof right) {
  return OneSidedProof(node<OneRule, OneSidedProof>(OneRule::NegOr, {std::move(left), std::move(right)}));
}

OneSidedProof OneSidedProof::ex(Term witness, Ident var, Formula matrix, OneSidedProof premise) {
  auto n = node<OneRule, OneSidedProof>(OneRule::Ex, {std::move(premise)});
  n->witness = std::move(witness);
  n->var = std::move(var);
  n->formula = std::move(matrix);
  return OneSidedProof(n);
}

OneSidedProof OneSidedProof::neg_ex(Ident eigen, OneSidedProof premise, std::optional<Ident> var) {
  auto n = node<OneRule, OneSidedProof>(OneRule::NegEx, {std::move(premise)});
  n->eigen = std::move(eigen);
  if (var) n->var = *var;
  return OneSidedProof(n);
}

OneSidedProof OneSidedProof::contract(OneSidedProof premise) {
  return OneSidedProof(node<OneRule, OneSidedProof>(OneRule::Contract, {std::move(premise)}));
}

OneSidedProof OneSidedProof::weak(Formula a, OneSidedProof premise) {
  auto n = node<OneRule, OneSidedProof>(OneRule::Weak, {std::move(premise)});
  n->formula = std::move(a);
  return OneSidedProof(n);
}

OneSidedProof OneSidedProof::neg_neg(OneSidedProof premise) {
  return OneSidedProof(node<OneRule, OneSidedProof>(OneRule::NegNeg, {std::move(premise)}));
}

OneSidedProof OneSidedProof::cut(Formula a, OneSidedProof left, OneSidedProof right) {
  auto n = node<OneRule, OneSidedProof>(OneRule::Cut, {std::move(left), std::move(right)});
  n->formula = std::move(a);
  return OneSidedProof(n);
}

OneSidedProof OneSidedProof::perm(std::vector<std::size_t> permutation, OneSidedProof premise) {
  auto n = node<OneRule, OneSidedProof>(OneRule::Perm, {std::move(premise)});
  n->perm = std::move(permutation);
  return OneSidedProof(n);
}

OneRule OneSidedProof::rule() const { return node_->rule; }
const Formula& OneSidedProof::formula() const { return need(node_->formula, "formula"); }
int OneSidedProof::side() const { return node_->side; }
const Term& OneSidedProof::witness() const {
  if (!node_->witness) throw Error("proof node has no witness");
  return *node_->witness;
}
const Ident& OneSidedProof::var() const { return node_->var; }
const Ident& OneSidedProof::eigen() const { return node_->eigen; }
const std::vector<std::size_t>& OneSidedProof::permutation() const { return node_->perm; }
const std::vector<OneSidedProof>& OneSidedProof::premises() const { return node_->premises; }
std::size_t OneSidedProof::size() const { return node_->size; }

TwoSidedProof TwoSidedProof::id(Formula a) {
  auto n = node<TwoRule, TwoSidedProof>(TwoRule::Id, {});
  n->formula = std::move(a);
  return TwoSidedProof(n);
}

TwoSidedProof TwoSidedProof::or_right(int side, Formula other, TwoSidedProof premise) {
  if (side != 1 && side != 2) throw Error("disjunct index must be 1 or 2");
  auto n = node<TwoRule, TwoSidedProof>(TwoRule::OrR, {std::move(premise)});
  n->side = side;
  n->formula = std::move(other);
  return TwoSidedProof(n);
}

TwoSidedProof TwoSidedProof::or_left(TwoSidedProof left, TwoSidedProof right) {
  return TwoSidedProof(node<TwoRule, TwoSidedProof>(TwoRule::OrL, {std::move(left), std::move(right)}));
}

TwoSidedProof TwoSidedProof::neg_right(TwoSidedProof premise) {
  return TwoSidedProof(node<TwoRule, TwoSidedProof>(TwoRule::NegR, {std::move(premise)}));
}

TwoSidedProof TwoSidedProof::neg_left(TwoSidedProof premise) {
  return TwoSidedProof(node<TwoRule, TwoSidedProof>(TwoRule::NegL, {std::move(premise)}));
}

TwoSidedProof TwoSidedProof::ex_right(Term witness, Ident var, Formula matrix, TwoSidedProof premise) {
  auto n = node<TwoRule, TwoSidedProof>(TwoRule::ExR, {std::move(premise)});
  n->witness = std::move(witness);
  n->var = std::move(var);
  n->formula = std::move(matrix);
  return TwoSidedProof(n);
}

TwoSidedProof TwoSidedProof::ex_left(Ident eigen, TwoSidedProof premise, std::optional<Ident> var) {
  auto n = node<TwoRule, TwoSidedProof>(TwoRule::ExL, {std::move(premise)});
  n->eigen = std::move(eigen);
  if (var) n->var = *var;
  return TwoSidedProof(n);
}

TwoSidedProof TwoSidedProof::contract_right(TwoSidedProof premise) {
  return TwoSidedProof(node<TwoRule, TwoSidedProof>(TwoRule::ContrR, {std::move(premise)}));
}

TwoSidedProof TwoSidedProof::contract_left(TwoSidedProof premise) {
  return TwoSidedProof(node<TwoRule, TwoSidedProof>(TwoRule::ContrL, {std::move(premise)}));
}

TwoSidedProof TwoSidedProof::weak_right(Formula a, TwoSidedProof premise) {
  auto n = node<TwoRule, TwoSidedProof>(TwoRule::WeakR, {std::move(premise)});
  n->formula = std::move(a);
  return TwoSidedProof(n);
}

TwoSidedProof TwoSidedProof::weak_left(Formula a, TwoSidedProof premise) {
  auto n = node<TwoRule, TwoSidedProof>(TwoRule::WeakL, {std::move(premise)});
  n->formula = std::move(a);
  return TwoSidedProof(n);
}

TwoSidedProof TwoSidedProof::cut(Formula a, TwoSidedProof left, TwoSidedProof right) {
  auto n = node<TwoRule, TwoSidedProof>(TwoRule::Cut, {std::move(left), std::move(right)});
  n->formula = std::move(a);
  return TwoSidedProof(n);
}

TwoSidedProof TwoSidedProof::perm(std::vector<std::size_t> left_perm, std::vector<std::size_t> right_perm,
                                  TwoSidedProof premise) {
  auto n = node<TwoRule, TwoSidedProof>(TwoRule::Perm, {std::move(premise)});
  n->perm = std::move(left_perm);
  n->perm_right = std::move(right_perm);
  return TwoSidedProof(n);
}

TwoRule TwoSidedProof::rule() const { return node_->rule; }
const Formula& TwoSidedProof::formula() const { return need(node_->formula, "formula"); }
int TwoSidedProof::side() const { return node_->side; }
const Term& TwoSidedProof::witness() const {
  if (!node_->witness) throw Error("proof node has no witness");
  return *node_->witness;
}
const Ident& TwoSidedProof::var() const { return node_->var; }
const Ident& TwoSidedProof::eigen() const { return node_->eigen; }
const std::vector<std::size_t>& TwoSidedProof::permutation() const { return node_->perm; }
const std::vector<std::size_t>& TwoSidedProof::right_permutation() const { return node_->perm_right; }
const std::vector<TwoSidedProof>& TwoSidedProof::premises() const { return node_->premises; }
std::size_t TwoSidedProof::size() const { return node_->size; }

std::string TwoSequent::str() const {
  Sequent l{antecedent}, r{succedent};
  std::string ls = l.str(), rs = r.str();
  return (ls.empty() ? "" : ls + " ") + "⊢" + (rs.empty() ? "" : " " + rs);
}

bool alpha_equal(const TwoSequent& a, const TwoSequent& b) {
  return alpha_equal(Sequent{a.antecedent}, Sequent{b.antecedent}) &&
         alpha_equal(Sequent{a.succedent}, Sequent{b.succedent});
}

// ---------------------------------------------------------------------------
// Shared checking helpers

namespace {

void check_formula_typing(const Formula& a, const std::vector<int>& path) {
  switch (a.kind()) {
    case FormulaKind::Atom:
      for (const auto& t : a.args()) {
        SimpleType ty;
        try {
          ty = infer_type(t);
        } catch (const TypeError& e) {
          throw RuleMismatch(path, std::string("ill-typed argument in ") + a.str() + ": " + e.what());
        }
        if (!ty.is_iota()) throw RuleMismatch(path, "argument " + t.str() + " of " + a.str() + " is not of type ι");
      }
      return;
    default:
      for (const auto& s : a.subs()) check_formula_typing(s, path);
  }
}

void check_witness(const Term& t, const std::vector<int>& path) {
  SimpleType ty;
  try {
    ty = infer_type(t);
  } catch (const TypeError& e) {
    throw RuleMismatch(path, std::string("ill-typed witness: ") + e.what());
  }
  if (!ty.is_iota()) throw RuleMismatch(path, "witness " + t.str() + " is not of type ι");
}

std::vector<Formula> checked_perm(const std::vector<Formula>& in, const std::vector<std::size_t>& perm,
                                  const std::vector<int>& path) {
  if (perm.size() != in.size())
    throw RuleMismatch(path, "permutation of length " + std::to_string(perm.size()) + " applied to " +
                                 std::to_string(in.size()) + " formulas");
  std::vector<bool> seen(in.size(), false);
  std::vector<Formula> out;
  out.reserve(in.size());
  for (std::size_t j : perm) {
    if (j < 1 || j > in.size() || seen[j - 1]) throw RuleMismatch(path, "not a permutation");
    seen[j - 1] = true;
    out.push_back(in[j - 1]);
  }
  return out;
}

void expect(bool ok, const std::vector<int>& path, const std::string& detail) {
  if (!ok) throw RuleMismatch(path, detail);
}

std::vector<Formula> without_last(const std::vector<Formula>& v, std::size_t n = 1) {
  return std::vector<Formula>(v.begin(), v.end() - static_cast<long>(n));
}

void eigen_type_ok(const Formula& body, const Ident& alpha, const std::vector<int>& path) {
  for (const auto& v : body.free_vars())
    if (v.name == alpha && !v.type.is_iota())
      throw RuleMismatch(path, "eigenvariable " + alpha + " occurs at type " + v.type.str());
}

bool mentions(const std::vector<Formula>& fs, const Ident& name) {
  return std::any_of(fs.begin(), fs.end(), [&](const Formula& f) { return f.has_free(name); });
}

}  // namespace

Formula abstract_eigenvariable(const Formula& body, const Ident& alpha, const std::optional<Ident>& var,
                               const std::vector<int>& path) {
  Ident x;
  if (var && !var->empty()) {
    x = *var;
    if (x != alpha && body.has_free(x))
      throw RuleMismatch(path, "bound variable " + x + " would capture a free occurrence");
  } else {
    x = fresh_name("x", [&](const Ident& n) { return n != alpha && body.has_free(n); });
  }
  return Formula::exists(x, subst_formula(body, alpha, Term::ivar(x)));
}

// ---------------------------------------------------------------------------
// One-sided checker

namespace {

class OneChecker {
 public:
  explicit OneChecker(OneSidedCheck& out) : out_(out) {}

  const Sequent& check(const OneSidedProof& p, std::vector<int>& path) {
    auto it = out_.conclusions.find(p.id());
    if (it != out_.conclusions.end()) return it->second;
    std::vector<const Sequent*> prem;
    for (std::size_t i = 0; i < p.premises().size(); ++i) {
      path.push_back(static_cast<int>(i));
      prem.push_back(&check(p.premise(i), path));
      path.pop_back();
    }
    Sequent c = conclude(p, prem, path);
    return out_.conclusions.emplace(p.id(), std::move(c)).first->second;
  }

 private:
  Sequent conclude(const OneSidedProof& p, const std::vector<const Sequent*>& prem, const std::vector<int>& path) {
    auto nonempty = [&](const Sequent& s, std::size_t n = 1) {
      expect(s.size() >= n, path, rule_name(p.rule()) + " needs a premise with at least " + std::to_string(n) +
                                      " formula(s)");
    };
    switch (p.rule()) {
      case OneRule::Lem: {
        check_formula_typing(p.formula(), path);
        return Sequent{{Formula::neg(p.formula()), p.formula()}};
      }
      case OneRule::Or: {
        const Sequent& s = *prem[0];
        nonempty(s);
        check_formula_typing(p.formula(), path);
        const Formula& a = s.formulas.back();
        Formula d = p.side() == 1 ? Formula::disj(a, p.formula()) : Formula::disj(p.formula(), a);
        auto out = without_last(s.formulas);
        out.push_back(d);
        return Sequent{out};
      }
      case OneRule::NegOr: {
        const Sequent& l = *prem[0];
        const Sequent& r = *prem[1];
        nonempty(l);
        nonempty(r);
        const Formula& na = l.formulas.back();
        const Formula& nb = r.formulas.back();
        expect(na.is(FormulaKind::Not), path, "left premise must end in a negation, found " + na.str());
        expect(nb.is(FormulaKind::Not), path, "right premise must end in a negation, found " + nb.str());
        auto out = without_last(l.formulas);
        auto rest = without_last(r.formulas);
        out.insert(out.end(), rest.begin(), rest.end());
        out.push_back(Formula::neg(Formula::disj(na.sub(0), nb.sub(0))));
        return Sequent{out};
      }
      case OneRule::Ex: {
        const Sequent& s = *prem[0];
        nonempty(s);
        check_witness(p.witness(), path);
        check_formula_typing(p.formula(), path);
        Formula expected = subst_formula(p.formula(), p.var(), p.witness());
        expect(alpha_equal(s.formulas.back(), expected), path,
               "premise ends in " + s.formulas.back().str() + ", expected " + expected.str());
        auto out = without_last(s.formulas);
        out.push_back(Formula::exists(p.var(), p.formula()));
        return Sequent{out};
      }
      case OneRule::NegEx: {
        const Sequent& s = *prem[0];
        nonempty(s);
        const Formula& nb = s.formulas.back();
        expect(nb.is(FormulaKind::Not), path, "premise must end in a negation, found " + nb.str());
        eigen_type_ok(nb.sub(0), p.eigen(), path);
        auto out = without_last(s.formulas);
        if (mentions(out, p.eigen())) throw EigenvariableViolation(path, p.eigen());
        std::optional<Ident> var;
        if (!p.var().empty()) var = p.var();
        out.push_back(Formula::neg(abstract_eigenvariable(nb.sub(0), p.eigen(), var, path)));
        out_.eigenvariables.insert(p.eigen());
        return Sequent{out};
      }
      case OneRule::Contract: {
        const Sequent& s = *prem[0];
        nonempty(s, 2);
        const Formula& a = s.formulas[s.size() - 2];
        const Formula& b = s.formulas.back();
        expect(alpha_equal(a, b), path, "contracted formulas differ: " + a.str() + " and " + b.str());
        return Sequent{without_last(s.formulas)};
      }
      case OneRule::Weak: {
        check_formula_typing(p.formula(), path);
        auto out = prem[0]->formulas;
        out.push_back(p.formula());
        return Sequent{out};
      }
      case OneRule::NegNeg: {
        const Sequent& s = *prem[0];
        nonempty(s);
        auto out = without_last(s.formulas);
        out.push_back(Formula::neg(Formula::neg(s.formulas.back())));
        return Sequent{out};
      }
      case OneRule::Cut: {
        const Sequent& l = *prem[0];
        const Sequent& r = *prem[1];
        nonempty(l);
        nonempty(r);
        check_formula_typing(p.formula(), path);
        expect(alpha_equal(l.formulas.back(), p.formula()), path,
               "left premise ends in " + l.formulas.back().str() + ", expected " + p.formula().str());
        Formula neg = Formula::neg(p.formula());
        expect(alpha_equal(r.formulas.back(), neg), path,
               "right premise ends in " + r.formulas.back().str() + ", expected " + neg.str());
        auto out = without_last(l.formulas);
        auto rest = without_last(r.formulas);
        out.insert(out.end(), rest.begin(), rest.end());
        return Sequent{out};
      }
      case OneRule::Perm:
        return Sequent{checked_perm(prem[0]->formulas, p.permutation(), path)};
    }
    throw RuleMismatch(path, "unknown rule");
  }

  OneSidedCheck& out_;
};

// Free names mentioned by a node itself: its conclusion and its witness.
bool node_mentions(const OneSidedProof& p, const OneSidedCheck& chk, const Ident& name) {
  if (p.rule() == OneRule::Ex && p.witness().has_free(name)) return true;
  return mentions(chk.conclusion(p).formulas, name);
}

void check_regular(const OneSidedProof& root, const OneSidedCheck& chk) {
  std::vector<OneSidedProof> intro;
  std::function<void(const OneSidedProof&)> collect = [&](const OneSidedProof& p) {
    if (p.rule() == OneRule::NegEx) intro.push_back(p);
    for (const auto& q : p.premises()) collect(q);
  };
  collect(root);
  std::set<Ident> seen;
  for (const auto& n : intro)
    if (!seen.insert(n.eigen()).second) throw RegularityViolation(n.eigen(), "is introduced more than once");
  if (intro.empty()) return;

  // Occurrence counts per eigenvariable, over subtrees, memoized by node.
  std::unordered_map<const void*, std::unordered_map<Ident, std::size_t>> memo;
  std::function<const std::unordered_map<Ident, std::size_t>&(const OneSidedProof&)> count =
      [&](const OneSidedProof& p) -> const std::unordered_map<Ident, std::size_t>& {
    auto it = memo.find(p.id());
    if (it != memo.end()) return it->second;
    std::unordered_map<Ident, std::size_t> c;
    for (const auto& q : p.premises())
      for (const auto& [k, v] : count(q)) c[k] += v;
    for (const auto& a : seen)
      if (node_mentions(p, chk, a)) c[a] += 1;
    return memo.emplace(p.id(), std::move(c)).first->second;
  };
  const auto& total = count(root);
  for (const auto& n : intro) {
    const auto& inside = count(n.premise(0));
    auto get = [&](const std::unordered_map<Ident, std::size_t>& m) {
      auto it = m.find(n.eigen());
      return it == m.end() ? std::size_t{0} : it->second;
    };
    if (get(total) != get(inside))
      throw RegularityViolation(n.eigen(), "occurs outside the subproof that introduces it");
  }
}

}  // namespace

OneSidedCheck check_one_sided_full(const OneSidedProof& p, bool require_regular) {
  OneSidedCheck out;
  OneChecker checker(out);
  std::vector<int> path;
  out.end = checker.check(p, path);
  if (require_regular) check_regular(p, out);
  return out;
}

Sequent check_one_sided(const OneSidedProof& p) { return check_one_sided_full(p).end; }

// ---------------------------------------------------------------------------
// Two-sided checker

namespace {

class TwoChecker {
 public:
  explicit TwoChecker(TwoSidedCheck& out) : out_(out) {}

  const TwoSequent& check(const TwoSidedProof& p, std::vector<int>& path) {
    auto it = out_.conclusions.find(p.id());
    if (it != out_.conclusions.end()) return it->second;
    std::vector<const TwoSequent*> prem;
    for (std::size_t i = 0; i < p.premises().size(); ++i) {
      path.push_back(static_cast<int>(i));
      prem.push_back(&check(p.premise(i), path));
      path.pop_back();
    }
    TwoSequent c = conclude(p, prem, path);
    return out_.conclusions.emplace(p.id(), std::move(c)).first->second;
  }

 private:
  static std::vector<Formula> without_first(const std::vector<Formula>& v) {
    return std::vector<Formula>(v.begin() + 1, v.end());
  }
  static std::vector<Formula> cons(const Formula& a, const std::vector<Formula>& v) {
    std::vector<Formula> out{a};
    out.insert(out.end(), v.begin(), v.end());
    return out;
  }
  static std::vector<Formula> snoc(std::vector<Formula> v, const Formula& a) {
    v.push_back(a);
    return v;
  }

  TwoSequent conclude(const TwoSidedProof& p, const std::vector<const TwoSequent*>& prem,
                      const std::vector<int>& path) {
    auto need_left = [&](const TwoSequent& s, std::size_t n = 1) {
      expect(s.antecedent.size() >= n, path, rule_name(p.rule()) + " needs " + std::to_string(n) +
                                                 " antecedent formula(s)");
    };
    auto need_right = [&](const TwoSequent& s, std::size_t n = 1) {
      expect(s.succedent.size() >= n, path, rule_name(p.rule()) + " needs " + std::to_string(n) +
                                                " succedent formula(s)");
    };
    switch (p.rule()) {
      case TwoRule::Id:
        check_formula_typing(p.formula(), path);
        return TwoSequent{{p.formula()}, {p.formula()}};
      case TwoRule::OrR: {
        const TwoSequent& s = *prem[0];
        need_right(s);
        check_formula_typing(p.formula(), path);
        const Formula& a = s.succedent.front();
        Formula d = p.side() == 1 ? Formula::disj(a, p.formula()) : Formula::disj(p.formula(), a);
        return TwoSequent{s.antecedent, cons(d, without_first(s.succedent))};
      }
      case TwoRule::OrL: {
        const TwoSequent& l = *prem[0];
        const TwoSequent& r = *prem[1];
        need_left(l);
        need_left(r);
        Sequent gl{without_last(l.antecedent)}, gr{without_last(r.antecedent)};
        expect(alpha_equal(gl, gr), path, "left contexts differ: " + gl.str() + " and " + gr.str());
        expect(alpha_equal(Sequent{l.succedent}, Sequent{r.succedent}), path, "right contexts differ");
        return TwoSequent{snoc(gl.formulas, Formula::disj(l.antecedent.back(), r.antecedent.back())), l.succedent};
      }
      case TwoRule::NegR: {
        const TwoSequent& s = *prem[0];
        need_left(s);
        return TwoSequent{without_last(s.antecedent), cons(Formula::neg(s.antecedent.back()), s.succedent)};
      }
      case TwoRule::NegL: {
        const TwoSequent& s = *prem[0];
        need_right(s);
        return TwoSequent{snoc(s.antecedent, Formula::neg(s.succedent.front())), without_first(s.succedent)};
      }
      case TwoRule::ExR: {
        const TwoSequent& s = *prem[0];
        need_right(s);
        check_witness(p.witness(), path);
        expect(p.witness().is_first_order(), path, "witness " + p.witness().str() + " is not a first-order term");
        check_formula_typing(p.formula(), path);
        Formula expected = subst_formula(p.formula(), p.var(), p.witness());
        expect(alpha_equal(s.succedent.front(), expected), path,
               "premise has " + s.succedent.front().str() + ", expected " + expected.str());
        return TwoSequent{s.antecedent, cons(Formula::exists(p.var(), p.formula()), without_first(s.succedent))};
      }
      case TwoRule::ExL: {
        const TwoSequent& s = *prem[0];
        need_left(s);
        const Formula& b = s.antecedent.back();
        eigen_type_ok(b, p.eigen(), path);
        auto gamma = without_last(s.antecedent);
        if (mentions(gamma, p.eigen()) || mentions(s.succedent, p.eigen()))
          throw EigenvariableViolation(path, p.eigen());
        std::optional<Ident> var;
        if (!p.var().empty()) var = p.var();
        return TwoSequent{snoc(gamma, abstract_eigenvariable(b, p.eigen(), var, path)), s.succedent};
      }
      case TwoRule::ContrR: {
        const TwoSequent& s = *prem[0];
        need_right(s, 2);
        expect(alpha_equal(s.succedent[0], s.succedent[1]), path, "contracted formulas differ");
        return TwoSequent{s.antecedent, without_first(s.succedent)};
      }
      case TwoRule::ContrL: {
        const TwoSequent& s = *prem[0];
        need_left(s, 2);
        expect(alpha_equal(s.antecedent[s.antecedent.size() - 2], s.antecedent.back()), path,
               "contracted formulas differ");
        return TwoSequent{without_last(s.antecedent), s.succedent};
      }
      case TwoRule::WeakR:
        check_formula_typing(p.formula(), path);
        return TwoSequent{prem[0]->antecedent, cons(p.formula(), prem[0]->succedent)};
      case TwoRule::WeakL:
        check_formula_typing(p.formula(), path);
        return TwoSequent{snoc(prem[0]->antecedent, p.formula()), prem[0]->succedent};
      case TwoRule::Cut: {
        const TwoSequent& l = *prem[0];
        const TwoSequent& r = *prem[1];
        need_right(l);
        need_left(r);
        check_formula_typing(p.formula(), path);
        expect(alpha_equal(l.succedent.front(), p.formula()), path,
               "left premise has " + l.succedent.front().str() + ", expected " + p.formula().str());
        expect(alpha_equal(r.antecedent.back(), p.formula()), path,
               "right premise has " + r.antecedent.back().str() + ", expected " + p.formula().str());
        auto ant = l.antecedent;
        auto rest = without_last(r.antecedent);
        ant.insert(ant.end(), rest.begin(), rest.end());
        auto suc = without_first(l.succedent);
        suc.insert(suc.end(), r.succedent.begin(), r.succedent.end());
        return TwoSequent{ant, suc};
      }
      case TwoRule::Perm:
        return TwoSequent{checked_perm(prem[0]->antecedent, p.permutation(), path),
                          checked_perm(prem[0]->succedent, p.right_permutation(), path)};
    }
    throw RuleMismatch(path, "unknown rule");
  }

  TwoSidedCheck& out_;
};

}  // namespace

TwoSidedCheck check_two_sided_full(const TwoSidedProof& p) {
  TwoSidedCheck out;
  TwoChecker checker(out);
  std::vector<int> path;
  out.end = checker.check(p, path);
  return out;
}

TwoSequent check_two_sided(const TwoSidedProof& p) { return check_two_sided_full(p).end; }

// ---------------------------------------------------------------------------
// Eigenvariables, substitution, regularization

std::vector<Ident> eigenvariables(const OneSidedProof& p) {
  std::vector<Ident> out;
  std::function<void(const OneSidedProof&)> walk = [&](const OneSidedProof& q) {
    if (q.rule() == OneRule::NegEx) out.push_back(q.eigen());
    for (const auto& r : q.premises()) walk(r);
  };
  walk(p);
  return out;
}

std::size_t count_rule(const OneSidedProof& p, OneRule r) {
  std::size_t n = p.rule() == r ? 1 : 0;
  for (const auto& q : p.premises()) n += count_rule(q, r);
  return n;
}

namespace {

// Rebuilds p with t substituted for x in its own data, over new premises.
OneSidedProof subst_node(const OneSidedProof& p, const Ident& x, const Term& t, std::vector<OneSidedProof> prem) {
  auto f = [&](const Formula& a) { return subst_formula(a, x, t); };
  switch (p.rule()) {
    case OneRule::Lem:
      return OneSidedProof::lem(f(p.formula()));
    case OneRule::Or:
      return OneSidedProof::or_intro(p.side(), f(p.formula()), prem[0]);
    case OneRule::NegOr:
      return OneSidedProof::neg_or(prem[0], prem[1]);
    case OneRule::Ex: {
      Formula e = f(Formula::exists(p.var(), p.formula()));
      return OneSidedProof::ex(substitute(p.witness(), x, t), e.var(), e.sub(0), prem[0]);
    }
    case OneRule::NegEx: {
      std::optional<Ident> var;
      if (!p.var().empty() && !t.has_free(p.var())) var = p.var();
      return OneSidedProof::neg_ex(p.eigen(), prem[0], var);
    }
    case OneRule::Contract:
      return OneSidedProof::contract(prem[0]);
    case OneRule::Weak:
      return OneSidedProof::weak(f(p.formula()), prem[0]);
    case OneRule::NegNeg:
      return OneSidedProof::neg_neg(prem[0]);
    case OneRule::Cut:
      return OneSidedProof::cut(f(p.formula()), prem[0], prem[1]);
    case OneRule::Perm:
      return OneSidedProof::perm(p.permutation(), prem[0]);
  }
  return p;
}

// Substitutes everywhere; when `scoped`, stops at NegEx nodes that introduce x.
OneSidedProof subst_proof(const OneSidedProof& p, const Ident& x, const Term& t, bool scoped,
                          std::unordered_map<const void*, OneSidedProof>& memo) {
  if (scoped && p.rule() == OneRule::NegEx && p.eigen() == x) return p;
  auto it = memo.find(p.id());
  if (it != memo.end()) return it->second;
  std::vector<OneSidedProof> prem;
  for (const auto& q : p.premises()) prem.push_back(subst_proof(q, x, t, scoped, memo));
  OneSidedProof out = subst_node(p, x, t, std::move(prem));
  memo.emplace(p.id(), out);
  return out;
}

}  // namespace

OneSidedProof proof_subst(const OneSidedProof& p, const Ident& alpha, const Term& t) {
  auto eig = eigenvariables(p);
  if (std::find(eig.begin(), eig.end(), alpha) != eig.end()) throw CaptureRisk(alpha);
  std::unordered_map<const void*, OneSidedProof> memo;
  return subst_proof(p, alpha, t, false, memo);
}

OneSidedProof regularize(const OneSidedProof& p) {
  OneSidedCheck chk = check_one_sided_full(p, false);

  // Every name mentioned anywhere, and the names mentioned outside the scope of
  // a NegEx introducing them.
  std::set<Ident> all;
  std::set<Ident> claimed;
  std::vector<Ident> scope;
  std::function<void(const OneSidedProof&)> scan = [&](const OneSidedProof& q) {
    std::vector<const FreeVarSet*> sets;
    for (const auto& f : chk.conclusion(q).formulas) sets.push_back(&f.free_vars());
    if (q.rule() == OneRule::Ex) sets.push_back(&q.witness().free_vars());
    for (const auto* s : sets)
      for (const auto& v : *s) {
        all.insert(v.name);
        if (std::find(scope.begin(), scope.end(), v.name) == scope.end()) claimed.insert(v.name);
      }
    if (q.rule() == OneRule::NegEx) {
      all.insert(q.eigen());
      scope.push_back(q.eigen());
    }
    for (const auto& r : q.premises()) scan(r);
    if (q.rule() == OneRule::NegEx) scope.pop_back();
  };
  scan(p);

  std::function<OneSidedProof(const OneSidedProof&)> walk = [&](const OneSidedProof& q) -> OneSidedProof {
    if (q.rule() == OneRule::NegEx) {
      Ident alpha = q.eigen();
      OneSidedProof prem = q.premise(0);
      if (claimed.count(alpha)) {
        Ident fresh = fresh_name(alpha, [&](const Ident& n) { return all.count(n) || claimed.count(n); });
        std::unordered_map<const void*, OneSidedProof> memo;
        prem = subst_proof(prem, alpha, Term::ivar(fresh), true, memo);
        all.insert(fresh);
        alpha = fresh;
      }
      claimed.insert(alpha);
      std::optional<Ident> var;
      if (!q.var().empty()) var = q.var();
      OneSidedProof r = walk(prem);
      if (alpha == q.eigen() && r.id() == q.premise(0).id()) return q;
      return OneSidedProof::neg_ex(alpha, r, var);
    }
    std::vector<OneSidedProof> prem;
    bool changed = false;
    for (const auto& r : q.premises()) {
      prem.push_back(walk(r));
      changed |= prem.back().id() != r.id();
    }
    if (!changed) return q;
    return subst_node(q, "", Term::epsilon(), std::move(prem));
  };
  return walk(p);
}

}  // namespace hfi
