#pragma once

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hfi/term.hpp"

namespace hfi {

class Formula;

/// Constants, function symbols and predicate symbols with their arities.
class Signature {
 public:
  std::vector<Ident> constants;
  std::vector<std::pair<Ident, int>> functions;
  std::vector<std::pair<Ident, int>> predicates;

  /// The standard signature used by examples and generators: c, d; f/1, g/2; P/1, Q/1, R/2.
  static Signature standard();

  /// Throws Error unless there is a constant, a unary predicate, and names are unique.
  void validate() const;

  const Ident& designated_constant() const;
  bool is_constant(const Ident& name) const;
  std::optional<int> function_arity(const Ident& name) const;
  std::optional<int> predicate_arity(const Ident& name) const;

  /// Arity and typing check for a formula over this signature.
  void check(const Formula& a) const;
  void check(const Term& t) const;
};

enum class FormulaKind : std::uint8_t { Atom, Or, Not, Exists };

namespace detail {
struct FormulaNode;
}

/// First-order formulas over ∨, ¬, ∃ whose atom arguments are ι-typed L⁺-terms.
class Formula {
 public:
  static Formula atom(Ident pred, std::vector<Term> args);
  static Formula disj(Formula left, Formula right);
  static Formula neg(Formula body);
  static Formula exists(Ident var, Formula body);

  FormulaKind kind() const;
  bool is(FormulaKind k) const { return kind() == k; }
  const Ident& pred() const;
  const std::vector<Term>& args() const;
  /// Bound variable of an Exists.
  const Ident& var() const;
  /// Or (left, right) / Not (body) / Exists (body).
  const std::vector<Formula>& subs() const;
  const Formula& sub(std::size_t i) const { return subs()[i]; }

  /// Free variables of the embedded terms, excluding ∃-bound ones.
  const FreeVarSet& free_vars() const;
  bool has_free(const Ident& name) const;
  bool is_closed() const { return free_vars().empty(); }
  std::size_t size() const;

  const void* id() const { return node_.get(); }
  bool same(const Formula& o) const { return node_ == o.node_; }

  std::string str() const;

 private:
  explicit Formula(std::shared_ptr<const detail::FormulaNode> n) : node_(std::move(n)) {}
  std::shared_ptr<const detail::FormulaNode> node_;
};

bool alpha_equal(const Formula& a, const Formula& b);
std::string canonical_string(const Formula& a);

/// Capture-avoiding A[t/x].
Formula subst_formula(const Formula& a, const Ident& x, const Term& t);
std::set<Ident> free_individual_vars(const Formula& a);
bool is_quantifier_free(const Formula& a);

/// The proposition denoted by a quantifier-free formula.
Proposition to_proposition(const Formula& a);

/// Occurrence-indexed list of formulas.
struct Sequent {
  std::vector<Formula> formulas;

  std::size_t size() const { return formulas.size(); }
  const Formula& operator[](std::size_t i) const { return formulas[i]; }
  std::string str() const;
};

bool alpha_equal(const Sequent& a, const Sequent& b);
Sequent subst_sequent(const Sequent& s, const Ident& x, const Term& t);

std::ostream& operator<<(std::ostream& os, const Formula& a);

namespace detail {

struct FormulaNode {
  FormulaKind kind;
  Ident name;  // predicate or bound variable
  std::vector<Term> args;
  std::vector<Formula> subs;
  FreeVarSet fv;
  std::size_t size = 1;
};

}  // namespace detail

}  // namespace hfi
