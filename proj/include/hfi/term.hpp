#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "hfi/type.hpp"

namespace hfi {

using Ident = std::string;

/// A free variable occurrence: its name and its annotated type.
struct FreeVar {
  Ident name;
  SimpleType type;
  friend bool operator==(const FreeVar& a, const FreeVar& b) { return a.name == b.name && a.type == b.type; }
};

/// Sorted by name, then by type hash; at most one entry per (name, type).
using FreeVarSet = std::vector<FreeVar>;

enum class TermKind : std::uint8_t { Epsilon, Const, Var, Fun, Pair, Proj, Abs, App, Case };
enum class PropKind : std::uint8_t { Atom, Or, Not, Eq };

class Proposition;

namespace detail {
struct TermNode;
struct PropNode;
}  // namespace detail

/// An L⁺-term. Immutable, shared, cheap to copy.
///
/// First-order L-terms are the Const / Var(ι) / Fun fragment. Function symbols
/// accept arbitrary ι-typed L⁺ arguments so that W[∃xA] can substitute π₁(u)
/// under them.
class Term {
 public:
  static Term epsilon();
  static Term constant(Ident name);
  static Term var(Ident name, SimpleType type);
  static Term ivar(Ident name) { return var(std::move(name), SimpleType::iota()); }
  static Term fun(Ident name, std::vector<Term> args);
  static Term pair(Term fst, Term snd);
  static Term proj(int index, Term arg);
  static Term abs(Ident var, SimpleType var_type, Term body);
  static Term app(Term fun, Term arg);
  static Term case_of(Proposition condition, Term then_branch, Term else_branch);

  TermKind kind() const;
  bool is(TermKind k) const { return kind() == k; }

  /// Constant / variable / function-symbol / bound-variable name.
  const Ident& name() const;
  /// Var annotation or Abs binder type.
  const SimpleType& var_type() const;
  /// Projection index (1 or 2).
  int index() const;
  /// Fun arguments; Pair (fst, snd); Proj (arg); Abs (body); App (fun, arg); Case (then, else).
  const std::vector<Term>& children() const;
  const Term& child(std::size_t i) const { return children()[i]; }
  const Proposition& condition() const;

  const FreeVarSet& free_vars() const;
  bool is_closed() const { return free_vars().empty(); }
  bool has_free(const Ident& name) const;
  /// True for L-terms: constants, ι-variables, function symbols over L-terms.
  bool is_first_order() const;
  std::size_t size() const;

  const void* id() const { return node_.get(); }
  bool same(const Term& other) const { return node_ == other.node_; }

  /// Cached reduction status: 0 unknown, 1 normal, 2 has a redex.
  std::uint8_t normal_flag() const;
  void set_normal_flag(std::uint8_t f) const;

  std::string str() const;

 private:
  friend class Proposition;
  explicit Term(std::shared_ptr<const detail::TermNode> n) : node_(std::move(n)) {}
  std::shared_ptr<const detail::TermNode> node_;
};

/// Quantifier-free propositions: R(t⃗) | A ∨ B | ¬A | u ≡ v.
class Proposition {
 public:
  static Proposition atom(Ident pred, std::vector<Term> args);
  static Proposition disj(Proposition left, Proposition right);
  static Proposition neg(Proposition body);
  static Proposition eq(Term left, Term right);

  PropKind kind() const;
  bool is(PropKind k) const { return kind() == k; }
  const Ident& pred() const;
  /// Atom arguments, or the two sides of an equation.
  const std::vector<Term>& terms() const;
  /// Or (left, right) / Not (body).
  const std::vector<Proposition>& subs() const;
  const Proposition& sub(std::size_t i) const { return subs()[i]; }

  const FreeVarSet& free_vars() const;
  bool is_closed() const { return free_vars().empty(); }
  bool has_free(const Ident& name) const;
  std::size_t size() const;

  const void* id() const { return node_.get(); }
  bool same(const Proposition& other) const { return node_ == other.node_; }

  std::string str() const;

 private:
  friend class Term;
  explicit Proposition(std::shared_ptr<const detail::PropNode> n) : node_(std::move(n)) {}
  std::shared_ptr<const detail::PropNode> node_;
};

// Derived connectives (display sugar over ∨ and ¬).
Proposition conj(const Proposition& a, const Proposition& b);
Proposition implies(const Proposition& a, const Proposition& b);
Proposition disjunction(const std::vector<Proposition>& parts);

/// Alpha-equivalence (bound variables compared by binding position).
bool alpha_equal(const Term& a, const Term& b);
bool alpha_equal(const Proposition& a, const Proposition& b);

/// Printing with binders renamed to canonical names; equal strings iff alpha-equal.
std::string canonical_string(const Term& t);
std::string canonical_string(const Proposition& p);

FreeVarSet merge_free_vars(const FreeVarSet& a, const FreeVarSet& b);
FreeVarSet remove_free_var(const FreeVarSet& s, const Ident& name);
bool contains_name(const FreeVarSet& s, const Ident& name);

/// First name of the form base, base1, base2, … for which taken(name) is false.
template <typename Pred>
Ident fresh_name(const Ident& base, Pred taken) {
  Ident stem = base;
  while (!stem.empty() && stem.back() >= '0' && stem.back() <= '9') stem.pop_back();
  if (stem.empty()) stem = "v";
  if (!taken(base)) return base;
  for (std::size_t k = 1;; ++k) {
    Ident candidate = stem + std::to_string(k);
    if (!taken(candidate)) return candidate;
  }
}

std::ostream& operator<<(std::ostream& os, const Term& t);
std::ostream& operator<<(std::ostream& os, const Proposition& p);

namespace detail {

struct TermNode {
  TermKind kind;
  Ident name;
  SimpleType type;
  int index = 0;
  std::vector<Term> kids;
  std::vector<Proposition> cond;  // size 1 for Case
  FreeVarSet fv;
  std::size_t size = 1;
  mutable std::atomic<std::uint8_t> normal{0};
};

struct PropNode {
  PropKind kind;
  Ident pred;
  std::vector<Term> terms;
  std::vector<Proposition> subs;
  FreeVarSet fv;
  std::size_t size = 1;
};

}  // namespace detail

}  // namespace hfi
