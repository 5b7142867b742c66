#pragma once

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "hfi/logic.hpp"

namespace hfi {

enum class OneRule : std::uint8_t { Lem, Or, NegOr, Ex, NegEx, Contract, Weak, NegNeg, Cut, Perm };
enum class TwoRule : std::uint8_t { Id, OrR, OrL, NegR, NegL, ExR, ExL, ContrR, ContrL, WeakR, WeakL, Cut, Perm };

std::string rule_name(OneRule r);
std::string rule_name(TwoRule r);

namespace detail {
template <typename Rule, typename Self>
struct ProofNode;
}

/// Proof in the one-sided calculus. Principal formulas are last in every list:
///   lem            ⊢ ¬A, A
///   or(i, other)   Γ, A_i             ⊢ Γ, A₁ ∨ A₂
///   nor            Γ, ¬A  and  Δ, ¬B  ⊢ Γ, Δ, ¬(A ∨ B)
///   ex(t, x, A)    Γ, A[t/x]          ⊢ Γ, ∃x A
///   nex(α)         Γ, ¬A[α/x]         ⊢ Γ, ¬∃x A
///   contr          Γ, A, A            ⊢ Γ, A
///   weak(A)        Γ                  ⊢ Γ, A
///   nn             Γ, A               ⊢ Γ, ¬¬A
///   cut(A)         Γ, A  and  Δ, ¬A   ⊢ Γ, Δ
///   perm(π)        conclusion[j] = premise[π(j)]   (1-based)
class OneSidedProof {
 public:
  static OneSidedProof lem(Formula a);
  static OneSidedProof or_intro(int side, Formula other, OneSidedProof premise);
  static OneSidedProof neg_or(OneSidedProof left, OneSidedProof right);
  static OneSidedProof ex(Term witness, Ident var, Formula matrix, OneSidedProof premise);
  /// The conclusion's bound variable is `var` when given, otherwise chosen fresh.
  static OneSidedProof neg_ex(Ident eigen, OneSidedProof premise, std::optional<Ident> var = std::nullopt);
  static OneSidedProof contract(OneSidedProof premise);
  static OneSidedProof weak(Formula a, OneSidedProof premise);
  static OneSidedProof neg_neg(OneSidedProof premise);
  static OneSidedProof cut(Formula a, OneSidedProof left, OneSidedProof right);
  static OneSidedProof perm(std::vector<std::size_t> permutation, OneSidedProof premise);

  OneRule rule() const;
  /// Lem / Weak / Cut formula, Or's other disjunct, Ex matrix.
  const Formula& formula() const;
  int side() const;
  const Term& witness() const;
  /// Ex bound variable, or NegEx's requested bound variable (empty if unset).
  const Ident& var() const;
  const Ident& eigen() const;
  const std::vector<std::size_t>& permutation() const;
  const std::vector<OneSidedProof>& premises() const;
  const OneSidedProof& premise(std::size_t i) const { return premises()[i]; }

  /// Number of nodes, counting shared subproofs once per occurrence.
  std::size_t size() const;
  const void* id() const { return node_.get(); }

 private:
  using Node = detail::ProofNode<OneRule, OneSidedProof>;
  explicit OneSidedProof(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// Two-sided sequent Γ ⊢ Δ.
struct TwoSequent {
  std::vector<Formula> antecedent;
  std::vector<Formula> succedent;
  std::string str() const;
};

bool alpha_equal(const TwoSequent& a, const TwoSequent& b);

/// Proof in G1c restricted to ∨, ¬, ∃. Antecedent principal formulas are last,
/// succedent principal formulas first:
///   id             A ⊢ A
///   orR(i, other)  Γ ⊢ A_i, Δ                    gives Γ ⊢ A₁ ∨ A₂, Δ
///   orL            Γ, A ⊢ Δ  and  Γ, B ⊢ Δ       gives Γ, A ∨ B ⊢ Δ
///   negR           Γ, A ⊢ Δ                      gives Γ ⊢ ¬A, Δ
///   negL           Γ ⊢ A, Δ                      gives Γ, ¬A ⊢ Δ
///   exR(t, x, A)   Γ ⊢ A[t/x], Δ                 gives Γ ⊢ ∃x A, Δ
///   exL(α)         Γ, A[α/x] ⊢ Δ                 gives Γ, ∃x A ⊢ Δ
///   contrR/L, weakR/L(A) likewise
///   cut(A)         Γ₁ ⊢ A, Δ₁  and  Γ₂, A ⊢ Δ₂   gives Γ₁, Γ₂ ⊢ Δ₁, Δ₂
///   perm(πl, πr)   permutes each side as in the one-sided calculus
class TwoSidedProof {
 public:
  static TwoSidedProof id(Formula a);
  static TwoSidedProof or_right(int side, Formula other, TwoSidedProof premise);
  static TwoSidedProof or_left(TwoSidedProof left, TwoSidedProof right);
  static TwoSidedProof neg_right(TwoSidedProof premise);
  static TwoSidedProof neg_left(TwoSidedProof premise);
  static TwoSidedProof ex_right(Term witness, Ident var, Formula matrix, TwoSidedProof premise);
  static TwoSidedProof ex_left(Ident eigen, TwoSidedProof premise, std::optional<Ident> var = std::nullopt);
  static TwoSidedProof contract_right(TwoSidedProof premise);
  static TwoSidedProof contract_left(TwoSidedProof premise);
  static TwoSidedProof weak_right(Formula a, TwoSidedProof premise);
  static TwoSidedProof weak_left(Formula a, TwoSidedProof premise);
  static TwoSidedProof cut(Formula a, TwoSidedProof left, TwoSidedProof right);
  static TwoSidedProof perm(std::vector<std::size_t> left_perm, std::vector<std::size_t> right_perm,
                            TwoSidedProof premise);

  TwoRule rule() const;
  const Formula& formula() const;
  int side() const;
  const Term& witness() const;
  const Ident& var() const;
  const Ident& eigen() const;
  const std::vector<std::size_t>& permutation() const;
  const std::vector<std::size_t>& right_permutation() const;
  const std::vector<TwoSidedProof>& premises() const;
  const TwoSidedProof& premise(std::size_t i) const { return premises()[i]; }

  std::size_t size() const;
  const void* id() const { return node_.get(); }

 private:
  using Node = detail::ProofNode<TwoRule, TwoSidedProof>;
  explicit TwoSidedProof(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// Result of checking a one-sided proof: the end sequent plus the conclusion of
/// every subproof (keyed by node identity).
struct OneSidedCheck {
  Sequent end;
  std::unordered_map<const void*, Sequent> conclusions;
  std::set<Ident> eigenvariables;

  const Sequent& conclusion(const OneSidedProof& p) const { return conclusions.at(p.id()); }
};

struct TwoSidedCheck {
  TwoSequent end;
  std::unordered_map<const void*, TwoSequent> conclusions;

  const TwoSequent& conclusion(const TwoSidedProof& p) const { return conclusions.at(p.id()); }
};

/// Checks every rule instance, eigenvariable conditions and regularity.
/// Throws RuleMismatch, EigenvariableViolation, RegularityViolation.
OneSidedCheck check_one_sided_full(const OneSidedProof& p, bool require_regular = true);
Sequent check_one_sided(const OneSidedProof& p);

TwoSidedCheck check_two_sided_full(const TwoSidedProof& p);
TwoSequent check_two_sided(const TwoSidedProof& p);

/// ∃x A with A[α/x] = body, abstracting every free α. `var` is used when given
/// (RuleMismatch if it would capture), otherwise a name not free in body.
Formula abstract_eigenvariable(const Formula& body, const Ident& alpha, const std::optional<Ident>& var,
                               const std::vector<int>& path = {});

/// All eigenvariables introduced by NegEx nodes, with repetitions.
std::vector<Ident> eigenvariables(const OneSidedProof& p);

/// p[t/α]: substitutes into every formula and witness. Throws CaptureRisk when α
/// is an eigenvariable of p.
OneSidedProof proof_subst(const OneSidedProof& p, const Ident& alpha, const Term& t);

/// Renames eigenvariables so that each is introduced once and used only above
/// its introduction. Identity on regular proofs.
OneSidedProof regularize(const OneSidedProof& p);

/// The translation τ followed by regularize. End sequent is ¬Γ, Δ.
OneSidedProof translate(const TwoSidedProof& p);

/// Count of nodes with the given rule.
std::size_t count_rule(const OneSidedProof& p, OneRule r);

namespace detail {

template <typename Rule, typename Self>
struct ProofNode {
  Rule rule;
  std::optional<Formula> formula;
  int side = 0;
  std::optional<Term> witness;
  Ident var;
  Ident eigen;
  std::vector<std::size_t> perm;
  std::vector<std::size_t> perm_right;
  std::vector<Self> premises;
  std::size_t size = 1;
};

}  // namespace detail

}  // namespace hfi
