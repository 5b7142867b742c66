#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hfi/calculus.hpp"
#include "hfi/kernel.hpp"
#include "hfi/logic.hpp"

namespace hfi {

/// [A]: the type of evidence for A.
SimpleType evidence_type(const Formula& a);
/// ⟨A⟩: the type of counter-evidence for A.
SimpleType counter_type(const Formula& a);

/// E_A, the canonical closed inhabitant of [A].
Term canonical_evidence(const Formula& a, const Ident& base_constant = "c");

/// W[A](u, v). Throws TypeError unless u : [A] and v : ⟨A⟩.
Proposition winning(const Formula& a, const Term& u, const Term& v);

/// Canonical counter-evidence for each occurrence of a sequent.
std::vector<Term> canonical_args(const Sequent& s, const Ident& base_constant = "c");

/// State for computing the term transformers F^p_i of one checked, regular proof.
class TransformerEnv {
 public:
  explicit TransformerEnv(OneSidedProof proof, Ident base_constant = "c");

  const OneSidedProof& proof() const { return proof_; }
  const Sequent& end_sequent() const { return check_.end; }
  const OneSidedCheck& check() const { return check_; }

  /// F^p_i(args) for 1 ≤ i ≤ n, with args[j] : ⟨A_j⟩.
  /// Throws IndexOutOfRange or TypeError on bad input.
  Term transform(std::size_t i, const std::vector<Term>& args);

 private:
  struct Frame {
    std::optional<OneSidedProof> node;  // keeps the key's pointer alive
    std::vector<Term> args;             // placeholder variables
    std::map<std::string, Term> shared;
    std::vector<std::optional<Term>> results;
  };

  Term apply(const OneSidedProof& p, std::size_t i, const std::vector<Term>& args);
  Term compute(const OneSidedProof& p, std::size_t i, const std::vector<Term>& args, Frame& frame);
  Frame& frame_for(const OneSidedProof& p);
  Ident fresh(const std::string& base);

  OneSidedProof proof_;
  Ident base_constant_;
  OneSidedCheck check_;
  std::set<Ident> taken_;
  std::size_t counter_ = 0;
  std::map<const void*, Frame> frames_;
};

/// Convenience wrapper: a fresh environment per call.
Term transform(const OneSidedProof& p, std::size_t i, const std::vector<Term>& args,
               const Ident& base_constant = "c");

}  // namespace hfi
