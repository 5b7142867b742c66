#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hfi/calculus.hpp"
#include "hfi/kernel.hpp"
#include "hfi/verifier.hpp"

namespace hfi {

struct HerbrandResult {
  /// Closed first-order witnesses, duplicates removed, in first-seen order.
  std::vector<Term> witnesses;
  /// A[t₁/x] ∨ … ∨ A[tₙ/x]
  Proposition disjunction = Proposition::eq(Term::epsilon(), Term::epsilon());
  /// Normal form of the realizer F₁(v).
  Term realizer = Term::epsilon();
  bool verified = false;
  std::size_t steps = 0;
  TautologyResult tautology;
};

/// Witness terms of a closed normal term of type [∃xA]. Throws MalformedNormalForm.
std::vector<Term> read_off(const Term& u);

/// Herbrand disjunction for a proof of [∃xA] with A quantifier-free.
/// `counter` replaces the default counter-evidence λz.E_{¬A} when given.
HerbrandResult extract(const OneSidedProof& p, const std::optional<Term>& counter = std::nullopt,
                       const Ident& base_constant = "c", std::size_t fuel = kDefaultFuel);

}  // namespace hfi
