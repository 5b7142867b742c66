#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "hfi/calculus.hpp"
#include "hfi/kernel.hpp"
#include "hfi/term.hpp"

namespace hfi {

/// Splits Case nodes in atom arguments and equation sides into explicit case
/// distinctions until none remain outside binders. Expects closed, normalized
/// terms; throws NonClosedTerm otherwise.
Proposition eliminate_cases(const Proposition& p);

/// Key of an atom for propositional reasoning: predicate and normalized arguments.
std::string atom_key(const Proposition& atom, std::size_t fuel = kDefaultFuel);

struct TautologyResult {
  bool valid = false;
  /// Number of propositional variables after merging convertible atoms.
  std::size_t keys = 0;
  /// A falsifying assignment (atom key, truth value) when !valid.
  std::vector<std::pair<std::string, bool>> counterexample;
  /// "truth-table" or "splitting".
  std::string method;
};

/// Decides whether p is a propositional tautology over its atom keys, with
/// convertible equations read as true and other equations as unknowns.
TautologyResult tautology_check(const Proposition& p, std::size_t fuel = kDefaultFuel);
bool tautology(const Proposition& p, std::size_t fuel = kDefaultFuel);

struct SoundnessReport {
  bool sound = false;
  /// ⋁ W(A_i, F_i(args), args_i) before normalization.
  Proposition disjunction = Proposition::eq(Term::epsilon(), Term::epsilon());
  /// After deep normalization and case elimination.
  Proposition eliminated = Proposition::eq(Term::epsilon(), Term::epsilon());
  TautologyResult tautology;
  std::size_t steps = 0;
};

/// Runs the soundness pipeline for a checked regular proof with closed end
/// sequent and closed counter-evidence args[i] : ⟨A_i⟩.
SoundnessReport check_soundness_report(const OneSidedProof& p, const std::vector<Term>& args,
                                       const Ident& base_constant = "c", std::size_t fuel = kDefaultFuel);
bool check_soundness(const OneSidedProof& p, const std::vector<Term>& args, const Ident& base_constant = "c");

}  // namespace hfi
