#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "hfi/calculus.hpp"
#include "hfi/logic.hpp"
#include "hfi/term.hpp"

// Seed-deterministic random generators for the property suites.
namespace hfi::gen {

using Rng = std::mt19937_64;

/// Signature shared by all generators: c, d; f/1, g/2; P/1, Q/1, R/2.
const Signature& signature();

/// Height of a term (leaves have height 1); Case conditions are not counted.
std::size_t term_depth(const Term& t);

/// Random type with at most `depth` nested constructors.
SimpleType random_type(Rng& rng, int depth);

/// Calls `visit` on every type with at most `max_constructors` × and → nodes
/// over the leaves ι and □. Returns the number visited.
std::size_t enumerate_types(int max_constructors, const std::function<void(const SimpleType&)>& visit);

/// A well-typed closed term of height at most `max_depth`, biased towards redexes.
Term random_closed_term(Rng& rng, int max_depth);

/// A closed term of the given type of height at most roughly `depth`, whose
/// bodies use their bound variables. With `free_iota` nonempty, ι leaves may
/// be that free variable.
Term random_inhabitant(Rng& rng, const SimpleType& type, int depth, const Ident& free_iota = "");

/// Random closed first-order term of height at most `depth`.
Term random_fo_term(Rng& rng, int depth, const std::vector<Ident>& vars = {});

/// Random formula over the generator signature. `vars` are the free individual
/// variables that may occur.
Formula random_formula(Rng& rng, int depth, const std::vector<Ident>& vars = {}, bool quantifiers = true);

struct ProofOptions {
  int steps = 8;             // rule applications on top of the axioms
  int formula_depth = 2;
  bool closed = true;        // substitute constants for leftover free variables
  bool l_plus_witnesses = true;
};

/// A checked, regular one-sided proof.
OneSidedProof random_one_sided(Rng& rng, const ProofOptions& opt = {});

/// A one-sided proof together with a free variable of its end sequent.
struct OpenProof {
  OneSidedProof proof;
  Ident free_var;  // empty if the end sequent is closed
};
OpenProof random_open_one_sided(Rng& rng, const ProofOptions& opt = {});

/// A checked G1c proof.
TwoSidedProof random_two_sided(Rng& rng, int steps = 8);

/// One-sided proof of [∃x A] with A quantifier-free and closed ∃x A.
OneSidedProof random_exists_goal(Rng& rng);

/// Proof of a sequent of quantifier-free formulas that is a propositional
/// tautology, found by backward search. Returns nullopt if not provable.
std::optional<OneSidedProof> prove_propositional(const Sequent& s);

/// Random Case-free or Case-containing proposition whose atoms come from a
/// pool of four closed atoms (P c, P f(c), Q c, Q f(c)).
Proposition random_proposition(Rng& rng, int depth, bool with_cases);

/// Atom pool used by random_proposition.
const std::vector<Proposition>& atom_pool();

}  // namespace hfi::gen
