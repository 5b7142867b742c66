#include "hfi/herbrand.hpp"

#include <set>

#include "hfi/error.hpp"
#include "hfi/interpretation.hpp"

namespace hfi {

namespace {

void collect(const Term& u, std::vector<Term>& out) {
  if (u.is(TermKind::Case)) {
    collect(u.child(0), out);
    collect(u.child(1), out);
    return;
  }
  if (!u.is(TermKind::Pair)) throw MalformedNormalForm(u.str());
  const Term& t = u.child(0);
  if (t.is(TermKind::Case)) {
    collect(Term::pair(t.child(0), u.child(1)), out);
    collect(Term::pair(t.child(1), u.child(1)), out);
    return;
  }
  if (!t.is_first_order() || !t.is_closed()) throw MalformedNormalForm(t.str());
  out.push_back(t);
}

}  // namespace

std::vector<Term> read_off(const Term& u) {
  std::vector<Term> out;
  collect(u, out);
  return out;
}

HerbrandResult extract(const OneSidedProof& p, const std::optional<Term>& counter, const Ident& base_constant,
                       std::size_t fuel) {
  TransformerEnv env(p, base_constant);
  const Sequent& end = env.end_sequent();
  if (end.size() != 1) throw NotHerbrandGoal("end sequent has " + std::to_string(end.size()) + " formulas");
  const Formula& goal = end[0];
  if (!goal.is(FormulaKind::Exists)) throw NotHerbrandGoal(goal.str() + " is not existential");
  if (!goal.is_closed()) throw NotHerbrandGoal(goal.str() + " is not closed");
  const Formula& matrix = goal.sub(0);
  if (!is_quantifier_free(matrix)) throw NotHerbrandGoal("matrix of " + goal.str() + " has quantifiers");

  Term v = counter ? *counter
                   : Term::abs("z", evidence_type(goal), canonical_evidence(Formula::neg(matrix), base_constant));
  Normalized u = normalize_counted(env.transform(1, {v}), fuel);

  HerbrandResult r;
  r.realizer = u.term;
  r.steps = u.steps;
  std::set<std::string> seen;
  for (const auto& t : read_off(u.term))
    if (seen.insert(canonical_string(t)).second) r.witnesses.push_back(t);

  std::vector<Proposition> parts;
  for (const auto& t : r.witnesses) parts.push_back(to_proposition(subst_formula(matrix, goal.var(), t)));
  r.disjunction = disjunction(parts);
  r.tautology = tautology_check(r.disjunction, fuel);
  r.verified = r.tautology.valid;
  return r;
}

}  // namespace hfi
