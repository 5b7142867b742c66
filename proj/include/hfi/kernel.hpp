#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "hfi/term.hpp"
#include "hfi/type.hpp"

namespace hfi {

/// Default normalization fuse. Exceeding it signals a kernel bug.
inline constexpr std::size_t kDefaultFuel = 1'000'000;

/// Ordered bindings; lookups resolve the innermost (last) binding first.
class TypingContext {
 public:
  TypingContext() = default;
  TypingContext(std::initializer_list<std::pair<Ident, SimpleType>> init) : bindings_(init) {}

  TypingContext bind(const Ident& name, const SimpleType& type) const;
  std::optional<SimpleType> lookup(const Ident& name) const;
  bool empty() const { return bindings_.empty(); }

 private:
  std::vector<std::pair<Ident, SimpleType>> bindings_;
};

/// The unique type of t under ctx. Throws TypeError or UnboundVariable.
SimpleType typecheck(const TypingContext& ctx, const Term& t);
/// Well-formedness of a proposition under ctx (atom arguments ι, equation sides of equal type).
void check_proposition(const TypingContext& ctx, const Proposition& p);
/// Type of t, taking free variables at their annotated types.
SimpleType infer_type(const Term& t);

/// Capture-avoiding t[s/x]. Descends into Case conditions.
Term substitute(const Term& t, const Ident& x, const Term& s);
Proposition substitute(const Proposition& p, const Ident& x, const Term& s);

/// One leftmost-outermost reduction step, or nullopt for a normal form.
std::optional<Term> step(const Term& t);
bool is_normal(const Term& t);

struct Normalized {
  Term term;
  // Rewrites actually performed; a shared subterm is reduced once. The fuel
  // bounds this count.
  std::size_t steps = 0;
};

/// Leftmost-outermost normalization. Case conditions are left untouched.
Normalized normalize_counted(const Term& t, std::size_t fuel = kDefaultFuel);
Term normalize(const Term& t, std::size_t fuel = kDefaultFuel);

/// Normalizes a term and, recursively, every term inside its Case conditions.
Normalized normalize_deep(const Term& t, std::size_t fuel = kDefaultFuel);
/// Normalizes every term embedded in p, including inside Case conditions.
std::pair<Proposition, std::size_t> normalize_deep(const Proposition& p, std::size_t fuel = kDefaultFuel);

/// True iff u and v have alpha-equal normal forms.
bool convertible(const Term& u, const Term& v, std::size_t fuel = kDefaultFuel);

/// Canonical closed inhabitant: □ ↦ ε, ι ↦ c, U×V ↦ ⟨·,·⟩, U→V ↦ λz.·
Term inhabitant(const SimpleType& type, const Ident& base_constant = "c");

}  // namespace hfi
