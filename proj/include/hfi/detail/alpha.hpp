#pragma once

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hfi/term.hpp"

namespace hfi::detail {

/// Parallel binder stacks for alpha-comparison.
struct AlphaEnv {
  std::vector<Ident> left;
  std::vector<Ident> right;

  // Results per node pair and the binder levels their free names resolve to;
  // nothing else matters. Keeps comparison of shared DAGs polynomial.
  struct Key {
    const void* a;
    const void* b;
    std::vector<long> levels;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      std::size_t h = std::hash<const void*>{}(k.a) * 31 + std::hash<const void*>{}(k.b);
      for (long l : k.levels) h = h * 1000003 + static_cast<std::size_t>(l + 1);
      return h;
    }
  };
  std::unordered_map<Key, bool, KeyHash> memo;

  static long resolve(const std::vector<Ident>& stack, const Ident& name) {
    for (std::size_t i = stack.size(); i-- > 0;)
      if (stack[i] == name) return static_cast<long>(i);
    return -1;
  }

  bool same_variable(const Ident& a, const Ident& b) const {
    long ia = resolve(left, a);
    long ib = resolve(right, b);
    if (ia != ib) return false;
    return ia >= 0 || a == b;
  }

  /// Shared node under both stacks: equal iff every free name resolves identically.
  bool shared_ok(const FreeVarSet& fv) const {
    for (const auto& v : fv)
      if (!same_variable(v.name, v.name)) return false;
    return true;
  }
};

bool alpha_eq(const Term& a, const Term& b, AlphaEnv& env);
bool alpha_eq(const Proposition& a, const Proposition& b, AlphaEnv& env);

/// Prints t; in canonical mode names found in `bound` are shown by their mapped names.
std::string print_term(const Term& t, bool canonical, std::vector<std::pair<Ident, std::string>>& bound);

}  // namespace hfi::detail
