#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hfi/calculus.hpp"
#include "hfi/syntax.hpp"

// Property suites over generated inputs. Each suite counts cases and failures;
// exceptions inside a case count as failures.
namespace hfi::props {

struct Outcome {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::vector<std::string> notes;  // first few failure messages
  bool passed() const { return cases > 0 && failures == 0; }
};

struct CorpusEntry {
  std::string name;
  ProofFile file;
};
using Corpus = std::vector<CorpusEntry>;

/// Parses every *.prf file in dir, sorted by name.
Corpus load_corpus(const std::string& dir);

/// One-sided view of every corpus proof (two-sided ones are translated).
std::vector<std::pair<std::string, OneSidedProof>> one_sided_proofs(const Corpus& corpus);

// Independent oracles.

/// Closed normal form shape check: Case, or ε / first-order term / pair /
/// abstraction according to the type.
bool normal_shape_ok(const Term& t, const SimpleType& type);

/// Truth value of a proposition whose atoms evaluate to keys in sigma,
/// computing Case nodes by evaluating their conditions first. Uses its own
/// small evaluator for terms, not the kernel. nullopt if an atom is not in sigma
/// or a term does not evaluate.
std::optional<bool> eval_with_cases(const Proposition& p, const std::map<std::string, bool>& sigma);

/// All 2^n assignments to the given atom keys.
std::vector<std::map<std::string, bool>> assignments(const std::vector<std::string>& keys);

/// Keys of the generator's atom pool, as eval_with_cases names them.
std::vector<std::string> pool_keys();

// Suites.
Outcome kernel_soundness(std::uint64_t seed, std::size_t count);
Outcome inhabitation(int max_constructors);
Outcome transformer_typing(const Corpus& corpus, std::uint64_t seed, std::size_t count);
Outcome substitution_lemma(std::uint64_t seed, std::size_t count);
Outcome soundness(const Corpus& corpus, std::uint64_t seed, std::size_t count, std::size_t alternatives);
Outcome herbrand_generated(std::uint64_t seed, std::size_t count);
Outcome herbrand_choice(std::uint64_t seed, std::size_t count);
Outcome witness_bound(std::uint64_t seed, std::size_t count);
Outcome verifier_oracle(std::uint64_t seed, std::size_t count);
Outcome translation(std::uint64_t seed, std::size_t count);

/// Every suite at `count` cases (inhabitation up to 4 constructors).
std::vector<Outcome> run_all(const Corpus& corpus, std::uint64_t seed, std::size_t count);

}  // namespace hfi::props
