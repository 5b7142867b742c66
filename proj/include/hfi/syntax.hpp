#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hfi/calculus.hpp"
#include "hfi/logic.hpp"

namespace hfi {

/// Parsed s-expression with source position (1-based line and column).
struct SExpr {
  bool is_list = false;
  std::string atom;
  std::vector<SExpr> items;
  std::size_t line = 0;
  std::size_t col = 0;
};

/// Parses a sequence of top-level s-expressions. `;` starts a comment.
std::vector<SExpr> parse_sexprs(std::string_view text);

/// Contents of a proof file: a signature and exactly one proof.
struct ProofFile {
  Signature signature;
  std::optional<OneSidedProof> one_sided;
  std::optional<TwoSidedProof> two_sided;
};

/// Throws ParseError(line, col, expected) on the first problem.
ProofFile parse_proof_file(std::string_view text);

// Fragments, resolved against a signature (used by tests and the CLI).
Formula parse_formula(std::string_view text, const Signature& sig);
Term parse_term(std::string_view text, const Signature& sig);
SimpleType parse_type(std::string_view text);

std::vector<std::string> one_sided_rule_names();
std::vector<std::string> two_sided_rule_names();

std::string print_proof_file(const ProofFile& file);
std::string print_signature(const Signature& sig);
std::string print_formula(const Formula& a, const Signature& sig);
std::string print_term(const Term& t, const Signature& sig);
std::string print_proposition(const Proposition& p, const Signature& sig);
std::string print_type(const SimpleType& t);
std::string print_proof(const OneSidedProof& p, const Signature& sig);
std::string print_proof(const TwoSidedProof& p, const Signature& sig);

}  // namespace hfi
