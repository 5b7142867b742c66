#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "hfi/syntax.hpp"

namespace testing_helpers {

inline const hfi::Signature& sig() {
  static const hfi::Signature s = hfi::Signature::standard();
  return s;
}

inline hfi::Term T(const std::string& text) { return hfi::parse_term(text, sig()); }
inline hfi::Formula F(const std::string& text) { return hfi::parse_formula(text, sig()); }
inline hfi::SimpleType Ty(const std::string& text) { return hfi::parse_type(text); }

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline hfi::ProofFile corpus_file(const std::string& name) {
  return hfi::parse_proof_file(slurp(std::string(HFI_CORPUS_DIR) + "/" + name));
}

inline hfi::OneSidedProof corpus_one_sided(const std::string& name) {
  hfi::ProofFile f = corpus_file(name);
  return f.one_sided ? *f.one_sided : hfi::translate(*f.two_sided);
}

}  // namespace testing_helpers
