// Acceptance run: one PASS/FAIL line per criterion.
// Usage: acceptance [seed]

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>

#include "hfi/herbrand.hpp"
#include "hfi/properties.hpp"

using namespace hfi;
using Clock = std::chrono::steady_clock;

namespace {

OneSidedProof load(const std::string& name) {
  std::ifstream in(std::string(HFI_CORPUS_DIR) + "/" + name, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  ProofFile f = parse_proof_file(ss.str());
  return f.one_sided ? *f.one_sided : translate(*f.two_sided);
}

std::vector<std::string> witness_strings(const HerbrandResult& r) {
  std::vector<std::string> out;
  for (const auto& t : r.witnesses) out.push_back(t.str());
  return out;
}

// The fixed examples of criterion 6.
props::Outcome herbrand_examples() {
  props::Outcome o{"examples", 0, 0, {}};
  auto check = [&](bool ok, const std::string& what) {
    ++o.cases;
    if (!ok) {
      ++o.failures;
      if (o.notes.size() < 5) o.notes.push_back(what);
    }
  };
  try {
    HerbrandResult x1 = extract(load("x1_excluded_middle.prf"));
    check(x1.verified && witness_strings(x1) == std::vector<std::string>{"c"}, "X1 witnesses != [c]");

    HerbrandResult x2 = extract(load("x2_two_witnesses.prf"));
    auto w = witness_strings(x2);
    bool has_c = std::find(w.begin(), w.end(), "c") != w.end();
    bool has_fc = std::find(w.begin(), w.end(), "f(c)") != w.end();
    check(x2.verified && has_c && has_fc, "X2 witnesses do not include c and f(c)");

    // P(t) ∨ ¬P(f(t)) over P(c), P(f(c)), P(f(f(c))): each single instance has a
    // falsifying assignment, the pair has none.
    const char* atoms[] = {"P(c)", "P(f(c))", "P(f(f(c)))"};
    bool pair_valid = true, c_valid = true, fc_valid = true;
    for (int bits = 0; bits < 8; ++bits) {
      std::map<std::string, bool> s;
      for (int i = 0; i < 3; ++i) s[atoms[i]] = (bits >> i) & 1;
      bool a = s["P(c)"] || !s["P(f(c))"];
      bool b = s["P(f(c))"] || !s["P(f(f(c)))"];
      pair_valid = pair_valid && (a || b);
      c_valid = c_valid && a;
      fc_valid = fc_valid && b;
    }
    check(pair_valid && !c_valid && !fc_valid, "X2 brute force");

    check(extract(load("x3_cut.prf")).verified, "X3 unverified");
  } catch (const std::exception& e) {
    check(false, e.what());
  }
  return o;
}

props::Outcome merge(std::string name, const std::vector<props::Outcome>& parts) {
  props::Outcome o{std::move(name), 0, 0, {}};
  for (const auto& p : parts) {
    o.cases += p.cases;
    o.failures += p.failures;
    for (const auto& n : p.notes)
      if (o.notes.size() < 5) o.notes.push_back(p.name + ": " + n);
  }
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  std::uint64_t seed = argc > 1 ? std::stoull(argv[1]) : 20240601;
  props::Corpus corpus = props::load_corpus(HFI_CORPUS_DIR);

  struct Criterion {
    std::string label;
    std::function<props::Outcome()> run;
  };
  std::vector<Criterion> criteria = {
      {"1 kernel soundness (1000 terms)", [&] { return props::kernel_soundness(seed, 1000); }},
      {"2 inhabitation (all types with <= 6 constructors)", [&] { return props::inhabitation(6); }},
      {"3 transformer typing (corpus + 200)", [&] { return props::transformer_typing(corpus, seed, 200); }},
      {"4 substitution lemma (200 triples)", [&] { return props::substitution_lemma(seed, 200); }},
      {"5 soundness (corpus + 200, 3 alternatives each)", [&] { return props::soundness(corpus, seed, 200, 3); }},
      {"6 herbrand (X1, X2, X3 + 100 goals)",
       [&] { return merge("herbrand", {herbrand_examples(), props::herbrand_generated(seed, 100)}); }},
      {"7 verifier oracle (500 + 500)", [&] { return props::verifier_oracle(seed, 500); }},
      {"8 translation (200 proofs)", [&] { return props::translation(seed, 200); }},
  };

  auto start = Clock::now();
  bool all = true;
  for (const auto& c : criteria) {
    auto t0 = Clock::now();
    props::Outcome o = c.run();
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    all = all && o.passed();
    std::printf("%s %s: %zu cases, %zu failures, %.2fs\n", o.passed() ? "PASS" : "FAIL", c.label.c_str(), o.cases,
                o.failures, secs);
    for (const auto& n : o.notes) std::printf("    %s\n", n.substr(0, 400).c_str());
    std::fflush(stdout);
  }
  double total = std::chrono::duration<double>(Clock::now() - start).count();
  std::printf("total %.2fs (seed %llu)\n", total, static_cast<unsigned long long>(seed));
  return all && total < 60.0 ? 0 : 1;
}
