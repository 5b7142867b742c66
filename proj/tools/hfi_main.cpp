// hfi: command-line front end.
// Exit codes: 0 success, 1 logical failure, 2 input error.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "hfi/error.hpp"
#include "hfi/herbrand.hpp"
#include "hfi/interpretation.hpp"
#include "hfi/properties.hpp"
#include "hfi/syntax.hpp"
#include "hfi/verifier.hpp"

using nlohmann::json;
using namespace hfi;

namespace {

struct Options {
  std::string input;
  bool json_out = false;
  std::size_t fuel = kDefaultFuel;
  bool emit_realizer = false;
  std::size_t index = 1;
  std::uint64_t seed = 1;
  std::size_t count = 20;
  std::string output;
  std::string corpus;
};

// Input-side failures that map to exit code 2.
struct InputError : Error {
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json sequent_json(const Sequent& s) {
  json out = json::array();
  for (const auto& a : s.formulas) out.push_back(a.str());
  return out;
}

json tree_json(const OneSidedProof& p, const OneSidedCheck& chk) {
  json node = {{"rule", rule_name(p.rule())}, {"sequent", sequent_json(chk.conclusion(p))}};
  json prem = json::array();
  for (const auto& q : p.premises()) prem.push_back(tree_json(q, chk));
  node["premises"] = prem;
  return node;
}

json tree_json(const TwoSidedProof& p, const TwoSidedCheck& chk) {
  const TwoSequent& s = chk.conclusion(p);
  json node = {{"rule", rule_name(p.rule())},
               {"antecedent", sequent_json(Sequent{s.antecedent})},
               {"succedent", sequent_json(Sequent{s.succedent})}};
  json prem = json::array();
  for (const auto& q : p.premises()) prem.push_back(tree_json(q, chk));
  node["premises"] = prem;
  return node;
}

// One-sided view of a proof file; two-sided inputs are translated.
OneSidedProof one_sided_of(const ProofFile& f) {
  if (f.one_sided) return *f.one_sided;
  return translate(*f.two_sided);
}

void emit(const Options& o, const json& j, const std::string& text) {
  if (o.json_out)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

int run_check(const Options& o) {
  ProofFile f = parse_proof_file(read_file(o.input));
  if (f.one_sided) {
    OneSidedCheck chk = check_one_sided_full(*f.one_sided);
    json j = {{"command", "check"},
              {"ok", true},
              {"calculus", "one-sided"},
              {"endSequent", sequent_json(chk.end)},
              {"tree", tree_json(*f.one_sided, chk)}};
    emit(o, j, "⊢ " + chk.end.str() + "\n");
  } else {
    TwoSidedCheck chk = check_two_sided_full(*f.two_sided);
    json j = {{"command", "check"},
              {"ok", true},
              {"calculus", "two-sided"},
              {"antecedent", sequent_json(Sequent{chk.end.antecedent})},
              {"succedent", sequent_json(Sequent{chk.end.succedent})},
              {"tree", tree_json(*f.two_sided, chk)}};
    emit(o, j, chk.end.str() + "\n");
  }
  return 0;
}

int run_translate(const Options& o) {
  ProofFile f = parse_proof_file(read_file(o.input));
  ProofFile out;
  out.signature = f.signature;
  out.one_sided = one_sided_of(f);
  Sequent end = check_one_sided(*out.one_sided);
  std::string text = print_proof_file(out);
  if (!o.output.empty()) {
    std::ofstream os(o.output, std::ios::binary);
    if (!os) throw InputError("cannot write " + o.output);
    os << text;
  }
  json j = {{"command", "translate"}, {"ok", true}, {"endSequent", sequent_json(end)}, {"proof", text}};
  emit(o, j, o.output.empty() ? text : "");
  return 0;
}

int run_interpret(const Options& o) {
  ProofFile f = parse_proof_file(read_file(o.input));
  const Ident& base = f.signature.designated_constant();
  TransformerEnv env(one_sided_of(f), base);
  std::vector<Term> args = canonical_args(env.end_sequent(), base);
  Term t = env.transform(o.index, args);
  SimpleType ty = typecheck(TypingContext{}, t);
  Normalized n = normalize_counted(t, o.fuel);
  json jargs = json::array();
  for (const auto& a : args) jargs.push_back(a.str());
  json j = {{"command", "interpret"},
            {"ok", true},
            {"index", o.index},
            {"formula", env.end_sequent()[o.index - 1].str()},
            {"arguments", jargs},
            {"term", t.str()},
            {"type", ty.str()},
            {"normalForm", n.term.str()},
            {"stepCount", n.steps}};
  std::ostringstream text;
  text << "formula: " << env.end_sequent()[o.index - 1] << "\n"
       << "term: " << t << "\n"
       << "type: " << ty << "\n"
       << "normal form: " << n.term << "\n"
       << "steps: " << n.steps << "\n";
  emit(o, j, text.str());
  return 0;
}

int run_verify(const Options& o) {
  ProofFile f = parse_proof_file(read_file(o.input));
  const Ident& base = f.signature.designated_constant();
  OneSidedProof p = one_sided_of(f);
  Sequent end = check_one_sided(p);
  for (const auto& a : end.formulas)
    if (!a.is_closed()) throw InputError("end sequent is not closed: " + a.str());
  SoundnessReport r = check_soundness_report(p, canonical_args(end, base), base, o.fuel);
  json cex = json::array();
  for (const auto& [k, v] : r.tautology.counterexample) cex.push_back({{"atom", k}, {"value", v}});
  json j = {{"command", "verify"},
            {"ok", r.sound},
            {"sound", r.sound},
            {"keys", r.tautology.keys},
            {"method", r.tautology.method},
            {"stepCount", r.steps},
            {"counterexample", cex}};
  std::ostringstream text;
  text << (r.sound ? "PASS" : "FAIL") << " (" << r.tautology.keys << " atoms, " << r.tautology.method << ", "
       << r.steps << " steps)\n";
  for (const auto& [k, v] : r.tautology.counterexample) text << "  " << k << " = " << (v ? "true" : "false") << "\n";
  emit(o, j, text.str());
  return r.sound ? 0 : 1;
}

int run_extract(const Options& o) {
  ProofFile f = parse_proof_file(read_file(o.input));
  const Ident& base = f.signature.designated_constant();
  HerbrandResult r = extract(one_sided_of(f), std::nullopt, base, o.fuel);
  json ws = json::array();
  for (const auto& t : r.witnesses) ws.push_back(t.str());
  json j = {{"command", "extract"},
            {"ok", r.verified},
            {"witnesses", ws},
            {"disjunction", r.disjunction.str()},
            {"verified", r.verified},
            {"stepCount", r.steps}};
  if (o.emit_realizer) j["realizer"] = r.realizer.str();
  std::ostringstream text;
  text << "witnesses:";
  for (const auto& t : r.witnesses) text << " " << t;
  text << "\ndisjunction: " << r.disjunction << "\n";
  if (o.emit_realizer) text << "realizer: " << r.realizer << "\n";
  text << (r.verified ? "VERIFIED" : "UNVERIFIED") << "\n";
  emit(o, j, text.str());
  return r.verified ? 0 : 1;
}

int run_fuzz(const Options& o) {
  props::Corpus corpus;
  if (!o.corpus.empty()) corpus = props::load_corpus(o.corpus);
  std::vector<props::Outcome> results = props::run_all(corpus, o.seed, o.count);
  bool ok = true;
  json arr = json::array();
  std::ostringstream text;
  for (const auto& r : results) {
    ok = ok && r.passed();
    json notes = r.notes;
    arr.push_back({{"name", r.name}, {"cases", r.cases}, {"failures", r.failures}, {"notes", notes}});
    text << (r.passed() ? "PASS " : "FAIL ") << r.name << " (" << r.cases << " cases, " << r.failures
         << " failures)\n";
    for (const auto& n : r.notes) text << "  " << n << "\n";
  }
  json j = {{"command", "fuzz"}, {"ok", ok}, {"seed", o.seed}, {"count", o.count}, {"properties", arr}};
  emit(o, j, text.str());
  return ok ? 0 : 1;
}

void report_error(const Options& o, const std::string& kind, const std::string& message) {
  if (o.json_out) {
    json j = {{"command", "error"}, {"ok", false}, {"error", kind}, {"message", message}};
    std::cout << j.dump(2) << "\n";
  }
  std::cerr << "error: " << message << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Proof checking, realizer extraction and Herbrand disjunctions"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json_out, "Machine-readable output");
  app.add_option("--fuel", o.fuel, "Normalization step budget")->check(CLI::PositiveNumber);

  auto* check = app.add_subcommand("check", "Check a proof and print its end sequent");
  auto* trans = app.add_subcommand("translate", "Translate a two-sided proof into the one-sided calculus");
  auto* interp = app.add_subcommand("interpret", "Apply a term transformer to canonical counter-evidence");
  auto* verify = app.add_subcommand("verify", "Check soundness of the extracted realizers");
  auto* extr = app.add_subcommand("extract", "Extract a Herbrand disjunction from a proof of ∃x A");
  auto* fuzz = app.add_subcommand("fuzz", "Run the generated-proof property suites");

  for (auto* sub : {check, trans, interp, verify, extr}) {
    sub->add_option("file", o.input, "Proof file")->required();
    sub->add_flag("--json", o.json_out, "Machine-readable output");
    sub->add_option("--fuel", o.fuel, "Normalization step budget")->check(CLI::PositiveNumber);
  }
  interp->add_option("index", o.index, "1-based occurrence index")->check(CLI::PositiveNumber);
  trans->add_option("-o,--output", o.output, "Write the translated proof here");
  extr->add_flag("--emit-realizer", o.emit_realizer, "Also print the normalized realizer");
  fuzz->add_option("--seed", o.seed, "Random seed");
  fuzz->add_option("--count", o.count, "Generated cases per property");
  fuzz->add_option("--corpus", o.corpus, "Directory of .prf files to include");
  fuzz->add_flag("--json", o.json_out, "Machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*check) return run_check(o);
    if (*trans) return run_translate(o);
    if (*interp) return run_interpret(o);
    if (*verify) return run_verify(o);
    if (*extr) return run_extract(o);
    if (*fuzz) return run_fuzz(o);
  } catch (const ParseError& e) {
    report_error(o, "ParseError", e.what());
    return 2;
  } catch (const InputError& e) {
    report_error(o, "InputError", e.what());
    return 2;
  } catch (const IndexOutOfRange& e) {
    report_error(o, "IndexOutOfRange", e.what());
    return 2;
  } catch (const NotHerbrandGoal& e) {
    report_error(o, "NotHerbrandGoal", e.what());
    return 2;
  } catch (const NonClosedTerm& e) {
    report_error(o, "NonClosedTerm", e.what());
    return 2;
  } catch (const RuleMismatch& e) {
    report_error(o, "RuleMismatch", e.what());
    return 1;
  } catch (const EigenvariableViolation& e) {
    report_error(o, "EigenvariableViolation", e.what());
    return 1;
  } catch (const RegularityViolation& e) {
    report_error(o, "RegularityViolation", e.what());
    return 1;
  } catch (const Error& e) {
    report_error(o, "Error", e.what());
    return 1;
  }
  return 2;
}
