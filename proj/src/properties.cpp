#include "hfi/properties.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <memory>
#include <sstream>

#include "hfi/error.hpp"
#include "hfi/generators.hpp"
#include "hfi/herbrand.hpp"
#include "hfi/interpretation.hpp"
#include "hfi/kernel.hpp"
#include "hfi/verifier.hpp"

namespace hfi::props {

namespace {

constexpr std::size_t kMaxNotes = 5;

void fail(Outcome& o, const std::string& msg) {
  ++o.failures;
  if (o.notes.size() < kMaxNotes) o.notes.push_back(msg);
}

// Runs one case; an exception is a failure.
void run_case(Outcome& o, const std::string& label, const std::function<void()>& body) {
  ++o.cases;
  std::size_t before = o.failures;
  try {
    body();
  } catch (const std::exception& e) {
    if (o.failures == before) fail(o, label + ": " + e.what());
  }
}

gen::Rng rng_for(std::uint64_t seed, std::uint64_t salt) { return gen::Rng(seed * 0x9e3779b97f4a7c15ULL + salt); }

}  // namespace

Corpus load_corpus(const std::string& dir) {
  namespace fs = std::filesystem;
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.path().extension() == ".prf") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  Corpus out;
  for (const auto& f : files) {
    std::ifstream in(f, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    out.push_back({f.filename().string(), parse_proof_file(ss.str())});
  }
  return out;
}

std::vector<std::pair<std::string, OneSidedProof>> one_sided_proofs(const Corpus& corpus) {
  std::vector<std::pair<std::string, OneSidedProof>> out;
  for (const auto& e : corpus)
    out.emplace_back(e.name, e.file.one_sided ? *e.file.one_sided : translate(*e.file.two_sided));
  return out;
}

// ---------------------------------------------------------------------------
// Oracles

bool normal_shape_ok(const Term& t, const SimpleType& type) {
  if (t.is(TermKind::Case)) return normal_shape_ok(t.child(0), type) && normal_shape_ok(t.child(1), type);
  if (type.is_null()) return t.is(TermKind::Epsilon);
  if (type.is_iota()) return t.is_first_order() && t.is_closed();
  if (type.is_product())
    return t.is(TermKind::Pair) && normal_shape_ok(t.child(0), type.left()) &&
           normal_shape_ok(t.child(1), type.right());
  return t.is(TermKind::Abs);
}

namespace {

// Values of the oracle evaluator.
struct Value;
using ValuePtr = std::shared_ptr<const Value>;
using Env = std::vector<std::pair<Ident, ValuePtr>>;

struct Value {
  enum Kind { Fo, Unit, Pair, Closure } kind;
  std::string fo;
  ValuePtr fst, snd;
  Ident var;
  std::optional<Term> body;
  Env env;
};

struct Evaluator {
  const std::map<std::string, bool>& sigma;

  ValuePtr term(const Term& t, const Env& env) {
    switch (t.kind()) {
      case TermKind::Epsilon:
        return std::make_shared<Value>(Value{Value::Unit, "", nullptr, nullptr, "", std::nullopt, {}});
      case TermKind::Const:
        return fo(t.name());
      case TermKind::Var:
        for (std::size_t i = env.size(); i-- > 0;)
          if (env[i].first == t.name()) return env[i].second;
        return nullptr;
      case TermKind::Fun: {
        std::string s = t.name() + "(";
        for (std::size_t i = 0; i < t.children().size(); ++i) {
          ValuePtr v = term(t.child(i), env);
          if (!v || v->kind != Value::Fo) return nullptr;
          s += (i ? "," : "") + v->fo;
        }
        return fo(s + ")");
      }
      case TermKind::Pair: {
        ValuePtr a = term(t.child(0), env), b = term(t.child(1), env);
        if (!a || !b) return nullptr;
        return std::make_shared<Value>(Value{Value::Pair, "", a, b, "", std::nullopt, {}});
      }
      case TermKind::Proj: {
        ValuePtr v = term(t.child(0), env);
        if (!v || v->kind != Value::Pair) return nullptr;
        return t.index() == 1 ? v->fst : v->snd;
      }
      case TermKind::Abs:
        return std::make_shared<Value>(Value{Value::Closure, "", nullptr, nullptr, t.name(), t.child(0), env});
      case TermKind::App: {
        ValuePtr f = term(t.child(0), env), a = term(t.child(1), env);
        if (!f || !a || f->kind != Value::Closure) return nullptr;
        Env inner = f->env;
        inner.emplace_back(f->var, a);
        return term(*f->body, inner);
      }
      case TermKind::Case: {
        auto c = prop(t.condition(), env);
        if (!c) return nullptr;
        return term(t.child(*c ? 0 : 1), env);
      }
    }
    return nullptr;
  }

  std::optional<bool> prop(const Proposition& p, const Env& env) {
    switch (p.kind()) {
      case PropKind::Atom: {
        std::string key = p.pred() + "(";
        for (std::size_t i = 0; i < p.terms().size(); ++i) {
          ValuePtr v = term(p.terms()[i], env);
          if (!v || v->kind != Value::Fo) return std::nullopt;
          key += (i ? "," : "") + v->fo;
        }
        key += ")";
        auto it = sigma.find(key);
        if (it == sigma.end()) return std::nullopt;
        return it->second;
      }
      case PropKind::Or: {
        auto a = prop(p.sub(0), env), b = prop(p.sub(1), env);
        if (!a || !b) return std::nullopt;
        return *a || *b;
      }
      case PropKind::Not: {
        auto a = prop(p.sub(0), env);
        if (!a) return std::nullopt;
        return !*a;
      }
      case PropKind::Eq: {
        ValuePtr a = term(p.terms()[0], env), b = term(p.terms()[1], env);
        if (!a || !b || a->kind != Value::Fo || b->kind != Value::Fo) return std::nullopt;
        return a->fo == b->fo;
      }
    }
    return std::nullopt;
  }

  static ValuePtr fo(std::string s) {
    return std::make_shared<Value>(Value{Value::Fo, std::move(s), nullptr, nullptr, "", std::nullopt, {}});
  }
};

bool has_case(const Term& t) {
  if (t.is(TermKind::Case)) return true;
  return std::any_of(t.children().begin(), t.children().end(), has_case);
}

bool has_case(const Proposition& p) {
  for (const auto& t : p.terms())
    if (has_case(t)) return true;
  for (const auto& s : p.subs())
    if (has_case(s)) return true;
  return false;
}

}  // namespace

std::optional<bool> eval_with_cases(const Proposition& p, const std::map<std::string, bool>& sigma) {
  Evaluator ev{sigma};
  return ev.prop(p, {});
}

std::vector<std::map<std::string, bool>> assignments(const std::vector<std::string>& keys) {
  std::vector<std::map<std::string, bool>> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << keys.size()); ++m) {
    std::map<std::string, bool> s;
    for (std::size_t i = 0; i < keys.size(); ++i) s[keys[i]] = (m >> i) & 1u;
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<std::string> pool_keys() { return {"P(c)", "P(f(c))", "Q(c)", "Q(f(c))"}; }

// ---------------------------------------------------------------------------
// Suites

Outcome kernel_soundness(std::uint64_t seed, std::size_t count) {
  Outcome o{"kernel soundness", 0, 0, {}};
  gen::Rng rng = rng_for(seed, 1);
  for (std::size_t n = 0; n < count; ++n) {
    Term t = gen::random_closed_term(rng, 8);
    run_case(o, "term " + std::to_string(n), [&] {
      if (gen::term_depth(t) > 8) return fail(o, "generated term deeper than 8: " + t.str());
      SimpleType u = typecheck(TypingContext{}, t);
      Term cur = t;
      std::size_t steps = 0;
      while (auto next = step(cur)) {
        if (++steps > kDefaultFuel) return fail(o, "step budget exceeded on " + t.str());
        SimpleType v = typecheck(TypingContext{}, *next);
        if (v != u)
          return fail(o, "subject reduction: " + cur.str() + " : " + u.str() + " steps to " + next->str() + " : " +
                             v.str());
        cur = *next;
      }
      Normalized nf = normalize_counted(t);
      if (!alpha_equal(nf.term, cur) || nf.steps > steps)
        return fail(o, "normalize disagrees with iterated step on " + t.str());
      if (!normal_shape_ok(cur, u)) return fail(o, "normal form shape: " + cur.str() + " : " + u.str());
    });
  }
  return o;
}

Outcome inhabitation(int max_constructors) {
  Outcome o{"inhabitation", 0, 0, {}};
  gen::enumerate_types(max_constructors, [&](const SimpleType& u) {
    run_case(o, u.str(), [&] {
      Term t = inhabitant(u);
      if (!t.is_closed()) return fail(o, "open inhabitant for " + u.str());
      SimpleType v = typecheck(TypingContext{}, t);
      if (v != u) fail(o, "inhabitant of " + u.str() + " has type " + v.str());
    });
  });
  return o;
}

namespace {

gen::ProofOptions generated_options(gen::Rng& rng) {
  gen::ProofOptions opt;
  opt.steps = 4 + static_cast<int>(rng() % 6);
  opt.formula_depth = 2;
  return opt;
}

void check_typing(Outcome& o, const std::string& label, const OneSidedProof& p) {
  run_case(o, label, [&] {
    TransformerEnv env(p);
    std::vector<Term> args = canonical_args(env.end_sequent());
    for (std::size_t i = 1; i <= env.end_sequent().size(); ++i) {
      Term t = env.transform(i, args);
      SimpleType want = evidence_type(env.end_sequent()[i - 1]);
      SimpleType got = typecheck(TypingContext{}, t);
      if (got != want)
        return fail(o, label + ": F_" + std::to_string(i) + " has type " + got.str() + ", expected " + want.str());
      if (!t.is_closed()) return fail(o, label + ": F_" + std::to_string(i) + " is not closed");
    }
  });
}

}  // namespace

Outcome transformer_typing(const Corpus& corpus, std::uint64_t seed, std::size_t count) {
  Outcome o{"transformer typing", 0, 0, {}};
  for (const auto& [name, p] : one_sided_proofs(corpus)) check_typing(o, name, p);
  gen::Rng rng = rng_for(seed, 3);
  for (std::size_t n = 0; n < count; ++n) {
    std::optional<OneSidedProof> p;
    run_case(o, "generate " + std::to_string(n), [&] { p = gen::random_one_sided(rng, generated_options(rng)); });
    --o.cases;
    if (p) check_typing(o, "generated " + std::to_string(n), *p);
  }
  return o;
}

Outcome substitution_lemma(std::uint64_t seed, std::size_t count) {
  Outcome o{"substitution lemma", 0, 0, {}};
  gen::Rng rng = rng_for(seed, 4);
  for (std::size_t n = 0; n < count; ++n) {
    run_case(o, "triple " + std::to_string(n), [&] {
      gen::OpenProof op = gen::random_open_one_sided(rng, generated_options(rng));
      for (int tries = 0; tries < 20 && op.free_var.empty(); ++tries)
        op = gen::random_open_one_sided(rng, generated_options(rng));
      const OneSidedProof& p = op.proof;
      Ident alpha = op.free_var.empty() ? Ident("a") : op.free_var;
      auto eig = eigenvariables(p);
      if (std::find(eig.begin(), eig.end(), alpha) != eig.end()) alpha = "fresh_alpha";
      Term t = gen::random_fo_term(rng, 3);
      if (rng() % 4 == 0) t = Term::proj(1, Term::pair(t, Term::epsilon()));

      TransformerEnv env(p);
      const Sequent& end = env.end_sequent();
      std::vector<Term> args, args_t;
      for (const auto& a : end.formulas) {
        Term v = gen::random_inhabitant(rng, counter_type(a), 3, alpha);
        args.push_back(v);
        args_t.push_back(substitute(v, alpha, t));
      }
      OneSidedProof ps = proof_subst(p, alpha, t);
      TransformerEnv env_t(ps);
      for (std::size_t i = 1; i <= end.size(); ++i) {
        Term lhs = substitute(env.transform(i, args), alpha, t);
        Term rhs = env_t.transform(i, args_t);
        if (!alpha_equal(lhs, rhs))
          return fail(o, "triple " + std::to_string(n) + ", index " + std::to_string(i) + ": " + lhs.str() +
                             " vs " + rhs.str());
      }
    });
  }
  return o;
}

namespace {

void check_sound(Outcome& o, const std::string& label, const OneSidedProof& p, gen::Rng& rng,
                 std::size_t alternatives) {
  Sequent end;
  bool checked = false;
  run_case(o, label + " (canonical)", [&] {
    end = check_one_sided(p);
    checked = true;
    SoundnessReport r = check_soundness_report(p, canonical_args(end));
    if (!r.sound) fail(o, label + ": canonical counter-evidence refutes " + r.eliminated.str());
  });
  if (!checked) return;
  for (std::size_t k = 0; k < alternatives; ++k) {
    run_case(o, label + " (alternative " + std::to_string(k) + ")", [&] {
      std::vector<Term> args;
      for (const auto& a : end.formulas) args.push_back(gen::random_inhabitant(rng, counter_type(a), 3));
      SoundnessReport r = check_soundness_report(p, args);
      if (!r.sound) fail(o, label + ": alternative counter-evidence " + std::to_string(k) + " refutes");
    });
  }
}

}  // namespace

Outcome soundness(const Corpus& corpus, std::uint64_t seed, std::size_t count, std::size_t alternatives) {
  Outcome o{"soundness", 0, 0, {}};
  gen::Rng rng = rng_for(seed, 5);
  for (const auto& [name, p] : one_sided_proofs(corpus)) check_sound(o, name, p, rng, alternatives);
  for (std::size_t n = 0; n < count; ++n) {
    std::optional<OneSidedProof> p;
    run_case(o, "generate " + std::to_string(n), [&] { p = gen::random_one_sided(rng, generated_options(rng)); });
    --o.cases;
    if (p) check_sound(o, "generated " + std::to_string(n), *p, rng, alternatives);
  }
  return o;
}

Outcome herbrand_generated(std::uint64_t seed, std::size_t count) {
  Outcome o{"herbrand extraction", 0, 0, {}};
  gen::Rng rng = rng_for(seed, 6);
  for (std::size_t n = 0; n < count; ++n) {
    run_case(o, "goal " + std::to_string(n), [&] {
      OneSidedProof p = gen::random_exists_goal(rng);
      HerbrandResult r = extract(p);
      if (r.witnesses.empty()) return fail(o, "goal " + std::to_string(n) + ": no witnesses");
      if (!r.verified) fail(o, "goal " + std::to_string(n) + ": unverified " + r.disjunction.str());
    });
  }
  return o;
}

Outcome herbrand_choice(std::uint64_t seed, std::size_t count) {
  Outcome o{"herbrand counter-evidence choice", 0, 0, {}};
  gen::Rng rng = rng_for(seed, 7);
  for (std::size_t n = 0; n < count; ++n) {
    run_case(o, "goal " + std::to_string(n), [&] {
      OneSidedProof p = gen::random_exists_goal(rng);
      Sequent end = check_one_sided(p);
      Term v = gen::random_inhabitant(rng, counter_type(end[0]), 3);
      HerbrandResult r = extract(p, v);
      if (r.witnesses.empty() || !r.verified)
        fail(o, "goal " + std::to_string(n) + " with v = " + v.str() + ": unverified " + r.disjunction.str());
    });
  }
  return o;
}

Outcome witness_bound(std::uint64_t seed, std::size_t count) {
  Outcome o{"witness count bound", 0, 0, {}};
  gen::Rng rng = rng_for(seed, 6);
  for (std::size_t n = 0; n < count; ++n) {
    run_case(o, "goal " + std::to_string(n), [&] {
      OneSidedProof p = gen::random_exists_goal(rng);
      HerbrandResult r = extract(p);
      std::size_t bound = 1 + count_rule(p, OneRule::Contract);
      if (r.witnesses.size() > bound)
        fail(o, "goal " + std::to_string(n) + ": " + std::to_string(r.witnesses.size()) + " witnesses, bound " +
                    std::to_string(bound));
    });
  }
  return o;
}

Outcome verifier_oracle(std::uint64_t seed, std::size_t count) {
  Outcome o{"verifier oracle", 0, 0, {}};
  gen::Rng rng = rng_for(seed, 8);
  const auto sigmas = assignments(pool_keys());
  for (std::size_t n = 0; n < count; ++n) {
    Proposition p = gen::random_proposition(rng, 3, false);
    run_case(o, "tautology " + std::to_string(n), [&] {
      bool all = true;
      for (const auto& s : sigmas) {
        auto v = eval_with_cases(p, s);
        if (!v) return fail(o, "oracle cannot evaluate " + p.str());
        all = all && *v;
      }
      if (tautology(p) != all) fail(o, "tautology(" + p.str() + ") disagrees with the truth table");
    });
  }
  for (std::size_t n = 0; n < count; ++n) {
    Proposition p = gen::random_proposition(rng, 3, true);
    run_case(o, "cases " + std::to_string(n), [&] {
      Proposition e = eliminate_cases(p);
      if (has_case(e)) return fail(o, "Case survives in " + e.str());
      bool all = true;
      for (const auto& s : sigmas) {
        auto a = eval_with_cases(p, s), b = eval_with_cases(e, s);
        if (!a || !b) return fail(o, "oracle cannot evaluate " + p.str());
        if (*a != *b) return fail(o, "eliminate_cases changes the meaning of " + p.str());
        all = all && *a;
      }
      if (tautology(e) != all) fail(o, "tautology after elimination disagrees on " + p.str());
    });
  }
  return o;
}

Outcome translation(std::uint64_t seed, std::size_t count) {
  Outcome o{"translation", 0, 0, {}};
  gen::Rng rng = rng_for(seed, 9);
  for (std::size_t n = 0; n < count; ++n) {
    run_case(o, "proof " + std::to_string(n), [&] {
      TwoSidedProof p = gen::random_two_sided(rng, 4 + static_cast<int>(rng() % 8));
      TwoSequent s = check_two_sided(p);
      Sequent want;
      for (const auto& a : s.antecedent) want.formulas.push_back(Formula::neg(a));
      for (const auto& a : s.succedent) want.formulas.push_back(a);
      Sequent got = check_one_sided(translate(p));
      if (!alpha_equal(got, want))
        fail(o, "proof " + std::to_string(n) + ": translated end sequent " + got.str() + ", expected " + want.str());
    });
  }
  return o;
}

std::vector<Outcome> run_all(const Corpus& corpus, std::uint64_t seed, std::size_t count) {
  return {kernel_soundness(seed, count),
          inhabitation(4),
          transformer_typing(corpus, seed, count),
          substitution_lemma(seed, count),
          soundness(corpus, seed, count, 3),
          herbrand_generated(seed, count),
          herbrand_choice(seed, count),
          witness_bound(seed, count),
          verifier_oracle(seed, count),
          translation(seed, count)};
}

}  // namespace hfi::props
