#include "hfi/interpretation.hpp"

#include "hfi/error.hpp"

namespace hfi {

SimpleType evidence_type(const Formula& a) {
  switch (a.kind()) {
    case FormulaKind::Atom:
      return SimpleType::null();
    case FormulaKind::Exists:
      return SimpleType::product(SimpleType::iota(), counter_type(Formula::neg(a.sub(0))));
    case FormulaKind::Not: {
      const Formula& b = a.sub(0);
      return SimpleType::arrow(SimpleType::arrow(counter_type(b), evidence_type(b)), counter_type(b));
    }
    case FormulaKind::Or:
      return SimpleType::product(counter_type(Formula::neg(a.sub(0))), counter_type(Formula::neg(a.sub(1))));
  }
  throw Error("unknown formula kind");
}

SimpleType counter_type(const Formula& a) {
  switch (a.kind()) {
    case FormulaKind::Atom:
      return SimpleType::null();
    case FormulaKind::Exists:
      return SimpleType::arrow(evidence_type(a), evidence_type(Formula::neg(a.sub(0))));
    case FormulaKind::Not:
      return SimpleType::arrow(counter_type(a.sub(0)), evidence_type(a.sub(0)));
    case FormulaKind::Or: {
      Formula na = Formula::neg(a.sub(0));
      Formula nb = Formula::neg(a.sub(1));
      return SimpleType::product(SimpleType::arrow(counter_type(na), evidence_type(na)),
                                 SimpleType::arrow(counter_type(nb), evidence_type(nb)));
    }
  }
  throw Error("unknown formula kind");
}

Term canonical_evidence(const Formula& a, const Ident& base_constant) {
  return inhabitant(evidence_type(a), base_constant);
}

namespace {

Term p1(const Term& t) { return Term::proj(1, t); }
Term p2(const Term& t) { return Term::proj(2, t); }
Term ap(const Term& f, const Term& a) { return Term::app(f, a); }

Proposition win(const Formula& a, const Term& u, const Term& v) {
  switch (a.kind()) {
    case FormulaKind::Atom:
      return to_proposition(a);
    case FormulaKind::Exists: {
      Term s = ap(ap(v, u), p2(u));
      return win(subst_formula(a.sub(0), a.var(), p1(u)), ap(p2(u), s), s);
    }
    case FormulaKind::Or: {
      Term s1 = ap(ap(p1(v), p1(u)), p1(u));
      Term s2 = ap(ap(p2(v), p2(u)), p2(u));
      return Proposition::disj(win(a.sub(0), ap(p1(u), s1), s1), win(a.sub(1), ap(p2(u), s2), s2));
    }
    case FormulaKind::Not: {
      Term uv = ap(u, v);
      return Proposition::neg(win(a.sub(0), ap(v, uv), uv));
    }
  }
  throw Error("unknown formula kind");
}

void expect_type(const Term& t, const SimpleType& want, const std::string& where) {
  SimpleType got = infer_type(t);
  if (got != want) throw TypeError(where, want.str(), got.str());
}

}  // namespace

Proposition winning(const Formula& a, const Term& u, const Term& v) {
  expect_type(u, evidence_type(a), "evidence for " + a.str());
  expect_type(v, counter_type(a), "counter-evidence for " + a.str());
  return win(a, u, v);
}

std::vector<Term> canonical_args(const Sequent& s, const Ident& base_constant) {
  std::vector<Term> out;
  out.reserve(s.size());
  for (const auto& a : s.formulas) out.push_back(inhabitant(counter_type(a), base_constant));
  return out;
}

// ---------------------------------------------------------------------------
// Term transformers

TransformerEnv::TransformerEnv(OneSidedProof proof, Ident base_constant)
    : proof_(std::move(proof)), base_constant_(std::move(base_constant)), check_(check_one_sided_full(proof_)) {
  for (const auto& [id, seq] : check_.conclusions)
    for (const auto& f : seq.formulas)
      for (const auto& v : f.free_vars()) taken_.insert(v.name);
  for (const auto& e : check_.eigenvariables) taken_.insert(e);
  for (const auto& e : eigenvariables(proof_)) taken_.insert(e);
}

Ident TransformerEnv::fresh(const std::string& base) {
  for (;;) {
    Ident n = base + std::to_string(++counter_);
    if (!taken_.count(n)) return n;
  }
}

Term TransformerEnv::transform(std::size_t i, const std::vector<Term>& args) {
  const Sequent& end = check_.end;
  if (i < 1 || i > end.size()) throw IndexOutOfRange(i, end.size());
  if (args.size() != end.size())
    throw TypeError("argument list", std::to_string(end.size()) + " arguments", std::to_string(args.size()));
  for (std::size_t j = 0; j < args.size(); ++j) {
    expect_type(args[j], counter_type(end[j]), "argument " + std::to_string(j + 1));
    for (const auto& v : args[j].free_vars()) taken_.insert(v.name);
  }
  return apply(proof_, i, args);
}

// Each node's transformers are computed once, over placeholder variables for
// its counter-evidence, and instantiated per call. Memoizing on the concrete
// arguments instead multiplies frames along every chain of rules.
TransformerEnv::Frame& TransformerEnv::frame_for(const OneSidedProof& p) {
  auto it = frames_.find(p.id());
  if (it != frames_.end()) return it->second;
  const Sequent& concl = check_.conclusion(p);
  Frame f;
  f.node = p;
  for (const auto& a : concl.formulas) f.args.push_back(Term::var(fresh("%x"), counter_type(a)));
  f.results.resize(concl.size());
  return frames_.emplace(p.id(), std::move(f)).first->second;
}

Term TransformerEnv::apply(const OneSidedProof& p, std::size_t i, const std::vector<Term>& args) {
  Frame& frame = frame_for(p);
  if (i < 1 || i > frame.results.size()) throw IndexOutOfRange(i, frame.results.size());
  if (!frame.results[i - 1]) {
    Term r = compute(p, i, frame.args, frame);
    // frame may not be invalidated by recursion: std::map nodes are stable.
    frame.results[i - 1] = r;
  }
  Term out = *frame.results[i - 1];
  // The placeholders are fresh, so sequential substitution is simultaneous.
  for (std::size_t j = 0; j < args.size(); ++j)
    if (!args[j].same(frame.args[j])) out = substitute(out, frame.args[j].name(), args[j]);
  return out;
}

Term TransformerEnv::compute(const OneSidedProof& p, std::size_t i, const std::vector<Term>& args, Frame& frame) {
  const Sequent& concl = check_.conclusion(p);
  const std::size_t n = concl.size();

  auto shared = [&](const std::string& key, auto build) -> Term {
    auto it = frame.shared.find(key);
    if (it != frame.shared.end()) return it->second;
    Term t = build();
    frame.shared.emplace(key, t);
    return t;
  };
  auto prefix = [&](std::size_t k) { return std::vector<Term>(args.begin(), args.begin() + static_cast<long>(k)); };
  auto with = [](std::vector<Term> v, std::initializer_list<Term> more) {
    v.insert(v.end(), more.begin(), more.end());
    return v;
  };

  switch (p.rule()) {
    case OneRule::Lem: {
      // [¬A, A] with u : ⟨¬A⟩, v : ⟨A⟩.
      const Term& u = args[0];
      const Term& v = args[1];
      if (i == 2) return ap(u, v);
      const Formula& a = concl[1];
      return Term::abs(fresh("z"), SimpleType::arrow(counter_type(a), evidence_type(a)), v);
    }

    case OneRule::Weak: {
      if (i == n) return canonical_evidence(concl[n - 1], base_constant_);
      return apply(p.premise(0), i, prefix(n - 1));
    }

    case OneRule::Cut: {
      const OneSidedProof& l = p.premise(0);
      const OneSidedProof& r = p.premise(1);
      const std::size_t k = check_.conclusion(l).size() - 1;
      const std::size_t m = check_.conclusion(r).size() - 1;
      const Formula& a = p.formula();
      std::vector<Term> us = prefix(k);
      std::vector<Term> vs(args.begin() + static_cast<long>(k), args.end());
      Term h = shared("h", [&] {
        Ident z = fresh("z");
        Term zv = Term::var(z, counter_type(a));
        return Term::abs(z, counter_type(a), apply(l, k + 1, with(us, {zv})));
      });
      if (i > k) return apply(r, i - k, with(vs, {h}));
      Term s = shared("s", [&] { return ap(apply(r, m + 1, with(vs, {h})), h); });
      return apply(l, i, with(us, {s}));
    }

    case OneRule::Contract: {
      const std::size_t k = n - 1;
      const Term& v = args[k];
      std::vector<Term> inner = with(prefix(k), {v, v});
      if (i <= k) return apply(p.premise(0), i, inner);
      Term a = apply(p.premise(0), k + 1, inner);
      Term b = apply(p.premise(0), k + 2, inner);
      return Term::case_of(win(concl[k], a, v), a, b);
    }

    case OneRule::Ex: {
      const std::size_t k = n - 1;
      const Formula& premise_last = check_.conclusion(p.premise(0)).formulas.back();
      std::vector<Term> us = prefix(k);
      Term h = shared("h", [&] {
        Ident z = fresh("z");
        SimpleType zt = counter_type(premise_last);
        return Term::abs(z, zt, apply(p.premise(0), k + 1, with(us, {Term::var(z, zt)})));
      });
      Term pair = Term::pair(p.witness(), h);
      if (i == n) return pair;
      Term s = shared("s", [&] { return ap(ap(args[k], pair), h); });
      return apply(p.premise(0), i, with(us, {s}));
    }

    case OneRule::NegEx: {
      const std::size_t k = n - 1;
      const Formula& ex = concl[k].sub(0);  // ∃x A
      const Ident& alpha = p.eigen();
      std::vector<Term> us = prefix(k);
      Term h = shared("h", [&] {
        Ident y = fresh("y");
        SimpleType yt = evidence_type(ex);
        Term yv = Term::var(y, yt);
        Term body = apply(p.premise(0), k + 1, with(us, {p2(yv)}));
        return Term::abs(y, yt, substitute(body, alpha, p1(yv)));
      });
      if (i == n) {
        SimpleType zt = SimpleType::arrow(counter_type(ex), evidence_type(ex));
        return Term::abs(fresh("z"), zt, h);
      }
      Term vh = shared("vh", [&] { return ap(args[k], h); });
      return substitute(apply(p.premise(0), i, with(us, {p2(vh)})), alpha, p1(vh));
    }

    case OneRule::Or: {
      const std::size_t k = n - 1;
      const Formula& d = concl[k];
      const Formula& a = d.sub(0);
      const Formula& b = d.sub(1);
      std::vector<Term> us = prefix(k);
      const bool left = p.side() == 1;
      Term q = shared("q", [&] {
        const Formula& chosen = left ? a : b;
        Ident z = fresh("z");
        SimpleType zt = counter_type(chosen);
        Term live = Term::abs(z, zt, apply(p.premise(0), k + 1, with(us, {Term::var(z, zt)})));
        const Formula& other = left ? b : a;
        Term dead = Term::abs(fresh("z"), counter_type(other), canonical_evidence(other, base_constant_));
        return left ? Term::pair(live, dead) : Term::pair(dead, live);
      });
      if (i == n) return q;
      Term s = shared("s", [&] {
        int j = left ? 1 : 2;
        Term pq = Term::proj(j, q);
        return ap(ap(Term::proj(j, args[k]), pq), pq);
      });
      return apply(p.premise(0), i, with(us, {s}));
    }

    case OneRule::NegOr: {
      const OneSidedProof& l = p.premise(0);
      const OneSidedProof& r = p.premise(1);
      const std::size_t k = check_.conclusion(l).size() - 1;
      const std::size_t m = check_.conclusion(r).size() - 1;
      const Formula& d = concl[n - 1].sub(0);  // A ∨ B
      std::vector<Term> us = prefix(k);
      std::vector<Term> vs(args.begin() + static_cast<long>(k), args.begin() + static_cast<long>(k + m));
      const Term& w = args[n - 1];
      Term q = shared("q", [&] {
        Formula na = Formula::neg(d.sub(0));
        Formula nb = Formula::neg(d.sub(1));
        Ident z1 = fresh("z");
        Term q1 = Term::abs(z1, counter_type(na), apply(l, k + 1, with(us, {Term::var(z1, counter_type(na))})));
        Ident z2 = fresh("z");
        Term q2 = Term::abs(z2, counter_type(nb), apply(r, m + 1, with(vs, {Term::var(z2, counter_type(nb))})));
        SimpleType zt = SimpleType::arrow(counter_type(d), evidence_type(d));
        return Term::abs(fresh("z"), zt, Term::pair(q1, q2));
      });
      if (i == n) return q;
      Term wq = shared("wq", [&] { return ap(w, ap(q, w)); });
      if (i <= k) return apply(l, i, with(us, {p1(wq)}));
      return apply(r, i - k, with(vs, {p2(wq)}));
    }

    case OneRule::NegNeg: {
      const std::size_t k = n - 1;
      const Formula& a = check_.conclusion(p.premise(0)).formulas.back();
      std::vector<Term> us = prefix(k);
      Term q = shared("q", [&] {
        Ident y = fresh("y");
        return Term::abs(y, counter_type(a), apply(p.premise(0), k + 1, with(us, {Term::var(y, counter_type(a))})));
      });
      if (i == n) {
        Formula na = Formula::neg(a);
        return Term::abs(fresh("z"), SimpleType::arrow(counter_type(na), evidence_type(na)), q);
      }
      Term s = shared("s", [&] { return ap(ap(args[k], q), q); });
      return apply(p.premise(0), i, with(us, {s}));
    }

    case OneRule::Perm: {
      const auto& perm = p.permutation();
      std::vector<Term> inner(n, args[0]);
      for (std::size_t j = 0; j < n; ++j) inner[perm[j] - 1] = args[j];
      return apply(p.premise(0), perm[i - 1], inner);
    }
  }
  throw Error("unknown rule");
}

Term transform(const OneSidedProof& p, std::size_t i, const std::vector<Term>& args, const Ident& base_constant) {
  TransformerEnv env(p, base_constant);
  return env.transform(i, args);
}

}  // namespace hfi
