#include "hfi/verifier.hpp"

#include <functional>
#include <map>
#include <optional>

#include "hfi/error.hpp"
#include "hfi/interpretation.hpp"

namespace hfi {

// ---------------------------------------------------------------------------
// Case elimination

namespace {

// Replaces the first Case outside binders (pre-order) by one of its branches.
struct CaseSplit {
  Proposition condition;
  Term then_term;
  Term else_term;
};

std::optional<CaseSplit> split_term(const Term& t) {
  switch (t.kind()) {
    case TermKind::Case:
      return CaseSplit{t.condition(), t.child(0), t.child(1)};
    case TermKind::Abs:
    case TermKind::Epsilon:
    case TermKind::Const:
    case TermKind::Var:
      return std::nullopt;
    default:
      break;
  }
  for (std::size_t i = 0; i < t.children().size(); ++i) {
    auto s = split_term(t.child(i));
    if (!s) continue;
    std::vector<Term> a = t.children();
    std::vector<Term> b = t.children();
    a[i] = s->then_term;
    b[i] = s->else_term;
    auto rebuild = [&](std::vector<Term> kids) {
      switch (t.kind()) {
        case TermKind::Fun: return Term::fun(t.name(), std::move(kids));
        case TermKind::Pair: return Term::pair(kids[0], kids[1]);
        case TermKind::Proj: return Term::proj(t.index(), kids[0]);
        case TermKind::App: return Term::app(kids[0], kids[1]);
        default: throw Error("internal: unexpected node while splitting");
      }
    };
    return CaseSplit{s->condition, rebuild(std::move(a)), rebuild(std::move(b))};
  }
  return std::nullopt;
}

Proposition eliminate(const Proposition& p) {
  switch (p.kind()) {
    case PropKind::Or:
      return Proposition::disj(eliminate(p.sub(0)), eliminate(p.sub(1)));
    case PropKind::Not:
      return Proposition::neg(eliminate(p.sub(0)));
    case PropKind::Atom:
    case PropKind::Eq:
      break;
  }
  const auto& terms = p.terms();
  for (std::size_t i = 0; i < terms.size(); ++i) {
    auto s = split_term(terms[i]);
    if (!s) continue;
    std::vector<Term> a = terms;
    std::vector<Term> b = terms;
    a[i] = s->then_term;
    b[i] = s->else_term;
    auto make = [&](std::vector<Term> ts) {
      return p.is(PropKind::Eq) ? Proposition::eq(ts[0], ts[1]) : Proposition::atom(p.pred(), std::move(ts));
    };
    Proposition cond = eliminate(s->condition);
    return Proposition::disj(conj(cond, eliminate(make(std::move(a)))),
                             conj(Proposition::neg(cond), eliminate(make(std::move(b)))));
  }
  return p;
}

}  // namespace

Proposition eliminate_cases(const Proposition& p) {
  if (!p.is_closed()) throw NonClosedTerm(p.free_vars().front().name);
  return eliminate(p);
}

// ---------------------------------------------------------------------------
// Tautology checking

std::string atom_key(const Proposition& atom, std::size_t fuel) {
  return canonical_string(normalize_deep(atom, fuel).first);
}

namespace {

// Proposition compiled over numbered keys; -1 / -2 encode constants ⊤ / ⊥.
struct Node {
  enum Kind { Key, Or, Not, True } kind;
  int key = -1;
  int left = -1;
  int right = -1;
};

class Compiler {
 public:
  explicit Compiler(std::size_t fuel) : fuel_(fuel) {}

  int compile(const Proposition& p) {
    auto it = memo_.find(p.id());
    if (it != memo_.end()) return it->second.second;
    int out = -1;
    switch (p.kind()) {
      case PropKind::Or: {
        int l = compile(p.sub(0));
        int r = compile(p.sub(1));
        out = push(Node{Node::Or, -1, l, r});
        break;
      }
      case PropKind::Not:
        out = push(Node{Node::Not, -1, compile(p.sub(0)), -1});
        break;
      case PropKind::Atom:
        out = push(Node{Node::Key, key(atom_key(p, fuel_)), -1, -1});
        break;
      case PropKind::Eq:
        if (convertible(p.terms()[0], p.terms()[1], fuel_))
          out = push(Node{Node::True, -1, -1, -1});
        else
          out = push(Node{Node::Key, key("opaque " + canonical_string(p)), -1, -1});
        break;
    }
    memo_.emplace(p.id(), std::make_pair(p, out));
    return out;
  }

  std::vector<Node> nodes;
  std::vector<std::string> names;

 private:
  int push(Node n) {
    nodes.push_back(n);
    return static_cast<int>(nodes.size()) - 1;
  }
  int key(const std::string& name) {
    auto it = index_.find(name);
    if (it != index_.end()) return it->second;
    names.push_back(name);
    int k = static_cast<int>(names.size()) - 1;
    index_.emplace(name, k);
    return k;
  }

  std::size_t fuel_;
  std::map<std::string, int> index_;
  std::map<const void*, std::pair<Proposition, int>> memo_;
};

// Three-valued evaluation: 1 true, 0 false, -1 unknown.
int eval3(const std::vector<Node>& nodes, int n, const std::vector<int>& assign, std::vector<int>& cache) {
  if (cache[n] != -2) return cache[n];
  const Node& x = nodes[n];
  int r = -1;
  switch (x.kind) {
    case Node::True:
      r = 1;
      break;
    case Node::Key:
      r = assign[x.key];
      break;
    case Node::Not: {
      int b = eval3(nodes, x.left, assign, cache);
      r = b < 0 ? -1 : 1 - b;
      break;
    }
    case Node::Or: {
      int a = eval3(nodes, x.left, assign, cache);
      if (a == 1) {
        r = 1;
        break;
      }
      int b = eval3(nodes, x.right, assign, cache);
      if (b == 1) r = 1;
      else if (a == 0 && b == 0) r = 0;
      else r = -1;
      break;
    }
  }
  cache[n] = r;
  return r;
}

}  // namespace

TautologyResult tautology_check(const Proposition& p, std::size_t fuel) {
  Compiler c(fuel);
  int root = c.compile(p);
  const std::size_t k = c.names.size();
  TautologyResult out;
  out.keys = k;

  auto report = [&](const std::vector<int>& assign) {
    out.valid = false;
    for (std::size_t j = 0; j < k; ++j) out.counterexample.emplace_back(c.names[j], assign[j] == 1);
  };

  std::vector<int> cache(c.nodes.size());
  if (k <= 20) {
    out.method = "truth-table";
    std::vector<int> assign(k);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
      for (std::size_t j = 0; j < k; ++j) assign[j] = static_cast<int>((mask >> j) & 1);
      std::fill(cache.begin(), cache.end(), -2);
      if (eval3(c.nodes, root, assign, cache) == 0) {
        report(assign);
        return out;
      }
    }
    out.valid = true;
    return out;
  }

  out.method = "splitting";
  std::vector<int> assign(k, -1);
  std::function<bool(std::size_t)> search = [&](std::size_t next) -> bool {
    std::fill(cache.begin(), cache.end(), -2);
    int v = eval3(c.nodes, root, assign, cache);
    if (v == 1) return false;
    if (v == 0) {
      for (auto& a : assign)
        if (a < 0) a = 0;
      return true;
    }
    while (next < k && assign[next] >= 0) ++next;
    for (int val : {0, 1}) {
      assign[next] = val;
      if (search(next + 1)) return true;
    }
    assign[next] = -1;
    return false;
  };
  if (search(0)) {
    report(assign);
    return out;
  }
  out.valid = true;
  return out;
}

bool tautology(const Proposition& p, std::size_t fuel) { return tautology_check(p, fuel).valid; }

// ---------------------------------------------------------------------------
// Soundness

SoundnessReport check_soundness_report(const OneSidedProof& p, const std::vector<Term>& args,
                                       const Ident& base_constant, std::size_t fuel) {
  TransformerEnv env(p, base_constant);
  const Sequent& end = env.end_sequent();
  for (const auto& a : end.formulas)
    if (!a.is_closed()) throw NonClosedTerm(a.free_vars().front().name);
  for (const auto& a : args)
    if (!a.is_closed()) throw NonClosedTerm(a.free_vars().front().name);

  std::vector<Proposition> parts;
  for (std::size_t i = 0; i < end.size(); ++i)
    parts.push_back(winning(end[i], env.transform(i + 1, args), args[i]));
  SoundnessReport r;
  r.disjunction = disjunction(parts);
  auto [normal, steps] = normalize_deep(r.disjunction, fuel);
  r.steps = steps;
  r.eliminated = eliminate_cases(normal);
  r.tautology = tautology_check(r.eliminated, fuel);
  r.sound = r.tautology.valid;
  return r;
}

bool check_soundness(const OneSidedProof& p, const std::vector<Term>& args, const Ident& base_constant) {
  return check_soundness_report(p, args, base_constant).sound;
}

}  // namespace hfi
