#include <numeric>

#include "hfi/calculus.hpp"
#include "hfi/error.hpp"

namespace hfi {

namespace {

// A one-sided proof together with the labels of its conclusion positions.
// Labels identify formula occurrences so that Perm nodes can be computed.
struct Labeled {
  OneSidedProof proof;
  std::vector<int> labels;
};

// Reorders p so that its conclusion lists `target` (a permutation of p.labels).
Labeled arrange(Labeled p, const std::vector<int>& target) {
  if (target == p.labels) return p;
  std::vector<std::size_t> perm;
  perm.reserve(target.size());
  std::vector<bool> used(p.labels.size(), false);
  for (int l : target) {
    std::size_t k = 0;
    while (k < p.labels.size() && (used[k] || p.labels[k] != l)) ++k;
    if (k == p.labels.size()) throw Error("internal: label not found while permuting");
    used[k] = true;
    perm.push_back(k + 1);
  }
  return Labeled{OneSidedProof::perm(std::move(perm), std::move(p.proof)), target};
}

// Moves the occurrence at position `pos` to the end.
Labeled to_end(Labeled p, std::size_t pos) {
  std::vector<int> target;
  for (std::size_t k = 0; k < p.labels.size(); ++k)
    if (k != pos) target.push_back(p.labels[k]);
  target.push_back(p.labels[pos]);
  return arrange(std::move(p), target);
}

std::vector<int> iota_labels(std::size_t n, int start = 0) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), start);
  return v;
}

class Translator {
 public:
  explicit Translator(const TwoSidedCheck& chk) : chk_(chk) {}

  // Returns a proof of ¬Γ, Δ in source order, labeled 0..n-1.
  Labeled tau(const TwoSidedProof& p) {
    const TwoSequent& concl = chk_.conclusion(p);
    const std::size_t g = concl.antecedent.size();
    const std::size_t n = g + concl.succedent.size();
    auto premise_tau = [&](std::size_t i) { return tau(p.premise(i)); };
    auto prem_ant = [&](std::size_t i) { return chk_.conclusion(p.premise(i)).antecedent.size(); };

    switch (p.rule()) {
      case TwoRule::Id:
        return Labeled{OneSidedProof::lem(p.formula()), {0, 1}};

      case TwoRule::NegR:
        // Γ, A ⊢ Δ and Γ ⊢ ¬A, Δ translate to the same list.
        return relabel(premise_tau(0));

      case TwoRule::OrR:
      case TwoRule::NegL:
      case TwoRule::ExR: {
        // The principal succedent formula sits right after ¬Γ in the premise.
        std::size_t pg = prem_ant(0);
        Labeled q = to_end(premise_tau(0), pg);
        OneSidedProof r = apply_unary(p, q.proof);
        return place_last(r, q.labels.size(), pg);
      }

      case TwoRule::ExL:
      case TwoRule::ContrL: {
        std::size_t pg = prem_ant(0);
        Labeled q = premise_tau(0);
        if (p.rule() == TwoRule::ExL) {
          q = to_end(std::move(q), pg - 1);
          std::optional<Ident> var;
          if (!p.var().empty()) var = p.var();
          return place_last(OneSidedProof::neg_ex(p.eigen(), q.proof, var), q.labels.size(), pg - 1);
        }
        q = arrange(std::move(q), move_pair_last(q.labels, pg - 2, pg - 1));
        return place_last(OneSidedProof::contract(q.proof), q.labels.size() - 1, pg - 2);
      }

      case TwoRule::ContrR: {
        std::size_t pg = prem_ant(0);
        Labeled q = premise_tau(0);
        q = arrange(std::move(q), move_pair_last(q.labels, pg, pg + 1));
        return place_last(OneSidedProof::contract(q.proof), q.labels.size() - 1, pg);
      }

      case TwoRule::WeakR:
        return place_last(OneSidedProof::weak(p.formula(), premise_tau(0).proof), n, g);
      case TwoRule::WeakL:
        return place_last(OneSidedProof::weak(Formula::neg(p.formula()), premise_tau(0).proof), n, g - 1);

      case TwoRule::Cut: {
        std::size_t g1 = prem_ant(0);
        std::size_t g2 = prem_ant(1) - 1;
        std::size_t d1 = chk_.conclusion(p.premise(0)).succedent.size() - 1;
        std::size_t d2 = chk_.conclusion(p.premise(1)).succedent.size();
        Labeled l = to_end(premise_tau(0), g1);          // ¬Γ₁, Δ₁, A
        Labeled r = to_end(premise_tau(1), g2);          // ¬Γ₂, Δ₂, ¬A
        OneSidedProof c = OneSidedProof::cut(p.formula(), l.proof, r.proof);
        // c concludes ¬Γ₁, Δ₁, ¬Γ₂, Δ₂; labels follow the target ¬Γ₁, ¬Γ₂, Δ₁, Δ₂.
        std::vector<int> labels;
        for (std::size_t k = 0; k < g1; ++k) labels.push_back(static_cast<int>(k));
        for (std::size_t k = 0; k < d1; ++k) labels.push_back(static_cast<int>(g1 + g2 + k));
        for (std::size_t k = 0; k < g2; ++k) labels.push_back(static_cast<int>(g1 + k));
        for (std::size_t k = 0; k < d2; ++k) labels.push_back(static_cast<int>(g1 + g2 + d1 + k));
        return arrange(Labeled{c, labels}, iota_labels(n));
      }

      case TwoRule::OrL: {
        // Premises Γ, A ⊢ Δ and Γ, B ⊢ Δ; the conclusion context has m = n - 1 formulas.
        std::size_t m = n - 1;
        Labeled l = to_end(premise_tau(0), g - 1);  // ¬Γ, Δ, ¬A
        Labeled r = to_end(premise_tau(1), g - 1);  // ¬Γ, Δ, ¬B
        OneSidedProof cur = OneSidedProof::neg_or(l.proof, r.proof);
        // Context labels: ¬Γ as 0..g-2, Δ as g..n-1; the principal is g-1.
        std::vector<int> ctx;
        for (std::size_t k = 0; k + 1 < g; ++k) ctx.push_back(static_cast<int>(k));
        for (std::size_t k = g; k < n; ++k) ctx.push_back(static_cast<int>(k));
        std::vector<int> labels = ctx;
        labels.insert(labels.end(), ctx.begin(), ctx.end());
        labels.push_back(static_cast<int>(g - 1));
        Labeled acc{cur, labels};
        for (std::size_t j = 0; j < m; ++j) {
          int lab = ctx[j];
          std::vector<int> target;
          std::size_t seen = 0;
          for (int x : acc.labels) {
            if (x == lab) {
              ++seen;
              continue;
            }
            target.push_back(x);
          }
          if (seen != 2) throw Error("internal: expected two copies while contracting");
          target.push_back(lab);
          target.push_back(lab);
          acc = arrange(std::move(acc), target);
          acc.proof = OneSidedProof::contract(acc.proof);
          acc.labels.pop_back();
        }
        return arrange(std::move(acc), iota_labels(n));
      }

      case TwoRule::Perm: {
        Labeled q = premise_tau(0);
        std::size_t pg = prem_ant(0);
        // conclusion antecedent[j] = premise antecedent[perm[j]]
        std::vector<int> target;
        for (std::size_t j : p.permutation()) target.push_back(static_cast<int>(j - 1));
        for (std::size_t j : p.right_permutation()) target.push_back(static_cast<int>(pg + j - 1));
        Labeled r = arrange(std::move(q), target);
        return relabel(std::move(r));
      }
    }
    throw Error("internal: unknown two-sided rule");
  }

 private:
  static Labeled relabel(Labeled p) {
    p.labels = iota_labels(p.labels.size());
    return p;
  }

  // Moves positions a and b (in that order) to the end.
  static std::vector<int> move_pair_last(const std::vector<int>& labels, std::size_t a, std::size_t b) {
    std::vector<int> target;
    for (std::size_t k = 0; k < labels.size(); ++k)
      if (k != a && k != b) target.push_back(labels[k]);
    target.push_back(labels[a]);
    target.push_back(labels[b]);
    return target;
  }

  OneSidedProof apply_unary(const TwoSidedProof& p, const OneSidedProof& q) {
    switch (p.rule()) {
      case TwoRule::OrR:
        return OneSidedProof::or_intro(p.side(), p.formula(), q);
      case TwoRule::NegL:
        return OneSidedProof::neg_neg(q);
      case TwoRule::ExR:
        return OneSidedProof::ex(p.witness(), p.var(), p.formula(), q);
      default:
        throw Error("internal: not a unary principal rule");
    }
  }

  // p concludes a list of `size` formulas whose last one belongs at `dest`.
  static Labeled place_last(const OneSidedProof& p, std::size_t size, std::size_t dest) {
    std::vector<int> labels;
    for (std::size_t k = 0; k + 1 < size; ++k) labels.push_back(static_cast<int>(k < dest ? k : k + 1));
    labels.push_back(static_cast<int>(dest));
    return arrange(Labeled{p, labels}, iota_labels(size));
  }

  const TwoSidedCheck& chk_;
};

}  // namespace

OneSidedProof translate(const TwoSidedProof& p) {
  TwoSidedCheck chk = check_two_sided_full(p);
  Translator t(chk);
  return regularize(t.tau(p).proof);
}

}  // namespace hfi
