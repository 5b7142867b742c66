#include "hfi/type.hpp"

#include <functional>
#include <mutex>
#include <unordered_map>
#include <ostream>

#include "hfi/error.hpp"

namespace hfi {

std::string path_string(const std::vector<int>& path) {
  std::string out = "root";
  for (int i : path) out += "/" + std::to_string(i);
  return out;
}

struct SimpleType::Node {
  Kind kind;
  std::shared_ptr<const Node> left;
  std::shared_ptr<const Node> right;
  std::size_t hash;
  std::size_t depth;
};

namespace {

std::shared_ptr<const SimpleType::Node> leaf(SimpleType::Kind k) {
  return std::make_shared<const SimpleType::Node>(
      SimpleType::Node{k, nullptr, nullptr, static_cast<std::size_t>(k) * 0x9e3779b97f4a7c15ULL + 1, 0});
}

}  // namespace

SimpleType::SimpleType() : SimpleType(iota()) {}

SimpleType SimpleType::iota() {
  static const SimpleType t(leaf(Kind::Iota));
  return t;
}

SimpleType SimpleType::null() {
  static const SimpleType t(leaf(Kind::Null));
  return t;
}

static std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

namespace {

// Hash-consing: structurally equal types share one node, so equality is a
// pointer comparison. Entries are weak so unused types can go away.
struct InternKey {
  SimpleType::Kind kind;
  const SimpleType::Node* left;
  const SimpleType::Node* right;
  bool operator==(const InternKey&) const = default;
};

struct InternHash {
  std::size_t operator()(const InternKey& k) const {
    return mix(mix(static_cast<std::size_t>(k.kind), std::hash<const void*>{}(k.left)),
               std::hash<const void*>{}(k.right));
  }
};

struct InternTable {
  std::mutex mu;
  std::unordered_map<InternKey, std::weak_ptr<const SimpleType::Node>, InternHash> map;
  std::size_t prune_at = 1024;
};

InternTable& table() {
  static InternTable* t = new InternTable;  // never destroyed; types may outlive static teardown
  return *t;
}

}  // namespace

std::shared_ptr<const SimpleType::Node> SimpleType::intern(Kind k, const SimpleType& l, const SimpleType& r) {
  InternTable& t = table();
  std::lock_guard lock(t.mu);
  InternKey key{k, l.node_.get(), r.node_.get()};
  auto it = t.map.find(key);
  if (it != t.map.end())
    if (auto sp = it->second.lock()) return sp;
  std::size_t h = mix(mix(k == Kind::Product ? 31 : 57, l.hash()), r.hash());
  auto node = std::make_shared<const Node>(Node{k, l.node_, r.node_, h, 1 + std::max(l.depth(), r.depth())});
  t.map[key] = node;
  if (t.map.size() >= t.prune_at) {
    std::erase_if(t.map, [](const auto& e) { return e.second.expired(); });
    t.prune_at = std::max<std::size_t>(1024, 2 * t.map.size());
  }
  return node;
}

SimpleType SimpleType::product(const SimpleType& left, const SimpleType& right) {
  return SimpleType(intern(Kind::Product, left, right));
}

SimpleType SimpleType::arrow(const SimpleType& domain, const SimpleType& codomain) {
  return SimpleType(intern(Kind::Arrow, domain, codomain));
}

SimpleType::Kind SimpleType::kind() const { return node_->kind; }

SimpleType SimpleType::left() const {
  if (!node_->left) throw Error("type " + str() + " has no components");
  return SimpleType(node_->left);
}

SimpleType SimpleType::right() const {
  if (!node_->right) throw Error("type " + str() + " has no components");
  return SimpleType(node_->right);
}

std::size_t SimpleType::depth() const { return node_->depth; }
std::size_t SimpleType::hash() const { return node_->hash; }

bool operator==(const SimpleType& a, const SimpleType& b) { return a.node_ == b.node_; }

std::string SimpleType::str() const {
  switch (kind()) {
    case Kind::Iota:
      return "ι";
    case Kind::Null:
      return "□";
    case Kind::Product:
      return "(" + left().str() + " × " + right().str() + ")";
    case Kind::Arrow:
      return "(" + left().str() + " → " + right().str() + ")";
  }
  return "?";
}

std::ostream& operator<<(std::ostream& os, const SimpleType& t) { return os << t.str(); }

}  // namespace hfi
