#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>

namespace hfi {

/// Simple types: ι | □ | U × U | U → U.
class SimpleType {
 public:
  enum class Kind : std::uint8_t { Iota, Null, Product, Arrow };

  SimpleType();  // ι

  static SimpleType iota();
  static SimpleType null();
  static SimpleType product(const SimpleType& left, const SimpleType& right);
  static SimpleType arrow(const SimpleType& domain, const SimpleType& codomain);

  Kind kind() const;
  bool is_iota() const { return kind() == Kind::Iota; }
  bool is_null() const { return kind() == Kind::Null; }
  bool is_product() const { return kind() == Kind::Product; }
  bool is_arrow() const { return kind() == Kind::Arrow; }

  // Product components / arrow domain and codomain.
  SimpleType left() const;
  SimpleType right() const;
  SimpleType domain() const { return left(); }
  SimpleType codomain() const { return right(); }

  std::size_t depth() const;
  std::size_t hash() const;
  std::string str() const;

  friend bool operator==(const SimpleType& a, const SimpleType& b);
  friend bool operator!=(const SimpleType& a, const SimpleType& b) { return !(a == b); }

  struct Node;  // opaque

 private:
  explicit SimpleType(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static std::shared_ptr<const Node> intern(Kind k, const SimpleType& l, const SimpleType& r);
  std::shared_ptr<const Node> node_;
};

std::ostream& operator<<(std::ostream& os, const SimpleType& t);

}  // namespace hfi
