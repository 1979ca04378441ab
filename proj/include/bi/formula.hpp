#pragma once

#include <cassert>
#include <memory>
#include <string>
#include <utility>

namespace bi {

enum class Conn {
  Atom,
  Top,   // additive truth
  Bot,   // falsum
  One,   // multiplicative unit
  And,
  Or,
  Imp,
  Star,
  Wand,
};

// Immutable formula tree with shared subterms. Equality is structural.
class Formula {
  struct Node {
    Conn kind;
    std::string name;  // atoms only
    std::shared_ptr<const Node> left, right;
  };

 public:
  Formula() = default;

  static Formula atom(std::string name) {
    assert(!name.empty());
    return Formula(std::make_shared<const Node>(Node{Conn::Atom, std::move(name), nullptr, nullptr}));
  }
  static Formula top() { return nullary(Conn::Top); }
  static Formula bot() { return nullary(Conn::Bot); }
  static Formula one() { return nullary(Conn::One); }
  static Formula conj(const Formula& a, const Formula& b) { return binary(Conn::And, a, b); }
  static Formula disj(const Formula& a, const Formula& b) { return binary(Conn::Or, a, b); }
  static Formula imp(const Formula& a, const Formula& b) { return binary(Conn::Imp, a, b); }
  static Formula star(const Formula& a, const Formula& b) { return binary(Conn::Star, a, b); }
  static Formula wand(const Formula& a, const Formula& b) { return binary(Conn::Wand, a, b); }
  static Formula binary(Conn c, const Formula& a, const Formula& b) {
    assert(a.valid() && b.valid());
    return Formula(std::make_shared<const Node>(Node{c, {}, a.node_, b.node_}));
  }

  bool valid() const { return node_ != nullptr; }
  Conn kind() const { return node_->kind; }
  bool is(Conn c) const { return node_ && node_->kind == c; }
  bool isAtom() const { return is(Conn::Atom); }
  bool isBinary() const { return node_ && node_->left != nullptr; }
  const std::string& atomName() const { return node_->name; }
  Formula left() const { return Formula(node_->left); }
  Formula right() const { return Formula(node_->right); }

  std::size_t size() const { return size(node_.get()); }

  friend bool operator==(const Formula& a, const Formula& b) { return compare(a, b) == 0; }
  friend bool operator!=(const Formula& a, const Formula& b) { return compare(a, b) != 0; }
  friend bool operator<(const Formula& a, const Formula& b) { return compare(a, b) < 0; }

  // Total order; used for canonical multiset forms.
  static int compare(const Formula& a, const Formula& b) { return compare(a.node_.get(), b.node_.get()); }

 private:
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  static Formula nullary(Conn c) {
    return Formula(std::make_shared<const Node>(Node{c, {}, nullptr, nullptr}));
  }

  static std::size_t size(const Node* n) {
    if (!n) return 0;
    return 1 + size(n->left.get()) + size(n->right.get());
  }

  static int compare(const Node* a, const Node* b) {
    if (a == b) return 0;
    if (!a || !b) return a ? 1 : -1;
    if (a->kind != b->kind) return a->kind < b->kind ? -1 : 1;
    if (a->kind == Conn::Atom) return a->name.compare(b->name);
    if (int c = compare(a->left.get(), b->left.get())) return c;
    return compare(a->right.get(), b->right.get());
  }

  std::shared_ptr<const Node> node_;
};

inline bool is_additive(Conn c) {
  return c == Conn::And || c == Conn::Or || c == Conn::Imp || c == Conn::Top;
}
inline bool is_multiplicative(Conn c) {
  return c == Conn::Star || c == Conn::Wand || c == Conn::One;
}

}  // namespace bi
