#pragma once

#include <memory>
#include <stdexcept>
#include <vector>

#include "bi/formula.hpp"

namespace bi {

enum class BunchKind { Leaf, UnitAdd, UnitMul, Semi, Comma };

enum class Step : unsigned char { Left, Right };
using BunchPath = std::vector<Step>;

// Binary-tree context: leaves are formulas or the two units, internal nodes
// the additive (;) or multiplicative (,) context-former.
class Bunch {
  struct Node {
    BunchKind kind;
    Formula formula;  // Leaf only
    std::shared_ptr<const Node> left, right;
  };

 public:
  Bunch() = default;

  static Bunch leaf(Formula f) {
    return Bunch(std::make_shared<const Node>(Node{BunchKind::Leaf, std::move(f), nullptr, nullptr}));
  }
  static Bunch unitAdd() {
    return Bunch(std::make_shared<const Node>(Node{BunchKind::UnitAdd, {}, nullptr, nullptr}));
  }
  static Bunch unitMul() {
    return Bunch(std::make_shared<const Node>(Node{BunchKind::UnitMul, {}, nullptr, nullptr}));
  }
  static Bunch semi(const Bunch& l, const Bunch& r) { return binary(BunchKind::Semi, l, r); }
  static Bunch comma(const Bunch& l, const Bunch& r) { return binary(BunchKind::Comma, l, r); }

  bool valid() const { return node_ != nullptr; }
  BunchKind kind() const { return node_->kind; }
  bool is(BunchKind k) const { return node_ && node_->kind == k; }
  bool isLeaf() const { return is(BunchKind::Leaf); }
  // Basic bunches are formulas and units; everything else is complex.
  bool isBasic() const { return !isComplex(); }
  bool isComplex() const { return is(BunchKind::Semi) || is(BunchKind::Comma); }
  const Formula& formula() const { return node_->formula; }
  Bunch left() const { return Bunch(node_->left); }
  Bunch right() const { return Bunch(node_->right); }

  std::size_t leafCount() const { return leafCount(node_.get()); }
  std::size_t size() const { return size(node_.get()); }

  friend bool operator==(const Bunch& a, const Bunch& b) { return compare(a, b) == 0; }
  friend bool operator!=(const Bunch& a, const Bunch& b) { return compare(a, b) != 0; }
  friend bool operator<(const Bunch& a, const Bunch& b) { return compare(a, b) < 0; }

  static int compare(const Bunch& a, const Bunch& b) { return compare(a.node_.get(), b.node_.get()); }

 private:
  explicit Bunch(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Bunch binary(BunchKind k, const Bunch& l, const Bunch& r) {
    return Bunch(std::make_shared<const Node>(Node{k, {}, l.node_, r.node_}));
  }

  static std::size_t leafCount(const Node* n) {
    if (!n) return 0;
    if (!n->left) return 1;
    return leafCount(n->left.get()) + leafCount(n->right.get());
  }
  static std::size_t size(const Node* n) {
    if (!n) return 0;
    if (!n->left) return 1;
    return 1 + size(n->left.get()) + size(n->right.get());
  }
  static int compare(const Node* a, const Node* b) {
    if (a == b) return 0;
    if (!a || !b) return a ? 1 : -1;
    std::size_t sa = size(a), sb = size(b);
    if (sa != sb) return sa < sb ? -1 : 1;
    if (a->kind != b->kind) return a->kind < b->kind ? -1 : 1;
    if (a->kind == BunchKind::Leaf) return Formula::compare(a->formula, b->formula);
    if (!a->left) return 0;
    if (int c = compare(a->left.get(), b->left.get())) return c;
    return compare(a->right.get(), b->right.get());
  }

  std::shared_ptr<const Node> node_;
};

struct BadBunchPath : std::runtime_error {
  BadBunchPath() : std::runtime_error("path does not address a sub-bunch") {}
};

inline Bunch subbunch_at(const Bunch& whole, const BunchPath& pos) {
  Bunch cur = whole;
  for (Step s : pos) {
    if (!cur.isComplex()) throw BadBunchPath();
    cur = s == Step::Left ? cur.left() : cur.right();
  }
  return cur;
}

// Literal tree substitution; no normalization of any kind.
inline Bunch replace_subbunch(const Bunch& whole, const BunchPath& pos, const Bunch& replacement,
                              std::size_t from = 0) {
  if (from == pos.size()) return replacement;
  if (!whole.isComplex()) throw BadBunchPath();
  Bunch l = whole.left(), r = whole.right();
  if (pos[from] == Step::Left)
    l = replace_subbunch(l, pos, replacement, from + 1);
  else
    r = replace_subbunch(r, pos, replacement, from + 1);
  return whole.kind() == BunchKind::Semi ? Bunch::semi(l, r) : Bunch::comma(l, r);
}

// Number of additive/multiplicative alternations between the principal
// context-former at `pos` and the root context-former.
inline std::size_t rank(const Bunch& whole, const BunchPath& pos) {
  if (pos.empty()) throw BadBunchPath();  // proper sub-bunches only
  std::size_t alternations = 0;
  Bunch cur = whole;
  BunchKind prev = cur.kind();
  for (Step s : pos) {
    if (!cur.isComplex()) throw BadBunchPath();
    if (cur.kind() != prev) ++alternations;
    prev = cur.kind();
    cur = s == Step::Left ? cur.left() : cur.right();
  }
  return alternations;
}

// Every addressable position, in preorder (root first).
inline void all_positions(const Bunch& b, std::vector<BunchPath>& out, BunchPath cur = {}) {
  out.push_back(cur);
  if (b.isComplex()) {
    cur.push_back(Step::Left);
    all_positions(b.left(), out, cur);
    cur.back() = Step::Right;
    all_positions(b.right(), out, cur);
  }
}

inline std::vector<BunchPath> all_positions(const Bunch& b) {
  std::vector<BunchPath> out;
  all_positions(b, out);
  return out;
}

}  // namespace bi
