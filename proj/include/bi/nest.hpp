#pragma once

#include <algorithm>
#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

namespace bi {

enum class NestKind { Leaf, Plus, Times };

inline NestKind opposite(NestKind k) {
  return k == NestKind::Plus ? NestKind::Times : NestKind::Plus;
}

using NestPath = std::vector<std::size_t>;

struct BadNestPath : std::runtime_error {
  BadNestPath() : std::runtime_error("path does not address a sub-nest") {}
};

// Two-sorted nested multiset over LeafT. Canonical values satisfy:
//   - no multiset is a singleton,
//   - multiset kinds strictly alternate (a Plus child is a Leaf or Times),
//   - empty same-kind children are absorbed (empty opposite units are kept),
//   - children are stored in a fixed total order, so equality is multiset
//     equality.
// Values built through raw() / plus() / times() may violate all of this;
// normalize() repairs them. LeafT must expose `static int compare(a, b)`.
template <class LeafT>
class BasicNest {
 public:
  BasicNest() = default;

  static BasicNest leaf(LeafT f) {
    return BasicNest(std::make_shared<const Node>(Node{NestKind::Leaf, std::move(f), {}}));
  }
  static BasicNest plus(std::vector<BasicNest> kids = {}) {
    return multiset(NestKind::Plus, std::move(kids));
  }
  static BasicNest times(std::vector<BasicNest> kids = {}) {
    return multiset(NestKind::Times, std::move(kids));
  }
  static BasicNest multiset(NestKind k, std::vector<BasicNest> kids) {
    return BasicNest(std::make_shared<const Node>(Node{k, {}, std::move(kids)}));
  }
  static BasicNest emptyPlus() { return plus({}); }
  static BasicNest emptyTimes() { return times({}); }

  bool valid() const { return node_ != nullptr; }
  NestKind kind() const { return node_->kind; }
  bool isLeaf() const { return node_->kind == NestKind::Leaf; }
  bool isPlus() const { return node_->kind == NestKind::Plus; }
  bool isTimes() const { return node_->kind == NestKind::Times; }
  bool isMultiset() const { return !isLeaf(); }
  bool isEmpty(NestKind k) const { return node_->kind == k && node_->kids.empty(); }
  bool isUnit() const { return isMultiset() && node_->kids.empty(); }
  const LeafT& leafValue() const { return node_->leaf; }
  const std::vector<BasicNest>& children() const { return node_->kids; }

  std::size_t size() const {  // node count
    if (isLeaf()) return 1;
    std::size_t s = 1;
    for (const auto& c : children()) s += c.size();
    return s;
  }

  std::size_t depth() const {
    if (isLeaf()) return 0;
    std::size_t m = 0;
    for (const auto& c : children()) m = std::max(m, c.depth());
    return m + 1;
  }

  static int compare(const BasicNest& a, const BasicNest& b) {
    if (a.node_ == b.node_) return 0;
    if (!a.node_ || !b.node_) return a.node_ ? 1 : -1;
    // Larger first, then Leaf < Plus < Times, then structural.
    std::size_t sa = a.size(), sb = b.size();
    if (sa != sb) return sa > sb ? -1 : 1;
    auto ka = static_cast<int>(a.kind()), kb = static_cast<int>(b.kind());
    if (ka != kb) return ka < kb ? -1 : 1;
    if (a.isLeaf()) return LeafT::compare(a.leafValue(), b.leafValue());
    if (a.children().size() != b.children().size())
      return a.children().size() < b.children().size() ? -1 : 1;
    for (std::size_t i = 0; i < a.children().size(); ++i)
      if (int c = compare(a.children()[i], b.children()[i])) return c;
    return 0;
  }
  friend bool operator==(const BasicNest& a, const BasicNest& b) { return compare(a, b) == 0; }
  friend bool operator!=(const BasicNest& a, const BasicNest& b) { return compare(a, b) != 0; }
  friend bool operator<(const BasicNest& a, const BasicNest& b) { return compare(a, b) < 0; }

  // Flatten same-kind nesting, absorb same-kind units, promote singletons,
  // sort children. Total and idempotent.
  BasicNest normalized() const {
    if (isLeaf()) return *this;
    std::vector<BasicNest> flat;
    for (const auto& c : children()) {
      BasicNest n = c.normalized();
      if (n.kind() == kind())
        flat.insert(flat.end(), n.children().begin(), n.children().end());
      else
        flat.push_back(std::move(n));
    }
    if (flat.size() == 1) return flat.front();
    std::sort(flat.begin(), flat.end());
    return multiset(kind(), std::move(flat));
  }

  bool isCanonical() const {
    if (isLeaf()) return true;
    if (children().size() == 1) return false;
    for (std::size_t i = 0; i < children().size(); ++i) {
      const auto& c = children()[i];
      if (c.kind() == kind()) return false;  // covers same-kind units too
      if (i && compare(children()[i - 1], c) > 0) return false;
      if (!c.isCanonical()) return false;
    }
    return true;
  }

  const BasicNest& at(const NestPath& p, std::size_t from = 0) const {
    const BasicNest* cur = this;
    for (std::size_t i = from; i < p.size(); ++i) {
      if (cur->isLeaf() || p[i] >= cur->children().size()) throw BadNestPath();
      cur = &cur->children()[p[i]];
    }
    return *cur;
  }

  // Raw replacement; result usually needs normalized().
  BasicNest replaced(const NestPath& p, const BasicNest& repl, std::size_t from = 0) const {
    if (from == p.size()) return repl;
    if (isLeaf() || p[from] >= children().size()) throw BadNestPath();
    std::vector<BasicNest> kids = children();
    kids[p[from]] = kids[p[from]].replaced(p, repl, from + 1);
    return multiset(kind(), std::move(kids));
  }

 private:
  struct Node {
    NestKind kind;
    LeafT leaf;  // Leaf only
    std::vector<BasicNest> kids;
  };
  explicit BasicNest(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// Substitute then renormalize; the usual context-filling operation.
template <class L>
BasicNest<L> fill_at(const BasicNest<L>& host, const NestPath& p, const BasicNest<L>& repl) {
  return host.replaced(p, repl).normalized();
}

// The elements a nest contributes when merged into a multiset of kind k.
template <class L>
std::vector<BasicNest<L>> elems(const BasicNest<L>& n, NestKind k) {
  if (n.kind() == k) return n.children();
  return {n};
}

template <class L>
BasicNest<L> merge(NestKind k, const std::vector<BasicNest<L>>& parts) {
  std::vector<BasicNest<L>> kids;
  for (const auto& p : parts) {
    auto es = elems(p, k);
    kids.insert(kids.end(), es.begin(), es.end());
  }
  return BasicNest<L>::multiset(k, std::move(kids)).normalized();
}

template <class L>
BasicNest<L> merge(NestKind k, std::initializer_list<BasicNest<L>> parts) {
  return merge(k, std::vector<BasicNest<L>>(parts));
}

template <class L>
void subnest_positions(const BasicNest<L>& n, std::vector<NestPath>& out, NestPath cur = {}) {
  out.push_back(cur);
  if (!n.isLeaf()) {
    for (std::size_t i = 0; i < n.children().size(); ++i) {
      cur.push_back(i);
      subnest_positions(n.children()[i], out, cur);
      cur.pop_back();
    }
  }
}

template <class L>
std::vector<NestPath> subnest_positions(const BasicNest<L>& n) {
  std::vector<NestPath> out;
  subnest_positions(n, out);
  return out;
}

template <class L>
std::vector<NestPath> leaf_positions(const BasicNest<L>& n) {
  std::vector<NestPath> out;
  for (auto& p : subnest_positions(n))
    if (n.at(p).isLeaf()) out.push_back(p);
  return out;
}

// Multiset membership and inclusion on canonical forms.
template <class L>
bool nest_member(const BasicNest<L>& lam, const BasicNest<L>& gamma) {
  if (gamma.isLeaf()) return lam == gamma;
  for (const auto& c : gamma.children())
    if (c == lam) return true;
  return false;
}

template <class L>
bool nest_included(const BasicNest<L>& lam, const BasicNest<L>& gamma) {
  auto members = [](const BasicNest<L>& n) {
    return n.isLeaf() ? std::vector<BasicNest<L>>{n} : n.children();
  };
  std::vector<BasicNest<L>> have = members(gamma);
  for (const auto& want : members(lam)) {
    auto it = std::find(have.begin(), have.end(), want);
    if (it == have.end()) return false;
    have.erase(it);
  }
  return true;
}

// Multiset difference of children lists; nullopt if not included.
template <class L>
std::optional<std::vector<BasicNest<L>>> multiset_subtract(std::vector<BasicNest<L>> have,
                                                           const std::vector<BasicNest<L>>& remove) {
  for (const auto& r : remove) {
    auto it = std::find(have.begin(), have.end(), r);
    if (it == have.end()) return std::nullopt;
    have.erase(it);
  }
  return have;
}

// A hole in a nest: either the whole sub-nest at `pos`, or (when `captured`
// is non-empty) the sub-multiset formed by the captured child indices of
// the multiset node at `pos`.
template <class L>
struct NestContextT {
  BasicNest<L> host;
  NestPath pos;
  std::vector<std::size_t> captured;  // sorted; empty = whole node
  NestKind holeKind;

  BasicNest<L> subnest() const {
    const BasicNest<L>& n = host.at(pos);
    if (captured.empty()) return n;
    std::vector<BasicNest<L>> kids;
    for (auto i : captured) kids.push_back(n.children()[i]);
    return BasicNest<L>::multiset(n.kind(), std::move(kids)).normalized();
  }

  BasicNest<L> fill(const BasicNest<L>& repl) const {
    if (captured.empty()) return fill_at(host, pos, repl);
    const BasicNest<L>& n = host.at(pos);
    std::vector<BasicNest<L>> kids;
    for (std::size_t i = 0; i < n.children().size(); ++i)
      if (!std::binary_search(captured.begin(), captured.end(), i)) kids.push_back(n.children()[i]);
    auto extra = elems(repl, n.kind());
    kids.insert(kids.end(), extra.begin(), extra.end());
    return fill_at(host, pos, BasicNest<L>::multiset(n.kind(), std::move(kids)));
  }
};

// Every hole: the whole nest, every full sub-nest, and every proper
// sub-multiset of every multiset node's children.
template <class L>
std::vector<NestContextT<L>> enumerate_contexts(const BasicNest<L>& n) {
  std::vector<NestContextT<L>> out;
  for (auto& p : subnest_positions(n)) {
    const BasicNest<L>& sub = n.at(p);
    NestKind hk = p.empty() ? sub.kind() : n.at(NestPath(p.begin(), p.end() - 1)).kind();
    if (hk == NestKind::Leaf) hk = NestKind::Plus;  // bare leaf at the root
    out.push_back({n, p, {}, hk});
    if (!sub.isLeaf() && sub.children().size() > 1) {
      std::size_t m = sub.children().size();
      if (m <= 16) {
        for (std::size_t mask = 1; mask + 1 < (std::size_t(1) << m); ++mask) {
          std::vector<std::size_t> cap;
          for (std::size_t i = 0; i < m; ++i)
            if (mask & (std::size_t(1) << i)) cap.push_back(i);
          if (cap.size() < 2) continue;  // single children are covered above
          out.push_back({n, p, cap, sub.kind()});
        }
      }
    }
  }
  return out;
}

}  // namespace bi
