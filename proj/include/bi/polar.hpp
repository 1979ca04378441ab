#pragma once

// Polarised formulas, polarity assignments, the polarisation procedure and
// its enumeration, and depolarisation.

#include <functional>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "bi/formula.hpp"
#include "bi/parse.hpp"

namespace bi {

enum class PolConn {
  // positive
  PosAtom, Or, Star, AndPos, TopPos, One, Bot, Down,
  // negative
  NegAtom, Imp, Wand, AndNeg, TopNeg, Up,
};

class PolFormula {
  struct Node {
    PolConn kind;
    std::string name;
    std::shared_ptr<const Node> left, right;  // unary: left only
  };

 public:
  PolFormula() = default;

  static PolFormula posAtom(std::string n) { return mk(PolConn::PosAtom, std::move(n), {}, {}); }
  static PolFormula negAtom(std::string n) { return mk(PolConn::NegAtom, std::move(n), {}, {}); }
  static PolFormula topPos() { return mk(PolConn::TopPos, {}, {}, {}); }
  static PolFormula topNeg() { return mk(PolConn::TopNeg, {}, {}, {}); }
  static PolFormula one() { return mk(PolConn::One, {}, {}, {}); }
  static PolFormula bot() { return mk(PolConn::Bot, {}, {}, {}); }
  static PolFormula disj(const PolFormula& a, const PolFormula& b) {
    requirePos(a); requirePos(b);
    return mk(PolConn::Or, {}, a.node_, b.node_);
  }
  static PolFormula star(const PolFormula& a, const PolFormula& b) {
    requirePos(a); requirePos(b);
    return mk(PolConn::Star, {}, a.node_, b.node_);
  }
  static PolFormula andPos(const PolFormula& a, const PolFormula& b) {
    requirePos(a); requirePos(b);
    return mk(PolConn::AndPos, {}, a.node_, b.node_);
  }
  static PolFormula andNeg(const PolFormula& a, const PolFormula& b) {
    requireNeg(a); requireNeg(b);
    return mk(PolConn::AndNeg, {}, a.node_, b.node_);
  }
  static PolFormula imp(const PolFormula& a, const PolFormula& b) {
    requirePos(a); requireNeg(b);
    return mk(PolConn::Imp, {}, a.node_, b.node_);
  }
  static PolFormula wand(const PolFormula& a, const PolFormula& b) {
    requirePos(a); requireNeg(b);
    return mk(PolConn::Wand, {}, a.node_, b.node_);
  }
  static PolFormula down(const PolFormula& n) {
    requireNeg(n);
    return mk(PolConn::Down, {}, n.node_, {});
  }
  static PolFormula up(const PolFormula& p) {
    requirePos(p);
    return mk(PolConn::Up, {}, p.node_, {});
  }

  bool valid() const { return node_ != nullptr; }
  PolConn kind() const { return node_->kind; }
  bool is(PolConn c) const { return node_ && node_->kind == c; }
  const std::string& atomName() const { return node_->name; }
  PolFormula left() const { return PolFormula(node_->left); }
  PolFormula right() const { return PolFormula(node_->right); }
  PolFormula shiftee() const { return PolFormula(node_->left); }

  bool positive() const {
    switch (node_->kind) {
      case PolConn::PosAtom: case PolConn::Or: case PolConn::Star: case PolConn::AndPos:
      case PolConn::TopPos: case PolConn::One: case PolConn::Bot: case PolConn::Down:
        return true;
      default: return false;
    }
  }
  bool negative() const { return !positive(); }
  bool isAtom() const { return is(PolConn::PosAtom) || is(PolConn::NegAtom); }
  bool isShift() const { return is(PolConn::Down) || is(PolConn::Up); }
  bool isBinary() const { return node_->right != nullptr; }

  // L ::= vN | A+  and  R ::= ^P | A-
  bool isLeftNeutral() const { return is(PolConn::Down) || is(PolConn::PosAtom); }
  bool isRightNeutral() const { return is(PolConn::Up) || is(PolConn::NegAtom); }

  std::size_t size() const { return size(node_.get()); }

  friend bool operator==(const PolFormula& a, const PolFormula& b) { return compare(a, b) == 0; }
  friend bool operator!=(const PolFormula& a, const PolFormula& b) { return compare(a, b) != 0; }
  friend bool operator<(const PolFormula& a, const PolFormula& b) { return compare(a, b) < 0; }
  static int compare(const PolFormula& a, const PolFormula& b) {
    return compare(a.node_.get(), b.node_.get());
  }

 private:
  explicit PolFormula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static PolFormula mk(PolConn k, std::string n, std::shared_ptr<const Node> l,
                       std::shared_ptr<const Node> r) {
    return PolFormula(std::make_shared<const Node>(Node{k, std::move(n), std::move(l), std::move(r)}));
  }
  static void requirePos(const PolFormula& f) {
    if (!f.valid() || !f.positive()) throw std::invalid_argument("positive argument required");
  }
  static void requireNeg(const PolFormula& f) {
    if (!f.valid() || !f.negative()) throw std::invalid_argument("negative argument required");
  }
  static std::size_t size(const Node* n) {
    if (!n) return 0;
    return 1 + size(n->left.get()) + size(n->right.get());
  }
  static int compare(const Node* a, const Node* b) {
    if (a == b) return 0;
    if (!a || !b) return a ? 1 : -1;
    if (a->kind != b->kind) return a->kind < b->kind ? -1 : 1;
    if (int c = a->name.compare(b->name)) return c < 0 ? -1 : 1;
    if (int c = compare(a->left.get(), b->left.get())) return c;
    return compare(a->right.get(), b->right.get());
  }

  std::shared_ptr<const Node> node_;
};

// Only vN, A+, ^P, A-, v^P and ^vN chains; never v^vN or deeper.
inline bool shift_chain_ok(const PolFormula& f) {
  if (!f.valid()) return true;
  if (f.isShift()) {
    PolFormula inner = f.shiftee();
    if (inner.isShift() && inner.shiftee().isShift()) return false;
  }
  if (f.isShift()) return shift_chain_ok(f.shiftee());
  if (f.isBinary()) return shift_chain_ok(f.left()) && shift_chain_ok(f.right());
  return true;
}

inline Formula depolarise(const PolFormula& f) {
  switch (f.kind()) {
    case PolConn::PosAtom:
    case PolConn::NegAtom: return Formula::atom(f.atomName());
    case PolConn::TopPos:
    case PolConn::TopNeg: return Formula::top();
    case PolConn::One: return Formula::one();
    case PolConn::Bot: return Formula::bot();
    case PolConn::Or: return Formula::disj(depolarise(f.left()), depolarise(f.right()));
    case PolConn::Star: return Formula::star(depolarise(f.left()), depolarise(f.right()));
    case PolConn::AndPos:
    case PolConn::AndNeg: return Formula::conj(depolarise(f.left()), depolarise(f.right()));
    case PolConn::Imp: return Formula::imp(depolarise(f.left()), depolarise(f.right()));
    case PolConn::Wand: return Formula::wand(depolarise(f.left()), depolarise(f.right()));
    case PolConn::Down:
    case PolConn::Up: return depolarise(f.shiftee());
  }
  return {};
}

// atom name -> positive?
using PolarityAssignment = std::map<std::string, bool>;

inline bool atom_positive(const PolarityAssignment& a, const std::string& name) {
  auto it = a.find(name);
  if (it == a.end()) throw std::invalid_argument("no polarity assigned to atom " + name);
  return it->second;
}

struct PolarisationStrategy {
  enum class Top { Pos, Neg } top = Top::Pos;
  enum class And { Pos, Neg, Alternating } conj = And::Pos;
  enum class Outer { AsIs, Pos, Neg } outer = Outer::AsIs;
};

inline PolFormula coerce_positive(const PolFormula& f) {
  return f.positive() ? f : PolFormula::down(f);
}
inline PolFormula coerce_negative(const PolFormula& f) {
  return f.negative() ? f : PolFormula::up(f);
}

namespace detail {
inline PolFormula polarise_rec(const Formula& f, const PolarityAssignment& a,
                               const PolarisationStrategy& s, int andDepth) {
  using S = PolarisationStrategy;
  switch (f.kind()) {
    case Conn::Atom:
      return atom_positive(a, f.atomName()) ? PolFormula::posAtom(f.atomName())
                                            : PolFormula::negAtom(f.atomName());
    case Conn::Top: return s.top == S::Top::Pos ? PolFormula::topPos() : PolFormula::topNeg();
    case Conn::Bot: return PolFormula::bot();
    case Conn::One: return PolFormula::one();
    case Conn::And: {
      bool pos = s.conj == S::And::Pos || (s.conj == S::And::Alternating && andDepth % 2 == 0);
      PolFormula l = polarise_rec(f.left(), a, s, andDepth + 1);
      PolFormula r = polarise_rec(f.right(), a, s, andDepth + 1);
      return pos ? PolFormula::andPos(coerce_positive(l), coerce_positive(r))
                 : PolFormula::andNeg(coerce_negative(l), coerce_negative(r));
    }
    case Conn::Or:
      return PolFormula::disj(coerce_positive(polarise_rec(f.left(), a, s, andDepth)),
                              coerce_positive(polarise_rec(f.right(), a, s, andDepth)));
    case Conn::Star:
      return PolFormula::star(coerce_positive(polarise_rec(f.left(), a, s, andDepth)),
                              coerce_positive(polarise_rec(f.right(), a, s, andDepth)));
    case Conn::Imp:
      return PolFormula::imp(coerce_positive(polarise_rec(f.left(), a, s, andDepth)),
                             coerce_negative(polarise_rec(f.right(), a, s, andDepth)));
    case Conn::Wand:
      return PolFormula::wand(coerce_positive(polarise_rec(f.left(), a, s, andDepth)),
                              coerce_negative(polarise_rec(f.right(), a, s, andDepth)));
  }
  throw std::logic_error("unreachable");
}
}  // namespace detail

// Minimal-shift polarisation under a deterministic choice policy.
inline PolFormula polarise(const Formula& f, const PolarityAssignment& a,
                           const PolarisationStrategy& s = {}) {
  PolFormula r = detail::polarise_rec(f, a, s, 0);
  switch (s.outer) {
    case PolarisationStrategy::Outer::AsIs: return r;
    case PolarisationStrategy::Outer::Pos: return coerce_positive(r);
    case PolarisationStrategy::Outer::Neg: return coerce_negative(r);
  }
  return r;
}

// Every polarisation reachable by varying the T and & choices per
// occurrence, plus the one optional outer shift. Finite and duplicate-free.
inline std::vector<PolFormula> enumerate_polarisations(const Formula& f,
                                                       const PolarityAssignment& a) {
  std::function<std::vector<PolFormula>(const Formula&)> rec =
      [&](const Formula& g) -> std::vector<PolFormula> {
    std::vector<PolFormula> out;
    auto both = [&](const Formula& l, const Formula& r,
                    auto combine) {
      for (const auto& x : rec(l))
        for (const auto& y : rec(r)) combine(x, y);
    };
    switch (g.kind()) {
      case Conn::Atom:
        out.push_back(atom_positive(a, g.atomName()) ? PolFormula::posAtom(g.atomName())
                                                     : PolFormula::negAtom(g.atomName()));
        break;
      case Conn::Top:
        out.push_back(PolFormula::topPos());
        out.push_back(PolFormula::topNeg());
        break;
      case Conn::Bot: out.push_back(PolFormula::bot()); break;
      case Conn::One: out.push_back(PolFormula::one()); break;
      case Conn::And:
        both(g.left(), g.right(), [&](const PolFormula& x, const PolFormula& y) {
          out.push_back(PolFormula::andPos(coerce_positive(x), coerce_positive(y)));
          out.push_back(PolFormula::andNeg(coerce_negative(x), coerce_negative(y)));
        });
        break;
      case Conn::Or:
        both(g.left(), g.right(), [&](const PolFormula& x, const PolFormula& y) {
          out.push_back(PolFormula::disj(coerce_positive(x), coerce_positive(y)));
        });
        break;
      case Conn::Star:
        both(g.left(), g.right(), [&](const PolFormula& x, const PolFormula& y) {
          out.push_back(PolFormula::star(coerce_positive(x), coerce_positive(y)));
        });
        break;
      case Conn::Imp:
        both(g.left(), g.right(), [&](const PolFormula& x, const PolFormula& y) {
          out.push_back(PolFormula::imp(coerce_positive(x), coerce_negative(y)));
        });
        break;
      case Conn::Wand:
        both(g.left(), g.right(), [&](const PolFormula& x, const PolFormula& y) {
          out.push_back(PolFormula::wand(coerce_positive(x), coerce_negative(y)));
        });
        break;
    }
    return out;
  };
  std::set<PolFormula> seen;
  std::vector<PolFormula> result;
  auto add = [&](const PolFormula& p) {
    if (seen.insert(p).second) result.push_back(p);
  };
  for (const auto& p : rec(f)) {
    add(p);
    add(p.positive() ? PolFormula::up(p) : PolFormula::down(p));
  }
  return result;
}

}  // namespace bi
