#pragma once

#include <string>

#include "bi/bunch.hpp"
#include "bi/formula.hpp"

namespace bi {

namespace detail {

inline int prec(Conn c) {
  switch (c) {
    case Conn::And:
    case Conn::Star: return 3;
    case Conn::Or: return 2;
    case Conn::Imp:
    case Conn::Wand: return 1;
    default: return 4;
  }
}

inline void print_formula_rec(const Formula& f, std::string& out, int parentPrec, bool rightOfSame) {
  switch (f.kind()) {
    case Conn::Atom: out += f.atomName(); return;
    case Conn::Top: out += 'T'; return;
    case Conn::Bot: out += 'F'; return;
    case Conn::One: out += 'I'; return;
    default: break;
  }
  int p = prec(f.kind());
  bool rightAssoc = p == 1;
  // Left-assoc operators need parens on an equal-precedence right child;
  // right-assoc ones on an equal-precedence left child.
  bool needParen = p < parentPrec || (p == parentPrec && rightOfSame != rightAssoc);
  if (needParen) out += '(';
  print_formula_rec(f.left(), out, p, false);
  switch (f.kind()) {
    case Conn::And: out += " & "; break;
    case Conn::Or: out += " | "; break;
    case Conn::Imp: out += " -> "; break;
    case Conn::Star: out += " * "; break;
    case Conn::Wand: out += " -* "; break;
    default: break;
  }
  print_formula_rec(f.right(), out, p, true);
  if (needParen) out += ')';
}

}  // namespace detail

inline std::string print_formula(const Formula& f) {
  std::string out;
  detail::print_formula_rec(f, out, 0, false);
  return out;
}

inline std::string print_bunch(const Bunch& b) {
  switch (b.kind()) {
    case BunchKind::UnitAdd: return "Ea";
    case BunchKind::UnitMul: return "Em";
    case BunchKind::Leaf: {
      // A leaf that is a bare atom or unit needs no parens inside a bunch;
      // compound formulas are parenthesized so `,`/`;` cannot bleed in.
      const Formula& f = b.formula();
      std::string s = print_formula(f);
      if (f.isBinary()) return "(" + s + ")";
      return s;
    }
    case BunchKind::Semi:
    case BunchKind::Comma: {
      auto sub = [](const Bunch& c) {
        std::string s = print_bunch(c);
        if (c.isComplex()) return "(" + s + ")";
        return s;
      };
      return sub(b.left()) + (b.kind() == BunchKind::Semi ? " ; " : " , ") + sub(b.right());
    }
  }
  return {};
}

}  // namespace bi
