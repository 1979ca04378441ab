#pragma once

#include <string>

#include "bi/bunch.hpp"
#include "bi/nest.hpp"
#include "bi/parse.hpp"
#include "bi/print.hpp"

namespace bi {

using Nest = BasicNest<Formula>;
using NestContext = NestContextT<Formula>;

// eta: quotient a bunch by coherent equivalence. The naive recursive image
// (Semi -> Plus, Comma -> Times) followed by normalization collapses
// same-kind spines, absorbs same-kind units and promotes singletons, which
// is exactly the canonical-translation behaviour on complex bunches.
inline Nest nestify_raw(const Bunch& b) {
  switch (b.kind()) {
    case BunchKind::Leaf: return Nest::leaf(b.formula());
    case BunchKind::UnitAdd: return Nest::emptyPlus();
    case BunchKind::UnitMul: return Nest::emptyTimes();
    case BunchKind::Semi: return Nest::plus({nestify_raw(b.left()), nestify_raw(b.right())});
    case BunchKind::Comma: return Nest::times({nestify_raw(b.left()), nestify_raw(b.right())});
  }
  return {};
}

inline Nest nestify(const Bunch& b) { return nestify_raw(b).normalized(); }

// beta: right-nested binary combs over the canonical child order.
inline Bunch bunchify(const Nest& n) {
  if (n.isLeaf()) return Bunch::leaf(n.leafValue());
  const bool add = n.isPlus();
  const auto& kids = n.children();
  if (kids.empty()) return add ? Bunch::unitAdd() : Bunch::unitMul();
  Bunch acc = bunchify(kids.back());
  for (std::size_t i = kids.size() - 1; i-- > 0;) {
    Bunch l = bunchify(kids[i]);
    acc = add ? Bunch::semi(l, acc) : Bunch::comma(l, acc);
  }
  return acc;
}

inline bool coherent_equiv(const Bunch& a, const Bunch& b) { return nestify(a) == nestify(b); }

inline std::string print_nest(const Nest& n) {
  if (n.isLeaf()) {
    const Formula& f = n.leafValue();
    std::string s = print_formula(f);
    return f.isBinary() ? "(" + s + ")" : s;
  }
  std::string out = n.isPlus() ? "{+" : "{*";
  bool first = true;
  for (const auto& c : n.children()) {
    out += first ? " " : ", ";
    out += print_nest(c);
    first = false;
  }
  out += "}";
  return out;
}

namespace detail {

inline Nest parse_nest_rec(Lexer& lx) {
  const Token& t = lx.peek();
  if (t.kind == Tok::LBrace) {
    lx.take();
    NestKind k;
    if (lx.peek().kind == Tok::Plus) {
      k = NestKind::Plus;
    } else if (lx.peek().kind == Tok::Star) {
      k = NestKind::Times;
    } else {
      lx.fail("'+' or '*' after '{'");
    }
    lx.take();
    std::vector<Nest> kids;
    if (lx.peek().kind != Tok::RBrace) {
      kids.push_back(parse_nest_rec(lx));
      while (lx.peek().kind == Tok::Comma) {
        lx.take();
        kids.push_back(parse_nest_rec(lx));
      }
    }
    if (lx.peek().kind != Tok::RBrace) lx.fail("'}'");
    lx.take();
    return Nest::multiset(k, std::move(kids));
  }
  if (t.kind == Tok::TUnitAdd) { lx.take(); return Nest::emptyPlus(); }
  if (t.kind == Tok::TUnitMul) { lx.take(); return Nest::emptyTimes(); }
  if (auto f = try_formula(lx)) return Nest::leaf(*f);
  lx.fail("a nest");
}

}  // namespace detail

// Accepts arbitrary element order / nesting; result is canonical.
inline Nest parse_nest(std::string_view text) {
  detail::Lexer lx(text);
  Nest n = detail::parse_nest_rec(lx);
  detail::expect_end(lx);
  return n.normalized();
}

}  // namespace bi
