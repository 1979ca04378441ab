#pragma once

// ASCII form of the polarised syntax: v = down-shift, ^ = up-shift,
// &+ / &- and T+ / T- for the two conjunctions and truths. Atoms print
// bare; their polarity is recovered from the grammar slot when parsing.

#include "bi/polnest.hpp"

namespace bi {

namespace detail {

inline int pprec(PolConn c) {
  switch (c) {
    case PolConn::AndPos: case PolConn::AndNeg: case PolConn::Star: return 3;
    case PolConn::Or: return 2;
    case PolConn::Imp: case PolConn::Wand: return 1;
    default: return 5;
  }
}

inline void print_pol_rec(const PolFormula& f, std::string& out, int parentPrec, bool rightOfSame) {
  switch (f.kind()) {
    case PolConn::PosAtom:
    case PolConn::NegAtom: out += f.atomName(); return;
    case PolConn::TopPos: out += "T+"; return;
    case PolConn::TopNeg: out += "T-"; return;
    case PolConn::One: out += 'I'; return;
    case PolConn::Bot: out += 'F'; return;
    case PolConn::Down:
    case PolConn::Up: {
      out += f.is(PolConn::Down) ? 'v' : '^';
      PolFormula inner = f.shiftee();
      bool paren = inner.isBinary();
      if (paren) out += '(';
      print_pol_rec(inner, out, paren ? 0 : 5, false);
      if (paren) out += ')';
      return;
    }
    default: break;
  }
  int p = pprec(f.kind());
  bool rightAssoc = p == 1;
  bool needParen = p < parentPrec || (p == parentPrec && rightOfSame != rightAssoc);
  if (needParen) out += '(';
  print_pol_rec(f.left(), out, p, false);
  switch (f.kind()) {
    case PolConn::AndPos: out += " &+ "; break;
    case PolConn::AndNeg: out += " &- "; break;
    case PolConn::Or: out += " | "; break;
    case PolConn::Imp: out += " -> "; break;
    case PolConn::Star: out += " * "; break;
    case PolConn::Wand: out += " -* "; break;
    default: break;
  }
  print_pol_rec(f.right(), out, p, true);
  if (needParen) out += ')';
}

}  // namespace detail

inline std::string print_polformula(const PolFormula& f) {
  std::string out;
  detail::print_pol_rec(f, out, 0, false);
  return out;
}

namespace detail {

// Pre-terms: parsed shape before polarity resolution.
struct PrePol {
  enum K { Atom, TopP, TopN, One, Bot, AndP, AndN, Or, Star, Imp, Wand, Down, Up } k;
  std::string name;
  std::size_t pos = 0;
  std::vector<PrePol> kids;
};

class PolParser {
 public:
  explicit PolParser(Lexer& lx) : lx_(lx) {}

  PrePol parse() { return arrow(); }

 private:
  PrePol arrow() {
    PrePol lhs = orlevel();
    Tok k = lx_.peek().kind;
    if (k == Tok::Imp || k == Tok::Wand) {
      std::size_t pos = lx_.take().pos;
      PrePol rhs = arrow();
      return {k == Tok::Imp ? PrePol::Imp : PrePol::Wand, {}, pos, {lhs, rhs}};
    }
    return lhs;
  }
  PrePol orlevel() {
    PrePol acc = tight();
    while (lx_.peek().kind == Tok::Or) {
      std::size_t pos = lx_.take().pos;
      acc = {PrePol::Or, {}, pos, {acc, tight()}};
    }
    return acc;
  }
  PrePol tight() {
    PrePol acc = primary();
    for (;;) {
      Tok k = lx_.peek().kind;
      if (k == Tok::AndPos || k == Tok::AndNeg || k == Tok::Star) {
        std::size_t pos = lx_.take().pos;
        PrePol::K kk = k == Tok::AndPos ? PrePol::AndP : k == Tok::AndNeg ? PrePol::AndN : PrePol::Star;
        acc = {kk, {}, pos, {acc, primary()}};
      } else if (k == Tok::And) {
        lx_.fail("'&+' or '&-' (polarised conjunction)");
      } else {
        return acc;
      }
    }
  }
  PrePol primary() {
    const Token& t = lx_.peek();
    switch (t.kind) {
      case Tok::Ident: {
        Token tok = lx_.take();
        return {PrePol::Atom, tok.text, tok.pos, {}};
      }
      case Tok::TopPos: return {PrePol::TopP, {}, lx_.take().pos, {}};
      case Tok::TopNeg: return {PrePol::TopN, {}, lx_.take().pos, {}};
      case Tok::TTop: lx_.fail("'T+' or 'T-' (polarised truth)");
      case Tok::TOne: return {PrePol::One, {}, lx_.take().pos, {}};
      case Tok::TBot: return {PrePol::Bot, {}, lx_.take().pos, {}};
      case Tok::Down: {
        std::size_t pos = lx_.take().pos;
        return {PrePol::Down, {}, pos, {primary()}};
      }
      case Tok::Up: {
        std::size_t pos = lx_.take().pos;
        return {PrePol::Up, {}, pos, {primary()}};
      }
      case Tok::LParen: {
        lx_.take();
        PrePol f = arrow();
        if (lx_.peek().kind != Tok::RParen) lx_.fail("')'");
        lx_.take();
        return f;
      }
      default: lx_.fail("a polarised formula");
    }
  }

  Lexer& lx_;
};

inline PolFormula resolve_pol(const PrePol& p, bool wantPositive) {
  auto mismatch = [&](const char* what) -> PolFormula {
    throw ParseError(p.pos, std::string(what) + (wantPositive ? " in a positive slot" : " in a negative slot"));
  };
  switch (p.k) {
    case PrePol::Atom:
      return wantPositive ? PolFormula::posAtom(p.name) : PolFormula::negAtom(p.name);
    case PrePol::TopP: return wantPositive ? PolFormula::topPos() : mismatch("'T+'");
    case PrePol::TopN: return !wantPositive ? PolFormula::topNeg() : mismatch("'T-'");
    case PrePol::One: return wantPositive ? PolFormula::one() : mismatch("'I'");
    case PrePol::Bot: return wantPositive ? PolFormula::bot() : mismatch("'F'");
    case PrePol::AndP:
      if (!wantPositive) mismatch("'&+'");
      return PolFormula::andPos(resolve_pol(p.kids[0], true), resolve_pol(p.kids[1], true));
    case PrePol::Or:
      if (!wantPositive) mismatch("'|'");
      return PolFormula::disj(resolve_pol(p.kids[0], true), resolve_pol(p.kids[1], true));
    case PrePol::Star:
      if (!wantPositive) mismatch("'*'");
      return PolFormula::star(resolve_pol(p.kids[0], true), resolve_pol(p.kids[1], true));
    case PrePol::AndN:
      if (wantPositive) mismatch("'&-'");
      return PolFormula::andNeg(resolve_pol(p.kids[0], false), resolve_pol(p.kids[1], false));
    case PrePol::Imp:
      if (wantPositive) mismatch("'->'");
      return PolFormula::imp(resolve_pol(p.kids[0], true), resolve_pol(p.kids[1], false));
    case PrePol::Wand:
      if (wantPositive) mismatch("'-*'");
      return PolFormula::wand(resolve_pol(p.kids[0], true), resolve_pol(p.kids[1], false));
    case PrePol::Down:
      if (!wantPositive) mismatch("'v'");
      return PolFormula::down(resolve_pol(p.kids[0], false));
    case PrePol::Up:
      if (wantPositive) mismatch("'^'");
      return PolFormula::up(resolve_pol(p.kids[0], true));
  }
  throw ParseError(p.pos, "unresolvable polarised formula");
}

inline PolNest parse_polnest_rec(Lexer& lx) {
  const Token& t = lx.peek();
  if (t.kind == Tok::LBrace) {
    lx.take();
    NestKind k;
    if (lx.peek().kind == Tok::Plus)
      k = NestKind::Plus;
    else if (lx.peek().kind == Tok::Star)
      k = NestKind::Times;
    else
      lx.fail("'+' or '*' after '{'");
    lx.take();
    std::vector<PolNest> kids;
    if (lx.peek().kind != Tok::RBrace) {
      kids.push_back(parse_polnest_rec(lx));
      while (lx.peek().kind == Tok::Comma) {
        lx.take();
        kids.push_back(parse_polnest_rec(lx));
      }
    }
    if (lx.peek().kind != Tok::RBrace) lx.fail("'}'");
    lx.take();
    return PolNest::multiset(k, std::move(kids));
  }
  if (t.kind == Tok::LBracket) {
    lx.take();
    PrePol pre = PolParser(lx).parse();
    if (lx.peek().kind != Tok::RBracket) lx.fail("']'");
    lx.take();
    return pfocus(resolve_pol(pre, false));  // a left focus is negative
  }
  PrePol pre = PolParser(lx).parse();
  return pleaf(resolve_pol(pre, true));  // ordinary leaves are positive
}

}  // namespace detail

// `positive` selects the polarity the slot demands.
inline PolFormula parse_polformula(std::string_view text, bool positive) {
  detail::Lexer lx(text, true);
  detail::PrePol pre = detail::PolParser(lx).parse();
  detail::expect_end(lx);
  return detail::resolve_pol(pre, positive);
}

inline std::string print_polnest(const PolNest& n) {
  if (n.isLeaf()) {
    const PolLeaf& l = n.leafValue();
    std::string s = print_polformula(l.f);
    if (l.focus) return "[" + s + "]";
    if (l.f.isBinary()) return "(" + s + ")";
    return s;
  }
  std::string out = n.isPlus() ? "{+" : "{*";
  bool first = true;
  for (const auto& c : n.children()) {
    out += first ? " " : ", ";
    out += print_polnest(c);
    first = false;
  }
  out += "}";
  return out;
}

inline PolNest parse_polnest(std::string_view text) {
  detail::Lexer lx(text, true);
  PolNest n = detail::parse_polnest_rec(lx);
  detail::expect_end(lx);
  return n.normalized();
}

inline std::string print_sequent(const PolSequent& s) {
  std::string goal = print_polformula(s.goal);
  if (s.rightFocus) goal = "[" + goal + "]";
  return print_polnest(s.ctx) + " |- " + goal;
}

inline PolSequent parse_polsequent(std::string_view text) {
  detail::Lexer lx(text, true);
  PolNest ctx = detail::parse_polnest_rec(lx).normalized();
  if (lx.peek().kind != detail::Tok::Turnstile) lx.fail("'|-'");
  lx.take();
  bool rf = false;
  PolFormula goal;
  if (lx.peek().kind == detail::Tok::LBracket) {
    lx.take();
    rf = true;
    detail::PrePol pre = detail::PolParser(lx).parse();
    if (lx.peek().kind != detail::Tok::RBracket) lx.fail("']'");
    lx.take();
    goal = detail::resolve_pol(pre, true);
  } else {
    detail::PrePol pre = detail::PolParser(lx).parse();
    goal = detail::resolve_pol(pre, false);
  }
  detail::expect_end(lx);
  return {ctx, goal, rf};
}

}  // namespace bi
