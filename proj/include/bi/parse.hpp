#pragma once

#include <cctype>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bi/bunch.hpp"
#include "bi/formula.hpp"

namespace bi {

struct ParseError : std::runtime_error {
  std::size_t position;
  ParseError(std::size_t pos, const std::string& msg)
      : std::runtime_error("parse error at " + std::to_string(pos) + ": " + msg), position(pos) {}
};

namespace detail {

enum class Tok {
  Ident, TTop, TBot, TOne, TUnitAdd, TUnitMul,
  And, AndPos, AndNeg, Or, Imp, Star, Wand,
  Semi, Comma, LParen, RParen, LBrace, RBrace, LBracket, RBracket, Plus, Turnstile,
  Down, Up, TopPos, TopNeg, End,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

class Lexer {
 public:
  // In polarised mode a leading 'v' is the down-shift prefix, so atom
  // names beginning with 'v' are not available there.
  explicit Lexer(std::string_view s, bool polarised = false) : s_(s), polarised_(polarised) {
    next();
  }

  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    next();
    return t;
  }
  [[noreturn]] void fail(const std::string& expected) const {
    throw ParseError(tok_.pos, "expected " + expected + ", found '" +
                                   (tok_.kind == Tok::End ? "<end>" : tok_.text) + "'");
  }
  std::size_t mark() const { return i_; }  // opaque; use with reset
  Token marked_tok() const { return tok_; }
  void reset(std::size_t m, Token t) {
    i_ = m;
    tok_ = std::move(t);
  }

 private:
  void next() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    std::size_t start = i_;
    if (i_ >= s_.size()) {
      tok_ = {Tok::End, "", start};
      return;
    }
    char c = s_[i_];
    auto two = [&](char a, char b) { return c == a && i_ + 1 < s_.size() && s_[i_ + 1] == b; };
    if (two('|', '-')) { i_ += 2; tok_ = {Tok::Turnstile, "|-", start}; return; }
    if (two('-', '>')) { i_ += 2; tok_ = {Tok::Imp, "->", start}; return; }
    if (two('-', '*')) { i_ += 2; tok_ = {Tok::Wand, "-*", start}; return; }
    if (two('&', '+')) { i_ += 2; tok_ = {Tok::AndPos, "&+", start}; return; }
    if (two('&', '-')) { i_ += 2; tok_ = {Tok::AndNeg, "&-", start}; return; }
    switch (c) {
      case '&': ++i_; tok_ = {Tok::And, "&", start}; return;
      case '|': ++i_; tok_ = {Tok::Or, "|", start}; return;
      case '*': ++i_; tok_ = {Tok::Star, "*", start}; return;
      case ';': ++i_; tok_ = {Tok::Semi, ";", start}; return;
      case ',': ++i_; tok_ = {Tok::Comma, ",", start}; return;
      case '(': ++i_; tok_ = {Tok::LParen, "(", start}; return;
      case ')': ++i_; tok_ = {Tok::RParen, ")", start}; return;
      case '{': ++i_; tok_ = {Tok::LBrace, "{", start}; return;
      case '}': ++i_; tok_ = {Tok::RBrace, "}", start}; return;
      case '[': ++i_; tok_ = {Tok::LBracket, "[", start}; return;
      case ']': ++i_; tok_ = {Tok::RBracket, "]", start}; return;
      case '+': ++i_; tok_ = {Tok::Plus, "+", start}; return;
      case '^': ++i_; tok_ = {Tok::Up, "^", start}; return;
      default: break;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      if (polarised_ && c == 'v') {
        ++i_;
        tok_ = {Tok::Down, "v", start};
        return;
      }
      std::size_t j = i_;
      while (j < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_')) ++j;
      std::string word(s_.substr(i_, j - i_));
      i_ = j;
      if (word == "T") {
        // T+ / T- are single tokens for the polarised units
        if (i_ < s_.size() && s_[i_] == '+') { ++i_; tok_ = {Tok::TopPos, "T+", start}; return; }
        if (i_ < s_.size() && s_[i_] == '-') { ++i_; tok_ = {Tok::TopNeg, "T-", start}; return; }
        tok_ = {Tok::TTop, "T", start};
        return;
      }
      if (word == "F") { tok_ = {Tok::TBot, "F", start}; return; }
      if (word == "I") { tok_ = {Tok::TOne, "I", start}; return; }
      if (word == "Ea") { tok_ = {Tok::TUnitAdd, "Ea", start}; return; }
      if (word == "Em") { tok_ = {Tok::TUnitMul, "Em", start}; return; }
      tok_ = {Tok::Ident, word, start};
      return;
    }
    throw ParseError(start, std::string("unexpected character '") + c + "'");
  }

  std::string_view s_;
  bool polarised_ = false;
  std::size_t i_ = 0;
  Token tok_{Tok::End, "", 0};
};

// Precedence levels: 3 = {&,*} left, 2 = | left, 1 = {->,-*} right.
class FormulaParser {
 public:
  explicit FormulaParser(Lexer& lx) : lx_(lx) {}

  Formula parse() { return arrow(); }

 private:
  Formula arrow() {
    Formula lhs = orlevel();
    Tok k = lx_.peek().kind;
    if (k == Tok::Imp || k == Tok::Wand) {
      lx_.take();
      Formula rhs = arrow();  // right-associative
      return k == Tok::Imp ? Formula::imp(lhs, rhs) : Formula::wand(lhs, rhs);
    }
    return lhs;
  }
  Formula orlevel() {
    Formula acc = tight();
    while (lx_.peek().kind == Tok::Or) {
      lx_.take();
      acc = Formula::disj(acc, tight());
    }
    return acc;
  }
  Formula tight() {
    Formula acc = primary();
    for (;;) {
      Tok k = lx_.peek().kind;
      if (k == Tok::And) {
        lx_.take();
        acc = Formula::conj(acc, primary());
      } else if (k == Tok::Star) {
        lx_.take();
        acc = Formula::star(acc, primary());
      } else {
        return acc;
      }
    }
  }
  Formula primary() {
    const Token& t = lx_.peek();
    switch (t.kind) {
      case Tok::Ident: return Formula::atom(lx_.take().text);
      case Tok::TTop: lx_.take(); return Formula::top();
      case Tok::TBot: lx_.take(); return Formula::bot();
      case Tok::TOne: lx_.take(); return Formula::one();
      case Tok::LParen: {
        lx_.take();
        Formula f = arrow();
        if (lx_.peek().kind != Tok::RParen) lx_.fail("')'");
        lx_.take();
        return f;
      }
      default: lx_.fail("a formula");
    }
  }

  Lexer& lx_;
};

inline std::optional<Formula> try_formula(Lexer& lx) {
  auto m = lx.mark();
  auto t = lx.marked_tok();
  try {
    return FormulaParser(lx).parse();
  } catch (const ParseError&) {
    lx.reset(m, t);
    return std::nullopt;
  }
}

// Bunch grammar: `;` and `,` are plain binary operators with no precedence
// and no implicit associativity; chains need explicit parentheses.
class BunchParser {
 public:
  explicit BunchParser(Lexer& lx) : lx_(lx) {}

  Bunch parse() {
    Bunch first = primary();
    Tok k = lx_.peek().kind;
    if (k != Tok::Semi && k != Tok::Comma) return first;
    Token op = lx_.take();
    Bunch second = primary();
    Tok after = lx_.peek().kind;
    if (after == Tok::Semi || after == Tok::Comma)
      throw ParseError(lx_.peek().pos, "ambiguous bunch; parenthesize '" + lx_.peek().text + "'");
    return op.kind == Tok::Semi ? Bunch::semi(first, second) : Bunch::comma(first, second);
  }

 private:
  Bunch primary() {
    const Token& t = lx_.peek();
    if (t.kind == Tok::TUnitAdd) { lx_.take(); return Bunch::unitAdd(); }
    if (t.kind == Tok::TUnitMul) { lx_.take(); return Bunch::unitMul(); }
    if (auto f = try_formula(lx_)) return Bunch::leaf(*f);
    if (t.kind == Tok::LParen) {
      lx_.take();
      Bunch b = parse();
      if (lx_.peek().kind != Tok::RParen) lx_.fail("')'");
      lx_.take();
      return b;
    }
    lx_.fail("a bunch");
  }

  Lexer& lx_;
};

inline void expect_end(Lexer& lx) {
  if (lx.peek().kind != Tok::End) lx.fail("end of input");
}

}  // namespace detail

inline Formula parse_formula(std::string_view text) {
  detail::Lexer lx(text);
  Formula f = detail::FormulaParser(lx).parse();
  detail::expect_end(lx);
  return f;
}

inline Bunch parse_bunch(std::string_view text) {
  detail::Lexer lx(text);
  Bunch b = detail::BunchParser(lx).parse();
  detail::expect_end(lx);
  return b;
}

}  // namespace bi
