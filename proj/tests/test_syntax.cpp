#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "bi/parse.hpp"
#include "bi/print.hpp"

using namespace bi;

TEST_CASE("formula parsing basics") {
  CHECK(parse_formula("A") == Formula::atom("A"));
  CHECK(parse_formula("T") == Formula::top());
  CHECK(parse_formula("F") == Formula::bot());
  CHECK(parse_formula("I") == Formula::one());
  CHECK(parse_formula("foo_1") == Formula::atom("foo_1"));
}

TEST_CASE("the Example 5 goal formula") {
  Formula f = parse_formula("(A * (B & C)) -* ((A * B) & (A * C))");
  Formula a = Formula::atom("A"), b = Formula::atom("B"), c = Formula::atom("C");
  CHECK(f == Formula::wand(Formula::star(a, Formula::conj(b, c)),
                           Formula::conj(Formula::star(a, b), Formula::star(a, c))));
}

TEST_CASE("arrows are right-associative") {
  CHECK(parse_formula("A -* B -* C") == parse_formula("A -* (B -* C)"));
  CHECK(parse_formula("A -> B -> C") == parse_formula("A -> (B -> C)"));
  CHECK(parse_formula("A -* B -* C") != parse_formula("(A -* B) -* C"));
}

TEST_CASE("precedence: tight > or > arrows") {
  CHECK(parse_formula("A & B | C") == parse_formula("(A & B) | C"));
  CHECK(parse_formula("A | B -> C") == parse_formula("(A | B) -> C"));
  CHECK(parse_formula("A & B * C") == parse_formula("(A & B) * C"));
}

TEST_CASE("formula syntax errors carry positions") {
  CHECK_THROWS_AS(parse_formula("A &"), ParseError);
  CHECK_THROWS_AS(parse_formula("(A"), ParseError);
  CHECK_THROWS_AS(parse_formula(""), ParseError);
  try {
    parse_formula("A & & B");
  } catch (const ParseError& e) {
    CHECK(e.position == 4);
  }
}

TEST_CASE("bunch parsing") {
  CHECK(parse_bunch("Em") == Bunch::unitMul());
  CHECK(parse_bunch("Ea") == Bunch::unitAdd());

  Bunch ex1 = parse_bunch("(A , (C ; Ea)) ; (B ; (B ; Em))");
  Formula a = Formula::atom("A"), b = Formula::atom("B"), c = Formula::atom("C");
  Bunch expected = Bunch::semi(
      Bunch::comma(Bunch::leaf(a), Bunch::semi(Bunch::leaf(c), Bunch::unitAdd())),
      Bunch::semi(Bunch::leaf(b), Bunch::semi(Bunch::leaf(b), Bunch::unitMul())));
  CHECK(ex1 == expected);
}

TEST_CASE("bunch operators do not chain implicitly") {
  CHECK_THROWS_AS(parse_bunch("A ; B ; C"), ParseError);
  CHECK_THROWS_AS(parse_bunch("A , B ; C"), ParseError);
  CHECK_NOTHROW(parse_bunch("(A ; B) ; C"));
  CHECK_NOTHROW(parse_bunch("A , (B ; C)"));
}

TEST_CASE("bunch leaves may be compound formulas") {
  Bunch b = parse_bunch("((A & B) -> C) ; D");
  REQUIRE(b.is(BunchKind::Semi));
  CHECK(b.left().formula() == parse_formula("(A & B) -> C"));
}

namespace {

Formula random_formula(std::mt19937& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 4 : 9);
  switch (pick(rng)) {
    case 0: return Formula::atom("A");
    case 1: return Formula::atom("B");
    case 2: return Formula::top();
    case 3: return Formula::bot();
    case 4: return Formula::one();
    case 5: return Formula::conj(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
    case 6: return Formula::disj(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
    case 7: return Formula::imp(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
    case 8: return Formula::star(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
    default: return Formula::wand(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
  }
}

Bunch random_bunch(std::mt19937& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 2 : 4);
  switch (pick(rng)) {
    case 0: return Bunch::leaf(random_formula(rng, 2));
    case 1: return Bunch::unitAdd();
    case 2: return Bunch::unitMul();
    case 3: return Bunch::semi(random_bunch(rng, depth - 1), random_bunch(rng, depth - 1));
    default: return Bunch::comma(random_bunch(rng, depth - 1), random_bunch(rng, depth - 1));
  }
}

}  // namespace

TEST_CASE("print/parse round-trip on random formulas") {
  std::mt19937 rng(20240517);
  for (int i = 0; i < 1000; ++i) {
    Formula f = random_formula(rng, 6);
    CHECK(parse_formula(print_formula(f)) == f);
  }
}

TEST_CASE("print/parse round-trip on random bunches") {
  std::mt19937 rng(987654);
  CHECK(print_bunch(Bunch::unitAdd()) == "Ea");
  for (int i = 0; i < 1000; ++i) {
    Bunch b = random_bunch(rng, 4);
    CHECK(parse_bunch(print_bunch(b)) == b);
  }
}

TEST_CASE("rank counts context-former alternations (Example 2)") {
  Bunch delta = parse_bunch("(A , (C ; Ea)) ; (B ; (B ; Em))");
  using enum Step;
  BunchPath posUnitAdd{Left, Right, Right};
  BunchPath posUnitMul{Right, Right, Right};
  REQUIRE(subbunch_at(delta, posUnitAdd) == Bunch::unitAdd());
  REQUIRE(subbunch_at(delta, posUnitMul) == Bunch::unitMul());
  CHECK(rank(delta, posUnitAdd) == 2);
  CHECK(rank(delta, posUnitMul) == 0);
  CHECK(rank(delta, {Left}) == 0);
  CHECK(rank(delta, {Right}) == 0);
  CHECK_THROWS_AS(rank(delta, {}), BadBunchPath);
  CHECK_THROWS_AS(rank(delta, BunchPath{Left, Left, Left}), BadBunchPath);
}

TEST_CASE("rank is zero along a same-kind spine") {
  Bunch b = parse_bunch("(A ; (B ; C)) ; D");
  for (auto& p : all_positions(b))
    if (!p.empty()) CHECK(rank(b, p) == 0);
}

TEST_CASE("replace_subbunch is literal substitution (Example 1)") {
  Bunch delta = parse_bunch("(A , (C ; Ea)) ; (B ; (B ; Em))");
  Bunch phiphi = parse_bunch("A ; A");
  Bunch replaced = replace_subbunch(delta, {Step::Left}, phiphi);
  CHECK(replaced == parse_bunch("(A ; A) ; (B ; (B ; Em))"));

  CHECK(replace_subbunch(delta, {}, phiphi) == phiphi);

  // no unit absorption happens at this layer
  Bunch pair = parse_bunch("A , B");
  CHECK(replace_subbunch(pair, {Step::Left}, Bunch::unitMul()) == parse_bunch("Em , B"));

  for (auto& p : all_positions(delta))
    CHECK(replace_subbunch(delta, p, subbunch_at(delta, p)) == delta);
}
