#include <catch2/catch_amalgamated.hpp>

#include "bi/etaprove.hpp"

using namespace bi;

namespace {

const Formula A = Formula::atom("A");
const Formula B = Formula::atom("B");
const Formula C = Formula::atom("C");

NestSequent seq(const char* s) { return parse_nest_sequent(s); }

// The proof of Example 5, node for node.
EtaProof example5_proof() {
  Formula goal = parse_formula("(A * (B & C)) -* ((A * B) & (A * C))");
  Formula starAB = parse_formula("A * B"), starAC = parse_formula("A * C");
  Formula andBC = parse_formula("B & C");

  EtaProof axA1{Rule::EAx, seq("A |- A"), {}};
  EtaProof axB{Rule::EAx, seq("{+ B, C} |- B"), {}};
  EtaProof starR1{Rule::EStarR, seq("{* A, {+ B, C}} |- A * B"), {axA1, axB}};
  EtaProof andL1{Rule::EAndL, seq("{* A, (B & C)} |- A * B"), {starR1}};

  EtaProof axA2{Rule::EAx, seq("A |- A"), {}};
  EtaProof axC{Rule::EAx, seq("{+ B, C} |- C"), {}};
  EtaProof andL2{Rule::EAndL, seq("(B & C) |- C"), {axC}};
  EtaProof starR2{Rule::EStarR, seq("{* A, (B & C)} |- A * C"), {axA2, andL2}};

  EtaProof andR{Rule::EAndR, {parse_nest("{* A, (B & C)}"), Formula::conj(starAB, starAC)},
                {andL1, starR2}};
  EtaProof starL{Rule::EStarL, {Nest::leaf(parse_formula("A * (B & C)")), Formula::conj(starAB, starAC)},
                 {andR}};
  (void)andBC;
  EtaProof wandR{Rule::EWandR, {Nest::emptyTimes(), goal}, {starL}};
  return wandR;
}

}  // namespace

TEST_CASE("the Example 5 proof tree checks") {
  EtaProof p = example5_proof();
  auto r = eta::check(p);
  INFO(r.message);
  CHECK(r.ok);
}

TEST_CASE("Example 5 with swapped star premises is rejected") {
  EtaProof p = example5_proof();
  // reach the *R node for A * B and swap its premises
  EtaProof& starR = p.premises[0].premises[0].premises[0].premises[0];
  REQUIRE(starR.rule == Rule::EStarR);
  std::swap(starR.premises[0], starR.premises[1]);
  CHECK(!eta::check(p));
}

TEST_CASE("context-absorbing axiom") {
  CHECK(eta::check({Rule::EAx, seq("{+ B, C} |- B"), {}}));
  CHECK(!eta::check({Rule::EAx, seq("{* B, C} |- B"), {}}));
  CHECK(!eta::check({Rule::EAx, seq("{+ {* A, B}, C} |- A"), {}}));
}

TEST_CASE("generalised axiom with junk is derivable") {
  for (const char* txt : {"A", "A & B", "A | B", "A -> B", "A * B", "A -* B", "T", "F", "I",
                          "(A -> B) -> (C * I)", "(A * (B & C)) -* ((A * B) & (A * C))"}) {
    Formula f = parse_formula(txt);
    EtaProof plain = eta::identity(f);
    auto r = eta::check(plain);
    INFO(txt << " : " << r.message);
    CHECK(r.ok);

    EtaProof junked = eta::identity_with_junk(f, {Nest::leaf(C), Nest::emptyTimes()});
    auto r2 = eta::check(junked);
    INFO(txt << " junked: " << r2.message);
    CHECK(r2.ok);
  }
}

TEST_CASE("prover: Example 5 sequent") {
  auto res = eta::prove(seq("{*} |- (A * (B & C)) -* ((A * B) & (A * C))"));
  REQUIRE(res.status == SearchStatus::Proved);
  auto r = eta::check(*res.proof);
  INFO(r.message);
  CHECK(r.ok);
  CHECK(res.proof->conclusion == seq("{*} |- (A * (B & C)) -* ((A * B) & (A * C))"));
}

TEST_CASE("prover: axiom case") {
  auto res = eta::prove(seq("A |- A"));
  REQUIRE(res.status == SearchStatus::Proved);
  CHECK(res.proof->rule == Rule::EAx);
}

TEST_CASE("prover: refutations") {
  auto r1 = eta::prove(seq("{* A, B} |- A"), {8, 2});
  CHECK(r1.status == SearchStatus::Refuted);

  auto r2 = eta::prove(seq("A |- A * A"), {8, 2});
  CHECK(r2.status == SearchStatus::Refuted);

  auto r3 = eta::prove(seq("T |- I"), {8, 2});
  CHECK(r3.status == SearchStatus::Refuted);
}

TEST_CASE("prover: needs contraction") {
  // (A -> (A -> B)) ; A |- B requires duplicating the A
  auto res = eta::prove(seq("{+ (A -> (A -> B)), A} |- B"));
  REQUIRE(res.status == SearchStatus::Proved);
  auto ck = eta::check(*res.proof);
  INFO(ck.message);
  CHECK(ck.ok);

  // and is exhausted (not refuted) when the budget forbids it
  auto starved = eta::prove(seq("{+ (A -> (A -> B)), A} |- B"), {12, 0});
  CHECK(starved.status == SearchStatus::Exhausted);
}

TEST_CASE("prover: BI staples") {
  for (const char* s : {
           "{*} |- A -* A",
           "{+ A, B} |- A & B",
           "{* A, B} |- A * B",
           "(A -* (B -* C)) |- (A * B) -* C",
           "((A * B) -* C) |- A -* (B -* C)",
           "(A * (B & C)) |- (A * B) & (A * C)",
           "A |- A & A",
           "(A | A) |- A",
           "{* A, (A -* B)} |- B",
           "{+ (A -> B), A} |- B",
           "Ea |- T",
           "{*} |- I",
           "(A & (A -> B)) |- A & B",
       }) {
    auto res = eta::prove(seq(s), {14, 2});
    INFO(s);
    REQUIRE(res.status == SearchStatus::Proved);
    auto ck = eta::check(*res.proof);
    INFO(ck.message);
    CHECK(ck.ok);
  }
}

TEST_CASE("prover: BI non-theorems stay refuted") {
  for (const char* s : {
           "A |- A * A",          // no multiplicative contraction
           "{* A, B} |- A",       // no multiplicative weakening
           "(A & B) |- A * B",    // conjunctions do not mix
           "{* A, (A -> B)} |- B",
           "T |- I",
           "I |- T & I",  // provable? T yes; I |- I yes... both: actually provable
       }) {
    auto res = eta::prove(seq(s), {10, 2});
    INFO(s);
    if (std::string(s) == "I |- T & I") {
      CHECK(res.status == SearchStatus::Proved);
    } else {
      CHECK(res.status == SearchStatus::Refuted);
    }
  }
}

TEST_CASE("weakening admissibility at desk scale") {
  // if G{L}+ proves, so does G{{L,L'}+}+ for small junk
  for (const char* s : {"{+ (A -> B), A} |- B", "{* A, (A -* B)} |- B", "A |- A & A"}) {
    NestSequent base = seq(s);
    REQUIRE(eta::prove(base).status == SearchStatus::Proved);
    Nest junked = merge(NestKind::Plus, {base.ctx, Nest::leaf(C)});
    CHECK(eta::prove({junked, base.goal}).status == SearchStatus::Proved);
    Nest junked2 = merge(NestKind::Plus, {base.ctx, parse_nest("{* C, C}")});
    CHECK(eta::prove({junked2, base.goal}).status == SearchStatus::Proved);
  }
}

TEST_CASE("exchange is invisible: permuted inputs give identical results") {
  NestSequent a = seq("{+ {* A, C}, B, B, {*}} |- B");
  NestSequent b = seq("{+ B, {*}, B, {* C, A}} |- B");
  CHECK(a == b);
  CHECK(eta::prove(a).status == eta::prove(b).status);
}

TEST_CASE("search report counters are consistent") {
  auto res = eta::prove(seq("(A -* (B -* C)) |- (A * B) -* C"));
  CHECK(res.stats.nodes >= res.stats.decisions);
  CHECK(res.stats.decisions >= res.stats.backtracks);
}
