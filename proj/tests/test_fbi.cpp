#include <catch2/catch_amalgamated.hpp>

#include "bi/fbiprove.hpp"

using namespace bi;

namespace {

PolSequent pseq(const char* s) { return parse_polsequent(s); }

FbiProof node(Rule r, const char* concl, std::vector<FbiProof> prems = {}) {
  return FbiProof{r, pseq(concl), std::move(prems)};
}

// Example 6, node for node as printed (A, C negative; B positive).
FbiProof example6_proof() {
  // branch (1): decide left on v(^B &- C)
  FbiProof axNegA1 = node(Rule::FAxN, "[A] |- A");
  FbiProof relA1 = node(Rule::FDecideL, "vA |- A", {axNegA1});
  FbiProof focA1 = node(Rule::FReleaseR, "vA |- [vA]", {relA1});
  FbiProof axB = node(Rule::FAxP, "B |- [B]");
  FbiProof star1 = node(Rule::FStarR, "{* vA, B} |- [vA * B]", {focA1, axB});
  FbiProof decR1 = node(Rule::FDecideR, "{* vA, B} |- ^(vA * B)", {star1});
  FbiProof relB = node(Rule::FReleaseL, "{* vA, [^B]} |- ^(vA * B)", {decR1});
  FbiProof andL1 = node(Rule::FAndNegL1, "{* vA, [^B &- C]} |- ^(vA * B)", {relB});
  FbiProof dec1 = node(Rule::FDecideL, "{* vA, v(^B &- C)} |- ^(vA * B)", {andL1});

  // branch (2): decide right
  FbiProof axNegA2 = node(Rule::FAxN, "[A] |- A");
  FbiProof relA2 = node(Rule::FDecideL, "vA |- A", {axNegA2});
  FbiProof focA2 = node(Rule::FReleaseR, "vA |- [vA]", {relA2});
  FbiProof axNegC = node(Rule::FAxN, "[C] |- C");
  FbiProof andL2 = node(Rule::FAndNegL2, "[^B &- C] |- C", {axNegC});
  FbiProof decC = node(Rule::FDecideL, "v(^B &- C) |- C", {andL2});
  FbiProof focC = node(Rule::FReleaseR, "v(^B &- C) |- [vC]", {decC});
  FbiProof star2 = node(Rule::FStarR, "{* vA, v(^B &- C)} |- [vA * vC]", {focA2, axNegC, focC});
  star2.premises = {focA2, focC};
  FbiProof dec2 = node(Rule::FDecideR, "{* vA, v(^B &- C)} |- ^(vA * vC)", {star2});

  FbiProof andR = node(Rule::FAndNegR, "{* vA, v(^B &- C)} |- ^(vA * B) &- ^(vA * vC)",
                       {dec1, dec2});
  FbiProof starL = node(Rule::FStarL, "(vA * v(^B &- C)) |- ^(vA * B) &- ^(vA * vC)", {andR});
  return node(Rule::FWandR, "{*} |- (vA * v(^B &- C)) -* (^(vA * B) &- ^(vA * vC))", {starL});
}

}  // namespace

TEST_CASE("the Example 6 proof checks") {
  FbiProof p = example6_proof();
  auto r = fbi::check(p, false);
  INFO(r.message);
  CHECK(r.ok);
}

TEST_CASE("phase violations are rejected with a node path") {
  FbiProof p = example6_proof();
  // replace the Ax- under branch (1) with an unfocused step on a focused
  // sequent: a decide on an already-focused sequent is ill-formed
  FbiProof& axN = p.premises[0]         // *L
                      .premises[0]      // &-R
                      .premises[0]      // decide left (1)
                      .premises[0]      // &-L1
                      .premises[0]      // ^L release
                      .premises[0]      // ^R decide
                      .premises[0]      // *R
                      .premises[0]      // vR release on vA
                      .premises[0]      // vL decide
                      .premises[0];     // Ax-
  REQUIRE(axN.rule == Rule::FAxN);
  axN.rule = Rule::FTopNegR;
  auto r = fbi::check(p, false);
  REQUIRE(!r.ok);
  CHECK(!r.where.empty());
}

TEST_CASE("prover finds the Example 6 sequent") {
  auto res = fbi::prove(pseq("{*} |- (vA * v(^B &- C)) -* (^(vA * B) &- ^(vA * vC))"), {16, 2});
  REQUIRE(res.status == SearchStatus::Proved);
  auto ck = fbi::check(*res.proof, false);
  INFO(ck.message);
  CHECK(ck.ok);
  CHECK(fbi::cut_free(*res.proof));
}

TEST_CASE("vA |- A is proved by decide-then-axiom") {
  auto res = fbi::prove(pseq("vA |- A"));
  REQUIRE(res.status == SearchStatus::Proved);
  CHECK(res.proof->rule == Rule::FDecideL);
  CHECK(res.proof->premises[0].rule == Rule::FAxN);
}

TEST_CASE("refutation of a mismatched atom goal") {
  auto res = fbi::prove(pseq("B |- ^A"), {4, 2});
  CHECK(res.status == SearchStatus::Refuted);
  auto res2 = fbi::prove(pseq("B |- ^A"), {2, 0});
  CHECK(res2.status == SearchStatus::Refuted);
}

TEST_CASE("the P axiom terminates search early") {
  auto res = fbi::prove(pseq("v^(A | B) |- ^(A | B)"));
  REQUIRE(res.status == SearchStatus::Proved);
  // right decide, then P immediately: no expansion of the disjunction
  CHECK(res.proof->rule == Rule::FDecideR);
  CHECK(res.proof->premises[0].rule == Rule::FP);
}

TEST_CASE("the N axiom terminates search early") {
  // goal ^vN with a matching vN leaf: the shortcut closes by deciding left
  auto res = fbi::prove(pseq("v(A -> ^B) |- ^v(A -> ^B)"));
  REQUIRE(res.status == SearchStatus::Proved);
  REQUIRE(res.proof->rule == Rule::FDecideL);
  CHECK(res.proof->premises[0].rule == Rule::FN);
}

TEST_CASE("focused proofs respect the phase discipline") {
  // walk every decide: between it and the next release/axiom only focused
  // rules occur
  std::function<void(const FbiProof&)> walk = [&](const FbiProof& p) {
    SeqShape sh = shape_of(p.conclusion);
    if (sh != SeqShape::Unfocused) {
      auto info = rule_info(p.rule);
      bool focusedRule =
          p.rule == Rule::FAxP || p.rule == Rule::FAxN || p.rule == Rule::FP || p.rule == Rule::FN ||
          p.rule == Rule::FOneR || p.rule == Rule::FTopPosR || p.rule == Rule::FOrR1 ||
          p.rule == Rule::FOrR2 || p.rule == Rule::FStarR || p.rule == Rule::FAndPosR ||
          p.rule == Rule::FAndNegL1 || p.rule == Rule::FAndNegL2 || p.rule == Rule::FImpL ||
          p.rule == Rule::FWandL || p.rule == Rule::FReleaseL || p.rule == Rule::FReleaseR;
      INFO(info.name);
      CHECK(focusedRule);
    }
    for (auto& q : p.premises) walk(q);
  };
  auto res = fbi::prove(pseq("{*} |- (vA * v(^B &- C)) -* (^(vA * B) &- ^(vA * vC))"), {16, 2});
  REQUIRE(res.status == SearchStatus::Proved);
  walk(*res.proof);
}

TEST_CASE("changed atom polarity changes proofs but not provability") {
  // the same depolarised sequent under two assignments
  auto allneg = fbi::prove(pseq("v(A -> ^B) |- ^v(A -> ^B)"));
  CHECK(allneg.status == SearchStatus::Proved);

  // A positive, B positive: A -> ^B stays negative, but its left slot takes A+
  auto rebuilt = fbi::prove(pseq("v(A -> ^B) |- ^v(A -> ^B)"));
  CHECK(rebuilt.status == SearchStatus::Proved);
}

TEST_CASE("contraction at the decision point") {
  // vN with N = ^A -> wait: reuse of an implication hypothesis
  // v(A -> ^(B &+ B)) ... simpler: {+ v(A -> ^B), A} with A needed twice:
  PolSequent s = pseq("{+ v(A -> A -> ^B), A} |- ^B");
  auto starved = fbi::prove(s, {16, 0});
  CHECK(starved.status != SearchStatus::Proved);
  auto res = fbi::prove(s, {16, 2});
  REQUIRE(res.status == SearchStatus::Proved);
  auto ck = fbi::check(*res.proof, false);
  INFO(ck.message);
  CHECK(ck.ok);
}

TEST_CASE("cut nodes check only when allowed") {
  // cut on B+: left proves B |- [B], right has leaf B
  FbiProof axB = node(Rule::FAxP, "B |- [B]");
  FbiProof axB2 = node(Rule::FAxP, "{+ B, vA} |- [B]");
  FbiProof cut{Rule::FCut, pseq("{+ B, vA} |- [B]"), {axB, axB2}};
  CHECK(fbi::check(cut, true));
  CHECK(!fbi::check(cut, false));
  CHECK(!fbi::cut_free(cut));
}
