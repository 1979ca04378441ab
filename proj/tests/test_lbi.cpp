#include <catch2/catch_amalgamated.hpp>

#include "bi/lbi.hpp"

using namespace bi;

TEST_CASE("one-node axiom proofs") {
  BunchSequent s{Bunch::leaf(Formula::atom("A")), Formula::atom("A")};
  LbiProof ax{Rule::LAx, s, {}};
  CHECK(lbi::check(ax));

  // Ax is atomic only
  Formula cmp = parse_formula("A & B");
  LbiProof bad{Rule::LAx, {Bunch::leaf(cmp), cmp}, {}};
  CHECK(!lbi::check(bad));
}

TEST_CASE("Lemma 2 identity expansions check") {
  for (const char* txt : {"A", "A & B", "A | B", "A -> B", "A * B", "A -* B", "T", "F", "I",
                          "A * B", "(A * (B & C)) -* ((A * B) & (A * C))",
                          "((A -> B) & (B -> A)) | (A * (B -* C))"}) {
    Formula f = parse_formula(txt);
    LbiProof p = lbi::identity(f);
    auto r = lbi::check(p);
    INFO(txt << ": " << r.message);
    CHECK(r.ok);
    CHECK(p.conclusion.ctx == Bunch::leaf(f));
    CHECK(p.conclusion.goal == f);
  }
}

TEST_CASE("star-right needs a comma split") {
  // *R applied with a context that is not a comma split must be rejected
  Formula ab = parse_formula("A * B");
  BunchSequent concl{parse_bunch("A ; B"), ab};
  LbiProof l{Rule::LAx, {Bunch::leaf(Formula::atom("A")), Formula::atom("A")}, {}};
  LbiProof r{Rule::LAx, {Bunch::leaf(Formula::atom("B")), Formula::atom("B")}, {}};
  LbiProof bad{Rule::LStarR, concl, {l, r}};
  auto res = lbi::check(bad);
  CHECK(!res.ok);
  CHECK(res.message.find("*R") != std::string::npos);

  LbiProof good{Rule::LStarR, {parse_bunch("A , B"), ab}, {l, r}};
  CHECK(lbi::check(good));
}

TEST_CASE("weakening-absorbing variants") {
  CHECK(lbi::check({Rule::LAxW, parse_bunch_sequent("(B , C) ; A |- A"), {}}));
  CHECK(lbi::check({Rule::LTopRW, parse_bunch_sequent("B ; Ea |- T"), {}}));
  CHECK(lbi::check({Rule::LOneRW, parse_bunch_sequent("B ; Em |- I"), {}}));
  CHECK(!lbi::check({Rule::LAxW, parse_bunch_sequent("A ; B |- A"), {}}));

  LbiProof l{Rule::LAx, parse_bunch_sequent("A |- A"), {}};
  LbiProof r{Rule::LAx, parse_bunch_sequent("B |- B"), {}};
  CHECK(lbi::check({Rule::LStarRW, parse_bunch_sequent("(A , B) ; C |- A * B"), {l, r}}));
}

TEST_CASE("structural rules") {
  LbiProof ax{Rule::LAx, parse_bunch_sequent("A |- A"), {}};
  LbiProof weak{Rule::LW, parse_bunch_sequent("A ; B |- A"), {ax}};
  CHECK(lbi::check(weak));

  LbiProof ex{Rule::LE, parse_bunch_sequent("B ; A |- A"), {weak}};
  CHECK(lbi::check(ex));

  LbiProof contracted{Rule::LC, parse_bunch_sequent("A |- A"),
                      {LbiProof{Rule::LW, parse_bunch_sequent("A ; A |- A"), {ax}}}};
  CHECK(lbi::check(contracted));

  // E only bridges coherently equivalent contexts
  LbiProof badEx{Rule::LE, parse_bunch_sequent("B , A |- A"), {weak}};
  CHECK(!lbi::check(badEx));
}

TEST_CASE("cut nodes are representable and checked") {
  LbiProof axA{Rule::LAx, parse_bunch_sequent("A |- A"), {}};
  LbiProof orR{Rule::LOrR1, parse_bunch_sequent("A |- A | B"), {axA}};
  LbiProof id = lbi::identity(parse_formula("A | B"));
  LbiProof cut{Rule::LCut, parse_bunch_sequent("A |- A | B"), {orR, id}};
  CHECK(lbi::check(cut));

  LbiProof badCut{Rule::LCut, parse_bunch_sequent("B |- A | B"), {orR, id}};
  CHECK(!lbi::check(badCut));
}

TEST_CASE("check reports the failing node") {
  LbiProof ax{Rule::LAx, parse_bunch_sequent("A |- A"), {}};
  LbiProof broken{Rule::LAndR, parse_bunch_sequent("A ; A |- A & B"), {ax, ax}};
  auto r = lbi::check(broken);
  REQUIRE(!r.ok);
  CHECK(r.where.empty());  // failure is at the root itself

  LbiProof deeper{Rule::LAndL, parse_bunch_sequent("A & A |- A"),
                  {LbiProof{Rule::LAx, parse_bunch_sequent("A ; A |- A"), {}}}};
  auto r2 = lbi::check(deeper);
  REQUIRE(!r2.ok);
  CHECK(r2.where == std::vector<std::size_t>{0});
}
