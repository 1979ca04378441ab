#pragma once

// System LBI over bunches: rules of Figure 1 together with the derivable
// weakening-absorbing variants (Ax', TR', IR', *R', -*L'). The checker
// matches contexts exactly as written; coherent equivalence enters only
// through the E rule.

#include <optional>
#include <string>

#include "bi/print.hpp"
#include "bi/proof.hpp"
#include "bi/translate.hpp"

namespace bi {

struct BunchSequent {
  Bunch ctx;
  Formula goal;

  friend bool operator==(const BunchSequent& a, const BunchSequent& b) {
    return a.ctx == b.ctx && a.goal == b.goal;
  }
  friend bool operator!=(const BunchSequent& a, const BunchSequent& b) { return !(a == b); }
};

using LbiProof = ProofT<BunchSequent>;

inline std::string print_sequent(const BunchSequent& s) {
  return print_bunch(s.ctx) + " |- " + print_formula(s.goal);
}

inline BunchSequent parse_bunch_sequent(std::string_view text) {
  detail::Lexer lx(text);
  Bunch ctx = detail::BunchParser(lx).parse();
  if (lx.peek().kind != detail::Tok::Turnstile) lx.fail("'|-'");
  lx.take();
  Formula goal = detail::FormulaParser(lx).parse();
  detail::expect_end(lx);
  return {ctx, goal};
}

namespace lbi {

inline std::vector<BunchPath> leaf_paths(const Bunch& b, const Formula& f) {
  std::vector<BunchPath> out;
  for (auto& p : all_positions(b)) {
    Bunch sub = subbunch_at(b, p);
    if (sub.isLeaf() && sub.formula() == f) out.push_back(p);
  }
  return out;
}

// One rule instance: does `concl` follow from the premise conclusions?
inline CheckResult check_step(Rule r, const BunchSequent& concl,
                              const std::vector<BunchSequent>& prem) {
  auto info = rule_info(r);
  if (info.calculus != Calculus::Lbi) return CheckResult::bad("not an LBI rule");
  if (static_cast<int>(prem.size()) != info.arity) return CheckResult::bad("wrong premise count");
  auto fail = [&](const char* what) {
    return CheckResult::bad(std::string(what) + " in " + std::string(info.name) + ": " +
                            print_sequent(concl));
  };

  const Bunch& ctx = concl.ctx;
  const Formula& goal = concl.goal;

  switch (r) {
    case Rule::LAx:
      if (goal.isAtom() && ctx.isLeaf() && ctx.formula() == goal) return CheckResult::good();
      return fail("expected atomic A |- A");
    case Rule::LAxW:
      if (goal.isAtom() && ctx.is(BunchKind::Semi) && ctx.right().isLeaf() &&
          ctx.right().formula() == goal)
        return CheckResult::good();
      return fail("expected Delta;A |- A");
    case Rule::LTopR:
      if (goal.is(Conn::Top) && ctx.is(BunchKind::UnitAdd)) return CheckResult::good();
      return fail("expected Ea |- T");
    case Rule::LTopRW:
      if (goal.is(Conn::Top) && ctx.is(BunchKind::Semi) && ctx.right().is(BunchKind::UnitAdd))
        return CheckResult::good();
      return fail("expected Delta;Ea |- T");
    case Rule::LOneR:
      if (goal.is(Conn::One) && ctx.is(BunchKind::UnitMul)) return CheckResult::good();
      return fail("expected Em |- I");
    case Rule::LOneRW:
      if (goal.is(Conn::One) && ctx.is(BunchKind::Semi) && ctx.right().is(BunchKind::UnitMul))
        return CheckResult::good();
      return fail("expected Delta;Em |- I");
    case Rule::LBotL:
      for (auto& p : leaf_paths(ctx, Formula::bot())) {
        (void)p;
        return CheckResult::good();
      }
      return fail("no falsum leaf");
    case Rule::LOneL:
      if (prem[0].goal != goal) return fail("goal changed");
      for (auto& p : leaf_paths(ctx, Formula::one()))
        if (replace_subbunch(ctx, p, Bunch::unitMul()) == prem[0].ctx) return CheckResult::good();
      return fail("no unit leaf matching the premise");
    case Rule::LAndL: {
      if (prem[0].goal != goal) return fail("goal changed");
      for (auto& p : all_positions(ctx)) {
        Bunch sub = subbunch_at(ctx, p);
        if (!sub.isLeaf() || !sub.formula().is(Conn::And)) continue;
        Bunch split = Bunch::semi(Bunch::leaf(sub.formula().left()), Bunch::leaf(sub.formula().right()));
        if (replace_subbunch(ctx, p, split) == prem[0].ctx) return CheckResult::good();
      }
      return fail("no conjunction leaf matching the premise");
    }
    case Rule::LAndR:
      if (!goal.is(Conn::And)) return fail("goal is not a conjunction");
      if (!ctx.is(BunchKind::Semi)) return fail("context is not an additive pair");
      if (ctx.left() == prem[0].ctx && ctx.right() == prem[1].ctx && prem[0].goal == goal.left() &&
          prem[1].goal == goal.right())
        return CheckResult::good();
      return fail("premises do not split the context");
    case Rule::LOrL: {
      if (prem[0].goal != goal || prem[1].goal != goal) return fail("goal changed");
      for (auto& p : all_positions(ctx)) {
        Bunch sub = subbunch_at(ctx, p);
        if (!sub.isLeaf() || !sub.formula().is(Conn::Or)) continue;
        if (replace_subbunch(ctx, p, Bunch::leaf(sub.formula().left())) == prem[0].ctx &&
            replace_subbunch(ctx, p, Bunch::leaf(sub.formula().right())) == prem[1].ctx)
          return CheckResult::good();
      }
      return fail("no disjunction leaf matching the premises");
    }
    case Rule::LOrR1:
      if (goal.is(Conn::Or) && prem[0].ctx == ctx && prem[0].goal == goal.left())
        return CheckResult::good();
      return fail("bad left injection");
    case Rule::LOrR2:
      if (goal.is(Conn::Or) && prem[0].ctx == ctx && prem[0].goal == goal.right())
        return CheckResult::good();
      return fail("bad right injection");
    case Rule::LImpL: {
      if (prem[1].goal != goal) return fail("goal changed");
      Formula impf = Formula::imp(prem[0].goal, Formula::atom("x"));
      (void)impf;
      for (auto& p : all_positions(ctx)) {
        Bunch sub = subbunch_at(ctx, p);
        if (!sub.is(BunchKind::Semi)) continue;
        Bunch rhs = sub.right();
        if (!rhs.isLeaf() || !rhs.formula().is(Conn::Imp)) continue;
        const Formula& f = rhs.formula();
        if (f.left() != prem[0].goal) continue;
        if (sub.left() != prem[0].ctx) continue;
        if (replace_subbunch(ctx, p, Bunch::leaf(f.right())) == prem[1].ctx)
          return CheckResult::good();
      }
      return fail("no (Delta ; phi->psi) region matching the premises");
    }
    case Rule::LImpR:
      if (goal.is(Conn::Imp) && prem[0].goal == goal.right() &&
          prem[0].ctx == Bunch::semi(ctx, Bunch::leaf(goal.left())))
        return CheckResult::good();
      return fail("premise context is not ctx;antecedent");
    case Rule::LStarL: {
      if (prem[0].goal != goal) return fail("goal changed");
      for (auto& p : all_positions(ctx)) {
        Bunch sub = subbunch_at(ctx, p);
        if (!sub.isLeaf() || !sub.formula().is(Conn::Star)) continue;
        Bunch split =
            Bunch::comma(Bunch::leaf(sub.formula().left()), Bunch::leaf(sub.formula().right()));
        if (replace_subbunch(ctx, p, split) == prem[0].ctx) return CheckResult::good();
      }
      return fail("no star leaf matching the premise");
    }
    case Rule::LStarR:
      if (!goal.is(Conn::Star)) return fail("goal is not a star");
      if (ctx.is(BunchKind::Comma) && ctx.left() == prem[0].ctx && ctx.right() == prem[1].ctx &&
          prem[0].goal == goal.left() && prem[1].goal == goal.right())
        return CheckResult::good();
      return fail("context is not the comma split of the premises");
    case Rule::LStarRW:
      if (!goal.is(Conn::Star)) return fail("goal is not a star");
      if (ctx.is(BunchKind::Semi) && ctx.left().is(BunchKind::Comma) &&
          ctx.left().left() == prem[0].ctx && ctx.left().right() == prem[1].ctx &&
          prem[0].goal == goal.left() && prem[1].goal == goal.right())
        return CheckResult::good();
      return fail("context is not (Delta,Delta');Delta''");
    case Rule::LWandL: {
      if (prem[1].goal != goal) return fail("goal changed");
      for (auto& p : all_positions(ctx)) {
        Bunch sub = subbunch_at(ctx, p);
        if (!sub.is(BunchKind::Comma)) continue;
        Bunch rhs = sub.right();
        if (!rhs.isLeaf() || !rhs.formula().is(Conn::Wand)) continue;
        const Formula& f = rhs.formula();
        if (f.left() != prem[0].goal) continue;
        if (sub.left() != prem[0].ctx) continue;
        if (replace_subbunch(ctx, p, Bunch::leaf(f.right())) == prem[1].ctx)
          return CheckResult::good();
      }
      return fail("no (Delta , phi-*psi) region matching the premises");
    }
    case Rule::LWandLW: {
      if (prem[1].goal != goal) return fail("goal changed");
      // Delta(Delta' , (Delta'' , (Delta''' ; phi -* psi))) with premises
      // Delta' |- phi and Delta(Delta'' , psi); the comb is read right-nested.
      for (auto& p : all_positions(ctx)) {
        Bunch sub = subbunch_at(ctx, p);
        if (!sub.is(BunchKind::Comma)) continue;
        if (sub.left() != prem[0].ctx) continue;
        Bunch inner = sub.right();
        if (!inner.is(BunchKind::Comma)) continue;
        Bunch keep = inner.left();
        Bunch semi = inner.right();
        if (!semi.is(BunchKind::Semi)) continue;
        Bunch wandLeaf = semi.right();
        if (!wandLeaf.isLeaf() || !wandLeaf.formula().is(Conn::Wand)) continue;
        const Formula& f = wandLeaf.formula();
        if (f.left() != prem[0].goal) continue;
        Bunch replacement = Bunch::comma(keep, Bunch::leaf(f.right()));
        if (replace_subbunch(ctx, p, replacement) == prem[1].ctx) return CheckResult::good();
      }
      return fail("no (Delta',Delta'',(Delta''';phi-*psi)) region matching the premises");
    }
    case Rule::LWandR:
      if (goal.is(Conn::Wand) && prem[0].goal == goal.right() &&
          prem[0].ctx == Bunch::comma(ctx, Bunch::leaf(goal.left())))
        return CheckResult::good();
      return fail("premise context is not ctx,antecedent");
    case Rule::LW: {
      if (prem[0].goal != goal) return fail("goal changed");
      for (auto& p : all_positions(ctx)) {
        Bunch sub = subbunch_at(ctx, p);
        if (!sub.is(BunchKind::Semi)) continue;
        if (replace_subbunch(ctx, p, sub.left()) == prem[0].ctx) return CheckResult::good();
      }
      return fail("conclusion does not weaken the premise");
    }
    case Rule::LC: {
      if (prem[0].goal != goal) return fail("goal changed");
      for (auto& p : all_positions(ctx)) {
        Bunch sub = subbunch_at(ctx, p);
        if (replace_subbunch(ctx, p, Bunch::semi(sub, sub)) == prem[0].ctx)
          return CheckResult::good();
      }
      return fail("premise does not duplicate a sub-bunch");
    }
    case Rule::LE:
      if (prem[0].goal == goal && coherent_equiv(prem[0].ctx, ctx)) return CheckResult::good();
      return fail("contexts are not coherently equivalent");
    case Rule::LCut: {
      if (prem[1].goal != goal) return fail("goal changed");
      for (auto& p : leaf_paths(prem[1].ctx, prem[0].goal))
        if (replace_subbunch(prem[1].ctx, p, prem[0].ctx) == ctx) return CheckResult::good();
      return fail("conclusion does not splice the cut premise");
    }
    default: return CheckResult::bad("not an LBI rule");
  }
}

inline CheckResult check(const LbiProof& p) {
  for (std::size_t i = 0; i < p.premises.size(); ++i)
    if (auto r = check(p.premises[i]); !r) return r.nest_under(i);
  std::vector<BunchSequent> prem;
  for (auto& q : p.premises) prem.push_back(q.conclusion);
  return check_step(p.rule, p.conclusion, prem);
}

// Lemma 2: phi |- phi is derivable for every formula.
inline LbiProof identity(const Formula& f) {
  Bunch lf = Bunch::leaf(f);
  BunchSequent concl{lf, f};
  switch (f.kind()) {
    case Conn::Atom: return {Rule::LAx, concl, {}};
    case Conn::Top: {
      LbiProof ax{Rule::LTopRW, {Bunch::semi(lf, Bunch::unitAdd()), f}, {}};
      return {Rule::LE, concl, {ax}};
    }
    case Conn::One: {
      LbiProof oneR{Rule::LOneR, {Bunch::unitMul(), f}, {}};
      return {Rule::LOneL, concl, {oneR}};
    }
    case Conn::Bot: return {Rule::LBotL, concl, {}};
    case Conn::And: {
      Bunch split = Bunch::semi(Bunch::leaf(f.left()), Bunch::leaf(f.right()));
      LbiProof andR{Rule::LAndR, {split, f}, {identity(f.left()), identity(f.right())}};
      return {Rule::LAndL, concl, {andR}};
    }
    case Conn::Or: {
      LbiProof inl{Rule::LOrR1, {Bunch::leaf(f.left()), f}, {identity(f.left())}};
      LbiProof inr{Rule::LOrR2, {Bunch::leaf(f.right()), f}, {identity(f.right())}};
      return {Rule::LOrL, concl, {inl, inr}};
    }
    case Conn::Star: {
      Bunch split = Bunch::comma(Bunch::leaf(f.left()), Bunch::leaf(f.right()));
      LbiProof starR{Rule::LStarR, {split, f}, {identity(f.left()), identity(f.right())}};
      return {Rule::LStarL, concl, {starR}};
    }
    case Conn::Imp: {
      Bunch flipped = Bunch::semi(Bunch::leaf(f.left()), lf);
      LbiProof impL{Rule::LImpL,
                    {flipped, f.right()},
                    {identity(f.left()), identity(f.right())}};
      LbiProof ex{Rule::LE, {Bunch::semi(lf, Bunch::leaf(f.left())), f.right()}, {impL}};
      return {Rule::LImpR, concl, {ex}};
    }
    case Conn::Wand: {
      Bunch flipped = Bunch::comma(Bunch::leaf(f.left()), lf);
      LbiProof wandL{Rule::LWandL,
                     {flipped, f.right()},
                     {identity(f.left()), identity(f.right())}};
      LbiProof ex{Rule::LE, {Bunch::comma(lf, Bunch::leaf(f.left())), f.right()}, {wandL}};
      return {Rule::LWandR, concl, {ex}};
    }
  }
  return {Rule::LAx, concl, {}};
}

}  // namespace lbi
}  // namespace bi
