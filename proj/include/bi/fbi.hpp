#pragma once

// The focused system FBI (Figure 3). Sequents are polarised; the phase
// discipline is enforced by the sequent shapes themselves: focused rules
// only form instances at focused sequents and vice versa.

#include "bi/etalbi.hpp"
#include "bi/polprint.hpp"

namespace bi {

inline Nest depolarise_nest(const PolNest& n) {
  if (n.isLeaf()) return Nest::leaf(depolarise(n.leafValue().f));
  std::vector<Nest> kids;
  for (const auto& c : n.children()) kids.push_back(depolarise_nest(c));
  return Nest::multiset(n.kind(), std::move(kids)).normalized();
}

inline NestSequent depolarise_sequent(const PolSequent& s) {
  return {depolarise_nest(s.ctx), depolarise(s.goal)};
}

namespace fbi {

inline bool additively_present(const PolNest& ctx, const PolNest& x) {
  if (ctx == x) return true;
  return ctx.isPlus() && nest_member(x, ctx);
}

inline std::vector<NestPath> plain_leaf_positions(const PolNest& n, PolConn c) {
  std::vector<NestPath> out;
  for (auto& p : leaf_positions(n)) {
    const PolLeaf& l = n.at(p).leafValue();
    if (!l.focus && l.f.is(c)) out.push_back(p);
  }
  return out;
}

inline std::vector<std::size_t> ordered_masks(std::size_t n) {
  std::vector<std::size_t> masks;
  for (std::size_t m = 0; m < (std::size_t(1) << n); ++m) masks.push_back(m);
  std::sort(masks.begin(), masks.end(), [](std::size_t a, std::size_t b) {
    int pa = __builtin_popcountll(a), pb = __builtin_popcountll(b);
    return pa != pb ? pa < pb : a < b;
  });
  return masks;
}

// Where a focused -* or an implication-bundle lives, mirroring the nested
// calculus: additive junk next to the focus is dropped, the enclosing
// multiplicative multiset is split.
struct FocusSite {
  NestPath leaf;
  NestPath timesPos;
  std::vector<PolNest> timesSiblings;
  std::vector<PolNest> addSiblings;
  NestPath addPos;  // == leaf when the focus has no additive bundle
};

inline FocusSite focus_site(const PolNest& ctx, const NestPath& q) {
  FocusSite site;
  site.leaf = q;
  site.addPos = q;
  NestPath bundle = q;
  if (!q.empty()) {
    NestPath parent(q.begin(), q.end() - 1);
    if (ctx.at(parent).isPlus()) {
      bundle = parent;
      site.addPos = parent;
      const auto& kids = ctx.at(parent).children();
      for (std::size_t i = 0; i < kids.size(); ++i)
        if (i != q.back()) site.addSiblings.push_back(kids[i]);
    }
  }
  site.timesPos = bundle;
  if (!bundle.empty()) {
    NestPath parent(bundle.begin(), bundle.end() - 1);
    if (ctx.at(parent).isTimes()) {
      site.timesPos = parent;
      const auto& kids = ctx.at(parent).children();
      for (std::size_t i = 0; i < kids.size(); ++i)
        if (i != bundle.back()) site.timesSiblings.push_back(kids[i]);
    }
  }
  return site;
}

// All backward instances of `r` at `concl` (premise tuples). FCut is
// excluded; its left premise is unconstrained.
inline std::vector<std::vector<PolSequent>> instances(Rule r, const PolSequent& s) {
  std::vector<std::vector<PolSequent>> out;
  if (!validate_polsequent(s)) return out;
  const PolNest& ctx = s.ctx;
  const PolFormula& goal = s.goal;
  const SeqShape shape = shape_of(s);

  auto unfocusedOnly = [&] { return shape == SeqShape::Unfocused; };
  auto push = [&](std::vector<PolSequent> t) { out.push_back(std::move(t)); };

  switch (r) {
    // ---- unfocused: right inversion ----
    case Rule::FTopNegR:
      if (unfocusedOnly() && goal.is(PolConn::TopNeg)) push({});
      break;
    case Rule::FAndNegR:
      if (unfocusedOnly() && goal.is(PolConn::AndNeg))
        push({{ctx, goal.left(), false}, {ctx, goal.right(), false}});
      break;
    case Rule::FImpR:
      if (unfocusedOnly() && goal.is(PolConn::Imp))
        push({{merge(NestKind::Plus, {ctx, pleaf(goal.left())}), goal.right(), false}});
      break;
    case Rule::FWandR:
      if (unfocusedOnly() && goal.is(PolConn::Wand))
        push({{merge(NestKind::Times, {ctx, pleaf(goal.left())}), goal.right(), false}});
      break;

    // ---- unfocused: left inversion ----
    case Rule::FBotL:
      if (unfocusedOnly() && !plain_leaf_positions(ctx, PolConn::Bot).empty()) push({});
      break;
    case Rule::FOneL:
      if (unfocusedOnly())
        for (auto& p : plain_leaf_positions(ctx, PolConn::One))
          push({{fill_at(ctx, p, PolNest::emptyTimes()), goal, false}});
      break;
    case Rule::FTopPosL:
      if (unfocusedOnly())
        for (auto& p : plain_leaf_positions(ctx, PolConn::TopPos))
          push({{fill_at(ctx, p, PolNest::emptyPlus()), goal, false}});
      break;
    case Rule::FAndPosL:
      if (unfocusedOnly())
        for (auto& p : plain_leaf_positions(ctx, PolConn::AndPos)) {
          PolFormula f = ctx.at(p).leafValue().f;
          push({{fill_at(ctx, p, PolNest::plus({pleaf(f.left()), pleaf(f.right())})), goal, false}});
        }
      break;
    case Rule::FStarL:
      if (unfocusedOnly())
        for (auto& p : plain_leaf_positions(ctx, PolConn::Star)) {
          PolFormula f = ctx.at(p).leafValue().f;
          push({{fill_at(ctx, p, PolNest::times({pleaf(f.left()), pleaf(f.right())})), goal, false}});
        }
      break;
    case Rule::FOrL:
      if (unfocusedOnly())
        for (auto& p : plain_leaf_positions(ctx, PolConn::Or)) {
          PolFormula f = ctx.at(p).leafValue().f;
          push({{fill_at(ctx, p, pleaf(f.left())), goal, false},
                {fill_at(ctx, p, pleaf(f.right())), goal, false}});
        }
      break;
    case Rule::FC:
      if (unfocusedOnly())
        for (auto& p : subnest_positions(ctx)) {
          PolNest sub = ctx.at(p);
          push({{fill_at(ctx, p, PolNest::plus({sub, sub})), goal, false}});
        }
      break;

    // ---- decide / release ----
    case Rule::FDecideR:
      if (is_neutral_sequent(s) && goal.is(PolConn::Up)) push({{ctx, goal.shiftee(), true}});
      break;
    case Rule::FDecideL:
      if (is_neutral_sequent(s))
        for (auto& p : plain_leaf_positions(ctx, PolConn::Down))
          push({{fill_at(ctx, p, pfocus(ctx.at(p).leafValue().f.shiftee())), goal, false}});
      break;
    case Rule::FReleaseR:
      if (shape == SeqShape::RightFocus && goal.is(PolConn::Down))
        push({{ctx, goal.shiftee(), false}});
      break;
    case Rule::FReleaseL:
      if (shape == SeqShape::LeftFocus) {
        NestPath p = *focus_position(ctx);
        PolFormula m = ctx.at(p).leafValue().f;
        if (m.is(PolConn::Up)) push({{fill_at(ctx, p, pleaf(m.shiftee())), goal, false}});
      }
      break;

    // ---- right focus ----
    case Rule::FAxP:
      if (shape == SeqShape::RightFocus && goal.is(PolConn::PosAtom) &&
          additively_present(ctx, pleaf(goal)))
        push({});
      break;
    case Rule::FP:
      if (shape == SeqShape::RightFocus &&
          additively_present(ctx, pleaf(PolFormula::down(PolFormula::up(goal)))))
        push({});
      break;
    case Rule::FOneR:
      if (shape == SeqShape::RightFocus && goal.is(PolConn::One) &&
          additively_present(ctx, PolNest::emptyTimes()))
        push({});
      break;
    case Rule::FTopPosR:
      if (shape == SeqShape::RightFocus && goal.is(PolConn::TopPos)) push({});
      break;
    case Rule::FOrR1:
      if (shape == SeqShape::RightFocus && goal.is(PolConn::Or)) push({{ctx, goal.left(), true}});
      break;
    case Rule::FOrR2:
      if (shape == SeqShape::RightFocus && goal.is(PolConn::Or)) push({{ctx, goal.right(), true}});
      break;
    case Rule::FStarR:
      if (shape == SeqShape::RightFocus && goal.is(PolConn::Star)) {
        std::vector<PolNest> resources = ctx.isPlus() ? ctx.children() : std::vector<PolNest>{ctx};
        for (const auto& e : resources) {
          std::vector<PolNest> parts = elems(e, NestKind::Times);
          for (auto mask : ordered_masks(parts.size())) {
            std::vector<PolNest> l, rr;
            for (std::size_t i = 0; i < parts.size(); ++i)
              (mask & (std::size_t(1) << i) ? l : rr).push_back(parts[i]);
            push({{PolNest::times(l).normalized(), goal.left(), true},
                  {PolNest::times(rr).normalized(), goal.right(), true}});
          }
        }
      }
      break;
    case Rule::FAndPosR:
      if (shape == SeqShape::RightFocus && goal.is(PolConn::AndPos)) {
        std::vector<PolNest> parts = elems(ctx, NestKind::Plus);
        for (auto mask : ordered_masks(parts.size())) {
          std::vector<PolNest> l, rr;
          for (std::size_t i = 0; i < parts.size(); ++i)
            (mask & (std::size_t(1) << i) ? l : rr).push_back(parts[i]);
          push({{PolNest::plus(l).normalized(), goal.left(), true},
                {PolNest::plus(rr).normalized(), goal.right(), true}});
        }
      }
      break;

    // ---- left focus ----
    case Rule::FAxN:
      if (shape == SeqShape::LeftFocus && goal.is(PolConn::NegAtom)) {
        NestPath p = *focus_position(ctx);
        if (ctx.at(p).leafValue().f == goal && additively_present(ctx, pfocus(goal))) push({});
      }
      break;
    case Rule::FN:
      if (shape == SeqShape::LeftFocus && goal.is(PolConn::Up) &&
          goal.shiftee().is(PolConn::Down)) {
        NestPath p = *focus_position(ctx);
        PolFormula m = ctx.at(p).leafValue().f;
        if (goal.shiftee().shiftee() == m && additively_present(ctx, pfocus(m))) push({});
      }
      break;
    case Rule::FAndNegL1:
    case Rule::FAndNegL2:
      if (shape == SeqShape::LeftFocus) {
        NestPath p = *focus_position(ctx);
        PolFormula m = ctx.at(p).leafValue().f;
        if (m.is(PolConn::AndNeg)) {
          PolFormula pick = r == Rule::FAndNegL1 ? m.left() : m.right();
          push({{fill_at(ctx, p, pfocus(pick)), goal, false}});
        }
      }
      break;
    case Rule::FImpL:
      if (shape == SeqShape::LeftFocus) {
        NestPath q = *focus_position(ctx);
        PolFormula m = ctx.at(q).leafValue().f;
        if (!m.is(PolConn::Imp)) break;
        FocusSite site = focus_site(ctx, q);
        for (auto mask : ordered_masks(site.addSiblings.size())) {
          std::vector<PolNest> taken, rest;
          for (std::size_t i = 0; i < site.addSiblings.size(); ++i)
            (mask & (std::size_t(1) << i) ? taken : rest).push_back(site.addSiblings[i]);
          PolNest gammaPrime = PolNest::plus(taken).normalized();
          std::vector<PolNest> after = rest;
          after.push_back(pfocus(m.right()));
          push({{gammaPrime, m.left(), true},
                {fill_at(ctx, site.addPos, PolNest::plus(std::move(after))), goal, false}});
        }
      }
      break;
    case Rule::FWandL:
      if (shape == SeqShape::LeftFocus) {
        NestPath q = *focus_position(ctx);
        PolFormula m = ctx.at(q).leafValue().f;
        if (!m.is(PolConn::Wand)) break;
        FocusSite site = focus_site(ctx, q);
        for (auto mask : ordered_masks(site.timesSiblings.size())) {
          std::vector<PolNest> taken, kept;
          for (std::size_t i = 0; i < site.timesSiblings.size(); ++i)
            (mask & (std::size_t(1) << i) ? taken : kept).push_back(site.timesSiblings[i]);
          PolNest gammaPrime = PolNest::times(taken).normalized();
          std::vector<PolNest> after = kept;
          after.push_back(pfocus(m.right()));
          push({{gammaPrime, m.left(), true},
                {fill_at(ctx, site.timesPos, PolNest::times(std::move(after))), goal, false}});
        }
      }
      break;

    default: break;
  }
  return out;
}

// Cut: <L, R, C, phi>. phi is the goal of L; in R it appears as a bare
// leaf (positive phi), as a leaf prenexed with one down-shift (negative
// phi), or as the left focus.
inline CheckResult check_cut(const PolSequent& concl, const PolSequent& l, const PolSequent& r) {
  if (r.rightFocus != concl.rightFocus || r.goal != concl.goal)
    return CheckResult::bad("cut: right premise goal differs from conclusion");
  const PolFormula& phi = l.goal;
  std::vector<PolNest> leafForms;
  if (l.rightFocus) {
    leafForms.push_back(pleaf(phi));  // positive cut formula
  } else {
    leafForms.push_back(pfocus(phi));
    if (phi.negative()) leafForms.push_back(pleaf(PolFormula::down(phi)));
  }
  for (auto& p : leaf_positions(r.ctx)) {
    for (auto& lf : leafForms) {
      if (r.ctx.at(p) != lf) continue;
      if (fill_at(r.ctx, p, l.ctx) == concl.ctx) return CheckResult::good();
    }
  }
  return CheckResult::bad("cut: conclusion does not splice the premises");
}

inline CheckResult check_step(Rule r, const PolSequent& concl, const std::vector<PolSequent>& prem,
                              bool allowCut) {
  auto info = rule_info(r);
  if (info.calculus != Calculus::Fbi) return CheckResult::bad("not an FBI rule");
  if (static_cast<int>(prem.size()) != info.arity) return CheckResult::bad("wrong premise count");
  if (auto v = validate_polsequent(concl); !v)
    return CheckResult::bad("ill-formed sequent: " + v.message + ": " + print_sequent(concl));
  if (r == Rule::FCut) {
    if (!allowCut) return CheckResult::bad("cut is not permitted here");
    if (auto c = check_cut(concl, prem[0], prem[1]); !c)
      return CheckResult::bad(c.message + ": " + print_sequent(concl));
    return CheckResult::good();
  }
  for (auto& tuple : instances(r, concl)) {
    if (tuple.size() != prem.size()) continue;
    bool all = true;
    for (std::size_t i = 0; i < tuple.size() && all; ++i) all = tuple[i] == prem[i];
    if (all) return CheckResult::good();
  }
  return CheckResult::bad("no " + std::string(info.name) + " instance matches: " +
                          print_sequent(concl));
}

inline CheckResult check(const FbiProof& p, bool allowCut) {
  for (std::size_t i = 0; i < p.premises.size(); ++i)
    if (auto r = check(p.premises[i], allowCut); !r) return r.nest_under(i);
  std::vector<PolSequent> prem;
  for (auto& q : p.premises) prem.push_back(q.conclusion);
  return check_step(p.rule, p.conclusion, prem, allowCut);
}

inline bool cut_free(const FbiProof& p) {
  if (p.rule == Rule::FCut) return false;
  for (auto& q : p.premises)
    if (!cut_free(q)) return false;
  return true;
}

}  // namespace fbi
}  // namespace bi
