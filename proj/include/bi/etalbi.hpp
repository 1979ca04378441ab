#pragma once

// System etaLBI over two-sorted nests (Figure 2). Weakening lives inside
// the axioms and the multiplicative rules, exchange is gone entirely, and
// contraction is the only structural rule left.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>

#include "bi/proof.hpp"
#include "bi/translate.hpp"

namespace bi {

struct NestSequent {
  Nest ctx;
  Formula goal;

  friend bool operator==(const NestSequent& a, const NestSequent& b) {
    return a.ctx == b.ctx && a.goal == b.goal;
  }
  friend bool operator!=(const NestSequent& a, const NestSequent& b) { return !(a == b); }
  friend bool operator<(const NestSequent& a, const NestSequent& b) {
    if (int c = Nest::compare(a.ctx, b.ctx)) return c < 0;
    return Formula::compare(a.goal, b.goal) < 0;
  }
};

using EtaProof = ProofT<NestSequent>;

inline std::string print_sequent(const NestSequent& s) {
  return print_nest(s.ctx) + " |- " + print_formula(s.goal);
}

inline NestSequent parse_nest_sequent(std::string_view text) {
  detail::Lexer lx(text);
  Nest ctx = detail::parse_nest_rec(lx).normalized();
  if (lx.peek().kind != detail::Tok::Turnstile) lx.fail("'|-'");
  lx.take();
  Formula goal = detail::FormulaParser(lx).parse();
  detail::expect_end(lx);
  return {ctx, goal};
}

namespace eta {

// {Gamma, x}+ : x itself, or an element of an additive multiset.
inline bool additively_present(const Nest& ctx, const Nest& x) {
  if (ctx == x) return true;
  return ctx.isPlus() && nest_member(x, ctx);
}

inline std::vector<NestPath> formula_leaf_paths(const Nest& n, Conn c) {
  std::vector<NestPath> out;
  for (auto& p : leaf_positions(n))
    if (n.at(p).leafValue().is(c)) out.push_back(p);
  return out;
}

// The multiplicative siblings of a -* leaf, the additive junk bundled with
// it, and where the enclosing multiplicative multiset lives.
struct WandSite {
  NestPath leaf;       // the -* leaf
  NestPath timesPos;   // node replaced when the rule fires
  std::vector<Nest> timesSiblings;
  std::vector<Nest> addJunk;  // dropped by the rule
};

inline std::vector<WandSite> wand_sites(const Nest& ctx) {
  std::vector<WandSite> out;
  for (auto& q : formula_leaf_paths(ctx, Conn::Wand)) {
    WandSite site;
    site.leaf = q;
    NestPath bundle = q;
    if (!q.empty()) {
      NestPath parent(q.begin(), q.end() - 1);
      if (ctx.at(parent).isPlus()) {
        bundle = parent;
        const auto& kids = ctx.at(parent).children();
        for (std::size_t i = 0; i < kids.size(); ++i)
          if (i != q.back()) site.addJunk.push_back(kids[i]);
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
    out.push_back(std::move(site));
  }
  return out;
}

// Premise context of -*L: the enclosing multiplicative multiset keeps
// `kept` and gains the consequent; the additive junk and the spent
// resources are gone.
inline Nest wand_premise_ctx(const Nest& ctx, const WandSite& site, const std::vector<Nest>& kept,
                             const Formula& consequent) {
  std::vector<Nest> kids = kept;
  kids.push_back(Nest::leaf(consequent));
  return fill_at(ctx, site.timesPos, Nest::times(std::move(kids)));
}

// All backward instances of `r` at `concl` (each entry is one premise
// tuple). Cut is excluded: its left premise is unconstrained.
inline std::vector<std::vector<NestSequent>> instances(Rule r, const NestSequent& concl) {
  std::vector<std::vector<NestSequent>> out;
  const Nest& ctx = concl.ctx;
  const Formula& goal = concl.goal;
  auto subsets = [](std::size_t n) {
    std::vector<std::size_t> masks;
    for (std::size_t m = 0; m < (std::size_t(1) << n); ++m) masks.push_back(m);
    std::sort(masks.begin(), masks.end(), [](std::size_t a, std::size_t b) {
      int pa = __builtin_popcountll(a), pb = __builtin_popcountll(b);
      return pa != pb ? pa < pb : a < b;
    });
    return masks;
  };

  switch (r) {
    case Rule::EAx:
      if (goal.isAtom() && additively_present(ctx, Nest::leaf(goal))) out.push_back({});
      break;
    case Rule::ETopR:
      if (goal.is(Conn::Top)) out.push_back({});
      break;
    case Rule::EOneR:
      if (goal.is(Conn::One) && additively_present(ctx, Nest::emptyTimes())) out.push_back({});
      break;
    case Rule::EBotL:
      if (!formula_leaf_paths(ctx, Conn::Bot).empty()) out.push_back({});
      break;
    case Rule::EOneL:
      for (auto& p : formula_leaf_paths(ctx, Conn::One))
        out.push_back({{fill_at(ctx, p, Nest::emptyTimes()), goal}});
      break;
    case Rule::EAndL:
      for (auto& p : formula_leaf_paths(ctx, Conn::And)) {
        Formula f = ctx.at(p).leafValue();
        out.push_back(
            {{fill_at(ctx, p, Nest::plus({Nest::leaf(f.left()), Nest::leaf(f.right())})), goal}});
      }
      break;
    case Rule::EStarL:
      for (auto& p : formula_leaf_paths(ctx, Conn::Star)) {
        Formula f = ctx.at(p).leafValue();
        out.push_back(
            {{fill_at(ctx, p, Nest::times({Nest::leaf(f.left()), Nest::leaf(f.right())})), goal}});
      }
      break;
    case Rule::EOrL:
      for (auto& p : formula_leaf_paths(ctx, Conn::Or)) {
        Formula f = ctx.at(p).leafValue();
        out.push_back({{fill_at(ctx, p, Nest::leaf(f.left())), goal},
                       {fill_at(ctx, p, Nest::leaf(f.right())), goal}});
      }
      break;
    case Rule::EAndR:
      if (goal.is(Conn::And)) out.push_back({{ctx, goal.left()}, {ctx, goal.right()}});
      break;
    case Rule::EOrR1:
      if (goal.is(Conn::Or)) out.push_back({{ctx, goal.left()}});
      break;
    case Rule::EOrR2:
      if (goal.is(Conn::Or)) out.push_back({{ctx, goal.right()}});
      break;
    case Rule::EImpR:
      if (goal.is(Conn::Imp))
        out.push_back({{merge(NestKind::Plus, {ctx, Nest::leaf(goal.left())}), goal.right()}});
      break;
    case Rule::EWandR:
      if (goal.is(Conn::Wand))
        out.push_back({{merge(NestKind::Times, {ctx, Nest::leaf(goal.left())}), goal.right()}});
      break;
    case Rule::EImpL:
      for (auto& q : formula_leaf_paths(ctx, Conn::Imp)) {
        Formula f = ctx.at(q).leafValue();
        std::vector<Nest> siblings;
        if (!q.empty()) {
          NestPath parent(q.begin(), q.end() - 1);
          if (ctx.at(parent).isPlus()) {
            const auto& kids = ctx.at(parent).children();
            for (std::size_t i = 0; i < kids.size(); ++i)
              if (i != q.back()) siblings.push_back(kids[i]);
          }
        }
        for (auto mask : subsets(siblings.size())) {
          std::vector<Nest> taken, rest;
          for (std::size_t i = 0; i < siblings.size(); ++i)
            (mask & (std::size_t(1) << i) ? taken : rest).push_back(siblings[i]);
          Nest gammaPrime = Nest::plus(taken).normalized();
          // the bundle {taken, phi->psi}+ becomes psi; the rest stays
          NestPath region = q;
          Nest replacement = Nest::leaf(f.right());
          if (!q.empty()) {
            NestPath parent(q.begin(), q.end() - 1);
            if (ctx.at(parent).isPlus()) {
              region = parent;
              std::vector<Nest> kids = rest;
              kids.push_back(Nest::leaf(f.right()));
              replacement = Nest::plus(std::move(kids));
            }
          }
          out.push_back(
              {{gammaPrime, f.left()}, {fill_at(ctx, region, replacement), goal}});
        }
      }
      break;
    case Rule::EWandL:
      if (true) {
        for (auto& site : wand_sites(ctx)) {
          Formula f = ctx.at(site.leaf).leafValue();
          for (auto mask : subsets(site.timesSiblings.size())) {
            std::vector<Nest> taken, kept;
            for (std::size_t i = 0; i < site.timesSiblings.size(); ++i)
              (mask & (std::size_t(1) << i) ? taken : kept).push_back(site.timesSiblings[i]);
            Nest gammaPrime = Nest::times(taken).normalized();
            out.push_back({{gammaPrime, f.left()},
                           {wand_premise_ctx(ctx, site, kept, f.right()), goal}});
          }
        }
      }
      break;
    case Rule::EStarR:
      if (goal.is(Conn::Star)) {
        std::vector<Nest> resources;
        if (ctx.isPlus())
          resources = ctx.children();
        else
          resources = {ctx};
        for (const auto& e : resources) {
          std::vector<Nest> parts = elems(e, NestKind::Times);
          for (auto mask : subsets(parts.size())) {
            std::vector<Nest> l, rr;
            for (std::size_t i = 0; i < parts.size(); ++i)
              (mask & (std::size_t(1) << i) ? l : rr).push_back(parts[i]);
            out.push_back({{Nest::times(l).normalized(), goal.left()},
                           {Nest::times(rr).normalized(), goal.right()}});
          }
        }
      }
      break;
    case Rule::EC:
      for (auto& p : subnest_positions(ctx)) {
        Nest sub = ctx.at(p);
        out.push_back({{fill_at(ctx, p, Nest::plus({sub, sub})), goal}});
      }
      break;
    default: break;
  }
  return out;
}

inline CheckResult check_step(Rule r, const NestSequent& concl,
                              const std::vector<NestSequent>& prem) {
  auto info = rule_info(r);
  if (info.calculus != Calculus::Eta) return CheckResult::bad("not an etaLBI rule");
  if (static_cast<int>(prem.size()) != info.arity) return CheckResult::bad("wrong premise count");
  auto fail = [&](const char* what) {
    return CheckResult::bad(std::string(what) + " in " + std::string(info.name) + ": " +
                            print_sequent(concl));
  };

  if (r == Rule::ECut) {
    if (prem[1].goal != concl.goal) return fail("goal changed");
    for (auto& p : leaf_positions(prem[1].ctx))
      if (prem[1].ctx.at(p).leafValue() == prem[0].goal &&
          fill_at(prem[1].ctx, p, prem[0].ctx) == concl.ctx)
        return CheckResult::good();
    return fail("conclusion does not splice the cut premise");
  }

  // Everything else is checked by enumerating the backward instances at
  // the conclusion; junk slots are determined by the conclusion, so the
  // enumeration is finite and complete.
  for (auto& tuple : instances(r, concl)) {
    if (tuple.size() != prem.size()) continue;
    bool all = true;
    for (std::size_t i = 0; i < tuple.size() && all; ++i) all = tuple[i] == prem[i];
    if (all) return CheckResult::good();
  }
  return fail("no rule instance matches the premises");
}

inline CheckResult check(const EtaProof& p) {
  for (std::size_t i = 0; i < p.premises.size(); ++i)
    if (auto r = check(p.premises[i]); !r) return r.nest_under(i);
  std::vector<NestSequent> prem;
  for (auto& q : p.premises) prem.push_back(q.conclusion);
  return check_step(p.rule, p.conclusion, prem);
}

// The weakening-absorbed generalised axiom: {junk..., phi}+ |- phi.
inline EtaProof identity_with_junk(const Formula& f, std::vector<Nest> junk) {
  auto ctxWith = [&](std::vector<Nest> extra) {
    std::vector<Nest> kids = junk;
    for (auto& e : extra) kids.push_back(std::move(e));
    return Nest::plus(std::move(kids)).normalized();
  };
  NestSequent concl{ctxWith({Nest::leaf(f)}), f};
  switch (f.kind()) {
    case Conn::Atom: return {Rule::EAx, concl, {}};
    case Conn::Top: return {Rule::ETopR, concl, {}};
    case Conn::Bot: return {Rule::EBotL, concl, {}};
    case Conn::One: {
      EtaProof oneR{Rule::EOneR, {ctxWith({Nest::emptyTimes()}), f}, {}};
      return {Rule::EOneL, concl, {oneR}};
    }
    case Conn::And: {
      std::vector<Nest> j1 = junk;
      j1.push_back(Nest::leaf(f.right()));
      std::vector<Nest> j2 = junk;
      j2.push_back(Nest::leaf(f.left()));
      EtaProof andR{Rule::EAndR,
                    {ctxWith({Nest::leaf(f.left()), Nest::leaf(f.right())}), f},
                    {identity_with_junk(f.left(), j1), identity_with_junk(f.right(), j2)}};
      return {Rule::EAndL, concl, {andR}};
    }
    case Conn::Or: {
      EtaProof inl{Rule::EOrR1, {ctxWith({Nest::leaf(f.left())}), f},
                   {identity_with_junk(f.left(), junk)}};
      EtaProof inr{Rule::EOrR2, {ctxWith({Nest::leaf(f.right())}), f},
                   {identity_with_junk(f.right(), junk)}};
      return {Rule::EOrL, concl, {inl, inr}};
    }
    case Conn::Star: {
      Nest pair = Nest::times({Nest::leaf(f.left()), Nest::leaf(f.right())}).normalized();
      EtaProof starR{Rule::EStarR,
                     {ctxWith({pair}), f},
                     {identity_with_junk(f.left(), {}), identity_with_junk(f.right(), {})}};
      return {Rule::EStarL, concl, {starR}};
    }
    case Conn::Imp: {
      EtaProof impL{Rule::EImpL,
                    {ctxWith({Nest::leaf(f), Nest::leaf(f.left())}), f.right()},
                    {identity_with_junk(f.left(), {}), identity_with_junk(f.right(), junk)}};
      return {Rule::EImpR, concl, {impL}};
    }
    case Conn::Wand: {
      Nest inner = concl.ctx;  // {junk..., phi -* psi}+
      EtaProof wandL{Rule::EWandL,
                     {merge(NestKind::Times, {inner, Nest::leaf(f.left())}), f.right()},
                     {identity_with_junk(f.left(), {}), identity_with_junk(f.right(), {})}};
      return {Rule::EWandR, concl, {wandL}};
    }
  }
  return {Rule::EAx, concl, {}};
}

inline EtaProof identity(const Formula& f) { return identity_with_junk(f, {}); }

}  // namespace eta
}  // namespace bi
