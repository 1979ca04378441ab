#pragma once

// Focused backward search: eager inversion to a neutral sequent, then a
// decision (right focus first, then left foci in canonical order, with
// budgeted contraction at the decision point), then focused decomposition
// with backtracking over decisions and multiplicative splits only.

#include <chrono>
#include <map>

#include "bi/fbi.hpp"
#include "bi/search.hpp"

namespace bi::fbi {

struct SearchResult {
  SearchStatus status = SearchStatus::Exhausted;
  std::optional<FbiProof> proof;
  SearchStats stats;
};

class Prover {
 public:
  explicit Prover(SearchLimits lim) : lim_(lim) {}

  SearchResult run(const PolSequent& goal) {
    if (auto v = validate_polsequent(goal); !v) throw std::invalid_argument(v.message);
    auto t0 = std::chrono::steady_clock::now();
    cutoff_ = false;
    auto proof = prove(goal, lim_.depth, lim_.contractions);
    SearchResult r;
    r.stats = stats_;
    r.stats.wallMs =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    if (proof) {
      r.status = SearchStatus::Proved;
      r.proof = std::move(proof);
    } else {
      r.status = cutoff_ ? SearchStatus::Exhausted : SearchStatus::Refuted;
    }
    return r;
  }

 private:
  struct Memo {
    bool hopeless = false;
    int depth = -1, contr = -1;
  };

  std::optional<FbiProof> recurse(const PolSequent& s, int depth, int contr) {
    if (depth <= 0) {
      cutoff_ = true;
      return std::nullopt;
    }
    return prove(s, depth - 1, contr);
  }

  std::optional<FbiProof> prove(const PolSequent& s, int depth, int contr) {
    ++stats_.nodes;
    stats_.maxDepth = std::max(stats_.maxDepth, static_cast<std::size_t>(lim_.depth - depth));
    if (auto it = memo_.find(s); it != memo_.end()) {
      if (it->second.hopeless) return std::nullopt;
      if (it->second.depth >= depth && it->second.contr >= contr) {
        cutoff_ = true;
        return std::nullopt;
      }
    }
    bool saved = cutoff_;
    cutoff_ = false;
    auto result = proveBody(s, depth, contr);
    if (!result) {
      Memo& m = memo_[s];
      if (!cutoff_) {
        m.hopeless = true;
      } else {
        m.depth = std::max(m.depth, depth);
        m.contr = std::max(m.contr, contr);
      }
    }
    cutoff_ |= saved;
    return result;
  }

  std::optional<FbiProof> proveBody(const PolSequent& s, int depth, int contr) {
    switch (shape_of(s)) {
      case SeqShape::RightFocus: return proveRightFocus(s, depth, contr);
      case SeqShape::LeftFocus: return proveLeftFocus(s, depth, contr);
      case SeqShape::Unfocused: break;
    }
    return proveUnfocused(s, depth, contr);
  }

  // A single backward step with fixed premises; fail-fast (used for the
  // invertible phase).
  std::optional<FbiProof> step(Rule r, const PolSequent& s, std::vector<PolSequent> targets,
                               int depth, int contr) {
    std::vector<FbiProof> subs;
    for (auto& t : targets) {
      auto sub = recurse(t, depth, contr);
      if (!sub) return std::nullopt;
      subs.push_back(std::move(*sub));
    }
    return FbiProof{r, s, std::move(subs)};
  }

  // Backtrackable alternatives.
  struct Alt {
    Rule rule;
    std::vector<PolSequent> targets;
    int cost = 0;
    // wrap premade C nodes around the step when material was duplicated
    std::vector<PolSequent> contractionChain;
  };

  std::optional<FbiProof> tryAlts(const PolSequent& s, const std::vector<Alt>& alts, int depth,
                                  int contr) {
    for (const auto& a : alts) {
      if (a.cost > contr) {
        cutoff_ = true;
        continue;
      }
      ++stats_.decisions;
      std::vector<FbiProof> subs;
      bool ok = true;
      for (auto& t : a.targets) {
        auto sub = recurse(t, depth, contr - a.cost);
        if (!sub) {
          ok = false;
          break;
        }
        subs.push_back(std::move(*sub));
      }
      if (ok) {
        PolSequent inner = a.contractionChain.empty() ? s : a.contractionChain.back();
        FbiProof acc{a.rule, inner, std::move(subs)};
        if (!a.contractionChain.empty()) {
          for (std::size_t i = a.contractionChain.size() - 1; i-- > 0;)
            acc = FbiProof{Rule::FC, a.contractionChain[i], {std::move(acc)}};
          acc = FbiProof{Rule::FC, s, {std::move(acc)}};
        }
        return acc;
      }
      ++stats_.backtracks;
    }
    return std::nullopt;
  }

  std::optional<FbiProof> proveUnfocused(const PolSequent& s, int depth, int contr) {
    const PolNest& ctx = s.ctx;
    const PolFormula& goal = s.goal;

    // inversion phase: units first, then the invertible logical rules
    if (!plain_leaf_positions(ctx, PolConn::Bot).empty()) return FbiProof{Rule::FBotL, s, {}};
    if (goal.is(PolConn::TopNeg)) return FbiProof{Rule::FTopNegR, s, {}};
    for (auto [conn, rule] : {std::pair{PolConn::One, Rule::FOneL},
                              {PolConn::TopPos, Rule::FTopPosL},
                              {PolConn::AndPos, Rule::FAndPosL},
                              {PolConn::Star, Rule::FStarL}}) {
      auto inst = instances(rule, s);
      if (!inst.empty()) return step(rule, s, inst.front(), depth, contr);
      (void)conn;
    }
    if (goal.is(PolConn::AndNeg))
      return step(Rule::FAndNegR, s, instances(Rule::FAndNegR, s).front(), depth, contr);
    if (auto inst = instances(Rule::FOrL, s); !inst.empty())
      return step(Rule::FOrL, s, inst.front(), depth, contr);
    if (goal.is(PolConn::Imp))
      return step(Rule::FImpR, s, instances(Rule::FImpR, s).front(), depth, contr);
    if (goal.is(PolConn::Wand))
      return step(Rule::FWandR, s, instances(Rule::FWandR, s).front(), depth, contr);

    // neutral: decide
    if (!is_neutral_sequent(s)) return std::nullopt;  // e.g. vN-goals with nothing to do
    std::vector<Alt> alts;

    // early-termination shortcut: a vN leaf against the goal ^vN closes by
    // the N axiom right after deciding on it
    if (goal.is(PolConn::Up) && goal.shiftee().is(PolConn::Down)) {
      PolNest want = pleaf(PolFormula::down(goal.shiftee().shiftee()));
      if (additively_present(ctx, want)) {
        for (auto& p : plain_leaf_positions(ctx, PolConn::Down))
          if (ctx.at(p) == want) {
            alts.push_back({Rule::FDecideL,
                            {{fill_at(ctx, p, pfocus(want.leafValue().f.shiftee())), goal, false}},
                            0,
                            {}});
            break;
          }
      }
    }

    if (goal.is(PolConn::Up)) alts.push_back({Rule::FDecideR, {{ctx, goal.shiftee(), true}}, 0, {}});
    for (auto& p : plain_leaf_positions(ctx, PolConn::Down))
      alts.push_back(
          {Rule::FDecideL, {{fill_at(ctx, p, pfocus(ctx.at(p).leafValue().f.shiftee())), goal, false}}, 0, {}});

    // contraction at the decision point: duplicate one context leaf (vN or
    // a positive atom), then decide
    if (contr > 0) {
      for (auto& p : leaf_positions(ctx)) {
        PolNest leaf = ctx.at(p);
        PolNest dup = fill_at(ctx, p, PolNest::plus({leaf, leaf}));
        PolSequent dupSeq{dup, goal, false};
        if (leaf.leafValue().f.is(PolConn::Down)) {
          // decide left on one copy
          for (auto& q : plain_leaf_positions(dup, PolConn::Down))
            if (dup.at(q) == leaf) {
              alts.push_back({Rule::FDecideL,
                              {{fill_at(dup, q, pfocus(leaf.leafValue().f.shiftee())), goal, false}},
                              1,
                              {dupSeq}});
              break;
            }
        }
        if (goal.is(PolConn::Up))
          alts.push_back({Rule::FDecideR, {{dup, goal.shiftee(), true}}, 1, {dupSeq}});
        for (auto& q : plain_leaf_positions(dup, PolConn::Down)) {
          if (dup.at(q) == leaf) continue;  // covered above
          alts.push_back({Rule::FDecideL,
                          {{fill_at(dup, q, pfocus(dup.at(q).leafValue().f.shiftee())), goal, false}},
                          1,
                          {dupSeq}});
        }
      }
    }
    return tryAlts(s, alts, depth, contr);
  }

  std::optional<FbiProof> proveRightFocus(const PolSequent& s, int depth, int contr) {
    const PolFormula& goal = s.goal;

    // axioms first
    if (!instances(Rule::FAxP, s).empty()) return FbiProof{Rule::FAxP, s, {}};
    if (!instances(Rule::FP, s).empty()) return FbiProof{Rule::FP, s, {}};
    if (!instances(Rule::FOneR, s).empty()) return FbiProof{Rule::FOneR, s, {}};
    if (goal.is(PolConn::TopPos)) return FbiProof{Rule::FTopPosR, s, {}};

    std::vector<Alt> alts;
    if (goal.is(PolConn::Down))
      alts.push_back({Rule::FReleaseR, instances(Rule::FReleaseR, s).front(), 0, {}});
    if (goal.is(PolConn::Or)) {
      alts.push_back({Rule::FOrR1, instances(Rule::FOrR1, s).front(), 0, {}});
      alts.push_back({Rule::FOrR2, instances(Rule::FOrR2, s).front(), 0, {}});
    }
    if (goal.is(PolConn::Star))
      for (auto& t : instances(Rule::FStarR, s)) alts.push_back({Rule::FStarR, t, 0, {}});
    if (goal.is(PolConn::AndPos))
      for (auto& t : instances(Rule::FAndPosR, s)) alts.push_back({Rule::FAndPosR, t, 0, {}});
    return tryAlts(s, alts, depth, contr);
  }

  std::optional<FbiProof> proveLeftFocus(const PolSequent& s, int depth, int contr) {
    if (!instances(Rule::FAxN, s).empty()) return FbiProof{Rule::FAxN, s, {}};
    if (!instances(Rule::FN, s).empty()) return FbiProof{Rule::FN, s, {}};

    NestPath p = *focus_position(s.ctx);
    PolFormula m = s.ctx.at(p).leafValue().f;
    std::vector<Alt> alts;
    if (m.is(PolConn::Up))
      alts.push_back({Rule::FReleaseL, instances(Rule::FReleaseL, s).front(), 0, {}});
    if (m.is(PolConn::AndNeg)) {
      alts.push_back({Rule::FAndNegL1, instances(Rule::FAndNegL1, s).front(), 0, {}});
      alts.push_back({Rule::FAndNegL2, instances(Rule::FAndNegL2, s).front(), 0, {}});
    }
    if (m.is(PolConn::Imp))
      for (auto& t : instances(Rule::FImpL, s)) alts.push_back({Rule::FImpL, t, 0, {}});
    if (m.is(PolConn::Wand))
      for (auto& t : instances(Rule::FWandL, s)) alts.push_back({Rule::FWandL, t, 0, {}});
    return tryAlts(s, alts, depth, contr);
  }

  SearchLimits lim_;
  SearchStats stats_;
  bool cutoff_ = false;
  std::map<PolSequent, Memo> memo_;
};

inline SearchResult prove(const PolSequent& goal, SearchLimits lim = {}) {
  return Prover(lim).run(goal);
}

}  // namespace bi::fbi
