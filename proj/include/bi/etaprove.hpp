#pragma once

// Bounded backward search for etaLBI. Weakening never appears as a step
// (the absorbed rules carry it); contraction is confined to ->L / -*L
// sites, where consumed material may be duplicated first, and is budgeted
// per branch.

#include <chrono>
#include <functional>
#include <map>

#include "bi/etalbi.hpp"
#include "bi/search.hpp"

namespace bi::eta {

struct SearchResult {
  SearchStatus status = SearchStatus::Exhausted;
  std::optional<EtaProof> proof;
  SearchStats stats;
};

class Prover {
 public:
  explicit Prover(SearchLimits lim) : lim_(lim) {}

  SearchResult run(const NestSequent& goal) {
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
    bool hopeless = false;  // failed with the whole space exhausted
    int depth = -1, contr = -1;
  };

  // One backward step: premise targets plus a proof assembler.
  struct Candidate {
    std::vector<NestSequent> targets;
    int contractionCost = 0;
    std::function<EtaProof(std::vector<EtaProof>)> assemble;
  };

  std::optional<EtaProof> recurse(const NestSequent& s, int depth, int contr) {
    if (depth <= 0) {
      cutoff_ = true;
      return std::nullopt;
    }
    return prove(s, depth - 1, contr);
  }

  std::optional<EtaProof> prove(const NestSequent& s, int depth, int contr) {
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

  std::optional<EtaProof> proveBody(const NestSequent& s, int depth, int contr) {
    const Nest& ctx = s.ctx;
    const Formula& goal = s.goal;

    // closing rules
    if (!formula_leaf_paths(ctx, Conn::Bot).empty()) return EtaProof{Rule::EBotL, s, {}};
    if (goal.is(Conn::Top)) return EtaProof{Rule::ETopR, s, {}};
    if (goal.isAtom() && additively_present(ctx, Nest::leaf(goal)))
      return EtaProof{Rule::EAx, s, {}};
    if (goal.is(Conn::One) && additively_present(ctx, Nest::emptyTimes()))
      return EtaProof{Rule::EOneR, s, {}};

    // invertible single-premise context rules, first applicable leaf
    for (auto [conn, rule] : {std::pair{Conn::One, Rule::EOneL}, {Conn::And, Rule::EAndL},
                              {Conn::Star, Rule::EStarL}}) {
      auto paths = formula_leaf_paths(ctx, conn);
      if (paths.empty()) continue;
      auto tuple = instances(rule, s);
      auto sub = recurse(tuple.front()[0], depth, contr);
      if (!sub) return std::nullopt;
      return EtaProof{rule, s, {std::move(*sub)}};
    }

    // invertible goal rules
    if (goal.is(Conn::And)) {
      auto l = recurse({ctx, goal.left()}, depth, contr);
      if (!l) return std::nullopt;
      auto r = recurse({ctx, goal.right()}, depth, contr);
      if (!r) return std::nullopt;
      return EtaProof{Rule::EAndR, s, {std::move(*l), std::move(*r)}};
    }
    if (goal.is(Conn::Imp)) {
      NestSequent t{merge(NestKind::Plus, {ctx, Nest::leaf(goal.left())}), goal.right()};
      auto sub = recurse(t, depth, contr);
      if (!sub) return std::nullopt;
      return EtaProof{Rule::EImpR, s, {std::move(*sub)}};
    }
    if (goal.is(Conn::Wand)) {
      NestSequent t{merge(NestKind::Times, {ctx, Nest::leaf(goal.left())}), goal.right()};
      auto sub = recurse(t, depth, contr);
      if (!sub) return std::nullopt;
      return EtaProof{Rule::EWandR, s, {std::move(*sub)}};
    }
    if (auto paths = formula_leaf_paths(ctx, Conn::Or); !paths.empty()) {
      Formula f = ctx.at(paths.front()).leafValue();
      NestSequent t1{fill_at(ctx, paths.front(), Nest::leaf(f.left())), goal};
      NestSequent t2{fill_at(ctx, paths.front(), Nest::leaf(f.right())), goal};
      auto l = recurse(t1, depth, contr);
      if (!l) return std::nullopt;
      auto r = recurse(t2, depth, contr);
      if (!r) return std::nullopt;
      return EtaProof{Rule::EOrL, s, {std::move(*l), std::move(*r)}};
    }

    // choice points
    std::vector<Candidate> cands;
    collectDisjunctionSplits(s, cands);
    collectStarSplits(s, cands);
    collectImpUses(s, cands, contr);
    collectWandUses(s, cands, contr);

    for (auto& c : cands) {
      if (c.contractionCost > contr) continue;  // flagged during collection
      ++stats_.decisions;
      std::vector<EtaProof> subs;
      bool ok = true;
      for (auto& t : c.targets) {
        auto sub = recurse(t, depth, contr - c.contractionCost);
        if (!sub) {
          ok = false;
          break;
        }
        subs.push_back(std::move(*sub));
      }
      if (ok) return c.assemble(std::move(subs));
      ++stats_.backtracks;
    }
    return std::nullopt;
  }

  void collectDisjunctionSplits(const NestSequent& s, std::vector<Candidate>& out) {
    if (!s.goal.is(Conn::Or)) return;
    for (Rule r : {Rule::EOrR1, Rule::EOrR2}) {
      Formula sub = r == Rule::EOrR1 ? s.goal.left() : s.goal.right();
      out.push_back({{{s.ctx, sub}},
                     0,
                     [r, s](std::vector<EtaProof> ps) {
                       return EtaProof{r, s, std::move(ps)};
                     }});
    }
  }

  void collectStarSplits(const NestSequent& s, std::vector<Candidate>& out) {
    if (!s.goal.is(Conn::Star)) return;
    for (auto& tuple : instances(Rule::EStarR, s))
      out.push_back({tuple, 0, [s](std::vector<EtaProof> ps) {
                       return EtaProof{Rule::EStarR, s, std::move(ps)};
                     }});
  }

  static std::vector<std::size_t> ordered_masks(std::size_t n) {
    std::vector<std::size_t> masks;
    for (std::size_t m = 0; m < (std::size_t(1) << n); ++m) masks.push_back(m);
    std::sort(masks.begin(), masks.end(), [](std::size_t a, std::size_t b) {
      int pa = __builtin_popcountll(a), pb = __builtin_popcountll(b);
      return pa != pb ? pa < pb : a < b;
    });
    return masks;
  }

  // ->L with optional duplication of the consumed material. A duplicated
  // element costs one contraction and shows up as an explicit C node.
  void collectImpUses(const NestSequent& s, std::vector<Candidate>& out, int contr) {
    const Nest& ctx = s.ctx;
    for (auto& q : formula_leaf_paths(ctx, Conn::Imp)) {
      Formula f = ctx.at(q).leafValue();
      std::vector<Nest> siblings;
      NestPath region = q;
      if (!q.empty()) {
        NestPath parent(q.begin(), q.end() - 1);
        if (ctx.at(parent).isPlus()) {
          region = parent;
          const auto& kids = ctx.at(parent).children();
          for (std::size_t i = 0; i < kids.size(); ++i)
            if (i != q.back()) siblings.push_back(kids[i]);
        }
      }
      std::vector<Nest> regionKids = siblings;
      regionKids.push_back(Nest::leaf(f));
      for (auto mask : ordered_masks(siblings.size())) {
        std::vector<Nest> taken, rest;
        for (std::size_t i = 0; i < siblings.size(); ++i)
          (mask & (std::size_t(1) << i) ? taken : rest).push_back(siblings[i]);
        Nest gammaPrime = Nest::plus(taken).normalized();
        // keepImp: duplicate the implication; keepTaken: duplicate the
        // consumed siblings, so the premise retains them.
        for (int keepImp = 0; keepImp <= 1; ++keepImp) {
          for (int keepTaken = 0; keepTaken <= 1; ++keepTaken) {
            if (keepTaken && taken.empty()) continue;
            int cost = keepImp + (keepTaken ? static_cast<int>(taken.size()) : 0);
            if (cost > contr) {
              cutoff_ = true;
              continue;
            }
            std::vector<Nest> dupd;
            if (keepImp) dupd.push_back(Nest::leaf(f));
            if (keepTaken) dupd.insert(dupd.end(), taken.begin(), taken.end());
            std::vector<Nest> after = rest;
            if (keepTaken) after.insert(after.end(), taken.begin(), taken.end());
            if (keepImp) after.push_back(Nest::leaf(f));
            after.push_back(Nest::leaf(f.right()));
            Nest prem2ctx = fill_at(ctx, region, Nest::plus(std::move(after)));
            // conclusion contexts of the C chain, outermost first
            std::vector<Nest> chain{ctx};
            std::vector<Nest> cur = regionKids;
            for (const auto& d : dupd) {
              cur.push_back(d);
              chain.push_back(fill_at(ctx, region, Nest::plus(cur)));
            }
            Formula goal = s.goal;
            out.push_back({{{gammaPrime, f.left()}, {prem2ctx, goal}},
                           cost,
                           [goal, chain](std::vector<EtaProof> ps) {
                             EtaProof acc{Rule::EImpL, {chain.back(), goal}, std::move(ps)};
                             for (std::size_t i = chain.size() - 1; i-- > 0;)
                               acc = EtaProof{Rule::EC, {chain[i], goal}, {std::move(acc)}};
                             return acc;
                           }});
          }
        }
      }
    }
  }

  void collectWandUses(const NestSequent& s, std::vector<Candidate>& out, int) {
    const Nest& ctx = s.ctx;
    for (auto& site : wand_sites(ctx)) {
      Formula f = ctx.at(site.leaf).leafValue();
      for (auto mask : ordered_masks(site.timesSiblings.size())) {
        std::vector<Nest> taken, kept;
        for (std::size_t i = 0; i < site.timesSiblings.size(); ++i)
          (mask & (std::size_t(1) << i) ? taken : kept).push_back(site.timesSiblings[i]);
        Nest gammaPrime = Nest::times(taken).normalized();
        Nest prem2ctx = wand_premise_ctx(ctx, site, kept, f.right());
        out.push_back({{{gammaPrime, f.left()}, {prem2ctx, s.goal}},
                       0,
                       [s](std::vector<EtaProof> ps) {
                         return EtaProof{Rule::EWandL, s, std::move(ps)};
                       }});
      }
    }
  }

  SearchLimits lim_;
  SearchStats stats_;
  bool cutoff_ = false;
  std::map<NestSequent, Memo> memo_;
};

inline SearchResult prove(const NestSequent& goal, SearchLimits lim = {}) {
  return Prover(lim).run(goal);
}

}  // namespace bi::eta
