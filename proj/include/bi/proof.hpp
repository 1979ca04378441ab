#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace bi {

enum class Calculus { Lbi, Eta, Fbi };

enum class Rule {
  // LBI, Figure 1 plus the weakening-absorbing variants
  LAx, LAxW, LTopR, LTopRW, LOneR, LOneRW, LOneL, LBotL,
  LAndL, LAndR, LOrL, LOrR1, LOrR2, LImpL, LImpR,
  LStarL, LStarR, LStarRW, LWandL, LWandLW, LWandR,
  LW, LC, LE, LCut,
  // nested system, Figure 2 (exchange is gone; W lives in the rules)
  EAx, ETopR, EOneR, EOneL, EBotL,
  EAndL, EAndR, EOrL, EOrR1, EOrR2, EImpL, EImpR,
  EStarL, EStarR, EWandL, EWandR, EC, ECut,
  // focused system, Figure 3
  FAxP, FAxN, FP, FN,
  FOneR, FOneL, FBotL, FTopPosR, FTopPosL, FTopNegR,
  FAndPosR, FAndPosL, FAndNegR, FAndNegL1, FAndNegL2,
  FOrR1, FOrR2, FOrL, FStarR, FStarL, FWandR, FWandL, FImpR, FImpL,
  FDecideL, FReleaseL, FDecideR, FReleaseR,
  FC, FCut,
};

struct RuleInfo {
  std::string_view name;
  Calculus calculus;
  int arity;
};

inline RuleInfo rule_info(Rule r) {
  switch (r) {
    case Rule::LAx: return {"Ax", Calculus::Lbi, 0};
    case Rule::LAxW: return {"Ax'", Calculus::Lbi, 0};
    case Rule::LTopR: return {"TR", Calculus::Lbi, 0};
    case Rule::LTopRW: return {"TR'", Calculus::Lbi, 0};
    case Rule::LOneR: return {"IR", Calculus::Lbi, 0};
    case Rule::LOneRW: return {"IR'", Calculus::Lbi, 0};
    case Rule::LOneL: return {"IL", Calculus::Lbi, 1};
    case Rule::LBotL: return {"FL", Calculus::Lbi, 0};
    case Rule::LAndL: return {"&L", Calculus::Lbi, 1};
    case Rule::LAndR: return {"&R", Calculus::Lbi, 2};
    case Rule::LOrL: return {"|L", Calculus::Lbi, 2};
    case Rule::LOrR1: return {"|R1", Calculus::Lbi, 1};
    case Rule::LOrR2: return {"|R2", Calculus::Lbi, 1};
    case Rule::LImpL: return {"->L", Calculus::Lbi, 2};
    case Rule::LImpR: return {"->R", Calculus::Lbi, 1};
    case Rule::LStarL: return {"*L", Calculus::Lbi, 1};
    case Rule::LStarR: return {"*R", Calculus::Lbi, 2};
    case Rule::LStarRW: return {"*R'", Calculus::Lbi, 2};
    case Rule::LWandL: return {"-*L", Calculus::Lbi, 2};
    case Rule::LWandLW: return {"-*L'", Calculus::Lbi, 2};
    case Rule::LWandR: return {"-*R", Calculus::Lbi, 1};
    case Rule::LW: return {"W", Calculus::Lbi, 1};
    case Rule::LC: return {"C", Calculus::Lbi, 1};
    case Rule::LE: return {"E", Calculus::Lbi, 1};
    case Rule::LCut: return {"Cut", Calculus::Lbi, 2};

    case Rule::EAx: return {"Ax", Calculus::Eta, 0};
    case Rule::ETopR: return {"TR", Calculus::Eta, 0};
    case Rule::EOneR: return {"IR", Calculus::Eta, 0};
    case Rule::EOneL: return {"IL", Calculus::Eta, 1};
    case Rule::EBotL: return {"FL", Calculus::Eta, 0};
    case Rule::EAndL: return {"&L", Calculus::Eta, 1};
    case Rule::EAndR: return {"&R", Calculus::Eta, 2};
    case Rule::EOrL: return {"|L", Calculus::Eta, 2};
    case Rule::EOrR1: return {"|R1", Calculus::Eta, 1};
    case Rule::EOrR2: return {"|R2", Calculus::Eta, 1};
    case Rule::EImpL: return {"->L", Calculus::Eta, 2};
    case Rule::EImpR: return {"->R", Calculus::Eta, 1};
    case Rule::EStarL: return {"*L", Calculus::Eta, 1};
    case Rule::EStarR: return {"*R", Calculus::Eta, 2};
    case Rule::EWandL: return {"-*L", Calculus::Eta, 2};
    case Rule::EWandR: return {"-*R", Calculus::Eta, 1};
    case Rule::EC: return {"C", Calculus::Eta, 1};
    case Rule::ECut: return {"Cut", Calculus::Eta, 2};

    case Rule::FAxP: return {"Ax+", Calculus::Fbi, 0};
    case Rule::FAxN: return {"Ax-", Calculus::Fbi, 0};
    case Rule::FP: return {"P", Calculus::Fbi, 0};
    case Rule::FN: return {"N", Calculus::Fbi, 0};
    case Rule::FOneR: return {"IR", Calculus::Fbi, 0};
    case Rule::FOneL: return {"IL", Calculus::Fbi, 1};
    case Rule::FBotL: return {"FL", Calculus::Fbi, 0};
    case Rule::FTopPosR: return {"T+R", Calculus::Fbi, 0};
    case Rule::FTopPosL: return {"T+L", Calculus::Fbi, 1};
    case Rule::FTopNegR: return {"T-R", Calculus::Fbi, 0};
    case Rule::FAndPosR: return {"&+R", Calculus::Fbi, 2};
    case Rule::FAndPosL: return {"&+L", Calculus::Fbi, 1};
    case Rule::FAndNegR: return {"&-R", Calculus::Fbi, 2};
    case Rule::FAndNegL1: return {"&-L1", Calculus::Fbi, 1};
    case Rule::FAndNegL2: return {"&-L2", Calculus::Fbi, 1};
    case Rule::FOrR1: return {"|R1", Calculus::Fbi, 1};
    case Rule::FOrR2: return {"|R2", Calculus::Fbi, 1};
    case Rule::FOrL: return {"|L", Calculus::Fbi, 2};
    case Rule::FStarR: return {"*R", Calculus::Fbi, 2};
    case Rule::FStarL: return {"*L", Calculus::Fbi, 1};
    case Rule::FWandR: return {"-*R", Calculus::Fbi, 1};
    case Rule::FWandL: return {"-*L", Calculus::Fbi, 2};
    case Rule::FImpR: return {"->R", Calculus::Fbi, 1};
    case Rule::FImpL: return {"->L", Calculus::Fbi, 2};
    case Rule::FDecideL: return {"vL", Calculus::Fbi, 1};
    case Rule::FReleaseL: return {"^L", Calculus::Fbi, 1};
    case Rule::FDecideR: return {"^R", Calculus::Fbi, 1};
    case Rule::FReleaseR: return {"vR", Calculus::Fbi, 1};
    case Rule::FC: return {"C", Calculus::Fbi, 1};
    case Rule::FCut: return {"Cut", Calculus::Fbi, 2};
  }
  return {"?", Calculus::Lbi, 0};
}

template <class Seq>
struct ProofT {
  Rule rule{};
  Seq conclusion{};
  std::vector<ProofT> premises{};

  std::size_t nodeCount() const {
    std::size_t n = 1;
    for (const auto& p : premises) n += p.nodeCount();
    return n;
  }
  std::size_t height() const {
    std::size_t h = 0;
    for (const auto& p : premises) h = std::max(h, p.height());
    return h + 1;
  }
};

// Verdict of a proof checker; `where` addresses the first failing node by
// premise indices from the root.
struct CheckResult {
  bool ok = true;
  std::vector<std::size_t> where{};
  std::string message{};

  explicit operator bool() const { return ok; }
  static CheckResult good() { return {}; }
  static CheckResult bad(std::string msg) { return {false, {}, std::move(msg)}; }
  CheckResult nest_under(std::size_t idx) const {
    if (ok) return *this;
    CheckResult r = *this;
    r.where.insert(r.where.begin(), idx);
    return r;
  }
};

}  // namespace bi
