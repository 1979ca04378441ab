#pragma once

// Polarised nests and the three well-formed polarised sequent shapes.
// A left focus is represented as a marked leaf inside the nest.

#include <optional>

#include "bi/nest.hpp"
#include "bi/polar.hpp"
#include "bi/proof.hpp"

namespace bi {

struct PolLeaf {
  PolFormula f;
  bool focus = false;

  static int compare(const PolLeaf& a, const PolLeaf& b) {
    if (a.focus != b.focus) return a.focus ? 1 : -1;
    return PolFormula::compare(a.f, b.f);
  }
  friend bool operator==(const PolLeaf& a, const PolLeaf& b) { return compare(a, b) == 0; }
};

using PolNest = BasicNest<PolLeaf>;

inline PolNest pleaf(const PolFormula& f) { return PolNest::leaf({f, false}); }
inline PolNest pfocus(const PolFormula& f) { return PolNest::leaf({f, true}); }

inline std::optional<NestPath> focus_position(const PolNest& n) {
  for (auto& p : leaf_positions(n))
    if (n.at(p).leafValue().focus) return p;
  return std::nullopt;
}

// Gamma |- N  (unfocused), Gamma |- [P] (right focus), or
// Gamma{[N]} |- R (left focus, the focused leaf is marked in the context).
struct PolSequent {
  PolNest ctx;
  PolFormula goal;
  bool rightFocus = false;

  friend bool operator==(const PolSequent& a, const PolSequent& b) {
    return a.rightFocus == b.rightFocus && a.goal == b.goal && a.ctx == b.ctx;
  }
  friend bool operator!=(const PolSequent& a, const PolSequent& b) { return !(a == b); }
  friend bool operator<(const PolSequent& a, const PolSequent& b) {
    if (a.rightFocus != b.rightFocus) return b.rightFocus;
    if (int c = PolFormula::compare(a.goal, b.goal)) return c < 0;
    return PolNest::compare(a.ctx, b.ctx) < 0;
  }
};

enum class SeqShape { Unfocused, RightFocus, LeftFocus };

inline SeqShape shape_of(const PolSequent& s) {
  if (s.rightFocus) return SeqShape::RightFocus;
  if (focus_position(s.ctx)) return SeqShape::LeftFocus;
  return SeqShape::Unfocused;
}

// Positive nest: every unmarked leaf is a P. Neutral: every unmarked leaf
// is an L (vN or A+).
inline bool nest_positive(const PolNest& n) {
  for (auto& p : leaf_positions(n)) {
    const PolLeaf& l = n.at(p).leafValue();
    if (!l.focus && !l.f.positive()) return false;
  }
  return true;
}

inline bool nest_neutral(const PolNest& n) {
  for (auto& p : leaf_positions(n)) {
    const PolLeaf& l = n.at(p).leafValue();
    if (!l.focus && !l.f.isLeftNeutral()) return false;
  }
  return true;
}

inline std::size_t focus_count(const PolNest& n) {
  std::size_t c = 0;
  for (auto& p : leaf_positions(n))
    if (n.at(p).leafValue().focus) ++c;
  return c;
}

struct Validation {
  bool ok = true;
  std::string message;
  explicit operator bool() const { return ok; }
  static Validation good() { return {}; }
  static Validation bad(std::string m) { return {false, std::move(m)}; }
};

inline Validation validate_polsequent(const PolSequent& s) {
  std::size_t foci = focus_count(s.ctx);
  if (foci > 1) return Validation::bad("more than one focused context formula");
  if (s.rightFocus && foci) return Validation::bad("focused on both sides");
  if (s.rightFocus) {
    if (!s.goal.positive()) return Validation::bad("right focus on a non-positive goal");
    if (!nest_neutral(s.ctx)) return Validation::bad("right focus requires a neutral context");
    return Validation::good();
  }
  if (foci == 1) {
    auto p = *focus_position(s.ctx);
    if (!s.ctx.at(p).leafValue().f.negative())
      return Validation::bad("left focus on a non-negative formula");
    if (!nest_neutral(s.ctx)) return Validation::bad("left focus requires a neutral context");
    if (!s.goal.isRightNeutral())
      return Validation::bad("left focus requires a right-neutral goal");
    return Validation::good();
  }
  if (!s.goal.negative()) return Validation::bad("unfocused goal must be negative");
  if (!nest_positive(s.ctx)) return Validation::bad("context leaf is not positive");
  return Validation::good();
}

inline bool is_neutral_sequent(const PolSequent& s) {
  return shape_of(s) == SeqShape::Unfocused && nest_neutral(s.ctx) && s.goal.isRightNeutral();
}

using FbiProof = ProofT<PolSequent>;

}  // namespace bi
