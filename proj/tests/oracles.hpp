#pragma once

// Test-only reference implementations, kept independent of the translation
// code they are used to check.

#include <map>
#include <queue>
#include <set>
#include <vector>

#include "bi/bunch.hpp"

namespace bi::oracle {

// All single-step rewrites of the coherent-equivalence congruence that do
// not grow the term: commutativity, both associations, unit elimination.
// Every bunch reaches its flattened/sorted/unit-free form through these, so
// two bunches are equivalent iff their closures share their minimal
// element.
inline void rewrite_neighbors(const Bunch& b, std::vector<Bunch>& out) {
  if (!b.isComplex()) return;
  const bool add = b.is(BunchKind::Semi);
  auto mk = [&](const Bunch& l, const Bunch& r) {
    return add ? Bunch::semi(l, r) : Bunch::comma(l, r);
  };
  const Bunch &l = b.left(), &r = b.right();

  out.push_back(mk(r, l));  // commutativity
  if (l.kind() == b.kind())  // (x o y) o z -> x o (y o z)
    out.push_back(mk(l.left(), mk(l.right(), r)));
  if (r.kind() == b.kind())  // x o (y o z) -> (x o y) o z
    out.push_back(mk(mk(l, r.left()), r.right()));
  BunchKind unit = add ? BunchKind::UnitAdd : BunchKind::UnitMul;
  if (l.is(unit)) out.push_back(r);
  if (r.is(unit)) out.push_back(l);

  std::vector<Bunch> sub;
  sub.clear();
  rewrite_neighbors(l, sub);
  for (auto& s : sub) out.push_back(mk(s, r));
  sub.clear();
  rewrite_neighbors(r, sub);
  for (auto& s : sub) out.push_back(mk(l, s));
}

inline Bunch closure_representative(const Bunch& start) {
  std::set<Bunch> seen{start};
  std::queue<Bunch> todo;
  todo.push(start);
  Bunch best = start;
  while (!todo.empty()) {
    Bunch cur = todo.front();
    todo.pop();
    if (cur < best) best = cur;
    std::vector<Bunch> next;
    rewrite_neighbors(cur, next);
    for (auto& n : next)
      if (seen.insert(n).second) todo.push(n);
  }
  return best;
}

// Every bunch with at most `maxLeaves` leaves over the given leaf alphabet.
inline std::vector<Bunch> enumerate_bunches(const std::vector<Bunch>& leaves, int maxLeaves) {
  std::vector<std::vector<Bunch>> byLeaves(static_cast<std::size_t>(maxLeaves) + 1);
  byLeaves[1] = leaves;
  for (int n = 2; n <= maxLeaves; ++n) {
    for (int k = 1; k < n; ++k) {
      for (const auto& l : byLeaves[k]) {
        for (const auto& r : byLeaves[n - k]) {
          byLeaves[n].push_back(Bunch::semi(l, r));
          byLeaves[n].push_back(Bunch::comma(l, r));
        }
      }
    }
  }
  std::vector<Bunch> all;
  for (int n = 1; n <= maxLeaves; ++n)
    all.insert(all.end(), byLeaves[n].begin(), byLeaves[n].end());
  return all;
}

}  // namespace bi::oracle
