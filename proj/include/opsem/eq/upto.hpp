#pragma once

#include "opsem/core/lts.hpp"
#include "opsem/eq/bisim.hpp"
#include "opsem/eq/relation.hpp"

namespace opsem {

// Bisimulation up to bisimilarity: answers may land in (~ o r o ~) instead
// of r itself, so the game can stop as soon as two bisimilar states are
// reached. Any relation passing this check is contained in bisimilarity.
inline bool is_bisimulation_up_to(const Lts& lts, const Relation& r) {
  check_relation(lts, r);
  Partition bisim = bisimilarity_partition(lts);
  auto in_closure = [&](StateId a, StateId b) {
    for (const auto& [u, v] : r)
      if (bisim.same_block(a, u) && bisim.same_block(v, b)) return true;
    return false;
  };
  auto forward = [&](StateId s, StateId t) {
    for (const auto& ts : lts.out(s)) {
      bool matched = false;
      for (const auto& tt : lts.out(t))
        if (tt.label == ts.label && in_closure(ts.dst, tt.dst)) {
          matched = true;
          break;
        }
      if (!matched) return false;
    }
    return true;
  };
  auto backward = [&](StateId s, StateId t) {
    for (const auto& tt : lts.out(t)) {
      bool matched = false;
      for (const auto& ts : lts.out(s))
        if (ts.label == tt.label && in_closure(ts.dst, tt.dst)) {
          matched = true;
          break;
        }
      if (!matched) return false;
    }
    return true;
  };
  for (const auto& [s, t] : r)
    if (!forward(s, t) || !backward(s, t)) return false;
  return true;
}

}  // namespace opsem
