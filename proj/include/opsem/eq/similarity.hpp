#pragma once

#include <vector>

#include "opsem/core/lts.hpp"
#include "opsem/eq/relation.hpp"

namespace opsem {

// Greatest simulation preorder: (s,t) survives iff every move of s is
// matched by t into the surviving relation. Fixpoint from the total
// relation.
inline Relation similarity_preorder(const Lts& lts) {
  const StateId n = lts.n_states();
  std::vector<char> rel(static_cast<std::size_t>(n) * n, 1);
  auto at = [&](StateId a, StateId b) -> char& {
    return rel[static_cast<std::size_t>(a) * n + b];
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (StateId s = 0; s < n; ++s)
      for (StateId t = 0; t < n; ++t) {
        if (!at(s, t)) continue;
        for (const auto& ts : lts.out(s)) {
          bool matched = false;
          for (const auto& tt : lts.out(t))
            if (tt.label == ts.label && at(ts.dst, tt.dst)) {
              matched = true;
              break;
            }
          if (!matched) {
            at(s, t) = 0;
            changed = true;
            break;
          }
        }
      }
  }
  Relation r;
  for (StateId s = 0; s < n; ++s)
    for (StateId t = 0; t < n; ++t)
      if (at(s, t)) r.emplace(s, t);
  return r;
}

inline bool simulation_equivalent(const Relation& similarity, StateId s,
                                  StateId t) {
  return similarity.count({s, t}) && similarity.count({t, s});
}

inline bool simulation_equivalent(const Lts& lts, StateId s, StateId t) {
  lts.check_state(s);
  lts.check_state(t);
  return simulation_equivalent(similarity_preorder(lts), s, t);
}

}  // namespace opsem
