#pragma once

#include <numeric>
#include <vector>

#include "opsem/automata/dfa.hpp"
#include "opsem/automata/nfa.hpp"
#include "opsem/core/lts.hpp"

namespace opsem {

// Trace sets of a finite LTS are prefix-closed regular languages, so trace
// equivalence is decided exactly: determinize from each state with every
// nonempty subset accepting, then compare the DFAs.
inline bool trace_equivalent(const Lts& lts, StateId s, StateId t) {
  lts.check_state(s);
  lts.check_state(t);
  if (s == t) return true;
  std::vector<StateId> all(lts.n_states());
  std::iota(all.begin(), all.end(), 0);
  fa::Da ds = fa::determinize(fa::make_na(lts, {s}, all));
  fa::Da dt = fa::determinize(fa::make_na(lts, {t}, all));
  return fa::da_equivalent(ds, dt).equivalent;
}

}  // namespace opsem
