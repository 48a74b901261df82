#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "opsem/core/lts.hpp"
#include "opsem/eq/bisim.hpp"
#include "opsem/eq/relation.hpp"

namespace opsem {

// Designated silent action; defaults to the .aut convention.
struct TauSpec {
  std::string tau = "i";
};

namespace detail {

inline LabelId tau_id(const Lts& lts, const TauSpec& tau) {
  if (auto id = lts.find_label(tau.tau)) return *id;
  throw DomainError("silent label \"" + tau.tau + "\" is not in the alphabet");
}

// tau* closure of every state (forward, reflexive).
inline std::vector<std::vector<StateId>> tau_closures(const Lts& lts,
                                                      LabelId tau) {
  std::vector<std::vector<StateId>> closure(lts.n_states());
  for (StateId s = 0; s < lts.n_states(); ++s) {
    std::vector<bool> seen(lts.n_states(), false);
    std::vector<StateId> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      StateId cur = stack.back();
      stack.pop_back();
      for (const auto& t : lts.out(cur))
        if (t.label == tau && !seen[t.dst]) {
          seen[t.dst] = true;
          stack.push_back(t.dst);
        }
    }
    for (StateId i = 0; i < lts.n_states(); ++i)
      if (seen[i]) closure[s].push_back(i);
  }
  return closure;
}

}  // namespace detail

// Saturated LTS over the same states and alphabet: s =mu=> s' stands for
// tau* mu tau* when mu is visible and for tau* (including zero steps) when
// mu is the silent action.
inline Lts weak_saturate(const Lts& lts, const TauSpec& tau) {
  LabelId tau_l = detail::tau_id(lts, tau);
  auto closure = detail::tau_closures(lts, tau_l);
  std::vector<std::tuple<StateId, std::string, StateId>> weak;
  for (StateId s = 0; s < lts.n_states(); ++s) {
    for (StateId t : closure[s]) weak.emplace_back(s, tau.tau, t);
    for (StateId mid : closure[s])
      for (const auto& tr : lts.out(mid)) {
        if (tr.label == tau_l) continue;
        for (StateId t : closure[tr.dst])
          weak.emplace_back(s, lts.label(tr.label), t);
      }
  }
  return Lts(lts.n_states(), lts.alphabet(), weak, lts.state_names());
}

// Weak bisimilarity via the saturated strong game, which coincides with the
// standard weak game.
inline Partition weak_bisimilarity_partition(const Lts& lts,
                                             const TauSpec& tau) {
  return bisimilarity_partition(weak_saturate(lts, tau));
}

inline bool weak_bisimilar(const Lts& lts, const TauSpec& tau, StateId s,
                           StateId t) {
  lts.check_state(s);
  lts.check_state(t);
  return weak_bisimilarity_partition(lts, tau).same_block(s, t);
}

// sw-bisimulation check: the challenge is a single strong step, the answer a
// weak step (with the tau-option: a silent challenge may be answered by
// staying put). Sound for weak bisimilarity.
inline bool is_sw_bisimulation(const Lts& lts, const TauSpec& tau,
                               const Relation& r) {
  check_relation(lts, r);
  Lts sat = weak_saturate(lts, tau);
  // saturated images already include staying put for silent challenges
  auto forward = [&](StateId s, StateId t) {
    for (const auto& step : lts.out(s)) {
      bool matched = false;
      for (StateId t2 : sat.image(t, step.label))
        if (r.count({step.dst, t2})) {
          matched = true;
          break;
        }
      if (!matched) return false;
    }
    return true;
  };
  auto backward = [&](StateId s, StateId t) {
    for (const auto& step : lts.out(t)) {
      bool matched = false;
      for (StateId s2 : sat.image(s, step.label))
        if (r.count({s2, step.dst})) {
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
