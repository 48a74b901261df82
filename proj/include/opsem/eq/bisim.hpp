#pragma once

#include <cassert>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "opsem/core/lts.hpp"
#include "opsem/eq/relation.hpp"

namespace opsem {

// Coarsest stable refinement of a seed partition: blocks are split by their
// outgoing (label, target block) signatures until a fixpoint is reached.
// With the trivial seed this computes strong bisimilarity.
inline Partition refine_partition(const Lts& lts,
                                  const std::vector<std::uint32_t>& seed) {
  Partition p = Partition::renumber(seed);
  for (;;) {
    using Signature = std::vector<std::pair<LabelId, std::uint32_t>>;
    std::map<std::pair<std::uint32_t, Signature>, std::uint32_t> ids;
    std::vector<std::uint32_t> next(lts.n_states());
    for (StateId s = 0; s < lts.n_states(); ++s) {
      Signature sig;
      for (const auto& t : lts.out(s))
        sig.emplace_back(t.label, p.block_of[t.dst]);
      std::sort(sig.begin(), sig.end());
      sig.erase(std::unique(sig.begin(), sig.end()), sig.end());
      auto key = std::make_pair(p.block_of[s], std::move(sig));
      auto [it, fresh] =
          ids.emplace(std::move(key), static_cast<std::uint32_t>(ids.size()));
      (void)fresh;
      next[s] = it->second;
    }
    if (ids.size() == p.size()) return p;  // no block split: stable
    p = Partition::renumber(next);
  }
}

// Strong bisimilarity as the coarsest partition stable under splitting.
inline Partition bisimilarity_partition(const Lts& lts) {
  return refine_partition(lts,
                          std::vector<std::uint32_t>(lts.n_states(), 0));
}

inline bool bisimilar(const Lts& lts, StateId s, StateId t) {
  lts.check_state(s);
  lts.check_state(t);
  return bisimilarity_partition(lts).same_block(s, t);
}

namespace detail {

// One-sided bisimulation clause: every move of s is answered by t into r.
inline bool clause_holds(const Lts& lts, const Relation& r, StateId s,
                         StateId t) {
  for (const auto& ts : lts.out(s)) {
    bool matched = false;
    for (const auto& tt : lts.out(t))
      if (tt.label == ts.label && r.count({ts.dst, tt.dst})) {
        matched = true;
        break;
      }
    if (!matched) return false;
  }
  return true;
}

}  // namespace detail

// First pair of r that violates the bisimulation clauses, if any.
inline std::optional<StatePair> bisimulation_violation(const Lts& lts,
                                                       const Relation& r) {
  check_relation(lts, r);
  for (const auto& [s, t] : r) {
    if (!detail::clause_holds(lts, r, s, t)) return StatePair{s, t};
    // symmetric clause: t's moves answered by s, pairs kept oriented
    for (const auto& tt : lts.out(t)) {
      bool matched = false;
      for (const auto& ts : lts.out(s))
        if (ts.label == tt.label && r.count({ts.dst, tt.dst})) {
          matched = true;
          break;
        }
      if (!matched) return StatePair{s, t};
    }
  }
  return std::nullopt;
}

inline bool is_bisimulation(const Lts& lts, const Relation& r) {
  return !bisimulation_violation(lts, r).has_value();
}

// Greatest bisimulation by fixpoint from the total relation, removing
// violating pairs until stable. Independent of refine_partition by design:
// the two routes cross-check each other.
inline Relation naive_bisim_fixpoint(const Lts& lts) {
  const StateId n = lts.n_states();
  std::vector<char> rel(static_cast<std::size_t>(n) * n, 1);
  auto at = [&](StateId a, StateId b) -> char& {
    return rel[static_cast<std::size_t>(a) * n + b];
  };
  auto one_way = [&](StateId s, StateId t) {
    for (const auto& ts : lts.out(s)) {
      bool matched = false;
      for (const auto& tt : lts.out(t))
        if (tt.label == ts.label && at(ts.dst, tt.dst)) {
          matched = true;
          break;
        }
      if (!matched) return false;
    }
    return true;
  };
  auto other_way = [&](StateId s, StateId t) {
    for (const auto& tt : lts.out(t)) {
      bool matched = false;
      for (const auto& ts : lts.out(s))
        if (ts.label == tt.label && at(ts.dst, tt.dst)) {
          matched = true;
          break;
        }
      if (!matched) return false;
    }
    return true;
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (StateId s = 0; s < n; ++s)
      for (StateId t = 0; t < n; ++t)
        if (at(s, t) && (!one_way(s, t) || !other_way(s, t))) {
          at(s, t) = 0;
          changed = true;
        }
  }
  Relation r;
  for (StateId s = 0; s < n; ++s)
    for (StateId t = 0; t < n; ++t)
      if (at(s, t)) r.emplace(s, t);
  return r;
}

// Union of two bisimulations; inputs are checked, the result is one by the
// join-semilattice property.
inline Relation join_bisim(const Lts& lts, const Relation& r1,
                           const Relation& r2) {
  auto describe = [](const StatePair& p) {
    std::ostringstream os;
    os << "(" << p.first << ", " << p.second << ")";
    return os.str();
  };
  if (auto w = bisimulation_violation(lts, r1))
    throw PreconditionError("first relation is not a bisimulation, witness " +
                            describe(*w));
  if (auto w = bisimulation_violation(lts, r2))
    throw PreconditionError("second relation is not a bisimulation, witness " +
                            describe(*w));
  Relation joined = r1;
  joined.insert(r2.begin(), r2.end());
  assert(is_bisimulation(lts, joined));
  return joined;
}

}  // namespace opsem
