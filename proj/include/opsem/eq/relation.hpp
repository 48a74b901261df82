#pragma once

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "opsem/core/lts.hpp"

namespace opsem {

using StatePair = std::pair<StateId, StateId>;
using Relation = std::set<StatePair>;

inline void check_relation(const Lts& lts, const Relation& r) {
  for (const auto& [s, t] : r) {
    lts.check_state(s);
    lts.check_state(t);
  }
}

// Partition of the state space into disjoint nonempty blocks. Blocks are
// numbered by first occurrence in StateId order, so equal partitions have
// identical representations.
struct Partition {
  std::vector<std::uint32_t> block_of;      // state -> block index
  std::vector<std::vector<StateId>> blocks; // block index -> sorted states

  bool same_block(StateId a, StateId b) const {
    return block_of.at(a) == block_of.at(b);
  }

  std::size_t size() const { return blocks.size(); }

  // Canonicalize an arbitrary block assignment.
  static Partition renumber(const std::vector<std::uint32_t>& raw) {
    Partition p;
    p.block_of.assign(raw.size(), 0);
    std::vector<std::int64_t> remap;
    for (StateId s = 0; s < raw.size(); ++s) {
      if (raw[s] >= remap.size()) remap.resize(raw[s] + 1, -1);
      if (remap[raw[s]] < 0) {
        remap[raw[s]] = static_cast<std::int64_t>(p.blocks.size());
        p.blocks.emplace_back();
      }
      auto b = static_cast<std::uint32_t>(remap[raw[s]]);
      p.block_of[s] = b;
      p.blocks[b].push_back(s);
    }
    return p;
  }

  // The induced equivalence as a pair set (quadratic; for desk scale).
  Relation as_relation() const {
    Relation r;
    for (const auto& block : blocks)
      for (StateId a : block)
        for (StateId b : block) r.emplace(a, b);
    return r;
  }
};

inline Partition trivial_partition(StateId n_states) {
  return Partition::renumber(std::vector<std::uint32_t>(n_states, 0));
}

}  // namespace opsem
