#pragma once

#include <cstdint>
#include <deque>
#include <map>
#include <numeric>
#include <ostream>
#include <string>
#include <vector>

#include "opsem/automata/nfa.hpp"
#include "opsem/core/lts.hpp"
#include "opsem/eq/bisim.hpp"

namespace opsem::fa {

// Deterministic automaton produced by the subset construction: states are
// the reachable subsets of the source NA (the empty subset is an explicit
// dead state when reachable), the transition map is total.
struct Da {
  std::vector<std::vector<StateId>> state_sets;  // subset per DFA state
  std::vector<std::string> alphabet;
  std::vector<std::vector<std::uint32_t>> trans;  // [state][label] -> state
  std::uint32_t initial = 0;
  std::vector<std::uint32_t> accepting;  // sorted unique

  bool is_accepting(std::uint32_t q) const {
    return std::binary_search(accepting.begin(), accepting.end(), q);
  }
};

inline constexpr std::size_t kSubsetGuard = std::size_t{1} << 20;

// Subset construction. Deterministic: subsets are explored breadth-first,
// labels in alphabet order, subsets identified by their sorted state lists.
inline Da determinize(const Na& na) {
  Da da;
  da.alphabet = na.lts.alphabet();
  std::map<std::vector<StateId>, std::uint32_t> index;
  std::deque<std::uint32_t> queue;

  auto intern = [&](std::vector<StateId> subset) {
    auto [it, fresh] = index.emplace(
        std::move(subset), static_cast<std::uint32_t>(da.state_sets.size()));
    if (fresh) {
      if (da.state_sets.size() >= kSubsetGuard)
        throw BoundError("subset construction exceeded " +
                             std::to_string(kSubsetGuard) + " subsets",
                         da.state_sets.size());
      da.state_sets.push_back(it->first);
      queue.push_back(it->second);
    }
    return it->second;
  };

  da.initial = intern(na.initial);
  while (!queue.empty()) {
    std::uint32_t q = queue.front();
    queue.pop_front();
    da.trans.resize(da.state_sets.size());
    auto& row = da.trans[q];
    row.resize(da.alphabet.size());
    for (LabelId l = 0; l < da.alphabet.size(); ++l) {
      std::vector<StateId> next = na.lts.set_image(da.state_sets[q], l);
      row[l] = intern(std::move(next));
    }
  }
  da.trans.resize(da.state_sets.size());
  for (auto& row : da.trans) row.resize(da.alphabet.size());
  for (std::uint32_t q = 0; q < da.state_sets.size(); ++q)
    if (sorted_intersects(da.state_sets[q], na.accepting))
      da.accepting.push_back(q);
  return da;
}

inline LabelId da_label_id(const Da& da, std::string_view symbol) {
  auto it = std::lower_bound(da.alphabet.begin(), da.alphabet.end(), symbol);
  if (it == da.alphabet.end() || *it != symbol)
    throw DomainError("unknown symbol: " + std::string(symbol));
  return static_cast<LabelId>(it - da.alphabet.begin());
}

inline bool da_accepts(const Da& da, const std::vector<std::string>& word) {
  std::uint32_t q = da.initial;
  for (const auto& symbol : word) q = da.trans[q][da_label_id(da, symbol)];
  return da.is_accepting(q);
}

struct DaEquivResult {
  bool equivalent = true;
  std::vector<std::string> counterexample;  // meaningful when !equivalent
};

// Hopcroft-Karp product walk with union-find; on inequivalence the word
// that reaches the first acceptance mismatch (breadth-first, labels in
// alphabet order) is a shortest distinguishing word.
inline DaEquivResult da_equivalent(const Da& d1, const Da& d2) {
  if (d1.alphabet != d2.alphabet)
    throw DomainError("automata have different alphabets");

  std::vector<std::uint32_t> parent(d1.state_sets.size() +
                                    d2.state_sets.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::uint32_t x) -> std::uint32_t {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto shift = [&](std::uint32_t q2) {
    return static_cast<std::uint32_t>(q2 + d1.state_sets.size());
  };

  struct Item {
    std::uint32_t q1, q2;
    std::vector<std::string> word;
  };
  std::deque<Item> queue;
  parent[find(d1.initial)] = find(shift(d2.initial));
  queue.push_back({d1.initial, d2.initial, {}});
  while (!queue.empty()) {
    Item item = std::move(queue.front());
    queue.pop_front();
    if (d1.is_accepting(item.q1) != d2.is_accepting(item.q2))
      return {false, std::move(item.word)};
    for (LabelId l = 0; l < d1.alphabet.size(); ++l) {
      std::uint32_t n1 = d1.trans[item.q1][l];
      std::uint32_t n2 = d2.trans[item.q2][l];
      std::uint32_t r1 = find(n1);
      std::uint32_t r2 = find(shift(n2));
      if (r1 == r2) continue;
      parent[r1] = r2;
      auto word = item.word;
      word.push_back(d1.alphabet[l]);
      queue.push_back({n1, n2, std::move(word)});
    }
  }
  return {true, {}};
}

namespace detail {

inline Lts da_to_lts(const Da& da) {
  std::vector<std::tuple<StateId, std::string, StateId>> ts;
  for (std::uint32_t q = 0; q < da.trans.size(); ++q)
    for (LabelId l = 0; l < da.alphabet.size(); ++l)
      ts.emplace_back(q, da.alphabet[l], da.trans[q][l]);
  return Lts(static_cast<StateId>(da.state_sets.size()), da.alphabet, ts);
}

}  // namespace detail

// Merge states equivalent under partition refinement seeded with the
// accepting / non-accepting split; the language is preserved.
inline Da minimize_da(const Da& da) {
  Lts lts = detail::da_to_lts(da);
  std::vector<std::uint32_t> seed(da.state_sets.size(), 0);
  for (std::uint32_t q : da.accepting) seed[q] = 1;
  Partition p = refine_partition(lts, seed);

  Da out;
  out.alphabet = da.alphabet;
  out.state_sets.reserve(p.size());
  for (const auto& block : p.blocks)
    out.state_sets.push_back(da.state_sets[block.front()]);
  out.trans.assign(p.size(),
                   std::vector<std::uint32_t>(da.alphabet.size(), 0));
  for (std::uint32_t b = 0; b < p.size(); ++b) {
    std::uint32_t rep = p.blocks[b].front();
    for (LabelId l = 0; l < da.alphabet.size(); ++l)
      out.trans[b][l] = p.block_of[da.trans[rep][l]];
    if (da.is_accepting(rep)) out.accepting.push_back(b);
  }
  out.initial = p.block_of[da.initial];
  return out;
}

inline void write_da(std::ostream& out, const Da& da) {
  Na as_na;
  as_na.lts = detail::da_to_lts(da);
  as_na.initial = {da.initial};
  as_na.accepting.assign(da.accepting.begin(), da.accepting.end());
  write_na(out, as_na);
}

}  // namespace opsem::fa
