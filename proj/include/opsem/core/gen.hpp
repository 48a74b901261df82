#pragma once

#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "opsem/core/verdict.hpp"

namespace opsem {

// On-the-fly transition system over an ordered state type. The successor
// function must be deterministic and return a duplicate-free list; image
// finiteness is by contract.
template <class State>
class Generator {
public:
  using Successor = std::pair<std::string, State>;
  using SuccFn = std::function<std::vector<Successor>(const State&)>;

  explicit Generator(SuccFn succ) : succ_(std::move(succ)) {}

  std::vector<Successor> successors(const State& s) const { return succ_(s); }

private:
  SuccFn succ_;
};

// Generator with the unit alphabet, from an unlabelled step function.
template <class State>
Generator<State> reduction_generator(
    std::function<std::vector<State>(const State&)> step,
    std::string unit_label = "tau") {
  return Generator<State>(
      [step = std::move(step), unit_label = std::move(unit_label)](
          const State& s) -> std::vector<std::pair<std::string, State>> {
        std::vector<std::pair<std::string, State>> out;
        for (auto& t : step(s)) out.emplace_back(unit_label, std::move(t));
        return out;
      });
}

// Reflexive-transitive reachability by breadth-first expansion, bounded by
// `fuel` rounds. If the frontier stabilizes first the answer is exact.
template <class State>
Verdict star_reaches(const Generator<State>& gen, const State& from,
                     const State& to, std::size_t fuel) {
  if (from == to) return Verdict::yes;
  std::set<State> visited{from};
  std::vector<State> frontier{from};
  for (std::size_t round = 0; round < fuel; ++round) {
    std::vector<State> next;
    for (const State& s : frontier)
      for (const auto& [label, t] : gen.successors(s)) {
        (void)label;
        if (t == to) return Verdict::yes;
        if (visited.insert(t).second) next.push_back(t);
      }
    if (next.empty()) return Verdict::no;  // closure complete
    frontier = std::move(next);
  }
  return Verdict::undecided;
}

}  // namespace opsem
