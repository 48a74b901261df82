#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "opsem/ccs/process.hpp"
#include "opsem/core/error.hpp"
#include "opsem/core/lts.hpp"

namespace opsem::ccs {

namespace detail {

// SOS rules: Act, SumL/SumR, ParL/ParR, Com, Res, Const. `active` keeps the
// constants currently being unfolded, so an unguarded cycle like K = K
// contributes no derivatives instead of looping.
inline void derive(const Defs& defs, const Process& p,
                   std::set<std::string>& active,
                   std::vector<std::pair<Act, Process>>& out) {
  switch (p.kind()) {
    case Process::Kind::nil: break;
    case Process::Kind::prefix:
      out.emplace_back(p.act(), p.body());
      break;
    case Process::Kind::sum:
      derive(defs, p.left(), active, out);
      derive(defs, p.right(), active, out);
      break;
    case Process::Kind::par: {
      std::vector<std::pair<Act, Process>> dl, dr;
      derive(defs, p.left(), active, dl);
      derive(defs, p.right(), active, dr);
      for (const auto& [act, l2] : dl)
        out.emplace_back(act, Process::make_par(l2, p.right()));
      for (const auto& [act, r2] : dr)
        out.emplace_back(act, Process::make_par(p.left(), r2));
      for (const auto& [la, l2] : dl) {
        if (la.is_tau()) continue;
        for (const auto& [ra, r2] : dr)
          if (ra == la.co())
            out.emplace_back(Act::make_tau(), Process::make_par(l2, r2));
      }
      break;
    }
    case Process::Kind::res: {
      std::vector<std::pair<Act, Process>> db;
      derive(defs, p.body(), active, db);
      for (const auto& [act, b2] : db) {
        if (!act.is_tau() && act.channel == p.text()) continue;
        out.emplace_back(act, Process::make_res(p.text(), b2));
      }
      break;
    }
    case Process::Kind::constant: {
      auto it = defs.find(p.text());
      if (it == defs.end())
        throw DomainError("unbound constant: " + p.text());
      if (!active.insert(p.text()).second) break;  // unguarded cycle
      derive(defs, it->second, active, out);
      active.erase(p.text());
      break;
    }
  }
}

}  // namespace detail

// All SOS derivatives of p, sorted by (action, canonical print form) and
// duplicate-free.
inline std::vector<std::pair<Act, Process>> transitions(const Defs& defs,
                                                        const Process& p) {
  std::vector<std::pair<Act, Process>> raw;
  std::set<std::string> active;
  detail::derive(defs, p, active, raw);
  std::vector<std::tuple<Act, std::string, Process>> keyed;
  keyed.reserve(raw.size());
  for (auto& [act, q] : raw) keyed.emplace_back(act, q.print(), q);
  std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) {
    return std::tie(std::get<0>(x), std::get<1>(x)) <
           std::tie(std::get<0>(y), std::get<1>(y));
  });
  std::vector<std::pair<Act, Process>> out;
  for (std::size_t i = 0; i < keyed.size(); ++i) {
    if (i > 0 && std::get<0>(keyed[i]) == std::get<0>(keyed[i - 1]) &&
        std::get<1>(keyed[i]) == std::get<1>(keyed[i - 1]))
      continue;
    out.emplace_back(std::get<0>(keyed[i]), std::get<2>(keyed[i]));
  }
  return out;
}

// Finite LTS extracted from a set of root processes.
struct Explored {
  Lts lts;
  std::vector<Process> states;  // per StateId, in discovery order
  std::vector<StateId> roots;   // ids of the requested roots
};

// Breadth-first closure of the roots under transitions. States are numbered
// in discovery order; derivatives are visited in the canonical order of
// `transitions`, so numbering is deterministic. Exceeding max_states raises
// BoundError rather than returning a truncated system.
inline Explored explore_lts(const Defs& defs,
                            const std::vector<Process>& roots,
                            std::size_t max_states) {
  if (max_states < 1) throw DomainError("max_states must be at least 1");
  std::vector<Process> states;
  std::map<std::string, StateId> index;
  std::deque<StateId> queue;
  auto intern = [&](const Process& p) {
    std::string key = p.print();
    auto it = index.find(key);
    if (it != index.end()) return it->second;
    if (states.size() >= max_states)
      throw BoundError("state bound " + std::to_string(max_states) +
                           " exceeded during exploration",
                       states.size());
    auto id = static_cast<StateId>(states.size());
    states.push_back(p);
    index.emplace(std::move(key), id);
    queue.push_back(id);
    return id;
  };

  Explored result;
  for (const auto& r : roots) result.roots.push_back(intern(r));
  std::vector<std::tuple<StateId, std::string, StateId>> trans;
  while (!queue.empty()) {
    StateId src = queue.front();
    queue.pop_front();
    for (const auto& [act, q] : transitions(defs, states[src]))
      trans.emplace_back(src, act.label(), intern(q));
  }

  std::vector<std::string> alphabet;
  for (const auto& t : trans) alphabet.push_back(std::get<1>(t));
  std::vector<std::string> names;
  names.reserve(states.size());
  for (const auto& p : states) names.push_back(p.print());
  result.lts = Lts(static_cast<StateId>(states.size()), std::move(alphabet),
                   trans, std::move(names));
  result.states = std::move(states);
  return result;
}

}  // namespace opsem::ccs
