#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "opsem/core/aut.hpp"
#include "opsem/core/lts.hpp"

namespace opsem::fa {

// Nondeterministic finite automaton: an LTS with initial and accepting
// structure. A set of initial states is allowed; a singleton reproduces the
// classical NFA.
struct Na {
  Lts lts;
  std::vector<StateId> initial;    // sorted unique
  std::vector<StateId> accepting;  // sorted unique
};

inline Na make_na(Lts lts, std::vector<StateId> initial,
                  std::vector<StateId> accepting) {
  for (StateId s : initial) lts.check_state(s);
  for (StateId s : accepting) lts.check_state(s);
  sort_unique(initial);
  sort_unique(accepting);
  return Na{std::move(lts), std::move(initial), std::move(accepting)};
}

inline Na na_from_aut(const AutData& data) {
  std::vector<StateId> initial =
      data.has_initial_ext ? data.initial_ext
                           : std::vector<StateId>{data.initial};
  return make_na(data.lts, std::move(initial), data.accepting);
}

inline bool accepts(const Na& na, const std::vector<std::string>& word) {
  std::vector<StateId> current = na.initial;
  for (const auto& symbol : word) {
    current = na.lts.set_image(current, symbol);
    if (current.empty()) break;
  }
  return sorted_intersects(current, na.accepting);
}

inline void write_na(std::ostream& out, const Na& na) {
  if (na.lts.n_states() == 0) throw DomainError("cannot export an empty NA");
  StateId header_initial = na.initial.size() == 1 ? na.initial.front() : 0;
  out << "des (" << header_initial << ", " << na.lts.transitions().size()
      << ", " << na.lts.n_states() << ")\n";
  out << "accepting:";
  for (StateId s : na.accepting) out << " " << s;
  out << "\n";
  if (na.initial.size() != 1) {
    out << "initial:";
    for (StateId s : na.initial) out << " " << s;
    out << "\n";
  }
  for (const auto& t : na.lts.transitions())
    out << "(" << t.src << ",\"" << na.lts.label(t.label) << "\"," << t.dst
        << ")\n";
}

}  // namespace opsem::fa
