#pragma once

#include <compare>
#include <cstdint>
#include <set>

namespace opsem::lam {

// Free-variable names: totally ordered, decidable equality.
struct Atom {
  std::uint64_t id = 0;
  friend auto operator<=>(const Atom&, const Atom&) = default;
};

using AtomSet = std::set<Atom>;

// Smallest atom outside s: 0 for the empty set, max+1 otherwise. Satisfies
// fresh(s) not-in s for every finite s.
inline Atom fresh(const AtomSet& s) {
  if (s.empty()) return Atom{0};
  return Atom{s.rbegin()->id + 1};
}

inline void atoms_into(AtomSet& out, Atom a) { out.insert(a); }

inline void atoms_into(AtomSet& out, const AtomSet& s) {
  out.insert(s.begin(), s.end());
}

// Union of the atoms collected from each argument. Anything with an
// atoms_into overload participates: atoms, atom sets, terms, types, typing
// contexts, or the pre-applied result of a user extractor. Combined with
// `fresh` this yields an atom fresh for everything in scope.
template <class... Collectors>
AtomSet free_union(const Collectors&... xs) {
  AtomSet out;
  (atoms_into(out, xs), ...);
  return out;
}

}  // namespace opsem::lam
