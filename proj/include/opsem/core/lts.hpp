#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "opsem/core/error.hpp"

namespace opsem {

using StateId = std::uint32_t;
using LabelId = std::uint32_t;

// --- sorted unique vector helpers (state sets are sorted vectors) ---

inline void sort_unique(std::vector<StateId>& xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
}

inline bool sorted_contains(const std::vector<StateId>& xs, StateId x) {
  return std::binary_search(xs.begin(), xs.end(), x);
}

inline std::vector<StateId> sorted_union(const std::vector<StateId>& a,
                                         const std::vector<StateId>& b) {
  std::vector<StateId> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

inline bool sorted_intersects(const std::vector<StateId>& a,
                              const std::vector<StateId>& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j)
      ++i;
    else if (*j < *i)
      ++j;
    else
      return true;
  }
  return false;
}

struct Transition {
  StateId src;
  LabelId label;
  StateId dst;
  friend auto operator<=>(const Transition&, const Transition&) = default;
};

struct Classification {
  bool deterministic = false;
  bool image_finite = false;
  // Present only for reduction systems (alphabet of size <= 1).
  std::optional<bool> diamond;
  std::optional<bool> confluent;
};

// Explicit finite labelled transition system. States are dense indices
// 0..n_states-1; the alphabet is a sorted set of label tokens. Immutable
// after construction.
class Lts {
public:
  Lts() = default;

  Lts(StateId n_states, std::vector<std::string> alphabet,
      const std::vector<std::tuple<StateId, std::string, StateId>>& transitions,
      std::vector<std::string> state_names = {})
      : n_states_(n_states), alphabet_(std::move(alphabet)) {
    std::sort(alphabet_.begin(), alphabet_.end());
    alphabet_.erase(std::unique(alphabet_.begin(), alphabet_.end()),
                    alphabet_.end());
    for (const auto& l : alphabet_) check_label_token(l);
    transitions_.reserve(transitions.size());
    for (const auto& [src, label, dst] : transitions) {
      check_state(src);
      check_state(dst);
      transitions_.push_back({src, label_id(label), dst});
    }
    std::sort(transitions_.begin(), transitions_.end());
    transitions_.erase(std::unique(transitions_.begin(), transitions_.end()),
                       transitions_.end());
    row_.assign(n_states_ + 1, 0);
    for (const auto& t : transitions_) row_[t.src + 1]++;
    for (StateId s = 0; s < n_states_; ++s) row_[s + 1] += row_[s];
    if (!state_names.empty()) {
      if (state_names.size() != n_states_)
        throw DomainError("state name table size " +
                          std::to_string(state_names.size()) +
                          " does not match state count " +
                          std::to_string(n_states_));
      std::set<std::string_view> seen;
      for (const auto& n : state_names)
        if (!n.empty() && !seen.insert(n).second)
          throw DomainError("duplicate state name: " + n);
      state_names_ = std::move(state_names);
    }
  }

  StateId n_states() const { return n_states_; }
  const std::vector<std::string>& alphabet() const { return alphabet_; }
  const std::vector<Transition>& transitions() const { return transitions_; }
  const std::vector<std::string>& state_names() const { return state_names_; }

  bool unit_alphabet() const { return alphabet_.size() <= 1; }

  std::optional<LabelId> find_label(std::string_view label) const {
    auto it = std::lower_bound(alphabet_.begin(), alphabet_.end(), label);
    if (it == alphabet_.end() || *it != label) return std::nullopt;
    return static_cast<LabelId>(it - alphabet_.begin());
  }

  LabelId label_id(std::string_view label) const {
    if (auto id = find_label(label)) return *id;
    throw DomainError("unknown label: " + std::string(label));
  }

  const std::string& label(LabelId l) const { return alphabet_.at(l); }

  // All transitions leaving s, sorted by (label, dst).
  std::span<const Transition> out(StateId s) const {
    check_state(s);
    return {transitions_.data() + row_[s], row_[s + 1] - row_[s]};
  }

  std::vector<StateId> image(StateId s, LabelId l) const {
    if (l >= alphabet_.size())
      throw DomainError("label id out of range: " + std::to_string(l));
    std::vector<StateId> out_set;
    for (const auto& t : out(s))
      if (t.label == l) out_set.push_back(t.dst);
    sort_unique(out_set);
    return out_set;
  }

  std::vector<StateId> image(StateId s, std::string_view label) const {
    return image(s, label_id(label));
  }

  std::vector<StateId> set_image(const std::vector<StateId>& set,
                                 LabelId l) const {
    std::vector<StateId> out_set;
    for (StateId s : set) {
      auto im = image(s, l);
      out_set.insert(out_set.end(), im.begin(), im.end());
    }
    sort_unique(out_set);
    return out_set;
  }

  std::vector<StateId> set_image(const std::vector<StateId>& set,
                                 std::string_view label) const {
    return set_image(set, label_id(label));
  }

  // Iterated set_image from {s}; the empty word yields {s}.
  std::vector<StateId> multistep(StateId s,
                                 const std::vector<std::string>& word) const {
    check_state(s);
    std::vector<StateId> front{s};
    for (const auto& label : word) {
      front = set_image(front, label);
      if (front.empty()) break;
    }
    return front;
  }

  // Least set containing s closed under all labelled transitions.
  std::vector<StateId> reachable(StateId s) const {
    check_state(s);
    std::vector<bool> seen(n_states_, false);
    std::vector<StateId> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      StateId cur = stack.back();
      stack.pop_back();
      for (const auto& t : out(cur))
        if (!seen[t.dst]) {
          seen[t.dst] = true;
          stack.push_back(t.dst);
        }
    }
    std::vector<StateId> result;
    for (StateId i = 0; i < n_states_; ++i)
      if (seen[i]) result.push_back(i);
    return result;
  }

  // Copy with `label` ensured in the alphabet (transitions unchanged).
  Lts with_label(std::string_view label) const {
    if (find_label(label)) return *this;
    std::vector<std::string> alpha = alphabet_;
    alpha.emplace_back(label);
    std::vector<std::tuple<StateId, std::string, StateId>> ts;
    ts.reserve(transitions_.size());
    for (const auto& t : transitions_)
      ts.emplace_back(t.src, alphabet_[t.label], t.dst);
    return Lts(n_states_, std::move(alpha), ts, state_names_);
  }

  void check_state(StateId s) const {
    if (s >= n_states_)
      throw DomainError("state id out of range: " + std::to_string(s) +
                        " (states: " + std::to_string(n_states_) + ")");
  }

private:
  static void check_label_token(const std::string& l) {
    if (l.empty()) throw DomainError("empty label");
    for (char c : l)
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r')
        throw DomainError("label contains whitespace: \"" + l + "\"");
  }

  StateId n_states_ = 0;
  std::vector<std::string> alphabet_;    // sorted, unique
  std::vector<Transition> transitions_;  // sorted by (src, label, dst), unique
  std::vector<std::size_t> row_;         // offsets into transitions_ per src
  std::vector<std::string> state_names_;
};

// Exact reachability on a finite system (reflexive-transitive closure).
inline bool star_reaches(const Lts& lts, StateId a, StateId b) {
  lts.check_state(b);
  return sorted_contains(lts.reachable(a), b);
}

namespace detail {

inline void require_reduction_system(const Lts& lts, const char* what) {
  if (!lts.unit_alphabet())
    throw DomainError(std::string(what) +
                      " requires a unit alphabet, got size " +
                      std::to_string(lts.alphabet().size()));
}

}  // namespace detail

// One-step diamond: for every a -> b, a -> c there is d with b -> d, c -> d.
inline bool is_diamond(const Lts& lts) {
  detail::require_reduction_system(lts, "diamond check");
  for (StateId a = 0; a < lts.n_states(); ++a) {
    auto succ = lts.out(a);
    for (const auto& tb : succ)
      for (const auto& tc : succ) {
        bool joined = false;
        for (const auto& td : lts.out(tb.dst)) {
          auto cd = lts.image(tc.dst, td.label);
          if (sorted_contains(cd, td.dst)) {
            joined = true;
            break;
          }
        }
        if (!joined) return false;
      }
  }
  return true;
}

// Confluence of the reflexive-transitive closure, brute-forced over the
// finite state space.
inline bool is_confluent(const Lts& lts) {
  detail::require_reduction_system(lts, "confluence check");
  std::vector<std::vector<StateId>> reach(lts.n_states());
  for (StateId s = 0; s < lts.n_states(); ++s) reach[s] = lts.reachable(s);
  for (StateId a = 0; a < lts.n_states(); ++a)
    for (StateId b : reach[a])
      for (StateId c : reach[a])
        if (!sorted_intersects(reach[b], reach[c])) return false;
  return true;
}

inline Classification classify(const Lts& lts) {
  Classification c;
  c.deterministic = true;
  for (StateId s = 0; s < lts.n_states() && c.deterministic; ++s)
    for (LabelId l = 0; l < lts.alphabet().size(); ++l)
      if (lts.image(s, l).size() > 1) {
        c.deterministic = false;
        break;
      }
  c.image_finite = true;  // finite systems are image-finite by construction
  if (lts.unit_alphabet()) {
    c.diamond = is_diamond(lts);
    c.confluent = is_confluent(lts);
  }
  return c;
}

// Unit-alphabet LTS from an unlabelled step relation.
inline Lts make_reduction_system(
    StateId n_states, const std::vector<std::pair<StateId, StateId>>& steps,
    std::string unit_label = "tau") {
  std::vector<std::tuple<StateId, std::string, StateId>> ts;
  ts.reserve(steps.size());
  for (auto [a, b] : steps) ts.emplace_back(a, unit_label, b);
  return Lts(n_states, {std::move(unit_label)}, ts);
}

}  // namespace opsem
