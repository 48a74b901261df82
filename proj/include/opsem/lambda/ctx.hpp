#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "opsem/core/error.hpp"
#include "opsem/lambda/atom.hpp"
#include "opsem/lambda/types.hpp"

namespace opsem::lam {

// Keyed typing context: an ordered list of (atom, binding) pairs with
// pairwise-distinct keys. Extension prepends, so lookup is last-write-wins
// by construction; uniqueness makes that moot but keeps the list law-like.
struct TermBind {
  Ty type;
};
struct TypeBind {
  Ty bound;
};
using Binding = std::variant<TermBind, TypeBind>;

class TypingCtx {
public:
  TypingCtx() = default;

  TypingCtx extend(Atom key, Binding binding) const {
    if (lookup(key))
      throw DomainError("duplicate context key: atom " +
                        std::to_string(key.id));
    TypingCtx out;
    out.entries_.reserve(entries_.size() + 1);
    out.entries_.emplace_back(key, std::move(binding));
    out.entries_.insert(out.entries_.end(), entries_.begin(), entries_.end());
    return out;
  }

  const Binding* lookup(Atom key) const {
    for (const auto& [k, b] : entries_)
      if (k == key) return &b;
    return nullptr;
  }

  std::optional<Ty> lookup_term(Atom key) const {
    if (const auto* b = lookup(key))
      if (const auto* tb = std::get_if<TermBind>(b)) return tb->type;
    return std::nullopt;
  }

  std::optional<Ty> lookup_type_bound(Atom key) const {
    if (const auto* b = lookup(key))
      if (const auto* tb = std::get_if<TypeBind>(b)) return tb->bound;
    return std::nullopt;
  }

  const std::vector<std::pair<Atom, Binding>>& entries() const {
    return entries_;
  }

  std::size_t size() const { return entries_.size(); }

private:
  std::vector<std::pair<Atom, Binding>> entries_;  // most recent first
};

// Keys and every atom mentioned in the bindings.
inline void atoms_into(AtomSet& out, const TypingCtx& ctx) {
  for (const auto& [key, binding] : ctx.entries()) {
    out.insert(key);
    if (const auto* tb = std::get_if<TermBind>(&binding))
      atoms_into(out, tb->type);
    else
      atoms_into(out, std::get<TypeBind>(binding).bound);
  }
}

}  // namespace opsem::lam
