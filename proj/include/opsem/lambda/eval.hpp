#pragma once

#include <optional>
#include <utility>

#include "opsem/core/gen.hpp"
#include "opsem/lambda/term.hpp"

namespace opsem::lam {

// One leftmost-outermost full-beta step (and its type-level analogue);
// nullopt on normal forms. Reduction under binders opens with a fresh atom
// and closes again, so every manipulated term stays locally closed.
inline std::optional<Term> step(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::app: {
      if (t.fn().kind() == Term::Kind::abs)
        return open_t(t.fn().body(), 0, t.arg());
      if (auto fn2 = step(t.fn())) return Term::app(*fn2, t.arg());
      if (auto arg2 = step(t.arg())) return Term::app(t.fn(), *arg2);
      return std::nullopt;
    }
    case Term::Kind::tapp: {
      if (t.fn().kind() == Term::Kind::tabs)
        return open_ty_t(t.fn().body(), 0, t.ann());
      if (auto fn2 = step(t.fn())) return Term::tapp(*fn2, t.ann());
      return std::nullopt;
    }
    case Term::Kind::abs: {
      Atom x = fresh(fv(t.body()));
      if (auto body2 = step(open_t(t.body(), 0, Term::fvar(x))))
        return Term::abs(t.ann(), close_t(*body2, x, 0));
      return std::nullopt;
    }
    case Term::Kind::tabs: {
      Atom x = fresh(free_union(ftv_term(t.body()), ftv(t.ann())));
      if (auto body2 = step(open_ty_t(t.body(), 0, Ty::fvar(x))))
        return Term::tabs(t.ann(), close_ty_t(*body2, x, 0));
      return std::nullopt;
    }
    default:
      return std::nullopt;  // variables
  }
}

inline std::optional<Term> step_stlc(const Term& t) { return step(t); }
inline std::optional<Term> step_fsub(const Term& t) { return step(t); }

struct NormalizeResult {
  Term term;
  std::size_t steps = 0;
  bool normal = false;  // false when fuel ran out first
};

inline NormalizeResult normalize(Term t, std::size_t fuel) {
  NormalizeResult r{std::move(t), 0, false};
  while (r.steps < fuel) {
    auto next = step(r.term);
    if (!next) {
      r.normal = true;
      return r;
    }
    r.term = std::move(*next);
    ++r.steps;
  }
  r.normal = !step(r.term).has_value();
  return r;
}

// Beta reduction packaged as a unit-label generator, so terms form a
// reduction system like any other.
inline Generator<Term> beta_reduction_system() {
  return reduction_generator<Term>([](const Term& t) {
    std::vector<Term> out;
    if (auto next = step(t)) out.push_back(std::move(*next));
    return out;
  });
}

}  // namespace opsem::lam
