#pragma once

#include <optional>
#include <string>

#include "opsem/core/error.hpp"
#include "opsem/lambda/ctx.hpp"
#include "opsem/lambda/term.hpp"

namespace opsem::lam {

namespace detail {

inline std::optional<Ty> stlc_check(const TypingCtx& ctx, const Term& t,
                                    std::string* diag) {
  auto failure = [&](const std::string& msg) -> std::optional<Ty> {
    if (diag && diag->empty()) *diag = msg;
    return std::nullopt;
  };
  switch (t.kind()) {
    case Term::Kind::fvar: {
      if (auto ty = ctx.lookup_term(t.atom())) return ty;
      return failure("unbound variable: atom " + std::to_string(t.atom().id));
    }
    case Term::Kind::abs: {
      Atom x = fresh(free_union(ctx, t.body()));
      auto body_ty = stlc_check(ctx.extend(x, TermBind{t.ann()}),
                                open_t(t.body(), 0, Term::fvar(x)), diag);
      if (!body_ty) return std::nullopt;
      return Ty::arrow(t.ann(), *body_ty);
    }
    case Term::Kind::app: {
      auto fn_ty = stlc_check(ctx, t.fn(), diag);
      if (!fn_ty) return std::nullopt;
      if (fn_ty->kind() != Ty::Kind::arrow)
        return failure("applied a non-function");
      auto arg_ty = stlc_check(ctx, t.arg(), diag);
      if (!arg_ty) return std::nullopt;
      if (*arg_ty != fn_ty->dom())
        return failure("argument type does not match the function domain");
      return fn_ty->cod();
    }
    case Term::Kind::tabs:
    case Term::Kind::tapp:
      return failure("polymorphism is not part of the simply typed calculus");
    default:
      return failure("stray bound variable");  // unreachable: opened first
  }
}

}  // namespace detail

// Syntax-directed checking for the simply typed calculus. Binders are
// entered by opening with one fresh atom; annotations make the rules
// inference-free. Returns nullopt on failure, describing the first failing
// subterm through `diag`.
inline std::optional<Ty> typecheck_stlc(const TypingCtx& ctx, const Term& t,
                                        std::string* diag = nullptr) {
  if (!locally_closed(t))
    throw DomainError("term is not locally closed");
  return detail::stlc_check(ctx, t, diag);
}

}  // namespace opsem::lam
