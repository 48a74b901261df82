#pragma once

#include <optional>
#include <string>

#include "opsem/core/error.hpp"
#include "opsem/lambda/ctx.hpp"
#include "opsem/lambda/term.hpp"

namespace opsem::lam {

inline constexpr std::size_t kSubtypeFuel = 100000;

namespace detail {

inline bool subtype_rec(const TypingCtx& ctx, const Ty& s, const Ty& t,
                        std::size_t& fuel) {
  if (fuel == 0)
    throw BoundError("subtype check exceeded its derivation budget",
                     kSubtypeFuel);
  --fuel;
  // top is the greatest type
  if (t.kind() == Ty::Kind::top) return true;
  switch (s.kind()) {
    case Ty::Kind::tvar_f: {
      // reflexivity on variables, otherwise promote through the bound
      if (t.kind() == Ty::Kind::tvar_f && s.atom() == t.atom()) return true;
      auto bound = ctx.lookup_type_bound(s.atom());
      if (!bound)
        throw DomainError("unbound type variable: atom " +
                          std::to_string(s.atom().id));
      return subtype_rec(ctx, *bound, t, fuel);
    }
    case Ty::Kind::arrow:
      return t.kind() == Ty::Kind::arrow &&
             subtype_rec(ctx, t.dom(), s.dom(), fuel) &&
             subtype_rec(ctx, s.cod(), t.cod(), fuel);
    case Ty::Kind::all: {
      if (t.kind() != Ty::Kind::all) return false;
      if (!subtype_rec(ctx, t.bound(), s.bound(), fuel)) return false;
      // compare bodies under a fresh variable at the tighter bound
      Atom x = fresh(free_union(ctx, s, t));
      TypingCtx ext = ctx.extend(x, TypeBind{t.bound()});
      return subtype_rec(ext, open_ty(s.body(), 0, Ty::fvar(x)),
                         open_ty(t.body(), 0, Ty::fvar(x)), fuel);
    }
    case Ty::Kind::base:
      return t.kind() == Ty::Kind::base && s.name() == t.name();
    case Ty::Kind::top:
      return false;  // t is not top here
    default:
      throw DomainError("subtype check on a type that is not locally closed");
  }
}

}  // namespace detail

// Algorithmic subtyping with bounded quantification: top is maximal,
// variables reflect or promote through their bound, arrows are
// contravariant/covariant, universals compare bounds contravariantly and
// bodies under the tighter bound.
inline bool subtype(const TypingCtx& ctx, const Ty& s, const Ty& t) {
  if (!locally_closed(s) || !locally_closed(t))
    throw DomainError("subtype arguments must be locally closed");
  std::size_t fuel = kSubtypeFuel;
  return detail::subtype_rec(ctx, s, t, fuel);
}

namespace detail {

// Promote a type through variable bounds until it is structural.
inline std::optional<Ty> expose(const TypingCtx& ctx, Ty t) {
  for (std::size_t hops = 0; hops <= ctx.size(); ++hops) {
    if (t.kind() != Ty::Kind::tvar_f) return t;
    auto bound = ctx.lookup_type_bound(t.atom());
    if (!bound)
      throw DomainError("unbound type variable: atom " +
                        std::to_string(t.atom().id));
    t = *bound;
  }
  throw DomainError("cyclic type-variable bounds");
}

inline std::optional<Ty> fsub_check(const TypingCtx& ctx, const Term& t,
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
      Atom x = fresh(free_union(ctx, t.body(), ftv_term(t.body()),
                                ftv(t.ann())));
      auto body_ty = fsub_check(ctx.extend(x, TermBind{t.ann()}),
                                open_t(t.body(), 0, Term::fvar(x)), diag);
      if (!body_ty) return std::nullopt;
      return Ty::arrow(t.ann(), *body_ty);
    }
    case Term::Kind::app: {
      auto fn_ty = fsub_check(ctx, t.fn(), diag);
      if (!fn_ty) return std::nullopt;
      auto exposed = expose(ctx, *fn_ty);
      if (!exposed || exposed->kind() != Ty::Kind::arrow)
        return failure("applied a non-function");
      auto arg_ty = fsub_check(ctx, t.arg(), diag);
      if (!arg_ty) return std::nullopt;
      if (!subtype(ctx, *arg_ty, exposed->dom()))
        return failure("argument type is not a subtype of the domain");
      return exposed->cod();
    }
    case Term::Kind::tabs: {
      Atom x = fresh(free_union(ctx, t.body(), ftv_term(t.body()),
                                ftv(t.ann())));
      auto body_ty = fsub_check(ctx.extend(x, TypeBind{t.ann()}),
                                open_ty_t(t.body(), 0, Ty::fvar(x)), diag);
      if (!body_ty) return std::nullopt;
      return Ty::all(t.ann(), close_ty(*body_ty, x, 0));
    }
    case Term::Kind::tapp: {
      auto fn_ty = fsub_check(ctx, t.fn(), diag);
      if (!fn_ty) return std::nullopt;
      auto exposed = expose(ctx, *fn_ty);
      if (!exposed || exposed->kind() != Ty::Kind::all)
        return failure("type application of a non-universal");
      if (!subtype(ctx, t.ann(), exposed->bound()))
        return failure("type argument violates the quantifier bound");
      return open_ty(exposed->body(), 0, t.ann());
    }
    default:
      return failure("stray bound variable");  // unreachable: opened first
  }
}

}  // namespace detail

// Algorithmic typing for the bounded-polymorphic calculus: subsumption is
// folded into application and type application, where function types are
// exposed through variable bounds before matching.
inline std::optional<Ty> typecheck_fsub(const TypingCtx& ctx, const Term& t,
                                        std::string* diag = nullptr) {
  if (!locally_closed(t))
    throw DomainError("term is not locally closed");
  return detail::fsub_check(ctx, t, diag);
}

}  // namespace opsem::lam
