#pragma once

#include <cstdint>
#include <memory>
#include <utility>

#include "opsem/lambda/types.hpp"

namespace opsem::lam {

// Locally nameless terms. Bound variables are de Bruijn indices with two
// separate namespaces: term indices count enclosing `abs`, type indices
// count enclosing `tabs`. Free variables of either sort are atoms.
class Term {
public:
  enum class Kind { bvar, fvar, abs, app, tabs, tapp };

  Term() : Term(fvar(Atom{0})) {}

  static Term bvar(std::uint32_t index) {
    return Term(std::make_shared<const Node>(
        Node{Kind::bvar, index, {}, Ty(), nullptr, nullptr}));
  }
  static Term fvar(Atom a) {
    return Term(std::make_shared<const Node>(
        Node{Kind::fvar, 0, a, Ty(), nullptr, nullptr}));
  }
  static Term abs(Ty ann, Term body) {
    return Term(std::make_shared<const Node>(
        Node{Kind::abs, 0, {}, std::move(ann), body.node_, nullptr}));
  }
  static Term app(Term fn, Term arg) {
    return Term(std::make_shared<const Node>(
        Node{Kind::app, 0, {}, Ty(), fn.node_, arg.node_}));
  }
  static Term tabs(Ty bound, Term body) {
    return Term(std::make_shared<const Node>(
        Node{Kind::tabs, 0, {}, std::move(bound), body.node_, nullptr}));
  }
  static Term tapp(Term fn, Ty arg) {
    return Term(std::make_shared<const Node>(
        Node{Kind::tapp, 0, {}, std::move(arg), fn.node_, nullptr}));
  }

  Kind kind() const { return node_->kind; }
  std::uint32_t index() const { return node_->index; }  // bvar
  Atom atom() const { return node_->atom; }             // fvar
  const Ty& ann() const { return node_->ty; }           // abs / tabs / tapp
  Term body() const { return Term(node_->a); }          // abs / tabs
  Term fn() const { return Term(node_->a); }            // app / tapp
  Term arg() const { return Term(node_->b); }           // app

  bool is_value() const {
    return node_->kind == Kind::abs || node_->kind == Kind::tabs;
  }

  friend bool operator==(const Term& x, const Term& y) {
    return x.node_ == y.node_ || equal(*x.node_, *y.node_);
  }
  friend bool operator<(const Term& x, const Term& y) {
    return less(*x.node_, *y.node_);
  }

private:
  struct Node {
    Kind kind;
    std::uint32_t index;
    Atom atom;
    Ty ty;
    std::shared_ptr<const Node> a, b;
  };

  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  static bool equal(const Node& x, const Node& y) {
    if (x.kind != y.kind || x.index != y.index || x.atom != y.atom)
      return false;
    switch (x.kind) {
      case Kind::abs:
      case Kind::tabs:
      case Kind::tapp:
        if (x.ty != y.ty) return false;
        break;
      default: break;
    }
    if (x.a && x.a != y.a && !equal(*x.a, *y.a)) return false;
    if (x.b && x.b != y.b && !equal(*x.b, *y.b)) return false;
    return true;
  }

  static bool less(const Node& x, const Node& y) {
    if (x.kind != y.kind) return x.kind < y.kind;
    if (x.index != y.index) return x.index < y.index;
    if (x.atom != y.atom) return x.atom < y.atom;
    Ty tx = x.ty, ty_ = y.ty;
    if (tx < ty_) return true;
    if (ty_ < tx) return false;
    if (x.a && y.a) {
      if (less(*x.a, *y.a)) return true;
      if (less(*y.a, *x.a)) return false;
    }
    if (x.b && y.b) return less(*x.b, *y.b);
    return false;
  }

  std::shared_ptr<const Node> node_;
};

inline bool operator!=(const Term& x, const Term& y) { return !(x == y); }

// --- term-variable open/close (indices shift under abs only) ---

inline Term open_t(const Term& t, std::uint32_t k, const Term& u) {
  switch (t.kind()) {
    case Term::Kind::bvar: return t.index() == k ? u : t;
    case Term::Kind::fvar: return t;
    case Term::Kind::abs:
      return Term::abs(t.ann(), open_t(t.body(), k + 1, u));
    case Term::Kind::app:
      return Term::app(open_t(t.fn(), k, u), open_t(t.arg(), k, u));
    case Term::Kind::tabs:
      return Term::tabs(t.ann(), open_t(t.body(), k, u));
    default:
      return Term::tapp(open_t(t.fn(), k, u), t.ann());
  }
}

inline Term close_t(const Term& t, Atom a, std::uint32_t k) {
  switch (t.kind()) {
    case Term::Kind::bvar: return t;
    case Term::Kind::fvar: return t.atom() == a ? Term::bvar(k) : t;
    case Term::Kind::abs:
      return Term::abs(t.ann(), close_t(t.body(), a, k + 1));
    case Term::Kind::app:
      return Term::app(close_t(t.fn(), a, k), close_t(t.arg(), a, k));
    case Term::Kind::tabs:
      return Term::tabs(t.ann(), close_t(t.body(), a, k));
    default:
      return Term::tapp(close_t(t.fn(), a, k), t.ann());
  }
}

// --- type-variable open/close inside a term (indices shift under tabs) ---

inline Term open_ty_t(const Term& t, std::uint32_t k, const Ty& u) {
  switch (t.kind()) {
    case Term::Kind::bvar:
    case Term::Kind::fvar: return t;
    case Term::Kind::abs:
      return Term::abs(open_ty(t.ann(), k, u), open_ty_t(t.body(), k, u));
    case Term::Kind::app:
      return Term::app(open_ty_t(t.fn(), k, u), open_ty_t(t.arg(), k, u));
    case Term::Kind::tabs:
      return Term::tabs(open_ty(t.ann(), k, u),
                        open_ty_t(t.body(), k + 1, u));
    default:
      return Term::tapp(open_ty_t(t.fn(), k, u), open_ty(t.ann(), k, u));
  }
}

inline Term close_ty_t(const Term& t, Atom a, std::uint32_t k) {
  switch (t.kind()) {
    case Term::Kind::bvar:
    case Term::Kind::fvar: return t;
    case Term::Kind::abs:
      return Term::abs(close_ty(t.ann(), a, k), close_ty_t(t.body(), a, k));
    case Term::Kind::app:
      return Term::app(close_ty_t(t.fn(), a, k), close_ty_t(t.arg(), a, k));
    case Term::Kind::tabs:
      return Term::tabs(close_ty(t.ann(), a, k),
                        close_ty_t(t.body(), a, k + 1));
    default:
      return Term::tapp(close_ty_t(t.fn(), a, k), close_ty(t.ann(), a, k));
  }
}

// Free term variables.
inline void term_atoms_into(AtomSet& out, const Term& t) {
  switch (t.kind()) {
    case Term::Kind::fvar: out.insert(t.atom()); break;
    case Term::Kind::abs:
    case Term::Kind::tabs:
      term_atoms_into(out, t.body());
      break;
    case Term::Kind::app:
      term_atoms_into(out, t.fn());
      term_atoms_into(out, t.arg());
      break;
    case Term::Kind::tapp: term_atoms_into(out, t.fn()); break;
    default: break;
  }
}

inline AtomSet fv(const Term& t) {
  AtomSet out;
  term_atoms_into(out, t);
  return out;
}

inline void atoms_into(AtomSet& out, const Term& t) {
  term_atoms_into(out, t);
}

// Free type variables occurring in the term's type annotations.
inline AtomSet ftv_term(const Term& t) {
  AtomSet out;
  switch (t.kind()) {
    case Term::Kind::abs:
    case Term::Kind::tabs:
      atoms_into(out, t.ann());
      atoms_into(out, ftv_term(t.body()));
      break;
    case Term::Kind::app:
      atoms_into(out, ftv_term(t.fn()));
      atoms_into(out, ftv_term(t.arg()));
      break;
    case Term::Kind::tapp:
      atoms_into(out, ftv_term(t.fn()));
      atoms_into(out, t.ann());
      break;
    default: break;
  }
  return out;
}

inline bool locally_closed_at(const Term& t, std::uint32_t term_depth,
                              std::uint32_t type_depth) {
  switch (t.kind()) {
    case Term::Kind::bvar: return t.index() < term_depth;
    case Term::Kind::fvar: return true;
    case Term::Kind::abs:
      return locally_closed_at(t.ann(), type_depth) &&
             locally_closed_at(t.body(), term_depth + 1, type_depth);
    case Term::Kind::app:
      return locally_closed_at(t.fn(), term_depth, type_depth) &&
             locally_closed_at(t.arg(), term_depth, type_depth);
    case Term::Kind::tabs:
      return locally_closed_at(t.ann(), type_depth) &&
             locally_closed_at(t.body(), term_depth, type_depth + 1);
    default:
      return locally_closed_at(t.fn(), term_depth, type_depth) &&
             locally_closed_at(t.ann(), type_depth);
  }
}

inline bool locally_closed(const Term& t) {
  return locally_closed_at(t, 0, 0);
}

}  // namespace opsem::lam
