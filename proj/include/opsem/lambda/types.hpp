#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>

#include "opsem/core/error.hpp"
#include "opsem/lambda/atom.hpp"

namespace opsem::lam {

// Types for both calculi in one family. The simply typed layer uses base
// and arrow; the bounded-polymorphism layer uses top, type variables
// (locally nameless: bound = de Bruijn index, free = atom) and universal
// types. Immutable shared tree with structural equality.
class Ty {
public:
  enum class Kind { base, top, tvar_b, tvar_f, arrow, all };

  Ty() : Ty(top()) {}

  static Ty base(std::string name) {
    return Ty(std::make_shared<const Node>(
        Node{Kind::base, std::move(name), 0, {}, nullptr, nullptr}));
  }
  static Ty top() {
    static const auto node = std::make_shared<const Node>(
        Node{Kind::top, "", 0, {}, nullptr, nullptr});
    return Ty(node);
  }
  static Ty bvar(std::uint32_t index) {
    return Ty(std::make_shared<const Node>(
        Node{Kind::tvar_b, "", index, {}, nullptr, nullptr}));
  }
  static Ty fvar(Atom a) {
    return Ty(std::make_shared<const Node>(
        Node{Kind::tvar_f, "", 0, a, nullptr, nullptr}));
  }
  static Ty arrow(Ty dom, Ty cod) {
    return Ty(std::make_shared<const Node>(
        Node{Kind::arrow, "", 0, {}, dom.node_, cod.node_}));
  }
  static Ty all(Ty bound, Ty body) {
    return Ty(std::make_shared<const Node>(
        Node{Kind::all, "", 0, {}, bound.node_, body.node_}));
  }

  Kind kind() const { return node_->kind; }
  const std::string& name() const { return node_->name; }  // base
  std::uint32_t index() const { return node_->index; }     // tvar_b
  Atom atom() const { return node_->atom; }                // tvar_f
  Ty dom() const { return Ty(node_->a); }                  // arrow
  Ty cod() const { return Ty(node_->b); }
  Ty bound() const { return Ty(node_->a); }                // all
  Ty body() const { return Ty(node_->b); }

  friend bool operator==(const Ty& x, const Ty& y) {
    return x.node_ == y.node_ || equal(*x.node_, *y.node_);
  }
  friend bool operator<(const Ty& x, const Ty& y) {
    return less(*x.node_, *y.node_);
  }

private:
  struct Node {
    Kind kind;
    std::string name;
    std::uint32_t index;
    Atom atom;
    std::shared_ptr<const Node> a, b;
  };

  explicit Ty(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  static bool equal(const Node& x, const Node& y) {
    if (x.kind != y.kind || x.name != y.name || x.index != y.index ||
        x.atom != y.atom)
      return false;
    if (x.a && x.a != y.a && !equal(*x.a, *y.a)) return false;
    if (x.b && x.b != y.b && !equal(*x.b, *y.b)) return false;
    return true;
  }

  static bool less(const Node& x, const Node& y) {
    if (x.kind != y.kind) return x.kind < y.kind;
    if (x.name != y.name) return x.name < y.name;
    if (x.index != y.index) return x.index < y.index;
    if (x.atom != y.atom) return x.atom < y.atom;
    if (x.a && y.a && less(*x.a, *y.a)) return true;
    if (x.a && y.a && less(*y.a, *x.a)) return false;
    if (x.b && y.b) return less(*x.b, *y.b);
    return false;
  }

  std::shared_ptr<const Node> node_;

  friend struct TyOps;
};

inline bool operator!=(const Ty& x, const Ty& y) { return !(x == y); }

// Replace bound type variable k with u (k shifts under `all`).
inline Ty open_ty(const Ty& t, std::uint32_t k, const Ty& u) {
  switch (t.kind()) {
    case Ty::Kind::tvar_b: return t.index() == k ? u : t;
    case Ty::Kind::arrow:
      return Ty::arrow(open_ty(t.dom(), k, u), open_ty(t.cod(), k, u));
    case Ty::Kind::all:
      return Ty::all(open_ty(t.bound(), k, u),
                     open_ty(t.body(), k + 1, u));
    default: return t;
  }
}

// Abstract atom a as bound variable k.
inline Ty close_ty(const Ty& t, Atom a, std::uint32_t k) {
  switch (t.kind()) {
    case Ty::Kind::tvar_f: return t.atom() == a ? Ty::bvar(k) : t;
    case Ty::Kind::arrow:
      return Ty::arrow(close_ty(t.dom(), a, k), close_ty(t.cod(), a, k));
    case Ty::Kind::all:
      return Ty::all(close_ty(t.bound(), a, k),
                     close_ty(t.body(), a, k + 1));
    default: return t;
  }
}

inline void atoms_into(AtomSet& out, const Ty& t) {
  switch (t.kind()) {
    case Ty::Kind::tvar_f: out.insert(t.atom()); break;
    case Ty::Kind::arrow:
      atoms_into(out, t.dom());
      atoms_into(out, t.cod());
      break;
    case Ty::Kind::all:
      atoms_into(out, t.bound());
      atoms_into(out, t.body());
      break;
    default: break;
  }
}

// Free type variables.
inline AtomSet ftv(const Ty& t) {
  AtomSet out;
  atoms_into(out, t);
  return out;
}

inline bool locally_closed_at(const Ty& t, std::uint32_t depth) {
  switch (t.kind()) {
    case Ty::Kind::tvar_b: return t.index() < depth;
    case Ty::Kind::arrow:
      return locally_closed_at(t.dom(), depth) &&
             locally_closed_at(t.cod(), depth);
    case Ty::Kind::all:
      return locally_closed_at(t.bound(), depth) &&
             locally_closed_at(t.body(), depth + 1);
    default: return true;
  }
}

inline bool locally_closed(const Ty& t) { return locally_closed_at(t, 0); }

}  // namespace opsem::lam
