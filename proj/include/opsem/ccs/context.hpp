#pragma once

#include <memory>
#include <string>
#include <utility>

#include "opsem/ccs/process.hpp"

namespace opsem::ccs {

// Single-hole process context. Every constructor has exactly one context
// child, so one-hole-ness holds by shape.
class Context {
public:
  enum class Kind { hole, prefix_c, sum_l, sum_r, par_l, par_r, res_c };

  Context() : Context(make_hole()) {}

  static Context make_hole() {
    static const auto node = std::make_shared<const Node>(
        Node{Kind::hole, Act::make_tau(), "", nullptr, Process::make_nil()});
    return Context(node);
  }
  static Context make_prefix(Act act, Context inner) {
    return Context(std::make_shared<const Node>(Node{
        Kind::prefix_c, std::move(act), "", inner.node_, Process::make_nil()}));
  }
  static Context make_sum_l(Context inner, Process right) {
    return Context(std::make_shared<const Node>(Node{
        Kind::sum_l, Act::make_tau(), "", inner.node_, std::move(right)}));
  }
  static Context make_sum_r(Process left, Context inner) {
    return Context(std::make_shared<const Node>(Node{
        Kind::sum_r, Act::make_tau(), "", inner.node_, std::move(left)}));
  }
  static Context make_par_l(Context inner, Process right) {
    return Context(std::make_shared<const Node>(Node{
        Kind::par_l, Act::make_tau(), "", inner.node_, std::move(right)}));
  }
  static Context make_par_r(Process left, Context inner) {
    return Context(std::make_shared<const Node>(Node{
        Kind::par_r, Act::make_tau(), "", inner.node_, std::move(left)}));
  }
  static Context make_res(std::string channel, Context inner) {
    return Context(std::make_shared<const Node>(Node{
        Kind::res_c, Act::make_tau(), std::move(channel), inner.node_,
        Process::make_nil()}));
  }

  Kind kind() const { return node_->kind; }

  // c[p]: substitute p for the unique hole.
  Process fill(const Process& p) const { return fill_node(*node_, p); }

  // compose(c1, c2)[p] == c1[c2[p]]
  Context compose(const Context& inner) const {
    return Context(compose_node(*node_, inner));
  }

private:
  struct Node {
    Kind kind;
    Act act;             // prefix_c
    std::string text;    // res_c
    std::shared_ptr<const Node> inner;
    Process side;        // sum_l/sum_r/par_l/par_r
  };

  explicit Context(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  static Process fill_node(const Node& n, const Process& p) {
    switch (n.kind) {
      case Kind::hole: return p;
      case Kind::prefix_c:
        return Process::make_prefix(n.act, fill_node(*n.inner, p));
      case Kind::sum_l:
        return Process::make_sum(fill_node(*n.inner, p), n.side);
      case Kind::sum_r:
        return Process::make_sum(n.side, fill_node(*n.inner, p));
      case Kind::par_l:
        return Process::make_par(fill_node(*n.inner, p), n.side);
      case Kind::par_r:
        return Process::make_par(n.side, fill_node(*n.inner, p));
      default:
        return Process::make_res(n.text, fill_node(*n.inner, p));
    }
  }

  static std::shared_ptr<const Node> compose_node(const Node& n,
                                                  const Context& inner) {
    if (n.kind == Kind::hole) return inner.node_;
    Node copy = n;
    copy.inner = compose_node(*n.inner, inner);
    return std::make_shared<const Node>(std::move(copy));
  }

  std::shared_ptr<const Node> node_;
};

inline Process fill(const Context& c, const Process& p) { return c.fill(p); }

// Leftmost-innermost decomposition: walk to the first nil or constant leaf
// and cut the context along the path. fill(ctx, terminal) == p always.
struct Decomposition {
  Context context;
  Process terminal;  // nil or const
};

inline Decomposition decompose(const Process& p) {
  switch (p.kind()) {
    case Process::Kind::nil:
    case Process::Kind::constant:
      return {Context::make_hole(), p};
    case Process::Kind::prefix: {
      auto d = decompose(p.body());
      return {Context::make_prefix(p.act(), d.context), d.terminal};
    }
    case Process::Kind::sum: {
      auto d = decompose(p.left());
      return {Context::make_sum_l(d.context, p.right()), d.terminal};
    }
    case Process::Kind::par: {
      auto d = decompose(p.left());
      return {Context::make_par_l(d.context, p.right()), d.terminal};
    }
    default: {  // res
      auto d = decompose(p.body());
      return {Context::make_res(p.text(), d.context), d.terminal};
    }
  }
}

}  // namespace opsem::ccs
