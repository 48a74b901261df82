#pragma once

#include <compare>
#include <map>
#include <memory>
#include <string>
#include <utility>

#include "opsem/core/error.hpp"

namespace opsem::ccs {

// CCS actions: channel names, their complements, and the silent action.
struct Act {
  enum class Kind { tau, name, coname };
  Kind kind = Kind::tau;
  std::string channel;  // empty for tau

  static Act make_tau() { return {Kind::tau, ""}; }
  static Act name(std::string ch) { return {Kind::name, std::move(ch)}; }
  static Act coname(std::string ch) { return {Kind::coname, std::move(ch)}; }

  bool is_tau() const { return kind == Kind::tau; }

  // complement; undefined for tau
  Act co() const {
    if (is_tau()) throw DomainError("tau has no complement");
    return {kind == Kind::name ? Kind::coname : Kind::name, channel};
  }

  // rendering used by the .aut export: tau is "i", conames are quoted 'a
  std::string label() const {
    switch (kind) {
      case Kind::tau: return "i";
      case Kind::name: return channel;
      default: return "'" + channel;
    }
  }

  std::string text() const { return is_tau() ? "tau" : label(); }

  friend auto operator<=>(const Act&, const Act&) = default;
};

// Immutable CCS process tree: nil, action prefix, binary sum, parallel
// composition, restriction, and named constants resolved through a Defs
// environment.
class Process {
public:
  enum class Kind { nil, prefix, sum, par, res, constant };

  Process() : Process(make_nil()) {}

  static Process make_nil() {
    static const auto node = std::make_shared<const Node>(Node{
        Kind::nil, Act::make_tau(), "", nullptr, nullptr});
    return Process(node);
  }
  static Process make_prefix(Act act, Process cont) {
    return Process(std::make_shared<const Node>(
        Node{Kind::prefix, std::move(act), "", cont.node_, nullptr}));
  }
  static Process make_sum(Process l, Process r) {
    return Process(std::make_shared<const Node>(
        Node{Kind::sum, Act::make_tau(), "", l.node_, r.node_}));
  }
  static Process make_par(Process l, Process r) {
    return Process(std::make_shared<const Node>(
        Node{Kind::par, Act::make_tau(), "", l.node_, r.node_}));
  }
  static Process make_res(std::string channel, Process body) {
    if (channel.empty()) throw DomainError("empty restriction channel");
    return Process(std::make_shared<const Node>(Node{
        Kind::res, Act::make_tau(), std::move(channel), body.node_, nullptr}));
  }
  static Process make_const(std::string name) {
    if (name.empty()) throw DomainError("empty constant name");
    return Process(std::make_shared<const Node>(Node{
        Kind::constant, Act::make_tau(), std::move(name), nullptr, nullptr}));
  }

  Kind kind() const { return node_->kind; }
  const Act& act() const { return node_->act; }             // prefix
  const std::string& text() const { return node_->text; }   // res / constant
  Process left() const { return Process(node_->a); }        // sum / par
  Process right() const { return Process(node_->b); }
  Process body() const { return Process(node_->a); }        // prefix / res

  friend bool operator==(const Process& x, const Process& y) {
    return x.node_ == y.node_ || equal(*x.node_, *y.node_);
  }

  // Canonical text form with minimal parentheses; parse(print(p)) == p.
  std::string print() const {
    std::string out;
    print_into(out, *node_, Level::sum);
    return out;
  }

private:
  struct Node {
    Kind kind;
    Act act;
    std::string text;
    std::shared_ptr<const Node> a, b;
  };

  explicit Process(std::shared_ptr<const Node> node)
      : node_(std::move(node)) {}

  static bool equal(const Node& x, const Node& y) {
    if (x.kind != y.kind || x.act != y.act || x.text != y.text) return false;
    if ((x.a == nullptr) != (y.a == nullptr)) return false;
    if ((x.b == nullptr) != (y.b == nullptr)) return false;
    if (x.a && x.a != y.a && !equal(*x.a, *y.a)) return false;
    if (x.b && x.b != y.b && !equal(*x.b, *y.b)) return false;
    return true;
  }

  // precedence, loosest first: sum < par < res < prefix
  enum class Level { sum = 0, par = 1, res = 2, prefix = 3 };

  static void print_into(std::string& out, const Node& n, Level need) {
    auto bracket = [&](Level have, auto&& body) {
      bool parens = static_cast<int>(have) < static_cast<int>(need);
      if (parens) out += '(';
      body();
      if (parens) out += ')';
    };
    switch (n.kind) {
      case Kind::nil: out += '0'; break;
      case Kind::constant: out += n.text; break;
      case Kind::prefix:
        bracket(Level::prefix, [&] {
          out += n.act.text();
          out += '.';
          print_into(out, *n.a, Level::prefix);
        });
        break;
      case Kind::res:
        bracket(Level::res, [&] {
          out += "new ";
          out += n.text;
          out += " in ";
          print_into(out, *n.a, Level::res);
        });
        break;
      case Kind::par:
        bracket(Level::par, [&] {
          print_into(out, *n.a, Level::par);
          out += " | ";
          print_into(out, *n.b, static_cast<Level>(static_cast<int>(Level::par) + 1));
        });
        break;
      case Kind::sum:
        bracket(Level::sum, [&] {
          print_into(out, *n.a, Level::sum);
          out += " + ";
          print_into(out, *n.b, Level::par);
        });
        break;
    }
  }

  std::shared_ptr<const Node> node_;
};

inline bool operator!=(const Process& x, const Process& y) {
  return !(x == y);
}

// Constant-definition environment.
using Defs = std::map<std::string, Process>;

}  // namespace opsem::ccs
