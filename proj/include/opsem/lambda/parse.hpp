#pragma once

#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "opsem/core/error.hpp"
#include "opsem/lambda/term.hpp"

namespace opsem::lam {

// Surface syntax:
//   terms   \x:T. e    e1 e2    /\X<:T. e    e [T]    x    (e)
//   types   Top    T1 -> T2    All X<:T1. T2    B    (T)
// Omitted bounds default to Top. In simply typed mode unbound type
// identifiers are base types; in the bounded-polymorphism mode they are
// free type variables. Free names are interned to atoms; the table is part
// of the parse result.
enum class SyntaxMode { stlc, fsub };

class NameInterner {
public:
  Atom intern(const std::string& name) {
    auto it = by_name_.find(name);
    if (it != by_name_.end()) return it->second;
    Atom a{names_.size()};
    by_name_.emplace(name, a);
    names_.push_back(name);
    return a;
  }

  std::optional<std::string> name_of(Atom a) const {
    if (a.id < names_.size()) return names_[a.id];
    return std::nullopt;
  }

  bool has_name(const std::string& name) const { return by_name_.count(name); }

private:
  std::vector<std::string> names_;
  std::map<std::string, Atom> by_name_;
};

struct ParsedTerm {
  Term term;
  NameInterner names;
};

class TermParser {
public:
  TermParser(std::string_view src, SyntaxMode mode)
      : src_(src), mode_(mode) {}

  ParsedTerm parse() {
    Term t = parse_term();
    skip_ws();
    if (!eof()) fail("unexpected trailing input");
    return {std::move(t), std::move(names_)};
  }

private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, line_, col_);
  }

  bool eof() const { return pos_ >= src_.size(); }
  char peek() const { return src_[pos_]; }
  char peek2() const { return pos_ + 1 < src_.size() ? src_[pos_ + 1] : '\0'; }

  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_ws() {
    while (!eof() && std::isspace(static_cast<unsigned char>(peek())))
      advance();
  }

  bool try_consume(char c) {
    skip_ws();
    if (eof() || peek() != c) return false;
    advance();
    return true;
  }

  bool try_consume2(char a, char b) {
    skip_ws();
    if (eof() || peek() != a || peek2() != b) return false;
    advance();
    advance();
    return true;
  }

  void expect(char c) {
    if (!try_consume(c)) fail(std::string("expected '") + c + "'");
  }

  static bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
           c == '\'';
  }

  std::string peek_ident() {
    std::size_t save = pos_;
    skip_ws();
    std::string id;
    if (!eof() && std::isalpha(static_cast<unsigned char>(peek())))
      while (!eof() && ident_char(peek())) {
        id += src_[pos_];
        ++pos_;
      }
    pos_ = save;
    return id;
  }

  std::string lex_any_ident() {
    skip_ws();
    if (eof() || !std::isalpha(static_cast<unsigned char>(peek())))
      fail("expected an identifier");
    std::string id;
    while (!eof() && ident_char(peek())) {
      id += peek();
      advance();
    }
    return id;
  }

  std::string lex_ident() {
    std::string id = lex_any_ident();
    if (id == "All" || id == "Top") fail("'" + id + "' is reserved");
    return id;
  }

  // --- types ---

  Ty parse_type() {
    if (peek_ident() == "All") {
      lex_any_ident();
      std::string var = lex_ident();
      Ty bound = try_consume2('<', ':') ? parse_arrow_type() : Ty::top();
      expect('.');
      type_scope_.push_back(var);
      Ty body = parse_type();
      type_scope_.pop_back();
      return Ty::all(std::move(bound), body);
    }
    return parse_arrow_type();
  }

  Ty parse_arrow_type() {
    Ty lhs = parse_atom_type();
    if (try_consume2('-', '>')) return Ty::arrow(lhs, parse_arrow_type());
    return lhs;
  }

  Ty parse_atom_type() {
    skip_ws();
    if (try_consume('(')) {
      Ty t = parse_type();
      expect(')');
      return t;
    }
    std::string id = peek_ident();
    if (id == "Top") {
      lex_any_ident();
      return Ty::top();
    }
    if (id.empty()) fail("expected a type");
    lex_ident();
    for (std::size_t i = type_scope_.size(); i-- > 0;)
      if (type_scope_[i] == id)
        return Ty::bvar(static_cast<std::uint32_t>(type_scope_.size() - 1 - i));
    if (mode_ == SyntaxMode::stlc) return Ty::base(id);
    return Ty::fvar(names_.intern(id));
  }

  // --- terms ---

  Term parse_term() {
    skip_ws();
    if (!eof() && peek() == '\\') {
      advance();
      std::string var = lex_ident();
      expect(':');
      Ty ann = parse_type();
      expect('.');
      term_scope_.push_back(var);
      Term body = parse_term();
      term_scope_.pop_back();
      return Term::abs(std::move(ann), body);
    }
    if (!eof() && peek() == '/' && peek2() == '\\') {
      advance();
      advance();
      std::string var = lex_ident();
      Ty bound = try_consume2('<', ':') ? parse_arrow_type() : Ty::top();
      expect('.');
      type_scope_.push_back(var);
      Term body = parse_term();
      type_scope_.pop_back();
      return Term::tabs(std::move(bound), body);
    }
    return parse_app();
  }

  Term parse_app() {
    Term t = parse_atom_term();
    for (;;) {
      skip_ws();
      if (!eof() && peek() == '[') {
        advance();
        Ty arg = parse_type();
        expect(']');
        t = Term::tapp(t, std::move(arg));
        continue;
      }
      if (!eof() && (peek() == '(' ||
                     std::isalpha(static_cast<unsigned char>(peek())))) {
        t = Term::app(t, parse_atom_term());
        continue;
      }
      return t;
    }
  }

  Term parse_atom_term() {
    skip_ws();
    if (try_consume('(')) {
      Term t = parse_term();
      expect(')');
      return t;
    }
    std::string id = lex_ident();
    for (std::size_t i = term_scope_.size(); i-- > 0;)
      if (term_scope_[i] == id)
        return Term::bvar(
            static_cast<std::uint32_t>(term_scope_.size() - 1 - i));
    return Term::fvar(names_.intern(id));
  }

  std::string_view src_;
  SyntaxMode mode_;
  NameInterner names_;
  std::vector<std::string> term_scope_;
  std::vector<std::string> type_scope_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

inline ParsedTerm parse_term(std::string_view src, SyntaxMode mode) {
  return TermParser(src, mode).parse();
}

// --- printing (round-trips modulo whitespace) ---

namespace detail {

inline std::string atom_name(const NameInterner& names, Atom a) {
  if (auto n = names.name_of(a)) return *n;
  return "a" + std::to_string(a.id);
}

inline std::string pick_name(const NameInterner& names,
                             const std::vector<std::string>& in_scope,
                             const AtomSet& free_atoms, bool type_level) {
  auto taken = [&](const std::string& cand) {
    for (const auto& n : in_scope)
      if (n == cand) return true;
    for (Atom a : free_atoms)
      if (atom_name(names, a) == cand) return true;
    return cand == "All" || cand == "Top";
  };
  const char* firsts = type_level ? "XYZ" : "xyz";
  for (int i = 0; i < 3; ++i) {
    std::string cand(1, firsts[i]);
    if (!taken(cand)) return cand;
  }
  for (std::size_t n = 1;; ++n)
    for (int i = 0; i < 3; ++i) {
      std::string cand = std::string(1, firsts[i]) + std::to_string(n);
      if (!taken(cand)) return cand;
    }
}

// type precedence: all < arrow < atom
inline void print_ty_rec(std::string& out, const Ty& t,
                         const NameInterner& names,
                         std::vector<std::string>& ty_scope,
                         const AtomSet& free_atoms, int need) {
  auto bracket = [&](int have, auto&& body) {
    bool parens = have < need;
    if (parens) out += '(';
    body();
    if (parens) out += ')';
  };
  switch (t.kind()) {
    case Ty::Kind::top: out += "Top"; break;
    case Ty::Kind::base: out += t.name(); break;
    case Ty::Kind::tvar_f: out += atom_name(names, t.atom()); break;
    case Ty::Kind::tvar_b: {
      std::size_t i = ty_scope.size() - 1 - t.index();
      out += ty_scope.at(i);
      break;
    }
    case Ty::Kind::arrow:
      bracket(1, [&] {
        print_ty_rec(out, t.dom(), names, ty_scope, free_atoms, 2);
        out += " -> ";
        print_ty_rec(out, t.cod(), names, ty_scope, free_atoms, 1);
      });
      break;
    case Ty::Kind::all:
      bracket(0, [&] {
        std::string var = pick_name(names, ty_scope, free_atoms, true);
        out += "All " + var + "<:";
        print_ty_rec(out, t.bound(), names, ty_scope, free_atoms, 1);
        out += ". ";
        ty_scope.push_back(var);
        print_ty_rec(out, t.body(), names, ty_scope, free_atoms, 0);
        ty_scope.pop_back();
      });
      break;
  }
}

// term precedence: lambda < app < atom
inline void print_term_rec(std::string& out, const Term& t,
                           const NameInterner& names,
                           std::vector<std::string>& term_scope,
                           std::vector<std::string>& ty_scope,
                           const AtomSet& free_atoms, int need) {
  auto bracket = [&](int have, auto&& body) {
    bool parens = have < need;
    if (parens) out += '(';
    body();
    if (parens) out += ')';
  };
  switch (t.kind()) {
    case Term::Kind::fvar: out += atom_name(names, t.atom()); break;
    case Term::Kind::bvar: {
      std::size_t i = term_scope.size() - 1 - t.index();
      out += term_scope.at(i);
      break;
    }
    case Term::Kind::abs:
      bracket(0, [&] {
        std::string var = pick_name(names, term_scope, free_atoms, false);
        out += "\\" + var + ":";
        print_ty_rec(out, t.ann(), names, ty_scope, free_atoms, 0);
        out += ". ";
        term_scope.push_back(var);
        print_term_rec(out, t.body(), names, term_scope, ty_scope, free_atoms,
                       0);
        term_scope.pop_back();
      });
      break;
    case Term::Kind::tabs:
      bracket(0, [&] {
        std::string var = pick_name(names, ty_scope, free_atoms, true);
        out += "/\\" + var + "<:";
        print_ty_rec(out, t.ann(), names, ty_scope, free_atoms, 1);
        out += ". ";
        ty_scope.push_back(var);
        print_term_rec(out, t.body(), names, term_scope, ty_scope, free_atoms,
                       0);
        ty_scope.pop_back();
      });
      break;
    case Term::Kind::app:
      bracket(1, [&] {
        print_term_rec(out, t.fn(), names, term_scope, ty_scope, free_atoms,
                       1);
        out += ' ';
        print_term_rec(out, t.arg(), names, term_scope, ty_scope, free_atoms,
                       2);
      });
      break;
    case Term::Kind::tapp:
      bracket(1, [&] {
        print_term_rec(out, t.fn(), names, term_scope, ty_scope, free_atoms,
                       1);
        out += " [";
        print_ty_rec(out, t.ann(), names, ty_scope, free_atoms, 0);
        out += ']';
      });
      break;
  }
}

}  // namespace detail

inline std::string print_ty(const Ty& t, const NameInterner& names) {
  std::string out;
  std::vector<std::string> ty_scope;
  detail::print_ty_rec(out, t, names, ty_scope, ftv(t), 0);
  return out;
}

inline std::string print_term(const Term& t, const NameInterner& names) {
  std::string out;
  std::vector<std::string> term_scope, ty_scope;
  AtomSet free_atoms = free_union(fv(t), ftv_term(t));
  detail::print_term_rec(out, t, names, term_scope, ty_scope, free_atoms, 0);
  return out;
}

}  // namespace opsem::lam
