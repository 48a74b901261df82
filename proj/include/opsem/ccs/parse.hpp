#pragma once

#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>

#include "opsem/ccs/process.hpp"
#include "opsem/core/error.hpp"

namespace opsem::ccs {

// Grammar ('0', prefix, sum, parallel, restriction, constants):
//   sum  := par ('+' par)*
//   par  := res ('|' res)*
//   res  := 'new' chan 'in' res | pre
//   pre  := act '.' pre | atom
//   atom := '0' | CONST | '(' sum ')'
//   act  := 'tau' | chan | '\'' chan
// Channels are lowercase-led tokens, constants capitalized. 'new', 'in' and
// 'tau' are reserved; the channel 'i' is rejected because its .aut rendering
// would collide with the silent label.
class ProcessParser {
public:
  explicit ProcessParser(std::string_view src) : src_(src) {}

  Process parse() {
    Process p = parse_sum();
    skip_ws();
    if (!eof()) fail("unexpected trailing input");
    return p;
  }

private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, line_, col_);
  }

  bool eof() const { return pos_ >= src_.size(); }
  char peek() const { return src_[pos_]; }

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

  void expect(char c) {
    if (!try_consume(c)) fail(std::string("expected '") + c + "'");
  }

  static bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  std::string lex_ident() {
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

  // lookahead without consuming
  std::string peek_ident() {
    std::size_t p = pos_, l = line_, c = col_;
    skip_ws();
    std::string id;
    if (!eof() && std::isalpha(static_cast<unsigned char>(peek())))
      while (!eof() && ident_char(peek())) {
        id += peek();
        advance();
      }
    pos_ = p;
    line_ = l;
    col_ = c;
    return id;
  }

  std::string lex_channel() {
    std::string id = lex_ident();
    if (id == "new" || id == "in" || id == "tau")
      fail("reserved word '" + id + "' cannot be a channel");
    if (id == "i") fail("channel 'i' is reserved for the silent label");
    if (std::isupper(static_cast<unsigned char>(id[0])))
      fail("channel names start lowercase: " + id);
    return id;
  }

  Process parse_sum() {
    Process p = parse_par();
    while (try_consume('+')) p = Process::make_sum(p, parse_par());
    return p;
  }

  Process parse_par() {
    Process p = parse_res();
    while (try_consume('|')) p = Process::make_par(p, parse_res());
    return p;
  }

  Process parse_res() {
    if (peek_ident() == "new") {
      lex_ident();
      std::string ch = lex_channel();
      if (lex_ident() != "in") fail("expected 'in' after restriction channel");
      return Process::make_res(std::move(ch), parse_res());
    }
    return parse_prefix();
  }

  Process parse_prefix() {
    skip_ws();
    if (!eof() && peek() == '\'') {
      advance();
      std::string ch = lex_channel();
      expect('.');
      return Process::make_prefix(Act::coname(std::move(ch)), parse_prefix());
    }
    std::string id = peek_ident();
    if (id == "tau") {
      lex_ident();
      expect('.');
      return Process::make_prefix(Act::make_tau(), parse_prefix());
    }
    if (!id.empty() && std::islower(static_cast<unsigned char>(id[0]))) {
      std::string ch = lex_channel();
      expect('.');
      return Process::make_prefix(Act::name(std::move(ch)), parse_prefix());
    }
    return parse_atom();
  }

  Process parse_atom() {
    skip_ws();
    if (eof()) fail("unexpected end of input");
    if (peek() == '0') {
      advance();
      return Process::make_nil();
    }
    if (peek() == '(') {
      advance();
      Process p = parse_sum();
      expect(')');
      return p;
    }
    if (std::isupper(static_cast<unsigned char>(peek())))
      return Process::make_const(lex_ident());
    fail("expected a process");
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

inline Process parse_process(std::string_view src) {
  return ProcessParser(src).parse();
}

// Definition files: one `K = <process>` per line; blank lines and lines
// starting with '#' are skipped.
inline Defs parse_defs(std::istream& in) {
  Defs defs;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t i = 0;
    while (i < line.size() &&
           std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    if (i == line.size() || line[i] == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ParseError("expected 'K = <process>'", lineno, 1);
    std::string name = line.substr(i, eq - i);
    while (!name.empty() &&
           std::isspace(static_cast<unsigned char>(name.back())))
      name.pop_back();
    if (name.empty() || !std::isupper(static_cast<unsigned char>(name[0])))
      throw ParseError("constant names are capitalized: '" + name + "'",
                       lineno, 1);
    for (char c : name)
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
        throw ParseError("bad constant name: '" + name + "'", lineno, 1);
    if (defs.count(name))
      throw ParseError("duplicate definition of " + name, lineno, 1);
    try {
      defs.emplace(std::move(name), parse_process(line.substr(eq + 1)));
    } catch (const ParseError& e) {
      throw ParseError(std::string("in definition: ") + e.what(), lineno, 1);
    }
  }
  return defs;
}

inline Defs parse_defs_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open defs file: " + path);
  try {
    return parse_defs(in);
  } catch (const ParseError& e) {
    throw ParseError::in_file(path, e);
  }
}

}  // namespace opsem::ccs
