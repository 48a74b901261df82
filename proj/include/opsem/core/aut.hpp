#pragma once

#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "opsem/core/error.hpp"
#include "opsem/core/lts.hpp"

namespace opsem {

// Aldebaran `.aut` exchange format:
//   des (I, T, N)            I initial state, T transition count, N states
//   accepting: 1 3 5         optional extension header
//   initial: 0 2             optional extension header
//   (src,"label",dst)        one line per transition
// The label "i" is conventionally the silent action.
struct AutData {
  Lts lts;
  StateId initial = 0;  // from the des header
  std::vector<StateId> accepting;
  std::vector<StateId> initial_ext;
  bool has_accepting = false;
  bool has_initial_ext = false;
};

namespace detail {

inline void skip_ws(const std::string& s, std::size_t& i) {
  while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
}

inline unsigned long parse_num(const std::string& s, std::size_t& i,
                               std::size_t lineno) {
  skip_ws(s, i);
  if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
    throw ParseError("expected a number", lineno, i + 1);
  unsigned long v = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
    v = v * 10 + static_cast<unsigned long>(s[i] - '0');
    ++i;
  }
  return v;
}

inline void expect_char(const std::string& s, std::size_t& i, char c,
                        std::size_t lineno) {
  skip_ws(s, i);
  if (i >= s.size() || s[i] != c)
    throw ParseError(std::string("expected '") + c + "'", lineno, i + 1);
  ++i;
}

inline std::vector<StateId> parse_id_list(const std::string& s, std::size_t i,
                                          std::size_t lineno) {
  std::vector<StateId> ids;
  for (;;) {
    skip_ws(s, i);
    if (i >= s.size()) break;
    ids.push_back(static_cast<StateId>(parse_num(s, i, lineno)));
  }
  sort_unique(ids);
  return ids;
}

}  // namespace detail

inline AutData read_aut(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;

  auto next_line = [&](std::string& out) {
    while (std::getline(in, line)) {
      ++lineno;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      std::size_t i = 0;
      detail::skip_ws(line, i);
      if (i == line.size()) continue;  // blank
      out = line;
      return true;
    }
    return false;
  };

  if (!next_line(line)) throw ParseError("missing des header", 1, 1);
  std::size_t i = 0;
  detail::skip_ws(line, i);
  if (line.compare(i, 3, "des") != 0)
    throw ParseError("expected des header", lineno, i + 1);
  i += 3;
  detail::expect_char(line, i, '(', lineno);
  unsigned long init = detail::parse_num(line, i, lineno);
  detail::expect_char(line, i, ',', lineno);
  unsigned long n_trans = detail::parse_num(line, i, lineno);
  detail::expect_char(line, i, ',', lineno);
  unsigned long n_states = detail::parse_num(line, i, lineno);
  detail::expect_char(line, i, ')', lineno);

  AutData data;
  std::vector<std::tuple<StateId, std::string, StateId>> transitions;
  auto check_id = [&](unsigned long id) {
    if (id >= n_states)
      throw ParseError("state id " + std::to_string(id) +
                           " out of range (states: " +
                           std::to_string(n_states) + ")",
                       lineno, 1);
    return static_cast<StateId>(id);
  };
  if (n_states == 0) throw ParseError("des header declares 0 states", 1, 1);
  data.initial = check_id(init);

  while (next_line(line)) {
    i = 0;
    detail::skip_ws(line, i);
    if (line.compare(i, 4, "des ") == 0 || line.compare(i, 4, "des(") == 0)
      throw ParseError("duplicate des header", lineno, i + 1);
    if (line.compare(i, 10, "accepting:") == 0) {
      if (data.has_accepting)
        throw ParseError("duplicate accepting header", lineno, i + 1);
      data.has_accepting = true;
      data.accepting = detail::parse_id_list(line, i + 10, lineno);
      for (StateId s : data.accepting) check_id(s);
      continue;
    }
    if (line.compare(i, 8, "initial:") == 0) {
      if (data.has_initial_ext)
        throw ParseError("duplicate initial header", lineno, i + 1);
      data.has_initial_ext = true;
      data.initial_ext = detail::parse_id_list(line, i + 8, lineno);
      for (StateId s : data.initial_ext) check_id(s);
      continue;
    }
    detail::expect_char(line, i, '(', lineno);
    StateId src = check_id(detail::parse_num(line, i, lineno));
    detail::expect_char(line, i, ',', lineno);
    detail::expect_char(line, i, '"', lineno);
    std::size_t start = i;
    while (i < line.size() && line[i] != '"') ++i;
    if (i >= line.size()) throw ParseError("unterminated label", lineno, i);
    std::string label = line.substr(start, i - start);
    ++i;
    detail::expect_char(line, i, ',', lineno);
    StateId dst = check_id(detail::parse_num(line, i, lineno));
    detail::expect_char(line, i, ')', lineno);
    transitions.emplace_back(src, std::move(label), dst);
  }

  if (transitions.size() != n_trans)
    throw ParseError("transition count mismatch: header says " +
                         std::to_string(n_trans) + ", found " +
                         std::to_string(transitions.size()),
                     lineno, 1);

  std::vector<std::string> alphabet;
  for (const auto& t : transitions) alphabet.push_back(std::get<1>(t));
  data.lts = Lts(static_cast<StateId>(n_states), std::move(alphabet),
                 transitions);
  return data;
}

inline AutData read_aut_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open file: " + path);
  try {
    return read_aut(in);
  } catch (const ParseError& e) {
    throw ParseError::in_file(path, e);
  }
}

inline void write_aut(std::ostream& out, const Lts& lts, StateId initial) {
  if (lts.n_states() == 0) throw DomainError("cannot export an empty LTS");
  lts.check_state(initial);
  out << "des (" << initial << ", " << lts.transitions().size() << ", "
      << lts.n_states() << ")\n";
  for (const auto& t : lts.transitions())
    out << "(" << t.src << ",\"" << lts.label(t.label) << "\"," << t.dst
        << ")\n";
}

inline void write_aut_file(const std::string& path, const Lts& lts,
                           StateId initial) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open file for writing: " + path);
  write_aut(out, lts, initial);
}

}  // namespace opsem
