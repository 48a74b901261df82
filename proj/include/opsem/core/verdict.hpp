#pragma once

#include <string_view>

namespace opsem {

// Three-valued answer for semidecidable questions. `undecided` means a
// resource bound was reached before the search stabilized; it is never
// conflated with `no`.
enum class Verdict { no, yes, undecided };

inline Verdict verdict_of(bool b) { return b ? Verdict::yes : Verdict::no; }

inline std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::yes: return "true";
    case Verdict::no: return "false";
    default: return "undecided";
  }
}

}  // namespace opsem
