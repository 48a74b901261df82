#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "opsem/ccs/context.hpp"
#include "opsem/ccs/semantics.hpp"
#include "opsem/core/verdict.hpp"
#include "opsem/eq/bisim.hpp"
#include "opsem/eq/weak.hpp"

namespace opsem::ccs {

// Strong bisimilarity of two processes over their joint reachable LTS.
// Exact whenever exploration completes; `undecided` when the state bound is
// hit first.
inline Verdict bisimilar_ccs(const Defs& defs, const Process& p,
                             const Process& q, std::size_t max_states) {
  if (max_states < 2) throw DomainError("max_states must be at least 2");
  try {
    Explored e = explore_lts(defs, {p, q}, max_states);
    Partition part = bisimilarity_partition(e.lts);
    return verdict_of(part.same_block(e.roots[0], e.roots[1]));
  } catch (const BoundError&) {
    return Verdict::undecided;
  }
}

// Weak variant; the silent label is ensured in the alphabet so saturation
// is defined even when no silent step was encountered.
inline Verdict weak_bisimilar_ccs(const Defs& defs, const Process& p,
                                  const Process& q, std::size_t max_states) {
  if (max_states < 2) throw DomainError("max_states must be at least 2");
  try {
    Explored e = explore_lts(defs, {p, q}, max_states);
    Lts widened = e.lts.with_label("i");
    return verdict_of(
        weak_bisimilar(widened, TauSpec{"i"}, e.roots[0], e.roots[1]));
  } catch (const BoundError&) {
    return Verdict::undecided;
  }
}

struct CongruenceReport {
  std::size_t checked = 0;
  std::vector<std::size_t> failures;   // context indices with a non-bisimilar fill
  std::vector<std::size_t> undecided;  // context indices that hit the bound

  bool sound() const { return failures.empty(); }
};

// Congruence sampling: p and q must be bisimilar; every context fill is then
// re-checked. A sound congruence yields no failures for any context.
inline CongruenceReport congruence_sample(const Defs& defs, const Process& p,
                                          const Process& q,
                                          const std::vector<Context>& contexts,
                                          std::size_t max_states) {
  Verdict base = bisimilar_ccs(defs, p, q, max_states);
  if (base == Verdict::no)
    throw PreconditionError("processes are not bisimilar: " + p.print() +
                            " vs " + q.print());
  if (base == Verdict::undecided)
    throw PreconditionError("bisimilarity of " + p.print() + " and " +
                            q.print() + " undecided within the state bound");
  CongruenceReport report;
  for (std::size_t i = 0; i < contexts.size(); ++i) {
    ++report.checked;
    switch (bisimilar_ccs(defs, contexts[i].fill(p), contexts[i].fill(q),
                          max_states)) {
      case Verdict::yes: break;
      case Verdict::no: report.failures.push_back(i); break;
      case Verdict::undecided: report.undecided.push_back(i); break;
    }
  }
  return report;
}

}  // namespace opsem::ccs
