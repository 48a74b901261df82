#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <sstream>

#include "opsem/ccs/context.hpp"
#include "opsem/ccs/equiv.hpp"
#include "opsem/ccs/parse.hpp"
#include "opsem/ccs/semantics.hpp"
#include "support/generators.hpp"

using namespace opsem;
using namespace opsem::ccs;
using testgen::Rng;

namespace {

// Second, independently written transcription of the SOS rules, used to
// cross-check `transitions`. Depth-guarded instead of cycle-guarded.
std::vector<std::pair<Act, Process>> sos_oracle(const Defs& defs,
                                                const Process& p, int fuel) {
  std::vector<std::pair<Act, Process>> out;
  REQUIRE(fuel > 0);
  switch (p.kind()) {
    case Process::Kind::nil: break;
    case Process::Kind::prefix:
      out.emplace_back(p.act(), p.body());
      break;
    case Process::Kind::sum: {
      auto l = sos_oracle(defs, p.left(), fuel);
      auto r = sos_oracle(defs, p.right(), fuel);
      out.insert(out.end(), l.begin(), l.end());
      out.insert(out.end(), r.begin(), r.end());
      break;
    }
    case Process::Kind::par: {
      auto l = sos_oracle(defs, p.left(), fuel);
      auto r = sos_oracle(defs, p.right(), fuel);
      for (const auto& [a, l2] : l)
        out.emplace_back(a, Process::make_par(l2, p.right()));
      for (const auto& [a, r2] : r)
        out.emplace_back(a, Process::make_par(p.left(), r2));
      for (const auto& [a, l2] : l)
        for (const auto& [b, r2] : r)
          if (!a.is_tau() && !b.is_tau() && a.channel == b.channel &&
              a.kind != b.kind)
            out.emplace_back(Act::make_tau(), Process::make_par(l2, r2));
      break;
    }
    case Process::Kind::res:
      for (const auto& [a, b2] : sos_oracle(defs, p.body(), fuel))
        if (a.is_tau() || a.channel != p.text())
          out.emplace_back(a, Process::make_res(p.text(), b2));
      break;
    case Process::Kind::constant:
      out = sos_oracle(defs, defs.at(p.text()), fuel - 1);
      break;
  }
  return out;
}

std::set<std::pair<std::string, std::string>> as_set(
    const std::vector<std::pair<Act, Process>>& ds) {
  std::set<std::pair<std::string, std::string>> out;
  for (const auto& [a, q] : ds) out.emplace(a.text(), q.print());
  return out;
}

}  // namespace

TEST_CASE("actions complement involutively") {
  Act a = Act::name("ch");
  CHECK(a.co() == Act::coname("ch"));
  CHECK(a.co().co() == a);
  CHECK_THROWS_AS(Act::make_tau().co(), DomainError);
  CHECK(Act::make_tau().label() == "i");
  CHECK(Act::coname("ch").label() == "'ch");
}

TEST_CASE("process parsing") {
  CHECK(parse_process("0") == Process::make_nil());

  Process p = parse_process("a.0 + 'a.0");
  REQUIRE(p.kind() == Process::Kind::sum);
  CHECK(p.left() == Process::make_prefix(Act::name("a"), Process::make_nil()));
  CHECK(p.right() ==
        Process::make_prefix(Act::coname("a"), Process::make_nil()));

  Process q = parse_process("new a in (a.0 | 'a.0)");
  REQUIRE(q.kind() == Process::Kind::res);
  CHECK(q.text() == "a");
  CHECK(q.body().kind() == Process::Kind::par);

  // precedence: prefix > restriction > parallel > sum
  Process r = parse_process("a.0 | b.0 + c.0");
  CHECK(r.kind() == Process::Kind::sum);
  Process s = parse_process("new a in a.0 | b.0");
  CHECK(s.kind() == Process::Kind::par);
  CHECK(s.left().kind() == Process::Kind::res);

  CHECK_THROWS_AS(parse_process("a."), ParseError);
  CHECK_THROWS_AS(parse_process("0 +"), ParseError);
  CHECK_THROWS_AS(parse_process("new in in 0"), ParseError);
  CHECK_THROWS_AS(parse_process("tau"), ParseError);
  CHECK_THROWS_AS(parse_process("i.0"), ParseError);  // reserved channel
  CHECK_THROWS_AS(parse_process("a.0)"), ParseError);
}

TEST_CASE("parse inverts print") {
  Rng rng(401);
  for (int i = 0; i < 300; ++i) {
    Process p = testgen::random_process(rng, 4);
    CHECK(parse_process(p.print()) == p);
  }
}

TEST_CASE("transitions on hand-built processes") {
  CHECK(transitions({}, Process::make_nil()).empty());

  auto ds = transitions({}, parse_process("a.0 | 'a.0"));
  CHECK(as_set(ds) ==
        std::set<std::pair<std::string, std::string>>{
            {"tau", "0 | 0"}, {"a", "0 | 'a.0"}, {"'a", "a.0 | 0"}});

  Defs defs;
  defs.emplace("K", parse_process("a.K"));
  auto dk = transitions(defs, Process::make_const("K"));
  REQUIRE(dk.size() == 1);
  CHECK(dk[0].first == Act::name("a"));
  CHECK(dk[0].second == Process::make_const("K"));

  CHECK_THROWS_WITH(transitions({}, Process::make_const("Missing")),
                    Catch::Matchers::ContainsSubstring("Missing"));
}

TEST_CASE("transitions agree with an independent rule transcription") {
  Rng rng(402);
  Defs defs;
  defs.emplace("K", parse_process("a.K"));
  defs.emplace("L", parse_process("b.K + tau.0"));
  for (int i = 0; i < 200; ++i) {
    Process p = testgen::random_process(rng, 4);
    CHECK(as_set(transitions(defs, p)) == as_set(sos_oracle(defs, p, 8)));
  }
}

TEST_CASE("restriction blocks its channel") {
  Rng rng(403);
  for (int i = 0; i < 100; ++i) {
    Process p = testgen::random_process(rng, 3);
    Process r = Process::make_res("a", p);
    for (const auto& [act, q] : transitions({}, r)) {
      (void)q;
      CHECK((act.is_tau() || act.channel != "a"));
    }
  }
}

TEST_CASE("exploration on hand-built processes") {
  Explored nil = explore_lts({}, {Process::make_nil()}, 10);
  CHECK(nil.lts.n_states() == 1);
  CHECK(nil.lts.transitions().empty());

  Explored handshake = explore_lts({}, {parse_process("a.0 | 'a.0")}, 10);
  CHECK(handshake.lts.n_states() == 4);
  CHECK(handshake.lts.transitions().size() == 5);
  // silent synchronization shows up as the .aut label "i"
  CHECK(handshake.lts.find_label("i").has_value());

  Defs defs;
  defs.emplace("K", parse_process("a.K"));
  Explored loop = explore_lts(defs, {Process::make_const("K")}, 10);
  CHECK(loop.lts.n_states() == 1);
  CHECK(loop.lts.transitions() ==
        std::vector<Transition>{{0, loop.lts.label_id("a"), 0}});

  // shared syntactic states: the two branching roots meet at 0
  Explored pair = explore_lts(
      {}, {parse_process("a.(b.0+c.0)"), parse_process("a.b.0 + a.c.0")}, 100);
  CHECK(pair.lts.n_states() == 6);

  CHECK_THROWS_AS(explore_lts(defs, {parse_process("a.0|b.0|c.0")}, 3),
                  BoundError);
  try {
    explore_lts(defs, {parse_process("a.0|b.0|c.0")}, 3);
  } catch (const BoundError& e) {
    CHECK(e.reached == 3);  // partial count, never a truncated LTS
  }
}

TEST_CASE("behavioural laws hold and cross-check against the oracle") {
  Rng rng(404);
  for (int i = 0; i < 40; ++i) {
    Process p = testgen::random_process(rng, 3);
    Process q = testgen::random_process(rng, 3);
    Process r = testgen::random_process(rng, 3);
    using P = Process;
    std::vector<std::pair<Process, Process>> laws = {
        {P::make_par(p, q), P::make_par(q, p)},
        {P::make_par(p, P::make_nil()), p},
        {P::make_par(P::make_par(p, q), r), P::make_par(p, P::make_par(q, r))},
        {P::make_sum(p, q), P::make_sum(q, p)},
        {P::make_sum(p, P::make_nil()), p},
        {P::make_sum(p, p), p},
    };
    for (const auto& [lhs, rhs] : laws)
      CHECK(bisimilar_ccs({}, lhs, rhs, 500) == Verdict::yes);

    // one law per round against the naive fixpoint as ground truth
    const auto& [lhs, rhs] = laws[i % laws.size()];
    Explored e = explore_lts({}, {lhs, rhs}, 500);
    Relation naive = naive_bisim_fixpoint(e.lts);
    CHECK(naive.count({e.roots[0], e.roots[1]}) == 1);
  }
}

TEST_CASE("bisimilarity of processes") {
  Rng rng(405);
  Process p = testgen::random_process(rng, 3);
  CHECK(bisimilar_ccs({}, p, p, 500) == Verdict::yes);
  CHECK(bisimilar_ccs({}, parse_process("a.(b.0+c.0)"),
                      parse_process("a.b.0 + a.c.0"), 100) == Verdict::no);
  // the bound makes the answer undecided, never wrong
  CHECK(bisimilar_ccs({}, parse_process("a.0|b.0|c.0"),
                      parse_process("c.0|b.0|a.0"), 3) == Verdict::undecided);
}

TEST_CASE("contexts fill, compose and decompose") {
  Process p = parse_process("a.0 + b.0");
  CHECK(Context::make_hole().fill(p) == p);

  Process q = parse_process("c.0");
  Context par_l = Context::make_par_l(Context::make_hole(), q);
  CHECK(par_l.fill(p) == Process::make_par(p, q));

  Rng rng(406);
  for (int i = 0; i < 200; ++i) {
    Context c1 = testgen::random_context(rng, 3);
    Context c2 = testgen::random_context(rng, 3);
    Process t = testgen::random_process(rng, 3);
    CHECK(c1.fill(c2.fill(t)) == c1.compose(c2).fill(t));
  }

  // leftmost-innermost: the context is sum_l(prefix_c(a, hole), K)
  auto d = decompose(parse_process("a.0 + K"));
  CHECK(d.terminal == Process::make_nil());
  CHECK(d.context.fill(d.terminal) == parse_process("a.0 + K"));
  CHECK(d.context.fill(parse_process("b.0")) == parse_process("a.b.0 + K"));

  auto dn = decompose(Process::make_nil());
  CHECK(dn.context.fill(dn.terminal) == Process::make_nil());
  CHECK(dn.terminal == Process::make_nil());

  for (int i = 0; i < 300; ++i) {
    Process t = testgen::random_process(rng, 4);
    auto dec = decompose(t);
    bool terminal_ok = dec.terminal == Process::make_nil() ||
                       dec.terminal.kind() == Process::Kind::constant;
    CHECK(terminal_ok);
    CHECK(dec.context.fill(dec.terminal) == t);
  }
}

TEST_CASE("congruence sampling") {
  Process p = parse_process("a.0 | b.0");
  Process q = parse_process("b.0 | a.0");

  CongruenceReport trivial =
      congruence_sample({}, p, q, {Context::make_hole()}, 500);
  CHECK(trivial.sound());
  CHECK(trivial.checked == 1);

  Context c = Context::make_par_l(Context::make_hole(), parse_process("c.0"));
  CHECK(congruence_sample({}, p, q, {c}, 500).sound());

  Rng rng(407);
  for (int i = 0; i < 30; ++i) {
    Process a = testgen::random_process(rng, 3);
    Process b = testgen::random_process(rng, 3);
    std::vector<Context> contexts;
    for (int k = 0; k < 5; ++k)
      contexts.push_back(testgen::random_context(rng, 3));
    CongruenceReport report = congruence_sample(
        {}, Process::make_par(a, b), Process::make_par(b, a), contexts, 10000);
    CHECK(report.sound());
    CHECK(report.undecided.empty());
  }

  CHECK_THROWS_AS(congruence_sample({}, parse_process("a.0"),
                                    parse_process("b.0"),
                                    {Context::make_hole()}, 100),
                  PreconditionError);
}

TEST_CASE("silent prefix is weakly invisible") {
  Rng rng(408);
  for (int i = 0; i < 20; ++i) {
    Process p = testgen::random_process(rng, 3);
    Process taup = Process::make_prefix(Act::make_tau(), p);
    CHECK(weak_bisimilar_ccs({}, taup, p, 500) == Verdict::yes);
  }
}

TEST_CASE("defs files parse") {
  std::istringstream in(
      "# vending machine\nK = coin.Serve\nServe = tea.K + coffee.K\n\n");
  Defs defs = parse_defs(in);
  REQUIRE(defs.size() == 2);
  CHECK(defs.count("K") == 1);
  CHECK(defs.count("Serve") == 1);
  CHECK(transitions(defs, Process::make_const("K")).size() == 1);

  std::istringstream dup("K = 0\nK = a.0\n");
  CHECK_THROWS_AS(parse_defs(dup), ParseError);
  std::istringstream bad("k = 0\n");
  CHECK_THROWS_AS(parse_defs(bad), ParseError);
}
