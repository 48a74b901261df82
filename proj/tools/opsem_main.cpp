// Command-line front end. Verdicts go to stdout as single machine-readable
// lines; diagnostics go to stderr. Exit codes: 0 success / true answer,
// 1 false answer, 2 usage or parse error, 3 resource bound exceeded or
// undecided.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "opsem/opsem.hpp"

namespace {

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBound = 3;

int verdict_exit(opsem::Verdict v) {
  std::cout << opsem::to_string(v) << "\n";
  switch (v) {
    case opsem::Verdict::yes: return kExitTrue;
    case opsem::Verdict::no: return kExitFalse;
    default: return kExitBound;
  }
}

std::vector<std::string> split_word(const std::string& word) {
  std::istringstream in(word);
  std::vector<std::string> labels;
  std::string label;
  while (in >> label) labels.push_back(label);
  return labels;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw opsem::Error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

opsem::ccs::Defs load_defs(const std::string& arg) {
  if (arg.empty() || arg == "-") return {};
  return opsem::ccs::parse_defs_file(arg);
}

opsem::lam::ParsedTerm parse_lam_file(const std::string& path,
                                      opsem::lam::SyntaxMode mode) {
  try {
    return opsem::lam::parse_term(read_file(path), mode);
  } catch (const opsem::ParseError& e) {
    throw opsem::ParseError::in_file(path, e);
  }
}

const char* bool_str(bool b) { return b ? "true" : "false"; }

struct Options {
  std::string file, file2, out, defs, proc, proc2, word;
  std::uint32_t s = 0, t = 0;
  std::size_t max_states = 10000;
  std::size_t fuel = 10000;
  std::string tau = "i";
  bool weak = false;
  bool fsub = false;
};

int run_lts_bisim(const Options& o) {
  auto data = opsem::read_aut_file(o.file);
  data.lts.check_state(o.s);
  data.lts.check_state(o.t);
  bool same;
  if (o.weak) {
    opsem::Lts lts = data.lts.with_label(o.tau);
    same = opsem::weak_bisimilar(lts, opsem::TauSpec{o.tau}, o.s, o.t);
  } else {
    same = opsem::bisimilarity_partition(data.lts).same_block(o.s, o.t);
  }
  return verdict_exit(opsem::verdict_of(same));
}

int run_lts_traces_eq(const Options& o) {
  auto data = opsem::read_aut_file(o.file);
  return verdict_exit(
      opsem::verdict_of(opsem::trace_equivalent(data.lts, o.s, o.t)));
}

int run_lts_classify(const Options& o) {
  auto data = opsem::read_aut_file(o.file);
  auto c = opsem::classify(data.lts);
  std::cout << "deterministic=" << bool_str(c.deterministic)
            << " image_finite=" << bool_str(c.image_finite);
  if (c.diamond) std::cout << " diamond=" << bool_str(*c.diamond);
  if (c.confluent) std::cout << " confluent=" << bool_str(*c.confluent);
  std::cout << "\n";
  return kExitTrue;
}

int run_ccs_trans(const Options& o) {
  auto defs = load_defs(o.defs);
  auto p = opsem::ccs::parse_process(o.proc);
  for (const auto& [act, q] : opsem::ccs::transitions(defs, p))
    std::cout << act.text() << "\t" << q.print() << "\n";
  return kExitTrue;
}

int run_ccs_lts(const Options& o) {
  auto defs = load_defs(o.defs);
  auto p = opsem::ccs::parse_process(o.proc);
  auto explored = opsem::ccs::explore_lts(defs, {p}, o.max_states);
  opsem::write_aut_file(o.out, explored.lts, explored.roots[0]);
  std::cout << "states=" << explored.lts.n_states()
            << " transitions=" << explored.lts.transitions().size() << "\n";
  return kExitTrue;
}

int run_ccs_bisim(const Options& o) {
  auto defs = load_defs(o.defs);
  auto p = opsem::ccs::parse_process(o.proc);
  auto q = opsem::ccs::parse_process(o.proc2);
  opsem::Verdict v =
      o.weak ? opsem::ccs::weak_bisimilar_ccs(defs, p, q, o.max_states)
             : opsem::ccs::bisimilar_ccs(defs, p, q, o.max_states);
  return verdict_exit(v);
}

int run_auto_det(const Options& o) {
  auto na = opsem::fa::na_from_aut(opsem::read_aut_file(o.file));
  auto da = opsem::fa::determinize(na);
  std::ofstream out(o.out);
  if (!out) throw opsem::Error("cannot open file for writing: " + o.out);
  opsem::fa::write_da(out, da);
  std::cout << "states=" << da.state_sets.size() << "\n";
  return kExitTrue;
}

int run_auto_eq(const Options& o) {
  auto n1 = opsem::fa::na_from_aut(opsem::read_aut_file(o.file));
  auto n2 = opsem::fa::na_from_aut(opsem::read_aut_file(o.file2));
  auto result =
      opsem::fa::da_equivalent(opsem::fa::determinize(n1),
                               opsem::fa::determinize(n2));
  if (result.equivalent) {
    std::cout << "true\n";
    return kExitTrue;
  }
  std::cout << "false\n";
  std::cout << "cex";
  for (const auto& l : result.counterexample) std::cout << " " << l;
  std::cout << "\n";
  return kExitFalse;
}

int run_auto_accepts(const Options& o) {
  auto na = opsem::fa::na_from_aut(opsem::read_aut_file(o.file));
  return verdict_exit(
      opsem::verdict_of(opsem::fa::accepts(na, split_word(o.word))));
}

int run_lam_check(const Options& o) {
  auto mode = o.fsub ? opsem::lam::SyntaxMode::fsub
                     : opsem::lam::SyntaxMode::stlc;
  auto parsed = parse_lam_file(o.file, mode);
  std::string diag;
  auto ty = o.fsub ? opsem::lam::typecheck_fsub({}, parsed.term, &diag)
                   : opsem::lam::typecheck_stlc({}, parsed.term, &diag);
  if (!ty) {
    std::cout << "none\n";
    std::cerr << o.file << ": " << diag << "\n";
    return kExitFalse;
  }
  std::cout << opsem::lam::print_ty(*ty, parsed.names) << "\n";
  return kExitTrue;
}

int run_lam_eval(const Options& o) {
  auto mode = o.fsub ? opsem::lam::SyntaxMode::fsub
                     : opsem::lam::SyntaxMode::stlc;
  auto parsed = parse_lam_file(o.file, mode);
  if (!opsem::lam::locally_closed(parsed.term))
    throw opsem::DomainError("term is not locally closed");
  auto result = opsem::lam::normalize(parsed.term, o.fuel);
  if (!result.normal) {
    std::cout << "undecided\n";
    std::cerr << o.file << ": no normal form within " << o.fuel
              << " steps\n";
    return kExitBound;
  }
  std::cout << opsem::lam::print_term(result.term, parsed.names) << "\n";
  return kExitTrue;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"operational semantics toolkit"};
  app.require_subcommand(1);
  Options o;
  int (*action)(const Options&) = nullptr;

  auto pick = [&action](int (*fn)(const Options&)) {
    return [&action, fn]() { action = fn; };
  };

  auto* lts = app.add_subcommand("lts", "finite labelled transition systems");
  lts->require_subcommand(1);
  auto* lts_bisim = lts->add_subcommand("bisim", "are two states bisimilar");
  lts_bisim->add_option("file", o.file)->required();
  lts_bisim->add_option("s", o.s)->required();
  lts_bisim->add_option("t", o.t)->required();
  lts_bisim->add_flag("--weak", o.weak, "weak bisimilarity");
  lts_bisim->add_option("--tau", o.tau, "silent label (default i)");
  lts_bisim->callback(pick(run_lts_bisim));
  auto* lts_tr = lts->add_subcommand("traces-eq", "are two states trace-equivalent");
  lts_tr->add_option("file", o.file)->required();
  lts_tr->add_option("s", o.s)->required();
  lts_tr->add_option("t", o.t)->required();
  lts_tr->callback(pick(run_lts_traces_eq));
  auto* lts_cls = lts->add_subcommand("classify", "determinism and confluence predicates");
  lts_cls->add_option("file", o.file)->required();
  lts_cls->callback(pick(run_lts_classify));

  auto* ccs = app.add_subcommand("ccs", "process calculus");
  ccs->require_subcommand(1);
  auto* ccs_trans = ccs->add_subcommand("trans", "derivatives of a process");
  ccs_trans->add_option("defs", o.defs, "defs file, or '' for none")->required();
  ccs_trans->add_option("proc", o.proc)->required();
  ccs_trans->callback(pick(run_ccs_trans));
  auto* ccs_lts = ccs->add_subcommand("lts", "explore a process into a .aut file");
  ccs_lts->add_option("defs", o.defs)->required();
  ccs_lts->add_option("proc", o.proc)->required();
  ccs_lts->add_option("--max-states", o.max_states);
  ccs_lts->add_option("--out", o.out)->required();
  ccs_lts->callback(pick(run_ccs_lts));
  auto* ccs_bisim = ccs->add_subcommand("bisim", "are two processes bisimilar");
  ccs_bisim->add_option("defs", o.defs)->required();
  ccs_bisim->add_option("p", o.proc)->required();
  ccs_bisim->add_option("q", o.proc2)->required();
  ccs_bisim->add_flag("--weak", o.weak);
  ccs_bisim->add_option("--max-states", o.max_states);
  ccs_bisim->callback(pick(run_ccs_bisim));

  auto* fa = app.add_subcommand("auto", "finite automata");
  fa->require_subcommand(1);
  auto* fa_det = fa->add_subcommand("det", "subset construction");
  fa_det->add_option("file", o.file)->required();
  fa_det->add_option("--out", o.out)->required();
  fa_det->callback(pick(run_auto_det));
  auto* fa_eq = fa->add_subcommand("eq", "language equivalence");
  fa_eq->add_option("file1", o.file)->required();
  fa_eq->add_option("file2", o.file2)->required();
  fa_eq->callback(pick(run_auto_eq));
  auto* fa_acc = fa->add_subcommand("accepts", "word membership");
  fa_acc->add_option("file", o.file)->required();
  fa_acc->add_option("word", o.word, "space-separated labels; '' is the empty word")
      ->required();
  fa_acc->callback(pick(run_auto_accepts));

  auto* lam = app.add_subcommand("lam", "lambda calculi");
  lam->require_subcommand(1);
  auto* lam_check = lam->add_subcommand("check", "type check a term file");
  lam_check->add_option("file", o.file)->required();
  lam_check->add_flag("--fsub", o.fsub, "bounded polymorphism");
  lam_check->callback(pick(run_lam_check));
  auto* lam_eval = lam->add_subcommand("eval", "normalize a term file");
  lam_eval->add_option("file", o.file)->required();
  lam_eval->add_flag("--fsub", o.fsub);
  lam_eval->add_option("--fuel", o.fuel, "step budget (default 10000)");
  lam_eval->callback(pick(run_lam_eval));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    return action(o);
  } catch (const opsem::BoundError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBound;
  } catch (const opsem::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
