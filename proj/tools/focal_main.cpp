// Command-line front end: checking, decomposition listing, semantic
// provability, head reduction, bounded proof search, sequent translation and
// consistency sweeps over judgment files.
//
// Exit codes: 0 success / accepted, 1 rejected / not found / abnormal stop,
// 2 parse or usage errors.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "focal/machine.hpp"
#include "focal/realisability.hpp"
#include "focal/search.hpp"
#include "focal/syntax.hpp"
#include "focal/translate.hpp"

namespace {

using namespace focal;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

syntax::Logic parse_logic(const std::string& name) {
  if (name == "k1") return syntax::Logic::K1;
  if (name == "j") return syntax::Logic::J;
  throw std::runtime_error("unknown logic: " + name + " (use k1 or j)");
}

// Cut candidates for proving a goal: the molecule closure of everything the
// context and goal mention.
std::vector<k1::Formula> k1_candidates(const syntax::Document<k1::Signature>& doc) {
  std::vector<k1::Formula> roots;
  for (const auto& a : doc.context.pos_store()) roots.push_back(k1::Formula::atom(a));
  for (const auto& m : doc.context.neg_store()) roots.push_back(m);
  if (doc.goal.molecule) roots.push_back(*doc.goal.molecule);
  if (doc.goal.delta) {
    doc.goal.delta->for_each_leaf(
        [&](const std::string& a) { roots.push_back(k1::Formula::atom(a)); },
        [&](const k1::Formula& m) { roots.push_back(m); });
  }
  return k1::molecule_closure(roots);
}

std::vector<j::Positioned> j_candidates(const syntax::Document<j::Signature>& doc) {
  std::vector<j::Formula> roots;
  for (const auto& a : doc.context.pos_stable()) roots.push_back(a.formula);
  for (const auto& m : doc.context.neg_stable()) roots.push_back(m.formula);
  if (doc.context.right_atom()) roots.push_back(doc.context.right_atom()->formula);
  if (doc.context.right_mol()) roots.push_back(doc.context.right_mol()->formula);
  if (doc.goal.molecule) roots.push_back(doc.goal.molecule->formula);
  if (doc.goal.delta) {
    doc.goal.delta->for_each_leaf(
        [&](const j::Positioned& a) { roots.push_back(a.formula); },
        [&](const j::Positioned& m) { roots.push_back(m.formula); });
  }
  return j::molecule_closure(roots);
}

int report_check(const CheckResult& r) {
  if (r.ok()) {
    std::cout << "accepted\n";
    std::cout << "trace:";
    for (const auto& rule : r.trace()) std::cout << " " << rule;
    std::cout << "\n";
    return 0;
  }
  std::cout << "rejected: " << to_string(r.error().kind) << " at "
            << format_path(r.error().path) << " (" << r.error().detail << ")\n";
  return 1;
}

int run_check(const std::string& path) {
  syntax::SourceJudgment sj = syntax::parse_judgment(read_file(path));
  if (sj.logic == syntax::Logic::K1) {
    const auto& doc = sj.as_k1();
    return report_check(check(k1::signature(), doc.goal.judgment(doc.context)));
  }
  const auto& doc = sj.as_j();
  return report_check(check(j::signature(), doc.goal.judgment(doc.context)));
}

int run_decomps(const std::string& logic, const std::string& formula) {
  if (parse_logic(logic) == syntax::Logic::K1) {
    k1::Formula m = syntax::parse_k1_formula(formula);
    if (!m.positive()) throw std::runtime_error("molecule must be positive");
    for (const auto& [p, delta] : k1::signature().decompositions(m))
      std::cout << syntax::print(p) << " ~> " << syntax::print(delta) << "\n";
    return 0;
  }
  j::Positioned m = j::position(syntax::parse_j_formula(formula));
  for (const auto& [p, delta] : j::signature().decompositions(m))
    std::cout << syntax::print(p) << " ~> " << syntax::print(delta) << "\n";
  return 0;
}

int run_semprove(const std::string& logic, const std::string& formula) {
  if (parse_logic(logic) == syntax::Logic::K1) {
    k1::Formula m = syntax::parse_k1_formula(formula);
    if (!m.positive()) throw std::runtime_error("molecule must be positive");
    Interpreter<TrivialAlgebra<k1::Signature>, k1::Signature> interp(
        k1_trivial_model(), k1::signature());
    std::cout << (interp.sem_provable(m) ? "true" : "false") << "\n";
    return 0;
  }
  j::Positioned m = j::position(syntax::parse_j_formula(formula));
  Interpreter<JBooleanAlgebra, j::Signature> interp(j_positional_model(),
                                                    j::signature());
  std::cout << (interp.sem_provable(m) ? "true" : "false") << "\n";
  return 0;
}

template <Instance Sig>
int run_eval_on(const Sig& sig, const syntax::Document<Sig>& doc, int fuel,
                bool trace) {
  if (doc.goal.kind != syntax::Goal<Sig>::Kind::Command || !doc.goal.command)
    throw std::runtime_error("eval needs a command judgment with a term");
  Config<Sig> cfg{opaque_env(sig, doc.context), *doc.goal.command};
  RunResult r = run(sig, cfg, fuel);
  if (trace)
    for (const auto& line : r.trace) std::cout << line << "\n";
  switch (r.status) {
    case RunStatus::Halted:
      std::cout << "halted: reached " << r.opaque_name << " after " << r.steps
                << " step" << (r.steps == 1 ? "" : "s") << "\n";
      return 0;
    case RunStatus::StuckAt:
      std::cout << "stuck: " << to_string(*r.error) << " after " << r.steps
                << " step" << (r.steps == 1 ? "" : "s") << "\n";
      return 1;
    case RunStatus::OutOfFuel:
      std::cout << "out of fuel after " << r.steps << " steps\n";
      return 1;
  }
  return 1;
}

int run_eval(const std::string& path, int fuel, bool trace) {
  syntax::SourceJudgment sj = syntax::parse_judgment(read_file(path));
  if (sj.logic == syntax::Logic::K1)
    return run_eval_on(k1::signature(), sj.as_k1(), fuel, trace);
  return run_eval_on(j::signature(), sj.as_j(), fuel, trace);
}

template <Instance Sig>
int run_prove_on(const Sig& sig, const syntax::Document<Sig>& doc,
                 std::vector<typename Sig::Molecule> candidates, int depth) {
  using Kind = typename syntax::Goal<Sig>::Kind;
  Searcher<Sig> searcher(sig, std::move(candidates));
  SearchBudget budget = SearchBudget::at_depth(depth);
  switch (doc.goal.kind) {
    case Kind::Positive: {
      auto t = searcher.positive(doc.context, *doc.goal.molecule, budget);
      if (!t) break;
      std::cout << syntax::print(*t) << "\n";
      return 0;
    }
    case Kind::Dec: {
      auto d = searcher.dec(doc.context, *doc.goal.delta, budget);
      if (!d) break;
      std::cout << syntax::print(*d) << "\n";
      return 0;
    }
    case Kind::Command: {
      auto c = searcher.command(doc.context, budget);
      if (!c) break;
      std::cout << syntax::print(*c) << "\n";
      return 0;
    }
  }
  std::cout << "not found\n";
  return 1;
}

int run_prove(const std::string& path, int depth) {
  syntax::SourceJudgment sj = syntax::parse_judgment(read_file(path));
  if (sj.logic == syntax::Logic::K1)
    return run_prove_on(k1::signature(), sj.as_k1(), k1_candidates(sj.as_k1()),
                        depth);
  return run_prove_on(j::signature(), sj.as_j(), j_candidates(sj.as_j()), depth);
}

int run_translate(const std::string& path) {
  syntax::SourceJudgment sj = syntax::parse_judgment(read_file(path));
  std::cout << translate::sequent(sj) << "\n";
  return 0;
}

std::vector<std::string> universe_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    auto begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos) continue;
    auto end = line.find_last_not_of(" \t\r");
    lines.push_back(line.substr(begin, end - begin + 1));
  }
  return lines;
}

int run_sweep(const std::string& logic, int depth, const std::string& universe) {
  std::vector<std::string> lines = universe_lines(universe);
  if (parse_logic(logic) == syntax::Logic::K1) {
    std::vector<k1::Formula> roots;
    for (const auto& l : lines) roots.push_back(syntax::parse_k1_formula(l));
    auto mols = k1::molecule_closure(roots);
    auto report = consistency_sweep(k1::signature(), mols, depth);
    if (report.found) {
      std::cout << "counterexample: " << syntax::print(*report.counterexample)
                << "\n";
      return 1;
    }
    std::cout << "no closed command found (depth " << depth << ", "
              << report.candidates << " cut candidates)\n";
    return 0;
  }
  std::vector<j::Formula> roots;
  for (const auto& l : lines) roots.push_back(syntax::parse_j_formula(l));
  auto mols = j::molecule_closure(roots);
  auto report = consistency_sweep(j::signature(), mols, depth);
  if (report.found) {
    std::cout << "counterexample: " << syntax::print(*report.counterexample)
              << "\n";
    return 1;
  }
  std::cout << "no closed command found (depth " << depth << ", "
            << report.candidates << " cut candidates)\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"proof-term checker for big-step focussed sequent calculi"};
  app.require_subcommand(1);

  std::string file, logic = "k1", formula, universe;
  int fuel = 10000, depth = 4;
  bool trace = false;

  auto* check_cmd = app.add_subcommand("check", "check a judgment file");
  check_cmd->add_option("file", file)->required();

  auto* decomps_cmd =
      app.add_subcommand("decomps", "list the decompositions of a molecule");
  decomps_cmd->add_option("--logic", logic);
  decomps_cmd->add_option("formula", formula)->required();

  auto* semprove_cmd = app.add_subcommand(
      "semprove", "semantic provability in the boolean model");
  semprove_cmd->add_option("--logic", logic);
  semprove_cmd->add_option("formula", formula)->required();

  auto* eval_cmd =
      app.add_subcommand("eval", "run a command against an opaque environment");
  eval_cmd->add_option("file", file)->required();
  eval_cmd->add_option("--fuel", fuel);
  eval_cmd->add_flag("--trace", trace);

  auto* prove_cmd =
      app.add_subcommand("prove", "bounded search for an inhabitant");
  prove_cmd->add_option("file", file)->required();
  prove_cmd->add_option("--depth", depth);

  auto* translate_cmd =
      app.add_subcommand("translate", "render the judgment as a sequent");
  translate_cmd->add_option("file", file)->required();

  auto* sweep_cmd =
      app.add_subcommand("sweep", "search for a closed command (consistency)");
  sweep_cmd->add_option("--logic", logic);
  sweep_cmd->add_option("--depth", depth);
  sweep_cmd->add_option("--universe", universe)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (check_cmd->parsed()) return run_check(file);
    if (decomps_cmd->parsed()) return run_decomps(logic, formula);
    if (semprove_cmd->parsed()) return run_semprove(logic, formula);
    if (eval_cmd->parsed()) return run_eval(file, fuel, trace);
    if (prove_cmd->parsed()) return run_prove(file, depth);
    if (translate_cmd->parsed()) return run_translate(file);
    if (sweep_cmd->parsed()) return run_sweep(logic, depth, universe);
  } catch (const syntax::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const translate::TranslateError& e) {
    std::cerr << "translate error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
