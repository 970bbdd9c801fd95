// Command-line front end: truth tables, evaluation, validity and entailment
// sweeps, derivation checking, axiom-profile checks, and the two worked
// examples.  Every command is a thin wrapper over the library.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "nabla/calculus.hpp"
#include "nabla/corpus.hpp"
#include "nabla/entail.hpp"
#include "nabla/models.hpp"
#include "nabla/parse.hpp"

namespace {

using namespace nabla;

constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parses an expression, declaring any identifier the grammar does not
// recognize as a fresh constant of type o (a sweepable atom).  The declared
// constants accumulate in `env` so one command shares them across inputs.
TermPtr parse_atoms(const std::string& src, ParseEnv& env) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    try {
      return parse_term(src, env);
    } catch (const ParseError& e) {
      std::string msg = e.what();
      size_t open = msg.find('`'), close = msg.rfind('`');
      if (msg.find("unknown identifier") == std::string::npos ||
          open == std::string::npos || close <= open)
        throw;
      env.consts[msg.substr(open + 1, close - open - 1)] = Type::o();
    }
  }
  throw UsageError("too many distinct atoms in `" + src + "`");
}

// The ambient environment for derivation files: a few propositional
// constants, one predicate, and declared free variables for eigen terms.
ParseEnv proof_env() {
  ParseEnv env;
  for (const char* n : {"p", "q", "r", "s"}) env.consts[n] = Type::o();
  env.consts["P"] = Type::fun(Type::o(), Type::o());
  for (const char* n : {"x", "y", "z"}) env.vars[n] = Type::o();
  return env;
}

std::vector<std::string> split_trim(const std::string& s, char delim) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string piece;
  while (std::getline(in, piece, delim)) {
    size_t a = piece.find_first_not_of(" \t");
    size_t b = piece.find_last_not_of(" \t");
    if (a == std::string::npos) continue;
    out.push_back(piece.substr(a, b - a + 1));
  }
  return out;
}

Profile parse_profile(const std::string& name) {
  if (auto p = profile_from_name(name)) return *p;
  throw UsageError("unknown profile `" + name + "`");
}

int cmd_table(const std::vector<std::string>& exprs, int k, bool tsv) {
  ParseEnv env;
  std::vector<TermPtr> formulas;
  for (const std::string& src : exprs) formulas.push_back(parse_atoms(src, env));
  std::vector<std::string> atoms;
  for (const TermPtr& a : atoms_of_all(formulas)) atoms.push_back(print_term(a));
  std::cout << format_table(atoms, exprs, make_table(formulas, atoms, {}, k),
                            tsv);
  return 0;
}

int cmd_eval(const std::string& expr, const std::vector<std::string>& assigns,
             int k) {
  ParseEnv env;
  TermPtr t = parse_atoms(expr, env);
  std::map<std::string, TruthCode> assignment;
  for (const std::string& a : assigns) {
    size_t eq = a.find('=');
    if (eq == std::string::npos)
      throw UsageError("--assign expects name=code, got `" + a + "`");
    auto code = code_from_name(a.substr(eq + 1));
    if (!code) throw UsageError("unknown code `" + a.substr(eq + 1) + "`");
    if (code->raw >= static_cast<unsigned>(k + 2))
      throw UsageError("code `" + a.substr(eq + 1) + "` is outside k=" +
                       std::to_string(k));
    assignment[a.substr(0, eq)] = *code;
  }
  for (const TermPtr& atom : atoms_of_all({t}))
    if (!assignment.count(print_term(atom)))
      throw UsageError("no --assign for atom `" + print_term(atom) + "`");
  std::cout << code_name(eval_formula(t, assignment, k)) << "\n";
  return 0;
}

int cmd_valid(const std::string& expr, int k) {
  ParseEnv env;
  Verdict v = check_validity(parse_atoms(expr, env), k);
  std::cout << format_verdict(v, k);
  return v.status == EntailStatus::Entailed ? 0 : 1;
}

int cmd_entail(const std::string& sequent, int k, std::uint64_t budget) {
  size_t turnstile = sequent.find("|-");
  if (turnstile == std::string::npos)
    throw UsageError("expected `T1,T2 |- G`, no `|-` in `" + sequent + "`");
  ParseEnv env;
  EntailQuery q;
  for (const std::string& src : split_trim(sequent.substr(0, turnstile), ','))
    q.antecedents.push_back(parse_atoms(src, env));
  for (const std::string& src : split_trim(sequent.substr(turnstile + 2), ','))
    q.succedents.push_back(parse_atoms(src, env));
  if (q.succedents.empty())
    throw UsageError("expected at least one goal after `|-`");
  q.k = k;
  q.budget = budget;
  Verdict v = check_entailment(q);
  std::cout << format_verdict(v, k);
  return v.status == EntailStatus::Entailed ? 0 : 1;
}

int cmd_check_proof(const std::string& file, Profile profile) {
  std::ifstream in(file);
  if (!in.good()) throw UsageError("cannot read `" + file + "`");
  std::ostringstream buf;
  buf << in.rdbuf();
  ParseEnv env = proof_env();
  Derivation d = parse_derivation(buf.str(), env);
  TheoryProfile tp = theory_profile(profile);
  for (const std::string& w : profile_warnings(tp))
    std::cerr << "warning: " << w << "\n";
  CheckResult r = check_derivation(d, tp);
  if (r.ok) {
    std::cout << "OK\n";
    return 0;
  }
  std::cout << "REJECTED: " << r.message << " (at node";
  for (size_t i : r.path) std::cout << " " << i;
  std::cout << ")\n";
  return 1;
}

int cmd_case_study(int k, bool tsv) {
  CaseStudyReport rep = run_case_study(k, true);
  std::cout << format_case_study(rep, tsv);
  VariantReport v = case_study_variants(k);
  std::cout << format_variants(v);
  bool ok = rep.verdictsAsExpected && rep.unrestrictedAgrees;
  return ok ? 0 : 1;
}

int cmd_nl_demo(int k) {
  NLReport r = run_nl_demo(k);
  std::cout << format_nl_demo(r);
  bool ok = r.reductMatches && r.invalidReductMatches &&
            r.controlReductMatches && !r.reductValue.is_true() &&
            !r.invalidValue.is_true() && r.postulateHolds && r.controlValid;
  return ok ? 0 : 1;
}

int cmd_axioms(int k, Profile profile) {
  Model m = code_model(k);
  bool allHold = true;
  for (const AxiomResult& r : check_axiom_profile(m, profile)) {
    std::cout << r.axiom << ": " << (r.holds ? "holds" : "FAILS");
    if (!r.holds) {
      std::cout << " at " << r.witness;
      allHold = false;
    }
    std::cout << "\n";
  }
  return allHold ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Truth tables, entailment sweeps, and proof checking for a "
               "paraconsistent higher-order logic"};
  app.require_subcommand(1);

  int k = 2;
  std::string profileName = "base";
  bool tsv = false;
  std::uint64_t budget = 100000000;

  std::vector<std::string> exprs, assigns;
  std::string expr, sequent, proofFile;

  CLI::App* table = app.add_subcommand("table", "Print a truth table");
  table->add_option("expr", exprs, "Formulas to tabulate")->required();

  CLI::App* eval = app.add_subcommand("eval", "Evaluate under an assignment");
  eval->add_option("expr", expr, "Formula")->required();
  eval->add_option("--assign", assigns, "Atom assignment name=code");

  CLI::App* valid = app.add_subcommand("valid", "Check validity by sweep");
  valid->add_option("expr", expr, "Formula")->required();

  CLI::App* entail = app.add_subcommand("entail", "Check `T1,T2 |- G`");
  entail->add_option("sequent", sequent, "Sequent")->required();

  CLI::App* proof = app.add_subcommand("check-proof", "Check a derivation file");
  proof->add_option("file", proofFile, "Derivation file")->required();

  CLI::App* caseStudy =
      app.add_subcommand("case-study", "Reproduce the medical knowledge base");
  CLI::App* nlDemo = app.add_subcommand(
      "nl-demo", "Reproduce the propositional-attitude example");
  CLI::App* axioms =
      app.add_subcommand("axioms", "Check the profile's axioms in code_model(k)");

  for (CLI::App* sub : {table, eval, valid, entail, proof, caseStudy, nlDemo,
                        axioms}) {
    sub->add_option("--codes", k, "Number of indeterminacies k")
        ->capture_default_str();
    sub->add_option("--profile", profileName, "base|omega|delta|dag|ddag")
        ->capture_default_str();
    sub->add_flag("--tsv", tsv, "Tab-separated tables");
    sub->add_option("--budget", budget, "Sweep budget")->capture_default_str();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (k < 0) throw UsageError("--codes must be nonnegative");
    if (*table) return cmd_table(exprs, k, tsv);
    if (*eval) return cmd_eval(expr, assigns, k);
    if (*valid) return cmd_valid(expr, k);
    if (*entail) return cmd_entail(sequent, k, budget);
    if (*proof) return cmd_check_proof(proofFile, parse_profile(profileName));
    if (*caseStudy) return cmd_case_study(k, tsv);
    if (*nlDemo) return cmd_nl_demo(k);
    if (*axioms) return cmd_axioms(k, parse_profile(profileName));
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
