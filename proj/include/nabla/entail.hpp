#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "nabla/catalog.hpp"
#include "nabla/codes.hpp"
#include "nabla/term.hpp"

namespace nabla {

struct EntailError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BudgetExceeded : EntailError {
  using EntailError::EntailError;
};

// Θ ⊩ Γ over the k-indeterminacy code structures.  Atoms are swept over the
// full carrier unless fixed or restricted by name (names as printed, e.g.
// "p" or "D1 J").
struct EntailQuery {
  std::vector<TermPtr> antecedents;
  std::vector<TermPtr> succedents;  // nonempty
  int k = 2;
  std::map<std::string, TruthCode> fixedBindings;
  std::map<std::string, std::vector<TruthCode>> atomDomains;
  std::uint64_t budget = 100000000;
  int threads = 1;
  const Catalog* catalog = &Catalog::standard();
};

enum class EntailStatus { Entailed, NotEntailed };

struct Verdict {
  EntailStatus status = EntailStatus::Entailed;
  // First countermodel in canonical order (present iff NotEntailed).
  std::vector<std::pair<std::string, TruthCode>> countermodel;
  std::uint64_t sweptCount = 0;
  std::vector<std::string> atoms;  // sweep order
  bool heuristicComplete = false;  // k >= number of swept atoms
};

// The sweepable atoms of a type-o term after expansion and normalization:
// non-logical constants of type o, free variables of type o, and
// applications of a non-logical constant to constant arguments (like D1 J),
// in first-occurrence order.
std::vector<TermPtr> atoms_of(const TermPtr& t,
                              const Catalog& catalog = Catalog::standard());
std::vector<TermPtr> atoms_of_all(const std::vector<TermPtr>& ts,
                                  const Catalog& catalog = Catalog::standard());

// Entailed iff imp(conj-fold Θ, disj-fold Γ) is T for every swept
// assignment; otherwise the canonical first countermodel.
Verdict check_entailment(const EntailQuery& q);

// Validity of a single formula (empty antecedent set).
Verdict check_validity(const TermPtr& t, int k,
                       const Catalog& catalog = Catalog::standard());

// True iff the assignment makes the query's implication non-designated.
bool verify_countermodel(const std::map<std::string, TruthCode>& assignment,
                         const EntailQuery& q);

// Evaluates a formula under a complete atom assignment.
TruthCode eval_formula(const TermPtr& t,
                       const std::map<std::string, TruthCode>& assignment,
                       int k, const Catalog& catalog = Catalog::standard());

struct TableRow {
  std::vector<TruthCode> atomValues;
  std::vector<TruthCode> formulaValues;
};

// One row per assignment to the listed atoms (canonical order, first atom
// slowest); remaining atoms must appear in `fixed`.
std::vector<TableRow> make_table(const std::vector<TermPtr>& formulas,
                                 const std::vector<std::string>& sweepAtoms,
                                 const std::map<std::string, TruthCode>& fixed,
                                 int k,
                                 const Catalog& catalog = Catalog::standard());

std::string format_table(const std::vector<std::string>& atomHeaders,
                         const std::vector<std::string>& formulaHeaders,
                         const std::vector<TableRow>& rows, bool tsv = false);

// `ENTAILED k=<k> swept=<n>` or `NOT-ENTAILED k=<k>` plus atom=value lines.
std::string format_verdict(const Verdict& v, int k);

}  // namespace nabla
