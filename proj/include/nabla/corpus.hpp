#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "nabla/catalog.hpp"
#include "nabla/entail.hpp"
#include "nabla/models.hpp"
#include "nabla/parse.hpp"

namespace nabla {

// The medical knowledge base: three experts on two diseases and four
// symptoms for the individuals John and Mary.  The exclusion rule of the
// first expert comes in several variants.
enum class ExclusionRule { Boxed, Unboxed, Sheffer, Combined };

struct CaseStudy {
  ParseEnv env;                            // S1..S4, D1, D2 : o>o; J, M : o
  std::vector<TermPtr> rulesJ, rulesM;     // the five expert rules, per individual
  std::vector<TermPtr> factsJ, factsM;     // the boxed symptom observations
  std::map<std::string, TruthCode> boxed;  // symptom atoms forced by the facts
  TermPtr piJ, piM, pi;                    // conjunctions KB_J, KB_M, KB
};

CaseStudy make_case_study(ExclusionRule excl = ExclusionRule::Boxed);

struct CaseVerdict {
  std::string label;          // e.g. "KB |- not (D1 J)"
  bool expectEntailed = true;
  Verdict verdict;
};

struct CaseStudyReport {
  int k = 2;
  std::vector<std::string> tableAtoms;  // disease-atom headers (D1, D2)
  std::vector<std::string> tableCols;   // KB_J, KB'_J, KB_M, KB'_M
  std::vector<TableRow> rows;           // 16 rows over (D1, D2)
  std::vector<CaseVerdict> verdicts;    // the eight entailment checks
  bool verdictsAsExpected = true;
  // The verdict sweep with symptom atoms unrestricted agrees with the sweep
  // that fixes them to their boxed values.
  bool unrestrictedAgrees = true;
};

// The 16-row table per individual (symptom atoms fixed to their boxed
// values) and the eight verdicts.  The unrestricted confirmation sweep
// factors over the two individuals, whose atom sets are disjoint.
CaseStudyReport run_case_study(int k = 2, bool unrestrictedSweep = true);
std::string format_case_study(const CaseStudyReport& r, bool tsv = false);

struct VariantReport {
  int k = 2;
  // (a) box omitted from the exclusion rule: goals no longer entailed.
  std::vector<std::string> unboxedLost;
  // (b) Sheffer-stroke exclusion: every table value is F.
  bool shefferAllFalse = false;
  // (c) combined exclusion: the two John negations hold, Mary's first fails.
  bool combinedNegD1J = false, combinedNegD2J = false;
  Verdict combinedNegD1M;
  TruthCode combinedRow12, combinedRow21;  // KB_M at (i1,i2) and (i2,i1)
};

VariantReport case_study_variants(int k = 2);
std::string format_variants(const VariantReport& r);

// The propositional-attitude example: a lexicon of combinators over
// situations of type o, three arguments, and a hand-built refuting model.
struct NLArgument {
  std::string name;
  TermPtr argument;   // the categorial-grammar output over the lexicon
  TermPtr reduct;     // its displayed reduced form
  // The embedded propositions at situation j, for the per-situation sweep.
  TermPtr innerAnte, innerCons;
};

struct NLExample {
  ParseEnv env;  // K, B : o>o>o>o; S, D : o>o>o; J, G, V : o
  // Shared so env.catalog stays valid across copies of the example.
  std::shared_ptr<Catalog> lexicon;      // standard + combinators + ell
  std::shared_ptr<Catalog> combinators;  // the combinators alone (staged expansion)
  NLArgument debatable;  // Gloria |- Victoria dances-or-not
  NLArgument invalid;    // Gloria |- Victoria dances
  NLArgument control;    // smiles-and-dances |- smiles
  Model countermodel;    // k = 2
};

NLExample make_nl_example();

// Expands the lexicon combinators (ell and the standard abbreviations stay
// folded) and beta-normalizes.
TermPtr lexicon_reduce(const TermPtr& argument, const NLExample& ex);

struct NLReport {
  int k = 2;
  bool reductMatches = false;         // argument reduces to the displayed form
  bool invalidReductMatches = false;
  bool controlReductMatches = false;
  TruthCode reductValue;              // under the countermodel: i1
  TruthCode invalidValue;             // likewise undesignated
  bool postulateHolds = false;        // knowledge implies belief in the model
  bool controlValid = false;          // situation-value sweep
  std::uint64_t controlSwept = 0;
};

NLReport run_nl_demo(int k = 2);
std::string format_nl_demo(const NLReport& r);

// Validity of an argument reduct by sweeping per-situation values: with the
// integrity condition true the belief codes are determinate while the
// embedded-proposition codes (the argument's innerAnte/innerCons atoms) range
// over the whole carrier; the universal folds are checked over every
// achievable value combination.
bool situation_sweep_valid(const NLArgument& arg, const NLExample& ex, int k,
                           std::uint64_t* swept = nullptr);

// Formula sets used by the proof-checking and validity examples.
std::vector<TermPtr> identity_formulas();    // 25 formulas for phi |- phi
std::vector<TermPtr> key_equalities();       // valid at every k
std::vector<TermPtr> rejected_validities();  // invalid for k >= 1

}  // namespace nabla
