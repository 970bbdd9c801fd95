#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nabla/catalog.hpp"
#include "nabla/models.hpp"
#include "nabla/parse.hpp"
#include "nabla/term.hpp"

namespace nabla {

// Θ ⊢ Γ with set semantics: duplicates and order are irrelevant, equality
// is up to alpha-conversion.
struct Sequent {
  std::vector<TermPtr> ante;
  std::vector<TermPtr> succ;
};

// Structural and fundamental rules plus the axiom schemes.  The scheme
// names double as zero-premise rules whose conclusion must instantiate the
// scheme (witnesses give the instantiating terms; omitted witnesses are
// inferred by structural matching where possible).
enum class RuleName {
  Cut, WeakenL, WeakenR,
  BetaConv, Extensionality, Reflexivity, Substitution,
  NegFlipA, NegFlipB, AndRight, AndLeft, AllLeft, AllRight,
  IndetNeg, IndetNand, Choice, GenInjective, GenInfinity, GenInduction,
  OmegaAxiom, DeltaAxiom, DagAxiom, DdagAxiom,
};

const char* rule_name(RuleName r);
std::optional<RuleName> rule_from_name(const std::string& s);
bool rule_is_axiom_scheme(RuleName r);

struct Derivation {
  Sequent conclusion;
  RuleName rule = RuleName::Reflexivity;
  std::vector<TermPtr> witnesses;
  std::vector<Derivation> premises;
};

// Which axiom schemes are in force beyond the base set.
struct TheoryProfile {
  bool omega = false, delta = false, dag = false, ddag = false;
  std::vector<std::string> sorts;
};

TheoryProfile theory_profile(Profile p);
// Contradictory combinations (delta together with omega/dag/ddag) are legal
// but worth flagging; deriving absurd sequents from them is legitimate.
std::vector<std::string> profile_warnings(const TheoryProfile& p);

struct CheckResult {
  bool ok = true;
  std::string message;    // empty when ok
  std::vector<int> path;  // premise indices from the root to a failing node

  static CheckResult good() { return {}; }
  static CheckResult bad(std::string msg) { return {false, std::move(msg), {}}; }
};

// Validates one inference node.  Premises are the conclusions of the
// sub-derivations, in order; for Cut the first premise carries the cut
// formula on the left.
CheckResult check_rule_application(const Sequent& conclusion, RuleName rule,
                                   const std::vector<Sequent>& premises,
                                   const std::vector<TermPtr>& witnesses,
                                   const TheoryProfile& profile = {},
                                   const Catalog& catalog = Catalog::standard());

// Depth-first check; reports the path to the first failing node.
CheckResult check_derivation(const Derivation& d,
                             const TheoryProfile& profile = {},
                             const Catalog& catalog = Catalog::standard());

// The paper's φ ⊢ φ: Reflexivity, weakening, a Substitution axiom with the
// identity context, and a Cut on φ=φ.
Derivation derive_identity(const TermPtr& phi,
                           const Catalog& catalog = Catalog::standard());

struct DerivationParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// (derivation (conclusion (seq (ante "t" ...) (succ "t" ...)))
//             (rule Name) (witness "t" ...)? (premises <derivation> ...)?)
Derivation parse_derivation(const std::string& text, const ParseEnv& env);
std::string serialize_derivation(const Derivation& d);

}  // namespace nabla
