#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nabla/catalog.hpp"
#include "nabla/codes.hpp"
#include "nabla/term.hpp"

namespace nabla {

struct Value;
using ValuePtr = std::shared_ptr<const Value>;

// A denotation in the finite full universe.  Function values are explicit
// graphs over the canonical enumeration of the argument carrier; the logical
// primitives and the S/K combinators stay symbolic until they are compared
// or enumerated, since materializing them can be astronomically large.
struct Value {
  enum class Kind { Code, Sort, Func, Closure };
  Kind kind;
  TypePtr type;
  TruthCode code;               // Kind::Code
  std::uint64_t elem = 0;       // Kind::Sort: index into the sort carrier
  std::vector<ValuePtr> graph;  // Kind::Func: results in canonical arg order
  Prim prim = Prim::None;       // Kind::Closure
  std::optional<Conn> conn;     // Kind::Closure: a connective, not a primitive
  std::vector<ValuePtr> args;   // Kind::Closure: collected arguments

  static ValuePtr make_code(TruthCode c);
  static ValuePtr sort_elem(TypePtr sort, std::uint64_t idx);
  static ValuePtr func(TypePtr type, std::vector<ValuePtr> graph);
  static ValuePtr closure(Prim p, TypePtr type, std::vector<ValuePtr> args);
  static ValuePtr conn_closure(Conn c, TypePtr type, std::vector<ValuePtr> args);
};

struct ModelError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when a carrier would have to be enumerated past the guard.
struct CarrierTooLarge : ModelError {
  using ModelError::ModelError;
};

// Carrier arithmetic for one choice of k and sort sizes.
class Universe {
 public:
  explicit Universe(int k, std::map<std::string, int> sortSizes = {},
                    std::uint64_t maxCarrier = 1u << 22);

  const CodeSpace& space() const { return space_; }
  int sort_size(const std::string& name) const;

  std::uint64_t carrier_size(const TypePtr& t) const;  // throws CarrierTooLarge
  ValuePtr value_at(const TypePtr& t, std::uint64_t idx) const;
  std::uint64_t index_of(const ValuePtr& v) const;

  ValuePtr apply(const ValuePtr& f, const ValuePtr& a) const;
  bool value_equal(const ValuePtr& a, const ValuePtr& b) const;
  // Explicit graph form of a closure (identity on other kinds).
  ValuePtr materialize(const ValuePtr& v) const;

  // First element of the carrier satisfying the predicate with T, else the
  // first element outright.
  ValuePtr canonical_choice(const ValuePtr& pred) const;

  std::string describe(const ValuePtr& v) const;

 private:
  CodeSpace space_;
  std::map<std::string, int> sorts_;
  std::uint64_t maxCarrier_;
};

// A finite interpretation: the code space plus sort sizes and values for the
// non-logical constants.
struct Model {
  int k = 2;
  std::vector<std::pair<std::string, int>> sorts;  // declaration order
  std::map<std::string, TypePtr> constTypes;
  std::map<std::string, ValuePtr> consts;

  Universe universe(std::uint64_t maxCarrier = 1u << 22) const;
};

// The pure model over the truth codes alone.
Model code_model(int k);

// Expands abbreviations except those the evaluator handles natively
// (connectives and the closed truth-code constants); keeps terms small.
TermPtr expand_semantic(const TermPtr& t, const Catalog& catalog);

// Native constants: the closed truth-code abbreviations (True, 0, dag, ...)
// and the connective names at all-o types, which the evaluators resolve
// without expansion.  numeral_steps gives -1 for T, else the ∂-iteration
// count from F.
std::optional<int> numeral_steps(const std::string& name);
TruthCode numeral_code(int steps, const CodeSpace& space);
bool conn_type_matches(Conn c, const TypePtr& t);
bool native_const(const TermPtr& t);

// Evaluates a term (abbreviations expanded through `catalog`) under the
// model and an assignment for its free variables.
ValuePtr interpret_term(const TermPtr& t, const Model& model,
                        const std::map<std::string, ValuePtr>& varEnv = {},
                        const Catalog& catalog = Catalog::standard());

// Theory profiles: which axiom schemes beyond the base set are in force.
enum class Profile { Base, Omega, Delta, Dag, Ddag };
const char* profile_name(Profile p);
std::optional<Profile> profile_from_name(const std::string& s);

// One axiom scheme of a profile: its variables (at representative types;
// Choice repeats per declared sort) and the open formula.
struct AxiomScheme {
  std::string name;
  std::vector<std::pair<std::string, TypePtr>> vars;
  TermPtr formula;
};

std::vector<AxiomScheme> profile_schemes(Profile p, const Model& model);

struct AxiomResult {
  std::string axiom;
  bool holds = false;
  std::string witness;  // failing assignment, empty when the axiom holds
};

// Evaluates every axiom scheme of the profile over the model, sweeping the
// scheme variables across the carriers.
std::vector<AxiomResult> check_axiom_profile(const Model& model, Profile p);

// Model files:
//   (model (codes 2)
//          (sort w 3)
//          (const a "o" T)
//          (const f "o>o" (func F T i1 i2))
//          (const c "w" (elem 1)))
Model parse_model(const std::string& src);
std::string serialize_model(const Model& m);

}  // namespace nabla
