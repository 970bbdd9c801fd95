#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nabla/term.hpp"

namespace nabla {

// A definitional abbreviation.  `type_for` resolves the concrete type of an
// occurrence from the types of the syntactic arguments (empty for
// non-schematic entries); `expand` produces the one-step definition, which
// may itself use other abbreviations.
struct AbbrevDef {
  std::string name;
  int arity = 0;
  bool binder = false;      // parsed as `name x:T. body`
  bool prim_alias = false;  // expansion is a bare primitive; parse eagerly
  std::function<TypePtr(const std::vector<TypePtr>&)> type_for;
  std::function<TermPtr(const TypePtr& constType,
                        const std::vector<TermPtr>&)> expand;
};

class Catalog {
 public:
  // The connectives, quantifier sugar, numerals and the rest of the
  // standard abbreviation set.
  static const Catalog& standard();

  const AbbrevDef* find(const std::string& name) const;
  bool is_reserved(const std::string& name) const { return find(name) != nullptr; }

  void add(AbbrevDef def);
  void remove(const std::string& name) { defs_.erase(name); }
  // Defines `name` as a closed term (a lexicon-style combinator).
  void define(const std::string& name, TermPtr value);

  // Builds an occurrence `name arg...` with the type instance resolved.
  TermPtr make(const std::string& name, const std::vector<TermPtr>& args) const;
  // The Const node alone (requires enough args to resolve schematic types).
  TermPtr make_const(const std::string& name,
                     const std::vector<TypePtr>& argTypes) const;

  std::vector<std::string> names() const;

 private:
  std::map<std::string, AbbrevDef> defs_;
};

struct UnknownAbbrevError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class ExpandDepth { One, All };

// Rewrites abbreviation occurrences to their definitions.  With
// ExpandDepth::All the result contains only primitives, variables,
// applications and lambdas.
TermPtr expand_abbreviations(const TermPtr& t, const Catalog& catalog,
                             ExpandDepth depth = ExpandDepth::All);

bool contains_abbrev(const TermPtr& t, const Catalog& catalog);

}  // namespace nabla
