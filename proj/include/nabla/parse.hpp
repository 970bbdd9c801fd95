#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "nabla/catalog.hpp"
#include "nabla/term.hpp"

namespace nabla {

struct ParseError : std::runtime_error {
  size_t pos;
  ParseError(const std::string& msg, size_t pos)
      : std::runtime_error(msg + " (at offset " + std::to_string(pos) + ")"),
        pos(pos) {}
};

// Names in scope while parsing.  Catalog names are reserved and shadow
// everything; bound variables shadow constants; the raw primitive names
// (D, Q, A, C, V, S, K) are a fallback of last resort.
struct ParseEnv {
  std::set<std::string> sorts;
  std::map<std::string, TypePtr> consts;
  std::map<std::string, TypePtr> vars;  // declared free variables
  const Catalog* catalog = &Catalog::standard();
};

// type ::= atom ('>' type)?   atom ::= 'o' | sort | '(' type ')'
TypePtr parse_type(const std::string& src, const ParseEnv& env);

// term ::= '\' x ':' type '.' term
//        | binder x ':' type '.' term
//        | atom+                        (application, left-associative)
// atom ::= '(' term ')' | ident
// Schematic primitives take an optional instantiation: Q@tau, A@tau, C@tau,
// S@(a,b,c), K@(a,b); bare Q/A/C default to tau = o.
TermPtr parse_term(const std::string& src, const ParseEnv& env);

// Minimal-parenthesis printer; inverse of parse_term up to alpha-equality.
// Primitive spines print through their sugar (Eq, sing, sel, nand, next,
// forall, eps) so output stays readable and reparsable.
std::string print_term(const TermPtr& t);

// Replaces subterms matching the expansion of a closed catalog entry by the
// abbreviation itself (True, False, numerals, named sets).
TermPtr fold_abbreviations(const TermPtr& t, const Catalog& catalog);

}  // namespace nabla
