#pragma once

#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace nabla {

struct Type;
using TypePtr = std::shared_ptr<const Type>;

// Simple types: o | sort | arg > res.
struct Type {
  enum class Kind { O, Sort, Fun };
  Kind kind;
  std::string sort;     // Kind::Sort
  TypePtr arg, res;     // Kind::Fun

  static TypePtr o();
  static TypePtr make_sort(const std::string& name);
  static TypePtr fun(TypePtr arg, TypePtr res);
};

bool type_equal(const TypePtr& a, const TypePtr& b);
std::string type_to_string(const TypePtr& t);

// The logical primitives; everything else is a plain constant.
enum class Prim { None, D, Q, A, C, V, S, K };

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct TypeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Immutable, type-annotated term nodes.  Subterms are shared freely, so
// expansion of abbreviations produces compact DAGs.
struct Term {
  enum class Kind { Var, Const, App, Lam };
  Kind kind;
  std::string name;     // Var/Const: identifier; Lam: bound variable
  Prim prim = Prim::None;  // Const only
  TypePtr type;         // type of the whole term
  TermPtr fun, arg;     // App
  TermPtr body;         // Lam (type = varType > body->type)

  TypePtr var_type() const { return type->arg; }  // Lam

  static TermPtr var(const std::string& name, TypePtr type);
  static TermPtr constant(const std::string& name, TypePtr type,
                          Prim prim = Prim::None);
  static TermPtr app(TermPtr fun, TermPtr arg);  // throws TypeError
  static TermPtr lam(const std::string& var, TypePtr varType, TermPtr body);
};

// Convenience for primitive constants at a concrete type instance.
TermPtr prim_const(Prim p, const TypePtr& tau);
const char* prim_name(Prim p);

TypePtr type_of(const TermPtr& t);

std::set<std::string> free_vars(const TermPtr& t);
bool is_free_in(const std::string& name, const TermPtr& t);

bool alpha_equal(const TermPtr& a, const TermPtr& b);

// Capture-avoiding substitution of s for the free variable v.  Binders in t
// are renamed deterministically when needed.
TermPtr substitute(const TermPtr& t, const std::string& v, const TermPtr& s);

// Normal-order reduction to beta-normal form (terminates on well-typed terms).
TermPtr beta_normalize(const TermPtr& t);

// Application spine helpers.
TermPtr spine_head(const TermPtr& t);
std::vector<TermPtr> spine_args(const TermPtr& t);
TermPtr apply_spine(TermPtr head, const std::vector<TermPtr>& args);

}  // namespace nabla
