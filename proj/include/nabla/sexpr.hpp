#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace nabla {

// Minimal s-expressions: lists, bare atoms, and double-quoted strings
// (used to embed term and type syntax without escaping games).
struct SExpr {
  bool is_atom = false;
  std::string text;          // atom or string contents
  bool quoted = false;       // text came from a quoted string
  std::vector<SExpr> items;  // list contents

  const SExpr& at(size_t i) const;
  // First child list whose head atom is `tag`, or nullptr.
  const SExpr* child(const std::string& tag) const;
  std::vector<const SExpr*> children(const std::string& tag) const;
  bool headed(const std::string& tag) const;
};

struct SExprError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

SExpr parse_sexpr(const std::string& src);
std::string quote_string(const std::string& s);

}  // namespace nabla
