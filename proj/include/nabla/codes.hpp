#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace nabla {

// A truth code: determinate truth (T), determinate falsehood (F), or one of
// the indexed indeterminacies i1, i2, ...  The raw value doubles as the
// canonical enumeration index: 0 = T, 1 = F, 1+n = the n-th indeterminacy.
struct TruthCode {
  std::uint8_t raw = 0;

  static constexpr TruthCode det_true() { return {0}; }
  static constexpr TruthCode det_false() { return {1}; }
  static TruthCode ind(int index);  // index >= 1

  bool is_true() const { return raw == 0; }
  bool is_false() const { return raw == 1; }
  bool is_determinate() const { return raw <= 1; }
  bool is_indeterminate() const { return raw > 1; }
  int ind_index() const { return raw - 1; }  // valid when indeterminate

  friend bool operator==(TruthCode a, TruthCode b) { return a.raw == b.raw; }
  friend bool operator!=(TruthCode a, TruthCode b) { return a.raw != b.raw; }
  friend bool operator<(TruthCode a, TruthCode b) { return a.raw < b.raw; }
};

std::string code_name(TruthCode c);                    // "T", "F", "i1", ...
std::optional<TruthCode> code_from_name(const std::string& s);

// The carrier {T, F, i1, ..., ik}.  k = 0 is the classical space.
struct CodeSpace {
  int k = 2;

  explicit CodeSpace(int indeterminacies = 2);
  int size() const { return k + 2; }
  TruthCode code(int index) const;  // canonical order T, F, i1, ..., ik
  bool contains(TruthCode c) const { return c.raw < size(); }
  std::vector<TruthCode> carrier() const;
};

// Primitive clause-based operations.  All total on any carrier; only
// next_code depends on the space.
TruthCode neg_code(TruthCode c);
TruthCode conj_code(TruthCode a, TruthCode b);
TruthCode eq_code(TruthCode a, TruthCode b);
TruthCode iff_code(TruthCode a, TruthCode b);
TruthCode next_code(TruthCode c, const CodeSpace& space);

// Generalized conjunction: drop T; empty -> T, one survivor -> it, else F.
// Agrees with any iterated bracketing of the binary conjunction.
TruthCode fold_universal(std::span<const TruthCode> values);
// De Morgan dual of fold_universal (generalized disjunction).
TruthCode fold_existential(std::span<const TruthCode> values);

enum class Conn {
  Neg, Conj, Disj, Nand, Eq, Iff, Simp, Imp, Box, Bneg,
  Limp, Liff, Qimp, Qiff, Det, Ind, Excl, Bexcl, Next,
};

int conn_arity(Conn c);
const char* conn_name(Conn c);
std::optional<Conn> conn_from_name(const std::string& s);
std::vector<Conn> all_connectives();

// Evaluates any connective, the derived ones through their defining
// abbreviations over the primitive operations.
TruthCode eval_connective(Conn c, std::span<const TruthCode> args,
                          const CodeSpace& space);

// One disagreement found while cross-checking overlapping semantic clauses.
struct ClauseDisagreement {
  Conn conn;
  TruthCode a, b;
  std::string detail;
};

// For the clause-specified connectives (Conj, Iff), evaluates every pair in
// the carrier of the k-space and reports any input where two applicable
// clauses yield different results.
std::vector<ClauseDisagreement> check_clause_coherence(int k);

// Fixed-order truth table: rows/columns in canonical carrier order.  Unary
// connectives yield one column.
struct CodeTable {
  Conn conn;
  int k;
  std::vector<std::vector<TruthCode>> cells;  // cells[row][col]
};

CodeTable make_code_table(Conn c, const CodeSpace& space);
std::string format_code_table(const CodeTable& t, bool tsv = false);

}  // namespace nabla
