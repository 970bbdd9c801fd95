#include "nabla/codes.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace nabla {

TruthCode TruthCode::ind(int index) {
  if (index < 1 || index > 254)
    throw std::invalid_argument("indeterminacy index out of range");
  return {static_cast<std::uint8_t>(index + 1)};
}

std::string code_name(TruthCode c) {
  if (c.is_true()) return "T";
  if (c.is_false()) return "F";
  return "i" + std::to_string(c.ind_index());
}

std::optional<TruthCode> code_from_name(const std::string& s) {
  if (s == "T") return TruthCode::det_true();
  if (s == "F") return TruthCode::det_false();
  if (s.size() >= 2 && s[0] == 'i') {
    int n = 0;
    for (size_t i = 1; i < s.size(); ++i) {
      if (!isdigit(static_cast<unsigned char>(s[i]))) return std::nullopt;
      n = n * 10 + (s[i] - '0');
      if (n > 254) return std::nullopt;
    }
    if (n >= 1) return TruthCode::ind(n);
  }
  return std::nullopt;
}

CodeSpace::CodeSpace(int indeterminacies) : k(indeterminacies) {
  if (k < 0 || k > 253) throw std::invalid_argument("code space size");
}

TruthCode CodeSpace::code(int index) const {
  if (index < 0 || index >= size()) throw std::out_of_range("code index");
  return {static_cast<std::uint8_t>(index)};
}

std::vector<TruthCode> CodeSpace::carrier() const {
  std::vector<TruthCode> out;
  out.reserve(size());
  for (int i = 0; i < size(); ++i) out.push_back(code(i));
  return out;
}

TruthCode neg_code(TruthCode c) {
  if (c.is_false()) return TruthCode::det_true();
  if (c.is_true()) return TruthCode::det_false();
  return c;
}

TruthCode conj_code(TruthCode a, TruthCode b) {
  if (a == b) return a;
  if (a.is_true()) return b;
  if (b.is_true()) return a;
  return TruthCode::det_false();
}

TruthCode eq_code(TruthCode a, TruthCode b) {
  return a == b ? TruthCode::det_true() : TruthCode::det_false();
}

TruthCode iff_code(TruthCode a, TruthCode b) {
  if (a == b) return TruthCode::det_true();
  if (a.is_true()) return b;
  if (b.is_true()) return a;
  if (a.is_false()) return neg_code(b);
  if (b.is_false()) return neg_code(a);
  return TruthCode::det_false();  // two distinct indeterminacies
}

TruthCode next_code(TruthCode c, const CodeSpace& space) {
  if (!space.contains(c)) throw std::invalid_argument("code outside carrier");
  if (c.is_true()) return c;
  // F -> i1 -> ... -> ik -> F
  int pos = c.raw;  // 1..k+1
  return pos == space.k + 1 ? TruthCode::det_false()
                            : TruthCode{static_cast<std::uint8_t>(pos + 1)};
}

TruthCode fold_universal(std::span<const TruthCode> values) {
  TruthCode acc = TruthCode::det_true();
  bool seen = false;
  for (TruthCode v : values) {
    if (v.is_true()) continue;
    if (!seen) {
      acc = v;
      seen = true;
    } else if (v != acc) {
      return TruthCode::det_false();
    }
  }
  return acc;
}

TruthCode fold_existential(std::span<const TruthCode> values) {
  TruthCode acc = TruthCode::det_false();
  bool seen = false;
  for (TruthCode v : values) {
    if (v.is_false()) continue;
    if (!seen) {
      acc = v;
      seen = true;
    } else if (v != acc) {
      return TruthCode::det_true();
    }
  }
  return acc;
}

namespace {

TruthCode disj2(TruthCode a, TruthCode b) {
  return neg_code(conj_code(neg_code(a), neg_code(b)));
}

TruthCode box1(TruthCode a) { return eq_code(a, TruthCode::det_true()); }

TruthCode bneg1(TruthCode a) { return neg_code(box1(a)); }

TruthCode limp2(TruthCode a, TruthCode b) { return disj2(bneg1(a), b); }

TruthCode imp2(TruthCode a, TruthCode b) { return iff_code(a, conj_code(a, b)); }

TruthCode det1(TruthCode a) { return box1(disj2(a, neg_code(a))); }

TruthCode excl2(TruthCode a, TruthCode b) { return imp2(a, neg_code(b)); }

struct ConnInfo {
  Conn conn;
  const char* name;
  int arity;
};

constexpr ConnInfo kConnInfo[] = {
    {Conn::Neg, "not", 1},    {Conn::Conj, "and", 2},  {Conn::Disj, "or", 2},
    {Conn::Nand, "nand", 2},  {Conn::Eq, "Eq", 2},     {Conn::Iff, "iff", 2},
    {Conn::Simp, "Simp", 2},  {Conn::Imp, "imp", 2},   {Conn::Box, "box", 1},
    {Conn::Bneg, "bnot", 1},  {Conn::Limp, "limp", 2}, {Conn::Liff, "liff", 2},
    {Conn::Qimp, "qimp", 2},  {Conn::Qiff, "qiff", 2}, {Conn::Det, "det", 1},
    {Conn::Ind, "ind", 1},    {Conn::Excl, "excl", 2}, {Conn::Bexcl, "bexcl", 2},
    {Conn::Next, "next", 1},
};

const ConnInfo& info(Conn c) {
  for (const auto& i : kConnInfo)
    if (i.conn == c) return i;
  throw std::logic_error("unknown connective");
}

}  // namespace

int conn_arity(Conn c) { return info(c).arity; }
const char* conn_name(Conn c) { return info(c).name; }

std::optional<Conn> conn_from_name(const std::string& s) {
  for (const auto& i : kConnInfo)
    if (s == i.name) return i.conn;
  return std::nullopt;
}

std::vector<Conn> all_connectives() {
  std::vector<Conn> out;
  for (const auto& i : kConnInfo) out.push_back(i.conn);
  return out;
}

TruthCode eval_connective(Conn c, std::span<const TruthCode> args,
                          const CodeSpace& space) {
  if (static_cast<int>(args.size()) != conn_arity(c))
    throw std::invalid_argument("connective arity mismatch");
  TruthCode a = args[0];
  TruthCode b = args.size() > 1 ? args[1] : a;
  switch (c) {
    case Conn::Neg: return neg_code(a);
    case Conn::Conj: return conj_code(a, b);
    case Conn::Disj: return disj2(a, b);
    case Conn::Nand: return neg_code(conj_code(a, b));
    case Conn::Eq: return eq_code(a, b);
    case Conn::Iff: return iff_code(a, b);
    case Conn::Simp: return eq_code(a, conj_code(a, b));
    case Conn::Imp: return imp2(a, b);
    case Conn::Box: return box1(a);
    case Conn::Bneg: return bneg1(a);
    case Conn::Limp: return limp2(a, b);
    case Conn::Liff: return conj_code(limp2(a, b), limp2(b, a));
    case Conn::Qimp: return disj2(neg_code(a), b);
    case Conn::Qiff:
      return conj_code(disj2(neg_code(a), b), disj2(neg_code(b), a));
    case Conn::Det: return det1(a);
    case Conn::Ind: return neg_code(det1(a));
    case Conn::Excl: return excl2(a, b);
    case Conn::Bexcl: return conj_code(excl2(a, b), excl2(b, a));
    case Conn::Next: return next_code(a, space);
  }
  throw std::logic_error("unknown connective");
}

std::vector<ClauseDisagreement> check_clause_coherence(int k) {
  CodeSpace space(k);
  std::vector<ClauseDisagreement> out;
  auto note = [&](Conn c, TruthCode a, TruthCode b, const std::string& d) {
    out.push_back({c, a, b, d});
  };
  for (TruthCode a : space.carrier()) {
    for (TruthCode b : space.carrier()) {
      // Conjunction clauses: a=b, a=T, b=T, default F.
      {
        std::vector<std::pair<std::string, TruthCode>> hits;
        if (a == b) hits.emplace_back("a=b", a);
        if (a.is_true()) hits.emplace_back("a=T", b);
        if (b.is_true()) hits.emplace_back("b=T", a);
        if (hits.empty()) hits.emplace_back("default", TruthCode::det_false());
        for (size_t i = 1; i < hits.size(); ++i)
          if (hits[i].second != hits[0].second)
            note(Conn::Conj, a, b,
                 hits[0].first + " gives " + code_name(hits[0].second) + ", " +
                     hits[i].first + " gives " + code_name(hits[i].second));
      }
      // Biimplication clauses: a=b, a=T, b=T, a=F, b=F, default F.
      {
        std::vector<std::pair<std::string, TruthCode>> hits;
        if (a == b) hits.emplace_back("a=b", TruthCode::det_true());
        if (a.is_true()) hits.emplace_back("a=T", b);
        if (b.is_true()) hits.emplace_back("b=T", a);
        if (a.is_false()) hits.emplace_back("a=F", neg_code(b));
        if (b.is_false()) hits.emplace_back("b=F", neg_code(a));
        if (hits.empty()) hits.emplace_back("default", TruthCode::det_false());
        for (size_t i = 1; i < hits.size(); ++i)
          if (hits[i].second != hits[0].second)
            note(Conn::Iff, a, b,
                 hits[0].first + " gives " + code_name(hits[0].second) + ", " +
                     hits[i].first + " gives " + code_name(hits[i].second));
      }
    }
  }
  return out;
}

CodeTable make_code_table(Conn c, const CodeSpace& space) {
  CodeTable t{c, space.k, {}};
  if (conn_arity(c) == 1) {
    for (TruthCode a : space.carrier()) {
      TruthCode args[] = {a};
      t.cells.push_back({eval_connective(c, args, space)});
    }
  } else {
    for (TruthCode a : space.carrier()) {
      std::vector<TruthCode> row;
      for (TruthCode b : space.carrier()) {
        TruthCode args[] = {a, b};
        row.push_back(eval_connective(c, args, space));
      }
      t.cells.push_back(std::move(row));
    }
  }
  return t;
}

std::string format_code_table(const CodeTable& t, bool tsv) {
  CodeSpace space(t.k);
  std::ostringstream os;
  const char* sep = tsv ? "\t" : "  ";
  auto cell = [&](const std::string& s) {
    if (tsv) {
      os << s;
    } else {
      os << s;
      for (size_t i = s.size(); i < 3; ++i) os << ' ';
    }
  };
  bool binary = conn_arity(t.conn) == 2;
  cell(conn_name(t.conn));
  if (binary)
    for (TruthCode b : space.carrier()) {
      os << sep;
      cell(code_name(b));
    }
  os << '\n';
  for (int r = 0; r < space.size(); ++r) {
    cell(code_name(space.code(r)));
    for (TruthCode v : t.cells[r]) {
      os << sep;
      cell(code_name(v));
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace nabla
