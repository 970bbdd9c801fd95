#include "nabla/entail.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include "nabla/models.hpp"
#include "nabla/parse.hpp"

namespace nabla {

namespace {

bool is_nonlogical_const(const TermPtr& t) {
  return t->kind == Term::Kind::Const && t->prim == Prim::None &&
         !native_const(t);
}

// An application of a non-logical constant to non-logical constant
// arguments, at type o: opaque to the sweep, so it counts as one atom.
bool is_atom_app(const TermPtr& t) {
  if (t->kind != Term::Kind::App || t->type->kind != Type::Kind::O)
    return false;
  TermPtr head = spine_head(t);
  if (!is_nonlogical_const(head)) return false;
  for (const auto& a : spine_args(t))
    if (!is_nonlogical_const(a)) return false;
  return true;
}

bool is_atom_term(const TermPtr& t, const std::set<std::string>& boundVars) {
  if (t->type->kind != Type::Kind::O) return false;
  if (is_nonlogical_const(t)) return true;
  if (t->kind == Term::Kind::Var && !boundVars.count(t->name)) return true;
  return is_atom_app(t);
}

struct AtomScan {
  std::vector<TermPtr> atoms;
  std::vector<std::string> names;
  std::set<std::string> seen;
  std::vector<std::string> boundStack;

  std::set<std::string> bound_set() const {
    return {boundStack.begin(), boundStack.end()};
  }

  void scan(const TermPtr& t) {
    auto bound = bound_set();
    if (is_atom_term(t, bound)) {
      std::string name = print_term(t);
      if (seen.insert(name).second) {
        atoms.push_back(t);
        names.push_back(name);
      }
      return;
    }
    switch (t->kind) {
      case Term::Kind::Var:
        if (!bound.count(t->name))
          throw EntailError("free variable of non-formula type in query: " +
                            t->name + " : " + type_to_string(t->type));
        return;
      case Term::Kind::Const:
        return;
      case Term::Kind::App:
        scan(t->fun);
        scan(t->arg);
        return;
      case Term::Kind::Lam:
        boundStack.push_back(t->name);
        scan(t->body);
        boundStack.pop_back();
        return;
    }
  }
};

// Replaces every atom occurrence by a placeholder variable %i so the sweep
// can bind it directly.
struct Abstracter {
  const std::vector<TermPtr>& atoms;
  const std::set<std::string>& atomNames;  // keys as printed
  std::vector<std::string> boundStack;

  TermPtr rewrite(const TermPtr& t) {
    std::set<std::string> bound(boundStack.begin(), boundStack.end());
    if (is_atom_term(t, bound)) {
      std::string name = print_term(t);
      for (size_t i = 0; i < atoms.size(); ++i)
        if (print_term(atoms[i]) == name)
          return Term::var("%" + std::to_string(i), Type::o());
      return t;  // unreachable when atoms cover the term
    }
    switch (t->kind) {
      case Term::Kind::Var:
      case Term::Kind::Const:
        return t;
      case Term::Kind::App: {
        TermPtr f = rewrite(t->fun), a = rewrite(t->arg);
        if (f == t->fun && a == t->arg) return t;
        return Term::app(f, a);
      }
      case Term::Kind::Lam: {
        boundStack.push_back(t->name);
        TermPtr b = rewrite(t->body);
        boundStack.pop_back();
        if (b == t->body) return t;
        return Term::lam(t->name, t->var_type(), b);
      }
    }
    return t;
  }
};

// Straight-line code over truth codes; one instruction per register.
struct Instr {
  enum class Op { Load, Lit, App1, App2, Fold } op;
  int atom = 0;           // Load: swept atom index
  TruthCode lit{};        // Lit
  Conn conn{};            // App1/App2
  int a = 0, b = 0;       // operand registers
  std::vector<int> list;  // Fold: generalized conjunction
};

struct CompileFail {};

// Compiles an abstracted formula to instructions.  Type-o quantifiers are
// unrolled over the carrier, closed subterms are interpreted once at compile
// time; anything else beyond the propositional fragment falls back to the
// model interpreter.
struct Compiler {
  const CodeSpace& sp;
  const Model& interpModel;
  std::vector<Instr> code;
  std::vector<std::optional<TruthCode>> known;  // compile-time constants
  std::map<std::pair<const Term*, std::uint64_t>, int> memo;
  std::map<std::string, std::vector<TruthCode>> bound;
  std::uint64_t stamp = 0, nextStamp = 0;
  std::map<const Term*, std::shared_ptr<const std::set<std::string>>> fvs;

  Compiler(const CodeSpace& space, const Model& m)
      : sp(space), interpModel(m) {}

  const std::set<std::string>& free_of(const TermPtr& t) {
    auto it = fvs.find(t.get());
    if (it != fvs.end()) return *it->second;
    std::shared_ptr<const std::set<std::string>> r;
    switch (t->kind) {
      case Term::Kind::Var:
        r = std::make_shared<std::set<std::string>>(
            std::set<std::string>{t->name});
        break;
      case Term::Kind::Const:
        r = std::make_shared<std::set<std::string>>();
        break;
      case Term::Kind::App: {
        const auto& a = free_of(t->fun);
        const auto& b = free_of(t->arg);
        if (b.empty()) {
          r = fvs.at(t->fun.get());
        } else if (a.empty()) {
          r = fvs.at(t->arg.get());
        } else {
          auto s = std::make_shared<std::set<std::string>>(a);
          s->insert(b.begin(), b.end());
          r = s;
        }
        break;
      }
      case Term::Kind::Lam: {
        const auto& b = free_of(t->body);
        if (!b.count(t->name)) {
          r = fvs.at(t->body.get());
        } else {
          auto s = std::make_shared<std::set<std::string>>(b);
          s->erase(t->name);
          r = s;
        }
        break;
      }
    }
    return *fvs.emplace(t.get(), std::move(r)).first->second;
  }

  int lit(TruthCode c) {
    Instr in{Instr::Op::Lit};
    in.lit = c;
    code.push_back(in);
    known.push_back(c);
    return static_cast<int>(code.size()) - 1;
  }

  int emit(Instr in) {
    code.push_back(std::move(in));
    known.push_back(std::nullopt);
    return static_cast<int>(code.size()) - 1;
  }

  int apply_conn(Conn c, const std::vector<int>& ops) {
    bool allKnown = true;
    std::vector<TruthCode> vals;
    for (int r : ops) {
      if (!known[r]) { allKnown = false; break; }
      vals.push_back(*known[r]);
    }
    if (allKnown) return lit(eval_connective(c, vals, sp));
    Instr in{ops.size() == 1 ? Instr::Op::App1 : Instr::Op::App2};
    in.conn = c;
    in.a = ops[0];
    if (ops.size() == 2) in.b = ops[1];
    return emit(in);
  }

  int compile(const TermPtr& t) {
    bool closed = free_of(t).empty();
    auto key = std::make_pair(t.get(), closed ? 0 : stamp);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    int r;
    try {
      r = build(t);
    } catch (const CompileFail&) {
      if (!closed || t->type->kind != Type::Kind::O) throw;
      try {
        ValuePtr v = interpret_term(t, interpModel);
        if (v->kind != Value::Kind::Code) throw CompileFail{};
        r = lit(v->code);
      } catch (const ModelError&) {
        throw CompileFail{};
      }
    }
    memo[key] = r;
    return r;
  }

  int build(const TermPtr& t) {
    switch (t->kind) {
      case Term::Kind::Var: {
        auto it = bound.find(t->name);
        if (it != bound.end() && !it->second.empty())
          return lit(it->second.back());
        if (t->name.size() > 1 && t->name[0] == '%') {
          Instr in{Instr::Op::Load};
          in.atom = std::stoi(t->name.substr(1));
          return emit(in);
        }
        throw CompileFail{};
      }
      case Term::Kind::Const: {
        if (t->prim == Prim::None && t->type->kind == Type::Kind::O)
          if (auto steps = numeral_steps(t->name))
            return lit(numeral_code(*steps, sp));
        throw CompileFail{};
      }
      case Term::Kind::App: {
        TermPtr head = spine_head(t);
        std::vector<TermPtr> args = spine_args(t);
        if (head->kind != Term::Kind::Const) throw CompileFail{};
        std::optional<Conn> conn;
        if (head->prim == Prim::None) {
          conn = conn_from_name(head->name);
          if (!conn || !native_const(head)) throw CompileFail{};
        } else if (head->prim == Prim::D) {
          conn = Conn::Nand;
        } else if (head->prim == Prim::V) {
          conn = Conn::Next;
        } else if (head->prim == Prim::Q) {
          conn = Conn::Eq;
        } else if (head->prim == Prim::A) {
          return quantifier(t, args);
        } else {
          throw CompileFail{};
        }
        if (static_cast<int>(args.size()) != conn_arity(*conn))
          throw CompileFail{};
        std::vector<int> ops;
        for (const auto& a : args) {
          if (a->type->kind != Type::Kind::O) throw CompileFail{};
          ops.push_back(compile(a));
        }
        return apply_conn(*conn, ops);
      }
      case Term::Kind::Lam:
        throw CompileFail{};
    }
    throw CompileFail{};
  }

  // A (λx:o. body): unroll the generalized conjunction over the carrier.
  int quantifier(const TermPtr&, const std::vector<TermPtr>& args) {
    if (args.size() != 1 || args[0]->kind != Term::Kind::Lam ||
        args[0]->var_type()->kind != Type::Kind::O)
      throw CompileFail{};
    const TermPtr& lam = args[0];
    std::vector<int> ops;
    for (TruthCode c : sp.carrier()) {
      bound[lam->name].push_back(c);
      std::uint64_t saved = stamp;
      stamp = ++nextStamp;
      ops.push_back(compile(lam->body));
      stamp = saved;
      bound[lam->name].pop_back();
    }
    bool allKnown = true;
    std::vector<TruthCode> vals;
    for (int r : ops) {
      if (!known[r]) { allKnown = false; break; }
      vals.push_back(*known[r]);
    }
    if (allKnown) return lit(fold_universal(vals));
    Instr in{Instr::Op::Fold};
    in.list = ops;
    return emit(in);
  }
};

// A prepared query: atoms, their domains, and one evaluator per formula.
struct Prep {
  int k;
  CodeSpace sp{2};
  std::vector<TermPtr> atoms;
  std::vector<std::string> atomNames;
  std::vector<std::vector<TruthCode>> domains;
  std::vector<TermPtr> abstractedAnte, abstractedSucc;
  // Fast path: one instruction stream, output registers per formula.
  bool compiled = false;
  std::vector<Instr> code;
  std::vector<int> anteOut, succOut;
  Model fallbackModel = code_model(2);

  std::uint64_t total(std::uint64_t budget) const {
    std::uint64_t n = 1;
    for (const auto& d : domains) {
      if (d.empty()) throw EntailError("empty domain for a swept atom");
      n *= d.size();
      if (n > budget)
        throw BudgetExceeded("sweep size exceeds budget of " +
                             std::to_string(budget));
    }
    return n;
  }

  void decode(std::uint64_t idx, std::vector<TruthCode>& out) const {
    out.resize(domains.size());
    for (size_t i = domains.size(); i-- > 0;) {
      out[i] = domains[i][idx % domains[i].size()];
      idx /= domains[i].size();
    }
  }

  void eval(const std::vector<TruthCode>& assignment,
            std::vector<TruthCode>& anteVals,
            std::vector<TruthCode>& succVals,
            std::vector<TruthCode>& regs) const {
    if (compiled) {
      regs.resize(code.size());
      for (size_t i = 0; i < code.size(); ++i) {
        const Instr& in = code[i];
        switch (in.op) {
          case Instr::Op::Lit: regs[i] = in.lit; break;
          case Instr::Op::Load: regs[i] = assignment[in.atom]; break;
          case Instr::Op::App1: {
            TruthCode ops[1] = {regs[in.a]};
            regs[i] = eval_connective(in.conn, ops, sp);
            break;
          }
          case Instr::Op::App2: {
            TruthCode ops[2] = {regs[in.a], regs[in.b]};
            regs[i] = eval_connective(in.conn, ops, sp);
            break;
          }
          case Instr::Op::Fold: {
            std::vector<TruthCode> vals;
            vals.reserve(in.list.size());
            for (int r : in.list) vals.push_back(regs[r]);
            regs[i] = fold_universal(vals);
            break;
          }
        }
      }
      anteVals.clear();
      succVals.clear();
      for (int r : anteOut) anteVals.push_back(regs[r]);
      for (int r : succOut) succVals.push_back(regs[r]);
      return;
    }
    std::map<std::string, ValuePtr> env;
    for (size_t i = 0; i < assignment.size(); ++i)
      env["%" + std::to_string(i)] = Value::make_code(assignment[i]);
    anteVals.clear();
    succVals.clear();
    auto run = [&](const TermPtr& t) {
      ValuePtr v = interpret_term(t, fallbackModel, env);
      if (v->kind != Value::Kind::Code)
        throw EntailError("formula did not evaluate to a truth code");
      return v->code;
    };
    for (const auto& t : abstractedAnte) anteVals.push_back(run(t));
    for (const auto& t : abstractedSucc) succVals.push_back(run(t));
  }

  TruthCode implication(const std::vector<TruthCode>& assignment,
                        std::vector<TruthCode>& anteVals,
                        std::vector<TruthCode>& succVals,
                        std::vector<TruthCode>& regs) const {
    eval(assignment, anteVals, succVals, regs);
    TruthCode ab[2] = {fold_universal(anteVals), fold_existential(succVals)};
    return eval_connective(Conn::Imp, ab, sp);
  }
};

Prep prepare(const EntailQuery& q) {
  if (q.succedents.empty())
    throw EntailError("entailment query needs at least one succedent");
  if (q.k < 0) throw EntailError("negative code count");
  const Catalog& cat = *q.catalog;
  Prep p;
  p.k = q.k;
  p.sp = CodeSpace(q.k);
  p.fallbackModel = code_model(q.k);

  std::vector<TermPtr> normAnte, normSucc;
  AtomScan scan;
  auto norm = [&](const TermPtr& t) {
    if (t->type->kind != Type::Kind::O)
      throw EntailError("query formula is not of type o: " + print_term(t));
    TermPtr n = beta_normalize(expand_semantic(t, cat));
    scan.scan(n);
    return n;
  };
  for (const auto& t : q.antecedents) normAnte.push_back(norm(t));
  for (const auto& t : q.succedents) normSucc.push_back(norm(t));
  p.atoms = scan.atoms;
  p.atomNames = scan.names;

  for (const auto& [name, _] : q.fixedBindings)
    if (!scan.seen.count(name))
      throw EntailError("fixed binding for unknown atom: " + name);
  for (const auto& [name, _] : q.atomDomains)
    if (!scan.seen.count(name))
      throw EntailError("domain for unknown atom: " + name);

  for (size_t i = 0; i < p.atoms.size(); ++i) {
    const std::string& name = p.atomNames[i];
    auto fixed = q.fixedBindings.find(name);
    if (fixed != q.fixedBindings.end()) {
      if (!p.sp.contains(fixed->second))
        throw EntailError("fixed value outside carrier for atom " + name);
      p.domains.push_back({fixed->second});
      continue;
    }
    auto dom = q.atomDomains.find(name);
    if (dom != q.atomDomains.end()) {
      for (TruthCode c : dom->second)
        if (!p.sp.contains(c))
          throw EntailError("domain value outside carrier for atom " + name);
      p.domains.push_back(dom->second);
      continue;
    }
    p.domains.push_back(p.sp.carrier());
  }

  Abstracter abs{p.atoms, scan.seen, {}};
  for (const auto& t : normAnte) p.abstractedAnte.push_back(abs.rewrite(t));
  for (const auto& t : normSucc) p.abstractedSucc.push_back(abs.rewrite(t));

  try {
    Compiler c(p.sp, p.fallbackModel);
    std::vector<int> anteOut, succOut;
    for (const auto& t : p.abstractedAnte) anteOut.push_back(c.compile(t));
    for (const auto& t : p.abstractedSucc) succOut.push_back(c.compile(t));
    p.code = std::move(c.code);
    p.anteOut = std::move(anteOut);
    p.succOut = std::move(succOut);
    p.compiled = true;
  } catch (const CompileFail&) {
    p.compiled = false;  // interpreter fallback per assignment
  }
  return p;
}

Verdict sweep(const Prep& p, const EntailQuery& q) {
  std::uint64_t total = p.total(q.budget);
  Verdict v;
  v.atoms = p.atomNames;
  v.heuristicComplete = q.k >= static_cast<int>(p.atoms.size());

  auto scan_range = [&](std::uint64_t lo, std::uint64_t hi,
                        std::atomic<std::uint64_t>& best) {
    std::vector<TruthCode> assignment, anteVals, succVals, regs;
    for (std::uint64_t i = lo; i < hi; ++i) {
      if ((i & 0x3ff) == 0 && best.load(std::memory_order_relaxed) < lo) return;
      p.decode(i, assignment);
      TruthCode r = p.implication(assignment, anteVals, succVals, regs);
      if (!r.is_true()) {
        std::uint64_t cur = best.load(std::memory_order_relaxed);
        while (i < cur &&
               !best.compare_exchange_weak(cur, i, std::memory_order_relaxed)) {
        }
        return;
      }
    }
  };

  std::atomic<std::uint64_t> best{~std::uint64_t{0}};
  int threads = std::max(1, q.threads);
  if (threads == 1 || total < 1024) {
    scan_range(0, total, best);
  } else {
    std::vector<std::thread> pool;
    std::uint64_t chunk = (total + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
      std::uint64_t lo = std::min<std::uint64_t>(t * chunk, total);
      std::uint64_t hi = std::min<std::uint64_t>(lo + chunk, total);
      pool.emplace_back([&, lo, hi] { scan_range(lo, hi, best); });
    }
    for (auto& t : pool) t.join();
  }

  std::uint64_t fail = best.load();
  if (fail == ~std::uint64_t{0}) {
    v.status = EntailStatus::Entailed;
    v.sweptCount = total;
  } else {
    v.status = EntailStatus::NotEntailed;
    v.sweptCount = fail + 1;
    std::vector<TruthCode> assignment;
    p.decode(fail, assignment);
    for (size_t i = 0; i < assignment.size(); ++i)
      v.countermodel.emplace_back(p.atomNames[i], assignment[i]);
  }
  return v;
}

}  // namespace

std::vector<TermPtr> atoms_of(const TermPtr& t, const Catalog& catalog) {
  return atoms_of_all({t}, catalog);
}

std::vector<TermPtr> atoms_of_all(const std::vector<TermPtr>& ts,
                                  const Catalog& catalog) {
  AtomScan scan;
  for (const auto& t : ts) {
    if (t->type->kind != Type::Kind::O)
      throw EntailError("query formula is not of type o: " + print_term(t));
    scan.scan(beta_normalize(expand_semantic(t, catalog)));
  }
  return scan.atoms;
}

Verdict check_entailment(const EntailQuery& q) {
  return sweep(prepare(q), q);
}

Verdict check_validity(const TermPtr& t, int k, const Catalog& catalog) {
  EntailQuery q;
  q.succedents = {t};
  q.k = k;
  q.catalog = &catalog;
  return check_entailment(q);
}

bool verify_countermodel(const std::map<std::string, TruthCode>& assignment,
                         const EntailQuery& q) {
  Prep p = prepare(q);
  std::vector<TruthCode> values;
  for (const auto& name : p.atomNames) {
    auto it = assignment.find(name);
    if (it == assignment.end()) {
      auto fixed = q.fixedBindings.find(name);
      if (fixed == q.fixedBindings.end())
        throw EntailError("countermodel misses atom " + name);
      values.push_back(fixed->second);
    } else {
      values.push_back(it->second);
    }
  }
  std::vector<TruthCode> anteVals, succVals, regs;
  return !p.implication(values, anteVals, succVals, regs).is_true();
}

TruthCode eval_formula(const TermPtr& t,
                       const std::map<std::string, TruthCode>& assignment,
                       int k, const Catalog& catalog) {
  EntailQuery q;
  q.succedents = {t};
  q.k = k;
  q.catalog = &catalog;
  Prep p = prepare(q);
  std::vector<TruthCode> values;
  for (const auto& name : p.atomNames) {
    auto it = assignment.find(name);
    if (it == assignment.end())
      throw EntailError("assignment misses atom " + name);
    values.push_back(it->second);
  }
  std::vector<TruthCode> anteVals, succVals, regs;
  p.eval(values, anteVals, succVals, regs);
  return succVals[0];
}

std::vector<TableRow> make_table(const std::vector<TermPtr>& formulas,
                                 const std::vector<std::string>& sweepAtoms,
                                 const std::map<std::string, TruthCode>& fixed,
                                 int k, const Catalog& catalog) {
  EntailQuery q;
  q.succedents = formulas;
  q.k = k;
  q.catalog = &catalog;
  Prep p = prepare(q);

  std::vector<size_t> sweepIdx;
  for (const auto& name : sweepAtoms) {
    auto it = std::find(p.atomNames.begin(), p.atomNames.end(), name);
    if (it == p.atomNames.end())
      throw EntailError("table atom not present in the formulas: " + name);
    sweepIdx.push_back(it - p.atomNames.begin());
  }
  std::vector<TruthCode> base(p.atomNames.size());
  for (size_t i = 0; i < p.atomNames.size(); ++i) {
    if (std::find(sweepIdx.begin(), sweepIdx.end(), i) != sweepIdx.end())
      continue;
    auto it = fixed.find(p.atomNames[i]);
    if (it == fixed.end())
      throw EntailError("atom neither swept nor fixed: " + p.atomNames[i]);
    base[i] = it->second;
  }

  CodeSpace sp(k);
  std::uint64_t rows = 1;
  for (size_t i = 0; i < sweepIdx.size(); ++i) {
    rows *= sp.size();
    if (rows > (std::uint64_t{1} << 24))
      throw BudgetExceeded("table too large");
  }
  std::vector<TableRow> out;
  std::vector<TruthCode> anteVals, succVals, regs;
  for (std::uint64_t r = 0; r < rows; ++r) {
    TableRow row;
    std::uint64_t idx = r;
    row.atomValues.resize(sweepIdx.size());
    for (size_t i = sweepIdx.size(); i-- > 0;) {
      row.atomValues[i] = sp.code(idx % sp.size());
      idx /= sp.size();
    }
    std::vector<TruthCode> values = base;
    for (size_t i = 0; i < sweepIdx.size(); ++i)
      values[sweepIdx[i]] = row.atomValues[i];
    p.eval(values, anteVals, succVals, regs);
    row.formulaValues = succVals;
    out.push_back(std::move(row));
  }
  return out;
}

std::string format_table(const std::vector<std::string>& atomHeaders,
                         const std::vector<std::string>& formulaHeaders,
                         const std::vector<TableRow>& rows, bool tsv) {
  std::vector<std::string> headers = atomHeaders;
  headers.insert(headers.end(), formulaHeaders.begin(), formulaHeaders.end());
  std::vector<std::vector<std::string>> cells;
  for (const auto& r : rows) {
    std::vector<std::string> line;
    for (TruthCode c : r.atomValues) line.push_back(code_name(c));
    for (TruthCode c : r.formulaValues) line.push_back(code_name(c));
    cells.push_back(std::move(line));
  }
  std::ostringstream out;
  if (tsv) {
    for (size_t i = 0; i < headers.size(); ++i)
      out << (i ? "\t" : "") << headers[i];
    out << "\n";
    for (const auto& line : cells) {
      for (size_t i = 0; i < line.size(); ++i)
        out << (i ? "\t" : "") << line[i];
      out << "\n";
    }
    return out.str();
  }
  std::vector<size_t> width(headers.size());
  for (size_t i = 0; i < headers.size(); ++i) width[i] = headers[i].size();
  for (const auto& line : cells)
    for (size_t i = 0; i < line.size(); ++i)
      width[i] = std::max(width[i], line[i].size());
  auto emit = [&](const std::vector<std::string>& line) {
    for (size_t i = 0; i < line.size(); ++i) {
      if (i) out << "  ";
      out << line[i] << std::string(width[i] - line[i].size(), ' ');
    }
    out << "\n";
  };
  emit(headers);
  for (const auto& line : cells) emit(line);
  return out.str();
}

std::string format_verdict(const Verdict& v, int k) {
  std::ostringstream out;
  if (v.status == EntailStatus::Entailed) {
    out << "ENTAILED k=" << k << " swept=" << v.sweptCount;
    if (v.heuristicComplete) out << " heuristic-complete";
    out << "\n";
  } else {
    out << "NOT-ENTAILED k=" << k << "\n";
    for (const auto& [name, code] : v.countermodel)
      out << name << "=" << code_name(code) << "\n";
  }
  return out.str();
}

}  // namespace nabla
