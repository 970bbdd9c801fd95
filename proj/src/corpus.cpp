#include "nabla/corpus.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace nabla {

namespace {

TermPtr conj_all(const std::vector<TermPtr>& ts, const Catalog& cat) {
  TermPtr out = ts.at(0);
  for (size_t i = 1; i < ts.size(); ++i) out = cat.make("and", {out, ts[i]});
  return out;
}

const char* exclusion_rule(ExclusionRule excl) {
  switch (excl) {
    case ExclusionRule::Boxed: return "box (bexcl (D1 x) (D2 x))";
    case ExclusionRule::Unboxed: return "bexcl (D1 x) (D2 x)";
    case ExclusionRule::Sheffer: return "box (nand (D1 x) (D2 x))";
    case ExclusionRule::Combined:
      return "box (or (bexcl (D1 x) (D2 x)) (nand (D1 x) (D2 x)))";
  }
  return "";
}

std::map<std::string, TruthCode> boxed_for(
    const std::map<std::string, TruthCode>& boxed, char individual) {
  std::map<std::string, TruthCode> out;
  for (const auto& [name, code] : boxed)
    if (name.back() == individual) out[name] = code;
  return out;
}

struct GoalSpec {
  const char* text;
  bool expectEntailed;
};

constexpr GoalSpec kGoals[] = {
    {"D1 J", true},         {"not (D1 J)", true}, {"not (D1 M)", true},
    {"D1 M", false},        {"D2 J", true},       {"not (D2 J)", true},
    {"D2 M", true},         {"not (D2 M)", false},
};

Verdict goal_verdict(const CaseStudy& cs, const std::string& goal, int k,
                     bool fixSymptoms, int threads) {
  EntailQuery q;
  q.antecedents = {cs.pi};
  q.succedents = {parse_term(goal, cs.env)};
  q.k = k;
  q.threads = threads;
  if (fixSymptoms) q.fixedBindings = cs.boxed;
  return check_entailment(q);
}

std::string code_str(TruthCode c) { return code_name(c); }

}  // namespace

CaseStudy make_case_study(ExclusionRule excl) {
  CaseStudy cs;
  TypePtr o = Type::o();
  TypePtr oo = Type::fun(o, o);
  for (const char* n : {"S1", "S2", "S3", "S4", "D1", "D2"})
    cs.env.consts[n] = oo;
  cs.env.consts["J"] = o;
  cs.env.consts["M"] = o;

  ParseEnv open = cs.env;
  open.vars["x"] = o;
  const std::vector<std::string> ruleSrc = {
      "imp (and (S1 x) (S2 x)) (D1 x)",
      "imp (and (S1 x) (S3 x)) (D2 x)",
      exclusion_rule(excl),
      "imp (and (S1 x) (S4 x)) (D1 x)",
      "imp (and (not (S1 x)) (S3 x)) (D2 x)",
  };
  for (const char* who : {"J", "M"}) {
    TermPtr ind = Term::constant(who, o);
    auto& rules = *who == 'J' ? cs.rulesJ : cs.rulesM;
    for (const auto& src : ruleSrc)
      rules.push_back(substitute(parse_term(src, open), "x", ind));
  }
  for (const char* src : {"box (S1 J)", "box (not (S2 J))", "box (S3 J)",
                          "box (S4 J)"})
    cs.factsJ.push_back(parse_term(src, cs.env));
  for (const char* src : {"box (not (S1 M))", "box (not (S2 M))",
                          "box (S3 M)", "box (not (S4 M))"})
    cs.factsM.push_back(parse_term(src, cs.env));

  TruthCode T = TruthCode::det_true(), F = TruthCode::det_false();
  cs.boxed = {{"S1 J", T}, {"S2 J", F}, {"S3 J", T}, {"S4 J", T},
              {"S1 M", F}, {"S2 M", F}, {"S3 M", T}, {"S4 M", F}};

  const Catalog& cat = Catalog::standard();
  std::vector<TermPtr> partsJ = cs.rulesJ;
  partsJ.insert(partsJ.end(), cs.factsJ.begin(), cs.factsJ.end());
  std::vector<TermPtr> partsM = cs.rulesM;
  partsM.insert(partsM.end(), cs.factsM.begin(), cs.factsM.end());
  cs.piJ = conj_all(partsJ, cat);
  cs.piM = conj_all(partsM, cat);
  cs.pi = cat.make("and", {cs.piJ, cs.piM});
  return cs;
}

namespace {

// Per-individual unrestricted sweep: all six atoms of one individual vary.
// Column 0 is that individual's KB conjunction, the rest are the goals.
struct IndividualSweep {
  std::vector<TableRow> rows;
  std::vector<TruthCode> kbValues;  // distinct KB values over the sweep
};

IndividualSweep sweep_individual(const CaseStudy& cs, char who,
                                 const std::vector<std::string>& goals,
                                 int k) {
  std::vector<std::string> atoms;
  for (const char* base : {"S1", "S2", "S3", "S4", "D1", "D2"})
    atoms.push_back(std::string(base) + " " + who);
  std::vector<TermPtr> formulas = {who == 'J' ? cs.piJ : cs.piM};
  for (const std::string& g : goals)
    formulas.push_back(parse_term(g, cs.env));
  IndividualSweep out;
  out.rows = make_table(formulas, atoms, {}, k);
  std::set<std::uint8_t> seen;
  for (const TableRow& row : out.rows)
    if (seen.insert(row.formulaValues[0].raw).second)
      out.kbValues.push_back(row.formulaValues[0]);
  return out;
}

// Whether KB = KB_J /\ KB_M entails the goal with every atom unrestricted.
// The two individuals share no atoms, so the sweep factors: the goal's
// individual is swept in full while the other side only contributes its
// (few) distinct KB values.
bool unrestricted_entails(const IndividualSweep& own, size_t goalCol,
                          const IndividualSweep& other, const CodeSpace& sp) {
  for (const TableRow& row : own.rows) {
    for (TruthCode otherKb : other.kbValues) {
      TruthCode kb[2] = {row.formulaValues[0], otherKb};
      TruthCode args[2] = {eval_connective(Conn::Conj, kb, sp),
                           row.formulaValues[goalCol + 1]};
      if (!eval_connective(Conn::Imp, args, sp).is_true()) return false;
    }
  }
  return true;
}

}  // namespace

CaseStudyReport run_case_study(int k, bool unrestrictedSweep) {
  CaseStudyReport rep;
  rep.k = k;
  CaseStudy boxed = make_case_study(ExclusionRule::Boxed);
  CaseStudy unboxed = make_case_study(ExclusionRule::Unboxed);

  rep.tableAtoms = {"D1", "D2"};
  rep.tableCols = {"KB_J", "KB'_J", "KB_M", "KB'_M"};
  auto rowsJ = make_table({boxed.piJ, unboxed.piJ}, {"D1 J", "D2 J"},
                          boxed_for(boxed.boxed, 'J'), k);
  auto rowsM = make_table({boxed.piM, unboxed.piM}, {"D1 M", "D2 M"},
                          boxed_for(boxed.boxed, 'M'), k);
  for (size_t i = 0; i < rowsJ.size(); ++i) {
    TableRow row;
    row.atomValues = rowsJ[i].atomValues;
    row.formulaValues = {rowsJ[i].formulaValues[0], rowsJ[i].formulaValues[1],
                         rowsM[i].formulaValues[0], rowsM[i].formulaValues[1]};
    rep.rows.push_back(std::move(row));
  }

  std::vector<std::string> goalsJ, goalsM;
  for (const GoalSpec& g : kGoals)
    (std::string(g.text).find('J') != std::string::npos ? goalsJ : goalsM)
        .push_back(g.text);
  IndividualSweep sweepJ, sweepM;
  if (unrestrictedSweep) {
    sweepJ = sweep_individual(boxed, 'J', goalsJ, k);
    sweepM = sweep_individual(boxed, 'M', goalsM, k);
  }

  CodeSpace sp(k);
  for (const GoalSpec& g : kGoals) {
    CaseVerdict v;
    v.label = std::string("KB |- ") + g.text;
    v.expectEntailed = g.expectEntailed;
    v.verdict = goal_verdict(boxed, g.text, k, true, 1);
    bool entailed = v.verdict.status == EntailStatus::Entailed;
    if (entailed != g.expectEntailed) rep.verdictsAsExpected = false;
    if (unrestrictedSweep) {
      bool ownJ = std::string(g.text).find('J') != std::string::npos;
      const IndividualSweep& own = ownJ ? sweepJ : sweepM;
      const IndividualSweep& other = ownJ ? sweepM : sweepJ;
      const auto& goals = ownJ ? goalsJ : goalsM;
      size_t col = std::find(goals.begin(), goals.end(), g.text) -
                   goals.begin();
      if (unrestricted_entails(own, col, other, sp) != entailed)
        rep.unrestrictedAgrees = false;
    }
    rep.verdicts.push_back(std::move(v));
  }
  return rep;
}

std::string format_case_study(const CaseStudyReport& r, bool tsv) {
  std::ostringstream out;
  out << format_table(r.tableAtoms, r.tableCols, r.rows, tsv);
  for (const auto& v : r.verdicts) {
    out << v.label << ": ";
    if (v.verdict.status == EntailStatus::Entailed) {
      out << "ENTAILED";
    } else {
      out << "NOT-ENTAILED (";
      bool first = true;
      for (const auto& [name, code] : v.verdict.countermodel) {
        if (!first) out << ", ";
        first = false;
        out << name << "=" << code_str(code);
      }
      out << ")";
    }
    out << "\n";
  }
  out << "verdicts as expected: " << (r.verdictsAsExpected ? "yes" : "NO")
      << "\n";
  out << "unrestricted sweep agrees: " << (r.unrestrictedAgrees ? "yes" : "NO")
      << "\n";
  return out.str();
}

VariantReport case_study_variants(int k) {
  VariantReport rep;
  rep.k = k;
  CaseStudy boxed = make_case_study(ExclusionRule::Boxed);
  CaseStudy unboxed = make_case_study(ExclusionRule::Unboxed);
  for (const GoalSpec& g : kGoals) {
    bool base = goal_verdict(boxed, g.text, k, true, 1).status ==
                EntailStatus::Entailed;
    bool without = goal_verdict(unboxed, g.text, k, true, 1).status ==
                   EntailStatus::Entailed;
    if (base && !without) rep.unboxedLost.push_back(g.text);
  }

  CaseStudy sheffer = make_case_study(ExclusionRule::Sheffer);
  rep.shefferAllFalse = true;
  for (const auto& row :
       make_table({sheffer.pi}, {"D1 J", "D2 J", "D1 M", "D2 M"},
                  sheffer.boxed, k))
    if (!row.formulaValues[0].is_false()) rep.shefferAllFalse = false;

  CaseStudy comb = make_case_study(ExclusionRule::Combined);
  rep.combinedNegD1J = goal_verdict(comb, "not (D1 J)", k, true, 1).status ==
                       EntailStatus::Entailed;
  rep.combinedNegD2J = goal_verdict(comb, "not (D2 J)", k, true, 1).status ==
                       EntailStatus::Entailed;
  rep.combinedNegD1M = goal_verdict(comb, "not (D1 M)", k, true, 1);
  auto rows = make_table({comb.piM}, {"D1 M", "D2 M"},
                         boxed_for(comb.boxed, 'M'), k);
  int n = k + 2;
  rep.combinedRow12 = rows[2 * n + 3].formulaValues[0];  // (i1, i2)
  rep.combinedRow21 = rows[3 * n + 2].formulaValues[0];  // (i2, i1)
  return rep;
}

std::string format_variants(const VariantReport& r) {
  std::ostringstream out;
  out << "box omitted, no longer entailed:";
  for (const auto& g : r.unboxedLost) out << " [" << g << "]";
  out << "\n";
  out << "Sheffer exclusion, every row F: "
      << (r.shefferAllFalse ? "yes" : "NO") << "\n";
  out << "combined exclusion: not (D1 J) "
      << (r.combinedNegD1J ? "ENTAILED" : "NOT-ENTAILED") << ", not (D2 J) "
      << (r.combinedNegD2J ? "ENTAILED" : "NOT-ENTAILED") << ", not (D1 M) "
      << (r.combinedNegD1M.status == EntailStatus::Entailed ? "ENTAILED"
                                                            : "NOT-ENTAILED")
      << "\n";
  out << "combined KB_M at (i1,i2) = " << code_str(r.combinedRow12)
      << ", at (i2,i1) = " << code_str(r.combinedRow21) << "\n";
  return out.str();
}

namespace {

// Function values over the code carrier, innermost argument fastest.
ValuePtr code_func1(const std::vector<TruthCode>& carrier,
                    const std::function<TruthCode(TruthCode)>& f) {
  std::vector<ValuePtr> graph;
  for (TruthCode a : carrier) graph.push_back(Value::make_code(f(a)));
  return Value::func(Type::fun(Type::o(), Type::o()), std::move(graph));
}

ValuePtr code_func2(const std::vector<TruthCode>& carrier,
                    const std::function<TruthCode(TruthCode, TruthCode)>& f) {
  std::vector<ValuePtr> graph;
  for (TruthCode a : carrier)
    graph.push_back(code_func1(carrier, [&](TruthCode b) { return f(a, b); }));
  return Value::func(Type::fun(Type::o(), Type::fun(Type::o(), Type::o())),
                     std::move(graph));
}

ValuePtr code_func3(
    const std::vector<TruthCode>& carrier,
    const std::function<TruthCode(TruthCode, TruthCode, TruthCode)>& f) {
  std::vector<ValuePtr> graph;
  for (TruthCode a : carrier)
    graph.push_back(code_func2(
        carrier, [&](TruthCode b, TruthCode c) { return f(a, b, c); }));
  return Value::func(
      Type::fun(Type::o(),
                Type::fun(Type::o(), Type::fun(Type::o(), Type::o()))),
      std::move(graph));
}

TruthCode value_code(const ValuePtr& v) { return v->code; }

}  // namespace

NLExample make_nl_example() {
  NLExample ex;
  TypePtr o = Type::o();
  TypePtr oo = Type::fun(o, o);
  TypePtr ooo = Type::fun(o, oo);
  TypePtr oooo = Type::fun(o, ooo);
  ex.env.consts = {{"K", oooo}, {"B", oooo}, {"S", ooo}, {"D", ooo},
                   {"J", o},    {"G", o},    {"V", o}};
  ex.lexicon = std::make_shared<Catalog>(Catalog::standard());
  ex.combinators = std::make_shared<Catalog>();
  ex.env.catalog = ex.lexicon.get();

  // Combinator bodies are parsed so their connectives resolve exactly as the
  // displayed reducts do.  ell is visible as a plain constant while the other
  // bodies are parsed.
  ParseEnv defEnv = ex.env;
  defEnv.catalog = &Catalog::standard();
  defEnv.consts["ell"] = oo;

  // ell: every attitude and embedded predicate is determinate at the situation.
  ex.lexicon->define(
      "ell",
      parse_term("\\s:o. and (and (and (forall x:o. forall j:o. det (K s x j))"
                 " (forall x:o. forall j:o. det (B s x j)))"
                 " (forall x:o. det (S s x))) (forall x:o. det (D s x))",
                 defEnv));

  auto define_both = [&](const char* name, const char* src) {
    TermPtr value = parse_term(src, defEnv);
    ex.lexicon->define(name, value);
    ex.combinators->define(name, value);
  };

  // so p q = forall i. p i -> q i
  define_both("so", "\\p:o>o. \\q:o>o. forall i:o. imp (p i) (q i)");
  // stop s p = ell s /\ p s
  define_both("stop", "\\s:o. \\p:o>o. and (ell s) (p s)");
  define_both("John", "\\s:o. J");
  define_both("Gloria", "\\s:o. G");
  define_both("Victoria", "\\s:o. V");
  // know/believe s p x = forall j. K/B s x j -> p j
  define_both("know",
              "\\s:o. \\p:o>o. \\x:o. forall j:o. imp (K s x j) (p j)");
  define_both("believe",
              "\\s:o. \\p:o>o. \\x:o. forall j:o. imp (B s x j) (p j)");
  // Sentence-level and predicate-level conjunction and disjunction.
  define_both("andS", "\\s:o. \\a:o. \\b:o. and a b");
  define_both("orS", "\\s:o. \\a:o. \\b:o. or a b");
  define_both("andP", "\\s:o. \\t:o>o. \\u:o>o. \\x:o. and (t x) (u x)");
  define_both("orP", "\\s:o. \\t:o>o. \\u:o>o. \\x:o. or (t x) (u x)");
  define_both("notP", "\\s:o. \\t:o>o. \\x:o. not (t x)");
  define_both("smile", "\\s:o. \\x:o. S s x");
  define_both("dance", "\\s:o. \\x:o. D s x");

  auto premise = [&](const char* inner) {
    return std::string("(\\s:o. stop s (\\t:o. believe t (\\u:o. ") + inner +
           ") (John t)))";
  };
  std::string gloriaContradiction =
      premise("andP u (smile u) (notP u (smile u)) (Gloria u)");
  ParseEnv inner = ex.env;
  inner.consts["j"] = o;

  ex.debatable.name = "believes-contradiction to believes-tautology";
  ex.debatable.argument = parse_term(
      "so " + gloriaContradiction + " " +
          premise("orP u (dance u) (notP u (dance u)) (Victoria u)"),
      ex.env);
  ex.debatable.reduct = parse_term(
      "forall i:o. imp"
      " (and (ell i) (forall j:o. imp (B i J j) (and (S j G) (not (S j G)))))"
      " (and (ell i) (forall j:o. imp (B i J j) (or (D j V) (not (D j V)))))",
      ex.env);
  ex.debatable.innerAnte = parse_term("and (S j G) (not (S j G))", inner);
  ex.debatable.innerCons = parse_term("or (D j V) (not (D j V))", inner);

  ex.invalid.name = "believes-contradiction to believes-dances";
  ex.invalid.argument = parse_term(
      "so " + gloriaContradiction + " " +
          premise("dance u (Victoria u)"),
      ex.env);
  ex.invalid.reduct = parse_term(
      "forall i:o. imp"
      " (and (ell i) (forall j:o. imp (B i J j) (and (S j G) (not (S j G)))))"
      " (and (ell i) (forall j:o. imp (B i J j) (D j V)))",
      ex.env);
  ex.invalid.innerAnte = ex.debatable.innerAnte;
  ex.invalid.innerCons = parse_term("D j V", inner);

  ex.control.name = "believes-conjunction to believes-conjunct";
  ex.control.argument = parse_term(
      "so " + premise("andP u (smile u) (dance u) (Victoria u)") + " " +
          premise("smile u (Victoria u)"),
      ex.env);
  ex.control.reduct = parse_term(
      "forall i:o. imp"
      " (and (ell i) (forall j:o. imp (B i J j) (and (S j V) (D j V))))"
      " (and (ell i) (forall j:o. imp (B i J j) (S j V)))",
      ex.env);
  ex.control.innerAnte = parse_term("and (S j V) (D j V)", inner);
  ex.control.innerCons = parse_term("S j V", inner);

  // The refuting model: one situation believed into (j0 = i1), one believing
  // situation (i0 = T); Gloria's smile is i1-inconsistent there and
  // Victoria's dance i2-inconsistent.
  Model& m = ex.countermodel;
  m.k = 2;
  m.constTypes = {{"K", oooo}, {"B", oooo}, {"S", ooo}, {"D", ooo},
                  {"J", o},    {"G", o},    {"V", o}};
  TruthCode T = TruthCode::det_true(), F = TruthCode::det_false();
  TruthCode i1 = TruthCode::ind(1), i2 = TruthCode::ind(2);
  std::vector<TruthCode> carrier = CodeSpace(2).carrier();
  m.consts["J"] = Value::make_code(T);
  m.consts["G"] = Value::make_code(F);
  m.consts["V"] = Value::make_code(i1);
  m.consts["K"] =
      code_func3(carrier, [&](TruthCode, TruthCode, TruthCode) { return F; });
  m.consts["B"] = code_func3(carrier, [&](TruthCode i, TruthCode x,
                                          TruthCode j) {
    return i == T && x == T && j == i1 ? T : F;
  });
  m.consts["S"] = code_func2(carrier, [&](TruthCode j, TruthCode x) {
    return j == i1 && x == F ? i1 : F;
  });
  m.consts["D"] = code_func2(carrier, [&](TruthCode j, TruthCode x) {
    return j == i1 && x == i1 ? i2 : F;
  });
  return ex;
}

TermPtr lexicon_reduce(const TermPtr& argument, const NLExample& ex) {
  return beta_normalize(expand_abbreviations(argument, *ex.combinators));
}

bool situation_sweep_valid(const NLArgument& arg, const NLExample& ex, int k,
                           std::uint64_t* swept) {
  CodeSpace sp(k);
  auto atoms = atoms_of_all({arg.innerAnte, arg.innerCons}, *ex.lexicon);
  std::vector<std::string> names;
  for (const auto& a : atoms) names.push_back(print_term(a));
  auto rows = make_table({arg.innerAnte, arg.innerCons}, names, {}, k,
                         *ex.lexicon);

  // Achievable (antecedent, consequent) value pairs for one believed
  // situation j: the belief code is determinate under the integrity
  // condition, the embedded propositions range over the carrier.
  std::set<std::pair<std::uint8_t, std::uint8_t>> pairSet;
  for (TruthCode b : {TruthCode::det_true(), TruthCode::det_false()}) {
    for (const auto& row : rows) {
      TruthCode xa[2] = {b, row.formulaValues[0]};
      TruthCode xc[2] = {b, row.formulaValues[1]};
      pairSet.insert({eval_connective(Conn::Imp, xa, sp).raw,
                      eval_connective(Conn::Imp, xc, sp).raw});
    }
  }
  std::vector<std::pair<TruthCode, TruthCode>> pairs;
  for (auto [x, y] : pairSet) pairs.push_back({TruthCode{x}, TruthCode{y}});

  // The universal fold over situations j depends only on the set of values
  // taken; check every nonempty subset of achievable pairs up to the carrier
  // size.
  std::uint64_t count = 0;
  int maxSize = std::min<int>(sp.size(), static_cast<int>(pairs.size()));
  std::vector<int> pick;
  bool valid = true;
  std::function<void(size_t)> rec = [&](size_t start) {
    if (!valid) return;
    if (!pick.empty()) {
      std::vector<TruthCode> xs, ys;
      for (int i : pick) {
        xs.push_back(pairs[i].first);
        ys.push_back(pairs[i].second);
      }
      TruthCode ops[2] = {fold_universal(xs), fold_universal(ys)};
      ++count;
      if (!eval_connective(Conn::Imp, ops, sp).is_true()) {
        valid = false;
        return;
      }
    }
    if (static_cast<int>(pick.size()) == maxSize) return;
    for (size_t i = start; i < pairs.size(); ++i) {
      pick.push_back(static_cast<int>(i));
      rec(i + 1);
      pick.pop_back();
    }
  };
  rec(0);
  if (swept) *swept = count;
  return valid;
}

NLReport run_nl_demo(int k) {
  NLReport rep;
  rep.k = k;
  NLExample ex = make_nl_example();
  auto matches = [&](const NLArgument& a) {
    return alpha_equal(lexicon_reduce(a.argument, ex),
                       beta_normalize(a.reduct));
  };
  rep.reductMatches = matches(ex.debatable);
  rep.invalidReductMatches = matches(ex.invalid);
  rep.controlReductMatches = matches(ex.control);

  rep.reductValue = value_code(
      interpret_term(ex.debatable.reduct, ex.countermodel, {}, *ex.lexicon));
  rep.invalidValue = value_code(
      interpret_term(ex.invalid.reduct, ex.countermodel, {}, *ex.lexicon));
  TermPtr postulate = parse_term(
      "forall i:o. forall x:o. forall j:o. imp (K i x j) (B i x j)", ex.env);
  rep.postulateHolds =
      value_code(interpret_term(postulate, ex.countermodel, {}, *ex.lexicon))
          .is_true();
  rep.controlValid = situation_sweep_valid(ex.control, ex, k,
                                           &rep.controlSwept);
  return rep;
}

std::string format_nl_demo(const NLReport& r) {
  std::ostringstream out;
  out << "reduct matches displayed form: " << (r.reductMatches ? "yes" : "NO")
      << "\n";
  out << "countermodel value of reduct: " << code_str(r.reductValue)
      << (r.reductValue.is_true() ? " (UNEXPECTED)" : " (not designated)")
      << "\n";
  out << "knowledge-implies-belief postulate holds: "
      << (r.postulateHolds ? "yes" : "NO") << "\n";
  out << "control argument (believes smiles-and-dances |- believes smiles): "
      << (r.controlValid ? "VALID" : "NOT VALID") << " (swept "
      << r.controlSwept << " value sets)\n";
  out << "incorrect argument (believes dances) under the same model: "
      << code_str(r.invalidValue)
      << (r.invalidValue.is_true() ? " (UNEXPECTED)" : " (refuted)") << "\n";
  return out.str();
}

namespace {

ParseEnv prop_env() {
  ParseEnv env;
  env.consts["p"] = Type::o();
  env.consts["q"] = Type::o();
  return env;
}

std::vector<TermPtr> parse_all(const std::vector<const char*>& srcs) {
  static ParseEnv env = prop_env();
  std::vector<TermPtr> out;
  for (const char* s : srcs) out.push_back(parse_term(s, env));
  return out;
}

}  // namespace

std::vector<TermPtr> identity_formulas() {
  return parse_all({
      "p", "q", "not p", "and p q", "or p q",
      "imp p q", "iff p q", "limp p q", "liff p q", "qimp p q",
      "qiff p q", "box p", "bnot p", "det p", "ind p",
      "nand p q", "excl p q", "bexcl p q", "hat p", "check q",
      "Eq p q", "True", "1", "2", "forall x:o. imp x x",
  });
}

std::vector<TermPtr> key_equalities() {
  return parse_all({
      "Eq True (not False)",
      "Eq False (not True)",
      "Eq p (and p p)",
      "Eq p (and True p)",
      "Eq p (and p True)",
      "Eq p (not (not p))",
      "iff p (not (not p))",
      "Eq True (iff p p)",
      "Eq p (iff True p)",
      "Eq p (iff p True)",
      "Eq (not p) (iff False p)",
      "Eq (not p) (iff p False)",
  });
}

std::vector<TermPtr> rejected_validities() {
  return parse_all({"or p (not p)", "qimp p p"});
}

}  // namespace nabla
