#include "nabla/calculus.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "nabla/sexpr.hpp"

namespace nabla {

namespace {

const std::pair<RuleName, const char*> kRuleNames[] = {
    {RuleName::Cut, "Cut"},
    {RuleName::WeakenL, "WeakenL"},
    {RuleName::WeakenR, "WeakenR"},
    {RuleName::BetaConv, "BetaConv"},
    {RuleName::Extensionality, "Extensionality"},
    {RuleName::Reflexivity, "Reflexivity"},
    {RuleName::Substitution, "Substitution"},
    {RuleName::NegFlipA, "NegFlipA"},
    {RuleName::NegFlipB, "NegFlipB"},
    {RuleName::AndRight, "AndRight"},
    {RuleName::AndLeft, "AndLeft"},
    {RuleName::AllLeft, "AllLeft"},
    {RuleName::AllRight, "AllRight"},
    {RuleName::IndetNeg, "IndetNeg"},
    {RuleName::IndetNand, "IndetNand"},
    {RuleName::Choice, "Choice"},
    {RuleName::GenInjective, "GenInjective"},
    {RuleName::GenInfinity, "GenInfinity"},
    {RuleName::GenInduction, "GenInduction"},
    {RuleName::OmegaAxiom, "OmegaAxiom"},
    {RuleName::DeltaAxiom, "DeltaAxiom"},
    {RuleName::DagAxiom, "DagAxiom"},
    {RuleName::DdagAxiom, "DdagAxiom"},
};

// Untyped structural matching of a scheme pattern against an instance.
// Holes bind arbitrary subterms; types are ignored here and re-checked by
// rebuilding the instance from the bindings.
struct Matcher {
  std::set<std::string> holes;
  std::map<std::string, TermPtr> bind;
  std::vector<std::pair<std::string, std::string>> bvars;

  const std::string* bound_image(const std::string& patName) const {
    for (auto it = bvars.rbegin(); it != bvars.rend(); ++it)
      if (it->first == patName) return &it->second;
    return nullptr;
  }

  bool instance_binds(const std::string& name) const {
    for (const auto& [p, i] : bvars)
      if (i == name) return true;
    return false;
  }

  bool match(const TermPtr& pat, const TermPtr& t) {
    switch (pat->kind) {
      case Term::Kind::Var: {
        if (const std::string* img = bound_image(pat->name))
          return t->kind == Term::Kind::Var && t->name == *img;
        if (holes.count(pat->name)) {
          for (const std::string& fv : free_vars(t))
            if (instance_binds(fv)) return false;  // would escape its binder
          auto it = bind.find(pat->name);
          if (it != bind.end()) return alpha_equal(it->second, t);
          bind[pat->name] = t;
          return true;
        }
        return t->kind == Term::Kind::Var && t->name == pat->name;
      }
      case Term::Kind::Const:
        return t->kind == Term::Kind::Const && t->prim == pat->prim &&
               (pat->prim != Prim::None || t->name == pat->name);
      case Term::Kind::App:
        return t->kind == Term::Kind::App && match(pat->fun, t->fun) &&
               match(pat->arg, t->arg);
      case Term::Kind::Lam: {
        if (t->kind != Term::Kind::Lam) return false;
        bvars.emplace_back(pat->name, t->name);
        bool ok = match(pat->body, t->body);
        bvars.pop_back();
        return ok;
      }
    }
    return false;
  }
};

// Replaces free occurrences of `from` by `to`, skipping occurrences whose
// free variables are captured at that position.
TermPtr replace_occurrences(const TermPtr& t, const TermPtr& from,
                            const TermPtr& to,
                            std::set<std::string>& boundHere) {
  bool clean = true;
  for (const std::string& fv : free_vars(from))
    if (boundHere.count(fv)) { clean = false; break; }
  if (clean)
    for (const std::string& fv : free_vars(to))
      if (boundHere.count(fv)) { clean = false; break; }
  if (clean && alpha_equal(t, from)) return to;
  switch (t->kind) {
    case Term::Kind::Var:
    case Term::Kind::Const:
      return t;
    case Term::Kind::App: {
      TermPtr f = replace_occurrences(t->fun, from, to, boundHere);
      TermPtr a = replace_occurrences(t->arg, from, to, boundHere);
      if (f == t->fun && a == t->arg) return t;
      return Term::app(f, a);
    }
    case Term::Kind::Lam: {
      bool added = boundHere.insert(t->name).second;
      TermPtr b = replace_occurrences(t->body, from, to, boundHere);
      if (added) boundHere.erase(t->name);
      if (b == t->body) return t;
      return Term::lam(t->name, t->var_type(), b);
    }
  }
  return t;
}

std::string fresh_name(std::string base, const std::vector<TermPtr>& avoid) {
  std::set<std::string> used;
  for (const auto& t : avoid) {
    auto fv = free_vars(t);
    used.insert(fv.begin(), fv.end());
  }
  while (used.count(base)) base += "'";
  return base;
}

struct SchemeSpec {
  std::vector<std::pair<std::string, TypePtr>> vars;  // representative types
  std::function<TermPtr(const Catalog&, const std::vector<TermPtr>&)> build;
};

const std::map<RuleName, SchemeSpec>& scheme_table() {
  static const std::map<RuleName, SchemeSpec> table = [] {
    TypePtr o = Type::o();
    TypePtr oo = Type::fun(o, o);
    std::map<RuleName, SchemeSpec> t;
    auto mk = [](const Catalog& c, const std::string& n,
                 const std::vector<TermPtr>& a) { return c.make(n, a); };
    t[RuleName::IndetNeg] = {
        {{"x", o}},
        [mk](const Catalog& c, const std::vector<TermPtr>& w) {
          return mk(c, "limp",
                    {mk(c, "ind", {w[0]}),
                     mk(c, "Eq", {mk(c, "not", {w[0]}), w[0]})});
        }};
    t[RuleName::IndetNand] = {
        {{"x", o}, {"y", o}},
        [mk](const Catalog& c, const std::vector<TermPtr>& w) {
          return mk(c, "limp",
                    {mk(c, "and",
                        {mk(c, "and", {mk(c, "not", {mk(c, "Eq", {w[0], w[1]})}),
                                       mk(c, "ind", {w[0]})}),
                         mk(c, "ind", {w[1]})}),
                     mk(c, "nand", {w[0], w[1]})});
        }};
    t[RuleName::Choice] = {
        {{"p", oo}, {"x", o}},
        [mk](const Catalog& c, const std::vector<TermPtr>& w) {
          return mk(c, "limp", {Term::app(w[0], w[1]),
                                Term::app(w[0], mk(c, "sel", {w[0]}))});
        }};
    t[RuleName::GenInjective] = {
        {{"x", o}, {"y", o}},
        [mk](const Catalog& c, const std::vector<TermPtr>& w) {
          return mk(c, "limp",
                    {mk(c, "Eq", {mk(c, "next", {w[0]}), mk(c, "next", {w[1]})}),
                     mk(c, "Eq", {w[0], w[1]})});
        }};
    t[RuleName::GenInfinity] = {
        {},
        [mk](const Catalog& c, const std::vector<TermPtr>&) {
          return mk(c, "Eq", {mk(c, "next", {mk(c, "inf", {})}),
                              mk(c, "inf", {})});
        }};
    t[RuleName::GenInduction] = {
        {{"p", oo}, {"y", o}},
        [mk](const Catalog& c, const std::vector<TermPtr>& w) {
          std::string x = fresh_name("x", {w[0]});
          TermPtr xv = Term::var(x, Type::o());
          TermPtr step = mk(
              c, "forall",
              {Term::lam(x, Type::o(),
                         mk(c, "limp", {Term::app(w[0], xv),
                                        Term::app(w[0], mk(c, "next", {xv}))}))});
          return mk(c, "limp",
                    {mk(c, "and",
                        {mk(c, "and", {Term::app(w[0], mk(c, "inf", {})),
                                       Term::app(w[0], mk(c, "0", {}))}),
                         step}),
                     Term::app(w[0], w[1])});
        }};
    t[RuleName::OmegaAxiom] = {
        {},
        [mk](const Catalog& c, const std::vector<TermPtr>&) {
          return mk(
              c, "and",
              {mk(c, "forall",
                  {Term::lam("x", Type::o(),
                             mk(c, "limp",
                                {mk(c, "ind", {Term::var("x", Type::o())}),
                                 mk(c, "ind",
                                    {mk(c, "next",
                                        {Term::var("x", Type::o())})})}))}),
               mk(c, "exists",
                  {Term::lam("y", Type::o(),
                             mk(c, "ind", {Term::var("y", Type::o())}))})});
        }};
    t[RuleName::DeltaAxiom] = {
        {{"x", o}},
        [mk](const Catalog& c, const std::vector<TermPtr>& w) {
          return mk(c, "det", {w[0]});
        }};
    t[RuleName::DagAxiom] = {
        {{"x", o}},
        [mk](const Catalog& c, const std::vector<TermPtr>& w) {
          return mk(c, "or", {mk(c, "det", {w[0]}),
                              mk(c, "Eq", {w[0], mk(c, "dag", {})})});
        }};
    t[RuleName::DdagAxiom] = {
        {{"x", o}},
        [mk](const Catalog& c, const std::vector<TermPtr>& w) {
          return mk(c, "or",
                    {mk(c, "or", {mk(c, "det", {w[0]}),
                                  mk(c, "Eq", {w[0], mk(c, "dag", {})})}),
                     mk(c, "Eq", {w[0], mk(c, "ddag", {})})});
        }};
    return t;
  }();
  return table;
}

// Everything structural and definitional happens on normalized formulas:
// abbreviations expanded, beta-normal, compared up to alpha.
struct Checker {
  const Catalog& cat;
  const TheoryProfile& profile;
  std::map<const Term*, TermPtr> nfCache;

  TermPtr nf(const TermPtr& t) {
    auto it = nfCache.find(t.get());
    if (it != nfCache.end()) return it->second;
    TermPtr r = beta_normalize(expand_abbreviations(t, cat));
    nfCache.emplace(t.get(), r);
    return r;
  }

  std::vector<TermPtr> nf_set(const std::vector<TermPtr>& v) {
    std::vector<TermPtr> out;
    for (const auto& t : v) {
      TermPtr n = nf(t);
      if (!contains(out, n)) out.push_back(n);
    }
    return out;
  }

  static bool contains(const std::vector<TermPtr>& set, const TermPtr& t) {
    for (const auto& s : set)
      if (alpha_equal(s, t)) return true;
    return false;
  }

  static bool subset(const std::vector<TermPtr>& a,
                     const std::vector<TermPtr>& b) {
    for (const auto& t : a)
      if (!contains(b, t)) return false;
    return true;
  }

  static bool set_eq(const std::vector<TermPtr>& a,
                     const std::vector<TermPtr>& b) {
    return subset(a, b) && subset(b, a);
  }

  static std::vector<TermPtr> minus(const std::vector<TermPtr>& a,
                                    const std::vector<TermPtr>& b) {
    std::vector<TermPtr> out;
    for (const auto& t : a)
      if (!contains(b, t)) out.push_back(t);
    return out;
  }

  static std::vector<TermPtr> with(std::vector<TermPtr> a, const TermPtr& t) {
    if (!contains(a, t)) a.push_back(t);
    return a;
  }

  // (φ, ψ) from an equality formula, looking through abbreviations.
  std::optional<std::pair<TermPtr, TermPtr>> eq_args(const TermPtr& t) {
    for (const TermPtr& c : {t, nf(t)}) {
      TermPtr head = spine_head(c);
      auto args = spine_args(c);
      if (head->kind == Term::Kind::Const && head->prim == Prim::Q &&
          args.size() == 2)
        return std::make_pair(args[0], args[1]);
    }
    return std::nullopt;
  }

  // (binder, lam) from a universal formula.
  std::optional<TermPtr> forall_lam(const TermPtr& t) {
    for (const TermPtr& c : {t, nf(t)}) {
      TermPtr head = spine_head(c);
      auto args = spine_args(c);
      if (head->kind == Term::Kind::Const && head->prim == Prim::A &&
          args.size() == 1 && args[0]->kind == Term::Kind::Lam)
        return args[0];
    }
    return std::nullopt;
  }

  std::vector<TermPtr> negated(const std::vector<TermPtr>& v) {
    std::vector<TermPtr> out;
    for (const auto& t : v) out.push_back(cat.make("not", {t}));
    return out;
  }

  CheckResult check(const Sequent& c, RuleName rule,
                    const std::vector<Sequent>& prem,
                    const std::vector<TermPtr>& wit) {
    if (rule_is_axiom_scheme(rule)) {
      if (!prem.empty()) return CheckResult::bad("axiom schemes take no premises");
      return check_scheme(c, rule, wit);
    }
    switch (rule) {
      case RuleName::Cut: return cut(c, prem, wit);
      case RuleName::WeakenL: return weaken(c, prem, true);
      case RuleName::WeakenR: return weaken(c, prem, false);
      case RuleName::BetaConv: return equality_axiom(c, prem, "BetaConv");
      case RuleName::Reflexivity: return equality_axiom(c, prem, "Reflexivity");
      case RuleName::Extensionality: return extensionality(c, prem);
      case RuleName::Substitution: return substitution(c, prem, wit);
      case RuleName::NegFlipA: return neg_flip(c, prem, true);
      case RuleName::NegFlipB: return neg_flip(c, prem, false);
      case RuleName::AndRight: return and_right(c, prem);
      case RuleName::AndLeft: return and_left(c, prem);
      case RuleName::AllLeft: return all_left(c, prem, wit);
      case RuleName::AllRight: return all_right(c, prem, wit);
      default: break;
    }
    return CheckResult::bad("unhandled rule");
  }

  CheckResult cut(const Sequent& c, const std::vector<Sequent>& prem,
                  const std::vector<TermPtr>& wit) {
    if (prem.size() != 2) return CheckResult::bad("Cut takes two premises");
    auto cAnte = nf_set(c.ante), cSucc = nf_set(c.succ);
    auto p0Ante = nf_set(prem[0].ante), p0Succ = nf_set(prem[0].succ);
    auto p1Ante = nf_set(prem[1].ante), p1Succ = nf_set(prem[1].succ);
    std::vector<TermPtr> candidates;
    for (const auto& w : wit) candidates.push_back(nf(w));
    for (const auto& t : p0Ante) candidates.push_back(t);
    for (const auto& t : p1Succ) candidates.push_back(t);
    for (const auto& phi : candidates) {
      if (set_eq(p0Ante, with(cAnte, phi)) && set_eq(p0Succ, cSucc) &&
          set_eq(p1Ante, cAnte) && set_eq(p1Succ, with(cSucc, phi)))
        return CheckResult::good();
    }
    return CheckResult::bad("premises do not fit a cut on any formula");
  }

  CheckResult weaken(const Sequent& c, const std::vector<Sequent>& prem,
                     bool left) {
    if (prem.size() != 1) return CheckResult::bad("weakening takes one premise");
    auto cA = nf_set(c.ante), cS = nf_set(c.succ);
    auto pA = nf_set(prem[0].ante), pS = nf_set(prem[0].succ);
    const auto& grows = left ? cA : cS;
    const auto& from = left ? pA : pS;
    bool sameOther = left ? set_eq(cS, pS) : set_eq(cA, pA);
    if (!sameOther)
      return CheckResult::bad("weakening must keep the other side unchanged");
    if (!subset(from, grows) || minus(grows, from).size() > 1)
      return CheckResult::bad("weakening adds exactly one formula");
    return CheckResult::good();
  }

  CheckResult equality_axiom(const Sequent& c,
                             const std::vector<Sequent>& prem,
                             const char* label) {
    if (!prem.empty())
      return CheckResult::bad(std::string(label) + " takes no premises");
    if (!c.ante.empty() || c.succ.size() != 1)
      return CheckResult::bad(std::string(label) +
                              " proves a single equation, no antecedents");
    auto eq = eq_args(c.succ[0]);
    if (!eq) return CheckResult::bad("succedent is not an equality");
    if (!alpha_equal(nf(eq->first), nf(eq->second)))
      return CheckResult::bad("sides are not convertible");
    return CheckResult::good();
  }

  CheckResult extensionality(const Sequent& c,
                             const std::vector<Sequent>& prem) {
    if (!prem.empty())
      return CheckResult::bad("Extensionality takes no premises");
    if (c.ante.size() != 1 || c.succ.size() != 1)
      return CheckResult::bad("Extensionality is pointwise-eq |- eq");
    auto eq = eq_args(c.succ[0]);
    if (!eq) return CheckResult::bad("succedent is not an equality");
    TermPtr want;
    try {
      want = cat.make("Eqall", {eq->first, eq->second});
    } catch (const std::exception&) {
      return CheckResult::bad("sides do not admit pointwise equality");
    }
    if (!alpha_equal(nf(c.ante[0]), nf(want)))
      return CheckResult::bad("antecedent is not the pointwise equality");
    return CheckResult::good();
  }

  CheckResult substitution(const Sequent& c, const std::vector<Sequent>& prem,
                           const std::vector<TermPtr>& wit) {
    if (!prem.empty())
      return CheckResult::bad("Substitution takes no premises");
    if (c.succ.size() != 1)
      return CheckResult::bad("Substitution has a single succedent");
    TermPtr bNf = nf(c.succ[0]);
    for (const auto& e : c.ante) {
      auto eq = eq_args(e);
      if (!eq) continue;
      const auto& [phi, psi] = *eq;
      auto rest = minus(nf_set(c.ante), {nf(e)});
      TermPtr aNf;
      if (rest.size() == 1) aNf = rest[0];
      else if (rest.empty()) aNf = nf(e);
      else continue;
      if (!wit.empty()) {
        try {
          if (alpha_equal(aNf, nf(Term::app(wit[0], phi))) &&
              alpha_equal(bNf, nf(Term::app(wit[0], psi))))
            return CheckResult::good();
        } catch (const TypeError&) {
        }
        continue;
      }
      // No context given: the hole itself, or replace every occurrence.
      if (alpha_equal(aNf, nf(phi)) && alpha_equal(bNf, nf(psi)))
        return CheckResult::good();
      std::set<std::string> bound;
      TermPtr rewritten = replace_occurrences(aNf, nf(phi), nf(psi), bound);
      if (alpha_equal(nf(rewritten), bNf)) return CheckResult::good();
    }
    return CheckResult::bad("no equation rewrites the antecedent to the succedent");
  }

  CheckResult neg_flip(const Sequent& c, const std::vector<Sequent>& prem,
                       bool variantA) {
    if (prem.size() != 1) return CheckResult::bad("negation flip takes one premise");
    const Sequent& p = prem[0];
    if (variantA) {
      // from ¬Γ ⊢ Θ infer ¬Θ ⊢ Γ
      if (set_eq(nf_set(c.ante), nf_set(negated(p.succ))) &&
          set_eq(nf_set(p.ante), nf_set(negated(c.succ))))
        return CheckResult::good();
    } else {
      // from Γ ⊢ ¬Θ infer Θ ⊢ ¬Γ
      if (set_eq(nf_set(c.succ), nf_set(negated(p.ante))) &&
          set_eq(nf_set(p.succ), nf_set(negated(c.ante))))
        return CheckResult::good();
    }
    return CheckResult::bad("sides are not memberwise negations");
  }

  CheckResult and_right(const Sequent& c, const std::vector<Sequent>& prem) {
    if (!prem.empty()) return CheckResult::bad("AndRight takes no premises");
    if (c.succ.size() != 1)
      return CheckResult::bad("AndRight has a single succedent");
    auto anteNf = nf_set(c.ante);
    if (anteNf.empty() || anteNf.size() > 2)
      return CheckResult::bad("AndRight needs the two conjuncts on the left");
    TermPtr sNf = nf(c.succ[0]);
    for (const auto& a : c.ante) {
      for (const auto& b : c.ante) {
        if (alpha_equal(sNf, nf(cat.make("and", {a, b}))) &&
            set_eq(anteNf, nf_set({a, b})))
          return CheckResult::good();
      }
    }
    return CheckResult::bad("succedent is not the conjunction of the antecedents");
  }

  CheckResult and_left(const Sequent& c, const std::vector<Sequent>& prem) {
    if (prem.size() != 1) return CheckResult::bad("AndLeft takes one premise");
    if (!set_eq(nf_set(c.succ), nf_set(prem[0].succ)))
      return CheckResult::bad("AndLeft keeps the succedent");
    auto cAnte = nf_set(c.ante);
    auto pAnte = nf_set(prem[0].ante);
    for (const auto& fRaw : c.ante) {
      TermPtr head = spine_head(fRaw);
      auto args = spine_args(fRaw);
      if (head->kind != Term::Kind::Const || head->name != "and" ||
          head->prim != Prim::None || args.size() != 2)
        continue;
      auto expect = with(with(minus(cAnte, {nf(fRaw)}), nf(args[0])),
                         nf(args[1]));
      if (set_eq(pAnte, expect)) return CheckResult::good();
    }
    return CheckResult::bad("no conjunction on the left splits into the premise");
  }

  CheckResult all_left(const Sequent& c, const std::vector<Sequent>& prem,
                       const std::vector<TermPtr>& wit) {
    if (!prem.empty()) return CheckResult::bad("AllLeft takes no premises");
    if (c.ante.size() != 1 || c.succ.size() != 1)
      return CheckResult::bad("AllLeft is forall |- instance");
    auto lam = forall_lam(c.ante[0]);
    if (!lam) return CheckResult::bad("antecedent is not universal");
    TermPtr sNf = nf(c.succ[0]);
    if (!wit.empty()) {
      try {
        if (alpha_equal(sNf, nf(Term::app(*lam, wit[0]))))
          return CheckResult::good();
      } catch (const TypeError&) {
        return CheckResult::bad("witness has the wrong type");
      }
      return CheckResult::bad("succedent is not the witnessed instance");
    }
    TermPtr inferred = infer_instance(*lam, c.succ[0]);
    if (inferred) {
      try {
        if (alpha_equal(sNf, nf(Term::app(*lam, inferred))))
          return CheckResult::good();
      } catch (const TypeError&) {
      }
    }
    // Vacuous quantification: the body itself.
    if (!is_free_in((*lam)->name, (*lam)->body) &&
        alpha_equal(sNf, nf((*lam)->body)))
      return CheckResult::good();
    return CheckResult::bad("cannot infer an instantiating term");
  }

  // Matches lam's body with its variable as a hole against the instance.
  TermPtr infer_instance(const TermPtr& lam, const TermPtr& instance) {
    for (const TermPtr& target : {instance, nf(instance)}) {
      Matcher m;
      m.holes = {lam->name};
      if (m.match(lam->body, target)) {
        auto it = m.bind.find(lam->name);
        if (it != m.bind.end()) return it->second;
      }
      Matcher m2;
      m2.holes = {lam->name};
      TermPtr bodyNf = nf(lam->body);
      if (m2.match(bodyNf, target)) {
        auto it = m2.bind.find(lam->name);
        if (it != m2.bind.end()) return it->second;
      }
    }
    return nullptr;
  }

  CheckResult all_right(const Sequent& c, const std::vector<Sequent>& prem,
                        const std::vector<TermPtr>& wit) {
    if (prem.size() != 1) return CheckResult::bad("AllRight takes one premise");
    const Sequent& p = prem[0];
    if (!set_eq(nf_set(c.ante), nf_set(p.ante)))
      return CheckResult::bad("AllRight keeps the antecedent");
    for (const auto& qRaw : c.succ) {
      auto lam = forall_lam(qRaw);
      if (!lam) continue;
      auto gamma = minus(nf_set(c.succ), {nf(qRaw)});
      auto inserted = minus(nf_set(p.succ), gamma);
      if (inserted.size() != 1) continue;
      if (!set_eq(nf_set(p.succ), with(gamma, inserted[0]))) continue;
      TermPtr eigen;
      if (!wit.empty()) {
        eigen = wit[0];
      } else {
        // Recover the eigen-variable from the premise formula.
        for (const auto& cand : p.succ)
          if (alpha_equal(nf(cand), inserted[0])) {
            eigen = infer_instance(*lam, cand);
            break;
          }
      }
      bool vacuous = !is_free_in((*lam)->name, (*lam)->body);
      if (!eigen && !vacuous) continue;
      if (eigen && eigen->kind != Term::Kind::Var)
        return CheckResult::bad("eigen-witness must be a variable");
      if (!vacuous || eigen) {
        if (!eigen) continue;
        try {
          if (!alpha_equal(inserted[0], nf(Term::app(*lam, eigen)))) continue;
        } catch (const TypeError&) {
          continue;
        }
        const std::string& pi = eigen->name;
        for (const auto& t : c.ante)
          if (is_free_in(pi, nf(t)))
            return CheckResult::bad("eigen-variable occurs free in the antecedent");
        for (const auto& g : gamma)
          if (is_free_in(pi, g))
            return CheckResult::bad("eigen-variable occurs free in the succedent");
        if (is_free_in(pi, nf(qRaw)))
          return CheckResult::bad("eigen-variable occurs free in the quantified formula");
      } else {
        if (!alpha_equal(inserted[0], nf((*lam)->body))) continue;
      }
      return CheckResult::good();
    }
    return CheckResult::bad("premise does not generalize to any universal succedent");
  }

  CheckResult check_scheme(const Sequent& c, RuleName rule,
                           const std::vector<TermPtr>& wit) {
    if (!scheme_enabled(rule))
      return CheckResult::bad(std::string("axiom ") + rule_name(rule) +
                              " not enabled in profile");
    if (!c.ante.empty() || c.succ.size() != 1)
      return CheckResult::bad("axiom sequents have the shape |- phi");
    const SchemeSpec& spec = scheme_table().at(rule);
    TermPtr goalNf = nf(c.succ[0]);
    if (!wit.empty()) {
      if (wit.size() != spec.vars.size())
        return CheckResult::bad("wrong number of scheme witnesses");
      return verify_instance(spec, wit, goalNf);
    }
    // Infer the instantiation by structural matching against the pattern.
    std::vector<TermPtr> varTerms;
    std::set<std::string> holes;
    for (const auto& [n, ty] : spec.vars) {
      varTerms.push_back(Term::var(n, ty));
      holes.insert(n);
    }
    TermPtr pattern = spec.build(cat, varTerms);
    for (const TermPtr& target : {c.succ[0], goalNf}) {
      for (const TermPtr& pat : {pattern, nf(pattern)}) {
        Matcher m;
        m.holes = holes;
        if (!m.match(pat, target)) continue;
        std::vector<TermPtr> inferred;
        bool complete = true;
        for (const auto& [n, ty] : spec.vars) {
          auto it = m.bind.find(n);
          if (it == m.bind.end()) { complete = false; break; }
          inferred.push_back(it->second);
        }
        if (!complete) continue;
        CheckResult r = verify_instance(spec, inferred, goalNf);
        if (r.ok) return r;
      }
    }
    return CheckResult::bad("formula does not instantiate the scheme");
  }

  CheckResult verify_instance(const SchemeSpec& spec,
                              const std::vector<TermPtr>& wit,
                              const TermPtr& goalNf) {
    TermPtr instance;
    try {
      instance = spec.build(cat, wit);
    } catch (const std::exception&) {
      return CheckResult::bad("scheme witnesses have incompatible types");
    }
    if (!alpha_equal(nf(instance), goalNf))
      return CheckResult::bad("formula is not the witnessed scheme instance");
    return CheckResult::good();
  }

  bool scheme_enabled(RuleName rule) const {
    switch (rule) {
      case RuleName::OmegaAxiom: return profile.omega;
      case RuleName::DeltaAxiom: return profile.delta;
      case RuleName::DagAxiom: return profile.dag;
      case RuleName::DdagAxiom: return profile.ddag;
      default: return true;
    }
  }
};

}  // namespace

const char* rule_name(RuleName r) {
  for (const auto& [rule, name] : kRuleNames)
    if (rule == r) return name;
  return "?";
}

std::optional<RuleName> rule_from_name(const std::string& s) {
  for (const auto& [rule, name] : kRuleNames)
    if (s == name) return rule;
  return std::nullopt;
}

bool rule_is_axiom_scheme(RuleName r) {
  return scheme_table().count(r) > 0;
}

TheoryProfile theory_profile(Profile p) {
  TheoryProfile t;
  switch (p) {
    case Profile::Base: break;
    case Profile::Omega: t.omega = true; break;
    case Profile::Delta: t.delta = true; break;
    case Profile::Dag: t.dag = true; break;
    case Profile::Ddag: t.ddag = true; break;
  }
  return t;
}

std::vector<std::string> profile_warnings(const TheoryProfile& p) {
  std::vector<std::string> out;
  if (p.delta && (p.omega || p.dag || p.ddag))
    out.push_back(
        "delta forbids the indeterminacies the other axioms require; "
        "the combined theory is inconsistent");
  return out;
}

CheckResult check_rule_application(const Sequent& conclusion, RuleName rule,
                                   const std::vector<Sequent>& premises,
                                   const std::vector<TermPtr>& witnesses,
                                   const TheoryProfile& profile,
                                   const Catalog& catalog) {
  Checker ch{catalog, profile};
  for (const auto& t : conclusion.ante)
    if (t->type->kind != Type::Kind::O)
      return CheckResult::bad("sequent formula is not of type o");
  for (const auto& t : conclusion.succ)
    if (t->type->kind != Type::Kind::O)
      return CheckResult::bad("sequent formula is not of type o");
  return ch.check(conclusion, rule, premises, witnesses);
}

namespace {

CheckResult check_rec(const Derivation& d, const TheoryProfile& profile,
                      const Catalog& catalog, std::vector<int>& path) {
  std::vector<Sequent> prem;
  for (const auto& p : d.premises) prem.push_back(p.conclusion);
  CheckResult r =
      check_rule_application(d.conclusion, d.rule, prem, d.witnesses, profile,
                             catalog);
  if (!r.ok) {
    r.path = path;
    return r;
  }
  for (size_t i = 0; i < d.premises.size(); ++i) {
    path.push_back(static_cast<int>(i));
    CheckResult rr = check_rec(d.premises[i], profile, catalog, path);
    if (!rr.ok) return rr;
    path.pop_back();
  }
  return CheckResult::good();
}

}  // namespace

CheckResult check_derivation(const Derivation& d, const TheoryProfile& profile,
                             const Catalog& catalog) {
  std::vector<int> path;
  return check_rec(d, profile, catalog, path);
}

Derivation derive_identity(const TermPtr& phi, const Catalog& catalog) {
  TermPtr eq = catalog.make("Eq", {phi, phi});
  Derivation refl{{{}, {eq}}, RuleName::Reflexivity, {}, {}};
  Derivation wr{{{}, {eq, phi}}, RuleName::WeakenR, {}, {refl}};
  Derivation wl{{{phi}, {eq, phi}}, RuleName::WeakenL, {}, {wr}};
  Derivation subst{{{eq, phi}, {phi}}, RuleName::Substitution, {}, {}};
  return Derivation{{{phi}, {phi}}, RuleName::Cut, {eq}, {subst, wl}};
}

namespace {

Derivation derivation_from_sexpr(const SExpr& e, const ParseEnv& env) {
  if (e.is_atom || !e.headed("derivation"))
    throw DerivationParseError("expected a (derivation ...) form");
  Derivation d;
  const SExpr* conc = e.child("conclusion");
  if (!conc || conc->items.size() != 2 || !conc->items[1].headed("seq"))
    throw DerivationParseError("missing (conclusion (seq ...))");
  auto terms_of = [&](const SExpr* list) {
    std::vector<TermPtr> out;
    if (!list) return out;
    for (size_t i = 1; i < list->items.size(); ++i) {
      const SExpr& item = list->items[i];
      if (!item.is_atom || !item.quoted)
        throw DerivationParseError("terms must be quoted strings");
      out.push_back(parse_term(item.text, env));
    }
    return out;
  };
  const SExpr& seq = conc->items[1];
  d.conclusion.ante = terms_of(seq.child("ante"));
  d.conclusion.succ = terms_of(seq.child("succ"));
  const SExpr* rule = e.child("rule");
  if (!rule || rule->items.size() != 2 || !rule->items[1].is_atom)
    throw DerivationParseError("missing (rule Name)");
  auto r = rule_from_name(rule->items[1].text);
  if (!r) throw DerivationParseError("unknown rule `" + rule->items[1].text + "`");
  d.rule = *r;
  d.witnesses = terms_of(e.child("witness"));
  if (const SExpr* prem = e.child("premises"))
    for (size_t i = 1; i < prem->items.size(); ++i)
      d.premises.push_back(derivation_from_sexpr(prem->items[i], env));
  return d;
}

void serialize_rec(const Derivation& d, std::ostringstream& out, int indent) {
  std::string pad(indent, ' ');
  out << pad << "(derivation\n" << pad << "  (conclusion (seq (ante";
  for (const auto& t : d.conclusion.ante)
    out << " " << quote_string(print_term(t));
  out << ") (succ";
  for (const auto& t : d.conclusion.succ)
    out << " " << quote_string(print_term(t));
  out << ")))\n" << pad << "  (rule " << rule_name(d.rule) << ")";
  if (!d.witnesses.empty()) {
    out << "\n" << pad << "  (witness";
    for (const auto& t : d.witnesses)
      out << " " << quote_string(print_term(t));
    out << ")";
  }
  if (!d.premises.empty()) {
    out << "\n" << pad << "  (premises\n";
    for (size_t i = 0; i < d.premises.size(); ++i) {
      serialize_rec(d.premises[i], out, indent + 4);
      if (i + 1 < d.premises.size()) out << "\n";
    }
    out << ")";
  }
  out << ")";
}

}  // namespace

Derivation parse_derivation(const std::string& text, const ParseEnv& env) {
  SExpr e;
  try {
    e = parse_sexpr(text);
  } catch (const SExprError& err) {
    throw DerivationParseError(err.what());
  }
  return derivation_from_sexpr(e, env);
}

std::string serialize_derivation(const Derivation& d) {
  std::ostringstream out;
  serialize_rec(d, out, 0);
  out << "\n";
  return out.str();
}

}  // namespace nabla
