#include "nabla/models.hpp"

#include <sstream>
#include <unordered_map>

#include "nabla/parse.hpp"
#include "nabla/sexpr.hpp"

namespace nabla {

ValuePtr Value::make_code(TruthCode c) {
  static const std::vector<ValuePtr> pool = [] {
    std::vector<ValuePtr> out;
    for (int i = 0; i < 256; ++i) {
      auto v = std::make_shared<Value>();
      v->kind = Kind::Code;
      v->type = Type::o();
      v->code = TruthCode{static_cast<std::uint8_t>(i)};
      out.push_back(std::move(v));
    }
    return out;
  }();
  return pool[c.raw];
}

ValuePtr Value::sort_elem(TypePtr sort, std::uint64_t idx) {
  auto v = std::make_shared<Value>();
  v->kind = Kind::Sort;
  v->type = std::move(sort);
  v->elem = idx;
  return v;
}

ValuePtr Value::func(TypePtr type, std::vector<ValuePtr> graph) {
  auto v = std::make_shared<Value>();
  v->kind = Kind::Func;
  v->type = std::move(type);
  v->graph = std::move(graph);
  return v;
}

ValuePtr Value::closure(Prim p, TypePtr type, std::vector<ValuePtr> args) {
  auto v = std::make_shared<Value>();
  v->kind = Kind::Closure;
  v->type = std::move(type);
  v->prim = p;
  v->args = std::move(args);
  return v;
}

ValuePtr Value::conn_closure(Conn c, TypePtr type, std::vector<ValuePtr> args) {
  auto v = std::make_shared<Value>();
  v->kind = Kind::Closure;
  v->type = std::move(type);
  v->conn = c;
  v->args = std::move(args);
  return v;
}

namespace {

int prim_arity(Prim p) {
  switch (p) {
    case Prim::D: return 2;
    case Prim::Q: return 2;
    case Prim::A: return 1;
    case Prim::C: return 1;
    case Prim::V: return 1;
    case Prim::K: return 2;
    case Prim::S: return 3;
    case Prim::None: break;
  }
  throw ModelError("not a primitive");
}

TruthCode as_code(const ValuePtr& v) {
  if (v->kind != Value::Kind::Code)
    throw ModelError("expected a truth code value");
  return v->code;
}

}  // namespace

Universe::Universe(int k, std::map<std::string, int> sortSizes,
                   std::uint64_t maxCarrier)
    : space_(k), sorts_(std::move(sortSizes)), maxCarrier_(maxCarrier) {
  for (const auto& [n, s] : sorts_)
    if (s < 1) throw ModelError("sort `" + n + "` must be non-empty");
}

int Universe::sort_size(const std::string& name) const {
  auto it = sorts_.find(name);
  if (it == sorts_.end()) throw ModelError("unknown sort `" + name + "`");
  return it->second;
}

std::uint64_t Universe::carrier_size(const TypePtr& t) const {
  switch (t->kind) {
    case Type::Kind::O:
      return static_cast<std::uint64_t>(space_.size());
    case Type::Kind::Sort:
      return static_cast<std::uint64_t>(sort_size(t->sort));
    case Type::Kind::Fun: {
      std::uint64_t n = carrier_size(t->arg);
      std::uint64_t m = carrier_size(t->res);
      std::uint64_t out = 1;
      for (std::uint64_t i = 0; i < n; ++i) {
        if (m != 0 && out > maxCarrier_ / m)
          throw CarrierTooLarge("carrier of " + type_to_string(t) +
                                " exceeds the enumeration guard");
        out *= m;
      }
      if (out > maxCarrier_)
        throw CarrierTooLarge("carrier of " + type_to_string(t) +
                              " exceeds the enumeration guard");
      return out;
    }
  }
  throw ModelError("bad type");
}

ValuePtr Universe::value_at(const TypePtr& t, std::uint64_t idx) const {
  switch (t->kind) {
    case Type::Kind::O:
      if (idx >= static_cast<std::uint64_t>(space_.size()))
        throw ModelError("code index out of range");
      return Value::make_code(space_.code(static_cast<int>(idx)));
    case Type::Kind::Sort:
      if (idx >= static_cast<std::uint64_t>(sort_size(t->sort)))
        throw ModelError("sort index out of range");
      return Value::sort_elem(t, idx);
    case Type::Kind::Fun: {
      std::uint64_t n = carrier_size(t->arg);
      std::uint64_t m = carrier_size(t->res);
      std::uint64_t total = carrier_size(t);
      if (idx >= total) throw ModelError("function index out of range");
      // Digits of idx in base m, first argument most significant.
      std::vector<ValuePtr> graph(n);
      for (std::uint64_t i = n; i-- > 0;) {
        graph[i] = value_at(t->res, idx % m);
        idx /= m;
      }
      return Value::func(t, std::move(graph));
    }
  }
  throw ModelError("bad type");
}

std::uint64_t Universe::index_of(const ValuePtr& v) const {
  switch (v->kind) {
    case Value::Kind::Code:
      if (!space_.contains(v->code))
        throw ModelError("code outside the carrier");
      return v->code.raw;
    case Value::Kind::Sort:
      return v->elem;
    case Value::Kind::Closure:
      return index_of(materialize(v));
    case Value::Kind::Func: {
      std::uint64_t m = carrier_size(v->type->res);
      std::uint64_t idx = 0;
      for (const auto& g : v->graph) idx = idx * m + index_of(g);
      return idx;
    }
  }
  throw ModelError("bad value");
}

ValuePtr Universe::materialize(const ValuePtr& v) const {
  if (v->kind != Value::Kind::Closure) return v;
  if (v->type->kind != Type::Kind::Fun)
    throw ModelError("cannot materialize a non-function closure");
  std::uint64_t n = carrier_size(v->type->arg);
  std::vector<ValuePtr> graph;
  graph.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i)
    graph.push_back(apply(v, value_at(v->type->arg, i)));
  return Value::func(v->type, std::move(graph));
}

ValuePtr Universe::apply(const ValuePtr& f, const ValuePtr& a) const {
  if (f->kind == Value::Kind::Func) {
    std::uint64_t i = index_of(a);
    if (i >= f->graph.size()) throw ModelError("application out of range");
    return f->graph[i];
  }
  if (f->kind != Value::Kind::Closure)
    throw ModelError("cannot apply a non-function value");
  std::vector<ValuePtr> args = f->args;
  args.push_back(a);
  if (f->conn) {
    if (static_cast<int>(args.size()) < conn_arity(*f->conn))
      return Value::conn_closure(*f->conn, f->type->res, std::move(args));
    std::vector<TruthCode> codes;
    for (const auto& v : args) codes.push_back(as_code(v));
    return Value::make_code(eval_connective(*f->conn, codes, space_));
  }
  if (static_cast<int>(args.size()) < prim_arity(f->prim))
    return Value::closure(f->prim, f->type->res, std::move(args));
  switch (f->prim) {
    case Prim::D:
      return Value::make_code(
          neg_code(conj_code(as_code(args[0]), as_code(args[1]))));
    case Prim::V:
      return Value::make_code(next_code(as_code(args[0]), space_));
    case Prim::Q:
      return Value::make_code(value_equal(args[0], args[1])
                                  ? TruthCode::det_true()
                                  : TruthCode::det_false());
    case Prim::A: {
      const ValuePtr& p = args[0];
      TypePtr tau = p->type->arg;
      std::uint64_t n = carrier_size(tau);
      std::vector<TruthCode> vals;
      vals.reserve(n);
      for (std::uint64_t i = 0; i < n; ++i)
        vals.push_back(as_code(apply(p, value_at(tau, i))));
      return Value::make_code(fold_universal(vals));
    }
    case Prim::C:
      return canonical_choice(args[0]);
    case Prim::K:
      return args[0];
    case Prim::S:
      return apply(apply(args[0], args[2]), apply(args[1], args[2]));
    case Prim::None:
      break;
  }
  throw ModelError("bad closure");
}

bool Universe::value_equal(const ValuePtr& a, const ValuePtr& b) const {
  if (a.get() == b.get()) return true;
  if (a->kind == Value::Kind::Code && b->kind == Value::Kind::Code)
    return a->code == b->code;
  if (a->kind == Value::Kind::Sort && b->kind == Value::Kind::Sort)
    return a->elem == b->elem;
  // Identical closures are equal without enumeration.
  if (a->kind == Value::Kind::Closure && b->kind == Value::Kind::Closure &&
      a->prim == b->prim && a->conn == b->conn &&
      a->args.size() == b->args.size() && type_equal(a->type, b->type)) {
    bool same = true;
    for (size_t i = 0; i < a->args.size() && same; ++i)
      same = value_equal(a->args[i], b->args[i]);
    if (same) return true;
  }
  ValuePtr ma = materialize(a);
  ValuePtr mb = materialize(b);
  if (ma->kind != Value::Kind::Func || mb->kind != Value::Kind::Func ||
      ma->graph.size() != mb->graph.size())
    return false;
  for (size_t i = 0; i < ma->graph.size(); ++i)
    if (!value_equal(ma->graph[i], mb->graph[i])) return false;
  return true;
}

ValuePtr Universe::canonical_choice(const ValuePtr& pred) const {
  if (pred->type->kind != Type::Kind::Fun)
    throw ModelError("choice needs a predicate");
  TypePtr tau = pred->type->arg;
  std::uint64_t n = carrier_size(tau);
  for (std::uint64_t i = 0; i < n; ++i) {
    ValuePtr x = value_at(tau, i);
    if (as_code(apply(pred, x)).is_true()) return x;
  }
  return value_at(tau, 0);
}

namespace {

std::string value_text(const Universe& u, const ValuePtr& v) {
  switch (v->kind) {
    case Value::Kind::Code:
      return code_name(v->code);
    case Value::Kind::Sort:
      return "(elem " + std::to_string(v->elem) + ")";
    case Value::Kind::Closure:
      return value_text(u, u.materialize(v));
    case Value::Kind::Func: {
      std::string s = "(func";
      for (const auto& g : v->graph) s += " " + value_text(u, g);
      return s + ")";
    }
  }
  return "?";
}

}  // namespace

std::string Universe::describe(const ValuePtr& v) const {
  return value_text(*this, v);
}

Universe Model::universe(std::uint64_t maxCarrier) const {
  std::map<std::string, int> ss(sorts.begin(), sorts.end());
  return Universe(k, std::move(ss), maxCarrier);
}

Model code_model(int k) {
  Model m;
  m.k = k;
  return m;
}

// Closed truth-code abbreviations the evaluator resolves directly.
std::optional<int> numeral_steps(const std::string& n) {
  if (n == "True" || n == "inf") return -1;  // T
  if (n == "False" || n == "0") return 0;
  if (n == "1" || n == "dag") return 1;
  if (n == "2" || n == "ddag") return 2;
  if (n == "3") return 3;
  return std::nullopt;
}

TruthCode numeral_code(int steps, const CodeSpace& sp) {
  if (steps < 0) return TruthCode::det_true();
  TruthCode c = TruthCode::det_false();
  for (int i = 0; i < steps; ++i) c = next_code(c, sp);
  return c;
}

bool conn_type_matches(Conn c, const TypePtr& t) {
  TypePtr cur = t;
  for (int i = 0; i < conn_arity(c); ++i) {
    if (cur->kind != Type::Kind::Fun || cur->arg->kind != Type::Kind::O)
      return false;
    cur = cur->res;
  }
  return cur->kind == Type::Kind::O;
}

// True when the constant needs no expansion: the evaluator knows it.
bool native_const(const TermPtr& t) {
  if (t->kind != Term::Kind::Const || t->prim != Prim::None) return false;
  if (numeral_steps(t->name) && t->type->kind == Type::Kind::O) return true;
  auto c = conn_from_name(t->name);
  return c && conn_type_matches(*c, t->type);
}

namespace {

struct SemanticExpander {
  const Catalog& cat;
  std::map<const Term*, TermPtr> memo;

  TermPtr rec(const TermPtr& t) {
    auto hit = memo.find(t.get());
    if (hit != memo.end()) return hit->second;
    TermPtr out = step(t);
    memo.emplace(t.get(), out);
    return out;
  }

  bool expandable(const TermPtr& head) const {
    return head->kind == Term::Kind::Const && head->prim == Prim::None &&
           cat.find(head->name) != nullptr && !native_const(head);
  }

  TermPtr step(const TermPtr& t) {
    switch (t->kind) {
      case Term::Kind::Var:
        return t;
      case Term::Kind::Const:
        if (expandable(t)) {
          const AbbrevDef* def = cat.find(t->name);
          TermPtr e = def->arity == 0
                          ? def->expand(t->type, {})
                          : expand_abbreviations(t, cat, ExpandDepth::One);
          return rec(e);
        }
        return t;
      case Term::Kind::Lam: {
        TermPtr b = rec(t->body);
        if (b.get() == t->body.get()) return t;
        return Term::lam(t->name, t->var_type(), b);
      }
      case Term::Kind::App: {
        TermPtr head = spine_head(t);
        std::vector<TermPtr> args = spine_args(t);
        for (auto& a : args) a = rec(a);
        if (expandable(head)) {
          const AbbrevDef* def = cat.find(head->name);
          size_t n = static_cast<size_t>(def->arity);
          if (args.size() >= n) {
            std::vector<TermPtr> used(args.begin(), args.begin() + n);
            TermPtr e = def->expand(head->type, used);
            return rec(apply_spine(e, {args.begin() + n, args.end()}));
          }
          TermPtr e = expand_abbreviations(head, cat, ExpandDepth::One);
          return rec(apply_spine(e, args));
        }
        return apply_spine(rec(head), args);
      }
    }
    return t;
  }
};

}  // namespace

TermPtr expand_semantic(const TermPtr& t, const Catalog& catalog) {
  SemanticExpander e{catalog};
  return e.rec(t);
}

namespace {

// Expanded terms are DAGs with heavy sharing (e.g. `not x` is `nand x x`
// over one shared x), so evaluation memoizes per node.  The stamp changes
// with every binding change, keeping cached entries valid for the current
// environment only.
struct Interp {
  const Model& model;
  const Universe& u;
  std::map<std::string, std::vector<ValuePtr>> env;
  std::uint64_t stamp = 0;
  std::uint64_t nextStamp = 0;
  struct KeyHash {
    size_t operator()(const std::pair<const Term*, std::uint64_t>& k) const {
      return std::hash<const Term*>()(k.first) ^
             (std::hash<std::uint64_t>()(k.second) * 0x9e3779b97f4a7c15ull);
    }
  };
  std::unordered_map<std::pair<const Term*, std::uint64_t>, ValuePtr, KeyHash>
      cache;

  ValuePtr eval(const TermPtr& t) {
    switch (t->kind) {
      case Term::Kind::Var: {
        auto it = env.find(t->name);
        if (it == env.end() || it->second.empty())
          throw ModelError("unbound variable `" + t->name + "`");
        return it->second.back();
      }
      case Term::Kind::Const: {
        if (t->prim != Prim::None) return Value::closure(t->prim, t->type, {});
        if (native_const(t)) {
          if (auto steps = numeral_steps(t->name))
            return Value::make_code(numeral_code(*steps, u.space()));
          return Value::conn_closure(*conn_from_name(t->name), t->type, {});
        }
        auto it = model.consts.find(t->name);
        if (it == model.consts.end())
          throw ModelError("no interpretation for constant `" + t->name + "`");
        if (!type_equal(it->second->type, t->type))
          throw ModelError("constant `" + t->name + "` used at the wrong type");
        return it->second;
      }
      case Term::Kind::App: {
        auto key = std::make_pair(t.get(), stamp);
        auto hit = cache.find(key);
        if (hit != cache.end()) return hit->second;
        ValuePtr v = u.apply(eval(t->fun), eval(t->arg));
        cache.emplace(key, v);
        return v;
      }
      case Term::Kind::Lam: {
        auto key = std::make_pair(t.get(), stamp);
        auto hit = cache.find(key);
        if (hit != cache.end()) return hit->second;
        TypePtr at = t->var_type();
        std::uint64_t n = u.carrier_size(at);
        std::vector<ValuePtr> graph;
        graph.reserve(n);
        auto& stack = env[t->name];
        std::uint64_t saved = stamp;
        for (std::uint64_t i = 0; i < n; ++i) {
          stack.push_back(u.value_at(at, i));
          stamp = ++nextStamp;
          graph.push_back(eval(t->body));
          stack.pop_back();
          stamp = saved;
        }
        ValuePtr v = Value::func(t->type, std::move(graph));
        cache.emplace(key, v);
        return v;
      }
    }
    throw ModelError("bad term");
  }
};

ValuePtr interp(const TermPtr& t, const Model& model, const Universe& u,
                const std::map<std::string, std::vector<ValuePtr>>& env) {
  Interp in{model, u, env};
  return in.eval(t);
}

}  // namespace

ValuePtr interpret_term(const TermPtr& t, const Model& model,
                        const std::map<std::string, ValuePtr>& varEnv,
                        const Catalog& catalog) {
  TermPtr full = beta_normalize(expand_semantic(t, catalog));
  Universe u = model.universe();
  std::map<std::string, std::vector<ValuePtr>> env;
  for (const auto& [n, v] : varEnv) env[n].push_back(v);
  return interp(full, model, u, env);
}

const char* profile_name(Profile p) {
  switch (p) {
    case Profile::Base: return "base";
    case Profile::Omega: return "omega";
    case Profile::Delta: return "delta";
    case Profile::Dag: return "dag";
    case Profile::Ddag: return "ddag";
  }
  return "?";
}

std::optional<Profile> profile_from_name(const std::string& s) {
  for (Profile p : {Profile::Base, Profile::Omega, Profile::Delta,
                    Profile::Dag, Profile::Ddag})
    if (s == profile_name(p)) return p;
  return std::nullopt;
}

namespace {

}  // namespace

std::vector<AxiomScheme> profile_schemes(Profile p, const Model& model) {
  const Catalog& cat = Catalog::standard();
  TypePtr o = Type::o();
  TypePtr oo = Type::fun(o, o);
  TermPtr x = Term::var("x", o);
  TermPtr y = Term::var("y", o);
  auto mk = [&](const std::string& n, const std::vector<TermPtr>& a) {
    return cat.make(n, a);
  };
  std::vector<AxiomScheme> out;

  out.push_back({"IndetNeg",
                 {{"x", o}},
                 mk("limp", {mk("ind", {x}), mk("Eq", {mk("not", {x}), x})})});
  out.push_back(
      {"IndetNand",
       {{"x", o}, {"y", o}},
       mk("limp", {mk("and", {mk("and", {mk("not", {mk("Eq", {x, y})}),
                                         mk("ind", {x})}),
                              mk("ind", {y})}),
                   mk("nand", {x, y})})});

  auto choice_at = [&](const TypePtr& tau, const std::string& label) {
    TermPtr pv = Term::var("p", Type::fun(tau, o));
    TermPtr xv = Term::var("x", tau);
    out.push_back({label,
                   {{"p", Type::fun(tau, o)}, {"x", tau}},
                   mk("limp", {Term::app(pv, xv),
                               Term::app(pv, mk("sel", {pv}))})});
  };
  choice_at(o, "Choice");
  for (const auto& [sn, sz] : model.sorts)
    choice_at(Type::make_sort(sn), "Choice@" + sn);

  out.push_back({"GenInjective",
                 {{"x", o}, {"y", o}},
                 mk("limp", {mk("Eq", {mk("next", {x}), mk("next", {y})}),
                             mk("Eq", {x, y})})});
  out.push_back(
      {"GenInfinity", {}, mk("Eq", {mk("next", {mk("inf", {})}), mk("inf", {})})});
  {
    TermPtr pv = Term::var("p", oo);
    TermPtr step =
        mk("forall", {Term::lam("x", o,
                                mk("limp", {Term::app(pv, x),
                                            Term::app(pv, mk("next", {x}))}))});
    out.push_back(
        {"GenInduction",
         {{"p", oo}, {"y", o}},
         mk("limp",
            {mk("and", {mk("and", {Term::app(pv, mk("inf", {})),
                                   Term::app(pv, mk("0", {}))}),
                        step}),
             Term::app(pv, y)})});
  }

  switch (p) {
    case Profile::Base:
      break;
    case Profile::Omega:
      // Open in x so a confinement failure names the failing code.
      out.push_back(
          {"OmegaAxiom",
           {{"x", o}},
           mk("and",
              {mk("limp", {mk("ind", {x}), mk("ind", {mk("next", {x})})}),
               mk("exists", {Term::lam("y", o, mk("ind", {y}))})})});
      break;
    case Profile::Delta:
      out.push_back({"DeltaAxiom", {{"x", o}}, mk("det", {x})});
      break;
    case Profile::Dag:
      out.push_back({"DagAxiom",
                     {{"x", o}},
                     mk("or", {mk("det", {x}), mk("Eq", {x, mk("dag", {})})})});
      break;
    case Profile::Ddag:
      out.push_back(
          {"DdagAxiom",
           {{"x", o}},
           mk("or", {mk("or", {mk("det", {x}), mk("Eq", {x, mk("dag", {})})}),
                     mk("Eq", {x, mk("ddag", {})})})});
      break;
  }
  return out;
}

std::vector<AxiomResult> check_axiom_profile(const Model& model, Profile p) {
  Universe u = model.universe();
  std::vector<AxiomResult> out;
  for (const AxiomScheme& ax : profile_schemes(p, model)) {
    TermPtr full = beta_normalize(
        expand_semantic(ax.formula, Catalog::standard()));
    AxiomResult res{ax.name, true, ""};
    std::vector<std::uint64_t> sizes, idx(ax.vars.size(), 0);
    for (const auto& [n, ty] : ax.vars) sizes.push_back(u.carrier_size(ty));
    std::map<std::string, std::vector<ValuePtr>> env;
    bool done = false;
    while (!done) {
      env.clear();
      for (size_t i = 0; i < ax.vars.size(); ++i)
        env[ax.vars[i].first].push_back(
            u.value_at(ax.vars[i].second, idx[i]));
      ValuePtr v = interp(full, model, u, env);
      if (v->kind != Value::Kind::Code || !v->code.is_true()) {
        res.holds = false;
        std::ostringstream w;
        for (size_t i = 0; i < ax.vars.size(); ++i) {
          if (i) w << ", ";
          w << ax.vars[i].first << "="
            << u.describe(env[ax.vars[i].first].back());
        }
        if (ax.vars.empty()) w << "(closed)";
        res.witness = w.str();
        break;
      }
      // Advance the last variable fastest.
      done = true;
      for (size_t i = ax.vars.size(); i-- > 0;) {
        if (++idx[i] < sizes[i]) {
          done = false;
          break;
        }
        idx[i] = 0;
      }
      if (ax.vars.empty()) done = true;
    }
    out.push_back(std::move(res));
  }
  return out;
}

namespace {

ValuePtr parse_value(const SExpr& e, const TypePtr& t, const Universe& u) {
  switch (t->kind) {
    case Type::Kind::O: {
      if (!e.is_atom) throw ModelError("expected a truth code");
      auto c = code_from_name(e.text);
      if (!c || !u.space().contains(*c))
        throw ModelError("bad truth code `" + e.text + "`");
      return Value::make_code(*c);
    }
    case Type::Kind::Sort: {
      if (!e.headed("elem")) throw ModelError("expected (elem i)");
      std::uint64_t i = std::stoull(e.at(1).text);
      if (i >= u.carrier_size(t)) throw ModelError("sort element out of range");
      return Value::sort_elem(t, i);
    }
    case Type::Kind::Fun: {
      if (!e.headed("func")) throw ModelError("expected (func ...)");
      std::uint64_t n = u.carrier_size(t->arg);
      if (e.items.size() != n + 1)
        throw ModelError("function graph for " + type_to_string(t) +
                         " needs " + std::to_string(n) + " entries");
      std::vector<ValuePtr> graph;
      for (std::uint64_t i = 0; i < n; ++i)
        graph.push_back(parse_value(e.items[i + 1], t->res, u));
      return Value::func(t, std::move(graph));
    }
  }
  throw ModelError("bad type");
}

}  // namespace

Model parse_model(const std::string& src) {
  SExpr e = parse_sexpr(src);
  if (!e.headed("model")) throw ModelError("expected (model ...)");
  Model m;
  const SExpr* codes = e.child("codes");
  if (!codes) throw ModelError("missing (codes k)");
  m.k = std::stoi(codes->at(1).text);
  ParseEnv env;
  for (const SExpr* s : e.children("sort")) {
    std::string name = s->at(1).text;
    int size = std::stoi(s->at(2).text);
    m.sorts.emplace_back(name, size);
    env.sorts.insert(name);
  }
  Universe u = m.universe();
  for (const SExpr* c : e.children("const")) {
    std::string name = c->at(1).text;
    if (!c->at(2).quoted) throw ModelError("constant type must be quoted");
    TypePtr ty = parse_type(c->at(2).text, env);
    m.constTypes[name] = ty;
    m.consts[name] = parse_value(c->at(3), ty, u);
  }
  return m;
}

std::string serialize_model(const Model& m) {
  Universe u = m.universe();
  std::ostringstream os;
  os << "(model\n  (codes " << m.k << ")\n";
  for (const auto& [n, s] : m.sorts) os << "  (sort " << n << " " << s << ")\n";
  for (const auto& [n, v] : m.consts) {
    auto ty = m.constTypes.find(n);
    if (ty == m.constTypes.end()) throw ModelError("missing type for " + n);
    os << "  (const " << n << " " << quote_string(type_to_string(ty->second))
       << " " << u.describe(v) << ")\n";
  }
  os << ")\n";
  return os.str();
}

}  // namespace nabla
