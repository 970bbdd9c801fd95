#include "nabla/term.hpp"

#include <map>

namespace nabla {

TypePtr Type::o() {
  static const TypePtr t = std::make_shared<Type>(Type{Kind::O, "", nullptr, nullptr});
  return t;
}

TypePtr Type::make_sort(const std::string& name) {
  return std::make_shared<Type>(Type{Kind::Sort, name, nullptr, nullptr});
}

TypePtr Type::fun(TypePtr arg, TypePtr res) {
  return std::make_shared<Type>(
      Type{Kind::Fun, "", std::move(arg), std::move(res)});
}

bool type_equal(const TypePtr& a, const TypePtr& b) {
  if (a.get() == b.get()) return true;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Type::Kind::O: return true;
    case Type::Kind::Sort: return a->sort == b->sort;
    case Type::Kind::Fun:
      return type_equal(a->arg, b->arg) && type_equal(a->res, b->res);
  }
  return false;
}

std::string type_to_string(const TypePtr& t) {
  switch (t->kind) {
    case Type::Kind::O: return "o";
    case Type::Kind::Sort: return t->sort;
    case Type::Kind::Fun: {
      std::string lhs = type_to_string(t->arg);
      if (t->arg->kind == Type::Kind::Fun) lhs = "(" + lhs + ")";
      return lhs + ">" + type_to_string(t->res);
    }
  }
  return "?";
}

TermPtr Term::var(const std::string& name, TypePtr type) {
  auto t = std::make_shared<Term>();
  t->kind = Kind::Var;
  t->name = name;
  t->type = std::move(type);
  return t;
}

TermPtr Term::constant(const std::string& name, TypePtr type, Prim prim) {
  auto t = std::make_shared<Term>();
  t->kind = Kind::Const;
  t->name = name;
  t->prim = prim;
  t->type = std::move(type);
  return t;
}

TermPtr Term::app(TermPtr fun, TermPtr arg) {
  const TypePtr& ft = fun->type;
  if (ft->kind != Type::Kind::Fun)
    throw TypeError("cannot apply non-function of type " + type_to_string(ft));
  if (!type_equal(ft->arg, arg->type))
    throw TypeError("argument type mismatch: expected " +
                    type_to_string(ft->arg) + ", got " +
                    type_to_string(arg->type));
  auto t = std::make_shared<Term>();
  t->kind = Kind::App;
  t->type = ft->res;
  t->fun = std::move(fun);
  t->arg = std::move(arg);
  return t;
}

TermPtr Term::lam(const std::string& var, TypePtr varType, TermPtr body) {
  auto t = std::make_shared<Term>();
  t->kind = Kind::Lam;
  t->name = var;
  t->type = Type::fun(std::move(varType), body->type);
  t->body = std::move(body);
  return t;
}

const char* prim_name(Prim p) {
  switch (p) {
    case Prim::D: return "D";
    case Prim::Q: return "Q";
    case Prim::A: return "A";
    case Prim::C: return "C";
    case Prim::V: return "V";
    case Prim::S: return "S";
    case Prim::K: return "K";
    case Prim::None: break;
  }
  return "?";
}

TermPtr prim_const(Prim p, const TypePtr& tau) {
  TypePtr o = Type::o();
  TypePtr ty;
  switch (p) {
    case Prim::D: ty = Type::fun(o, Type::fun(o, o)); break;
    case Prim::Q: ty = Type::fun(tau, Type::fun(tau, o)); break;
    case Prim::A: ty = Type::fun(Type::fun(tau, o), o); break;
    case Prim::C: ty = Type::fun(Type::fun(tau, o), tau); break;
    case Prim::V: ty = Type::fun(o, o); break;
    default: throw std::invalid_argument("prim_const: S/K need explicit types");
  }
  return Term::constant(prim_name(p), ty, p);
}

TypePtr type_of(const TermPtr& t) { return t->type; }

namespace {

void free_vars_into(const TermPtr& t, std::set<std::string>& bound,
                    std::set<std::string>& out) {
  switch (t->kind) {
    case Term::Kind::Var:
      if (!bound.count(t->name)) out.insert(t->name);
      break;
    case Term::Kind::Const: break;
    case Term::Kind::App:
      free_vars_into(t->fun, bound, out);
      free_vars_into(t->arg, bound, out);
      break;
    case Term::Kind::Lam: {
      bool was = bound.count(t->name) > 0;
      bound.insert(t->name);
      free_vars_into(t->body, bound, out);
      if (!was) bound.erase(t->name);
      break;
    }
  }
}

}  // namespace

std::set<std::string> free_vars(const TermPtr& t) {
  std::set<std::string> bound, out;
  free_vars_into(t, bound, out);
  return out;
}

bool is_free_in(const std::string& name, const TermPtr& t) {
  return free_vars(t).count(name) > 0;
}

namespace {

bool alpha_rec(const TermPtr& a, const TermPtr& b,
               std::map<std::string, std::string>& ab,
               std::map<std::string, std::string>& ba) {
  if (a.get() == b.get() && ab.empty()) return true;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Term::Kind::Var: {
      auto ia = ab.find(a->name);
      auto ib = ba.find(b->name);
      if (ia != ab.end() || ib != ba.end())
        return ia != ab.end() && ib != ba.end() && ia->second == b->name &&
               ib->second == a->name;
      return a->name == b->name;
    }
    case Term::Kind::Const:
      return a->name == b->name && a->prim == b->prim &&
             type_equal(a->type, b->type);
    case Term::Kind::App:
      return alpha_rec(a->fun, b->fun, ab, ba) &&
             alpha_rec(a->arg, b->arg, ab, ba);
    case Term::Kind::Lam: {
      if (!type_equal(a->var_type(), b->var_type())) return false;
      auto sa = ab.find(a->name);
      auto sb = ba.find(b->name);
      std::string olda = sa != ab.end() ? sa->second : "";
      std::string oldb = sb != ba.end() ? sb->second : "";
      bool hada = sa != ab.end(), hadb = sb != ba.end();
      ab[a->name] = b->name;
      ba[b->name] = a->name;
      bool ok = alpha_rec(a->body, b->body, ab, ba);
      if (hada) ab[a->name] = olda; else ab.erase(a->name);
      if (hadb) ba[b->name] = oldb; else ba.erase(b->name);
      return ok;
    }
  }
  return false;
}

}  // namespace

bool alpha_equal(const TermPtr& a, const TermPtr& b) {
  if (a.get() == b.get()) return true;
  if (!type_equal(a->type, b->type)) return false;
  std::map<std::string, std::string> ab, ba;
  return alpha_rec(a, b, ab, ba);
}

namespace {

// Deterministic fresh name: base plus the smallest primed suffix avoiding
// the given set.
std::string fresh_name(const std::string& base,
                       const std::set<std::string>& avoid) {
  std::string cand = base;
  while (avoid.count(cand)) cand += "'";
  return cand;
}

TermPtr subst_rec(const TermPtr& t, const std::string& v, const TermPtr& s,
                  const std::set<std::string>& sfree) {
  switch (t->kind) {
    case Term::Kind::Var:
      return t->name == v ? s : t;
    case Term::Kind::Const:
      return t;
    case Term::Kind::App: {
      TermPtr f = subst_rec(t->fun, v, s, sfree);
      TermPtr a = subst_rec(t->arg, v, s, sfree);
      if (f.get() == t->fun.get() && a.get() == t->arg.get()) return t;
      return Term::app(f, a);
    }
    case Term::Kind::Lam: {
      if (t->name == v) return t;
      if (!is_free_in(v, t->body)) return t;
      if (sfree.count(t->name)) {
        std::set<std::string> avoid = sfree;
        auto bf = free_vars(t->body);
        avoid.insert(bf.begin(), bf.end());
        avoid.insert(v);
        std::string nn = fresh_name(t->name, avoid);
        TermPtr renamed = subst_rec(t->body, t->name,
                                    Term::var(nn, t->var_type()), {});
        return Term::lam(nn, t->var_type(), subst_rec(renamed, v, s, sfree));
      }
      TermPtr b = subst_rec(t->body, v, s, sfree);
      if (b.get() == t->body.get()) return t;
      return Term::lam(t->name, t->var_type(), b);
    }
  }
  return t;
}

}  // namespace

TermPtr substitute(const TermPtr& t, const std::string& v, const TermPtr& s) {
  return subst_rec(t, v, s, free_vars(s));
}

namespace {

TermPtr normalize_rec(const TermPtr& t) {
  switch (t->kind) {
    case Term::Kind::Var:
    case Term::Kind::Const:
      return t;
    case Term::Kind::Lam: {
      TermPtr b = normalize_rec(t->body);
      if (b.get() == t->body.get()) return t;
      return Term::lam(t->name, t->var_type(), b);
    }
    case Term::Kind::App: {
      TermPtr f = t->fun;
      // Reduce the head far enough to expose a redex.
      while (true) {
        if (f->kind == Term::Kind::Lam) {
          TermPtr reduced = substitute(f->body, f->name, t->arg);
          return normalize_rec(reduced);
        }
        if (f->kind == Term::Kind::App) {
          TermPtr nf = normalize_rec(f);
          if (nf.get() != f.get() && nf->kind == Term::Kind::Lam) {
            f = nf;
            continue;
          }
          f = nf;
        }
        break;
      }
      TermPtr a = normalize_rec(t->arg);
      if (f.get() == t->fun.get() && a.get() == t->arg.get()) return t;
      return Term::app(f, a);
    }
  }
  return t;
}

}  // namespace

TermPtr beta_normalize(const TermPtr& t) { return normalize_rec(t); }

TermPtr spine_head(const TermPtr& t) {
  TermPtr h = t;
  while (h->kind == Term::Kind::App) h = h->fun;
  return h;
}

std::vector<TermPtr> spine_args(const TermPtr& t) {
  std::vector<TermPtr> rev;
  TermPtr h = t;
  while (h->kind == Term::Kind::App) {
    rev.push_back(h->arg);
    h = h->fun;
  }
  return {rev.rbegin(), rev.rend()};
}

TermPtr apply_spine(TermPtr head, const std::vector<TermPtr>& args) {
  for (const auto& a : args) head = Term::app(std::move(head), a);
  return head;
}

}  // namespace nabla
