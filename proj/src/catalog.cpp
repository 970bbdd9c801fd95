#include "nabla/catalog.hpp"

#include <set>

namespace nabla {

namespace {

TypePtr o() { return Type::o(); }

TypePtr fun(TypePtr a, TypePtr b) { return Type::fun(std::move(a), std::move(b)); }

TermPtr mk(const std::string& name, const std::vector<TermPtr>& args) {
  return Catalog::standard().make(name, args);
}

std::function<TypePtr(const std::vector<TypePtr>&)> fixed_type(TypePtr t) {
  return [t](const std::vector<TypePtr>&) { return t; };
}

TypePtr need_arg(const std::string& name, const std::vector<TypePtr>& ts) {
  if (ts.empty())
    throw TypeError("cannot infer the type instance of `" + name +
                    "` without an argument");
  return ts[0];
}

TypePtr need_pred_arg(const std::string& name, const std::vector<TypePtr>& ts) {
  TypePtr t = need_arg(name, ts);
  if (t->kind != Type::Kind::Fun || t->res->kind != Type::Kind::O)
    throw TypeError("`" + name + "` expects an argument of predicate type, got " +
                    type_to_string(t));
  return t->arg;
}

}  // namespace

const AbbrevDef* Catalog::find(const std::string& name) const {
  auto it = defs_.find(name);
  return it == defs_.end() ? nullptr : &it->second;
}

void Catalog::add(AbbrevDef def) { defs_[def.name] = std::move(def); }

void Catalog::define(const std::string& name, TermPtr value) {
  AbbrevDef def;
  def.name = name;
  def.arity = 0;
  def.type_for = fixed_type(value->type);
  def.expand = [value](const TypePtr&, const std::vector<TermPtr>&) {
    return value;
  };
  add(std::move(def));
}

TermPtr Catalog::make_const(const std::string& name,
                            const std::vector<TypePtr>& argTypes) const {
  const AbbrevDef* def = find(name);
  if (!def) throw UnknownAbbrevError("unknown abbreviation: " + name);
  return Term::constant(name, def->type_for(argTypes));
}

TermPtr Catalog::make(const std::string& name,
                      const std::vector<TermPtr>& args) const {
  std::vector<TypePtr> ts;
  ts.reserve(args.size());
  for (const auto& a : args) ts.push_back(a->type);
  return apply_spine(make_const(name, ts), args);
}

std::vector<std::string> Catalog::names() const {
  std::vector<std::string> out;
  for (const auto& [n, d] : defs_) out.push_back(n);
  return out;
}

const Catalog& Catalog::standard() {
  static const Catalog cat = [] {
    Catalog c;
    TypePtr O = o();
    TypePtr OO = fun(O, O);
    TypePtr OOO = fun(O, OO);

    auto ent = [&](const std::string& name, int arity, TypePtr type,
                   std::function<TermPtr(const TypePtr&,
                                         const std::vector<TermPtr>&)> exp,
                   bool alias = false) {
      AbbrevDef d;
      d.name = name;
      d.arity = arity;
      d.prim_alias = alias;
      d.type_for = fixed_type(std::move(type));
      d.expand = std::move(exp);
      c.add(std::move(d));
    };

    ent("True", 0, O, [](const TypePtr&, const std::vector<TermPtr>&) {
      TermPtr id = Term::lam("x", o(), Term::var("x", o()));
      return mk("Eq", {id, id});
    });
    ent("False", 0, O, [](const TypePtr&, const std::vector<TermPtr>&) {
      return mk("not", {mk("True", {})});
    });
    ent("nand", 2, OOO, [](const TypePtr&, const std::vector<TermPtr>& a) {
      return apply_spine(prim_const(Prim::D, o()), {a[0], a[1]});
    }, true);
    ent("not", 1, OO, [](const TypePtr&, const std::vector<TermPtr>& a) {
      return mk("nand", {a[0], a[0]});
    });
    ent("and", 2, OOO, [](const TypePtr&, const std::vector<TermPtr>& a) {
      return mk("not", {mk("nand", {a[0], a[1]})});
    });
    ent("or", 2, OOO, [](const TypePtr&, const std::vector<TermPtr>& a) {
      return mk("not", {mk("and", {mk("not", {a[0]}), mk("not", {a[1]})})});
    });
    ent("Simp", 2, OOO, [](const TypePtr&, const std::vector<TermPtr>& a) {
      return mk("Eq", {a[0], mk("and", {a[0], a[1]})});
    });
    // The biimplication is defined by the conjunction of its clause-level
    // consequences, one strict implication per clause.
    ent("iff", 2, OOO, [](const TypePtr&, const std::vector<TermPtr>& a) {
      const TermPtr &p = a[0], &q = a[1];
      std::vector<TermPtr> cs = {
          mk("limp", {mk("Eq", {p, q}), mk("True", {})}),
          mk("limp", {p, q}),
          mk("limp", {q, p}),
          mk("limp", {mk("not", {p}), mk("not", {q})}),
          mk("limp", {mk("not", {q}), mk("not", {p})}),
          mk("limp", {mk("and", {mk("and", {mk("not", {mk("Eq", {p, q})}),
                                            mk("ind", {p})}),
                                 mk("ind", {q})}),
                      mk("False", {})}),
      };
      TermPtr acc = cs[0];
      for (size_t i = 1; i < cs.size(); ++i) acc = mk("and", {acc, cs[i]});
      return acc;
    });
    ent("imp", 2, OOO, [](const TypePtr&, const std::vector<TermPtr>& a) {
      return mk("iff", {a[0], mk("and", {a[0], a[1]})});
    });
    ent("box", 1, OO, [](const TypePtr&, const std::vector<TermPtr>& a) {
      return mk("Eq", {a[0], mk("True", {})});
    });
    ent("bnot", 1, OO, [](const TypePtr&, const std::vector<TermPtr>& a) {
      return mk("not", {mk("box", {a[0]})});
    });
    ent("limp", 2, OOO, [](const TypePtr&, const std::vector<TermPtr>& a) {
      return mk("or", {mk("bnot", {a[0]}), a[1]});
    });
    ent("liff", 2, OOO, [](const TypePtr&, const std::vector<TermPtr>& a) {
      return mk("and", {mk("limp", {a[0], a[1]}), mk("limp", {a[1], a[0]})});
    });
    ent("qimp", 2, OOO, [](const TypePtr&, const std::vector<TermPtr>& a) {
      return mk("or", {mk("not", {a[0]}), a[1]});
    });
    ent("qiff", 2, OOO, [](const TypePtr&, const std::vector<TermPtr>& a) {
      return mk("and", {mk("qimp", {a[0], a[1]}), mk("qimp", {a[1], a[0]})});
    });
    ent("det", 1, OO, [](const TypePtr&, const std::vector<TermPtr>& a) {
      return mk("box", {mk("or", {a[0], mk("not", {a[0]})})});
    });
    ent("ind", 1, OO, [](const TypePtr&, const std::vector<TermPtr>& a) {
      return mk("not", {mk("det", {a[0]})});
    });
    ent("excl", 2, OOO, [](const TypePtr&, const std::vector<TermPtr>& a) {
      return mk("imp", {a[0], mk("not", {a[1]})});
    });
    ent("bexcl", 2, OOO, [](const TypePtr&, const std::vector<TermPtr>& a) {
      return mk("and", {mk("excl", {a[0], a[1]}), mk("excl", {a[1], a[0]})});
    });
    ent("next", 1, OO, [](const TypePtr&, const std::vector<TermPtr>& a) {
      return Term::app(prim_const(Prim::V, o()), a[0]);
    }, true);
    ent("hat", 1, OO, [](const TypePtr&, const std::vector<TermPtr>& a) {
      return mk("and", {a[0], mk("not", {a[0]})});
    });
    ent("check", 1, OO, [](const TypePtr&, const std::vector<TermPtr>& a) {
      return mk("or", {a[0], mk("not", {a[0]})});
    });

    // Type-schematic entries.
    {
      AbbrevDef d;
      d.name = "Eq";
      d.prim_alias = true;
      d.arity = 2;
      d.type_for = [](const std::vector<TypePtr>& ts) {
        TypePtr tau = need_arg("Eq", ts);
        return fun(tau, fun(tau, o()));
      };
      d.expand = [](const TypePtr& ct, const std::vector<TermPtr>& a) {
        return apply_spine(prim_const(Prim::Q, ct->arg), {a[0], a[1]});
      };
      c.add(std::move(d));
    }
    {
      AbbrevDef d;
      d.name = "sing";
      d.prim_alias = true;
      d.arity = 1;
      d.type_for = [](const std::vector<TypePtr>& ts) {
        TypePtr tau = need_arg("sing", ts);
        return fun(tau, fun(tau, o()));
      };
      d.expand = [](const TypePtr& ct, const std::vector<TermPtr>& a) {
        return Term::app(prim_const(Prim::Q, ct->arg), a[0]);
      };
      c.add(std::move(d));
    }
    {
      AbbrevDef d;
      d.name = "sel";
      d.prim_alias = true;
      d.arity = 1;
      d.type_for = [](const std::vector<TypePtr>& ts) {
        TypePtr tau = need_pred_arg("sel", ts);
        return fun(fun(tau, o()), tau);
      };
      d.expand = [](const TypePtr& ct, const std::vector<TermPtr>& a) {
        return Term::app(prim_const(Prim::C, ct->res), a[0]);
      };
      c.add(std::move(d));
    }
    {
      AbbrevDef d;
      d.name = "forall";
      d.prim_alias = true;
      d.arity = 1;
      d.binder = true;
      d.type_for = [](const std::vector<TypePtr>& ts) {
        return fun(fun(need_pred_arg("forall", ts), o()), o());
      };
      d.expand = [](const TypePtr& ct, const std::vector<TermPtr>& a) {
        return Term::app(prim_const(Prim::A, ct->arg->arg), a[0]);
      };
      c.add(std::move(d));
    }
    {
      AbbrevDef d;
      d.name = "exists";
      d.arity = 1;
      d.binder = true;
      d.type_for = [](const std::vector<TypePtr>& ts) {
        return fun(fun(need_pred_arg("exists", ts), o()), o());
      };
      d.expand = [](const TypePtr& ct, const std::vector<TermPtr>& a) {
        TypePtr tau = ct->arg->arg;
        TermPtr inner;
        if (a[0]->kind == Term::Kind::Lam) {
          inner = Term::lam(a[0]->name, tau, mk("not", {a[0]->body}));
        } else {
          std::string x = "x";
          auto avoid = free_vars(a[0]);
          while (avoid.count(x)) x += "'";
          inner = Term::lam(
              x, tau, mk("not", {Term::app(a[0], Term::var(x, tau))}));
        }
        return mk("not", {mk("forall", {inner})});
      };
      c.add(std::move(d));
    }
    {
      AbbrevDef d;
      d.name = "eps";
      d.prim_alias = true;
      d.arity = 1;
      d.binder = true;
      d.type_for = [](const std::vector<TypePtr>& ts) {
        TypePtr tau = need_pred_arg("eps", ts);
        return fun(fun(tau, o()), tau);
      };
      d.expand = [](const TypePtr& ct, const std::vector<TermPtr>& a) {
        return Term::app(prim_const(Prim::C, ct->res), a[0]);
      };
      c.add(std::move(d));
    }
    {
      AbbrevDef d;
      d.name = "Eqall";
      d.arity = 2;
      d.type_for = [](const std::vector<TypePtr>& ts) {
        TypePtr t = need_arg("Eqall", ts);
        if (t->kind != Type::Kind::Fun)
          throw TypeError("`Eqall` expects arguments of function type");
        return fun(t, fun(t, o()));
      };
      d.expand = [](const TypePtr& ct, const std::vector<TermPtr>& a) {
        TypePtr t = ct->arg;
        TypePtr alpha = t->arg;
        TermPtr p = Term::var("p", t), q = Term::var("q", t);
        TermPtr body = mk(
            "forall", {Term::lam("x", alpha,
                                 mk("Eq", {Term::app(p, Term::var("x", alpha)),
                                           Term::app(q, Term::var("x", alpha))}))});
        TermPtr lam = Term::lam("p", t, Term::lam("q", t, body));
        return apply_spine(lam, {a[0], a[1]});
      };
      c.add(std::move(d));
    }

    // Numerals and named sets over the truth codes.
    ent("inf", 0, O, [](const TypePtr&, const std::vector<TermPtr>&) {
      return mk("True", {});
    });
    ent("0", 0, O, [](const TypePtr&, const std::vector<TermPtr>&) {
      return mk("False", {});
    });
    ent("1", 0, O, [](const TypePtr&, const std::vector<TermPtr>&) {
      return mk("next", {mk("0", {})});
    });
    ent("2", 0, O, [](const TypePtr&, const std::vector<TermPtr>&) {
      return mk("next", {mk("1", {})});
    });
    ent("3", 0, O, [](const TypePtr&, const std::vector<TermPtr>&) {
      return mk("next", {mk("2", {})});
    });
    ent("dag", 0, O, [](const TypePtr&, const std::vector<TermPtr>&) {
      return mk("next", {mk("False", {})});
    });
    ent("ddag", 0, O, [](const TypePtr&, const std::vector<TermPtr>&) {
      return mk("next", {mk("next", {mk("False", {})})});
    });
    ent("N", 0, OO, [](const TypePtr&, const std::vector<TermPtr>&) {
      return Term::lam("x", o(),
                       mk("not", {mk("Eq", {Term::var("x", o()), mk("inf", {})})}));
    });
    ent("Univ", 0, OO, [](const TypePtr&, const std::vector<TermPtr>&) {
      return Term::lam("x", o(), mk("True", {}));
    });
    ent("Empty", 0, OO, [](const TypePtr&, const std::vector<TermPtr>&) {
      return Term::lam("x", o(), mk("False", {}));
    });
    return c;
  }();
  return cat;
}

namespace {

bool is_abbrev_node(const TermPtr& t, const Catalog& cat) {
  return t->kind == Term::Kind::Const && t->prim == Prim::None &&
         cat.find(t->name) != nullptr;
}

// Eta-wraps an under-applied occurrence so the definition can be applied.
TermPtr eta_expand_occurrence(const AbbrevDef& def, const TermPtr& constNode,
                              std::vector<TermPtr> args) {
  std::set<std::string> avoid;
  for (const auto& a : args) {
    auto fv = free_vars(a);
    avoid.insert(fv.begin(), fv.end());
  }
  TypePtr ty = constNode->type;
  for (const auto& a : args) {
    (void)a;
    ty = ty->res;
  }
  std::vector<std::pair<std::string, TypePtr>> params;
  for (int i = static_cast<int>(args.size()); i < def.arity; ++i) {
    std::string n = "x";
    while (avoid.count(n)) n += "'";
    avoid.insert(n);
    params.emplace_back(n, ty->arg);
    args.push_back(Term::var(n, ty->arg));
    ty = ty->res;
  }
  TermPtr body = def.expand(constNode->type, args);
  for (auto it = params.rbegin(); it != params.rend(); ++it)
    body = Term::lam(it->first, it->second, body);
  return body;
}

TermPtr expand_pass(const TermPtr& t, const Catalog& cat) {
  switch (t->kind) {
    case Term::Kind::Var:
      return t;
    case Term::Kind::Const:
      if (is_abbrev_node(t, cat)) {
        const AbbrevDef* def = cat.find(t->name);
        return def->arity == 0 ? def->expand(t->type, {})
                               : eta_expand_occurrence(*def, t, {});
      }
      return t;
    case Term::Kind::Lam: {
      TermPtr b = expand_pass(t->body, cat);
      if (b.get() == t->body.get()) return t;
      return Term::lam(t->name, t->var_type(), b);
    }
    case Term::Kind::App: {
      TermPtr head = spine_head(t);
      std::vector<TermPtr> args = spine_args(t);
      for (auto& a : args) a = expand_pass(a, cat);
      if (is_abbrev_node(head, cat)) {
        const AbbrevDef* def = cat.find(head->name);
        size_t n = static_cast<size_t>(def->arity);
        if (args.size() >= n) {
          std::vector<TermPtr> used(args.begin(), args.begin() + n);
          TermPtr e = def->expand(head->type, used);
          return apply_spine(e, {args.begin() + n, args.end()});
        }
        return apply_spine(eta_expand_occurrence(*def, head, {}), args);
      }
      return apply_spine(expand_pass(head, cat), args);
    }
  }
  return t;
}

}  // namespace

bool contains_abbrev(const TermPtr& t, const Catalog& cat) {
  if (is_abbrev_node(t, cat)) return true;
  switch (t->kind) {
    case Term::Kind::App:
      return contains_abbrev(t->fun, cat) || contains_abbrev(t->arg, cat);
    case Term::Kind::Lam:
      return contains_abbrev(t->body, cat);
    default:
      return false;
  }
}

TermPtr expand_abbreviations(const TermPtr& t, const Catalog& cat,
                             ExpandDepth depth) {
  TermPtr cur = expand_pass(t, cat);
  if (depth == ExpandDepth::One) return cur;
  for (int i = 0; i < 10000; ++i) {
    if (!contains_abbrev(cur, cat)) return cur;
    cur = expand_pass(cur, cat);
  }
  throw std::runtime_error("abbreviation expansion did not terminate");
}

}  // namespace nabla
