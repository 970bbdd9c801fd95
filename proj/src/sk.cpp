#include "nabla/sk.hpp"

namespace nabla {

namespace {

TermPtr k_const(const TypePtr& a, const TypePtr& b) {
  return Term::constant("K", Type::fun(a, Type::fun(b, a)), Prim::K);
}

TermPtr s_const(const TypePtr& a, const TypePtr& b, const TypePtr& c) {
  TypePtr abc = Type::fun(a, Type::fun(b, c));
  TypePtr ab = Type::fun(a, b);
  return Term::constant("S", Type::fun(abc, Type::fun(ab, Type::fun(a, c))),
                        Prim::S);
}

// abstract(x, e): a lambda-free term denoting \x. e, for lambda-free e.
TermPtr abstract(const std::string& x, const TypePtr& xt, const TermPtr& e) {
  if (e->kind == Term::Kind::Var && e->name == x) {
    // I = S K K at the appropriate instance.
    TermPtr s = s_const(xt, Type::fun(xt, xt), xt);
    return Term::app(Term::app(s, k_const(xt, Type::fun(xt, xt))),
                     k_const(xt, xt));
  }
  if (!is_free_in(x, e)) return Term::app(k_const(e->type, xt), e);
  // e is an application with x free somewhere.
  TermPtr f = abstract(x, xt, e->fun);
  TermPtr a = abstract(x, xt, e->arg);
  TermPtr s = s_const(xt, e->arg->type, e->type);
  return Term::app(Term::app(s, f), a);
}

}  // namespace

TermPtr compile_sk(const TermPtr& t) {
  switch (t->kind) {
    case Term::Kind::Var:
    case Term::Kind::Const:
      return t;
    case Term::Kind::App: {
      TermPtr f = compile_sk(t->fun);
      TermPtr a = compile_sk(t->arg);
      if (f.get() == t->fun.get() && a.get() == t->arg.get()) return t;
      return Term::app(f, a);
    }
    case Term::Kind::Lam:
      return abstract(t->name, t->var_type(), compile_sk(t->body));
  }
  return t;
}

bool is_lambda_free(const TermPtr& t) {
  switch (t->kind) {
    case Term::Kind::Lam:
      return false;
    case Term::Kind::App:
      return is_lambda_free(t->fun) && is_lambda_free(t->arg);
    default:
      return true;
  }
}

}  // namespace nabla
