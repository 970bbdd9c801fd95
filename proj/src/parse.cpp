#include "nabla/parse.hpp"

#include <cctype>
#include <vector>

namespace nabla {

namespace {

struct Tok {
  enum class Kind { Ident, Punct, End };
  Kind kind;
  std::string text;
  size_t pos;
};

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

std::vector<Tok> lex(const std::string& src) {
  std::vector<Tok> out;
  size_t i = 0;
  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (ident_char(c)) {
      size_t start = i;
      while (i < src.size() && ident_char(src[i])) ++i;
      out.push_back({Tok::Kind::Ident, src.substr(start, i - start), start});
      continue;
    }
    if (std::string("\\:.()>@,").find(c) != std::string::npos) {
      out.push_back({Tok::Kind::Punct, std::string(1, c), i});
      ++i;
      continue;
    }
    throw ParseError(std::string("unexpected character `") + c + "`", i);
  }
  out.push_back({Tok::Kind::End, "", src.size()});
  return out;
}

bool is_raw_prim(const std::string& s) {
  return s == "D" || s == "Q" || s == "A" || s == "C" || s == "V" ||
         s == "S" || s == "K";
}

class Parser {
 public:
  Parser(const std::string& src, const ParseEnv& env)
      : toks_(lex(src)), env_(env) {}

  TypePtr type() {
    TypePtr t = type_expr();
    expect_end();
    return t;
  }

  TermPtr term() {
    TermPtr t = term_expr();
    expect_end();
    return t;
  }

 private:
  const Tok& cur() const { return toks_[i_]; }
  const Tok& ahead(size_t n) const {
    return toks_[std::min(i_ + n, toks_.size() - 1)];
  }
  void advance() { ++i_; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, cur().pos);
  }

  bool punct(const std::string& p) const {
    return cur().kind == Tok::Kind::Punct && cur().text == p;
  }

  void eat_punct(const std::string& p) {
    if (!punct(p)) fail("expected `" + p + "`");
    advance();
  }

  std::string eat_ident(const char* what) {
    if (cur().kind != Tok::Kind::Ident) fail(std::string("expected ") + what);
    std::string s = cur().text;
    advance();
    return s;
  }

  void expect_end() {
    if (cur().kind != Tok::Kind::End) fail("trailing input");
  }

  TypePtr type_atom() {
    if (punct("(")) {
      advance();
      TypePtr t = type_expr();
      eat_punct(")");
      return t;
    }
    std::string n = eat_ident("a type");
    if (n == "o") return Type::o();
    if (env_.sorts.count(n)) return Type::make_sort(n);
    fail("unknown sort `" + n + "`");
  }

  TypePtr type_expr() {
    TypePtr lhs = type_atom();
    if (punct(">")) {
      advance();
      return Type::fun(lhs, type_expr());
    }
    return lhs;
  }

  // A binder-sugar occurrence: `name x : T . body` for binder abbreviations
  // and the lambda itself.
  bool binder_sugar_ahead() const {
    if (cur().kind != Tok::Kind::Ident) return false;
    const AbbrevDef* def = env_.catalog->find(cur().text);
    if (!def || !def->binder) return false;
    return ahead(1).kind == Tok::Kind::Ident && ahead(2).kind == Tok::Kind::Punct &&
           ahead(2).text == ":";
  }

  TermPtr lambda_tail(const std::string& binder) {
    std::string x = eat_ident("a bound variable");
    eat_punct(":");
    TypePtr t = type_expr();
    eat_punct(".");
    vars_[x].push_back(t);
    TermPtr body = term_expr();
    vars_[x].pop_back();
    if (vars_[x].empty()) vars_.erase(x);
    TermPtr lam = Term::lam(x, t, body);
    if (binder.empty()) return lam;
    return make_abbrev(binder, {lam});
  }

  TermPtr make_abbrev(const std::string& name, const std::vector<TermPtr>& args) {
    try {
      const AbbrevDef* def = env_.catalog->find(name);
      // Aliases for a bare primitive resolve eagerly, so the printed sugar
      // and the parsed term agree node for node.
      if (def && def->prim_alias &&
          args.size() >= static_cast<size_t>(def->arity)) {
        std::vector<TypePtr> ts;
        for (const auto& a : args) ts.push_back(a->type);
        std::vector<TermPtr> used(args.begin(), args.begin() + def->arity);
        TermPtr e = def->expand(def->type_for(ts), used);
        return apply_spine(e, {args.begin() + def->arity, args.end()});
      }
      return env_.catalog->make(name, args);
    } catch (const TypeError& e) {
      fail(std::string(e.what()));
    }
  }

  TypePtr prim_type_arg() {
    // `@tau` or `@(tau)`; defaults to o when absent.
    if (!punct("@")) return Type::o();
    advance();
    if (punct("(")) {
      advance();
      TypePtr t = type_expr();
      eat_punct(")");
      return t;
    }
    return type_atom();
  }

  std::vector<TypePtr> prim_type_args(size_t n) {
    eat_punct("@");
    eat_punct("(");
    std::vector<TypePtr> out;
    out.push_back(type_expr());
    while (punct(",")) {
      advance();
      out.push_back(type_expr());
    }
    eat_punct(")");
    if (out.size() != n) fail("wrong number of type instantiations");
    return out;
  }

  TermPtr raw_prim(const std::string& n) {
    if (n == "D") return prim_const(Prim::D, Type::o());
    if (n == "V") return prim_const(Prim::V, Type::o());
    if (n == "Q") return prim_const(Prim::Q, prim_type_arg());
    if (n == "A") return prim_const(Prim::A, prim_type_arg());
    if (n == "C") return prim_const(Prim::C, prim_type_arg());
    if (n == "K") {
      auto ts = prim_type_args(2);
      return Term::constant("K", Type::fun(ts[0], Type::fun(ts[1], ts[0])),
                            Prim::K);
    }
    // S @ (a, b, c) : (a>b>c) > (a>b) > a > c
    auto ts = prim_type_args(3);
    TypePtr abc = Type::fun(ts[0], Type::fun(ts[1], ts[2]));
    TypePtr ab = Type::fun(ts[0], ts[1]);
    return Term::constant(
        "S", Type::fun(abc, Type::fun(ab, Type::fun(ts[0], ts[2]))), Prim::S);
  }

  bool atom_ahead() const {
    return punct("(") || cur().kind == Tok::Kind::Ident;
  }

  // Parses one atom; a catalog name is reported through `abbrev` instead of
  // being built, so the caller can resolve schematic types from arguments.
  TermPtr atom(std::string* abbrev) {
    if (punct("(")) {
      advance();
      TermPtr t = term_expr();
      eat_punct(")");
      return t;
    }
    size_t pos = cur().pos;
    std::string n = eat_ident("a term");
    if (env_.catalog->find(n)) {
      if (abbrev) {
        *abbrev = n;
        return nullptr;
      }
      try {
        return env_.catalog->make(n, {});
      } catch (const TypeError& e) {
        throw ParseError(e.what(), pos);
      }
    }
    auto v = vars_.find(n);
    if (v != vars_.end() && !v->second.empty())
      return Term::var(n, v->second.back());
    auto c = env_.consts.find(n);
    if (c != env_.consts.end()) return Term::constant(n, c->second);
    auto fv = env_.vars.find(n);
    if (fv != env_.vars.end()) return Term::var(n, fv->second);
    if (is_raw_prim(n)) return raw_prim(n);
    throw ParseError("unknown identifier `" + n + "`", pos);
  }

  TermPtr term_expr() {
    if (punct("\\")) {
      advance();
      return lambda_tail("");
    }
    if (binder_sugar_ahead()) {
      std::string b = cur().text;
      advance();
      return lambda_tail(b);
    }
    std::string abbrev;
    TermPtr head = atom(&abbrev);
    std::vector<TermPtr> args;
    while (atom_ahead()) args.push_back(atom(nullptr));
    // A lambda or binder form extends to the end of the application.
    if (punct("\\")) {
      advance();
      args.push_back(lambda_tail(""));
    } else if (binder_sugar_ahead()) {
      std::string b = cur().text;
      advance();
      args.push_back(lambda_tail(b));
    }
    if (!abbrev.empty()) return make_abbrev(abbrev, args);
    for (const auto& a : args) head = Term::app(head, a);
    return head;
  }

  std::vector<Tok> toks_;
  const ParseEnv& env_;
  std::map<std::string, std::vector<TypePtr>> vars_;
  size_t i_ = 0;
};

}  // namespace

TypePtr parse_type(const std::string& src, const ParseEnv& env) {
  return Parser(src, env).type();
}

TermPtr parse_term(const std::string& src, const ParseEnv& env) {
  return Parser(src, env).term();
}

namespace {

enum class Pos { Top, Fun, Arg };

std::string wrap(const std::string& s, bool parens) {
  return parens ? "(" + s + ")" : s;
}

std::string type_suffix(const TypePtr& tau) {
  if (tau->kind == Type::Kind::O) return "";
  if (tau->kind == Type::Kind::Fun) return "@(" + type_to_string(tau) + ")";
  return "@" + type_to_string(tau);
}

std::string const_name(const TermPtr& t) {
  switch (t->prim) {
    case Prim::Q:
      return "Q" + type_suffix(t->type->arg);
    case Prim::A:
      return "A" + type_suffix(t->type->arg->arg);
    case Prim::C:
      return "C" + type_suffix(t->type->res);
    case Prim::K:
      return "K@(" + type_to_string(t->type->arg) + "," +
             type_to_string(t->type->res->arg) + ")";
    case Prim::S: {
      TypePtr abc = t->type->arg;
      return "S@(" + type_to_string(abc->arg) + "," +
             type_to_string(abc->res->arg) + "," +
             type_to_string(abc->res->res) + ")";
    }
    default:
      return t->name;
  }
}

bool name_reserved(const std::string& n) {
  return Catalog::standard().find(n) != nullptr || is_raw_prim(n) || n == "o";
}

std::string pp(const TermPtr& t, Pos pos);

std::string pp_binder(const std::string& kw, const TermPtr& lam, Pos pos) {
  std::string x = lam->name;
  TermPtr body = lam->body;
  if (name_reserved(x)) {
    std::string nn = x;
    auto fv = free_vars(body);
    do nn += "'";
    while (name_reserved(nn) || fv.count(nn));
    body = substitute(body, x, Term::var(nn, lam->var_type()));
    x = nn;
  }
  std::string s = kw + x + ":" + type_to_string(lam->var_type()) + ". " +
                  pp(body, Pos::Top);
  return wrap(s, pos != Pos::Top);
}

std::string pp(const TermPtr& t, Pos pos) {
  switch (t->kind) {
    case Term::Kind::Var:
      return t->name;
    case Term::Kind::Const:
      return const_name(t);
    case Term::Kind::Lam:
      return pp_binder("\\", t, pos);
    case Term::Kind::App:
      break;
  }
  TermPtr head = spine_head(t);
  std::vector<TermPtr> args = spine_args(t);
  std::string headStr;
  if (head->kind == Term::Kind::Const) {
    // Sugar over primitive spines.
    if (head->prim == Prim::A && args.size() == 1 &&
        args[0]->kind == Term::Kind::Lam)
      return pp_binder("forall ", args[0], pos);
    if (head->prim == Prim::C && args.size() == 1 &&
        args[0]->kind == Term::Kind::Lam)
      return pp_binder("eps ", args[0], pos);
    if (head->prim == Prim::C && args.size() >= 1) headStr = "sel";
    if (head->prim == Prim::Q && args.size() == 2) headStr = "Eq";
    if (head->prim == Prim::Q && args.size() == 1) headStr = "sing";
    if (head->prim == Prim::D && args.size() == 2) headStr = "nand";
    if (head->prim == Prim::V && args.size() == 1) headStr = "next";
    if (head->prim == Prim::None && args.size() == 1 &&
        args[0]->kind == Term::Kind::Lam) {
      const AbbrevDef* def = Catalog::standard().find(head->name);
      if (def && def->binder) return pp_binder(head->name + " ", args[0], pos);
    }
  }
  if (headStr.empty()) headStr = pp(head, Pos::Fun);
  std::string s = headStr;
  for (size_t i = 0; i < args.size(); ++i) {
    bool last = i + 1 == args.size();
    // A final lambda argument may stand unparenthesized.
    if (last && args[i]->kind == Term::Kind::Lam && pos == Pos::Top)
      s += " " + pp(args[i], Pos::Top);
    else
      s += " " + pp(args[i], Pos::Arg);
  }
  return wrap(s, pos == Pos::Arg);
}

}  // namespace

std::string print_term(const TermPtr& t) { return pp(t, Pos::Top); }

TermPtr fold_abbreviations(const TermPtr& t, const Catalog& catalog) {
  static const char* kFoldable[] = {"True", "False", "1",    "2",
                                    "3",    "N",     "Univ", "Empty"};
  for (const char* name : kFoldable) {
    const AbbrevDef* def = catalog.find(name);
    if (!def || def->arity != 0) continue;
    TermPtr expanded =
        expand_abbreviations(catalog.make(name, {}), catalog, ExpandDepth::All);
    if (!type_equal(t->type, expanded->type)) continue;
    if (alpha_equal(t, expanded) || alpha_equal(t, beta_normalize(expanded)))
      return catalog.make(name, {});
  }
  switch (t->kind) {
    case Term::Kind::App: {
      TermPtr f = fold_abbreviations(t->fun, catalog);
      TermPtr a = fold_abbreviations(t->arg, catalog);
      if (f.get() == t->fun.get() && a.get() == t->arg.get()) return t;
      return Term::app(f, a);
    }
    case Term::Kind::Lam: {
      TermPtr b = fold_abbreviations(t->body, catalog);
      if (b.get() == t->body.get()) return t;
      return Term::lam(t->name, t->var_type(), b);
    }
    default:
      return t;
  }
}

}  // namespace nabla
