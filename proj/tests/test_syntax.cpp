#include "doctest.h"
#include "nabla/catalog.hpp"
#include "nabla/term.hpp"

using namespace nabla;

namespace {

TypePtr O() { return Type::o(); }

TermPtr mk(const std::string& n, const std::vector<TermPtr>& args) {
  return Catalog::standard().make(n, args);
}

}  // namespace

TEST_CASE("types print with right-associative arrows") {
  TypePtr oo = Type::fun(O(), O());
  CHECK(type_to_string(oo) == "o>o");
  CHECK(type_to_string(Type::fun(O(), oo)) == "o>o>o");
  CHECK(type_to_string(Type::fun(oo, O())) == "(o>o)>o");
  TypePtr s = Type::make_sort("ind");
  CHECK(type_to_string(Type::fun(s, O())) == "ind>o");
  CHECK(type_equal(Type::fun(O(), O()), Type::fun(O(), O())));
  CHECK(!type_equal(s, O()));
}

TEST_CASE("application is type-checked at construction") {
  TermPtr f = Term::constant("f", Type::fun(O(), O()));
  TermPtr a = Term::constant("a", O());
  CHECK(type_equal(Term::app(f, a)->type, O()));
  CHECK_THROWS_AS(Term::app(a, a), TypeError);
  CHECK_THROWS_AS(Term::app(f, f), TypeError);
}

TEST_CASE("free variables and alpha equality") {
  TermPtr x = Term::var("x", O());
  TermPtr y = Term::var("y", O());
  TermPtr lx = Term::lam("x", O(), x);
  TermPtr ly = Term::lam("y", O(), y);
  CHECK(alpha_equal(lx, ly));
  CHECK(free_vars(lx).empty());
  TermPtr openTerm = Term::lam("x", O(), y);
  CHECK(free_vars(openTerm) == std::set<std::string>{"y"});
  CHECK(!alpha_equal(lx, openTerm));
  // \x.\y.x vs \y.\x.y are alpha-equal; \x.\y.y differs.
  TermPtr kxy = Term::lam("x", O(), Term::lam("y", O(), x));
  TermPtr kyx = Term::lam("y", O(), Term::lam("x", O(), y));
  TermPtr ki = Term::lam("x", O(), Term::lam("y", O(), y));
  CHECK(alpha_equal(kxy, kyx));
  CHECK(!alpha_equal(kxy, ki));
}

TEST_CASE("substitution avoids capture") {
  TermPtr x = Term::var("x", O());
  TermPtr y = Term::var("y", O());
  // (\y. x) [x := y]  must rename the binder.
  TermPtr t = Term::lam("y", O(), x);
  TermPtr r = substitute(t, "x", y);
  CHECK(r->kind == Term::Kind::Lam);
  CHECK(r->name != "y");
  CHECK(r->body->kind == Term::Kind::Var);
  CHECK(r->body->name == "y");
  CHECK(alpha_equal(r, Term::lam("z", O(), y)));
  // No-op when the variable is not free.
  TermPtr s = Term::lam("x", O(), x);
  CHECK(substitute(s, "x", y).get() == s.get());
}

TEST_CASE("beta normalization") {
  TermPtr x = Term::var("x", O());
  TermPtr a = Term::constant("a", O());
  TermPtr id = Term::lam("x", O(), x);
  CHECK(alpha_equal(beta_normalize(Term::app(id, a)), a));
  // (\f. f a) (\x. x)  ->  a
  TypePtr oo = Type::fun(O(), O());
  TermPtr f = Term::var("f", oo);
  TermPtr t = Term::app(Term::lam("f", oo, Term::app(f, a)), id);
  CHECK(alpha_equal(beta_normalize(t), a));
  // Redex under a binder.
  TermPtr u = Term::lam("y", O(), Term::app(id, Term::var("y", O())));
  CHECK(alpha_equal(beta_normalize(u), Term::lam("y", O(), Term::var("y", O()))));
}

TEST_CASE("spine helpers") {
  TermPtr f = Term::constant("f", Type::fun(O(), Type::fun(O(), O())));
  TermPtr a = Term::constant("a", O());
  TermPtr b = Term::constant("b", O());
  TermPtr t = apply_spine(f, {a, b});
  CHECK(spine_head(t).get() == f.get());
  auto args = spine_args(t);
  REQUIRE(args.size() == 2);
  CHECK(args[0].get() == a.get());
  CHECK(args[1].get() == b.get());
}

TEST_CASE("primitive constants carry their tags") {
  TermPtr q = prim_const(Prim::Q, O());
  CHECK(q->prim == Prim::Q);
  CHECK(type_to_string(q->type) == "o>o>o");
  TermPtr all = prim_const(Prim::A, Type::make_sort("s"));
  CHECK(type_to_string(all->type) == "(s>o)>o");
  TermPtr ch = prim_const(Prim::C, O());
  CHECK(type_to_string(ch->type) == "(o>o)>o");
  CHECK_THROWS(prim_const(Prim::S, O()));
  // A non-primitive constant named D stays separate from the primitive.
  TermPtr d = Term::constant("D", Type::fun(O(), Type::fun(O(), O())));
  CHECK(!alpha_equal(d, prim_const(Prim::D, O())));
}

TEST_CASE("truth expands to the identity self-equality") {
  TermPtr t = expand_abbreviations(mk("True", {}), Catalog::standard());
  // Q (\x:o. x) (\x:o. x)
  TermPtr id = Term::lam("x", O(), Term::var("x", O()));
  CHECK(alpha_equal(t, apply_spine(prim_const(Prim::Q, Type::fun(O(), O())),
                                   {id, id})));
  CHECK(!contains_abbrev(t, Catalog::standard()));
}

TEST_CASE("one-step versus full expansion") {
  TermPtr a = Term::constant("a", O());
  TermPtr n = mk("not", {a});
  TermPtr one = expand_abbreviations(n, Catalog::standard(), ExpandDepth::One);
  // One step of `not a` is `nand a a`.
  CHECK(spine_head(one)->name == "nand");
  TermPtr full = expand_abbreviations(n, Catalog::standard());
  CHECK(spine_head(full)->prim == Prim::D);
  auto args = spine_args(full);
  REQUIRE(args.size() == 2);
  CHECK(args[0].get() == args[1].get());
}

TEST_CASE("schematic equality resolves its type from the arguments") {
  TypePtr s = Type::make_sort("w");
  TermPtr a = Term::constant("a", s);
  TermPtr e = mk("Eq", {a, a});
  CHECK(type_equal(e->type, O()));
  TermPtr full = expand_abbreviations(e, Catalog::standard());
  CHECK(spine_head(full)->prim == Prim::Q);
  CHECK(type_equal(spine_head(full)->type, Type::fun(s, Type::fun(s, O()))));
  CHECK_THROWS_AS(Catalog::standard().make_const("Eq", {}), TypeError);
}

TEST_CASE("quantifier sugar expands through the primitives") {
  TypePtr s = Type::make_sort("w");
  TermPtr p = Term::constant("p", Type::fun(s, O()));
  TermPtr body = Term::app(p, Term::var("x", s));
  TermPtr all = mk("forall", {Term::lam("x", s, body)});
  TermPtr fullAll = expand_abbreviations(all, Catalog::standard());
  CHECK(spine_head(fullAll)->prim == Prim::A);
  TermPtr ex = mk("exists", {Term::lam("x", s, body)});
  TermPtr fullEx = expand_abbreviations(ex, Catalog::standard());
  // not (forall x. not (p x)) with everything primitive.
  CHECK(spine_head(fullEx)->prim == Prim::D);
  CHECK(!contains_abbrev(fullEx, Catalog::standard()));
  TermPtr eps = mk("eps", {Term::lam("x", s, body)});
  CHECK(type_equal(eps->type, s));
  CHECK(spine_head(expand_abbreviations(eps, Catalog::standard()))->prim ==
        Prim::C);
}

TEST_CASE("numerals chain through the successor") {
  const Catalog& cat = Catalog::standard();
  TermPtr two = expand_abbreviations(cat.make("2", {}), cat);
  TermPtr ddag = expand_abbreviations(cat.make("ddag", {}), cat);
  CHECK(alpha_equal(two, ddag));
  TermPtr one = expand_abbreviations(cat.make("1", {}), cat);
  TermPtr dag = expand_abbreviations(cat.make("dag", {}), cat);
  CHECK(alpha_equal(one, dag));
  TermPtr inf = expand_abbreviations(cat.make("inf", {}), cat);
  TermPtr tru = expand_abbreviations(cat.make("True", {}), cat);
  CHECK(alpha_equal(inf, tru));
  CHECK(spine_head(one)->prim == Prim::V);
}

TEST_CASE("under-applied abbreviations eta-expand") {
  const Catalog& cat = Catalog::standard();
  TermPtr bare = cat.make("not", {});
  CHECK(type_to_string(bare->type) == "o>o");
  TermPtr full = expand_abbreviations(bare, cat);
  CHECK(full->kind == Term::Kind::Lam);
  TermPtr a = Term::constant("a", O());
  CHECK(alpha_equal(beta_normalize(Term::app(full, a)),
                    expand_abbreviations(cat.make("not", {a}), cat)));
}

TEST_CASE("lexicon-style definitions expand to their bodies") {
  Catalog cat = Catalog::standard();
  TermPtr body = Term::lam("x", O(), cat.make("not", {Term::var("x", O())}));
  cat.define("flip", body);
  TermPtr a = Term::constant("a", O());
  TermPtr t = cat.make("flip", {a});
  TermPtr full = beta_normalize(expand_abbreviations(t, cat));
  CHECK(alpha_equal(full, expand_abbreviations(cat.make("not", {a}), cat)));
  CHECK_THROWS_AS(cat.make("nonsense", {}), UnknownAbbrevError);
}

TEST_CASE("natural-number set and extensional equality") {
  const Catalog& cat = Catalog::standard();
  TermPtr n = cat.make("N", {});
  CHECK(type_to_string(n->type) == "o>o");
  TermPtr full = expand_abbreviations(n, cat);
  CHECK(!contains_abbrev(full, cat));
  TypePtr oo = Type::fun(O(), O());
  TermPtr p = Term::constant("p", oo);
  TermPtr q = Term::constant("q", oo);
  TermPtr ea = cat.make("Eqall", {p, q});
  CHECK(type_equal(ea->type, O()));
  TermPtr fullEa = beta_normalize(expand_abbreviations(ea, cat));
  CHECK(spine_head(fullEa)->prim == Prim::A);
}

#include <random>

#include "nabla/parse.hpp"

namespace {

ParseEnv test_env() {
  ParseEnv env;
  env.sorts = {"w"};
  env.consts = {
      {"a", O()},
      {"b", O()},
      {"c", Type::make_sort("w")},
      {"p", Type::fun(Type::make_sort("w"), O())},
      {"r", Type::fun(O(), Type::fun(O(), O()))},
      {"f", Type::fun(Type::make_sort("w"), Type::make_sort("w"))},
  };
  return env;
}

}  // namespace

TEST_CASE("type parsing") {
  ParseEnv env = test_env();
  CHECK(type_to_string(parse_type("o", env)) == "o");
  CHECK(type_to_string(parse_type("o>o>o", env)) == "o>o>o");
  CHECK(type_to_string(parse_type("(o>o)>o", env)) == "(o>o)>o");
  CHECK(type_to_string(parse_type("w > o", env)) == "w>o");
  CHECK(type_to_string(parse_type("((o))", env)) == "o");
  CHECK_THROWS_AS(parse_type("q", env), ParseError);
  CHECK_THROWS_AS(parse_type("o>", env), ParseError);
  CHECK_THROWS_AS(parse_type("o o", env), ParseError);
}

TEST_CASE("term parsing basics") {
  ParseEnv env = test_env();
  TermPtr t = parse_term("r a b", env);
  CHECK(type_equal(t->type, O()));
  CHECK(spine_args(t).size() == 2);
  // Application is left-associative.
  CHECK(alpha_equal(parse_term("r a b", env), parse_term("(r a) b", env)));
  TermPtr lam = parse_term("\\x:o. r x x", env);
  CHECK(lam->kind == Term::Kind::Lam);
  CHECK(type_to_string(lam->type) == "o>o");
  // A trailing lambda needs no parentheses.
  CHECK(alpha_equal(parse_term("sel \\x:w. p x", env),
                    parse_term("sel (\\x:w. p x)", env)));
}

TEST_CASE("binder sugar") {
  ParseEnv env = test_env();
  TermPtr t = parse_term("forall x:w. p x", env);
  TermPtr full = expand_abbreviations(t, Catalog::standard());
  CHECK(spine_head(full)->prim == Prim::A);
  CHECK(alpha_equal(parse_term("exists x:o. x", env),
                    Catalog::standard().make(
                        "exists", {Term::lam("x", O(), Term::var("x", O()))})));
  TermPtr e = parse_term("eps x:w. p x", env);
  CHECK(type_to_string(e->type) == "w");
  // The binder name without the sugar pattern is a plain application head.
  TermPtr ap = parse_term("forall p", env);
  CHECK(type_equal(ap->type, O()));
}

TEST_CASE("resolution order: catalog over constants over raw primitives") {
  ParseEnv env = test_env();
  env.consts["D"] = Type::fun(O(), Type::fun(O(), O()));
  TermPtr d = parse_term("D a b", env);
  CHECK(spine_head(d)->prim == Prim::None);
  env.consts.erase("D");
  TermPtr rawd = parse_term("D a b", env);
  CHECK(spine_head(rawd)->prim == Prim::D);
  // Bound variables shadow constants.
  TermPtr shadow = parse_term("\\a:w. p a", env);
  CHECK(type_to_string(shadow->type) == "w>o");
}

TEST_CASE("raw primitives with type instantiation") {
  ParseEnv env = test_env();
  TermPtr q = parse_term("Q@w c c", env);
  CHECK(spine_head(q)->prim == Prim::Q);
  CHECK(type_equal(q->type, O()));
  TermPtr qo = parse_term("Q a a", env);
  CHECK(type_equal(spine_head(qo)->type, parse_type("o>o>o", env)));
  TermPtr k = parse_term("K@(o,w) a c", env);
  CHECK(spine_head(k)->prim == Prim::K);
  CHECK(type_equal(k->type, O()));
  TermPtr s = parse_term("S@(o,o,o)", env);
  CHECK(type_to_string(s->type) == "(o>o>o)>(o>o)>o>o");
  CHECK_THROWS_AS(parse_term("K@(o)", env), ParseError);
  CHECK_THROWS_AS(parse_term("S a", env), ParseError);
}

TEST_CASE("parse errors carry a position") {
  ParseEnv env = test_env();
  CHECK_THROWS_AS(parse_term("unknown_name", env), ParseError);
  CHECK_THROWS_AS(parse_term("r a b c", env), TypeError);
  CHECK_THROWS_AS(parse_term("(r a", env), ParseError);
  CHECK_THROWS_AS(parse_term("r a )", env), ParseError);
  CHECK_THROWS_AS(parse_term("\\x:o", env), ParseError);
  CHECK_THROWS_AS(parse_term("a $ b", env), ParseError);
  try {
    parse_term("r a $", env);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.pos == 4);
  }
}

TEST_CASE("printing uses primitive sugar") {
  ParseEnv env = test_env();
  CHECK(print_term(parse_term("Eq a b", env)) == "Eq a b");
  CHECK(print_term(parse_term("forall x:w. p x", env)) == "forall x:w. p x");
  CHECK(print_term(parse_term("nand a b", env)) == "nand a b");
  CHECK(print_term(parse_term("next a", env)) == "next a");
  CHECK(print_term(parse_term("sing c", env)) == "sing c");
  CHECK(print_term(parse_term("eps x:w. p x", env)) == "eps x:w. p x");
  std::string selStr = print_term(parse_term("sel p", env));
  CHECK(selStr == "sel p");
  // Reserved names never leak as bound variables.
  TermPtr t = Term::lam("not", O(), Term::var("not", O()));
  std::string s = print_term(t);
  CHECK(alpha_equal(parse_term(s, env), t));
}

TEST_CASE("folding recognizes expanded closed abbreviations") {
  const Catalog& cat = Catalog::standard();
  ParseEnv env = test_env();
  for (const char* n : {"True", "False", "1", "2", "3", "N", "Univ", "Empty"}) {
    TermPtr expanded = expand_abbreviations(cat.make(n, {}), cat);
    TermPtr folded = fold_abbreviations(expanded, cat);
    CHECK(print_term(folded) == n);
  }
  // Folding happens inside larger terms as well.
  TermPtr t = expand_abbreviations(
      cat.make("and", {Term::constant("a", O()), cat.make("True", {})}), cat);
  std::string s = print_term(fold_abbreviations(t, cat));
  CHECK(s.find("True") != std::string::npos);
}

namespace {

struct TermGen {
  std::mt19937 rng{20250314};
  ParseEnv env = test_env();
  std::vector<TermPtr> pool;
  std::vector<TypePtr> argTypes;
  int varCounter = 0;

  TermGen() {
    for (const auto& [n, ty] : env.consts)
      pool.push_back(Term::constant(n, ty));
    pool.push_back(prim_const(Prim::D, O()));
    pool.push_back(prim_const(Prim::V, O()));
    pool.push_back(prim_const(Prim::Q, Type::make_sort("w")));
    pool.push_back(prim_const(Prim::A, Type::make_sort("w")));
    pool.push_back(prim_const(Prim::C, Type::fun(O(), O())));
    pool.push_back(Term::constant("K", Type::fun(O(), Type::fun(Type::make_sort("w"), O())), Prim::K));
    TypePtr w = Type::make_sort("w");
    pool.push_back(Term::constant(
        "S",
        Type::fun(Type::fun(w, Type::fun(O(), O())),
                  Type::fun(Type::fun(w, O()), Type::fun(w, O()))),
        Prim::S));
    argTypes = {O(), w, Type::fun(O(), O()), Type::fun(w, O())};
  }

  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); }

  TermPtr gen(const TypePtr& target, int depth,
              std::vector<std::pair<std::string, TypePtr>>& scope) {
    std::vector<TermPtr> leaves;
    for (const auto& c : pool)
      if (type_equal(c->type, target)) leaves.push_back(c);
    for (const auto& [n, ty] : scope)
      if (type_equal(ty, target)) leaves.push_back(Term::var(n, ty));
    if (depth <= 0 || pick(4) == 0) {
      if (!leaves.empty()) return leaves[pick(static_cast<int>(leaves.size()))];
    }
    if (target->kind == Type::Kind::Fun && (leaves.empty() || pick(2) == 0)) {
      std::string x = "v" + std::to_string(varCounter++);
      scope.emplace_back(x, target->arg);
      TermPtr body = gen(target->res, depth - 1, scope);
      scope.pop_back();
      return Term::lam(x, target->arg, body);
    }
    if (depth > 0) {
      TypePtr at = argTypes[pick(static_cast<int>(argTypes.size()))];
      TermPtr f = gen(Type::fun(at, target), depth - 1, scope);
      TermPtr a = gen(at, depth - 1, scope);
      return Term::app(f, a);
    }
    if (!leaves.empty()) return leaves[pick(static_cast<int>(leaves.size()))];
    // Fall back through an application of a constant we can always build.
    return gen(target, depth + 1, scope);
  }
};

}  // namespace

TEST_CASE("print/parse round-trips on random terms") {
  TermGen g;
  int checked = 0;
  for (int i = 0; i < 1000; ++i) {
    TypePtr target = g.argTypes[g.pick(static_cast<int>(g.argTypes.size()))];
    std::vector<std::pair<std::string, TypePtr>> scope;
    TermPtr t = g.gen(target, 4, scope);
    std::string s = print_term(t);
    INFO("printed: ", s);
    TermPtr back = parse_term(s, g.env);
    CHECK(alpha_equal(t, back));
    CHECK(type_equal(t->type, back->type));
    ++checked;
  }
  CHECK(checked == 1000);
}

TEST_CASE("type print/parse round-trips on random types") {
  TermGen g;
  ParseEnv env = test_env();
  std::function<TypePtr(int)> genTy = [&](int depth) -> TypePtr {
    if (depth <= 0 || g.pick(3) == 0)
      return g.pick(2) == 0 ? O() : Type::make_sort("w");
    return Type::fun(genTy(depth - 1), genTy(depth - 1));
  };
  for (int i = 0; i < 300; ++i) {
    TypePtr t = genTy(4);
    CHECK(type_equal(parse_type(type_to_string(t), env), t));
  }
}
