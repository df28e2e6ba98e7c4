// Copyright 2026 The cspfx Authors
// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include "cspfx/freealgebra.hpp"
#include "cspfx/generators.hpp"
#include "cspfx/lambdac.hpp"
#include "cspfx/operators.hpp"

using namespace cspfx;

namespace {

const AlphabetPtr kAB = make_alphabet({"a", "b"});
const Action kA{0}, kB{1};
const LamType kUnit = LamType::unit(), kNat = LamType::nat();

LamTerm term(std::string_view s, const TypeContext& ctx = {}) { return parse_lam_term(s, *kAB, ctx); }
XProcess run(std::string_view s) { return denote_term(term(s), kAB); }

// Does the value name have the shape of a value of type t?
bool well_formed(const std::string& v, const LamType& t) {
  switch (t.kind()) {
    case LamType::Kind::Unit: return v == "*";
    case LamType::Kind::Base:
      return !v.empty() && std::all_of(v.begin(), v.end(), [](char c) { return c >= '0' && c <= '9'; });
    case LamType::Kind::Prod: {
      if (v.size() < 5 || v.front() != '(' || v.back() != ')') return false;
      int depth = 0;
      for (std::size_t i = 1; i + 1 < v.size(); ++i) {
        if (v[i] == '(') ++depth;
        if (v[i] == ')') --depth;
        if (v[i] == ',' && depth == 0)
          return well_formed(v.substr(1, i - 1), t.left()) && well_formed(v.substr(i + 1, v.size() - i - 2), t.right());
      }
      return false;
    }
    case LamType::Kind::Empty:
    case LamType::Kind::Arrow: return false;
  }
  return false;
}

bool is_redex(const LamTerm& t) {
  switch (t.kind()) {
    case LamKind::App: return t.sub(0).kind() == LamKind::Lam && is_value(t.sub(1));
    case LamKind::Fst:
    case LamKind::Snd: return t.sub().kind() == LamKind::Pair && is_value(t.sub());
    case LamKind::IntChoice:
    case LamKind::ExtChoice:
    case LamKind::Prefix:
    case LamKind::Omega:
    case LamKind::Conceal:
    case LamKind::Relabel:
    case LamKind::Par:
    case LamKind::Interleave: return true;
    default: return false;
  }
}

}  // namespace

TEST_CASE("typing", "[lambdac]") {
  CHECK(typecheck({}, LamTerm::star()) == kUnit);
  CHECK(typecheck({}, LamTerm::par(LamTerm::star(), LamTerm::star())) == LamType::prod(kUnit, kUnit));
  CHECK(typecheck({{"x", LamType::empty()}}, LamTerm::in(LamTerm::var("x"), kNat)) == kNat);
  CHECK(typecheck({}, term("\\f:nat->nat. f 1")) == LamType::arrow(LamType::arrow(kNat, kNat), kNat));
  CHECK(typecheck({}, term("(1, a -> *) ||| OMEGA : nat")) == LamType::prod(LamType::prod(kNat, kUnit), kNat));
  CHECK_THROWS_AS(typecheck({}, LamTerm::var("x")), TypeError);
  CHECK_THROWS_AS(typecheck({}, LamTerm::int_choice(LamTerm::star(), LamTerm::numeral(1))), TypeError);
  CHECK_THROWS_AS(typecheck({}, LamTerm::fn("succ", LamTerm::star())), TypeError);
  CHECK_THROWS_AS(typecheck({}, LamTerm::app(LamTerm::star(), LamTerm::star())), TypeError);
}

TEST_CASE("denotations of small programs", "[lambdac]") {
  CHECK(run("*") == eta(kAB, "*"));
  CHECK(run("* |~| OMEGA : unit") == eta(kAB, "*"));
  CHECK(run("(a -> *) || (a -> *)") == prefix(kA, eta(kAB, "(*,*)")));
  CHECK(run("(a -> *) || (b -> *)") == stop(kAB));
  CHECK(run("let f = \\n:nat. a -> succ n in f (f 0)") == prefix(kA, prefix(kA, eta(kAB, "2"))));
  CHECK(run("(a -> 1) [[a <- b]]") == prefix(kB, eta(kAB, "1")));
  CHECK_THROWS_AS(run("\\x:unit. x"), Error);  // a closure is not an observable result
}

TEST_CASE("values and decomposition", "[lambdac]") {
  LamTerm id = term("\\x:unit. x");
  CHECK(is_value(id));
  CHECK(is_value(term("(1, *)")));
  CHECK_FALSE(is_value(term("a -> *")));
  CHECK_FALSE(decompose(id).has_value());

  LamTerm app = LamTerm::app(id, LamTerm::star());
  auto d = decompose(app);
  REQUIRE(d);
  CHECK(d->first.empty());
  CHECK(d->second == app);

  LamTerm inner = term("a -> *");
  LamTerm nested = LamTerm::pair(LamTerm::star(), LamTerm::app(id, inner));
  auto e = decompose(nested);
  REQUIRE(e);
  REQUIRE(e->first.size() == 2);
  CHECK(e->first[0].kind == Frame::Kind::PairRight);
  CHECK(e->first[1].kind == Frame::Kind::AppRight);
  CHECK(e->second == inner);
  CHECK(plug(e->first, e->second) == nested);
}

TEST_CASE("decomposition is unique and total on well-typed terms", "[lambdac][property]") {
  Rng rng(41);
  for (int i = 0; i < 500; ++i) {
    LamType t = i % 3 == 0 ? kUnit : i % 3 == 1 ? kNat : LamType::prod(kNat, kUnit);
    LamTerm m = random_lam_term(rng, *kAB, t);
    INFO(print_lam(m, *kAB));
    REQUIRE(typecheck({}, m) == t);
    auto d = decompose(m);
    if (is_value(m)) {
      CHECK_FALSE(d.has_value());
      continue;
    }
    REQUIRE(d.has_value());
    CHECK(plug(d->first, d->second) == m);
    CHECK(is_redex(d->second));
    auto again = decompose(d->second);
    REQUIRE(again.has_value());
    CHECK(again->first.empty());
  }
}

TEST_CASE("results of well-typed programs have their type", "[lambdac][property]") {
  Rng rng(42);
  for (int i = 0; i < 500; ++i) {
    LamType t = i % 3 == 0 ? kUnit : i % 3 == 1 ? kNat : LamType::prod(kNat, kUnit);
    LamTerm m = random_lam_term(rng, *kAB, t);
    INFO(print_lam(m, *kAB));
    XProcess p = denote_term(m, kAB);
    for (const auto& v : p.values()) CHECK(well_formed(v, t));
  }
}

TEST_CASE("substitution lemma", "[lambdac][property]") {
  Rng rng(43);
  for (int i = 0; i < 400; ++i) {
    LamType xt = i % 2 ? kNat : kUnit;
    LamType t = i % 4 < 2 ? kNat : kUnit;
    TypeContext ctx{{"x", xt}};
    LamTerm m = random_lam_term(rng, *kAB, t, ctx);
    LamTerm v = random_lam_value(rng, xt);
    INFO(print_lam(m, *kAB) + "  with x = " + print_lam(v, *kAB));
    REQUIRE(typecheck(ctx, m) == t);
    LamInterpreter interp(kAB);
    CHECK(interp.denote(substitute(m, "x", v)) == interp.denote(m, {{"x", value_semantics(v, kAB)}}));
  }
}

TEST_CASE("application sequences the argument through the Kleisli extension", "[lambdac][property]") {
  Rng rng(44);
  for (int i = 0; i < 400; ++i) {
    LamType xt = i % 2 ? kNat : kUnit;
    LamTerm arg = random_lam_term(rng, *kAB, xt);
    LamTerm body = random_lam_term(rng, *kAB, kNat, {{"x", xt}});
    INFO(print_lam(arg, *kAB) + "  into " + print_lam(body, *kAB));
    LamInterpreter interp(kAB);
    XProcess direct = interp.denote(LamTerm::app(LamTerm::lam("x", xt, body), arg));
    XProcess staged = kleisli(interp.denote(arg), [&](const std::string& name) {
      return interp.denote(body, {{"x", interp.value_of(name)}});
    });
    CHECK(direct == staged);
  }
}

TEST_CASE("printing and parsing lambda terms round-trips", "[lambdac][property]") {
  Rng rng(45);
  for (int i = 0; i < 500; ++i) {
    LamType t = i % 2 ? kNat : LamType::prod(kUnit, kNat);
    LamTerm m = random_lam_term(rng, *kAB, t);
    std::string text = print_lam(m, *kAB);
    INFO(text);
    CHECK(term(text) == m);
  }
  CHECK_THROWS_AS(parse_lamc("alphabet a;\n(\\x:unit. x) 1"), ParseError);  // type errors surface as parse errors
  CHECK_THROWS_AS(parse_lamc("alphabet a;\nc -> *"), ParseError);
  CHECK(parse_lamc("alphabet a, b; -- comment\n a -> 3").type == kNat);
}

TEST_CASE("constructors commute with evaluation contexts", "[lambdac]") {
  LamTerm v = term("\\h:unit. a -> h");
  CommutationCase pair_case{LamKind::IntChoice};
  pair_case.context = {Frame{Frame::Kind::PairRight, LamTerm::numeral(3)}};
  pair_case.args = {term("a -> *"), term("b -> *")};
  CHECK(constructor_commutation_check(pair_case, kAB));

  CommutationCase empty_context{LamKind::IntChoice};
  empty_context.args = {term("a -> *"), term("*")};
  CHECK(constructor_commutation_check(empty_context, kAB));

  CommutationCase omega_case{LamKind::Omega};
  omega_case.context = {Frame{Frame::Kind::AppRight, v}};
  CHECK(constructor_commutation_check(omega_case, kAB));

  CommutationCase prefix_case{LamKind::Prefix};
  prefix_case.action = kB;
  prefix_case.context = {Frame{Frame::Kind::Fn, std::nullopt, "succ"}};
  prefix_case.hole = kNat;
  prefix_case.args = {term("1 |~| b -> 2")};
  CHECK(constructor_commutation_check(prefix_case, kAB));
}

TEST_CASE("external choice does not commute with evaluation contexts", "[lambdac]") {
  // (\h. a -> h)[*  []  b -> *]: on the left the value * resolves the
  // choice, so the continuation a -> * may refuse b at the start; on the
  // right both a and b are offered together.
  CommutationCase c{LamKind::ExtChoice};
  c.context = {Frame{Frame::Kind::AppRight, term("\\h:unit. a -> h")}};
  c.args = {term("*"), term("b -> *")};
  CHECK_FALSE(constructor_commutation_check(c, kAB));
  auto [lhs, rhs] = commutation_sides(c, kAB);
  ActionSet just_b = ActionSet::of({kB});
  CHECK(lhs.has_failure({}, just_b));
  CHECK_FALSE(rhs.has_failure({}, just_b));
}

TEST_CASE("random contexts commute with the constructors", "[lambdac][property]") {
  Rng rng(46);
  for (int i = 0; i < 300; ++i) {
    LamType hole = i % 2 ? kUnit : kNat;
    RandomContext ctx = random_context(rng, *kAB, hole);
    LamTerm plugged = plug(ctx.context, LamTerm::omega(hole));
    REQUIRE(typecheck({}, plugged) == ctx.result);
    CommutationCase c{LamKind::IntChoice};
    c.context = ctx.context;
    c.hole = hole;
    c.args = {random_lam_term(rng, *kAB, hole), random_lam_term(rng, *kAB, hole)};
    CHECK(constructor_commutation_check(c, kAB));
    c.op = LamKind::Prefix;
    c.action = kA;
    c.args.pop_back();
    CHECK(constructor_commutation_check(c, kAB));
    c.op = LamKind::Omega;
    c.args.clear();
    CHECK(constructor_commutation_check(c, kAB));
  }
}
