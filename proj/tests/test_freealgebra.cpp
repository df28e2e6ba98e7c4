// Copyright 2026 The cspfx Authors
// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include "cspfx/denote.hpp"
#include "cspfx/freealgebra.hpp"
#include "cspfx/generators.hpp"
#include "cspfx/operators.hpp"
#include "oracle.hpp"

using namespace cspfx;

namespace {

const AlphabetPtr kAB = make_alphabet({"a", "b"});
const AlphabetPtr kABC = make_alphabet({"a", "b", "c"});
const Action kA{0}, kB{1}, kC{2};

XProcess den(std::string_view s, const AlphabetPtr& al = kAB) { return denote(parse_process(s, *al), al); }

XProcess rand_proc(Rng& rng, std::vector<std::string> values = {"x", "y"}) {
  ProcessOptions opts;
  opts.values = std::move(values);
  return random_process(rng, kAB, opts);
}

ProbeSamples samples() {
  return {{stop(kAB), omega(kAB), eta(kAB, "x"), den("a -> STOP"), den("a -> val y [] b -> STOP"),
           den("b -> val x |~| OMEGA")},
          {"x", "y"}};
}

}  // namespace

TEST_CASE("unit and Kleisli extension", "[freealgebra]") {
  CHECK(eta(kAB, kTick) == skip(kAB));
  CHECK(expand_failures(eta(kAB, "x")).empty());
  ValueMap g = [](const std::string& x) { return x == "x" ? prefix(Action{1}, eta(kAB, "y")) : eta(kAB, x); };
  CHECK(kleisli(prefix(kA, eta(kAB, "x")), g) == prefix(kA, prefix(kB, eta(kAB, "y"))));
  CHECK(kleisli(eta(kAB, "x"), g) == g("x"));
  Rng rng(21);
  for (int i = 0; i < 200; ++i) {
    XProcess p = rand_proc(rng);
    CHECK(kleisli(p, [](const std::string& x) { return eta(kAB, x); }) == p);
  }
}

TEST_CASE("Kleisli extension matches the brute-force bind", "[freealgebra][oracle]") {
  Rng rng(22);
  for (int i = 0; i < 300; ++i) {
    XProcess p = rand_proc(rng), gx = rand_proc(rng, {"u"}), gy = rand_proc(rng, {"v"});
    auto g = [&](const std::string& x) { return x == "x" ? gx : gy; };
    oracle::Model mx = oracle::flatten(gx), my = oracle::flatten(gy);
    oracle::Model expected = oracle::bind(oracle::flatten(p), [&](const std::string& x) { return x == "x" ? mx : my; });
    CHECK(oracle::flatten(kleisli(p, g)) == expected);
  }
}

TEST_CASE("homomorphic relabelling and concealment", "[freealgebra]") {
  RelabelFn merge({{kA, kC}, {kB, kC}});
  XProcess p = den("a -> val x [] b -> val y", kABC);
  CHECK(hom_relabel(merge, p) == relabel(merge, p));
  CHECK(hom_relabel(merge, p) == den("c -> val x |~| c -> val y", kABC));
  CHECK(hom_relabel(RelabelFn{}, p) == p);

  CHECK(hom_conceal(kA, stop(kAB)) == stop(kAB));
  CHECK(hom_conceal(kA, den("a -> STOP [] b -> STOP")) == den("STOP |~| (OMEGA [] b -> STOP)"));
  Rng rng(23);
  for (int i = 0; i < 300; ++i) {
    TermOptions opts;
    opts.values = {"x"};
    ProcTerm t = random_term(rng, *kAB, opts);
    CHECK(hom_conceal(kA, denote(t, kAB)) == denote(ProcTerm::conceal(kA, t), kAB));
    RelabelFn f = random_relabelling(rng, *kAB);
    CHECK(hom_relabel(f, denote(t, kAB)) == denote(ProcTerm::relabel(f, t), kAB));
  }
}

TEST_CASE("equation-system operators", "[freealgebra]") {
  XProcess x = eta(kAB, "x"), y = eta(kAB, "y");
  XProcess guarded = det_choice(kAB, {{kA, stop(kAB)}});
  CHECK(ext_choice_eqsys(x, omega(kAB)) == intern_choice(x, omega(kAB)));
  CHECK(par_eqsys(x, y) == eta(kAB, "(x,y)"));
  CHECK(par_eqsys(x, guarded) == omega(kAB));
  CHECK(inter_eqsys_left(x, y) == eta(kAB, "(x,y)"));
  CHECK(inter_eqsys_left(x, guarded) == omega(kAB));
  Rng rng(24);
  for (int i = 0; i < 200; ++i) {
    XProcess p = rand_proc(rng), q = rand_proc(rng, {"u"});
    XProcess plain = random_process(rng, kAB, ProcessOptions{.failure_probability = 1.0});
    CHECK(ext_choice_eqsys(stop(kAB), plain) == plain);
    CHECK(ext_choice_eqsys(p, q) == extern_choice(p, q));
    CHECK(par_eqsys(p, q) == parallel(p, q));
    CHECK(inter_eqsys_left(p, q) == interleave_left(p, q));
    CHECK(inter_eqsys_right(p, q) == interleave_right(p, q));
  }
}

TEST_CASE("the uniqueness probe accepts the real operator and rejects impostors", "[freealgebra]") {
  for (EqSystem s : {EqSystem::ExtChoice, EqSystem::Par, EqSystem::InterLeft, EqSystem::InterRight}) {
    INFO(eqsystem_name(s));
    ProbeReport ok = uniqueness_probe(s, direct_operator(s), samples());
    CHECK_FALSE(ok.rejected());
    CHECK(ok.instances_checked > 0);
    ProbeReport bad = uniqueness_probe(s, [](const XProcess& p, const XProcess&) { return omega(p.alphabet_ptr()); },
                                       samples());
    CHECK(bad.rejected());
  }
  ProbeReport swapped = uniqueness_probe(EqSystem::InterLeft, interleave_right, samples());
  CHECK(swapped.rejected());
}

TEST_CASE("stored counterexamples are confirmed by brute force", "[freealgebra][oracle]") {
  // Hiding does not distribute over [] and does not turn it into |~| either.
  ProcTerm f = parse_process("a -> b -> STOP", *kABC), g = parse_process("c -> STOP", *kABC);
  auto hide = [&](const ProcTerm& t) { return ProcTerm::conceal(kA, t); };
  ProcTerm whole = hide(ProcTerm::ext_choice(f, g));
  for (ProcTerm rebuilt : {ProcTerm::ext_choice(hide(f), hide(g)), ProcTerm::int_choice(hide(f), hide(g))}) {
    CHECK_FALSE(oracle::eval(whole, 3) == oracle::eval(rebuilt, 3));
    CHECK_FALSE(denote(whole, kABC) == denote(rebuilt, kABC));
  }
  // The smaller pair separates hiding from [] only.
  ProcTerm f1 = parse_process("a -> STOP", *kAB), g1 = parse_process("b -> STOP", *kAB);
  ProcTerm whole1 = hide(ProcTerm::ext_choice(f1, g1));
  CHECK_FALSE(oracle::eval(whole1, 2) == oracle::eval(ProcTerm::ext_choice(hide(f1), hide(g1)), 2));
  CHECK(oracle::eval(whole1, 2) == oracle::eval(ProcTerm::int_choice(hide(f1), hide(g1)), 2));

  // || does not distribute over [].
  ProcTerm p = parse_process("a -> STOP", *kAB), p2 = parse_process("b -> STOP", *kAB);
  ProcTerm h = parse_process("a -> STOP |~| b -> STOP", *kAB);
  ProcTerm lhs = ProcTerm::par(ProcTerm::ext_choice(p, p2), h);
  ProcTerm rhs = ProcTerm::ext_choice(ProcTerm::par(p, h), ProcTerm::par(p2, h));
  CHECK_FALSE(oracle::eval(lhs, 2) == oracle::eval(rhs, 2));
  CHECK_FALSE(denote(lhs, kAB) == denote(rhs, kAB));
}
