// Copyright 2026 The cspfx Authors
// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include "cspfx/axioms.hpp"
#include "cspfx/generators.hpp"
#include "cspfx/normal_form.hpp"
#include "cspfx/operators.hpp"

using namespace cspfx;

namespace {

const AlphabetPtr kAB = make_alphabet({"a", "b"});
const Action kA{0}, kB{1};
const ActionSet kSetA = ActionSet::of({kA}), kSetB = ActionSet::of({kB}), kSetAB = ActionSet::of({kA, kB});

ProcTerm parse(std::string_view s) { return parse_process(s, *kAB); }
XProcess den(std::string_view s) { return denote(parse(s), kAB); }

std::size_t count_kind(const std::vector<AxiomSchema>& list, AxiomKind kind) {
  std::set<std::string> families;
  for (const auto& ax : list)
    if (ax.kind == kind) families.insert(ax.family);
  return families.size();
}

}  // namespace

TEST_CASE("axiom families per theory", "[theories]") {
  CHECK(axiom_families(Signature::CSPBox).size() == 11);
  CHECK(axiom_families(Signature::CSPBoxOmega).size() == 12);
  CHECK(axiom_families(Signature::CSPDet).size() == 6);
  CHECK(axiom_families(Signature::CSPDetOmega).size() == 12);
  CHECK_THROWS_AS(axiom_families(Signature::Full), Error);

  auto box = axiom_families(Signature::CSPBox), box_omega = axiom_families(Signature::CSPBoxOmega);
  for (const auto& f : box) CHECK(std::find(box_omega.begin(), box_omega.end(), f) != box_omega.end());
  CHECK(count_kind(axioms(Signature::CSPDetOmega, *kAB), AxiomKind::Inequation) == 4);
  CHECK(count_kind(axioms(Signature::CSPBox, *kAB), AxiomKind::Inequation) == 0);
}

TEST_CASE("every listed instance holds on random assignments", "[theories][property]") {
  Rng rng(12);
  for (Signature th : {Signature::CSPBox, Signature::CSPBoxOmega, Signature::CSPDet, Signature::CSPDetOmega}) {
    bool omega = th == Signature::CSPBoxOmega || th == Signature::CSPDetOmega;
    for (const auto& ax : axioms(th, *kAB)) {
      for (int i = 0; i < 20; ++i) {
        // Theories without OMEGA are checked on divergence-free processes.
        ProcessOptions opts;
        if (omega)
          opts.values = {"x", "y"};
        else
          opts.failure_probability = 1.0;
        ProcessEnv env;
        std::set<std::string> vars = metavariables(ax.lhs);
        vars.merge(metavariables(ax.rhs));
        for (const auto& v : vars) env.emplace(v, random_process(rng, kAB, opts));
        INFO(format_axiom(ax, *kAB));
        CHECK(check_axiom(ax, kAB, env));
      }
    }
  }
}

TEST_CASE("check_axiom rejects a false schema", "[theories]") {
  AxiomSchema wrong{"wrong", "wrong", Signature::CSPBox, AxiomKind::Equation,
                    ProcTerm::ext_choice(ProcTerm::metavar("x"), ProcTerm::metavar("y")),
                    ProcTerm::int_choice(ProcTerm::metavar("x"), ProcTerm::metavar("y"))};
  ProcessEnv env{{"x", prefix(kA, stop(kAB))}, {"y", prefix(kB, stop(kAB))}};
  CHECK_FALSE(check_axiom(wrong, kAB, env));
  ProcessEnv same{{"x", stop(kAB)}, {"y", stop(kAB)}};
  CHECK(check_axiom(wrong, kAB, same));
}

TEST_CASE("saturation", "[theories]") {
  CHECK(saturate({kSetA}).sets() == std::vector<ActionSet>{kSetA});
  CHECK(saturate({kSetA, kSetB}).sets() == std::vector<ActionSet>{kSetA, kSetB, kSetAB});
  CHECK(saturate({ActionSet{}}).sets() == std::vector<ActionSet>{ActionSet{}});
  CHECK(saturate({ActionSet{}}, kSetAB).sets().size() == 4);
  CHECK(is_saturated({kSetA, kSetAB}));
  CHECK_FALSE(is_saturated({kSetA, kSetB}));
}

TEST_CASE("read back and display normal forms", "[theories]") {
  NormalFormPtr o = readback(omega(kAB));
  CHECK(o->shape == NormalForm::Shape::Omega);
  CHECK(o->guards.empty());
  CHECK(o->values.empty());
  CHECK(print_process(nf_to_term(*o, *kAB), *kAB) == "OMEGA");

  NormalFormPtr s = readback(stop(kAB));
  CHECK(s->shape == NormalForm::Shape::Box);
  CHECK(s->family.sets() == std::vector<ActionSet>{ActionSet{}});
  CHECK(print_process(nf_to_term(*s, *kAB), *kAB) == "STOP");

  NormalFormPtr m = readback(den("STOP |~| (OMEGA [] a -> STOP)"));
  CHECK(m->shape == NormalForm::Shape::Box);
  CHECK(m->family.sets() == std::vector<ActionSet>{ActionSet{}, kSetA});
  REQUIRE(m->branches.size() == 1);
  CHECK(m->branch(kA) == *s);

  CHECK(print_process(nf_to_term(*readback(den("[a -> STOP]")), *kAB), *kAB) == "[a -> STOP]");
}

TEST_CASE("normalize and equivalence", "[theories]") {
  CHECK(*normalize(parse("STOP [] STOP"), kAB) == *normalize(parse("STOP"), kAB));
  CHECK(*normalize(parse("a -> STOP [] a -> OMEGA"), kAB) == *normalize(parse("a -> STOP |~| a -> OMEGA"), kAB));
  CHECK(*normalize(parse("(a -> STOP) \\ a"), kAB) == *normalize(parse("STOP"), kAB));
  CHECK(equivalent(parse("a -> b -> STOP"), parse("a -> b -> STOP"), kAB));
  CHECK_FALSE(equivalent(parse("STOP"), parse("OMEGA"), kAB));
  CHECK(refine_terms(parse("a -> STOP |~| b -> STOP"), parse("a -> STOP"), kAB));
  CHECK_FALSE(refine_terms(parse("a -> STOP"), parse("a -> STOP |~| b -> STOP"), kAB));
}

TEST_CASE("normal forms denote what they were read from", "[theories][property]") {
  Rng rng(13);
  for (int i = 0; i < 300; ++i) {
    ProcessOptions opts;
    opts.values = {"x", "y"};
    opts.max_depth = 4;
    XProcess p = random_process(rng, kAB, opts);
    NormalFormPtr nf = readback(p);
    CHECK(nf_denote(*nf, kAB) == p);
    CHECK(denote(nf_to_term(*nf, *kAB), kAB) == p);
    CHECK(*readback(nf_denote(*nf, kAB)) == *nf);
  }
}

TEST_CASE("syntactic normalisation agrees with read-back", "[theories][property]") {
  for (const auto& t : enumerate_box_omega_terms(*kAB, 4)) {
    INFO(print_process(t, *kAB));
    CHECK(*normalize_syntactic(t) == *normalize(t, kAB));
  }
  Rng rng(14);
  for (Signature sig : {Signature::CSPDet, Signature::CSPDetOmega}) {
    for (int i = 0; i < 300; ++i) {
      TermOptions opts;
      opts.signature = sig;
      opts.values = {"x"};
      ProcTerm t = random_term(rng, *kAB, opts);
      INFO(print_process(t, *kAB));
      CHECK(*normalize_syntactic(t) == *normalize(t, kAB));
    }
  }
  CHECK_THROWS_AS(normalize_syntactic(parse("(a -> STOP) \\ a")), Error);
}
