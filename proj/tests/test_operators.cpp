// Copyright 2026 The cspfx Authors
// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>
#include <functional>

#include "cspfx/denote.hpp"
#include "cspfx/generators.hpp"
#include "cspfx/operators.hpp"
#include "oracle.hpp"

using namespace cspfx;

namespace {

const AlphabetPtr kAB = make_alphabet({"a", "b"});
const Action kA{0}, kB{1};

XProcess den(std::string_view s, const AlphabetPtr& al = kAB) { return denote(parse_process(s, *al), al); }

std::set<ActionSet> initial_refusals(const XProcess& p) {
  std::set<ActionSet> out;
  for (const auto& f : expand_failures(p))
    if (f.trace.empty()) out.insert(f.refusal);
  return out;
}

XProcess rand_proc(Rng& rng, std::vector<std::string> values = {"x", "y"}) {
  ProcessOptions opts;
  opts.values = std::move(values);
  return random_process(rng, kAB, opts);
}

}  // namespace

TEST_CASE("stop and omega", "[operators]") {
  AlphabetPtr a1 = make_alphabet({"a"});
  CHECK(initial_refusals(stop(a1)) == std::set<ActionSet>{ActionSet{}, ActionSet::of({kA})});
  CHECK(stop(kAB).traces() == std::set<Trace>{{}});
  CHECK(expand_failures(omega(kAB)).empty());
  Rng rng(1);
  for (int i = 0; i < 100; ++i) {
    XProcess p = rand_proc(rng);
    CHECK(intern_choice(p, omega(kAB)) == p);
    CHECK(refines(intern_choice(p, omega(kAB)), p));
  }
}

TEST_CASE("prefix", "[operators]") {
  XProcess p = prefix(kA, omega(kAB));
  CHECK(p.traces() == std::set<Trace>{{}, {kA}});
  CHECK(initial_refusals(p) == std::set<ActionSet>{ActionSet{}, ActionSet::of({kB})});
  CHECK(expand_failures(p).size() == 2);
  CHECK(prefix(kA, stop(kAB)).traces() == std::set<Trace>{{}, {kA}});
  Rng rng(2);
  for (int i = 0; i < 100; ++i) {
    XProcess x = rand_proc(rng), y = rand_proc(rng);
    CHECK(prefix(kA, intern_choice(x, y)) == intern_choice(prefix(kA, x), prefix(kA, y)));
  }
}

TEST_CASE("internal and external choice", "[operators]") {
  CHECK(intern_choice(stop(kAB), omega(kAB)) == close(kAB, {}, {}, {FailurePair{{}, ActionSet{}}}));
  XProcess ab = extern_choice(prefix(kA, stop(kAB)), prefix(kB, stop(kAB)));
  CHECK(initial_refusals(ab) == std::set<ActionSet>{ActionSet{}});
  Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    XProcess p = rand_proc(rng), q = rand_proc(rng), r = rand_proc(rng);
    CHECK(intern_choice(p, p) == p);
    CHECK(intern_choice(p, q) == intern_choice(q, p));
    CHECK(intern_choice(p, intern_choice(q, r)) == intern_choice(intern_choice(p, q), r));
    CHECK(extern_choice(prefix(kA, p), prefix(kA, q)) == intern_choice(prefix(kA, p), prefix(kA, q)));
    XProcess free_of_omega = random_process(rng, kAB, ProcessOptions{.failure_probability = 1.0});
    CHECK(extern_choice(free_of_omega, stop(kAB)) == free_of_omega);
  }
}

TEST_CASE("deterministic choices", "[operators]") {
  CHECK(det_choice(kAB, {}) == stop(kAB));
  CHECK(det_choice_omega(kAB, {}) == omega(kAB));
  XProcess p = den("b -> val x");
  CHECK(det_choice(kAB, {{kA, p}}) == prefix(kA, p));
  XProcess o = det_choice_omega(kAB, {{kA, stop(kAB)}});
  for (const auto& f : expand_failures(o)) CHECK(f.trace == Trace{kA});
  CHECK_THROWS_AS(det_choice(kAB, {{kA, p}, {kA, p}}), Error);
}

TEST_CASE("relabelling", "[operators]") {
  RelabelFn a_to_b({{kA, kB}});
  CHECK(relabel(RelabelFn{}, den("a -> b -> STOP")) == den("a -> b -> STOP"));
  CHECK(relabel(a_to_b, prefix(kA, stop(kAB))) == prefix(kB, stop(kAB)));
  Rng rng(4);
  for (int i = 0; i < 200; ++i) {
    RelabelFn f = random_relabelling(rng, *kAB);
    XProcess p = rand_proc(rng), q = rand_proc(rng);
    CHECK(relabel(f, intern_choice(p, q)) == intern_choice(relabel(f, p), relabel(f, q)));
  }
}

TEST_CASE("concealment", "[operators]") {
  CHECK(conceal(kA, stop(kAB)) == stop(kAB));
  CHECK(conceal(kA, prefix(kA, stop(kAB))) == stop(kAB));
  CHECK(den("(a -> STOP [] b -> STOP) \\ a") ==
        intern_choice(stop(kAB), extern_choice(stop(kAB), prefix(kB, stop(kAB)))));
  // Hiding and external choice do not commute.
  XProcess f = prefix(kA, stop(kAB)), g = prefix(kB, stop(kAB));
  CHECK_FALSE(conceal(kA, extern_choice(f, g)) == extern_choice(conceal(kA, f), conceal(kA, g)));
}

TEST_CASE("hiding laws for guarded choice", "[operators][property]") {
  // ((a -> F) [] G) \ a = F \ a |~| ((F [] G) \ a), and hiding a leaves
  // choices guarded by other actions alone.
  Rng rng(6);
  for (int i = 0; i < 300; ++i) {
    XProcess f = rand_proc(rng), g = rand_proc(rng);
    CHECK(conceal(kA, extern_choice(prefix(kA, f), g)) ==
          intern_choice(conceal(kA, f), conceal(kA, extern_choice(f, g))));
    XProcess h = rand_proc(rng);
    CHECK(conceal(kA, det_choice(kAB, {{kB, h}})) == det_choice(kAB, {{kB, conceal(kA, h)}}));
  }
}

TEST_CASE("parallel and interleaving", "[operators]") {
  XProcess a = prefix(kA, stop(kAB)), b = prefix(kB, stop(kAB));
  CHECK(parallel(a, a).traces() == std::set<Trace>{{}, {kA}});
  CHECK(parallel(a, b).traces() == std::set<Trace>{{}});
  CHECK(initial_refusals(parallel(a, b)).size() == 4);
  CHECK(interleave(a, b).traces() == std::set<Trace>{{}, {kA}, {kB}, {kA, kB}, {kB, kA}});
  Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    XProcess p = rand_proc(rng), q = rand_proc(rng, {"u"}), q2 = rand_proc(rng, {"u"});
    CHECK(swap_pairs(parallel(p, q)) == parallel(q, p));
    CHECK(interleave(p, q) == extern_choice(interleave_left(p, q), interleave_right(p, q)));
    CHECK(interleave_left(p, intern_choice(q, q2)) == intern_choice(interleave_left(p, q), interleave_left(p, q2)));
    CHECK(interleave_right(p, intern_choice(q, q2)) ==
          intern_choice(interleave_right(p, q), interleave_right(p, q2)));
  }
}

TEST_CASE("unit, skip and sequencing", "[operators]") {
  CHECK(expand_failures(unit(kAB, "x")).empty());
  CHECK(skip(kAB) == unit(kAB, kTick));
  CHECK(unit(kAB, "x") == unit(kAB, "x"));
  CHECK_FALSE(unit(kAB, "x") == unit(kAB, "y"));
  CHECK(den("a -> SKIP ; b -> SKIP") == den("a -> b -> SKIP"));
  CHECK_THROWS_AS(seq(unit(kAB, "x"), skip(kAB)), Error);
  Rng rng(9);
  for (int i = 0; i < 200; ++i) {
    XProcess p = random_tick_process(rng, kAB), q = random_tick_process(rng, kAB);
    XProcess r = random_tick_process(rng, kAB);
    CHECK(seq(skip(kAB), q) == q);
    CHECK(seq(p, skip(kAB)) == p);
    CHECK(det_choice(kAB, {{kA, seq(p, q)}, {kB, seq(r, q)}}) == seq(det_choice(kAB, {{kA, p}, {kB, r}}), q));
  }
}

TEST_CASE("every operator agrees with the brute-force model", "[operators][oracle]") {
  Rng rng(2026);
  int checked = 0;
  std::set<TermKind> seen;
  std::function<void(const ProcTerm&)> note = [&](const ProcTerm& t) {
    seen.insert(t.kind());
    for (const auto& o : t.operands()) note(o);
    for (const auto& b : t.branches()) note(b.second);
  };
  for (std::size_t n = 1; n <= 3; ++n) {
    std::vector<std::string> names{"a", "b", "c"};
    names.resize(n);
    AlphabetPtr al = make_alphabet(names);
    for (int i = 0; i < 400; ++i) {
      TermOptions opts;
      opts.values = {"x", "y"};
      opts.max_size = 9;
      ProcTerm t = random_term(rng, *al, opts);
      INFO(print_process(t, *al));
      CHECK(oracle::flatten(denote(t, al)) == oracle::eval(t, static_cast<int>(n)));
      note(t);
      ++checked;
    }
    for (int i = 0; i < 200; ++i) {
      TermOptions opts;
      opts.tick_only = true;
      opts.max_size = 9;
      ProcTerm t = random_term(rng, *al, opts);
      INFO(print_process(t, *al));
      CHECK(oracle::flatten(denote(t, al)) == oracle::eval(t, static_cast<int>(n)));
      note(t);
      ++checked;
    }
  }
  CHECK(checked == 1800);
  CHECK(seen.size() == 16);  // every kind but metavariables
}
