// Copyright 2026 The cspfx Authors
// SPDX-License-Identifier: Apache-2.0

// Acceptance runner: one PASS or FAIL line per criterion, nonzero exit when
// any criterion fails. Usage: acceptance [lamc-dir] [seed]

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "cspfx/denote.hpp"
#include "cspfx/selftest.hpp"
#include "oracle.hpp"

#ifndef CSPFX_LAMC_DIR
#define CSPFX_LAMC_DIR ""
#endif

using namespace cspfx;

namespace {

struct Verdict {
  bool ok = true;
  std::string detail;
};

// Folds suite outcomes into one verdict; `only` picks outcomes by name.
Verdict fold(const std::vector<CheckOutcome>& outcomes, const std::function<bool(const CheckOutcome&)>& only = {}) {
  Verdict v;
  for (const auto& o : outcomes) {
    if (only && !only(o)) continue;
    v.ok = v.ok && o.passed;
    if (!v.detail.empty()) v.detail += " | ";
    v.detail += o.name + ": " + o.detail;
  }
  if (v.detail.empty()) v = {false, "no matching checks"};
  return v;
}

bool named(const CheckOutcome& o, std::initializer_list<const char*> names) {
  for (const char* n : names)
    if (o.name == n) return true;
  return false;
}

// Both stored witnesses, recomputed with the brute-force model.
Verdict brute_force_witnesses() {
  Verdict v;
  AlphabetPtr abc = make_alphabet({"a", "b", "c"}), ab = make_alphabet({"a", "b"});
  Action a{0};
  auto hide = [&](const ProcTerm& t) { return ProcTerm::conceal(a, t); };
  ProcTerm f = parse_process("a -> b -> STOP", *abc), g = parse_process("c -> STOP", *abc);
  oracle::Model whole = oracle::eval(hide(ProcTerm::ext_choice(f, g)), 3);
  bool hiding = !(whole == oracle::eval(ProcTerm::ext_choice(hide(f), hide(g)), 3)) &&
                !(whole == oracle::eval(ProcTerm::int_choice(hide(f), hide(g)), 3));
  ProcTerm p = parse_process("a -> STOP", *ab), p2 = parse_process("b -> STOP", *ab);
  ProcTerm h = parse_process("a -> STOP |~| b -> STOP", *ab);
  bool par = !(oracle::eval(ProcTerm::par(ProcTerm::ext_choice(p, p2), h), 2) ==
               oracle::eval(ProcTerm::ext_choice(ProcTerm::par(p, h), ProcTerm::par(p2, h)), 2));
  v.ok = hiding && par;
  v.detail = std::string("brute force: hiding witness ") + (hiding ? "unequal" : "EQUAL") + ", || witness " +
             (par ? "unequal" : "EQUAL");
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  std::string lamc_dir = argc > 1 ? argv[1] : CSPFX_LAMC_DIR;
  std::uint64_t seed = argc > 2 ? std::stoull(argv[2]) : 1;
  int failed = 0;

  auto base = [&](std::size_t trials) {
    SelftestOptions o;
    o.seed = seed;
    o.trials = trials;
    o.max_size = 5;
    o.lamc_dir = lamc_dir;
    return o;
  };
  auto report = [&](int id, const char* title, const std::function<Verdict()>& body, double limit_s = 0) {
    auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = body();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (limit_s > 0 && secs >= limit_s) {
      v.ok = false;
      v.detail += " | over the " + std::to_string(static_cast<int>(limit_s)) + " s limit";
    }
    if (!v.ok) ++failed;
    std::printf("%s  %2d  %s (%.2f s): %s\n", v.ok ? "PASS" : "FAIL", id, title, secs, v.detail.c_str());
    std::fflush(stdout);
  };

  report(1, "axiom suites, 1000 assignments per family, |A| = 1..3",
         [&] { return fold(run_suite("axioms", base(1000))); }, 60);

  std::vector<CheckOutcome> completeness;
  report(2, "ground completeness over closed terms of at most 5 nodes on {a,b}", [&] {
    completeness = run_suite("completeness", base(0));
    return fold(completeness, [](const CheckOutcome& o) { return named(o, {"ground completeness"}); });
  }, 300);
  report(3, "definability round trip on 1000 processes",
         [&] { return fold(run_suite("definability", base(1000))); });
  report(4, "distinct normal forms have distinct denotations", [&] {
    return fold(completeness, [](const CheckOutcome& o) {
      return named(o, {"normal-form uniqueness", "normal form denotes the term"});
    });
  });
  report(5, "monad laws on 1000 triples", [&] {
    return fold(run_suite("monad", base(1000)), [](const CheckOutcome& o) {
      return named(o, {"monad left unit", "monad right unit", "monad associativity"});
    });
  });
  report(6, "homomorphic relabelling and concealment equal the direct operators",
         [&] { return fold(run_suite("homomorphisms", base(1000))); });
  report(7, "equation-system operators on 500 pairs each, probes reject wrong candidates", [&] {
    auto outcomes = run_suite("eqsys", base(1000));
    Verdict v = fold(outcomes);
    for (const auto& o : outcomes)
      if (o.name.rfind("probe", 0) == 0 && o.checked < 4) v = {false, v.detail + " | fewer than 3 candidates"};
    return v;
  });
  report(8, "negative results: hiding and || witnesses are unequal", [&] {
    Verdict v = fold(run_suite("negative", base(0)));
    Verdict b = brute_force_witnesses();
    return Verdict{v.ok && b.ok, v.detail + " | " + b.detail};
  });
  report(9, "synchronisation-tree equations, trees of depth <= 3 counting NIL as a level",
         [&] { return fold(run_suite("synctrees", base(1000))); }, 30);
  report(10, "theta round trips and homomorphism on 500 processes",
         [&] { return fold(run_suite("theta", base(500))); });
  report(11, "sequencing monoid and left commutation on 500 triples", [&] {
    return fold(run_suite("termination", base(500)), [](const CheckOutcome& o) {
      return named(o, {"; is a monoid with unit SKIP", "; commutes with constructors on the left"});
    });
  });
  report(12, "lambda corpus denotes as frozen, constructors commute with contexts", [&] {
    auto outcomes = run_suite("lamc", base(1000));
    Verdict v = fold(outcomes);
    for (const auto& o : outcomes)
      if (o.name == "lambda corpus denotes as frozen" && o.checked < 15)
        v = {false, v.detail + " | corpus has fewer than 15 programs"};
    return v;
  });

  std::printf("%d of 12 criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
