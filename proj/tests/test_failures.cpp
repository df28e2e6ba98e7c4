// Copyright 2026 The cspfx Authors
// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include "cspfx/denote.hpp"
#include "cspfx/generators.hpp"
#include "cspfx/json.hpp"
#include "cspfx/operators.hpp"
#include "oracle.hpp"

using namespace cspfx;

namespace {

const AlphabetPtr kA1 = make_alphabet({"a"});
const AlphabetPtr kAB = make_alphabet({"a", "b"});
const Action kA{0}, kB{1};

XProcess den(std::string_view s, const AlphabetPtr& al = kAB) { return denote(parse_process(s, *al), al); }

std::set<FailurePair> failures_of(std::initializer_list<std::pair<Trace, ActionSet>> list) {
  std::set<FailurePair> out;
  for (const auto& [w, r] : list) out.insert(FailurePair{w, r});
  return out;
}

}  // namespace

TEST_CASE("close builds the smallest process", "[failures]") {
  XProcess empty = close(kAB, {}, {}, {});
  CHECK(empty.traces() == std::set<Trace>{{}});
  CHECK(expand_failures(empty).empty());
  CHECK(empty == omega(kAB));

  XProcess stable = close(kAB, {}, {}, {FailurePair{{}, ActionSet{}}});
  CHECK(stable.max_refusals().at({}) == std::vector<ActionSet>{ActionSet{}});
  CHECK(expand_failures(stable).size() == 4);  // every W ⊆ {a,b}
  CHECK(stable == stop(kAB));

  XProcess ab = close(kAB, {{kA, kB}}, {}, {});
  CHECK(ab.traces() == std::set<Trace>{{}, {kA}, {kA, kB}});
  CHECK(ab.max_refusals().empty());
}

TEST_CASE("expansion adds impossible events and subsets", "[failures]") {
  CHECK(expand_failures(omega(kA1)).empty());
  CHECK(expand_failures(stop(kA1)) == failures_of({{{}, ActionSet{}}, {{}, ActionSet::of({kA})}}));
  XProcess p = close(kA1, {{kA}}, {}, {FailurePair{{}, ActionSet{}}});
  CHECK(expand_failures(p) == failures_of({{{}, ActionSet{}}}));
}

TEST_CASE("futures", "[failures]") {
  CHECK(fut(stop(kAB), {}).empty());
  CHECK(fut(den("a -> STOP"), {}) == ActionSet::of({kA}));
  CHECK(fut(den("a -> STOP [] b -> OMEGA"), {}) == ActionSet::of({kA, kB}));
  CHECK_THROWS_AS(fut(den("a -> STOP"), {kB}), Error);
}

TEST_CASE("equality and refinement", "[failures]") {
  XProcess p = den("a -> b -> STOP |~| b -> OMEGA");
  CHECK(equal(p, p));
  CHECK(equal(den("a -> val x [] a -> val y"), den("a -> val x |~| a -> val y")));
  CHECK_FALSE(equal(stop(kAB), omega(kAB)));

  CHECK(refines(p, p));
  CHECK(refines(den("a -> STOP |~| b -> STOP"), den("a -> STOP")));
  CHECK_FALSE(refines(den("a -> STOP"), den("a -> STOP |~| b -> STOP")));
  CHECK_FALSE(refines(omega(kAB), stop(kAB)));
  CHECK(refines(intern_choice(stop(kAB), omega(kAB)), stop(kAB)));
}

TEST_CASE("random processes satisfy the closure conditions", "[failures][property]") {
  Rng rng(3);
  for (int i = 0; i < 300; ++i) {
    ProcessOptions opts;
    opts.values = {"x", "y"};
    XProcess p = random_process(rng, kAB, opts);
    INFO(describe(p));
    const auto traces = p.traces();
    CHECK(traces.count({}));
    for (const auto& w : traces)
      if (!w.empty()) CHECK(traces.count(Trace(w.begin(), w.end() - 1)));
    for (const auto& x : p.xtraces()) CHECK(traces.count(x.trace));
    for (const auto& [w, sets] : p.max_refusals()) {
      CHECK(traces.count(w));
      for (ActionSet m : sets) {
        CHECK(m.subset_of(fut(p, w)));
        for (ActionSet other : sets) CHECK((m == other || !m.subset_of(other)));
      }
    }
    // Expanded failures are closed downwards and under adding impossible events.
    auto all = expand_failures(p);
    for (const auto& f : all)
      for (Action a : kAB->actions()) {
        ActionSet less = f.refusal;
        less.erase(a);
        CHECK(all.count(FailurePair{f.trace, less}));
        if (!fut(p, f.trace).contains(a)) {
          ActionSet more = f.refusal;
          more.insert(a);
          CHECK(all.count(FailurePair{f.trace, more}));
        }
      }
  }
}

TEST_CASE("JSON round trip in both forms", "[failures][property]") {
  Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    ProcessOptions opts;
    opts.values = {"x", kTick};
    XProcess p = random_process(rng, kAB, opts);
    for (FailureForm form : {FailureForm::Expanded, FailureForm::Maximal}) {
      auto j = to_json(p, form);
      CHECK(process_from_json(j) == p);
      CHECK(process_from_json(nlohmann::json::parse(j.dump())) == p);
    }
  }
}

TEST_CASE("close agrees with brute force on its own output", "[failures][oracle]") {
  Rng rng(8);
  for (int i = 0; i < 200; ++i) {
    XProcess p = random_process(rng, kAB);
    oracle::Model m = oracle::flatten(p);
    std::set<Trace> traces = p.traces();
    std::set<FailurePair> fs = expand_failures(p);
    CHECK(close(kAB, traces, p.xtraces(), fs) == p);
    CHECK(m.failures.size() == fs.size());
  }
}
