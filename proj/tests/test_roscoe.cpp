// Copyright 2026 The cspfx Authors
// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include "cspfx/generators.hpp"
#include "cspfx/operators.hpp"
#include "cspfx/roscoe.hpp"

using namespace cspfx;

namespace {

const AlphabetPtr kAB = make_alphabet({"a", "b"});

using FailureSet = std::set<std::pair<Trace, ActionSet>>;

// Every subset of `universe`, each joined with `extra`.
FailureSet all_refusals(const Trace& w, ActionSet universe, ActionSet extra = {}) {
  FailureSet out;
  for (std::uint64_t bits = 0; bits <= universe.bits(); ++bits)
    if ((bits & ~universe.bits()) == 0) out.insert({w, ActionSet(bits) | extra});
  return out;
}

}  // namespace

TEST_CASE("theta on the basic processes", "[roscoe]") {
  Action tick = tick_event(*kAB);
  ActionSet sigma = kAB->all(), with_tick = sigma | ActionSet::of({tick});

  RoscoeSF skip_sf = theta_inv(skip(kAB));
  FailureSet expected = all_refusals({}, sigma);
  expected.merge(all_refusals({tick}, with_tick));
  CHECK(skip_sf.failures == expected);
  CHECK(skip_sf.traces == std::set<Trace>{{}, {tick}});
  CHECK(theta(roscoe::skip(kAB)) == skip(kAB));

  RoscoeSF div = theta_inv(omega(kAB));
  CHECK(div.traces == std::set<Trace>{{}});
  CHECK(div.failures.empty());

  RoscoeSF stop_sf = theta_inv(stop(kAB));
  FailureSet stop_expected = all_refusals({}, sigma);
  stop_expected.merge(all_refusals({}, sigma, ActionSet::of({tick})));
  CHECK(stop_sf.failures == stop_expected);
  CHECK(validate(stop_sf).empty());
}

TEST_CASE("theta is a bijection", "[roscoe][property]") {
  Rng rng(31);
  for (int i = 0; i < 300; ++i) {
    XProcess p = random_tick_process(rng, kAB);
    RoscoeSF s = theta_inv(p);
    CHECK(validate(s).empty());
    CHECK(theta(s) == p);
    RoscoeSF r = random_roscoe(rng, kAB);
    REQUIRE(validate(r).empty());
    CHECK(theta_inv(theta(r)) == r);
  }
  CHECK_THROWS_AS(theta_inv(unit(kAB, "x")), Error);
}

TEST_CASE("malformed Roscoe processes are reported", "[roscoe]") {
  RoscoeSF bad{kAB, {{Action{0}}}, {}};  // no empty trace
  CHECK_FALSE(validate(bad).empty());
  CHECK_THROWS_AS(theta(bad), Error);
}

TEST_CASE("standard parallel composition is not the image of ||", "[roscoe]") {
  // With a value on one side and a stable state on the other, || here has no
  // stable state at all, while the textbook operator deadlocks.
  XProcess ours = join_ticks(parallel(stop(kAB), skip(kAB)));
  CHECK(ours == omega(kAB));
  CHECK(roscoe::parallel_standard(roscoe::stop(kAB), roscoe::skip(kAB)) == roscoe::stop(kAB));
  CHECK_FALSE(theta_inv(ours) == roscoe::parallel_standard(roscoe::stop(kAB), roscoe::skip(kAB)));
  CHECK(theta_inv(ours) == roscoe::par_tick(roscoe::stop(kAB), roscoe::skip(kAB)));
}

TEST_CASE("theta preserves the operators", "[roscoe][property]") {
  Rng rng(32);
  Action a{0}, b{1};
  for (int i = 0; i < 200; ++i) {
    XProcess p = random_tick_process(rng, kAB), q = random_tick_process(rng, kAB);
    RoscoeSF rp = theta_inv(p), rq = theta_inv(q);
    CHECK(theta_inv(prefix(a, p)) == roscoe::prefix(a, rp));
    CHECK(theta_inv(intern_choice(p, q)) == roscoe::int_choice(rp, rq));
    CHECK(theta_inv(extern_choice(p, q)) == roscoe::ext_choice(rp, rq));
    CHECK(theta_inv(conceal(b, p)) == roscoe::hide(b, rp));
    CHECK(theta_inv(seq(p, q)) == roscoe::seq(rp, rq));
    CHECK(theta_inv(join_ticks(interleave(p, q))) == roscoe::interleave_tick(rp, rq));
  }
}
