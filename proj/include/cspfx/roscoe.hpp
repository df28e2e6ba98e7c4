// Copyright 2026 The cspfx Authors
// SPDX-License-Identifier: Apache-2.0

// Roscoe's stable failures model, as explicit sets, and the bijection with
// terminating processes (processes whose only value is the tick).

#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cspfx/process.hpp"
#include "cspfx/relabel.hpp"

namespace cspfx {

// Events are the alphabet's actions plus one extra index for the tick,
// so the alphabet may hold at most 63 actions here.
struct RoscoeSF {
  AlphabetPtr alphabet;
  std::set<Trace> traces;
  std::set<std::pair<Trace, ActionSet>> failures;

  bool operator==(const RoscoeSF& o) const;
};

Action tick_event(const Alphabet& alphabet);

// The healthiness conditions that fail, by name; empty when well formed.
std::vector<std::string> validate(const RoscoeSF& s);

XProcess theta(const RoscoeSF& s);          // throws on malformed input
RoscoeSF theta_inv(const XProcess& p);      // throws on a value other than the tick

std::string describe(const RoscoeSF& s);

namespace roscoe {

using Branches = std::vector<std::pair<Action, RoscoeSF>>;

// Smallest well-formed process containing the given traces and failures.
RoscoeSF close(AlphabetPtr alphabet, std::set<Trace> traces, std::set<std::pair<Trace, ActionSet>> failures);

RoscoeSF stop(AlphabetPtr alphabet);
RoscoeSF skip(AlphabetPtr alphabet);
RoscoeSF div(AlphabetPtr alphabet);
RoscoeSF prefix(Action a, const RoscoeSF& p);
RoscoeSF int_choice(const RoscoeSF& p, const RoscoeSF& q);
RoscoeSF ext_choice(const RoscoeSF& p, const RoscoeSF& q);
RoscoeSF det_choice(AlphabetPtr alphabet, const Branches& branches);
RoscoeSF det_choice_div(AlphabetPtr alphabet, const Branches& branches);
RoscoeSF relabel(const RelabelFn& f, const RoscoeSF& p);
RoscoeSF hide(Action a, const RoscoeSF& p);
RoscoeSF seq(const RoscoeSF& p, const RoscoeSF& q);

// Parallel and interleaving that only combine stable states in which both
// sides refuse to terminate, and terminate jointly.
RoscoeSF par_tick(const RoscoeSF& p, const RoscoeSF& q);
RoscoeSF interleave_tick(const RoscoeSF& p, const RoscoeSF& q);

// The textbook parallel composition synchronised on every event.
RoscoeSF parallel_standard(const RoscoeSF& p, const RoscoeSF& q);

}  // namespace roscoe
}  // namespace cspfx
