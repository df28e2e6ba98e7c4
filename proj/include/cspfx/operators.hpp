// Copyright 2026 The cspfx Authors
// SPDX-License-Identifier: Apache-2.0

// Direct set-level definitions of the process operators.

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cspfx/process.hpp"
#include "cspfx/relabel.hpp"

namespace cspfx {

using Branches = std::vector<std::pair<Action, XProcess>>;

XProcess stop(AlphabetPtr alphabet);
XProcess omega(AlphabetPtr alphabet);
XProcess unit(AlphabetPtr alphabet, std::string value);
XProcess skip(AlphabetPtr alphabet);

XProcess prefix(Action a, const XProcess& p);
XProcess intern_choice(const XProcess& p, const XProcess& q);
XProcess intern_choice(const std::vector<XProcess>& ps);  // non-empty
XProcess extern_choice(const XProcess& p, const XProcess& q);

// Guards must be pairwise distinct.
XProcess det_choice(AlphabetPtr alphabet, const Branches& branches);
// As det_choice but without the initial stable state.
XProcess det_choice_omega(AlphabetPtr alphabet, const Branches& branches);
// Guards may repeat; branches sharing a guard are joined by internal choice.
XProcess merged_choice(AlphabetPtr alphabet, const Branches& branches, bool with_omega);

XProcess relabel(const RelabelFn& f, const XProcess& p);
XProcess conceal(Action a, const XProcess& p);

// Value pairs are named "(x,y)" with x from the left operand.
XProcess parallel(const XProcess& p, const XProcess& q);
XProcess interleave(const XProcess& p, const XProcess& q);
XProcess interleave_left(const XProcess& p, const XProcess& q);
XProcess interleave_right(const XProcess& p, const XProcess& q);

// Sequential composition of terminating processes (values within {tick}).
XProcess seq(const XProcess& p, const XProcess& q);

// Exchanges the components of every pair value.
XProcess swap_pairs(const XProcess& p);

// Collapses the value (tick,tick) to tick, leaving everything else alone.
XProcess join_ticks(const XProcess& p);

}  // namespace cspfx
