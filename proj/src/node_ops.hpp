// Copyright 2026 The cspfx Authors
// SPDX-License-Identifier: Apache-2.0

// Trie-level helpers shared by the operator implementations.

#pragma once

#include <vector>

#include "cspfx/process.hpp"

namespace cspfx::detail {

// A refusal of a node whose futures were `old_fut`, re-expressed for a node
// with futures `new_fut`: actions the old node could not do are refusable.
inline ActionSet lift(ActionSet m, ActionSet old_fut, ActionSet new_fut) {
  return (m | (new_fut - old_fut)) & new_fut;
}

// Internal choice of several nodes.
NodePtr union_nodes(const std::vector<NodePtr>& nodes);

void require_same_alphabet(const XProcess& p, const XProcess& q);

}  // namespace cspfx::detail
