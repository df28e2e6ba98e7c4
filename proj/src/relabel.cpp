// Copyright 2026 The cspfx Authors
// SPDX-License-Identifier: Apache-2.0

#include "cspfx/relabel.hpp"

#include <algorithm>

namespace cspfx {

RelabelFn::RelabelFn(std::vector<std::pair<Action, Action>> mapping) {
  std::sort(mapping.begin(), mapping.end());
  for (std::size_t i = 1; i < mapping.size(); ++i)
    if (mapping[i].first == mapping[i - 1].first)
      throw Error("relabelling maps an event twice");
  mapping_ = std::move(mapping);
}

Action RelabelFn::operator()(Action a) const {
  for (const auto& [from, to] : mapping_)
    if (from == a) return to;
  return a;
}

ActionSet RelabelFn::image(ActionSet s) const {
  ActionSet out;
  for (Action a : s.members()) out.insert((*this)(a));
  return out;
}

ActionSet RelabelFn::preimage(ActionSet targets, ActionSet universe) const {
  ActionSet out;
  for (Action a : universe.members())
    if (targets.contains((*this)(a))) out.insert(a);
  return out;
}

}  // namespace cspfx
