// Copyright 2026 The cspfx Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <utility>
#include <vector>

#include "cspfx/alphabet.hpp"

namespace cspfx {

// Action renaming with finite support; identity off the listed sources.
class RelabelFn {
 public:
  RelabelFn() = default;
  // Throws on a repeated source.
  explicit RelabelFn(std::vector<std::pair<Action, Action>> mapping);

  Action operator()(Action a) const;
  // f applied pointwise to a set.
  ActionSet image(ActionSet s) const;
  // The actions (within `universe`) whose image lies in `targets`.
  ActionSet preimage(ActionSet targets, ActionSet universe) const;
  const std::vector<std::pair<Action, Action>>& mapping() const { return mapping_; }
  bool operator==(const RelabelFn&) const = default;

 private:
  std::vector<std::pair<Action, Action>> mapping_;  // sorted by source
};

}  // namespace cspfx
