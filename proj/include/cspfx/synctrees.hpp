// Copyright 2026 The cspfx Authors
// SPDX-License-Identifier: Apache-2.0

// Finite synchronisation trees: action prefix, a semilattice sum with zero
// NIL, and the synchronisation operator with its per-action auxiliaries.
//
// The auxiliary family is characterised by equations in which the recursion
// variable trades places with the parameter, so they are not a definition by
// structural recursion. Here both operators are defined directly and the
// equations are checked as properties (see check_mutual_equations).

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "cspfx/alphabet.hpp"

namespace cspfx {

// Trees are hash-consed: equal trees share one id, so comparison is O(1).
class SyncTree {
 public:
  using Summands = std::vector<std::pair<Action, SyncTree>>;

  SyncTree();  // NIL

  // Sorted, without repetition.
  const Summands& summands() const;
  std::size_t depth() const;
  std::uint32_t id() const { return id_; }

  bool operator==(const SyncTree& o) const { return id_ == o.id_; }
  auto operator<=>(const SyncTree& o) const { return id_ <=> o.id_; }

  static SyncTree from_summands(Summands summands);

 private:
  explicit SyncTree(std::uint32_t id) : id_(id) {}
  std::uint32_t id_ = 0;
};

SyncTree st_nil();
SyncTree st_prefix(Action a, SyncTree t);
SyncTree st_sum(SyncTree x, SyncTree y);

SyncTree sync(SyncTree x, SyncTree y);
SyncTree sync_aux(Action a, SyncTree x, SyncTree y);

// Every tree of depth at most `depth` (NIL has depth 0) over the alphabet,
// or an error when there are more than `limit` of them.
std::vector<SyncTree> all_trees(const Alphabet& alphabet, std::size_t depth, std::size_t limit = 1u << 16);

std::string print_tree(SyncTree t, const Alphabet& alphabet);

using SyncOp = std::function<SyncTree(SyncTree, SyncTree)>;
using SyncAuxOp = std::function<SyncTree(Action, SyncTree, SyncTree)>;

struct SyncViolation {
  std::string equation;
  std::string instance;
};

struct SyncReport {
  std::size_t instances_checked = 0;
  std::vector<SyncViolation> violations;
  bool ok() const { return violations.empty(); }
};

// Names of the checked equations, in the order they are checked.
const std::vector<std::string>& sync_equation_names();

// Checks every equation for all samples (pairs and triples of them) with the
// given operators in place of sync and sync_aux. Stops recording an
// equation's violations after `max_reported` of them.
SyncReport check_mutual_equations(const Alphabet& alphabet, const std::vector<SyncTree>& samples,
                                  const SyncOp& par = sync, const SyncAuxOp& aux = sync_aux,
                                  std::size_t max_reported = 5);

}  // namespace cspfx
