// Copyright 2026 The cspfx Authors
// SPDX-License-Identifier: Apache-2.0

// Finitary X-processes in canonical form.
//
// A process is stored as a trie over its traces. Each node keeps the values
// terminating there (its X-traces) and its maximal refusals intersected with
// the node's futures. An empty refusal list means the trace has no failures.

#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cspfx/alphabet.hpp"

namespace cspfx {

struct ProcessNode;
using NodePtr = std::shared_ptr<const ProcessNode>;

struct ProcessNode {
  std::vector<std::pair<Action, NodePtr>> children;  // sorted by action, unique
  std::vector<std::string> values;                    // sorted, unique
  std::vector<ActionSet> refusals;                    // sorted antichain, each within fut()

  ActionSet fut() const;
  const ProcessNode* child(Action a) const;
  bool has_failures() const { return !refusals.empty(); }
  // Does the node refuse the set? Anything outside fut() is refusable for free.
  bool refuses(ActionSet w) const;
};

// Builds a canonical node. `candidates` may be any refusals (not yet
// intersected with the futures or reduced to an antichain).
NodePtr make_node(std::vector<std::pair<Action, NodePtr>> children,
                  std::vector<std::string> values, std::vector<ActionSet> candidates);

// Keeps the maximal sets only, sorted.
std::vector<ActionSet> maximal_sets(std::vector<ActionSet> sets);

bool same_node(const ProcessNode& x, const ProcessNode& y);

struct XTrace {
  Trace trace;
  std::string value;
  auto operator<=>(const XTrace&) const = default;
};

struct FailurePair {
  Trace trace;
  ActionSet refusal;
  auto operator<=>(const FailurePair&) const = default;
};

class XProcess {
 public:
  XProcess(AlphabetPtr alphabet, NodePtr root);

  const AlphabetPtr& alphabet_ptr() const { return alphabet_; }
  const Alphabet& alphabet() const { return *alphabet_; }
  const NodePtr& root() const { return root_; }

  std::set<Trace> traces() const;
  std::set<XTrace> xtraces() const;
  std::map<Trace, std::vector<ActionSet>> max_refusals() const;
  std::set<std::string> values() const;  // every value on some X-trace

  // The node reached by `w`, or null when w is not a trace.
  const ProcessNode* find(const Trace& w) const;
  bool has_trace(const Trace& w) const { return find(w) != nullptr; }
  bool has_failure(const Trace& w, ActionSet refusal) const;
  std::size_t node_count() const;

 private:
  AlphabetPtr alphabet_;
  NodePtr root_;
};

// Smallest process containing the given traces, X-traces and failures.
XProcess close(AlphabetPtr alphabet, const std::set<Trace>& traces,
               const std::set<XTrace>& xtraces, const std::set<FailurePair>& failures);

std::set<FailurePair> expand_failures(const XProcess& p);

ActionSet fut(const XProcess& p, const Trace& w);  // throws when w is not a trace

bool equal(const XProcess& p, const XProcess& q);
bool operator==(const XProcess& p, const XProcess& q);

// p ⊑ q: every behaviour of q is a behaviour of p.
bool refines(const XProcess& p, const XProcess& q);

// Renames values; names mapped to the same target merge.
XProcess map_values(const XProcess& p, const std::map<std::string, std::string>& rename);

// One-line human summary, e.g. for test diagnostics.
std::string describe(const XProcess& p);

}  // namespace cspfx
