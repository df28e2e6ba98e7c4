// Copyright 2026 The cspfx Authors
// SPDX-License-Identifier: Apache-2.0

#include "cspfx/process.hpp"

#include <algorithm>
#include <functional>

namespace cspfx {

ActionSet ProcessNode::fut() const {
  ActionSet s;
  for (const auto& [a, _] : children) s.insert(a);
  return s;
}

const ProcessNode* ProcessNode::child(Action a) const {
  auto it = std::lower_bound(children.begin(), children.end(), a,
                             [](const auto& entry, Action x) { return entry.first < x; });
  if (it == children.end() || it->first != a) return nullptr;
  return it->second.get();
}

bool ProcessNode::refuses(ActionSet w) const {
  ActionSet relevant = w & fut();
  for (ActionSet m : refusals)
    if (relevant.subset_of(m)) return true;
  return false;
}

std::vector<ActionSet> maximal_sets(std::vector<ActionSet> sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<ActionSet> out;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < sets.size() && !dominated; ++j)
      dominated = j != i && sets[i].subset_of(sets[j]);
    if (!dominated) out.push_back(sets[i]);
  }
  return out;
}

NodePtr make_node(std::vector<std::pair<Action, NodePtr>> children,
                  std::vector<std::string> values, std::vector<ActionSet> candidates) {
  auto node = std::make_shared<ProcessNode>();
  std::sort(children.begin(), children.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  for (std::size_t i = 1; i < children.size(); ++i)
    if (children[i].first == children[i - 1].first) throw Error("duplicate child action");
  node->children = std::move(children);
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  node->values = std::move(values);
  ActionSet f = node->fut();
  for (ActionSet& m : candidates) m = m & f;
  node->refusals = maximal_sets(std::move(candidates));
  return node;
}

bool same_node(const ProcessNode& x, const ProcessNode& y) {
  if (&x == &y) return true;
  if (x.values != y.values || x.refusals != y.refusals) return false;
  if (x.children.size() != y.children.size()) return false;
  for (std::size_t i = 0; i < x.children.size(); ++i) {
    if (x.children[i].first != y.children[i].first) return false;
    if (!same_node(*x.children[i].second, *y.children[i].second)) return false;
  }
  return true;
}

XProcess::XProcess(AlphabetPtr alphabet, NodePtr root)
    : alphabet_(std::move(alphabet)), root_(std::move(root)) {
  if (!alphabet_ || !root_) throw Error("process needs an alphabet and a root");
}

namespace {

void walk(const ProcessNode& n, Trace& prefix,
          const std::function<void(const Trace&, const ProcessNode&)>& visit) {
  visit(prefix, n);
  for (const auto& [a, c] : n.children) {
    prefix.push_back(a);
    walk(*c, prefix, visit);
    prefix.pop_back();
  }
}

}  // namespace

std::set<Trace> XProcess::traces() const {
  std::set<Trace> out;
  Trace w;
  walk(*root_, w, [&](const Trace& t, const ProcessNode&) { out.insert(t); });
  return out;
}

std::set<XTrace> XProcess::xtraces() const {
  std::set<XTrace> out;
  Trace w;
  walk(*root_, w, [&](const Trace& t, const ProcessNode& n) {
    for (const auto& v : n.values) out.insert(XTrace{t, v});
  });
  return out;
}

std::map<Trace, std::vector<ActionSet>> XProcess::max_refusals() const {
  std::map<Trace, std::vector<ActionSet>> out;
  Trace w;
  walk(*root_, w, [&](const Trace& t, const ProcessNode& n) {
    if (n.has_failures()) out[t] = n.refusals;
  });
  return out;
}

std::set<std::string> XProcess::values() const {
  std::set<std::string> out;
  Trace w;
  walk(*root_, w, [&](const Trace&, const ProcessNode& n) {
    out.insert(n.values.begin(), n.values.end());
  });
  return out;
}

const ProcessNode* XProcess::find(const Trace& w) const {
  const ProcessNode* n = root_.get();
  for (Action a : w) {
    n = n->child(a);
    if (!n) return nullptr;
  }
  return n;
}

bool XProcess::has_failure(const Trace& w, ActionSet refusal) const {
  const ProcessNode* n = find(w);
  return n && n->refuses(refusal);
}

std::size_t XProcess::node_count() const {
  std::size_t count = 0;
  Trace w;
  walk(*root_, w, [&](const Trace&, const ProcessNode&) { ++count; });
  return count;
}

namespace {

struct Builder {
  std::map<Action, std::unique_ptr<Builder>> kids;
  std::vector<std::string> values;
  std::vector<ActionSet> refusals;

  Builder& at(const Trace& w) {
    Builder* b = this;
    for (Action a : w) {
      auto& slot = b->kids[a];
      if (!slot) slot = std::make_unique<Builder>();
      b = slot.get();
    }
    return *b;
  }

  NodePtr freeze() const {
    std::vector<std::pair<Action, NodePtr>> children;
    for (const auto& [a, k] : kids) children.emplace_back(a, k->freeze());
    return make_node(std::move(children), values, refusals);
  }
};

}  // namespace

XProcess close(AlphabetPtr alphabet, const std::set<Trace>& traces,
               const std::set<XTrace>& xtraces, const std::set<FailurePair>& failures) {
  ActionSet all = alphabet->all();
  auto check = [&](const Trace& w) {
    for (Action a : w)
      if (!all.contains(a)) throw Error("trace uses an action outside the alphabet");
  };
  Builder root;
  for (const auto& w : traces) check(w), root.at(w);
  for (const auto& x : xtraces) check(x.trace), root.at(x.trace).values.push_back(x.value);
  for (const auto& f : failures) {
    check(f.trace);
    if (!f.refusal.subset_of(all)) throw Error("refusal outside the alphabet");
    root.at(f.trace).refusals.push_back(f.refusal);
  }
  return XProcess(std::move(alphabet), root.freeze());
}

std::set<FailurePair> expand_failures(const XProcess& p) {
  const std::uint64_t all = p.alphabet().all().bits();
  std::set<FailurePair> out;
  Trace w;
  walk(*p.root(), w, [&](const Trace& t, const ProcessNode& n) {
    if (!n.has_failures()) return;
    // Enumerate every subset of the alphabet.
    std::uint64_t s = 0;
    do {
      if (n.refuses(ActionSet(s))) out.insert(FailurePair{t, ActionSet(s)});
      s = (s - all) & all;
    } while (s != 0);
  });
  return out;
}

ActionSet fut(const XProcess& p, const Trace& w) {
  const ProcessNode* n = p.find(w);
  if (!n) throw Error("not a trace of the process: " + format_trace(p.alphabet(), w));
  return n->fut();
}

bool equal(const XProcess& p, const XProcess& q) {
  if (!(p.alphabet() == q.alphabet())) throw Error("alphabet mismatch");
  return same_node(*p.root(), *q.root());
}

bool operator==(const XProcess& p, const XProcess& q) { return equal(p, q); }

namespace {

bool node_refines(const ProcessNode& p, const ProcessNode& q) {
  if (!std::includes(p.values.begin(), p.values.end(), q.values.begin(), q.values.end()))
    return false;
  ActionSet extra = p.fut() - q.fut();
  for (ActionSet m : q.refusals)
    if (!p.refuses(m | extra)) return false;
  for (const auto& [a, qc] : q.children) {
    const ProcessNode* pc = p.child(a);
    if (!pc || !node_refines(*pc, *qc)) return false;
  }
  return true;
}

NodePtr rename_node(const ProcessNode& n, const std::map<std::string, std::string>& rename) {
  std::vector<std::pair<Action, NodePtr>> children;
  for (const auto& [a, c] : n.children) children.emplace_back(a, rename_node(*c, rename));
  std::vector<std::string> values;
  for (const auto& v : n.values) {
    auto it = rename.find(v);
    values.push_back(it == rename.end() ? v : it->second);
  }
  return make_node(std::move(children), std::move(values), n.refusals);
}

}  // namespace

bool refines(const XProcess& p, const XProcess& q) {
  if (!(p.alphabet() == q.alphabet())) throw Error("alphabet mismatch");
  return node_refines(*p.root(), *q.root());
}

XProcess map_values(const XProcess& p, const std::map<std::string, std::string>& rename) {
  return XProcess(p.alphabet_ptr(), rename_node(*p.root(), rename));
}

std::string describe(const XProcess& p) {
  const Alphabet& al = p.alphabet();
  std::string s;
  Trace w;
  walk(*p.root(), w, [&](const Trace& t, const ProcessNode& n) {
    if (!s.empty()) s += " ";
    s += format_trace(al, t);
    for (const auto& v : n.values) s += "." + v;
    if (n.has_failures()) {
      s += "[";
      for (std::size_t i = 0; i < n.refusals.size(); ++i)
        s += (i ? "," : "") + format_set(al, n.refusals[i]);
      s += "]";
    }
  });
  return "{" + s + "}";
}

}  // namespace cspfx
