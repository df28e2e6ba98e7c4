// Copyright 2026 The cspfx Authors
// SPDX-License-Identifier: Apache-2.0

#include "cspfx/operators.hpp"

#include <algorithm>
#include <map>

#include "cspfx/freealgebra.hpp"
#include "node_ops.hpp"

namespace cspfx {

namespace detail {

void require_same_alphabet(const XProcess& p, const XProcess& q) {
  if (p.alphabet_ptr() != q.alphabet_ptr() && !(p.alphabet() == q.alphabet()))
    throw Error("alphabet mismatch");
}

NodePtr union_nodes(const std::vector<NodePtr>& nodes) {
  if (nodes.size() == 1) return nodes.front();
  std::map<Action, std::vector<NodePtr>> grouped;
  std::vector<std::string> values;
  ActionSet new_fut;
  for (const auto& n : nodes) {
    for (const auto& [a, c] : n->children) grouped[a].push_back(c);
    values.insert(values.end(), n->values.begin(), n->values.end());
    new_fut = new_fut | n->fut();
  }
  std::vector<ActionSet> refusals;
  for (const auto& n : nodes) {
    ActionSet f = n->fut();
    for (ActionSet m : n->refusals) refusals.push_back(lift(m, f, new_fut));
  }
  std::vector<std::pair<Action, NodePtr>> children;
  for (const auto& [a, group] : grouped) children.emplace_back(a, union_nodes(group));
  return make_node(std::move(children), std::move(values), std::move(refusals));
}

}  // namespace detail

using detail::lift;

namespace {

NodePtr leaf(std::vector<std::string> values, bool stable) {
  std::vector<ActionSet> refusals;
  if (stable) refusals.push_back(ActionSet{});
  return make_node({}, std::move(values), std::move(refusals));
}

XProcess guarded(AlphabetPtr alphabet, const Branches& branches, bool stable) {
  std::vector<std::pair<Action, NodePtr>> children;
  ActionSet guards;
  for (const auto& [a, p] : branches) {
    if (guards.contains(a)) throw Error("repeated guard '" + alphabet->name(a) + "' in deterministic choice");
    if (!alphabet->all().contains(a)) throw Error("guard outside the alphabet");
    if (!(p.alphabet() == *alphabet)) throw Error("alphabet mismatch");
    guards.insert(a);
    children.emplace_back(a, p.root());
  }
  std::vector<ActionSet> refusals;
  if (stable) refusals.push_back(ActionSet{});
  return XProcess(alphabet, make_node(std::move(children), {}, std::move(refusals)));
}

}  // namespace

XProcess stop(AlphabetPtr alphabet) { return XProcess(std::move(alphabet), leaf({}, true)); }

XProcess omega(AlphabetPtr alphabet) { return XProcess(std::move(alphabet), leaf({}, false)); }

XProcess unit(AlphabetPtr alphabet, std::string value) {
  return XProcess(std::move(alphabet), leaf({std::move(value)}, false));
}

XProcess skip(AlphabetPtr alphabet) { return unit(std::move(alphabet), kTick); }

XProcess prefix(Action a, const XProcess& p) { return det_choice(p.alphabet_ptr(), {{a, p}}); }

XProcess intern_choice(const XProcess& p, const XProcess& q) {
  detail::require_same_alphabet(p, q);
  return XProcess(p.alphabet_ptr(), detail::union_nodes({p.root(), q.root()}));
}

XProcess intern_choice(const std::vector<XProcess>& ps) {
  if (ps.empty()) throw Error("internal choice of nothing");
  std::vector<NodePtr> roots;
  for (const auto& p : ps) {
    detail::require_same_alphabet(ps.front(), p);
    roots.push_back(p.root());
  }
  return XProcess(ps.front().alphabet_ptr(), detail::union_nodes(roots));
}

XProcess extern_choice(const XProcess& p, const XProcess& q) {
  detail::require_same_alphabet(p, q);
  const ProcessNode& x = *p.root();
  const ProcessNode& y = *q.root();
  std::map<Action, std::vector<NodePtr>> grouped;
  for (const auto& [a, c] : x.children) grouped[a].push_back(c);
  for (const auto& [a, c] : y.children) grouped[a].push_back(c);
  std::vector<std::pair<Action, NodePtr>> children;
  for (const auto& [a, group] : grouped) children.emplace_back(a, detail::union_nodes(group));
  std::vector<std::string> values = x.values;
  values.insert(values.end(), y.values.begin(), y.values.end());
  ActionSet fx = x.fut(), fy = y.fut(), f = fx | fy;
  std::vector<ActionSet> refusals;
  for (ActionSet m : x.refusals)
    for (ActionSet n : y.refusals) refusals.push_back(lift(m, fx, f) & lift(n, fy, f));
  return XProcess(p.alphabet_ptr(), make_node(std::move(children), std::move(values), std::move(refusals)));
}

XProcess det_choice(AlphabetPtr alphabet, const Branches& branches) {
  return guarded(std::move(alphabet), branches, true);
}

XProcess det_choice_omega(AlphabetPtr alphabet, const Branches& branches) {
  return guarded(std::move(alphabet), branches, false);
}

XProcess merged_choice(AlphabetPtr alphabet, const Branches& branches, bool with_omega) {
  std::map<Action, std::vector<XProcess>> grouped;
  for (const auto& [a, p] : branches) grouped[a].push_back(p);
  Branches merged;
  for (const auto& [a, group] : grouped) merged.emplace_back(a, intern_choice(group));
  return guarded(std::move(alphabet), merged, !with_omega);
}

namespace {

using Group = std::vector<const ProcessNode*>;

void normalize_group(Group& g) {
  std::sort(g.begin(), g.end());
  g.erase(std::unique(g.begin(), g.end()), g.end());
}

struct Relabeller {
  const RelabelFn& f;
  std::map<Group, NodePtr> memo;

  NodePtr run(Group g) {
    normalize_group(g);
    if (auto it = memo.find(g); it != memo.end()) return it->second;
    std::map<Action, Group> grouped;
    std::vector<std::string> values;
    ActionSet new_fut;
    for (const ProcessNode* n : g) {
      for (const auto& [a, c] : n->children) grouped[f(a)].push_back(c.get());
      values.insert(values.end(), n->values.begin(), n->values.end());
      new_fut = new_fut | f.image(n->fut());
    }
    std::vector<ActionSet> refusals;
    for (const ProcessNode* n : g) {
      ActionSet old_fut = n->fut();
      // b is refusable iff every future action mapped onto b was refusable.
      for (ActionSet m : n->refusals) refusals.push_back(new_fut - f.image(old_fut - m));
    }
    std::vector<std::pair<Action, NodePtr>> children;
    for (auto& [b, sub] : grouped) children.emplace_back(b, run(sub));
    return memo[g] = make_node(std::move(children), std::move(values), std::move(refusals));
  }
};

struct Concealer {
  Action hidden;
  std::map<Group, NodePtr> memo;

  NodePtr run(Group g) {
    // Close under the hidden action.
    for (std::size_t i = 0; i < g.size(); ++i)
      if (const ProcessNode* c = g[i]->child(hidden)) g.push_back(c);
    normalize_group(g);
    if (auto it = memo.find(g); it != memo.end()) return it->second;
    std::map<Action, Group> grouped;
    std::vector<std::string> values;
    for (const ProcessNode* n : g) {
      for (const auto& [a, c] : n->children)
        if (a != hidden) grouped[a].push_back(c.get());
      values.insert(values.end(), n->values.begin(), n->values.end());
    }
    ActionSet new_fut;
    for (const auto& [a, _] : grouped) new_fut.insert(a);
    std::vector<ActionSet> refusals;
    for (const ProcessNode* n : g) {
      ActionSet old_fut = n->fut();
      for (ActionSet m : n->refusals)
        if (!old_fut.contains(hidden) || m.contains(hidden))
          refusals.push_back(lift(m, old_fut, new_fut));
    }
    std::vector<std::pair<Action, NodePtr>> children;
    for (auto& [b, sub] : grouped) children.emplace_back(b, run(sub));
    return memo[g] = make_node(std::move(children), std::move(values), std::move(refusals));
  }
};

std::vector<std::string> paired_values(const ProcessNode& x, const ProcessNode& y) {
  std::vector<std::string> out;
  for (const auto& v : x.values)
    for (const auto& w : y.values) out.push_back(pair_value(v, w));
  return out;
}

NodePtr sync_nodes(const ProcessNode& x, const ProcessNode& y) {
  std::vector<std::pair<Action, NodePtr>> children;
  for (const auto& [a, c] : x.children)
    if (const ProcessNode* d = y.child(a)) children.emplace_back(a, sync_nodes(*c, *d));
  ActionSet f = x.fut() & y.fut();
  std::vector<ActionSet> refusals;
  for (ActionSet m : x.refusals)
    for (ActionSet n : y.refusals) refusals.push_back((m | n) & f);
  return make_node(std::move(children), paired_values(x, y), std::move(refusals));
}

using PairGroup = std::vector<std::pair<const ProcessNode*, const ProcessNode*>>;

struct Interleaver {
  std::map<PairGroup, NodePtr> memo;

  NodePtr run(PairGroup g) {
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());
    if (auto it = memo.find(g); it != memo.end()) return it->second;
    std::map<Action, PairGroup> grouped;
    std::vector<std::string> values;
    ActionSet new_fut;
    for (const auto& [x, y] : g) {
      for (const auto& [a, c] : x->children) grouped[a].emplace_back(c.get(), y);
      for (const auto& [b, d] : y->children) grouped[b].emplace_back(x, d.get());
      auto vs = paired_values(*x, *y);
      values.insert(values.end(), vs.begin(), vs.end());
      new_fut = new_fut | x->fut() | y->fut();
    }
    std::vector<ActionSet> refusals;
    for (const auto& [x, y] : g) {
      ActionSet fx = x->fut(), fy = y->fut();
      for (ActionSet m : x->refusals)
        for (ActionSet n : y->refusals) refusals.push_back(lift(m, fx, new_fut) & lift(n, fy, new_fut));
    }
    std::vector<std::pair<Action, NodePtr>> children;
    for (auto& [a, sub] : grouped) children.emplace_back(a, run(sub));
    return memo[g] = make_node(std::move(children), std::move(values), std::move(refusals));
  }
};

}  // namespace

XProcess relabel(const RelabelFn& f, const XProcess& p) {
  for (const auto& [from, to] : f.mapping())
    if (!p.alphabet().all().contains(from) || !p.alphabet().all().contains(to))
      throw Error("relabelling outside the alphabet");
  Relabeller r{f, {}};
  return XProcess(p.alphabet_ptr(), r.run({p.root().get()}));
}

XProcess conceal(Action a, const XProcess& p) {
  if (!p.alphabet().all().contains(a)) throw Error("concealed event outside the alphabet");
  Concealer c{a, {}};
  return XProcess(p.alphabet_ptr(), c.run({p.root().get()}));
}

XProcess parallel(const XProcess& p, const XProcess& q) {
  detail::require_same_alphabet(p, q);
  return XProcess(p.alphabet_ptr(), sync_nodes(*p.root(), *q.root()));
}

XProcess interleave(const XProcess& p, const XProcess& q) {
  detail::require_same_alphabet(p, q);
  Interleaver il;
  return XProcess(p.alphabet_ptr(), il.run({{p.root().get(), q.root().get()}}));
}

XProcess interleave_left(const XProcess& p, const XProcess& q) {
  detail::require_same_alphabet(p, q);
  const ProcessNode& x = *p.root();
  const ProcessNode& y = *q.root();
  Interleaver il;
  std::vector<std::pair<Action, NodePtr>> children;
  for (const auto& [a, c] : x.children) children.emplace_back(a, il.run({{c.get(), &y}}));
  return XProcess(p.alphabet_ptr(), make_node(std::move(children), paired_values(x, y), x.refusals));
}

XProcess interleave_right(const XProcess& p, const XProcess& q) {
  detail::require_same_alphabet(p, q);
  const ProcessNode& x = *p.root();
  const ProcessNode& y = *q.root();
  Interleaver il;
  std::vector<std::pair<Action, NodePtr>> children;
  for (const auto& [b, d] : y.children) children.emplace_back(b, il.run({{&x, d.get()}}));
  return XProcess(p.alphabet_ptr(), make_node(std::move(children), paired_values(x, y), y.refusals));
}

XProcess seq(const XProcess& p, const XProcess& q) {
  for (const XProcess* r : {&p, &q})
    for (const auto& v : r->values())
      if (v != kTick) throw Error("sequential composition needs terminating processes; found value '" + v + "'");
  detail::require_same_alphabet(p, q);
  return kleisli(p, [&](const std::string&) { return q; });
}

namespace {

// Splits a pair name "(x,y)" at its top-level comma.
std::optional<std::pair<std::string, std::string>> split_pair(const std::string& v) {
  if (v.size() < 3 || v.front() != '(' || v.back() != ')') return std::nullopt;
  int depth = 0;
  for (std::size_t i = 1; i + 1 < v.size(); ++i) {
    if (v[i] == '(') ++depth;
    else if (v[i] == ')') --depth;
    else if (v[i] == ',' && depth == 0)
      return std::make_pair(v.substr(1, i - 1), v.substr(i + 1, v.size() - i - 2));
  }
  return std::nullopt;
}

}  // namespace

XProcess swap_pairs(const XProcess& p) {
  std::map<std::string, std::string> rename;
  for (const auto& v : p.values()) {
    auto parts = split_pair(v);
    if (!parts) throw Error("value '" + v + "' is not a pair");
    rename[v] = pair_value(parts->second, parts->first);
  }
  return map_values(p, rename);
}

XProcess join_ticks(const XProcess& p) {
  return map_values(p, {{pair_value(kTick, kTick), kTick}});
}

}  // namespace cspfx
