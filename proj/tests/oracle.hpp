// Copyright 2026 The cspfx Authors
// SPDX-License-Identifier: Apache-2.0

// Brute-force reference model: a process is three explicit sets (traces,
// X-traces, and every failure pair), and each operator is its set-level
// definition evaluated by enumeration. Nothing here shares code with the
// library beyond the term and alphabet types, so agreement is evidence.

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cspfx/process.hpp"
#include "cspfx/terms.hpp"

namespace oracle {

using Word = std::vector<int>;
using Refusal = std::uint32_t;  // bit i: action i

struct Model {
  int n = 0;  // alphabet size
  std::set<Word> traces;
  std::set<std::pair<Word, std::string>> xtraces;
  std::set<std::pair<Word, Refusal>> failures;

  bool operator==(const Model&) const = default;
  Refusal all() const { return (Refusal{1} << n) - 1; }
};

inline Refusal bit(int a) { return Refusal{1} << a; }

inline Word cons(int a, const Word& w) {
  Word out{a};
  out.insert(out.end(), w.begin(), w.end());
  return out;
}

inline Word concat(const Word& u, const Word& v) {
  Word out = u;
  out.insert(out.end(), v.begin(), v.end());
  return out;
}

inline Refusal fut(const Model& p, const Word& w) {
  Refusal out = 0;
  for (int a = 0; a < p.n; ++a)
    if (p.traces.count(concat(w, {a}))) out |= bit(a);
  return out;
}

inline std::string pair_name(const std::string& x, const std::string& y) { return "(" + x + "," + y + ")"; }

inline Model omega(int n) { return Model{n, {Word{}}, {}, {}}; }

inline Model stop(int n) {
  Model m = omega(n);
  for (Refusal w = 0; w <= m.all(); ++w) m.failures.insert({Word{}, w});
  return m;
}

inline Model eta(int n, const std::string& x) {
  Model m = omega(n);
  m.xtraces.insert({Word{}, x});
  return m;
}

inline Model prefix(int a, const Model& p) {
  Model m = omega(p.n);
  for (const auto& w : p.traces) m.traces.insert(cons(a, w));
  for (const auto& [w, x] : p.xtraces) m.xtraces.insert({cons(a, w), x});
  for (Refusal w = 0; w <= m.all(); ++w)
    if (!(w & bit(a))) m.failures.insert({Word{}, w});
  for (const auto& [w, r] : p.failures) m.failures.insert({cons(a, w), r});
  return m;
}

inline Model intern(const Model& p, const Model& q) {
  Model m = p;
  m.traces.insert(q.traces.begin(), q.traces.end());
  m.xtraces.insert(q.xtraces.begin(), q.xtraces.end());
  m.failures.insert(q.failures.begin(), q.failures.end());
  return m;
}

inline Model extern_(const Model& p, const Model& q) {
  Model m = intern(p, q);
  m.failures.clear();
  for (const auto& f : p.failures)
    if (!f.first.empty() || q.failures.count(f)) m.failures.insert(f);
  for (const auto& f : q.failures)
    if (!f.first.empty()) m.failures.insert(f);
  return m;
}

// Guarded choice; with_omega drops the stable initial state.
inline Model guarded(int n, const std::vector<std::pair<int, Model>>& branches, bool with_omega) {
  Model m = omega(n);
  Refusal guards = 0;
  for (const auto& [a, p] : branches) {
    guards |= bit(a);
    Model pre = prefix(a, p);
    m.traces.insert(pre.traces.begin(), pre.traces.end());
    m.xtraces.insert(pre.xtraces.begin(), pre.xtraces.end());
    for (const auto& f : pre.failures)
      if (!f.first.empty()) m.failures.insert(f);
  }
  if (!with_omega)
    for (Refusal w = 0; w <= m.all(); ++w)
      if (!(w & guards)) m.failures.insert({Word{}, w});
  return m;
}

inline Model relabel(const std::function<int(int)>& f, const Model& p) {
  Model m = omega(p.n);
  auto map = [&](const Word& w) {
    Word out;
    for (int a : w) out.push_back(f(a));
    return out;
  };
  for (const auto& w : p.traces) m.traces.insert(map(w));
  for (const auto& [w, x] : p.xtraces) m.xtraces.insert({map(w), x});
  for (const auto& w : p.traces)
    for (Refusal r = 0; r <= m.all(); ++r) {
      Refusal pre = 0;
      for (int a = 0; a < p.n; ++a)
        if (r & bit(f(a))) pre |= bit(a);
      if (p.failures.count({w, pre & fut(p, w)})) m.failures.insert({map(w), r});
    }
  return m;
}

inline Model conceal(int a, const Model& p) {
  Model m = omega(p.n);
  auto hide = [&](const Word& w) {
    Word out;
    for (int b : w)
      if (b != a) out.push_back(b);
    return out;
  };
  for (const auto& w : p.traces) m.traces.insert(hide(w));
  for (const auto& [w, x] : p.xtraces) m.xtraces.insert({hide(w), x});
  for (const auto& [w, r] : p.failures)
    if (r & bit(a)) {
      m.failures.insert({hide(w), r});
      m.failures.insert({hide(w), r & ~bit(a)});
    }
  return m;
}

inline Model parallel(const Model& p, const Model& q) {
  Model m = omega(p.n);
  for (const auto& w : p.traces)
    if (q.traces.count(w)) m.traces.insert(w);
  for (const auto& [w, x] : p.xtraces)
    for (const auto& [v, y] : q.xtraces)
      if (w == v) m.xtraces.insert({w, pair_name(x, y)});
  for (const auto& [w, r] : p.failures)
    for (const auto& [v, s] : q.failures)
      if (w == v) m.failures.insert({w, r | s});
  return m;
}

// All interleavings of u and v; `first` restricts the first letter to come
// from u (1), from v (2), or either (0).
inline void shuffles(const Word& u, const Word& v, int first, std::set<Word>& out) {
  std::function<void(std::size_t, std::size_t, Word&)> go = [&](std::size_t i, std::size_t j, Word& acc) {
    if (i == u.size() && j == v.size()) {
      out.insert(acc);
      return;
    }
    bool at_start = acc.empty();
    if (i < u.size() && !(at_start && first == 2)) {
      acc.push_back(u[i]);
      go(i + 1, j, acc);
      acc.pop_back();
    }
    if (j < v.size() && !(at_start && first == 1)) {
      acc.push_back(v[j]);
      go(i, j + 1, acc);
      acc.pop_back();
    }
  };
  Word acc;
  go(0, 0, acc);
}

// first = 0: |||; 1: left interleaving; 2: right interleaving.
inline Model interleave(const Model& p, const Model& q, int first = 0) {
  Model m = omega(p.n);
  for (const auto& u : p.traces)
    for (const auto& v : q.traces) shuffles(u, v, first, m.traces);
  m.traces.insert(Word{});
  for (const auto& [u, x] : p.xtraces)
    for (const auto& [v, y] : q.xtraces) {
      std::set<Word> ws;
      shuffles(u, v, first, ws);
      if (u.empty() && v.empty()) ws.insert(Word{});
      for (const auto& w : ws) m.xtraces.insert({w, pair_name(x, y)});
    }
  for (const auto& [u, r] : p.failures)
    for (const auto& [v, s] : q.failures) {
      if (r != s) continue;
      std::set<Word> ws;
      shuffles(u, v, first, ws);
      for (const auto& w : ws)
        if (!w.empty() || first == 0) m.failures.insert({w, r});
    }
  const Model& lead = first == 1 ? p : q;
  if (first != 0)
    for (const auto& f : lead.failures)
      if (f.first.empty()) m.failures.insert(f);
  return m;
}

inline Model join_ticks(const Model& p) {
  const std::string both = pair_name(cspfx::kTick, cspfx::kTick);
  Model m = p;
  m.xtraces.clear();
  for (const auto& [w, x] : p.xtraces) m.xtraces.insert({w, x == both ? cspfx::kTick : x});
  return m;
}

// Kleisli extension: every X-trace wx continues as w followed by k(x).
inline Model bind(const Model& p, const std::function<Model(const std::string&)>& k) {
  Model m = omega(p.n);
  m.traces = p.traces;
  m.failures = p.failures;
  for (const auto& [w, x] : p.xtraces) {
    Model c = k(x);
    for (const auto& v : c.traces) m.traces.insert(concat(w, v));
    for (const auto& [v, y] : c.xtraces) m.xtraces.insert({concat(w, v), y});
    for (const auto& [v, r] : c.failures) m.failures.insert({concat(w, v), r});
  }
  return m;
}

inline Model eval(const cspfx::ProcTerm& t, int n) {
  using cspfx::TermKind;
  auto go = [n](const cspfx::ProcTerm& u) { return eval(u, n); };
  auto branches = [&](const cspfx::ProcTerm& u) {
    std::vector<std::pair<int, Model>> out;
    for (const auto& [a, body] : u.branches()) out.push_back({a.index, go(body)});
    return out;
  };
  switch (t.kind()) {
    case TermKind::Stop: return stop(n);
    case TermKind::Omega: return omega(n);
    case TermKind::Skip: return eta(n, cspfx::kTick);
    case TermKind::Value: return eta(n, t.name());
    case TermKind::Prefix: return prefix(t.action().index, go(t.body()));
    case TermKind::IntChoice: return intern(go(t.left()), go(t.right()));
    case TermKind::ExtChoice: return extern_(go(t.left()), go(t.right()));
    case TermKind::DetChoice: return guarded(n, branches(t), false);
    case TermKind::DetChoiceOmega: return guarded(n, branches(t), true);
    case TermKind::Relabel: {
      cspfx::RelabelFn f = t.relabelling();
      return relabel([f](int a) { return f(cspfx::Action{static_cast<std::uint8_t>(a)}).index; }, go(t.body()));
    }
    case TermKind::Conceal: return conceal(t.action().index, go(t.body()));
    case TermKind::Par: return join_ticks(parallel(go(t.left()), go(t.right())));
    case TermKind::Interleave: return join_ticks(interleave(go(t.left()), go(t.right())));
    case TermKind::InterleaveL: return join_ticks(interleave(go(t.left()), go(t.right()), 1));
    case TermKind::InterleaveR: return join_ticks(interleave(go(t.left()), go(t.right()), 2));
    case TermKind::Seq: {
      Model q = go(t.right());
      return bind(go(t.left()), [&](const std::string&) { return q; });
    }
    case TermKind::MetaVar: break;
  }
  throw cspfx::Error("oracle: open term");
}

// The library's process, flattened into the same explicit sets.
inline Model flatten(const cspfx::XProcess& p) {
  Model m;
  m.n = static_cast<int>(p.alphabet().size());
  auto word = [](const cspfx::Trace& w) {
    Word out;
    for (auto a : w) out.push_back(a.index);
    return out;
  };
  for (const auto& w : p.traces()) m.traces.insert(word(w));
  for (const auto& x : p.xtraces()) m.xtraces.insert({word(x.trace), x.value});
  for (const auto& f : cspfx::expand_failures(p))
    m.failures.insert({word(f.trace), static_cast<Refusal>(f.refusal.bits())});
  return m;
}

}  // namespace oracle
