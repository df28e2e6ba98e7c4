// Copyright 2026 The cspfx Authors
// SPDX-License-Identifier: Apache-2.0

#include "cspfx/roscoe.hpp"

#include <map>

namespace cspfx {

namespace {

ActionSet sigma(const Alphabet& al) { return al.all(); }
ActionSet sigma_tick(const Alphabet& al) { return ActionSet::first(al.size() + 1); }

bool ends_in_tick(const Trace& t, Action tick) { return !t.empty() && t.back() == tick; }

Trace with(Trace t, Action a) {
  t.push_back(a);
  return t;
}

Trace concat(Trace s, const Trace& t) {
  s.insert(s.end(), t.begin(), t.end());
  return s;
}

// Calls f on every subset of `mask`.
template <typename F>
void subsets(ActionSet mask, F&& f) {
  std::uint64_t m = mask.bits(), s = m;
  while (true) {
    f(ActionSet(s));
    if (s == 0) break;
    s = (s - 1) & m;
  }
}

RoscoeSF empty_like(const AlphabetPtr& al) { return RoscoeSF{al, {{}}, {}}; }

void require_same(const RoscoeSF& p, const RoscoeSF& q) {
  if (!(*p.alphabet == *q.alphabet)) throw Error("alphabet mismatch");
}

// Adds what termination forces: before a possible tick every set of ordinary
// events is refused, after it everything is.
void add_termination_failures(RoscoeSF& s) {
  const Alphabet& al = *s.alphabet;
  Action tick = tick_event(al);
  for (const Trace& t : s.traces) {
    if (!ends_in_tick(t, tick)) continue;
    Trace before(t.begin(), t.end() - 1);
    subsets(sigma(al), [&](ActionSet x) { s.failures.emplace(before, x); });
    subsets(sigma_tick(al), [&](ActionSet x) { s.failures.emplace(t, x); });
  }
}

std::map<Trace, std::set<ActionSet>> by_trace(const RoscoeSF& s) {
  std::map<Trace, std::set<ActionSet>> out;
  for (const auto& [t, x] : s.failures) out[t].insert(x);
  return out;
}

// All interleavings of u and v.
void interleavings(const Trace& u, std::size_t i, const Trace& v, std::size_t j, Trace& cur,
                   std::set<Trace>& out) {
  if (i == u.size() && j == v.size()) {
    out.insert(cur);
    return;
  }
  if (i < u.size()) {
    cur.push_back(u[i]);
    interleavings(u, i + 1, v, j, cur, out);
    cur.pop_back();
  }
  if (j < v.size()) {
    cur.push_back(v[j]);
    interleavings(u, i, v, j + 1, cur, out);
    cur.pop_back();
  }
}

std::set<Trace> interleavings(const Trace& u, const Trace& v) {
  std::set<Trace> out;
  Trace cur;
  interleavings(u, 0, v, 0, cur, out);
  return out;
}

}  // namespace

bool RoscoeSF::operator==(const RoscoeSF& o) const {
  return *alphabet == *o.alphabet && traces == o.traces && failures == o.failures;
}

Action tick_event(const Alphabet& alphabet) {
  if (alphabet.size() >= Alphabet::kMaxSize) throw Error("no room for the tick event");
  return Action{static_cast<std::uint8_t>(alphabet.size())};
}

std::vector<std::string> validate(const RoscoeSF& s) {
  std::vector<std::string> bad;
  const Alphabet& al = *s.alphabet;
  const Action tick = tick_event(al);
  const ActionSet all = sigma_tick(al);
  auto fail = [&](const std::string& why) {
    if (bad.empty() || bad.back() != why) bad.push_back(why);
  };

  if (!s.traces.count({})) fail("empty trace missing");
  for (const Trace& t : s.traces) {
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (!all.contains(t[i])) fail("trace mentions an unknown event");
      if (t[i] == tick && i + 1 != t.size()) fail("tick before the end of a trace");
    }
    if (!t.empty() && !s.traces.count(Trace(t.begin(), t.end() - 1))) fail("traces not prefix closed");
  }
  for (const auto& [t, x] : s.failures) {
    if (!s.traces.count(t)) fail("failure on a missing trace");
    if (!x.subset_of(all)) fail("refusal mentions an unknown event");
    for (Action a : x.members())
      if (!s.failures.count({t, x - ActionSet::of({a})})) fail("refusals not subset closed");
    for (Action a : (all - x).members())
      if (!s.traces.count(with(t, a)) && !s.failures.count({t, x | ActionSet::of({a})}))
        fail("impossible events not refusable");
  }
  for (const Trace& t : s.traces) {
    if (!ends_in_tick(t, tick)) continue;
    if (!s.failures.count({Trace(t.begin(), t.end() - 1), sigma(al)})) fail("termination not stable");
    if (!s.failures.count({t, all})) fail("terminated process refuses less than everything");
  }
  return bad;
}

XProcess theta(const RoscoeSF& s) {
  if (auto bad = validate(s); !bad.empty()) throw Error("not a stable failures process: " + bad.front());
  const Alphabet& al = *s.alphabet;
  const Action tick = tick_event(al);
  const ActionSet tick_set = ActionSet::of({tick});
  std::set<Trace> traces;
  std::set<XTrace> xtraces;
  std::set<FailurePair> failures;
  for (const Trace& t : s.traces) {
    if (ends_in_tick(t, tick))
      xtraces.insert({Trace(t.begin(), t.end() - 1), kTick});
    else
      traces.insert(t);
  }
  for (const auto& [t, x] : s.failures)
    if (!ends_in_tick(t, tick) && x.contains(tick)) failures.insert({t, x - tick_set});
  return close(s.alphabet, traces, xtraces, failures);
}

RoscoeSF theta_inv(const XProcess& p) {
  const AlphabetPtr& al = p.alphabet_ptr();
  const Action tick = tick_event(*al);
  RoscoeSF s{al, p.traces(), {}};
  for (const XTrace& x : p.xtraces()) {
    if (x.value != kTick) throw Error("only terminating processes correspond to stable failures; found value '" +
                                      x.value + "'");
    s.traces.insert(with(x.trace, tick));
  }
  for (const FailurePair& f : expand_failures(p)) {
    s.failures.emplace(f.trace, f.refusal);
    s.failures.emplace(f.trace, f.refusal | ActionSet::of({tick}));
  }
  add_termination_failures(s);
  return s;
}

std::string describe(const RoscoeSF& s) {
  const Alphabet& al = *s.alphabet;
  const Action tick = tick_event(al);
  auto event = [&](Action a) { return a == tick ? kTick : al.name(a); };
  auto trace = [&](const Trace& t) {
    std::string out = "<";
    for (std::size_t i = 0; i < t.size(); ++i) out += (i ? "," : "") + event(t[i]);
    return out + ">";
  };
  std::string out = "traces {";
  bool first = true;
  for (const Trace& t : s.traces) {
    out += (first ? "" : " ") + trace(t);
    first = false;
  }
  out += "} failures {";
  first = true;
  for (const auto& [t, x] : s.failures) {
    std::string set;
    for (Action a : x.members()) set += (set.empty() ? "" : ",") + event(a);
    out += (first ? "" : " ") + trace(t) + "/{" + set + "}";
    first = false;
  }
  return out + "}";
}

namespace roscoe {

RoscoeSF close(AlphabetPtr alphabet, std::set<Trace> traces, std::set<std::pair<Trace, ActionSet>> failures) {
  const ActionSet all = sigma_tick(*alphabet);
  RoscoeSF s{std::move(alphabet), {{}}, {}};
  for (Trace t : traces)
    for (; !t.empty(); t.pop_back()) s.traces.insert(t);
  for (const auto& [t, x] : failures) s.traces.insert(t);
  for (Trace t : std::set<Trace>(s.traces))
    for (; !t.empty(); t.pop_back()) s.traces.insert(t);
  s.failures = std::move(failures);
  add_termination_failures(s);
  std::set<std::pair<Trace, ActionSet>> closed;
  for (const auto& [t, x] : s.failures) {
    ActionSet impossible;
    for (Action a : all.members())
      if (!s.traces.count(with(t, a))) impossible.insert(a);
    subsets((x & all) | impossible, [&](ActionSet y) { closed.emplace(t, y); });
  }
  s.failures = std::move(closed);
  return s;
}

RoscoeSF stop(AlphabetPtr alphabet) {
  RoscoeSF s = empty_like(alphabet);
  subsets(sigma_tick(*alphabet), [&](ActionSet x) { s.failures.emplace(Trace{}, x); });
  return s;
}

RoscoeSF skip(AlphabetPtr alphabet) {
  RoscoeSF s = empty_like(alphabet);
  s.traces.insert({tick_event(*alphabet)});
  add_termination_failures(s);
  return s;
}

RoscoeSF div(AlphabetPtr alphabet) { return empty_like(alphabet); }

RoscoeSF prefix(Action a, const RoscoeSF& p) {
  RoscoeSF s = empty_like(p.alphabet);
  for (const Trace& t : p.traces) s.traces.insert(concat({a}, t));
  subsets(sigma_tick(*p.alphabet), [&](ActionSet x) {
    if (!x.contains(a)) s.failures.emplace(Trace{}, x);
  });
  for (const auto& [t, x] : p.failures) s.failures.emplace(concat({a}, t), x);
  return s;
}

RoscoeSF int_choice(const RoscoeSF& p, const RoscoeSF& q) {
  require_same(p, q);
  RoscoeSF s = p;
  s.traces.insert(q.traces.begin(), q.traces.end());
  s.failures.insert(q.failures.begin(), q.failures.end());
  return s;
}

RoscoeSF ext_choice(const RoscoeSF& p, const RoscoeSF& q) {
  require_same(p, q);
  const Action tick = tick_event(*p.alphabet);
  RoscoeSF s = empty_like(p.alphabet);
  s.traces = p.traces;
  s.traces.insert(q.traces.begin(), q.traces.end());
  for (const auto& f : p.failures)
    if (!f.first.empty() || q.failures.count(f)) s.failures.insert(f);
  for (const auto& f : q.failures)
    if (!f.first.empty()) s.failures.insert(f);
  if (s.traces.count({tick})) subsets(sigma(*p.alphabet), [&](ActionSet x) { s.failures.emplace(Trace{}, x); });
  return s;
}

RoscoeSF det_choice(AlphabetPtr alphabet, const Branches& branches) {
  RoscoeSF s = stop(alphabet);
  for (const auto& [a, p] : branches) s = ext_choice(s, prefix(a, p));
  return s;
}

RoscoeSF det_choice_div(AlphabetPtr alphabet, const Branches& branches) {
  RoscoeSF s = div(alphabet);
  for (const auto& [a, p] : branches) s = ext_choice(s, prefix(a, p));
  return s;
}

RoscoeSF relabel(const RelabelFn& f, const RoscoeSF& p) {
  const ActionSet all = sigma_tick(*p.alphabet);
  RoscoeSF s = empty_like(p.alphabet);
  auto image = [&](const Trace& t) {
    Trace out;
    for (Action a : t) out.push_back(f(a));
    return out;
  };
  for (const Trace& t : p.traces) s.traces.insert(image(t));
  for (const Trace& t : p.traces)
    subsets(all, [&](ActionSet x) {
      if (p.failures.count({t, f.preimage(x, all)})) s.failures.emplace(image(t), x);
    });
  return s;
}

RoscoeSF hide(Action a, const RoscoeSF& p) {
  auto strip = [&](const Trace& t) {
    Trace out;
    for (Action b : t)
      if (b != a) out.push_back(b);
    return out;
  };
  RoscoeSF s = empty_like(p.alphabet);
  for (const Trace& t : p.traces) s.traces.insert(strip(t));
  for (const auto& [t, x] : p.failures)
    if (x.contains(a)) {
      s.failures.emplace(strip(t), x);
      s.failures.emplace(strip(t), x - ActionSet::of({a}));
    }
  return s;
}

RoscoeSF seq(const RoscoeSF& p, const RoscoeSF& q) {
  require_same(p, q);
  const Action tick = tick_event(*p.alphabet);
  RoscoeSF s = empty_like(p.alphabet);
  std::vector<Trace> done;  // s such that s✓ is a trace of p
  for (const Trace& t : p.traces) {
    if (ends_in_tick(t, tick))
      done.emplace_back(t.begin(), t.end() - 1);
    else
      s.traces.insert(t);
  }
  for (const auto& [t, x] : p.failures)
    if (!ends_in_tick(t, tick) && x.contains(tick)) {
      s.failures.emplace(t, x);
      s.failures.emplace(t, x - ActionSet::of({tick}));
    }
  for (const Trace& d : done) {
    for (const Trace& t : q.traces) s.traces.insert(concat(d, t));
    for (const auto& [t, x] : q.failures) s.failures.emplace(concat(d, t), x);
  }
  return s;
}

RoscoeSF par_tick(const RoscoeSF& p, const RoscoeSF& q) {
  require_same(p, q);
  const Action tick = tick_event(*p.alphabet);
  RoscoeSF s = empty_like(p.alphabet);
  for (const Trace& t : p.traces)
    if (q.traces.count(t)) s.traces.insert(t);
  auto qf = by_trace(q);
  for (const auto& [t, x] : p.failures) {
    if (ends_in_tick(t, tick) || !x.contains(tick)) continue;
    auto it = qf.find(t);
    if (it == qf.end()) continue;
    for (ActionSet y : it->second)
      if (y.contains(tick)) {
        s.failures.emplace(t, x | y);
        s.failures.emplace(t, (x | y) - ActionSet::of({tick}));
      }
  }
  add_termination_failures(s);
  return s;
}

RoscoeSF interleave_tick(const RoscoeSF& p, const RoscoeSF& q) {
  require_same(p, q);
  const Action tick = tick_event(*p.alphabet);
  RoscoeSF s = empty_like(p.alphabet);
  auto split = [&](const std::set<Trace>& ts, std::vector<Trace>& plain, std::vector<Trace>& done) {
    for (const Trace& t : ts) {
      if (ends_in_tick(t, tick))
        done.emplace_back(t.begin(), t.end() - 1);
      else
        plain.push_back(t);
    }
  };
  std::vector<Trace> pp, pd, qp, qd;
  split(p.traces, pp, pd);
  split(q.traces, qp, qd);
  for (const Trace& u : pp)
    for (const Trace& v : qp)
      for (const Trace& w : interleavings(u, v)) s.traces.insert(w);
  for (const Trace& u : pd)
    for (const Trace& v : qd)
      for (const Trace& w : interleavings(u, v)) s.traces.insert(with(w, tick));

  auto qf = by_trace(q);
  for (const auto& [u, x] : p.failures) {
    if (ends_in_tick(u, tick) || !x.contains(tick)) continue;
    for (const auto& [v, ys] : qf) {
      if (ends_in_tick(v, tick) || !ys.count(x)) continue;
      for (const Trace& w : interleavings(u, v)) {
        s.failures.emplace(w, x);
        s.failures.emplace(w, x - ActionSet::of({tick}));
      }
    }
  }
  add_termination_failures(s);
  return s;
}

RoscoeSF parallel_standard(const RoscoeSF& p, const RoscoeSF& q) {
  require_same(p, q);
  RoscoeSF s = empty_like(p.alphabet);
  for (const Trace& t : p.traces)
    if (q.traces.count(t)) s.traces.insert(t);
  auto qf = by_trace(q);
  for (const auto& [t, x] : p.failures) {
    auto it = qf.find(t);
    if (it == qf.end()) continue;
    for (ActionSet y : it->second) s.failures.emplace(t, x | y);
  }
  add_termination_failures(s);
  return s;
}

}  // namespace roscoe
}  // namespace cspfx
