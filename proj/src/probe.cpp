// Copyright 2026 The cspfx Authors
// SPDX-License-Identifier: Apache-2.0

// Perturbation probing of the defining equation systems.

#include <optional>

#include "cspfx/freealgebra.hpp"
#include "cspfx/operators.hpp"

namespace cspfx {

const char* eqsystem_name(EqSystem s) {
  switch (s) {
    case EqSystem::ExtChoice: return "ext";
    case EqSystem::Par: return "par";
    case EqSystem::InterLeft: return "interL";
    case EqSystem::InterRight: return "interR";
  }
  return "?";
}

BinaryOp direct_operator(EqSystem s) {
  switch (s) {
    case EqSystem::ExtChoice: return extern_choice;
    case EqSystem::Par: return parallel;
    case EqSystem::InterLeft: return interleave_left;
    case EqSystem::InterRight: return interleave_right;
  }
  throw Error("unknown equation system");
}

namespace {

// A deterministic choice built from samples, kept with its parts so that
// right-hand sides can be assembled from the branches.
struct Head {
  Branches branches;
  bool omega;
  XProcess process;
};

class Prober {
 public:
  Prober(EqSystem system, const BinaryOp& candidate, const ProbeSamples& samples)
      : system_(system), op_(candidate), samples_(samples),
        al_(samples.processes.front().alphabet_ptr()) {
    build_heads();
  }

  ProbeReport run() {
    const BinaryOp direct = direct_operator(system_);
    for (const auto& p : samples_.processes)
      for (const auto& q : samples_.processes)
        if (!equal(op_(p, q), direct(p, q))) report_.differs_from_direct = true;

    switch (system_) {
      case EqSystem::ExtChoice: ext_clauses(); break;
      case EqSystem::Par: par_clauses(); break;
      case EqSystem::InterLeft: left_clauses(); break;
      case EqSystem::InterRight: right_clauses(); break;
    }
    return report_;
  }

 private:
  void check(const char* equation, const XProcess& lhs, const XProcess& rhs,
             std::initializer_list<const XProcess*> args) {
    ++report_.instances_checked;
    if (equal(lhs, rhs)) return;
    std::string inst;
    for (const XProcess* a : args) inst += (inst.empty() ? "" : " , ") + describe(*a);
    report_.violations.push_back({equation, inst});
  }

  void build_heads() {
    const auto& ps = samples_.processes;
    std::size_t k = 0;
    auto next_sample = [&]() -> const XProcess& { return ps[k++ % ps.size()]; };
    std::uint64_t all = al_->all().bits();
    std::uint64_t s = 0;
    do {
      for (bool omega : {false, true}) {
        Branches bs;
        for (Action a : ActionSet(s).members()) bs.emplace_back(a, next_sample());
        XProcess proc = omega ? det_choice_omega(al_, bs) : det_choice(al_, bs);
        heads_.push_back({bs, omega, proc});
      }
      s = (s - all) & all;
    } while (s != 0);
    for (const auto& v : samples_.values) units_.push_back(eta(al_, v));
  }

  XProcess omega_head(const Head& h) const { return det_choice_omega(al_, h.branches); }

  // op distributes over internal choice on the left for every right operand.
  void distribute_left(const char* name) {
    const auto& ps = samples_.processes;
    for (std::size_t i = 0; i < ps.size(); ++i)
      for (std::size_t j = i + 1; j < ps.size(); ++j)
        for (const auto& q : ps)
          check(name, op_(intern_choice(ps[i], ps[j]), q), intern_choice(op_(ps[i], q), op_(ps[j], q)),
                {&ps[i], &ps[j], &q});
  }

  // Distribution on the right, with the left operand restricted to `lefts`.
  void distribute_right(const char* name, const std::vector<XProcess>& lefts) {
    const auto& ps = samples_.processes;
    for (const auto& p : lefts)
      for (std::size_t i = 0; i < ps.size(); ++i)
        for (std::size_t j = i + 1; j < ps.size(); ++j)
          check(name, op_(p, intern_choice(ps[i], ps[j])), intern_choice(op_(p, ps[i]), op_(p, ps[j])),
                {&p, &ps[i], &ps[j]});
  }

  std::vector<XProcess> head_processes() const {
    std::vector<XProcess> out;
    for (const auto& h : heads_) out.push_back(h.process);
    return out;
  }

  void ext_clauses() {
    distribute_left("ext: distributes over |~| on the left");
    distribute_right("ext: guarded operand distributes over |~| on the right", head_processes());
    for (const auto& h : heads_)
      for (const auto& g : heads_) {
        Branches joined = h.branches;
        joined.insert(joined.end(), g.branches.begin(), g.branches.end());
        check("ext: guarded against guarded", op_(h.process, g.process),
              merged_choice(al_, joined, h.omega || g.omega), {&h.process, &g.process});
      }
    XProcess nothing = omega(al_);
    for (const auto& u : units_)
      for (const auto& q : samples_.processes)
        check("ext: value on the left", op_(u, q), intern_choice(u, op_(nothing, q)), {&u, &q});
    for (const auto& h : heads_)
      for (const auto& u : units_)
        check("ext: value on the right", op_(h.process, u), intern_choice(omega_head(h), u), {&h.process, &u});
  }

  void par_clauses() {
    distribute_left("par: distributes over |~| on the left");
    std::vector<XProcess> lefts = head_processes();
    lefts.insert(lefts.end(), units_.begin(), units_.end());
    distribute_right("par: distributes over |~| on the right", lefts);
    for (const auto& h : heads_)
      for (const auto& g : heads_) {
        Branches common;
        for (const auto& [a, f] : h.branches)
          for (const auto& [b, q] : g.branches)
            if (a == b) common.emplace_back(a, op_(f, q));
        bool om = h.omega || g.omega;
        check("par: guarded against guarded", op_(h.process, g.process),
              om ? det_choice_omega(al_, common) : det_choice(al_, common), {&h.process, &g.process});
      }
    XProcess nothing = omega(al_);
    for (const auto& u : units_) {
      for (const auto& h : heads_) {
        check("par: value against guarded", op_(u, h.process), nothing, {&u, &h.process});
        check("par: guarded against value", op_(h.process, u), nothing, {&h.process, &u});
      }
      for (std::size_t i = 0; i < units_.size(); ++i)
        check("par: value against value", op_(u, units_[i]),
              eta(al_, pair_value(*u.values().begin(), samples_.values[i])), {&u, &units_[i]});
    }
  }

  void left_clauses() {
    const BinaryOp right = interleave_right;
    distribute_left("interL: distributes over |~| on the left");
    distribute_right("interL: value operand distributes over |~| on the right", units_);
    for (const auto& h : heads_)
      for (const auto& g : samples_.processes) {
        Branches bs;
        for (const auto& [a, f] : h.branches) bs.emplace_back(a, extern_choice(op_(f, g), right(f, g)));
        check("interL: guarded on the left", op_(h.process, g),
              h.omega ? det_choice_omega(al_, bs) : det_choice(al_, bs), {&h.process, &g});
      }
    value_clauses("interL", [&](const XProcess& u, const XProcess& v) { return op_(u, v); });
  }

  void right_clauses() {
    const BinaryOp left = interleave_left;
    distribute_right("interR: distributes over |~| on the right", samples_.processes);
    for (const auto& u : units_) {
      const auto& ps = samples_.processes;
      for (std::size_t i = 0; i < ps.size(); ++i)
        for (std::size_t j = i + 1; j < ps.size(); ++j)
          check("interR: value operand distributes over |~| on the left", op_(intern_choice(ps[i], ps[j]), u),
                intern_choice(op_(ps[i], u), op_(ps[j], u)), {&ps[i], &ps[j], &u});
    }
    for (const auto& g : samples_.processes)
      for (const auto& h : heads_) {
        Branches bs;
        for (const auto& [b, f] : h.branches) bs.emplace_back(b, extern_choice(left(g, f), op_(g, f)));
        check("interR: guarded on the right", op_(g, h.process),
              h.omega ? det_choice_omega(al_, bs) : det_choice(al_, bs), {&g, &h.process});
      }
    value_clauses("interR", [&](const XProcess& u, const XProcess& v) { return op_(v, u); });
  }

  // Clauses where a value meets a guarded operand or another value. `oriented`
  // puts the value-carrying operand where the system inspects it.
  template <typename Oriented>
  void value_clauses(const std::string& sys, Oriented&& oriented) {
    XProcess nothing = omega(al_);
    for (const auto& u : units_)
      for (const auto& h : heads_)
        check((sys + ": value against guarded").c_str(), oriented(u, h.process), nothing, {&u, &h.process});
    for (std::size_t i = 0; i < units_.size(); ++i)
      for (std::size_t j = 0; j < units_.size(); ++j)
        check((sys + ": value against value").c_str(), op_(units_[i], units_[j]),
              eta(al_, pair_value(samples_.values[i], samples_.values[j])), {&units_[i], &units_[j]});
  }

  EqSystem system_;
  const BinaryOp& op_;
  const ProbeSamples& samples_;
  AlphabetPtr al_;
  std::vector<Head> heads_;
  std::vector<XProcess> units_;
  ProbeReport report_;
};

}  // namespace

ProbeReport uniqueness_probe(EqSystem system, const BinaryOp& candidate, const ProbeSamples& samples) {
  if (samples.processes.empty() || samples.values.empty()) throw Error("probe needs samples");
  Prober p(system, candidate, samples);
  return p.run();
}

}  // namespace cspfx
