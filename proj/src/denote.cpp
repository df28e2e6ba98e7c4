// Copyright 2026 The cspfx Authors
// SPDX-License-Identifier: Apache-2.0

#include "cspfx/denote.hpp"

namespace cspfx {

ValueEnv identity_env(const ProcTerm& t) {
  ValueEnv env;
  for (const auto& v : value_constants(t)) env[v] = v;
  return env;
}

namespace {

struct Denoter {
  const AlphabetPtr& alphabet;
  const ValueEnv& env;
  const ProcessEnv& metavars;

  Branches branches(const TermBranches& bs) {
    Branches out;
    for (const auto& [a, b] : bs) out.emplace_back(a, run(b));
    return out;
  }

  XProcess run(const ProcTerm& t) {
    switch (t.kind()) {
      case TermKind::Stop: return stop(alphabet);
      case TermKind::Omega: return omega(alphabet);
      case TermKind::Skip: return skip(alphabet);
      case TermKind::Value: {
        auto it = env.find(t.name());
        if (it == env.end()) throw Error("value constant '" + t.name() + "' is unbound");
        return unit(alphabet, it->second);
      }
      case TermKind::MetaVar: {
        auto it = metavars.find(t.name());
        if (it == metavars.end()) throw Error("metavariable '" + t.name() + "' is unbound");
        return it->second;
      }
      case TermKind::Prefix: return prefix(t.action(), run(t.body()));
      case TermKind::IntChoice: return intern_choice(run(t.left()), run(t.right()));
      case TermKind::ExtChoice: return extern_choice(run(t.left()), run(t.right()));
      case TermKind::DetChoice: return det_choice(alphabet, branches(t.branches()));
      case TermKind::DetChoiceOmega: return det_choice_omega(alphabet, branches(t.branches()));
      case TermKind::Relabel: return relabel(t.relabelling(), run(t.body()));
      case TermKind::Conceal: return conceal(t.action(), run(t.body()));
      // Terminating components in parallel terminate together.
      case TermKind::Par: return join_ticks(parallel(run(t.left()), run(t.right())));
      case TermKind::Interleave: return join_ticks(interleave(run(t.left()), run(t.right())));
      case TermKind::InterleaveL: return join_ticks(interleave_left(run(t.left()), run(t.right())));
      case TermKind::InterleaveR: return join_ticks(interleave_right(run(t.left()), run(t.right())));
      case TermKind::Seq: return seq(run(t.left()), run(t.right()));
    }
    throw Error("unhandled term");
  }
};

}  // namespace

XProcess denote(const ProcTerm& t, const AlphabetPtr& alphabet, const ValueEnv& env,
                const ProcessEnv& metavars) {
  Denoter d{alphabet, env, metavars};
  return d.run(t);
}

XProcess denote(const ProcTerm& t, const AlphabetPtr& alphabet) {
  return denote(t, alphabet, identity_env(t));
}

}  // namespace cspfx
