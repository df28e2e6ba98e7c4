// Copyright 2026 The cspfx Authors
// SPDX-License-Identifier: Apache-2.0

// Seeded generators of processes, relabellings and terms, and exhaustive
// enumeration of small closed terms.

#pragma once

#include <random>
#include <string>
#include <vector>

#include "cspfx/lambdac.hpp"
#include "cspfx/process.hpp"
#include "cspfx/relabel.hpp"
#include "cspfx/roscoe.hpp"
#include "cspfx/terms.hpp"

namespace cspfx {

using Rng = std::mt19937_64;

struct ProcessOptions {
  std::size_t max_depth = 3;         // longest trace
  double branch_probability = 0.5;   // per action, halved at every level
  double failure_probability = 0.75; // chance that a node has stable states at all
  std::size_t max_refusals = 3;      // candidate refusals per node
  std::vector<std::string> values;   // drawn from for X-traces
  double value_probability = 0.25;   // per value, per node
};

XProcess random_process(Rng& rng, const AlphabetPtr& alphabet, const ProcessOptions& opts = {});

// Processes whose only value is the tick.
XProcess random_tick_process(Rng& rng, const AlphabetPtr& alphabet, std::size_t max_depth = 3);

// A well-formed process of Roscoe's model, built as explicit sets and closed.
RoscoeSF random_roscoe(Rng& rng, const AlphabetPtr& alphabet, std::size_t max_depth = 3);

RelabelFn random_relabelling(Rng& rng, const Alphabet& alphabet);

struct TermOptions {
  Signature signature = Signature::Full;
  std::size_t max_size = 8;          // AST nodes, approximately
  std::vector<std::string> values;   // value constants that may occur
  bool tick_only = false;            // keep every subterm terminating, so Seq stays valid
};

ProcTerm random_term(Rng& rng, const Alphabet& alphabet, const TermOptions& opts = {});

// Every closed term built from STOP, OMEGA, prefixes, |~| and [] with at
// most `max_size` AST nodes.
std::vector<ProcTerm> enumerate_box_omega_terms(const Alphabet& alphabet, std::size_t max_size);

// A random well-typed lambda term of the given type, possibly open over the
// variables of `ctx`, built from about `budget` nodes. Types of intermediate
// binders are drawn from unit and nat.
LamTerm random_lam_term(Rng& rng, const Alphabet& alphabet, const LamType& type, const TypeContext& ctx = {},
                        std::size_t budget = 6);

// A random closed value of a first-order type (no effects).
LamTerm random_lam_value(Rng& rng, const LamType& type);

struct RandomContext {
  EvalContext context;
  LamType result;  // the type of E[M] for M of the hole type
};

// A random evaluation context of 1..max_frames frames around a hole of the
// given type, whose siblings are closed.
RandomContext random_context(Rng& rng, const Alphabet& alphabet, const LamType& hole, std::size_t max_frames = 3);

}  // namespace cspfx
