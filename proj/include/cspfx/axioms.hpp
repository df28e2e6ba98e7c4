// Copyright 2026 The cspfx Authors
// SPDX-License-Identifier: Apache-2.0

// Axiom schemas of the four process theories, instantiated over an alphabet.

#pragma once

#include <string>
#include <vector>

#include "cspfx/denote.hpp"
#include "cspfx/terms.hpp"

namespace cspfx {

enum class AxiomKind { Equation, Inequation };  // inequation: lhs ⊑ rhs

struct AxiomSchema {
  std::string family;  // shared by all instances of one schema
  std::string name;    // family plus the instance's actions, if any
  Signature theory;
  AxiomKind kind;
  ProcTerm lhs;
  ProcTerm rhs;
};

// Family names in presentation order. Throws for Signature::Full.
std::vector<std::string> axiom_families(Signature theory);

// Every instance of every schema. Schemas indexed by actions are instantiated
// for each action (or action sequence of length up to `max_arity`).
std::vector<AxiomSchema> axioms(Signature theory, const Alphabet& alphabet, std::size_t max_arity = 3);

// Consequences of the axioms, used as additional checks.
std::vector<AxiomSchema> derived_equations(Signature theory, const Alphabet& alphabet,
                                           std::size_t max_arity = 3);

bool check_axiom(const AxiomSchema& ax, const AlphabetPtr& alphabet, const ProcessEnv& assignment);

std::string format_axiom(const AxiomSchema& ax, const Alphabet& alphabet);

}  // namespace cspfx
