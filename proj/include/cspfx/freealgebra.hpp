// Copyright 2026 The cspfx Authors
// SPDX-License-Identifier: Apache-2.0

// The free-algebra monad on processes, homomorphic deconstructors, and the
// binary deconstructors evaluated through their defining equation systems.

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "cspfx/process.hpp"
#include "cspfx/relabel.hpp"

namespace cspfx {

using ValueMap = std::function<XProcess(const std::string&)>;
using BinaryOp = std::function<XProcess(const XProcess&, const XProcess&)>;

XProcess eta(AlphabetPtr alphabet, std::string value);

// Homomorphic extension of g, applied to p. g is called once per value.
XProcess kleisli(const XProcess& p, const ValueMap& g);

// Folds over the normal form of p.
XProcess hom_relabel(const RelabelFn& f, const XProcess& p);
XProcess hom_conceal(Action a, const XProcess& p);

// Recursive evaluation over normal forms.
XProcess ext_choice_eqsys(const XProcess& p, const XProcess& q);
XProcess par_eqsys(const XProcess& p, const XProcess& q);
XProcess inter_eqsys_left(const XProcess& p, const XProcess& q);
XProcess inter_eqsys_right(const XProcess& p, const XProcess& q);

enum class EqSystem { ExtChoice, Par, InterLeft, InterRight };

const char* eqsystem_name(EqSystem s);
BinaryOp direct_operator(EqSystem s);

struct ProbeSamples {
  std::vector<XProcess> processes;  // non-empty, one alphabet
  std::vector<std::string> values;  // non-empty
};

struct Violation {
  std::string equation;  // which defining clause
  std::string instance;  // the arguments it failed at
};

struct ProbeReport {
  bool differs_from_direct = false;
  std::size_t instances_checked = 0;
  std::vector<Violation> violations;
  bool rejected() const { return !violations.empty(); }
};

// Checks the defining equations of `system` with `candidate` in place of the
// operator being defined, over instances built from the samples.
ProbeReport uniqueness_probe(EqSystem system, const BinaryOp& candidate, const ProbeSamples& samples);

}  // namespace cspfx
