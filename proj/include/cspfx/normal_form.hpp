// Copyright 2026 The cspfx Authors
// SPDX-License-Identifier: Apache-2.0

// Normal forms and semantic read-back.
//
// A box form is an internal choice, over a saturated family of guard sets, of
// deterministic choices; an omega form is a single deterministic choice
// without a stable initial state. Either may also offer values immediately.

#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "cspfx/denote.hpp"
#include "cspfx/process.hpp"
#include "cspfx/terms.hpp"

namespace cspfx {

// Closed under supersets bounded by a universe: L in the family and
// L ⊆ L' ⊆ universe imply L' is in the family.
class SaturatedFamily {
 public:
  SaturatedFamily() = default;
  const std::vector<ActionSet>& sets() const { return sets_; }  // sorted
  ActionSet universe() const;
  bool contains(ActionSet s) const;
  bool operator==(const SaturatedFamily&) const = default;

 private:
  friend SaturatedFamily saturate(const std::vector<ActionSet>&, ActionSet);
  std::vector<ActionSet> sets_;
};

// Smallest saturated family containing `sets` whose union is `universe`.
// Every input set must lie inside the universe.
SaturatedFamily saturate(const std::vector<ActionSet>& sets, ActionSet universe);
// Universe defaults to the union of the inputs.
SaturatedFamily saturate(const std::vector<ActionSet>& sets);
bool is_saturated(const std::vector<ActionSet>& sets);

struct NormalForm;
using NormalFormPtr = std::shared_ptr<const NormalForm>;

struct NormalForm {
  enum class Shape { Box, Omega };

  Shape shape = Shape::Omega;
  SaturatedFamily family;  // box forms only
  ActionSet guards;        // union of the family, or the omega guards
  std::vector<std::pair<Action, NormalFormPtr>> branches;  // sorted, one per guard
  std::vector<std::string> values;                          // sorted

  const NormalForm& branch(Action a) const;
};

bool operator==(const NormalForm& x, const NormalForm& y);

NormalFormPtr readback(const XProcess& p);
NormalFormPtr readback(const ProcessNode& node);

// The term displaying the normal form, summands in canonical order.
ProcTerm nf_to_term(const NormalForm& nf, const Alphabet& alphabet);

// Evaluates a normal form with the algebra constructors.
XProcess nf_denote(const NormalForm& nf, const AlphabetPtr& alphabet);

NormalFormPtr normalize(const ProcTerm& t, const AlphabetPtr& alphabet, const ValueEnv& env);
NormalFormPtr normalize(const ProcTerm& t, const AlphabetPtr& alphabet);

// Normal form computed on the syntax, by the distributive and saturation
// laws of the choice operators, without evaluating the term. Covers STOP,
// OMEGA, SKIP, values, prefixes, both binary choices and deterministic
// choices; throws Error on any other operator.
NormalFormPtr normalize_syntactic(const ProcTerm& t);

bool equivalent(const ProcTerm& t, const ProcTerm& u, const AlphabetPtr& alphabet);
bool refine_terms(const ProcTerm& t, const ProcTerm& u, const AlphabetPtr& alphabet);

}  // namespace cspfx
