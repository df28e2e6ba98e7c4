// Copyright 2026 The cspfx Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <string>

#include "cspfx/operators.hpp"
#include "cspfx/terms.hpp"

namespace cspfx {

// Value-constant name to the value it denotes.
using ValueEnv = std::map<std::string, std::string>;
// Metavariable name to process, for open terms.
using ProcessEnv = std::map<std::string, XProcess>;

// Identity environment over the value constants of t.
ValueEnv identity_env(const ProcTerm& t);

XProcess denote(const ProcTerm& t, const AlphabetPtr& alphabet, const ValueEnv& env,
                const ProcessEnv& metavars = {});

// Convenience: value constants denote themselves.
XProcess denote(const ProcTerm& t, const AlphabetPtr& alphabet);

}  // namespace cspfx
