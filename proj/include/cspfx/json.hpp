// Copyright 2026 The cspfx Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <json.hpp>

#include "cspfx/process.hpp"

namespace cspfx {

inline constexpr const char* kSchema = "csp-effects/1";

enum class FailureForm { Expanded, Maximal };

// {"alphabet", "traces", "xtraces", and "failures" or "maxRefusals"}.
nlohmann::json to_json(const XProcess& p, FailureForm form = FailureForm::Expanded);

// Accepts either failure form. The result is closed, so partial listings are fine.
XProcess process_from_json(const nlohmann::json& j, AlphabetPtr alphabet = nullptr);

}  // namespace cspfx
