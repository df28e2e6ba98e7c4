// Copyright 2026 The cspfx Authors
// SPDX-License-Identifier: Apache-2.0

#include "cspfx/alphabet.hpp"

#include <algorithm>
#include <set>

namespace cspfx {

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.size() > kMaxSize) throw Error("alphabet larger than 64 events");
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw Error("empty event name");
    if (!seen.insert(n).second) throw Error("duplicate event name '" + n + "'");
  }
}

std::optional<Action> Alphabet::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return Action{static_cast<std::uint8_t>(i)};
  return std::nullopt;
}

Action Alphabet::at(std::string_view name) const {
  if (auto a = find(name)) return *a;
  throw Error("unknown event '" + std::string(name) + "'");
}

std::vector<Action> Alphabet::actions() const { return all().members(); }

AlphabetPtr make_alphabet(std::vector<std::string> names) {
  return std::make_shared<const Alphabet>(std::move(names));
}

std::vector<Action> by_name(const Alphabet& alphabet, ActionSet set) {
  auto out = set.members();
  std::sort(out.begin(), out.end(),
            [&](Action x, Action y) { return alphabet.name(x) < alphabet.name(y); });
  return out;
}

std::string format_trace(const Alphabet& alphabet, const Trace& trace) {
  std::string s = "<";
  for (std::size_t i = 0; i < trace.size(); ++i) {
    if (i) s += ",";
    s += alphabet.name(trace[i]);
  }
  return s + ">";
}

std::string format_set(const Alphabet& alphabet, ActionSet set) {
  std::string s = "{";
  bool first = true;
  for (Action a : by_name(alphabet, set)) {
    if (!first) s += ",";
    first = false;
    s += alphabet.name(a);
  }
  return s + "}";
}

std::string pair_value(std::string_view left, std::string_view right) {
  std::string s = "(";
  s += left;
  s += ",";
  s += right;
  s += ")";
  return s;
}

}  // namespace cspfx
