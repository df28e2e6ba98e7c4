// Copyright 2026 The cspfx Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cspfx {

// Raised for malformed input or for operations applied outside their domain.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An event, stored as its index in the owning alphabet.
struct Action {
  std::uint8_t index = 0;
  auto operator<=>(const Action&) const = default;
};

// A set of actions as a 64-bit mask. Alphabets are capped at 64 events.
class ActionSet {
 public:
  constexpr ActionSet() = default;
  constexpr explicit ActionSet(std::uint64_t bits) : bits_(bits) {}

  static ActionSet of(std::initializer_list<Action> actions) {
    ActionSet s;
    for (Action a : actions) s.insert(a);
    return s;
  }
  // The set {0, .., n-1}.
  static constexpr ActionSet first(std::size_t n) {
    return ActionSet(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  int size() const { return std::popcount(bits_); }
  constexpr bool contains(Action a) const { return (bits_ >> a.index) & 1u; }
  void insert(Action a) { bits_ |= std::uint64_t{1} << a.index; }
  void erase(Action a) { bits_ &= ~(std::uint64_t{1} << a.index); }
  constexpr bool subset_of(ActionSet o) const { return (bits_ & ~o.bits_) == 0; }

  friend constexpr ActionSet operator|(ActionSet x, ActionSet y) { return ActionSet(x.bits_ | y.bits_); }
  friend constexpr ActionSet operator&(ActionSet x, ActionSet y) { return ActionSet(x.bits_ & y.bits_); }
  friend constexpr ActionSet operator-(ActionSet x, ActionSet y) { return ActionSet(x.bits_ & ~y.bits_); }
  auto operator<=>(const ActionSet&) const = default;

  std::vector<Action> members() const {
    std::vector<Action> out;
    for (std::uint64_t b = bits_; b != 0; b &= b - 1)
      out.push_back(Action{static_cast<std::uint8_t>(std::countr_zero(b))});
    return out;
  }

 private:
  std::uint64_t bits_ = 0;
};

// Ordered, duplicate-free list of event names.
class Alphabet {
 public:
  static constexpr std::size_t kMaxSize = 64;

  explicit Alphabet(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(Action a) const { return names_.at(a.index); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<Action> find(std::string_view name) const;
  Action at(std::string_view name) const;  // throws Error when absent
  ActionSet all() const { return ActionSet::first(names_.size()); }
  std::vector<Action> actions() const;

  bool operator==(const Alphabet& o) const { return names_ == o.names_; }

 private:
  std::vector<std::string> names_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

AlphabetPtr make_alphabet(std::vector<std::string> names);

// Action names sorted lexicographically (canonical printing order).
std::vector<Action> by_name(const Alphabet& alphabet, ActionSet set);

using Trace = std::vector<Action>;

std::string format_trace(const Alphabet& alphabet, const Trace& trace);
std::string format_set(const Alphabet& alphabet, ActionSet set);

// Value-name conventions shared by the semantic modules.
inline const std::string kTick = "\xE2\x9C\x93";  // the termination value
std::string pair_value(std::string_view left, std::string_view right);

}  // namespace cspfx
