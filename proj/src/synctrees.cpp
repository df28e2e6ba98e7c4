// Copyright 2026 The cspfx Authors
// SPDX-License-Identifier: Apache-2.0

#include "cspfx/synctrees.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <optional>
#include <unordered_map>

namespace cspfx {

namespace {

struct Entry {
  SyncTree::Summands summands;
  std::size_t depth;
};

using Key = std::vector<std::pair<std::uint8_t, std::uint32_t>>;

// All trees ever built, plus memo tables for the operators. Entries are never
// removed, so references into the deque stay valid.
struct Store {
  std::mutex mu;
  std::deque<Entry> entries{Entry{{}, 0}};
  std::map<Key, std::uint32_t> index{{Key{}, 0}};
  std::unordered_map<std::uint64_t, SyncTree> sums, syncs;
  std::unordered_map<std::uint64_t, SyncTree> auxes[Alphabet::kMaxSize];
};

Store& store() {
  static Store s;
  return s;
}

std::uint64_t pack(SyncTree x, SyncTree y) { return (std::uint64_t{x.id()} << 32) | y.id(); }

template <typename Compute>
SyncTree memo(std::unordered_map<std::uint64_t, SyncTree>& table, std::uint64_t key, Compute&& compute) {
  Store& s = store();
  {
    std::lock_guard lock(s.mu);
    if (auto it = table.find(key); it != table.end()) return it->second;
  }
  SyncTree t = compute();
  std::lock_guard lock(s.mu);
  table.emplace(key, t);
  return t;
}

}  // namespace

SyncTree::SyncTree() = default;

const SyncTree::Summands& SyncTree::summands() const {
  Store& s = store();
  std::lock_guard lock(s.mu);
  return s.entries[id_].summands;
}

std::size_t SyncTree::depth() const {
  Store& s = store();
  std::lock_guard lock(s.mu);
  return s.entries[id_].depth;
}

SyncTree SyncTree::from_summands(Summands summands) {
  std::sort(summands.begin(), summands.end());
  summands.erase(std::unique(summands.begin(), summands.end()), summands.end());
  Key key;
  for (const auto& [a, t] : summands) key.emplace_back(a.index, t.id());
  Store& s = store();
  std::lock_guard lock(s.mu);
  if (auto it = s.index.find(key); it != s.index.end()) return SyncTree(it->second);
  std::size_t depth = 0;
  for (const auto& [a, t] : summands) depth = std::max(depth, s.entries[t.id()].depth + 1);
  auto id = static_cast<std::uint32_t>(s.entries.size());
  s.entries.push_back({std::move(summands), depth});
  s.index.emplace(std::move(key), id);
  return SyncTree(id);
}

SyncTree st_nil() { return SyncTree(); }

SyncTree st_prefix(Action a, SyncTree t) { return SyncTree::from_summands({{a, t}}); }

SyncTree st_sum(SyncTree x, SyncTree y) {
  if (x == y) return x;
  if (y < x) std::swap(x, y);
  return memo(store().sums, pack(x, y), [&] {
    SyncTree::Summands all = x.summands();
    const auto& more = y.summands();
    all.insert(all.end(), more.begin(), more.end());
    return SyncTree::from_summands(std::move(all));
  });
}

SyncTree sync(SyncTree x, SyncTree y) {
  return memo(store().syncs, pack(x, y), [&] {
    SyncTree::Summands out;
    for (const auto& [a, xi] : x.summands())
      for (const auto& [b, yj] : y.summands())
        if (a == b) out.emplace_back(a, sync(xi, yj));
    return SyncTree::from_summands(std::move(out));
  });
}

SyncTree sync_aux(Action a, SyncTree x, SyncTree y) {
  return memo(store().auxes[a.index], pack(x, y), [&] {
    SyncTree::Summands out;
    for (const auto& [b, yj] : y.summands())
      if (b == a) out.emplace_back(a, sync(x, yj));
    return SyncTree::from_summands(std::move(out));
  });
}

std::vector<SyncTree> all_trees(const Alphabet& alphabet, std::size_t depth, std::size_t limit) {
  std::vector<SyncTree> level{st_nil()};
  for (std::size_t d = 0; d < depth; ++d) {
    SyncTree::Summands candidates;
    for (Action a : alphabet.actions())
      for (SyncTree t : level) candidates.emplace_back(a, t);
    if (candidates.size() >= 63 || (std::size_t{1} << candidates.size()) > limit)
      throw Error("too many synchronisation trees of depth " + std::to_string(depth));
    std::vector<SyncTree> next;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << candidates.size()); ++m) {
      SyncTree::Summands chosen;
      for (std::size_t i = 0; i < candidates.size(); ++i)
        if ((m >> i) & 1u) chosen.push_back(candidates[i]);
      next.push_back(SyncTree::from_summands(std::move(chosen)));
    }
    level = std::move(next);
  }
  return level;
}

std::string print_tree(SyncTree t, const Alphabet& alphabet) {
  const auto& ss = t.summands();
  if (ss.empty()) return "NIL";
  std::string out;
  for (const auto& [a, child] : ss) {
    if (!out.empty()) out += " + ";
    std::string c = print_tree(child, alphabet);
    out += alphabet.name(a) + "." + (child.summands().size() > 1 ? "(" + c + ")" : c);
  }
  return out;
}

const std::vector<std::string>& sync_equation_names() {
  static const std::vector<std::string> names{
      "NIL || z = NIL",
      "(x + y) || z = (x || z) + (y || z)",
      "a.x || z = x ||^a z",
      "z ||^a NIL = NIL",
      "z ||^a (x + y) = (z ||^a x) + (z ||^a y)",
      "z ||^a a.x = a.(z || x)",
      "z ||^a b.x = NIL  (b != a)",
      "z ||^a (sum_j b_j.x_j) = sum_{b_j = a} a.(z || x_j)",
  };
  return names;
}

namespace {

class SyncChecker {
 public:
  SyncChecker(const Alphabet& al, const SyncOp& par, const SyncAuxOp& aux, std::size_t max_reported)
      : al_(al), par_(par), aux_(aux), max_reported_(max_reported) {}

  SyncReport run(const std::vector<SyncTree>& samples) {
    const auto& names = sync_equation_names();
    const SyncTree nil = st_nil();
    for (SyncTree z : samples) {
      check(names[0], par_(nil, z), nil, {{"z", z}});
      for (Action a : al_.actions()) {
        check(names[3], aux_(a, z, nil), nil, {{"z", z}}, a);
      }
    }
    for (SyncTree x : samples)
      for (SyncTree z : samples)
        for (Action a : al_.actions()) {
          check(names[2], par(st_prefix(a, x), z), aux(a, x, z), {{"x", x}, {"z", z}}, a);
          for (Action b : al_.actions()) {
            if (b == a)
              check(names[5], aux(a, z, st_prefix(b, x)), st_prefix(a, par(z, x)), {{"z", z}, {"x", x}}, a);
            else
              check(names[6], aux(a, z, st_prefix(b, x)), st_nil(), {{"z", z}, {"x", x}}, a);
          }
          SyncTree::Summands matching;
          for (const auto& [b, xj] : x.summands())
            if (b == a) matching.emplace_back(a, par(z, xj));
          check(names[7], aux(a, z, x), SyncTree::from_summands(matching), {{"z", z}, {"x", x}}, a);
        }
    // Sums are commutative by construction, so unordered pairs suffice.
    for (std::size_t i = 0; i < samples.size(); ++i)
      for (std::size_t j = i; j < samples.size(); ++j) {
        SyncTree x = samples[i], y = samples[j];
        SyncTree xy = sum(x, y);
        for (SyncTree z : samples) {
          check(names[1], par(xy, z), sum(par(x, z), par(y, z)), {{"x", x}, {"y", y}, {"z", z}});
          for (Action a : al_.actions())
            check(names[4], aux(a, z, xy), sum(aux(a, z, x), aux(a, z, y)), {{"z", z}, {"x", x}, {"y", y}}, a);
        }
      }
    return std::move(report_);
  }

 private:
  // Memoized calls to the operators under test.
  SyncTree par(SyncTree x, SyncTree y) {
    auto [it, fresh] = par_cache_.try_emplace(pack(x, y));
    if (fresh) it->second = par_(x, y);
    return it->second;
  }
  SyncTree sum(SyncTree x, SyncTree y) {
    if (y < x) std::swap(x, y);
    auto [it, fresh] = sum_cache_.try_emplace(pack(x, y));
    if (fresh) it->second = st_sum(x, y);
    return it->second;
  }
  SyncTree aux(Action a, SyncTree x, SyncTree y) {
    auto [it, fresh] = aux_cache_[a.index].try_emplace(pack(x, y));
    if (fresh) it->second = aux_(a, x, y);
    return it->second;
  }

  void check(const std::string& equation, SyncTree lhs, SyncTree rhs,
             std::initializer_list<std::pair<const char*, SyncTree>> args, std::optional<Action> a = std::nullopt) {
    ++report_.instances_checked;
    if (lhs == rhs) return;
    if (reported_[equation]++ >= max_reported_) return;
    std::string inst = a ? "a = " + al_.name(*a) : "";
    for (const auto& [var, t] : args) inst += (inst.empty() ? "" : ", ") + std::string(var) + " = " + print_tree(t, al_);
    report_.violations.push_back({equation, inst});
  }

  const Alphabet& al_;
  const SyncOp& par_;
  const SyncAuxOp& aux_;
  std::size_t max_reported_;
  std::unordered_map<std::uint64_t, SyncTree> par_cache_, sum_cache_;
  std::unordered_map<std::uint64_t, SyncTree> aux_cache_[Alphabet::kMaxSize];
  std::map<std::string, std::size_t> reported_;
  SyncReport report_;
};

}  // namespace

SyncReport check_mutual_equations(const Alphabet& alphabet, const std::vector<SyncTree>& samples,
                                  const SyncOp& par, const SyncAuxOp& aux, std::size_t max_reported) {
  SyncChecker c(alphabet, par, aux, max_reported);
  return c.run(samples);
}

}  // namespace cspfx
