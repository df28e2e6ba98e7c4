// Copyright 2026 The cspfx Authors
// SPDX-License-Identifier: Apache-2.0

#include "cspfx/generators.hpp"

#include <algorithm>
#include <optional>

namespace cspfx {

namespace {

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

std::size_t below(Rng& rng, std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }

ActionSet random_subset(Rng& rng, ActionSet of) {
  ActionSet s;
  for (Action a : of.members())
    if (coin(rng, 0.5)) s.insert(a);
  return s;
}

NodePtr random_node(Rng& rng, const Alphabet& al, const ProcessOptions& opts, std::size_t depth, double branch) {
  std::vector<std::pair<Action, NodePtr>> children;
  if (depth < opts.max_depth)
    for (Action a : al.actions())
      if (coin(rng, branch)) children.emplace_back(a, random_node(rng, al, opts, depth + 1, branch / 2));
  std::vector<std::string> values;
  for (const auto& v : opts.values)
    if (coin(rng, opts.value_probability)) values.push_back(v);
  std::vector<ActionSet> refusals;
  if (coin(rng, opts.failure_probability)) {
    ActionSet fut;
    for (const auto& [a, c] : children) fut.insert(a);
    std::size_t n = 1 + below(rng, std::max<std::size_t>(opts.max_refusals, 1));
    for (std::size_t i = 0; i < n; ++i) refusals.push_back(random_subset(rng, fut));
  }
  return make_node(std::move(children), std::move(values), std::move(refusals));
}

}  // namespace

XProcess random_process(Rng& rng, const AlphabetPtr& alphabet, const ProcessOptions& opts) {
  return XProcess(alphabet, random_node(rng, *alphabet, opts, 0, opts.branch_probability));
}

XProcess random_tick_process(Rng& rng, const AlphabetPtr& alphabet, std::size_t max_depth) {
  ProcessOptions opts;
  opts.max_depth = max_depth;
  opts.values = {kTick};
  return random_process(rng, alphabet, opts);
}

RoscoeSF random_roscoe(Rng& rng, const AlphabetPtr& alphabet, std::size_t max_depth) {
  const Action tick = tick_event(*alphabet);
  std::set<Trace> traces;
  std::set<std::pair<Trace, ActionSet>> failures;
  std::vector<Trace> frontier{{}};
  double branch = 0.5;
  for (std::size_t d = 0; d <= max_depth; ++d, branch /= 2) {
    std::vector<Trace> next;
    for (const Trace& t : frontier) {
      traces.insert(t);
      if (coin(rng, 0.3)) {
        Trace done = t;
        done.push_back(tick);
        traces.insert(done);
      }
      if (coin(rng, 0.75)) failures.emplace(t, random_subset(rng, ActionSet::first(alphabet->size() + 1)));
      if (d == max_depth) continue;
      for (Action a : alphabet->actions())
        if (coin(rng, branch)) {
          Trace u = t;
          u.push_back(a);
          next.push_back(u);
        }
    }
    frontier = std::move(next);
  }
  return roscoe::close(alphabet, std::move(traces), std::move(failures));
}

RelabelFn random_relabelling(Rng& rng, const Alphabet& alphabet) {
  std::vector<std::pair<Action, Action>> mapping;
  auto acts = alphabet.actions();
  for (Action a : acts)
    if (coin(rng, 0.6)) mapping.emplace_back(a, acts[below(rng, acts.size())]);
  return RelabelFn(std::move(mapping));
}

namespace {

struct TermGen {
  Rng& rng;
  const Alphabet& al;
  const TermOptions& opts;

  bool allowed(TermKind k) const {
    using K = TermKind;
    switch (opts.signature) {
      case Signature::CSPBox:
        return k == K::Stop || k == K::Prefix || k == K::IntChoice || k == K::ExtChoice;
      case Signature::CSPBoxOmega:
        return k == K::Stop || k == K::Omega || k == K::Prefix || k == K::IntChoice || k == K::ExtChoice;
      case Signature::CSPDet:
        return k == K::IntChoice || k == K::DetChoice;
      case Signature::CSPDetOmega:
        return k == K::IntChoice || k == K::DetChoice || k == K::DetChoiceOmega;
      case Signature::Full:
        if (k == K::MetaVar || k == K::Value) return false;
        if (k == K::Seq) return opts.tick_only;
        return true;
    }
    return false;
  }

  Action action() { return Action{static_cast<std::uint8_t>(below(rng, al.size()))}; }

  TermBranches branches(std::size_t budget) {
    std::vector<Action> guards;
    for (Action a : al.actions())
      if (coin(rng, 0.5)) guards.push_back(a);
    std::shuffle(guards.begin(), guards.end(), rng);
    TermBranches bs;
    std::size_t share = guards.empty() ? 0 : std::max<std::size_t>(1, (budget - 1) / guards.size());
    for (Action a : guards) bs.emplace_back(a, term(share));
    return bs;
  }

  ProcTerm leaf() {
    using K = TermKind;
    std::vector<ProcTerm> options;
    if (allowed(K::Stop)) options.push_back(ProcTerm::stop());
    if (allowed(K::Omega)) options.push_back(ProcTerm::omega());
    if (allowed(K::DetChoice)) options.push_back(ProcTerm::det_choice({}));
    if (allowed(K::DetChoiceOmega)) options.push_back(ProcTerm::det_choice_omega({}));
    if (opts.signature == Signature::Full && opts.tick_only) options.push_back(ProcTerm::skip());
    if (!opts.tick_only)
      for (const auto& v : opts.values) options.push_back(ProcTerm::value(v));
    return options[below(rng, options.size())];
  }

  ProcTerm term(std::size_t budget) {
    using K = TermKind;
    if (budget <= 1) return leaf();
    static constexpr K kinds[] = {K::Prefix,     K::IntChoice,  K::ExtChoice,   K::DetChoice,
                                  K::DetChoiceOmega, K::Relabel, K::Conceal,   K::Par,
                                  K::Interleave, K::InterleaveL, K::InterleaveR, K::Seq};
    std::vector<K> options;
    for (K k : kinds)
      if (allowed(k)) options.push_back(k);
    K k = options[below(rng, options.size())];
    std::size_t rest = budget - 1;
    std::size_t l = 1 + below(rng, std::max<std::size_t>(rest - 1, 1));
    switch (k) {
      case K::Prefix: return ProcTerm::prefix(action(), term(rest));
      case K::DetChoice: return ProcTerm::det_choice(branches(budget));
      case K::DetChoiceOmega: return ProcTerm::det_choice_omega(branches(budget));
      case K::Relabel: return ProcTerm::relabel(random_relabelling(rng, al), term(rest));
      case K::Conceal: return ProcTerm::conceal(action(), term(rest));
      default: return ProcTerm::binary(k, term(l), term(rest > l ? rest - l : 1));
    }
  }
};

// All terms of exactly `size` nodes, indexed by size.
void grow(const Alphabet& al, std::vector<std::vector<ProcTerm>>& by_size, std::size_t size) {
  std::vector<ProcTerm> out;
  if (size == 1) {
    out = {ProcTerm::stop(), ProcTerm::omega()};
  } else {
    for (Action a : al.actions())
      for (const ProcTerm& t : by_size[size - 1]) out.push_back(ProcTerm::prefix(a, t));
    for (std::size_t l = 1; l + 1 < size; ++l)
      for (const ProcTerm& x : by_size[l])
        for (const ProcTerm& y : by_size[size - 1 - l]) {
          out.push_back(ProcTerm::int_choice(x, y));
          out.push_back(ProcTerm::ext_choice(x, y));
        }
  }
  by_size.push_back(std::move(out));
}

}  // namespace

ProcTerm random_term(Rng& rng, const Alphabet& alphabet, const TermOptions& opts) {
  TermGen g{rng, alphabet, opts};
  return g.term(1 + below(rng, std::max<std::size_t>(opts.max_size, 1)));
}

std::vector<ProcTerm> enumerate_box_omega_terms(const Alphabet& alphabet, std::size_t max_size) {
  std::vector<std::vector<ProcTerm>> by_size{{}};
  for (std::size_t n = 1; n <= max_size; ++n) grow(alphabet, by_size, n);
  std::vector<ProcTerm> all;
  for (const auto& ts : by_size) all.insert(all.end(), ts.begin(), ts.end());
  return all;
}

namespace {

LamType random_small_type(Rng& rng) { return coin(rng, 0.5) ? LamType::unit() : LamType::nat(); }

struct LamGen {
  Rng& rng;
  const Alphabet& al;
  TypeContext ctx;
  unsigned fresh = 0;

  Action action() { return Action{static_cast<std::uint8_t>(below(rng, al.size()))}; }

  std::string fresh_name() { return "v" + std::to_string(fresh++); }

  std::optional<LamTerm> variable(const LamType& type) {
    std::vector<std::string> names;
    for (auto it = ctx.rbegin(); it != ctx.rend(); ++it) {
      bool shadowed = std::any_of(ctx.rbegin(), it, [&](const auto& e) { return e.first == it->first; });
      if (!shadowed && it->second == type) names.push_back(it->first);
    }
    if (names.empty()) return std::nullopt;
    return LamTerm::var(names[below(rng, names.size())]);
  }

  LamTerm leaf(const LamType& type) {
    if (coin(rng, 0.5))
      if (auto v = variable(type)) return *v;
    switch (type.kind()) {
      case LamType::Kind::Unit: return LamTerm::star();
      case LamType::Kind::Base: return LamTerm::numeral(static_cast<unsigned>(below(rng, 3)));
      case LamType::Kind::Prod: return LamTerm::pair(leaf(type.left()), leaf(type.right()));
      case LamType::Kind::Arrow: {
        std::string x = fresh_name();
        ctx.emplace_back(x, type.left());
        LamTerm body = leaf(type.right());
        ctx.pop_back();
        return LamTerm::lam(x, type.left(), body);
      }
      case LamType::Kind::Empty: break;
    }
    throw Error("no closed terms of the empty type");
  }

  LamTerm bound(const LamType& param, const LamType& type, std::size_t body_budget, const LamTerm& arg) {
    std::string x = fresh_name();
    ctx.emplace_back(x, param);
    LamTerm body = term(type, body_budget);
    ctx.pop_back();
    return LamTerm::app(LamTerm::lam(x, param, body), arg);
  }

  LamTerm term(const LamType& type, std::size_t budget) {
    if (budget <= 1 || type.kind() == LamType::Kind::Arrow) return leaf(type);
    std::size_t rest = budget - 1;
    std::size_t l = 1 + below(rng, std::max<std::size_t>(rest - 1, 1));
    std::size_t r = rest > l ? rest - l : 1;
    switch (below(rng, 12)) {
      case 0: return LamTerm::int_choice(term(type, l), term(type, r));
      case 1: return LamTerm::ext_choice(term(type, l), term(type, r));
      case 2:
      case 3: return LamTerm::prefix(action(), term(type, rest));
      case 4: return coin(rng, 0.5) ? LamTerm::omega(type) : leaf(type);
      case 5: return LamTerm::conceal(action(), term(type, rest));
      case 6: return LamTerm::relabel(random_relabelling(rng, al), term(type, rest));
      case 7: {
        LamType param = random_small_type(rng);
        return bound(param, type, l, term(param, r));
      }
      case 8: {
        LamType other = random_small_type(rng);
        bool first = coin(rng, 0.5);
        LamType whole = first ? LamType::prod(type, other) : LamType::prod(other, type);
        LamTerm inner = term(whole, rest);
        return first ? LamTerm::fst(inner) : LamTerm::snd(inner);
      }
      case 9:
        if (type.kind() == LamType::Kind::Base) return LamTerm::fn("succ", term(type, rest));
        return term(type, budget);
      default:
        if (type.kind() != LamType::Kind::Prod) return term(type, budget);
        switch (below(rng, 3)) {
          case 0: return LamTerm::par(term(type.left(), l), term(type.right(), r));
          case 1: return LamTerm::interleave(term(type.left(), l), term(type.right(), r));
          default: return LamTerm::pair(term(type.left(), l), term(type.right(), r));
        }
    }
  }
};

}  // namespace

LamTerm random_lam_term(Rng& rng, const Alphabet& alphabet, const LamType& type, const TypeContext& ctx,
                        std::size_t budget) {
  LamGen g{rng, alphabet, ctx};
  return g.term(type, budget);
}

LamTerm random_lam_value(Rng& rng, const LamType& type) {
  static const Alphabet none({});
  LamGen g{rng, none, {}};
  return g.leaf(type);
}

RandomContext random_context(Rng& rng, const Alphabet& alphabet, const LamType& hole, std::size_t max_frames) {
  RandomContext out{{}, hole};
  std::size_t n = 1 + below(rng, std::max<std::size_t>(max_frames, 1));
  auto closed = [&](const LamType& t) { return random_lam_term(rng, alphabet, t, {}, 1 + below(rng, 4)); };
  for (std::size_t i = 0; i < n; ++i) {
    LamType here = out.result;
    std::vector<Frame> options;
    LamType other = random_small_type(rng);
    options.push_back({Frame::Kind::PairLeft, closed(other)});
    options.push_back({Frame::Kind::PairRight, random_lam_value(rng, other)});
    // (\x. M) [-], the body may use x and have effects of its own.
    LamType to = random_small_type(rng);
    LamTerm body = random_lam_term(rng, alphabet, to, {{"h", here}}, 1 + below(rng, 4));
    options.push_back({Frame::Kind::AppRight, LamTerm::lam("h", here, body)});
    if (here.kind() == LamType::Kind::Base) options.push_back({Frame::Kind::Fn, std::nullopt, "succ"});
    if (here.kind() == LamType::Kind::Unit) options.push_back({Frame::Kind::Fn, std::nullopt, "zero"});
    if (here.kind() == LamType::Kind::Prod) {
      options.push_back({Frame::Kind::Fst});
      options.push_back({Frame::Kind::Snd});
    }
    if (here.kind() == LamType::Kind::Arrow) options.push_back({Frame::Kind::AppLeft, closed(here.left())});
    Frame f = options[below(rng, options.size())];
    LamType next = here;
    switch (f.kind) {
      case Frame::Kind::PairLeft: next = LamType::prod(here, other); break;
      case Frame::Kind::PairRight: next = LamType::prod(other, here); break;
      case Frame::Kind::AppRight: next = to; break;
      case Frame::Kind::Fn: next = LamType::nat(); break;
      case Frame::Kind::Fst: next = here.left(); break;
      case Frame::Kind::Snd: next = here.right(); break;
      case Frame::Kind::AppLeft: next = here.right(); break;
      case Frame::Kind::In: break;
    }
    out.context.insert(out.context.begin(), std::move(f));
    out.result = next;
  }
  return out;
}

}  // namespace cspfx
