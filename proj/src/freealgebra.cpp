// Copyright 2026 The cspfx Authors
// SPDX-License-Identifier: Apache-2.0

#include "cspfx/freealgebra.hpp"

#include <map>

#include "cspfx/normal_form.hpp"
#include "cspfx/operators.hpp"
#include "node_ops.hpp"

namespace cspfx {

XProcess eta(AlphabetPtr alphabet, std::string value) { return unit(std::move(alphabet), std::move(value)); }

namespace {

struct Extender {
  const AlphabetPtr& alphabet;
  const ValueMap& g;
  std::map<std::string, NodePtr> images;

  NodePtr image(const std::string& v) {
    auto it = images.find(v);
    if (it != images.end()) return it->second;
    XProcess r = g(v);
    if (!(r.alphabet() == *alphabet)) throw Error("alphabet mismatch");
    return images[v] = r.root();
  }

  NodePtr run(const ProcessNode& n) {
    std::vector<std::pair<Action, NodePtr>> children;
    for (const auto& [a, c] : n.children) children.emplace_back(a, run(*c));
    std::vector<NodePtr> parts{make_node(std::move(children), {}, n.refusals)};
    for (const auto& v : n.values) parts.push_back(image(v));
    return detail::union_nodes(parts);
  }
};

}  // namespace

XProcess kleisli(const XProcess& p, const ValueMap& g) {
  Extender e{p.alphabet_ptr(), g, {}};
  return XProcess(p.alphabet_ptr(), e.run(*p.root()));
}

namespace {

// Shared shape of the two homomorphic folds.
template <typename GuardedCase>
XProcess fold(const NormalForm& nf, const AlphabetPtr& al, GuardedCase&& guarded) {
  std::vector<XProcess> parts;
  if (nf.shape == NormalForm::Shape::Box) {
    for (ActionSet l : nf.family.sets()) parts.push_back(guarded(nf, l, false));
  } else {
    parts.push_back(guarded(nf, nf.guards, true));
  }
  for (const auto& v : nf.values) parts.push_back(eta(al, v));
  return intern_choice(parts);
}

struct RelabelFold {
  const RelabelFn& f;
  const AlphabetPtr& al;
  std::map<const NormalForm*, XProcess> memo;

  XProcess run(const NormalForm& nf) {
    if (auto it = memo.find(&nf); it != memo.end()) return it->second;
    XProcess out = fold(nf, al, [&](const NormalForm& n, ActionSet guards, bool omega) {
      Branches bs;
      for (Action a : guards.members()) bs.emplace_back(f(a), run(n.branch(a)));
      return merged_choice(al, bs, omega);
    });
    memo.emplace(&nf, out);
    return out;
  }
};

struct ConcealFold {
  Action hidden;
  const AlphabetPtr& al;
  std::map<const NormalForm*, XProcess> memo;

  XProcess run(const NormalForm& nf) {
    if (auto it = memo.find(&nf); it != memo.end()) return it->second;
    XProcess out = fold(nf, al, [&](const NormalForm& n, ActionSet guards, bool omega) {
      Branches bs;
      for (Action a : guards.members())
        if (a != hidden) bs.emplace_back(a, run(n.branch(a)));
      if (!guards.contains(hidden))
        return omega ? det_choice_omega(al, bs) : det_choice(al, bs);
      return intern_choice(run(n.branch(hidden)), det_choice_omega(al, bs));
    });
    memo.emplace(&nf, out);
    return out;
  }
};

}  // namespace

XProcess hom_relabel(const RelabelFn& f, const XProcess& p) {
  auto nf = readback(p);
  RelabelFold r{f, p.alphabet_ptr(), {}};
  return r.run(*nf);
}

XProcess hom_conceal(Action a, const XProcess& p) {
  auto nf = readback(p);
  ConcealFold c{a, p.alphabet_ptr(), {}};
  return c.run(*nf);
}

namespace {

// One internal-choice summand of a normal form.
struct Summand {
  enum class Kind { Guarded, OmegaGuarded, Value } kind;
  std::vector<std::pair<Action, const NormalForm*>> branches;
  std::string value;

  bool guarded() const { return kind != Kind::Value; }
  bool omega() const { return kind == Kind::OmegaGuarded; }
};

std::vector<Summand> summands(const NormalForm& nf) {
  std::vector<Summand> out;
  auto with = [&](Summand::Kind k, ActionSet guards) {
    Summand s{k, {}, {}};
    for (Action a : guards.members()) s.branches.emplace_back(a, &nf.branch(a));
    out.push_back(std::move(s));
  };
  if (nf.shape == NormalForm::Shape::Box) {
    for (ActionSet l : nf.family.sets()) with(Summand::Kind::Guarded, l);
  } else {
    with(Summand::Kind::OmegaGuarded, nf.guards);
  }
  for (const auto& v : nf.values) out.push_back({Summand::Kind::Value, {}, v});
  return out;
}

using Key = std::pair<const NormalForm*, const NormalForm*>;

class EquationEvaluator {
 public:
  explicit EquationEvaluator(AlphabetPtr al) : al_(std::move(al)) {}

  const NormalForm& hold(const XProcess& p) {
    arena_.push_back(readback(p));
    return *arena_.back();
  }

  XProcess ext(const NormalForm& p, const NormalForm& q) {
    return memoized(ext_memo_, p, q, [&] {
      std::vector<XProcess> parts;
      for (const Summand& s : summands(p)) {
        if (s.guarded()) {
          for (const Summand& r : summands(q)) parts.push_back(ext_base(s, r));
        } else {
          // A value offered now: x ⊓ (Ω □ q).
          parts.push_back(eta(al_, s.value));
          Summand nothing{Summand::Kind::OmegaGuarded, {}, {}};
          for (const Summand& r : summands(q)) parts.push_back(ext_base(nothing, r));
        }
      }
      return intern_choice(parts);
    });
  }

  XProcess par(const NormalForm& p, const NormalForm& q) {
    return memoized(par_memo_, p, q, [&] {
      std::vector<XProcess> parts;
      for (const Summand& s : summands(p))
        for (const Summand& r : summands(q)) parts.push_back(par_base(s, r));
      return intern_choice(parts);
    });
  }

  XProcess left(const NormalForm& p, const NormalForm& q) {
    return memoized(left_memo_, p, q, [&] {
      std::vector<XProcess> parts;
      for (const Summand& s : summands(p)) {
        if (s.guarded()) {
          Branches bs;
          for (const auto& [a, f] : s.branches) bs.emplace_back(a, both_ways(*f, q));
          parts.push_back(s.omega() ? det_choice_omega(al_, bs) : det_choice(al_, bs));
        } else {
          for (const Summand& r : summands(q))
            parts.push_back(r.guarded() ? omega(al_) : eta(al_, pair_value(s.value, r.value)));
        }
      }
      return intern_choice(parts);
    });
  }

  XProcess right(const NormalForm& p, const NormalForm& q) {
    return memoized(right_memo_, p, q, [&] {
      std::vector<XProcess> parts;
      for (const Summand& r : summands(q)) {
        if (r.guarded()) {
          Branches bs;
          for (const auto& [b, g] : r.branches) bs.emplace_back(b, both_ways(p, *g));
          parts.push_back(r.omega() ? det_choice_omega(al_, bs) : det_choice(al_, bs));
        } else {
          for (const Summand& s : summands(p))
            parts.push_back(s.guarded() ? omega(al_) : eta(al_, pair_value(s.value, r.value)));
        }
      }
      return intern_choice(parts);
    });
  }

 private:
  template <typename Compute>
  XProcess memoized(std::map<Key, XProcess>& memo, const NormalForm& p, const NormalForm& q,
                    Compute&& compute) {
    Key k{&p, &q};
    if (auto it = memo.find(k); it != memo.end()) return it->second;
    XProcess out = compute();
    memo.emplace(k, out);
    return out;
  }

  XProcess value_of(const NormalForm* nf) {
    if (auto it = denoted_.find(nf); it != denoted_.end()) return it->second;
    XProcess out = nf_denote(*nf, al_);
    denoted_.emplace(nf, out);
    return out;
  }

  // (f |||< g) [] (f |||> g)
  XProcess both_ways(const NormalForm& f, const NormalForm& g) {
    const NormalForm& l = hold(left(f, g));
    const NormalForm& r = hold(right(f, g));
    return ext(l, r);
  }

  XProcess ext_base(const Summand& s, const Summand& r) {
    Branches bs;
    for (const auto& [a, f] : s.branches) bs.emplace_back(a, value_of(f));
    if (!r.guarded()) return intern_choice(det_choice_omega(al_, bs), eta(al_, r.value));
    for (const auto& [b, g] : r.branches) bs.emplace_back(b, value_of(g));
    return merged_choice(al_, bs, s.omega() || r.omega());
  }

  XProcess par_base(const Summand& s, const Summand& r) {
    if (!s.guarded()) return r.guarded() ? omega(al_) : eta(al_, pair_value(s.value, r.value));
    if (!r.guarded()) return omega(al_);
    Branches bs;
    for (const auto& [a, f] : s.branches)
      for (const auto& [b, g] : r.branches)
        if (a == b) bs.emplace_back(a, par(*f, *g));
    return s.omega() || r.omega() ? det_choice_omega(al_, bs) : det_choice(al_, bs);
  }

  AlphabetPtr al_;
  std::vector<NormalFormPtr> arena_;
  std::map<const NormalForm*, XProcess> denoted_;
  std::map<Key, XProcess> ext_memo_, par_memo_, left_memo_, right_memo_;
};

}  // namespace

XProcess ext_choice_eqsys(const XProcess& p, const XProcess& q) {
  detail::require_same_alphabet(p, q);
  EquationEvaluator ev(p.alphabet_ptr());
  return ev.ext(ev.hold(p), ev.hold(q));
}

XProcess par_eqsys(const XProcess& p, const XProcess& q) {
  detail::require_same_alphabet(p, q);
  EquationEvaluator ev(p.alphabet_ptr());
  return ev.par(ev.hold(p), ev.hold(q));
}

XProcess inter_eqsys_left(const XProcess& p, const XProcess& q) {
  detail::require_same_alphabet(p, q);
  EquationEvaluator ev(p.alphabet_ptr());
  return ev.left(ev.hold(p), ev.hold(q));
}

XProcess inter_eqsys_right(const XProcess& p, const XProcess& q) {
  detail::require_same_alphabet(p, q);
  EquationEvaluator ev(p.alphabet_ptr());
  return ev.right(ev.hold(p), ev.hold(q));
}

}  // namespace cspfx
