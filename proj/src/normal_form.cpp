// Copyright 2026 The cspfx Authors
// SPDX-License-Identifier: Apache-2.0

#include "cspfx/normal_form.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace cspfx {

ActionSet SaturatedFamily::universe() const {
  ActionSet u;
  for (ActionSet s : sets_) u = u | s;
  return u;
}

bool SaturatedFamily::contains(ActionSet s) const {
  return std::binary_search(sets_.begin(), sets_.end(), s);
}

SaturatedFamily saturate(const std::vector<ActionSet>& sets, ActionSet universe) {
  SaturatedFamily fam;
  for (ActionSet low : sets) {
    if (!low.subset_of(universe)) throw Error("set outside the saturation universe");
    std::uint64_t room = (universe - low).bits();
    std::uint64_t s = 0;
    do {
      fam.sets_.push_back(low | ActionSet(s));
      s = (s - room) & room;
    } while (s != 0);
  }
  std::sort(fam.sets_.begin(), fam.sets_.end());
  fam.sets_.erase(std::unique(fam.sets_.begin(), fam.sets_.end()), fam.sets_.end());
  return fam;
}

SaturatedFamily saturate(const std::vector<ActionSet>& sets) {
  ActionSet u;
  for (ActionSet s : sets) u = u | s;
  return saturate(sets, u);
}

bool is_saturated(const std::vector<ActionSet>& sets) {
  std::vector<ActionSet> sorted = sets;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  return saturate(sorted).sets() == sorted;
}

const NormalForm& NormalForm::branch(Action a) const {
  for (const auto& [b, nf] : branches)
    if (b == a) return *nf;
  throw Error("normal form has no such branch");
}

bool operator==(const NormalForm& x, const NormalForm& y) {
  if (&x == &y) return true;
  if (x.shape != y.shape || x.guards != y.guards || x.values != y.values || !(x.family == y.family))
    return false;
  if (x.branches.size() != y.branches.size()) return false;
  for (std::size_t i = 0; i < x.branches.size(); ++i) {
    if (x.branches[i].first != y.branches[i].first) return false;
    if (!(*x.branches[i].second == *y.branches[i].second)) return false;
  }
  return true;
}

NormalFormPtr readback(const ProcessNode& node) {
  auto nf = std::make_shared<NormalForm>();
  ActionSet f = node.fut();
  for (const auto& [a, c] : node.children) nf->branches.emplace_back(a, readback(*c));
  nf->values = node.values;
  nf->guards = f;
  if (node.has_failures()) {
    nf->shape = NormalForm::Shape::Box;
    std::vector<ActionSet> minimal_guards;
    for (ActionSet m : node.refusals) minimal_guards.push_back(f - m);
    nf->family = saturate(minimal_guards, f);
  }
  return nf;
}

NormalFormPtr readback(const XProcess& p) { return readback(*p.root()); }

namespace {

ProcTerm value_term(const std::string& v) {
  return v == kTick ? ProcTerm::skip() : ProcTerm::value(v);
}

}  // namespace

ProcTerm nf_to_term(const NormalForm& nf, const Alphabet& alphabet) {
  std::map<Action, ProcTerm> sub;
  for (const auto& [a, b] : nf.branches) sub.emplace(a, nf_to_term(*b, alphabet));
  auto guarded = [&](ActionSet guards) {
    TermBranches bs;
    for (Action a : by_name(alphabet, guards)) bs.emplace_back(a, sub.at(a));
    return bs;
  };

  std::vector<ProcTerm> summands;
  if (nf.shape == NormalForm::Shape::Box) {
    for (ActionSet l : nf.family.sets())
      summands.push_back(l.empty() ? ProcTerm::stop() : ProcTerm::det_choice(guarded(l)));
  } else if (!nf.guards.empty()) {
    summands.push_back(ProcTerm::det_choice_omega(guarded(nf.guards)));
  } else if (nf.values.empty()) {
    summands.push_back(ProcTerm::omega());
  }
  for (const auto& v : nf.values) summands.push_back(value_term(v));

  std::vector<std::pair<std::string, ProcTerm>> keyed;
  for (const auto& s : summands) keyed.emplace_back(print_process(s, alphabet), s);
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  keyed.erase(std::unique(keyed.begin(), keyed.end(),
                          [](const auto& x, const auto& y) { return x.first == y.first; }),
              keyed.end());
  ProcTerm out = keyed.front().second;
  for (std::size_t i = 1; i < keyed.size(); ++i) out = ProcTerm::int_choice(out, keyed[i].second);
  return out;
}

XProcess nf_denote(const NormalForm& nf, const AlphabetPtr& alphabet) {
  std::map<Action, XProcess> sub;
  for (const auto& [a, b] : nf.branches) sub.emplace(a, nf_denote(*b, alphabet));
  auto guarded = [&](ActionSet guards) {
    Branches bs;
    for (Action a : guards.members()) bs.emplace_back(a, sub.at(a));
    return bs;
  };
  std::vector<XProcess> summands;
  if (nf.shape == NormalForm::Shape::Box) {
    for (ActionSet l : nf.family.sets()) summands.push_back(det_choice(alphabet, guarded(l)));
  } else {
    summands.push_back(det_choice_omega(alphabet, guarded(nf.guards)));
  }
  for (const auto& v : nf.values) summands.push_back(unit(alphabet, v));
  return intern_choice(summands);
}

namespace {

using NF = std::shared_ptr<NormalForm>;

NF leaf(NormalForm::Shape shape) {
  auto nf = std::make_shared<NormalForm>();
  nf->shape = shape;
  if (shape == NormalForm::Shape::Box) nf->family = saturate({ActionSet{}}, ActionSet{});
  return nf;
}

NormalFormPtr syn_int(const NormalForm& x, const NormalForm& y);

// Branches of both sides; a guard offered by both continues as the internal
// choice of the two continuations (a -> p [] a -> q = a -> (p |~| q)).
std::vector<std::pair<Action, NormalFormPtr>> merge_branches(const NormalForm& x, const NormalForm& y) {
  std::map<Action, NormalFormPtr> out(x.branches.begin(), x.branches.end());
  for (const auto& [a, b] : y.branches) {
    auto [it, fresh] = out.emplace(a, b);
    if (!fresh) it->second = syn_int(*it->second, *b);
  }
  return {out.begin(), out.end()};
}

std::vector<std::string> merge_values(const NormalForm& x, const NormalForm& y) {
  std::vector<std::string> vs = x.values;
  vs.insert(vs.end(), y.values.begin(), y.values.end());
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

NormalFormPtr combine(const NormalForm& x, const NormalForm& y, bool box, std::vector<ActionSet> minimal) {
  auto nf = std::make_shared<NormalForm>();
  nf->guards = x.guards | y.guards;
  nf->branches = merge_branches(x, y);
  nf->values = merge_values(x, y);
  nf->shape = box ? NormalForm::Shape::Box : NormalForm::Shape::Omega;
  if (box) nf->family = saturate(minimal, nf->guards);
  return nf;
}

const std::vector<ActionSet>& sets_of(const NormalForm& x) { return x.family.sets(); }

NormalFormPtr syn_int(const NormalForm& x, const NormalForm& y) {
  using S = NormalForm::Shape;
  // An omega summand contributes no stable state at the start.
  std::vector<ActionSet> minimal;
  if (x.shape == S::Box) minimal = sets_of(x);
  if (y.shape == S::Box) minimal.insert(minimal.end(), sets_of(y).begin(), sets_of(y).end());
  return combine(x, y, x.shape == S::Box || y.shape == S::Box, std::move(minimal));
}

NormalFormPtr syn_ext(const NormalForm& x, const NormalForm& y) {
  using S = NormalForm::Shape;
  bool box = x.shape == S::Box && y.shape == S::Box;
  std::vector<ActionSet> minimal;
  if (box)
    for (ActionSet l : sets_of(x))
      for (ActionSet m : sets_of(y)) minimal.push_back(l | m);
  return combine(x, y, box, std::move(minimal));
}

NormalFormPtr syn_det(const TermBranches& bs, bool with_omega) {
  NF nf = leaf(with_omega ? NormalForm::Shape::Omega : NormalForm::Shape::Box);
  for (const auto& [a, t] : bs) {
    nf->guards.insert(a);
    nf->branches.emplace_back(a, normalize_syntactic(t));
  }
  std::sort(nf->branches.begin(), nf->branches.end(), [](const auto& p, const auto& q) { return p.first < q.first; });
  if (!with_omega) nf->family = saturate({nf->guards}, nf->guards);
  return nf;
}

}  // namespace

NormalFormPtr normalize_syntactic(const ProcTerm& t) {
  switch (t.kind()) {
    case TermKind::Stop: return leaf(NormalForm::Shape::Box);
    case TermKind::Omega: return leaf(NormalForm::Shape::Omega);
    case TermKind::Skip:
    case TermKind::Value: {
      NF nf = leaf(NormalForm::Shape::Omega);
      nf->values = {t.kind() == TermKind::Skip ? kTick : t.name()};
      return nf;
    }
    case TermKind::Prefix: return syn_det({{t.action(), t.body()}}, false);
    case TermKind::DetChoice: return syn_det(t.branches(), false);
    case TermKind::DetChoiceOmega: return syn_det(t.branches(), true);
    case TermKind::IntChoice: return syn_int(*normalize_syntactic(t.left()), *normalize_syntactic(t.right()));
    case TermKind::ExtChoice: return syn_ext(*normalize_syntactic(t.left()), *normalize_syntactic(t.right()));
    default: throw Error("no syntactic normal form for this operator");
  }
}

NormalFormPtr normalize(const ProcTerm& t, const AlphabetPtr& alphabet, const ValueEnv& env) {
  return readback(denote(t, alphabet, env));
}

NormalFormPtr normalize(const ProcTerm& t, const AlphabetPtr& alphabet) {
  return readback(denote(t, alphabet));
}

bool equivalent(const ProcTerm& t, const ProcTerm& u, const AlphabetPtr& alphabet) {
  XProcess p = denote(t, alphabet);
  XProcess q = denote(u, alphabet);
  bool same = equal(p, q);
  assert(same == (*readback(p) == *readback(q)));
  return same;
}

bool refine_terms(const ProcTerm& t, const ProcTerm& u, const AlphabetPtr& alphabet) {
  return refines(denote(t, alphabet), denote(u, alphabet));
}

}  // namespace cspfx
