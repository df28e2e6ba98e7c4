// Copyright 2026 The cspfx Authors
// SPDX-License-Identifier: Apache-2.0

#include "cspfx/axioms.hpp"

#include <algorithm>
#include <map>

#include "cspfx/process.hpp"

namespace cspfx {

namespace {

using T = ProcTerm;

T var(const std::string& n) { return T::metavar(n); }
T var(const std::string& n, std::size_t i) { return T::metavar(n + std::to_string(i)); }

const T x = var("x"), y = var("y"), z = var("z"), w = var("w");

std::vector<std::vector<Action>> arrangements(const Alphabet& al, std::size_t min_len, std::size_t max_len) {
  std::vector<std::vector<Action>> out;
  std::vector<Action> cur;
  auto acts = al.actions();
  auto rec = [&](auto&& self) -> void {
    if (cur.size() >= min_len) out.push_back(cur);
    if (cur.size() == max_len) return;
    for (Action a : acts) {
      if (std::find(cur.begin(), cur.end(), a) != cur.end()) continue;
      cur.push_back(a);
      self(self);
      cur.pop_back();
    }
  };
  rec(rec);
  return out;
}

std::string actions_label(const Alphabet& al, const std::vector<Action>& as) {
  std::string s;
  for (Action a : as) s += (s.empty() ? "" : ",") + al.name(a);
  return s;
}

TermBranches zip(const std::vector<Action>& as, const std::string& var_name) {
  TermBranches bs;
  for (std::size_t i = 0; i < as.size(); ++i) bs.emplace_back(as[i], var(var_name, i + 1));
  return bs;
}

// Deterministic choice of possibly repeated guards: branches sharing a guard
// are joined by internal choice, in order of first appearance.
T merged(const TermBranches& bs, bool omega) {
  std::vector<Action> order;
  std::map<Action, T> joined;
  for (const auto& [a, t] : bs) {
    auto it = joined.find(a);
    if (it == joined.end()) {
      order.push_back(a);
      joined.emplace(a, t);
    } else {
      it->second = T::int_choice(it->second, t);
    }
  }
  TermBranches out;
  for (Action a : order) out.emplace_back(a, joined.at(a));
  return omega ? T::det_choice_omega(out) : T::det_choice(out);
}

T det(const TermBranches& bs, bool omega) { return omega ? T::det_choice_omega(bs) : T::det_choice(bs); }

struct Catalogue {
  Signature theory;
  const Alphabet& al;
  std::size_t arity;
  std::vector<AxiomSchema> out;

  void eq(const std::string& family, T lhs, T rhs, const std::string& label = "") {
    add(family, AxiomKind::Equation, std::move(lhs), std::move(rhs), label);
  }
  void le(const std::string& family, T lhs, T rhs, const std::string& label = "") {
    add(family, AxiomKind::Inequation, std::move(lhs), std::move(rhs), label);
  }
  void add(const std::string& family, AxiomKind kind, T lhs, T rhs, const std::string& label) {
    std::string name = label.empty() ? family : family + "[" + label + "]";
    out.push_back({family, name, theory, kind, std::move(lhs), std::move(rhs)});
  }

  void int_semilattice() {
    eq("int-assoc", T::int_choice(T::int_choice(x, y), z), T::int_choice(x, T::int_choice(y, z)));
    eq("int-comm", T::int_choice(x, y), T::int_choice(y, x));
    eq("int-idem", T::int_choice(x, x), x);
  }

  void box_axioms() {
    eq("ext-assoc", T::ext_choice(T::ext_choice(x, y), z), T::ext_choice(x, T::ext_choice(y, z)));
    eq("ext-comm", T::ext_choice(x, y), T::ext_choice(y, x));
    eq("ext-idem", T::ext_choice(x, x), x);
    eq("ext-unit", T::ext_choice(x, T::stop()), x);
    int_semilattice();
    eq("ext-over-int", T::ext_choice(x, T::int_choice(y, z)),
       T::int_choice(T::ext_choice(x, y), T::ext_choice(x, z)));
    eq("int-over-ext", T::int_choice(x, T::ext_choice(y, z)),
       T::ext_choice(T::int_choice(x, y), T::int_choice(x, z)));
    for (Action a : al.actions()) {
      eq("prefix-over-int", T::prefix(a, T::int_choice(x, y)),
         T::int_choice(T::prefix(a, x), T::prefix(a, y)), al.name(a));
    }
    for (Action a : al.actions()) {
      eq("prefix-ext-merge", T::ext_choice(T::prefix(a, x), T::prefix(a, y)),
         T::int_choice(T::prefix(a, x), T::prefix(a, y)), al.name(a));
    }
  }

  void det_comm(const std::string& family, bool omega) {
    for (const auto& as : arrangements(al, 2, arity)) {
      if (!std::is_sorted(as.begin(), as.end())) continue;
      TermBranches bs = zip(as, "x");
      std::vector<std::size_t> perm(as.size());
      for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
      while (std::next_permutation(perm.begin(), perm.end())) {
        TermBranches permuted;
        std::string label = actions_label(al, as) + ";";
        for (std::size_t i : perm) {
          permuted.push_back(bs[i]);
          label += al.name(as[i]);
        }
        eq(family, det(bs, omega), det(permuted, omega), label);
      }
    }
  }

  void det_over_int(const std::string& family, bool omega) {
    for (const auto& as : arrangements(al, 1, arity)) {
      TermBranches left = zip(as, "x"), right = zip(as, "x"), both = zip(as, "x");
      right[0].second = var("y", 1);
      both[0].second = T::int_choice(var("x", 1), var("y", 1));
      eq(family, det(both, omega), T::int_choice(det(left, omega), det(right, omega)), actions_label(al, as));
    }
  }

  // (□ a_i x_i) ⊓ ((b_1 → y_1) □ □_{j≥2} b_j y_j) ⊑ (b_1 → y_1) □ □ a_i x_i,
  // either choice optionally carrying an Ω summand.
  void final_axiom(const std::string& family, bool left_omega, bool right_omega) {
    auto as_all = arrangements(al, 0, arity);
    auto bs_all = arrangements(al, 1, arity);
    for (const auto& as : as_all)
      for (const auto& bs : bs_all) {
        TermBranches xs = zip(as, "x"), ys = zip(bs, "y");
        TermBranches rhs{ys.front()};
        rhs.insert(rhs.end(), xs.begin(), xs.end());
        le(family, T::int_choice(det(xs, left_omega), det(ys, right_omega)), merged(rhs, left_omega),
           actions_label(al, as) + ";" + actions_label(al, bs));
      }
  }
};

}  // namespace

std::vector<std::string> axiom_families(Signature theory) {
  switch (theory) {
    case Signature::CSPBox:
      return {"ext-assoc", "ext-comm", "ext-idem", "ext-unit", "int-assoc", "int-comm",
              "int-idem", "ext-over-int", "int-over-ext", "prefix-over-int", "prefix-ext-merge"};
    case Signature::CSPBoxOmega: {
      auto f = axiom_families(Signature::CSPBox);
      f.push_back("omega-unit");
      return f;
    }
    case Signature::CSPDet:
      return {"int-assoc", "int-comm", "int-idem", "det-comm", "det-over-int", "final"};
    case Signature::CSPDetOmega:
      return {"int-assoc",     "int-comm",          "int-idem",          "omega-unit",
              "det-comm",      "detomega-comm",     "det-over-int",      "detomega-over-int",
              "final-omega-omega", "final-omega-plain", "final-plain-omega", "final"};
    case Signature::Full:
      break;
  }
  throw Error("the full signature has no axiom list");
}

std::vector<AxiomSchema> axioms(Signature theory, const Alphabet& alphabet, std::size_t max_arity) {
  Catalogue c{theory, alphabet, max_arity, {}};
  switch (theory) {
    case Signature::CSPBox:
      c.box_axioms();
      break;
    case Signature::CSPBoxOmega:
      c.box_axioms();
      c.eq("omega-unit", T::int_choice(x, T::omega()), x);
      break;
    case Signature::CSPDet:
      c.int_semilattice();
      c.det_comm("det-comm", false);
      c.det_over_int("det-over-int", false);
      c.final_axiom("final", false, false);
      break;
    case Signature::CSPDetOmega:
      c.int_semilattice();
      c.eq("omega-unit", T::int_choice(x, T::det_choice_omega({})), x);
      c.det_comm("det-comm", false);
      c.det_comm("detomega-comm", true);
      c.det_over_int("det-over-int", false);
      c.det_over_int("detomega-over-int", true);
      c.final_axiom("final-omega-omega", true, true);
      c.final_axiom("final-omega-plain", true, false);
      c.final_axiom("final-plain-omega", false, true);
      c.final_axiom("final", false, false);
      break;
    case Signature::Full:
      throw Error("the full signature has no axiom list");
  }
  return c.out;
}

std::vector<AxiomSchema> derived_equations(Signature theory, const Alphabet& alphabet, std::size_t max_arity) {
  Catalogue c{theory, alphabet, max_arity, {}};
  auto box_derived = [&] {
    c.le("int-ext-below", T::int_choice(x, T::ext_choice(y, z)), T::ext_choice(x, y));
    for (Action a : alphabet.actions()) {
      T zw = T::int_choice(z, w);
      c.eq("shared-guard",
           T::int_choice(T::ext_choice(x, T::prefix(a, z)), T::ext_choice(y, T::prefix(a, w))),
           T::int_choice(T::ext_choice(x, T::prefix(a, zw)), T::ext_choice(y, T::prefix(a, zw))),
           alphabet.name(a));
    }
  };
  switch (theory) {
    case Signature::CSPBox:
      box_derived();
      break;
    case Signature::CSPBoxOmega:
      box_derived();
      c.eq("omega-absorb", T::int_choice(x, T::ext_choice(T::omega(), y)),
           T::int_choice(x, T::ext_choice(x, y)));
      c.eq("omega-join", T::int_choice(T::ext_choice(T::omega(), x), T::ext_choice(T::omega(), y)),
           T::ext_choice(T::ext_choice(T::omega(), x), T::ext_choice(T::omega(), y)));
      break;
    case Signature::CSPDetOmega:
      for (const auto& as : arrangements(alphabet, 0, max_arity))
        for (const auto& bs : arrangements(alphabet, 0, max_arity)) {
          TermBranches xs = zip(as, "x"), ys = zip(bs, "y"), joined = xs;
          joined.insert(joined.end(), ys.begin(), ys.end());
          std::string label = actions_label(alphabet, as) + ";" + actions_label(alphabet, bs);
          c.eq("det-omega-absorb", T::int_choice(det(xs, false), det(ys, true)),
               T::int_choice(det(xs, false), merged(joined, false)), label);
          c.eq("omega-omega-join", T::int_choice(det(xs, true), det(ys, true)), merged(joined, true), label);
        }
      break;
    default:
      break;
  }
  return c.out;
}

bool check_axiom(const AxiomSchema& ax, const AlphabetPtr& alphabet, const ProcessEnv& assignment) {
  XProcess lhs = denote(ax.lhs, alphabet, {}, assignment);
  XProcess rhs = denote(ax.rhs, alphabet, {}, assignment);
  return ax.kind == AxiomKind::Equation ? equal(lhs, rhs) : refines(lhs, rhs);
}

std::string format_axiom(const AxiomSchema& ax, const Alphabet& alphabet) {
  return print_process(ax.lhs, alphabet) + (ax.kind == AxiomKind::Equation ? "  =  " : "  <=  ") +
         print_process(ax.rhs, alphabet);
}

}  // namespace cspfx
