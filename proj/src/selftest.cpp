// Copyright 2026 The cspfx Authors
// SPDX-License-Identifier: Apache-2.0

#include "cspfx/selftest.hpp"

#include <algorithm>
#include <array>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "cspfx/axioms.hpp"
#include "cspfx/denote.hpp"
#include "cspfx/freealgebra.hpp"
#include "cspfx/generators.hpp"
#include "cspfx/json.hpp"
#include "cspfx/lambdac.hpp"
#include "cspfx/normal_form.hpp"
#include "cspfx/operators.hpp"
#include "cspfx/roscoe.hpp"
#include "cspfx/synctrees.hpp"

namespace cspfx {

namespace {

// Counts instances and keeps the first counterexample.
class Tally {
 public:
  explicit Tally(std::string name) : name_(std::move(name)) {}

  void pass() { ++checked_; }
  void check(bool ok, const std::function<std::string()>& why) {
    ++checked_;
    if (ok) return;
    if (failures_++ == 0) first_ = why();
  }
  void note(std::string s) { note_ = std::move(s); }

  CheckOutcome outcome() const {
    CheckOutcome o{name_, failures_ == 0, checked_, ""};
    std::ostringstream d;
    d << checked_ << " checked, " << failures_ << " failed";
    if (!note_.empty()) d << "; " << note_;
    if (failures_ != 0) d << "; first: " << first_;
    o.detail = d.str();
    return o;
  }

 private:
  std::string name_;
  std::size_t checked_ = 0, failures_ = 0;
  std::string first_, note_;
};

AlphabetPtr letters(std::size_t n) {
  static const char* const names[] = {"a", "b", "c", "d"};
  return make_alphabet(std::vector<std::string>(names, names + n));
}

std::size_t below(Rng& rng, std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }

std::string show(const XProcess& p) { return describe(p); }

// ---- axioms ----

std::vector<CheckOutcome> axioms_suite(const SelftestOptions& o) {
  std::vector<CheckOutcome> out;
  Rng rng(o.seed);
  for (Signature theory : {Signature::CSPBox, Signature::CSPBoxOmega, Signature::CSPDet, Signature::CSPDetOmega}) {
    if (!o.theory.empty() && parse_signature(o.theory) != theory) continue;
    Tally t(std::string("axioms ") + std::string(signature_name(theory)));
    bool with_omega = theory == Signature::CSPBoxOmega || theory == Signature::CSPDetOmega;
    ProcessOptions popts;
    if (with_omega) {
      popts.values = {"x", "y"};
    } else {
      popts.failure_probability = 1.0;  // the models without divergence are stable everywhere
    }
    std::set<std::string> families_seen;
    std::size_t derived_families = 0;
    for (std::size_t n = 1; n <= 3; ++n) {
      AlphabetPtr al = letters(n);
      std::map<std::string, std::vector<AxiomSchema>> by_family;
      for (auto& ax : axioms(theory, *al)) by_family[ax.family].push_back(ax);
      std::set<std::string> derived;
      for (auto& ax : derived_equations(theory, *al)) {
        derived.insert(ax.family);
        by_family[ax.family].push_back(ax);
      }
      derived_families = std::max(derived_families, derived.size());
      for (const auto& [family, instances] : by_family) {
        if (!derived.count(family)) families_seen.insert(family);
        for (std::size_t trial = 0; trial < o.trials; ++trial) {
          const AxiomSchema& ax = instances[trial % instances.size()];
          ProcessEnv env;
          for (const auto& v : metavariables(ax.lhs)) env.emplace(v, random_process(rng, al, popts));
          for (const auto& v : metavariables(ax.rhs)) env.emplace(v, random_process(rng, al, popts));
          t.check(check_axiom(ax, al, env), [&] {
            std::string s = format_axiom(ax, *al) + " with";
            for (const auto& [v, p] : env) s += " " + v + " = " + show(p);
            return s;
          });
        }
      }
    }
    std::size_t expected = axiom_families(theory).size();
    t.check(families_seen.size() == expected, [&] {
      return std::to_string(families_seen.size()) + " families instantiated, expected " + std::to_string(expected);
    });
    t.note(std::to_string(families_seen.size()) + " axiom families and " + std::to_string(derived_families) +
           " derived ones, " + std::to_string(o.trials) + " assignments each for |A| = 1, 2, 3");
    out.push_back(t.outcome());
  }
  return out;
}

// ---- normal forms ----

std::vector<CheckOutcome> completeness_suite(const SelftestOptions& o) {
  AlphabetPtr al = letters(2);
  auto terms = enumerate_box_omega_terms(*al, o.max_size);
  std::vector<XProcess> dens;
  std::vector<NormalFormPtr> nfs;
  Tally sound("normal form denotes the term");
  for (const auto& t : terms) {
    dens.push_back(denote(t, al));
    nfs.push_back(normalize_syntactic(t));
    sound.check(nf_denote(*nfs.back(), al) == dens.back(), [&] { return print_process(t, *al); });
  }
  Tally complete("ground completeness");
  Tally unique("normal-form uniqueness");
  for (std::size_t i = 0; i < terms.size(); ++i)
    for (std::size_t j = i + 1; j < terms.size(); ++j) {
      bool same_den = dens[i] == dens[j];
      bool same_nf = *nfs[i] == *nfs[j];
      complete.check(same_den == same_nf, [&] {
        return print_process(terms[i], *al) + " vs " + print_process(terms[j], *al);
      });
      if (!same_nf)
        unique.check(!(nf_denote(*nfs[i], al) == nf_denote(*nfs[j], al)), [&] {
          return print_process(nf_to_term(*nfs[i], *al), *al) + " and " + print_process(nf_to_term(*nfs[j], *al), *al);
        });
    }
  std::string corpus = std::to_string(terms.size()) + " terms of at most " + std::to_string(o.max_size) + " nodes";
  complete.note(corpus);
  unique.note(corpus);
  sound.note(corpus);
  return {complete.outcome(), unique.outcome(), sound.outcome()};
}

std::vector<CheckOutcome> definability_suite(const SelftestOptions& o) {
  Rng rng(o.seed);
  Tally t("definability round trip");
  std::array<std::size_t, 5> by_depth{};  // samples by longest trace
  for (std::size_t i = 0; i < o.trials; ++i) {
    AlphabetPtr al = letters(1 + below(rng, 3));
    ProcessOptions popts;
    popts.max_depth = 4;
    popts.branch_probability = 0.9;
    for (const char* v : {"x", "y"})
      if (below(rng, 2)) popts.values.push_back(v);
    XProcess p = random_process(rng, al, popts);
    std::size_t depth = 0;
    for (const auto& w : p.traces()) depth = std::max(depth, w.size());
    ++by_depth[std::min<std::size_t>(depth, 4)];
    ProcTerm term = nf_to_term(*readback(p), *al);
    t.check(denote(term, al) == p, [&] { return show(p) + " read back as " + print_process(term, *al); });
  }
  std::string spread;
  for (std::size_t d = 0; d < by_depth.size(); ++d) spread += (d ? "/" : "") + std::to_string(by_depth[d]);
  t.note("trace depth <= 4, |A| <= 3, |X| <= 2; by depth 0..4: " + spread);
  return {t.outcome()};
}

// ---- free algebra ----

std::vector<CheckOutcome> monad_suite(const SelftestOptions& o) {
  Rng rng(o.seed);
  Tally left("monad left unit"), right("monad right unit"), assoc("monad associativity"),
      hom("kleisli extension is a homomorphism");
  for (std::size_t i = 0; i < o.trials; ++i) {
    AlphabetPtr al = letters(1 + below(rng, 3));
    ProcessOptions px, pu, pp;
    px.values = {"x", "y"};
    pu.values = {"u", "v"};
    pp.values = {"p", "q"};
    XProcess p = random_process(rng, al, px);
    XProcess q = random_process(rng, al, px);
    std::map<std::string, XProcess> f_tab, g_tab;
    for (const char* v : {"x", "y"}) f_tab.emplace(v, random_process(rng, al, pu));
    for (const char* v : {"u", "v"}) g_tab.emplace(v, random_process(rng, al, pp));
    ValueMap f = [&](const std::string& v) { return f_tab.at(v); };
    ValueMap g = [&](const std::string& v) { return g_tab.at(v); };
    ValueMap unit_map = [&](const std::string& v) { return eta(al, v); };
    for (const char* v : {"x", "y"})
      left.check(kleisli(eta(al, v), f) == f_tab.at(v), [&] { return std::string("at ") + v; });
    right.check(kleisli(p, unit_map) == p, [&] { return show(p); });
    XProcess lhs = kleisli(kleisli(p, f), g);
    XProcess rhs = kleisli(p, [&](const std::string& v) { return kleisli(f_tab.at(v), g); });
    assoc.check(lhs == rhs, [&] { return show(p); });
    hom.check(kleisli(intern_choice(p, q), f) == intern_choice(kleisli(p, f), kleisli(q, f)),
              [&] { return "|~| at " + show(p) + ", " + show(q); });
    Action a{0};
    hom.check(kleisli(prefix(a, p), f) == prefix(a, kleisli(p, f)), [&] { return "prefix at " + show(p); });
    if (al->size() >= 2) {
      Branches bs{{Action{0}, p}, {Action{1}, q}}, mapped{{Action{0}, kleisli(p, f)}, {Action{1}, kleisli(q, f)}};
      hom.check(kleisli(det_choice(al, bs), f) == det_choice(al, mapped), [&] { return "deterministic choice"; });
      hom.check(kleisli(det_choice_omega(al, bs), f) == det_choice_omega(al, mapped),
                [&] { return "deterministic choice with omega"; });
    }
  }
  return {left.outcome(), right.outcome(), assoc.outcome(), hom.outcome()};
}

std::vector<CheckOutcome> homomorphisms_suite(const SelftestOptions& o) {
  Rng rng(o.seed);
  Tally rel("homomorphic relabelling = direct"), con("homomorphic concealment = direct");
  auto both = [&](const XProcess& p) {
    const Alphabet& al = p.alphabet();
    RelabelFn f = random_relabelling(rng, al);
    Action a{static_cast<std::uint8_t>(below(rng, al.size()))};
    rel.check(hom_relabel(f, p) == relabel(f, p), [&] { return show(p); });
    con.check(hom_conceal(a, p) == conceal(a, p), [&] { return al.name(a) + " in " + show(p); });
  };
  for (std::size_t i = 0; i < o.trials; ++i) {
    AlphabetPtr al = letters(1 + below(rng, 3));
    ProcessOptions popts;
    popts.values = {"x", "y"};
    both(random_process(rng, al, popts));
  }
  AlphabetPtr ab = letters(2);
  std::size_t corpus = 0;
  for (const auto& t : enumerate_box_omega_terms(*ab, o.max_size)) {
    XProcess p = denote(t, ab);
    ++corpus;
    for (const auto& f : {RelabelFn({{Action{0}, Action{1}}}), RelabelFn({{Action{0}, Action{1}}, {Action{1}, Action{0}}}),
                          RelabelFn({{Action{1}, Action{0}}})})
      rel.check(hom_relabel(f, p) == relabel(f, p), [&] { return print_process(t, *ab); });
    for (Action a : ab->actions())
      con.check(hom_conceal(a, p) == conceal(a, p), [&] { return print_process(t, *ab) + " \\ " + ab->name(a); });
  }
  std::string note = std::to_string(o.trials) + " random processes and " + std::to_string(corpus) + " corpus terms";
  rel.note(note);
  con.note(note);
  return {rel.outcome(), con.outcome()};
}

XProcess always_omega(const XProcess& p, const XProcess&) { return omega(p.alphabet_ptr()); }
XProcess left_operand(const XProcess& p, const XProcess&) { return p; }

struct Candidate {
  std::string name;
  BinaryOp op;
};

std::vector<Candidate> wrong_candidates(EqSystem s) {
  std::vector<Candidate> c{{"always OMEGA", always_omega}, {"left operand", left_operand}};
  switch (s) {
    case EqSystem::ExtChoice:
      c.push_back({"internal choice", [](const XProcess& p, const XProcess& q) { return intern_choice(p, q); }});
      c.push_back({"interleaving", interleave});
      break;
    case EqSystem::Par:
      c.push_back({"operands swapped", [](const XProcess& p, const XProcess& q) { return parallel(q, p); }});
      c.push_back({"interleaving", interleave});
      break;
    case EqSystem::InterLeft:
      c.push_back({"right interleaving", interleave_right});
      c.push_back({"full interleaving", interleave});
      break;
    case EqSystem::InterRight:
      c.push_back({"left interleaving", interleave_left});
      c.push_back({"full interleaving", interleave});
      break;
  }
  return c;
}

ProbeSamples probe_samples(Rng& rng) {
  AlphabetPtr al = letters(2);
  Action a{0}, b{1};
  ProbeSamples s;
  s.values = {"x", "y"};
  s.processes = {stop(al),
                 omega(al),
                 eta(al, "x"),
                 eta(al, "y"),
                 prefix(a, stop(al)),
                 prefix(a, eta(al, "x")),
                 extern_choice(prefix(a, eta(al, "y")), prefix(b, stop(al)))};
  ProcessOptions popts;
  popts.values = {"x", "y"};
  popts.max_depth = 2;
  for (int i = 0; i < 2; ++i) s.processes.push_back(random_process(rng, al, popts));
  return s;
}

std::vector<CheckOutcome> eqsys_suite(const SelftestOptions& o) {
  std::vector<CheckOutcome> out;
  Rng rng(o.seed);
  const std::size_t pairs = std::max<std::size_t>(o.trials / 2, 1);
  const std::pair<EqSystem, BinaryOp> systems[] = {{EqSystem::ExtChoice, ext_choice_eqsys},
                                                   {EqSystem::Par, par_eqsys},
                                                   {EqSystem::InterLeft, inter_eqsys_left},
                                                   {EqSystem::InterRight, inter_eqsys_right}};
  for (const auto& [system, eval] : systems) {
    Tally t(std::string("equation system ") + eqsystem_name(system) + " = direct");
    BinaryOp direct = direct_operator(system);
    for (std::size_t i = 0; i < pairs; ++i) {
      AlphabetPtr al = letters(1 + below(rng, 3));
      ProcessOptions popts;
      popts.values = {"x", "y"};
      XProcess p = random_process(rng, al, popts);
      XProcess q = random_process(rng, al, popts);
      t.check(eval(p, q) == direct(p, q), [&] { return show(p) + " and " + show(q); });
    }
    out.push_back(t.outcome());
  }
  ProbeSamples samples = probe_samples(rng);
  for (const auto& [system, eval] : systems) {
    Tally t(std::string("probe ") + eqsystem_name(system) + " rejects wrong candidates");
    ProbeReport truth = uniqueness_probe(system, direct_operator(system), samples);
    t.check(!truth.rejected(), [&] { return "the direct operator violates " + truth.violations.front().equation; });
    std::string rejected;
    for (const auto& c : wrong_candidates(system)) {
      ProbeReport r = uniqueness_probe(system, c.op, samples);
      t.check(r.rejected(), [&] { return c.name + " passed every clause"; });
      if (r.rejected()) rejected += (rejected.empty() ? "" : ", ") + c.name + " [" + r.violations.front().equation + "]";
    }
    t.note("rejected: " + rejected);
    out.push_back(t.outcome());
  }
  return out;
}

// ---- negative results ----

std::vector<CheckOutcome> negative_suite(const SelftestOptions&) {
  AlphabetPtr al = letters(3);
  auto term = [&](const char* s) { return denote(parse_process(s, *al), al); };
  Action a{0};

  // a -> STOP and b -> STOP already separate hiding from [], but their
  // hidden choice collapses to the internal one; a -> b -> STOP and
  // c -> STOP separate it from both.
  Tally hide("concealment does not distribute over []");
  XProcess f = term("a -> STOP"), g = term("b -> STOP");
  hide.check(!(conceal(a, extern_choice(f, g)) == extern_choice(conceal(a, f), conceal(a, g))),
             [&] { return "a -> STOP, b -> STOP equal under []"; });
  XProcess f3 = term("a -> b -> STOP"), g3 = term("c -> STOP");
  XProcess whole = conceal(a, extern_choice(f3, g3));
  hide.check(!(whole == extern_choice(conceal(a, f3), conceal(a, g3))), [&] { return "equal under []"; });
  hide.check(!(whole == intern_choice(conceal(a, f3), conceal(a, g3))), [&] { return "equal under |~|"; });
  hide.note("F = a -> b -> STOP, G = c -> STOP, hiding a");

  Tally par("|| does not distribute over []");
  XProcess f1 = term("a -> STOP"), f2 = term("b -> STOP"), h = term("a -> STOP |~| b -> STOP");
  par.check(!(parallel(extern_choice(f1, f2), h) == extern_choice(parallel(f1, h), parallel(f2, h))),
            [&] { return "equal"; });
  par.note("F = a -> STOP, F' = b -> STOP, G = a -> STOP |~| b -> STOP");
  return {hide.outcome(), par.outcome()};
}

// ---- synchronisation trees ----

std::vector<CheckOutcome> synctrees_suite(const SelftestOptions& o) {
  Rng rng(o.seed);
  Alphabet al({"a", "b"});
  std::vector<SyncTree> shallow = all_trees(al, 2);
  std::vector<SyncTree> samples = shallow;
  // Depth-3 trees: random sets of summands over the depth-2 trees.
  for (std::size_t i = 0; i < o.depth3_samples; ++i) {
    SyncTree::Summands ss;
    std::size_t n = 1 + below(rng, 4);
    for (std::size_t k = 0; k < n; ++k)
      ss.emplace_back(Action{static_cast<std::uint8_t>(below(rng, 2))}, shallow[below(rng, shallow.size())]);
    SyncTree t = SyncTree::from_summands(ss);
    if (t.depth() < 3) ss.emplace_back(Action{0}, shallow.back());
    samples.push_back(SyncTree::from_summands(ss));
  }
  SyncReport r = check_mutual_equations(al, samples);
  CheckOutcome eqs{"synchronisation equations", r.ok(), r.instances_checked, ""};
  eqs.detail = std::to_string(r.instances_checked) + " instances of 8 equations, " +
               std::to_string(r.violations.size()) + " violations; all " + std::to_string(shallow.size()) +
               " trees of depth <= 2 (at most 3 node levels) plus " + std::to_string(o.depth3_samples) +
               " sampled trees of depth 3";
  if (!r.ok()) eqs.detail += "; first: " + r.violations.front().equation + " at " + r.violations.front().instance;

  Tally wrong("synchronisation equations reject wrong operators");
  SyncAuxOp swapped = [](Action a, SyncTree x, SyncTree y) { return sync_aux(a, y, x); };
  SyncOp nil_par = [](SyncTree, SyncTree) { return st_nil(); };
  std::vector<SyncTree> few(shallow.begin(), shallow.begin() + 16);
  wrong.check(!check_mutual_equations(al, few, sync, swapped).ok(), [] { return "swapped auxiliary accepted"; });
  wrong.check(!check_mutual_equations(al, few, nil_par, sync_aux).ok(), [] { return "constant NIL accepted"; });

  Tally props("sync commutative, associative, depth-bounded");
  for (SyncTree x : shallow)
    for (SyncTree y : shallow) {
      SyncTree xy = sync(x, y);
      props.check(xy == sync(y, x), [&] { return "commutativity at " + print_tree(x, al) + ", " + print_tree(y, al); });
      props.check(xy.depth() <= std::min(x.depth(), y.depth()), [&] { return "depth at " + print_tree(x, al); });
    }
  for (std::size_t i = 0; i < o.trials; ++i) {
    SyncTree x = samples[below(rng, samples.size())], y = samples[below(rng, samples.size())],
             z = samples[below(rng, samples.size())];
    props.check(sync(sync(x, y), z) == sync(x, sync(y, z)), [&] { return "associativity at " + print_tree(x, al); });
  }
  return {eqs, wrong.outcome(), props.outcome()};
}

// ---- termination and the bridge to Roscoe's model ----

std::vector<CheckOutcome> theta_suite(const SelftestOptions& o) {
  Rng rng(o.seed);
  AlphabetPtr al = letters(2);
  Tally there("theta after its inverse is the identity"), back("inverse after theta is the identity");
  for (std::size_t i = 0; i < o.trials; ++i) {
    XProcess p = random_tick_process(rng, al);
    RoscoeSF s = theta_inv(p);
    there.check(validate(s).empty() && theta(s) == p, [&] { return show(p); });
    RoscoeSF r = random_roscoe(rng, al);
    back.check(theta_inv(theta(r)) == r, [&] { return describe(r); });
  }

  Tally hom("theta is a homomorphism");
  auto same = [&](const char* op, const XProcess& ours, const RoscoeSF& theirs) {
    hom.check(theta_inv(ours) == theirs, [&] { return std::string(op) + ": " + show(ours) + " vs " + describe(theirs); });
  };
  same("STOP", stop(al), roscoe::stop(al));
  same("SKIP", skip(al), roscoe::skip(al));
  same("OMEGA", omega(al), roscoe::div(al));
  Action a{0}, b{1};
  for (std::size_t i = 0; i < o.trials; ++i) {
    XProcess p = random_tick_process(rng, al), q = random_tick_process(rng, al);
    RoscoeSF rp = theta_inv(p), rq = theta_inv(q);
    RelabelFn f = random_relabelling(rng, *al);
    same("prefix", prefix(a, p), roscoe::prefix(a, rp));
    same("|~|", intern_choice(p, q), roscoe::int_choice(rp, rq));
    same("[]", extern_choice(p, q), roscoe::ext_choice(rp, rq));
    same("deterministic choice", det_choice(al, {{a, p}, {b, q}}), roscoe::det_choice(al, {{a, rp}, {b, rq}}));
    same("deterministic choice with omega", det_choice_omega(al, {{a, p}, {b, q}}),
         roscoe::det_choice_div(al, {{a, rp}, {b, rq}}));
    same("relabelling", relabel(f, p), roscoe::relabel(f, rp));
    same("concealment", conceal(b, p), roscoe::hide(b, rp));
    same(";", seq(p, q), roscoe::seq(rp, rq));
    same("||", join_ticks(parallel(p, q)), roscoe::par_tick(rp, rq));
    same("|||", join_ticks(interleave(p, q)), roscoe::interleave_tick(rp, rq));
  }
  hom.note("STOP, SKIP, OMEGA, prefix, |~|, [], both deterministic choices, relabelling, concealment, ;, ||, |||");

  Tally finding("standard || is not the image of ||");
  RoscoeSF standard = roscoe::parallel_standard(roscoe::stop(al), roscoe::skip(al));
  finding.check(!(theta_inv(join_ticks(parallel(stop(al), skip(al)))) == standard),
                [] { return "STOP || SKIP agrees"; });
  finding.note("witness STOP || SKIP");
  return {there.outcome(), back.outcome(), hom.outcome(), finding.outcome()};
}

std::vector<CheckOutcome> termination_suite(const SelftestOptions& o) {
  Rng rng(o.seed);
  AlphabetPtr al = letters(2);
  Action a{0}, b{1};
  Tally monoid("; is a monoid with unit SKIP"), first("; commutes with constructors on the left"),
      second("; distributes over |~| on the right");
  for (std::size_t i = 0; i < o.trials; ++i) {
    XProcess p = random_tick_process(rng, al), q = random_tick_process(rng, al), r = random_tick_process(rng, al);
    auto at = [&] { return show(p) + ", " + show(q) + ", " + show(r); };
    monoid.check(seq(skip(al), p) == p, at);
    monoid.check(seq(p, skip(al)) == p, at);
    monoid.check(seq(seq(p, q), r) == seq(p, seq(q, r)), at);
    first.check(seq(intern_choice(p, q), r) == intern_choice(seq(p, r), seq(q, r)), at);
    first.check(seq(prefix(a, p), r) == prefix(a, seq(p, r)), at);
    first.check(seq(stop(al), r) == stop(al), at);
    first.check(seq(omega(al), r) == omega(al), at);
    first.check(seq(det_choice(al, {{a, p}, {b, q}}), r) == det_choice(al, {{a, seq(p, r)}, {b, seq(q, r)}}), at);
    first.check(seq(det_choice_omega(al, {{a, p}, {b, q}}), r) ==
                    det_choice_omega(al, {{a, seq(p, r)}, {b, seq(q, r)}}),
                at);
    second.check(seq(p, intern_choice(q, r)) == intern_choice(seq(p, q), seq(p, r)), at);
  }
  first.note("|~|, prefix, STOP, OMEGA and both deterministic choices");
  return {monoid.outcome(), first.outcome(), second.outcome()};
}

// ---- lambda calculus ----

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw Error("cannot read " + p.string());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<CheckOutcome> lamc_suite(const SelftestOptions& o) {
  namespace fs = std::filesystem;
  Tally corpus("lambda corpus denotes as frozen");
  if (o.lamc_dir.empty() || !fs::is_directory(o.lamc_dir)) {
    corpus.check(false, [&] { return "no corpus directory '" + o.lamc_dir + "'"; });
  } else {
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(o.lamc_dir))
      if (e.path().extension() == ".lamc") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    for (const auto& f : files) {
      fs::path expected = f;
      expected.replace_extension(".json");
      corpus.check(
          [&] {
            try {
              LamProgram prog = parse_lamc(read_file(f));
              XProcess p = denote_term(prog.term, prog.alphabet);
              return to_json(p, FailureForm::Maximal) == nlohmann::json::parse(read_file(expected));
            } catch (const std::exception&) {
              return false;
            }
          }(),
          [&] { return f.filename().string(); });
    }
    corpus.note(std::to_string(files.size()) + " programs");
  }

  Rng rng(o.seed);
  AlphabetPtr al = letters(2);
  Tally comm("constructors commute with evaluation contexts");
  for (std::size_t i = 0; i < o.trials; ++i) {
    LamType hole = below(rng, 2) ? LamType::unit() : LamType::nat();
    RandomContext ctx = random_context(rng, *al, hole);
    CommutationCase c{LamKind::IntChoice};
    c.context = ctx.context;
    c.hole = hole;
    switch (below(rng, 3)) {
      case 0:
        c.args = {random_lam_term(rng, *al, hole), random_lam_term(rng, *al, hole)};
        break;
      case 1:
        c.op = LamKind::Prefix;
        c.action = Action{static_cast<std::uint8_t>(below(rng, 2))};
        c.args = {random_lam_term(rng, *al, hole)};
        break;
      default:
        c.op = LamKind::Omega;
        break;
    }
    comm.check(constructor_commutation_check(c, al), [&] {
      return print_lam(plug(c.context, LamTerm::var("[-]")), *al);
    });
  }
  comm.note("|~|, prefix and OMEGA in random contexts of up to 3 frames");
  return {corpus.outcome(), comm.outcome()};
}

}  // namespace

const std::vector<std::string>& selftest_suites() {
  static const std::vector<std::string> names{"axioms", "completeness", "definability", "monad",
                                              "homomorphisms", "eqsys", "negative", "synctrees",
                                              "theta", "termination", "lamc"};
  return names;
}

std::vector<CheckOutcome> run_suite(const std::string& suite, const SelftestOptions& opts) {
  if (suite == "axioms") return axioms_suite(opts);
  if (suite == "completeness") return completeness_suite(opts);
  if (suite == "definability") return definability_suite(opts);
  if (suite == "monad") return monad_suite(opts);
  if (suite == "homomorphisms") return homomorphisms_suite(opts);
  if (suite == "eqsys") return eqsys_suite(opts);
  if (suite == "negative") return negative_suite(opts);
  if (suite == "synctrees") return synctrees_suite(opts);
  if (suite == "theta") return theta_suite(opts);
  if (suite == "termination") return termination_suite(opts);
  if (suite == "lamc") return lamc_suite(opts);
  throw Error("unknown suite '" + suite + "'");
}

}  // namespace cspfx
