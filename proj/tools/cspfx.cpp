// Copyright 2026 The cspfx Authors
// SPDX-License-Identifier: Apache-2.0

// Command-line front end: parsing, denotation, normal forms, equivalence and
// refinement, lambda programs, axiom listings and self-test suites.

#include <CLI11.hpp>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cspfx/axioms.hpp"
#include "cspfx/denote.hpp"
#include "cspfx/json.hpp"
#include "cspfx/lambdac.hpp"
#include "cspfx/normal_form.hpp"
#include "cspfx/selftest.hpp"
#include "cspfx/terms.hpp"

#ifndef CSPFX_LAMC_DIR
#define CSPFX_LAMC_DIR ""
#endif

namespace {

using namespace cspfx;
using nlohmann::json;

constexpr int kUsage = 2;

struct Flags {
  bool json = false;
  bool expand = false;
  std::string alphabet;  // comma separated, for inline terms
  std::size_t trials = 1000;
  std::uint64_t seed = 1;
  std::string theory = "CSPBoxOmega";
  std::size_t max_size = 5;
  std::string suite = "all";
  std::string lamc_dir = CSPFX_LAMC_DIR;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<std::string> split_names(const std::string& list) {
  std::vector<std::string> out;
  std::stringstream s(list);
  std::string item;
  while (std::getline(s, item, ','))
    if (auto b = item.find_first_not_of(" \t"); b != std::string::npos)
      out.push_back(item.substr(b, item.find_last_not_of(" \t") - b + 1));
  return out;
}

bool is_file(const std::string& arg) {
  std::error_code ec;
  return std::filesystem::is_regular_file(arg, ec);
}

// Terms given inline share one alphabet: the --alphabet flag, or every event
// the terms mention, in order of first appearance.
struct Inputs {
  AlphabetPtr alphabet;
  std::vector<ProcTerm> terms;
};

Inputs load_terms(const std::vector<std::string>& args, const Flags& f) {
  Inputs in;
  std::vector<std::string> texts;
  bool any_file = false;
  for (const auto& a : args) {
    if (is_file(a)) {
      any_file = true;
      texts.push_back(slurp(a));
    } else {
      texts.push_back(a);
    }
  }
  if (any_file) {
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (!is_file(args[i])) throw Error("mix of files and inline terms: give both as files");
      ProcessFile pf = parse_process_file(texts[i]);
      if (in.alphabet && !(*in.alphabet == *pf.alphabet)) throw Error("files declare different alphabets");
      in.alphabet = pf.alphabet;
      in.terms.push_back(pf.main);
    }
    return in;
  }
  std::vector<std::string> names = split_names(f.alphabet);
  if (f.alphabet.empty())
    for (const auto& t : texts)
      for (const auto& e : scan_events(t))
        if (std::find(names.begin(), names.end(), e) == names.end()) names.push_back(e);
  in.alphabet = make_alphabet(names);
  for (const auto& t : texts) in.terms.push_back(parse_process(t, *in.alphabet));
  return in;
}

json with_schema(json body) {
  json out{{"schema", kSchema}};
  out.update(body);
  return out;
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

FailureForm form(const Flags& f) { return f.expand ? FailureForm::Expanded : FailureForm::Maximal; }

int cmd_parse(const std::string& arg, const Flags& f) {
  Inputs in = load_terms({arg}, f);
  const ProcTerm& t = in.terms.front();
  std::string printed = print_process(t, *in.alphabet);
  if (f.json) {
    print_json(with_schema({{"alphabet", in.alphabet->names()},
                            {"term", printed},
                            {"signature", std::string(signature_name(classify(t)))},
                            {"size", t.size()}}));
  } else {
    std::cout << printed << "\n";
  }
  return 0;
}

int cmd_denote(const std::string& arg, const Flags& f) {
  Inputs in = load_terms({arg}, f);
  XProcess p = denote(in.terms.front(), in.alphabet);
  if (f.json)
    print_json(with_schema(to_json(p, form(f))));
  else
    std::cout << describe(p) << "\n";
  return 0;
}

std::string xtrace_text(const Alphabet& al, const XTrace& x) { return format_trace(al, x.trace) + "." + x.value; }

int cmd_traces(const std::string& arg, const Flags& f) {
  Inputs in = load_terms({arg}, f);
  XProcess p = denote(in.terms.front(), in.alphabet);
  if (f.json) {
    json j = to_json(p, form(f));
    print_json(with_schema({{"alphabet", j["alphabet"]}, {"traces", j["traces"]}, {"xtraces", j["xtraces"]}}));
    return 0;
  }
  for (const auto& t : p.traces()) std::cout << format_trace(p.alphabet(), t) << "\n";
  for (const auto& x : p.xtraces()) std::cout << xtrace_text(p.alphabet(), x) << "\n";
  return 0;
}

int cmd_failures(const std::string& arg, const Flags& f) {
  Inputs in = load_terms({arg}, f);
  XProcess p = denote(in.terms.front(), in.alphabet);
  if (f.json) {
    json j = to_json(p, form(f));
    json body{{"alphabet", j["alphabet"]}};
    if (f.expand)
      body["failures"] = j["failures"];
    else
      body["maxRefusals"] = j["maxRefusals"];
    print_json(with_schema(body));
    return 0;
  }
  const Alphabet& al = p.alphabet();
  if (f.expand) {
    for (const auto& fp : expand_failures(p)) std::cout << format_trace(al, fp.trace) << " " << format_set(al, fp.refusal) << "\n";
  } else {
    for (const auto& [t, sets] : p.max_refusals())
      for (ActionSet s : sets) std::cout << format_trace(al, t) << " " << format_set(al, s) << "\n";
  }
  return 0;
}

int cmd_normalize(const std::string& arg, const Flags& f) {
  Inputs in = load_terms({arg}, f);
  std::string nf = print_process(nf_to_term(*normalize(in.terms.front(), in.alphabet), *in.alphabet), *in.alphabet);
  if (f.json)
    print_json(with_schema({{"alphabet", in.alphabet->names()}, {"normalForm", nf}}));
  else
    std::cout << nf << "\n";
  return 0;
}

int cmd_compare(const std::string& left, const std::string& right, bool refinement, const Flags& f) {
  Inputs in = load_terms({left, right}, f);
  XProcess p = denote(in.terms[0], in.alphabet);
  XProcess q = denote(in.terms[1], in.alphabet);
  bool holds = refinement ? refines(p, q) : equal(p, q);
  const char* verdict = refinement ? (holds ? "refines" : "does not refine") : (holds ? "equal" : "different");
  if (f.json)
    print_json(with_schema({{"relation", refinement ? "refine" : "eq"}, {"holds", holds}}));
  else
    std::cout << verdict << "\n";
  return holds ? 0 : 1;
}

int cmd_run(const std::string& path, const Flags& f) {
  LamProgram prog = parse_lamc(slurp(path));
  if (!prog.type.first_order()) throw TypeError("program type " + print_type(prog.type) + " is not first order");
  XProcess p = denote_term(prog.term, prog.alphabet);
  json j = with_schema(to_json(p, form(f)));
  j["type"] = print_type(prog.type);
  print_json(j);
  return 0;
}

AlphabetPtr flag_alphabet(const Flags& f) {
  return make_alphabet(f.alphabet.empty() ? std::vector<std::string>{"a", "b"} : split_names(f.alphabet));
}

int cmd_axioms(const Flags& f) {
  Signature theory = parse_signature(f.theory);
  AlphabetPtr al = flag_alphabet(f);
  auto list = axioms(theory, *al);
  if (f.json) {
    json items = json::array();
    for (const auto& ax : list)
      items.push_back({{"family", ax.family},
                       {"name", ax.name},
                       {"kind", ax.kind == AxiomKind::Equation ? "equation" : "inequation"},
                       {"lhs", print_process(ax.lhs, *al)},
                       {"rhs", print_process(ax.rhs, *al)}});
    print_json(with_schema({{"theory", f.theory}, {"alphabet", al->names()}, {"axioms", items}}));
    return 0;
  }
  for (const auto& ax : list) std::cout << ax.name << ": " << format_axiom(ax, *al) << "\n";
  return 0;
}

json outcomes_json(const std::vector<CheckOutcome>& os) {
  json items = json::array();
  for (const auto& o : os)
    items.push_back({{"name", o.name}, {"passed", o.passed}, {"checked", o.checked}, {"detail", o.detail}});
  return items;
}

int report(const std::vector<CheckOutcome>& os, const Flags& f) {
  bool ok = std::all_of(os.begin(), os.end(), [](const CheckOutcome& o) { return o.passed; });
  if (f.json) {
    print_json(with_schema({{"seed", f.seed}, {"trials", f.trials}, {"passed", ok}, {"checks", outcomes_json(os)}}));
  } else {
    for (const auto& o : os) std::cout << (o.passed ? "ok   " : "FAIL ") << o.name << ": " << o.detail << "\n";
  }
  if (!ok) std::cerr << "self-test failed\n";
  return ok ? 0 : kUsage;
}

SelftestOptions suite_options(const Flags& f) {
  SelftestOptions o;
  o.seed = f.seed;
  o.trials = f.trials;
  o.max_size = f.max_size;
  o.lamc_dir = f.lamc_dir;
  return o;
}

int cmd_check_axioms(const Flags& f) {
  SelftestOptions o = suite_options(f);
  o.theory = f.theory;
  return report(run_suite("axioms", o), f);
}

int cmd_selftest(const Flags& f) {
  std::vector<CheckOutcome> all;
  std::vector<std::string> suites;
  for (const auto& s : split_names(f.suite)) {
    if (s == "all")
      suites.insert(suites.end(), selftest_suites().begin(), selftest_suites().end());
    else if (s == "freealgebra")  // every oracle-equality suite over the free algebra
      suites.insert(suites.end(), {"monad", "homomorphisms", "eqsys", "negative"});
    else
      suites.push_back(s);
  }
  for (const auto& s : suites) {
    auto os = run_suite(s, suite_options(f));
    all.insert(all.end(), os.begin(), os.end());
  }
  return report(all, f);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Processes with effects: failures semantics, normal forms and a lambda calculus"};
  app.require_subcommand(1);
  Flags f;
  std::string first, second;
  int rc = 0;

  auto common = [&](CLI::App* c) {
    c->add_flag("--json", f.json, "Print JSON");
    c->add_option("--alphabet", f.alphabet, "Comma-separated events for inline terms");
  };
  auto one_term = [&](const char* name, const char* help, auto run) {
    CLI::App* c = app.add_subcommand(name, help);
    c->add_option("term", first, "Term or file")->required();
    common(c);
    c->add_flag("--expand", f.expand, "List every failure instead of maximal refusals");
    c->callback([&, run] { rc = run(first, f); });
  };
  one_term("parse", "Parse and print a term", cmd_parse);
  one_term("denote", "Denote a term as a process", cmd_denote);
  one_term("traces", "List traces and X-traces", cmd_traces);
  one_term("failures", "List failures", cmd_failures);
  one_term("normalize", "Print the normal form", cmd_normalize);

  for (bool refinement : {false, true}) {
    CLI::App* c = app.add_subcommand(refinement ? "refine" : "eq",
                                     refinement ? "Exit 0 when the first refines to the second, 1 otherwise"
                                                : "Exit 0 when the terms are equivalent, 1 otherwise");
    c->add_option("left", first, "Term or file")->required();
    c->add_option("right", second, "Term or file")->required();
    common(c);
    c->callback([&, refinement] { rc = cmd_compare(first, second, refinement, f); });
  }

  CLI::App* run = app.add_subcommand("run", "Denote a .lamc program");
  run->add_option("file", first, "Program file")->required();
  run->add_flag("--json", f.json, "Accepted for uniformity; output is always JSON");
  run->add_flag("--expand", f.expand, "List every failure instead of maximal refusals");
  run->callback([&] { rc = cmd_run(first, f); });

  CLI::App* ax = app.add_subcommand("axioms", "List the axiom instances of a theory");
  ax->add_option("--theory", f.theory, "CSPBox, CSPBoxOmega, CSPDet or CSPDetOmega");
  common(ax);
  ax->callback([&] { rc = cmd_axioms(f); });

  auto seeded = [&](CLI::App* c) {
    c->add_flag("--json", f.json, "Print JSON");
    c->add_option("--trials", f.trials, "Random instances per check");
    c->add_option("--seed", f.seed, "Random seed");
  };
  CLI::App* chk = app.add_subcommand("check-axioms", "Check a theory's axioms on random processes");
  chk->add_option("--theory", f.theory, "CSPBox, CSPBoxOmega, CSPDet or CSPDetOmega");
  seeded(chk);
  chk->callback([&] { rc = cmd_check_axioms(f); });

  CLI::App* self = app.add_subcommand("selftest", "Run property suites");
  self->add_option("--suite", f.suite, "Comma-separated suites, freealgebra, or all");
  self->add_option("--max-size", f.max_size, "Largest term in the normal-form corpus");
  self->add_option("--lamc-dir", f.lamc_dir, "Directory of .lamc programs with .json expectations");
  seeded(self);
  self->callback([&] { rc = cmd_selftest(f); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return rc;
}
