// Copyright 2026 The cspfx Authors
// SPDX-License-Identifier: Apache-2.0

#include "cspfx/json.hpp"

namespace cspfx {

using nlohmann::json;

namespace {

json trace_json(const Alphabet& al, const Trace& w) {
  json arr = json::array();
  for (Action a : w) arr.push_back(al.name(a));
  return arr;
}

json set_json(const Alphabet& al, ActionSet s) {
  json arr = json::array();
  for (Action a : by_name(al, s)) arr.push_back(al.name(a));
  return arr;
}

Trace parse_trace(const Alphabet& al, const json& j) {
  Trace w;
  for (const auto& name : j) w.push_back(al.at(name.get<std::string>()));
  return w;
}

ActionSet parse_set(const Alphabet& al, const json& j) {
  ActionSet s;
  for (const auto& name : j) s.insert(al.at(name.get<std::string>()));
  return s;
}

}  // namespace

json to_json(const XProcess& p, FailureForm form) {
  const Alphabet& al = p.alphabet();
  json out;
  out["alphabet"] = al.names();
  json traces = json::array();
  for (const auto& w : p.traces()) traces.push_back(trace_json(al, w));
  out["traces"] = traces;
  json xtraces = json::array();
  for (const auto& x : p.xtraces())
    xtraces.push_back({{"trace", trace_json(al, x.trace)}, {"value", x.value}});
  out["xtraces"] = xtraces;
  json failures = json::array();
  if (form == FailureForm::Expanded) {
    for (const auto& f : expand_failures(p))
      failures.push_back({{"trace", trace_json(al, f.trace)}, {"refusal", set_json(al, f.refusal)}});
    out["failures"] = failures;
  } else {
    for (const auto& [w, refusals] : p.max_refusals()) {
      json sets = json::array();
      for (ActionSet m : refusals) sets.push_back(set_json(al, m));
      failures.push_back({{"trace", trace_json(al, w)}, {"refusals", sets}});
    }
    out["maxRefusals"] = failures;
  }
  return out;
}

XProcess process_from_json(const json& j, AlphabetPtr alphabet) {
  try {
    if (!alphabet) alphabet = make_alphabet(j.at("alphabet").get<std::vector<std::string>>());
    const Alphabet& al = *alphabet;
    std::set<Trace> traces;
    std::set<XTrace> xtraces;
    std::set<FailurePair> failures;
    for (const auto& w : j.value("traces", json::array())) traces.insert(parse_trace(al, w));
    for (const auto& x : j.value("xtraces", json::array()))
      xtraces.insert(XTrace{parse_trace(al, x.at("trace")), x.at("value").get<std::string>()});
    for (const auto& f : j.value("failures", json::array()))
      failures.insert(FailurePair{parse_trace(al, f.at("trace")), parse_set(al, f.at("refusal"))});
    for (const auto& f : j.value("maxRefusals", json::array())) {
      Trace w = parse_trace(al, f.at("trace"));
      for (const auto& m : f.at("refusals")) failures.insert(FailurePair{w, parse_set(al, m)});
    }
    return close(alphabet, traces, xtraces, failures);
  } catch (const json::exception& e) {
    throw Error(std::string("malformed process JSON: ") + e.what());
  }
}

}  // namespace cspfx
