// Copyright 2026 The cspfx Authors
// SPDX-License-Identifier: Apache-2.0

#include "cspfx/terms.hpp"

#include <functional>

namespace cspfx {

ProcTerm ProcTerm::make(Node n) { return ProcTerm(std::make_shared<const Node>(std::move(n))); }

ProcTerm ProcTerm::stop() { return make({TermKind::Stop}); }
ProcTerm ProcTerm::omega() { return make({TermKind::Omega}); }
ProcTerm ProcTerm::skip() { return make({TermKind::Skip}); }

ProcTerm ProcTerm::value(std::string name) {
  Node n{TermKind::Value};
  n.name = std::move(name);
  return make(std::move(n));
}

ProcTerm ProcTerm::metavar(std::string name) {
  Node n{TermKind::MetaVar};
  n.name = std::move(name);
  return make(std::move(n));
}

ProcTerm ProcTerm::prefix(Action a, ProcTerm body) {
  Node n{TermKind::Prefix};
  n.action = a;
  n.operands.push_back(std::move(body));
  return make(std::move(n));
}

ProcTerm ProcTerm::binary(TermKind kind, ProcTerm left, ProcTerm right) {
  switch (kind) {
    case TermKind::IntChoice:
    case TermKind::ExtChoice:
    case TermKind::Par:
    case TermKind::Interleave:
    case TermKind::InterleaveL:
    case TermKind::InterleaveR:
    case TermKind::Seq:
      break;
    default:
      throw Error("not a binary operator");
  }
  Node n{kind};
  n.operands = {std::move(left), std::move(right)};
  return make(std::move(n));
}

ProcTerm ProcTerm::int_choice(ProcTerm l, ProcTerm r) { return binary(TermKind::IntChoice, std::move(l), std::move(r)); }
ProcTerm ProcTerm::ext_choice(ProcTerm l, ProcTerm r) { return binary(TermKind::ExtChoice, std::move(l), std::move(r)); }
ProcTerm ProcTerm::par(ProcTerm l, ProcTerm r) { return binary(TermKind::Par, std::move(l), std::move(r)); }
ProcTerm ProcTerm::interleave(ProcTerm l, ProcTerm r) { return binary(TermKind::Interleave, std::move(l), std::move(r)); }
ProcTerm ProcTerm::interleave_left(ProcTerm l, ProcTerm r) { return binary(TermKind::InterleaveL, std::move(l), std::move(r)); }
ProcTerm ProcTerm::interleave_right(ProcTerm l, ProcTerm r) { return binary(TermKind::InterleaveR, std::move(l), std::move(r)); }
ProcTerm ProcTerm::seq(ProcTerm l, ProcTerm r) { return binary(TermKind::Seq, std::move(l), std::move(r)); }

namespace {

void check_distinct(const TermBranches& branches) {
  ActionSet seen;
  for (const auto& [a, _] : branches) {
    if (seen.contains(a)) throw Error("duplicate action in deterministic choice");
    seen.insert(a);
  }
}

}  // namespace

ProcTerm ProcTerm::det_choice(TermBranches branches) {
  check_distinct(branches);
  Node n{TermKind::DetChoice};
  n.branches = std::move(branches);
  return make(std::move(n));
}

ProcTerm ProcTerm::det_choice_omega(TermBranches branches) {
  check_distinct(branches);
  Node n{TermKind::DetChoiceOmega};
  n.branches = std::move(branches);
  return make(std::move(n));
}

ProcTerm ProcTerm::relabel(RelabelFn f, ProcTerm body) {
  Node n{TermKind::Relabel};
  n.relabelling = std::move(f);
  n.operands.push_back(std::move(body));
  return make(std::move(n));
}

ProcTerm ProcTerm::conceal(Action a, ProcTerm body) {
  Node n{TermKind::Conceal};
  n.action = a;
  n.operands.push_back(std::move(body));
  return make(std::move(n));
}

std::size_t ProcTerm::size() const {
  std::size_t s = 1;
  for (const auto& o : operands()) s += o.size();
  for (const auto& [_, b] : branches()) s += b.size();
  return s;
}

bool ProcTerm::operator==(const ProcTerm& o) const {
  if (node_ == o.node_) return true;
  const Node& x = *node_;
  const Node& y = *o.node_;
  if (x.kind != y.kind || x.name != y.name || x.relabelling != y.relabelling) return false;
  bool uses_action = x.kind == TermKind::Prefix || x.kind == TermKind::Conceal;
  if (uses_action && x.action != y.action) return false;
  return x.branches == y.branches && x.operands == y.operands;
}

std::string_view signature_name(Signature s) {
  switch (s) {
    case Signature::CSPBox: return "CSPBox";
    case Signature::CSPBoxOmega: return "CSPBoxOmega";
    case Signature::CSPDet: return "CSPDet";
    case Signature::CSPDetOmega: return "CSPDetOmega";
    case Signature::Full: return "Full";
  }
  return "Full";
}

Signature parse_signature(std::string_view name) {
  for (Signature s : {Signature::CSPBox, Signature::CSPBoxOmega, Signature::CSPDet,
                      Signature::CSPDetOmega, Signature::Full})
    if (signature_name(s) == name) return s;
  throw Error("unknown theory '" + std::string(name) + "'");
}

namespace {

// Bit per signature: which signatures contain the node's operator.
constexpr unsigned kBox = 1, kBoxOmega = 2, kDet = 4, kDetOmega = 8, kFull = 16;

unsigned signatures_for(TermKind k) {
  switch (k) {
    case TermKind::MetaVar: return kBox | kBoxOmega | kDet | kDetOmega | kFull;
    case TermKind::IntChoice: return kBox | kBoxOmega | kDet | kDetOmega | kFull;
    // STOP and OMEGA are the empty deterministic choices.
    case TermKind::Stop: return kBox | kBoxOmega | kDet | kDetOmega | kFull;
    case TermKind::Omega: return kBoxOmega | kDetOmega | kFull;
    case TermKind::Prefix:
    case TermKind::ExtChoice: return kBox | kBoxOmega | kFull;
    case TermKind::DetChoice: return kDet | kDetOmega | kFull;
    case TermKind::DetChoiceOmega: return kDetOmega | kFull;
    default: return kFull;
  }
}

void visit(const ProcTerm& t, const std::function<void(const ProcTerm&)>& f) {
  f(t);
  for (const auto& o : t.operands()) visit(o, f);
  for (const auto& [_, b] : t.branches()) visit(b, f);
}

}  // namespace

Signature classify(const ProcTerm& t) {
  unsigned allowed = kBox | kBoxOmega | kDet | kDetOmega | kFull;
  visit(t, [&](const ProcTerm& s) { allowed &= signatures_for(s.kind()); });
  if (allowed & kBox) return Signature::CSPBox;
  if (allowed & kBoxOmega) return Signature::CSPBoxOmega;
  if (allowed & kDet) return Signature::CSPDet;
  if (allowed & kDetOmega) return Signature::CSPDetOmega;
  return Signature::Full;
}

std::set<std::string> value_constants(const ProcTerm& t) {
  std::set<std::string> out;
  visit(t, [&](const ProcTerm& s) {
    if (s.kind() == TermKind::Value) out.insert(s.name());
  });
  return out;
}

std::set<std::string> metavariables(const ProcTerm& t) {
  std::set<std::string> out;
  visit(t, [&](const ProcTerm& s) {
    if (s.kind() == TermKind::MetaVar) out.insert(s.name());
  });
  return out;
}

ParseError::ParseError(std::size_t offset, const std::string& message)
    : Error("at offset " + std::to_string(offset) + ": " + message), offset_(offset) {}

}  // namespace cspfx
