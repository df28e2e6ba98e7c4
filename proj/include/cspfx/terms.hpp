// Copyright 2026 The cspfx Authors
// SPDX-License-Identifier: Apache-2.0

// Process terms: abstract syntax, concrete syntax, signature classification.

#pragma once

#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cspfx/alphabet.hpp"
#include "cspfx/relabel.hpp"

namespace cspfx {

enum class TermKind {
  Stop,
  Omega,
  Skip,
  Value,     // value constant
  MetaVar,   // placeholder in axiom schemas
  Prefix,
  IntChoice,
  ExtChoice,
  DetChoice,
  DetChoiceOmega,
  Relabel,
  Conceal,
  Par,
  Interleave,
  InterleaveL,
  InterleaveR,
  Seq,
};

class ProcTerm;
using TermBranches = std::vector<std::pair<Action, ProcTerm>>;

// Immutable, cheaply copyable handle to a term tree.
class ProcTerm {
 public:
  static ProcTerm stop();
  static ProcTerm omega();
  static ProcTerm skip();
  static ProcTerm value(std::string name);
  static ProcTerm metavar(std::string name);
  static ProcTerm prefix(Action a, ProcTerm body);
  static ProcTerm int_choice(ProcTerm left, ProcTerm right);
  static ProcTerm ext_choice(ProcTerm left, ProcTerm right);
  // Throws Error when two branches share a guard.
  static ProcTerm det_choice(TermBranches branches);
  static ProcTerm det_choice_omega(TermBranches branches);
  static ProcTerm relabel(RelabelFn f, ProcTerm body);
  static ProcTerm conceal(Action a, ProcTerm body);
  static ProcTerm par(ProcTerm left, ProcTerm right);
  static ProcTerm interleave(ProcTerm left, ProcTerm right);
  static ProcTerm interleave_left(ProcTerm left, ProcTerm right);
  static ProcTerm interleave_right(ProcTerm left, ProcTerm right);
  static ProcTerm seq(ProcTerm left, ProcTerm right);
  static ProcTerm binary(TermKind kind, ProcTerm left, ProcTerm right);

  TermKind kind() const { return node_->kind; }
  const std::string& name() const { return node_->name; }  // Value, MetaVar
  Action action() const { return node_->action; }          // Prefix, Conceal
  const RelabelFn& relabelling() const { return node_->relabelling; }
  const TermBranches& branches() const { return node_->branches; }  // DetChoice*
  const ProcTerm& body() const { return node_->operands.at(0); }    // unary forms
  const ProcTerm& left() const { return node_->operands.at(0); }
  const ProcTerm& right() const { return node_->operands.at(1); }
  const std::vector<ProcTerm>& operands() const { return node_->operands; }

  std::size_t size() const;  // number of AST nodes
  bool operator==(const ProcTerm& o) const;

 private:
  struct Node {
    TermKind kind;
    std::string name;
    Action action{};
    RelabelFn relabelling;
    TermBranches branches;
    std::vector<ProcTerm> operands;
  };
  explicit ProcTerm(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static ProcTerm make(Node n);

  std::shared_ptr<const Node> node_;
};

enum class Signature { CSPBox, CSPBoxOmega, CSPDet, CSPDetOmega, Full };

std::string_view signature_name(Signature s);
Signature parse_signature(std::string_view name);  // throws on unknown names

Signature classify(const ProcTerm& t);
std::set<std::string> value_constants(const ProcTerm& t);
std::set<std::string> metavariables(const ProcTerm& t);

struct ParseOptions {
  // Unbound identifiers become metavariables instead of errors.
  bool allow_metavars = false;
};

// A single expression over a known alphabet.
ProcTerm parse_process(std::string_view text, const Alphabet& alphabet, ParseOptions opts = {});

// A file with an alphabet header and definitions.
struct ProcessFile {
  AlphabetPtr alphabet;
  ProcTerm main;
};
ProcessFile parse_process_file(std::string_view text);

// Event names used by an expression, in order of first appearance.
std::vector<std::string> scan_events(std::string_view text);

std::string print_process(const ProcTerm& t, const Alphabet& alphabet);

// Parse failure with a character offset.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& message);
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace cspfx
