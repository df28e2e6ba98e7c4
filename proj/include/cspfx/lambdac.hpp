// Copyright 2026 The cspfx Authors
// SPDX-License-Identifier: Apache-2.0

// A call-by-value computational lambda calculus whose effects are CSP
// processes: types, terms, typing, monadic denotation into processes over
// value names, and the syntactic classification into values and evaluation
// contexts.
//
// Semantic values are named so they can sit on X-traces: "*" for the unit,
// decimals for naturals, "(x,y)" for pairs. Closures get internal names and
// may flow through effects, but a program's result type must be first order.

#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cspfx/process.hpp"
#include "cspfx/relabel.hpp"

namespace cspfx {

class LamType {
 public:
  enum class Kind { Base, Unit, Empty, Prod, Arrow };

  static LamType nat();
  static LamType base(std::string name);
  static LamType unit();
  static LamType empty();
  static LamType prod(LamType l, LamType r);
  static LamType arrow(LamType from, LamType to);

  Kind kind() const { return node_->kind; }
  const std::string& name() const { return node_->name; }  // Base
  const LamType& left() const { return node_->parts.at(0); }
  const LamType& right() const { return node_->parts.at(1); }

  bool operator==(const LamType& o) const;
  bool first_order() const;  // no arrow anywhere

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::vector<LamType> parts;
  };
  explicit LamType(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

std::string print_type(const LamType& t);

enum class LamKind {
  Var,
  Fn,         // given function symbol: zero, succ
  Star,
  In,         // in M : σ, from the empty type
  Pair,
  Fst,
  Snd,
  Lam,
  App,
  IntChoice,
  Prefix,
  Omega,      // annotated with its type
  Conceal,
  Relabel,
  ExtChoice,
  Par,
  Interleave,
};

class LamTerm {
 public:
  static LamTerm var(std::string name);
  static LamTerm fn(std::string symbol, LamTerm arg);
  static LamTerm numeral(unsigned n);  // succ^n(zero *)
  static LamTerm star();
  static LamTerm in(LamTerm body, LamType type);
  static LamTerm pair(LamTerm l, LamTerm r);
  static LamTerm fst(LamTerm body);
  static LamTerm snd(LamTerm body);
  static LamTerm lam(std::string param, LamType type, LamTerm body);
  static LamTerm app(LamTerm fun, LamTerm arg);
  static LamTerm int_choice(LamTerm l, LamTerm r);
  static LamTerm prefix(Action a, LamTerm body);
  static LamTerm omega(LamType type);
  static LamTerm conceal(Action a, LamTerm body);
  static LamTerm relabel(RelabelFn f, LamTerm body);
  static LamTerm ext_choice(LamTerm l, LamTerm r);
  static LamTerm par(LamTerm l, LamTerm r);
  static LamTerm interleave(LamTerm l, LamTerm r);
  static LamTerm binary(LamKind kind, LamTerm l, LamTerm r);

  LamKind kind() const { return node_->kind; }
  const std::string& name() const { return node_->name; }  // Var, Fn symbol, Lam parameter
  const LamType& type() const { return *node_->type; }     // Lam parameter, In, Omega
  Action action() const { return node_->action; }           // Prefix, Conceal
  const RelabelFn& relabelling() const { return node_->relabelling; }
  const LamTerm& sub(std::size_t i = 0) const { return node_->subs.at(i); }
  std::size_t arity() const { return node_->subs.size(); }

  bool operator==(const LamTerm& o) const;

 private:
  struct Node {
    LamKind kind;
    std::string name;
    std::optional<LamType> type;
    Action action{};
    RelabelFn relabelling;
    std::vector<LamTerm> subs;
  };
  explicit LamTerm(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static LamTerm make(Node n);
  std::shared_ptr<const Node> node_;
};

std::string print_lam(const LamTerm& t, const Alphabet& alphabet);

class TypeError : public Error {
 public:
  using Error::Error;
};

using TypeContext = std::vector<std::pair<std::string, LamType>>;  // later entries shadow

LamType typecheck(const TypeContext& ctx, const LamTerm& t);

struct SemValue;
using SemValuePtr = std::shared_ptr<const SemValue>;

struct SemValue {
  enum class Kind { Base, Unit, Pair, Fun } kind;
  std::string literal;                        // Base
  SemValuePtr first, second;                  // Pair
  std::map<std::string, SemValuePtr> env;     // Fun: captured variables
  std::string param;                          // Fun
  std::optional<LamTerm> body;                // Fun

  static SemValuePtr base(std::string literal);
  static SemValuePtr unit();
  static SemValuePtr pair(SemValuePtr l, SemValuePtr r);
};

using LamEnv = std::map<std::string, SemValuePtr>;

// Denotes terms over one alphabet. Closures are named per interpreter, so
// processes that mention them are only meaningful to the interpreter that
// produced them.
class LamInterpreter {
 public:
  explicit LamInterpreter(AlphabetPtr alphabet);

  XProcess denote(const LamTerm& t, const LamEnv& env = {});

  std::string name_of(const SemValuePtr& v);
  SemValuePtr value_of(const std::string& name) const;

 private:
  XProcess bind(const XProcess& p, const std::function<XProcess(const SemValuePtr&)>& k);

  AlphabetPtr alphabet_;
  std::vector<SemValuePtr> closures_;
};

// Denotation of a closed program; rejects results that would carry closures.
XProcess denote_term(const LamTerm& t, const AlphabetPtr& alphabet, const LamEnv& env = {});

// The semantic value of a closed, effect-free value term.
SemValuePtr value_semantics(const LamTerm& v, const AlphabetPtr& alphabet);

bool is_value(const LamTerm& t);

struct Frame {
  enum class Kind { Fn, In, PairLeft, PairRight, AppLeft, AppRight, Fst, Snd } kind;
  std::optional<LamTerm> other;  // the sibling: PairLeft/AppLeft the pending term, PairRight/AppRight the value
  std::string symbol;            // Fn
  std::optional<LamType> type;   // In
};

using EvalContext = std::vector<Frame>;  // outermost frame first

LamTerm plug(const EvalContext& e, const LamTerm& t);

// E and the redex with t = E[redex], or nothing when t is a value.
std::optional<std::pair<EvalContext, LamTerm>> decompose(const LamTerm& t);

// Capture-avoiding substitution of a closed value for a variable.
LamTerm substitute(const LamTerm& t, const std::string& x, const LamTerm& value);

// E[op(M1,..,Mn)] against op(E[M1],..,E[Mn]). Meant for the constructors
// IntChoice, Prefix and Omega; ExtChoice, Conceal and Relabel are accepted
// too, to show where commutation breaks. `hole` is the type of the hole,
// needed to annotate OMEGA.
struct CommutationCase {
  LamKind op;
  Action action{};              // Prefix, Conceal
  RelabelFn relabelling;        // Relabel
  EvalContext context;
  std::vector<LamTerm> args;    // two for binary ops, one for unary, none for Omega
  LamType hole = LamType::unit();
};

std::pair<XProcess, XProcess> commutation_sides(const CommutationCase& c, const AlphabetPtr& alphabet);
bool constructor_commutation_check(const CommutationCase& c, const AlphabetPtr& alphabet);

struct LamProgram {
  AlphabetPtr alphabet;
  LamTerm term;
  LamType type;
};

// "alphabet a, b;" followed by a closed term.
LamProgram parse_lamc(std::string_view text);
LamTerm parse_lam_term(std::string_view text, const Alphabet& alphabet, const TypeContext& ctx = {});
LamType parse_lam_type(std::string_view text);

}  // namespace cspfx
