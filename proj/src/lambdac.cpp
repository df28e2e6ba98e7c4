// Copyright 2026 The cspfx Authors
// SPDX-License-Identifier: Apache-2.0

#include "cspfx/lambdac.hpp"

#include <algorithm>

#include "cspfx/freealgebra.hpp"
#include "cspfx/operators.hpp"

namespace cspfx {

// ---- types ----

LamType LamType::nat() { return base("nat"); }

LamType LamType::base(std::string name) {
  return LamType(std::make_shared<const Node>(Node{Kind::Base, std::move(name), {}}));
}

LamType LamType::unit() {
  static const LamType t(std::make_shared<const Node>(Node{Kind::Unit, "", {}}));
  return t;
}

LamType LamType::empty() {
  static const LamType t(std::make_shared<const Node>(Node{Kind::Empty, "", {}}));
  return t;
}

LamType LamType::prod(LamType l, LamType r) {
  return LamType(std::make_shared<const Node>(Node{Kind::Prod, "", {std::move(l), std::move(r)}}));
}

LamType LamType::arrow(LamType from, LamType to) {
  return LamType(std::make_shared<const Node>(Node{Kind::Arrow, "", {std::move(from), std::move(to)}}));
}

bool LamType::operator==(const LamType& o) const {
  if (node_ == o.node_) return true;
  return node_->kind == o.node_->kind && node_->name == o.node_->name && node_->parts == o.node_->parts;
}

bool LamType::first_order() const {
  if (kind() == Kind::Arrow) return false;
  return std::all_of(node_->parts.begin(), node_->parts.end(), [](const LamType& t) { return t.first_order(); });
}

namespace {

// 0: arrow, 1: product, 2: atomic.
std::string print_type_at(const LamType& t, int level) {
  std::string s;
  int own = 2;
  switch (t.kind()) {
    case LamType::Kind::Base: s = t.name(); break;
    case LamType::Kind::Unit: s = "unit"; break;
    case LamType::Kind::Empty: s = "empty"; break;
    case LamType::Kind::Prod:
      s = print_type_at(t.left(), 1) + " * " + print_type_at(t.right(), 2);
      own = 1;
      break;
    case LamType::Kind::Arrow:
      s = print_type_at(t.left(), 1) + " -> " + print_type_at(t.right(), 0);
      own = 0;
      break;
  }
  return own < level ? "(" + s + ")" : s;
}

}  // namespace

std::string print_type(const LamType& t) { return print_type_at(t, 0); }

// ---- terms ----

LamTerm LamTerm::make(Node n) { return LamTerm(std::make_shared<const Node>(std::move(n))); }

LamTerm LamTerm::var(std::string name) { return make({LamKind::Var, std::move(name)}); }

LamTerm LamTerm::fn(std::string symbol, LamTerm arg) {
  return make({LamKind::Fn, std::move(symbol), {}, {}, {}, {std::move(arg)}});
}

LamTerm LamTerm::numeral(unsigned n) {
  LamTerm t = fn("zero", star());
  for (unsigned i = 0; i < n; ++i) t = fn("succ", t);
  return t;
}

LamTerm LamTerm::star() { return make({LamKind::Star}); }

LamTerm LamTerm::in(LamTerm body, LamType type) {
  return make({LamKind::In, "", std::move(type), {}, {}, {std::move(body)}});
}

LamTerm LamTerm::pair(LamTerm l, LamTerm r) { return make({LamKind::Pair, "", {}, {}, {}, {std::move(l), std::move(r)}}); }
LamTerm LamTerm::fst(LamTerm body) { return make({LamKind::Fst, "", {}, {}, {}, {std::move(body)}}); }
LamTerm LamTerm::snd(LamTerm body) { return make({LamKind::Snd, "", {}, {}, {}, {std::move(body)}}); }

LamTerm LamTerm::lam(std::string param, LamType type, LamTerm body) {
  return make({LamKind::Lam, std::move(param), std::move(type), {}, {}, {std::move(body)}});
}

LamTerm LamTerm::app(LamTerm fun, LamTerm arg) { return binary(LamKind::App, std::move(fun), std::move(arg)); }
LamTerm LamTerm::int_choice(LamTerm l, LamTerm r) { return binary(LamKind::IntChoice, std::move(l), std::move(r)); }
LamTerm LamTerm::prefix(Action a, LamTerm body) { return make({LamKind::Prefix, "", {}, a, {}, {std::move(body)}}); }
LamTerm LamTerm::omega(LamType type) { return make({LamKind::Omega, "", std::move(type)}); }
LamTerm LamTerm::conceal(Action a, LamTerm body) { return make({LamKind::Conceal, "", {}, a, {}, {std::move(body)}}); }

LamTerm LamTerm::relabel(RelabelFn f, LamTerm body) {
  return make({LamKind::Relabel, "", {}, {}, std::move(f), {std::move(body)}});
}

LamTerm LamTerm::ext_choice(LamTerm l, LamTerm r) { return binary(LamKind::ExtChoice, std::move(l), std::move(r)); }
LamTerm LamTerm::par(LamTerm l, LamTerm r) { return binary(LamKind::Par, std::move(l), std::move(r)); }
LamTerm LamTerm::interleave(LamTerm l, LamTerm r) { return binary(LamKind::Interleave, std::move(l), std::move(r)); }

LamTerm LamTerm::binary(LamKind kind, LamTerm l, LamTerm r) {
  switch (kind) {
    case LamKind::App:
    case LamKind::Pair:
    case LamKind::IntChoice:
    case LamKind::ExtChoice:
    case LamKind::Par:
    case LamKind::Interleave:
      return make({kind, "", {}, {}, {}, {std::move(l), std::move(r)}});
    default:
      throw Error("not a binary term constructor");
  }
}

bool LamTerm::operator==(const LamTerm& o) const {
  if (node_ == o.node_) return true;
  const Node& x = *node_;
  const Node& y = *o.node_;
  return x.kind == y.kind && x.name == y.name && x.type == y.type && x.action == y.action &&
         x.relabelling == y.relabelling && x.subs == y.subs;
}

// ---- typing ----

namespace {

[[noreturn]] void mismatch(const std::string& what, const LamType& expected, const LamType& got) {
  throw TypeError(what + ": expected " + print_type(expected) + ", got " + print_type(got));
}

}  // namespace

LamType typecheck(const TypeContext& ctx, const LamTerm& t) {
  auto same = [&](const char* what) {
    LamType l = typecheck(ctx, t.sub(0));
    LamType r = typecheck(ctx, t.sub(1));
    if (!(l == r)) mismatch(std::string("operands of ") + what, l, r);
    return l;
  };
  switch (t.kind()) {
    case LamKind::Var:
      for (auto it = ctx.rbegin(); it != ctx.rend(); ++it)
        if (it->first == t.name()) return it->second;
      throw TypeError("unbound variable '" + t.name() + "'");
    case LamKind::Fn: {
      LamType arg = typecheck(ctx, t.sub());
      if (t.name() == "zero") {
        if (!(arg == LamType::unit())) mismatch("argument of zero", LamType::unit(), arg);
      } else if (t.name() == "succ") {
        if (!(arg == LamType::nat())) mismatch("argument of succ", LamType::nat(), arg);
      } else {
        throw TypeError("unknown function symbol '" + t.name() + "'");
      }
      return LamType::nat();
    }
    case LamKind::Star:
      return LamType::unit();
    case LamKind::In: {
      LamType body = typecheck(ctx, t.sub());
      if (!(body == LamType::empty())) mismatch("body of in", LamType::empty(), body);
      return t.type();
    }
    case LamKind::Pair:
      return LamType::prod(typecheck(ctx, t.sub(0)), typecheck(ctx, t.sub(1)));
    case LamKind::Fst:
    case LamKind::Snd: {
      LamType body = typecheck(ctx, t.sub());
      if (body.kind() != LamType::Kind::Prod)
        throw TypeError("projection from non-product type " + print_type(body));
      return t.kind() == LamKind::Fst ? body.left() : body.right();
    }
    case LamKind::Lam: {
      TypeContext inner = ctx;
      inner.emplace_back(t.name(), t.type());
      return LamType::arrow(t.type(), typecheck(inner, t.sub()));
    }
    case LamKind::App: {
      LamType fun = typecheck(ctx, t.sub(0));
      LamType arg = typecheck(ctx, t.sub(1));
      if (fun.kind() != LamType::Kind::Arrow) throw TypeError("application of non-function type " + print_type(fun));
      if (!(fun.left() == arg)) mismatch("argument", fun.left(), arg);
      return fun.right();
    }
    case LamKind::IntChoice: return same("|~|");
    case LamKind::ExtChoice: return same("[]");
    case LamKind::Prefix:
    case LamKind::Conceal:
    case LamKind::Relabel:
      return typecheck(ctx, t.sub());
    case LamKind::Omega:
      return t.type();
    case LamKind::Par:
    case LamKind::Interleave:
      return LamType::prod(typecheck(ctx, t.sub(0)), typecheck(ctx, t.sub(1)));
  }
  throw TypeError("unknown term");
}

// ---- semantics ----

SemValuePtr SemValue::base(std::string literal) {
  auto v = std::make_shared<SemValue>();
  v->kind = Kind::Base;
  v->literal = std::move(literal);
  return v;
}

SemValuePtr SemValue::unit() {
  static const SemValuePtr u = [] {
    auto v = std::make_shared<SemValue>();
    v->kind = Kind::Unit;
    return v;
  }();
  return u;
}

SemValuePtr SemValue::pair(SemValuePtr l, SemValuePtr r) {
  auto v = std::make_shared<SemValue>();
  v->kind = Kind::Pair;
  v->first = std::move(l);
  v->second = std::move(r);
  return v;
}

namespace {

const std::string kClosurePrefix = "<fn";

SemValuePtr closure(const LamTerm& lam, const LamEnv& env) {
  auto v = std::make_shared<SemValue>();
  v->kind = SemValue::Kind::Fun;
  v->env = env;
  v->param = lam.name();
  v->body = lam.sub();
  return v;
}

std::string successor(const std::string& literal) {
  std::string s = literal;
  for (std::size_t i = s.size(); i-- > 0;) {
    if (s[i] != '9') {
      ++s[i];
      return s;
    }
    s[i] = '0';
  }
  return "1" + s;
}

bool carries_closure(const std::string& name) { return name.find(kClosurePrefix) != std::string::npos; }

}  // namespace

LamInterpreter::LamInterpreter(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {}

std::string LamInterpreter::name_of(const SemValuePtr& v) {
  switch (v->kind) {
    case SemValue::Kind::Base: return v->literal;
    case SemValue::Kind::Unit: return "*";
    case SemValue::Kind::Pair: return pair_value(name_of(v->first), name_of(v->second));
    case SemValue::Kind::Fun: break;
  }
  auto it = std::find(closures_.begin(), closures_.end(), v);
  std::size_t idx = static_cast<std::size_t>(it - closures_.begin());
  if (it == closures_.end()) closures_.push_back(v);
  return kClosurePrefix + std::to_string(idx) + ">";
}

SemValuePtr LamInterpreter::value_of(const std::string& name) const {
  if (name == "*") return SemValue::unit();
  if (name.rfind(kClosurePrefix, 0) == 0) {
    std::size_t idx = std::stoul(name.substr(kClosurePrefix.size()));
    if (idx >= closures_.size()) throw Error("unknown closure name '" + name + "'");
    return closures_[idx];
  }
  if (name.size() >= 2 && name.front() == '(' && name.back() == ')') {
    int depth = 0;
    for (std::size_t i = 1; i + 1 < name.size(); ++i) {
      char c = name[i];
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if (c == ',' && depth == 0)
        return SemValue::pair(value_of(name.substr(1, i - 1)), value_of(name.substr(i + 1, name.size() - i - 2)));
    }
    throw Error("malformed pair value '" + name + "'");
  }
  return SemValue::base(name);
}

XProcess LamInterpreter::bind(const XProcess& p, const std::function<XProcess(const SemValuePtr&)>& k) {
  return kleisli(p, [&](const std::string& name) { return k(value_of(name)); });
}

XProcess LamInterpreter::denote(const LamTerm& t, const LamEnv& env) {
  const AlphabetPtr& al = alphabet_;
  auto ret = [&](const SemValuePtr& v) { return eta(al, name_of(v)); };
  switch (t.kind()) {
    case LamKind::Var: {
      auto it = env.find(t.name());
      if (it == env.end()) throw Error("unbound variable '" + t.name() + "' at run time");
      return ret(it->second);
    }
    case LamKind::Fn:
      return bind(denote(t.sub(), env), [&](const SemValuePtr& v) {
        if (t.name() == "zero") return eta(al, "0");
        if (t.name() == "succ" && v->kind == SemValue::Kind::Base) return eta(al, successor(v->literal));
        throw Error("cannot apply '" + t.name() + "'");
      });
    case LamKind::Star:
      return ret(SemValue::unit());
    case LamKind::In:
      // The body has no values, so the continuation is never reached.
      return bind(denote(t.sub(), env), [](const SemValuePtr&) -> XProcess {
        throw Error("value of the empty type");
      });
    case LamKind::Pair:
      return bind(denote(t.sub(0), env), [&](const SemValuePtr& l) {
        return bind(denote(t.sub(1), env), [&](const SemValuePtr& r) { return ret(SemValue::pair(l, r)); });
      });
    case LamKind::Fst:
    case LamKind::Snd:
      return bind(denote(t.sub(), env), [&](const SemValuePtr& v) {
        if (v->kind != SemValue::Kind::Pair) throw Error("projection from a non-pair");
        return ret(t.kind() == LamKind::Fst ? v->first : v->second);
      });
    case LamKind::Lam:
      return ret(closure(t, env));
    case LamKind::App:
      return bind(denote(t.sub(0), env), [&](const SemValuePtr& f) {
        if (f->kind != SemValue::Kind::Fun) throw Error("application of a non-function");
        return bind(denote(t.sub(1), env), [&](const SemValuePtr& v) {
          LamEnv inner = f->env;
          inner[f->param] = v;
          return denote(*f->body, inner);
        });
      });
    case LamKind::IntChoice: return intern_choice(denote(t.sub(0), env), denote(t.sub(1), env));
    case LamKind::ExtChoice: return extern_choice(denote(t.sub(0), env), denote(t.sub(1), env));
    case LamKind::Prefix: return prefix(t.action(), denote(t.sub(), env));
    case LamKind::Omega: return omega(al);
    case LamKind::Conceal: return conceal(t.action(), denote(t.sub(), env));
    case LamKind::Relabel: return relabel(t.relabelling(), denote(t.sub(), env));
    case LamKind::Par: return parallel(denote(t.sub(0), env), denote(t.sub(1), env));
    case LamKind::Interleave: return interleave(denote(t.sub(0), env), denote(t.sub(1), env));
  }
  throw Error("unknown term");
}

XProcess denote_term(const LamTerm& t, const AlphabetPtr& alphabet, const LamEnv& env) {
  LamInterpreter interp(alphabet);
  XProcess p = interp.denote(t, env);
  for (const auto& v : p.values())
    if (carries_closure(v)) throw TypeError("result value " + v + " contains a function; results must be first order");
  return p;
}

SemValuePtr value_semantics(const LamTerm& v, const AlphabetPtr& alphabet) {
  switch (v.kind()) {
    case LamKind::Star: return SemValue::unit();
    case LamKind::Pair: return SemValue::pair(value_semantics(v.sub(0), alphabet), value_semantics(v.sub(1), alphabet));
    case LamKind::Lam: return closure(v, {});
    case LamKind::Fn: {
      SemValuePtr arg = value_semantics(v.sub(), alphabet);
      if (v.name() == "zero") return SemValue::base("0");
      if (v.name() == "succ" && arg->kind == SemValue::Kind::Base) return SemValue::base(successor(arg->literal));
      throw Error("cannot apply '" + v.name() + "'");
    }
    default:
      throw Error("not a closed value term");
  }
}

// ---- syntax of values and evaluation contexts ----

bool is_value(const LamTerm& t) {
  switch (t.kind()) {
    case LamKind::Var:
    case LamKind::Star:
    case LamKind::Lam:
      return true;
    case LamKind::Pair:
      return is_value(t.sub(0)) && is_value(t.sub(1));
    case LamKind::In:
    case LamKind::Fn:
      return is_value(t.sub());
    default:
      return false;
  }
}

namespace {

LamTerm wrap(const Frame& f, const LamTerm& t) {
  switch (f.kind) {
    case Frame::Kind::Fn: return LamTerm::fn(f.symbol, t);
    case Frame::Kind::In: return LamTerm::in(t, *f.type);
    case Frame::Kind::PairLeft: return LamTerm::pair(t, *f.other);
    case Frame::Kind::PairRight: return LamTerm::pair(*f.other, t);
    case Frame::Kind::AppLeft: return LamTerm::app(t, *f.other);
    case Frame::Kind::AppRight: return LamTerm::app(*f.other, t);
    case Frame::Kind::Fst: return LamTerm::fst(t);
    case Frame::Kind::Snd: return LamTerm::snd(t);
  }
  throw Error("unknown frame");
}

}  // namespace

LamTerm plug(const EvalContext& e, const LamTerm& t) {
  LamTerm out = t;
  for (auto it = e.rbegin(); it != e.rend(); ++it) out = wrap(*it, out);
  return out;
}

std::optional<std::pair<EvalContext, LamTerm>> decompose(const LamTerm& t) {
  if (is_value(t)) return std::nullopt;
  auto under = [&](Frame f, const LamTerm& inner) {
    auto d = decompose(inner);
    if (!d) throw Error("stuck term");
    d->first.insert(d->first.begin(), std::move(f));
    return d;
  };
  switch (t.kind()) {
    case LamKind::Fn: return under({Frame::Kind::Fn, std::nullopt, t.name(), std::nullopt}, t.sub());
    case LamKind::In: return under({Frame::Kind::In, std::nullopt, "", t.type()}, t.sub());
    case LamKind::Pair:
      if (!is_value(t.sub(0))) return under({Frame::Kind::PairLeft, t.sub(1)}, t.sub(0));
      return under({Frame::Kind::PairRight, t.sub(0)}, t.sub(1));
    case LamKind::App:
      if (!is_value(t.sub(0))) return under({Frame::Kind::AppLeft, t.sub(1)}, t.sub(0));
      if (!is_value(t.sub(1))) return under({Frame::Kind::AppRight, t.sub(0)}, t.sub(1));
      break;
    case LamKind::Fst:
    case LamKind::Snd:
      if (!is_value(t.sub()))
        return under({t.kind() == LamKind::Fst ? Frame::Kind::Fst : Frame::Kind::Snd}, t.sub());
      break;
    default:
      break;
  }
  return std::make_pair(EvalContext{}, t);
}

LamTerm substitute(const LamTerm& t, const std::string& x, const LamTerm& value) {
  auto rebuild = [&](std::vector<LamTerm> subs) {
    switch (t.kind()) {
      case LamKind::Fn: return LamTerm::fn(t.name(), subs[0]);
      case LamKind::In: return LamTerm::in(subs[0], t.type());
      case LamKind::Fst: return LamTerm::fst(subs[0]);
      case LamKind::Snd: return LamTerm::snd(subs[0]);
      case LamKind::Lam: return LamTerm::lam(t.name(), t.type(), subs[0]);
      case LamKind::Prefix: return LamTerm::prefix(t.action(), subs[0]);
      case LamKind::Conceal: return LamTerm::conceal(t.action(), subs[0]);
      case LamKind::Relabel: return LamTerm::relabel(t.relabelling(), subs[0]);
      default: return LamTerm::binary(t.kind(), subs[0], subs[1]);
    }
  };
  switch (t.kind()) {
    case LamKind::Var: return t.name() == x ? value : t;
    case LamKind::Star:
    case LamKind::Omega:
      return t;
    case LamKind::Lam:
      if (t.name() == x) return t;
      break;
    default:
      break;
  }
  std::vector<LamTerm> subs;
  for (std::size_t i = 0; i < t.arity(); ++i) subs.push_back(substitute(t.sub(i), x, value));
  return rebuild(std::move(subs));
}

namespace {

LamTerm apply_op(const CommutationCase& c, const std::vector<LamTerm>& args, const LamType& type) {
  auto want = [&](std::size_t n) {
    if (args.size() != n) throw Error("wrong number of commutation arguments");
  };
  switch (c.op) {
    case LamKind::Omega: want(0); return LamTerm::omega(type);
    case LamKind::Prefix: want(1); return LamTerm::prefix(c.action, args[0]);
    case LamKind::Conceal: want(1); return LamTerm::conceal(c.action, args[0]);
    case LamKind::Relabel: want(1); return LamTerm::relabel(c.relabelling, args[0]);
    case LamKind::IntChoice:
    case LamKind::ExtChoice:
    case LamKind::Par:
    case LamKind::Interleave:
      want(2);
      return LamTerm::binary(c.op, args[0], args[1]);
    default:
      throw Error("not an effect operation");
  }
}

}  // namespace

std::pair<XProcess, XProcess> commutation_sides(const CommutationCase& c, const AlphabetPtr& alphabet) {
  LamTerm lhs = plug(c.context, apply_op(c, c.args, c.hole));
  LamType whole = typecheck({}, lhs);
  std::vector<LamTerm> plugged;
  for (const auto& m : c.args) plugged.push_back(plug(c.context, m));
  LamTerm rhs = apply_op(c, plugged, whole);
  typecheck({}, rhs);
  return {denote_term(lhs, alphabet), denote_term(rhs, alphabet)};
}

bool constructor_commutation_check(const CommutationCase& c, const AlphabetPtr& alphabet) {
  auto [l, r] = commutation_sides(c, alphabet);
  return l == r;
}

}  // namespace cspfx
