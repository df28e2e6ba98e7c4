// Copyright 2026 The cspfx Authors
// SPDX-License-Identifier: Apache-2.0

// Lexer, parser and printer for the lambda calculus. Precedence, loosest
// first: lambda and let, choice (|~| and []), parallel (|| and |||), the
// postfix \ a and [[a <- b]], application, then the prefix forms fst, snd,
// succ, zero, in and a -> M. A prefix takes an application as its body.

#include <algorithm>
#include <cctype>

#include "cspfx/lambdac.hpp"
#include "cspfx/terms.hpp"

namespace cspfx {

namespace {

enum class Tok { Word, Symbol, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t offset;
};

const char* const kSymbols[] = {"|||", "|~|", "||", "->", "<-", "[", "]", "(", ")",
                                "\\",  ",",   ";",  ":",  ".",  "*", "="};

bool word_char(unsigned char c) { return std::isalnum(c) || c == '_' || c == '\'' || c >= 0x80; }

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < src.size()) {
    unsigned char c = src[i];
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    if (src.substr(i, 2) == "--") {  // comment to end of line
      while (i < src.size() && src[i] != '\n') ++i;
      continue;
    }
    if (word_char(c)) {
      std::size_t j = i;
      while (j < src.size() && word_char(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({Tok::Word, std::string(src.substr(i, j - i)), i});
      i = j;
      continue;
    }
    bool matched = false;
    for (const char* sym : kSymbols) {
      std::string_view s(sym);
      if (src.substr(i, s.size()) == s) {
        out.push_back({Tok::Symbol, std::string(s), i});
        i += s.size();
        matched = true;
        break;
      }
    }
    if (!matched) throw ParseError(i, std::string("unexpected character '") + src[i] + "'");
  }
  out.push_back({Tok::End, "", src.size()});
  return out;
}

bool is_keyword(const std::string& s) {
  static const char* const kw[] = {"fst", "snd",  "succ", "zero",  "in",    "let",
                                   "OMEGA", "alphabet", "nat", "unit", "empty"};
  return std::any_of(std::begin(kw), std::end(kw), [&](const char* k) { return s == k; });
}

bool is_numeral(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

class Parser {
 public:
  Parser(std::vector<Token> toks, TypeContext ctx) : toks_(std::move(toks)), ctx_(std::move(ctx)) {}

  void set_alphabet(const Alphabet* al) { alphabet_ = al; }

  const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }
  bool at_symbol(std::string_view s, std::size_t ahead = 0) const {
    return peek(ahead).kind == Tok::Symbol && peek(ahead).text == s;
  }
  bool at_word(std::string_view s) const { return peek().kind == Tok::Word && peek().text == s; }
  bool at_name(std::size_t ahead = 0) const {
    const Token& t = peek(ahead);
    return t.kind == Tok::Word && !is_keyword(t.text) && !is_numeral(t.text);
  }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(peek().offset, msg); }

  Token next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  void expect(std::string_view s) {
    if (!at_symbol(s)) fail("expected '" + std::string(s) + "'");
    next();
  }
  void expect_word(std::string_view s) {
    if (!at_word(s)) fail("expected '" + std::string(s) + "'");
    next();
  }
  std::string name(const char* what) {
    if (!at_name()) fail(std::string("expected ") + what);
    return next().text;
  }
  Action action() {
    std::size_t at = peek().offset;
    std::string n = name("an event name");
    if (auto a = alphabet_->find(n)) return *a;
    throw ParseError(at, "unknown event '" + n + "'");
  }
  void expect_end() {
    if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'");
  }

  AlphabetPtr header() {
    expect_word("alphabet");
    std::vector<std::string> names;
    if (!at_symbol(";")) {
      names.push_back(name("an event name"));
      while (at_symbol(",")) {
        next();
        names.push_back(name("an event name"));
      }
    }
    expect(";");
    try {
      return make_alphabet(names);
    } catch (const Error& e) {
      fail(e.what());
    }
  }

  // ---- types ----

  LamType type() {
    LamType l = product();
    if (!at_symbol("->")) return l;
    next();
    return LamType::arrow(l, type());
  }

  LamType product() {
    LamType t = type_atom();
    while (at_symbol("*")) {
      next();
      t = LamType::prod(t, type_atom());
    }
    return t;
  }

  LamType type_atom() {
    if (at_symbol("(")) {
      next();
      LamType t = type();
      expect(")");
      return t;
    }
    if (at_word("nat")) return next(), LamType::nat();
    if (at_word("unit")) return next(), LamType::unit();
    if (at_word("empty")) return next(), LamType::empty();
    fail("expected a type");
  }

  // ---- terms ----

  LamTerm expr() {
    if (at_symbol("\\")) {
      next();
      std::string x = name("a variable");
      expect(":");
      LamType t = type();
      expect(".");
      ctx_.emplace_back(x, t);
      LamTerm body = expr();
      ctx_.pop_back();
      return LamTerm::lam(x, t, body);
    }
    if (at_word("let")) {
      next();
      std::string x = name("a variable");
      expect("=");
      std::size_t at = peek().offset;
      LamTerm bound = expr();
      expect_word("in");
      LamType t = type_at(bound, at);
      ctx_.emplace_back(x, t);
      LamTerm body = expr();
      ctx_.pop_back();
      return LamTerm::app(LamTerm::lam(x, t, body), bound);
    }
    return choice();
  }

  LamType type_at(const LamTerm& t, std::size_t at) const {
    try {
      return typecheck(ctx_, t);
    } catch (const TypeError& e) {
      throw ParseError(at, e.what());
    }
  }

  bool at_ext_choice() const { return at_symbol("[") && at_symbol("]", 1); }

  LamTerm choice() {
    LamTerm t = par();
    for (;;) {
      if (at_symbol("|~|")) {
        next();
        t = LamTerm::int_choice(t, par());
      } else if (at_ext_choice()) {
        next();
        next();
        t = LamTerm::ext_choice(t, par());
      } else {
        return t;
      }
    }
  }

  LamTerm par() {
    LamTerm t = post();
    for (;;) {
      if (at_symbol("||")) {
        next();
        t = LamTerm::par(t, post());
      } else if (at_symbol("|||")) {
        next();
        t = LamTerm::interleave(t, post());
      } else {
        return t;
      }
    }
  }

  LamTerm post() {
    LamTerm t = app();
    for (;;) {
      if (at_symbol("\\")) {
        next();
        t = LamTerm::conceal(action(), t);
      } else if (at_symbol("[") && at_symbol("[", 1)) {
        next();
        next();
        std::vector<std::pair<Action, Action>> mapping;  // empty: the identity
        while (!at_symbol("]")) {
          if (!mapping.empty()) expect(",");
          Action from = action();
          expect("<-");
          mapping.emplace_back(from, action());
        }
        expect("]");
        expect("]");
        try {
          t = LamTerm::relabel(RelabelFn(std::move(mapping)), t);
        } catch (const Error& e) {
          fail(e.what());
        }
      } else {
        return t;
      }
    }
  }

  bool at_atom() const {
    if (at_symbol("*") || at_symbol("(") || at_word("OMEGA")) return true;
    if (peek().kind == Tok::Word && is_numeral(peek().text)) return true;
    return at_name() && !at_symbol("->", 1);
  }

  LamTerm app() {
    LamTerm t = unary();
    while (at_atom()) t = LamTerm::app(t, atom());
    return t;
  }

  LamTerm unary() {
    for (const char* f : {"fst", "snd", "succ", "zero"}) {
      if (!at_word(f)) continue;
      next();
      LamTerm body = unary();
      if (std::string_view(f) == "fst") return LamTerm::fst(body);
      if (std::string_view(f) == "snd") return LamTerm::snd(body);
      return LamTerm::fn(f, body);
    }
    if (at_word("in")) {
      next();
      LamTerm body = app();
      expect(":");
      return LamTerm::in(body, type());
    }
    if (at_name() && at_symbol("->", 1)) {
      Action a = action();
      next();
      return LamTerm::prefix(a, app());
    }
    return atom();
  }

  LamTerm atom() {
    if (at_symbol("*")) return next(), LamTerm::star();
    if (at_word("OMEGA")) {
      next();
      expect(":");
      return LamTerm::omega(type());
    }
    if (peek().kind == Tok::Word && is_numeral(peek().text)) {
      std::size_t at = peek().offset;
      std::string digits = next().text;
      unsigned long n = 0;
      try {
        n = std::stoul(digits);
      } catch (const std::exception&) {
        throw ParseError(at, "numeral too large");
      }
      if (n > 100000) throw ParseError(at, "numeral too large");
      return LamTerm::numeral(static_cast<unsigned>(n));
    }
    if (at_symbol("(")) {
      next();
      LamTerm first = expr();
      if (at_symbol(",")) {
        next();
        LamTerm second = expr();
        expect(")");
        return LamTerm::pair(first, second);
      }
      expect(")");
      return first;
    }
    if (at_name()) return LamTerm::var(next().text);
    fail("expected a term");
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  const Alphabet* alphabet_ = nullptr;
  TypeContext ctx_;
};

// Printing levels, loosest first.
enum Level { kLambda, kChoice, kPar, kPost, kApp, kUnary, kAtom };

std::optional<unsigned> as_numeral(const LamTerm& t) {
  unsigned n = 0;
  const LamTerm* cur = &t;
  while (cur->kind() == LamKind::Fn && cur->name() == "succ") {
    ++n;
    cur = &cur->sub();
  }
  if (cur->kind() == LamKind::Fn && cur->name() == "zero" && cur->sub().kind() == LamKind::Star) return n;
  return std::nullopt;
}

class Printer {
 public:
  explicit Printer(const Alphabet& al) : al_(al) {}

  std::string print(const LamTerm& t, Level need) {
    Level own = kAtom;
    std::string s = render(t, own);
    return own < need ? "(" + s + ")" : s;
  }

 private:
  std::string render(const LamTerm& t, Level& own) {
    switch (t.kind()) {
      case LamKind::Var: return t.name();
      case LamKind::Star: return "*";
      case LamKind::Fn:
        if (auto n = as_numeral(t)) return std::to_string(*n);
        own = kUnary;
        return t.name() + " " + print(t.sub(), kUnary);
      case LamKind::In: return "(in " + print(t.sub(), kApp) + " : " + print_type(t.type()) + ")";
      case LamKind::Omega: return "(OMEGA : " + print_type(t.type()) + ")";
      case LamKind::Pair: return "(" + print(t.sub(0), kLambda) + ", " + print(t.sub(1), kLambda) + ")";
      case LamKind::Fst:
      case LamKind::Snd:
        own = kUnary;
        return std::string(t.kind() == LamKind::Fst ? "fst " : "snd ") + print(t.sub(), kUnary);
      case LamKind::Lam:
        own = kLambda;
        return "\\" + t.name() + ":" + print_type(t.type()) + ". " + print(t.sub(), kLambda);
      case LamKind::App: {
        own = kApp;
        // A prefix head would swallow the argument, so only applications and
        // tighter forms stay bare.
        const LamTerm& f = t.sub(0);
        std::string head = f.kind() == LamKind::App ? print(f, kApp) : print(f, kUnary);
        return head + " " + print(t.sub(1), kAtom);
      }
      case LamKind::Prefix:
        own = kApp;
        return al_.name(t.action()) + " -> " + print(t.sub(), kApp);
      case LamKind::Conceal:
        own = kPost;
        return print(t.sub(), kPost) + " \\ " + al_.name(t.action());
      case LamKind::Relabel: {
        own = kPost;
        std::string s = print(t.sub(), kPost) + " [[";
        bool first = true;
        for (const auto& [from, to] : t.relabelling().mapping()) {
          s += (first ? "" : ", ") + al_.name(from) + " <- " + al_.name(to);
          first = false;
        }
        return s + "]]";
      }
      case LamKind::IntChoice:
      case LamKind::ExtChoice: {
        own = kChoice;
        const char* op = t.kind() == LamKind::IntChoice ? " |~| " : " [] ";
        return print(t.sub(0), kChoice) + op + print(t.sub(1), kPar);
      }
      case LamKind::Par:
      case LamKind::Interleave: {
        own = kPar;
        const char* op = t.kind() == LamKind::Par ? " || " : " ||| ";
        return print(t.sub(0), kPar) + op + print(t.sub(1), kPost);
      }
    }
    return "?";
  }

  const Alphabet& al_;
};

}  // namespace

std::string print_lam(const LamTerm& t, const Alphabet& alphabet) { return Printer(alphabet).print(t, kLambda); }

LamProgram parse_lamc(std::string_view text) {
  Parser p(lex(text), {});
  AlphabetPtr al = p.header();
  p.set_alphabet(al.get());
  std::size_t at = p.peek().offset;
  LamTerm t = p.expr();
  p.expect_end();
  LamType type = p.type_at(t, at);
  return {al, t, type};
}

LamTerm parse_lam_term(std::string_view text, const Alphabet& alphabet, const TypeContext& ctx) {
  Parser p(lex(text), ctx);
  p.set_alphabet(&alphabet);
  LamTerm t = p.expr();
  p.expect_end();
  return t;
}

LamType parse_lam_type(std::string_view text) {
  Parser p(lex(text), {});
  LamType t = p.type();
  p.expect_end();
  return t;
}

}  // namespace cspfx
