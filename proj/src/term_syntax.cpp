// Copyright 2026 The cspfx Authors
// SPDX-License-Identifier: Apache-2.0

// Lexer, recursive-descent parser and printer for process terms.

#include <algorithm>
#include <cctype>
#include <map>

#include "cspfx/terms.hpp"

namespace cspfx {

namespace {

enum class Tok { Ident, Symbol, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t offset;
};

const char* const kSymbols[] = {"|||<", "|||>", "|||", "|~|", "||", "->", "<-", "|",
                                "[",    "]",    "(",   ")",   "\\", ",",  ";",  "="};

// Bytes above 0x7f are accepted so that UTF-8 names such as the tick lex as words.
bool word_char(unsigned char c) { return std::isalnum(c) || c == '_' || c >= 0x80; }

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < src.size()) {
    unsigned char c = src[i];
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    if (word_char(c)) {
      std::size_t j = i;
      while (j < src.size() && word_char(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({Tok::Ident, std::string(src.substr(i, j - i)), i});
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
  return s == "STOP" || s == "OMEGA" || s == "SKIP" || s == "val" || s == "alphabet";
}

class Parser {
 public:
  Parser(std::vector<Token> toks, ParseOptions opts) : toks_(std::move(toks)), opts_(opts) {}

  void set_alphabet(const Alphabet* al) { alphabet_ = al; }

  const Token& peek(std::size_t ahead = 0) const {
    std::size_t k = std::min(pos_ + ahead, toks_.size() - 1);
    return toks_[k];
  }
  bool at_symbol(std::string_view s, std::size_t ahead = 0) const {
    return peek(ahead).kind == Tok::Symbol && peek(ahead).text == s;
  }
  bool at_ident(std::size_t ahead = 0) const {
    return peek(ahead).kind == Tok::Ident && !is_keyword(peek(ahead).text);
  }
  bool at_keyword(std::string_view s) const {
    return peek().kind == Tok::Ident && peek().text == s;
  }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(peek().offset, msg); }

  Token next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  void expect(std::string_view s) {
    if (!at_symbol(s)) fail("expected '" + std::string(s) + "'");
    next();
  }
  std::string ident(const char* what) {
    if (!at_ident()) fail(std::string("expected ") + what);
    return next().text;
  }
  Action action() {
    std::size_t at = peek().offset;
    std::string name = ident("an event name");
    if (auto a = alphabet_->find(name)) return *a;
    throw ParseError(at, "unknown event '" + name + "'");
  }
  void expect_end() {
    if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'");
  }

  ProcessFile file() {
    if (!at_keyword("alphabet")) fail("expected 'alphabet'");
    next();
    std::vector<std::string> names{ident("an event name")};
    while (at_symbol(",")) {
      next();
      names.push_back(ident("an event name"));
    }
    expect(";");
    AlphabetPtr al;
    try {
      al = make_alphabet(names);
    } catch (const Error& e) {
      fail(e.what());
    }
    set_alphabet(al.get());
    while (at_ident() && at_symbol("=", 1)) {
      std::size_t at = peek().offset;
      std::string name = next().text;
      next();
      if (defs_.count(name)) throw ParseError(at, "'" + name + "' defined twice");
      in_definition_ = true;
      ProcTerm body = expr();
      in_definition_ = false;
      expect(";");
      defs_.emplace(name, body);
    }
    ProcTerm main = expr();
    expect_end();
    return {al, main};
  }

  // Inside definitions a top-level ';' ends the definition.
  ProcTerm expr() {
    ProcTerm first = choice();
    if (in_definition_ || !at_symbol(";")) return first;
    next();
    return ProcTerm::seq(first, expr());
  }

  bool at_ext_choice() const { return at_symbol("[") && at_symbol("]", 1); }

  ProcTerm choice() {
    ProcTerm t = par();
    for (;;) {
      if (at_symbol("|~|")) {
        next();
        t = ProcTerm::int_choice(t, par());
      } else if (at_ext_choice()) {
        next();
        next();
        t = ProcTerm::ext_choice(t, par());
      } else {
        return t;
      }
    }
  }

  ProcTerm par() {
    ProcTerm t = post();
    for (;;) {
      TermKind k;
      if (at_symbol("||")) k = TermKind::Par;
      else if (at_symbol("|||")) k = TermKind::Interleave;
      else if (at_symbol("|||<")) k = TermKind::InterleaveL;
      else if (at_symbol("|||>")) k = TermKind::InterleaveR;
      else return t;
      next();
      t = ProcTerm::binary(k, t, post());
    }
  }

  ProcTerm post() {
    ProcTerm t = atom();
    for (;;) {
      if (at_symbol("\\")) {
        next();
        t = ProcTerm::conceal(action(), t);
      } else if (at_symbol("[") && at_symbol("[", 1)) {
        next();
        next();
        std::vector<std::pair<Action, Action>> mapping;
        while (!at_symbol("]")) {
          if (!mapping.empty()) expect(",");
          Action from = action();
          expect("<-");
          mapping.emplace_back(from, action());
        }
        expect("]");
        expect("]");
        try {
          t = ProcTerm::relabel(RelabelFn(std::move(mapping)), t);
        } catch (const ParseError&) {
          throw;
        } catch (const Error& e) {
          fail(e.what());
        }
      } else {
        return t;
      }
    }
  }

  ProcTerm atom() {
    const Token& tok = peek();
    if (tok.kind == Tok::Ident) {
      if (tok.text == "STOP") return next(), ProcTerm::stop();
      if (tok.text == "OMEGA") return next(), ProcTerm::omega();
      if (tok.text == "SKIP") return next(), ProcTerm::skip();
      if (tok.text == "val") {
        next();
        return ProcTerm::value(value_name());
      }
      if (is_keyword(tok.text)) fail("unexpected '" + tok.text + "'");
      if (at_symbol("->", 1)) {
        Action a = action();
        next();
        return ProcTerm::prefix(a, atom());
      }
      std::string name = next().text;
      if (auto it = defs_.find(name); it != defs_.end()) return it->second;
      if (opts_.allow_metavars) return ProcTerm::metavar(name);
      throw ParseError(tok.offset, "undefined name '" + name + "'");
    }
    if (at_symbol("(")) {
      next();
      bool saved = in_definition_;
      in_definition_ = false;
      ProcTerm t = expr();
      in_definition_ = saved;
      expect(")");
      return t;
    }
    if (at_symbol("[")) return bracket();
    fail(tok.kind == Tok::End ? "unexpected end of input" : "unexpected '" + tok.text + "'");
  }

  // A name, or a pair "(x,y)" of names.
  std::string value_name() {
    if (at_symbol("(")) {
      next();
      std::string left = value_name();
      expect(",");
      std::string right = value_name();
      expect(")");
      return pair_value(left, right);
    }
    if (peek().kind != Tok::Ident) fail("expected a value name");
    return next().text;
  }

  ProcTerm bracket() {
    std::size_t at = peek().offset;
    next();
    bool with_omega = at_keyword("OMEGA");
    if (with_omega) next();
    TermBranches branches;
    bool saved = in_definition_;
    in_definition_ = false;
    while (!at_symbol("]")) {
      if (!branches.empty() || with_omega) expect("|");
      Action a = action();
      expect("->");
      branches.emplace_back(a, expr());
    }
    in_definition_ = saved;
    next();
    try {
      return with_omega ? ProcTerm::det_choice_omega(std::move(branches))
                        : ProcTerm::det_choice(std::move(branches));
    } catch (const Error& e) {
      throw ParseError(at, e.what());
    }
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  ParseOptions opts_;
  const Alphabet* alphabet_ = nullptr;
  std::map<std::string, ProcTerm> defs_;
  bool in_definition_ = false;
};

// Precedence levels, loosest first.
enum Level { kSeq = 0, kChoice = 1, kPar = 2, kPost = 3, kAtom = 4 };

Level level_of(TermKind k) {
  switch (k) {
    case TermKind::Seq: return kSeq;
    case TermKind::IntChoice:
    case TermKind::ExtChoice: return kChoice;
    case TermKind::Par:
    case TermKind::Interleave:
    case TermKind::InterleaveL:
    case TermKind::InterleaveR: return kPar;
    case TermKind::Relabel:
    case TermKind::Conceal: return kPost;
    default: return kAtom;
  }
}

const char* infix(TermKind k) {
  switch (k) {
    case TermKind::Seq: return " ; ";
    case TermKind::IntChoice: return " |~| ";
    case TermKind::ExtChoice: return " [] ";
    case TermKind::Par: return " || ";
    case TermKind::Interleave: return " ||| ";
    case TermKind::InterleaveL: return " |||< ";
    case TermKind::InterleaveR: return " |||> ";
    default: return "";
  }
}

void print(const ProcTerm& t, const Alphabet& al, Level need, std::string& out);

// Operand of a postfix operator. A bare prefix would bind the same way, but
// "a -> P \ a" reads as if only P were hidden.
void print_operand(const ProcTerm& t, const Alphabet& al, std::string& out) {
  if (t.kind() != TermKind::Prefix) return print(t, al, kPost, out);
  out += "(";
  print(t, al, kSeq, out);
  out += ")";
}

void print(const ProcTerm& t, const Alphabet& al, Level need, std::string& out) {
  Level own = level_of(t.kind());
  bool parens = own < need;
  if (parens) out += "(";
  switch (t.kind()) {
    case TermKind::Stop: out += "STOP"; break;
    case TermKind::Omega: out += "OMEGA"; break;
    case TermKind::Skip: out += "SKIP"; break;
    case TermKind::Value: out += "val " + t.name(); break;
    case TermKind::MetaVar: out += t.name(); break;
    case TermKind::Prefix:
      out += al.name(t.action()) + " -> ";
      print(t.body(), al, kAtom, out);
      break;
    case TermKind::DetChoice:
    case TermKind::DetChoiceOmega: {
      bool omega = t.kind() == TermKind::DetChoiceOmega;
      out += omega ? "[OMEGA" : "[";
      bool first = !omega;
      for (const auto& [a, b] : t.branches()) {
        out += first ? "" : " | ";
        first = false;
        out += al.name(a) + " -> ";
        print(b, al, kSeq, out);
      }
      out += "]";
      break;
    }
    case TermKind::Conceal:
      print_operand(t.body(), al, out);
      out += " \\ " + al.name(t.action());
      break;
    case TermKind::Relabel: {
      print_operand(t.body(), al, out);
      out += " [[";
      bool first = true;
      for (const auto& [from, to] : t.relabelling().mapping()) {
        out += first ? "" : ", ";
        first = false;
        out += al.name(from) + " <- " + al.name(to);
      }
      out += "]]";
      break;
    }
    case TermKind::Seq:
      print(t.left(), al, kChoice, out);
      out += infix(t.kind());
      print(t.right(), al, kSeq, out);
      break;
    default:
      print(t.left(), al, own, out);
      out += infix(t.kind());
      print(t.right(), al, static_cast<Level>(own + 1), out);
      break;
  }
  if (parens) out += ")";
}

}  // namespace

ProcTerm parse_process(std::string_view text, const Alphabet& alphabet, ParseOptions opts) {
  Parser p(lex(text), opts);
  p.set_alphabet(&alphabet);
  ProcTerm t = p.expr();
  p.expect_end();
  return t;
}

ProcessFile parse_process_file(std::string_view text) {
  Parser p(lex(text), {});
  return p.file();
}

std::vector<std::string> scan_events(std::string_view text) {
  std::vector<std::string> out;
  auto toks = lex(text);
  auto add = [&](const std::string& s) {
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
  };
  for (std::size_t i = 0; i + 1 < toks.size(); ++i) {
    const Token& t = toks[i];
    if (t.kind != Tok::Ident || is_keyword(t.text)) continue;
    if (i > 0 && toks[i - 1].text == "val") continue;
    const std::string& after = toks[i + 1].text;
    const std::string& before = i > 0 ? toks[i - 1].text : std::string();
    if (after == "->" || after == "<-" || before == "\\" || before == "<-") add(t.text);
  }
  return out;
}

std::string print_process(const ProcTerm& t, const Alphabet& alphabet) {
  std::string out;
  print(t, alphabet, kSeq, out);
  return out;
}

}  // namespace cspfx
