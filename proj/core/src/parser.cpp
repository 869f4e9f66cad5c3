#include "slnkit/parser.hpp"

#include <cctype>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

namespace slnkit {

SyntaxError::SyntaxError(const std::string& message, std::size_t line, std::size_t column)
    : std::runtime_error("syntax error at " + std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

// ------------------------------------------------------------- lexer ----

enum class Tok {
  Ident,
  Number,
  LParen,
  RParen,
  Comma,
  Dot,
  Eq,
  Leq,
  Geq,
  PointsTo,
  Plus,
  Star,
  Bang,
  And,
  Or,
  Implies,
  Forall,
  Exists,
  End,
};

struct Pos {
  std::size_t line = 1;
  std::size_t column = 1;
};

struct Token {
  Tok kind;
  std::string text;
  Pos pos;
};

[[noreturn]] void fail(const Pos& p, const std::string& message) { throw SyntaxError(message, p.line, p.column); }

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$'; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$' || c == '#' || c == '\'';
}

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  Pos pos;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (text[i] == '\n') {
        ++pos.line;
        pos.column = 1;
      } else {
        ++pos.column;
      }
    }
  };
  auto starts = [&](std::string_view s) { return text.substr(i, s.size()) == s; };
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    const Pos start = pos;
    if (ident_start(c)) {
      std::size_t j = i + 1;
      while (j < text.size() && ident_char(text[j])) ++j;
      std::string word(text.substr(i, j - i));
      Tok kind = word == "forall" ? Tok::Forall : word == "exists" ? Tok::Exists : Tok::Ident;
      out.push_back({kind, std::move(word), start});
      advance(j - i);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      out.push_back({Tok::Number, std::string(text.substr(i, j - i)), start});
      advance(j - i);
      continue;
    }
    struct Sym {
      std::string_view s;
      Tok t;
    };
    static constexpr Sym symbols[] = {
        {"|->", Tok::PointsTo}, {"/\\", Tok::And}, {"\\/", Tok::Or}, {"=>", Tok::Implies}, {"<=", Tok::Leq},
        {">=", Tok::Geq},       {"(", Tok::LParen}, {")", Tok::RParen}, {",", Tok::Comma},   {".", Tok::Dot},
        {"=", Tok::Eq},         {"+", Tok::Plus},   {"*", Tok::Star},   {"!", Tok::Bang},
    };
    bool matched = false;
    for (const auto& sym : symbols) {
      if (starts(sym.s)) {
        out.push_back({sym.t, std::string(sym.s), start});
        advance(sym.s.size());
        matched = true;
        break;
      }
    }
    if (!matched) fail(start, std::string("unexpected character '") + c + "'");
  }
  out.push_back({Tok::End, "", pos});
  return out;
}

// ------------------------------------------------------ raw syntax tree ----

struct RawTerm;
using RawTermPtr = std::shared_ptr<const RawTerm>;

struct RawTerm {
  enum Kind { Var, Num, Succ, Plus, Times } kind = Var;
  std::string name;
  Nat number = 0;
  RawTermPtr lhs, rhs;
  Pos pos;
};

struct RawFormula;
using RawPtr = std::shared_ptr<const RawFormula>;

struct RawFormula {
  enum Kind { Eq, Leq, PointsTo, Pred, Not, And, Or, Implies, Quant } kind = Eq;
  RawTermPtr lhs, rhs;
  std::string pred;
  RawPtr a, b;
  bool universal = false;
  std::string var;
  enum Bound { None, Below, From, Def } bound = None;
  RawTermPtr bound_term;
  Nat guard = 0;
  Pos pos;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(lex(text)) {}

  RawPtr formula_eof() {
    RawPtr f = formula();
    expect(Tok::End, "end of input");
    return f;
  }

  RawTermPtr term_eof() {
    RawTermPtr t = term();
    expect(Tok::End, "end of input");
    return t;
  }

 private:
  const Token& peek(std::size_t k = 0) const { return toks_[std::min(i_ + k, toks_.size() - 1)]; }
  bool at(Tok t) const { return peek().kind == t; }
  Token take() { return toks_[i_++]; }
  Token expect(Tok t, const char* what) {
    if (!at(t)) {
      fail(peek().pos, std::string("expected ") + what + (at(Tok::End) ? " but input ended" : " near '" + peek().text + "'"));
    }
    return take();
  }

  static RawPtr node(RawFormula f) { return std::make_shared<const RawFormula>(std::move(f)); }
  static RawTermPtr tnode(RawTerm t) { return std::make_shared<const RawTerm>(std::move(t)); }

  RawPtr formula() {
    RawPtr lhs = disjunction();
    if (at(Tok::Implies)) {
      const Pos p = take().pos;
      RawPtr rhs = formula();
      RawFormula f;
      f.kind = RawFormula::Implies;
      f.a = lhs;
      f.b = rhs;
      f.pos = p;
      return node(std::move(f));
    }
    return lhs;
  }

  RawPtr disjunction() {
    RawPtr lhs = conjunction();
    while (at(Tok::Or)) {
      const Pos p = take().pos;
      RawFormula f;
      f.kind = RawFormula::Or;
      f.a = lhs;
      f.b = conjunction();
      f.pos = p;
      lhs = node(std::move(f));
    }
    return lhs;
  }

  RawPtr conjunction() {
    RawPtr lhs = unary();
    while (at(Tok::And)) {
      const Pos p = take().pos;
      RawFormula f;
      f.kind = RawFormula::And;
      f.a = lhs;
      f.b = unary();
      f.pos = p;
      lhs = node(std::move(f));
    }
    return lhs;
  }

  RawPtr unary() {
    if (at(Tok::Bang)) {
      const Pos p = take().pos;
      RawFormula f;
      f.kind = RawFormula::Not;
      f.a = unary();
      f.pos = p;
      return node(std::move(f));
    }
    if (at(Tok::Forall) || at(Tok::Exists)) return quantifier();
    return primary();
  }

  RawPtr quantifier() {
    const Token kw = take();
    RawFormula f;
    f.kind = RawFormula::Quant;
    f.universal = kw.kind == Tok::Forall;
    f.pos = kw.pos;
    if (at(Tok::LParen)) {
      if (f.universal) fail(peek().pos, "'forall (x = t)' is not a quantifier form");
      take();
      f.var = expect(Tok::Ident, "variable").text;
      expect(Tok::Eq, "'='");
      f.bound = RawFormula::Def;
      f.bound_term = term();
      expect(Tok::RParen, "')'");
      f.a = formula();
      return node(std::move(f));
    }
    f.var = expect(Tok::Ident, "variable after quantifier").text;
    if (at(Tok::Leq)) {
      take();
      f.bound = RawFormula::Below;
      f.bound_term = term();
    } else if (at(Tok::Geq)) {
      take();
      f.bound = RawFormula::From;
      f.guard = number(expect(Tok::Number, "natural number guard"));
    }
    if (at(Tok::Dot)) take();
    f.a = formula();
    return node(std::move(f));
  }

  RawPtr primary() {
    if (at(Tok::LParen)) {
      // Either a parenthesised formula or an atom whose left term starts with '('.
      const std::size_t save = i_;
      std::optional<SyntaxError> first_error;
      try {
        take();
        RawPtr f = formula();
        expect(Tok::RParen, "')'");
        if (!relation_ahead()) return f;
      } catch (const SyntaxError& e) {
        first_error = e;
      }
      const std::size_t reached = i_;
      i_ = save;
      try {
        return atom();
      } catch (const SyntaxError&) {
        if (first_error && reached >= i_) throw *first_error;
        throw;
      }
    }
    return atom();
  }

  bool relation_ahead() const {
    return at(Tok::Eq) || at(Tok::Leq) || at(Tok::PointsTo) || at(Tok::Plus) || at(Tok::Star);
  }

  RawPtr atom() {
    const Pos p = peek().pos;
    if (at(Tok::Ident) && peek().text != "s" && peek(1).kind == Tok::LParen) {
      RawFormula f;
      f.kind = RawFormula::Pred;
      f.pred = take().text;
      f.pos = p;
      take();
      f.lhs = term();
      expect(Tok::Comma, "','");
      f.rhs = term();
      expect(Tok::RParen, "')'");
      return node(std::move(f));
    }
    RawTermPtr lhs = term();
    RawFormula f;
    f.kind = RawFormula::Eq;
    f.pos = peek().pos;
    if (at(Tok::Eq)) {
      f.kind = RawFormula::Eq;
    } else if (at(Tok::Leq)) {
      f.kind = RawFormula::Leq;
    } else if (at(Tok::PointsTo)) {
      f.kind = RawFormula::PointsTo;
    } else {
      fail(peek().pos, at(Tok::End) ? "expected relation but input ended"
                                    : "expected '=', '<=' or '|->' near '" + peek().text + "'");
    }
    take();
    f.lhs = lhs;
    f.rhs = term();
    return node(std::move(f));
  }

  RawTermPtr term() {
    RawTermPtr lhs = product();
    while (at(Tok::Plus)) {
      const Pos p = take().pos;
      lhs = tnode({RawTerm::Plus, {}, 0, lhs, product(), p});
    }
    return lhs;
  }

  RawTermPtr product() {
    RawTermPtr lhs = term_primary();
    while (at(Tok::Star)) {
      const Pos p = take().pos;
      lhs = tnode({RawTerm::Times, {}, 0, lhs, term_primary(), p});
    }
    return lhs;
  }

  RawTermPtr term_primary() {
    const Pos p = peek().pos;
    if (at(Tok::Number)) return tnode({RawTerm::Num, {}, number(take()), nullptr, nullptr, p});
    if (at(Tok::Ident)) {
      if (peek().text == "s" && peek(1).kind == Tok::LParen) {
        take();
        take();
        RawTermPtr arg = term();
        expect(Tok::RParen, "')'");
        return tnode({RawTerm::Succ, {}, 0, arg, nullptr, p});
      }
      return tnode({RawTerm::Var, take().text, 0, nullptr, nullptr, p});
    }
    if (at(Tok::LParen)) {
      take();
      RawTermPtr t = term();
      expect(Tok::RParen, "')'");
      return t;
    }
    fail(p, at(Tok::End) ? "expected term but input ended" : "expected term near '" + peek().text + "'");
  }

  static Nat number(const Token& t) {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(t.text, &used);
      if (used != t.text.size()) fail(t.pos, "malformed number");
      return static_cast<Nat>(v);
    } catch (const std::out_of_range&) {
      fail(t.pos, "number too large");
    }
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
};

// ------------------------------------------------------- conversions ----

pa::Term to_pa_term(const RawTermPtr& t) {
  switch (t->kind) {
    case RawTerm::Var: return pa::var(t->name);
    case RawTerm::Num: return pa::numeral(t->number);
    case RawTerm::Succ: return pa::succ(to_pa_term(t->lhs));
    case RawTerm::Plus: return pa::plus(to_pa_term(t->lhs), to_pa_term(t->rhs));
    case RawTerm::Times: return pa::times(to_pa_term(t->lhs), to_pa_term(t->rhs));
  }
  fail(t->pos, "bad term");
}

pa::Formula to_pa(const RawPtr& f) {
  switch (f->kind) {
    case RawFormula::Eq: return pa::eq(to_pa_term(f->lhs), to_pa_term(f->rhs));
    case RawFormula::Leq: return pa::leq(to_pa_term(f->lhs), to_pa_term(f->rhs));
    case RawFormula::PointsTo: fail(f->pos, "'|->' is not part of PA syntax");
    case RawFormula::Pred: fail(f->pos, "predicate '" + f->pred + "' is not part of PA syntax");
    case RawFormula::Not: return pa::neg(to_pa(f->a));
    case RawFormula::And: return pa::conj(to_pa(f->a), to_pa(f->b));
    case RawFormula::Or: return pa::disj(to_pa(f->a), to_pa(f->b));
    case RawFormula::Implies: return pa::implies(to_pa(f->a), to_pa(f->b));
    case RawFormula::Quant: break;
  }
  pa::Formula body = to_pa(f->a);
  switch (f->bound) {
    case RawFormula::None: return f->universal ? pa::forall(f->var, body) : pa::exists(f->var, body);
    case RawFormula::From: fail(f->pos, "guarded quantifier 'x >= n' is not part of PA syntax");
    case RawFormula::Below:
    case RawFormula::Def: break;
  }
  pa::Term bound = to_pa_term(f->bound_term);
  if (pa::occurs(f->var, bound)) fail(f->pos, "bound variable " + f->var + " occurs in its own bound");
  if (f->bound == RawFormula::Def) return pa::exists_eq(f->var, bound, body);
  return f->universal ? pa::bounded_forall(f->var, bound, body) : pa::bounded_exists(f->var, bound, body);
}

sln::Term to_sln_term(const RawTermPtr& t) {
  switch (t->kind) {
    case RawTerm::Var: return sln::var(t->name);
    case RawTerm::Num: return sln::numeral(t->number);
    case RawTerm::Succ: return to_sln_term(t->lhs).shifted(1);
    case RawTerm::Plus: fail(t->pos, "'+' is not part of SLN syntax");
    case RawTerm::Times: fail(t->pos, "'*' is not part of SLN syntax");
  }
  fail(t->pos, "bad term");
}

sln::Formula to_sln(const RawPtr& f) {
  switch (f->kind) {
    case RawFormula::Eq: return sln::eq(to_sln_term(f->lhs), to_sln_term(f->rhs));
    case RawFormula::PointsTo: return sln::points_to(to_sln_term(f->lhs), to_sln_term(f->rhs));
    case RawFormula::Leq: fail(f->pos, "'<=' is not part of SLN syntax");
    case RawFormula::Pred: fail(f->pos, "predicate '" + f->pred + "' is not part of SLN syntax");
    case RawFormula::Not: return sln::neg(to_sln(f->a));
    case RawFormula::And: return sln::conj(to_sln(f->a), to_sln(f->b));
    case RawFormula::Or: return sln::disj(to_sln(f->a), to_sln(f->b));
    case RawFormula::Implies: return sln::implies(to_sln(f->a), to_sln(f->b));
    case RawFormula::Quant: break;
  }
  sln::Formula body = to_sln(f->a);
  switch (f->bound) {
    case RawFormula::None: return f->universal ? sln::forall(f->var, body) : sln::exists(f->var, body);
    case RawFormula::From:
      return f->universal ? sln::guarded_forall(f->var, f->guard, body) : sln::guarded_exists(f->var, f->guard, body);
    case RawFormula::Below: fail(f->pos, "bounded quantifier 'x <= t' is not part of SLN syntax");
    case RawFormula::Def: fail(f->pos, "'exists (x = t)' is not part of SLN syntax");
  }
  fail(f->pos, "bad quantifier");
}

std::string fol_var(const RawTermPtr& t) {
  if (t->kind != RawTerm::Var) fail(t->pos, "only variables are terms of the relational language");
  return t->name;
}

fol::Formula to_fol(const RawPtr& f) {
  switch (f->kind) {
    case RawFormula::Eq: return fol::eq(fol_var(f->lhs), fol_var(f->rhs));
    case RawFormula::Pred:
      if (f->pred != "P") fail(f->pos, "unknown predicate '" + f->pred + "' (only P is available)");
      return fol::rel(fol_var(f->lhs), fol_var(f->rhs));
    case RawFormula::Leq: fail(f->pos, "'<=' is not part of the relational language");
    case RawFormula::PointsTo: fail(f->pos, "'|->' is not part of the relational language");
    case RawFormula::Not: return fol::neg(to_fol(f->a));
    case RawFormula::And: return fol::conj(to_fol(f->a), to_fol(f->b));
    case RawFormula::Or: return fol::disj(to_fol(f->a), to_fol(f->b));
    case RawFormula::Implies: return fol::implies(to_fol(f->a), to_fol(f->b));
    case RawFormula::Quant: break;
  }
  if (f->bound != RawFormula::None) fail(f->pos, "bounded quantifiers are not part of the relational language");
  fol::Formula body = to_fol(f->a);
  return f->universal ? fol::forall(f->var, body) : fol::exists(f->var, body);
}

}  // namespace

pa::Formula parse_pa(std::string_view text) { return to_pa(Parser(text).formula_eof()); }
pa::Term parse_pa_term(std::string_view text) { return to_pa_term(Parser(text).term_eof()); }
sln::Formula parse_sln(std::string_view text) { return to_sln(Parser(text).formula_eof()); }
sln::Term parse_sln_term(std::string_view text) { return to_sln_term(Parser(text).term_eof()); }
fol::Formula parse_fol(std::string_view text) { return to_fol(Parser(text).formula_eof()); }

}  // namespace slnkit
