#include "focal/syntax.hpp"

#include <cctype>
#include <utility>
#include <vector>

namespace focal::syntax {

namespace {

enum class Tok {
  Ident, Int,
  TruePos, FalsePos, TrueNeg, FalseNeg,
  AndPos, AndNeg, OrPos, OrNeg,
  Arrow, ConsOp,
  Tilde, Star, Question,
  LParen, RParen, LBrace, RBrace,
  Lt, Gt, Bar, Comma, Semi, Colon, Dot,
  HashInt, HashRs, HashAbsurd,
  DollarInt, DollarRs,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  int value = 0;
  int line = 1;
  int col = 1;
};

const char* describe(Tok k) {
  switch (k) {
    case Tok::Ident: return "identifier";
    case Tok::Int: return "number";
    case Tok::TruePos: return "'true+'";
    case Tok::FalsePos: return "'false+'";
    case Tok::TrueNeg: return "'true-'";
    case Tok::FalseNeg: return "'false-'";
    case Tok::AndPos: return "'&+'";
    case Tok::AndNeg: return "'&-'";
    case Tok::OrPos: return "'|+'";
    case Tok::OrNeg: return "'|-'";
    case Tok::Arrow: return "'=>'";
    case Tok::ConsOp: return "'::'";
    case Tok::Tilde: return "'~'";
    case Tok::Star: return "'*'";
    case Tok::Question: return "'?'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::Lt: return "'<'";
    case Tok::Gt: return "'>'";
    case Tok::Bar: return "'|'";
    case Tok::Comma: return "','";
    case Tok::Semi: return "';'";
    case Tok::Colon: return "':'";
    case Tok::Dot: return "'.'";
    case Tok::HashInt: return "positive label";
    case Tok::HashRs: return "'#rs'";
    case Tok::HashAbsurd: return "'#absurd'";
    case Tok::DollarInt: return "negative label";
    case Tok::DollarRs: return "'$rs'";
    case Tok::End: return "end of input";
  }
  return "?";
}

class Lexer {
public:
  explicit Lexer(const std::string& text) : text_(text) {}

  std::vector<Token> lex() {
    std::vector<Token> out;
    for (;;) {
      skip_space_and_comments();
      if (pos_ >= text_.size()) break;
      out.push_back(next());
    }
    out.push_back(Token{Tok::End, "", 0, line_, col_});
    return out;
  }

private:
  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(line_, col_, msg);
  }

  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }
  char advance() {
    char c = text_[pos_++];
    if (c == '\n') { ++line_; col_ = 1; } else { ++col_; }
    return c;
  }

  static bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
  static bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
  }

  std::string read_ident() {
    std::string s;
    while (ident_char(peek())) s += advance();
    return s;
  }

  void skip_space_and_comments() {
    for (;;) {
      while (pos_ < text_.size() &&
             std::isspace(static_cast<unsigned char>(peek())))
        advance();
      // '#' starts a comment unless it spells a label.
      if (peek() == '#') {
        char la = peek(1);
        if (std::isdigit(static_cast<unsigned char>(la))) return;
        std::size_t save_pos = pos_;
        int save_line = line_, save_col = col_;
        advance();
        std::string word = read_ident();
        if (word == "rs" || word == "absurd") {
          pos_ = save_pos; line_ = save_line; col_ = save_col;
          return;
        }
        while (pos_ < text_.size() && peek() != '\n') advance();
        continue;
      }
      return;
    }
  }

  Token next() {
    int line = line_, col = col_;
    char c = peek();

    if (ident_start(c)) {
      std::string s = read_ident();
      if (s == "true" || s == "false") {
        if (peek() == '+') { advance(); return {s == "true" ? Tok::TruePos : Tok::FalsePos, s + "+", 0, line, col}; }
        if (peek() == '-') { advance(); return {s == "true" ? Tok::TrueNeg : Tok::FalseNeg, s + "-", 0, line, col}; }
        fail("expected '+' or '-' after '" + s + "'");
      }
      return {Tok::Ident, s, 0, line, col};
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      int v = 0;
      std::string s;
      while (std::isdigit(static_cast<unsigned char>(peek()))) {
        char d = advance();
        s += d;
        v = v * 10 + (d - '0');
      }
      return {Tok::Int, s, v, line, col};
    }

    advance();
    switch (c) {
      case '~': return {Tok::Tilde, "~", 0, line, col};
      case '*': return {Tok::Star, "*", 0, line, col};
      case '?': return {Tok::Question, "?", 0, line, col};
      case '(': return {Tok::LParen, "(", 0, line, col};
      case ')': return {Tok::RParen, ")", 0, line, col};
      case '{': return {Tok::LBrace, "{", 0, line, col};
      case '}': return {Tok::RBrace, "}", 0, line, col};
      case '<': return {Tok::Lt, "<", 0, line, col};
      case '>': return {Tok::Gt, ">", 0, line, col};
      case ',': return {Tok::Comma, ",", 0, line, col};
      case ';': return {Tok::Semi, ";", 0, line, col};
      case '.': return {Tok::Dot, ".", 0, line, col};
      case ':':
        if (peek() == ':') { advance(); return {Tok::ConsOp, "::", 0, line, col}; }
        return {Tok::Colon, ":", 0, line, col};
      case '&':
        if (peek() == '+') { advance(); return {Tok::AndPos, "&+", 0, line, col}; }
        if (peek() == '-') { advance(); return {Tok::AndNeg, "&-", 0, line, col}; }
        fail("expected '+' or '-' after '&'");
      case '|':
        if (peek() == '+') { advance(); return {Tok::OrPos, "|+", 0, line, col}; }
        if (peek() == '-') { advance(); return {Tok::OrNeg, "|-", 0, line, col}; }
        return {Tok::Bar, "|", 0, line, col};
      case '=':
        if (peek() == '>') { advance(); return {Tok::Arrow, "=>", 0, line, col}; }
        fail("expected '>' after '='");
      case '#': {
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
          int v = 0;
          while (std::isdigit(static_cast<unsigned char>(peek())))
            v = v * 10 + (advance() - '0');
          return {Tok::HashInt, "#", v, line, col};
        }
        std::string word = read_ident();
        if (word == "rs") return {Tok::HashRs, "#rs", 0, line, col};
        if (word == "absurd") return {Tok::HashAbsurd, "#absurd", 0, line, col};
        fail("expected level, 'rs' or 'absurd' after '#'");
      }
      case '$': {
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
          int v = 0;
          while (std::isdigit(static_cast<unsigned char>(peek())))
            v = v * 10 + (advance() - '0');
          return {Tok::DollarInt, "$", v, line, col};
        }
        std::string word = read_ident();
        if (word == "rs") return {Tok::DollarRs, "$rs", 0, line, col};
        fail("expected level or 'rs' after '$'");
      }
      default:
        fail(std::string("unexpected character '") + c + "'");
    }
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

// --- parser -----------------------------------------------------------------

class Parser {
public:
  explicit Parser(const std::string& text) : toks_(Lexer(text).lex()) {}

  const Token& peek() const { return toks_[pos_]; }
  bool at(Tok k) const { return peek().kind == k; }
  Token eat() { return toks_[pos_++]; }
  bool accept(Tok k) {
    if (!at(k)) return false;
    ++pos_;
    return true;
  }
  Token expect(Tok k) {
    if (!at(k))
      fail(std::string("expected ") + describe(k) + ", found " +
           describe(peek().kind));
    return eat();
  }
  bool accept_word(const char* w) {
    if (at(Tok::Ident) && peek().text == w) { ++pos_; return true; }
    return false;
  }
  void expect_word(const char* w) {
    if (!accept_word(w))
      fail(std::string("expected '") + w + "', found " + describe(peek().kind));
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(peek().line, peek().col, msg);
  }
  void expect_end() { expect(Tok::End); }

  // --- formulae -------------------------------------------------------------

  k1::Formula k1_formula() { return k1_disj(); }

  j::Formula j_formula() { return j_imp(); }

private:
  k1::Formula k1_primary() {
    using F = k1::Formula;
    if (accept(Tok::TruePos)) return F::top_pos();
    if (accept(Tok::FalsePos)) return F::bot_pos();
    if (accept(Tok::TrueNeg)) return F::top_neg();
    if (accept(Tok::FalseNeg)) return F::bot_neg();
    if (accept(Tok::Tilde)) return F::neg_atom(expect(Tok::Ident).text);
    if (at(Tok::Ident)) return F::atom(eat().text);
    if (accept(Tok::LParen)) {
      F f = k1_formula();
      expect(Tok::RParen);
      return f;
    }
    fail("expected a formula");
  }
  k1::Formula k1_conj() {
    k1::Formula f = k1_primary();
    for (;;) {
      if (accept(Tok::AndPos)) f = k1::Formula::and_pos(f, k1_primary());
      else if (accept(Tok::AndNeg)) f = k1::Formula::and_neg(f, k1_primary());
      else return f;
    }
  }
  k1::Formula k1_disj() {
    k1::Formula f = k1_conj();
    for (;;) {
      if (accept(Tok::OrPos)) f = k1::Formula::or_pos(f, k1_conj());
      else if (accept(Tok::OrNeg)) f = k1::Formula::or_neg(f, k1_conj());
      else return f;
    }
  }

  j::Formula j_unary() {
    using F = j::Formula;
    if (accept_word("not")) return F::not_(j_unary());
    if (accept(Tok::TruePos)) return F::top_pos();
    if (accept(Tok::FalsePos)) return F::bot_pos();
    if (accept(Tok::TrueNeg)) return F::top_neg();
    if (accept(Tok::FalseNeg)) return F::bot_neg();
    if (accept(Tok::Tilde)) return F::neg_lit(expect(Tok::Ident).text);
    if (at(Tok::Ident)) return F::pos_lit(eat().text);
    if (accept(Tok::LParen)) {
      F f = j_formula();
      expect(Tok::RParen);
      return f;
    }
    fail("expected a formula");
  }
  j::Formula j_conj() {
    j::Formula f = j_unary();
    for (;;) {
      if (accept(Tok::AndPos)) f = j::Formula::and_pos(f, j_unary());
      else if (accept(Tok::AndNeg)) f = j::Formula::and_neg(f, j_unary());
      else return f;
    }
  }
  j::Formula j_disj() {
    j::Formula f = j_conj();
    while (accept(Tok::OrPos)) f = j::Formula::or_(f, j_conj());
    return f;
  }
  j::Formula j_imp() {
    j::Formula f = j_disj();
    if (accept(Tok::Arrow)) return j::Formula::imp(f, j_imp());
    return f;
  }

public:
  // --- dialects: instance-specific pieces of the term grammar ---------------

  struct K1Dialect {
    using Sig = k1::Signature;
    Parser& p;

    k1::Pattern pattern() {
      using P = k1::Pattern;
      if (p.accept_word("pos")) return P::pos();
      if (p.accept_word("neg")) return P::neg();
      if (p.accept_word("unit")) return P::true_();
      if (p.accept_word("inl")) return P::inj(1, pattern());
      if (p.accept_word("inr")) return P::inj(2, pattern());
      if (p.accept(Tok::LParen)) {
        P first = pattern();
        if (p.accept(Tok::Comma)) {
          P second = pattern();
          p.expect(Tok::RParen);
          return P::pair(first, second);
        }
        p.expect(Tok::RParen);
        return first;
      }
      p.fail("expected a pattern");
    }

    Sig::Molecule molecule() {
      const Token& where = p.peek();
      k1::Formula f = p.k1_formula();
      if (!f.positive())
        throw ParseError(where.line, where.col,
                         "molecule must be a positive formula");
      return f;
    }

    Sig::PosLabel pos_label() {
      if (p.at(Tok::HashInt)) return PosLabel{p.eat().value};
      p.fail("expected a positive label '#k'");
    }
    Sig::NegLabel neg_label() {
      if (p.at(Tok::DollarInt)) return NegLabel{p.eat().value};
      p.fail("expected a negative label '$k'");
    }
    Sig::Atom delta_atom() { return p.expect(Tok::Ident).text; }
    bool at_delta_atom() const { return p.at(Tok::Ident); }
  };

  struct JDialect {
    using Sig = j::Signature;
    Parser& p;

    j::Pattern pattern() {
      j::Pattern first = primary();
      if (p.accept(Tok::ConsOp)) return j::Pattern::cons(first, pattern());
      return first;
    }
    j::Pattern primary() {
      using P = j::Pattern;
      if (p.accept_word("pos")) return P::pos_r();
      if (p.accept_word("neg")) return P::neg_r();
      if (p.accept_word("unit")) return P::true_r();
      if (p.accept_word("pos_l")) return P::pos_l();
      if (p.accept_word("neg_l")) return P::neg_l();
      if (p.accept_word("unit_l")) return P::true_l();
      if (p.accept_word("inl")) return P::inj(1, primary());
      if (p.accept_word("inr")) return P::inj(2, primary());
      if (p.accept_word("fst")) return P::proj(1, primary());
      if (p.accept_word("snd")) return P::proj(2, primary());
      if (p.accept_word("switch")) return P::switch_(primary());
      if (p.accept(Tok::LParen)) {
        P first = pattern();
        if (p.accept(Tok::Comma)) {
          P second = pattern();
          p.expect(Tok::RParen);
          return P::pair(first, second);
        }
        p.expect(Tok::RParen);
        return first;
      }
      p.fail("expected a pattern");
    }

    Sig::Molecule molecule() { return j::position(p.j_formula()); }

    Sig::PosLabel pos_label() {
      if (p.at(Tok::HashInt)) return j::PosLabel::stable(p.eat().value);
      if (p.accept(Tok::HashRs)) return j::PosLabel::right_slot();
      if (p.accept(Tok::HashAbsurd)) return j::PosLabel::absurd();
      p.fail("expected a positive label '#k', '#rs' or '#absurd'");
    }
    Sig::NegLabel neg_label() {
      if (p.at(Tok::DollarInt)) return j::NegLabel::stable(p.eat().value);
      if (p.accept(Tok::DollarRs)) return j::NegLabel::right_slot();
      p.fail("expected a negative label '$k' or '$rs'");
    }
    Sig::Atom delta_atom() {
      if (p.accept(Tok::Tilde))
        return j::left(j::Formula::neg_lit(p.expect(Tok::Ident).text));
      if (p.accept(Tok::FalseNeg)) return j::absurd_atom();
      return j::right(j::Formula::pos_lit(p.expect(Tok::Ident).text));
    }
    bool at_delta_atom() const {
      return p.at(Tok::Ident) || p.at(Tok::Tilde) || p.at(Tok::FalseNeg);
    }
  };

  // --- terms (generic over the dialect) --------------------------------------

  template <typename D>
  PositiveTerm<typename D::Sig> positive(D& d) {
    auto pat = d.pattern();
    expect(Tok::Dot);
    return {pat, dec_term(d)};
  }

  template <typename D>
  DecTerm<typename D::Sig> dec_term(D& d) {
    using Sig = typename D::Sig;
    if (at(Tok::HashInt) || at(Tok::HashRs) || at(Tok::HashAbsurd))
      return DecTerm<Sig>::label(d.pos_label());
    if (at(Tok::LBrace)) return DecTerm<Sig>::branches(branches(d));
    if (accept(Tok::LParen)) {
      if (accept(Tok::RParen)) return DecTerm<Sig>::unit();
      DecTerm<Sig> first = dec_term(d);
      expect(Tok::Comma);
      DecTerm<Sig> second = dec_term(d);
      expect(Tok::RParen);
      return DecTerm<Sig>::pair(first, second);
    }
    fail("expected a decomposition term");
  }

  template <typename D>
  BranchMap<typename D::Sig> branches(D& d) {
    BranchMap<typename D::Sig> f;
    expect(Tok::LBrace);
    if (accept(Tok::RBrace)) return f;
    for (;;) {
      const Token& where = peek();
      auto pat = d.pattern();
      expect(Tok::Arrow);
      auto cmd = command(d);
      if (!f.emplace(pat, cmd).second)
        throw ParseError(where.line, where.col, "duplicate branch pattern");
      if (accept(Tok::Semi)) continue;
      expect(Tok::RBrace);
      return f;
    }
  }

  template <typename D>
  Command<typename D::Sig> command(D& d) {
    using Sig = typename D::Sig;
    expect(Tok::Lt);
    if (at(Tok::DollarInt) || at(Tok::DollarRs)) {
      auto x = d.neg_label();
      expect(Tok::Bar);
      auto t = positive(d);
      expect(Tok::Gt);
      return Command<Sig>::select(x, t);
    }
    auto f = branches(d);
    expect(Tok::Colon);
    auto m = d.molecule();
    expect(Tok::Bar);
    auto t = positive(d);
    expect(Tok::Gt);
    return Command<Sig>::cut(std::move(f), std::move(m), std::move(t));
  }

  template <typename D>
  TypingDecomposition<typename D::Sig> delta(D& d) {
    using Sig = typename D::Sig;
    using Delta = TypingDecomposition<Sig>;
    if (accept(Tok::Star)) return Delta::neg_leaf(d.molecule());
    if (accept(Tok::LParen)) {
      if (accept(Tok::RParen)) return Delta::unit();
      Delta first = delta(d);
      expect(Tok::Comma);
      Delta second = delta(d);
      expect(Tok::RParen);
      return Delta::pair(first, second);
    }
    if (d.at_delta_atom()) return Delta::pos_leaf(d.delta_atom());
    fail("expected a decomposition");
  }

  template <typename D>
  Goal<typename D::Sig> goal(D& d) {
    using Sig = typename D::Sig;
    Goal<Sig> g;
    if (accept_word("cmd")) {
      g.kind = Goal<Sig>::Kind::Command;
      if (!accept(Tok::Question)) g.command = command(d);
      return g;
    }
    if (accept_word("pos")) {
      g.kind = Goal<Sig>::Kind::Positive;
      expect(Tok::LParen);
      if (!accept(Tok::Question)) g.pos_term = positive(d);
      expect(Tok::RParen);
      expect(Tok::Colon);
      g.molecule = d.molecule();
      return g;
    }
    if (accept_word("dec")) {
      g.kind = Goal<Sig>::Kind::Dec;
      expect(Tok::LParen);
      if (!accept(Tok::Question)) g.dec_term = dec_term(d);
      expect(Tok::RParen);
      expect(Tok::Colon);
      g.delta = delta(d);
      return g;
    }
    fail("expected a goal: 'cmd', 'pos' or 'dec'");
  }

  // --- contexts ---------------------------------------------------------------

  k1::Signature::Context k1_context() {
    std::vector<std::string> pos;
    std::vector<k1::Formula> neg;
    expect_word("ctx");
    expect(Tok::LBrace);
    if (accept(Tok::RBrace)) return {pos, neg};
    for (;;) {
      if (accept_word("pos")) {
        expect(Tok::Colon);
        do { pos.push_back(expect(Tok::Ident).text); } while (accept(Tok::Comma));
      } else if (accept_word("neg")) {
        expect(Tok::Colon);
        do {
          K1Dialect d{*this};
          neg.push_back(d.molecule());
        } while (accept(Tok::Comma));
      } else {
        fail("expected a context section: 'pos' or 'neg'");
      }
      if (accept(Tok::Semi)) continue;
      expect(Tok::RBrace);
      return {pos, neg};
    }
  }

  j::Context j_context() {
    using Delta = TypingDecomposition<j::Signature>;
    j::Context ctx;
    expect_word("ctx");
    expect(Tok::LBrace);
    if (accept(Tok::RBrace)) return ctx;
    for (;;) {
      if (accept_word("pos")) {
        expect(Tok::Colon);
        do {
          ctx = ctx.extend(Delta::pos_leaf(
              j::right(j::Formula::pos_lit(expect(Tok::Ident).text))));
        } while (accept(Tok::Comma));
      } else if (accept_word("neg")) {
        expect(Tok::Colon);
        do {
          const Token& where = peek();
          j::Formula f = j_formula();
          if (f.positive())
            throw ParseError(where.line, where.col,
                             "stable entries must be negative formulae");
          ctx = ctx.extend(Delta::neg_leaf(j::left(f)));
        } while (accept(Tok::Comma));
      } else if (accept_word("right")) {
        expect(Tok::Colon);
        const Token& where = peek();
        j::Formula f = j_formula();
        if (f.positive()) {
          ctx = ctx.extend(Delta::neg_leaf(j::right(f)));
        } else if (f.kind() == j::Formula::Kind::NegLit ||
                   f.kind() == j::Formula::Kind::BotNeg) {
          ctx = ctx.extend(Delta::pos_leaf(j::left(f)));
        } else {
          throw ParseError(where.line, where.col,
                           "right entry must be a positive formula, a negative "
                           "literal or false-");
        }
      } else {
        fail("expected a context section: 'pos', 'neg' or 'right'");
      }
      if (accept(Tok::Semi)) continue;
      expect(Tok::RBrace);
      return ctx;
    }
  }

private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

SourceJudgment parse_judgment(const std::string& text) {
  Parser p(text);
  p.expect_word("logic");
  SourceJudgment sj;
  if (p.accept_word("k1")) {
    p.expect(Tok::Semi);
    Document<k1::Signature> doc;
    doc.context = p.k1_context();
    p.expect(Tok::Semi);
    Parser::K1Dialect d{p};
    doc.goal = p.goal(d);
    p.expect_end();
    sj.logic = Logic::K1;
    sj.doc = std::move(doc);
    return sj;
  }
  if (p.accept_word("j")) {
    p.expect(Tok::Semi);
    Document<j::Signature> doc;
    doc.context = p.j_context();
    p.expect(Tok::Semi);
    Parser::JDialect d{p};
    doc.goal = p.goal(d);
    p.expect_end();
    sj.logic = Logic::J;
    sj.doc = std::move(doc);
    return sj;
  }
  p.fail("expected logic tag 'k1' or 'j'");
}

k1::Formula parse_k1_formula(const std::string& text) {
  Parser p(text);
  k1::Formula f = p.k1_formula();
  p.expect_end();
  return f;
}

j::Formula parse_j_formula(const std::string& text) {
  Parser p(text);
  j::Formula f = p.j_formula();
  p.expect_end();
  return f;
}

// --- printers ----------------------------------------------------------------

std::string print(const k1::Formula& f) {
  using K = k1::Formula::Kind;
  switch (f.kind()) {
    case K::Atom: return f.name();
    case K::NegAtom: return "~" + f.name();
    case K::TopPos: return "true+";
    case K::BotPos: return "false+";
    case K::TopNeg: return "true-";
    case K::BotNeg: return "false-";
    case K::AndPos: return "(" + print(f.left()) + " &+ " + print(f.right()) + ")";
    case K::OrPos: return "(" + print(f.left()) + " |+ " + print(f.right()) + ")";
    case K::AndNeg: return "(" + print(f.left()) + " &- " + print(f.right()) + ")";
    case K::OrNeg: return "(" + print(f.left()) + " |- " + print(f.right()) + ")";
  }
  return "?";
}

std::string print(const j::Formula& f) {
  using K = j::Formula::Kind;
  switch (f.kind()) {
    case K::PosLit: return f.name();
    case K::NegLit: return "~" + f.name();
    case K::TopPos: return "true+";
    case K::BotPos: return "false+";
    case K::TopNeg: return "true-";
    case K::BotNeg: return "false-";
    case K::AndPos: return "(" + print(f.left()) + " &+ " + print(f.right()) + ")";
    case K::Or: return "(" + print(f.left()) + " |+ " + print(f.right()) + ")";
    case K::AndNeg: return "(" + print(f.left()) + " &- " + print(f.right()) + ")";
    case K::Imp: return "(" + print(f.left()) + " => " + print(f.right()) + ")";
    case K::Not: return "not " + print(f.operand());
  }
  return "?";
}

std::string print(const k1::Pattern& p) {
  using K = k1::Pattern::Kind;
  switch (p.kind()) {
    case K::Pos: return "pos";
    case K::Neg: return "neg";
    case K::True: return "unit";
    case K::Pair: return "(" + print(p.first()) + ", " + print(p.second()) + ")";
    case K::Inj:
      return (p.inj_index() == 1 ? "inl " : "inr ") + print(p.first());
  }
  return "?";
}

std::string print(const j::Pattern& p) {
  using K = j::Pattern::Kind;
  switch (p.kind()) {
    case K::PosR: return "pos";
    case K::NegR: return "neg";
    case K::TrueR: return "unit";
    case K::PosL: return "pos_l";
    case K::NegL: return "neg_l";
    case K::TrueL: return "unit_l";
    case K::Pair: return "(" + print(p.first()) + ", " + print(p.second()) + ")";
    case K::Inj: return (p.index() == 1 ? "inl " : "inr ") + print(p.first());
    case K::Cons: return "(" + print(p.first()) + " :: " + print(p.second()) + ")";
    case K::Proj: return (p.index() == 1 ? "fst " : "snd ") + print(p.first());
    case K::Switch: return "switch " + print(p.first());
  }
  return "?";
}

namespace {

std::string print_pos_label(const PosLabel& x) { return "#" + std::to_string(x.level); }
std::string print_neg_label(const NegLabel& x) { return "$" + std::to_string(x.level); }
std::string print_pos_label(const j::PosLabel& x) {
  switch (x.kind) {
    case j::PosLabel::Kind::Stable: return "#" + std::to_string(x.level);
    case j::PosLabel::Kind::RightSlot: return "#rs";
    case j::PosLabel::Kind::Absurd: return "#absurd";
  }
  return "?";
}
std::string print_neg_label(const j::NegLabel& x) {
  if (x.kind == j::NegLabel::Kind::RightSlot) return "$rs";
  return "$" + std::to_string(x.level);
}

std::string print_molecule(const k1::Formula& m) { return print(m); }
std::string print_molecule(const j::Positioned& m) { return print(m.formula); }

std::string print_delta_atom(const std::string& a) { return a; }
std::string print_delta_atom(const j::Positioned& a) {
  if (a.formula.kind() == j::Formula::Kind::BotNeg) return "false-";
  return print(a.formula);
}

template <typename Sig>
std::string print_term(const DecTerm<Sig>& d);
template <typename Sig>
std::string print_term(const Command<Sig>& c);

template <typename Sig>
std::string print_term(const PositiveTerm<Sig>& t) {
  return print(t.pattern()) + " . " + print_term<Sig>(t.body());
}

template <typename Sig>
std::string print_branches(const BranchMap<Sig>& f) {
  if (f.empty()) return "{}";
  std::string out = "{ ";
  bool first = true;
  for (const auto& [p, c] : f) {
    if (!first) out += " ; ";
    first = false;
    out += print(p) + " => " + print_term<Sig>(c);
  }
  return out + " }";
}

template <typename Sig>
std::string print_term(const DecTerm<Sig>& d) {
  using K = typename DecTerm<Sig>::Kind;
  switch (d.kind()) {
    case K::Label: return print_pos_label(d.pos_label());
    case K::Branches: return print_branches<Sig>(d.branch_map());
    case K::Unit: return "()";
    case K::Pair:
      return "(" + print_term<Sig>(d.first()) + ", " + print_term<Sig>(d.second()) + ")";
  }
  return "?";
}

template <typename Sig>
std::string print_term(const Command<Sig>& c) {
  if (c.kind() == Command<Sig>::Kind::Select)
    return "< " + print_neg_label(c.neg_label()) + " | " +
           print_term<Sig>(c.positive()) + " >";
  return "< " + print_branches<Sig>(c.branch_map()) + " : " +
         print_molecule(c.cut_molecule()) + " | " + print_term<Sig>(c.positive()) +
         " >";
}

template <typename Sig>
std::string print_delta(const TypingDecomposition<Sig>& d) {
  using K = typename TypingDecomposition<Sig>::Kind;
  switch (d.kind()) {
    case K::PosLeaf: return print_delta_atom(d.atom());
    case K::NegLeaf: return "* " + print_molecule(d.molecule());
    case K::Unit: return "()";
    case K::Pair:
      return "(" + print_delta<Sig>(d.left()) + ", " + print_delta<Sig>(d.right()) + ")";
  }
  return "?";
}

template <typename Sig>
std::string print_goal(const Goal<Sig>& g) {
  using Kind = typename Goal<Sig>::Kind;
  switch (g.kind) {
    case Kind::Command:
      return "cmd " + (g.command ? print_term<Sig>(*g.command) : std::string("?"));
    case Kind::Positive:
      return "pos ( " +
             (g.pos_term ? print_term<Sig>(*g.pos_term) : std::string("?")) +
             " ) : " + print_molecule(*g.molecule);
    case Kind::Dec:
      return "dec ( " +
             (g.dec_term ? print_term<Sig>(*g.dec_term) : std::string("?")) +
             " ) : " + print_delta<Sig>(*g.delta);
  }
  return "?";
}

std::string print_context(const k1::Signature::Context& ctx) {
  std::string out = "ctx {";
  bool any = false;
  if (!ctx.pos_store().empty()) {
    out += " pos:";
    for (std::size_t i = 0; i < ctx.pos_store().size(); ++i)
      out += (i ? ", " : " ") + ctx.pos_store()[i];
    any = true;
  }
  if (!ctx.neg_store().empty()) {
    out += any ? "; neg:" : " neg:";
    for (std::size_t i = 0; i < ctx.neg_store().size(); ++i)
      out += (i ? ", " : " ") + print(ctx.neg_store()[i]);
    any = true;
  }
  out += any ? " }" : "}";
  return out;
}

std::string print_context(const j::Context& ctx) {
  std::string out = "ctx {";
  bool any = false;
  if (!ctx.pos_stable().empty()) {
    out += " pos:";
    for (std::size_t i = 0; i < ctx.pos_stable().size(); ++i)
      out += (i ? ", " : " ") + ctx.pos_stable()[i].formula.name();
    any = true;
  }
  if (!ctx.neg_stable().empty()) {
    out += any ? "; neg:" : " neg:";
    for (std::size_t i = 0; i < ctx.neg_stable().size(); ++i)
      out += (i ? ", " : " ") + print(ctx.neg_stable()[i].formula);
    any = true;
  }
  if (ctx.right_atom() || ctx.right_mol()) {
    out += any ? "; right: " : " right: ";
    if (ctx.right_atom()) out += print_delta_atom(*ctx.right_atom());
    else out += print(ctx.right_mol()->formula);
    any = true;
  }
  out += any ? " }" : "}";
  return out;
}

}  // namespace

std::string print(const PositiveTerm<k1::Signature>& t) { return print_term<k1::Signature>(t); }
std::string print(const PositiveTerm<j::Signature>& t) { return print_term<j::Signature>(t); }
std::string print(const DecTerm<k1::Signature>& d) { return print_term<k1::Signature>(d); }
std::string print(const DecTerm<j::Signature>& d) { return print_term<j::Signature>(d); }
std::string print(const Command<k1::Signature>& c) { return print_term<k1::Signature>(c); }
std::string print(const Command<j::Signature>& c) { return print_term<j::Signature>(c); }
std::string print(const TypingDecomposition<k1::Signature>& d) { return print_delta<k1::Signature>(d); }
std::string print(const TypingDecomposition<j::Signature>& d) { return print_delta<j::Signature>(d); }

std::string print_judgment(const SourceJudgment& sj) {
  if (sj.logic == Logic::K1) {
    const auto& doc = sj.as_k1();
    return "logic k1; " + print_context(doc.context) + "; " +
           print_goal(doc.goal) + "\n";
  }
  const auto& doc = sj.as_j();
  return "logic j; " + print_context(doc.context) + "; " + print_goal(doc.goal) +
         "\n";
}

}  // namespace focal::syntax
