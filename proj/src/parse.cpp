#include "fo3ra/parse.hpp"

#include <cctype>
#include <sstream>

#include "fo3ra/check.hpp"

namespace fo3ra {

std::string SourceError::format(int line, int column, const std::string& message,
                                const std::vector<std::string>& expected) {
  std::ostringstream os;
  os << line << ":" << column << ": " << message;
  if (!expected.empty()) {
    os << " (expected ";
    for (size_t i = 0; i < expected.size(); ++i) {
      if (i) os << " or ";
      os << expected[i];
    }
    os << ")";
  }
  return os.str();
}

namespace {

enum class Tok {
  Ident, LParen, RParen, LBracket, RBracket, Comma, Dot, Colon,
  Semi, Pipe, Amp, Tilde, Plus, Caret, Eq, Arrow, RuleArrow, End,
};

struct Token {
  Tok kind;
  std::string text;
  int line, col;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  const Token& peek() const { return tok_; }

  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

  [[noreturn]] void fail(const std::string& msg, std::vector<std::string> expected = {}) const {
    throw SourceError(tok_.line, tok_.col, msg, std::move(expected));
  }

  Token expect(Tok kind, const std::string& what) {
    if (tok_.kind != kind) fail("unexpected `" + describe(tok_) + "`", {what});
    return take();
  }

  static std::string describe(const Token& t) {
    return t.kind == Tok::End ? "end of input" : t.text;
  }

 private:
  void advance() {
    skip_ws();
    tok_ = {Tok::End, "", line_, col_};
    if (pos_ >= text_.size()) return;
    int line = line_, col = col_;
    char c = text_[pos_];
    auto single = [&](Tok k) {
      tok_ = {k, std::string(1, c), line, col};
      bump();
    };
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string word;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        word += text_[pos_];
        bump();
      }
      tok_ = {Tok::Ident, word, line, col};
      return;
    }
    switch (c) {
      case '(': single(Tok::LParen); return;
      case ')': single(Tok::RParen); return;
      case '[': single(Tok::LBracket); return;
      case ']': single(Tok::RBracket); return;
      case ',': single(Tok::Comma); return;
      case '.': single(Tok::Dot); return;
      case ':': single(Tok::Colon); return;
      case ';': single(Tok::Semi); return;
      case '|': single(Tok::Pipe); return;
      case '&': single(Tok::Amp); return;
      case '~': single(Tok::Tilde); return;
      case '+': single(Tok::Plus); return;
      case '^': single(Tok::Caret); return;
      case '=':
        if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
          tok_ = {Tok::RuleArrow, "=>", line, col};
          bump();
          bump();
        } else {
          single(Tok::Eq);
        }
        return;
      case '-':
        if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
          tok_ = {Tok::Arrow, "->", line, col};
          bump();
          bump();
        } else {
          throw SourceError(line, col, "stray `-`");
        }
        return;
      default:
        throw SourceError(line, col, std::string("unexpected character `") + c + "`");
    }
  }

  void skip_ws() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') bump();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        bump();
      } else {
        break;
      }
    }
  }

  void bump() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  const std::string& text_;
  size_t pos_ = 0;
  int line_ = 1, col_ = 1;
  Token tok_;
};

bool is_keyword(const std::string& s) {
  return s == "exists" || s == "forall" || s == "true" || s == "false" ||
         s == "top" || s == "bot" || s == "id" || s == "sort" || s == "pred";
}

// --------------------------------------------------------------------------
// FO3

class Fo3Parser {
 public:
  Fo3Parser(Lexer& lex, Signature& sig, Mode mode) : lex_(lex), sig_(sig), mode_(mode) {}

  FoPtr formula() {
    if (lex_.peek().kind == Tok::Ident &&
        (lex_.peek().text == "exists" || lex_.peek().text == "forall")) {
      return quantifier();
    }
    return disjunction();
  }

 private:
  FoPtr quantifier() {
    Token q = lex_.take();
    Token var = lex_.expect(Tok::Ident, "variable");
    if (is_keyword(var.text))
      throw SourceError(var.line, var.col, "`" + var.text + "` cannot be a variable name");
    Sort sort = kUniverse;
    if (lex_.peek().kind == Tok::Colon) {
      lex_.take();
      sort = lex_.expect(Tok::Ident, "sort").text;
    } else if (mode_ == Mode::Het) {
      lex_.fail("quantifier needs a sort annotation in heterogeneous mode", {":"});
    }
    lex_.expect(Tok::Dot, ".");
    FoPtr body = formula();
    return q.text == "exists" ? fo_exists(var.text, sort, body) : fo_forall(var.text, sort, body);
  }

  FoPtr disjunction() {
    FoPtr f = conjunction();
    while (lex_.peek().kind == Tok::Pipe) {
      lex_.take();
      f = fo_or(f, conjunction());
    }
    return f;
  }

  FoPtr conjunction() {
    FoPtr f = negation();
    while (lex_.peek().kind == Tok::Amp) {
      lex_.take();
      f = fo_and(f, negation());
    }
    return f;
  }

  FoPtr negation() {
    if (lex_.peek().kind == Tok::Tilde) {
      lex_.take();
      return fo_not(negation());
    }
    return atom();
  }

  FoPtr atom() {
    const Token& t = lex_.peek();
    if (t.kind == Tok::LParen) {
      lex_.take();
      FoPtr f = formula();
      lex_.expect(Tok::RParen, ")");
      return f;
    }
    if (t.kind != Tok::Ident) lex_.fail("expected a formula", {"atom", "(", "~", "true", "false"});
    Token head = lex_.take();
    if (head.text == "true") return fo_truth();
    if (head.text == "false") return fo_falsehood();
    if (head.text == "exists" || head.text == "forall")
      throw SourceError(head.line, head.col, "quantifier needs parentheses here");
    if (lex_.peek().kind == Tok::LParen) {
      lex_.take();
      Token v1 = lex_.expect(Tok::Ident, "variable");
      lex_.expect(Tok::Comma, ",");
      Token v2 = lex_.expect(Tok::Ident, "variable");
      lex_.expect(Tok::RParen, ")");
      if (mode_ == Mode::Hom) sig_.ensure_pred_hom(head.text);
      return fo_atom(head.text, v1.text, v2.text);
    }
    if (lex_.peek().kind == Tok::Eq) {
      lex_.take();
      Token v2 = lex_.expect(Tok::Ident, "variable");
      return fo_equals(head.text, v2.text);
    }
    lex_.fail("expected `(` or `=` after `" + head.text + "`", {"(", "="});
  }

  Lexer& lex_;
  Signature& sig_;
  Mode mode_;
};

// --------------------------------------------------------------------------
// RA

class RaParser {
 public:
  RaParser(Lexer& lex, Signature* sig, Mode mode, bool pattern)
      : lex_(lex), sig_(sig), mode_(mode), pattern_(pattern) {}

  RaPtr expr() { return parse_union(); }

 private:
  RaPtr parse_union() {
    RaPtr e = parse_inter();
    while (lex_.peek().kind == Tok::Pipe) {
      lex_.take();
      e = ra_union(e, parse_inter());
    }
    return e;
  }

  RaPtr parse_inter() {
    RaPtr e = parse_dagger();
    while (lex_.peek().kind == Tok::Amp) {
      lex_.take();
      e = ra_inter(e, parse_dagger());
    }
    return e;
  }

  RaPtr parse_dagger() {
    RaPtr e = parse_compose();
    while (lex_.peek().kind == Tok::Plus) {
      lex_.take();
      e = ra_dagger(e, parse_compose());
    }
    return e;
  }

  RaPtr parse_compose() {
    RaPtr e = unary();
    while (lex_.peek().kind == Tok::Semi) {
      lex_.take();
      e = ra_compose(e, unary());
    }
    return e;
  }

  RaPtr unary() {
    if (lex_.peek().kind == Tok::Tilde) {
      lex_.take();
      return ra_complement(unary());
    }
    return postfix();
  }

  RaPtr postfix() {
    RaPtr e = primary();
    while (lex_.peek().kind == Tok::Caret) {
      lex_.take();
      e = ra_converse(e);
    }
    return e;
  }

  RaPtr primary() {
    const Token& t = lex_.peek();
    if (t.kind == Tok::LParen) {
      lex_.take();
      RaPtr e = expr();
      lex_.expect(Tok::RParen, ")");
      return e;
    }
    if (t.kind != Tok::Ident) lex_.fail("expected an expression", {"atom", "top", "bot", "id", "(", "~"});
    Token head = lex_.take();
    bool constant = head.text == "top" || head.text == "bot" || head.text == "id";
    if (lex_.peek().kind == Tok::LBracket) {
      lex_.take();
      Sort t1 = sort_name();
      Sort t2 = t1;
      if (lex_.peek().kind == Tok::Comma) {
        lex_.take();
        t2 = sort_name();
      } else if (head.text != "id") {
        lex_.fail("`" + head.text + "` takes two sorts", {","});
      }
      lex_.expect(Tok::RBracket, "]");
      return make_leaf(head, t1, t2);
    }
    // Bare leaves: homogeneous shorthand, or metavariables in patterns.
    if (mode_ == Mode::Hom || (pattern_ && !constant)) {
      return make_leaf(head, kUniverse, kUniverse);
    }
    throw SourceError(head.line, head.col,
                      "`" + head.text + "` needs a type annotation in heterogeneous mode");
  }

  Sort sort_name() {
    Token s = lex_.expect(Tok::Ident, "sort");
    if (pattern_ && mode_ == Mode::Het && (s.text.size() != 1 || s.text[0] < 'P' || s.text[0] > 'S'))
      throw SourceError(s.line, s.col, "sort variables must be one of P, Q, R, S");
    return s.text;
  }

  RaPtr make_leaf(const Token& head, const Sort& t1, const Sort& t2) {
    if (head.text == "top") return ra_top(t1, t2);
    if (head.text == "bot") return ra_bot(t1, t2);
    if (head.text == "id") return ra_id2(t1, t2);
    if (is_keyword(head.text))
      throw SourceError(head.line, head.col, "`" + head.text + "` cannot be a predicate name");
    if (pattern_) {
      if (head.text.size() != 1 || !std::isupper(static_cast<unsigned char>(head.text[0])))
        throw SourceError(head.line, head.col,
                          "pattern metavariables must be single uppercase letters");
      return ra_atom(head.text, t1, t2, /*meta=*/true);
    }
    if (mode_ == Mode::Hom) {
      sig_->ensure_pred_hom(head.text);
      return ra_atom(head.text, kUniverse, kUniverse);
    }
    return ra_atom(head.text, t1, t2);
  }

  Lexer& lex_;
  Signature* sig_;
  Mode mode_;
  bool pattern_;
};

}  // namespace

FoPtr parse_fo3(const std::string& text, Signature& sig, Mode mode, bool strict) {
  Lexer lex(text);
  Fo3Parser p(lex, sig, mode);
  FoPtr f = p.formula();
  if (lex.peek().kind != Tok::End) lex.fail("trailing input after formula");
  if (strict) require_closed_and_typed(f, sig);
  return f;
}

RaPtr parse_ra(const std::string& text, Signature& sig, Mode mode, bool strict) {
  Lexer lex(text);
  RaParser p(lex, &sig, mode, /*pattern=*/false);
  RaPtr e = p.expr();
  if (lex.peek().kind != Tok::End) lex.fail("trailing input after expression");
  if (strict) require_well_typed(e, sig);
  return e;
}

RaPtr parse_ra_pattern(const std::string& text, Mode mode) {
  Lexer lex(text);
  RaParser p(lex, nullptr, mode, /*pattern=*/true);
  RaPtr e = p.expr();
  if (lex.peek().kind != Tok::End) lex.fail("trailing input after pattern");
  return e;
}

Signature parse_signature(const std::string& text) {
  Signature sig;
  Lexer lex(text);
  while (lex.peek().kind != Tok::End) {
    Token head = lex.expect(Tok::Ident, "sort or pred");
    if (head.text == "sort") {
      Token name = lex.expect(Tok::Ident, "sort name");
      try {
        sig.add_sort(name.text);
      } catch (const TypeError& e) {
        throw SourceError(name.line, name.col, e.what());
      }
    } else if (head.text == "pred") {
      Token name = lex.expect(Tok::Ident, "predicate name");
      lex.expect(Tok::Colon, ":");
      Token d1 = lex.expect(Tok::Ident, "sort");
      lex.expect(Tok::Arrow, "->");
      Token d2 = lex.expect(Tok::Ident, "sort");
      try {
        sig.add_pred(name.text, d1.text, d2.text);
      } catch (const TypeError& e) {
        throw SourceError(name.line, name.col, e.what());
      }
    } else {
      throw SourceError(head.line, head.col, "expected `sort` or `pred`, got `" + head.text + "`");
    }
  }
  return sig;
}

}  // namespace fo3ra
