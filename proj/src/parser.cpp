#include <cctype>
#include <charconv>
#include <optional>

#include "stlmon/formula.hpp"

namespace stlmon {

namespace {

enum class Tok {
  Ident,
  Number,
  Variable,
  LParen,
  RParen,
  LBracket,
  RBracket,
  Comma,
  AndOp,
  OrOp,
  NotOp,
  Arrow,
  Minus,
  Plus,
  Cmp,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
  Comparison cmp = Comparison::LT;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::End: return "end of input";
    case Tok::Number: return "number '" + t.text + "'";
    case Tok::Ident: return "identifier '" + t.text + "'";
    case Tok::Variable: return "variable '$" + t.text + "'";
    default: return "'" + t.text + "'";
  }
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      Token t{Tok::End, "", line_, column_};
      if (pos_ >= text_.size()) {
        out.push_back(t);
        return out;
      }
      char c = text_[pos_];
      auto two = text_.substr(pos_, 2);
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        t.kind = Tok::Ident;
        t.text = take_word();
      } else if (c == '$') {
        advance(1);
        t.kind = Tok::Variable;
        t.text = take_word();
        if (t.text.empty()) {
          throw SyntaxError("expected variable name after '$'", t.line, t.column);
        }
      } else if (std::isdigit(static_cast<unsigned char>(c)) ||
                 (c == '.' && pos_ + 1 < text_.size() &&
                  std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])))) {
        t.kind = Tok::Number;
        t.text = take_number();
      } else if (two == "&&") {
        t = simple(Tok::AndOp, 2, t);
      } else if (two == "||") {
        t = simple(Tok::OrOp, 2, t);
      } else if (two == "->") {
        t = simple(Tok::Arrow, 2, t);
      } else if (two == "<=" || two == ">=" || two == "==" || two == "!=") {
        t = simple(Tok::Cmp, 2, t);
        t.cmp = two == "<=" ? Comparison::LE
                : two == ">=" ? Comparison::GE
                : two == "==" ? Comparison::EQ
                              : Comparison::NE;
      } else if (c == '<' || c == '>') {
        t = simple(Tok::Cmp, 1, t);
        t.cmp = c == '<' ? Comparison::LT : Comparison::GT;
      } else if (c == '!') {
        t = simple(Tok::NotOp, 1, t);
      } else if (c == '(') {
        t = simple(Tok::LParen, 1, t);
      } else if (c == ')') {
        t = simple(Tok::RParen, 1, t);
      } else if (c == '[') {
        t = simple(Tok::LBracket, 1, t);
      } else if (c == ']') {
        t = simple(Tok::RBracket, 1, t);
      } else if (c == ',') {
        t = simple(Tok::Comma, 1, t);
      } else if (c == '-') {
        t = simple(Tok::Minus, 1, t);
      } else if (c == '+') {
        t = simple(Tok::Plus, 1, t);
      } else {
        throw SyntaxError(std::string("unexpected character '") + c + "'", line_, column_);
      }
      out.push_back(std::move(t));
    }
  }

 private:
  Token simple(Tok kind, std::size_t len, Token t) {
    t.kind = kind;
    t.text = std::string(text_.substr(pos_, len));
    advance(len);
    return t;
  }

  void advance(std::size_t n) {
    for (std::size_t i = 0; i < n && pos_ < text_.size(); ++i, ++pos_) {
      if (text_[pos_] == '\n') {
        ++line_;
        column_ = 1;
      } else {
        ++column_;
      }
    }
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      advance(1);
    }
  }

  std::string take_word() {
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      advance(1);
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string take_number() {
    std::size_t start = pos_;
    auto digits = [&] {
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        advance(1);
      }
    };
    digits();
    if (pos_ < text_.size() && text_[pos_] == '.') {
      advance(1);
      digits();
    }
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      std::size_t save = pos_, save_col = column_;
      advance(1);
      if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) advance(1);
      if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        digits();
      } else {
        pos_ = save;
        column_ = save_col;
      }
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

class Parser {
 public:
  Parser(std::vector<Token> tokens, const FormulaEnvironment& env)
      : tokens_(std::move(tokens)), env_(env) {}

  Formula run() {
    Formula f = implication();
    if (peek().kind != Tok::End) fail("expected end of input");
    return f;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  Token next() { return tokens_[pos_ == tokens_.size() - 1 ? pos_ : pos_++]; }

  bool peek_word(std::string_view a, std::string_view b = {}) const {
    const auto& t = peek();
    return t.kind == Tok::Ident && (t.text == a || (!b.empty() && t.text == b));
  }

  [[noreturn]] void fail(const std::string& expected) const {
    const auto& t = peek();
    throw SyntaxError(expected + ", found " + describe(t), t.line, t.column);
  }

  Token expect(Tok kind, const char* what) {
    if (peek().kind != kind) fail(std::string("expected ") + what);
    return next();
  }

  Formula implication() {
    Formula left = disjunction();
    if (peek().kind == Tok::Arrow || peek_word("implies")) {
      next();
      return Formula::implication(std::move(left), implication());
    }
    return left;
  }

  Formula disjunction() {
    Formula left = conjunction();
    while (peek().kind == Tok::OrOp || peek_word("or")) {
      next();
      left = Formula::disjunction(std::move(left), conjunction());
    }
    return left;
  }

  Formula conjunction() {
    Formula left = unary();
    while (peek().kind == Tok::AndOp || peek_word("and")) {
      next();
      left = Formula::conjunction(std::move(left), unary());
    }
    return left;
  }

  bool at_prefix() const {
    return peek().kind == Tok::NotOp || peek_word("not") || peek_word("G", "globally") ||
           peek_word("F", "eventually");
  }

  Formula prefixed() {
    if (peek().kind == Tok::NotOp || peek_word("not")) {
      next();
      return Formula::negation(unary());
    }
    if (peek_word("G", "globally")) {
      next();
      auto i = interval();
      return Formula::globally(i, unary());
    }
    next();
    auto i = interval();
    return Formula::eventually(i, unary());
  }

  Formula unary() {
    if (at_prefix()) return prefixed();
    return until();
  }

  Formula until() {
    Formula left = primary();
    while (peek_word("U", "until")) {
      next();
      auto i = interval();
      Formula right = at_prefix() ? prefixed() : primary();
      left = Formula::until(i, std::move(left), std::move(right));
    }
    return left;
  }

  double number_literal(bool allow_sign) {
    bool negative = false;
    if (allow_sign && (peek().kind == Tok::Minus || peek().kind == Tok::Plus)) {
      negative = next().kind == Tok::Minus;
    }
    auto tok = expect(Tok::Number, "number");
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), value);
    if (ec != std::errc() || ptr != tok.text.data() + tok.text.size()) {
      throw SyntaxError("malformed number '" + tok.text + "'", tok.line, tok.column);
    }
    return negative ? -value : value;
  }

  TimeInterval interval() {
    expect(Tok::LBracket, "'[' opening a temporal interval");
    double lo = number_literal(true);
    expect(Tok::Comma, "',' between interval bounds");
    double hi = number_literal(true);
    expect(Tok::RBracket, "']' closing a temporal interval");
    return TimeInterval::checked(lo, hi);
  }

  Formula primary() {
    const Token& t = peek();
    if (t.kind == Tok::LParen) {
      next();
      Formula f = implication();
      expect(Tok::RParen, "')'");
      return f;
    }
    if (peek_word("true")) {
      next();
      return Formula::truth();
    }
    if (t.kind == Tok::Ident && !is_reserved_word(t.text)) {
      Token name = next();
      if (const Formula* sub = env_.find(name.text)) {
        if (peek().kind == Tok::Cmp) {
          throw SyntaxError("'" + name.text + "' names a formula and cannot be compared",
                            name.line, name.column);
        }
        return *sub;
      }
      if (peek().kind != Tok::Cmp) {
        fail("expected comparison operator after signal '" + name.text + "'");
      }
      Comparison cmp = next().cmp;
      if (peek().kind == Tok::Variable) {
        return Formula::atom(name.text, cmp, Threshold::variable(next().text));
      }
      if (peek().kind != Tok::Number && peek().kind != Tok::Minus && peek().kind != Tok::Plus) {
        fail("expected number or $variable");
      }
      return Formula::atom(name.text, cmp, Threshold::constant(number_literal(true)));
    }
    fail("expected formula");
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  const FormulaEnvironment& env_;
};

}  // namespace

Formula parse_formula(std::string_view text, const FormulaEnvironment& env) {
  Formula f = Parser(Lexer(text).run(), env).run();
  if (!env.empty()) {
    for (const auto& s : signal_names(f)) {
      if (env.find(s)) {
        throw InvalidFormula("'" + s + "' is both a signal and a named formula");
      }
    }
  }
  return f;
}

}  // namespace stlmon
