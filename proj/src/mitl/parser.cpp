#include "mitlplan/mitl/parser.hpp"

#include <cctype>
#include <optional>
#include <vector>

namespace mitlplan::mitl {

ParseError::ParseError(Kind kind, int line, int column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + message),
      kind_(kind), line_(line), column_(column) {}

namespace {

enum class Tok {
  Ident,
  Number,
  Not,
  And,
  Or,
  Arrow,
  LParen,
  RParen,
  LBracket,
  RBracket,
  Comma,
  Le,
  Lt,
  Ge,
  Gt,
  End
};

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  int line = 1;
  int col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    const int tl = line;
    const int tc = col;
    auto emit = [&](Tok kind, std::size_t len) {
      out.push_back({kind, std::string(src.substr(i, len)), tl, tc});
      advance(len);
    };
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_'))
        ++j;
      emit(Tok::Ident, j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j])))
        ++j;
      if (j + 1 < src.size() && (src[j] == '.' || src[j] == '/') &&
          std::isdigit(static_cast<unsigned char>(src[j + 1]))) {
        ++j;
        while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j])))
          ++j;
      }
      emit(Tok::Number, j - i);
    } else if (src.substr(i, 2) == "->") {
      emit(Tok::Arrow, 2);
    } else if (src.substr(i, 2) == "<=") {
      emit(Tok::Le, 2);
    } else if (src.substr(i, 2) == ">=") {
      emit(Tok::Ge, 2);
    } else {
      switch (c) {
      case '!':
        emit(Tok::Not, 1);
        break;
      case '&':
        emit(Tok::And, 1);
        break;
      case '|':
        emit(Tok::Or, 1);
        break;
      case '(':
        emit(Tok::LParen, 1);
        break;
      case ')':
        emit(Tok::RParen, 1);
        break;
      case '[':
        emit(Tok::LBracket, 1);
        break;
      case ']':
        emit(Tok::RBracket, 1);
        break;
      case ',':
        emit(Tok::Comma, 1);
        break;
      case '<':
        emit(Tok::Lt, 1);
        break;
      case '>':
        emit(Tok::Gt, 1);
        break;
      default:
        throw ParseError(ParseError::Kind::UnknownToken, tl, tc,
                         std::string("unknown token '") + c + "'");
      }
    }
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

bool is_keyword(const std::string& s) {
  return s == "X" || s == "F" || s == "G" || s == "U" || s == "true" || s == "false" || s == "inf";
}

class Parser {
public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  Formula parse() {
    Formula f = implication();
    if (peek().kind != Tok::End)
      fail(peek(), "unexpected '" + peek().text + "' after formula");
    return f;
  }

private:
  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  const Token& take() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  bool accept(Tok kind) {
    if (peek().kind != kind)
      return false;
    ++pos_;
    return true;
  }
  bool at_ident(const char* word) const {
    return peek().kind == Tok::Ident && peek().text == word;
  }

  [[noreturn]] void fail(const Token& at, const std::string& message) const {
    throw ParseError(ParseError::Kind::Syntax, at.line, at.column, message);
  }

  const Token& expect(Tok kind, const char* what) {
    if (peek().kind != kind) {
      const Token& t = peek();
      fail(t, std::string("expected ") + what + (t.kind == Tok::End ? " at end of input"
                                                                     : ", found '" + t.text + "'"));
    }
    return take();
  }

  Formula implication() {
    Formula lhs = disjunction();
    if (accept(Tok::Arrow))
      return Formula::implication(lhs, implication());
    return lhs;
  }

  Formula disjunction() {
    Formula f = conjunction();
    while (accept(Tok::Or))
      f = Formula::disjunction(f, conjunction());
    return f;
  }

  Formula conjunction() {
    Formula f = until();
    while (accept(Tok::And))
      f = Formula::conjunction(f, until());
    return f;
  }

  Formula until() {
    Formula lhs = unary();
    if (at_ident("U")) {
      take();
      TimeInterval iv = optional_interval();
      return Formula::until(iv, lhs, until());
    }
    return lhs;
  }

  Formula unary() {
    if (accept(Tok::Not))
      return Formula::negation(unary());
    if (at_ident("X") || at_ident("F") || at_ident("G")) {
      const char op = take().text[0];
      TimeInterval iv = optional_interval();
      Formula operand = unary();
      if (op == 'X')
        return Formula::next(iv, operand);
      if (op == 'F')
        return Formula::eventually(iv, operand);
      return Formula::always(iv, operand);
    }
    return primary();
  }

  Formula primary() {
    const Token& t = peek();
    if (t.kind == Tok::LParen) {
      take();
      Formula f = implication();
      expect(Tok::RParen, "')'");
      return f;
    }
    if (t.kind == Tok::Ident) {
      if (t.text == "true") {
        take();
        return Formula::truth();
      }
      if (t.text == "false") {
        take();
        return Formula::falsity();
      }
      if (is_keyword(t.text))
        fail(t, "keyword '" + t.text + "' cannot be used as an atom");
      return Formula::atom(take().text);
    }
    if (t.kind == Tok::End)
      fail(t, "unexpected end of input");
    fail(t, "unexpected '" + t.text + "'");
  }

  // An interval starts with '[' or with '(' NUMBER ','; a '(' followed by
  // anything else opens a parenthesized operand.
  bool interval_ahead() const {
    if (peek().kind == Tok::LBracket)
      return true;
    return peek().kind == Tok::LParen && peek(1).kind == Tok::Number && peek(2).kind == Tok::Comma;
  }

  Rational number(const Token& t) {
    try {
      return Rational::parse(t.text);
    } catch (const std::exception& e) {
      fail(t, e.what());
    }
  }

  TimeInterval optional_interval() {
    if (!interval_ahead())
      return TimeInterval::unbounded();
    const Token& open = take();
    const bool lower_closed = open.kind == Tok::LBracket;
    std::string text = open.text;

    Rational lower(0);
    std::optional<Rational> upper;
    bool upper_closed = false;
    bool lower_closed_final = lower_closed;

    const Tok rel = peek().kind;
    if (lower_closed && (rel == Tok::Le || rel == Tok::Lt || rel == Tok::Ge || rel == Tok::Gt)) {
      text += take().text;
      const Token& n = expect(Tok::Number, "a number");
      text += n.text;
      const Rational bound = number(n);
      expect(Tok::RBracket, "']'");
      text += "]";
      switch (rel) {
      case Tok::Le:
        upper = bound;
        upper_closed = true;
        break;
      case Tok::Lt:
        upper = bound;
        break;
      case Tok::Ge:
        lower = bound;
        break;
      default:
        lower = bound;
        lower_closed_final = false;
        break;
      }
      return checked(open, text, lower, lower_closed_final, upper, upper_closed);
    }

    const Token& lo = expect(Tok::Number, "interval lower bound");
    text += lo.text;
    lower = number(lo);
    expect(Tok::Comma, "','");
    text += ",";
    if (at_ident("inf")) {
      take();
      text += "inf";
      const Token& close = take();
      if (close.kind != Tok::RParen && close.kind != Tok::RBracket)
        fail(close, "expected ')' after inf");
      text += close.text;
    } else {
      const Token& hi = expect(Tok::Number, "interval upper bound");
      text += hi.text;
      upper = number(hi);
      const Token& close = take();
      if (close.kind == Tok::RBracket)
        upper_closed = true;
      else if (close.kind != Tok::RParen)
        fail(close, "expected ']' or ')' to close interval");
      text += close.text;
    }
    return checked(open, text, lower, lower_closed, upper, upper_closed);
  }

  TimeInterval checked(const Token& open, const std::string& text, Rational lower, bool lower_closed,
                       std::optional<Rational> upper, bool upper_closed) {
    if (upper) {
      if (*upper == lower && lower_closed && upper_closed)
        throw ParseError(ParseError::Kind::PunctualInterval, open.line, open.column,
                         "punctual interval " + text + " is not allowed in MITL");
      if (*upper < lower)
        throw ParseError(ParseError::Kind::InvalidInterval, open.line, open.column,
                         "interval " + text + " has lower bound greater than upper bound");
      if (*upper == lower)
        throw ParseError(ParseError::Kind::InvalidInterval, open.line, open.column,
                         "interval " + text + " is empty");
    }
    try {
      return TimeInterval::make(lower, lower_closed, upper, upper_closed);
    } catch (const IntervalError& e) {
      throw ParseError(ParseError::Kind::InvalidInterval, open.line, open.column, e.what());
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

} // namespace

Formula parse_formula(std::string_view text) { return Parser(tokenize(text)).parse(); }

} // namespace mitlplan::mitl
