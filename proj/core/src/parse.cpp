#include "algcurv/parse.hpp"

#include <cctype>
#include <optional>

#include "algcurv/error.hpp"

namespace algcurv {

namespace {

enum class Tok { Number, Ident, Prime, Caret, LParen, RParen, Plus, Minus, Star, Slash, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  std::size_t offset = 0;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) { advance(); }

  const Token& peek() const { return tok_; }

  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    tok_ = Token{Tok::End, "", pos_};
    if (pos_ >= src_.size()) return;
    const char c = src_[pos_];
    const auto is_alpha = [](char ch) { return std::isalpha(static_cast<unsigned char>(ch)) || ch == '_'; };
    const auto is_digit = [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)) != 0; };
    if (is_digit(c)) {
      std::size_t end = pos_;
      while (end < src_.size() && is_digit(src_[end])) ++end;
      tok_ = Token{Tok::Number, std::string(src_.substr(pos_, end - pos_)), pos_};
      pos_ = end;
      return;
    }
    if (is_alpha(c)) {
      std::size_t end = pos_;
      while (end < src_.size() && (is_alpha(src_[end]) || is_digit(src_[end]))) ++end;
      tok_ = Token{Tok::Ident, std::string(src_.substr(pos_, end - pos_)), pos_};
      pos_ = end;
      return;
    }
    Tok kind;
    switch (c) {
      case '\'': kind = Tok::Prime; break;
      case '^': kind = Tok::Caret; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case '+': kind = Tok::Plus; break;
      case '-': kind = Tok::Minus; break;
      case '*': kind = Tok::Star; break;
      case '/': kind = Tok::Slash; break;
      default:
        throw SyntaxError(std::string("unexpected character '") + c + "'", pos_);
    }
    tok_ = Token{kind, std::string(1, c), pos_};
    ++pos_;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  Token tok_;
};

std::uint32_t parse_natural(const Token& t, std::uint32_t cap, const char* what) {
  if (t.text.size() > 9 || std::stoul(t.text) > cap)
    throw SyntaxError(std::string(what) + " " + t.text + " exceeds the limit " + std::to_string(cap), t.offset);
  return static_cast<std::uint32_t>(std::stoul(t.text));
}

// Builder supplies: value type V, constant(Rational), name(token, lexer),
// divide(V, V, offset).
template <class Builder>
class Parser {
 public:
  using V = typename Builder::Value;

  Parser(std::string_view src, Builder& b) : lex_(src), b_(b) {}

  V parse() {
    V v = expr();
    if (lex_.peek().kind != Tok::End) fail("unexpected '" + lex_.peek().text + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(msg, lex_.peek().offset); }

  V expr() {
    V v = term();
    while (lex_.peek().kind == Tok::Plus || lex_.peek().kind == Tok::Minus) {
      const bool plus = lex_.take().kind == Tok::Plus;
      V r = term();
      v = plus ? v + r : v - r;
    }
    return v;
  }

  V term() {
    V v = unary();
    while (lex_.peek().kind == Tok::Star || lex_.peek().kind == Tok::Slash) {
      const Token op = lex_.take();
      V r = unary();
      v = op.kind == Tok::Star ? v * r : b_.divide(v, r, op.offset);
    }
    return v;
  }

  V unary() {
    if (lex_.peek().kind == Tok::Minus) {
      lex_.take();
      return -unary();
    }
    if (lex_.peek().kind == Tok::Plus) {
      lex_.take();
      return unary();
    }
    return power();
  }

  V power() {
    V v = atom();
    if (lex_.peek().kind == Tok::Caret) {
      lex_.take();
      if (lex_.peek().kind != Tok::Number) fail("expected a natural exponent after '^'");
      v = v.pow(parse_natural(lex_.take(), kMaxExponent, "exponent"));
      if (lex_.peek().kind == Tok::Caret) fail("chained '^' needs parentheses");
    }
    return v;
  }

  V atom() {
    const Token& t = lex_.peek();
    switch (t.kind) {
      case Tok::Number: {
        const Token num = lex_.take();
        return b_.constant(Rational(Integer(num.text)));
      }
      case Tok::Ident: {
        const Token name = lex_.take();
        return b_.name(name, lex_);
      }
      case Tok::LParen: {
        lex_.take();
        V v = expr();
        if (lex_.peek().kind != Tok::RParen) fail("expected ')'");
        lex_.take();
        return v;
      }
      case Tok::End:
        fail("expected an operand");
      default:
        fail("unexpected '" + t.text + "'");
    }
  }

  Lexer lex_;
  Builder& b_;
};

struct PolyBuilder {
  using Value = MPoly;
  const VarAlphabet& alpha;

  MPoly constant(const Rational& c) const { return MPoly(alpha, c); }

  MPoly name(const Token& t, Lexer& lex) const {
    if (lex.peek().kind == Tok::Prime) throw SyntaxError("derivative marks are not allowed here", lex.peek().offset);
    const auto idx = alpha.index_of(t.text);
    if (!idx) throw UnknownVariable("unknown variable '" + t.text + "' at offset " + std::to_string(t.offset));
    return MPoly::variable(alpha, *idx);
  }

  MPoly divide(const MPoly& a, const MPoly& b, std::size_t offset) const {
    if (!b.is_constant()) throw SyntaxError("division by a non-constant polynomial", offset);
    if (b.is_zero()) throw DivisionByZero("division by zero at offset " + std::to_string(offset));
    return a * (Rational(1) / b.constant_term());
  }
};

struct DiffBuilder {
  using Value = DiffExpr;
  unsigned n;
  bool allow_phi;

  DiffExpr constant(const Rational& c) const { return DiffExpr::constant(c, n); }

  std::optional<JetVar> family(const std::string& s) const {
    if (s == "x") return JetVar::x(0);
    if (s == "phi" && allow_phi) return JetVar::phi(0);
    if (s == "y" && n == 1) return JetVar::y(1, 0);
    if (s.size() >= 2 && s[0] == 'y' && s[1] != '0' && s.size() <= 10 &&
        s.find_first_not_of("0123456789", 1) == std::string::npos) {
      const auto j = std::stoul(s.substr(1));
      if (j >= 1 && j <= n) return JetVar::y(static_cast<std::uint32_t>(j), 0);
    }
    return std::nullopt;
  }

  DiffExpr name(const Token& t, Lexer& lex) const {
    auto v = family(t.text);
    if (!v) {
      std::string msg = "unknown variable '" + t.text + "' at offset " + std::to_string(t.offset);
      if (t.text == "phi") msg += " (phi is not allowed here)";
      if (t.text == "y" && n > 1) msg += " (use y1..y" + std::to_string(n) + ")";
      throw UnknownVariable(msg);
    }
    std::uint32_t index = 0;
    if (lex.peek().kind == Tok::Prime) {
      while (lex.peek().kind == Tok::Prime) {
        if (index == 2) throw SyntaxError("more than two primes; write ^(k) instead", lex.peek().offset);
        lex.take();
        ++index;
      }
    } else if (lex.peek().kind == Tok::Caret) {
      // x^(k) is a jet; x^k is a power and is left to the caller.
      lex.take();
      if (lex.peek().kind == Tok::LParen) {
        lex.take();
        if (lex.peek().kind != Tok::Number) throw SyntaxError("expected a jet index", lex.peek().offset);
        const Token num = lex.take();
        if (num.text.size() > 9 || std::stoul(num.text) > kMaxJetIndex)
          throw JetIndexOverflow("jet index " + num.text + " exceeds the limit " + std::to_string(kMaxJetIndex));
        index = static_cast<std::uint32_t>(std::stoul(num.text));
        if (lex.peek().kind != Tok::RParen) throw SyntaxError("expected ')'", lex.peek().offset);
        lex.take();
      } else {
        if (lex.peek().kind != Tok::Number) throw SyntaxError("expected a natural exponent after '^'", lex.peek().offset);
        const std::uint32_t e = parse_natural(lex.take(), kMaxExponent, "exponent");
        if (lex.peek().kind == Tok::Caret) throw SyntaxError("chained '^' needs parentheses", lex.peek().offset);
        return DiffExpr::jet(*v, n).pow(static_cast<int>(e));
      }
    }
    v->index = index;
    return DiffExpr::jet(*v, n);
  }

  DiffExpr divide(const DiffExpr& a, const DiffExpr& b, std::size_t offset) const {
    if (b.is_zero()) throw DivisionByZero("division by zero at offset " + std::to_string(offset));
    return a / b;
  }
};

// TruncSeries lacks pow(); the parser needs it.
struct SeriesValue {
  TruncSeries s;

  friend SeriesValue operator+(const SeriesValue& a, const SeriesValue& b) { return {a.s + b.s}; }
  friend SeriesValue operator-(const SeriesValue& a, const SeriesValue& b) { return {a.s - b.s}; }
  friend SeriesValue operator*(const SeriesValue& a, const SeriesValue& b) { return {a.s * b.s}; }
  SeriesValue operator-() const { return {-s}; }
  SeriesValue pow(std::uint32_t e) const {
    TruncSeries r = TruncSeries::constant(Rational(1), s.order());
    for (std::uint32_t i = 0; i < e; ++i) r = r * s;
    return {r};
  }
};

struct SeriesBuilder {
  using Value = SeriesValue;
  std::uint32_t order;
  std::string_view var;

  SeriesValue constant(const Rational& c) const { return {TruncSeries::constant(c, order)}; }

  SeriesValue name(const Token& t, Lexer& lex) const {
    if (lex.peek().kind == Tok::Prime) throw SyntaxError("derivative marks are not allowed here", lex.peek().offset);
    if (t.text != var)
      throw UnknownVariable("unknown variable '" + t.text + "' at offset " + std::to_string(t.offset) +
                            " (expected " + std::string(var) + ")");
    return {TruncSeries::variable(order)};
  }

  SeriesValue divide(const SeriesValue& a, const SeriesValue& b, std::size_t offset) const {
    if (b.s.is_zero()) throw DivisionByZero("division by zero at offset " + std::to_string(offset));
    return {a.s / b.s};
  }
};

}  // namespace

MPoly parse_poly(std::string_view src, const VarAlphabet& alphabet) {
  PolyBuilder b{alphabet};
  return Parser<PolyBuilder>(src, b).parse();
}

DiffExpr parse_diffexpr(std::string_view src, unsigned n, bool allow_phi) {
  if (n == 0) throw InputError("n must be at least 1");
  DiffBuilder b{n, allow_phi};
  return Parser<DiffBuilder>(src, b).parse();
}

TruncSeries parse_series(std::string_view src, std::uint32_t order, std::string_view var) {
  SeriesBuilder b{order, var};
  return Parser<SeriesBuilder>(src, b).parse().s;
}

std::set<std::string> identifiers(std::string_view src) {
  std::set<std::string> out;
  Lexer lex(src);
  while (lex.peek().kind != Tok::End) {
    const Token t = lex.take();
    if (t.kind == Tok::Ident) out.insert(t.text);
  }
  return out;
}

}  // namespace algcurv
