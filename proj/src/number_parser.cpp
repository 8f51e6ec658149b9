#include "jimm/number_parser.hpp"

#include "jimm/stream_ops.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

namespace jimm {

namespace {

class ExpressionParser {
 public:
  explicit ExpressionParser(std::string_view text) : text_(text) {}

  QuadSurd parse() {
    QuadSurd v = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("bad number literal '" + std::string(text_) + "': " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char ch) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  QuadSurd expr() {
    QuadSurd v = term();
    while (true) {
      if (accept('+')) v = v + term();
      else if (accept('-')) v = v - term();
      else return v;
    }
  }

  QuadSurd term() {
    QuadSurd v = unary();
    while (true) {
      if (accept('*')) {
        v = v * unary();
      } else if (accept('/')) {
        QuadSurd divisor = unary();
        if (divisor.is_rational() && divisor.to_rational().sign() == 0) fail("division by zero");
        v = v / divisor;
      } else {
        return v;
      }
    }
  }

  QuadSurd unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return primary();
  }

  QuadSurd primary() {
    skip_space();
    if (accept('(')) {
      QuadSurd v = expr();
      if (!accept(')')) fail("missing ')'");
      return v;
    }
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return QuadSurd(Rational(parse_integer(text_.substr(start, pos_ - start))));
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::string_view name = text_.substr(start, pos_ - start);
    if (name == "sqrt") {
      if (!accept('(')) fail("sqrt needs '('");
      QuadSurd arg = expr();
      if (!accept(')')) fail("missing ')'");
      if (!arg.is_rational() || !arg.to_rational().is_integer() || arg.to_rational().sign() < 0) {
        fail("sqrt takes a non-negative integer");
      }
      const Integer n = arg.to_rational().num();
      if (is_perfect_square(n)) return QuadSurd(Rational(isqrt(n)));
      return QuadSurd::sqrt(n);
    }
    if (name == "phi") return QuadSurd(1, 1, 5, 2);
    if (name.empty()) fail("expected a number");
    fail("unknown name '" + std::string(name) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

RealValue from_surd(const QuadSurd& x) {
  if (x.is_rational()) return x.to_rational();
  return x;
}

}  // namespace

CfStream constant_stream(std::string_view name) {
  if (name == "pi") return pi_stream();
  if (name == "e") return e_stream();
  if (name == "cbrt2") return cbrt2_stream();
  throw std::invalid_argument("unknown constant '" + std::string(name) + "'");
}

std::optional<std::string> match_constant(const Quotients& head) {
  for (const char* name : {"pi", "e", "cbrt2"}) {
    if (constant_stream(name).prefix(head.size()) == head) return std::string(name);
  }
  return std::nullopt;
}

RealValue parse_number(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw std::invalid_argument("empty number literal");
  if (text == "inf") return Rational::infinity();
  if (text == "pi" || text == "e" || text == "cbrt2") return constant_stream(text);
  if (text.front() == '[') {
    ParsedCf cf = parse_cf_literal(text);
    if (cf.open_ended) {
      if (cf.has_period) throw std::invalid_argument("'...' after a periodic part");
      if (auto name = match_constant(cf.head)) return constant_stream(*name);
      return CfStream::from_quotients(cf.head);
    }
    if (cf.has_period) return periodic_cf_to_surd(ContinuedFraction::periodic(cf.head, cf.period));
    ContinuedFraction finite = ContinuedFraction::finite(cf.head);
    if (finite.is_infinity()) return Rational::infinity();
    return cf_to_rational(finite);
  }
  return from_surd(ExpressionParser(text).parse());
}

}  // namespace jimm
