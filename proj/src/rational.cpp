#include "jimm/rational.hpp"

#include <limits>
#include <stdexcept>

namespace jimm {

Rational::Rational(const Integer& num, const Integer& den) : num_(num), den_(den) {
  if (sgn(den_) == 0) {
    if (sgn(num_) == 0) throw std::domain_error("0/0 is not a number");
    num_ = 1;
    return;
  }
  if (sgn(den_) < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  Integer g = gcd(num_, den_);
  if (g != 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::infinity() { return Rational(Raw{}, Integer(1), Integer(0)); }

Integer Rational::floor() const {
  if (is_infinite()) throw std::domain_error("floor of infinity");
  return floor_div(num_, den_);
}

Rational Rational::reciprocal() const {
  if (is_infinite()) return Rational(0);
  if (sgn(num_) == 0) return infinity();
  return Rational(den_, num_);
}

Rational Rational::operator-() const {
  if (is_infinite()) return *this;
  return Rational(Raw{}, -num_, den_);
}

Rational operator+(const Rational& a, const Rational& b) {
  if (a.is_infinite() || b.is_infinite()) {
    if (a.is_infinite() && b.is_infinite()) throw std::domain_error("inf + inf");
    return Rational::infinity();
  }
  return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  if (a.is_infinite() || b.is_infinite()) {
    if (a.sign() == 0 || b.sign() == 0) throw std::domain_error("0 * inf");
    return Rational::infinity();
  }
  return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (a.is_infinite() && b.is_infinite()) throw std::domain_error("inf / inf");
  return a * b.reciprocal();
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (a.is_infinite() || b.is_infinite()) {
    return static_cast<int>(a.is_infinite()) <=> static_cast<int>(b.is_infinite());
  }
  int c = cmp(a.num_ * b.den_, b.num_ * a.den_);
  return c <=> 0;
}

std::string Rational::str() const {
  if (is_infinite()) return "inf";
  if (den_ == 1) return num_.get_str();
  return num_.get_str() + "/" + den_.get_str();
}

double Rational::to_double() const {
  if (is_infinite()) return std::numeric_limits<double>::infinity();
  mpq_class q(num_, den_);
  return q.get_d();
}

Rational parse_rational(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text == "inf" || text == "oo") return Rational::infinity();
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer den = parse_integer(trim(text.substr(slash + 1)));
  if (sgn(den) == 0) throw std::invalid_argument("zero denominator");
  return Rational(parse_integer(trim(text.substr(0, slash))), den);
}

}  // namespace jimm
