#include "jimm/matrix.hpp"

#include <cctype>
#include <stdexcept>
#include <vector>

namespace jimm {

Matrix2 Matrix2::canonical() const {
  const Integer* first = &a;
  for (const Integer* e : {&a, &b, &c, &d}) {
    if (sgn(*e) != 0) {
      first = e;
      break;
    }
  }
  if (sgn(*first) < 0) return {-a, -b, -c, -d};
  return *this;
}

std::string Matrix2::str() const {
  return "[[" + a.get_str() + "," + b.get_str() + "],[" + c.get_str() + "," + d.get_str() + "]]";
}

bool projectively_equal(const Matrix2& x, const Matrix2& y) {
  return x.canonical() == y.canonical();
}

Matrix2 power(const Matrix2& m, long k) {
  Matrix2 base = m;
  if (k < 0) {
    if (!m.is_unimodular()) throw std::domain_error("negative power of a non-unimodular matrix");
    base = m.det() == 1 ? m.adjugate() : Matrix2{-m.d, m.b, m.c, -m.a};
    k = -k;
  }
  Matrix2 result;
  while (k > 0) {
    if (k & 1) result = result * base;
    base = base * base;
    k >>= 1;
  }
  return result;
}

Rational mobius_apply(const Matrix2& m, const Rational& x) {
  Integer num = x.is_infinite() ? Integer(1) : x.num();
  Integer den = x.is_infinite() ? Integer(0) : x.den();
  Integer top = m.a * num + m.b * den;
  Integer bottom = m.c * num + m.d * den;
  if (sgn(top) == 0 && sgn(bottom) == 0) throw std::domain_error("singular Mobius map");
  return Rational(top, bottom);
}

QuadSurd mobius_apply(const Matrix2& m, const QuadSurd& x) {
  QuadSurd top = QuadSurd(Rational(m.a)) * x + QuadSurd(Rational(m.b));
  QuadSurd bottom = QuadSurd(Rational(m.c)) * x + QuadSurd(Rational(m.d));
  if (bottom.sign() == 0) throw std::domain_error("Mobius image is infinity");
  return top / bottom;
}

Matrix2 parse_matrix(std::string_view text) {
  std::vector<Integer> entries;
  std::string token;
  for (char ch : text) {
    if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' || ch == '+') {
      token += ch;
    } else if (ch == ',' || ch == ']' || ch == '[' || std::isspace(static_cast<unsigned char>(ch))) {
      if (!token.empty()) {
        entries.push_back(parse_integer(token));
        token.clear();
      }
    } else {
      throw std::invalid_argument("bad matrix literal: '" + std::string(text) + "'");
    }
  }
  if (!token.empty()) entries.push_back(parse_integer(token));
  if (entries.size() != 4 || text.find("[[") == std::string_view::npos) {
    throw std::invalid_argument("matrix literal must look like [[a,b],[c,d]]");
  }
  return {entries[0], entries[1], entries[2], entries[3]};
}

Integer fib(long n) {
  Integer r;
  mpz_fib_ui(r.get_mpz_t(), static_cast<unsigned long>(n < 0 ? -n : n));
  if (n < 0 && (-n) % 2 == 0) r = -r;
  return r;
}

Integer lucas(long n) {
  if (n < 0) throw std::domain_error("lucas index must be non-negative");
  Integer r;
  mpz_lucnum_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

}  // namespace jimm
