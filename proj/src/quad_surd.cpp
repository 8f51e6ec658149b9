#include "jimm/quad_surd.hpp"

#include <stdexcept>
#include <vector>

namespace jimm {

namespace {

const std::vector<unsigned long>& small_primes() {
  static const std::vector<unsigned long> primes = [] {
    constexpr unsigned long limit = 100000;
    std::vector<bool> composite(limit, false);
    std::vector<unsigned long> out;
    for (unsigned long i = 2; i < limit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (unsigned long j = i * i; j < limit; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

// Rewrites a and b over one radicand when their radicands differ by a
// rational square factor. Returns false for genuinely different fields.
bool common_radicand(const QuadSurd& a, const QuadSurd& b, Integer& d, Integer& scale_a,
                     Integer& scale_b) {
  scale_a = 1;
  scale_b = 1;
  if (a.is_rational()) {
    d = b.d();
    return true;
  }
  if (b.is_rational() || a.d() == b.d()) {
    d = a.d();
    return true;
  }
  Integer g = gcd(a.d(), b.d());
  Integer ra = a.d() / g;
  Integer rb = b.d() / g;
  if (!is_perfect_square(ra) || !is_perfect_square(rb)) return false;
  d = g;
  scale_a = isqrt(ra);
  scale_b = isqrt(rb);
  return true;
}

}  // namespace

namespace {

// Primes in [lo, hi) together with their product.
struct PrimeBand {
  std::vector<unsigned long> primes;
  Integer product = 1;
};

PrimeBand make_band(unsigned long lo, unsigned long hi) {
  PrimeBand band;
  for (unsigned long p : small_primes()) {
    if (p < lo || p >= hi) continue;
    band.primes.push_back(p);
    band.product *= p;
  }
  return band;
}

// Moves the square part of every band prime out of rest: p^2k goes to
// square_root, a leftover p to core.
void extract_band(const PrimeBand& band, Integer& rest, Integer& square_root, Integer& core) {
  const Integer once = gcd(rest, Integer(band.product % rest));
  Integer repeated = gcd(Integer(rest / once), once);
  auto take = [&](unsigned long p) {
    unsigned long count = 0;
    while (mpz_fdiv_ui(rest.get_mpz_t(), p) == 0) {
      rest /= p;
      ++count;
    }
    for (unsigned long i = 0; i < count / 2; ++i) square_root *= p;
    if (count % 2 == 1) core *= p;
  };
  for (unsigned long p : band.primes) {
    if (repeated == 1) break;
    if (Integer(p) * p > repeated) {
      take(repeated.get_ui());
      break;
    }
    if (mpz_fdiv_ui(repeated.get_mpz_t(), p) != 0) continue;
    repeated /= p;
    take(p);
  }
  const Integer simple = gcd(rest, once);
  rest /= simple;
  core *= simple;
}

}  // namespace

std::pair<Integer, Integer> split_square_part(const Integer& n) {
  if (sgn(n) <= 0) throw std::domain_error("radicand must be positive");
  static const PrimeBand low = make_band(0, 1000);
  static const PrimeBand high = make_band(1000, 100000);
  static const Integer cube_of_low_bound = Integer(1000) * 1000 * 1000;
  Integer rest = n;
  Integer square_root = 1;
  Integer core = 1;
  extract_band(low, rest, square_root, core);
  // below 1000^3 a cofactor free of primes < 1000 has at most two prime factors
  if (rest >= cube_of_low_bound) extract_band(high, rest, square_root, core);
  if (is_perfect_square(rest)) {
    square_root *= isqrt(rest);
  } else {
    core *= rest;
  }
  return {square_root, core};
}

int sign_of_surd_numerator(const Integer& p, const Integer& q, const Integer& d) {
  int sp = sgn(p);
  int sq = sgn(q);
  if (sq == 0) return sp;
  if (sp == 0 || sp == sq) return sq;
  return cmp(p * p, q * q * d) > 0 ? sp : sq;
}

QuadSurd::QuadSurd(const Integer& p, const Integer& q, const Integer& d, const Integer& r)
    : p_(p), q_(q), d_(1), r_(r) {
  if (sgn(r_) == 0) throw std::domain_error("zero denominator in surd");
  if (sgn(d) < 0) throw std::domain_error("negative radicand");
  if (sgn(d) == 0) {
    q_ = 0;
  } else if (sgn(q_) != 0) {
    auto [s, core] = split_square_part(d);
    q_ *= s;
    if (core == 1) {
      p_ += q_;
      q_ = 0;
    } else {
      d_ = core;
    }
  }
  normalize();
}

QuadSurd::QuadSurd(const Rational& x) : p_(x.num()), q_(0), d_(1), r_(x.den()) {
  if (x.is_infinite()) throw std::domain_error("infinity is not a surd");
}

QuadSurd::QuadSurd(Reduced, Integer p, Integer q, Integer d, Integer r)
    : p_(std::move(p)), q_(std::move(q)), d_(std::move(d)), r_(std::move(r)) {
  if (sgn(r_) == 0) throw std::domain_error("zero denominator in surd");
  normalize();
}

void QuadSurd::normalize() {
  if (sgn(q_) == 0) d_ = 1;
  if (sgn(r_) < 0) {
    p_ = -p_;
    q_ = -q_;
    r_ = -r_;
  }
  Integer g = gcd(gcd(p_, q_), r_);
  if (g != 1) {
    p_ /= g;
    q_ /= g;
    r_ /= g;
  }
}

QuadSurd QuadSurd::sqrt(const Integer& n) { return QuadSurd(0, 1, n, 1); }

Rational QuadSurd::to_rational() const {
  if (!is_rational()) throw std::domain_error("surd is irrational");
  return Rational(p_, r_);
}

QuadSurd QuadSurd::conjugate() const { return QuadSurd(Reduced{}, p_, -q_, d_, r_); }

Integer QuadSurd::floor() const {
  if (is_rational()) return floor_div(p_, r_);
  Integer root = isqrt(q_ * q_ * d_);
  Integer t = sgn(q_) > 0 ? root : Integer(-root - 1);
  return floor_div(p_ + t, r_);
}

Integer QuadSurd::scaled_floor(unsigned long k) const {
  Integer scale = 1;
  scale <<= k;
  return QuadSurd(Reduced{}, p_ * scale, q_ * scale, d_, r_).floor();
}

int QuadSurd::sign() const { return sign_of_surd_numerator(p_, q_, d_); }

std::array<Integer, 3> QuadSurd::minimal_polynomial() const {
  if (is_rational()) return {Integer(0), r_, Integer(-p_)};
  // r^2 x^2 - 2pr x + (p^2 - q^2 d) = 0
  Integer a = r_ * r_;
  Integer b = -2 * p_ * r_;
  Integer c = p_ * p_ - q_ * q_ * d_;
  Integer g = gcd(gcd(a, b), c);
  return {a / g, b / g, c / g};
}

Integer QuadSurd::discriminant() const {
  auto [a, b, c] = minimal_polynomial();
  return b * b - 4 * a * c;
}

QuadSurd QuadSurd::operator-() const { return QuadSurd(Reduced{}, -p_, -q_, d_, r_); }

QuadSurd QuadSurd::reciprocal() const { return QuadSurd(1) / *this; }

QuadSurd operator+(const QuadSurd& a, const QuadSurd& b) {
  Integer d, sa, sb;
  if (!common_radicand(a, b, d, sa, sb)) throw std::domain_error("mixed quadratic fields");
  return QuadSurd(QuadSurd::Reduced{}, a.p_ * b.r_ + b.p_ * a.r_,
                  a.q_ * sa * b.r_ + b.q_ * sb * a.r_, d, a.r_ * b.r_);
}

QuadSurd operator-(const QuadSurd& a, const QuadSurd& b) { return a + (-b); }

QuadSurd operator*(const QuadSurd& a, const QuadSurd& b) {
  Integer d, sa, sb;
  if (!common_radicand(a, b, d, sa, sb)) throw std::domain_error("mixed quadratic fields");
  Integer qa = a.q_ * sa;
  Integer qb = b.q_ * sb;
  return QuadSurd(QuadSurd::Reduced{}, a.p_ * b.p_ + qa * qb * d, a.p_ * qb + qa * b.p_, d,
                  a.r_ * b.r_);
}

QuadSurd operator/(const QuadSurd& a, const QuadSurd& b) {
  Integer d, sa, sb;
  if (!common_radicand(a, b, d, sa, sb)) throw std::domain_error("mixed quadratic fields");
  Integer qa = a.q_ * sa;
  Integer qb = b.q_ * sb;
  Integer norm = b.p_ * b.p_ - qb * qb * d;
  if (sgn(norm) == 0) throw std::domain_error("division by zero");
  // (pa + qa s)/ra * rb/(pb + qb s) = rb (pa + qa s)(pb - qb s) / (ra * norm)
  return QuadSurd(QuadSurd::Reduced{}, b.r_ * (a.p_ * b.p_ - qa * qb * d),
                  b.r_ * (qa * b.p_ - a.p_ * qb), d, a.r_ * norm);
}

bool operator==(const QuadSurd& a, const QuadSurd& b) {
  Integer d, sa, sb;
  if (!common_radicand(a, b, d, sa, sb)) return false;
  return a.p_ * b.r_ == b.p_ * a.r_ && a.q_ * sa * b.r_ == b.q_ * sb * a.r_;
}

std::strong_ordering operator<=>(const QuadSurd& a, const QuadSurd& b) {
  Integer d, sa, sb;
  if (common_radicand(a, b, d, sa, sb)) {
    int s = (a - b).sign();
    return s <=> 0;
  }
  for (unsigned long k = 64;; k *= 2) {
    int c = cmp(a.scaled_floor(k), b.scaled_floor(k));
    if (c != 0) return c <=> 0;
  }
}

std::string QuadSurd::str() const {
  if (is_rational()) return to_rational().str();
  std::string out = "(" + p_.get_str();
  out += sgn(q_) < 0 ? "-" : "+";
  out += Integer(abs(q_)).get_str() + "*sqrt(" + d_.get_str() + "))/" + r_.get_str();
  return out;
}

double QuadSurd::to_double() const {
  mpf_class root(d_, 256);
  mpf_sqrt(root.get_mpf_t(), root.get_mpf_t());
  mpf_class value(p_, 256);
  value += mpf_class(q_, 256) * root;
  value /= mpf_class(r_, 256);
  return value.get_d();
}

}  // namespace jimm
