#include "jimm/stream_ops.hpp"

#include <cstdint>
#include <deque>
#include <memory>
#include <stdexcept>

namespace jimm {

namespace detail {
extern const std::uint32_t kPiQuotients[];
extern const std::size_t kPiQuotientCount;
}  // namespace detail

CfStream homographic_stream(const Matrix2& m, const CfStream& x) {
  if (sgn(m.det()) == 0) throw std::domain_error("homographic_stream needs an invertible matrix");
  struct State {
    Matrix2 h;
    CfStream input;
    std::size_t next = 0;
    std::deque<Integer> tail;  // quotients of the exact value once the input ends
    bool finished = false;
  };
  auto st = std::make_shared<State>();
  st->h = m;
  st->input = x;
  return CfStream([st]() -> std::optional<Integer> {
    Matrix2& h = st->h;
    while (true) {
      if (st->finished) {
        if (st->tail.empty()) return std::nullopt;
        Integer q = st->tail.front();
        st->tail.pop_front();
        return q;
      }
      // remaining input tail lies in [1, inf] once a quotient has been read
      if (st->next > 0 && sgn(h.c) != 0 && sgn(h.c + h.d) == sgn(h.c)) {
        Integer q = floor_div(h.a, h.c);
        if (q == floor_div(h.a + h.b, h.c + h.d)) {
          h = {h.c, h.d, h.a - q * h.c, h.b - q * h.d};
          return q;
        }
      }
      const Integer* p = st->input.at(st->next);
      if (p == nullptr) {
        st->finished = true;
        if (st->next > 0 && sgn(h.c) != 0) {
          const Quotients t = rational_to_cf(Rational(h.a, h.c)).terms();
          st->tail.assign(t.begin(), t.end());
        }
        continue;
      }
      ++st->next;
      h = {h.a * *p + h.b, h.a, h.c * *p + h.d, h.c};
    }
  });
}

namespace {

// Walks convergents; `done(lo, hi)` decides when the enclosure is good enough.
template <typename Done>
std::optional<Enclosure> refine(const CfStream& x, std::size_t max_terms, Done done) {
  Integer p = 1, q = 0, p_prev = 0, q_prev = 1;
  for (std::size_t n = 0; n < max_terms; ++n) {
    const Integer* a = x.at(n);
    if (a == nullptr) return std::nullopt;
    Integer p_next = *a * p + p_prev;
    Integer q_next = *a * q + q_prev;
    p_prev = std::move(p);
    q_prev = std::move(q);
    p = std::move(p_next);
    q = std::move(q_next);
    if (n == 0) continue;  // the tail after a0 may be any value > 1, but a0 alone bounds nothing useful
    Rational end1(p, q);
    Rational end2(p + p_prev, q + q_prev);
    Enclosure e = end1 < end2 ? Enclosure{end1, end2} : Enclosure{end2, end1};
    if (done(e)) return e;
  }
  return std::nullopt;
}

std::string digits_of(const Integer& scaled, bool negative, std::size_t digits) {
  std::string body = scaled.get_str();
  if (body.size() <= digits) body.insert(0, digits + 1 - body.size(), '0');
  std::string out = negative ? "-" : "";
  out += body.substr(0, body.size() - digits);
  if (digits > 0) out += "." + body.substr(body.size() - digits);
  return out;
}

Rational abs_value(const Rational& x) { return x.sign() < 0 ? -x : x; }

}  // namespace

std::optional<Enclosure> enclose(const CfStream& x, const Rational& width, std::size_t max_terms) {
  return refine(x, max_terms, [&](const Enclosure& e) { return e.width() <= width; });
}

std::string render_decimal(const Rational& x, std::size_t digits) {
  if (x.is_infinite()) return "inf";
  const Rational scaled = abs_value(x) * Rational(pow10(digits));
  return digits_of(scaled.floor(), x.sign() < 0, digits);
}

std::string render_decimal(const QuadSurd& x, std::size_t digits) {
  if (x.is_rational()) return render_decimal(x.to_rational(), digits);
  const bool negative = x.sign() < 0;
  const QuadSurd scaled = (negative ? -x : x) * QuadSurd(Rational(pow10(digits)));
  return digits_of(scaled.floor(), negative, digits);
}

std::string render_decimal(const ExactReal& x, std::size_t digits) {
  return std::visit([&](const auto& v) { return render_decimal(v, digits); }, x);
}

std::optional<std::string> render_decimal(const CfStream& x, std::size_t digits) {
  const Rational scale(pow10(digits));
  std::optional<std::string> text;
  refine(x, SIZE_MAX, [&](const Enclosure& e) {
    if (e.lo.sign() != e.hi.sign() || e.lo.sign() == 0) return false;
    std::string lo = render_decimal(e.lo, digits);
    if (lo != render_decimal(e.hi, digits)) return false;
    text = std::move(lo);
    return true;
  });
  return text;
}

CfStream e_stream() {
  auto index = std::make_shared<long>(0);
  return CfStream([index]() -> std::optional<Integer> {
    long i = (*index)++;
    if (i == 0) return Integer(2);
    if (i % 3 == 2) return Integer(2 * (i + 1) / 3);
    return Integer(1);
  });
}

CfStream pi_stream() {
  auto index = std::make_shared<std::size_t>(0);
  return CfStream([index]() -> std::optional<Integer> {
    if (*index >= detail::kPiQuotientCount) return std::nullopt;
    return Integer(static_cast<unsigned long>(detail::kPiQuotients[(*index)++]));
  });
}

std::size_t pi_quotient_count() { return detail::kPiQuotientCount; }

namespace {

Integer evaluate(const Quotients& c, const Integer& x) {
  Integer v = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * x + *it;
  return v;
}

// Coefficients of y^n P(a + 1/y).
Quotients shift_and_invert(Quotients c, const Integer& a) {
  const std::size_t n = c.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = n - 2; j + 1 > i; --j) c[j] += a * c[j + 1];
  }
  return Quotients(c.rbegin(), c.rend());
}

}  // namespace

CfStream polynomial_root_stream(Quotients coefficients) {
  while (!coefficients.empty() && sgn(coefficients.back()) == 0) coefficients.pop_back();
  if (coefficients.size() < 2) throw std::domain_error("polynomial must have degree >= 1");
  struct State {
    Quotients poly;
    bool first = true;
    bool done = false;
  };
  auto st = std::make_shared<State>();
  st->poly = std::move(coefficients);
  return CfStream([st]() -> std::optional<Integer> {
    if (st->done) return std::nullopt;
    const Quotients& c = st->poly;
    const int at_infinity = sgn(c.back());
    // below the root the sign differs from the sign at +infinity
    auto below = [&](const Integer& x) { return sgn(evaluate(c, x)) == -at_infinity; };
    Integer lo = st->first ? Integer(0) : Integer(1);
    if (st->first && !below(lo)) {
      Integer step = 1;
      while (!below(lo)) {
        lo -= step;
        step *= 2;
      }
    }
    Integer hi = lo + 1;
    Integer step = 1;
    while (below(hi)) {
      lo = hi;
      step *= 2;
      hi += step;
    }
    while (hi - lo > 1) {
      Integer mid = (lo + hi) / 2;
      if (below(mid)) lo = mid;
      else hi = mid;
    }
    st->first = false;
    if (sgn(evaluate(c, hi)) == 0) {
      st->done = true;
      return hi;
    }
    st->poly = shift_and_invert(c, lo);
    return lo;
  });
}

CfStream cbrt2_stream() { return polynomial_root_stream({Integer(-2), Integer(0), Integer(0), Integer(1)}); }

}  // namespace jimm
