#include "jimm/jimm.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace jimm {

void RewriteTransducer::push(const Integer& quotient, std::vector<QuotientRun>& out) {
  if (!started_) {
    if (sgn(quotient) <= 0) throw std::domain_error("rewrite needs a leading quotient >= 1");
    started_ = true;
    if (quotient > 1) out.push_back({Integer(1), quotient - 1});
    return;
  }
  // every later quotient contributes a 2 followed by 1_{n-2}
  pending_ = pending_ ? *pending_ + 1 : Integer(2);
  Integer ones = quotient - 2;
  if (sgn(ones) < 0) return;  // 1_{-1}: merge with the next 2
  out.push_back({*pending_, Integer(1)});
  pending_.reset();
  if (sgn(ones) > 0) out.push_back({Integer(1), ones});
}

namespace {

constexpr unsigned long kMaxExpandedQuotients = 20'000'000;

Quotients expand(const std::vector<QuotientRun>& runs) {
  Quotients out;
  for (const QuotientRun& r : runs) {
    if (r.count > kMaxExpandedQuotients || out.size() + r.count.get_ui() > kMaxExpandedQuotients) {
      throw std::length_error("continued fraction too long to expand");
    }
    out.insert(out.end(), r.count.get_ui(), r.value);
  }
  return out;
}

// Rewrite of pre + period^w for a value > 1.
ContinuedFraction rewrite_periodic(const Quotients& pre, const Quotients& per) {
  const std::size_t s = pre.size();
  const std::size_t p = per.size();
  auto at = [&](std::size_t i) -> const Integer& { return i < s ? pre[i] : per[(i - s) % p]; };
  RewriteTransducer t;
  std::vector<QuotientRun> runs;
  const bool noble_tail = std::all_of(per.begin(), per.end(), [](const Integer& a) { return a == 1; });
  if (noble_tail) {
    // after the preperiod the pending quotient merges forever: it is infinite
    for (std::size_t i = 0; i < std::max<std::size_t>(s, 1); ++i) t.push(at(i), runs);
    return ContinuedFraction::finite(expand(runs));
  }
  std::size_t j = s + 1;
  while (at(j - 1) < 2) ++j;
  for (std::size_t i = 0; i < j; ++i) t.push(at(i), runs);
  std::vector<QuotientRun> block;
  for (std::size_t i = j; i < j + p; ++i) t.push(at(i), block);
  if (t.has_pending()) throw std::logic_error("rewrite block did not close");
  return ContinuedFraction::periodic(expand(runs), expand(block));
}

ExactReal cf_value(const ContinuedFraction& cf) {
  if (cf.kind() == CfKind::Periodic) return periodic_cf_to_surd(cf);
  if (cf.is_infinity()) return Rational::infinity();
  return cf_to_rational(cf);
}

ContinuedFraction value_cf(const ExactReal& x) {
  if (const auto* r = std::get_if<Rational>(&x)) {
    if (r->is_infinite()) return ContinuedFraction::finite({});
    return rational_to_cf(*r);
  }
  const auto& s = std::get<QuadSurd>(x);
  if (s.is_rational()) return rational_to_cf(s.to_rational());
  return surd_to_periodic_cf(s);
}

ExactReal negative_reciprocal(const ExactReal& x) {
  if (const auto* r = std::get_if<Rational>(&x)) {
    if (r->is_infinite()) return Rational(0);
    return -r->reciprocal();
  }
  return -std::get<QuadSurd>(x).reciprocal();
}

ExactReal reciprocal(const ExactReal& x) {
  if (const auto* r = std::get_if<Rational>(&x)) return r->reciprocal();
  return std::get<QuadSurd>(x).reciprocal();
}

CfStream prepend(Integer first, const CfStream& rest) {
  auto emitted = std::make_shared<bool>(false);
  auto index = std::make_shared<std::size_t>(0);
  return CfStream([first, rest, emitted, index]() -> std::optional<Integer> {
    if (!*emitted) {
      *emitted = true;
      return first;
    }
    const Integer* q = rest.at((*index)++);
    if (q == nullptr) return std::nullopt;
    return *q;
  });
}

CfStream drop_first(const CfStream& x) {
  auto index = std::make_shared<std::size_t>(1);
  return CfStream([x, index]() -> std::optional<Integer> {
    const Integer* q = x.at((*index)++);
    if (q == nullptr) return std::nullopt;
    return *q;
  });
}

// Rewrite of a stream whose value is > 1.
CfStream rewrite_stream(const CfStream& x) {
  struct State {
    CfStream input;
    std::size_t next = 0;
    RewriteTransducer transducer;
    std::deque<QuotientRun> queue;
  };
  auto st = std::make_shared<State>();
  st->input = x;
  return CfStream([st]() -> std::optional<Integer> {
    while (st->queue.empty()) {
      const Integer* q = st->input.at(st->next);
      if (q == nullptr) return std::nullopt;
      ++st->next;
      std::vector<QuotientRun> out;
      st->transducer.push(*q, out);
      st->queue.insert(st->queue.end(), out.begin(), out.end());
    }
    QuotientRun& front = st->queue.front();
    Integer v = front.value;
    if (--front.count == 0) st->queue.pop_front();
    return v;
  });
}

}  // namespace

CfStream negate_stream(const CfStream& x) {
  // -[a0; a1, a2, ...] = [-a0-1; 1, a1-1, a2, ...], or [-a0-1; a2+1, a3, ...] when a1 = 1
  struct State {
    CfStream input;
    std::deque<Integer> head;
    std::size_t next = 0;
    bool started = false;
  };
  auto st = std::make_shared<State>();
  st->input = x;
  return CfStream([st]() -> std::optional<Integer> {
    if (!st->started) {
      st->started = true;
      const Integer* a0 = st->input.at(0);
      if (a0 == nullptr) return std::nullopt;
      const Integer* a1 = st->input.at(1);
      if (a1 == nullptr) {
        st->next = 1;
        return Integer(-*a0);
      }
      if (*a1 == 1) {
        const Integer* a2 = st->input.at(2);
        st->next = 3;
        if (a2 != nullptr) st->head.push_back(*a2 + 1);
      } else {
        st->head.push_back(Integer(1));
        st->head.push_back(*a1 - 1);
        st->next = 2;
      }
      return Integer(-*a0 - 1);
    }
    if (!st->head.empty()) {
      Integer v = st->head.front();
      st->head.pop_front();
      return v;
    }
    const Integer* q = st->input.at(st->next++);
    if (q == nullptr) return std::nullopt;
    return *q;
  });
}

CfStream reciprocal_stream(const CfStream& x) {
  const Integer* a0 = x.at(0);
  if (a0 == nullptr) return x;
  if (sgn(*a0) < 0) throw std::domain_error("reciprocal_stream needs a positive value");
  if (sgn(*a0) == 0) return drop_first(x);
  return prepend(Integer(0), x);
}

BoundaryWord jimm_boundary_word(const BoundaryWord& w) {
  return xor_words(w, w.negative() ? phi_star_word() : phi_word());
}

ContinuedFraction jimm_cf(const ContinuedFraction& x) {
  switch (x.kind()) {
    case CfKind::Finite:
      throw std::domain_error("jimm is two-valued at rationals: use jump() or jimm_q_rational()");
    case CfKind::Stream:
      return ContinuedFraction::stream(jimm_stream(x.source()));
    case CfKind::Periodic:
      break;
  }
  const Integer a0 = *x.at(0);
  if (sgn(a0) > 0) return rewrite_periodic(x.preperiod(), x.period());
  if (sgn(a0) == 0) {
    Quotients pre(x.preperiod().begin() + 1, x.preperiod().end());
    ContinuedFraction image = jimm_cf(ContinuedFraction::periodic(std::move(pre), x.period()));
    if (image.kind() == CfKind::Finite) return value_cf(reciprocal(cf_value(image)));
    Quotients shifted{Integer(0)};
    shifted.insert(shifted.end(), image.preperiod().begin(), image.preperiod().end());
    return ContinuedFraction::periodic(std::move(shifted), image.period());
  }
  // x < 0: jimm(x) = -1/jimm(-x)
  QuadSurd minus_x = -periodic_cf_to_surd(x);
  return value_cf(negative_reciprocal(cf_value(jimm_cf(surd_to_periodic_cf(minus_x)))));
}

ExactReal jimm_surd_xor(const QuadSurd& x) {
  return word_value(jimm_boundary_word(cf_to_word(surd_to_periodic_cf(x))));
}

ExactReal jimm_surd_rewrite(const QuadSurd& x) {
  return cf_value(jimm_cf(surd_to_periodic_cf(x)));
}

SurdImage jimm_surd(const QuadSurd& x) {
  ExactReal primary = jimm_surd_xor(x);
  ExactReal check = jimm_surd_rewrite(x);
  if (!exact_equal(primary, check)) {
    throw std::logic_error("jimm routes disagree at " + x.str() + ": " + to_string(primary) +
                           " vs " + to_string(check));
  }
  const bool noble = std::holds_alternative<Rational>(primary);
  return {std::move(primary), noble};
}

CfStream jimm_stream(const CfStream& x) {
  const Integer* a0 = x.at(0);
  if (a0 == nullptr) return x;
  if (sgn(*a0) > 0) return rewrite_stream(x);
  if (sgn(*a0) == 0) return prepend(Integer(0), rewrite_stream(drop_first(x)));
  return negate_stream(reciprocal_stream(jimm_stream(negate_stream(x))));
}

StreamPrefix jimm_stream_prefix(const CfStream& x, std::size_t n) {
  StreamPrefix out;
  out.digits = jimm_stream(x).prefix(n);
  out.complete = out.digits.size() == n;
  return out;
}

Rational jimm_q_rational(const Rational& q) {
  if (q.is_infinite() || q.sign() <= 0) throw std::domain_error("jimm_q_rational needs a positive rational");
  const Quotients terms = rational_to_cf(q).terms();
  auto fib_power = [](const Integer& n) {
    if (!n.fits_slong_p()) throw std::overflow_error("quotient too large");
    long k = n.get_si();
    return Matrix2{fib(k + 1), fib(k), fib(k), fib(k - 1)};
  };
  static const Matrix2 flip{0, 1, 1, 0};
  Matrix2 m;
  for (std::size_t i = 0; i + 1 < terms.size(); ++i) m = m * fib_power(terms[i]) * flip;
  m = m * fib_power(terms.back() - 1);
  return mobius_apply(m, Rational(1));
}

JumpData jump(const Rational& q) {
  if (q.is_infinite() || q.sign() == 0) throw std::domain_error("jump is special-cased at 0 and infinity");
  auto [below, above] = rational_two_words(q);
  auto limit = [](const BoundaryWord& w) {
    ExactReal v = word_value(jimm_boundary_word(w));
    if (!std::holds_alternative<QuadSurd>(v)) throw std::logic_error("jump limit is not irrational");
    return std::get<QuadSurd>(v);
  };
  JumpData out{q, limit(below), limit(above), QuadSurd()};
  out.delta = out.right - out.left;
  return out;
}

QuadSurd delta_integer_formula(long n) {
  if (n < 1) throw std::domain_error("delta formula needs n >= 1");
  Integer denom = fib(n) * fib(n) + fib(n - 1) * fib(n - 2);
  return QuadSurd(0, n % 2 == 1 ? 1 : -1, 5, denom);
}

OrbitFixedPoint orbit_fixed_point(const Matrix2& m) {
  if (!m.is_unimodular()) throw std::domain_error("orbit_fixed_point needs |det| = 1");
  const Matrix2 n = jimm_matrix(m) * m;
  const Integer disc = (n.d - n.a) * (n.d - n.a) + 4 * n.b * n.c;
  if (sgn(disc) <= 0 || is_perfect_square(disc)) {
    throw std::domain_error("jimm(m)*m is not hyperbolic: " + n.str());
  }
  QuadSurd best;
  bool found = false;
  for (int s : {1, -1}) {
    QuadSurd x(n.a - n.d, s, disc, 2 * n.c);
    QuadSurd slope = QuadSurd(Rational(n.c)) * x + QuadSurd(Rational(n.d));
    if (slope * slope > QuadSurd(1)) {
      best = x;
      found = true;
      break;
    }
  }
  if (!found) throw std::logic_error("no attracting fixed point");
  SurdImage image = jimm_surd(best);
  if (image.noble || !exact_equal(image.value, mobius_apply(m, best))) {
    throw std::logic_error("fixed point " + best.str() + " does not satisfy jimm(x) = m(x)");
  }
  return {m, best};
}

bool is_noble(const QuadSurd& x) {
  if (x.is_rational()) return false;
  const ContinuedFraction cf = surd_to_periodic_cf(x);
  const Quotients& per = cf.period();
  return per.size() == 1 && per[0] == 1;
}

std::optional<bool> galois_commute_check(const QuadSurd& x) {
  const QuadSurd c = x.conjugate();
  if (is_noble(x) || is_noble(c)) return std::nullopt;
  ExactReal lhs = jimm_surd(c).value;
  ExactReal rhs = jimm_surd(x).value;
  return exact_equal(lhs, std::get<QuadSurd>(rhs).conjugate());
}

}  // namespace jimm
