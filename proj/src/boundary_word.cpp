#include "jimm/boundary_word.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace jimm {

std::string to_string(const ExactReal& x) {
  return std::visit([](const auto& v) { return v.str(); }, x);
}

bool exact_equal(const ExactReal& x, const ExactReal& y) {
  if (x.index() != y.index()) {
    const Rational* r = std::get_if<Rational>(&x);
    const QuadSurd* s = std::get_if<QuadSurd>(&y);
    if (r == nullptr) {
      r = std::get_if<Rational>(&y);
      s = std::get_if<QuadSurd>(&x);
    }
    return !r->is_infinite() && s->is_rational() && s->to_rational() == *r;
  }
  if (const auto* r = std::get_if<Rational>(&x)) return *r == std::get<Rational>(y);
  return std::get<QuadSurd>(x) == std::get<QuadSurd>(y);
}

namespace {

std::size_t primitive_length(const Bits& period) {
  const std::size_t n = period.size();
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p != 0) continue;
    bool ok = true;
    for (std::size_t i = p; i < n && ok; ++i) ok = period[i] == period[i - p];
    if (ok) return p;
  }
  return n;
}

void append_run(Bits& bits, bool bit, const Integer& count) {
  if (count > 50'000'000) throw std::length_error("word too long to expand bitwise");
  bits.insert(bits.end(), count.get_ui(), bit);
}

// Run lengths of a bit string, first run counting zeros (possibly none).
Quotients runs_of(const Bits& bits) {
  Quotients runs;
  bool current = false;
  Integer count = 0;
  for (bool b : bits) {
    if (b != current) {
      runs.push_back(count);
      current = b;
      count = 0;
    }
    ++count;
  }
  runs.push_back(count);
  return runs;
}

// Word of an expansion whose value is positive (or zero).
BoundaryWord positive_word(const ContinuedFraction& cf) {
  if (cf.kind() == CfKind::Finite) {
    const Quotients& t = cf.terms();
    Bits head;
    for (std::size_t i = 0; i + 1 < t.size(); ++i) append_run(head, i % 2 == 1, t[i]);
    const std::size_t last = t.size() - 1;
    if (last % 2 == 0) {
      append_run(head, false, t[last]);
    } else {
      append_run(head, true, t[last] - 1);
      head.push_back(false);
    }
    return BoundaryWord(false, std::move(head), Bits{true});
  }
  const Quotients& pre = cf.preperiod();
  const Quotients& per = cf.period();
  Bits head;
  for (std::size_t i = 0; i < pre.size(); ++i) append_run(head, i % 2 == 1, pre[i]);
  Bits period;
  const std::size_t reps = per.size() % 2 == 1 ? 2 : 1;
  for (std::size_t j = 0; j < reps * per.size(); ++j) {
    append_run(period, (pre.size() + j) % 2 == 1, per[j % per.size()]);
  }
  return BoundaryWord(false, std::move(head), std::move(period));
}

ContinuedFraction negative_reciprocal_cf(const ContinuedFraction& cf) {
  if (cf.kind() == CfKind::Finite) {
    Rational v = cf.is_infinity() ? Rational::infinity() : cf_to_rational(cf);
    Rational w = v.is_infinite() ? Rational(0) : -v.reciprocal();
    if (w.is_infinite()) return ContinuedFraction::finite({});
    return rational_to_cf(w);
  }
  QuadSurd v = periodic_cf_to_surd(cf);
  return surd_to_periodic_cf(-v.reciprocal());
}

}  // namespace

BoundaryWord::BoundaryWord(bool negative, Bits head, Bits period)
    : negative_(negative), head_(std::move(head)), period_(std::move(period)) {
  if (period_.empty()) throw std::invalid_argument("boundary word needs a nonempty period");
  period_.resize(primitive_length(period_));
  while (!head_.empty() && head_.back() == period_.back()) {
    head_.pop_back();
    std::rotate(period_.rbegin(), period_.rbegin() + 1, period_.rend());
  }
}

TailKind BoundaryWord::tail_kind() const {
  if (period_.size() > 1) return TailKind::Periodic;
  return period_[0] ? TailKind::ConstantOne : TailKind::ConstantZero;
}

bool BoundaryWord::bit(std::size_t i) const {
  if (i < head_.size()) return head_[i];
  return period_[(i - head_.size()) % period_.size()];
}

Bits BoundaryWord::prefix(std::size_t n) const {
  Bits out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = bit(i);
  return out;
}

BoundaryWord BoundaryWord::complemented() const {
  Bits h = head_;
  Bits p = period_;
  h.flip();
  p.flip();
  return BoundaryWord(negative_, std::move(h), std::move(p));
}

std::string BoundaryWord::str() const {
  std::string out = negative_ ? "-" : "";
  for (bool b : head_) out += b ? '1' : '0';
  out += '(';
  for (bool b : period_) out += b ? '1' : '0';
  return out + ')';
}

BoundaryWord parse_word(std::string_view text) {
  bool negative = false;
  if (!text.empty() && text.front() == '-') {
    negative = true;
    text.remove_prefix(1);
  }
  auto bits_of = [](std::string_view s) {
    Bits b;
    for (char ch : s) {
      if (ch == '0' || ch == '1') {
        b.push_back(ch == '1');
      } else if (ch != ' ') {
        throw std::invalid_argument("word literals use only 0 and 1");
      }
    }
    return b;
  };
  if (text.size() >= 3 && text.substr(text.size() - 3) == "...") {
    Bits head = bits_of(text.substr(0, text.size() - 3));
    if (head.empty()) throw std::invalid_argument("'...' needs a bit to repeat");
    bool last = head.back();
    return BoundaryWord(negative, head, Bits{last});
  }
  auto open = text.find('(');
  if (open == std::string_view::npos || text.back() != ')') {
    throw std::invalid_argument("word literal needs a periodic tail like 0110(01)");
  }
  return BoundaryWord(negative, bits_of(text.substr(0, open)),
                      bits_of(text.substr(open + 1, text.size() - open - 2)));
}

const BoundaryWord& phi_word() {
  static const BoundaryWord w(false, {}, Bits{false, true});
  return w;
}

const BoundaryWord& phi_star_word() {
  static const BoundaryWord w(false, {}, Bits{true, false});
  return w;
}

BoundaryWord xor_words(const BoundaryWord& word, const BoundaryWord& mask) {
  const std::size_t head = std::max(word.head().size(), mask.head().size());
  const std::size_t period = std::lcm(word.period().size(), mask.period().size());
  Bits h(head);
  Bits p(period);
  for (std::size_t i = 0; i < head; ++i) h[i] = word.bit(i) != mask.bit(i);
  for (std::size_t i = 0; i < period; ++i) p[i] = word.bit(head + i) != mask.bit(head + i);
  return BoundaryWord(word.negative(), std::move(h), std::move(p));
}

BoundaryWord cf_to_word(const ContinuedFraction& cf) {
  if (cf.kind() == CfKind::Stream) throw std::domain_error("cf_to_word needs a finite or periodic expansion");
  if (cf.is_infinity()) return BoundaryWord(false, {}, Bits{false});
  const Integer& a0 = cf.kind() == CfKind::Finite ? cf.terms()[0] : *cf.at(0);
  if (sgn(a0) >= 0) return positive_word(cf);
  BoundaryWord w = positive_word(negative_reciprocal_cf(cf));
  return BoundaryWord(true, w.head(), w.period());
}

ContinuedFraction word_to_cf(const BoundaryWord& w) {
  ContinuedFraction positive;
  if (w.is_rational_type()) {
    const bool tail_bit = w.period()[0];
    if (w.head().empty()) {
      positive = tail_bit ? ContinuedFraction::finite({Integer(0)}) : ContinuedFraction::finite({});
    } else {
      positive = ContinuedFraction::finite(runs_of(w.head()));
    }
  } else {
    const Bits& p = w.period();
    const std::size_t n = p.size();
    std::size_t j = 1;
    while (p[j % n] == p[j - 1]) ++j;
    Bits head = w.head();
    head.insert(head.end(), p.begin(), p.begin() + static_cast<long>(j));
    Bits rotated(n);
    for (std::size_t i = 0; i < n; ++i) rotated[i] = p[(j + i) % n];
    Quotients pre = runs_of(head);
    Quotients per = runs_of(rotated);
    // rotated starts with a one-run when the run count of head is odd,
    // in which case runs_of reports a spurious empty zero-run first.
    if (rotated[0]) per.erase(per.begin());
    positive = ContinuedFraction::periodic(std::move(pre), std::move(per));
  }
  if (!w.negative()) return positive;
  return negative_reciprocal_cf(positive);
}

ExactReal word_value(const BoundaryWord& w) {
  ContinuedFraction cf = word_to_cf(w);
  if (cf.kind() == CfKind::Periodic) return periodic_cf_to_surd(cf);
  if (cf.is_infinity()) return Rational::infinity();
  return cf_to_rational(cf);
}

std::pair<BoundaryWord, BoundaryWord> rational_two_words(const Rational& q) {
  if (q.is_infinite()) throw std::domain_error("rational_two_words: infinity");
  if (q.sign() == 0) {
    return {BoundaryWord(true, {}, Bits{false}), BoundaryWord(false, {}, Bits{true})};
  }
  if (q.sign() < 0) {
    auto [below, above] = rational_two_words(-q.reciprocal());
    return {BoundaryWord(true, below.head(), below.period()),
            BoundaryWord(true, above.head(), above.period())};
  }
  BoundaryWord above = cf_to_word(rational_to_cf(q));
  Bits a = above.head();
  a.back() = true;
  return {BoundaryWord(false, std::move(a), Bits{false}), above};
}

bool FareyInterval::contains(const Rational& x) const {
  const bool lo_ok = lo.is_infinite() || lo <= x;
  const bool hi_ok = hi.is_infinite() || x <= hi;
  if (x.is_infinite()) return lo.is_infinite() || hi.is_infinite();
  return lo_ok && hi_ok;
}

bool FareyInterval::contains(const QuadSurd& x) const {
  const bool lo_ok = lo.is_infinite() || QuadSurd(lo) <= x;
  const bool hi_ok = hi.is_infinite() || x <= QuadSurd(hi);
  return lo_ok && hi_ok;
}

bool FareyInterval::is_unimodular() const {
  auto num = [](const Rational& r) { return r.is_infinite() ? Integer(1) : r.num(); };
  auto den = [](const Rational& r) { return r.is_infinite() ? Integer(0) : r.den(); };
  return abs(num(lo) * den(hi) - den(lo) * num(hi)) == 1;
}

std::string FareyInterval::str() const {
  return "[" + (lo.is_infinite() ? std::string("-inf") : lo.str()) + ", " + hi.str() + "]";
}

Matrix2 prefix_matrix(const Bits& prefix, bool negative) {
  static const Matrix2 step_l{1, 1, 0, 1};   // LS: x -> x + 1
  static const Matrix2 step_l2{1, 0, 1, 1};  // L^2 S: x -> x / (x + 1)
  Matrix2 m = negative ? Matrix2{0, 1, -1, 0} : Matrix2::identity();
  for (bool b : prefix) m = m * (b ? step_l2 : step_l);
  return m;
}

FareyInterval interval_of_prefix(const Bits& prefix, bool negative) {
  Matrix2 m = prefix_matrix(prefix, negative);
  Rational x = mobius_apply(m, Rational(0));
  Rational y = mobius_apply(m, Rational::infinity());
  if (negative) {
    if (x.is_infinite() || (!y.is_infinite() && y < x)) std::swap(x, y);
    return {x, y};
  }
  if (y < x) std::swap(x, y);
  return {x, y};
}

int compare_words(const BoundaryWord& x, const BoundaryWord& y) {
  if (x.negative() != y.negative()) return x.negative() ? -1 : 1;
  const std::size_t n = std::max(x.head().size(), y.head().size()) +
                        std::lcm(x.period().size(), y.period().size());
  for (std::size_t i = 0; i < n; ++i) {
    if (x.bit(i) != y.bit(i)) return x.bit(i) ? -1 : 1;
  }
  return 0;
}

}  // namespace jimm
