#include "jimm/continued_fraction.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <optional>
#include <stdexcept>

namespace jimm {

struct CfStream::State {
  Source source;
  std::deque<Integer> memo;  // deque: pointers from at() stay valid as it grows
  bool exhausted = false;
};

CfStream::CfStream() : state_(std::make_shared<State>()) { state_->exhausted = true; }

CfStream::CfStream(Source source) : state_(std::make_shared<State>()) {
  state_->source = std::move(source);
}

CfStream CfStream::from_quotients(Quotients terms) {
  auto index = std::make_shared<std::size_t>(0);
  auto data = std::make_shared<Quotients>(std::move(terms));
  return CfStream([index, data]() -> std::optional<Integer> {
    if (*index >= data->size()) return std::nullopt;
    return (*data)[(*index)++];
  });
}

CfStream CfStream::cycle(Quotients preperiod, Quotients period) {
  if (period.empty()) throw std::invalid_argument("empty period");
  auto index = std::make_shared<std::size_t>(0);
  auto pre = std::make_shared<Quotients>(std::move(preperiod));
  auto per = std::make_shared<Quotients>(std::move(period));
  return CfStream([index, pre, per]() -> std::optional<Integer> {
    std::size_t i = (*index)++;
    if (i < pre->size()) return (*pre)[i];
    return (*per)[(i - pre->size()) % per->size()];
  });
}

const Integer* CfStream::at(std::size_t i) const {
  State& s = *state_;
  while (s.memo.size() <= i && !s.exhausted) {
    auto next = s.source();
    if (!next) {
      s.exhausted = true;
      break;
    }
    if (!s.memo.empty() && sgn(*next) <= 0) {
      throw std::domain_error("continued fraction stream produced a quotient < 1");
    }
    s.memo.push_back(std::move(*next));
  }
  return i < s.memo.size() ? &s.memo[i] : nullptr;
}

Quotients CfStream::prefix(std::size_t n) const {
  Quotients out;
  for (std::size_t i = 0; i < n; ++i) {
    const Integer* q = at(i);
    if (q == nullptr) break;
    out.push_back(*q);
  }
  return out;
}

namespace {

void check_tail_positive(const Quotients& terms, std::size_t from) {
  for (std::size_t i = from; i < terms.size(); ++i) {
    if (sgn(terms[i]) <= 0) throw std::invalid_argument("partial quotients after the first must be >= 1");
  }
}

std::size_t primitive_period(const Quotients& period) {
  const std::size_t n = period.size();
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p != 0) continue;
    bool ok = true;
    for (std::size_t i = p; i < n && ok; ++i) ok = period[i] == period[i - p];
    if (ok) return p;
  }
  return n;
}

void append_cf(std::string& out, const Quotients& terms, std::size_t from) {
  for (std::size_t i = from; i < terms.size(); ++i) {
    if (i > from) out += ",";
    out += terms[i].get_str();
  }
}

}  // namespace

ContinuedFraction ContinuedFraction::finite(Quotients terms) {
  check_tail_positive(terms, 1);
  while (terms.size() > 1 && terms.back() == 1) {
    terms.pop_back();
    terms.back() += 1;
  }
  ContinuedFraction cf;
  cf.kind_ = CfKind::Finite;
  cf.head_ = std::move(terms);
  return cf;
}

ContinuedFraction ContinuedFraction::periodic(Quotients preperiod, Quotients period) {
  if (period.empty()) throw std::invalid_argument("periodic continued fraction needs a period");
  check_tail_positive(preperiod, 1);
  check_tail_positive(period, 0);
  period.resize(primitive_period(period));
  while (!preperiod.empty() && preperiod.back() == period.back()) {
    preperiod.pop_back();
    std::rotate(period.rbegin(), period.rbegin() + 1, period.rend());
  }
  ContinuedFraction cf;
  cf.kind_ = CfKind::Periodic;
  cf.head_ = std::move(preperiod);
  cf.period_ = std::move(period);
  return cf;
}

ContinuedFraction ContinuedFraction::stream(CfStream source) {
  ContinuedFraction cf;
  cf.kind_ = CfKind::Stream;
  cf.stream_ = std::move(source);
  return cf;
}

std::optional<Integer> ContinuedFraction::at(std::size_t i) const {
  switch (kind_) {
    case CfKind::Finite:
      if (i < head_.size()) return head_[i];
      return std::nullopt;
    case CfKind::Periodic:
      if (i < head_.size()) return head_[i];
      return period_[(i - head_.size()) % period_.size()];
    case CfKind::Stream: {
      const Integer* q = stream_.at(i);
      if (q == nullptr) return std::nullopt;
      return *q;
    }
  }
  return std::nullopt;
}

std::string ContinuedFraction::str(std::size_t shown) const {
  switch (kind_) {
    case CfKind::Finite: {
      if (head_.empty()) return "inf";
      std::string out = "[" + head_[0].get_str();
      if (head_.size() > 1) {
        out += ";";
        append_cf(out, head_, 1);
      }
      return out + "]";
    }
    case CfKind::Periodic: {
      std::string out = "[";
      if (!head_.empty()) {
        out += head_[0].get_str() + ";";
        append_cf(out, head_, 1);
        if (head_.size() > 1) out += ",";
      }
      out += "(";
      append_cf(out, period_, 0);
      return out + ")]";
    }
    case CfKind::Stream: {
      Quotients p = stream_.prefix(shown);
      if (p.empty()) return "inf";
      std::string out = "[" + p[0].get_str();
      if (p.size() > 1) {
        out += ";";
        append_cf(out, p, 1);
      }
      if (p.size() == shown) out += p.size() > 1 ? ",..." : ";...";
      return out + "]";
    }
  }
  return {};
}

bool operator==(const ContinuedFraction& x, const ContinuedFraction& y) {
  if (x.kind_ != y.kind_) return false;
  if (x.kind_ == CfKind::Stream) return x.stream_.at(0) == y.stream_.at(0);
  return x.head_ == y.head_ && x.period_ == y.period_;
}

ContinuedFraction rational_to_cf(const Rational& q) {
  if (q.is_infinite()) throw std::domain_error("rational_to_cf: infinity has no regular expansion");
  Quotients terms;
  Integer n = q.num();
  Integer d = q.den();
  while (sgn(d) != 0) {
    Integer a = floor_div(n, d);
    terms.push_back(a);
    Integer rem = n - a * d;
    n = d;
    d = rem;
  }
  return ContinuedFraction::finite(std::move(terms));
}

Matrix2 convergent_matrix(const Quotients& terms) {
  // [[p_n, p_{n-1}], [q_n, q_{n-1}]] by the usual recurrence, updated in place
  Matrix2 m;
  for (const Integer& a : terms) {
    mpz_swap(m.a.get_mpz_t(), m.b.get_mpz_t());
    mpz_swap(m.c.get_mpz_t(), m.d.get_mpz_t());
    mpz_addmul(m.a.get_mpz_t(), a.get_mpz_t(), m.b.get_mpz_t());
    mpz_addmul(m.c.get_mpz_t(), a.get_mpz_t(), m.d.get_mpz_t());
  }
  return m;
}

Rational cf_to_rational(const ContinuedFraction& cf) {
  if (cf.kind() != CfKind::Finite) throw std::domain_error("cf_to_rational needs a finite expansion");
  Matrix2 m = convergent_matrix(cf.terms());
  return Rational(m.a, m.c);
}

Quotients split_last_quotient(const ContinuedFraction& cf) {
  if (cf.kind() != CfKind::Finite || cf.is_infinity()) {
    throw std::domain_error("split_last_quotient needs a finite rational expansion");
  }
  Quotients terms = cf.terms();
  terms.back() -= 1;
  terms.push_back(1);
  return terms;
}

ContinuedFraction surd_to_periodic_cf(const QuadSurd& x) {
  if (x.is_rational()) throw std::domain_error("surd_to_periodic_cf: value is rational");
  // x = (P + sqrt(D)) / Q with Q | D - P^2
  Integer P = x.p();
  Integer D = x.q() * x.q() * x.d();
  Integer Q = x.r();
  if (sgn(x.q()) < 0) {
    P = -P;
    Q = -Q;
  }
  if (is_perfect_square(D)) throw std::domain_error("surd_to_periodic_cf: radicand is a square");
  if (Integer((D - P * P) % Q) != 0) {
    Integer absq = abs(Q);
    P *= absq;
    D *= Q * Q;
    Q *= absq;
  }
  const Integer root = isqrt(D);
  const std::size_t bits = mpz_sizeinbase(D.get_mpz_t(), 2);
  // Reduced states appear after about as many steps as Euclid needs on P and Q.
  const std::size_t size_bits = mpz_sizeinbase(P.get_mpz_t(), 2) + mpz_sizeinbase(Q.get_mpz_t(), 2);
  const Integer bound = Integer(64) + Integer(4) * (root + 1) * (bits + 1) + Integer(4) * (size_bits + 2);

  // (P + sqrt D)/Q is reduced (> 1, conjugate in (-1, 0)) iff 0 < P <= root and
  // root - P < Q <= root + P. From the first reduced state on the expansion is
  // purely periodic.
  auto reduced = [&] { return sgn(P) > 0 && P <= root && Q > root - P && Q <= root + P; };
  std::optional<std::pair<Integer, Integer>> first_reduced;
  std::size_t period_start = 0;
  Quotients quotients;
  while (true) {
    if (first_reduced) {
      if (P == first_reduced->first && Q == first_reduced->second) {
        Quotients pre(quotients.begin(), quotients.begin() + static_cast<long>(period_start));
        Quotients per(quotients.begin() + static_cast<long>(period_start), quotients.end());
        return ContinuedFraction::periodic(std::move(pre), std::move(per));
      }
    } else if (reduced()) {
      first_reduced.emplace(P, Q);
      period_start = quotients.size();
    }
    if (Integer(quotients.size()) > bound) {
      throw std::logic_error("surd_to_periodic_cf: no period within the discriminant bound");
    }
    Integer a = sgn(Q) > 0 ? floor_div(P + root, Q) : floor_div(P + root + 1, Q);
    quotients.push_back(a);
    P = a * Q - P;
    Q = (D - P * P) / Q;
  }
}

QuadSurd periodic_cf_to_surd(const ContinuedFraction& cf) {
  if (cf.kind() != CfKind::Periodic) throw std::domain_error("periodic_cf_to_surd needs a periodic expansion");
  Matrix2 m = convergent_matrix(cf.period());
  // fixed point y > 1 of y -> (a y + b)/(c y + d):  c y^2 + (d - a) y - b = 0
  Integer disc = (m.d - m.a) * (m.d - m.a) + 4 * m.b * m.c;
  if (sgn(m.c) <= 0 || is_perfect_square(disc)) {
    throw std::logic_error("period matrix is not hyperbolic");
  }
  QuadSurd y(m.a - m.d, 1, disc, 2 * m.c);
  return mobius_apply(convergent_matrix(cf.preperiod()), y);
}

ParsedCf parse_cf_literal(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') {
    throw std::invalid_argument("continued fraction literal must be bracketed: '" + std::string(text) + "'");
  }
  s = s.substr(1, s.size() - 2);
  ParsedCf out;
  bool in_period = false;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    if (token == "...") {
      out.open_ended = true;
    } else {
      if (out.open_ended) throw std::invalid_argument("terms after '...'");
      auto underscore = token.find('_');
      Integer value = parse_integer(token.substr(0, underscore));
      long repeat = 1;
      if (underscore != std::string::npos) repeat = std::stol(token.substr(underscore + 1));
      if (repeat < 0) throw std::invalid_argument("negative repetition count");
      for (long i = 0; i < repeat; ++i) (in_period ? out.period : out.head).push_back(value);
    }
    token.clear();
  };
  for (char ch : s) {
    if (ch == ';' || ch == ',') {
      flush();
    } else if (ch == '(') {
      flush();
      if (out.has_period) throw std::invalid_argument("only one periodic block is allowed");
      in_period = true;
      out.has_period = true;
    } else if (ch == ')') {
      flush();
      if (!in_period) throw std::invalid_argument("unbalanced ')'");
      in_period = false;
    } else {
      token += ch;
    }
  }
  flush();
  if (in_period) throw std::invalid_argument("unbalanced '('");
  if (out.has_period && out.period.empty()) throw std::invalid_argument("empty period");
  if (out.has_period && out.open_ended) throw std::invalid_argument("'...' after a period");
  return out;
}

ContinuedFraction parse_cf(std::string_view text) {
  ParsedCf p = parse_cf_literal(text);
  if (p.open_ended) throw std::invalid_argument("open-ended expansion needs a known constant");
  if (p.has_period) return ContinuedFraction::periodic(std::move(p.head), std::move(p.period));
  if (p.head.empty()) throw std::invalid_argument("empty continued fraction");
  return ContinuedFraction::finite(std::move(p.head));
}

}  // namespace jimm
