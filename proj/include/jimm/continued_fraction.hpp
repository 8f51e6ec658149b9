#pragma once

#include "jimm/integer.hpp"
#include "jimm/matrix.hpp"
#include "jimm/quad_surd.hpp"
#include "jimm/rational.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace jimm {

using Quotients = std::vector<Integer>;

/**
 * Lazily pulled, memoized sequence of partial quotients. Copies share the
 * memo, so a stream behaves like one immutable (possibly infinite) list.
 */
class CfStream {
 public:
  using Source = std::function<std::optional<Integer>()>;

  CfStream();
  explicit CfStream(Source source);

  static CfStream from_quotients(Quotients terms);
  static CfStream cycle(Quotients preperiod, Quotients period);

  /// The i-th quotient, or nullptr if the source ends before index i. The pointer stays valid.
  const Integer* at(std::size_t i) const;
  /// Up to n leading quotients.
  Quotients prefix(std::size_t n) const;

 private:
  struct State;
  std::shared_ptr<State> state_;
};

enum class CfKind { Finite, Periodic, Stream };

/**
 * Regular continued fraction [a0; a1, a2, ...]: a0 is any integer, later
 * quotients are >= 1. Finite and periodic values are kept canonical; an
 * empty finite expansion stands for infinity.
 */
class ContinuedFraction {
 public:
  static ContinuedFraction finite(Quotients terms);
  static ContinuedFraction periodic(Quotients preperiod, Quotients period);
  static ContinuedFraction stream(CfStream source);

  CfKind kind() const { return kind_; }
  bool is_infinity() const { return kind_ == CfKind::Finite && head_.empty(); }

  /// Finite terms, or the preperiod of a periodic expansion.
  const Quotients& terms() const { return head_; }
  const Quotients& preperiod() const { return head_; }
  const Quotients& period() const { return period_; }
  const CfStream& source() const { return stream_; }

  /// Quotient at index i; empty past the end of a finite expansion.
  std::optional<Integer> at(std::size_t i) const;

  /// Streams show `shown` terms followed by "...".
  std::string str(std::size_t shown = 12) const;

  friend bool operator==(const ContinuedFraction& x, const ContinuedFraction& y);

 private:
  CfKind kind_ = CfKind::Finite;
  Quotients head_;
  Quotients period_;
  CfStream stream_;
};

ContinuedFraction rational_to_cf(const Rational& q);
Rational cf_to_rational(const ContinuedFraction& cf);
/// [.., a] -> [.., a-1, 1]; the other expansion of the same rational.
Quotients split_last_quotient(const ContinuedFraction& cf);

ContinuedFraction surd_to_periodic_cf(const QuadSurd& x);
QuadSurd periodic_cf_to_surd(const ContinuedFraction& cf);

/// Convergent matrix [[p_n, p_{n-1}], [q_n, q_{n-1}]] of the given quotients.
Matrix2 convergent_matrix(const Quotients& terms);

/**
 * Parses "[a0;a1,...]", "[a0;...,(p1,p2)]", "[(1)]". A term "v_k" stands for
 * v repeated k times. A trailing "..." is reported through `open_ended`.
 */
struct ParsedCf {
  Quotients head;
  Quotients period;
  bool has_period = false;
  bool open_ended = false;
};
ParsedCf parse_cf_literal(std::string_view text);
ContinuedFraction parse_cf(std::string_view text);

}  // namespace jimm
