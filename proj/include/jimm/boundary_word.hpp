#pragma once

#include "jimm/continued_fraction.hpp"
#include "jimm/matrix.hpp"
#include "jimm/quad_surd.hpp"
#include "jimm/rational.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace jimm {

using Bits = std::vector<bool>;

/// A real number that is either rational (possibly infinite) or a quadratic surd.
using ExactReal = std::variant<Rational, QuadSurd>;

std::string to_string(const ExactReal& x);
bool exact_equal(const ExactReal& x, const ExactReal& y);

enum class TailKind { ConstantZero, ConstantOne, Periodic };

/**
 * Eventually periodic path to an end of the Farey tree: an optional leading S
 * (negative numbers), a finite head, and a repeating tail. Bit 0 is a step
 * through L, bit 1 a step through L^2.
 *
 * Stored minimal: the period is primitive and the head does not end with the
 * last bit of the period.
 */
class BoundaryWord {
 public:
  BoundaryWord() : period_{false} {}
  BoundaryWord(bool negative, Bits head, Bits period);

  bool negative() const { return negative_; }
  const Bits& head() const { return head_; }
  const Bits& period() const { return period_; }
  TailKind tail_kind() const;
  bool is_rational_type() const { return tail_kind() != TailKind::Periodic; }

  bool bit(std::size_t i) const;
  Bits prefix(std::size_t n) const;

  /// Bitwise negation of the unsigned part (the map x -> 1/x on [0, inf]).
  BoundaryWord complemented() const;

  /// "-0110(01)"; constant tails print as "(0)" or "(1)".
  std::string str() const;

  friend bool operator==(const BoundaryWord& x, const BoundaryWord& y) {
    return x.negative_ == y.negative_ && x.head_ == y.head_ && x.period_ == y.period_;
  }

 private:
  bool negative_ = false;
  Bits head_;
  Bits period_;
};

/// Accepts "0110(01)", "-1(10)", "010..." (last bit repeats) and "(0)".
BoundaryWord parse_word(std::string_view text);

const BoundaryWord& phi_word();       // (01)
const BoundaryWord& phi_star_word();  // (10)

/// Termwise XOR of the unsigned parts; the sign flag of `word` is kept.
BoundaryWord xor_words(const BoundaryWord& word, const BoundaryWord& mask);

/// Finite expansions give the representative ending in 0 1^w. Streams are rejected.
BoundaryWord cf_to_word(const ContinuedFraction& cf);
ContinuedFraction word_to_cf(const BoundaryWord& w);
ExactReal word_value(const BoundaryWord& w);

/// (limit-from-below word, limit-from-above word) of a finite rational.
std::pair<BoundaryWord, BoundaryWord> rational_two_words(const Rational& q);

/// Closed interval; in the negative sector an infinite lo means -infinity.
struct FareyInterval {
  Rational lo;
  Rational hi;

  bool contains(const Rational& x) const;
  bool contains(const QuadSurd& x) const;
  bool is_unimodular() const;
  std::string str() const;
};

/// Mobius map sending the tail value of a word to the value of prefix+tail.
Matrix2 prefix_matrix(const Bits& prefix, bool negative = false);
FareyInterval interval_of_prefix(const Bits& prefix, bool negative = false);

/// Real-order comparison of two non-equivalent eventually periodic words.
int compare_words(const BoundaryWord& x, const BoundaryWord& y);

}  // namespace jimm
