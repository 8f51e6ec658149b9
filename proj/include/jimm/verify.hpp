#pragma once

#include "jimm/experiments.hpp"
#include "jimm/gl2_word.hpp"
#include "jimm/quad_surd.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace jimm {

struct PropertyResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string counterexample;  // first failing case
  bool passed() const { return failures == 0 && cases > 0; }
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<PropertyResult> properties;
  bool passed() const;
};

/// Counts cases; a case fails when `check` returns false or throws.
class PropertyRecorder {
 public:
  explicit PropertyRecorder(std::string name) { result_.name = std::move(name); }
  void check(const std::function<bool()>& test, const std::function<std::string()>& describe);
  PropertyResult result() const { return result_; }

 private:
  PropertyResult result_;
};

/// Random test inputs, all drawn from one seeded generator.
class SampleSource {
 public:
  explicit SampleSource(std::uint64_t seed) : rng_(seed, 0x5eed) {}
  std::int64_t range(std::int64_t lo, std::int64_t hi);
  /// (p + q sqrt d)/r with |p| <= 20, 1 <= |q| <= 5, d <= 30 squarefree, r <= 10; never noble.
  QuadSurd surd();
  /// Non-noble surd in (0, 1).
  QuadSurd unit_surd();
  Rational positive_rational(std::int64_t max = 1000);
  GL2Word word(std::size_t max_length = 12);

 private:
  SampleRng rng_;
};

const std::vector<std::string>& suite_names();

/// Suites: fe, involution, galois, matrix-table, mcmullen, delta, dynamics,
/// rayleigh, words, structure, all. `scale` multiplies the sample counts.
SuiteReport run_suite(std::string_view name, std::uint64_t seed, double scale = 1.0);

/// The worked matrix examples: (M, jimm(M)).
const std::vector<std::pair<Matrix2, Matrix2>>& matrix_table();

/// [1_{k+1},4,5,1_k,3] repeating, and its image [k+2; (1_2,2,1_3,k+2,1,k+3)].
/// Printed compactly as [k+2, (2,2,3,k+2,1,k+3)] with the runs 1_2, 1_3 shortened to 2, 3.
std::pair<ContinuedFraction, ContinuedFraction> mcmullen_case(long k);
/// [0; (1_{n-1}, a)] and its image [0; n, (1_{a-2}, n+1)], printed compactly as [0; n, (a-2, n+1)].
std::pair<ContinuedFraction, ContinuedFraction> unit_family_case(long n, long a);

}  // namespace jimm
