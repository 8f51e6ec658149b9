#pragma once

#include "jimm/continued_fraction.hpp"
#include "jimm/quad_surd.hpp"
#include "jimm/rational.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <variant>
#include <vector>

namespace jimm {

struct ExperimentConfig {
  std::uint64_t seed = 1;
  std::size_t samples = 500;
  std::size_t depth = 2000;  // continued fraction digits of each sample X
  double tolerance = 0.01;
};

/// Per-sample generator seeded from (seed, index).
class SampleRng {
 public:
  SampleRng(std::uint64_t seed, std::uint64_t index);
  /// Uniform on the open interval (0, 1), 53 random bits.
  double uniform();
  std::uint64_t bits53();
  /// A partial quotient with the Gauss-Kuzmin law P(N >= k) = log2(1 + 1/k).
  Integer gauss_kuzmin();

 private:
  std::mt19937_64 engine_;
};

/// [0; N1, N2, ...] with i.i.d. Gauss-Kuzmin quotients; infinite and deterministic.
CfStream gauss_kuzmin_stream(std::uint64_t seed, std::uint64_t index);

/// log2(1 + 1/(k(k+2))).
double gauss_kuzmin_probability(long k);

struct SummaryStats {
  double mean = 0;
  double stddev = 0;
  double ci_low = 0;   // mean -/+ 1.96 standard errors
  double ci_high = 0;
  double min = 0;
  double max = 0;
};
SummaryStats summarize(const std::vector<double>& values);

struct DensityReport {
  ExperimentConfig config;
  std::vector<double> per_sample;  // share of 1's among certified quotients of jimm(X) after a0
  SummaryStats stats;
  /// Same share over only the first `depth` quotients of jimm(X).
  SummaryStats first_depth_outputs;
  double mean_output_length = 0;
};
DensityReport density_of_ones(const ExperimentConfig& cfg);

/// Limiting share of 1's in the expansion of jimm(x): the share in its period.
double limiting_ones_density(const QuadSurd& x);

using ProbePoint = std::variant<QuadSurd, CfStream>;

struct SlopeSample {
  int k = 0;
  int direction = 1;   // sign of h = direction * 10^-k
  double slope = 0;    // |jimm(a+h) - jimm(a)| / |h|
  std::string slope_text;
};

struct DerivativeProbe {
  std::string point;
  std::vector<SlopeSample> slopes;
  std::vector<Integer> running_sums;   // N_k = n_1 + ... + n_k
  std::vector<double> running_means;   // mu_k = N_k / k
};

/// Finite-difference slopes at h = +-10^-k for each k in `ks`.
DerivativeProbe derivative_probe(const ProbePoint& a, const std::vector<int>& ks, std::size_t stats_terms = 50);

struct IntegralReport {
  ExperimentConfig config;
  double estimate = 0;
  double standard_error = 0;
  double pair_estimate = 0;        // mean of (jimm(X) + jimm(1-X))/2
  double max_pair_deviation = 0;   // max |(jimm(X) + jimm(1-X))/2 - 1/2|
  double lower_half = 0;           // integral over [0,1/2]
  double upper_half = 0;           // integral over [1/2,1], by reflection
};
/// Monte Carlo over X uniform in (0,1): X = (m + Y)/2^53 with m uniform and Y a Gauss-Kuzmin stream.
IntegralReport integral_symmetry(const ExperimentConfig& cfg);

struct BeattyReport {
  QuadSurd x, y;            // 1/x + 1/y = 1
  QuadSurd dual_x, dual_y;  // jimm(x), jimm(y)
  long limit = 0;
  bool partition = false;
  bool harmonic_dual = false;
  bool dual_partition = false;
  bool ok() const { return partition && harmonic_dual && dual_partition; }
};

/// Checks that floor(n a) and floor(n b) hit every integer in 1..limit exactly once.
bool beatty_partition(const QuadSurd& a, const QuadSurd& b, long limit);
/// x > 1 irrational and not noble.
BeattyReport beatty_duality(const QuadSurd& x, long limit);

struct FrequencyRow {
  long k = 0;
  double theoretical = 0;
  double sample = 0;  // empirical frequency among the quotients of X
  double image = 0;   // empirical frequency among the certified quotients of jimm(X)
};
struct FrequencyTable {
  ExperimentConfig config;
  std::vector<FrequencyRow> rows;
  double image_ones = 0;
};
FrequencyTable gauss_kuzmin_freq(const ExperimentConfig& cfg, long max_k = 10);

}  // namespace jimm
