#include "helpers.hpp"

#include "jimm/experiments.hpp"
#include "jimm/stream_ops.hpp"

#include <doctest.h>

#include <cmath>

using namespace jimm;
using namespace jimm::testing;

TEST_SUITE("experiments") {

TEST_CASE("samples are deterministic") {
  CHECK(gauss_kuzmin_stream(1, 7).prefix(40) == gauss_kuzmin_stream(1, 7).prefix(40));
  CHECK(gauss_kuzmin_stream(1, 7).prefix(40) != gauss_kuzmin_stream(2, 7).prefix(40));
  CHECK(*gauss_kuzmin_stream(3, 0).at(0) == 0);
  SampleRng a(5, 5), b(5, 5);
  for (int i = 0; i < 10; ++i) CHECK(a.uniform() == b.uniform());
}

TEST_CASE("gauss-kuzmin law") {
  CHECK(gauss_kuzmin_probability(1) == doctest::Approx(0.4150).epsilon(1e-4));
  CHECK(gauss_kuzmin_probability(2) == doctest::Approx(0.1699).epsilon(1e-3));
  SampleRng rng(1, 0);
  int ones = 0;
  const int n = 20000;
  for (int i = 0; i < n; ++i) ones += rng.gauss_kuzmin() == 1 ? 1 : 0;
  CHECK(static_cast<double>(ones) / n == doctest::Approx(gauss_kuzmin_probability(1)).epsilon(0.05));
}

TEST_CASE("density report") {
  ExperimentConfig cfg;
  cfg.samples = 20;
  cfg.depth = 300;
  const DensityReport a = density_of_ones(cfg);
  const DensityReport b = density_of_ones(cfg);
  CHECK(a.per_sample == b.per_sample);
  CHECK(a.per_sample.size() == 20);
  CHECK(a.stats.mean > 0.8);
  CHECK(a.stats.ci_low <= a.stats.mean);
}

TEST_CASE("limiting density closed forms") {
  CHECK(limiting_ones_density(QuadSurd::sqrt(2) - 1) == 0.0);
  CHECK(limiting_ones_density(surd(-5, 1, 29, 2)) == doctest::Approx(0.75));
}

TEST_CASE("derivative at [0;(5)]") {
  // Single slopes fluctuate from one k to the next; the envelope falls.
  const QuadSurd a = periodic_cf_to_surd(ContinuedFraction::periodic({0}, {5}));
  const DerivativeProbe probe = derivative_probe(a, {4, 5, 6, 10, 11, 12});
  double coarse = 0, fine = 0, last = 0;
  for (const SlopeSample& s : probe.slopes) {
    (s.k <= 6 ? coarse : fine) = std::max(s.k <= 6 ? coarse : fine, s.slope);
    if (s.k == 12) last = std::max(last, s.slope);
  }
  CHECK(fine < coarse / 10);
  CHECK(last < 1e-3);
  CHECK(probe.running_means.size() == 50);
}

TEST_CASE("integral symmetry") {
  ExperimentConfig cfg;
  cfg.samples = 2000;
  const IntegralReport r = integral_symmetry(cfg);
  CHECK(r.pair_estimate == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(r.max_pair_deviation < 1e-12);
  CHECK(r.lower_half + r.upper_half == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(std::abs(r.estimate - 0.5) < 0.05);
}

TEST_CASE("beatty duality") {
  CHECK(beatty_duality(QuadSurd::sqrt(2), 10000).ok());
  CHECK(beatty_duality(surd(2, 1, 3), 10000).ok());
  CHECK(beatty_duality(surd(5, 1, 10, 3), 10000).ok());
  CHECK_THROWS(beatty_duality(surd(1, 1, 5, 2), 100));
  CHECK_FALSE(beatty_partition(QuadSurd::sqrt(2), QuadSurd::sqrt(3), 100));
}

TEST_CASE("frequency table") {
  ExperimentConfig cfg;
  cfg.samples = 10;
  cfg.depth = 200;
  const FrequencyTable t = gauss_kuzmin_freq(cfg, 5);
  REQUIRE(t.rows.size() == 5);
  CHECK(t.rows[0].theoretical == doctest::Approx(std::log2(4.0 / 3.0)));
  CHECK(t.image_ones > 0.8);
}

TEST_CASE("summary statistics") {
  const SummaryStats s = summarize({1, 2, 3, 4});
  CHECK(s.mean == doctest::Approx(2.5));
  CHECK(s.min == 1);
  CHECK(s.max == 4);
}

}  // TEST_SUITE
