#include "jimm/experiments.hpp"

#include "jimm/jimm.hpp"
#include "jimm/stream_ops.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>

namespace jimm {

SampleRng::SampleRng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  engine_.seed(seq);
}

std::uint64_t SampleRng::bits53() { return engine_() >> 11; }

double SampleRng::uniform() { return (static_cast<double>(bits53()) + 0.5) * 0x1p-53; }

Integer SampleRng::gauss_kuzmin() {
  const double u = uniform();
  const double n = std::floor(1.0 / std::expm1(u * std::log(2.0)));
  return Integer(std::max(n, 1.0));
}

CfStream gauss_kuzmin_stream(std::uint64_t seed, std::uint64_t index) {
  auto rng = std::make_shared<SampleRng>(seed, index);
  auto started = std::make_shared<bool>(false);
  return CfStream([rng, started]() -> std::optional<Integer> {
    if (!*started) {
      *started = true;
      return Integer(0);
    }
    return rng->gauss_kuzmin();
  });
}

double gauss_kuzmin_probability(long k) {
  const double kk = static_cast<double>(k);
  return std::log2(1.0 + 1.0 / (kk * (kk + 2.0)));
}

SummaryStats summarize(const std::vector<double>& values) {
  SummaryStats s;
  if (values.empty()) return s;
  const double n = static_cast<double>(values.size());
  double sum = 0;
  for (double v : values) sum += v;
  s.mean = sum / n;
  double sq = 0;
  for (double v : values) sq += (v - s.mean) * (v - s.mean);
  s.stddev = values.size() > 1 ? std::sqrt(sq / (n - 1)) : 0.0;
  const double half = 1.96 * s.stddev / std::sqrt(n);
  s.ci_low = s.mean - half;
  s.ci_high = s.mean + half;
  auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  s.min = *lo;
  s.max = *hi;
  return s;
}

namespace {

// Certified quotients of jimm(X) from the first `depth` quotients of X.
Quotients image_digits(const Quotients& x_digits) {
  return jimm_stream(CfStream::from_quotients(x_digits)).prefix(SIZE_MAX);
}

Quotients sample_digits(std::uint64_t seed, std::uint64_t index, std::size_t depth) {
  Quotients x{Integer(0)};
  SampleRng rng(seed, index);
  for (std::size_t i = 0; i < depth; ++i) x.push_back(rng.gauss_kuzmin());
  return x;
}

double ones_share(const Quotients& digits, std::size_t from, std::size_t to) {
  to = std::min(to, digits.size());
  if (to <= from) return 0.0;
  std::size_t ones = 0;
  for (std::size_t i = from; i < to; ++i) ones += digits[i] == 1 ? 1 : 0;
  return static_cast<double>(ones) / static_cast<double>(to - from);
}

double midpoint(const Enclosure& e) { return ((e.lo + e.hi) * Rational(1, 2)).to_double(); }

Enclosure must_enclose(const CfStream& x, const Rational& width) {
  auto e = enclose(x, width);
  if (!e) throw std::runtime_error("stream ended before the requested precision");
  return *e;
}

std::string describe(const ProbePoint& a) {
  if (const auto* s = std::get_if<QuadSurd>(&a)) return s->str();
  return ContinuedFraction::stream(std::get<CfStream>(a)).str(12);
}

}  // namespace

DensityReport density_of_ones(const ExperimentConfig& cfg) {
  DensityReport r;
  r.config = cfg;
  std::vector<double> first;
  double total_length = 0;
  for (std::size_t i = 0; i < cfg.samples; ++i) {
    const Quotients image = image_digits(sample_digits(cfg.seed, i, cfg.depth));
    r.per_sample.push_back(ones_share(image, 1, image.size()));
    first.push_back(ones_share(image, 1, cfg.depth + 1));
    total_length += static_cast<double>(image.size());
  }
  r.stats = summarize(r.per_sample);
  r.first_depth_outputs = summarize(first);
  r.mean_output_length = cfg.samples == 0 ? 0.0 : total_length / static_cast<double>(cfg.samples);
  return r;
}

double limiting_ones_density(const QuadSurd& x) {
  if (x.is_rational() || is_noble(x)) throw std::domain_error("needs a non-noble irrational");
  const ContinuedFraction image = surd_to_periodic_cf(std::get<QuadSurd>(jimm_surd(x).value));
  const Quotients& per = image.period();
  return ones_share(per, 0, per.size());
}

DerivativeProbe derivative_probe(const ProbePoint& a, const std::vector<int>& ks, std::size_t stats_terms) {
  DerivativeProbe probe;
  probe.point = describe(a);
  CfStream digits;
  if (const auto* s = std::get_if<QuadSurd>(&a)) {
    if (s->is_rational()) throw std::domain_error("derivative_probe needs an irrational point");
    if (is_noble(*s)) throw std::domain_error("derivative_probe: noble point, jimm is not continuous there");
    const ContinuedFraction cf = surd_to_periodic_cf(*s);
    digits = CfStream::cycle(cf.preperiod(), cf.period());
  } else {
    digits = std::get<CfStream>(a);
  }
  Integer running = 0;
  for (std::size_t k = 1; k <= stats_terms; ++k) {
    const Integer* q = digits.at(k);
    if (q == nullptr) break;
    running += *q;
    probe.running_sums.push_back(running);
    probe.running_means.push_back(Rational(running, Integer(static_cast<unsigned long>(k))).to_double());
  }
  for (int k : ks) {
    for (int direction : {1, -1}) {
      const Rational h(Integer(direction), pow10(static_cast<unsigned long>(k)));
      const Rational width(Integer(1), pow10(static_cast<unsigned long>(k) + 40));
      const Matrix2 shift{h.den(), h.num(), 0, h.den()};
      const Enclosure moved = must_enclose(jimm_stream(homographic_stream(shift, digits)), width);
      const Enclosure base = must_enclose(jimm_stream(digits), width);
      const Rational abs_h = h.sign() < 0 ? -h : h;
      Rational lo = moved.lo - base.hi;
      Rational hi = moved.hi - base.lo;
      if (hi.sign() < 0) {
        Rational flipped = -lo;
        lo = -hi;
        hi = flipped;
      } else if (lo.sign() < 0) {
        hi = std::max(hi, -lo);
        lo = Rational(0);
      }
      const Rational slope_lo = lo / abs_h;
      const Rational slope_hi = hi / abs_h;
      SlopeSample sample;
      sample.k = k;
      sample.direction = direction;
      sample.slope = ((slope_lo + slope_hi) * Rational(1, 2)).to_double();
      sample.slope_text = render_decimal(slope_lo, 30);
      probe.slopes.push_back(std::move(sample));
    }
  }
  return probe;
}

IntegralReport integral_symmetry(const ExperimentConfig& cfg) {
  IntegralReport r;
  r.config = cfg;
  const Rational width(Integer(1), pow10(20));
  const Integer scale = Integer(1) << 53;
  std::vector<double> values, pairs, lower, upper;
  for (std::size_t i = 0; i < cfg.samples; ++i) {
    SampleRng rng(cfg.seed, i);
    const Integer m(static_cast<unsigned long>(rng.bits53()));
    const CfStream tail = gauss_kuzmin_stream(cfg.seed ^ 0x9e3779b97f4a7c15ULL, i);
    const CfStream x = homographic_stream(Matrix2{1, m, 0, scale}, tail);  // (m + Y)/2^53
    const CfStream reflected = homographic_stream(Matrix2{-1, 1, 0, 1}, x);
    const double jx = midpoint(must_enclose(jimm_stream(x), width));
    const double jr = midpoint(must_enclose(jimm_stream(reflected), width));
    values.push_back(jx);
    const double pair = (jx + jr) / 2;
    pairs.push_back(pair);
    r.max_pair_deviation = std::max(r.max_pair_deviation, std::abs(pair - 0.5));
    // X/2 lies in [0,1/2]; 1 - X/2 is its reflection
    const CfStream half = homographic_stream(Matrix2{1, 0, 0, 2}, x);
    const double jh = midpoint(must_enclose(jimm_stream(half), width));
    const double jh_reflected =
        midpoint(must_enclose(jimm_stream(homographic_stream(Matrix2{-1, 1, 0, 1}, half)), width));
    lower.push_back(jh);
    upper.push_back(jh_reflected);
  }
  const SummaryStats s = summarize(values);
  r.estimate = s.mean;
  r.standard_error = values.empty() ? 0.0 : s.stddev / std::sqrt(static_cast<double>(values.size()));
  r.pair_estimate = summarize(pairs).mean;
  r.lower_half = summarize(lower).mean / 2;
  r.upper_half = summarize(upper).mean / 2;
  return r;
}

bool beatty_partition(const QuadSurd& a, const QuadSurd& b, long limit) {
  std::vector<int> hits(static_cast<std::size_t>(limit) + 1, 0);
  for (const QuadSurd* s : {&a, &b}) {
    for (long n = 1;; ++n) {
      const Integer f = (*s * QuadSurd(n)).floor();
      if (f > limit) break;
      if (sgn(f) <= 0) return false;
      ++hits[f.get_ui()];
    }
  }
  return std::all_of(hits.begin() + 1, hits.end(), [](int h) { return h == 1; });
}

BeattyReport beatty_duality(const QuadSurd& x, long limit) {
  if (x.is_rational() || !(QuadSurd(1) < x)) throw std::domain_error("beatty needs an irrational x > 1");
  if (is_noble(x)) throw std::domain_error("beatty: x is noble, so jimm(x) is rational");
  BeattyReport r;
  r.limit = limit;
  r.x = x;
  r.y = x / (x - QuadSurd(1));
  r.partition = beatty_partition(r.x, r.y, limit);
  r.dual_x = std::get<QuadSurd>(jimm_surd(r.x).value);
  r.dual_y = std::get<QuadSurd>(jimm_surd(r.y).value);
  r.harmonic_dual = r.dual_x.reciprocal() + r.dual_y.reciprocal() == QuadSurd(1);
  r.dual_partition = r.harmonic_dual && beatty_partition(r.dual_x, r.dual_y, limit);
  return r;
}

FrequencyTable gauss_kuzmin_freq(const ExperimentConfig& cfg, long max_k) {
  FrequencyTable t;
  t.config = cfg;
  std::vector<double> sample_counts(static_cast<std::size_t>(max_k) + 1, 0.0);
  std::vector<double> image_counts(static_cast<std::size_t>(max_k) + 1, 0.0);
  double sample_total = 0, image_total = 0;
  for (std::size_t i = 0; i < cfg.samples; ++i) {
    const Quotients x = sample_digits(cfg.seed, i, cfg.depth);
    const Quotients image = image_digits(x);
    for (std::size_t j = 1; j < x.size(); ++j) {
      if (x[j] <= max_k) sample_counts[x[j].get_ui()] += 1;
      sample_total += 1;
    }
    for (std::size_t j = 1; j < image.size(); ++j) {
      if (image[j] <= max_k) image_counts[image[j].get_ui()] += 1;
      image_total += 1;
    }
  }
  for (long k = 1; k <= max_k; ++k) {
    const auto idx = static_cast<std::size_t>(k);
    t.rows.push_back({k, gauss_kuzmin_probability(k), sample_total > 0 ? sample_counts[idx] / sample_total : 0.0,
                      image_total > 0 ? image_counts[idx] / image_total : 0.0});
  }
  t.image_ones = t.rows.empty() ? 0.0 : t.rows[0].image;
  return t;
}

}  // namespace jimm
