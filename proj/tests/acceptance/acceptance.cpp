// Acceptance run: one PASS/FAIL line per criterion, with wall time against its budget.
#include "jimm/continued_fraction.hpp"
#include "jimm/experiments.hpp"
#include "jimm/jimm.hpp"
#include "jimm/stream_ops.hpp"
#include "jimm/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace jimm;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool condition, const std::string& what) {
    if (!condition) {
      ok = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

struct Criterion {
  int number;
  std::string title;
  double budget_seconds;
  std::function<Outcome()> run;
};

QuadSurd surd(long p, long q, long d, long r = 1) { return QuadSurd(Integer(p), Integer(q), Integer(d), Integer(r)); }

bool image_is(const QuadSurd& x, const QuadSurd& expected) {
  return exact_equal(jimm_surd(x).value, ExactReal(expected));
}

Outcome suites(std::initializer_list<const char*> names) {
  Outcome out;
  for (const char* name : names) {
    const SuiteReport report = run_suite(name, 1);
    for (const PropertyResult& p : report.properties) {
      out.require(p.passed(), std::string(name) + ": " + p.name + " failed " + std::to_string(p.failures) + "/" +
                                  std::to_string(p.cases) + " at " + p.counterexample);
    }
    out.require(!report.properties.empty(), std::string(name) + ": empty suite");
  }
  return out;
}

std::string common_prefix_note(const std::string& got, const std::string& want, std::size_t digits) {
  std::size_t same = 0;
  while (same < got.size() && same < want.size() && got[same] == want[same]) ++same;
  std::ostringstream s;
  s << "got " << got << ", expected " << want << " (agree on " << (same > 2 ? same - 2 : 0) << " of " << digits
    << " decimals)";
  return s.str();
}

Outcome decimal_golden(const CfStream& x, const std::string& want, std::size_t digits, const std::string& label) {
  Outcome out;
  const std::optional<std::string> got = render_decimal(jimm_stream(x), digits);
  const std::string expected = want.substr(0, 2 + digits);
  out.require(got.has_value(), label + ": input exhausted");
  if (got && *got != expected) out.require(false, label + ": " + common_prefix_note(*got, expected, digits));
  return out;
}

Outcome criterion_surds() {
  Outcome out;
  out.require(image_is(QuadSurd::sqrt(2), surd(1, 1, 2)), "sqrt 2");
  out.require(image_is(surd(3, 5, 2, 7), surd(-3, 2, 95, 7)), "(3+5 sqrt 2)/7");
  out.require(image_is(QuadSurd::sqrt(11), surd(15, 1, 901, 26)), "sqrt 11");
  out.require(image_is(-QuadSurd::sqrt(11), surd(15, -1, 901, 26)), "-sqrt 11");
  return out;
}

Outcome criterion_transcendental() {
  Outcome out;
  out.require(pi_quotient_count() >= 500, "fewer than 500 bundled quotients of pi");
  for (auto [stream, want, digits, label] :
       {std::tuple{pi_stream(), std::string("1.7237707925480276079699326494931025145558144289232"), 45, "pi"},
        std::tuple{e_stream(), std::string("1.3105752928466255215822495496939143349712038085627"), 45, "e"},
        std::tuple{cbrt2_stream(), std::string("2.784731558662723"), 15, "cbrt 2"}}) {
    Outcome one = decimal_golden(stream, want, static_cast<std::size_t>(digits), label);
    out.require(one.ok, one.detail);
  }
  return out;
}

Outcome criterion_statistics() {
  Outcome out;
  ExperimentConfig cfg;  // seed 1, 500 samples, depth 2000
  const DensityReport density = density_of_ones(cfg);
  std::ostringstream note;
  note.precision(4);
  note << "density " << density.stats.mean;
  out.require(density.stats.mean >= 0.95, "density of 1's " + std::to_string(density.stats.mean) + " < 0.95");

  std::vector<ProbePoint> points;
  points.emplace_back(periodic_cf_to_surd(ContinuedFraction::periodic({0}, {5})));
  for (std::uint64_t i = 0; i < 20; ++i) points.emplace_back(gauss_kuzmin_stream(cfg.seed, i));
  std::size_t steep = 0;
  std::string first_steep;
  double worst = 0;
  for (const ProbePoint& p : points) {
    const DerivativeProbe probe = derivative_probe(p, {12});
    double slope = 0;
    for (const SlopeSample& s : probe.slopes) {
      if (s.direction > 0) slope = s.slope;
    }
    worst = std::max(worst, slope);
    if (slope >= 1e-3) {
      if (steep++ == 0) first_steep = probe.point + " slope " + std::to_string(slope);
    }
  }
  note << ", worst slope at h=1e-12 " << worst;
  out.require(steep == 0, std::to_string(steep) + " of 21 probes have slope >= 1e-3 at h=1e-12 (first: " +
                              first_steep + ")");

  ExperimentConfig integral_cfg;
  integral_cfg.samples = 100000;
  const IntegralReport integral = integral_symmetry(integral_cfg);
  note << ", integral " << integral.estimate;
  out.require(std::abs(integral.estimate - 0.5) <= 0.01, "integral " + std::to_string(integral.estimate));
  if (out.ok) out.detail = note.str();
  else out.detail = note.str() + "; " + out.detail;
  return out;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "exact surd goldens", 1, criterion_surds},
      {2, "transcendental goldens (pi, e, cbrt 2)", 5, criterion_transcendental},
      {3, "matrix table", 1, [] { return suites({"matrix-table"}); }},
      {4, "functional equations on 10^3 surds and 10^4 rationals", 30, [] { return suites({"fe"}); }},
      {5, "jump formula n=1..30 and decreasing |delta|", 5, [] { return suites({"delta"}); }},
      {6, "quadratic families (runs 1_2, 1_3, 1_{a-2} written out)", 10, [] { return suites({"mcmullen"}); }},
      {7, "dynamics conjugacy and invariant measure residual", 10, [] { return suites({"dynamics"}); }},
      {8, "Rayleigh partitions for x and jimm(x)", 10, [] { return suites({"rayleigh"}); }},
      {9, "statistics soft gates: density, derivative, integral", 120, criterion_statistics},
      {10, "structural suites", 30, [] { return suites({"involution", "galois", "structure"}); }},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome.require(false, std::string("threw: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > c.budget_seconds) {
      outcome.require(false, "took " + std::to_string(seconds) + " s, budget " + std::to_string(c.budget_seconds) + " s");
    }
    if (!outcome.ok) ++failed;
    std::printf("%s criterion %d: %s [%.2f s / %.0f s]%s%s\n", outcome.ok ? "PASS" : "FAIL", c.number, c.title.c_str(),
                seconds, c.budget_seconds, outcome.detail.empty() ? "" : " -- ", outcome.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
