// Command line front end: jimm <command> [options]
#include "jimm/dynamics.hpp"
#include "jimm/experiments.hpp"
#include "jimm/jimm.hpp"
#include "jimm/number_parser.hpp"
#include "jimm/stream_ops.hpp"
#include "jimm/tree.hpp"
#include "jimm/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace {

using nlohmann::ordered_json;
using namespace jimm;

constexpr int kOk = 0;
constexpr int kDomainError = 1;
constexpr int kVerificationFailure = 2;

struct GlobalOptions {
  bool json = false;
  std::size_t digits = 20;
  std::uint64_t seed = 1;
};

// Thrown for a failed check so that main can exit with code 2.
struct VerificationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const GlobalOptions& g, const ordered_json& j, const std::string& text) {
  if (g.json) {
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << text;
  }
}

std::string stream_text(const CfStream& s, std::size_t shown = 20) {
  return ContinuedFraction::stream(s).str(shown);
}

std::string cf_text(const QuadSurd& x) { return surd_to_periodic_cf(x).str(); }

std::string cf_text(const Rational& q) { return q.is_infinite() ? "inf" : rational_to_cf(q).str(); }

std::string cf_text(const ExactReal& x) {
  return std::visit([](const auto& v) { return cf_text(v); }, x);
}

std::string representation_of(const RealValue& v) {
  if (std::holds_alternative<Rational>(v)) return "rational";
  if (std::holds_alternative<QuadSurd>(v)) return "quadratic-surd";
  return "cf-stream";
}

std::string value_text(const RealValue& v) {
  if (const auto* q = std::get_if<Rational>(&v)) return q->str();
  if (const auto* s = std::get_if<QuadSurd>(&v)) return s->str();
  return stream_text(std::get<CfStream>(v));
}

ordered_json jump_json(const JumpData& j, std::size_t digits) {
  ordered_json out;
  out["at"] = j.at.str();
  out["left"] = j.left.str();
  out["right"] = j.right.str();
  out["delta"] = j.delta.str();
  out["left_cf"] = cf_text(j.left);
  out["right_cf"] = cf_text(j.right);
  out["left_decimal"] = render_decimal(j.left, digits);
  out["right_decimal"] = render_decimal(j.right, digits);
  out["delta_decimal"] = render_decimal(j.delta, digits);
  return out;
}

std::string jump_text(const JumpData& j) {
  return "left:  " + j.left.str() + "\nright: " + j.right.str() + "\ndelta: " + j.delta.str() + "\n";
}

int run_transform(const GlobalOptions& g, const std::string& literal, const std::string& via, bool with_jump) {
  RealValue x = parse_number(literal);
  ordered_json out;
  out["input"] = literal;
  out["representation"] = representation_of(x);
  if (const auto* q = std::get_if<Rational>(&x)) {
    if (!with_jump) {
      throw std::domain_error("jimm is two-valued at the rational " + q->str() +
                              "; use `jump " + q->str() + "` or pass --jump");
    }
    JumpData j = jump(*q);
    out["jump"] = jump_json(j, g.digits);
    std::string text = jump_text(j);
    if (q->sign() > 0) {
      Rational tree_value = jimm_q_rational(*q);
      out["tree_value"] = tree_value.str();
      text += "tree value: " + tree_value.str() + "\n";
    }
    emit(g, out, text);
    return kOk;
  }
  if (const auto* s = std::get_if<QuadSurd>(&x)) {
    ExactReal image;
    ordered_json agreement = nullptr;
    if (via == "xor") {
      image = jimm_surd_xor(*s);
    } else if (via == "cf") {
      image = jimm_surd_rewrite(*s);
    } else {
      image = jimm_surd_xor(*s);
      bool agree = exact_equal(image, jimm_surd_rewrite(*s));
      agreement = agree;
      if (!agree) throw VerificationFailure("rewrite and xor routes disagree at " + s->str());
    }
    out["output_exact"] = to_string(image);
    out["output_decimal"] = render_decimal(image, g.digits);
    out["method_agreement"] = agreement;
    out["via"] = via;
    out["output_cf"] = cf_text(image);
    out["noble"] = std::holds_alternative<Rational>(image);
    emit(g, out, to_string(image) + "\n" + render_decimal(image, g.digits) + "\n");
    return kOk;
  }
  if (via == "xor") throw std::domain_error("the xor route needs a finite or periodic expansion");
  CfStream image = jimm_stream(std::get<CfStream>(x));
  auto decimal = render_decimal(image, g.digits);
  if (!decimal) throw std::domain_error("input expansion too short for " + std::to_string(g.digits) + " digits");
  out["output_exact"] = stream_text(image);
  out["output_decimal"] = *decimal;
  out["method_agreement"] = nullptr;
  out["via"] = "cf";
  emit(g, out, *decimal + "\n");
  return kOk;
}

int run_jump(const GlobalOptions& g, const std::string& literal) {
  Rational q = parse_rational(literal);
  JumpData j = jump(q);
  emit(g, jump_json(j, g.digits), jump_text(j));
  return kOk;
}

Matrix2 parse_matrix_or_word(const std::string& text) {
  if (!text.empty() && text.front() == '[') return parse_matrix(text);
  return word_to_matrix(parse_gl2_word(text));
}

int run_matrix(const GlobalOptions& g, const std::string& text) {
  Matrix2 m = parse_matrix_or_word(text);
  if (!m.is_unimodular()) throw std::domain_error("matrix must have determinant +-1");
  Matrix2 image = jimm_matrix(m);
  ordered_json out;
  out["input"] = m.canonical().str();
  out["word"] = to_string(matrix_to_word(m));
  out["image"] = image.str();
  out["image_word"] = to_string(jimm_word(matrix_to_word(m)));
  out["trace"] = to_string(abs(m.trace()));
  out["image_trace"] = to_string(abs(image.trace()));
  emit(g, out, image.str() + "\n");
  return kOk;
}

int run_orbit_fixed(const GlobalOptions& g, const std::string& text) {
  OrbitFixedPoint f = orbit_fixed_point(parse_matrix_or_word(text));
  QuadSurd image = mobius_apply(f.m, f.x);
  ordered_json out;
  out["matrix"] = f.m.str();
  out["x"] = f.x.str();
  out["x_cf"] = cf_text(f.x);
  out["jimm_x"] = image.str();
  out["x_decimal"] = render_decimal(f.x, g.digits);
  emit(g, out, f.x.str() + "\n" + cf_text(f.x) + "\n");
  return kOk;
}

struct IterateOptions {
  std::string map = "gauss";
  std::string start;
  int steps = 10;
  std::string emit_format;
};

ordered_json step_json(int step, const RealValue& v, std::size_t digits) {
  ordered_json s;
  s["step"] = step;
  s["value"] = value_text(v);
  if (const auto* q = std::get_if<Rational>(&v)) {
    s["cf"] = cf_text(*q);
    s["decimal"] = q->is_infinite() ? "inf" : render_decimal(*q, digits);
  } else if (const auto* x = std::get_if<QuadSurd>(&v)) {
    s["cf"] = cf_text(*x);
    s["decimal"] = render_decimal(*x, digits);
  } else {
    s["cf"] = stream_text(std::get<CfStream>(v));
    auto d = render_decimal(std::get<CfStream>(v), digits);
    s["decimal"] = d ? ordered_json(*d) : ordered_json(nullptr);
  }
  return s;
}

int run_iterate(GlobalOptions g, const IterateOptions& o) {
  if (o.emit_format == "json") g.json = true;
  if (o.map != "gauss" && o.map != "farey" && o.map != "tjimm") throw std::invalid_argument("unknown map " + o.map);
  RealValue v = parse_number(o.start);
  ordered_json orbit = ordered_json::array();
  orbit.push_back(step_json(0, v, g.digits));
  std::string stopped;
  for (int i = 1; i <= o.steps; ++i) {
    std::string branch;
    try {
      if (auto* q = std::get_if<Rational>(&v)) {
        if (o.map == "gauss") {
          if (q->sign() == 0) throw std::domain_error("orbit reached 0");
          v = gauss_map(*q);
        } else if (o.map == "farey") {
          auto st = farey_map(*q);
          branch = to_string(st.branch);
          v = st.value;
        } else {
          throw std::domain_error("t_jimm needs an irrational point");
        }
      } else if (auto* x = std::get_if<QuadSurd>(&v)) {
        if (o.map == "gauss") {
          v = gauss_map(*x);
        } else if (o.map == "farey") {
          auto st = farey_map(*x);
          branch = to_string(st.branch);
          v = st.value;
        } else {
          if (is_noble(*x)) throw std::domain_error("noble point leaves the domain of t_jimm");
          v = t_jimm(*x);
        }
      } else {
        const CfStream& s = std::get<CfStream>(v);
        if (o.map == "gauss") {
          v = gauss_map(s);
        } else if (o.map == "farey") {
          auto st = farey_map(s);
          branch = to_string(st.branch);
          v = st.value;
        } else {
          v = t_jimm(s);
        }
      }
    } catch (const std::domain_error& e) {
      if (i == 1) throw;
      stopped = e.what();
      break;
    }
    ordered_json s = step_json(i, v, g.digits);
    if (!branch.empty()) s["branch"] = branch;
    orbit.push_back(s);
  }
  ordered_json out;
  out["map"] = o.map;
  out["start"] = o.start;
  out["orbit"] = orbit;
  out["stopped"] = stopped.empty() ? ordered_json(nullptr) : ordered_json(stopped);
  std::ostringstream text;
  for (const auto& s : orbit) {
    text << s["step"].get<int>() << ' ' << s["value"].get<std::string>();
    if (s.contains("branch")) text << ' ' << s["branch"].get<std::string>();
    text << '\n';
  }
  if (!stopped.empty()) text << "stopped: " << stopped << '\n';
  emit(g, out, text.str());
  return kOk;
}

int run_verify(const GlobalOptions& g, const std::string& suite, double scale) {
  SuiteReport r = run_suite(suite, g.seed, scale);
  ordered_json out;
  out["suite"] = r.suite;
  out["seed"] = r.seed;
  out["passed"] = r.passed();
  ordered_json props = ordered_json::array();
  std::ostringstream text;
  std::size_t ok = 0;
  for (const PropertyResult& p : r.properties) {
    ordered_json j;
    j["name"] = p.name;
    j["cases"] = p.cases;
    j["failures"] = p.failures;
    j["passed"] = p.passed();
    j["counterexample"] = p.failures == 0 ? ordered_json(nullptr) : ordered_json(p.counterexample);
    props.push_back(j);
    if (p.passed()) ++ok;
    text << (p.passed() ? "PASS " : "FAIL ") << p.name << " (" << p.cases - p.failures << '/' << p.cases << ")";
    if (!p.passed()) text << "  counterexample: " << p.counterexample;
    text << '\n';
  }
  out["properties"] = props;
  text << suite << ": " << ok << '/' << r.properties.size() << " properties pass\n";
  emit(g, out, text.str());
  return r.passed() ? kOk : kVerificationFailure;
}

int run_beatty(const GlobalOptions& g, const std::string& literal, long limit) {
  RealValue v = parse_number(literal);
  const auto* x = std::get_if<QuadSurd>(&v);
  if (x == nullptr) throw std::domain_error("beatty needs a quadratic irrational x > 1");
  if (*x <= QuadSurd(1)) throw std::domain_error("beatty needs x > 1");
  if (is_noble(*x)) throw std::domain_error("x is noble, so jimm(x) is rational and the dual partition degenerates");
  BeattyReport r = beatty_duality(*x, limit);
  ordered_json out;
  out["x"] = r.x.str();
  out["y"] = r.y.str();
  out["dual_x"] = r.dual_x.str();
  out["dual_y"] = r.dual_y.str();
  out["limit"] = r.limit;
  out["partition"] = r.partition;
  out["harmonic_dual"] = r.harmonic_dual;
  out["dual_partition"] = r.dual_partition;
  std::ostringstream text;
  text << "x = " << r.x.str() << ", y = " << r.y.str() << ": partition " << (r.partition ? "ok" : "FAILS") << '\n'
       << "jimm: " << r.dual_x.str() << ", " << r.dual_y.str() << ": harmonic " << (r.harmonic_dual ? "ok" : "FAILS")
       << ", partition " << (r.dual_partition ? "ok" : "FAILS") << '\n';
  emit(g, out, text.str());
  return r.ok() ? kOk : kVerificationFailure;
}

int run_boxgraph(const std::string& domain, int depth, const std::string& format) {
  ApproximantDomain d;
  if (domain == "0:1") {
    d = ApproximantDomain::UnitInterval;
  } else if (domain == "0:inf") {
    d = ApproximantDomain::PositiveReals;
  } else {
    throw std::invalid_argument("domain must be 0:1 or 0:inf");
  }
  PiecewiseMobius map = jimm_approximant(depth, d);
  if (format == "csv") {
    std::cout << box_graph_csv(map);
  } else if (format == "svg") {
    std::cout << box_graph_svg(map);
  } else {
    throw std::invalid_argument("format must be csv or svg");
  }
  return kOk;
}

ordered_json stats_json(const SummaryStats& s) {
  ordered_json j;
  j["mean"] = s.mean;
  j["stddev"] = s.stddev;
  j["ci_low"] = s.ci_low;
  j["ci_high"] = s.ci_high;
  j["min"] = s.min;
  j["max"] = s.max;
  return j;
}

ordered_json config_json(const ExperimentConfig& c) {
  ordered_json j;
  j["seed"] = c.seed;
  j["samples"] = c.samples;
  j["depth"] = c.depth;
  return j;
}

struct StatsOptions {
  std::size_t samples = 0;
  std::size_t depth = 2000;
  std::string point = "[0;(5)]";
  std::vector<int> ks;
  std::size_t random_points = 0;
};

std::string fixed(double v, int precision = 6) {
  std::ostringstream s;
  s.precision(precision);
  s << v;
  return s.str();
}

int run_stats(const GlobalOptions& g, const std::string& kind, const StatsOptions& o) {
  ExperimentConfig cfg;
  cfg.seed = g.seed;
  cfg.depth = o.depth;
  ordered_json out;
  out["experiment"] = kind;
  out["gate"] = "soft";
  std::ostringstream text;
  if (kind == "density") {
    cfg.samples = o.samples == 0 ? 500 : o.samples;
    DensityReport r = density_of_ones(cfg);
    out["config"] = config_json(cfg);
    out["density"] = stats_json(r.stats);
    out["first_depth_outputs"] = stats_json(r.first_depth_outputs);
    out["mean_output_length"] = r.mean_output_length;
    out["threshold"] = 0.95;
    out["gate_passed"] = r.stats.mean >= 0.95;
    text << "density of 1's in jimm(X): mean " << fixed(r.stats.mean) << ", 95% CI [" << fixed(r.stats.ci_low)
         << ", " << fixed(r.stats.ci_high) << "] (soft gate >= 0.95: " << (r.stats.mean >= 0.95 ? "pass" : "fail")
         << ")\n";
  } else if (kind == "derivative") {
    std::vector<int> ks = o.ks;
    if (ks.empty()) {
      for (int k = 4; k <= 12; ++k) ks.push_back(k);
    }
    std::vector<ProbePoint> points;
    if (o.random_points > 0) {
      for (std::size_t i = 0; i < o.random_points; ++i) points.emplace_back(gauss_kuzmin_stream(g.seed, i));
    } else {
      RealValue v = parse_number(o.point);
      if (auto* s = std::get_if<QuadSurd>(&v)) {
        points.emplace_back(*s);
      } else if (auto* c = std::get_if<CfStream>(&v)) {
        points.emplace_back(*c);
      } else {
        throw std::domain_error("derivative probes need an irrational point");
      }
    }
    ordered_json probes = ordered_json::array();
    for (const ProbePoint& p : points) {
      DerivativeProbe d = derivative_probe(p, ks);
      ordered_json j;
      j["point"] = d.point;
      ordered_json slopes = ordered_json::array();
      text << d.point << '\n';
      for (const SlopeSample& s : d.slopes) {
        slopes.push_back({{"k", s.k}, {"direction", s.direction}, {"slope", s.slope_text}});
        text << "  h = " << (s.direction > 0 ? "+" : "-") << "1e-" << s.k << "  slope " << s.slope_text << '\n';
      }
      j["slopes"] = slopes;
      ordered_json means = ordered_json::array();
      for (double m : d.running_means) means.push_back(m);
      j["running_means"] = means;
      probes.push_back(j);
    }
    out["probes"] = probes;
  } else if (kind == "integral") {
    cfg.samples = o.samples == 0 ? 100000 : o.samples;
    IntegralReport r = integral_symmetry(cfg);
    out["config"] = config_json(cfg);
    out["estimate"] = r.estimate;
    out["standard_error"] = r.standard_error;
    out["pair_estimate"] = r.pair_estimate;
    out["max_pair_deviation"] = r.max_pair_deviation;
    out["lower_half"] = r.lower_half;
    out["upper_half"] = r.upper_half;
    out["gate_passed"] = std::abs(r.estimate - 0.5) <= 0.01;
    text << "integral of jimm over [0,1]: " << fixed(r.estimate) << " +- " << fixed(1.96 * r.standard_error, 3)
         << " (pairs " << fixed(r.pair_estimate) << ", halves " << fixed(r.lower_half) << " + " << fixed(r.upper_half)
         << ")\n";
  } else if (kind == "gk") {
    cfg.samples = o.samples == 0 ? 500 : o.samples;
    FrequencyTable t = gauss_kuzmin_freq(cfg);
    out["config"] = config_json(cfg);
    ordered_json rows = ordered_json::array();
    text << "k  theory  sample  image\n";
    for (const FrequencyRow& r : t.rows) {
      rows.push_back({{"k", r.k}, {"theoretical", r.theoretical}, {"sample", r.sample}, {"image", r.image}});
      text << r.k << "  " << fixed(r.theoretical, 4) << "  " << fixed(r.sample, 4) << "  " << fixed(r.image, 4) << '\n';
    }
    out["rows"] = rows;
    out["image_ones"] = t.image_ones;
  } else {
    throw std::invalid_argument("unknown experiment " + kind);
  }
  emit(g, out, text.str());
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"jimm: the outer automorphism of PGL(2,Z) acting on the real line"};
  app.fallthrough();
  app.require_subcommand(1);
  GlobalOptions g;
  app.add_flag("--json", g.json, "Machine-readable output");
  app.add_option("--digits", g.digits, "Decimal digits in renderings")->capture_default_str();
  app.add_option("--seed", g.seed, "Seed for sampled inputs")->capture_default_str();

  std::string literal;
  std::string via = "both";
  bool with_jump = false;
  auto* transform = app.add_subcommand("transform", "Apply jimm to a number");
  transform->add_option("number", literal, "Rational, surd, CF literal or constant")->required();
  transform->add_option("--via", via, "Route: cf, xor or both")->check(CLI::IsMember({"cf", "xor", "both"}));
  transform->add_flag("--jump", with_jump, "Report the one-sided limits at a rational");

  std::string rational;
  auto* jump_cmd = app.add_subcommand("jump", "One-sided limits of jimm at a rational");
  jump_cmd->add_option("q", rational, "Rational such as 2 or 5/2")->required();

  std::string matrix_text;
  auto* matrix = app.add_subcommand("matrix", "Image of a matrix or word in PGL(2,Z)");
  matrix->add_option("M", matrix_text, "[[a,b],[c,d]] or a word like \"T U T\"")->required();

  std::string orbit_text;
  auto* orbit = app.add_subcommand("orbit-fixed", "Point x with jimm(x) = M(x)");
  orbit->add_option("M", orbit_text, "Matrix or word")->required();

  IterateOptions iterate_opts;
  auto* dynamics = app.add_subcommand("dynamics", "Interval maps");
  dynamics->require_subcommand(1);
  auto* iterate = dynamics->add_subcommand("iterate", "Orbit of a point");
  iterate->add_option("--map", iterate_opts.map, "Map to iterate")->capture_default_str()->check(CLI::IsMember({"gauss", "farey", "tjimm"}));
  iterate->add_option("--start", iterate_opts.start, "Starting point in (0,1)")->required();
  iterate->add_option("--steps", iterate_opts.steps, "Number of steps")->capture_default_str()->check(CLI::NonNegativeNumber);
  iterate->add_option("--emit", iterate_opts.emit_format, "Output format")->capture_default_str()->check(CLI::IsMember({"json", "text"}));

  std::string suite;
  double scale = 1.0;
  auto* verify = app.add_subcommand("verify", "Run a property suite");
  verify->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--scale", scale, "Multiplier on sample counts")->check(CLI::PositiveNumber);

  std::string beatty_x;
  long beatty_limit = 10000;
  auto* beatty = app.add_subcommand("beatty", "Beatty partitions for x and jimm(x)");
  beatty->add_option("--x", beatty_x, "Irrational surd x > 1")->required();
  beatty->add_option("--limit", beatty_limit, "Check 1..limit")->capture_default_str()->check(CLI::PositiveNumber);

  int box_depth = 6;
  std::string box_domain = "0:1";
  std::string box_format = "csv";
  auto* boxgraph = app.add_subcommand("boxgraph", "Boxes of a finite approximant");
  boxgraph->add_option("--depth", box_depth, "Approximant depth")->capture_default_str()->check(CLI::Range(0, 24));
  boxgraph->add_option("--domain", box_domain, "Unit interval or positive reals")->capture_default_str()->check(CLI::IsMember({"0:1", "0:inf"}));
  boxgraph->add_option("--format", box_format, "Output format")->capture_default_str()->check(CLI::IsMember({"csv", "svg"}));

  StatsOptions stats_opts;
  auto* stats = app.add_subcommand("stats", "Sampled experiments (soft gates)");
  stats->require_subcommand(1);
  std::vector<CLI::App*> experiments;
  const std::pair<const char*, const char*> experiment_names[] = {
      {"density", "Share of 1's in jimm(X) for Gauss-Kuzmin samples X"},
      {"derivative", "Finite-difference slopes of jimm at a point"},
      {"integral", "Monte Carlo integral of jimm over [0,1]"},
      {"gk", "Quotient frequencies of X and jimm(X)"},
  };
  for (const auto& [name, about] : experiment_names) {
    auto* e = stats->add_subcommand(name, about);
    e->add_option("--samples", stats_opts.samples, "Number of samples");
    e->add_option("--depth", stats_opts.depth, "Quotients per sample");
    experiments.push_back(e);
  }
  experiments[1]->add_option("--point", stats_opts.point, "Base point");
  experiments[1]->add_option("--k", stats_opts.ks, "Exponents k of h = 10^-k");
  experiments[1]->add_option("--random", stats_opts.random_points, "Probe this many sampled points instead");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kDomainError;
  }

  try {
    if (*transform) return run_transform(g, literal, via, with_jump);
    if (*jump_cmd) return run_jump(g, rational);
    if (*matrix) return run_matrix(g, matrix_text);
    if (*orbit) return run_orbit_fixed(g, orbit_text);
    if (*iterate) return run_iterate(g, iterate_opts);
    if (*verify) return run_verify(g, suite, scale);
    if (*beatty) return run_beatty(g, beatty_x, beatty_limit);
    if (*boxgraph) return run_boxgraph(box_domain, box_depth, box_format);
    for (CLI::App* e : experiments) {
      if (*e) return run_stats(g, e->get_name(), stats_opts);
    }
  } catch (const VerificationFailure& e) {
    std::cerr << "verification failure: " << e.what() << '\n';
    return kVerificationFailure;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDomainError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDomainError;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDomainError;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDomainError;
  } catch (const std::logic_error& e) {
    std::cerr << "verification failure: " << e.what() << '\n';
    return kVerificationFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDomainError;
  }
  return kDomainError;
}
