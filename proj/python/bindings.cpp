#include "jimm/boundary_word.hpp"
#include "jimm/continued_fraction.hpp"
#include "jimm/dynamics.hpp"
#include "jimm/experiments.hpp"
#include "jimm/gl2_word.hpp"
#include "jimm/jimm.hpp"
#include "jimm/number_parser.hpp"
#include "jimm/stream_ops.hpp"
#include "jimm/tree.hpp"
#include "jimm/verify.hpp"

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>
#include <string>

namespace py = pybind11;
using namespace jimm;

namespace {

// Hex keeps clear of the interpreter's limit on decimal int conversion.
py::object to_py(const Integer& n) { return py::module_::import("builtins").attr("int")(n.get_str(16), 16); }

Integer from_py(const py::handle& n) {
  if (py::isinstance<py::str>(n)) return parse_integer(n.cast<std::string>());
  std::string hex = py::module_::import("builtins").attr("hex")(n).cast<std::string>();
  const bool negative = hex.front() == '-';
  Integer value(hex.substr(negative ? 3 : 2), 16);
  return negative ? Integer(-value) : value;
}

py::object to_py(const Rational& q) {
  if (q.is_infinite()) return py::float_(INFINITY);
  return py::module_::import("fractions").attr("Fraction")(to_py(q.num()), to_py(q.den()));
}

Rational rational_from_py(const py::handle& x) {
  if (py::isinstance<py::str>(x)) return parse_rational(x.cast<std::string>());
  if (py::isinstance<py::float_>(x)) {
    if (std::isinf(x.cast<double>()) && x.cast<double>() > 0) return Rational::infinity();
    throw py::type_error("floats are not exact; pass an int, Fraction or string");
  }
  py::object fraction = py::module_::import("fractions").attr("Fraction")(x);
  return Rational(from_py(fraction.attr("numerator")), from_py(fraction.attr("denominator")));
}

py::object to_py(const ExactReal& x) {
  if (const auto* q = std::get_if<Rational>(&x)) return to_py(*q);
  return py::cast(std::get<QuadSurd>(x));
}

QuadSurd surd_from_py(const py::handle& x) {
  if (py::isinstance<QuadSurd>(x)) return x.cast<QuadSurd>();
  if (py::isinstance<py::str>(x)) {
    RealValue v = parse_number(x.cast<std::string>());
    if (auto* s = std::get_if<QuadSurd>(&v)) return *s;
    if (auto* q = std::get_if<Rational>(&v)) return QuadSurd(*q);
    throw py::value_error("not a quadratic surd");
  }
  return QuadSurd(rational_from_py(x));
}

py::list to_py(const Quotients& terms) {
  py::list out;
  for (const Integer& t : terms) out.append(to_py(t));
  return out;
}

Quotients quotients_from_py(const py::iterable& xs) {
  Quotients out;
  for (const py::handle& x : xs) out.push_back(from_py(x));
  return out;
}

Matrix2 matrix_from_py(const py::handle& m) {
  if (py::isinstance<py::str>(m)) {
    const auto text = m.cast<std::string>();
    if (text.find('[') != std::string::npos) return parse_matrix(text);
    return word_to_matrix(parse_gl2_word(text));
  }
  py::sequence rows = m.cast<py::sequence>();
  if (rows.size() != 2) throw py::value_error("expected [[a, b], [c, d]]");
  py::sequence top = rows[0].cast<py::sequence>();
  py::sequence bottom = rows[1].cast<py::sequence>();
  return {from_py(top[0]), from_py(top[1]), from_py(bottom[0]), from_py(bottom[1])};
}

py::list to_py(const Matrix2& m) {
  py::list top, bottom, out;
  top.append(to_py(m.a));
  top.append(to_py(m.b));
  bottom.append(to_py(m.c));
  bottom.append(to_py(m.d));
  out.append(top);
  out.append(bottom);
  return out;
}

py::dict cf_to_py(const ContinuedFraction& cf) {
  py::dict d;
  d["preperiod"] = to_py(cf.preperiod());
  d["period"] = to_py(cf.period());
  d["text"] = cf.str();
  return d;
}

ContinuedFraction cf_from_py(const py::handle& x) {
  if (py::isinstance<py::str>(x)) return parse_cf(x.cast<std::string>());
  return surd_to_periodic_cf(surd_from_py(x));
}

std::string decimal_of_image(const std::string& literal, std::size_t digits) {
  RealValue v = parse_number(literal);
  if (auto* s = std::get_if<QuadSurd>(&v)) return render_decimal(jimm_surd(*s).value, digits);
  if (auto* c = std::get_if<CfStream>(&v)) {
    auto text = render_decimal(jimm_stream(*c), digits);
    if (!text) throw py::value_error("input expansion too short for the requested digits");
    return *text;
  }
  throw py::value_error("jimm is two-valued at rationals; use jump()");
}

py::dict suite_to_py(const SuiteReport& r) {
  py::list props;
  for (const PropertyResult& p : r.properties) {
    py::dict d;
    d["name"] = p.name;
    d["cases"] = p.cases;
    d["failures"] = p.failures;
    d["counterexample"] = p.counterexample;
    d["passed"] = p.passed();
    props.append(d);
  }
  py::dict out;
  out["suite"] = r.suite;
  out["seed"] = r.seed;
  out["passed"] = r.passed();
  out["properties"] = props;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact jimm: continued fractions, quadratic surds, boundary words and PGL(2,Z) words.";

  py::register_exception<std::domain_error>(m, "DomainError", PyExc_ValueError);

  py::class_<QuadSurd>(m, "QuadSurd", "(p + q*sqrt(d))/r in normal form.")
      .def(py::init([](const py::object& p, const py::object& q, const py::object& d, const py::object& r) {
             return QuadSurd(from_py(p), from_py(q), from_py(d), from_py(r));
           }),
           py::arg("p"), py::arg("q"), py::arg("d"), py::arg("r") = 1)
      .def_static("sqrt", [](const py::object& n) { return QuadSurd::sqrt(from_py(n)); })
      .def_static("parse", [](const py::object& text) { return surd_from_py(text); })
      .def_property_readonly("p", [](const QuadSurd& x) { return to_py(x.p()); })
      .def_property_readonly("q", [](const QuadSurd& x) { return to_py(x.q()); })
      .def_property_readonly("d", [](const QuadSurd& x) { return to_py(x.d()); })
      .def_property_readonly("r", [](const QuadSurd& x) { return to_py(x.r()); })
      .def("is_rational", &QuadSurd::is_rational)
      .def("conjugate", &QuadSurd::conjugate)
      .def("reciprocal", &QuadSurd::reciprocal)
      .def("floor", [](const QuadSurd& x) { return to_py(x.floor()); })
      .def("discriminant", [](const QuadSurd& x) { return to_py(x.discriminant()); })
      .def("decimal", [](const QuadSurd& x, std::size_t digits) { return render_decimal(x, digits); },
           py::arg("digits") = 20)
      .def(-py::self)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self / py::self)
      .def(py::self == py::self)
      .def(py::self < py::self)
      .def(py::self > py::self)
      .def("__float__", &QuadSurd::to_double)
      .def("__hash__", [](const QuadSurd& x) { return py::hash(py::str(x.str())); })
      .def("__str__", &QuadSurd::str)
      .def("__repr__", [](const QuadSurd& x) { return "QuadSurd(\"" + x.str() + "\")"; });

  m.def("jimm", [](const py::object& x) { return to_py(jimm_surd(surd_from_py(x)).value); }, py::arg("x"),
        "Exact image of an irrational surd; nobles map to rationals (inf as float).");
  m.def("jimm_xor", [](const py::object& x) { return to_py(jimm_surd_xor(surd_from_py(x))); }, py::arg("x"));
  m.def("jimm_rewrite", [](const py::object& x) { return to_py(jimm_surd_rewrite(surd_from_py(x))); }, py::arg("x"));
  m.def("is_noble", [](const py::object& x) { return is_noble(surd_from_py(x)); }, py::arg("x"));
  m.def("galois_commutes", [](const py::object& x) { return galois_commute_check(surd_from_py(x)); }, py::arg("x"));

  m.def("jimm_decimal", &decimal_of_image, py::arg("literal"), py::arg("digits") = 20,
        "Decimal expansion of jimm(x) for a surd or a continued fraction stream literal (pi, e, cbrt2, [...]).");
  m.def(
      "jimm_stream_prefix",
      [](const std::string& literal, std::size_t n) {
        RealValue v = parse_number(literal);
        if (auto* c = std::get_if<CfStream>(&v)) return to_py(jimm_stream_prefix(*c, n).digits);
        if (auto* s = std::get_if<QuadSurd>(&v)) {
          return to_py(jimm_stream_prefix(CfStream::cycle(surd_to_periodic_cf(*s).preperiod(),
                                                           surd_to_periodic_cf(*s).period()),
                                          n)
                           .digits);
        }
        throw py::value_error("expected an irrational number");
      },
      py::arg("literal"), py::arg("n"));
  m.def("jimm_cf", [](const py::object& x) { return cf_to_py(jimm_cf(cf_from_py(x))); }, py::arg("x"));

  m.def("continued_fraction", [](const py::object& x) { return cf_to_py(cf_from_py(x)); }, py::arg("x"));
  m.def(
      "from_continued_fraction",
      [](const py::iterable& preperiod, const py::iterable& period) {
        return periodic_cf_to_surd(
            ContinuedFraction::periodic(quotients_from_py(preperiod), quotients_from_py(period)));
      },
      py::arg("preperiod"), py::arg("period"));
  m.def("rational_cf", [](const py::object& q) { return to_py(rational_to_cf(rational_from_py(q)).terms()); },
        py::arg("q"));

  m.def("jimm_q", [](const py::object& q) { return to_py(jimm_q_rational(rational_from_py(q))); }, py::arg("q"));
  m.def(
      "jump",
      [](const py::object& q) {
        const JumpData j = jump(rational_from_py(q));
        py::dict d;
        d["at"] = to_py(j.at);
        d["left"] = j.left;
        d["right"] = j.right;
        d["delta"] = j.delta;
        return d;
      },
      py::arg("q"));
  m.def("delta_formula", &delta_integer_formula, py::arg("n"));

  m.def("jimm_matrix", [](const py::object& mat) { return to_py(jimm_matrix(matrix_from_py(mat)).canonical()); },
        py::arg("m"));
  m.def("jimm_word", [](const std::string& w) { return to_string(jimm_word(parse_gl2_word(w))); }, py::arg("word"));
  m.def("matrix_word", [](const py::object& mat) { return to_string(matrix_to_word(matrix_from_py(mat))); },
        py::arg("m"));
  m.def(
      "orbit_fixed_point", [](const py::object& mat) { return orbit_fixed_point(matrix_from_py(mat)).x; },
      py::arg("m"));

  m.def("boundary_word", [](const py::object& x) { return cf_to_word(cf_from_py(x)).str(); }, py::arg("x"));
  m.def("word_value", [](const std::string& w) { return to_py(word_value(parse_word(w))); }, py::arg("word"));
  m.def("xor_words", [](const std::string& a, const std::string& b) {
    return xor_words(parse_word(a), parse_word(b)).str();
  });

  m.def("gauss_map", [](const py::object& x) { return gauss_map(surd_from_py(x)); }, py::arg("x"));
  m.def("t_jimm", [](const py::object& x) { return t_jimm(surd_from_py(x)); }, py::arg("x"));
  m.def(
      "farey_map",
      [](const py::object& x) {
        const auto step = farey_map(surd_from_py(x));
        return py::make_tuple(step.value, to_string(step.branch));
      },
      py::arg("x"));
  m.def(
      "measure_residual",
      [](const py::object& y, long cutoff) { return invariant_measure_residual(rational_from_py(y), cutoff).total(); },
      py::arg("y"), py::arg("cutoff") = 40);

  m.def("count_automorphisms", [](int n) { return to_py(count_automorphisms(n)); }, py::arg("depth"));
  m.def(
      "box_graph_csv",
      [](int depth, bool positive_reals) {
        return box_graph_csv(jimm_approximant(
            depth, positive_reals ? ApproximantDomain::PositiveReals : ApproximantDomain::UnitInterval));
      },
      py::arg("depth"), py::arg("positive_reals") = false);

  m.def(
      "beatty",
      [](const py::object& x, long limit) {
        const BeattyReport r = beatty_duality(surd_from_py(x), limit);
        py::dict d;
        d["x"] = r.x;
        d["y"] = r.y;
        d["dual_x"] = r.dual_x;
        d["dual_y"] = r.dual_y;
        d["partition"] = r.partition;
        d["harmonic_dual"] = r.harmonic_dual;
        d["dual_partition"] = r.dual_partition;
        return d;
      },
      py::arg("x"), py::arg("limit") = 10000);

  m.def("suite_names", &suite_names);
  m.def(
      "run_suite",
      [](const std::string& name, std::uint64_t seed, double scale) {
        SuiteReport report;
        {
          py::gil_scoped_release release;
          report = run_suite(name, seed, scale);
        }
        return suite_to_py(report);
      },
      py::arg("name"), py::arg("seed") = 1, py::arg("scale") = 1.0);
}
