#include "jimm/verify.hpp"

#include "jimm/dynamics.hpp"
#include "jimm/jimm.hpp"
#include "jimm/tree.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace jimm {

bool SuiteReport::passed() const {
  return !properties.empty() &&
         std::all_of(properties.begin(), properties.end(), [](const PropertyResult& p) { return p.passed(); });
}

void PropertyRecorder::check(const std::function<bool()>& test, const std::function<std::string()>& describe) {
  ++result_.cases;
  bool ok = false;
  std::string error;
  try {
    ok = test();
  } catch (const std::exception& e) {
    error = e.what();
  }
  if (ok) return;
  if (result_.failures++ == 0) {
    result_.counterexample = describe();
    if (!error.empty()) result_.counterexample += " (threw: " + error + ")";
  }
}

std::int64_t SampleSource::range(std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(rng_.bits53() % span);
}

namespace {

bool squarefree(long n) {
  for (long p = 2; p * p <= n; ++p) {
    if (n % (p * p) == 0) return false;
  }
  return true;
}

}  // namespace

QuadSurd SampleSource::surd() {
  for (;;) {
    long d = range(2, 30);
    if (!squarefree(d)) continue;
    long q = range(1, 5) * (range(0, 1) == 0 ? 1 : -1);
    QuadSurd x(Integer(range(-20, 20)), Integer(q), Integer(d), Integer(range(1, 10)));
    if (!is_noble(x)) return x;
  }
}

QuadSurd SampleSource::unit_surd() {
  QuadSurd x = surd();
  return x - QuadSurd(Rational(x.floor()));
}

Rational SampleSource::positive_rational(std::int64_t max) {
  return Rational(Integer(range(1, max)), Integer(range(1, max)));
}

GL2Word SampleSource::word(std::size_t max_length) {
  static constexpr Generator kGenerators[] = {Generator::S, Generator::L, Generator::L2, Generator::U,
                                              Generator::V, Generator::K, Generator::T, Generator::Ttilde};
  GL2Word w;
  const auto length = static_cast<std::size_t>(range(1, static_cast<std::int64_t>(max_length)));
  for (std::size_t i = 0; i < length; ++i) {
    Generator g = kGenerators[range(0, 7)];
    long power = 1;
    if (g == Generator::T || g == Generator::Ttilde) {
      power = range(1, 3) * (range(0, 1) == 0 ? 1 : -1);
    }
    w.push_back({g, power});
  }
  return w;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"cf",       "fe",       "involution", "galois",
                                                 "matrix-table", "mcmullen", "delta",  "dynamics",
                                                 "rayleigh", "words",    "structure",  "all"};
  return names;
}

const std::vector<std::pair<Matrix2, Matrix2>>& matrix_table() {
  static const std::vector<std::pair<Matrix2, Matrix2>> rows = {
      {{1, 0, 1, 1}, {0, 1, 1, 1}},
      {{15, 1, 14, 1}, {610, 987, 233, 377}},
      {{14, 1, 13, 1}, {377, 610, 144, 233}},
      {{27, 2, 13, 1}, {521, 843, 377, 610}},
      {{16, 1, 15, 1}, {987, 1597, 377, 610}},
      {{29, 2, 14, 1}, {843, 1364, 610, 987}},
      {{41, 3, 27, 2}, {665, 1076, 144, 233}},
      {{40, 3, 13, 1}, {898, 1453, 521, 843}},
  };
  return rows;
}

std::pair<ContinuedFraction, ContinuedFraction> mcmullen_case(long k) {
  Quotients period(static_cast<std::size_t>(k + 1), Integer(1));
  period.push_back(4);
  period.push_back(5);
  period.insert(period.end(), static_cast<std::size_t>(k), Integer(1));
  period.push_back(3);
  ContinuedFraction input = ContinuedFraction::periodic({}, std::move(period));
  ContinuedFraction image = ContinuedFraction::periodic(
      {Integer(k + 2)}, {1, 1, 2, 1, 1, 1, Integer(k + 2), 1, Integer(k + 3)});
  return {input, image};
}

std::pair<ContinuedFraction, ContinuedFraction> unit_family_case(long n, long a) {
  Quotients period(static_cast<std::size_t>(n - 1), Integer(1));
  period.push_back(a);
  ContinuedFraction input = ContinuedFraction::periodic({Integer(0)}, std::move(period));
  Quotients image_period(static_cast<std::size_t>(a - 2), Integer(1));
  image_period.push_back(n + 1);
  ContinuedFraction image = ContinuedFraction::periodic({Integer(0), Integer(n)}, std::move(image_period));
  return {input, image};
}

namespace {

using Suite = std::vector<PropertyResult>;

QuadSurd J(const QuadSurd& x) {
  SurdImage image = jimm_surd(x);
  if (image.noble) throw std::domain_error("noble input " + x.str());
  return std::get<QuadSurd>(image.value);
}

std::size_t scaled(std::size_t n, double scale) {
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(static_cast<double>(n) * scale)));
}

QuadSurd surd_of(const ContinuedFraction& cf) { return periodic_cf_to_surd(cf); }

// A surd property over n random surds.
PropertyResult surd_law(const std::string& name, SampleSource& src, std::size_t n, bool unit,
                        const std::function<bool(const QuadSurd&)>& law) {
  PropertyRecorder rec(name);
  for (std::size_t i = 0; i < n; ++i) {
    QuadSurd x = unit ? src.unit_surd() : src.surd();
    rec.check([&] { return law(x); }, [&] { return "x = " + x.str(); });
  }
  return rec.result();
}

PropertyResult rational_law(const std::string& name, SampleSource& src, std::size_t n,
                            const std::function<bool(const Rational&)>& law) {
  PropertyRecorder rec(name);
  for (std::size_t i = 0; i < n; ++i) {
    Rational q = src.positive_rational();
    rec.check([&] { return law(q); }, [&] { return "q = " + q.str(); });
  }
  return rec.result();
}

Suite cf_suite(SampleSource& src, double scale) {
  Suite out;
  {
    PropertyRecorder rec("rational round trip");
    for (std::size_t i = 0, n = scaled(10000, scale); i < n; ++i) {
      Rational q(Integer(src.range(-1'000'000'000, 1'000'000'000)), Integer(src.range(1, 1'000'000'000)));
      rec.check([&] { return cf_to_rational(rational_to_cf(q)) == q; }, [&] { return q.str(); });
    }
    out.push_back(rec.result());
  }
  {
    PropertyRecorder rec("surd round trip and period bound");
    for (std::size_t i = 0, n = scaled(1000, scale); i < n; ++i) {
      long d = 0;
      do d = src.range(2, 200);
      while (!squarefree(d));
      QuadSurd x(Integer(src.range(-50, 50)), Integer(src.range(1, 50) * (src.range(0, 1) ? 1 : -1)),
                 Integer(d), Integer(src.range(1, 50)));
      rec.check(
          [&] {
            ContinuedFraction cf = surd_to_periodic_cf(x);
            return periodic_cf_to_surd(cf) == x && Integer(cf.period().size()) <= 2 * x.discriminant();
          },
          [&] { return x.str(); });
    }
    out.push_back(rec.result());
  }
  {
    PropertyRecorder rec("mobius functoriality");
    for (std::size_t i = 0, n = scaled(1000, scale); i < n; ++i) {
      Matrix2 m1 = word_to_matrix(src.word(6));
      Matrix2 m2 = word_to_matrix(src.word(6));
      QuadSurd x = src.surd();
      rec.check([&] { return mobius_apply(m1 * m2, x) == mobius_apply(m1, mobius_apply(m2, x)); },
                [&] { return m1.str() + " " + m2.str() + " x = " + x.str(); });
    }
    out.push_back(rec.result());
  }
  {
    // sqrt5 F_n > L_n exactly when n is odd; F_n >= Phi^(n-2) always.
    PropertyRecorder rec("fibonacci growth bounds");
    for (long n = 1; n <= 90; ++n) {
      rec.check(
          [&] {
            QuadSurd scaled_fib(0, fib(n), 5, 1);
            bool above = scaled_fib > QuadSurd(Rational(lucas(n)));
            QuadSurd phi_power = n == 1 ? QuadSurd(-1, 1, 5, 2) : QuadSurd(lucas(n - 2), fib(n - 2), 5, 2);
            return above == (n % 2 == 1) && QuadSurd(Rational(fib(n))) >= phi_power;
          },
          [&] { return "n = " + std::to_string(n); });
    }
    out.push_back(rec.result());
  }
  return out;
}

Suite fe_suite(SampleSource& src, double scale) {
  const std::size_t n = scaled(1000, scale);
  const std::size_t nq = scaled(10000, scale);
  const QuadSurd one(1);
  Suite out;
  out.push_back(surd_law("FE:0 jimm(jimm x) = x", src, n, false, [](const QuadSurd& x) { return J(J(x)) == x; }));
  out.push_back(surd_law("FE:I jimm(1/x) = 1/jimm(x)", src, n, false,
                         [](const QuadSurd& x) { return J(x.reciprocal()) == J(x).reciprocal(); }));
  out.push_back(surd_law("FE:II jimm(-x) = -1/jimm(x)", src, n, false,
                         [](const QuadSurd& x) { return J(-x) == -J(x).reciprocal(); }));
  out.push_back(surd_law("FE:II' jimm(-1/x) = -jimm(x)", src, n, false,
                         [](const QuadSurd& x) { return J(-x.reciprocal()) == -J(x); }));
  out.push_back(surd_law("FE:III jimm(1-x) = 1-jimm(x)", src, n, false,
                         [&](const QuadSurd& x) { return J(one - x) == one - J(x); }));
  out.push_back(surd_law("FE:IV jimm(1+x) = 1+1/jimm(x)", src, n, false,
                         [&](const QuadSurd& x) { return J(one + x) == one + J(x).reciprocal(); }));
  {
    PropertyRecorder v("FE:V jimm(M(jimm x)) = jimm(M)(x)");
    PropertyRecorder vi("FE:VI jimm(M x) = jimm(M)(jimm x)");
    for (std::size_t i = 0; i < n; ++i) {
      GL2Word w = src.word();
      Matrix2 m = word_to_matrix(w);
      QuadSurd x = src.surd();
      auto describe = [&] { return "M = " + to_string(w) + " x = " + x.str(); };
      v.check([&] { return J(mobius_apply(m, J(x))) == mobius_apply(jimm_matrix(m), x); }, describe);
      vi.check([&] { return J(mobius_apply(m, x)) == mobius_apply(jimm_matrix(m), J(x)); }, describe);
    }
    out.push_back(v.result());
    out.push_back(vi.result());
  }
  out.push_back(surd_law("jimm(x) = y iff jimm(y) = x", src, n, false, [](const QuadSurd& x) {
    QuadSurd y = J(x);
    return J(y) == x;
  }));
  out.push_back(surd_law("xy = 1 => jimm(x)jimm(y) = 1", src, n, false,
                         [&](const QuadSurd& x) { return J(x) * J(x.reciprocal()) == one; }));
  out.push_back(surd_law("x+y = 0 => jimm(x)jimm(y) = -1", src, n, false,
                         [&](const QuadSurd& x) { return J(x) * J(-x) == -one; }));
  out.push_back(surd_law("x+y = 1 => jimm(x)+jimm(y) = 1", src, n, false,
                         [&](const QuadSurd& x) { return J(x) + J(one - x) == one; }));
  out.push_back(surd_law("1/x+1/y = 1 => 1/jimm(x)+1/jimm(y) = 1", src, n, false, [&](const QuadSurd& x) {
    QuadSurd y = x / (x - one);
    return J(x).reciprocal() + J(y).reciprocal() == one;
  }));
  out.push_back(surd_law("jimm(1-1/x) = 1-1/jimm(x)", src, n, false, [&](const QuadSurd& x) {
    return J(one - x.reciprocal()) == one - J(x).reciprocal();
  }));
  out.push_back(surd_law("jimm(x/(x+1)) + jimm(1/(x+1)) = 1", src, n, false, [&](const QuadSurd& x) {
    return J(x / (x + one)) + J((x + one).reciprocal()) == one;
  }));
  const Rational rone(1);
  out.push_back(rational_law("Q: f(f(q)) = q", src, nq,
                             [](const Rational& q) { return jimm_q_rational(jimm_q_rational(q)) == q; }));
  out.push_back(rational_law("Q: f(1/q) = 1/f(q)", src, nq, [](const Rational& q) {
    return jimm_q_rational(q.reciprocal()) == jimm_q_rational(q).reciprocal();
  }));
  out.push_back(rational_law("Q: f(1+q) = 1+1/f(q)", src, nq, [&](const Rational& q) {
    return jimm_q_rational(rone + q) == rone + jimm_q_rational(q).reciprocal();
  }));
  out.push_back(rational_law("Q: f(1-q) = 1-f(q) on (0,1)", src, nq, [&](const Rational& q) {
    Rational u = q < rone ? q : (q == rone ? Rational(1, 2) : q.reciprocal());
    return jimm_q_rational(rone - u) == rone - jimm_q_rational(u);
  }));
  return out;
}

Suite involution_suite(SampleSource& src, double scale) {
  Suite out;
  const std::size_t n = scaled(1000, scale);
  out.push_back(surd_law("surd involution", src, n, false, [](const QuadSurd& x) { return J(J(x)) == x; }));
  out.push_back(rational_law("rational involution", src, scaled(10000, scale),
                             [](const Rational& q) { return jimm_q_rational(jimm_q_rational(q)) == q; }));
  {
    PropertyRecorder mat("matrix involution");
    PropertyRecorder word("word involution");
    for (std::size_t i = 0; i < n; ++i) {
      GL2Word w = src.word();
      Matrix2 m = word_to_matrix(w);
      mat.check([&] { return projectively_equal(jimm_matrix(jimm_matrix(m)), m); }, [&] { return to_string(w); });
      word.check([&] { return jimm_word(jimm_word(w)) == reduce_word(w); }, [&] { return to_string(w); });
    }
    out.push_back(mat.result());
    out.push_back(word.result());
  }
  {
    PropertyRecorder rec("boundary word involution");
    for (std::size_t i = 0; i < n; ++i) {
      BoundaryWord w = cf_to_word(surd_to_periodic_cf(src.surd()));
      rec.check([&] { return jimm_boundary_word(jimm_boundary_word(w)) == w; }, [&] { return w.str(); });
    }
    out.push_back(rec.result());
  }
  {
    PropertyRecorder rec("approximant involution");
    for (int depth = 0; depth <= 10; ++depth) {
      rec.check([&] { return jimm_approximant(depth).is_involution(); },
                [&] { return "depth " + std::to_string(depth); });
    }
    out.push_back(rec.result());
  }
  return out;
}

Suite galois_suite(SampleSource& src, double scale) {
  Suite out;
  out.push_back(surd_law("jimm(x*) = jimm(x)*", src, scaled(1000, scale), false, [](const QuadSurd& x) {
    auto r = galois_commute_check(x);
    return r.has_value() && *r;
  }));
  PropertyRecorder rec("galois examples");
  const QuadSurd root11 = QuadSurd::sqrt(11);
  const QuadSurd image(15, 1, 901, 26);
  rec.check([&] { return J(root11) == image && J(-root11) == image.conjugate(); }, [] { return "sqrt(11)"; });
  rec.check([&] { return J(QuadSurd(0, -1, 2, 1)) == QuadSurd(1, -1, 2, 1); }, [] { return "-sqrt(2)"; });
  out.push_back(rec.result());
  return out;
}

Suite matrix_table_suite() {
  PropertyRecorder rec("matrix table");
  for (const auto& [m, image] : matrix_table()) {
    rec.check([&] { return projectively_equal(jimm_matrix(m), image) && projectively_equal(jimm_matrix(image), m); },
              [&] { return m.str() + " -> " + jimm_matrix(m).str() + ", expected " + image.str(); });
  }
  return {rec.result()};
}

Suite mcmullen_suite(SampleSource& src, double scale) {
  Suite out;
  {
    PropertyRecorder rec("mcmullen family");
    std::set<Integer> fields;
    for (long k = 1; k <= 6; ++k) {
      auto [input, image] = mcmullen_case(k);
      rec.check([&] { return surd_to_periodic_cf(J(surd_of(input))) == image; },
                [&] { return "k = " + std::to_string(k) + ": got " + surd_to_periodic_cf(J(surd_of(input))).str(); });
      fields.insert(surd_of(image).d());
    }
    out.push_back(rec.result());
    PropertyRecorder distinct("mcmullen images in distinct fields");
    distinct.check([&] { return fields.size() == 6; }, [&] { return std::to_string(fields.size()) + " fields"; });
    out.push_back(distinct.result());
  }
  {
    PropertyRecorder rec("[0;(1_{n-1},a)] family");
    for (long n = 2; n <= 5; ++n) {
      for (long a = 3; a <= 6; ++a) {
        auto [input, image] = unit_family_case(n, a);
        rec.check([&] { return surd_to_periodic_cf(J(surd_of(input))) == image; },
                  [&] { return "n = " + std::to_string(n) + ", a = " + std::to_string(a); });
      }
    }
    out.push_back(rec.result());
  }
  {
    PropertyRecorder rec("norm forms");
    for (long p = 2; p <= 20; ++p) {
      QuadSurd x(p, 1, p * p - 1, 1);
      rec.check([&] { QuadSurd y = J(x); return y * y.conjugate() == QuadSurd(1); },
                [&] { return "p = " + std::to_string(p); });
    }
    for (long q = 2; q <= 30; ++q) {
      if (is_perfect_square(Integer(q))) continue;
      QuadSurd x = QuadSurd::sqrt(q);
      if (is_noble(x)) continue;
      rec.check([&] { QuadSurd y = J(x); return y * y.conjugate() == QuadSurd(-1) && y > QuadSurd(0); },
                [&] { return "q = " + std::to_string(q); });
    }
    out.push_back(rec.result());
  }
  (void)src;
  (void)scale;
  return out;
}

QuadSurd abs_surd(const QuadSurd& x) { return x.sign() < 0 ? -x : x; }

Suite delta_suite(SampleSource& src, double scale) {
  Suite out;
  {
    PropertyRecorder rec("delta(n) closed form");
    for (long n = 1; n <= 30; ++n) {
      rec.check([&] { return jump(Rational(n)).delta == delta_integer_formula(n); },
                [&] { return "n = " + std::to_string(n) + ": " + jump(Rational(n)).delta.str(); });
    }
    out.push_back(rec.result());
  }
  {
    PropertyRecorder rec("|delta(n)| strictly decreasing");
    for (long n = 2; n < 30; ++n) {
      rec.check([&] { return abs_surd(jump(Rational(n + 1)).delta) < abs_surd(jump(Rational(n)).delta); },
                [&] { return "n = " + std::to_string(n); });
    }
    out.push_back(rec.result());
  }
  out.push_back(rational_law("jump limits are nobles in Q(sqrt5)", src, scaled(300, scale), [](const Rational& q) {
    JumpData j = jump(q);
    return j.left.d() == 5 && j.right.d() == 5 && j.delta == j.right - j.left && j.left != j.right &&
           is_noble(j.left) && is_noble(j.right);
  }));
  return out;
}

Suite dynamics_suite(SampleSource& src, double scale) {
  Suite out;
  out.push_back(surd_law("jimm o gauss o jimm = t_jimm", src, scaled(1000, scale), true,
                         [](const QuadSurd& x) { return conjugated_gauss(x) == t_jimm(x); }));
  {
    PropertyRecorder rec("t_jimm(b_k(y)) = y");
    for (long k = 0; k <= 20; ++k) {
      for (int i = 0; i < 10; ++i) {
        QuadSurd y = src.unit_surd();
        rec.check([&] { return t_jimm(inverse_branch(k, y)) == y; },
                  [&] { return "k = " + std::to_string(k) + ", y = " + y.str(); });
      }
    }
    out.push_back(rec.result());
  }
  {
    PropertyRecorder rec("invariant measure residual < 1e-10");
    for (long i = 1; i <= 50; ++i) {
      Rational y(i, 51);
      rec.check(
          [&] {
            long cutoff = cutoff_for_tail(y, Rational(1, 1'000'000'000'000));
            return invariant_measure_residual(y, cutoff).total() < 1e-10;
          },
          [&] { return "y = " + y.str(); });
    }
    out.push_back(rec.result());
  }
  out.push_back(surd_law("farey map is self-conjugate with branches swapped", src, scaled(300, scale), true,
                         [](const QuadSurd& x) {
                           FareyConjugacy c = farey_conjugacy_check(x);
                           return c.equal && c.direct_branch != c.conjugated_branch;
                         }));
  out.push_back(surd_law("t_jimm orbits keep the discriminant", src, scaled(100, scale), true, [](const QuadSurd& x) {
    const Integer disc = x.discriminant();
    QuadSurd y = x;
    for (int step = 0; step < 40; ++step) {
      y = t_jimm(y);
      if (y.discriminant() != disc) return false;
    }
    return true;
  }));
  out.push_back(surd_law("t_jimm on surds matches t_jimm on expansions", src, scaled(300, scale), true,
                         [](const QuadSurd& x) {
                           return surd_to_periodic_cf(t_jimm(x)) == t_jimm(surd_to_periodic_cf(x));
                         }));
  return out;
}

Suite rayleigh_suite(double scale) {
  PropertyRecorder rec("beatty partitions and jimm duals");
  const long limit = static_cast<long>(scaled(10000, scale));
  for (const QuadSurd& x : {QuadSurd::sqrt(2), QuadSurd(2, 1, 3, 1), QuadSurd(5, 1, 10, 3)}) {
    rec.check([&] { return beatty_duality(x, limit).ok(); }, [&] { return "x = " + x.str(); });
  }
  return {rec.result()};
}

std::string bits_str(const Bits& b) {
  std::string s;
  for (bool bit : b) s += bit ? '1' : '0';
  return s;
}

Bits random_bits(SampleSource& src, std::size_t n) {
  Bits b(n);
  for (std::size_t i = 0; i < n; ++i) b[i] = src.range(0, 1) == 1;
  return b;
}

ContinuedFraction random_cf(SampleSource& src) {
  auto terms = [&](std::size_t count) {
    Quotients q;
    for (std::size_t i = 0; i < count; ++i) q.push_back(src.range(1, 6));
    return q;
  };
  Quotients head = terms(static_cast<std::size_t>(src.range(0, 6)));
  head.insert(head.begin(), Integer(src.range(-5, 5)));
  if (src.range(0, 1) == 0) return ContinuedFraction::finite(std::move(head));
  return ContinuedFraction::periodic(std::move(head), terms(static_cast<std::size_t>(src.range(1, 4))));
}

Suite words_suite(SampleSource& src, double scale) {
  Suite out;
  const std::size_t n = scaled(1000, scale);
  {
    PropertyRecorder rec("cfm bijectivity");
    for (std::size_t i = 0, m = scaled(10000, scale); i < m; ++i) {
      ContinuedFraction cf = random_cf(src);
      rec.check([&] { return word_to_cf(cf_to_word(cf)) == cf; }, [&] { return cf.str(); });
    }
    out.push_back(rec.result());
  }
  {
    PropertyRecorder rec("both words of a rational evaluate to it");
    for (std::size_t i = 0; i < n; ++i) {
      Rational q = src.positive_rational();
      if (src.range(0, 1) == 0) q = -q;
      rec.check(
          [&] {
            auto [below, above] = rational_two_words(q);
            return exact_equal(word_value(below), q) && exact_equal(word_value(above), q) && !(below == above);
          },
          [&] { return q.str(); });
    }
    out.push_back(rec.result());
  }
  {
    PropertyRecorder rec("word order matches real order");
    for (std::size_t i = 0; i < n; ++i) {
      QuadSurd x = src.surd();
      QuadSurd y = src.surd();
      rec.check(
          [&] {
            int expected = x < y ? -1 : (x == y ? 0 : 1);
            int got = compare_words(cf_to_word(surd_to_periodic_cf(x)), cf_to_word(surd_to_periodic_cf(y)));
            return (got > 0) - (got < 0) == expected;
          },
          [&] { return x.str() + " vs " + y.str(); });
    }
    out.push_back(rec.result());
  }
  {
    PropertyRecorder xor_inv("xor with the golden word is an involution");
    PropertyRecorder commute("xor commutes with negation");
    for (std::size_t i = 0; i < n; ++i) {
      BoundaryWord w(false, random_bits(src, static_cast<std::size_t>(src.range(0, 10))),
                     random_bits(src, static_cast<std::size_t>(src.range(1, 6))));
      xor_inv.check([&] { return xor_words(xor_words(w, phi_word()), phi_word()) == w; }, [&] { return w.str(); });
      commute.check([&] { return xor_words(w.complemented(), phi_word()) == xor_words(w, phi_word()).complemented(); },
                    [&] { return w.str(); });
    }
    out.push_back(xor_inv.result());
    out.push_back(commute.result());
  }
  {
    PropertyRecorder hom("jimm_matrix is a homomorphism");
    PropertyRecorder strategies("jimm_matrix independent of the decomposition");
    for (std::size_t i = 0; i < n; ++i) {
      Matrix2 a = word_to_matrix(src.word());
      Matrix2 b = word_to_matrix(src.word());
      hom.check([&] { return projectively_equal(jimm_matrix(a * b), jimm_matrix(a) * jimm_matrix(b)); },
                [&] { return a.str() + " * " + b.str(); });
      strategies.check(
          [&] { return projectively_equal(jimm_matrix(a, PeelStrategy::Floor), jimm_matrix(a, PeelStrategy::Ceiling)); },
          [&] { return a.str(); });
    }
    out.push_back(hom.result());
    out.push_back(strategies.result());
  }
  {
    PropertyRecorder rec("presentation relators preserved");
    for (const char* relator : {"V^2", "U^2", "K^2", "V U V U", "K U K U K U", "L U L U", "L^3", "S^2",
                                "S V S V", "K S V K S V K S V", "T^-2 U T U T^-2 U T U", "U T U T^-1 U T U T^-1 U T U T^-1",
                                "T^-1 T~ T^-1 T~", "T^-3 T~^2 T^-3 T~^2", "T^-2 T~^2 T^-2 T~^2 T^-2 T~^2"}) {
      GL2Word w = parse_gl2_word(relator);
      rec.check(
          [&] {
            const Matrix2 id = Matrix2::identity();
            return projectively_equal(word_to_matrix(w), id) && projectively_equal(word_to_matrix(jimm_word(w)), id);
          },
          [&] { return std::string(relator); });
    }
    out.push_back(rec.result());
  }
  {
    PropertyRecorder rec("translation by 2 becomes hyperbolic");
    rec.check(
        [] {
          Matrix2 image = jimm_matrix(Matrix2{1, 2, 0, 1});
          return projectively_equal(image, Matrix2{2, 1, 1, 1}) && abs(image.trace()) > 2;
        },
        [] { return jimm_matrix(Matrix2{1, 2, 0, 1}).str(); });
    out.push_back(rec.result());
  }
  return out;
}

Suite structure_suite(SampleSource& src, double scale) {
  Suite out;
  const std::size_t n = scaled(1000, scale);
  {
    PropertyRecorder rec("rewrite, xor and stream routes agree");
    for (std::size_t i = 0; i < n; ++i) {
      QuadSurd x = src.surd();
      rec.check(
          [&] {
            ExactReal a = jimm_surd_xor(x);
            ExactReal b = jimm_surd_rewrite(x);
            if (!exact_equal(a, b)) return false;
            ContinuedFraction cf = surd_to_periodic_cf(x);
            StreamPrefix p = jimm_stream_prefix(CfStream::cycle(cf.preperiod(), cf.period()), 20);
            ContinuedFraction expected = surd_to_periodic_cf(std::get<QuadSurd>(a));
            for (std::size_t k = 0; k < p.digits.size(); ++k) {
              if (p.digits[k] != *expected.at(k)) return false;
            }
            return p.complete;
          },
          [&] { return x.str(); });
    }
    out.push_back(rec.result());
  }
  {
    PropertyRecorder rec("jimm(M) fixes jimm of the fixed points of M");
    for (std::size_t i = 0; i < n; ++i) {
      Matrix2 m = word_to_matrix(src.word());
      const Integer disc = (m.d - m.a) * (m.d - m.a) + 4 * m.b * m.c;
      if (sgn(m.c) == 0 || sgn(disc) <= 0 || is_perfect_square(disc)) continue;
      QuadSurd x(m.a - m.d, 1, disc, 2 * m.c);
      if (is_noble(x)) continue;
      rec.check([&] { QuadSurd y = J(x); return mobius_apply(jimm_matrix(m), y) == y; },
                [&] { return m.str(); });
    }
    out.push_back(rec.result());
  }
  out.push_back(surd_law("unit interval closure", src, n, true, [](const QuadSurd& x) {
    QuadSurd y = J(x);
    return y > QuadSurd(0) && y < QuadSurd(1);
  }));
  {
    PropertyRecorder rec("farey intervals map to farey intervals");
    for (std::size_t i = 0; i < n; ++i) {
      Bits prefix = random_bits(src, static_cast<std::size_t>(src.range(1, 10)));
      Bits masked = prefix;
      for (std::size_t k = 1; k < masked.size(); k += 2) masked[k].flip();
      QuadSurd tail = src.surd();
      if (tail.sign() < 0) tail = -tail;
      rec.check(
          [&] {
            FareyInterval image = interval_of_prefix(masked);
            QuadSurd x = mobius_apply(prefix_matrix(prefix), tail);
            return image.is_unimodular() && image.contains(J(x));
          },
          [&] { return bits_str(prefix) + " tail " + tail.str(); });
    }
    out.push_back(rec.result());
  }
  {
    PropertyRecorder rec("nobles collapse 2-to-1 onto rationals");
    for (std::size_t i = 0, m = scaled(200, scale); i < m; ++i) {
      Rational q = src.positive_rational(200);
      rec.check(
          [&] {
            JumpData j = jump(q);
            SurdImage a = jimm_surd(j.left);
            SurdImage b = jimm_surd(j.right);
            return a.noble && b.noble && exact_equal(a.value, q) && exact_equal(b.value, q);
          },
          [&] { return q.str(); });
    }
    out.push_back(rec.result());
  }
  {
    PropertyRecorder rec("orbit fixed points");
    for (long k = 0; k <= 8; ++k) {
      rec.check(
          [&] {
            OrbitFixedPoint f = orbit_fixed_point(power(Matrix2{1, 1, 0, 1}, k + 1));
            Quotients cycle(static_cast<std::size_t>(k), Integer(1));
            cycle.push_back(k + 2);
            Quotients period = surd_to_periodic_cf(f.x).period();
            if (period.size() != cycle.size()) return false;
            for (std::size_t r = 0; r < cycle.size(); ++r) {
              std::rotate(cycle.begin(), cycle.begin() + 1, cycle.end());
              if (cycle == period) return true;
            }
            return false;
          },
          [&] { return "T^" + std::to_string(k + 1); });
    }
    out.push_back(rec.result());
  }
  {
    PropertyRecorder tiling("approximants tile [0,1] and [0,inf]");
    PropertyRecorder boxes("approximant boxes contain the graph");
    PropertyRecorder refine("approximant boxes shrink with depth");
    std::vector<PiecewiseMobius> maps;
    for (int depth = 0; depth <= 10; ++depth) {
      maps.push_back(jimm_approximant(depth));
      tiling.check(
          [&] {
            return maps.back().tiles(0, 1) &&
                   jimm_approximant(depth, ApproximantDomain::PositiveReals).tiles(0, Rational::infinity());
          },
          [&] { return "depth " + std::to_string(depth); });
    }
    for (std::size_t i = 0; i < n; ++i) {
      QuadSurd x = src.unit_surd();
      QuadSurd y;
      try {
        y = J(x);
      } catch (const std::exception&) {
        continue;
      }
      Rational previous = 2;
      for (int depth = 0; depth <= 10; ++depth) {
        const PiecewiseMobius& map = maps[static_cast<std::size_t>(depth)];
        auto describe = [&] { return "depth " + std::to_string(depth) + " x = " + x.str(); };
        auto piece = map.locate(x);
        boxes.check(
            [&] {
              if (!piece) return false;
              const FareyInterval& image = map.pieces()[*piece].image;
              return image.contains(y) && image.contains(map.apply(x));
            },
            describe);
        refine.check(
            [&] {
              const FareyInterval& image = map.pieces()[*piece].image;
              Rational width = image.hi - image.lo;
              bool ok = width <= previous;
              previous = width;
              return ok;
            },
            describe);
      }
    }
    out.push_back(tiling.result());
    out.push_back(boxes.result());
    out.push_back(refine.result());
  }
  {
    PropertyRecorder rec("automorphism count = 2^vertices");
    for (int depth = 0; depth <= 8; ++depth) {
      rec.check(
          [&] {
            Integer expected = 1;
            mpz_mul_2exp(expected.get_mpz_t(), expected.get_mpz_t(), vertex_count(depth).get_ui());
            return count_automorphisms(depth) == expected;
          },
          [&] { return "depth " + std::to_string(depth); });
    }
    out.push_back(rec.result());
  }
  {
    PropertyRecorder twist_rec("twist = shuffles below the vertex");
    PropertyRecorder flip_rec("all shuffles = negation");
    for (std::size_t length = 1; length <= 6; ++length) {
      std::vector<Vertex> vertices;
      for (std::size_t len = 0; len < length; ++len) {
        for (std::size_t code = 0; code < (std::size_t{1} << len); ++code) {
          Vertex v(len);
          for (std::size_t b = 0; b < len; ++b) v[b] = ((code >> b) & 1U) != 0;
          vertices.push_back(v);
        }
      }
      std::set<Vertex> all(vertices.begin(), vertices.end());
      for (std::size_t code = 0; code < (std::size_t{1} << length); ++code) {
        Bits word(length);
        for (std::size_t b = 0; b < length; ++b) word[b] = ((code >> b) & 1U) != 0;
        flip_rec.check(
            [&] {
              Bits flipped = word;
              flipped.flip();
              return shuffle_set(all, word) == flipped;
            },
            [&] { return bits_str(word); });
        for (const Vertex& v : vertices) {
          std::set<Vertex> below;
          for (const Vertex& u : vertices) {
            if (u.size() >= v.size() && std::equal(v.begin(), v.end(), u.begin())) below.insert(u);
          }
          twist_rec.check([&] { return twist(v, word) == shuffle_set(below, word); },
                          [&] { return bits_str(v) + " on " + bits_str(word); });
        }
      }
    }
    out.push_back(twist_rec.result());
    out.push_back(flip_rec.result());
  }
  return out;
}

Suite run_named(std::string_view name, SampleSource& src, double scale) {
  if (name == "cf") return cf_suite(src, scale);
  if (name == "fe") return fe_suite(src, scale);
  if (name == "involution") return involution_suite(src, scale);
  if (name == "galois") return galois_suite(src, scale);
  if (name == "matrix-table") return matrix_table_suite();
  if (name == "mcmullen") return mcmullen_suite(src, scale);
  if (name == "delta") return delta_suite(src, scale);
  if (name == "dynamics") return dynamics_suite(src, scale);
  if (name == "rayleigh") return rayleigh_suite(scale);
  if (name == "words") return words_suite(src, scale);
  if (name == "structure") return structure_suite(src, scale);
  throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

}  // namespace

SuiteReport run_suite(std::string_view name, std::uint64_t seed, double scale) {
  SuiteReport report;
  report.suite = std::string(name);
  report.seed = seed;
  SampleSource src(seed);
  if (name != "all") {
    report.properties = run_named(name, src, scale);
    return report;
  }
  for (const std::string& suite : suite_names()) {
    if (suite == "all") continue;
    for (PropertyResult& p : run_named(suite, src, scale)) {
      p.name = suite + ": " + p.name;
      report.properties.push_back(std::move(p));
    }
  }
  return report;
}

}  // namespace jimm
