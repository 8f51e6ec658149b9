#include "jimm/gl2_word.hpp"

#include <sstream>
#include <stdexcept>

namespace jimm {

Matrix2 generator_matrix(Generator g) {
  switch (g) {
    case Generator::S: return {0, 1, -1, 0};
    case Generator::L: return {1, -1, 1, 0};
    case Generator::L2: return {0, -1, 1, -1};
    case Generator::U: return {0, 1, 1, 0};
    case Generator::V: return {-1, 0, 0, 1};
    case Generator::K: return {-1, 1, 0, 1};
    case Generator::T: return {1, 1, 0, 1};
    case Generator::Ttilde: return {1, 1, 1, 0};
  }
  throw std::logic_error("unknown generator");
}

std::string generator_name(Generator g) {
  switch (g) {
    case Generator::S: return "S";
    case Generator::L: return "L";
    case Generator::L2: return "L2";
    case Generator::U: return "U";
    case Generator::V: return "V";
    case Generator::K: return "K";
    case Generator::T: return "T";
    case Generator::Ttilde: return "T~";
  }
  throw std::logic_error("unknown generator");
}

Matrix2 word_to_matrix(const GL2Word& w) {
  Matrix2 m;
  for (const Letter& l : w) m = m * power(generator_matrix(l.gen), l.power);
  return m.canonical();
}

namespace {

long projective_order(Generator g) {
  switch (g) {
    case Generator::S:
    case Generator::U:
    case Generator::V:
    case Generator::K: return 2;
    case Generator::L:
    case Generator::L2: return 3;
    default: return 0;
  }
}

void push_letter(GL2Word& w, Letter l) {
  if (!w.empty() && w.back().gen == l.gen) {
    l.power += w.back().power;
    w.pop_back();
  }
  if (long order = projective_order(l.gen); order != 0) {
    l.power %= order;
    if (l.power < 0) l.power += order;
  }
  if (l.power != 0) w.push_back(l);
}

}  // namespace

GL2Word reduce_word(GL2Word w) {
  GL2Word out;
  for (const Letter& l : w) push_letter(out, l);
  return out;
}

GL2Word matrix_to_word(const Matrix2& m, PeelStrategy strategy) {
  const Integer det = m.det();
  if (abs(det) != 1) throw std::domain_error("matrix_to_word: determinant must be +-1");
  const bool reflect = det == -1;
  Matrix2 r = reflect ? Matrix2{-m.a, m.b, -m.c, m.d} : m;
  GL2Word w;
  while (sgn(r.c) != 0) {
    Integer k = strategy == PeelStrategy::Floor ? floor_div(r.a, r.c) : ceil_div(r.a, r.c);
    if (!k.fits_slong_p()) throw std::overflow_error("translation exponent too large");
    push_letter(w, {Generator::T, k.get_si()});
    Integer a = r.a - k * r.c;
    Integer b = r.b - k * r.d;
    push_letter(w, {Generator::S, 1});
    r = {-r.c, -r.d, a, b};
  }
  Integer shift = r.b * r.a;
  if (!shift.fits_slong_p()) throw std::overflow_error("translation exponent too large");
  push_letter(w, {Generator::T, shift.get_si()});
  if (reflect) push_letter(w, {Generator::V, 1});
  return w;
}

GL2Word jimm_word(const GL2Word& w) {
  GL2Word out;
  out.reserve(w.size());
  for (Letter l : w) {
    switch (l.gen) {
      case Generator::S: l.gen = Generator::V; break;
      case Generator::V: l.gen = Generator::S; break;
      case Generator::T: l.gen = Generator::Ttilde; break;
      case Generator::Ttilde: l.gen = Generator::T; break;
      default: break;
    }
    out.push_back(l);
  }
  return reduce_word(std::move(out));
}

Matrix2 jimm_matrix(const Matrix2& m, PeelStrategy strategy) {
  return word_to_matrix(jimm_word(matrix_to_word(m, strategy)));
}

GL2Word parse_gl2_word(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string token;
  GL2Word w;
  while (in >> token) {
    long p = 1;
    auto caret = token.find('^');
    std::string name = token.substr(0, caret);
    if (caret != std::string::npos) p = std::stol(token.substr(caret + 1));
    Generator g;
    if (name == "S") g = Generator::S;
    else if (name == "L") g = Generator::L;
    else if (name == "L2") g = Generator::L2;
    else if (name == "U") g = Generator::U;
    else if (name == "V") g = Generator::V;
    else if (name == "K") g = Generator::K;
    else if (name == "T") g = Generator::T;
    else if (name == "T~" || name == "Ttilde") g = Generator::Ttilde;
    else throw std::invalid_argument("unknown generator '" + name + "'");
    w.push_back({g, p});
  }
  return w;
}

std::string to_string(const GL2Word& w) {
  std::string out;
  for (const Letter& l : w) {
    if (!out.empty()) out += ' ';
    out += generator_name(l.gen);
    if (l.power != 1) out += "^" + std::to_string(l.power);
  }
  return out;
}

}  // namespace jimm
