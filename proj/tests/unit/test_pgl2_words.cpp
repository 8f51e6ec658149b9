#include "helpers.hpp"

#include "jimm/gl2_word.hpp"
#include "jimm/verify.hpp"

#include <doctest.h>

using namespace jimm;
using namespace jimm::testing;

TEST_SUITE("pgl2-words") {

TEST_CASE("word to matrix") {
  CHECK(word_to_matrix({{Generator::T}}) == Matrix2{1, 1, 0, 1});
  CHECK(projectively_equal(word_to_matrix({{Generator::K}, {Generator::U}}), Matrix2{1, -1, 1, 0}));
  CHECK(word_to_matrix({}) == Matrix2::identity());
  CHECK(projectively_equal(word_to_matrix(parse_gl2_word("T^2")), Matrix2{1, 2, 0, 1}));
  CHECK(projectively_equal(word_to_matrix(parse_gl2_word("T~")), Matrix2{1, 1, 1, 0}));
}

TEST_CASE("matrix to word") {
  CHECK(matrix_to_word(Matrix2{1, 1, 0, 1}) == GL2Word{{Generator::T}});
  CHECK(matrix_to_word(Matrix2{0, 1, -1, 0}) == GL2Word{{Generator::S}});
  const Matrix2 m{2, 1, 1, 1};
  CHECK(projectively_equal(word_to_matrix(matrix_to_word(m)), m));
  CHECK(projectively_equal(word_to_matrix(matrix_to_word(m, PeelStrategy::Ceiling)), m));
  CHECK_THROWS(matrix_to_word(Matrix2{2, 0, 0, 1}));
}

TEST_CASE("jimm on letters") {
  CHECK(jimm_word({{Generator::T}}) == GL2Word{{Generator::Ttilde}});
  CHECK(jimm_word({{Generator::V}}) == GL2Word{{Generator::S}});
  CHECK(jimm_word({{Generator::K}}) == GL2Word{{Generator::K}});
  CHECK(jimm_word({{Generator::U}}) == GL2Word{{Generator::U}});
}

TEST_CASE("jimm on matrices") {
  CHECK(projectively_equal(jimm_matrix(Matrix2{1, 0, 1, 1}), Matrix2{0, 1, 1, 1}));
  CHECK(projectively_equal(jimm_matrix(Matrix2{16, 1, 15, 1}), Matrix2{987, 1597, 377, 610}));
  CHECK(projectively_equal(jimm_matrix(Matrix2{40, 3, 13, 1}), Matrix2{898, 1453, 521, 843}));
  CHECK(projectively_equal(jimm_matrix(Matrix2{1, 2, 0, 1}), Matrix2{2, 1, 1, 1}));
}

TEST_CASE("matrix table rows and their inverses") {
  for (const auto& [m, image] : matrix_table()) {
    CAPTURE(m.str());
    CHECK(projectively_equal(jimm_matrix(m), image));
    CHECK(projectively_equal(jimm_matrix(image), m));
    CHECK(projectively_equal(jimm_matrix(m, PeelStrategy::Ceiling), image));
  }
}

TEST_CASE("reduction") {
  CHECK(reduce_word(parse_gl2_word("S S T T^-1 V V")).empty());
  CHECK(reduce_word(parse_gl2_word("L L L")).empty());
  CHECK(reduce_word(parse_gl2_word("T T T~")) == GL2Word{{Generator::T, 2}, {Generator::Ttilde}});
}

TEST_CASE("word text") {
  CHECK(to_string(parse_gl2_word("T^2 S T~^-1")) == "T^2 S T~^-1");
  CHECK_THROWS(parse_gl2_word("T Q"));
}

}  // TEST_SUITE
