#pragma once

#include "jimm/matrix.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace jimm {

/// Named elements of PGL(2,Z).
///   S: -1/x   L: 1-1/x   L2: 1/(1-x)   U: 1/x
///   V: -x     K: 1-x     T: x+1        Ttilde: 1+1/x
enum class Generator { S, L, L2, U, V, K, T, Ttilde };

struct Letter {
  Generator gen;
  long power = 1;
  friend bool operator==(const Letter&, const Letter&) = default;
};

using GL2Word = std::vector<Letter>;

Matrix2 generator_matrix(Generator g);
std::string generator_name(Generator g);

/// Product of the letters, sign-canonical.
Matrix2 word_to_matrix(const GL2Word& w);

enum class PeelStrategy {
  Floor,    // T-exponent = floor(a/c)
  Ceiling,  // T-exponent = ceil(a/c)
};

/// Word in T, S and (only when det = -1) a final V whose product is m up to sign.
GL2Word matrix_to_word(const Matrix2& m, PeelStrategy strategy = PeelStrategy::Floor);

/// Merges adjacent equal generators and drops identities (S^2 = V^2 = U^2 = K^2 = 1,
/// L^3 = 1 projectively).
GL2Word reduce_word(GL2Word w);

/// Letterwise image under the outer automorphism: S<->V, T<->Ttilde, U, K, L, L2 fixed.
GL2Word jimm_word(const GL2Word& w);
Matrix2 jimm_matrix(const Matrix2& m, PeelStrategy strategy = PeelStrategy::Floor);

/// "T U S V K L L2 T~", letters optionally followed by ^k.
GL2Word parse_gl2_word(std::string_view text);
std::string to_string(const GL2Word& w);

}  // namespace jimm
