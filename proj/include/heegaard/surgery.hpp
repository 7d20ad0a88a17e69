#pragma once

// Boundary words of the disk sequence E_1, ..., E_p1 produced by repeated
// band sums in a genus-two splitting of L(p1,q1) # L(p2,q2).
//
// The i-th word is x^p2 y^g1 x^p2 y^g2 ... x^p2 y^gi, where (g1, ..., gi) are
// the circular gaps between the points {0, q1, 2 q1, ..., (i-1) q1} of Z/p1,
// read from 0 upwards. For i = 1 this is x^p2 y^p1, for i = p1 it is
// (x^p2 y)^p1.

#include <vector>

#include "heegaard/fgroup.hpp"

namespace heegaard::surgery {

struct SplittingParams {
  int p1 = 0;
  int q1 = 0;
  int p2 = 0;
  int q2 = 1;

  // Throws std::invalid_argument unless p >= 2, 1 <= q < p and gcd(p, q) = 1
  // for both summands.
  void validate() const;
};

struct GapPattern {
  int index = 0;
  std::vector<int> exponents;
};

GapPattern gap_pattern(const SplittingParams& params, int i);

fgroup::CyclicWord surgery_word(const SplittingParams& params, int i);

std::vector<fgroup::CyclicWord> surgery_sequence(const SplittingParams& params);

}  // namespace heegaard::surgery
