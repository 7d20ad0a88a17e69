#include "heegaard/surgery.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace heegaard::surgery {

namespace {

void check_summand(int p, int q, const char* name) {
  if (p < 2 || q < 1 || q >= p || std::gcd(p, q) != 1) {
    throw std::invalid_argument(std::string("invalid lens parameters for ") + name + ": (" +
                                std::to_string(p) + "," + std::to_string(q) + ")");
  }
}

void check_index(const SplittingParams& params, int i) {
  if (i < 1 || i > params.p1) {
    throw std::out_of_range("disk index " + std::to_string(i) + " outside 1.." +
                            std::to_string(params.p1));
  }
}

// Start of the lexicographically least rotation of a sequence of gaps.
std::size_t least_gap_rotation(const std::vector<int>& g) {
  const std::size_t n = g.size();
  std::size_t i = 0, j = 1, k = 0;
  while (i < n && j < n && k < n) {
    const int a = g[(i + k) % n];
    const int b = g[(j + k) % n];
    if (a == b) {
      ++k;
      continue;
    }
    (a > b ? i : j) += k + 1;
    if (i == j) ++j;
    k = 0;
  }
  return std::min(i, j);
}

}  // namespace

void SplittingParams::validate() const {
  check_summand(p1, q1, "first summand");
  check_summand(p2, q2, "second summand");
}

GapPattern gap_pattern(const SplittingParams& params, int i) {
  params.validate();
  check_index(params, i);

  std::vector<char> marked(static_cast<std::size_t>(params.p1), 0);
  for (long k = 0; k < i; ++k) {
    marked[static_cast<std::size_t>((k * params.q1) % params.p1)] = 1;
  }

  GapPattern out{i, {}};
  out.exponents.reserve(static_cast<std::size_t>(i));
  int last = 0;
  for (int pos = 1; pos <= params.p1; ++pos) {
    if (pos == params.p1 || marked[static_cast<std::size_t>(pos)]) {
      out.exponents.push_back(pos - last);
      last = pos;
    }
  }
  return out;
}

fgroup::CyclicWord surgery_word(const SplittingParams& params, int i) {
  std::vector<int> gaps = gap_pattern(params, i).exponents;
  // Every x-run has length p2, so the least rotation starts at a block
  // x^p2 y^g, and comparing such rotations compares their gap sequences.
  std::rotate(gaps.begin(), gaps.begin() + static_cast<std::ptrdiff_t>(least_gap_rotation(gaps)), gaps.end());
  std::vector<fgroup::Letter> letters;
  letters.reserve(static_cast<std::size_t>(i * params.p2 + params.p1));
  for (int g : gaps) {
    letters.insert(letters.end(), static_cast<std::size_t>(params.p2), fgroup::kx);
    letters.insert(letters.end(), static_cast<std::size_t>(g), fgroup::ky);
  }
  return fgroup::CyclicWord::from_canonical_letters(std::move(letters));
}

std::vector<fgroup::CyclicWord> surgery_sequence(const SplittingParams& params) {
  params.validate();
  std::vector<fgroup::CyclicWord> out;
  out.reserve(static_cast<std::size_t>(params.p1));
  for (int i = 1; i <= params.p1; ++i) out.push_back(surgery_word(params, i));
  return out;
}

}  // namespace heegaard::surgery
