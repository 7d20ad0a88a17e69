#include "heegaard/fgroup.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace heegaard::fgroup {

char Letter::to_char() const {
  static constexpr char kChars[] = {'x', 'X', 'y', 'Y'};
  return kChars[code_];
}

Word Word::parse(std::string_view text) {
  std::vector<Letter> letters;
  if (text == "1") return Word();
  letters.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case 'x': letters.push_back(kx); break;
      case 'X': letters.push_back(kX); break;
      case 'y': letters.push_back(ky); break;
      case 'Y': letters.push_back(kY); break;
      default:
        throw std::invalid_argument("invalid letter '" + std::string(1, c) +
                                    "' in word \"" + std::string(text) + "\"");
    }
  }
  return Word(std::move(letters));
}

Word Word::inverse() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push_back(it->inverse());
  return Word(std::move(out));
}

Word Word::operator*(const Word& rhs) const {
  std::vector<Letter> out = letters_;
  out.insert(out.end(), rhs.letters_.begin(), rhs.letters_.end());
  return Word(std::move(out));
}

Word Word::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  std::vector<Letter> out;
  out.reserve(letters_.size() * static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) out.insert(out.end(), letters_.begin(), letters_.end());
  return Word(std::move(out));
}

std::string Word::to_string() const {
  if (letters_.empty()) return "1";
  std::string s;
  s.reserve(letters_.size());
  for (Letter l : letters_) s.push_back(l.to_char());
  return s;
}

namespace {

// Free reduction in place: the prefix [0, top) acts as the stack.
void free_reduce_in_place(std::vector<Letter>& v) {
  std::size_t top = 0;
  for (Letter l : v) {
    if (top > 0 && v[top - 1] == l.inverse()) {
      --top;
    } else {
      v[top++] = l;
    }
  }
  v.resize(top);
}

// Strips inverse end letters of a freely reduced sequence.
void cyclic_reduce_in_place(std::vector<Letter>& v) {
  free_reduce_in_place(v);
  std::size_t lo = 0;
  std::size_t hi = v.size();
  while (hi - lo >= 2 && v[lo] == v[hi - 1].inverse()) {
    ++lo;
    --hi;
  }
  if (lo > 0) {
    v.erase(v.begin() + static_cast<std::ptrdiff_t>(hi), v.end());
    v.erase(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(lo));
  }
}

}  // namespace

Word free_reduce(const Word& w) {
  std::vector<Letter> v = w.letters();
  free_reduce_in_place(v);
  return Word(std::move(v));
}

CyclicWord cyclic_reduce(const Word& w) {
  CyclicWord c;
  c.letters_ = w.letters();
  cyclic_reduce_in_place(c.letters_);
  c.canonical_ = c.letters_.empty();
  return c;
}

std::size_t least_rotation(std::span<const Letter> s) {
  const std::size_t n = s.size();
  if (n < 2) return 0;
  auto at = [&](std::size_t k) { return s[k < n ? k : k - n]; };
  std::size_t i = 0, j = 1, k = 0;
  while (i < n && j < n && k < n) {
    const Letter a = at(i + k);
    const Letter b = at(j + k);
    if (a == b) {
      ++k;
      continue;
    }
    if (a > b) {
      i += k + 1;
    } else {
      j += k + 1;
    }
    if (i == j) ++j;
    k = 0;
  }
  return std::min(i, j);
}

CyclicWord CyclicWord::from_canonical_letters(std::vector<Letter> letters) {
  CyclicWord c;
  c.letters_ = std::move(letters);
  c.canonical_ = true;
  assert(c == cyclic_canonical(c.word()));
  return c;
}

CyclicWord cyclic_canonical(const Word& w) {
  CyclicWord c;
  c.letters_ = w.letters();
  cyclic_reduce_in_place(c.letters_);
  const std::size_t start = least_rotation(c.letters_);
  std::rotate(c.letters_.begin(), c.letters_.begin() + static_cast<std::ptrdiff_t>(start),
              c.letters_.end());
  c.canonical_ = true;
  return c;
}

bool same_curve_word(const Word& a, const Word& b, CurveEquality mode) {
  CyclicWord ca = cyclic_canonical(a);
  if (ca == cyclic_canonical(b)) return true;
  return mode == CurveEquality::RotationAndInversion && ca == cyclic_canonical(b.inverse());
}

CriterionResult sign_square_criterion(const CyclicWord& w) {
  const std::size_t n = w.size();
  bool seen[4] = {false, false, false, false};
  bool square_x = false;
  bool square_y = false;
  for (std::size_t i = 0; i < n; ++i) {
    seen[w[i].code()] = true;
    if (n >= 2 && w[i] == w[i + 1]) {
      (w[i].generator() == Generator::X ? square_x : square_y) = true;
    }
  }
  if (seen[kx.code()] && seen[kX.code()]) {
    return {CriterionVerdict::NotTrivialNotPrimitivePower, CriterionReason::MixedSignX};
  }
  if (seen[ky.code()] && seen[kY.code()]) {
    return {CriterionVerdict::NotTrivialNotPrimitivePower, CriterionReason::MixedSignY};
  }
  if (square_x && square_y) {
    return {CriterionVerdict::NotTrivialNotPrimitivePower, CriterionReason::BothSquares};
  }
  return {};
}

bool has_blocking_subword(const CyclicWord& w) {
  const std::size_t n = w.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Letter u = w[i];
    const Letter v = w[i + 1];
    if (n < 3 || v.generator() == u.generator()) continue;

    // u v^p u^-1 with p + 2 <= n
    std::size_t p = 1;
    while (p + 2 <= n && w[i + 1 + p] == v) ++p;
    if (p + 2 <= n && w[i + 1 + p] == u.inverse()) return true;
  }
  if (n >= 4) {
    for (std::size_t i = 0; i < n; ++i) {
      if (w[i] == w[i + 1] && w[i + 2] == w[i + 3] &&
          w[i].generator() != w[i + 2].generator()) {
        return true;
      }
    }
  }
  return false;
}

namespace {

Letter map_letter(const Automorphism& perm, Letter l) {
  const Word& img = l.generator() == Generator::X ? perm.image_x : perm.image_y;
  Letter out = img[0];
  return l.sign() < 0 ? out.inverse() : out;
}

}  // namespace

bool block_form_necessary(const CyclicWord& w) {
  const std::size_t n = w.size();
  if (n == 0) return false;
  std::vector<Letter> v(n);
  for (const Automorphism& perm : letter_permutations()) {
    std::transform(w.letters().begin(), w.letters().end(), v.begin(),
                   [&](Letter l) { return map_letter(perm, l); });

    std::size_t first_x = n;
    int sign = 0;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      if (v[i].generator() == Generator::X) {
        if (first_x == n) first_x = i;
        if (sign == 0) sign = v[i].sign();
        ok = v[i].sign() == sign;
      } else {
        ok = v[i].sign() > 0;
      }
    }
    if (!ok || first_x == n) continue;

    int lo = static_cast<int>(n);
    int hi = -1;
    int run = -1;
    for (std::size_t k = 0; k <= n; ++k) {
      if (k == n || v[(first_x + k) % n].generator() == Generator::X) {
        if (run >= 0) {
          lo = std::min(lo, run);
          hi = std::max(hi, run);
        }
        run = 0;
      } else {
        ++run;
      }
    }
    if (hi - lo <= 1) return true;
  }
  return false;
}

Word Automorphism::apply(const Word& w) const {
  std::vector<Letter> out;
  out.reserve(w.size() * 3);
  for (Letter l : w.letters()) {
    const Word& img = l.generator() == Generator::X ? image_x : image_y;
    if (l.sign() > 0) {
      out.insert(out.end(), img.letters().begin(), img.letters().end());
    } else {
      for (auto it = img.letters().rbegin(); it != img.letters().rend(); ++it) {
        out.push_back(it->inverse());
      }
    }
  }
  return free_reduce(Word(std::move(out)));
}

const std::vector<Automorphism>& letter_permutations() {
  static const std::vector<Automorphism> perms = [] {
    std::vector<Automorphism> out;
    for (const char* pair : {"xy", "Xy", "xY", "XY", "yx", "Yx", "yX", "YX"}) {
      out.push_back({Word::parse(std::string_view(pair, 1)), Word::parse(std::string_view(pair + 1, 1))});
    }
    return out;
  }();
  return perms;
}

const std::vector<Automorphism>& whitehead_moves() {
  static const std::vector<Automorphism> moves = [] {
    std::vector<Automorphism> out;
    for (const char* img : {"xy", "xY", "yx", "Yx", "Yxy", "yxY"}) {
      out.push_back({Word::parse(img), Word::parse("y")});
    }
    for (const char* img : {"yx", "yX", "xy", "Xy", "Xyx", "xyX"}) {
      out.push_back({Word::parse("x"), Word::parse(img)});
    }
    return out;
  }();
  return moves;
}

CyclicWord whitehead_minimize(const Word& w) {
  CyclicWord current = cyclic_reduce(w);
  bool reduced = true;
  while (reduced && current.size() > 1) {
    reduced = false;
    for (const Automorphism& move : whitehead_moves()) {
      CyclicWord image = cyclic_reduce(move.apply(current.word()));
      if (image.size() < current.size()) {
        current = std::move(image);
        reduced = true;
        break;
      }
    }
  }
  return cyclic_canonical(current.word());
}

bool is_primitive(const Word& w) { return whitehead_minimize(w).size() == 1; }

PrimitivityVerdict primitive_power_root(const Word& w) {
  using Kind = PrimitivityVerdict::Kind;
  CyclicWord c = cyclic_canonical(w);
  if (c.empty()) return {Kind::Trivial, {}, 0};

  const std::size_t n = c.size();
  std::size_t period = n;
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool periodic = true;
    for (std::size_t i = d; i < n && periodic; ++i) periodic = c.letters()[i] == c.letters()[i - d];
    if (periodic) {
      period = d;
      break;
    }
  }

  // The least rotation of u^k is (least rotation of u)^k, so the prefix is
  // already canonical.
  std::vector<Letter> prefix(c.letters().begin(), c.letters().begin() + static_cast<std::ptrdiff_t>(period));
  CyclicWord root = cyclic_canonical(Word(std::move(prefix)));
  const int exponent = static_cast<int>(n / period);
  if (!is_primitive(root)) return {Kind::Neither, {}, 0};
  return {exponent == 1 ? Kind::Primitive : Kind::PowerOfPrimitive, std::move(root), exponent};
}

CyclicWord word_from_intersections(std::span<const std::pair<Generator, int>> crossings) {
  std::vector<Letter> letters;
  letters.reserve(crossings.size());
  for (const auto& [g, sign] : crossings) letters.emplace_back(g, sign);
  return cyclic_canonical(Word(std::move(letters)));
}

}  // namespace heegaard::fgroup
