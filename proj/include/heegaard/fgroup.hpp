#pragma once

// Words in the free group F(x, y) of rank two.
//
// Letters are ordered x < X < y < Y, where X and Y denote the inverses of x
// and y. The same order decides which rotation of a cyclic word is canonical.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace heegaard::fgroup {

enum class Generator : std::uint8_t { X = 0, Y = 1 };

class Letter {
 public:
  constexpr Letter() = default;
  constexpr Letter(Generator g, int sign)
      : code_(static_cast<std::uint8_t>(2 * static_cast<int>(g) + (sign < 0 ? 1 : 0))) {}

  static constexpr Letter from_code(std::uint8_t code) {
    Letter l;
    l.code_ = static_cast<std::uint8_t>(code & 3u);
    return l;
  }

  constexpr Generator generator() const { return static_cast<Generator>(code_ >> 1); }
  constexpr int sign() const { return (code_ & 1u) ? -1 : 1; }
  constexpr Letter inverse() const { return from_code(code_ ^ 1u); }
  constexpr std::uint8_t code() const { return code_; }

  constexpr bool operator==(const Letter&) const = default;
  constexpr auto operator<=>(const Letter&) const = default;

  char to_char() const;

 private:
  std::uint8_t code_ = 0;
};

inline constexpr Letter kx{Generator::X, +1};
inline constexpr Letter kX{Generator::X, -1};
inline constexpr Letter ky{Generator::Y, +1};
inline constexpr Letter kY{Generator::Y, -1};

// A possibly unreduced word.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  // Parses a string over {x, y, X, Y}; "1" and "" denote the empty word.
  // Throws std::invalid_argument on any other character.
  static Word parse(std::string_view text);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  Word inverse() const;
  Word operator*(const Word& rhs) const;
  Word pow(int k) const;

  std::string to_string() const;

  bool operator==(const Word&) const = default;
  auto operator<=>(const Word&) const = default;

 private:
  std::vector<Letter> letters_;
};

// A freely and cyclically reduced word. When canonical() holds, the stored
// rotation is the least one in the letter order.
class CyclicWord {
 public:
  CyclicWord() = default;

  // Wraps letters that are already freely and cyclically reduced and stored in
  // their least rotation. Only debug builds verify this.
  static CyclicWord from_canonical_letters(std::vector<Letter> letters);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  bool canonical() const { return canonical_; }
  Letter operator[](std::size_t i) const { return letters_[i % letters_.size()]; }

  Word word() const { return Word(letters_); }
  std::string to_string() const { return word().to_string(); }

  bool operator==(const CyclicWord& rhs) const { return letters_ == rhs.letters_; }
  auto operator<=>(const CyclicWord& rhs) const { return letters_ <=> rhs.letters_; }

 private:
  friend CyclicWord cyclic_canonical(const Word& w);
  friend CyclicWord cyclic_reduce(const Word& w);

  std::vector<Letter> letters_;
  bool canonical_ = false;
};

Word free_reduce(const Word& w);

// Free and cyclic reduction, keeping the rotation that remains after
// stripping inverse end letters.
CyclicWord cyclic_reduce(const Word& w);

CyclicWord cyclic_canonical(const Word& w);
inline CyclicWord cyclic_canonical(std::string_view text) { return cyclic_canonical(Word::parse(text)); }

// Index of the lexicographically least rotation of a (cyclic) sequence.
std::size_t least_rotation(std::span<const Letter> letters);

enum class CurveEquality {
  Rotation,             // up to cyclic conjugation
  RotationAndInversion  // additionally up to reversing the curve orientation
};

bool same_curve_word(const Word& a, const Word& b, CurveEquality mode = CurveEquality::Rotation);

// ---------------------------------------------------------------------------
// Rejection criteria

enum class CriterionVerdict { NotTrivialNotPrimitivePower, Inconclusive };

// Which pattern made the sign/square criterion fire.
enum class CriterionReason { None, MixedSignX, MixedSignY, BothSquares };

struct CriterionResult {
  CriterionVerdict verdict = CriterionVerdict::Inconclusive;
  CriterionReason reason = CriterionReason::None;
};

// A cyclically reduced word containing x and X, or y and Y, or a square of
// each generator (as cyclic subwords) is neither trivial nor a power of a
// primitive element.
CriterionResult sign_square_criterion(const CyclicWord& w);

// True iff w contains a cyclic subword u v^p u^-1 (p >= 1) or u u v v, where
// u and v are letters of different generators. Every symmetry of the letters
// and reversal of orientation is covered because u and v range over all
// signed letters. Implies sign_square_criterion rejects w.
bool has_blocking_subword(const CyclicWord& w);

// Necessary condition for primitivity: under one of the eight letter
// symmetries the cyclic word splits into blocks x^e y^n and x^e y^(n+1) for a
// single sign e and a single n >= 0.
bool block_form_necessary(const CyclicWord& w);

// ---------------------------------------------------------------------------
// Whitehead automorphisms and primitivity

// An automorphism of F(x, y) given by the images of x and y.
struct Automorphism {
  Word image_x;
  Word image_y;

  Word apply(const Word& w) const;
};

// The eight permutations of {x, X, y, Y} preserving inverse pairs.
const std::vector<Automorphism>& letter_permutations();
// The non-trivial Whitehead automorphisms of the second type, in the fixed
// order the greedy reduction tries them.
const std::vector<Automorphism>& whitehead_moves();

// Greedy Whitehead reduction: returns the minimal cyclic length representative
// reached by repeatedly taking the first move that shortens the cyclic word.
CyclicWord whitehead_minimize(const Word& w);

bool is_primitive(const Word& w);
inline bool is_primitive(const CyclicWord& w) { return is_primitive(w.word()); }

struct PrimitivityVerdict {
  enum class Kind { Trivial, Primitive, PowerOfPrimitive, Neither };

  Kind kind = Kind::Neither;
  CyclicWord root;    // set for Primitive and PowerOfPrimitive
  int exponent = 0;   // >= 2 for PowerOfPrimitive, 1 for Primitive

  bool operator==(const PrimitivityVerdict&) const = default;
};

PrimitivityVerdict primitive_power_root(const Word& w);

// Builds the curve word read off from a signed sequence of crossings with
// the two dual disks, then canonicalizes.
CyclicWord word_from_intersections(std::span<const std::pair<Generator, int>> crossings);

}  // namespace heegaard::fgroup
