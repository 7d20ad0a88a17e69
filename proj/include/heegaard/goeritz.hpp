#pragma once

// Presentations of genus-two Goeritz groups of non-prime 3-manifolds and
// normal forms for their elements.
//
//   1a  L1 # L2, not symmetric:  <a|a^2> + <b, g1, g2 | g1^2, g2^2>
//   1b  L1 # L2, symmetric:      <a|a^2> + <b, g1, d | g1^2, d^2, d b d = a b>
//   2   S2xS1 # L:               <a|a^2> + <b, g, s | g^2, s^2> + <t>
//
// Tokens a, b, g, g1, g2, d, s, t stand for alpha, beta, gamma, gamma_1,
// gamma_2, delta, sigma, tau; a trailing apostrophe marks an inverse. "+" is a
// direct sum, so a (and t) commute with everything. In case 1b the relation
// d b d = a b crosses the summands; it is kept verbatim with a central.
//
// Each group is also assembled from the stabilizers of a vertex and an edge of
// the tree it acts on, as an amalgamated free product.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "heegaard/classify.hpp"
#include "json.hpp"

namespace heegaard::goeritz {

using Case = classify::SplittingCase;

// Throws std::invalid_argument unless text is "1a", "1b" or "2".
Case parse_case(std::string_view text);

enum class Gen : std::uint8_t { Alpha, Beta, Gamma, Gamma1, Gamma2, Delta, Sigma, Tau };

std::string_view token(Gen g);

struct Letter {
  Gen gen = Gen::Alpha;
  bool inverse = false;

  Letter inverted() const { return {gen, !inverse}; }
  bool operator==(const Letter&) const = default;
  auto operator<=>(const Letter&) const = default;
};

using Word = std::vector<Letter>;

// Whitespace-separated tokens; "1" or an empty string is the identity.
// Throws std::invalid_argument on unknown tokens.
Word parse_word(std::string_view text);
std::string to_string(const Word& w);
Word inverse(const Word& w);
Word power(const Word& w, int k);
Word concat(const Word& a, const Word& b);
Word free_reduce(const Word& w);

struct Presentation {
  std::vector<Gen> generators;
  std::vector<Word> relators;
  std::vector<Gen> central;
  std::vector<std::vector<Gen>> factors;  // declared direct summands

  bool has_generator(Gen g) const;
  // Throws std::invalid_argument if a relator uses an undeclared generator.
  void validate() const;
};

// "<a, b, g1, g2 | a^2, g1^2, ...>"
std::string to_text(const Presentation& p);
// {"generators":[...],"relators":[...],"central":[...]}
nlohmann::json to_json(const Presentation& p);

Presentation goeritz_presentation(Case c);

// Stabilizer subgroups of disks, Haken spheres and their unions.
enum class Stabilizer {
  LensDiskSphere,          // G{D,P}
  LensDiskTwoSpheres,      // G{D,P,Q1}
  LensDiskSpherePair,      // G{D,P+Q1}
  LensDisk,                // G{D}
  LensOtherDiskSpherePair, // G{E,P+Q2}
  LensOtherDisk,           // G{E}
  LensDiskPair,            // G{D,E}
  LensDiskUnion,           // G{D+E}, not symmetric
  LensDiskUnionSymmetric,  // G{D+E}, symmetric
  S2DiskSphere,            // G{D,P}
  S2DiskTwoSpheres,        // G{D,P,Q}
  S2DiskSpherePair,        // G{D,P+Q}
  S2DiskPair,              // G{D,E1}
  S2DiskTriple,            // G{D,E1,E2}
  S2DiskPairUnion,         // G{D,E1+E2}
};

std::string_view name(Stabilizer s);
// Accepts the names produced by name(); throws std::invalid_argument otherwise.
Stabilizer stabilizer_from_name(std::string_view text);
Presentation stabilizer_presentation(Stabilizer s);

// Generator images of an edge group in a vertex group.
using Embedding = std::map<Gen, Word>;

struct AmalgamData {
  Presentation a;
  Presentation b;
  Presentation edge;
  Embedding into_a;
  Embedding into_b;
};

// A *_C B: generators of A and B with equal names are identified, relators
// are united and each edge generator c contributes into_a(c) into_b(c)^-1.
// The result is passed through tietze_cleanup. Throws std::invalid_argument
// if an image uses a generator foreign to its target, or a generator shared
// with the target is not mapped to itself.
Presentation amalgam_assemble(const AmalgamData& data);

// The identity embeddings of a stabilizer edge group into both vertex groups.
AmalgamData standard_amalgam(Stabilizer a, Stabilizer b, Stabilizer edge);

// Cyclically reduces relators, drops trivial ones and duplicates (up to
// rotation and inversion).
Presentation tietze_cleanup(const Presentation& p);

// Same generators, central generators and relators up to tietze_cleanup.
bool same_presentation(const Presentation& p, const Presentation& q);

// ---------------------------------------------------------------------------
// Word problem

struct Rule {
  Word lhs;
  Word rhs;
};

class RewriteSystem {
 public:
  RewriteSystem(std::vector<Letter> alphabet, std::vector<Rule> rules, std::string order);

  const std::vector<Letter>& alphabet() const { return alphabet_; }
  const std::vector<Rule>& rules() const { return rules_; }
  const std::string& order_description() const { return order_; }

  bool in_alphabet(Letter l) const;
  // Rewrites to exhaustion, always applying the leftmost match (earliest rule
  // on ties). Throws std::invalid_argument on letters outside the alphabet.
  Word reduce(const Word& w) const;

 private:
  std::vector<Letter> alphabet_;
  std::vector<Rule> rules_;
  std::string order_;
};

// Lexicographic termination measure shared by the shipped systems:
// (delta-beta inversions, alpha inversions, tau inversions, length, inverse
// letters of involutions). Every shipped rule strictly decreases it in any
// context.
std::vector<long> termination_measure(const Word& w);

const RewriteSystem& rewrite_system(Case c);

Word normal_form(Case c, const Word& w);
bool equal(Case c, const Word& w1, const Word& w2);

// Smallest k in 1..cutoff with w^k trivial; nullopt means no torsion found up
// to the cutoff.
std::optional<int> element_order(Case c, const Word& w, int cutoff = 64);

struct CriticalPair {
  Word overlap;
  Word left;   // normal form of the first resolution
  Word right;  // normal form of the second resolution
  std::size_t first_rule = 0;
  std::size_t second_rule = 0;
};

// Every overlap and inclusion of left-hand sides whose two one-step
// resolutions reduce to different irreducible words.
std::vector<CriticalPair> check_local_confluence(const RewriteSystem& rs);

// ---------------------------------------------------------------------------
// Abelianization

using IntMatrix = std::vector<std::vector<long>>;

// Invariant factors d1 | d2 | ... of an integer matrix (nonzero diagonal of
// its Smith normal form).
std::vector<long> smith_invariants(IntMatrix m);

struct AbelianInvariants {
  int free_rank = 0;
  std::vector<long> torsion;  // invariant factors > 1, ascending

  bool operator==(const AbelianInvariants&) const = default;
};

// Rows are relators, columns generators, entries exponent sums.
IntMatrix relation_matrix(const Presentation& p);
AbelianInvariants abelianization(const Presentation& p);
// "Z^2 + Z/2^3"; the trivial group prints as "0".
std::string to_string(const AbelianInvariants& a);

}  // namespace heegaard::goeritz
