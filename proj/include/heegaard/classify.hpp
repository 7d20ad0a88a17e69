#pragma once

// Genus-two Heegaard surfaces of M1 # M2, where each Mi is a lens space or
// S^2 x S^1.
//
// The surface is unique up to homeomorphism iff some summand is S^2 x S^1 or
// a lens space L(p,q) with q^2 = 1 (mod p); otherwise there are two. A
// splitting of L1 # L2 is symmetric (admits a Haken sphere reversed by a
// Goeritz element) only if L1 and L2 are homeomorphic as oriented manifolds,
// and then exactly one of the splittings is symmetric.

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"

namespace heegaard::classify {

// L(p,q) with p >= 2, 1 <= q < p, gcd(p,q) = 1. S^3 = L(1,0) and
// S^2 x S^1 = L(0,1) are not lens spaces here.
class LensParams {
 public:
  // Throws std::invalid_argument outside the range above.
  LensParams(long p, long q);

  long p() const { return p_; }
  long q() const { return q_; }

  bool operator==(const LensParams&) const = default;

 private:
  long p_;
  long q_;
};

struct S2xS1 {
  bool operator==(const S2xS1&) const = default;
};

using Summand = std::variant<LensParams, S2xS1>;

// "lens:p,q" or "s2xs1". Throws std::invalid_argument otherwise.
Summand parse_summand(std::string_view text);
std::string to_string(const Summand& s);

enum class SplittingCase { OneA, OneB, Two };

std::string_view to_string(SplittingCase c);

struct SplittingDescriptor {
  SplittingCase splitting_case = SplittingCase::OneA;
  bool symmetric = false;
  Summand first;
  Summand second;
};

// The genus-one splitting of the summand has an orientation-preserving
// homeomorphism exchanging its two solid tori.
bool genus_one_reversible(const Summand& s);

int surface_count(const Summand& m1, const Summand& m2);

// L(p,q) and L(p',q') are homeomorphic preserving orientation iff p = p' and
// q' = q^(+-1) (mod p). This is the classical classification of lens spaces.
bool oriented_lens_homeomorphic(const LensParams& a, const LensParams& b);

// One descriptor per Heegaard surface. When both summands are lens spaces and
// oriented-homeomorphic, the first descriptor is the symmetric one (case 1b).
std::vector<SplittingDescriptor> splittings(const Summand& m1, const Summand& m2);

// {"count":int,"splittings":[{"case":str,"symmetric":bool}]}
nlohmann::json classification_json(const Summand& m1, const Summand& m2);

}  // namespace heegaard::classify
