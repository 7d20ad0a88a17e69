#include "heegaard/classify.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

namespace heegaard::classify {

LensParams::LensParams(long p, long q) : p_(p), q_(q) {
  if (p < 2 || q < 1 || q >= p || std::gcd(p, q) != 1) {
    throw std::invalid_argument("L(" + std::to_string(p) + "," + std::to_string(q) +
                                ") is not a lens space (need p >= 2, 1 <= q < p, gcd(p,q) = 1)");
  }
}

namespace {

long parse_long(std::string_view text, std::string_view whole) {
  long value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw std::invalid_argument("malformed summand \"" + std::string(whole) + "\"");
  }
  return value;
}

long mod(long a, long p) {
  long r = a % p;
  return r < 0 ? r + p : r;
}

}  // namespace

Summand parse_summand(std::string_view text) {
  if (text == "s2xs1") return S2xS1{};
  constexpr std::string_view prefix = "lens:";
  if (!text.starts_with(prefix)) {
    throw std::invalid_argument("malformed summand \"" + std::string(text) +
                                "\" (expected lens:p,q or s2xs1)");
  }
  const std::string_view body = text.substr(prefix.size());
  const auto comma = body.find(',');
  if (comma == std::string_view::npos) {
    throw std::invalid_argument("malformed summand \"" + std::string(text) + "\"");
  }
  return LensParams(parse_long(body.substr(0, comma), text), parse_long(body.substr(comma + 1), text));
}

std::string to_string(const Summand& s) {
  if (const auto* lens = std::get_if<LensParams>(&s)) {
    return "L(" + std::to_string(lens->p()) + "," + std::to_string(lens->q()) + ")";
  }
  return "S2xS1";
}

std::string_view to_string(SplittingCase c) {
  switch (c) {
    case SplittingCase::OneA: return "1a";
    case SplittingCase::OneB: return "1b";
    case SplittingCase::Two: return "2";
  }
  return "1a";
}

bool genus_one_reversible(const Summand& s) {
  const auto* lens = std::get_if<LensParams>(&s);
  if (lens == nullptr) return true;
  return mod(lens->q() * lens->q(), lens->p()) == 1;
}

int surface_count(const Summand& m1, const Summand& m2) {
  return genus_one_reversible(m1) || genus_one_reversible(m2) ? 1 : 2;
}

bool oriented_lens_homeomorphic(const LensParams& a, const LensParams& b) {
  if (a.p() != b.p()) return false;
  return mod(a.q() - b.q(), a.p()) == 0 || mod(a.q() * b.q(), a.p()) == 1;
}

std::vector<SplittingDescriptor> splittings(const Summand& m1, const Summand& m2) {
  const int count = surface_count(m1, m2);
  const auto* l1 = std::get_if<LensParams>(&m1);
  const auto* l2 = std::get_if<LensParams>(&m2);
  if (l1 == nullptr || l2 == nullptr) {
    return {SplittingDescriptor{SplittingCase::Two, false, m1, m2}};
  }

  std::vector<SplittingDescriptor> out;
  const bool homeomorphic = oriented_lens_homeomorphic(*l1, *l2);
  for (int k = 0; k < count; ++k) {
    const bool symmetric = homeomorphic && k == 0;
    out.push_back({symmetric ? SplittingCase::OneB : SplittingCase::OneA, symmetric, m1, m2});
  }
  return out;
}

nlohmann::json classification_json(const Summand& m1, const Summand& m2) {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& d : splittings(m1, m2)) {
    list.push_back({{"case", std::string(to_string(d.splitting_case))}, {"symmetric", d.symmetric}});
  }
  return {{"count", surface_count(m1, m2)}, {"splittings", list}};
}

}  // namespace heegaard::classify
