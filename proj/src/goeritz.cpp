#include "heegaard/goeritz.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <set>
#include <sstream>
#include <stdexcept>

namespace heegaard::goeritz {

Case parse_case(std::string_view text) {
  if (text == "1a") return Case::OneA;
  if (text == "1b") return Case::OneB;
  if (text == "2") return Case::Two;
  throw std::invalid_argument("unknown case \"" + std::string(text) + "\" (expected 1a, 1b or 2)");
}

namespace {

constexpr std::array<Gen, 8> kAllGens = {Gen::Alpha, Gen::Beta,  Gen::Gamma, Gen::Gamma1,
                                         Gen::Gamma2, Gen::Delta, Gen::Sigma, Gen::Tau};

bool is_involution(Gen g) { return g != Gen::Beta && g != Gen::Tau; }

Letter L(Gen g) { return {g, false}; }
Letter Linv(Gen g) { return {g, true}; }

}  // namespace

std::string_view token(Gen g) {
  switch (g) {
    case Gen::Alpha: return "a";
    case Gen::Beta: return "b";
    case Gen::Gamma: return "g";
    case Gen::Gamma1: return "g1";
    case Gen::Gamma2: return "g2";
    case Gen::Delta: return "d";
    case Gen::Sigma: return "s";
    case Gen::Tau: return "t";
  }
  return "?";
}

Word parse_word(std::string_view text) {
  Word w;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    if (tok == "1") continue;
    bool inv = false;
    std::string_view base = tok;
    if (base.ends_with('\'')) {
      inv = true;
      base.remove_suffix(1);
    }
    auto it = std::find_if(kAllGens.begin(), kAllGens.end(), [&](Gen g) { return token(g) == base; });
    if (it == kAllGens.end()) throw std::invalid_argument("unknown generator token \"" + tok + "\"");
    w.push_back({*it, inv});
  }
  return w;
}

std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (const Letter& l : w) {
    if (!s.empty()) s += ' ';
    s += token(l.gen);
    if (l.inverse) s += '\'';
  }
  return s;
}

Word inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverted());
  return out;
}

Word power(const Word& w, int k) {
  if (k < 0) return power(inverse(w), -k);
  Word out;
  out.reserve(w.size() * static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) out.insert(out.end(), w.begin(), w.end());
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Word free_reduce(const Word& w) {
  Word out;
  for (const Letter& l : w) {
    if (!out.empty() && out.back() == l.inverted()) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Presentations

bool Presentation::has_generator(Gen g) const {
  return std::find(generators.begin(), generators.end(), g) != generators.end();
}

void Presentation::validate() const {
  for (const Word& r : relators) {
    for (const Letter& l : r) {
      if (!has_generator(l.gen)) {
        throw std::invalid_argument("relator \"" + to_string(r) + "\" uses undeclared generator " +
                                    std::string(token(l.gen)));
      }
    }
  }
}

namespace {

std::string relator_text(const Word& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!s.empty()) s += ' ';
    s += token(w[i].gen);
    if (w[i].inverse) s += '\'';
    if (j - i > 1) s += "^" + std::to_string(j - i);
    i = j;
  }
  return s.empty() ? "1" : s;
}

Word commutator(Gen g, Gen h) { return {L(g), L(h), Linv(g), Linv(h)}; }

// One summand of a direct sum.
struct Factor {
  std::vector<Gen> generators;
  std::vector<Word> relators;
};

Factor cyclic(Gen g, int order) {
  Factor f{{g}, {}};
  if (order > 0) f.relators.push_back(power({L(g)}, order));
  return f;
}

Factor free_product_with_involutions(Gen free_gen, std::vector<Gen> involutions) {
  Factor f{{free_gen}, {}};
  for (Gen g : involutions) {
    f.generators.push_back(g);
    f.relators.push_back({L(g), L(g)});
  }
  return f;
}

Presentation direct_sum(const std::vector<Factor>& factors) {
  Presentation p;
  for (const Factor& f : factors) {
    p.generators.insert(p.generators.end(), f.generators.begin(), f.generators.end());
    p.relators.insert(p.relators.end(), f.relators.begin(), f.relators.end());
    p.factors.push_back(f.generators);
    if (f.generators.size() == 1) p.central.push_back(f.generators.front());
  }
  for (std::size_t i = 0; i < factors.size(); ++i) {
    for (std::size_t j = i + 1; j < factors.size(); ++j) {
      for (Gen g : factors[i].generators) {
        for (Gen h : factors[j].generators) p.relators.push_back(commutator(g, h));
      }
    }
  }
  return p;
}

// d b d = a b, written as the relator d b d b' a'.
Word reversal_relator() {
  return {L(Gen::Delta), L(Gen::Beta), L(Gen::Delta), Linv(Gen::Beta), Linv(Gen::Alpha)};
}

Presentation with_reversal_relation(const std::vector<Gen>& others) {
  Presentation p = direct_sum({cyclic(Gen::Alpha, 2), free_product_with_involutions(Gen::Beta, others)});
  p.relators.push_back(reversal_relator());
  p.validate();
  return p;
}

}  // namespace

std::string to_text(const Presentation& p) {
  std::string s = "<";
  for (std::size_t i = 0; i < p.generators.size(); ++i) {
    s += (i ? ", " : "") + std::string(token(p.generators[i]));
  }
  s += " | ";
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    s += (i ? ", " : "") + relator_text(p.relators[i]);
  }
  return s + ">";
}

nlohmann::json to_json(const Presentation& p) {
  nlohmann::json gens = nlohmann::json::array();
  for (Gen g : p.generators) gens.push_back(std::string(token(g)));
  nlohmann::json rels = nlohmann::json::array();
  for (const Word& r : p.relators) rels.push_back(to_string(r));
  nlohmann::json central = nlohmann::json::array();
  for (Gen g : p.central) central.push_back(std::string(token(g)));
  return {{"generators", gens}, {"relators", rels}, {"central", central}};
}

Presentation goeritz_presentation(Case c) {
  switch (c) {
    case Case::OneA:
      return direct_sum({cyclic(Gen::Alpha, 2),
                         free_product_with_involutions(Gen::Beta, {Gen::Gamma1, Gen::Gamma2})});
    case Case::OneB: {
      Presentation p = direct_sum({cyclic(Gen::Alpha, 2),
                                   free_product_with_involutions(Gen::Beta, {Gen::Gamma1, Gen::Delta})});
      p.relators.push_back(reversal_relator());
      return p;
    }
    case Case::Two:
      return direct_sum({cyclic(Gen::Alpha, 2),
                         free_product_with_involutions(Gen::Beta, {Gen::Gamma, Gen::Sigma}),
                         cyclic(Gen::Tau, 0)});
  }
  throw std::invalid_argument("unknown case");
}

namespace {

constexpr std::array<std::pair<Stabilizer, std::string_view>, 15> kStabilizerNames = {{
    {Stabilizer::LensDiskSphere, "G{D,P}"},
    {Stabilizer::LensDiskTwoSpheres, "G{D,P,Q1}"},
    {Stabilizer::LensDiskSpherePair, "G{D,P+Q1}"},
    {Stabilizer::LensDisk, "G{D}"},
    {Stabilizer::LensOtherDiskSpherePair, "G{E,P+Q2}"},
    {Stabilizer::LensOtherDisk, "G{E}"},
    {Stabilizer::LensDiskPair, "G{D,E}"},
    {Stabilizer::LensDiskUnion, "G{D+E}"},
    {Stabilizer::LensDiskUnionSymmetric, "G{D+E}:symmetric"},
    {Stabilizer::S2DiskSphere, "s2xs1:G{D,P}"},
    {Stabilizer::S2DiskTwoSpheres, "s2xs1:G{D,P,Q}"},
    {Stabilizer::S2DiskSpherePair, "s2xs1:G{D,P+Q}"},
    {Stabilizer::S2DiskPair, "s2xs1:G{D,E1}"},
    {Stabilizer::S2DiskTriple, "s2xs1:G{D,E1,E2}"},
    {Stabilizer::S2DiskPairUnion, "s2xs1:G{D,E1+E2}"},
}};

}  // namespace

std::string_view name(Stabilizer s) {
  for (const auto& [key, text] : kStabilizerNames) {
    if (key == s) return text;
  }
  return "?";
}

Stabilizer stabilizer_from_name(std::string_view text) {
  for (const auto& [key, n] : kStabilizerNames) {
    if (n == text) return key;
  }
  throw std::invalid_argument("unknown stabilizer \"" + std::string(text) + "\"");
}

Presentation stabilizer_presentation(Stabilizer s) {
  const Factor a2 = cyclic(Gen::Alpha, 2);
  const Factor tau = cyclic(Gen::Tau, 0);
  switch (s) {
    case Stabilizer::LensDiskSphere:
    case Stabilizer::LensDiskPair:
    case Stabilizer::LensDiskUnion:
      return direct_sum({a2, cyclic(Gen::Beta, 0)});
    case Stabilizer::LensDiskTwoSpheres:
      return direct_sum({a2});
    case Stabilizer::LensDiskSpherePair:
      return direct_sum({a2, cyclic(Gen::Gamma1, 2)});
    case Stabilizer::LensDisk:
      return direct_sum({a2, free_product_with_involutions(Gen::Beta, {Gen::Gamma1})});
    case Stabilizer::LensOtherDiskSpherePair:
      return direct_sum({a2, cyclic(Gen::Gamma2, 2)});
    case Stabilizer::LensOtherDisk:
      return direct_sum({a2, free_product_with_involutions(Gen::Beta, {Gen::Gamma2})});
    case Stabilizer::LensDiskUnionSymmetric:
      return with_reversal_relation({Gen::Delta});
    case Stabilizer::S2DiskSphere:
      return direct_sum({a2, cyclic(Gen::Beta, 0), tau});
    case Stabilizer::S2DiskTwoSpheres:
    case Stabilizer::S2DiskTriple:
      return direct_sum({a2, tau});
    case Stabilizer::S2DiskSpherePair:
      return direct_sum({a2, cyclic(Gen::Gamma, 2), tau});
    case Stabilizer::S2DiskPair:
      return direct_sum({a2, free_product_with_involutions(Gen::Beta, {Gen::Gamma}), tau});
    case Stabilizer::S2DiskPairUnion:
      return direct_sum({a2, cyclic(Gen::Sigma, 2), tau});
  }
  throw std::invalid_argument("unknown stabilizer");
}

namespace {

Word cyclic_reduce(const Word& w) {
  Word r = free_reduce(w);
  std::size_t lo = 0, hi = r.size();
  while (hi - lo >= 2 && r[lo] == r[hi - 1].inverted()) {
    ++lo;
    --hi;
  }
  return Word(r.begin() + static_cast<std::ptrdiff_t>(lo), r.begin() + static_cast<std::ptrdiff_t>(hi));
}

Word least_rotation(const Word& w) {
  Word best = w;
  Word cur = w;
  for (std::size_t i = 1; i < w.size(); ++i) {
    std::rotate(cur.begin(), cur.begin() + 1, cur.end());
    best = std::min(best, cur);
  }
  return best;
}

// Canonical key of a relator up to rotation and inversion.
Word relator_key(const Word& w) {
  Word r = cyclic_reduce(w);
  return std::min(least_rotation(r), least_rotation(inverse(r)));
}

void check_embedding(const Presentation& edge, const Presentation& target, const Embedding& images,
                     const char* side) {
  for (Gen c : edge.generators) {
    auto it = images.find(c);
    if (it == images.end()) {
      throw std::invalid_argument(std::string("edge generator ") + std::string(token(c)) +
                                  " has no image in " + side);
    }
    for (const Letter& l : it->second) {
      if (!target.has_generator(l.gen)) {
        throw std::invalid_argument(std::string("image of ") + std::string(token(c)) + " in " + side +
                                    " uses foreign generator " + std::string(token(l.gen)));
      }
    }
    if (target.has_generator(c) && free_reduce(it->second) != Word{L(c)}) {
      throw std::invalid_argument(std::string("inconsistent image of shared generator ") +
                                  std::string(token(c)) + " in " + side);
    }
  }
}

}  // namespace

Presentation tietze_cleanup(const Presentation& p) {
  Presentation out = p;
  out.relators.clear();
  std::set<Word> seen;
  for (const Word& r : p.relators) {
    Word key = relator_key(r);
    if (key.empty() || !seen.insert(key).second) continue;
    out.relators.push_back(free_reduce(r));
  }
  return out;
}

Presentation amalgam_assemble(const AmalgamData& data) {
  data.a.validate();
  data.b.validate();
  data.edge.validate();
  check_embedding(data.edge, data.a, data.into_a, "A");
  check_embedding(data.edge, data.b, data.into_b, "B");

  Presentation out;
  out.generators = data.a.generators;
  for (Gen g : data.b.generators) {
    if (!out.has_generator(g)) out.generators.push_back(g);
  }
  out.relators = data.a.relators;
  out.relators.insert(out.relators.end(), data.b.relators.begin(), data.b.relators.end());
  for (Gen c : data.edge.generators) {
    out.relators.push_back(concat(data.into_a.at(c), inverse(data.into_b.at(c))));
  }
  for (Gen g : data.a.central) {
    if (std::find(data.b.central.begin(), data.b.central.end(), g) != data.b.central.end()) {
      out.central.push_back(g);
    }
  }
  std::vector<Gen> rest;
  for (Gen g : out.generators) {
    if (std::find(out.central.begin(), out.central.end(), g) == out.central.end()) rest.push_back(g);
  }
  for (Gen g : out.central) out.factors.push_back({g});
  if (!rest.empty()) out.factors.push_back(rest);
  return tietze_cleanup(out);
}

AmalgamData standard_amalgam(Stabilizer a, Stabilizer b, Stabilizer edge) {
  AmalgamData d{stabilizer_presentation(a), stabilizer_presentation(b), stabilizer_presentation(edge), {}, {}};
  for (Gen c : d.edge.generators) {
    d.into_a[c] = {L(c)};
    d.into_b[c] = {L(c)};
  }
  return d;
}

bool same_presentation(const Presentation& p, const Presentation& q) {
  auto gens = [](const std::vector<Gen>& v) { return std::set<Gen>(v.begin(), v.end()); };
  auto keys = [](const Presentation& x) {
    std::set<Word> out;
    for (const Word& r : tietze_cleanup(x).relators) out.insert(relator_key(r));
    return out;
  };
  return gens(p.generators) == gens(q.generators) && gens(p.central) == gens(q.central) &&
         keys(p) == keys(q);
}

// ---------------------------------------------------------------------------
// Rewriting

RewriteSystem::RewriteSystem(std::vector<Letter> alphabet, std::vector<Rule> rules, std::string order)
    : alphabet_(std::move(alphabet)), rules_(std::move(rules)), order_(std::move(order)) {
  for (const Rule& r : rules_) {
    if (r.lhs.empty()) throw std::invalid_argument("rewrite rule with empty left-hand side");
    for (const Word* side : {&r.lhs, &r.rhs}) {
      for (const Letter& l : *side) {
        if (!in_alphabet(l)) throw std::invalid_argument("rewrite rule uses a letter outside the alphabet");
      }
    }
  }
}

bool RewriteSystem::in_alphabet(Letter l) const {
  return std::find(alphabet_.begin(), alphabet_.end(), l) != alphabet_.end();
}

Word RewriteSystem::reduce(const Word& w) const {
  for (const Letter& l : w) {
    if (!in_alphabet(l)) {
      throw std::invalid_argument("letter " + to_string(Word{l}) + " is not in the alphabet");
    }
  }
  std::size_t longest = 0;
  for (const Rule& r : rules_) longest = std::max(longest, r.lhs.size());

  Word cur = w;
  std::size_t pos = 0;
  while (pos < cur.size()) {
    const Rule* hit = nullptr;
    for (const Rule& r : rules_) {
      if (pos + r.lhs.size() <= cur.size() &&
          std::equal(r.lhs.begin(), r.lhs.end(), cur.begin() + static_cast<std::ptrdiff_t>(pos))) {
        hit = &r;
        break;
      }
    }
    if (hit == nullptr) {
      ++pos;
      continue;
    }
    const auto at = cur.begin() + static_cast<std::ptrdiff_t>(pos);
    cur.erase(at, at + static_cast<std::ptrdiff_t>(hit->lhs.size()));
    cur.insert(cur.begin() + static_cast<std::ptrdiff_t>(pos), hit->rhs.begin(), hit->rhs.end());
    // Everything left of pos - (longest - 1) was irreducible and still is.
    pos = pos + 1 >= longest ? pos + 1 - longest : 0;
  }
  return cur;
}

std::vector<long> termination_measure(const Word& w) {
  long delta_beta = 0, alpha = 0, tau = 0, inverse_involutions = 0;
  long deltas = 0, non_alpha = 0, non_alpha_tau = 0;
  for (const Letter& l : w) {
    switch (l.gen) {
      case Gen::Alpha:
        alpha += non_alpha;
        break;
      case Gen::Tau:
        tau += non_alpha_tau;
        ++non_alpha;
        break;
      default:
        if (l.gen == Gen::Beta) delta_beta += deltas;
        if (l.gen == Gen::Delta) ++deltas;
        ++non_alpha;
        ++non_alpha_tau;
        break;
    }
    if (l.inverse && is_involution(l.gen)) ++inverse_involutions;
  }
  return {delta_beta, alpha, tau, static_cast<long>(w.size()), inverse_involutions};
}

namespace {

constexpr const char* kOrderDescription =
    "lexicographic (delta-beta inversions, alpha inversions, tau inversions, length, "
    "inverse involution letters)";

RewriteSystem build_system(Case c) {
  std::vector<Gen> involutions;
  std::vector<Gen> infinite{Gen::Beta};
  switch (c) {
    case Case::OneA: involutions = {Gen::Gamma1, Gen::Gamma2}; break;
    case Case::OneB: involutions = {Gen::Gamma1, Gen::Delta}; break;
    case Case::Two:
      involutions = {Gen::Gamma, Gen::Sigma};
      infinite.push_back(Gen::Tau);
      break;
  }

  std::vector<Letter> alphabet{L(Gen::Alpha), Linv(Gen::Alpha)};
  for (Gen g : infinite) {
    alphabet.push_back(L(g));
    alphabet.push_back(Linv(g));
  }
  for (Gen g : involutions) {
    alphabet.push_back(L(g));
    alphabet.push_back(Linv(g));
  }

  std::vector<Rule> rules;
  // Involutions are their own inverses.
  rules.push_back({{Linv(Gen::Alpha)}, {L(Gen::Alpha)}});
  for (Gen g : involutions) rules.push_back({{Linv(g)}, {L(g)}});
  rules.push_back({{L(Gen::Alpha), L(Gen::Alpha)}, {}});
  for (Gen g : involutions) rules.push_back({{L(g), L(g)}, {}});
  for (Gen g : infinite) {
    rules.push_back({{L(g), Linv(g)}, {}});
    rules.push_back({{Linv(g), L(g)}, {}});
  }
  // a is central and moves to the front.
  for (const Letter& x : alphabet) {
    if (x.gen == Gen::Alpha || (x.inverse && is_involution(x.gen))) continue;
    rules.push_back({{x, L(Gen::Alpha)}, {L(Gen::Alpha), x}});
  }
  // t is central and moves to the front, behind a.
  if (c == Case::Two) {
    for (const Letter& x : alphabet) {
      if (x.gen == Gen::Alpha || x.gen == Gen::Tau || (x.inverse && is_involution(x.gen))) continue;
      rules.push_back({{x, L(Gen::Tau)}, {L(Gen::Tau), x}});
      rules.push_back({{x, Linv(Gen::Tau)}, {Linv(Gen::Tau), x}});
    }
  }
  // d b^e = a b^e d, from d b d = a b and d^2 = 1.
  if (c == Case::OneB) {
    rules.push_back({{L(Gen::Delta), L(Gen::Beta)}, {L(Gen::Alpha), L(Gen::Beta), L(Gen::Delta)}});
    rules.push_back({{L(Gen::Delta), Linv(Gen::Beta)}, {L(Gen::Alpha), Linv(Gen::Beta), L(Gen::Delta)}});
  }
  return RewriteSystem(std::move(alphabet), std::move(rules), kOrderDescription);
}

}  // namespace

const RewriteSystem& rewrite_system(Case c) {
  static const std::array<RewriteSystem, 3> systems = {build_system(Case::OneA), build_system(Case::OneB),
                                                       build_system(Case::Two)};
  return systems[static_cast<std::size_t>(c)];
}

Word normal_form(Case c, const Word& w) { return rewrite_system(c).reduce(w); }

bool equal(Case c, const Word& w1, const Word& w2) { return normal_form(c, w1) == normal_form(c, w2); }

std::optional<int> element_order(Case c, const Word& w, int cutoff) {
  const Word g = normal_form(c, w);
  Word acc;
  for (int k = 1; k <= cutoff; ++k) {
    acc = normal_form(c, concat(acc, g));
    if (acc.empty()) return k;
  }
  return std::nullopt;
}

std::vector<CriticalPair> check_local_confluence(const RewriteSystem& rs) {
  std::vector<CriticalPair> bad;
  const auto& rules = rs.rules();
  auto consider = [&](const Word& overlap, const Word& left, const Word& right, std::size_t i, std::size_t j) {
    Word nl = rs.reduce(left);
    Word nr = rs.reduce(right);
    if (nl != nr) bad.push_back({overlap, std::move(nl), std::move(nr), i, j});
  };

  for (std::size_t i = 0; i < rules.size(); ++i) {
    const Word& li = rules[i].lhs;
    for (std::size_t j = 0; j < rules.size(); ++j) {
      const Word& lj = rules[j].lhs;
      // Proper overlaps: a suffix of li is a prefix of lj.
      for (std::size_t k = 1; k < li.size() && k < lj.size(); ++k) {
        if (!std::equal(li.end() - static_cast<std::ptrdiff_t>(k), li.end(), lj.begin())) continue;
        Word overlap = concat(li, Word(lj.begin() + static_cast<std::ptrdiff_t>(k), lj.end()));
        Word left = concat(rules[i].rhs, Word(lj.begin() + static_cast<std::ptrdiff_t>(k), lj.end()));
        Word right = concat(Word(li.begin(), li.end() - static_cast<std::ptrdiff_t>(k)), rules[j].rhs);
        consider(overlap, left, right, i, j);
      }
      // Inclusions: lj occurs inside li.
      if (i == j || lj.size() > li.size()) continue;
      for (std::size_t p = 0; p + lj.size() <= li.size(); ++p) {
        if (!std::equal(lj.begin(), lj.end(), li.begin() + static_cast<std::ptrdiff_t>(p))) continue;
        Word right(li.begin(), li.begin() + static_cast<std::ptrdiff_t>(p));
        right.insert(right.end(), rules[j].rhs.begin(), rules[j].rhs.end());
        right.insert(right.end(), li.begin() + static_cast<std::ptrdiff_t>(p + lj.size()), li.end());
        consider(li, rules[i].rhs, right, i, j);
      }
    }
  }
  return bad;
}

// ---------------------------------------------------------------------------
// Abelianization

std::vector<long> smith_invariants(IntMatrix m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::vector<long> diag;

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // Pivot: smallest nonzero entry of the remaining block.
    for (;;) {
      std::size_t pr = rows, pc = cols;
      for (std::size_t r = t; r < rows; ++r) {
        for (std::size_t c = t; c < cols; ++c) {
          if (m[r][c] != 0 && (pr == rows || std::labs(m[r][c]) < std::labs(m[pr][pc]))) {
            pr = r;
            pc = c;
          }
        }
      }
      if (pr == rows) return diag;
      std::swap(m[t], m[pr]);
      for (auto& row : m) std::swap(row[t], row[pc]);

      bool clean = true;
      for (std::size_t r = t + 1; r < rows; ++r) {
        const long q = m[r][t] / m[t][t];
        for (std::size_t c = t; c < cols; ++c) m[r][c] -= q * m[t][c];
        if (m[r][t] != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        const long q = m[t][c] / m[t][t];
        for (std::size_t r = t; r < rows; ++r) m[r][c] -= q * m[r][t];
        if (m[t][c] != 0) clean = false;
      }
      if (!clean) continue;

      // The pivot must divide the rest of the block; otherwise fold the
      // offending row into row t and go again.
      std::size_t bad_row = rows;
      for (std::size_t r = t + 1; r < rows && bad_row == rows; ++r) {
        for (std::size_t c = t + 1; c < cols; ++c) {
          if (m[r][c] % m[t][t] != 0) {
            bad_row = r;
            break;
          }
        }
      }
      if (bad_row == rows) break;
      for (std::size_t c = t; c < cols; ++c) m[t][c] += m[bad_row][c];
    }
    diag.push_back(std::labs(m[t][t]));
  }
  return diag;
}

IntMatrix relation_matrix(const Presentation& p) {
  IntMatrix m;
  for (const Word& r : p.relators) {
    std::vector<long> row(p.generators.size(), 0);
    for (const Letter& l : r) {
      auto it = std::find(p.generators.begin(), p.generators.end(), l.gen);
      if (it == p.generators.end()) throw std::invalid_argument("relator uses an undeclared generator");
      row[static_cast<std::size_t>(it - p.generators.begin())] += l.inverse ? -1 : 1;
    }
    m.push_back(std::move(row));
  }
  return m;
}

AbelianInvariants abelianization(const Presentation& p) {
  const std::vector<long> d = smith_invariants(relation_matrix(p));
  AbelianInvariants out;
  out.free_rank = static_cast<int>(p.generators.size() - d.size());
  for (long v : d) {
    if (v > 1) out.torsion.push_back(v);
  }
  std::sort(out.torsion.begin(), out.torsion.end());
  return out;
}

std::string to_string(const AbelianInvariants& a) {
  std::vector<std::string> parts;
  if (a.free_rank == 1) parts.push_back("Z");
  if (a.free_rank > 1) parts.push_back("Z^" + std::to_string(a.free_rank));
  for (std::size_t i = 0; i < a.torsion.size();) {
    std::size_t j = i;
    while (j < a.torsion.size() && a.torsion[j] == a.torsion[i]) ++j;
    std::string part = "Z/" + std::to_string(a.torsion[i]);
    if (j - i > 1) part += "^" + std::to_string(j - i);
    parts.push_back(part);
    i = j;
  }
  if (parts.empty()) return "0";
  std::string s = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) s += " + " + parts[i];
  return s;
}

}  // namespace heegaard::goeritz
