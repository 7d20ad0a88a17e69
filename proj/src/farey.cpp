#include "heegaard/farey.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

namespace heegaard::farey {

using complexes::Complex;
using complexes::VertexKind;

Slope::Slope(std::int64_t numerator, std::int64_t denominator) {
  if (numerator == 0 && denominator == 0) throw std::invalid_argument("0/0 is not a slope");
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  if (denominator == 0) {
    num_ = 1;
    den_ = 0;
    return;
  }
  const std::int64_t g = std::gcd(numerator, denominator);
  num_ = numerator / g;
  den_ = denominator / g;
}

Slope Slope::parse(std::string_view text) {
  auto parse_int = [&](std::string_view part) {
    std::int64_t value = 0;
    const char* first = part.data();
    const char* last = part.data() + part.size();
    if (!part.empty() && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || first == last) {
      throw std::invalid_argument("malformed slope \"" + std::string(text) + "\"");
    }
    return value;
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Slope(parse_int(text), 1);
  return Slope(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

std::string Slope::to_string() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::strong_ordering Slope::operator<=>(const Slope& rhs) const {
  if (is_infinite() || rhs.is_infinite()) {
    return static_cast<int>(is_infinite()) <=> static_cast<int>(rhs.is_infinite());
  }
  return num_ * rhs.den_ <=> rhs.num_ * den_;
}

Slope mediant(const Slope& a, const Slope& b) {
  return Slope(a.numerator() + b.numerator(), a.denominator() + b.denominator());
}

bool farey_adjacent(const Slope& a, const Slope& b) {
  const std::int64_t det = a.numerator() * b.denominator() - b.numerator() * a.denominator();
  return det == 1 || det == -1;
}

bool is_odd_vertex(const Slope& a) { return a.numerator() % 2 != 0; }

Slope arc_slope(const LatticePoint& endpoint) {
  if (endpoint.t % 2 == 0) {
    throw std::invalid_argument("(" + std::to_string(endpoint.s) + "," +
                                std::to_string(endpoint.t) + ") is not a lift of d+: t is even");
  }
  return Slope(endpoint.t, endpoint.s);
}

namespace {

// Raw numerator/denominator pairs on the upper half circle, so that the
// mediant of a pair is taken before any normalization of 1/0.
struct Frac {
  std::int64_t n;
  std::int64_t d;
};

struct HalfBall {
  std::vector<Frac> sequence;                 // 0/1 ... 1/0 in increasing order
  std::vector<std::pair<Frac, Frac>> edges;
  std::vector<std::array<Frac, 3>> triangles;
};

HalfBall upper_half(int depth) {
  HalfBall h;
  const Frac zero{0, 1}, one{1, 1}, inf{1, 0};
  h.sequence = {zero, one, inf};
  h.edges = {{zero, one}, {one, inf}, {zero, inf}};
  h.triangles = {{zero, one, inf}};
  for (int round = 0; round < depth; ++round) {
    std::vector<Frac> next;
    next.reserve(2 * h.sequence.size());
    for (std::size_t k = 0; k + 1 < h.sequence.size(); ++k) {
      const Frac l = h.sequence[k];
      const Frac r = h.sequence[k + 1];
      const Frac m{l.n + r.n, l.d + r.d};
      next.push_back(l);
      next.push_back(m);
      h.edges.push_back({l, m});
      h.edges.push_back({m, r});
      h.triangles.push_back({l, m, r});
    }
    next.push_back(h.sequence.back());
    h.sequence = std::move(next);
  }
  return h;
}

}  // namespace

std::vector<Slope> stern_brocot_slopes(int depth) {
  if (depth < 0) throw std::invalid_argument("ball depth must be non-negative");
  std::set<Slope> all;
  for (const Frac& f : upper_half(depth).sequence) {
    all.insert(Slope(f.n, f.d));
    all.insert(Slope(-f.n, f.d));
  }
  return {all.begin(), all.end()};
}

Complex stern_brocot_ball(int depth) {
  const std::vector<Slope> slopes = stern_brocot_slopes(depth);
  Complex c;
  std::map<Slope, int> id;
  for (const Slope& s : slopes) id.emplace(s, c.add_vertex(VertexKind::Slope, s.to_string()));

  const HalfBall h = upper_half(depth);
  for (int sign : {1, -1}) {
    auto vid = [&](const Frac& f) { return id.at(Slope(sign * f.n, f.d)); };
    for (const auto& [a, b] : h.edges) c.add_edge(vid(a), vid(b));
    for (const auto& t : h.triangles) c.add_triangle(vid(t[0]), vid(t[1]), vid(t[2]));
  }
  return c;
}

Complex farey_complex(const std::vector<Slope>& slopes) {
  std::vector<Slope> sorted = slopes;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  Complex c;
  for (const Slope& s : sorted) c.add_vertex(VertexKind::Slope, s.to_string());
  const int n = static_cast<int>(sorted.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (farey_adjacent(sorted[i], sorted[j])) c.add_edge(i, j);
    }
  }
  for (const auto& [a, b] : c.edges()) {
    for (int w : c.neighbors(a)) {
      if (w > b && c.has_edge(w, b)) c.add_triangle(a, b, w);
    }
  }
  return c;
}

Slope slope_of(const complexes::Vertex& v) { return Slope::parse(v.label); }

Complex f_odd_subcomplex(const Complex& c) {
  std::set<int> odd;
  for (const auto& v : c.vertices()) {
    if (is_odd_vertex(slope_of(v))) odd.insert(v.id);
  }
  return c.induced(odd);
}

std::vector<Slope> odd_vertices_not_connected_to_infinity(int depth, int margin) {
  const Complex big = f_odd_subcomplex(stern_brocot_ball(depth + margin));
  const std::set<int> reached = complexes::component_of(big, *big.find_label("1/0"));
  std::vector<Slope> missing;
  for (const Slope& s : stern_brocot_slopes(depth)) {
    if (!is_odd_vertex(s)) continue;
    auto id = big.find_label(s.to_string());
    if (!id || !reached.contains(*id)) missing.push_back(s);
  }
  return missing;
}

std::vector<int> bfs_order(const Complex& c, int root) {
  std::vector<int> order{root};
  std::set<int> seen{root};
  for (std::size_t head = 0; head < order.size(); ++head) {
    std::vector<int> next = c.neighbors(order[head]);
    std::sort(next.begin(), next.end());
    for (int w : next) {
      if (seen.insert(w).second) order.push_back(w);
    }
  }
  return order;
}

}  // namespace heegaard::farey
