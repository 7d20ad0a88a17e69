#pragma once

// Extended rational slopes and finite pieces of the Farey complex.
//
// Two slopes a/b and c/d are Farey neighbours when ad - bc = +-1. The slopes
// with odd numerator (1/0 included) span a subcomplex F_odd, which is a tree:
// every Farey triangle has exactly two odd-numerator corners.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "heegaard/complex.hpp"

namespace heegaard::farey {

class Slope {
 public:
  // Reduces n/d, moves the sign into the numerator and maps +-1/0 to 1/0.
  // Throws std::invalid_argument for 0/0.
  Slope(std::int64_t numerator, std::int64_t denominator);

  static Slope infinity() { return Slope(1, 0); }
  // Parses "n/d" (or a bare integer n meaning n/1).
  static Slope parse(std::string_view text);

  std::int64_t numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }
  bool is_infinite() const { return den_ == 0; }

  Slope negated() const { return Slope(-num_, den_); }
  std::string to_string() const;

  bool operator==(const Slope&) const = default;
  // Position on the extended real line, with 1/0 last.
  std::strong_ordering operator<=>(const Slope& rhs) const;

 private:
  std::int64_t num_;
  std::int64_t den_;
};

inline Slope slope_normalize(std::int64_t n, std::int64_t d) { return Slope(n, d); }

// Mediant (a+c)/(b+d) of two slopes.
Slope mediant(const Slope& a, const Slope& b);

bool farey_adjacent(const Slope& a, const Slope& b);
bool is_odd_vertex(const Slope& a);

// A point of the covering plane of the four-holed sphere. With a lift of d-
// placed at the origin, the lifts of d+ are exactly the points with t odd.
struct LatticePoint {
  std::int64_t s = 0;
  std::int64_t t = 0;
};

// Slope of the straight arc from the origin to a lift (s, t) of d+, written
// with the odd coordinate on top: t/s. The vertical lift (0, 1) is 1/0.
// Throws std::invalid_argument when t is even.
Slope arc_slope(const LatticePoint& endpoint);

// Slopes reachable from the base triangles {1/0, 0/1, 1/1} and
// {1/0, 0/1, -1/1} by at most `depth` rounds of mediant insertion, in
// increasing order (1/0 last).
std::vector<Slope> stern_brocot_slopes(int depth);

// The full Farey subcomplex on stern_brocot_slopes(depth), with every Farey
// triangle among those vertices. Vertex ids follow the order of
// stern_brocot_slopes; labels are "n/d".
complexes::Complex stern_brocot_ball(int depth);

// Flag complex of the Farey graph on an arbitrary finite set of slopes, built
// from pairwise determinants.
complexes::Complex farey_complex(const std::vector<Slope>& slopes);

// Full subcomplex on the odd-numerator vertices. Vertices are recognized by
// their "n/d" labels.
complexes::Complex f_odd_subcomplex(const complexes::Complex& c);

// Slope encoded in a vertex label.
Slope slope_of(const complexes::Vertex& v);

// Odd vertices of the depth-`depth` ball that are not joined to 1/0 inside the
// odd subcomplex of the depth-(depth + margin) ball. Empty means connected.
std::vector<Slope> odd_vertices_not_connected_to_infinity(int depth, int margin = 2);

// Vertex ids of c in breadth-first order from `root`, neighbours visited in
// increasing id order (which is slope order for Farey balls).
std::vector<int> bfs_order(const complexes::Complex& c, int root);

}  // namespace heegaard::farey
