#pragma once

// Truncated models of the semi-primitive disk complex and of the complex of
// Haken spheres.
//
// In the lens # lens case the disk complex is a tree of infinite valence. Its
// barycentric subdivision is bipartite: black vertices are disks, white
// vertices are edge midpoints, and each white stands for the unique Haken
// sphere disjoint from its two blacks. Replacing the star of every black by a
// copy of F_odd (whose vertices are the Haken spheres missing that disk)
// gives the Haken-sphere complex, again a tree.
//
// In the S^2 x S^1 # lens case the disk complex is the cone over a tree, with
// the reducing disk as apex.

#include <optional>
#include <vector>

#include "heegaard/complex.hpp"

namespace heegaard::complexes {

struct SPModelParams {
  int black_count = 1;
  int whites_per_black = 1;
  int farey_depth = 0;

  // Throws std::invalid_argument unless black_count >= 1,
  // whites_per_black >= 1 and farey_depth >= 0.
  void validate() const;
};

// Breadth-first truncation of the subdivided disk tree. The root black gets
// whites_per_black whites; each later black hangs off an unexpanded white and
// gets whites_per_black - 1 fresh whites. Growth stops at black_count blacks
// or when no white is left to expand (whites_per_black == 1 stops at two).
// Labels are "B<k>" and "W<k>".
Complex sp_prime_model(const SPModelParams& params);

// Blacks adjacent to each white, in the order they were created.
std::vector<std::vector<int>> whites_to_blacks(const Complex& sp_prime);

struct HakenComplexModel {
  Complex complex;
  // grafts[b][j] is the vertex standing for the j-th breadth-first vertex of
  // the truncated F_odd inside the copy grafted in place of black b.
  std::vector<std::vector<int>> grafts;
  // The truncated F_odd used for every copy, and its breadth-first order
  // from 1/0.
  Complex odd_tree;
  std::vector<int> odd_order;
};

// Deletes the blacks of sp_prime_model(params) and grafts one truncated F_odd
// (depth farey_depth) per black. The first whites_per_black vertices of the
// copy, in breadth-first order from 1/0, are the black's whites (the parent
// white first); the rest are fresh vertices labeled "B<k>:<slope>".
// Throws std::invalid_argument if whites_per_black exceeds the size of the
// truncated F_odd.
HakenComplexModel haken_complex_model(const SPModelParams& params);

// Apex joined to every vertex of a base tree on base_size vertices (vertex k
// hangs off vertex (k - 1) / 2), with the cone triangles over base edges.
// The apex has id 0.
Complex sp_cone_model(int base_size);

// Apex adjacent to all other vertices and the remaining vertices span a tree.
bool is_cone_over_tree(const Complex& c, int apex);

// Dimension of the Haken-sphere complex of a genus-two splitting of a
// connected sum of a lens space with a lens space (1) or with S^2 x S^1 (3).
// Only recorded here; the S^2 x S^1 complex is not modeled.
int expected_haken_complex_dimension(bool has_s2xs1_summand);

}  // namespace heegaard::complexes
