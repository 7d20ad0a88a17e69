#include "heegaard/complexes.hpp"

#include <deque>
#include <map>
#include <stdexcept>
#include <string>

#include "heegaard/farey.hpp"

namespace heegaard::complexes {

void SPModelParams::validate() const {
  if (black_count < 1) throw std::invalid_argument("black count must be positive");
  if (whites_per_black < 1) throw std::invalid_argument("whites per black must be positive");
  if (farey_depth < 0) throw std::invalid_argument("Farey depth must be non-negative");
}

Complex sp_prime_model(const SPModelParams& params) {
  params.validate();
  Complex c;
  int blacks = 0;
  int whites = 0;
  std::deque<int> frontier;

  auto add_black = [&] { return c.add_vertex(VertexKind::Black, "B" + std::to_string(blacks++)); };
  auto add_white = [&](int black) {
    const int w = c.add_vertex(VertexKind::White, "W" + std::to_string(whites++));
    c.add_edge(black, w);
    frontier.push_back(w);
  };

  const int root = add_black();
  for (int k = 0; k < params.whites_per_black; ++k) add_white(root);

  while (blacks < params.black_count && !frontier.empty()) {
    const int w = frontier.front();
    frontier.pop_front();
    const int b = add_black();
    c.add_edge(w, b);
    for (int k = 1; k < params.whites_per_black; ++k) add_white(b);
  }
  return c;
}

std::vector<std::vector<int>> whites_to_blacks(const Complex& sp_prime) {
  std::vector<std::vector<int>> out;
  for (const Vertex& v : sp_prime.vertices()) {
    if (v.kind != VertexKind::White) continue;
    std::vector<int> blacks;
    for (int n : sp_prime.neighbors(v.id)) {
      if (sp_prime.vertex(n).kind == VertexKind::Black) blacks.push_back(n);
    }
    out.push_back(std::move(blacks));
  }
  return out;
}

HakenComplexModel haken_complex_model(const SPModelParams& params) {
  params.validate();
  HakenComplexModel model;
  model.odd_tree = farey::f_odd_subcomplex(farey::stern_brocot_ball(params.farey_depth));
  model.odd_order = farey::bfs_order(model.odd_tree, *model.odd_tree.find_label("1/0"));
  const std::size_t k = static_cast<std::size_t>(params.whites_per_black);
  if (k > model.odd_order.size()) {
    throw std::invalid_argument(std::to_string(k) + " whites per black exceed the " +
                                std::to_string(model.odd_order.size()) +
                                " vertices of the truncated F_odd at depth " +
                                std::to_string(params.farey_depth));
  }

  std::map<int, std::size_t> position;
  for (std::size_t j = 0; j < model.odd_order.size(); ++j) position[model.odd_order[j]] = j;

  const Complex sp = sp_prime_model(params);
  std::map<int, int> white_id;
  for (const Vertex& v : sp.vertices()) {
    if (v.kind == VertexKind::White) white_id[v.id] = model.complex.add_vertex(VertexKind::White, v.label);
  }

  for (const Vertex& black : sp.vertices()) {
    if (black.kind != VertexKind::Black) continue;
    const std::vector<int>& whites = sp.neighbors(black.id);
    std::vector<int> copy(model.odd_order.size());
    for (std::size_t j = 0; j < copy.size(); ++j) {
      if (j < whites.size()) {
        copy[j] = white_id.at(whites[j]);
      } else {
        const std::string slope = model.odd_tree.vertex(model.odd_order[j]).label;
        copy[j] = model.complex.add_vertex(VertexKind::Slope, black.label + ":" + slope);
      }
    }
    for (const auto& [a, b] : model.odd_tree.edges()) {
      model.complex.add_edge(copy[position.at(a)], copy[position.at(b)]);
    }
    model.grafts.push_back(std::move(copy));
  }
  return model;
}

Complex sp_cone_model(int base_size) {
  if (base_size < 1) throw std::invalid_argument("cone base size must be positive");
  Complex c;
  const int apex = c.add_vertex(VertexKind::Apex, "D");
  std::vector<int> base;
  for (int k = 0; k < base_size; ++k) {
    base.push_back(c.add_vertex(VertexKind::Black, "E" + std::to_string(k)));
    c.add_edge(apex, base.back());
  }
  for (int k = 1; k < base_size; ++k) {
    const int parent = base[static_cast<std::size_t>((k - 1) / 2)];
    c.add_edge(parent, base[static_cast<std::size_t>(k)]);
    c.add_triangle(apex, parent, base[static_cast<std::size_t>(k)]);
  }
  return c;
}

bool is_cone_over_tree(const Complex& c, int apex) {
  if (!c.has_vertex(apex) || c.vertex_count() < 2) return false;
  if (c.degree(apex) + 1 != c.vertex_count()) return false;
  std::set<int> rest;
  for (const Vertex& v : c.vertices()) {
    if (v.id != apex) rest.insert(v.id);
  }
  return is_tree(c.induced(rest));
}

int expected_haken_complex_dimension(bool has_s2xs1_summand) { return has_s2xs1_summand ? 3 : 1; }

}  // namespace heegaard::complexes
