#pragma once

// Finite labeled simplicial complexes of dimension at most two.

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

namespace heegaard::complexes {

enum class VertexKind { Black, White, Apex, Slope };

std::string_view to_string(VertexKind kind);
VertexKind vertex_kind_from_string(std::string_view name);

struct Vertex {
  int id = 0;
  VertexKind kind = VertexKind::Slope;
  std::string label;

  bool operator==(const Vertex&) const = default;
};

using Edge = std::pair<int, int>;            // stored with first < second
using Triangle = std::array<int, 3>;         // stored sorted

class Complex {
 public:
  // Adds a vertex with the next free id and returns the id.
  int add_vertex(VertexKind kind, std::string label);
  // Throws std::invalid_argument if the id is taken.
  void add_vertex_with_id(int id, VertexKind kind, std::string label);
  // Throws std::invalid_argument on unknown endpoints or a loop. Adding an
  // existing edge is a no-op.
  void add_edge(int a, int b);
  // Throws std::invalid_argument unless all three edges are present.
  void add_triangle(int a, int b, int c);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::set<Edge>& edges() const { return edges_; }
  const std::set<Triangle>& triangles() const { return triangles_; }

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  bool empty() const { return vertices_.empty(); }

  bool has_vertex(int id) const { return index_.contains(id); }
  bool has_edge(int a, int b) const;
  const Vertex& vertex(int id) const;
  std::optional<int> find_label(std::string_view label) const;
  const std::vector<int>& neighbors(int id) const;
  std::size_t degree(int id) const { return neighbors(id).size(); }

  // Full subcomplex spanned by the given vertex ids; ids are preserved.
  Complex induced(const std::set<int>& ids) const;

  bool operator==(const Complex& rhs) const {
    return vertices_ == rhs.vertices_ && edges_ == rhs.edges_ && triangles_ == rhs.triangles_;
  }

 private:
  std::vector<Vertex> vertices_;
  std::map<int, std::size_t> index_;
  std::map<std::string, int, std::less<>> by_label_;
  std::vector<std::vector<int>> adjacency_;
  std::set<Edge> edges_;
  std::set<Triangle> triangles_;
  int next_id_ = 0;
};

// Acyclicity of the 1-skeleton.
bool is_forest(const Complex& c);
// Connected and acyclic 1-skeleton; the empty complex is not a tree.
bool is_tree(const Complex& c);
bool is_connected(const Complex& c);
bool is_bipartite(const Complex& c);
bool has_triangle_clique(const Complex& c);

// Largest simplex dimension present, or nullopt for the empty complex.
std::optional<int> check_dimension(const Complex& c);

// Vertices reachable from `from` along edges.
std::set<int> component_of(const Complex& c, int from);

// {"vertices":[{"id","kind","label"}],"edges":[[a,b]],"triangles":[[a,b,c]]}
nlohmann::json to_json(const Complex& c);
Complex complex_from_json(const nlohmann::json& j);
std::string to_dot(const Complex& c, std::string_view graph_name = "complex");

}  // namespace heegaard::complexes
