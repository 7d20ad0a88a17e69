#include "heegaard/complex.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace heegaard::complexes {

std::string_view to_string(VertexKind kind) {
  switch (kind) {
    case VertexKind::Black: return "black";
    case VertexKind::White: return "white";
    case VertexKind::Apex: return "apex";
    case VertexKind::Slope: return "slope";
  }
  return "slope";
}

VertexKind vertex_kind_from_string(std::string_view name) {
  if (name == "black") return VertexKind::Black;
  if (name == "white") return VertexKind::White;
  if (name == "apex") return VertexKind::Apex;
  if (name == "slope") return VertexKind::Slope;
  throw std::invalid_argument("unknown vertex kind \"" + std::string(name) + "\"");
}

int Complex::add_vertex(VertexKind kind, std::string label) {
  const int id = next_id_;
  add_vertex_with_id(id, kind, std::move(label));
  return id;
}

void Complex::add_vertex_with_id(int id, VertexKind kind, std::string label) {
  if (index_.contains(id)) {
    throw std::invalid_argument("duplicate vertex id " + std::to_string(id));
  }
  index_.emplace(id, vertices_.size());
  by_label_.emplace(label, id);
  vertices_.push_back({id, kind, std::move(label)});
  adjacency_.emplace_back();
  next_id_ = std::max(next_id_, id + 1);
}

void Complex::add_edge(int a, int b) {
  if (!has_vertex(a) || !has_vertex(b)) {
    throw std::invalid_argument("edge references unknown vertex (" + std::to_string(a) + "," +
                                std::to_string(b) + ")");
  }
  if (a == b) throw std::invalid_argument("loop at vertex " + std::to_string(a));
  if (!edges_.emplace(std::min(a, b), std::max(a, b)).second) return;
  adjacency_[index_.at(a)].push_back(b);
  adjacency_[index_.at(b)].push_back(a);
}

void Complex::add_triangle(int a, int b, int c) {
  if (!has_edge(a, b) || !has_edge(b, c) || !has_edge(a, c)) {
    throw std::invalid_argument("triangle (" + std::to_string(a) + "," + std::to_string(b) + "," +
                                std::to_string(c) + ") is missing an edge");
  }
  Triangle t{a, b, c};
  std::sort(t.begin(), t.end());
  triangles_.insert(t);
}

bool Complex::has_edge(int a, int b) const {
  return edges_.contains({std::min(a, b), std::max(a, b)});
}

const Vertex& Complex::vertex(int id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw std::out_of_range("unknown vertex id " + std::to_string(id));
  return vertices_[it->second];
}

std::optional<int> Complex::find_label(std::string_view label) const {
  auto it = by_label_.find(label);
  if (it == by_label_.end()) return std::nullopt;
  return it->second;
}

const std::vector<int>& Complex::neighbors(int id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw std::out_of_range("unknown vertex id " + std::to_string(id));
  return adjacency_[it->second];
}

Complex Complex::induced(const std::set<int>& ids) const {
  Complex out;
  for (const Vertex& v : vertices_) {
    if (ids.contains(v.id)) out.add_vertex_with_id(v.id, v.kind, v.label);
  }
  for (const auto& [a, b] : edges_) {
    if (ids.contains(a) && ids.contains(b)) out.add_edge(a, b);
  }
  for (const Triangle& t : triangles_) {
    if (ids.contains(t[0]) && ids.contains(t[1]) && ids.contains(t[2])) {
      out.add_triangle(t[0], t[1], t[2]);
    }
  }
  return out;
}

namespace {

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

std::map<int, std::size_t> dense_index(const Complex& c) {
  std::map<int, std::size_t> idx;
  for (const Vertex& v : c.vertices()) idx.emplace(v.id, idx.size());
  return idx;
}

}  // namespace

bool is_forest(const Complex& c) {
  auto idx = dense_index(c);
  DisjointSets sets(idx.size());
  for (const auto& [a, b] : c.edges()) {
    if (!sets.unite(idx.at(a), idx.at(b))) return false;
  }
  return true;
}

std::set<int> component_of(const Complex& c, int from) {
  std::set<int> seen{from};
  std::queue<int> todo;
  todo.push(from);
  while (!todo.empty()) {
    int v = todo.front();
    todo.pop();
    for (int w : c.neighbors(v)) {
      if (seen.insert(w).second) todo.push(w);
    }
  }
  return seen;
}

bool is_connected(const Complex& c) {
  if (c.empty()) return true;
  return component_of(c, c.vertices().front().id).size() == c.vertex_count();
}

bool is_tree(const Complex& c) {
  return !c.empty() && c.edge_count() + 1 == c.vertex_count() && is_connected(c);
}

bool is_bipartite(const Complex& c) {
  std::map<int, int> color;
  for (const Vertex& start : c.vertices()) {
    if (color.contains(start.id)) continue;
    color[start.id] = 0;
    std::queue<int> todo;
    todo.push(start.id);
    while (!todo.empty()) {
      int v = todo.front();
      todo.pop();
      for (int w : c.neighbors(v)) {
        auto [it, fresh] = color.emplace(w, 1 - color[v]);
        if (fresh) {
          todo.push(w);
        } else if (it->second == color[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool has_triangle_clique(const Complex& c) {
  for (const auto& [a, b] : c.edges()) {
    for (int w : c.neighbors(a)) {
      if (w != b && c.has_edge(w, b)) return true;
    }
  }
  return false;
}

std::optional<int> check_dimension(const Complex& c) {
  if (c.empty()) return std::nullopt;
  if (!c.triangles().empty()) return 2;
  if (!c.edges().empty()) return 1;
  return 0;
}

nlohmann::json to_json(const Complex& c) {
  nlohmann::json vertices = nlohmann::json::array();
  for (const Vertex& v : c.vertices()) {
    vertices.push_back({{"id", v.id}, {"kind", std::string(to_string(v.kind))}, {"label", v.label}});
  }
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [a, b] : c.edges()) edges.push_back({a, b});
  nlohmann::json triangles = nlohmann::json::array();
  for (const Triangle& t : c.triangles()) triangles.push_back({t[0], t[1], t[2]});
  return {{"vertices", vertices}, {"edges", edges}, {"triangles", triangles}};
}

Complex complex_from_json(const nlohmann::json& j) {
  Complex c;
  try {
    for (const auto& v : j.at("vertices")) {
      c.add_vertex_with_id(v.at("id").get<int>(),
                           vertex_kind_from_string(v.at("kind").get<std::string>()),
                           v.at("label").get<std::string>());
    }
    for (const auto& e : j.at("edges")) c.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
    if (j.contains("triangles")) {
      for (const auto& t : j.at("triangles")) {
        c.add_triangle(t.at(0).get<int>(), t.at(1).get<int>(), t.at(2).get<int>());
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed complex JSON: ") + e.what());
  }
  return c;
}

std::string to_dot(const Complex& c, std::string_view graph_name) {
  std::ostringstream out;
  out << "graph " << graph_name << " {\n";
  for (const Vertex& v : c.vertices()) {
    out << "  v" << v.id << " [label=\"" << v.label << "\"";
    switch (v.kind) {
      case VertexKind::Black: out << ", shape=circle, style=filled, fillcolor=black, fontcolor=white"; break;
      case VertexKind::White: out << ", shape=circle"; break;
      case VertexKind::Apex: out << ", shape=diamond"; break;
      case VertexKind::Slope: out << ", shape=plaintext"; break;
    }
    out << "];\n";
  }
  for (const auto& [a, b] : c.edges()) out << "  v" << a << " -- v" << b << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace heegaard::complexes
