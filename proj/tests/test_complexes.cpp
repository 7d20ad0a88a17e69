#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "heegaard/complex.hpp"
#include "heegaard/complexes.hpp"
#include "heegaard/farey.hpp"

using namespace heegaard::complexes;

namespace {

Complex path(int n) {
  Complex c;
  for (int i = 0; i < n; ++i) c.add_vertex(VertexKind::Slope, std::to_string(i));
  for (int i = 1; i < n; ++i) c.add_edge(i - 1, i);
  return c;
}

Complex triangle() {
  Complex c = path(3);
  c.add_edge(0, 2);
  return c;
}

}  // namespace

TEST_CASE("building complexes") {
  Complex c;
  CHECK(c.add_vertex(VertexKind::Black, "B0") == 0);
  CHECK(c.add_vertex(VertexKind::White, "W0") == 1);
  c.add_edge(1, 0);
  c.add_edge(0, 1);
  CHECK(c.edge_count() == 1);
  CHECK(c.has_edge(0, 1));
  CHECK(c.has_edge(1, 0));
  CHECK(*c.find_label("W0") == 1);
  CHECK_FALSE(c.find_label("W9").has_value());
  CHECK_THROWS_AS(c.add_edge(0, 5), std::invalid_argument);
  CHECK_THROWS_AS(c.add_edge(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(c.add_vertex_with_id(0, VertexKind::Black, "dup"), std::invalid_argument);
  CHECK_THROWS_AS(c.vertex(7), std::out_of_range);

  Complex t = path(3);
  CHECK_THROWS_AS(t.add_triangle(0, 1, 2), std::invalid_argument);
  t.add_edge(0, 2);
  t.add_triangle(2, 0, 1);
  CHECK(t.triangles().count({0, 1, 2}) == 1);
}

TEST_CASE("tree and forest checks") {
  CHECK(is_tree(path(1)));
  CHECK(is_tree(path(5)));
  CHECK_FALSE(is_forest(triangle()));
  CHECK_FALSE(is_tree(triangle()));
  CHECK(has_triangle_clique(triangle()));
  CHECK(is_forest(Complex{}));
  CHECK_FALSE(is_tree(Complex{}));

  Complex two = path(2);
  two.add_vertex(VertexKind::Slope, "loose");
  CHECK(is_forest(two));
  CHECK_FALSE(is_tree(two));
  CHECK_FALSE(is_connected(two));
  CHECK(component_of(two, 0) == std::set<int>{0, 1});

  CHECK(is_bipartite(path(4)));
  CHECK_FALSE(is_bipartite(triangle()));
}

TEST_CASE("dimension") {
  CHECK_FALSE(check_dimension(Complex{}).has_value());
  CHECK(check_dimension(path(1)) == 0);
  CHECK(check_dimension(path(2)) == 1);
  Complex t = triangle();
  t.add_triangle(0, 1, 2);
  CHECK(check_dimension(t) == 2);
  CHECK(expected_haken_complex_dimension(false) == 1);
  CHECK(expected_haken_complex_dimension(true) == 3);
}

TEST_CASE("induced subcomplex keeps ids") {
  Complex t = triangle();
  t.add_triangle(0, 1, 2);
  const Complex sub = t.induced({0, 2});
  CHECK(sub.vertex_count() == 2);
  CHECK(sub.has_edge(0, 2));
  CHECK(sub.triangles().empty());
  CHECK(t.induced({0, 1, 2}) == t);
}

TEST_CASE("json round trip") {
  Complex t = triangle();
  t.add_triangle(0, 1, 2);
  t.add_vertex(VertexKind::Apex, "D");
  const auto j = to_json(t);
  CHECK(j["vertices"].size() == 4);
  CHECK(j["vertices"][3]["kind"] == "apex");
  CHECK(j["edges"].size() == 3);
  CHECK(j["triangles"][0] == nlohmann::json::array({0, 1, 2}));
  CHECK(complex_from_json(j) == t);
  CHECK(complex_from_json(nlohmann::json::parse(j.dump())) == t);

  const auto ball = heegaard::farey::stern_brocot_ball(2);
  CHECK(complex_from_json(to_json(ball)) == ball);

  CHECK_THROWS_AS(complex_from_json(nlohmann::json::object()), std::invalid_argument);
  auto bad = j;
  bad["edges"].push_back({0, 99});
  CHECK_THROWS_AS(complex_from_json(bad), std::invalid_argument);
  auto bad_kind = j;
  bad_kind["vertices"][0]["kind"] = "purple";
  CHECK_THROWS_AS(complex_from_json(bad_kind), std::invalid_argument);
}

TEST_CASE("vertex kinds") {
  for (auto k : {VertexKind::Black, VertexKind::White, VertexKind::Apex, VertexKind::Slope}) {
    CHECK(vertex_kind_from_string(to_string(k)) == k);
  }
  CHECK_THROWS_AS(vertex_kind_from_string("grey"), std::invalid_argument);
}

TEST_CASE("dot export") {
  Complex c;
  c.add_vertex(VertexKind::Black, "B0");
  c.add_vertex(VertexKind::White, "W0");
  c.add_vertex(VertexKind::Apex, "D");
  c.add_vertex(VertexKind::Slope, "1/2");
  c.add_edge(0, 1);
  const std::string dot = to_dot(c);
  CHECK(dot.find("graph complex {") == 0);
  CHECK(dot.find("\"1/2\"") != std::string::npos);
  CHECK(dot.find("diamond") != std::string::npos);
  CHECK(dot.find("v0 -- v1") != std::string::npos);
}

TEST_CASE("semi-primitive disk model") {
  CHECK_THROWS_AS(sp_prime_model({0, 1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(sp_prime_model({1, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(sp_prime_model({1, 1, -1}), std::invalid_argument);

  const Complex star = sp_prime_model({1, 3, 0});
  CHECK(star.vertex_count() == 4);
  CHECK(is_tree(star));
  CHECK(star.degree(0) == 3);

  const Complex two = sp_prime_model({2, 2, 0});
  CHECK(is_tree(two));
  int blacks = 0;
  for (const auto& v : two.vertices()) {
    if (v.kind == VertexKind::Black) {
      ++blacks;
      CHECK(two.degree(v.id) == 2);
    }
  }
  CHECK(blacks == 2);

  for (int b = 1; b <= 8; ++b) {
    for (int k = 1; k <= 5; ++k) {
      const Complex c = sp_prime_model({b, k, 0});
      REQUIRE(is_tree(c));
      REQUIRE(is_bipartite(c));
      int black_count = 0;
      for (const auto& v : c.vertices()) {
        for (int n : c.neighbors(v.id)) REQUIRE(c.vertex(n).kind != v.kind);
        if (v.kind == VertexKind::White) {
          REQUIRE(c.degree(v.id) >= 1);
          REQUIRE(c.degree(v.id) <= 2);
        } else {
          REQUIRE(v.kind == VertexKind::Black);
          REQUIRE(static_cast<int>(c.degree(v.id)) == k);
          ++black_count;
        }
      }
      // a lone white per black stops growth after the second black
      REQUIRE(black_count == (k == 1 ? std::min(b, 2) : b));
      for (const auto& pair : whites_to_blacks(c)) {
        REQUIRE(pair.size() >= 1);
        REQUIRE(pair.size() <= 2);
      }
    }
  }
}

TEST_CASE("haken complex models") {
  CHECK_THROWS_AS(haken_complex_model({1, 999, 1}), std::invalid_argument);
  CHECK_THROWS_AS(haken_complex_model({1, 4, 0}), std::invalid_argument);

  const auto one = haken_complex_model({1, 3, 2});
  CHECK(one.complex.vertex_count() == one.odd_tree.vertex_count());
  CHECK(one.complex.edge_count() == one.odd_tree.edge_count());
  CHECK(is_tree(one.complex));

  for (int b = 1; b <= 4; ++b) {
    for (int k = 1; k <= 5; ++k) {
      for (int d = 1; d <= 3; ++d) {
        const auto m = haken_complex_model({b, k, d});
        REQUIRE(is_tree(m.complex));
        REQUIRE(check_dimension(m.complex) == (m.complex.vertex_count() > 1 ? 1 : 0));
        // each graft is a labelled copy of the truncated odd tree
        std::map<int, int> copies;
        for (const auto& graft : m.grafts) {
          REQUIRE(graft.size() == m.odd_order.size());
          REQUIRE(std::set<int>(graft.begin(), graft.end()).size() == graft.size());
          std::map<int, std::size_t> pos;
          for (std::size_t j = 0; j < m.odd_order.size(); ++j) pos[m.odd_order[j]] = j;
          const Complex induced = m.complex.induced(std::set<int>(graft.begin(), graft.end()));
          REQUIRE(induced.edge_count() == m.odd_tree.edge_count());
          for (const auto& [u, v] : m.odd_tree.edges()) REQUIRE(induced.has_edge(graft[pos[u]], graft[pos[v]]));
          for (int id : graft) ++copies[id];
        }
        for (const auto& v : m.complex.vertices()) {
          if (v.kind == VertexKind::White) {
            REQUIRE(copies[v.id] >= 1);
            REQUIRE(copies[v.id] <= 2);
          } else {
            REQUIRE(copies[v.id] == 1);
          }
        }
      }
    }
  }
}

TEST_CASE("cone model") {
  CHECK_THROWS_AS(sp_cone_model(0), std::invalid_argument);
  const Complex one = sp_cone_model(1);
  CHECK(one.vertex_count() == 2);
  CHECK(one.edge_count() == 1);
  CHECK(is_cone_over_tree(one, 0));

  const Complex five = sp_cone_model(5);
  CHECK(five.degree(0) == 5);
  CHECK(five.vertex(0).kind == VertexKind::Apex);
  CHECK(is_cone_over_tree(five, 0));
  std::set<int> base;
  for (const auto& v : five.vertices()) {
    if (v.id != 0) base.insert(v.id);
  }
  CHECK(is_tree(five.induced(base)));
  CHECK_FALSE(is_cone_over_tree(five, 1));
  CHECK_FALSE(is_cone_over_tree(path(3), 1));
}
