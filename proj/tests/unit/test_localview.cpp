#include <algorithm>
#include <cmath>
#include <sstream>

#include "doctest.h"
#include "edgeflow/localview.hpp"
#include "edgeflow/stats.hpp"
#include "oracles.hpp"

using namespace edgeflow;

TEST_CASE("tiny radius keeps only the endpoints") {
  const auto net = Network::generate(50, LengthModel::ExponentialMeanN, 3);
  const auto nb = extract_neighborhood(net, 4, 9, 1e-9);
  CHECK(nb.members.size() == 2);
  CHECK(nb.left_count == 1);
  CHECK(nb.right_count == 1);
  CHECK(nb.edge_count == 1);
  CHECK(nb.is_tree);
  CHECK(phi_tau(nb) == 0.0);  // L_e > tau
}

TEST_CASE("hand fixture neighborhood") {
  // Lengths 01 = 1, 02 = 4, 12 = 2.
  const auto net = Network::fixture("hand3");
  const auto nb = extract_neighborhood(net, 0, 1, 2.5);
  REQUIRE(nb.members.size() == 3);
  CHECK(nb.left_count == 1);
  CHECK(nb.right_count == 2);
  CHECK(nb.edge_count == 2);  // 0+4+2 > 5 keeps edge 02 out
  CHECK(nb.is_tree);
  for (const auto& m : nb.members) {
    if (m.v == 2) {
      CHECK_FALSE(m.left);
      CHECK(m.distance == 2.0);
      CHECK(m.boundary == doctest::Approx(0.5));
    }
  }
  CHECK(phi_tau(nb) == doctest::Approx(2.0 * std::exp(-6.0)));
  // A larger radius admits edge 02 and closes a cycle.
  const auto wide = extract_neighborhood(net, 0, 1, 3.5);
  CHECK(wide.edge_count == 3);
  CHECK_FALSE(wide.is_tree);
  CHECK(phi_tau(wide) == 0.0);
}

TEST_CASE("a four-cycle is not a tree") {
  // 01, 12, 23, 30 of length 1; diagonals 02, 13 long.
  const auto net = Network::from_lengths(4, {1.0, 100.0, 1.0, 1.0, 100.0, 1.0});
  const auto nb = extract_neighborhood(net, 0, 1, 2.0);
  CHECK(nb.members.size() == 4);
  CHECK(nb.edge_count == 4);
  CHECK_FALSE(nb.is_tree);
  CHECK(nb.left_count == 2);
  CHECK(nb.right_count == 2);
  const auto small = extract_neighborhood(net, 0, 1, 1.2);
  CHECK(small.edge_count == 3);  // 23 needs 1+1+1 <= 2.4
  CHECK(small.is_tree);
  CHECK(phi_tau(small) == doctest::Approx(4.0 * std::exp(-2.4 - 1.0)));
}

TEST_CASE("neighborhoods agree with full Dijkstra scans") {
  const std::size_t n = 300;
  const auto net = Network::generate(n, LengthModel::ExponentialMeanN, 19);
  const double tau = 2.0;
  std::size_t checked = 0;
  for (Vertex u = 0; u < n && checked < 25; ++u) {
    for (Vertex v = u + 1; v < n && checked < 25; ++v) {
      if (net.length(u, v) > tau) continue;
      ++checked;
      const auto du = oracle::dijkstra(net, u);
      const auto dv = oracle::dijkstra(net, v);
      std::vector<Vertex> inside;
      std::size_t left = 0;
      for (Vertex x = 0; x < n; ++x) {
        if (std::min(du[x], dv[x]) > tau) continue;
        inside.push_back(x);
        left += du[x] <= dv[x];
      }
      std::size_t edges = 0;
      for (std::size_t a = 0; a < inside.size(); ++a)
        for (std::size_t b = a + 1; b < inside.size(); ++b) {
          const Vertex x = inside[a], y = inside[b];
          const bool center = (x == u && y == v) || (x == v && y == u);
          if (center || std::min(du[x], dv[x]) + net.length(x, y) + std::min(du[y], dv[y]) <=
                            2 * tau)
            ++edges;
        }
      const auto nb = extract_neighborhood(net, u, v, tau);
      REQUIRE(nb.members.size() == inside.size());
      CHECK(nb.left_count == left);
      CHECK(nb.edge_count == edges);
      for (const auto& m : nb.members) {
        CHECK(m.boundary >= 0.0);
        CHECK(m.boundary <= tau);
        CHECK(m.distance == doctest::Approx(std::min(du[m.v], dv[m.v])).epsilon(1e-13));
      }
    }
  }
  CHECK(checked == 25);
}

TEST_CASE("local edges are deterministic and match single extraction") {
  const auto net = Network::generate(400, LengthModel::ExponentialMeanN, 23);
  const auto a = local_edges(net, 2.0, 1);
  const auto b = local_edges(net, 2.0, 3);
  REQUIRE(a.size() == b.size());
  std::ostringstream sa, sb;
  write_local_edges(sa, a);
  write_local_edges(sb, b);
  CHECK(sa.str() == sb.str());
  CHECK(sa.str().rfind("u,v,L_e,is_tree,nL,nR,phi\n", 0) == 0);
  REQUIRE_FALSE(a.empty());
  for (std::size_t i = 0; i < a.size(); i += 37) {
    const auto nb = extract_neighborhood(net, a[i].u, a[i].v, 2.0);
    CHECK(nb.is_tree == a[i].is_tree);
    CHECK(phi_tau(nb) == a[i].phi);
  }
  const auto pts = phi_measure(a, net.size());
  CHECK(pts.size() == 2 * a.size());
  CHECK(total_weight(pts) == doctest::Approx(2.0 * a.size() / 400.0));
}

TEST_CASE("limit points of the local measure") {
  const double tau = 2.0;
  const auto pts = phi_limit_points(tau, 200000, 5);
  CHECK(total_weight(pts) == doctest::Approx(tau));
  RunningStats scaled;
  for (const auto& p : pts) {
    REQUIRE(p.ell > 0.0);
    REQUIRE(p.ell < tau);
    scaled.add(p.y * std::exp(p.ell));
  }
  CHECK(std::abs(scaled.mean() - 1.0) < 3 * scaled.standard_error());
  const double ly = measure_integral(pts, [](double l, double y) { return l * y; });
  CHECK(ly == doctest::Approx(1.0 - (1.0 + tau) * std::exp(-tau)).epsilon(0.03));
  CHECK_THROWS_AS(phi_limit_points(0.0, 10, 1), std::invalid_argument);
}
