#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include "edgeflow/empirics.hpp"
#include "edgeflow/randnet.hpp"

namespace edgeflow {

struct NeighborhoodMember {
  Vertex v;
  double distance;  // to the nearer center endpoint
  bool left;        // nearer to the left endpoint (ties go left)
  double boundary;  // tau - distance
};

/// Vertices within tau of either endpoint of the center edge, together with
/// the ambient edges all of whose points stay within tau.
struct Neighborhood {
  Vertex left_end = 0;
  Vertex right_end = 0;
  double center_length = 0.0;
  double radius = 0.0;
  bool is_tree = false;
  std::vector<NeighborhoodMember> members;
  std::size_t left_count = 0;
  std::size_t right_count = 0;
  std::size_t edge_count = 0;
};

using Ball = std::vector<std::pair<Vertex, double>>;

/// Edge (a,b) belongs iff d(a) + L_ab + d(b) <= 2 tau; the center edge
/// always belongs.
Neighborhood extract_neighborhood(const Network& net, Vertex u, Vertex v,
                                  double tau);
/// Same, from precomputed truncated scans of radius tau around u and v.
Neighborhood neighborhood_from_balls(const Network& net, Vertex u, Vertex v,
                                     double tau, const Ball& ball_u,
                                     const Ball& ball_v);

/// #L #R exp(-2 tau - L_e) on tree neighborhoods with L_e <= tau, else 0.
double phi_tau(const Neighborhood& nbhd);

struct LocalEdge {
  Vertex u;
  Vertex v;
  double length;
  bool is_tree;
  std::size_t left_count;
  std::size_t right_count;
  double phi;
};

/// Every edge u < v with L_e <= tau, in (u, v) order.
std::vector<LocalEdge> local_edges(const Network& net, double tau,
                                   unsigned workers = 1);

/// Phi_n^tau: a point (L_e, phi(e)) of weight 1/n per directed short edge.
WeightedPointSet phi_measure(const Network& net, double tau,
                             unsigned workers = 1);
WeightedPointSet phi_measure(const std::vector<LocalEdge>& edges, std::size_t n);

/// m points (U, W1 W2 e^{-2 tau} e^{-U}), U uniform on (0, tau), W's
/// Geometric(e^{-tau}), each of weight tau/m.
WeightedPointSet phi_limit_points(double tau, std::size_t m, std::uint64_t seed);

/// Pearson correlation over directed short edges between phi(e) and
/// F_n(e) / log n.
double phi_flow_correlation(const std::vector<LocalEdge>& edges,
                            const FlowTable& flows);

/// "u,v,L_e,is_tree,nL,nR,phi"
void write_local_edges(std::ostream& out, const std::vector<LocalEdge>& edges);

}  // namespace edgeflow
