#pragma once

// Brute-force pose-graph optimization reference: dense normal equations with
// finite-difference Jacobians. Slow and simple on purpose; shares nothing
// with the library solver beyond the objective definition.

#include <Eigen/Dense>
#include <vector>

#include "cslam/pose_graph.hpp"
#include "oracles.hpp"

namespace oracle {

struct GraphEdge {
  int i = 0;
  int j = 0;
  cslam::Pose2 z;
  cslam::InfoMatrix3 w;
};

inline std::vector<GraphEdge> edges_of(const cslam::PoseGraph& g) {
  std::vector<GraphEdge> edges;
  for (const auto& e : g.odom_edges()) {
    edges.push_back({e.from_id, e.from_id + 1, e.measurement, e.info});
  }
  for (const auto& e : g.loop_edges()) {
    edges.push_back({e.from_id, e.to_id, e.measurement, e.info});
  }
  return edges;
}

inline std::vector<cslam::Pose2> poses_of(const cslam::PoseGraph& g) {
  std::vector<cslam::Pose2> poses;
  for (const auto& n : g.nodes()) poses.push_back(n.pose);
  return poses;
}

/// Term-by-term evaluation of the optimization objective.
inline double graph_cost(const std::vector<cslam::Pose2>& poses,
                         const std::vector<GraphEdge>& edges) {
  double total = 0.0;
  for (const GraphEdge& e : edges) {
    const cslam::Pose2 zhat =
        mat_between(poses[static_cast<std::size_t>(e.i)], poses[static_cast<std::size_t>(e.j)]);
    const double ex = e.z.x - zhat.x;
    const double ey = e.z.y - zhat.y;
    const double ep = cslam::wrap_angle(e.z.psi - zhat.psi);
    total += e.w.wx * ex * ex + e.w.wy * ey * ey + e.w.wpsi * ep * ep;
  }
  return total;
}

/// Dense Gauss-Newton with numeric Jacobians; node 0 stays fixed. Returns the
/// best cost reached. Backtracks on steps that increase the cost.
inline double dense_gauss_newton(std::vector<cslam::Pose2>& poses,
                                 const std::vector<GraphEdge>& edges, int max_iterations = 50) {
  const int n_var = 3 * (static_cast<int>(poses.size()) - 1);
  if (n_var <= 0 || edges.empty()) return graph_cost(poses, edges);

  auto unpack = [&](const Eigen::VectorXd& x) {
    std::vector<cslam::Pose2> p = poses;
    for (std::size_t k = 1; k < p.size(); ++k) {
      const int v = 3 * (static_cast<int>(k) - 1);
      p[k] = cslam::Pose2(x(v), x(v + 1), x(v + 2));
    }
    return p;
  };
  auto residuals = [&](const std::vector<cslam::Pose2>& p) {
    Eigen::VectorXd r(3 * static_cast<int>(edges.size()));
    for (std::size_t e = 0; e < edges.size(); ++e) {
      const GraphEdge& edge = edges[e];
      const cslam::Pose2 zhat = mat_between(p[static_cast<std::size_t>(edge.i)],
                                            p[static_cast<std::size_t>(edge.j)]);
      r(3 * static_cast<int>(e) + 0) = edge.z.x - zhat.x;
      r(3 * static_cast<int>(e) + 1) = edge.z.y - zhat.y;
      r(3 * static_cast<int>(e) + 2) = cslam::wrap_angle(edge.z.psi - zhat.psi);
    }
    return r;
  };

  Eigen::VectorXd x(n_var);
  for (std::size_t k = 1; k < poses.size(); ++k) {
    x(3 * (static_cast<int>(k) - 1) + 0) = poses[k].x;
    x(3 * (static_cast<int>(k) - 1) + 1) = poses[k].y;
    x(3 * (static_cast<int>(k) - 1) + 2) = poses[k].psi;
  }
  Eigen::VectorXd weights(3 * static_cast<int>(edges.size()));
  for (std::size_t e = 0; e < edges.size(); ++e) {
    weights(3 * static_cast<int>(e) + 0) = edges[e].w.wx;
    weights(3 * static_cast<int>(e) + 1) = edges[e].w.wy;
    weights(3 * static_cast<int>(e) + 2) = edges[e].w.wpsi;
  }

  double cost = graph_cost(unpack(x), edges);
  const double h = 1e-6;
  for (int iter = 0; iter < max_iterations; ++iter) {
    const Eigen::VectorXd r0 = residuals(unpack(x));
    Eigen::MatrixXd J(r0.size(), n_var);
    for (int v = 0; v < n_var; ++v) {
      Eigen::VectorXd xp = x;
      Eigen::VectorXd xm = x;
      xp(v) += h;
      xm(v) -= h;
      J.col(v) = (residuals(unpack(xp)) - residuals(unpack(xm))) / (2.0 * h);
    }
    const Eigen::MatrixXd JW = J.transpose() * weights.asDiagonal();
    const Eigen::MatrixXd H = JW * J;
    const Eigen::VectorXd g = JW * r0;

    Eigen::VectorXd step = H.ldlt().solve(-g);
    if (!step.allFinite()) break;

    bool improved = false;
    double scale = 1.0;
    for (int bt = 0; bt < 12; ++bt) {
      const Eigen::VectorXd cand = x + scale * step;
      const double c = graph_cost(unpack(cand), edges);
      if (c < cost) {
        x = cand;
        cost = c;
        improved = true;
        break;
      }
      scale *= 0.5;
    }
    if (!improved) break;
    if (cost < 1e-18) break;
  }
  poses = unpack(x);
  return cost;
}

}  // namespace oracle
