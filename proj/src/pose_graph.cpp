#include "cslam/pose_graph.hpp"

#include <Eigen/Sparse>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace cslam {

Pose2 compute_inter_edge(const Pose2& icp, const Pose2& local_pose,
                         const Pose2& external_pose) {
  return compose(inverse(compose(icp, local_pose)), external_pose);
}

Pose2 rebase_inter_edge(const Pose2& icp, const Pose2& local_pose,
                        const Pose2& anchor_pose) {
  return compose(inverse(compose(icp, local_pose)), anchor_pose);
}

LoopEdge update_inter_edge(const LoopEdge& edge, const Pose2& external_pose_new,
                           const Pose2& anchor_pose) {
  if (edge.kind != LoopKind::kInter) {
    throw std::invalid_argument("update_inter_edge: edge is not an inter edge");
  }
  LoopEdge updated = edge;
  const Pose2& old_snapshot = edge.source_pose_snapshot;
  if (external_pose_new.x == old_snapshot.x && external_pose_new.y == old_snapshot.y &&
      external_pose_new.psi == old_snapshot.psi) {
    return updated;  // identity update
  }
  // (X_new X_old^-1 Z X_local)^-1 X_0 = z_old * X_0^-1 * X_old * X_new^-1 * X_0,
  // which spares us the local pose the edge was built from.
  const Pose2 shift = compose(old_snapshot, inverse(external_pose_new));
  updated.measurement =
      compose(edge.measurement, compose(inverse(anchor_pose), compose(shift, anchor_pose)));
  updated.icp_transform =
      compose(external_pose_new, compose(inverse(old_snapshot), edge.icp_transform));
  updated.source_pose_snapshot = external_pose_new;
  return updated;
}

// ---------------------------------------------------------------------------

namespace {

struct Residual {
  double ex, ey, epsi;
};

Residual edge_residual(const Pose2& a, const Pose2& b, const Pose2& z) {
  const Pose2 zhat = between(a, b);
  return {z.x - zhat.x, z.y - zhat.y, wrap_angle(z.psi - zhat.psi)};
}

double weighted_square(const Residual& e, const InfoMatrix3& info) {
  return info.wx * e.ex * e.ex + info.wy * e.ey * e.ey + info.wpsi * e.epsi * e.epsi;
}

// One constraint in a compact optimization problem over pose "slots".
struct ProblemEdge {
  int i = 0;  // slot of the from node
  int j = 0;  // slot of the to node
  Pose2 z;
  InfoMatrix3 info;
};

double problem_cost(const std::vector<Pose2>& poses, const std::vector<ProblemEdge>& edges) {
  double total = 0.0;
  for (const ProblemEdge& e : edges) {
    total += weighted_square(
        edge_residual(poses[static_cast<std::size_t>(e.i)],
                      poses[static_cast<std::size_t>(e.j)], e.z),
        e.info);
  }
  return total;
}

struct GnResult {
  double initial_cost = 0.0;
  double final_cost = 0.0;
  int iterations = 0;
  bool converged = true;
};

/// Gauss-Newton with step acceptance and diagonal damping on failure.
/// var_of_slot maps a pose slot to its variable index, -1 for fixed poses.
GnResult solve_gauss_newton(std::vector<Pose2>& poses, const std::vector<ProblemEdge>& edges,
                            const std::vector<int>& var_of_slot, int n_vars,
                            int max_iterations, double tol) {
  GnResult result;
  result.initial_cost = problem_cost(poses, edges);
  result.final_cost = result.initial_cost;
  if (n_vars == 0 || edges.empty()) return result;

  using Triplet = Eigen::Triplet<double>;
  std::vector<Triplet> triplets;
  Eigen::VectorXd b(3 * n_vars);

  double cost = result.initial_cost;
  for (int iter = 0; iter < max_iterations; ++iter) {
    if (cost <= 1e-18) break;

    triplets.clear();
    b.setZero();

    for (const ProblemEdge& e : edges) {
      const Pose2& pi = poses[static_cast<std::size_t>(e.i)];
      const Pose2& pj = poses[static_cast<std::size_t>(e.j)];
      const Residual r = edge_residual(pi, pj, e.z);

      const double c = std::cos(pi.psi);
      const double s = std::sin(pi.psi);
      const double dx = pj.x - pi.x;
      const double dy = pj.y - pi.y;
      const double zx = c * dx + s * dy;
      const double zy = -s * dx + c * dy;

      // d e / d x_i and d e / d x_j for e = z - zhat(x_i, x_j).
      const double A[3][3] = {{c, s, -zy}, {-s, c, zx}, {0.0, 0.0, 1.0}};
      const double B[3][3] = {{-c, -s, 0.0}, {s, -c, 0.0}, {0.0, 0.0, -1.0}};
      const double w[3] = {e.info.wx, e.info.wy, e.info.wpsi};
      const double ev[3] = {r.ex, r.ey, r.epsi};

      const int vi = var_of_slot[static_cast<std::size_t>(e.i)];
      const int vj = var_of_slot[static_cast<std::size_t>(e.j)];

      auto add_block = [&](int var_r, const double (&Jr)[3][3], int var_c,
                           const double (&Jc)[3][3]) {
        for (int r0 = 0; r0 < 3; ++r0) {
          for (int c0 = 0; c0 < 3; ++c0) {
            double v = 0.0;
            for (int k = 0; k < 3; ++k) v += Jr[k][r0] * w[k] * Jc[k][c0];
            if (v != 0.0) triplets.emplace_back(3 * var_r + r0, 3 * var_c + c0, v);
          }
        }
      };
      auto add_grad = [&](int var, const double (&J)[3][3]) {
        for (int c0 = 0; c0 < 3; ++c0) {
          double v = 0.0;
          for (int k = 0; k < 3; ++k) v += J[k][c0] * w[k] * ev[k];
          b(3 * var + c0) += v;
        }
      };

      if (vi >= 0) {
        add_block(vi, A, vi, A);
        add_grad(vi, A);
      }
      if (vj >= 0) {
        add_block(vj, B, vj, B);
        add_grad(vj, B);
      }
      if (vi >= 0 && vj >= 0) {
        add_block(vi, A, vj, B);
        add_block(vj, B, vi, A);
      }
    }

    Eigen::SparseMatrix<double> H(3 * n_vars, 3 * n_vars);
    H.setFromTriplets(triplets.begin(), triplets.end());

    // Plain step first, then re-try with growing diagonal damping until the
    // cost stops increasing (never accept a worse iterate).
    double lambda = 0.0;
    bool accepted = false;
    double new_cost = cost;
    std::vector<Pose2> candidate;
    for (int attempt = 0; attempt < 10; ++attempt) {
      Eigen::SparseMatrix<double> Hd = H;
      if (lambda > 0.0) {
        for (int k = 0; k < Hd.outerSize(); ++k) {
          Hd.coeffRef(k, k) += lambda * (1.0 + std::abs(H.coeff(k, k)));
        }
      }
      Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> solver(Hd);
      if (solver.info() != Eigen::Success) {
        lambda = std::max(lambda * 10.0, 1e-6);
        continue;
      }
      Eigen::VectorXd delta = solver.solve(-b);
      if (solver.info() != Eigen::Success || !delta.allFinite()) {
        lambda = std::max(lambda * 10.0, 1e-6);
        continue;
      }
      candidate = poses;
      for (std::size_t slot = 0; slot < poses.size(); ++slot) {
        const int v = var_of_slot[slot];
        if (v < 0) continue;
        candidate[slot] = Pose2(poses[slot].x + delta(3 * v + 0),
                                poses[slot].y + delta(3 * v + 1),
                                poses[slot].psi + delta(3 * v + 2));
      }
      new_cost = problem_cost(candidate, edges);
      if (new_cost <= cost * (1.0 + 1e-12) + 1e-15) {
        accepted = true;
        break;
      }
      lambda = std::max(lambda * 10.0, 1e-6);
    }

    if (!accepted) {
      // No non-increasing step exists numerically; report the best iterate.
      result.converged = iter > 0;
      break;
    }

    poses = std::move(candidate);
    result.iterations = iter + 1;
    const double decrease = cost - new_cost;
    cost = new_cost;
    if (decrease < tol * std::max(cost, 1e-12)) break;
  }
  result.final_cost = cost;
  return result;
}

}  // namespace

// ---------------------------------------------------------------------------

PoseGraph::PoseGraph(const Pose2& takeoff_pose, const PgoConfig& config) : config_(config) {
  if (config_.subgraph_travel_m <= 0.0) {
    throw std::invalid_argument("PgoConfig: subgraph_travel must be > 0");
  }
  if (config_.max_subgraph_nodes > config_.max_total_nodes) {
    throw std::invalid_argument("PgoConfig: max_subgraph_nodes exceeds max_total_nodes");
  }
  nodes_.push_back(PoseNode{0, takeoff_pose, false, 0.0});
}

int PoseGraph::add_pose_with_odometry(const Pose2& odom_measurement, double timestamp) {
  if (nodes_.size() >= static_cast<std::size_t>(config_.max_total_nodes)) {
    throw CapacityError("pose graph is full (" + std::to_string(config_.max_total_nodes) +
                        " poses); the memory budget does not allow more");
  }
  const int id = static_cast<int>(nodes_.size());
  nodes_.push_back(PoseNode{id, compose(nodes_.back().pose, odom_measurement), false, timestamp});
  odom_edges_.push_back(OdomEdge{id - 1, odom_measurement, config_.omega_odom});
  return id;
}

const LoopEdge& PoseGraph::add_intra_loop_edge(int newer_id, int older_id,
                                               const Pose2& icp_result) {
  if (newer_id < 0 || newer_id >= static_cast<int>(nodes_.size()) || older_id < 0 ||
      older_id >= static_cast<int>(nodes_.size())) {
    throw std::out_of_range("add_intra_loop_edge: unknown node id");
  }
  if (newer_id - older_id < config_.min_index_gap) {
    throw std::invalid_argument("add_intra_loop_edge: index gap " +
                                std::to_string(newer_id - older_id) + " below threshold " +
                                std::to_string(config_.min_index_gap));
  }
  LoopEdge edge;
  edge.from_id = older_id;
  edge.to_id = newer_id;
  edge.kind = LoopKind::kIntra;
  edge.info = config_.omega_lc;
  // The alignment corrects the newer pose: X_newer' = Z_icp * X_newer.
  edge.measurement = between(nodes_[static_cast<std::size_t>(older_id)].pose,
                             compose(icp_result, nodes_[static_cast<std::size_t>(newer_id)].pose));
  loop_edges_.push_back(edge);
  return loop_edges_.back();
}

const LoopEdge& PoseGraph::add_inter_loop_edge(int local_id, int source_drone,
                                               int source_pose_id, const Pose2& icp_result,
                                               const Pose2& external_pose) {
  if (local_id <= 0 || local_id >= static_cast<int>(nodes_.size())) {
    throw std::out_of_range("add_inter_loop_edge: unknown local node id");
  }
  LoopEdge edge;
  edge.from_id = local_id;
  edge.to_id = 0;
  edge.kind = LoopKind::kInter;
  edge.info = config_.omega_lc;
  edge.source_drone = source_drone;
  edge.source_pose_id = source_pose_id;
  edge.source_pose_snapshot = external_pose;
  edge.icp_transform = icp_result;
  edge.measurement = rebase_inter_edge(icp_result,
                                       nodes_[static_cast<std::size_t>(local_id)].pose,
                                       nodes_.front().pose);
  loop_edges_.push_back(edge);
  return loop_edges_.back();
}

int PoseGraph::apply_pose_update(int source_drone, int source_pose_id, const Pose2& new_pose) {
  int changed = 0;
  for (LoopEdge& edge : loop_edges_) {
    if (edge.kind != LoopKind::kInter) continue;
    if (edge.source_drone != source_drone || edge.source_pose_id != source_pose_id) continue;
    edge = update_inter_edge(edge, new_pose, nodes_.front().pose);
    ++changed;
  }
  return changed;
}

double PoseGraph::cost() const {
  double total = 0.0;
  for (const OdomEdge& e : odom_edges_) {
    total += weighted_square(edge_residual(nodes_[static_cast<std::size_t>(e.from_id)].pose,
                                           nodes_[static_cast<std::size_t>(e.from_id + 1)].pose,
                                           e.measurement),
                             e.info);
  }
  for (const LoopEdge& e : loop_edges_) {
    total += weighted_square(edge_residual(nodes_[static_cast<std::size_t>(e.from_id)].pose,
                                           nodes_[static_cast<std::size_t>(e.to_id)].pose,
                                           e.measurement),
                             e.info);
  }
  return total;
}

OptimizeReport PoseGraph::optimize(const PgoConfig& config) {
  OptimizeReport report;
  report.initial_cost = cost();
  report.final_cost = report.initial_cost;
  if (nodes_.size() < 2) return report;

  const std::vector<Pose2> snapshot = [&] {
    std::vector<Pose2> s;
    s.reserve(nodes_.size());
    for (const PoseNode& n : nodes_) s.push_back(n.pose);
    return s;
  }();

  const int n = static_cast<int>(nodes_.size());

  // Travel-distance partition. A graph that fits the per-optimization node
  // budget is optimized directly as a single subgraph.
  std::vector<int> starts{0};
  if (n > config.max_subgraph_nodes) {
    double travel = 0.0;
    int count = 1;
    for (int k = 1; k < n; ++k) {
      const double step =
          odom_edges_[static_cast<std::size_t>(k - 1)].measurement.translation().norm();
      if (count >= config.max_subgraph_nodes ||
          (travel + step >= config.subgraph_travel_m && count >= 2)) {
        starts.push_back(k);
        travel = 0.0;
        count = 1;
      } else {
        travel += step;
        ++count;
      }
    }
  }
  const int n_sub = static_cast<int>(starts.size());
  report.subgraphs = n_sub;

  auto subgraph_of = [&](int node_id) {
    const auto it = std::upper_bound(starts.begin(), starts.end(), node_id);
    return static_cast<int>(it - starts.begin()) - 1;
  };
  auto sub_end = [&](int s) { return s + 1 < n_sub ? starts[static_cast<std::size_t>(s + 1)] : n; };

  double current = report.initial_cost;
  for (int round = 0; round < config.max_rounds; ++round) {
    // --- Skeleton pass: one representative pose per subgraph. -----------
    if (n_sub > 1) {
      std::vector<Pose2> reps(static_cast<std::size_t>(n_sub));
      std::vector<int> vars(static_cast<std::size_t>(n_sub));
      for (int s = 0; s < n_sub; ++s) {
        reps[static_cast<std::size_t>(s)] = nodes_[static_cast<std::size_t>(starts[static_cast<std::size_t>(s)])].pose;
        vars[static_cast<std::size_t>(s)] = s == 0 ? -1 : s - 1;
      }
      std::vector<ProblemEdge> skel;
      // Composed odometry between consecutive representatives.
      for (int s = 0; s + 1 < n_sub; ++s) {
        Pose2 z(0.0, 0.0, 0.0);
        int m = 0;
        for (int k = starts[static_cast<std::size_t>(s)]; k < starts[static_cast<std::size_t>(s + 1)]; ++k) {
          z = compose(z, odom_edges_[static_cast<std::size_t>(k)].measurement);
          ++m;
        }
        InfoMatrix3 info = config.omega_odom;
        info.wx /= m;
        info.wy /= m;
        info.wpsi /= m;
        skel.push_back(ProblemEdge{s, s + 1, z, info});
      }
      // Loop edges crossing subgraphs, re-expressed between representatives
      // using the current in-subgraph offsets.
      for (const LoopEdge& e : loop_edges_) {
        const int sa = subgraph_of(e.from_id);
        const int sb = subgraph_of(e.to_id);
        if (sa == sb) continue;
        const Pose2 li = between(reps[static_cast<std::size_t>(sa)],
                                 nodes_[static_cast<std::size_t>(e.from_id)].pose);
        const Pose2 lj = between(reps[static_cast<std::size_t>(sb)],
                                 nodes_[static_cast<std::size_t>(e.to_id)].pose);
        skel.push_back(ProblemEdge{sa, sb, compose(li, compose(e.measurement, inverse(lj))), e.info});
      }

      std::vector<Pose2> old_reps = reps;
      solve_gauss_newton(reps, skel, vars, n_sub - 1, config.max_iterations,
                         config.convergence_tol);
      // Move each subgraph rigidly with its representative.
      for (int s = 1; s < n_sub; ++s) {
        const Pose2 motion = compose(reps[static_cast<std::size_t>(s)],
                                     inverse(old_reps[static_cast<std::size_t>(s)]));
        for (int k = starts[static_cast<std::size_t>(s)]; k < sub_end(s); ++k) {
          nodes_[static_cast<std::size_t>(k)].pose = compose(motion, nodes_[static_cast<std::size_t>(k)].pose);
        }
      }
    }

    // --- Per-subgraph passes with the first node fixed. ------------------
    int iterations = 0;
    bool all_converged = true;
    for (int s = 0; s < n_sub; ++s) {
      const int lo = starts[static_cast<std::size_t>(s)];
      const int hi = sub_end(s);
      const int size = hi - lo;
      if (size < 2) continue;

      std::vector<Pose2> poses(static_cast<std::size_t>(size));
      std::vector<int> vars(static_cast<std::size_t>(size));
      for (int k = lo; k < hi; ++k) {
        poses[static_cast<std::size_t>(k - lo)] = nodes_[static_cast<std::size_t>(k)].pose;
        vars[static_cast<std::size_t>(k - lo)] = k == lo ? -1 : k - lo - 1;
      }
      std::vector<ProblemEdge> edges;
      for (int k = lo + 1; k < hi; ++k) {
        edges.push_back(ProblemEdge{k - 1 - lo, k - lo,
                                    odom_edges_[static_cast<std::size_t>(k - 1)].measurement,
                                    odom_edges_[static_cast<std::size_t>(k - 1)].info});
      }
      for (const LoopEdge& e : loop_edges_) {
        if (e.from_id < lo || e.from_id >= hi || e.to_id < lo || e.to_id >= hi) continue;
        edges.push_back(ProblemEdge{e.from_id - lo, e.to_id - lo, e.measurement, e.info});
      }
      const GnResult gn = solve_gauss_newton(poses, edges, vars, size - 1,
                                             config.max_iterations, config.convergence_tol);
      iterations = std::max(iterations, gn.iterations);
      all_converged = all_converged && gn.converged;
      for (int k = lo; k < hi; ++k) {
        nodes_[static_cast<std::size_t>(k)].pose = poses[static_cast<std::size_t>(k - lo)];
      }
    }

    report.iterations += std::max(iterations, 1);
    report.converged = all_converged;
    const double after = cost();
    const double decrease = current - after;
    current = after;
    if (n_sub == 1 || decrease < config.convergence_tol * std::max(after, 1e-12)) break;
  }

  // The objective must never increase across an optimize call.
  if (current > report.initial_cost) {
    for (std::size_t k = 0; k < nodes_.size(); ++k) nodes_[k].pose = snapshot[k];
    current = report.initial_cost;
    report.converged = false;
  }
  report.final_cost = current;
  return report;
}

const PoseNode& PoseGraph::node(int id) const {
  return nodes_.at(static_cast<std::size_t>(id));
}

PoseNode& PoseGraph::mutable_node(int id) { return nodes_.at(static_cast<std::size_t>(id)); }

void PoseGraph::set_scan_pose(int id, bool flag) {
  nodes_.at(static_cast<std::size_t>(id)).is_scan_pose = flag;
}

// ---------------------------------------------------------------------------
// Line-oriented dump format, one node or edge per line.

namespace {

void write_double(std::ostream& out, double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  out << buf;
}

void write_pose(std::ostream& out, const Pose2& p) {
  write_double(out, p.x);
  out << ' ';
  write_double(out, p.y);
  out << ' ';
  write_double(out, p.psi);
}

void write_info(std::ostream& out, const InfoMatrix3& w) {
  write_double(out, w.wx);
  out << ' ';
  write_double(out, w.wy);
  out << ' ';
  write_double(out, w.wpsi);
}

}  // namespace

void PoseGraph::dump(std::ostream& out) const {
  out << "# cslam pose graph v1\n";
  for (const PoseNode& n : nodes_) {
    out << "NODE " << n.id << ' ';
    write_pose(out, n.pose);
    out << ' ';
    write_double(out, n.timestamp);
    out << ' ' << (n.is_scan_pose ? 1 : 0) << '\n';
  }
  for (const OdomEdge& e : odom_edges_) {
    out << "ODOM " << e.from_id << ' ';
    write_pose(out, e.measurement);
    out << ' ';
    write_info(out, e.info);
    out << '\n';
  }
  for (const LoopEdge& e : loop_edges_) {
    if (e.kind == LoopKind::kIntra) {
      out << "INTRA " << e.from_id << ' ' << e.to_id << ' ';
      write_pose(out, e.measurement);
      out << ' ';
      write_info(out, e.info);
      out << '\n';
    } else {
      out << "INTER " << e.from_id << ' ' << e.to_id << ' ';
      write_pose(out, e.measurement);
      out << ' ';
      write_info(out, e.info);
      out << ' ' << e.source_drone << ' ' << e.source_pose_id << ' ';
      write_pose(out, e.source_pose_snapshot);
      out << ' ';
      write_pose(out, e.icp_transform);
      out << '\n';
    }
  }
}

PoseGraph PoseGraph::load(std::istream& in) {
  PgoConfig config;
  config.max_total_nodes = std::numeric_limits<int>::max();  // dumps may exceed live budgets
  config.min_index_gap = 0;
  std::optional<PoseGraph> graph;
  std::string line;
  int line_no = 0;
  auto parse_error = [&](const std::string& what) {
    throw std::runtime_error("graph dump line " + std::to_string(line_no) + ": " + what);
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "NODE") {
      int id = 0, scan = 0;
      double x, y, psi, ts;
      if (!(ls >> id >> x >> y >> psi >> ts >> scan)) parse_error("malformed NODE");
      if (!graph) {
        if (id != 0) parse_error("first NODE must have id 0");
        graph.emplace(Pose2(x, y, psi), config);
        graph->nodes_.front().timestamp = ts;
        graph->nodes_.front().is_scan_pose = scan != 0;
      } else {
        if (id != static_cast<int>(graph->nodes_.size())) parse_error("NODE ids must be contiguous");
        graph->nodes_.push_back(PoseNode{id, Pose2(x, y, psi), scan != 0, ts});
      }
    } else if (tag == "ODOM") {
      if (!graph) parse_error("ODOM before any NODE");
      int from = 0;
      double x, y, psi, wx, wy, wp;
      if (!(ls >> from >> x >> y >> psi >> wx >> wy >> wp)) parse_error("malformed ODOM");
      if (from < 0 || from + 1 >= static_cast<int>(graph->nodes_.size())) {
        parse_error("ODOM references unknown node");
      }
      graph->odom_edges_.push_back(OdomEdge{from, Pose2(x, y, psi), InfoMatrix3(wx, wy, wp)});
    } else if (tag == "INTRA" || tag == "INTER") {
      if (!graph) parse_error(tag + " before any NODE");
      LoopEdge e;
      double x, y, psi, wx, wy, wp;
      if (!(ls >> e.from_id >> e.to_id >> x >> y >> psi >> wx >> wy >> wp)) {
        parse_error("malformed " + tag);
      }
      e.measurement = Pose2(x, y, psi);
      e.info = InfoMatrix3(wx, wy, wp);
      if (e.from_id < 0 || e.from_id >= static_cast<int>(graph->nodes_.size()) ||
          e.to_id < 0 || e.to_id >= static_cast<int>(graph->nodes_.size())) {
        parse_error(tag + " references unknown node");
      }
      if (tag == "INTER") {
        e.kind = LoopKind::kInter;
        double sx, sy, sp, ix, iy, ip;
        if (!(ls >> e.source_drone >> e.source_pose_id >> sx >> sy >> sp >> ix >> iy >> ip)) {
          parse_error("malformed INTER");
        }
        e.source_pose_snapshot = Pose2(sx, sy, sp);
        e.icp_transform = Pose2(ix, iy, ip);
        if (e.to_id != 0) parse_error("INTER edge must target the anchor node");
      }
      graph->loop_edges_.push_back(e);
    } else {
      parse_error("unknown record '" + tag + "'");
    }
  }
  if (!graph) throw std::runtime_error("graph dump: empty input");
  if (graph->odom_edges_.size() + 1 != graph->nodes_.size()) {
    throw std::runtime_error("graph dump: expected one ODOM edge per consecutive node pair");
  }
  return std::move(*graph);
}

}  // namespace cslam
