#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cslam/geometry.hpp"

namespace cslam {

struct PoseNode {
  int id = 0;
  Pose2 pose;
  bool is_scan_pose = false;
  double timestamp = 0.0;
};

/// Edge between consecutive nodes, measured by the odometry chain.
struct OdomEdge {
  int from_id = 0;  // to_id is always from_id + 1
  Pose2 measurement;
  InfoMatrix3 info;
};

enum class LoopKind { kIntra, kInter };

/// Loop closure constraint. Intra edges connect two local scan poses
/// (from_id < to_id). Inter edges are rebased onto the anchor, so
/// to_id == 0, and they cache what is needed to refresh the measurement
/// when the source drone re-optimizes (no scan retransmission, no ICP rerun).
struct LoopEdge {
  int from_id = 0;
  int to_id = 0;
  Pose2 measurement;
  InfoMatrix3 info;
  LoopKind kind = LoopKind::kIntra;

  // Inter-edge bookkeeping.
  int source_drone = -1;
  int source_pose_id = -1;
  Pose2 source_pose_snapshot;  // external pose the edge was last computed with
  Pose2 icp_transform;         // effective alignment (folds in applied updates)
};

struct PgoConfig {
  InfoMatrix3 omega_odom{50.0, 50.0, 100.0};
  InfoMatrix3 omega_lc{200.0, 200.0, 400.0};
  double subgraph_travel_m = 0.8;
  int max_subgraph_nodes = 440;
  int max_total_nodes = 3000;
  int max_iterations = 50;
  double convergence_tol = 1e-6;  // relative cost decrease
  int min_index_gap = 50;         // intra loop closure self-match guard
  int max_rounds = 10;            // skeleton + subgraph sweeps
};

class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OptimizeReport {
  double initial_cost = 0.0;
  double final_cost = 0.0;
  int iterations = 0;
  bool converged = true;
  int subgraphs = 1;
};

// ---------------------------------------------------------------------------
// Inter-drone edge algebra. Homogeneous composition throughout; every pose
// doubles as its own transform.

/// Loop closure edge toward the external pose:
/// Z_ext = (Z_icp * X_local)^-1 * X_ext.
Pose2 compute_inter_edge(const Pose2& icp, const Pose2& local_pose,
                         const Pose2& external_pose);

/// Same constraint rebased onto the anchor so the external pose never enters
/// the graph: Z'_ext = (Z_icp * X_local)^-1 * X_0.
Pose2 rebase_inter_edge(const Pose2& icp, const Pose2& local_pose,
                        const Pose2& anchor_pose);

/// Refreshes a rebased edge after the source drone moved the external pose:
/// Z' = (X_ext_new * X_ext^-1 * Z_icp * X_local)^-1 * X_0.
/// The returned edge carries the new snapshot and the folded-in alignment.
LoopEdge update_inter_edge(const LoopEdge& edge, const Pose2& external_pose_new,
                           const Pose2& anchor_pose);

// ---------------------------------------------------------------------------

/// Per-drone pose graph. Node 0 holds the take-off pose and is never touched
/// by optimization; everything else bends around it.
class PoseGraph {
 public:
  explicit PoseGraph(const Pose2& takeoff_pose, const PgoConfig& config = {});

  /// Appends a node at compose(last_pose, odom) plus the odometry edge.
  /// Throws CapacityError once the configured node budget is full.
  int add_pose_with_odometry(const Pose2& odom_measurement, double timestamp);

  /// Installs an intra loop edge. `newer_id` is the revisiting scan pose,
  /// `older_id` the matched earlier one; `icp_result` aligns the newer scan
  /// onto the older in the world frame. Stored with from_id < to_id.
  const LoopEdge& add_intra_loop_edge(int newer_id, int older_id, const Pose2& icp_result);

  /// Installs a rebased inter edge (Eq. 3 path). Adds no node.
  const LoopEdge& add_inter_loop_edge(int local_id, int source_drone, int source_pose_id,
                                      const Pose2& icp_result, const Pose2& external_pose);

  /// Applies a pose update from a lower-id drone to every inter edge that
  /// references (source_drone, pose_id). Returns how many edges changed.
  int apply_pose_update(int source_drone, int source_pose_id, const Pose2& new_pose);

  /// Hierarchical PGO: travel-distance partition, skeleton pass, then each
  /// subgraph with its first node fixed. Cost never increases.
  OptimizeReport optimize() { return optimize(config_); }
  OptimizeReport optimize(const PgoConfig& config);

  /// Total Eq. 1 objective: sum of e^T Omega e over all edges, heading
  /// residuals wrapped.
  double cost() const;

  const PoseNode& node(int id) const;
  PoseNode& mutable_node(int id);
  std::size_t size() const { return nodes_.size(); }
  const std::vector<PoseNode>& nodes() const { return nodes_; }
  const std::vector<OdomEdge>& odom_edges() const { return odom_edges_; }
  const std::vector<LoopEdge>& loop_edges() const { return loop_edges_; }
  const PgoConfig& config() const { return config_; }
  void set_scan_pose(int id, bool flag = true);

  void dump(std::ostream& out) const;
  /// Parses the line-oriented dump format. Throws std::runtime_error with the
  /// offending line number on malformed input.
  static PoseGraph load(std::istream& in);

 private:
  PgoConfig config_;
  std::vector<PoseNode> nodes_;
  std::vector<OdomEdge> odom_edges_;
  std::vector<LoopEdge> loop_edges_;
};

}  // namespace cslam
