#pragma once

#include <vector>

#include "cslam/geometry.hpp"
#include "cslam/scan.hpp"

namespace cslam {

struct IcpConfig {
  int max_iterations = 30;
  double translation_tol_m = 1e-4;
  double rotation_tol_rad = 1e-4;
  double max_correspondence_dist_m = 0.5;
  double min_inlier_fraction = 0.3;
  // A correspondence cloud whose 2x2 covariance is this ill-conditioned is a
  // sliding constraint (straight corridor) and must not close a loop.
  double max_condition_number = 1e4;
};

struct IcpResult {
  Pose2 transform;           // z_icp: applied to the moving anchor, aligns onto the reference
  double rmse_m = 0.0;       // over the final inlier correspondences
  int iterations = 0;
  bool converged = false;
  double inlier_fraction = 0.0;
  std::vector<double> mse_history;  // mean squared correspondence distance per iteration
};

/// Point-to-point ICP between two point sets in a common frame.
IcpResult match_points(const std::vector<Vec2>& reference, const std::vector<Vec2>& moving,
                       const Pose2& initial_guess, const IcpConfig& cfg = {});

/// Matches two scans rendered in the world frame under their current anchor
/// estimates. The result transform left-composes with the moving scan's
/// anchor (the Z_icp * X_local convention).
IcpResult match_scans(const Scan& reference, const Scan& moving, const Pose2& initial_guess,
                      const IcpConfig& cfg = {});

/// Loop closure pairing rule: the two scan poses must be strictly closer than
/// the threshold (D_th, 1 m by default in the protocol).
inline bool should_pair(double distance_between_scan_poses_m, double threshold_m) {
  return distance_between_scan_poses_m < threshold_m;
}

}  // namespace cslam
