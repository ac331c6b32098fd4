#include "cslam/icp.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <unordered_map>

namespace cslam {

namespace {

// Uniform grid hash over the reference points; with tiles of <= 640 points a
// tree buys nothing. Cell size equals the correspondence gate so a query only
// probes the 3x3 neighborhood.
class GridIndex {
 public:
  GridIndex(const std::vector<Vec2>& points, double cell) : points_(points), cell_(cell) {
    cells_.reserve(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
      cells_[key(points[i])].push_back(static_cast<int>(i));
    }
  }

  // Index of the nearest point within `cell_` of q, or -1.
  int nearest(const Vec2& q, double* best_sq) const {
    const int64_t cx = coord(q.x);
    const int64_t cy = coord(q.y);
    int best = -1;
    double best_d = cell_ * cell_;
    for (int64_t dx = -1; dx <= 1; ++dx) {
      for (int64_t dy = -1; dy <= 1; ++dy) {
        const auto it = cells_.find(pack(cx + dx, cy + dy));
        if (it == cells_.end()) continue;
        for (const int idx : it->second) {
          const double d = (points_[static_cast<std::size_t>(idx)] - q).squared_norm();
          if (d < best_d) {
            best_d = d;
            best = idx;
          }
        }
      }
    }
    if (best_sq) *best_sq = best_d;
    return best;
  }

 private:
  int64_t coord(double v) const { return static_cast<int64_t>(std::floor(v / cell_)); }
  static uint64_t pack(int64_t x, int64_t y) {
    return (static_cast<uint64_t>(static_cast<uint32_t>(x)) << 32) |
           static_cast<uint64_t>(static_cast<uint32_t>(y));
  }
  uint64_t key(const Vec2& p) const { return pack(coord(p.x), coord(p.y)); }

  const std::vector<Vec2>& points_;
  double cell_;
  std::unordered_map<uint64_t, std::vector<int>> cells_;
};

}  // namespace

IcpResult match_points(const std::vector<Vec2>& reference, const std::vector<Vec2>& moving,
                       const Pose2& initial_guess, const IcpConfig& cfg) {
  IcpResult result;
  result.transform = initial_guess;
  if (reference.empty() || moving.empty()) return result;

  const GridIndex index(reference, cfg.max_correspondence_dist_m);

  Pose2 T = initial_guess;
  Pose2 best_T = T;
  double best_mse = std::numeric_limits<double>::infinity();
  double best_inliers = 0.0;
  bool tolerances_met = false;

  std::vector<Vec2> matched_p, matched_q;
  matched_p.reserve(moving.size());
  matched_q.reserve(moving.size());

  for (int iter = 0; iter < cfg.max_iterations; ++iter) {
    matched_p.clear();
    matched_q.clear();
    double sq_sum = 0.0;
    const Transform2 Tt = to_transform(T);
    for (const Vec2& m : moving) {
      const Vec2 p = apply_to_point(Tt, m);
      double d_sq = 0.0;
      const int idx = index.nearest(p, &d_sq);
      if (idx < 0) continue;
      matched_p.push_back(p);
      matched_q.push_back(reference[static_cast<std::size_t>(idx)]);
      sq_sum += d_sq;
    }
    result.iterations = iter + 1;
    if (matched_p.size() < 3) break;

    const double mse = sq_sum / static_cast<double>(matched_p.size());
    result.mse_history.push_back(mse);
    const double inlier_fraction =
        static_cast<double>(matched_p.size()) / static_cast<double>(moving.size());
    if (mse < best_mse) {
      best_mse = mse;
      best_T = T;
      best_inliers = inlier_fraction;
    }

    // Closed-form 2D rigid alignment of the matched pairs.
    Vec2 mu_p{0.0, 0.0}, mu_q{0.0, 0.0};
    for (std::size_t k = 0; k < matched_p.size(); ++k) {
      mu_p = mu_p + matched_p[k];
      mu_q = mu_q + matched_q[k];
    }
    const double inv_n = 1.0 / static_cast<double>(matched_p.size());
    mu_p = mu_p * inv_n;
    mu_q = mu_q * inv_n;
    double sxx = 0.0, cross = 0.0;
    for (std::size_t k = 0; k < matched_p.size(); ++k) {
      const Vec2 dp = matched_p[k] - mu_p;
      const Vec2 dq = matched_q[k] - mu_q;
      sxx += dp.dot(dq);
      cross += dp.cross(dq);
    }
    const double dtheta = std::atan2(cross, sxx);
    const Vec2 dt = mu_q - rotate(dtheta, mu_p);
    T = compose(Pose2(dt.x, dt.y, dtheta), T);

    if (std::hypot(dt.x, dt.y) < cfg.translation_tol_m &&
        std::abs(dtheta) < cfg.rotation_tol_rad) {
      tolerances_met = true;
      // Final correspondence pass under the converged transform.
      matched_p.clear();
      matched_q.clear();
      double final_sq = 0.0;
      const Transform2 Tf = to_transform(T);
      for (const Vec2& m : moving) {
        const Vec2 p = apply_to_point(Tf, m);
        double d_sq = 0.0;
        const int idx = index.nearest(p, &d_sq);
        if (idx < 0) continue;
        matched_p.push_back(p);
        matched_q.push_back(reference[static_cast<std::size_t>(idx)]);
        final_sq += d_sq;
      }
      if (!matched_p.empty()) {
        const double final_mse = final_sq / static_cast<double>(matched_p.size());
        result.mse_history.push_back(final_mse);
        if (final_mse <= best_mse) {
          best_mse = final_mse;
          best_T = T;
          best_inliers =
              static_cast<double>(matched_p.size()) / static_cast<double>(moving.size());
        }
      }
      break;
    }
  }

  result.transform = best_T;
  result.rmse_m = std::isfinite(best_mse) ? std::sqrt(best_mse) : 0.0;
  result.inlier_fraction = best_inliers;

  // Degenerate geometry check: a near-collinear correspondence set slides
  // along the unconstrained direction.
  bool degenerate = false;
  if (matched_q.size() >= 3) {
    Vec2 mu{0.0, 0.0};
    for (const Vec2& q : matched_q) mu = mu + q;
    mu = mu * (1.0 / static_cast<double>(matched_q.size()));
    double cxx = 0.0, cxy = 0.0, cyy = 0.0;
    for (const Vec2& q : matched_q) {
      const Vec2 d = q - mu;
      cxx += d.x * d.x;
      cxy += d.x * d.y;
      cyy += d.y * d.y;
    }
    const double tr = cxx + cyy;
    const double det = cxx * cyy - cxy * cxy;
    const double disc = std::sqrt(std::max(0.0, tr * tr / 4.0 - det));
    const double lmax = tr / 2.0 + disc;
    const double lmin = tr / 2.0 - disc;
    degenerate = lmin <= 0.0 || lmax / lmin > cfg.max_condition_number;
  } else {
    degenerate = true;
  }

  result.converged = tolerances_met && !degenerate &&
                     result.inlier_fraction >= cfg.min_inlier_fraction;
  return result;
}

IcpResult match_scans(const Scan& reference, const Scan& moving, const Pose2& initial_guess,
                      const IcpConfig& cfg) {
  return match_points(reference.world_points(), moving.world_points(), initial_guess, cfg);
}

}  // namespace cslam
