#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "cslam/geometry.hpp"

namespace cslam {

// Sensor indices of the four-way depth rig.
enum Sensor : int { kFront = 0, kBack = 1, kLeft = 2, kRight = 3 };

inline constexpr int kNumSensors = 4;
inline constexpr int kColumns = 8;
inline constexpr int kRows = 8;
inline constexpr int kFramesPerScan = 20;
inline constexpr int kMaxScanPoints = kFramesPerScan * kNumSensors * kColumns;  // 640
inline constexpr int16_t kMaxDepthMm = 4000;
inline constexpr int16_t kInvalidDepth = 0;  // outside the valid (0, 4000] range

inline constexpr std::size_t kFrameBytes2d = 84;
inline constexpr std::size_t kFrameBytes3d = 532;
inline constexpr std::size_t kScanWireBytes = kFramesPerScan * kFrameBytes2d;  // 1680

inline bool depth_valid(int16_t mm) { return mm > 0 && mm <= kMaxDepthMm; }

/// Four-way depth sensor rig: mounting yaws, per-sensor FoV and range.
struct SensorRig {
  std::array<double, kNumSensors> yaw = {0.0, kPi, kPi / 2.0, -kPi / 2.0};
  double fov = kPi / 4.0;  // 45 deg per sensor, 180 deg cumulative
  double max_range_m = 4.0;
  int min_valid_pixels = 3;  // per-column quorum for the median reduction

  // Bearing of column k within a sensor, uniform across the FoV:
  // ((k + 0.5) / 8 - 0.5) * fov. Column 0 looks clockwise-most.
  double column_bearing(int sensor, int col) const {
    return yaw[static_cast<std::size_t>(sensor)] +
           ((static_cast<double>(col) + 0.5) / kColumns - 0.5) * fov;
  }
  // Elevation of row r for the 3D variant; row 0 looks up.
  double row_elevation(int row) const {
    return (0.5 - (static_cast<double>(row) + 0.5) / kRows) * fov;
  }
};

/// One reduced depth sample: 4 sensors x 8 column medians, with the pose
/// estimate at acquisition time. Wire size 84 bytes.
struct DepthFrame {
  int32_t pose_id = 0;
  int32_t timestamp_ms = 0;
  Pose2 pose;
  std::array<std::array<int16_t, kColumns>, kNumSensors> depths_mm{};  // 0 = invalid
};

/// Full-resolution sample (4 x 8 x 8), kept only for 3D mapping or before
/// the per-column median reduction. Wire size 532 bytes.
struct MatrixFrame {
  int32_t pose_id = 0;
  int32_t timestamp_ms = 0;
  Pose2 pose;
  std::array<std::array<std::array<int16_t, kColumns>, kRows>, kNumSensors> depths_mm{};
};

struct Point3 {
  double x = 0.0, y = 0.0, z = 0.0;
};

/// Map tile built from 20 consecutive depth frames while the drone spins.
/// Points are stored relative to the anchor pose, so moving the anchor moves
/// the tile rigidly.
struct Scan {
  int scan_id = 0;
  int owner_drone = 0;
  int pose_id = 0;       // graph node the scan is matched with
  Pose2 anchor;          // pose right before acquisition started
  double timestamp = 0.0;
  std::vector<Vec2> points;  // anchor-frame coordinates

  std::vector<Vec2> world_points() const { return world_points(anchor); }
  /// Renders the tile under a (possibly updated) anchor estimate.
  std::vector<Vec2> world_points(const Pose2& anchor_now) const;
};

/// Per-column median of the valid pixels (lower median for even counts).
/// A column with fewer than min_valid_pixels valid entries becomes invalid.
std::array<int16_t, kColumns> reduce_columns(
    const std::array<std::array<int16_t, kColumns>, kRows>& matrix,
    int min_valid_pixels);

/// Reduces a full matrix frame to the 32-value planar row.
DepthFrame reduce_matrix_frame(const MatrixFrame& frame, const SensorRig& rig);

/// Projects the valid depths of a reduced frame into world coordinates.
std::vector<Vec2> project_frame(const DepthFrame& frame, const SensorRig& rig);

/// 3D projection of a full matrix frame; loop closure stays 2D, this only
/// feeds the 3D map output.
std::vector<Point3> project_frame_3d(const MatrixFrame& frame, const SensorRig& rig,
                                     double altitude_m);

struct ScanBuildError {
  std::string message;
};

/// Assembles a scan from exactly 20 frames whose headings span >= 45 deg.
/// Points are re-expressed relative to `anchor`.
std::optional<Scan> build_scan(const std::vector<DepthFrame>& frames, const Pose2& anchor,
                               const SensorRig& rig, std::string* error = nullptr);

// Wire format (little-endian): pose id (4 B), timestamp (4 B), pose as
// 3 x float32 (12 B), then the depth block (64 B reduced / 512 B matrix).
std::array<uint8_t, kFrameBytes2d> serialize_frame(const DepthFrame& frame);
std::array<uint8_t, kFrameBytes3d> serialize_frame(const MatrixFrame& frame);
std::optional<DepthFrame> deserialize_frame(const uint8_t* data, std::size_t size);
std::optional<MatrixFrame> deserialize_matrix_frame(const uint8_t* data, std::size_t size);

/// A scan on the wire is its 20 frames back to back (1680 B).
std::vector<uint8_t> serialize_scan_frames(const std::vector<DepthFrame>& frames);
std::optional<std::vector<DepthFrame>> deserialize_scan_frames(const uint8_t* data,
                                                               std::size_t size);

}  // namespace cslam
