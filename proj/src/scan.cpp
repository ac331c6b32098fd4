#include "cslam/scan.hpp"

#include <algorithm>
#include <cstring>
#include <string>

namespace cslam {

namespace {

void put_i32(uint8_t* out, int32_t v) {
  out[0] = static_cast<uint8_t>(v & 0xff);
  out[1] = static_cast<uint8_t>((v >> 8) & 0xff);
  out[2] = static_cast<uint8_t>((v >> 16) & 0xff);
  out[3] = static_cast<uint8_t>((v >> 24) & 0xff);
}

void put_i16(uint8_t* out, int16_t v) {
  out[0] = static_cast<uint8_t>(v & 0xff);
  out[1] = static_cast<uint8_t>((v >> 8) & 0xff);
}

void put_f32(uint8_t* out, float v) {
  uint32_t bits;
  std::memcpy(&bits, &v, 4);
  put_i32(out, static_cast<int32_t>(bits));
}

int32_t get_i32(const uint8_t* in) {
  return static_cast<int32_t>(static_cast<uint32_t>(in[0]) |
                              (static_cast<uint32_t>(in[1]) << 8) |
                              (static_cast<uint32_t>(in[2]) << 16) |
                              (static_cast<uint32_t>(in[3]) << 24));
}

int16_t get_i16(const uint8_t* in) {
  return static_cast<int16_t>(static_cast<uint16_t>(in[0]) |
                              (static_cast<uint16_t>(in[1]) << 8));
}

float get_f32(const uint8_t* in) {
  const uint32_t bits = static_cast<uint32_t>(get_i32(in));
  float v;
  std::memcpy(&v, &bits, 4);
  return v;
}

std::size_t put_header(uint8_t* out, int32_t pose_id, int32_t timestamp_ms,
                       const Pose2& pose) {
  put_i32(out, pose_id);
  put_i32(out + 4, timestamp_ms);
  put_f32(out + 8, static_cast<float>(pose.x));
  put_f32(out + 12, static_cast<float>(pose.y));
  put_f32(out + 16, static_cast<float>(pose.psi));
  return 20;
}

int16_t sanitize_depth(int16_t mm) { return depth_valid(mm) ? mm : kInvalidDepth; }

}  // namespace

std::array<int16_t, kColumns> reduce_columns(
    const std::array<std::array<int16_t, kColumns>, kRows>& matrix,
    int min_valid_pixels) {
  std::array<int16_t, kColumns> out{};
  for (int col = 0; col < kColumns; ++col) {
    std::array<int16_t, kRows> vals{};
    int n = 0;
    for (int row = 0; row < kRows; ++row) {
      const int16_t d = matrix[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
      if (depth_valid(d)) vals[static_cast<std::size_t>(n++)] = d;
    }
    if (n < min_valid_pixels) {
      out[static_cast<std::size_t>(col)] = kInvalidDepth;
      continue;
    }
    std::sort(vals.begin(), vals.begin() + n);
    out[static_cast<std::size_t>(col)] = vals[static_cast<std::size_t>((n - 1) / 2)];
  }
  return out;
}

DepthFrame reduce_matrix_frame(const MatrixFrame& frame, const SensorRig& rig) {
  DepthFrame out;
  out.pose_id = frame.pose_id;
  out.timestamp_ms = frame.timestamp_ms;
  out.pose = frame.pose;
  for (int s = 0; s < kNumSensors; ++s) {
    out.depths_mm[static_cast<std::size_t>(s)] =
        reduce_columns(frame.depths_mm[static_cast<std::size_t>(s)], rig.min_valid_pixels);
  }
  return out;
}

std::vector<Vec2> project_frame(const DepthFrame& frame, const SensorRig& rig) {
  std::vector<Vec2> points;
  points.reserve(kNumSensors * kColumns);
  for (int s = 0; s < kNumSensors; ++s) {
    for (int col = 0; col < kColumns; ++col) {
      const int16_t d = frame.depths_mm[static_cast<std::size_t>(s)][static_cast<std::size_t>(col)];
      if (!depth_valid(d)) continue;
      const double bearing = frame.pose.psi + rig.column_bearing(s, col);
      const double r = static_cast<double>(d) / 1000.0;
      points.push_back({frame.pose.x + r * std::cos(bearing),
                        frame.pose.y + r * std::sin(bearing)});
    }
  }
  return points;
}

std::vector<Point3> project_frame_3d(const MatrixFrame& frame, const SensorRig& rig,
                                     double altitude_m) {
  std::vector<Point3> points;
  points.reserve(kNumSensors * kRows * kColumns);
  for (int s = 0; s < kNumSensors; ++s) {
    for (int row = 0; row < kRows; ++row) {
      for (int col = 0; col < kColumns; ++col) {
        const int16_t d = frame.depths_mm[static_cast<std::size_t>(s)]
                                         [static_cast<std::size_t>(row)]
                                         [static_cast<std::size_t>(col)];
        if (!depth_valid(d)) continue;
        const double bearing = frame.pose.psi + rig.column_bearing(s, col);
        const double elev = rig.row_elevation(row);
        const double r = static_cast<double>(d) / 1000.0;
        const double rh = r * std::cos(elev);
        points.push_back({frame.pose.x + rh * std::cos(bearing),
                          frame.pose.y + rh * std::sin(bearing),
                          altitude_m + r * std::sin(elev)});
      }
    }
  }
  return points;
}

std::vector<Vec2> Scan::world_points(const Pose2& anchor_now) const {
  std::vector<Vec2> out;
  out.reserve(points.size());
  const Transform2 t = to_transform(anchor_now);
  for (const Vec2& p : points) out.push_back(apply_to_point(t, p));
  return out;
}

std::optional<Scan> build_scan(const std::vector<DepthFrame>& frames, const Pose2& anchor,
                               const SensorRig& rig, std::string* error) {
  auto fail = [&](const std::string& msg) -> std::optional<Scan> {
    if (error) *error = msg;
    return std::nullopt;
  };
  if (frames.size() != kFramesPerScan) {
    return fail("expected " + std::to_string(kFramesPerScan) + " frames, got " +
                std::to_string(frames.size()));
  }
  // Heading span from unwrapped headings; the acquisition spin must cover
  // at least the 45 deg gap between the sensors' fields of view.
  double unwrapped = frames.front().pose.psi;
  double lo = unwrapped, hi = unwrapped;
  for (std::size_t i = 1; i < frames.size(); ++i) {
    unwrapped += wrap_angle(frames[i].pose.psi - frames[i - 1].pose.psi);
    lo = std::min(lo, unwrapped);
    hi = std::max(hi, unwrapped);
  }
  const double span = hi - lo;
  if (span < kPi / 4.0 - 1e-9) {
    return fail("heading span " + std::to_string(span * 180.0 / kPi) +
                " deg is below the required 45 deg");
  }

  Scan scan;
  scan.anchor = anchor;
  const Transform2 to_anchor = inverse(to_transform(anchor));
  for (const DepthFrame& f : frames) {
    for (const Vec2& p : project_frame(f, rig)) {
      scan.points.push_back(apply_to_point(to_anchor, p));
    }
  }
  return scan;
}

std::array<uint8_t, kFrameBytes2d> serialize_frame(const DepthFrame& frame) {
  std::array<uint8_t, kFrameBytes2d> out{};
  std::size_t off = put_header(out.data(), frame.pose_id, frame.timestamp_ms, frame.pose);
  for (int s = 0; s < kNumSensors; ++s) {
    for (int col = 0; col < kColumns; ++col) {
      put_i16(out.data() + off,
              sanitize_depth(frame.depths_mm[static_cast<std::size_t>(s)]
                                            [static_cast<std::size_t>(col)]));
      off += 2;
    }
  }
  return out;
}

std::array<uint8_t, kFrameBytes3d> serialize_frame(const MatrixFrame& frame) {
  std::array<uint8_t, kFrameBytes3d> out{};
  std::size_t off = put_header(out.data(), frame.pose_id, frame.timestamp_ms, frame.pose);
  for (int s = 0; s < kNumSensors; ++s) {
    for (int row = 0; row < kRows; ++row) {
      for (int col = 0; col < kColumns; ++col) {
        put_i16(out.data() + off,
                sanitize_depth(frame.depths_mm[static_cast<std::size_t>(s)]
                                              [static_cast<std::size_t>(row)]
                                              [static_cast<std::size_t>(col)]));
        off += 2;
      }
    }
  }
  return out;
}

std::optional<DepthFrame> deserialize_frame(const uint8_t* data, std::size_t size) {
  if (size < kFrameBytes2d) return std::nullopt;
  DepthFrame f;
  f.pose_id = get_i32(data);
  f.timestamp_ms = get_i32(data + 4);
  f.pose = Pose2(get_f32(data + 8), get_f32(data + 12), get_f32(data + 16));
  std::size_t off = 20;
  for (int s = 0; s < kNumSensors; ++s) {
    for (int col = 0; col < kColumns; ++col) {
      f.depths_mm[static_cast<std::size_t>(s)][static_cast<std::size_t>(col)] =
          sanitize_depth(get_i16(data + off));
      off += 2;
    }
  }
  return f;
}

std::optional<MatrixFrame> deserialize_matrix_frame(const uint8_t* data, std::size_t size) {
  if (size < kFrameBytes3d) return std::nullopt;
  MatrixFrame f;
  f.pose_id = get_i32(data);
  f.timestamp_ms = get_i32(data + 4);
  f.pose = Pose2(get_f32(data + 8), get_f32(data + 12), get_f32(data + 16));
  std::size_t off = 20;
  for (int s = 0; s < kNumSensors; ++s) {
    for (int row = 0; row < kRows; ++row) {
      for (int col = 0; col < kColumns; ++col) {
        f.depths_mm[static_cast<std::size_t>(s)][static_cast<std::size_t>(row)]
                   [static_cast<std::size_t>(col)] = sanitize_depth(get_i16(data + off));
        off += 2;
      }
    }
  }
  return f;
}

std::vector<uint8_t> serialize_scan_frames(const std::vector<DepthFrame>& frames) {
  std::vector<uint8_t> out;
  out.reserve(frames.size() * kFrameBytes2d);
  for (const DepthFrame& f : frames) {
    const auto bytes = serialize_frame(f);
    out.insert(out.end(), bytes.begin(), bytes.end());
  }
  return out;
}

std::optional<std::vector<DepthFrame>> deserialize_scan_frames(const uint8_t* data,
                                                               std::size_t size) {
  if (size % kFrameBytes2d != 0) return std::nullopt;
  std::vector<DepthFrame> frames;
  frames.reserve(size / kFrameBytes2d);
  for (std::size_t off = 0; off < size; off += kFrameBytes2d) {
    auto f = deserialize_frame(data + off, kFrameBytes2d);
    if (!f) return std::nullopt;
    frames.push_back(*f);
  }
  return frames;
}

}  // namespace cslam
