#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "roundabout/angles.hpp"

namespace roundabout {

// One approach road of the roundabout. The heading points from the ring
// center outward along the arm axis; the arm occupies a corridor of one
// lane width centered on that axis, out to `length` meters from the center.
struct Arm {
  double heading{0.0};
  double length{70.0};
};

struct RoundaboutLayout {
  Vec2 center{0.0, 0.0};
  double ring_radius{20.0};
  double lane_width{4.0};
  std::vector<Arm> arms;
  double entry_exit_curvature{0.15};
  double entry_exit_band{6.0};

  // Throws std::invalid_argument on violated invariants.
  void validate() const;

  double ring_inner_radius() const { return ring_radius - 0.5 * lane_width; }
  double ring_outer_radius() const { return ring_radius + 0.5 * lane_width; }
  double band_outer_radius() const { return ring_outer_radius() + entry_exit_band; }
};

// Canonical single-lane four-arm layout (arms at E, N, W, S).
RoundaboutLayout make_four_arm_layout(double arm_length = 70.0);

enum class RegionKind { Straight, EnterExit, Ring };

enum class SegmentKind { Straight, EntryArc, RingArc, ExitArc };

// Constant-curvature path piece. Positions along the segment are exact:
//   heading(s) = start_heading + curvature * s
//   point(s)   = start + integral of unit_vector(heading)
struct PathSegment {
  SegmentKind kind{SegmentKind::Straight};
  Vec2 start{0.0, 0.0};
  double start_heading{0.0};
  double curvature{0.0};  // signed, counter-clockwise positive
  double length{0.0};

  Vec2 point_at(double s) const;
  double heading_at(double s) const { return start_heading + curvature * s; }
  Vec2 end() const { return point_at(length); }
  // Center of the osculating circle; only valid when curvature != 0.
  Vec2 arc_center() const;
};

struct PathProjection {
  double station{0.0};
  double lateral_offset{0.0};  // left of travel positive
  double distance{0.0};
};

class PathSpec {
 public:
  PathSpec() = default;
  PathSpec(std::vector<PathSegment> segments, Vec2 target_point);

  const std::vector<PathSegment>& segments() const { return segments_; }
  const Vec2& target_point() const { return target_point_; }
  double total_length() const { return total_length_; }

  // Station of the start of segment i.
  double segment_start_station(std::size_t i) const { return starts_[i]; }

  // Segment containing `station`; ties at boundaries resolve to the later
  // segment. Throws std::out_of_range for station outside [0, total].
  std::size_t segment_index_at(double station) const;

  Vec2 point_at(double station) const;
  double heading_at(double station) const;

  // Throws std::invalid_argument when segments are discontinuous or when a
  // segment's curvature sign does not match its kind.
  void validate(double tolerance = 1e-6) const;

 private:
  std::vector<PathSegment> segments_;
  std::vector<double> starts_;  // cumulative start stations
  Vec2 target_point_{0.0, 0.0};
  double total_length_{0.0};
};

// Builds the designated path Straight -> EntryArc -> RingArc -> ExitArc ->
// Straight between two arms. The entry/exit arcs are circular blends of
// curvature -entry_exit_curvature tangent to both the arm axis and the ring
// centerline; the ring is traversed counter-clockwise. Throws
// std::invalid_argument for equal or invalid arm indices, or when an arm is
// too short to fit the blend arc.
PathSpec build_roundabout_path(const RoundaboutLayout& layout,
                               std::size_t entry_arm, std::size_t exit_arm);

// Region of a drivable-area point: Ring within the annulus, EnterExit in the
// radial band just outside the ring on an arm corridor, Straight further out
// on a corridor. Boundary ties resolve toward Ring. Throws std::domain_error
// for points outside the drivable area.
RegionKind classify_region(const RoundaboutLayout& layout, const Vec2& position);

// Same as classify_region but reports off-road queries as nullopt.
std::optional<RegionKind> try_classify_region(const RoundaboutLayout& layout,
                                              const Vec2& position);

// Signed curvature of the segment containing `station`; boundary ties go to
// the later segment. Throws std::out_of_range for out-of-range stations.
double curvature_at(const PathSpec& path, double station);

// Nearest-point projection onto the path. Ties between equidistant candidates
// resolve to the smaller station.
PathProjection project_to_path(const PathSpec& path, const Vec2& position);

}  // namespace roundabout
