#include "roundabout/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace roundabout {

void RoundaboutLayout::validate() const {
  if (!(ring_radius > 0.0)) throw std::invalid_argument("layout: ring_radius must be > 0");
  if (!(lane_width > 0.0)) throw std::invalid_argument("layout: lane_width must be > 0");
  if (!(entry_exit_curvature > 0.0)) {
    throw std::invalid_argument("layout: entry_exit_curvature must be > 0");
  }
  if (!(entry_exit_band > 0.0)) throw std::invalid_argument("layout: entry_exit_band must be > 0");
  if (arms.empty()) throw std::invalid_argument("layout: at least one arm required");
  for (std::size_t i = 0; i < arms.size(); ++i) {
    if (!(arms[i].length > 0.0)) throw std::invalid_argument("layout: arm length must be > 0");
    for (std::size_t j = i + 1; j < arms.size(); ++j) {
      const double diff = std::abs(wrap_pi(arms[i].heading - arms[j].heading));
      if (diff < 1e-9) {
        throw std::invalid_argument("layout: arm headings must be pairwise distinct");
      }
    }
  }
}

RoundaboutLayout make_four_arm_layout(double arm_length) {
  RoundaboutLayout layout;
  layout.arms = {Arm{0.0, arm_length}, Arm{0.5 * kPi, arm_length},
                 Arm{kPi, arm_length}, Arm{1.5 * kPi, arm_length}};
  layout.validate();
  return layout;
}

Vec2 PathSegment::point_at(double s) const {
  if (curvature == 0.0) {
    return start + s * unit_vector(start_heading);
  }
  const double h0 = start_heading;
  const double h1 = start_heading + curvature * s;
  return Vec2(start.x() + (std::sin(h1) - std::sin(h0)) / curvature,
              start.y() - (std::cos(h1) - std::cos(h0)) / curvature);
}

Vec2 PathSegment::arc_center() const {
  return start + (1.0 / curvature) * left_normal(start_heading);
}

PathSpec::PathSpec(std::vector<PathSegment> segments, Vec2 target_point)
    : segments_(std::move(segments)), target_point_(target_point) {
  starts_.reserve(segments_.size());
  double s = 0.0;
  for (const PathSegment& seg : segments_) {
    starts_.push_back(s);
    s += seg.length;
  }
  total_length_ = s;
}

std::size_t PathSpec::segment_index_at(double station) const {
  if (segments_.empty() || station < 0.0 || station > total_length_) {
    throw std::out_of_range("path: station outside [0, total_length]");
  }
  // Ties at boundaries resolve to the later segment.
  auto it = std::upper_bound(starts_.begin(), starts_.end(), station);
  std::size_t idx = static_cast<std::size_t>(it - starts_.begin());
  if (idx > 0) --idx;
  // A station exactly at a boundary equals the next segment's start.
  if (idx + 1 < segments_.size() && station == starts_[idx + 1]) ++idx;
  return idx;
}

Vec2 PathSpec::point_at(double station) const {
  const std::size_t i = segment_index_at(station);
  return segments_[i].point_at(station - starts_[i]);
}

double PathSpec::heading_at(double station) const {
  const std::size_t i = segment_index_at(station);
  return segments_[i].heading_at(station - starts_[i]);
}

void PathSpec::validate(double tolerance) const {
  if (segments_.empty() || !(total_length_ > 0.0)) {
    throw std::invalid_argument("path: total arc length must be > 0");
  }
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    const PathSegment& seg = segments_[i];
    switch (seg.kind) {
      case SegmentKind::Straight:
        if (seg.curvature != 0.0) {
          throw std::invalid_argument("path: straight segment with nonzero curvature");
        }
        break;
      case SegmentKind::RingArc:
        if (!(seg.curvature > 0.0)) {
          throw std::invalid_argument("path: ring arc must have positive curvature");
        }
        break;
      case SegmentKind::EntryArc:
      case SegmentKind::ExitArc:
        if (!(seg.curvature < 0.0)) {
          throw std::invalid_argument("path: entry/exit arc must have negative curvature");
        }
        break;
    }
    if (i + 1 < segments_.size()) {
      const double gap = (seg.end() - segments_[i + 1].start).norm();
      if (gap > tolerance) {
        throw std::invalid_argument("path: segment endpoints discontinuous (gap " +
                                    std::to_string(gap) + " m)");
      }
    }
  }
}

PathSpec build_roundabout_path(const RoundaboutLayout& layout,
                               std::size_t entry_arm, std::size_t exit_arm) {
  layout.validate();
  if (entry_arm >= layout.arms.size() || exit_arm >= layout.arms.size()) {
    throw std::invalid_argument("path: arm index out of range");
  }
  if (entry_arm == exit_arm) {
    throw std::invalid_argument("path: entry and exit arm must differ (U-turn rejected)");
  }

  const double ring_r = layout.ring_radius;
  const double blend_r = 1.0 / layout.entry_exit_curvature;
  // Tangency geometry of a clockwise blend arc touching both the arm axis
  // and the counter-clockwise ring: the blend circle center sits at distance
  // ring_r + blend_r from the layout center and blend_r off the arm axis.
  const double junction_dist = std::sqrt(ring_r * ring_r + 2.0 * ring_r * blend_r);
  const double junction_offset = std::atan2(blend_r, junction_dist);
  const double arc_sweep = 0.5 * kPi - junction_offset;

  const Arm& in = layout.arms[entry_arm];
  const Arm& out = layout.arms[exit_arm];
  if (in.length <= junction_dist || out.length <= junction_dist) {
    throw std::invalid_argument("path: arm too short for the entry/exit blend arc");
  }

  const double entry_ring_angle = wrap_two_pi(in.heading + junction_offset);
  const double exit_ring_angle = wrap_two_pi(out.heading - junction_offset);
  double ring_sweep = wrap_two_pi(exit_ring_angle - entry_ring_angle);
  if (ring_sweep == 0.0) ring_sweep = kTwoPi;

  const Vec2 c = layout.center;
  std::vector<PathSegment> segs(5);

  segs[0] = PathSegment{SegmentKind::Straight, c + in.length * unit_vector(in.heading),
                        wrap_two_pi(in.heading + kPi), 0.0, in.length - junction_dist};
  segs[1] = PathSegment{SegmentKind::EntryArc, c + junction_dist * unit_vector(in.heading),
                        wrap_two_pi(in.heading + kPi), -layout.entry_exit_curvature,
                        blend_r * arc_sweep};
  segs[2] = PathSegment{SegmentKind::RingArc, c + ring_r * unit_vector(entry_ring_angle),
                        wrap_two_pi(entry_ring_angle + 0.5 * kPi), 1.0 / ring_r,
                        ring_r * ring_sweep};
  segs[3] = PathSegment{SegmentKind::ExitArc, c + ring_r * unit_vector(exit_ring_angle),
                        wrap_two_pi(exit_ring_angle + 0.5 * kPi), -layout.entry_exit_curvature,
                        blend_r * arc_sweep};
  segs[4] = PathSegment{SegmentKind::Straight, c + junction_dist * unit_vector(out.heading),
                        out.heading, 0.0, out.length - junction_dist};

  PathSpec path(std::move(segs), c + out.length * unit_vector(out.heading));
  path.validate();
  return path;
}

namespace {

// Along-axis coordinate and absolute lateral offset of a point relative to an
// arm axis, or nullopt when outside the arm corridor.
std::optional<double> corridor_along(const RoundaboutLayout& layout, const Arm& arm,
                                     const Vec2& position) {
  const Vec2 rel = position - layout.center;
  const Vec2 axis = unit_vector(arm.heading);
  const double along = rel.dot(axis);
  const double lateral = std::abs(cross2(axis, rel));
  if (along > 0.0 && along <= arm.length && lateral <= 0.5 * layout.lane_width) {
    return along;
  }
  return std::nullopt;
}

}  // namespace

std::optional<RegionKind> try_classify_region(const RoundaboutLayout& layout,
                                              const Vec2& position) {
  const double radial = (position - layout.center).norm();
  if (radial >= layout.ring_inner_radius() && radial <= layout.ring_outer_radius()) {
    return RegionKind::Ring;
  }
  if (radial < layout.ring_inner_radius()) return std::nullopt;  // center island
  for (const Arm& arm : layout.arms) {
    if (!corridor_along(layout, arm, position)) continue;
    if (radial <= layout.band_outer_radius()) return RegionKind::EnterExit;
    return RegionKind::Straight;
  }
  return std::nullopt;
}

RegionKind classify_region(const RoundaboutLayout& layout, const Vec2& position) {
  const auto region = try_classify_region(layout, position);
  if (!region) throw std::domain_error("classify_region: position outside drivable area");
  return *region;
}

double curvature_at(const PathSpec& path, double station) {
  return path.segments()[path.segment_index_at(station)].curvature;
}

namespace {

struct Candidate {
  double distance{std::numeric_limits<double>::infinity()};
  double station{0.0};
  double lateral{0.0};
};

Candidate project_to_segment(const PathSegment& seg, const Vec2& q) {
  Candidate best;
  auto consider = [&](double local_s) {
    const Vec2 p = seg.point_at(local_s);
    const double d = (q - p).norm();
    if (d < best.distance) {
      best.distance = d;
      best.station = local_s;
      best.lateral = left_normal(seg.heading_at(local_s)).dot(q - p);
    }
  };
  if (seg.curvature == 0.0) {
    const double t = (q - seg.start).dot(unit_vector(seg.start_heading));
    consider(std::clamp(t, 0.0, seg.length));
  } else {
    const Vec2 center = seg.arc_center();
    const Vec2 rel = q - center;
    if (rel.norm() > 1e-12) {
      const double angle_q = std::atan2(rel.y(), rel.x());
      const Vec2 rel0 = seg.start - center;
      const double angle_0 = std::atan2(rel0.y(), rel0.x());
      // Angular position advances as curvature * s along the segment.
      const double sweep = wrap_two_pi((angle_q - angle_0) *
                                       (seg.curvature > 0.0 ? 1.0 : -1.0));
      const double s = sweep / std::abs(seg.curvature);
      if (s <= seg.length) consider(s);
    }
    consider(0.0);
    consider(seg.length);
  }
  return best;
}

}  // namespace

PathProjection project_to_path(const PathSpec& path, const Vec2& position) {
  PathProjection best;
  best.distance = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < path.segments().size(); ++i) {
    const Candidate cand = project_to_segment(path.segments()[i], position);
    const double station = path.segment_start_station(i) + cand.station;
    // Strict improvement keeps the smaller station on exact ties.
    if (cand.distance < best.distance) {
      best.distance = cand.distance;
      best.station = station;
      best.lateral_offset = cand.lateral;
    }
  }
  return best;
}

}  // namespace roundabout
