#pragma once

#include <span>

#include "roundabout/dynamics.hpp"
#include "roundabout/geometry.hpp"

namespace roundabout {

struct VehicleDims {
  double length{5.0};
  double width{1.8};
};

struct RewardConfig {
  double c1{1.0};  // collision
  double c2{1.0};  // gap
  double c3{1.0};  // velocity
  double c4{1.0};  // target
  double c5{1.0};  // comfort

  double collision_penalty_value{-1000.0};
  double exceed_cost{-100.0};  // speeding above the desired velocity
  double lower_cost{-10.0};    // lagging below the desired velocity
  double gap_cost{-10.0};      // per meter of gap error

  double comfort_accel_limit{4.0};  // total acceleration bound
  double lateral_accel_limit{2.0};  // passenger comfort bound for turning
  double max_brake{3.0};            // strongest brake in the action set
  double speed_limit{10.0};

  VehicleDims ego_dims{};
  VehicleDims other_dims{};

  double jerk_limit{1.0};  // max acceleration change per decision step

  double target_reward_value{1000.0};
  double target_radius{2.0};

  double gap_lookahead{100.0};          // preceding-vehicle search range
  double gap_lateral_tolerance{2.0};    // max lateral offset to count as preceding

  void validate() const;
};

// Per-component values are stored unweighted; total applies c1..c5.
struct RewardBreakdown {
  double collision{0.0};
  double gap{0.0};
  double velocity{0.0};
  double target{0.0};
  double comfort{0.0};
  double total{0.0};
};

// Circular safety boundary radius from the vehicle footprint.
double boundary_radius(const VehicleDims& dims);

// Braking threshold distance plus both boundary radii.
double safe_distance(double v_lim, double a_max, const VehicleDims& ego,
                     const VehicleDims& other);

// collision_penalty_value iff the center distance to the nearest vehicle is
// at most the safe distance (boundary inclusive), else 0.
double collision_penalty(const EgoState& ego, const OtherVehicleState& nearest,
                         const RewardConfig& cfg);

// Comfort-limited speed while turning, speed limit otherwise; always capped
// at the speed limit.
double desired_velocity(double curvature, const RewardConfig& cfg);

// Asymmetric relative deviation penalty; exceeding costs more than lagging.
double velocity_penalty(double v_e, double v_des, const RewardConfig& cfg);

// Penalty when the combined longitudinal + lateral acceleration reaches the
// comfort bound.
double comfort_penalty(double a_x, double v, double curvature, const RewardConfig& cfg);

// 3-second-rule gap shaping against the preceding vehicle.
double gap_reward(const EgoState& ego, const OtherVehicleState& preceding,
                  const RewardConfig& cfg);

// Stateless proximity bonus at the path's target point; episode bookkeeping
// makes it fire once.
double target_reward(const EgoState& ego, const PathSpec& path, const RewardConfig& cfg);

// Full five-component evaluation. `ego_station` must be the ego's station on
// `path` (use the project_to_path overload when it is unknown).
RewardBreakdown total_reward_at(const EgoState& ego, double ego_station,
                                std::span<const OtherVehicleState> others, double a_x,
                                const PathSpec& path, const RewardConfig& cfg);

RewardBreakdown total_reward(const EgoState& ego,
                             std::span<const OtherVehicleState> others, double a_x,
                             const PathSpec& path, const RewardConfig& cfg);

// Acceleration re-selection limiting the per-step change to jerk_limit.
double clamp_jerk(double a_t, double a_prev, double jerk_limit);

}  // namespace roundabout
