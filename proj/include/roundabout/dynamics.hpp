#pragma once

#include <span>
#include <vector>

#include "roundabout/geometry.hpp"

namespace roundabout {

// Planned vehicle state: pose plus linear speed and yaw rate.
struct EgoState {
  double x{0.0};
  double y{0.0};
  double theta{0.0};  // [0, 2*pi)
  double v{0.0};      // >= 0
  double w{0.0};

  Vec2 position() const { return Vec2(x, y); }
};

// Observed vehicle state; yaw rate is not sensed for other vehicles.
struct OtherVehicleState {
  double x{0.0};
  double y{0.0};
  double theta{0.0};  // [0, 2*pi)
  double v{0.0};      // >= 0

  Vec2 position() const { return Vec2(x, y); }
};

enum class PolicyKind : int { Straight = 0, EnterExit = 1, Circulate = 2 };
inline constexpr int kNumPolicies = 3;

// Abstract driving policy with the curvature parameter that generates the
// yaw rate: 0 on straights, -entry_exit_curvature in the enter/exit areas,
// +1/ring_radius while circulating.
struct DrivingPolicy {
  PolicyKind kind{PolicyKind::Straight};
  double curvature{0.0};
};

DrivingPolicy make_policy(PolicyKind kind, const RoundaboutLayout& layout);

// Intelligent Driver Model parameters for simulated background vehicles.
struct IdmParams {
  double desired_speed{10.0};
  double min_gap{2.0};
  double time_headway{1.5};
  double max_accel{2.5};
  double comfortable_decel{3.0};
  double exponent{4.0};
  double max_brake{6.0};  // physical clamp on commanded deceleration

  void validate() const;
};

// One Euler step of the kinematic model; positions advance with the
// pre-step speed and heading. Throws std::invalid_argument on non-finite
// input or dt <= 0.
EgoState step_ego(const EgoState& s, double accel, double yaw_rate, double dt);

// Constant-velocity, constant-heading prediction step.
OtherVehicleState step_constant(const OtherVehicleState& s, double dt);

// w = v * curvature(policy).
double yaw_rate_for(const DrivingPolicy& policy, double v);

// Constant-velocity, policy-driven turn-rate prediction step. With a
// Straight policy this is arithmetic-identical to step_constant.
OtherVehicleState step_policy(const OtherVehicleState& s, const DrivingPolicy& policy,
                              double dt);

// Standard IDM acceleration, clamped to [-p.max_brake, p.max_accel].
// Throws std::invalid_argument when gap <= 0 (vehicles already overlap).
double idm_acceleration(double gap, double v, double v_leader, const IdmParams& p);

// Applies step_policy once per entry of `policy_sequence`; returns the
// n+1 visited states including the initial one.
std::vector<OtherVehicleState> simulate_path_follow(
    const OtherVehicleState& initial, std::span<const DrivingPolicy> policy_sequence,
    double dt);

}  // namespace roundabout
