#include "roundabout/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <stdexcept>
#include <string>

namespace roundabout {

DrivingPolicy make_policy(PolicyKind kind, const RoundaboutLayout& layout) {
  switch (kind) {
    case PolicyKind::Straight:
      return DrivingPolicy{kind, 0.0};
    case PolicyKind::EnterExit:
      return DrivingPolicy{kind, -layout.entry_exit_curvature};
    case PolicyKind::Circulate:
      return DrivingPolicy{kind, 1.0 / layout.ring_radius};
  }
  throw std::invalid_argument("make_policy: unknown policy kind");
}

void IdmParams::validate() const {
  if (!(desired_speed > 0.0 && min_gap > 0.0 && time_headway > 0.0 && max_accel > 0.0 &&
        comfortable_decel > 0.0 && max_brake > 0.0)) {
    throw std::invalid_argument("idm: all parameters must be positive");
  }
  if (!(exponent >= 1.0)) throw std::invalid_argument("idm: exponent must be >= 1");
}

namespace {

void require_finite(std::initializer_list<double> values, const char* what) {
  for (double v : values) {
    if (!std::isfinite(v)) throw std::invalid_argument(std::string(what) + ": non-finite input");
  }
}

}  // namespace

EgoState step_ego(const EgoState& s, double accel, double yaw_rate, double dt) {
  require_finite({s.x, s.y, s.theta, s.v, accel, yaw_rate, dt}, "step_ego");
  if (!(dt > 0.0)) throw std::invalid_argument("step_ego: dt must be > 0");
  EgoState next;
  next.x = s.x + s.v * std::cos(s.theta) * dt;
  next.y = s.y + s.v * std::sin(s.theta) * dt;
  next.v = std::max(0.0, s.v + accel * dt);
  next.theta = wrap_two_pi(s.theta + yaw_rate * dt);
  next.w = yaw_rate;
  return next;
}

OtherVehicleState step_constant(const OtherVehicleState& s, double dt) {
  require_finite({s.x, s.y, s.theta, s.v, dt}, "step_constant");
  if (!(dt > 0.0)) throw std::invalid_argument("step_constant: dt must be > 0");
  OtherVehicleState next;
  next.x = s.x + s.v * std::cos(s.theta) * dt;
  next.y = s.y + s.v * std::sin(s.theta) * dt;
  next.v = s.v;
  next.theta = wrap_two_pi(s.theta + 0.0);
  return next;
}

double yaw_rate_for(const DrivingPolicy& policy, double v) {
  return v * policy.curvature;
}

OtherVehicleState step_policy(const OtherVehicleState& s, const DrivingPolicy& policy,
                              double dt) {
  require_finite({s.x, s.y, s.theta, s.v, dt}, "step_policy");
  if (!(dt > 0.0)) throw std::invalid_argument("step_policy: dt must be > 0");
  OtherVehicleState next;
  next.x = s.x + s.v * std::cos(s.theta) * dt;
  next.y = s.y + s.v * std::sin(s.theta) * dt;
  next.v = s.v;
  next.theta = wrap_two_pi(s.theta + yaw_rate_for(policy, s.v) * dt);
  return next;
}

double idm_acceleration(double gap, double v, double v_leader, const IdmParams& p) {
  if (!(gap > 0.0)) {
    throw std::invalid_argument("idm_acceleration: gap must be > 0 (vehicles overlap)");
  }
  const double desired_gap =
      p.min_gap + v * p.time_headway +
      v * (v - v_leader) / (2.0 * std::sqrt(p.max_accel * p.comfortable_decel));
  const double ratio = desired_gap / gap;
  const double accel =
      p.max_accel * (1.0 - std::pow(v / p.desired_speed, p.exponent) - ratio * ratio);
  return std::clamp(accel, -p.max_brake, p.max_accel);
}

std::vector<OtherVehicleState> simulate_path_follow(
    const OtherVehicleState& initial, std::span<const DrivingPolicy> policy_sequence,
    double dt) {
  if (policy_sequence.empty()) {
    throw std::invalid_argument("simulate_path_follow: need at least one step");
  }
  std::vector<OtherVehicleState> trajectory;
  trajectory.reserve(policy_sequence.size() + 1);
  trajectory.push_back(initial);
  for (const DrivingPolicy& policy : policy_sequence) {
    trajectory.push_back(step_policy(trajectory.back(), policy, dt));
  }
  return trajectory;
}

}  // namespace roundabout
