#pragma once

namespace junction::sim {

// Intelligent Driver Model parameters. Surrounding vehicles use the defaults
// below with their sampled desired speed; the ego controller uses the same
// set with a 10 m/s desired speed.
struct IdmParams {
  double desired_speed = 10.0;  // v_d, m/s
  double time_gap = 1.0;        // T, s
  double min_gap = 2.0;         // s0, m
  double max_accel = 3.0;       // a, m/s^2
  double comfort_decel = 2.5;   // b, m/s^2
  double exponent = 4.0;        // delta

  void validate() const;  // throws std::invalid_argument on non-positive fields
};

// IDM acceleration for a vehicle at speed `v` with bumper gap `gap` to a lead
// vehicle driving at `v_lead`. gap = +infinity encodes a free road.
// Throws std::invalid_argument for gap <= 0: the caller is expected to have
// detected a collision (or a crossed stop line) before calling.
double idm_acceleration(double gap, double v, double v_lead, const IdmParams& p);

// Same model, but total: a non-positive gap yields a hard-braking command of
// -brake_limit instead of an error. Used for virtual stop lines and followers.
double idm_acceleration_or_brake(double gap, double v, double v_lead, const IdmParams& p,
                                 double brake_limit);

}  // namespace junction::sim
