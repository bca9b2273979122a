#include "junction/sim/idm.hpp"

#include <cmath>
#include <stdexcept>

namespace junction::sim {

void IdmParams::validate() const {
  if (desired_speed <= 0 || time_gap <= 0 || min_gap <= 0 || max_accel <= 0 ||
      comfort_decel <= 0 || exponent <= 0) {
    throw std::invalid_argument("IdmParams: all fields must be strictly positive");
  }
}

double idm_acceleration(double gap, double v, double v_lead, const IdmParams& p) {
  if (gap <= 0.0) {
    throw std::invalid_argument("idm_acceleration: gap <= 0 (collision should have been detected)");
  }
  const double s_star =
      p.min_gap + v * p.time_gap + v * (v - v_lead) / (2.0 * std::sqrt(p.max_accel * p.comfort_decel));
  const double free_term = std::pow(v / p.desired_speed, p.exponent);
  const double gap_term = std::isinf(gap) ? 0.0 : (s_star / gap) * (s_star / gap);
  return p.max_accel * (1.0 - free_term - gap_term);
}

double idm_acceleration_or_brake(double gap, double v, double v_lead, const IdmParams& p,
                                 double brake_limit) {
  if (gap <= 0.0) return -brake_limit;
  return idm_acceleration(gap, v, v_lead, p);
}

}  // namespace junction::sim
