#pragma once

#include <cstdint>
#include <vector>

#include "junction/sim/idm.hpp"

namespace junction::sim {

inline constexpr double kPhysicsDt = 0.04;     // 25 Hz
inline constexpr double kVehicleLength = 4.5;  // m
inline constexpr double kVehicleWidth = 2.0;   // m
inline constexpr double kLaneWidth = 4.0;      // m
inline constexpr double kEntryOffset = 2.0;    // intersection entry, m before a crossing point
inline constexpr double kRoadExtent = 60.0;    // cross routes span [-60, +60] m around their crossing
inline constexpr double kGoalOffset = 10.0;    // goal this far past the last crossing point
inline constexpr double kMaxVehicleAccel = 10.0;  // |a| bound for every vehicle, m/s^2

enum class RouteId : uint8_t { ego_route = 0, cross_route_1 = 1, cross_route_2 = 2 };

enum class ScenarioKind : uint8_t { single = 0, bidirectional = 1 };

struct VehicleState {
  RouteId route = RouteId::ego_route;
  double dist_to_crossing = 0.0;  // signed; negative once the center has passed the crossing
  double speed = 0.0;             // >= 0
  double accel = 0.0;             // realized, |a| <= 10
  double desired_speed = 10.0;
  bool yields_at_intersection = false;
};

struct ScenarioLayout {
  ScenarioKind kind = ScenarioKind::single;
  // Crossing points on the ego route, in ego route coordinates (first at 0).
  std::vector<double> crossing_x;
  double intersection_entry_offset = kEntryOffset;
  double goal_x = kGoalOffset;  // last crossing + 10 m
  double lane_width = kLaneWidth;
  double vehicle_length = kVehicleLength;
  double vehicle_width = kVehicleWidth;

  int num_cross_routes() const { return kind == ScenarioKind::single ? 1 : 2; }
  double last_crossing_x() const { return crossing_x.back(); }
  // Ego route coordinate where the intersection region starts.
  double entry_x() const { return crossing_x.front() - intersection_entry_offset; }
};

struct SimState {
  VehicleState ego;                  // route coordinate x = -dist_to_crossing (first crossing at 0)
  std::vector<VehicleState> others;  // spawn order, constant within an episode
  ScenarioLayout layout;
  int64_t tick = 0;  // physics steps elapsed; sim time = tick * kPhysicsDt

  double sim_time() const { return static_cast<double>(tick) * kPhysicsDt; }
  double ego_x() const { return -ego.dist_to_crossing; }
};

// Table-driven scenario sampling ranges.
struct SimConfig {
  int num_vehicles_min = 1;
  int num_vehicles_max = 4;
  double ego_start_min = 50.0;
  double ego_start_max = 60.0;
  double other_start_min = 10.0;
  double other_start_max = 55.0;
  double desired_speed_min = 8.0;
  double desired_speed_max = 12.0;
  double ego_speed = 10.0;
  double yield_probability = 0.25;

  IdmParams idm;  // surrounding-vehicle controller (desired_speed overridden per vehicle)

  void validate() const;  // throws std::invalid_argument on empty intervals
};

}  // namespace junction::sim
