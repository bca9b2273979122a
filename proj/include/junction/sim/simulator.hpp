#pragma once

#include "junction/rng.hpp"
#include "junction/sim/types.hpp"

namespace junction::sim {

// Samples a fresh scenario: single or bidirectional layout, ego at a random
// distance with speed ego_speed, N in {min..max} surrounding vehicles on
// uniformly chosen cross routes, each yielding with yield_probability.
// Identical seed and config give an identical state.
SimState init_scenario(uint64_t rng_seed, const SimConfig& cfg);

// Advances every vehicle by one Euler step of kPhysicsDt. The ego applies
// `ego_accel_command` (|a| <= 10 required); surrounding vehicles follow IDM
// toward their lead vehicle or, when yielding, toward a stop at the
// intersection entry. Vehicles past the road end wrap to the opposite side.
SimState step_physics(const SimState& state, double ego_accel_command, const SimConfig& cfg);

// True iff the ego rectangle overlaps any other vehicle's rectangle in the
// 2-D plane (open-interval overlap: touching edges do not collide).
bool detect_collision(const SimState& state);

// True iff the ego route coordinate has reached the goal (inclusive).
bool check_goal(const SimState& state);

// Plane position of a vehicle (rectangle center). Ego travels along +x on
// y = 0; cross route 1 travels -y at x = crossing_x[0]; cross route 2
// travels +y at x = crossing_x[1].
struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};
Vec2 vehicle_position(const VehicleState& v, const ScenarioLayout& layout);

}  // namespace junction::sim
