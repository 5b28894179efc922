#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "slotswarm/core.hpp"
#include "slotswarm/estimator.hpp"

namespace slotswarm {

enum class Formation { circle, ellipse };

// Position-exchange task: agents ring the room center and each one's target
// is the starting spot of the agent across from it. Non-movers hover.
struct Scenario {
    int n_agents = 12;
    int n_moving = 12;
    Formation formation = Formation::circle;
    double radius_x = 1.25;            // circle uses radius_x on both axes
    double radius_y = 1.25;
    double altitude = 0.0;             // height above the room center [m]
    Vec3 room_bounds{3.0, 4.6, 1.9};   // full extents, centered on the origin

    void validate(double collision_dist) const;
};

// Gains of the potential-field avoidance stand-in. The slot scheduler works
// with any avoidance layer; this one is deliberately simple.
struct ControlParams {
    double attract_gain = 1.5;       // proportional pull toward the target [1/s]
    double influence_radius = 0.55;  // repulsion onset distance [m]
    double repulse_gain = 0.35;      // radial push away from an estimated peer
    double side_gain = 0.6;          // lateral bias so head-on pairs pass right
};

struct AgentBody {
    AgentId id = 0;
    KinematicState state;
    Vec3 target;
    double max_speed = 0.5;  // [m/s]
    double max_accel = 2.0;  // [m/s^2]
    bool moving = false;

    bool operator==(const AgentBody&) const = default;
};

// Antipodal partner on the ring: ((id + N/2 - 1) mod N) + 1.
AgentId antipodal_partner(AgentId id, int n_agents);

// Place agents evenly around the formation (the seed jitters the placement
// angles slightly), aim everyone at its partner's start, and flag the first
// n_moving agents, taken in antipodal pairs, as movers.
std::vector<AgentBody> generate_scenario(const Scenario& sc, std::uint64_t seed,
                                         double collision_dist);

// One explicit-Euler step of the potential-field controller: attraction
// toward the target plus repulsion from every estimated peer position within
// the influence radius, clipped to the body's speed and acceleration limits.
// Hovering bodies are returned unchanged.
AgentBody step_agent(const AgentBody& body, const PeerTable& peers, int current_slot,
                     double slot_len, const ControlParams& ctrl);

// First pair (lowest ids) closer than collision_dist, by true positions.
std::optional<std::pair<AgentId, AgentId>> check_collision(const std::vector<AgentBody>& bodies,
                                                           double collision_dist);

// True once the remaining distance is within r_min (inclusive).
bool reached_target(const AgentBody& body, double r_min);

}  // namespace slotswarm
