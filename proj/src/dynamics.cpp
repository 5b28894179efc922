#include "slotswarm/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <set>
#include <string>

namespace slotswarm {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
// Placement jitter as a fraction of the angular spacing between neighbours.
constexpr double kAngleJitterFrac = 0.1;
}  // namespace

void Scenario::validate(double collision_dist) const {
    if (n_agents < 1) throw config_error("n_agents must be >= 1");
    if (n_moving < 0 || n_moving > n_agents) {
        throw config_error("n_moving must lie in [0, n_agents]");
    }
    if (n_moving % 2 != 0 && n_moving != n_agents) {
        throw config_error("n_moving must be even (movers fly in antipodal pairs) or equal "
                           "to n_agents");
    }
    if (!(radius_x > 0.0) || (formation == Formation::ellipse && !(radius_y > 0.0))) {
        throw config_error("formation radii must be > 0");
    }
    if (!(room_bounds.x > 0.0) || !(room_bounds.y > 0.0) || !(room_bounds.z > 0.0)) {
        throw config_error("room_bounds extents must be > 0");
    }
    const double ry = formation == Formation::circle ? radius_x : radius_y;
    if (radius_x > room_bounds.x / 2.0 || ry > room_bounds.y / 2.0) {
        throw config_error("formation radii do not fit within room_bounds");
    }
    if (std::abs(altitude) > room_bounds.z / 2.0) {
        throw config_error("altitude lies outside room_bounds");
    }
    if (n_agents > 1) {
        // Coarse feasibility check; the exact pairwise test runs after placement.
        const double spacing = kTwoPi * std::min(radius_x, ry) / n_agents;
        if (spacing * (1.0 - 2.0 * kAngleJitterFrac) <= collision_dist) {
            throw config_error("n_agents too large for the formation: neighbours would start "
                               "closer than collision_dist");
        }
    }
}

AgentId antipodal_partner(AgentId id, int n_agents) {
    return static_cast<AgentId>((id + n_agents / 2 - 1) % n_agents) + 1;
}

std::vector<AgentBody> generate_scenario(const Scenario& sc, std::uint64_t seed,
                                         double collision_dist) {
    sc.validate(collision_dist);
    const int n = sc.n_agents;
    const double ry = sc.formation == Formation::circle ? sc.radius_x : sc.radius_y;

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> jitter(-kAngleJitterFrac, kAngleJitterFrac);

    std::vector<Vec3> starts;
    starts.reserve(static_cast<std::size_t>(n));
    const double spacing_angle = kTwoPi / n;
    for (int i = 0; i < n; ++i) {
        const double theta = spacing_angle * i + jitter(rng) * spacing_angle;
        starts.push_back(Vec3{sc.radius_x * std::cos(theta), ry * std::sin(theta), sc.altitude});
    }

    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (euclidean_distance(starts[static_cast<std::size_t>(i)],
                                   starts[static_cast<std::size_t>(j)]) <= collision_dist) {
                throw config_error("agents " + std::to_string(i + 1) + " and " +
                                   std::to_string(j + 1) +
                                   " would start within collision_dist of each other");
            }
        }
    }

    // Movers are taken in antipodal pairs starting from agent 1, so a pair
    // that crosses the formation always moves together.
    std::set<AgentId> movers;
    for (AgentId id = 1; id <= n && static_cast<int>(movers.size()) < sc.n_moving; ++id) {
        movers.insert(id);
        if (static_cast<int>(movers.size()) < sc.n_moving) {
            movers.insert(antipodal_partner(id, n));
        }
    }

    std::vector<AgentBody> bodies;
    bodies.reserve(static_cast<std::size_t>(n));
    for (AgentId id = 1; id <= n; ++id) {
        AgentBody body;
        body.id = id;
        body.state.position = starts[static_cast<std::size_t>(id - 1)];
        body.state.velocity = Vec3{};
        body.target = starts[static_cast<std::size_t>(antipodal_partner(id, n) - 1)];
        body.moving = movers.count(id) > 0;
        bodies.push_back(body);
    }
    return bodies;
}

AgentBody step_agent(const AgentBody& body, const PeerTable& peers, int current_slot,
                     double slot_len, const ControlParams& ctrl) {
    if (!body.moving) return body;  // hovering agents hold position exactly

    AgentBody next = body;
    const Vec3 pos = body.state.position;

    const Vec3 to_target = body.target - pos;
    const double target_dist = norm(to_target);
    Vec3 command{};
    if (target_dist > 0.0) {
        command = to_target * ctrl.attract_gain;
    }

    for (AgentId id = 1; id <= peers.size(); ++id) {
        if (id == body.id) continue;
        const Vec3 peer_pos = estimate_position(peers.entry(id), current_slot, slot_len);
        const Vec3 away = pos - peer_pos;
        const double d = norm(away);
        if (d <= 0.0 || d >= ctrl.influence_radius) continue;
        const double mag = ctrl.repulse_gain * (1.0 / d - 1.0 / ctrl.influence_radius);
        const Vec3 radial = away * (1.0 / d);
        // Lateral bias: steering consistently to one side keeps a symmetric
        // head-on pair from mirroring each other into a standstill.
        Vec3 side = cross(radial, Vec3{0.0, 0.0, 1.0});
        const double side_norm = norm(side);
        side = side_norm > 0.0 ? side * (1.0 / side_norm) : Vec3{1.0, 0.0, 0.0};
        command += radial * mag + side * (mag * ctrl.side_gain);
    }

    const double command_speed = norm(command);
    if (command_speed > body.max_speed) {
        command = command * (body.max_speed / command_speed);
    }

    Vec3 dv = command - body.state.velocity;
    const double dv_norm = norm(dv);
    const double dv_max = body.max_accel * slot_len;
    if (dv_norm > dv_max) {
        dv = dv * (dv_max / dv_norm);
    }
    Vec3 velocity = body.state.velocity + dv;
    const double speed = norm(velocity);
    if (speed > body.max_speed) {
        velocity = velocity * (body.max_speed / speed);
    }

    next.state.velocity = velocity;
    next.state.position = pos + velocity * slot_len;
    return next;
}

std::optional<std::pair<AgentId, AgentId>> check_collision(const std::vector<AgentBody>& bodies,
                                                           double collision_dist) {
    const int n = static_cast<int>(bodies.size());
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (euclidean_distance(bodies[static_cast<std::size_t>(i)].state.position,
                                   bodies[static_cast<std::size_t>(j)].state.position) <
                collision_dist) {
                return std::make_pair(bodies[static_cast<std::size_t>(i)].id,
                                      bodies[static_cast<std::size_t>(j)].id);
            }
        }
    }
    return std::nullopt;
}

bool reached_target(const AgentBody& body, double r_min) {
    return euclidean_distance(body.target, body.state.position) <= r_min;
}

}  // namespace slotswarm
