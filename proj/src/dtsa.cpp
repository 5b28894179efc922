#include "slotswarm/dtsa.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace slotswarm {

namespace {
constexpr double kPi = std::numbers::pi;
}

PriorityTable::PriorityTable(int n_agents)
    : n_(n_agents),
      g_(static_cast<std::size_t>(n_agents), 0.0),
      eta_(static_cast<std::size_t>(n_agents) * static_cast<std::size_t>(n_agents), 0.0) {
    if (n_agents < 1) throw config_error("PriorityTable needs at least one agent");
}

int PriorityTable::check(AgentId id) const {
    if (id < 1 || id > n_) throw protocol_error("unknown agent id " + std::to_string(id));
    return id - 1;
}

CounterTable CounterTable::zeros(int n_agents) {
    CounterTable table;
    table.h.assign(static_cast<std::size_t>(n_agents), 0);
    return table;
}

std::int64_t CounterTable::of(AgentId id) const {
    if (id < 1 || id > size()) throw protocol_error("unknown agent id " + std::to_string(id));
    return h[static_cast<std::size_t>(id - 1)];
}

double position_error(const Vec3& current, const Vec3& target) {
    return euclidean_distance(target, current);
}

double transmission_param(double p_e, const ProtocolParams& params) {
    return p_e > params.r_min ? params.c_const : 0.0;
}

double approach_angle(const Vec3& v_jk, const Vec3& p_kj) {
    const double vn = norm(v_jk);
    const double pn = norm(p_kj);
    if (vn == 0.0 || pn == 0.0) {
        throw std::domain_error("approach_angle is undefined for zero-length vectors");
    }
    // Dot products of near-collinear unit vectors can land just outside
    // [-1, 1]; clamp before acos.
    const double cos_alpha = std::clamp(dot(v_jk, p_kj) / (vn * pn), -1.0, 1.0);
    return std::acos(cos_alpha);
}

double eta(const Vec3& v_jk, const Vec3& p_kj, double slot_len) {
    const double vn = norm(v_jk);
    if (vn == 0.0) return 0.0;  // agents keep their separation; nothing to report
    const double pn = norm(p_kj);
    if (pn == 0.0) {
        throw collision_error("zero separation between agents; the task already failed");
    }
    const double alpha = approach_angle(v_jk, p_kj);
    return (vn * slot_len / pn) * ((kPi - alpha) / kPi);
}

PriorityTable priority_values_from_states(const std::vector<KinematicState>& states,
                                          const std::vector<bool>& active, double slot_len) {
    const int n = static_cast<int>(states.size());
    if (n < 2) throw config_error("priority values need at least 2 agents");
    if (static_cast<int>(active.size()) != n) {
        throw config_error("active flags must cover every agent");
    }

    PriorityTable result(n);
    // eta is symmetric in (j, k), so one evaluation covers both directions.
    for (int j = 1; j <= n; ++j) {
        for (int k = j + 1; k <= n; ++k) {
            const KinematicState& sj = states[static_cast<std::size_t>(j - 1)];
            const KinematicState& sk = states[static_cast<std::size_t>(k - 1)];
            if (euclidean_distance(sj.position, sk.position) == 0.0) {
                throw collision_error("agents " + std::to_string(j) + " and " + std::to_string(k) +
                                          " estimated at the same position",
                                      j, k);
            }
            const Vec3 v_jk = relative_velocity(sj.velocity, sk.velocity);
            const Vec3 p_kj = sk.position - sj.position;
            const double term = eta(v_jk, p_kj, slot_len);
            result.set_eta(j, k, term);
            result.set_eta(k, j, term);
        }
    }

    for (int k = 1; k <= n; ++k) {
        if (!active[static_cast<std::size_t>(k - 1)]) continue;
        // A stationary agent is not changing its position: its last report
        // stays valid, so it gets no claim on the channel.
        if (norm(states[static_cast<std::size_t>(k - 1)].velocity) == 0.0) continue;
        double sum = 0.0;
        for (int j = 1; j <= n; ++j) {
            if (j != k) sum += result.eta_term(j, k);
        }
        result.set_g(k, sum);
    }
    return result;
}

PriorityTable priority_values(const PeerTable& table, int current_slot,
                              const ProtocolParams& params) {
    const int n = table.size();
    std::vector<KinematicState> states;
    states.reserve(static_cast<std::size_t>(n));
    std::vector<bool> active;
    active.reserve(static_cast<std::size_t>(n));
    for (AgentId id = 1; id <= n; ++id) {
        const PeerEstimate& est = table.entry(id);
        states.push_back(KinematicState{estimate_position(est, current_slot, params.slot_len),
                                        est.last_velocity});
        active.push_back(est.active);
    }
    return priority_values_from_states(states, active, params.slot_len);
}

SenderDecision select_next_sender(const PriorityTable& priorities, const CounterTable& counters,
                                  const std::vector<AgentId>& active, double epsilon) {
    if (active.empty()) return SenderDecision{std::nullopt, SelectionReason::idle};

    double g_top = 0.0;
    AgentId top = 0;
    for (AgentId id : active) {
        const double g = priorities.g(id);
        if (g > g_top) {
            g_top = g;
            top = id;
        }
    }
    if (g_top == 0.0) return SenderDecision{std::nullopt, SelectionReason::idle};

    // Near-tie group: everyone whose relative gap to the top value is within
    // epsilon. The top agent itself always qualifies (gap 0).
    std::vector<AgentId> group;
    for (AgentId id : active) {
        if ((g_top - priorities.g(id)) / g_top <= epsilon) group.push_back(id);
    }
    if (group.size() == 1) {
        return SenderDecision{top, SelectionReason::priority_win};
    }

    std::int64_t h_top = -1;
    AgentId stalest = 0;
    bool h_tie = false;
    for (AgentId id : group) {
        const std::int64_t h = counters.of(id);
        if (h > h_top) {
            h_top = h;
            stalest = id;
            h_tie = false;
        } else if (h == h_top) {
            h_tie = true;
        }
    }
    if (!h_tie) return SenderDecision{stalest, SelectionReason::counter_tiebreak};

    AgentId lowest = 0;
    for (AgentId id : group) {
        if (counters.of(id) == h_top && (lowest == 0 || id < lowest)) lowest = id;
    }
    return SenderDecision{lowest, SelectionReason::id_tiebreak};
}

CounterTable update_counters(const CounterTable& counters, std::optional<AgentId> sender) {
    if (sender && (*sender < 1 || *sender > counters.size())) {
        throw protocol_error("unknown sender id " + std::to_string(*sender));
    }
    CounterTable next = counters;
    for (int i = 0; i < next.size(); ++i) {
        auto& h = next.h[static_cast<std::size_t>(i)];
        h = (sender && *sender == i + 1) ? 0 : h + 1;
    }
    return next;
}

double dtsa_update_time(int n_active, double slot_len) {
    if (n_active < 1) throw config_error("n_active must be >= 1");
    if (!(slot_len > 0.0)) throw config_error("slot_len must be > 0");
    return n_active * slot_len;
}

}  // namespace slotswarm
