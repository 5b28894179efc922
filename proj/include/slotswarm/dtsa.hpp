#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "slotswarm/core.hpp"
#include "slotswarm/estimator.hpp"

namespace slotswarm {

// Per-agent priority values g_k plus the pairwise eta terms they sum,
// retained so tests can inspect individual contributions.
class PriorityTable {
  public:
    explicit PriorityTable(int n_agents);

    int size() const { return n_; }
    double g(AgentId k) const { return g_[check(k)]; }
    double eta_term(AgentId j, AgentId k) const { return eta_[check(j) * n_ + check(k)]; }

    void set_g(AgentId k, double value) { g_[check(k)] = value; }
    void set_eta(AgentId j, AgentId k, double value) { eta_[check(j) * n_ + check(k)] = value; }

  private:
    int check(AgentId id) const;
    int n_ = 0;
    std::vector<double> g_;
    std::vector<double> eta_;  // row-major [j][k]
};

// Slots since each agent last transmitted (from the local point of view).
struct CounterTable {
    std::vector<std::int64_t> h;  // indexed by id - 1

    static CounterTable zeros(int n_agents);
    std::int64_t of(AgentId id) const;
    int size() const { return static_cast<int>(h.size()); }

    bool operator==(const CounterTable&) const = default;
};

enum class SelectionReason { priority_win, counter_tiebreak, id_tiebreak, idle };

struct SenderDecision {
    std::optional<AgentId> next_sender;  // member of the potential-sender set when present
    SelectionReason reason = SelectionReason::idle;

    bool operator==(const SenderDecision&) const = default;
};

// Distance still to fly: ||target - current||.
double position_error(const Vec3& current, const Vec3& target);

// c_const while the remaining distance exceeds r_min (strictly), 0 otherwise.
double transmission_param(double p_e, const ProtocolParams& params);

// Angle in [0, pi] between the relative velocity v_jk and the relative
// position p_kj (vector from agent j to agent k). 0 means head-on approach.
// The cosine is clamped into [-1, 1] before acos; zero-length inputs are a
// domain error, callers handle those cases before calling.
double approach_angle(const Vec3& v_jk, const Vec3& p_kj);

// Pairwise collision-proneness: (relative displacement per slot / separation)
// scaled by (pi - angle)/pi. Zero relative velocity yields 0; zero separation
// means the agents already collided and throws.
double eta(const Vec3& v_jk, const Vec3& p_kj, double slot_len);

// Priority of every member of the potential-sender set, computed from the
// table's dead-reckoned states so that all agents reach the same values.
// An agent whose estimated speed is zero gets priority 0 outright: it is not
// changing its position, so its last report is still good.
PriorityTable priority_values(const PeerTable& table, int current_slot,
                              const ProtocolParams& params);

// Same computation over explicit states; `active` marks potential senders.
// This is the layer at which scaling slot_len rescales every g uniformly.
PriorityTable priority_values_from_states(const std::vector<KinematicState>& states,
                                          const std::vector<bool>& active, double slot_len);

// Pick the next sender. The top-priority agent wins outright only if its
// relative margin (g_top - g_j) / g_top exceeds epsilon against every other
// candidate; otherwise the near-tie group falls back to the stalest counter,
// then to the smallest id. All-zero priorities (or an empty set) yield idle.
SenderDecision select_next_sender(const PriorityTable& priorities, const CounterTable& counters,
                                  const std::vector<AgentId>& active, double epsilon);

// Sender's counter resets to 0, everyone else's increments; on an idle slot
// all counters increment.
CounterTable update_counters(const CounterTable& counters, std::optional<AgentId> sender);

// Periodic-assignment bound on the update time when only n_active agents
// still compete for slots. Reported as a diagnostic, never enforced.
double dtsa_update_time(int n_active, double slot_len);

}  // namespace slotswarm
