#include "slotswarm/tdma.hpp"

namespace slotswarm {

AgentId tdma_sender_for_slot(const TdmaSchedule& sched, long slot_index) {
    if (sched.n_agents < 1) {
        throw config_error("TdmaSchedule.n_agents must be >= 1");
    }
    if (slot_index < 0) {
        throw config_error("slot_index must be >= 0");
    }
    return static_cast<AgentId>(slot_index % sched.n_agents) + 1;
}

double tdma_update_time(int n_agents, double slot_len) {
    if (n_agents < 1) {
        throw config_error("n_agents must be >= 1");
    }
    if (!(slot_len > 0.0)) {
        throw config_error("slot_len must be > 0");
    }
    return n_agents * slot_len;
}

}  // namespace slotswarm
