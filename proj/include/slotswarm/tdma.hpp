#pragma once

#include "slotswarm/core.hpp"

namespace slotswarm {

// Static round-robin schedule: agent ids take turns in id order, forever.
struct TdmaSchedule {
    int n_agents = 1;
};

// Sender of a given slot. Slots are 0-based, ids 1-based: slot 0 -> id 1.
AgentId tdma_sender_for_slot(const TdmaSchedule& sched, long slot_index);

// Time an agent waits between two of its own slots: N * t_s.
double tdma_update_time(int n_agents, double slot_len);

}  // namespace slotswarm
