#pragma once

#include <vector>

#include "slotswarm/channel.hpp"
#include "slotswarm/core.hpp"

namespace slotswarm {

// Last known state of one swarm member, as seen by one agent.
struct PeerEstimate {
    Vec3 last_position;
    Vec3 last_velocity;
    int last_update_slot = 0;
    bool active = true;       // still a member of the potential-sender set
    bool has_packet = false;  // false while the entry holds only the shared initial snapshot

    bool operator==(const PeerEstimate&) const = default;
};

// Linear dead reckoning: position + elapsed slots * velocity * slot length.
// Exact for peers flying at constant velocity.
Vec3 estimate_position(const PeerEstimate& est, int current_slot, double slot_len);

// One agent's decentralized view of the whole swarm, itself included. All
// agents start from the same seeded snapshot (true initial positions, zero
// velocities), so on a lossless channel every table stays identical.
class PeerTable {
  public:
    PeerTable() = default;
    static PeerTable seeded(const std::vector<Vec3>& initial_positions);

    int size() const { return static_cast<int>(entries_.size()); }
    const PeerEstimate& entry(AgentId id) const;

    // Refresh the sender's entry from a received packet. A zero transmission
    // parameter permanently drops the sender from the potential-sender set.
    void apply_packet(const Packet& pkt, int slot);

    std::vector<AgentId> active_ids() const;
    int active_count() const;

    bool operator==(const PeerTable&) const = default;

  private:
    std::vector<PeerEstimate> entries_;  // indexed by id - 1
};

}  // namespace slotswarm
