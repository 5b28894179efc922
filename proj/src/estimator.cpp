#include "slotswarm/estimator.hpp"

#include <string>

namespace slotswarm {

Vec3 estimate_position(const PeerEstimate& est, int current_slot, double slot_len) {
    if (current_slot < est.last_update_slot) {
        throw protocol_error("estimate requested for slot " + std::to_string(current_slot) +
                             " before the entry's last update at slot " +
                             std::to_string(est.last_update_slot));
    }
    const double elapsed = (current_slot - est.last_update_slot) * slot_len;
    return est.last_position + est.last_velocity * elapsed;
}

PeerTable PeerTable::seeded(const std::vector<Vec3>& initial_positions) {
    PeerTable table;
    table.entries_.reserve(initial_positions.size());
    for (const Vec3& pos : initial_positions) {
        PeerEstimate est;
        est.last_position = pos;
        est.last_velocity = Vec3{};
        est.last_update_slot = 0;
        est.active = true;
        est.has_packet = false;
        table.entries_.push_back(est);
    }
    return table;
}

const PeerEstimate& PeerTable::entry(AgentId id) const {
    if (id < 1 || id > size()) {
        throw protocol_error("unknown agent id " + std::to_string(id));
    }
    return entries_[static_cast<std::size_t>(id - 1)];
}

void PeerTable::apply_packet(const Packet& pkt, int slot) {
    if (pkt.sender < 1 || pkt.sender > size()) {
        throw protocol_error("packet from unknown sender id " + std::to_string(pkt.sender));
    }
    PeerEstimate& est = entries_[static_cast<std::size_t>(pkt.sender - 1)];
    est.last_position = pkt.position;
    est.last_velocity = pkt.velocity;
    est.last_update_slot = slot;
    est.has_packet = true;
    // Deactivation is one-way: once an agent announced it is done it never
    // rejoins the potential-sender set.
    est.active = est.active && pkt.c_r != 0.0;
}

std::vector<AgentId> PeerTable::active_ids() const {
    std::vector<AgentId> ids;
    ids.reserve(entries_.size());
    for (int i = 0; i < size(); ++i) {
        if (entries_[static_cast<std::size_t>(i)].active) ids.push_back(i + 1);
    }
    return ids;
}

int PeerTable::active_count() const {
    int count = 0;
    for (const auto& est : entries_) count += est.active ? 1 : 0;
    return count;
}

}  // namespace slotswarm
