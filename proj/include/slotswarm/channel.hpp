#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "slotswarm/core.hpp"

namespace slotswarm {

// One slot's broadcast: the sender's true kinematic state plus the
// transmission parameter (c_const while en route, 0 once parked).
struct Packet {
    AgentId sender = 0;
    Vec3 position;
    Vec3 velocity;
    double c_r = 0.0;
    int slot = 0;

    bool operator==(const Packet&) const = default;
};

struct SlotRecord {
    int slot = 0;
    std::optional<Packet> packet;  // empty on idle slots

    bool operator==(const SlotRecord&) const = default;
};

// Append-only per-run transcript of the medium: at most one packet per slot.
class SlotLog {
  public:
    void append(int slot, std::optional<Packet> packet);
    const std::vector<SlotRecord>& records() const { return records_; }
    bool empty() const { return records_.empty(); }

    // One JSON object per line: slot, sender (or null), position, velocity, c_r.
    std::string to_jsonl() const;
    static SlotLog from_jsonl(const std::string& text);

    bool operator==(const SlotLog&) const = default;

  private:
    std::vector<SlotRecord> records_;
};

// Delivery set for one broadcast. The sender always receives its own packet
// (its table update is internal); every other agent receives it with
// probability 1 - loss_probability. With loss 0 the rng is not consumed, so
// lossless runs do not depend on the channel stream at all.
std::vector<AgentId> broadcast(const Packet& pkt, int n_agents, double loss_probability,
                               std::mt19937_64& rng);

}  // namespace slotswarm
