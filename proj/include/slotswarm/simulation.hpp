#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "slotswarm/channel.hpp"
#include "slotswarm/dtsa.hpp"
#include "slotswarm/dynamics.hpp"
#include "slotswarm/metrics.hpp"

namespace slotswarm {

enum class Protocol { tdma, dtsa };

std::string to_string(Protocol protocol);
Protocol protocol_from_string(const std::string& name);  // throws config_error

// Snapshot handed to the observer once per slot, after the slot fully
// resolved. `table`/`counters` are the canonical local view (agent 1's).
struct SlotObservation {
    int slot = 0;
    const PeerTable& table;
    const CounterTable& counters;
    const std::vector<AgentBody>& bodies;   // state at the end of the slot
    std::optional<AgentId> sender;          // who transmitted in this slot
    const SenderDecision& next_decision;    // selection for the next slot
};

struct SimOptions {
    std::uint64_t seed = 1;
    double loss_probability = 0.0;
    long max_slots = 6000;
    bool stop_on_completion = true;   // false: keep slots running (diagnostics)
    bool verify_consensus = false;    // per-agent tables + unanimity counting
    std::function<void(const SlotObservation&)> observer;
};

struct AgentSample {
    Vec3 position;
    Vec3 velocity;
    bool moving = false;
    bool reached = false;

    bool operator==(const AgentSample&) const = default;
};

struct SimResult {
    RunOutcome outcome = RunOutcome::timeout;
    std::optional<long> completion_slots;
    long slots_run = 0;
    double min_distance = 0.0;
    std::vector<std::vector<AgentSample>> trajectory;  // [slot][agent], state at slot start
    SlotLog log;
    std::vector<Vec3> start_positions;
    std::vector<AgentId> mover_ids;
    std::vector<AgentBody> final_bodies;
    std::optional<std::pair<AgentId, AgentId>> collision_pair;
    int consensus_divergences = 0;  // populated only in verify mode
};

// Slot-synchronous run of one scenario under one scheduler. Lossless runs use
// a single canonical peer table (provably identical to every agent's own);
// lossy or verifying runs keep one table per agent and let each agent act on
// its own view.
SimResult run_simulation(const Scenario& scenario, Protocol protocol,
                         const ProtocolParams& params, const SimOptions& opts,
                         const ControlParams& ctrl = {});

}  // namespace slotswarm
