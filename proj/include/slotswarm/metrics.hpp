#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "slotswarm/core.hpp"

namespace slotswarm {

enum class RunOutcome { completed, collided, timeout };

std::string to_string(RunOutcome outcome);

struct EfficiencyEntry {
    AgentId id = 0;
    double efficiency = 0.0;  // chord length / path length, in (0, 1]
};

// Per-run result row. Collided runs keep their outcome and seed but are
// excluded from every aggregate.
struct RunRecord {
    std::string cell;      // scenario descriptor, e.g. "dtsa-n12-m2-ts10"
    std::string protocol;  // "tdma" | "dtsa"
    int n_agents = 0;
    int n_moving = 0;
    double t_s_ms = 0.0;
    double epsilon = 0.0;
    double r_min = 0.0;
    std::uint64_t seed = 0;
    RunOutcome outcome = RunOutcome::timeout;
    double min_distance = 0.0;
    std::vector<EfficiencyEntry> trajectory_efficiency;  // movers only
    std::optional<long> completion_slots;
    std::string slot_log_path;  // empty for in-memory runs
};

// Minimum over all slots and unordered pairs of true positions.
// positions[slot][agent].
double min_distance(const std::vector<std::vector<Vec3>>& positions);

// Straight-line distance over actual path length. Hovering agents (zero path)
// have no defined value.
std::optional<double> trajectory_efficiency(const std::vector<Vec3>& path, const Vec3& start,
                                            const Vec3& target);

// Slot at which the whole task is done: the latest first-arrival among the
// movers. Empty if any mover never arrived.
std::optional<long> completion_time(const std::vector<std::optional<long>>& mover_reach_slots);

inline double slots_to_seconds(long slots, double slot_len) { return slots * slot_len; }

struct Aggregate {
    double mean = 0.0;
    double min = 0.0;
    double max = 0.0;
    int count = 0;
};

// One summary row per (protocol, scenario) cell.
struct CampaignSummary {
    std::string cell;
    std::string protocol;
    int n_agents = 0;
    int n_moving = 0;
    double t_s_ms = 0.0;
    double epsilon = 0.0;
    double r_min = 0.0;
    int runs = 0;
    int collisions = 0;
    int timeouts = 0;
    std::optional<Aggregate> min_distance;     // over non-collided runs
    std::optional<Aggregate> traj_efficiency;  // over movers of non-collided runs
    std::optional<Aggregate> completion_s;     // over completed runs
};

// Group records by cell (input order preserved) and aggregate the metrics of
// the non-collided runs; collision counts are carried separately.
std::vector<CampaignSummary> aggregate_campaign(const std::vector<RunRecord>& records);

std::string summary_csv_header();
std::string summary_csv_row(const CampaignSummary& summary);

}  // namespace slotswarm
