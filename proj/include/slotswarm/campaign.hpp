#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "slotswarm/metrics.hpp"
#include "slotswarm/simulation.hpp"

namespace slotswarm {

// Everything needed to reproduce a campaign: (config, seed) -> identical files.
struct CampaignConfig {
    Protocol protocol = Protocol::dtsa;
    Scenario scenario;
    ProtocolParams params;
    ControlParams control;
    int runs = 10;
    std::uint64_t seed = 1;
    double timeout_s = 60.0;
    double loss_probability = 0.0;
    std::filesystem::path out_dir = "out";

    void validate() const;  // throws config_error naming the offending field
    long timeout_slots() const;
};

std::string cell_name(const CampaignConfig& config);

// Seed of run k within a campaign. Depends only on (campaign seed, k), never
// on the protocol, so paired tdma/dtsa campaigns consume identical scenario
// randomness.
std::uint64_t run_seed(std::uint64_t campaign_seed, int run_index);

struct CampaignResult {
    CampaignSummary summary;
    std::vector<RunRecord> records;
};

// Run the configured number of seeded simulations without touching the
// filesystem. Campaign execution is sequential and deterministic.
CampaignResult run_campaign_in_memory(const CampaignConfig& config);

// Same, plus file emission:
//   <out>/<cell>/run-<k>/trajectory.csv
//   <out>/<cell>/run-<k>/slots.jsonl
//   <out>/summary.csv        (single row)
//   <out>/config.ini         (effective configuration)
CampaignResult run_campaign(const CampaignConfig& config);

// Sweep axes. Moving counts are specs ("2", "half", "all") resolved per N.
struct SweepGrid {
    std::vector<Protocol> protocols;
    std::vector<int> agents;
    std::vector<std::string> moving;
    std::vector<double> slot_ms;
};

// "half" rounds N/2 up to a whole number of antipodal pairs.
int resolve_moving(const std::string& spec, int n_agents);

// One campaign per grid cell (paired seeds across protocols), one combined
// summary.csv under base.out_dir.
std::vector<CampaignResult> sweep(const CampaignConfig& base, const SweepGrid& grid);

// Writers shared by the campaign runner and the CLI.
std::string trajectory_csv(const SimResult& result);
void write_text_file(const std::filesystem::path& path, const std::string& content);

}  // namespace slotswarm
