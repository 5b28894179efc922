#include "slotswarm/campaign.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace slotswarm {

namespace {

std::string format_g(double value) {
    std::ostringstream out;
    out << value;
    return out.str();
}

RunRecord make_record(const CampaignConfig& config, const SimResult& sim, std::uint64_t seed,
                      const std::string& cell) {
    RunRecord rec;
    rec.cell = cell;
    rec.protocol = to_string(config.protocol);
    rec.n_agents = config.scenario.n_agents;
    rec.n_moving = config.scenario.n_moving;
    rec.t_s_ms = config.params.slot_len * 1000.0;
    rec.epsilon = config.params.epsilon;
    rec.r_min = config.params.r_min;
    rec.seed = seed;
    rec.outcome = sim.outcome;
    rec.min_distance = sim.min_distance;
    rec.completion_slots = sim.completion_slots;
    for (std::size_t m = 0; m < sim.mover_ids.size(); ++m) {
        const AgentId id = sim.mover_ids[m];
        std::vector<Vec3> path;
        path.reserve(sim.trajectory.size());
        for (const auto& slot_samples : sim.trajectory) {
            path.push_back(slot_samples[static_cast<std::size_t>(id - 1)].position);
        }
        const auto& body = sim.final_bodies[static_cast<std::size_t>(id - 1)];
        if (auto eff = trajectory_efficiency(
                path, sim.start_positions[static_cast<std::size_t>(id - 1)], body.target)) {
            rec.trajectory_efficiency.push_back(EfficiencyEntry{id, *eff});
        }
    }
    return rec;
}

CampaignResult run_cell(const CampaignConfig& config, bool emit_files) {
    config.validate();
    const std::string cell = cell_name(config);

    CampaignResult result;
    for (int k = 0; k < config.runs; ++k) {
        const std::uint64_t seed = run_seed(config.seed, k);
        SimOptions opts;
        opts.seed = seed;
        opts.loss_probability = config.loss_probability;
        opts.max_slots = config.timeout_slots();
        SimResult sim = run_simulation(config.scenario, config.protocol, config.params, opts,
                                       config.control);
        RunRecord rec = make_record(config, sim, seed, cell);
        if (emit_files) {
            const auto run_dir = config.out_dir / cell / ("run-" + std::to_string(k));
            write_text_file(run_dir / "trajectory.csv", trajectory_csv(sim));
            write_text_file(run_dir / "slots.jsonl", sim.log.to_jsonl());
            rec.slot_log_path = (run_dir / "slots.jsonl").string();
        }
        result.records.push_back(std::move(rec));
    }
    result.summary = aggregate_campaign(result.records).front();
    return result;
}

std::string effective_config_ini(const CampaignConfig& config) {
    std::ostringstream out;
    out << "protocol = " << to_string(config.protocol) << '\n';
    out << "agents = " << config.scenario.n_agents << '\n';
    out << "moving = " << config.scenario.n_moving << '\n';
    out << "formation = "
        << (config.scenario.formation == Formation::circle ? "circle" : "ellipse") << '\n';
    out << "radius = " << format_g(config.scenario.radius_x) << '\n';
    out << "radius-y = " << format_g(config.scenario.radius_y) << '\n';
    out << "slot-ms = " << format_g(config.params.slot_len * 1000.0) << '\n';
    out << "epsilon = " << format_g(config.params.epsilon) << '\n';
    out << "rmin = " << format_g(config.params.r_min) << '\n';
    out << "c-const = " << format_g(config.params.c_const) << '\n';
    out << "collision-dist = " << format_g(config.params.collision_dist) << '\n';
    out << "loss = " << format_g(config.loss_probability) << '\n';
    out << "runs = " << config.runs << '\n';
    out << "seed = " << config.seed << '\n';
    out << "timeout-s = " << format_g(config.timeout_s) << '\n';
    out << "out = " << config.out_dir.string() << '\n';
    return out.str();
}

}  // namespace

void CampaignConfig::validate() const {
    params.validate();
    scenario.validate(params.collision_dist);
    if (runs < 1) throw config_error("runs must be >= 1");
    if (!(timeout_s > 0.0)) throw config_error("timeout_s must be > 0");
    if (!(loss_probability >= 0.0) || loss_probability >= 1.0) {
        throw config_error("loss_probability must lie in [0, 1)");
    }
}

long CampaignConfig::timeout_slots() const {
    return std::max(1L, static_cast<long>(std::ceil(timeout_s / params.slot_len)));
}

std::string cell_name(const CampaignConfig& config) {
    std::ostringstream out;
    out << to_string(config.protocol) << "-n" << config.scenario.n_agents << "-m"
        << config.scenario.n_moving << "-ts" << format_g(config.params.slot_len * 1000.0);
    return out.str();
}

std::uint64_t run_seed(std::uint64_t campaign_seed, int run_index) {
    return mix_seed(campaign_seed, static_cast<std::uint64_t>(run_index));
}

CampaignResult run_campaign_in_memory(const CampaignConfig& config) {
    return run_cell(config, false);
}

CampaignResult run_campaign(const CampaignConfig& config) {
    CampaignResult result = run_cell(config, true);
    std::ostringstream summary;
    summary << summary_csv_header() << '\n' << summary_csv_row(result.summary) << '\n';
    write_text_file(config.out_dir / "summary.csv", summary.str());
    write_text_file(config.out_dir / "config.ini", effective_config_ini(config));
    return result;
}

int resolve_moving(const std::string& spec, int n_agents) {
    if (spec == "all") return n_agents;
    if (spec == "half") {
        int half = (n_agents + 1) / 2;
        if (half % 2 != 0 && half != n_agents) ++half;  // whole antipodal pairs
        return std::min(half, n_agents);
    }
    try {
        std::size_t pos = 0;
        const int value = std::stoi(spec, &pos);
        if (pos != spec.size()) throw std::invalid_argument(spec);
        return value;
    } catch (const std::exception&) {
        throw config_error("moving must be an integer, 'half' or 'all': got '" + spec + "'");
    }
}

std::vector<CampaignResult> sweep(const CampaignConfig& base, const SweepGrid& grid) {
    if (grid.protocols.empty() || grid.agents.empty() || grid.moving.empty() ||
        grid.slot_ms.empty()) {
        throw config_error("sweep grid must name at least one value per axis");
    }

    std::vector<CampaignResult> results;
    std::ostringstream summary;
    summary << summary_csv_header() << '\n';
    for (int n : grid.agents) {
        for (const std::string& moving : grid.moving) {
            for (double slot_ms : grid.slot_ms) {
                for (Protocol protocol : grid.protocols) {
                    CampaignConfig config = base;
                    config.protocol = protocol;
                    config.scenario.n_agents = n;
                    config.scenario.n_moving = resolve_moving(moving, n);
                    config.params.slot_len = slot_ms / 1000.0;
                    CampaignResult cell = run_cell(config, true);
                    summary << summary_csv_row(cell.summary) << '\n';
                    results.push_back(std::move(cell));
                }
            }
        }
    }
    write_text_file(base.out_dir / "summary.csv", summary.str());
    return results;
}

std::string trajectory_csv(const SimResult& result) {
    std::ostringstream out;
    out << "slot,id,x,y,z,vx,vy,vz,moving,reached\n";
    out << std::setprecision(17);
    for (std::size_t slot = 0; slot < result.trajectory.size(); ++slot) {
        const auto& samples = result.trajectory[slot];
        for (std::size_t i = 0; i < samples.size(); ++i) {
            const AgentSample& s = samples[i];
            out << slot << ',' << (i + 1) << ',' << s.position.x << ',' << s.position.y << ','
                << s.position.z << ',' << s.velocity.x << ',' << s.velocity.y << ','
                << s.velocity.z << ',' << (s.moving ? 1 : 0) << ',' << (s.reached ? 1 : 0)
                << '\n';
        }
    }
    return out.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
    std::error_code ec;
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path(), ec);
        if (ec) throw io_error("cannot create directory " + path.parent_path().string() + ": " +
                               ec.message());
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("cannot open " + path.string() + " for writing");
    out << content;
    if (!out) throw io_error("failed while writing " + path.string());
}

}  // namespace slotswarm
