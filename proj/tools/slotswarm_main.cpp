#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "slotswarm/campaign.hpp"

namespace {

struct CliOptions {
    std::string protocol = "dtsa";
    int agents = 12;
    std::string moving = "all";
    std::string formation = "circle";
    double radius = 1.25;
    double radius_y = 0.0;  // 0: same as --radius
    double slot_ms = 10.0;
    double epsilon = 0.5;
    double rmin = 0.3;
    double c_const = 1.0;
    double collision_dist = 0.2;
    double loss = 0.0;
    int runs = 10;
    std::uint64_t seed = 1;
    double timeout_s = 60.0;
    std::string out = "out";
};

void add_common_options(CLI::App& cmd, CliOptions& opt) {
    cmd.set_config("--config", "", "key = value file; explicit flags win");
    cmd.add_option("--formation", opt.formation, "circle | ellipse")->capture_default_str();
    cmd.add_option("--radius", opt.radius, "formation radius (x semi-axis) [m]")
        ->capture_default_str();
    cmd.add_option("--radius-y", opt.radius_y, "ellipse y semi-axis [m] (default: --radius)");
    cmd.add_option("--epsilon", opt.epsilon, "priority comparison threshold")
        ->capture_default_str();
    cmd.add_option("--rmin", opt.rmin, "arrival radius [m]")->capture_default_str();
    cmd.add_option("--c-const", opt.c_const, "nonzero en-route transmission parameter")
        ->capture_default_str();
    cmd.add_option("--collision-dist", opt.collision_dist, "collision threshold [m]")
        ->capture_default_str();
    cmd.add_option("--loss", opt.loss, "packet loss probability in [0,1)")
        ->capture_default_str();
    cmd.add_option("--runs", opt.runs, "Monte Carlo runs per cell")->capture_default_str();
    cmd.add_option("--seed", opt.seed, "campaign seed")->capture_default_str();
    cmd.add_option("--timeout-s", opt.timeout_s, "per-run slot budget [s]")
        ->capture_default_str();
    cmd.add_option("--out", opt.out, "output directory")->capture_default_str();
}

slotswarm::CampaignConfig base_config(const CliOptions& opt) {
    slotswarm::CampaignConfig config;
    config.scenario.formation = [&] {
        if (opt.formation == "circle") return slotswarm::Formation::circle;
        if (opt.formation == "ellipse") return slotswarm::Formation::ellipse;
        throw slotswarm::config_error("formation must be circle or ellipse, got '" +
                                      opt.formation + "'");
    }();
    config.scenario.radius_x = opt.radius;
    config.scenario.radius_y = opt.radius_y > 0.0 ? opt.radius_y : opt.radius;
    config.params.slot_len = opt.slot_ms / 1000.0;
    config.params.epsilon = opt.epsilon;
    config.params.r_min = opt.rmin;
    config.params.c_const = opt.c_const;
    config.params.collision_dist = opt.collision_dist;
    config.loss_probability = opt.loss;
    config.runs = opt.runs;
    config.seed = opt.seed;
    config.timeout_s = opt.timeout_s;
    config.out_dir = opt.out;
    return config;
}

void print_summary(const slotswarm::CampaignSummary& summary) {
    std::cout << slotswarm::summary_csv_row(summary) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"slot-synchronous swarm communication simulator (TDMA / DTSA)"};
    app.require_subcommand(1);

    CliOptions run_opt;
    CLI::App* run_cmd = app.add_subcommand("run", "run one campaign cell and emit files");
    run_cmd->add_option("--protocol", run_opt.protocol, "tdma | dtsa")->capture_default_str();
    run_cmd->add_option("--agents", run_opt.agents, "swarm size N")->capture_default_str();
    run_cmd->add_option("--moving", run_opt.moving, "mover count, 'half' or 'all'")
        ->capture_default_str();
    run_cmd->add_option("--slot-ms", run_opt.slot_ms, "slot length [ms]")->capture_default_str();
    add_common_options(*run_cmd, run_opt);

    CliOptions sweep_opt;
    std::vector<std::string> sweep_protocols{"tdma", "dtsa"};
    std::vector<int> sweep_agents{12};
    std::vector<std::string> sweep_moving{"2", "half", "all"};
    std::vector<double> sweep_slot_ms{10.0};
    CLI::App* sweep_cmd =
        app.add_subcommand("sweep", "run a protocol x movers x agents x slot grid");
    sweep_cmd->add_option("--protocol", sweep_protocols, "comma list: tdma,dtsa")
        ->delimiter(',')
        ->capture_default_str();
    sweep_cmd->add_option("--agents", sweep_agents, "comma list of swarm sizes")
        ->delimiter(',')
        ->capture_default_str();
    sweep_cmd->add_option("--moving", sweep_moving, "comma list of counts, 'half', 'all'")
        ->delimiter(',')
        ->capture_default_str();
    sweep_cmd->add_option("--slot-ms", sweep_slot_ms, "comma list of slot lengths [ms]")
        ->delimiter(',')
        ->capture_default_str();
    add_common_options(*sweep_cmd, sweep_opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (run_cmd->parsed()) {
            slotswarm::CampaignConfig config = base_config(run_opt);
            config.protocol = slotswarm::protocol_from_string(run_opt.protocol);
            config.scenario.n_agents = run_opt.agents;
            config.scenario.n_moving = slotswarm::resolve_moving(run_opt.moving, run_opt.agents);
            config.params.slot_len = run_opt.slot_ms / 1000.0;
            std::cout << slotswarm::summary_csv_header() << '\n';
            print_summary(slotswarm::run_campaign(config).summary);
        } else {
            slotswarm::CampaignConfig config = base_config(sweep_opt);
            slotswarm::SweepGrid grid;
            for (const auto& name : sweep_protocols) {
                grid.protocols.push_back(slotswarm::protocol_from_string(name));
            }
            grid.agents = sweep_agents;
            grid.moving = sweep_moving;
            grid.slot_ms = sweep_slot_ms;
            std::cout << slotswarm::summary_csv_header() << '\n';
            for (const auto& cell : slotswarm::sweep(config, grid)) {
                print_summary(cell.summary);
            }
        }
    } catch (const slotswarm::config_error& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const slotswarm::io_error& e) {
        std::cerr << "io error: " << e.what() << '\n';
        return 3;
    } catch (const std::filesystem::filesystem_error& e) {
        std::cerr << "io error: " << e.what() << '\n';
        return 3;
    }
    return 0;
}
