#include "slotswarm/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace slotswarm {

std::string to_string(RunOutcome outcome) {
    switch (outcome) {
        case RunOutcome::completed: return "completed";
        case RunOutcome::collided: return "collided";
        case RunOutcome::timeout: return "timeout";
    }
    return "unknown";
}

double min_distance(const std::vector<std::vector<Vec3>>& positions) {
    if (positions.empty() || positions.front().size() < 2) {
        throw config_error("min_distance needs at least one slot of at least two agents");
    }
    double best = std::numeric_limits<double>::infinity();
    for (const auto& slot_positions : positions) {
        const std::size_t n = slot_positions.size();
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                best = std::min(best, euclidean_distance(slot_positions[i], slot_positions[j]));
            }
        }
    }
    return best;
}

std::optional<double> trajectory_efficiency(const std::vector<Vec3>& path, const Vec3& start,
                                            const Vec3& target) {
    double travelled = 0.0;
    for (std::size_t i = 1; i < path.size(); ++i) {
        travelled += euclidean_distance(path[i], path[i - 1]);
    }
    if (travelled == 0.0) return std::nullopt;  // hovering agents have no defined value
    return euclidean_distance(target, start) / travelled;
}

std::optional<long> completion_time(const std::vector<std::optional<long>>& mover_reach_slots) {
    long latest = 0;
    for (const auto& slot : mover_reach_slots) {
        if (!slot) return std::nullopt;
        latest = std::max(latest, *slot);
    }
    return latest;
}

namespace {

class Accumulator {
  public:
    void add(double value) {
        sum_ += value;
        min_ = count_ == 0 ? value : std::min(min_, value);
        max_ = count_ == 0 ? value : std::max(max_, value);
        ++count_;
    }
    std::optional<Aggregate> result() const {
        if (count_ == 0) return std::nullopt;
        return Aggregate{sum_ / count_, min_, max_, count_};
    }

  private:
    double sum_ = 0.0;
    double min_ = 0.0;
    double max_ = 0.0;
    int count_ = 0;
};

std::string format_double(double value) {
    std::ostringstream out;
    out.precision(10);
    out << value;
    return out.str();
}

void append_aggregate(std::ostringstream& out, const std::optional<Aggregate>& agg) {
    if (agg) {
        out << ',' << format_double(agg->mean) << ',' << format_double(agg->min) << ','
            << format_double(agg->max);
    } else {
        out << ",,,";
    }
}

}  // namespace

std::vector<CampaignSummary> aggregate_campaign(const std::vector<RunRecord>& records) {
    if (records.empty()) throw config_error("aggregate_campaign needs at least one record");

    std::vector<std::string> order;
    for (const auto& rec : records) {
        if (std::find(order.begin(), order.end(), rec.cell) == order.end()) {
            order.push_back(rec.cell);
        }
    }

    std::vector<CampaignSummary> summaries;
    for (const auto& cell : order) {
        CampaignSummary summary;
        Accumulator dist, eff, completion;
        for (const auto& rec : records) {
            if (rec.cell != cell) continue;
            if (summary.runs == 0) {
                summary.cell = rec.cell;
                summary.protocol = rec.protocol;
                summary.n_agents = rec.n_agents;
                summary.n_moving = rec.n_moving;
                summary.t_s_ms = rec.t_s_ms;
                summary.epsilon = rec.epsilon;
                summary.r_min = rec.r_min;
            }
            ++summary.runs;
            if (rec.outcome == RunOutcome::collided) {
                ++summary.collisions;
                continue;  // collided runs contribute no metrics
            }
            if (rec.outcome == RunOutcome::timeout) ++summary.timeouts;
            dist.add(rec.min_distance);
            for (const auto& entry : rec.trajectory_efficiency) eff.add(entry.efficiency);
            if (rec.completion_slots) {
                completion.add(slots_to_seconds(*rec.completion_slots, rec.t_s_ms / 1000.0));
            }
        }
        summary.min_distance = dist.result();
        summary.traj_efficiency = eff.result();
        summary.completion_s = completion.result();
        summaries.push_back(summary);
    }
    return summaries;
}

std::string summary_csv_header() {
    return "protocol,n_agents,n_moving,t_s_ms,epsilon,r_min,runs,collisions,"
           "min_distance_mean,min_distance_min,min_distance_max,"
           "traj_eff_mean,traj_eff_min,traj_eff_max,"
           "completion_s_mean,completion_s_min,completion_s_max";
}

std::string summary_csv_row(const CampaignSummary& summary) {
    std::ostringstream out;
    out << summary.protocol << ',' << summary.n_agents << ',' << summary.n_moving << ','
        << format_double(summary.t_s_ms) << ',' << format_double(summary.epsilon) << ','
        << format_double(summary.r_min) << ',' << summary.runs << ',' << summary.collisions;
    append_aggregate(out, summary.min_distance);
    append_aggregate(out, summary.traj_efficiency);
    append_aggregate(out, summary.completion_s);
    return out.str();
}

}  // namespace slotswarm
