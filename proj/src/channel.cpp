#include "slotswarm/channel.hpp"

#include <sstream>

#include <json.hpp>

namespace slotswarm {

void SlotLog::append(int slot, std::optional<Packet> packet) {
    if (!records_.empty() && slot <= records_.back().slot) {
        throw protocol_error("slot log entries must have strictly increasing slot indices");
    }
    records_.push_back(SlotRecord{slot, std::move(packet)});
}

std::string SlotLog::to_jsonl() const {
    std::ostringstream out;
    for (const auto& rec : records_) {
        nlohmann::json line;
        line["slot"] = rec.slot;
        if (rec.packet) {
            const Packet& p = *rec.packet;
            line["sender"] = p.sender;
            line["position"] = {p.position.x, p.position.y, p.position.z};
            line["velocity"] = {p.velocity.x, p.velocity.y, p.velocity.z};
            line["c_r"] = p.c_r;
        } else {
            line["sender"] = nullptr;
        }
        out << line.dump() << '\n';
    }
    return out.str();
}

SlotLog SlotLog::from_jsonl(const std::string& text) {
    SlotLog log;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        nlohmann::json obj = nlohmann::json::parse(line);
        const int slot = obj.at("slot").get<int>();
        if (obj.at("sender").is_null()) {
            log.append(slot, std::nullopt);
            continue;
        }
        Packet p;
        p.sender = obj.at("sender").get<AgentId>();
        const auto& pos = obj.at("position");
        const auto& vel = obj.at("velocity");
        p.position = {pos.at(0).get<double>(), pos.at(1).get<double>(), pos.at(2).get<double>()};
        p.velocity = {vel.at(0).get<double>(), vel.at(1).get<double>(), vel.at(2).get<double>()};
        p.c_r = obj.at("c_r").get<double>();
        p.slot = slot;
        log.append(slot, p);
    }
    return log;
}

std::vector<AgentId> broadcast(const Packet& pkt, int n_agents, double loss_probability,
                               std::mt19937_64& rng) {
    if (!(loss_probability >= 0.0) || loss_probability >= 1.0) {
        throw config_error("loss_probability must lie in [0, 1)");
    }
    if (pkt.sender < 1 || pkt.sender > n_agents) {
        throw protocol_error("broadcast from unknown sender id " + std::to_string(pkt.sender));
    }

    std::vector<AgentId> delivered;
    delivered.reserve(static_cast<std::size_t>(n_agents));
    if (loss_probability == 0.0) {
        for (AgentId id = 1; id <= n_agents; ++id) delivered.push_back(id);
        return delivered;
    }

    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    for (AgentId id = 1; id <= n_agents; ++id) {
        if (id == pkt.sender) {
            delivered.push_back(id);  // own table update, not subject to loss
            continue;
        }
        if (uniform(rng) >= loss_probability) delivered.push_back(id);
    }
    return delivered;
}

}  // namespace slotswarm
