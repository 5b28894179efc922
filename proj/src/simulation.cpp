#include "slotswarm/simulation.hpp"

#include <algorithm>
#include <limits>

#include "slotswarm/tdma.hpp"

namespace slotswarm {

std::string to_string(Protocol protocol) {
    return protocol == Protocol::tdma ? "tdma" : "dtsa";
}

Protocol protocol_from_string(const std::string& name) {
    if (name == "tdma") return Protocol::tdma;
    if (name == "dtsa") return Protocol::dtsa;
    throw config_error("unknown protocol '" + name + "' (expected tdma or dtsa)");
}

namespace {

// One agent's complete local state: its table, its counters, and the sender
// it expects for the upcoming slot. On a lossless channel every agent's view
// is identical, so the simulation then keeps a single canonical instance.
struct AgentView {
    PeerTable table;
    CounterTable counters;
    SenderDecision decision;
};

// Dynamic-scheduler selection as computed by one agent for `slot`.
//
// The shared initial snapshot carries zero velocities, so pure priority
// selection starts out all-zero and slot 0 is idle. Liveness comes from a
// first-announcement phase: from slot 1 on, as long as some potential sender
// has never been heard from, the stalest such agent (smallest id on ties)
// gets the slot. Every input to this rule is common knowledge, so all agents
// still agree on the outcome.
SenderDecision choose_sender(const PeerTable& table, const CounterTable& counters, int slot,
                             const ProtocolParams& params) {
    if (slot >= 1) {
        AgentId pick = 0;
        std::int64_t pick_h = -1;
        bool tie = false;
        for (AgentId id = 1; id <= table.size(); ++id) {
            const PeerEstimate& est = table.entry(id);
            if (!est.active || est.has_packet) continue;
            const std::int64_t h = counters.of(id);
            if (h > pick_h) {
                pick = id;
                pick_h = h;
                tie = false;
            } else if (h == pick_h) {
                tie = true;  // keep the earlier (smaller) id
            }
        }
        if (pick != 0) {
            return SenderDecision{pick, tie ? SelectionReason::id_tiebreak
                                            : SelectionReason::counter_tiebreak};
        }
    }
    if (table.size() < 2) return SenderDecision{std::nullopt, SelectionReason::idle};
    return select_next_sender(priority_values(table, slot, params), counters, table.active_ids(),
                              params.epsilon);
}

std::vector<AgentSample> sample_bodies(const std::vector<AgentBody>& bodies,
                                       const std::vector<bool>& reached) {
    std::vector<AgentSample> samples;
    samples.reserve(bodies.size());
    for (std::size_t i = 0; i < bodies.size(); ++i) {
        samples.push_back(AgentSample{bodies[i].state.position, bodies[i].state.velocity,
                                      bodies[i].moving, reached[i]});
    }
    return samples;
}

double pairwise_min_distance(const std::vector<AgentBody>& bodies) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < bodies.size(); ++i) {
        for (std::size_t j = i + 1; j < bodies.size(); ++j) {
            best = std::min(best, euclidean_distance(bodies[i].state.position,
                                                     bodies[j].state.position));
        }
    }
    return best;
}

}  // namespace

SimResult run_simulation(const Scenario& scenario, Protocol protocol,
                         const ProtocolParams& params, const SimOptions& opts,
                         const ControlParams& ctrl) {
    params.validate();
    if (!(opts.loss_probability >= 0.0) || opts.loss_probability >= 1.0) {
        throw config_error("loss_probability must lie in [0, 1)");
    }
    if (opts.max_slots < 1) throw config_error("max_slots must be >= 1");

    std::vector<AgentBody> bodies = generate_scenario(scenario, opts.seed, params.collision_dist);
    const int n = scenario.n_agents;

    SimResult result;
    result.start_positions.reserve(static_cast<std::size_t>(n));
    for (const auto& body : bodies) result.start_positions.push_back(body.state.position);
    for (const auto& body : bodies) {
        if (body.moving) result.mover_ids.push_back(body.id);
    }

    // Lossless runs keep one canonical view; lossy or verifying runs give
    // every agent its own and let each act on what it actually received.
    const bool per_agent = opts.verify_consensus || opts.loss_probability > 0.0;
    std::vector<AgentView> views(per_agent ? static_cast<std::size_t>(n) : 1);
    const PeerTable seeded = PeerTable::seeded(result.start_positions);
    for (auto& view : views) {
        view.table = seeded;
        view.counters = CounterTable::zeros(n);
    }
    if (protocol == Protocol::dtsa) {
        for (auto& view : views) {
            view.decision = choose_sender(view.table, view.counters, 0, params);
        }
        for (const auto& view : views) {
            if (!(view.decision == views.front().decision)) ++result.consensus_divergences;
        }
    }

    std::mt19937_64 channel_rng(mix_seed(opts.seed, 0x6368616eULL));
    const TdmaSchedule schedule{n};

    std::vector<bool> reached(static_cast<std::size_t>(n), false);
    std::vector<std::optional<long>> reach_slot(result.mover_ids.size());
    double min_dist = std::numeric_limits<double>::infinity();
    bool done = false;

    long slot = 0;
    for (; slot < opts.max_slots && !done; ++slot) {
        const int slot_i = static_cast<int>(slot);

        // State at slot start.
        for (std::size_t m = 0; m < result.mover_ids.size(); ++m) {
            const auto& body = bodies[static_cast<std::size_t>(result.mover_ids[m] - 1)];
            if (!reach_slot[m] && reached_target(body, params.r_min)) {
                reach_slot[m] = slot;
                reached[static_cast<std::size_t>(body.id - 1)] = true;
            }
        }
        result.trajectory.push_back(sample_bodies(bodies, reached));
        if (n >= 2) min_dist = std::min(min_dist, pairwise_min_distance(bodies));

        if (!result.completion_slots) {
            if (auto completion = completion_time(reach_slot)) {
                result.completion_slots = completion;
                result.outcome = RunOutcome::completed;
                if (opts.stop_on_completion) {
                    ++slot;
                    break;
                }
            }
        }

        if (auto pair = check_collision(bodies, params.collision_dist)) {
            result.outcome = RunOutcome::collided;
            result.collision_pair = pair;
            ++slot;
            break;
        }

        // Transmission. Under the dynamic scheduler each agent transmits only
        // when its own view selected it; with loss, views can disagree, and
        // two simultaneous transmissions jam the slot (nothing is delivered).
        std::optional<AgentId> sender;
        std::vector<AgentId> jammed;
        if (protocol == Protocol::tdma) {
            sender = tdma_sender_for_slot(schedule, slot);
        } else if (per_agent) {
            std::vector<AgentId> self_selected;
            for (int a = 0; a < n; ++a) {
                const auto& decision = views[static_cast<std::size_t>(a)].decision;
                if (decision.next_sender && *decision.next_sender == a + 1) {
                    self_selected.push_back(a + 1);
                }
            }
            if (self_selected.size() == 1) {
                sender = self_selected.front();
            } else if (self_selected.size() > 1) {
                jammed = self_selected;
            }
        } else {
            sender = views.front().decision.next_sender;
        }

        auto make_packet = [&](AgentId id) {
            const AgentBody& body = bodies[static_cast<std::size_t>(id - 1)];
            return Packet{id, body.state.position, body.state.velocity,
                          transmission_param(position_error(body.state.position, body.target),
                                             params),
                          slot_i};
        };

        if (sender) {
            const Packet pkt = make_packet(*sender);
            const std::vector<AgentId> delivered =
                broadcast(pkt, n, opts.loss_probability, channel_rng);
            if (per_agent) {
                for (AgentId id : delivered) {
                    views[static_cast<std::size_t>(id - 1)].table.apply_packet(pkt, slot_i);
                }
            } else {
                views.front().table.apply_packet(pkt, slot_i);
            }
            result.log.append(slot_i, pkt);
            if (per_agent) {
                for (int a = 0; a < n; ++a) {
                    auto& view = views[static_cast<std::size_t>(a)];
                    const bool got_it =
                        std::find(delivered.begin(), delivered.end(), a + 1) != delivered.end();
                    view.counters = update_counters(view.counters,
                                                    got_it ? sender : std::nullopt);
                }
            } else {
                views.front().counters = update_counters(views.front().counters, sender);
            }
        } else {
            // Jamming transmitters still know what they sent.
            for (AgentId id : jammed) {
                views[static_cast<std::size_t>(id - 1)].table.apply_packet(make_packet(id),
                                                                           slot_i);
            }
            result.log.append(slot_i, std::nullopt);
            for (std::size_t v = 0; v < views.size(); ++v) {
                const bool transmitted =
                    std::find(jammed.begin(), jammed.end(), static_cast<AgentId>(v + 1)) !=
                    jammed.end();
                views[v].counters = update_counters(
                    views[v].counters,
                    transmitted ? std::optional<AgentId>(static_cast<AgentId>(v + 1))
                                : std::nullopt);
            }
        }

        // Motion: every mover steps on the estimates in its own view.
        std::vector<AgentBody> stepped;
        stepped.reserve(bodies.size());
        for (const auto& body : bodies) {
            const PeerTable& table =
                per_agent ? views[static_cast<std::size_t>(body.id - 1)].table
                          : views.front().table;
            stepped.push_back(step_agent(body, table, slot_i, params.slot_len, ctrl));
        }
        bodies = std::move(stepped);
        for (auto& body : bodies) {
            if (body.moving && reached_target(body, params.r_min)) {
                body.moving = false;
                body.state.velocity = Vec3{};
            }
        }

        // Select the sender of the next slot from what everyone now knows.
        if (protocol == Protocol::dtsa) {
            try {
                for (auto& view : views) {
                    view.decision = choose_sender(view.table, view.counters, slot_i + 1, params);
                }
            } catch (const collision_error& err) {
                result.outcome = RunOutcome::collided;
                if (err.first != 0) result.collision_pair = std::make_pair(err.first, err.second);
                ++slot;
                break;
            }
            if (opts.verify_consensus) {
                for (const auto& view : views) {
                    if (!(view.decision == views.front().decision)) {
                        ++result.consensus_divergences;
                    }
                }
            }
        }

        if (opts.observer) {
            opts.observer(SlotObservation{slot_i, views.front().table, views.front().counters,
                                          bodies, sender, views.front().decision});
        }
    }

    result.slots_run = slot;
    result.min_distance = min_dist;
    result.final_bodies = bodies;
    return result;
}

}  // namespace slotswarm
