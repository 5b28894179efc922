#pragma once

// Brute-force scalar reference for the priority computation, kept free of the
// library's vector types on purpose: plain doubles, its own dead reckoning,
// its own norms and angle. Tests compare the production path against this.

#include <cmath>
#include <vector>

namespace oracle {

struct Agent {
    double px = 0, py = 0, pz = 0;
    double vx = 0, vy = 0, vz = 0;
    int last_slot = 0;
    bool active = true;
};

inline std::vector<double> priorities(const std::vector<Agent>& agents, int current_slot,
                                      double ts) {
    const std::size_t n = agents.size();
    std::vector<double> ex(n), ey(n), ez(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double dt = (current_slot - agents[i].last_slot) * ts;
        ex[i] = agents[i].px + agents[i].vx * dt;
        ey[i] = agents[i].py + agents[i].vy * dt;
        ez[i] = agents[i].pz + agents[i].vz * dt;
    }

    std::vector<double> g(n, 0.0);
    const double pi = 3.14159265358979323846;
    for (std::size_t k = 0; k < n; ++k) {
        if (!agents[k].active) continue;
        const double speed_k = std::sqrt(agents[k].vx * agents[k].vx +
                                         agents[k].vy * agents[k].vy +
                                         agents[k].vz * agents[k].vz);
        if (speed_k == 0.0) continue;
        double sum = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == k) continue;
            const double dvx = agents[j].vx - agents[k].vx;
            const double dvy = agents[j].vy - agents[k].vy;
            const double dvz = agents[j].vz - agents[k].vz;
            const double vn = std::sqrt(dvx * dvx + dvy * dvy + dvz * dvz);
            if (vn == 0.0) continue;
            const double dpx = ex[k] - ex[j];
            const double dpy = ey[k] - ey[j];
            const double dpz = ez[k] - ez[j];
            const double pn = std::sqrt(dpx * dpx + dpy * dpy + dpz * dpz);
            double cos_a = (dvx * dpx + dvy * dpy + dvz * dpz) / (vn * pn);
            if (cos_a > 1.0) cos_a = 1.0;
            if (cos_a < -1.0) cos_a = -1.0;
            const double alpha = std::acos(cos_a);
            sum += (vn * ts / pn) * ((pi - alpha) / pi);
        }
        g[k] = sum;
    }
    return g;
}

}  // namespace oracle
