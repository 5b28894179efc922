#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace slotswarm {

// 1-based agent identifier. Ids are assigned once at scenario creation and
// kept for the whole run.
using AgentId = int;

// Raised when a run/campaign configuration violates a precondition.
class config_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Raised on malformed protocol input (e.g. a packet from an unknown sender).
class protocol_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class io_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Two agents at zero (estimated) separation. The task has already failed at
// this point, so computations that divide by the pair distance throw this.
class collision_error : public std::runtime_error {
  public:
    collision_error(const std::string& msg, AgentId a = 0, AgentId b = 0)
        : std::runtime_error(msg), first(a), second(b) {}
    AgentId first;
    AgentId second;
};

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    bool operator==(const Vec3&) const = default;
};

inline Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator*(const Vec3& a, double s) { return {a.x * s, a.y * s, a.z * s}; }
inline Vec3 operator*(double s, const Vec3& a) { return a * s; }
inline Vec3& operator+=(Vec3& a, const Vec3& b) { a = a + b; return a; }

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

inline bool is_finite(const Vec3& a) {
    return std::isfinite(a.x) && std::isfinite(a.y) && std::isfinite(a.z);
}

inline double euclidean_distance(const Vec3& a, const Vec3& b) { return norm(a - b); }

// v_j - v_k: how fast and in which direction j moves relative to k.
inline Vec3 relative_velocity(const Vec3& v_j, const Vec3& v_k) { return v_j - v_k; }

struct KinematicState {
    Vec3 position;  // [m]
    Vec3 velocity;  // [m/s]

    bool operator==(const KinematicState&) const = default;
};

// Every protocol tunable in one place. Defaults match the reference setup.
struct ProtocolParams {
    double slot_len = 0.010;       // time slot length [s]
    double epsilon = 0.5;          // minimum relative priority gap for a strict win
    double r_min = 0.3;            // arrival radius around the target [m]
    double c_const = 1.0;          // nonzero "still en route" transmission parameter
    double collision_dist = 0.2;   // distance below which two agents collide [m]

    void validate() const;         // throws config_error naming the bad field
};

// splitmix64: cheap deterministic seed derivation for per-run substreams.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace slotswarm
