#include "slotswarm/core.hpp"

namespace slotswarm {

void ProtocolParams::validate() const {
    if (!(slot_len > 0.0) || !std::isfinite(slot_len)) {
        throw config_error("slot_len must be a positive number of seconds");
    }
    if (!(epsilon >= 0.0) || !std::isfinite(epsilon)) {
        throw config_error("epsilon must be >= 0");
    }
    if (!(r_min > 0.0) || !std::isfinite(r_min)) {
        throw config_error("r_min must be > 0");
    }
    if (c_const == 0.0 || !std::isfinite(c_const)) {
        throw config_error("c_const must be a nonzero finite constant");
    }
    if (!(collision_dist > 0.0) || !std::isfinite(collision_dist)) {
        throw config_error("collision_dist must be > 0");
    }
}

}  // namespace slotswarm
