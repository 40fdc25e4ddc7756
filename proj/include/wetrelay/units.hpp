#pragma once

#include <cmath>
#include <numbers>

namespace wet {

// All internal computation uses linear watts and nats per channel use.
// dBm and bits per channel use are accepted at the boundary and converted
// here. With the slot length normalized to 1, energy and power coincide.

inline double dbm_to_watts(double x_dbm) {
    return std::pow(10.0, (x_dbm - 30.0) / 10.0);
}

inline double watts_to_dbm(double w) {
    return 10.0 * std::log10(w) + 30.0;
}

inline double bits_to_nats(double r_bits) {
    return r_bits * std::numbers::ln2;
}

inline double nats_to_bits(double r_nats) {
    return r_nats / std::numbers::ln2;
}

} // namespace wet
