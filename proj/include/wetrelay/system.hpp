#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace wet {

// Scenario description for the three-phase harvest-then-forward protocol.
// Phase 1 (length 1-theta): source radiates p_s_e, relay harvests.
// Phase 2 (length theta/2): source sends data at p_s_i.
// Phase 3 (length theta/2): relay decodes and forwards.
// Noise variances are fixed by the model: zero during harvesting, unit
// variance at the relay and destination decoders. They are not parameters.
struct SystemParams {
    double p_s_e = 0.0;      // source power, energy phase [W]
    double p_s_i = 0.0;      // source power, information phase [W]
    double p_r_i = 0.0;      // relay transmit power, non-adaptive schemes [W]
    double p_proc = 0.2;     // relay processing power [W]
    double p_active = 0.8;   // relay bias power while transmitting [W]
    double nu = 2.0;         // PA inefficiency slope, >= 1
    double eta = 1.0;        // harvesting efficiency, (0,1]
    double rate_nats = 0.0;  // codeword rate R [nats per channel use]
    double theta = 0.5;      // information fraction, (0,1)
    double lambda_sr = 1.0;  // mean source-relay channel gain
    double lambda_rd = 1.0;  // mean relay-destination channel gain
    int n_relays = 1;
    double p_max = 0.0;      // expected source energy budget [W], 0 = unset
    double e_proc = 0.0;     // fixed activation energy for dynamic time
                             // sharing, a direct input (not (theta/2)p_proc
                             // because theta is per-block there)

    // Affine consumption model: power drawn while the relay forwards at p_r_i.
    double p_cons() const { return p_active + nu * p_r_i; }

    // SNR threshold: succeeds iff (theta/2) ln(1 + gamma_eff) >= R.
    double gamma_threshold() const { return std::expm1(2.0 * rate_nats / theta); }

    void validate() const {
        if (!(p_s_e >= 0) || !(p_s_i >= 0) || !(p_r_i >= 0) || !(p_proc >= 0) ||
            !(p_active >= 0))
            throw std::invalid_argument("SystemParams: powers must be >= 0");
        if (!(nu >= 1.0)) throw std::invalid_argument("SystemParams: nu must be >= 1");
        if (!(eta > 0.0 && eta <= 1.0))
            throw std::invalid_argument("SystemParams: eta must be in (0,1]");
        if (!(theta > 0.0 && theta < 1.0))
            throw std::invalid_argument("SystemParams: theta must be in (0,1)");
        if (!(lambda_sr > 0.0) || !(lambda_rd > 0.0))
            throw std::invalid_argument("SystemParams: lambda_sr, lambda_rd must be > 0");
        if (!(rate_nats > 0.0))
            throw std::invalid_argument("SystemParams: rate_nats must be > 0");
        if (n_relays < 1)
            throw std::invalid_argument("SystemParams: n_relays must be >= 1");
    }
};

// Constants of the adaptive-relay-power analysis. With c = p_proc + p_active:
//   alpha1 = c * theta / (2(1-theta))      activation threshold scale
//   alpha2 = gamma                         rate threshold
//   alpha3 = gamma * nu * theta/(2(1-theta))
struct AdaptiveConstants {
    double alpha1, alpha2, alpha3;
};

inline AdaptiveConstants adaptive_constants(const SystemParams& p) {
    const double half = p.theta / (2.0 * (1.0 - p.theta));
    const double g = p.gamma_threshold();
    return {(p.p_proc + p.p_active) * half, g, g * p.nu * half};
}

// Relay placement on the source-destination segment. delta = d_sr / d_rd.
// The prefactor alpha_pl follows the midpoint normalization
// alpha_pl * d_total^-beta_pl = 2^-beta_pl, so delta = 1 gives unit mean
// gains on both hops.
struct GeometryParams {
    double d_total = 1.0;
    double delta = 1.0;
    double alpha_pl = 0.0;   // 0 = derive from the midpoint normalization
    double beta_pl = 2.0;

    double resolved_alpha() const {
        if (alpha_pl > 0.0) return alpha_pl;
        return std::pow(d_total / 2.0, beta_pl);
    }
    double d_sr() const { return d_total * delta / (1.0 + delta); }
    double d_rd() const { return d_total / (1.0 + delta); }

    void validate() const {
        if (!(d_total > 0.0)) throw std::invalid_argument("GeometryParams: d_total must be > 0");
        if (!(delta > 0.0)) throw std::invalid_argument("GeometryParams: delta must be > 0");
        if (!(beta_pl >= 1.0)) throw std::invalid_argument("GeometryParams: beta_pl must be >= 1");
    }
};

// Mean channel gain under the power-law pathloss model.
inline double expected_gain(double distance, double alpha_pl, double beta_pl) {
    if (!(distance > 0.0)) throw std::domain_error("expected_gain: distance must be > 0");
    return alpha_pl * std::pow(distance, -beta_pl);
}

// Applies the geometry to a parameter set, overwriting both mean gains.
inline SystemParams with_geometry(SystemParams p, const GeometryParams& geo) {
    geo.validate();
    const double a = geo.resolved_alpha();
    p.lambda_sr = expected_gain(geo.d_sr(), a, geo.beta_pl);
    p.lambda_rd = expected_gain(geo.d_rd(), a, geo.beta_pl);
    return p;
}

// One block-fading realization; entry i belongs to relay i.
struct ChannelDraw {
    std::vector<double> g_sr;
    std::vector<double> g_rd;
};

} // namespace wet
