#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace uavdd {

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Rotary-wing propulsion constants. Weights are in newtons; w_total_n is the
/// loaded weight (airframe plus average package).
struct RotorParams {
    double w_total_n = 0.0;
    double package_weight_n = 0.0;
    double rho_air = 0.0;      // [kg/m^3]
    double r_rotor_m = 0.0;    // [m]
    double a_disc_m2 = 0.0;    // [m^2]
    double v0_mps = 0.0;       // mean induced velocity in hover [m/s]
    double u_tip_mps = 0.0;    // blade tip speed [m/s]
    double s_solidity = 0.0;
    double omega_rad_s = 0.0;  // blade angular velocity [rad/s]
    double k_corr = 0.0;       // induced-power correction factor
    double delta_drag = 0.0;   // profile drag coefficient
    double d0_ratio = 0.0;     // fuselage drag ratio
    double v_max_mps = 30.0;   // bracket for the optimal-speed search

    void validate() const;
};

/// Aggregate propulsion/service powers and cruise speeds. Either specified
/// directly or derived from RotorParams at load time (one mode per run).
struct PowerProfile {
    double p_m = 0.0;   // travel power, no package [W]
    double p_mp = 0.0;  // travel power, with package [W]
    double p_s = 0.0;   // service (hover+comm) power, no package [W]
    double p_sp = 0.0;  // service power, with package [W]
    double v = 0.0;     // cruise speed, no package [m/s]
    double v_p = 0.0;   // cruise speed, with package [m/s]
    std::optional<RotorParams> rotor;

    void validate() const;
};

enum class LinkKind { aerial, ground };

/// One communication link's physics. Aerial links use a LoS/NLoS Nakagami
/// mixture; the ground link is Rayleigh with exponent alpha_ground (the
/// source text calls this exponent both alpha_b and alpha_t).
struct LinkSpec {
    LinkKind kind = LinkKind::aerial;
    double tx_power_w = 0.0;     // rho_i or rho_u
    double noise_w = 0.0;        // sigma^2
    double eta_l = 1.0;          // additional loss, LoS (linear)
    double eta_n = 1.0;          // additional loss, NLoS (linear)
    double alpha_l = 2.1;
    double alpha_n = 4.0;
    int m_l = 3;
    int m_n = 1;
    double altitude_m = 0.0;     // 0 for the ground link
    double alpha_ground = 4.0;
    double los_a = 4.9;          // LoS environment constants
    double los_b = 0.43;

    void validate(const std::string& name) const;
};

struct RunControls {
    std::uint64_t trials = 1000;
    std::uint64_t seed = 1;
    double grid_step_m = 25.0;           // planner search step
    double area_resolution_factor = 200.0;   // numeric buffer area: slice spacing = r / factor
    double area_resolution_floor_m = 0.25;
    double cdf_area_resolution_factor = 50.0; // coarser spacing for per-trial CDF tabulation
    int cdf_points = 512;
    double quad_abs_tol_prob = 1e-6;
    double quad_abs_tol_rate = 1e-4;
    double tau_sample_cap = 1e3;   // per-draw cap on 1/log2(1+SNR) [s/(bit/Hz)]
    double tau_usable_cap = 100.0; // links with tau beyond this are flagged unusable
    int hist_bins = 30;
    int threads = 0;               // 0 = hardware concurrency

    void validate() const;
};

/// All system parameters, normalized to SI on load (m, W, J, per-m^2).
/// Immutable after load_and_validate; safe to share across threads.
struct SystemParams {
    double lambda_t = 0.0;   // TBS density [1/m^2]
    double lambda_i = 0.0;   // IoT-cluster density [1/m^2]
    double r_c = 0.0;        // IoT cluster radius [m]
    double c_t = 0.0;        // achievable-rate threshold [bit/s/Hz]
    double l2 = 0.0;         // source-destination distance [m]
    double m_over_bw = 0.0;  // required data over bandwidth [bit/Hz]
    double b_max_j = 0.0;    // battery capacity [J]
    double altitude = 0.0;   // UAV altitude [m]
    double los_a = 0.0;
    double los_b = 0.0;
    PowerProfile power;
    LinkSpec i2u;
    LinkSpec u2b;
    LinkSpec i2b;
    RunControls run;

    void validate() const;
};

/// Parse, normalize units (per-km^2 -> per-m^2, W.h -> J), and validate a
/// JSON config document. With strict=true unknown keys fail; otherwise they
/// are collected into *warnings.
SystemParams load_and_validate(const std::string& config_text, bool strict = true,
                               std::vector<std::string>* warnings = nullptr);

/// Load from a file path (UTF-8 JSON).
SystemParams load_config_file(const std::string& path, bool strict = true,
                              std::vector<std::string>* warnings = nullptr);

/// Serialize with normalized units; load_and_validate(serialize(p)) == p.
std::string serialize(const SystemParams& p);

/// Built-in defaults (the simulation parameter table shipped as configs/table1.json).
SystemParams default_params();

bool operator==(const RotorParams& a, const RotorParams& b);
bool operator==(const PowerProfile& a, const PowerProfile& b);
bool operator==(const LinkSpec& a, const LinkSpec& b);
bool operator==(const RunControls& a, const RunControls& b);
bool operator==(const SystemParams& a, const SystemParams& b);

}  // namespace uavdd
