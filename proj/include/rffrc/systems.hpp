#pragma once

// The six benchmark fast-slow systems: two discrete maps (Rulkov, Ricker),
// three smooth ODE systems (Hindmarsh-Rose, Morris-Lecar, predator-prey) and
// the hybrid Izhikevich model (quadratic ODE plus spike reset).

#include <cmath>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "rffrc/errors.hpp"

namespace rffrc {

enum class SystemId {
    rulkov,
    ricker,
    izhikevich,
    hindmarsh_rose,
    morris_lecar,
    predator_prey,
};

inline const char* system_name(SystemId id) {
    switch (id) {
        case SystemId::rulkov: return "rulkov";
        case SystemId::ricker: return "ricker";
        case SystemId::izhikevich: return "izhikevich";
        case SystemId::hindmarsh_rose: return "hindmarsh_rose";
        case SystemId::morris_lecar: return "morris_lecar";
        case SystemId::predator_prey: return "predator_prey";
    }
    throw InvalidParameterError("unknown system id");
}

inline SystemId system_id_from_name(const std::string& name) {
    if (name == "rulkov") return SystemId::rulkov;
    if (name == "ricker") return SystemId::ricker;
    if (name == "izhikevich") return SystemId::izhikevich;
    if (name == "hindmarsh_rose") return SystemId::hindmarsh_rose;
    if (name == "morris_lecar") return SystemId::morris_lecar;
    if (name == "predator_prey") return SystemId::predator_prey;
    throw ConfigError("unknown system \"" + name + "\"");
}

// x_{n+1} = alpha/(1-x_n) + y_n,  y_{n+1} = y_n - mu(x_n+1) + mu*sigma
struct RulkovParams {
    double alpha = 4.1;
    double mu = 0.001;
    double sigma = -1.6;

    /// The fast-slow regime needs 0 < mu << 1; violations are only worth a
    /// warning because degenerate settings (mu = 0) are legitimate inputs.
    bool in_fast_slow_regime() const { return mu > 0.0 && mu < 0.1; }
};

// x_{n+1} = x_n exp(r_{n+1}(1 - x_n/K)),
// r_{n+1} = r_n + eps(mu - r_n + alpha sin(2 pi n / T))
struct RickerParams {
    double K = 10.0;
    double mu = 2.5;
    double alpha = 0.5;
    double T_period = 200.0;
    double epsilon = 0.01;

    void validate() const {
        if (!(K > 0.0)) throw InvalidParameterError("ricker: K must be > 0");
        if (!(T_period > 0.0)) throw InvalidParameterError("ricker: T_period must be > 0");
        if (!(epsilon >= 0.0)) throw InvalidParameterError("ricker: epsilon must be >= 0");
    }
};

// dv/dt = 0.04 v^2 + 5v + 140 - u + I,  du/dt = a(bv - u),
// reset on v >= v_spike: v <- c, u <- u + d
struct IzhikevichParams {
    double a = 0.02;
    double b = 0.2;
    double c = -50.0;
    double d = 2.0;
    double I = 10.0;
    double v_spike = 30.0;

    void validate() const {
        if (!(a > 0.0)) throw InvalidParameterError("izhikevich: a must be > 0");
    }
};

// dx/dt = y - a x^3 + b x^2 - z + I,  dy/dt = c - d x^2 - y,
// dz/dt = r(s(x - x_R) - z)
struct HindmarshRoseParams {
    double a = 1.0;
    double b = 3.0;
    double c = 1.0;
    double d = 5.0;
    double r = 0.01;
    double s = 4.0;
    double x_R = -1.6;
    double I = 3.2;

    void validate() const {
        if (!(r > 0.0)) throw InvalidParameterError("hindmarsh_rose: r must be > 0");
    }
};

// dx/dt = x(alpha - beta y),  dy/dt = eps y(delta x - gamma)
struct PredatorPreyParams {
    double alpha = 1.0;
    double beta = 1.0;
    double delta = 1.0;
    double gamma = 1.0;
    double epsilon = 0.1;

    void validate() const {
        if (!(alpha > 0.0 && beta > 0.0 && delta > 0.0 && gamma > 0.0)) {
            throw InvalidParameterError("predator_prey: all rates must be > 0");
        }
        if (!(epsilon > 0.0 && epsilon <= 1.0)) {
            throw InvalidParameterError("predator_prey: epsilon must be in (0, 1]");
        }
    }
};

// C dV/dt = I_ext - g_Ca m_inf(V)(V - V_Ca) - g_K n (V - V_K) - g_L (V - V_L)
// dn/dt = phi (n_inf(V) - n) / tau_n(V)
struct MorrisLecarParams {
    double C = 20.0;
    double I_ext = 100.0;
    double g_Ca = 4.4;
    double g_K = 8.0;
    double g_L = 2.0;
    double V_Ca = 120.0;
    double V_K = -84.0;
    double V_L = -60.0;
    double V1 = -1.2;
    double V2 = 18.0;
    double V3 = 2.0;
    double V4 = 30.0;
    double phi = 0.04;

    void validate() const {
        if (!(C > 0.0)) throw InvalidParameterError("morris_lecar: C must be > 0");
        if (V2 == 0.0) throw InvalidParameterError("morris_lecar: V2 must be nonzero");
        if (V4 == 0.0) throw InvalidParameterError("morris_lecar: V4 must be nonzero");
        if (!(phi > 0.0)) throw InvalidParameterError("morris_lecar: phi must be > 0");
    }
};

/// Instantaneous calcium activation.
inline double ml_m_inf(const MorrisLecarParams& p, double V) {
    return 0.5 * (1.0 + std::tanh((V - p.V1) / p.V2));
}

/// Potassium gating steady state.
inline double ml_n_inf(const MorrisLecarParams& p, double V) {
    return 0.5 * (1.0 + std::tanh((V - p.V3) / p.V4));
}

/// Voltage-dependent potassium time constant.
inline double ml_tau_n(const MorrisLecarParams& p, double V) {
    return 1.0 / std::cosh((V - p.V3) / (2.0 * p.V4));
}

using SystemParams = std::variant<RulkovParams, RickerParams, IzhikevichParams,
                                  HindmarshRoseParams, PredatorPreyParams, MorrisLecarParams>;

/// One of the six systems plus everything needed to simulate it.
struct SystemSpec {
    SystemId id = SystemId::rulkov;
    SystemParams params;
    Eigen::VectorXd init;
    Eigen::Index n_steps = 0;      // total steps simulated, transient included
    double dt = 1.0;               // ignored by the maps (always 1)
    Eigen::Index n_transient = 0;  // leading samples discarded

    void validate() const {
        if (!(n_steps > n_transient && n_transient >= 0)) {
            throw InvalidParameterError("system spec: need n_steps > n_transient >= 0");
        }
        if (!is_map() && !(dt > 0.0)) {
            throw InvalidParameterError("system spec: dt must be > 0");
        }
        if (init.size() != dim()) {
            throw DimensionError(std::string(system_name(id)) + " expects a " +
                                 std::to_string(dim()) + "-dimensional initial state");
        }
        std::visit(
            [](const auto& p) {
                if constexpr (!std::is_same_v<std::decay_t<decltype(p)>, RulkovParams>) {
                    p.validate();
                }
            },
            params);
    }

    bool is_map() const { return id == SystemId::rulkov || id == SystemId::ricker; }

    bool is_smooth_ode() const {
        return id == SystemId::hindmarsh_rose || id == SystemId::morris_lecar ||
               id == SystemId::predator_prey;
    }

    Eigen::Index dim() const { return id == SystemId::hindmarsh_rose ? 3 : 2; }

    std::vector<std::string> variable_names() const {
        switch (id) {
            case SystemId::rulkov: return {"x", "y"};
            case SystemId::ricker: return {"x", "r"};
            case SystemId::izhikevich: return {"v", "u"};
            case SystemId::hindmarsh_rose: return {"x", "y", "z"};
            case SystemId::morris_lecar: return {"V", "n"};
            case SystemId::predator_prey: return {"x", "y"};
        }
        throw InvalidParameterError("unknown system id");
    }
};

inline Eigen::Vector3d hindmarsh_rose_rhs(const HindmarshRoseParams& p,
                                          const Eigen::Vector3d& s) {
    const double x = s[0], y = s[1], z = s[2];
    return {y - p.a * x * x * x + p.b * x * x - z + p.I,
            p.c - p.d * x * x - y,
            p.r * (p.s * (x - p.x_R) - z)};
}

inline Eigen::Vector2d predator_prey_rhs(const PredatorPreyParams& p, const Eigen::Vector2d& s) {
    const double x = s[0], y = s[1];
    return {x * (p.alpha - p.beta * y), p.epsilon * y * (p.delta * x - p.gamma)};
}

inline Eigen::Vector2d morris_lecar_rhs(const MorrisLecarParams& p, const Eigen::Vector2d& s) {
    const double V = s[0], n = s[1];
    const double I_Ca = p.g_Ca * ml_m_inf(p, V) * (V - p.V_Ca);
    const double I_K = p.g_K * n * (V - p.V_K);
    const double I_L = p.g_L * (V - p.V_L);
    return {(p.I_ext - I_Ca - I_K - I_L) / p.C,
            p.phi * (ml_n_inf(p, V) - n) / ml_tau_n(p, V)};
}

/// Time derivative of the smooth ODE systems. Pure in (state, t); the three
/// systems are autonomous, so t is accepted only for integrator interfaces.
inline Eigen::VectorXd ode_rhs(const SystemSpec& spec, const Eigen::VectorXd& state,
                               [[maybe_unused]] double t) {
    if (state.size() != spec.dim()) {
        throw DimensionError("ode_rhs: state dimension mismatch");
    }
    switch (spec.id) {
        case SystemId::hindmarsh_rose:
            return hindmarsh_rose_rhs(std::get<HindmarshRoseParams>(spec.params), state.head<3>());
        case SystemId::predator_prey:
            return predator_prey_rhs(std::get<PredatorPreyParams>(spec.params), state.head<2>());
        case SystemId::morris_lecar:
            return morris_lecar_rhs(std::get<MorrisLecarParams>(spec.params), state.head<2>());
        default:
            throw InvalidParameterError("ode_rhs is only defined for the smooth ODE systems");
    }
}

}  // namespace rffrc
