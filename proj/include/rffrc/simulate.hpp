#pragma once

#include <cmath>
#include <iostream>
#include <string>
#include <utility>

#include <Eigen/Dense>

#include "rffrc/errors.hpp"
#include "rffrc/integrators.hpp"
#include "rffrc/systems.hpp"
#include "rffrc/trajectory.hpp"

namespace rffrc {

namespace detail {

inline void check_finite_state(const Eigen::VectorXd& state, const char* system,
                               Eigen::Index step) {
    if (!state.allFinite()) {
        throw NonFiniteError(std::string(system) + ": non-finite state at step " +
                             std::to_string(step + 1));
    }
}

}  // namespace detail

inline constexpr double kRulkovSingularityTol = 1e-12;

/// Iterate the Rulkov map for n steps. Rows are the states after steps
/// 1..n; the initial condition is not included.
inline Trajectory simulate_rulkov(const RulkovParams& p, const Eigen::Vector2d& init,
                                  Eigen::Index n) {
    if (n < 1) throw InvalidParameterError("simulate_rulkov: n must be >= 1");
    if (!p.in_fast_slow_regime()) {
        std::cerr << "warning: rulkov mu = " << p.mu
                  << " is outside the fast-slow regime (expect 0 < mu << 1)\n";
    }
    Eigen::MatrixXd states(n, 2);
    double x = init[0], y = init[1];
    for (Eigen::Index i = 0; i < n; ++i) {
        if (std::abs(1.0 - x) < kRulkovSingularityTol) {
            throw SingularityError("rulkov: x reached the singularity at x = 1 (step " +
                                   std::to_string(i) + ")");
        }
        const double x_next = p.alpha / (1.0 - x) + y;
        const double y_next = y - p.mu * (x + 1.0) + p.mu * p.sigma;
        x = x_next;
        y = y_next;
        if (!std::isfinite(x) || !std::isfinite(y)) {
            throw NonFiniteError("rulkov: non-finite state at step " + std::to_string(i + 1));
        }
        states(i, 0) = x;
        states(i, 1) = y;
    }
    return Trajectory({"x", "y"}, 1.0, std::move(states));
}

/// Iterate the seasonally forced Ricker map for n steps. The growth rate is
/// updated first and then drives the population update, and the forcing
/// phase uses the index of the current state (the initial condition is
/// index 0). Rows are the states after steps 1..n.
inline Trajectory simulate_ricker(const RickerParams& p, const Eigen::Vector2d& init,
                                  Eigen::Index n) {
    if (n < 1) throw InvalidParameterError("simulate_ricker: n must be >= 1");
    p.validate();
    Eigen::MatrixXd states(n, 2);
    double x = init[0], r = init[1];
    for (Eigen::Index i = 0; i < n; ++i) {
        const double forcing = p.alpha * std::sin(2.0 * M_PI * static_cast<double>(i) / p.T_period);
        r = r + p.epsilon * (p.mu - r + forcing);
        x = x * std::exp(r * (1.0 - x / p.K));
        if (!std::isfinite(x) || !std::isfinite(r)) {
            throw NonFiniteError("ricker: non-finite state at step " + std::to_string(i + 1));
        }
        states(i, 0) = x;
        states(i, 1) = r;
    }
    return Trajectory({"x", "r"}, 1.0, std::move(states));
}

/// One forward-Euler step of the Izhikevich model with the post-step reset
/// check. `recorded` is the sample to store (clamped to v_spike at spike
/// instants so spikes have uniform amplitude); `next` is the state the
/// integration continues from.
struct IzhikevichStep {
    Eigen::Vector2d recorded;
    Eigen::Vector2d next;
    bool spiked = false;
};

inline IzhikevichStep izhikevich_step(const IzhikevichParams& p, const Eigen::Vector2d& state,
                                      double dt) {
    if (!(dt > 0.0)) throw InvalidParameterError("izhikevich_step: dt must be > 0");
    const double v = state[0], u = state[1];
    const double v_next = v + dt * (0.04 * v * v + 5.0 * v + 140.0 - u + p.I);
    const double u_next = u + dt * (p.a * (p.b * v - u));
    IzhikevichStep out;
    if (v_next >= p.v_spike) {
        out.recorded = {p.v_spike, u_next};
        out.next = {p.c, u_next + p.d};
        out.spiked = true;
    } else {
        out.recorded = {v_next, u_next};
        out.next = out.recorded;
    }
    return out;
}

/// Euler-integrate the Izhikevich model for n steps of size dt. Rows are the
/// recorded samples after steps 1..n.
inline Trajectory simulate_izhikevich(const IzhikevichParams& p, const Eigen::Vector2d& init,
                                      Eigen::Index n, double dt) {
    if (n < 1) throw InvalidParameterError("simulate_izhikevich: n must be >= 1");
    p.validate();
    Eigen::MatrixXd states(n, 2);
    Eigen::Vector2d state = init;
    for (Eigen::Index i = 0; i < n; ++i) {
        const IzhikevichStep step = izhikevich_step(p, state, dt);
        detail::check_finite_state(step.next, "izhikevich", i);
        states.row(i) = step.recorded.transpose();
        state = step.next;
    }
    return Trajectory({"v", "u"}, dt, std::move(states));
}

/// RK4-integrate one of the smooth ODE systems per its spec, sampling every
/// dt and discarding the first n_transient samples.
inline Trajectory simulate_continuous(const SystemSpec& spec) {
    if (!spec.is_smooth_ode()) {
        throw InvalidParameterError(
            "simulate_continuous expects hindmarsh_rose, morris_lecar or predator_prey");
    }
    spec.validate();
    Eigen::MatrixXd states(spec.n_steps, spec.dim());
    Eigen::VectorXd state = spec.init;
    for (Eigen::Index i = 0; i < spec.n_steps; ++i) {
        state = rk4_step(spec, state, static_cast<double>(i) * spec.dt, spec.dt);
        states.row(i) = state.transpose();
    }
    return Trajectory(spec.variable_names(), spec.dt,
                      states.bottomRows(spec.n_steps - spec.n_transient), spec.n_transient);
}

/// Simulate any of the six systems per its spec, transient discarded.
inline Trajectory simulate(const SystemSpec& spec) {
    spec.validate();
    const Eigen::Index kept = spec.n_steps - spec.n_transient;
    switch (spec.id) {
        case SystemId::rulkov: {
            Trajectory full = simulate_rulkov(std::get<RulkovParams>(spec.params),
                                              spec.init.head<2>(), spec.n_steps);
            return full.slice(spec.n_transient, kept);
        }
        case SystemId::ricker: {
            Trajectory full = simulate_ricker(std::get<RickerParams>(spec.params),
                                              spec.init.head<2>(), spec.n_steps);
            return full.slice(spec.n_transient, kept);
        }
        case SystemId::izhikevich: {
            Trajectory full = simulate_izhikevich(std::get<IzhikevichParams>(spec.params),
                                                  spec.init.head<2>(), spec.n_steps, spec.dt);
            return full.slice(spec.n_transient, kept);
        }
        default:
            return simulate_continuous(spec);
    }
}

}  // namespace rffrc
