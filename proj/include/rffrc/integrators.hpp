#pragma once

#include <utility>

#include <Eigen/Dense>

#include "rffrc/errors.hpp"
#include "rffrc/systems.hpp"

namespace rffrc {

/// One classical 4th-order Runge-Kutta step of du/dt = rhs(u, t).
template <typename Rhs>
Eigen::VectorXd rk4_step(Rhs&& rhs, const Eigen::VectorXd& state, double t, double dt) {
    if (!(dt > 0.0)) throw InvalidParameterError("rk4_step: dt must be > 0");
    const Eigen::VectorXd k1 = rhs(state, t);
    const Eigen::VectorXd k2 = rhs(state + 0.5 * dt * k1, t + 0.5 * dt);
    const Eigen::VectorXd k3 = rhs(state + 0.5 * dt * k2, t + 0.5 * dt);
    const Eigen::VectorXd k4 = rhs(state + dt * k3, t + dt);
    Eigen::VectorXd next = state + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    if (!next.allFinite()) {
        throw NonFiniteError("rk4_step produced a non-finite state");
    }
    return next;
}

/// RK4 step of one of the smooth ODE systems.
inline Eigen::VectorXd rk4_step(const SystemSpec& spec, const Eigen::VectorXd& state, double t,
                                double dt) {
    return rk4_step([&spec](const Eigen::VectorXd& s, double tt) { return ode_rhs(spec, s, tt); },
                    state, t, dt);
}

}  // namespace rffrc
