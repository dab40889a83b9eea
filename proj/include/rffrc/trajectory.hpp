#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "rffrc/csv.hpp"
#include "rffrc/errors.hpp"

namespace rffrc {

/// A sampled trajectory: T rows of d named state variables.
///
/// `dt` is the sampling interval in system units (1 for maps). Rows are the
/// states after steps transient_discarded+1, transient_discarded+2, ... from
/// the initial condition, i.e. the washout prefix has already been dropped.
struct Trajectory {
    std::vector<std::string> names;
    double dt = 1.0;
    Eigen::MatrixXd states;  // T x d
    Eigen::Index transient_discarded = 0;

    Trajectory() = default;

    Trajectory(std::vector<std::string> names_, double dt_, Eigen::MatrixXd states_,
               Eigen::Index transient_discarded_ = 0)
        : names(std::move(names_)),
          dt(dt_),
          states(std::move(states_)),
          transient_discarded(transient_discarded_) {
        if (states.rows() < 1) {
            throw InvalidParameterError("trajectory must hold at least one sample");
        }
        if (static_cast<Eigen::Index>(names.size()) != states.cols()) {
            throw DimensionError("trajectory has " + std::to_string(states.cols()) +
                                 " columns but " + std::to_string(names.size()) + " names");
        }
        if (!states.allFinite()) {
            throw NonFiniteError("trajectory contains non-finite states");
        }
    }

    Eigen::Index length() const { return states.rows(); }
    Eigen::Index dim() const { return states.cols(); }

    /// Absolute time of row `row` (the initial condition sits at t = 0).
    double time_of(Eigen::Index row) const {
        return static_cast<double>(transient_discarded + 1 + row) * dt;
    }

    /// Contiguous sub-trajectory of `len` rows starting at `start`.
    Trajectory slice(Eigen::Index start, Eigen::Index len) const {
        if (start < 0 || len < 1 || start + len > length()) {
            throw InvalidParameterError("trajectory slice out of range");
        }
        return Trajectory(names, dt, states.middleRows(start, len), transient_discarded + start);
    }
};

/// Write `t,<name1>,...,<named>` rows at full double precision.
inline void write_trajectory_csv(const Trajectory& traj, std::ostream& os) {
    os << "t";
    for (const auto& n : traj.names) os << ',' << n;
    os << '\n';
    for (Eigen::Index r = 0; r < traj.length(); ++r) {
        os << csv::format_double(traj.time_of(r));
        for (Eigen::Index c = 0; c < traj.dim(); ++c) {
            os << ',' << csv::format_double(traj.states(r, c));
        }
        os << '\n';
    }
}

}  // namespace rffrc
