#pragma once

#include <cmath>
#include <concepts>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "cat/errors.hpp"
#include "cat/grid.hpp"
#include "cat/kernels.hpp"

namespace cat {

template <typename F>
concept RhsFn = std::invocable<F, std::span<const double>, std::span<double>>;

struct IntegrationConfig {
    double t_end = 0.0;
    double dt = 0.0;
    double negativity_tolerance = 1e-12;
    std::size_t record_every = 1;
};

struct TrajectoryPoint {
    double time;
    std::vector<double> counts;
};

using Trajectory = std::vector<TrajectoryPoint>;

/// One classical explicit four-stage step. Throws IntegrationError when the
/// result contains non-finite components.
template <RhsFn F>
std::vector<double> rk4_step(std::span<const double> counts, double dt, F&& f) {
    if (!(dt > 0.0)) throw std::invalid_argument("rk4_step: dt must be positive");
    const std::size_t n = counts.size();
    std::vector<double> k1(n), k2(n), k3(n), k4(n), stage(n), next(n);

    f(counts, std::span<double>(k1));
    for (std::size_t i = 0; i < n; ++i) stage[i] = counts[i] + 0.5 * dt * k1[i];
    f(std::span<const double>(stage), std::span<double>(k2));
    for (std::size_t i = 0; i < n; ++i) stage[i] = counts[i] + 0.5 * dt * k2[i];
    f(std::span<const double>(stage), std::span<double>(k3));
    for (std::size_t i = 0; i < n; ++i) stage[i] = counts[i] + dt * k3[i];
    f(std::span<const double>(stage), std::span<double>(k4));

    for (std::size_t i = 0; i < n; ++i) {
        next[i] = counts[i] + dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        if (!std::isfinite(next[i])) throw IntegrationError(i);
    }
    return next;
}

/// Fixed-step integration of dN/dt = f(N) from t = 0 to cfg.t_end.
///
/// Records every cfg.record_every steps plus t = 0 and t = t_end. Recorded
/// states must stay above -cfg.negativity_tolerance (NegativityError
/// otherwise); components inside [-tol, 0) are clamped to zero after the
/// check, so recorded states are nonnegative.
template <RhsFn F>
Trajectory integrate(std::span<const double> initial, const IntegrationConfig& cfg, F&& f) {
    if (!(cfg.dt > 0.0)) throw std::invalid_argument("integrate: dt must be positive");
    if (!(cfg.t_end >= 0.0)) throw std::invalid_argument("integrate: t_end must be nonnegative");
    if (cfg.record_every < 1) throw std::invalid_argument("integrate: cadence must be >= 1");
    if (!(cfg.negativity_tolerance >= 0.0)) {
        throw std::invalid_argument("integrate: negativity tolerance must be nonnegative");
    }
    for (std::size_t i = 0; i < initial.size(); ++i) {
        if (!(initial[i] >= 0.0)) {
            throw std::invalid_argument("integrate: initial state must be nonnegative");
        }
    }

    std::vector<double> state(initial.begin(), initial.end());
    const auto check_and_clamp = [&](double t) {
        for (std::size_t i = 0; i < state.size(); ++i) {
            if (state[i] < 0.0) {
                if (state[i] < -cfg.negativity_tolerance) throw NegativityError(t, i, state[i]);
                state[i] = 0.0;
            }
        }
    };

    Trajectory trajectory;
    trajectory.push_back({0.0, state});

    std::size_t step = 0;
    double t = 0.0;
    while (t < cfg.t_end) {
        // full steps of cfg.dt, then one short step onto t_end
        const double remaining = cfg.t_end - t;
        const double dt = remaining < cfg.dt * (1.0 + 1e-12) ? remaining : cfg.dt;
        state = rk4_step<F&>(state, dt, f);
        ++step;
        t = dt == cfg.dt ? static_cast<double>(step) * cfg.dt : cfg.t_end;
        for (std::size_t i = 0; i < state.size(); ++i) {
            if (!std::isfinite(state[i])) throw IntegrationError(t, i);
        }
        if (step % cfg.record_every == 0 || t >= cfg.t_end) {
            check_and_clamp(t);
            trajectory.push_back({t, state});
        }
    }
    return trajectory;
}

/// Step suggestion safety / max_i sum_j beta(x_i, x_j) N_j; plain `safety`
/// when the state is empty of death activity.
double suggest_dt(std::span<const double> counts, const Grid& grid, const KernelSpec& kernel,
                  double safety);

}  // namespace cat
