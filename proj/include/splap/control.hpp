#pragma once

#include <cstdint>
#include <vector>

// Time-discrete controls on the uniform partition of [0,T], the averaging
// projection onto piecewise constants, and Brownian increment generation.

namespace splap {

// Piecewise-constant control; values[k] acts on (t_k, t_{k+1}].
struct Control {
    std::vector<double> values;
    double tau = 0.0;

    int steps() const { return static_cast<int>(values.size()); }
    static Control constant(int n, double tau, double value) {
        return Control{std::vector<double>(static_cast<std::size_t>(n), value), tau};
    }
};

// A finely sampled signal (t_i, v_i); t strictly increasing except that a
// repeated t encodes a jump.
struct TimeSeries {
    std::vector<double> time;
    std::vector<double> value;

    std::size_t size() const { return time.size(); }
};

// L2 projection onto piecewise constants: entry k is the average of the
// piecewise-linear interpolant of `samples` over cell k. Requires the
// samples to resolve [0,T] at least 10x finer than T/n_steps.
Control project_control(const TimeSeries& samples, int n_steps);

// (1/2) tau sum_k h_k^2, the discrete control energy.
double control_energy(const Control& h);

struct BrownianPath {
    std::vector<double> increments;  // N centered Gaussians of variance tau
    std::uint64_t seed = 0;

    int steps() const { return static_cast<int>(increments.size()); }
};

// Deterministic in (n_steps, tau, seed). Use mix_seed(base, index) from
// rng.hpp for independent ensemble members.
BrownianPath sample_brownian(int n_steps, double tau, std::uint64_t seed);

// Renders a control as a fine table (ten samples per cell plus jump rows),
// suitable for feeding back into project_control.
TimeSeries replay_as_time_series(const Control& h);

}  // namespace splap
