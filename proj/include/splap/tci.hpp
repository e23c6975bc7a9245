#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "splap/control.hpp"
#include "splap/grid.hpp"
#include "splap/parallel.hpp"
#include "splap/stepper.hpp"

// Coupled simulation of the driven equation and its drift-transformed
// version on shared Brownian increments. The mean squared L2(0,T;L1) gap of
// the coupled pair upper-bounds the squared Wasserstein distance, which is
// what gets compared against twice the relative entropy.

namespace splap {

// Squared discrete L2(0,T;L1) distance, left-endpoint rule in time.
double path_distance_sq(const Trajectory& a, const Trajectory& b, const Grid& g);

// (1/2) tau sum_k g_k^2 for a deterministic drift.
double relative_entropy(const Control& gdrift);

struct TciRow {
    std::string g_id;
    double scale = 0.0;
    double entropy = 0.0;
    double mean_sq_distance = 0.0;
    double ratio = 0.0;        // mean_sq_distance / (2 entropy); see ratio_defined
    bool ratio_defined = false;
    double mc_stderr = 0.0;
    long n_samples = 0;
};

// Requires a bounded diffusion family and epsilon = 1. Runs M coupled pairs
// (run_sde, run_girsanov) on shared paths seeded by mix_seed(base_seed, m).
TciRow coupled_simulate(const ModelParams& mp, const Control& gdrift, long n_samples,
                        std::uint64_t base_seed, const Field& u0, const Grid& g,
                        const NewtonSettings& s, const std::string& g_id, double scale,
                        const Parallelism& par = {});

struct DriftSpec {
    std::string shape;               // zero | constant | sine | ramp | pulse | alternating
    double amplitude = 1.0;
    std::vector<double> scales{1.0};
};

// Piecewise-constant drift of a named shape, amplitude * scale.
Control make_drift(const std::string& shape, double amplitude, double scale, int n_steps,
                   double tau);

struct TciReport {
    std::vector<TciRow> rows;
    double c_emp = 0.0;        // max ratio over rows with entropy > 0
    bool c_emp_defined = false;
};

TciReport tci_sweep(const ModelParams& mp, const std::vector<DriftSpec>& suite, long n_samples,
                    std::uint64_t base_seed, const Field& u0, const Grid& g,
                    const NewtonSettings& s, const Parallelism& par = {});

}  // namespace splap
