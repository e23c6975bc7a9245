#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "splap/control.hpp"
#include "splap/grid.hpp"
#include "splap/parallel.hpp"
#include "splap/stepper.hpp"

// Rate-function estimation by penalized control-energy minimization, and
// Monte Carlo probing of the small-noise decay of rare-event probabilities.

namespace splap {

struct RateResult {
    double i_value = 0.0;        // control energy of optimal_control
    Control optimal_control;
    double terminal_gap = 0.0;   // discrete-L2 miss at time T
    int iterations = 0;
    bool converged = false;
};

struct RateSettings {
    double grad_tol = 1e-6;   // stop when ||grad J||_inf <= grad_tol * max(1, J)
    int max_outer = 500;
    double fd_step = 1e-4;    // central-difference step, scaled by max(1,|h_k|)
};

// Minimizes J(h) = control_energy(h) + (lambda/2) ||u_h(T) - target||_2^2
// over controls on the simulation partition (n_ctrl must equal mp.n_steps),
// quasi-Newton with backtracking from h = 0 (or `warm_start`).
RateResult rate_function_estimate(const ModelParams& mp, const Field& target, double lambda,
                                  int n_ctrl, const Field& u0, const Grid& g,
                                  const NewtonSettings& s, const RateSettings& rs = {},
                                  const Parallelism& par = {}, const Control* warm_start = nullptr);

// Continuation over an increasing lambda ladder, warm-starting each stage.
RateResult rate_function_ladder(const ModelParams& mp, const Field& target,
                                const std::vector<double>& lambdas, const Field& u0,
                                const Grid& g, const NewtonSettings& s,
                                const RateSettings& rs = {}, const Parallelism& par = {});

// Complement of the terminal L2 ball: hit when ||u(T) - center|| >= radius.
struct EventSpec {
    Field center;
    double radius = 0.0;
};

// Terminal state of the zero-control skeleton, the default event center.
Field default_event_center(const ModelParams& mp, const Field& u0, const Grid& g,
                           const NewtonSettings& s);

struct ProbEstimate {
    double p_hat = 0.0;
    long n_hits = 0;
    long n_samples = 0;
    double wilson_low = 0.0;   // 95% Wilson interval
    double wilson_high = 0.0;
};

ProbEstimate wilson_interval(long hits, long samples);

// M independent run_sde trajectories with seeds mix_seed(base_seed, m).
ProbEstimate rare_event_probability(const ModelParams& mp, const EventSpec& event, long n_samples,
                                    std::uint64_t base_seed, const Field& u0, const Grid& g,
                                    const NewtonSettings& s, const Parallelism& par = {});

struct LdpRow {
    double epsilon = 0.0;
    ProbEstimate prob;
    double eps2_log_p = 0.0;   // meaningless when below_floor
    bool below_floor = false;  // zero hits at this sample size
};

struct LdpReport {
    std::vector<LdpRow> rows;
    double rate_bound = 0.0;   // -I_hat, from the boundary optimizer
    RateResult boundary;       // cheapest control reaching the event boundary
};

// Rare-event table over decreasing epsilons plus the optimizer's bound.
// The boundary optimizer minimizes control energy subject (via penalty) to
// ||u_h(T) - center|| = radius; the touching direction is implicit in the
// optimized control.
LdpReport ldp_diagnostic(const ModelParams& mp, const std::vector<double>& epsilons,
                         const EventSpec& event, long n_samples, std::uint64_t base_seed,
                         const Field& u0, const Grid& g, const NewtonSettings& s,
                         const std::vector<double>& lambda_ladder,
                         const RateSettings& rs = {}, const Parallelism& par = {});

}  // namespace splap
