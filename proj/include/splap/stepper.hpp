#pragma once

#include <vector>

#include "splap/control.hpp"
#include "splap/families.hpp"
#include "splap/grid.hpp"

// Semi-implicit time discretization: the p-Laplacian and the flux f are
// taken at the new time level, the noise coefficient H at the old one.
// Each step is a nonlinear elliptic solve, done by damped Newton on the
// tridiagonal linearization with a fixed-point fallback.

namespace splap {

struct ModelParams {
    double p = 3.0;
    FluxFamily f;
    DiffusionFamily h;
    double horizon = 1.0;
    int n_steps = 1;
    double epsilon = 0.0;
    double grad_smoothing = 0.0;  // delta in |g|^2 -> |g|^2 + delta^2; 0 = exact flux

    double tau() const { return horizon / n_steps; }
};

struct NewtonSettings {
    double residual_tol = 1e-10;  // discrete-L2 norm of the step residual
    int max_iters = 50;
    int max_backtracks = 30;
};

struct LedgerRow {
    int step = 0;       // 1-based; row k describes the solve for u_k
    double t = 0.0;     // t_k
    double l2_before = 0.0;
    double l2_after = 0.0;
    double increment_l2 = 0.0;
    double w1p_term = 0.0;  // tau * ||grad u_k||_p^p
    double forcing_inner_product = 0.0;
    int newton_iters = 0;
    double newton_residual = 0.0;
};

struct Trajectory {
    std::vector<Field> fields;     // N+1 states, fields[0] = regularized datum
    std::vector<LedgerRow> ledger; // N rows
};

struct StepResult {
    Field u;
    int newton_iters = 0;
    double newton_residual = 0.0;
};

// Solves u - tau div(|grad u|^{p-2} grad u) = u0; the f-term is absent here.
Field regularize_initial(const Field& u0, double tau, double p, const Grid& g,
                         const NewtonSettings& s, double grad_smoothing = 0.0);

// Solves u - tau div(|grad u|^{p-2} grad u + f(u)) = u_prev + forcing.
StepResult implicit_step(const Field& u_prev, const Field& forcing,
                         const ModelParams& mp, const Grid& g, const NewtonSettings& s);

// Controlled deterministic equation: per-step forcing tau H(u_k) h_{k+1}.
Trajectory run_skeleton(const ModelParams& mp, const Control& h, const Field& u0,
                        const Grid& g, const NewtonSettings& s);

// Small-noise equation: per-step forcing epsilon H(u_k) dW_{k+1}.
Trajectory run_sde(const ModelParams& mp, const BrownianPath& w, const Field& u0,
                   const Grid& g, const NewtonSettings& s);

// Drift-transformed equation: forcing epsilon H(u_k) dW_{k+1} + tau H(u_k) g_{k+1}.
// Feeding it the same BrownianPath as a run_sde call realizes the coupling.
Trajectory run_girsanov(const ModelParams& mp, const Control& gdrift, const BrownianPath& w,
                        const Field& u0, const Grid& g, const NewtonSettings& s);

}  // namespace splap
