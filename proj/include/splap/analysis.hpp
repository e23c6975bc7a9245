#pragma once

#include <cstdint>
#include <vector>

#include "splap/control.hpp"
#include "splap/grid.hpp"
#include "splap/stepper.hpp"

namespace splap {

// Piecewise-quadratic convex approximation of |r|: quadratic on [-vartheta,
// vartheta], affine outside. Satisfies |r| - vartheta/2 <= zeta(r) <= |r|
// and zeta'' = (1/vartheta) on the quadratic core, 0 outside.
struct ZetaParams {
    double vartheta = 1.0;
    static constexpr double k1 = 0.5;
    static constexpr double k2 = 1.0;
};

double zeta(double r, const ZetaParams& zp);
double zeta_prime(double r, const ZetaParams& zp);
double zeta_second(double r, const ZetaParams& zp);

struct ContractionRow {
    int step = 0;       // 0..N
    double t = 0.0;
    double l1_gap = 0.0;
    double envelope = 0.0;
};

struct ContractionReport {
    std::vector<ContractionRow> rows;
};

// Runs two controlled trajectories that differ only in their initial data
// and tracks the L1 distance against the Gronwall envelope
// gap_0 * exp(Lip(H) * tau * sum_{j<=k} |h_j|).
ContractionReport l1_contraction_experiment(const ModelParams& mp, const Field& u0_a,
                                            const Field& u0_b, const Control& h,
                                            const Grid& g, const NewtonSettings& s);

struct LedgerViolation {
    int step = 0;
    double lhs = 0.0;
    double rhs = 0.0;
    double excess = 0.0;  // lhs - rhs > 0
};

// Checks every ledger row against the per-step energy inequality
//   (l2_after^2 - l2_before^2)/2 + increment^2/2 + w1p_term
//     <= forcing_inner_product + tolerance,
// tolerance = 10 * residual_tol, plus Lip(f) * tau * h * l2_after * w1p
// when the flux family is nonzero (edge-averaging error).
std::vector<LedgerViolation> audit_energy_ledger(const Trajectory& traj, const ModelParams& mp,
                                                 const Grid& g, const NewtonSettings& s);

// Samples pairs (a,b) uniform in [-10,10]^2 and returns the minimum of
//   (|a|^{p-2}a - |b|^{p-2}b)(a-b) - 2^{2-p} |a-b|^p
// over the sample, which must be nonnegative up to round-off.
double monotonicity_sample_check(double p, long n_samples, std::uint64_t seed);

}  // namespace splap
