#pragma once

#include <vector>

#include "qrm/enumerate.hpp"

namespace qrm {

// Result of one distillation round at input infidelity eps.
//
// logical_dist[m] = P(logical class m | accepted); eps_out is the accepted
// mass outside class 0 divided by p_accept. Summing the m != 0 terms
// directly (rather than 1 - P(0)/p_accept) matters: near eps = 1e-4 with
// distance 4 the output error is ~1e-17, far below the cancellation floor of
// the subtraction.
struct DistillationOutcome {
    double p_accept = 0.0;
    std::vector<double> logical_dist;
    double eps_out = 0.0;
};

// Exact depolarizing-noise map over the accepted-error table: per-site class
// probabilities are p(0) = 1-eps, p(k != 0) = eps/(d-1), so
// P(m, accept) = sum_w N[w][m] (1-eps)^(n-w) (eps/(d-1))^w.
DistillationOutcome distill_map(const ClassWeightTable& table, double eps);

struct ThresholdResult {
    bool found = false; // false: no crossing in (0, 1 - 1/d)
    double eps_star = 0.0;
    double lo = 0.0, hi = 0.0; // bracket, hi - lo <= tol
    double tol = 0.0;
    int iterations = 0;
};

// Smallest eps > 0 with eps_out(eps) >= eps: coarse scan in steps of 0.01
// strictly below the trivial fixed point at 1 - 1/d (where the noise is
// uniform and eps_out = eps exactly), then bisection to tol. The returned
// bracket certifies the crossing: eps_out < eps at eps_star - tol and
// eps_out >= eps at eps_star + tol.
ThresholdResult threshold_from_table(const ClassWeightTable& table, double tol);
ThresholdResult threshold(const QRMCode& code, double tol,
                          Method method = Method::automatic);

// Efficiency exponent log(d-1) / log floor((d+1)/3): the cost of reaching a
// target output error scales as a power gamma of the log of that error.
double gamma_value(int d);

// Least-squares slope of log eps_out against log eps over the grid; in the
// small-eps regime this is the code distance. Throws std::invalid_argument
// for a grid smaller than two points and consistency_error when eps_out
// underflows to zero (grid too far left, widen it).
double scaling_exponent(const ClassWeightTable& table,
                        const std::vector<double>& eps_grid);

// One row per dimension for the efficiency figure: parameters at the maximal
// transversal degree plus the residue d mod 3 selecting which of the two
// monotone curves the point sits on.
struct GammaCurveRow {
    int d = 0;
    int r_max = 0;
    int D = 0;
    double gamma = 0.0;
    int residue = 0; // d mod 3
};

std::vector<GammaCurveRow> gamma_curves(const std::vector<int>& dims);

} // namespace qrm
