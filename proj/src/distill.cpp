#include "qrm/distill.hpp"

#include <cmath>
#include <stdexcept>

#include "qrm/errors.hpp"
#include "qrm/gates.hpp"

namespace qrm {

DistillationOutcome distill_map(const ClassWeightTable& table, double eps) {
    if (!(eps >= 0.0 && eps < 1.0))
        throw std::invalid_argument("distill_map: eps must be in [0, 1)");
    const int d = table.d;
    const int n = table.n;

    // Power tables by repeated multiplication: deterministic across
    // platforms, and exact at eps = 0.
    std::vector<double> pow_keep(static_cast<size_t>(n + 1)),
        pow_err(static_cast<size_t>(n + 1));
    pow_keep[0] = pow_err[0] = 1.0;
    for (int j = 1; j <= n; ++j) {
        pow_keep[static_cast<size_t>(j)] = pow_keep[static_cast<size_t>(j - 1)] * (1.0 - eps);
        pow_err[static_cast<size_t>(j)] = pow_err[static_cast<size_t>(j - 1)] * (eps / (d - 1));
    }

    DistillationOutcome out;
    std::vector<double> joint(static_cast<size_t>(d), 0.0);
    for (int m = 0; m < d; ++m) {
        double p = 0.0;
        for (int w = 0; w <= n; ++w) {
            uint64_t c = table.at(w, m);
            if (c == 0) continue;
            p += static_cast<double>(c) * pow_keep[static_cast<size_t>(n - w)]
                 * pow_err[static_cast<size_t>(w)];
        }
        joint[static_cast<size_t>(m)] = p;
        out.p_accept += p;
    }
    double bad = 0.0;
    for (int m = 1; m < d; ++m) bad += joint[static_cast<size_t>(m)];
    out.logical_dist.resize(static_cast<size_t>(d));
    for (int m = 0; m < d; ++m)
        out.logical_dist[static_cast<size_t>(m)] = joint[static_cast<size_t>(m)] / out.p_accept;
    out.eps_out = bad / out.p_accept;
    return out;
}

ThresholdResult threshold_from_table(const ClassWeightTable& table, double tol) {
    if (!(tol > 0.0 && tol < 0.01))
        throw std::invalid_argument("threshold_from_table: tol must be in (0, 0.01)");
    const double ceiling = 1.0 - 1.0 / table.d;
    auto excess = [&table](double e) {
        return distill_map(table, e).eps_out - e;
    };

    ThresholdResult res;
    res.tol = tol;
    const double step = 0.01;
    double lo = 0.0, hi = 0.0;
    bool bracketed = false;
    for (int k = 1;; ++k) {
        double e = step * k;
        if (e >= ceiling - 1e-12) break;
        if (excess(e) >= 0.0) {
            if (k == 1)
                throw consistency_error("threshold: crossing below the first scan point");
            lo = step * (k - 1);
            hi = e;
            bracketed = true;
            break;
        }
    }
    if (!bracketed) return res; // found stays false: no crossing in range

    while (hi - lo > tol) {
        double mid = 0.5 * (lo + hi);
        if (excess(mid) >= 0.0)
            hi = mid;
        else
            lo = mid;
        ++res.iterations;
    }
    res.found = true;
    res.lo = lo;
    res.hi = hi;
    res.eps_star = 0.5 * (lo + hi);
    if (!(excess(res.eps_star - tol) < 0.0 && excess(res.eps_star + tol) >= 0.0))
        throw consistency_error("threshold: bracket certificate failed");
    return res;
}

ThresholdResult threshold(const QRMCode& code, double tol, Method method) {
    return threshold_from_table(accepted_enumerator(code, method), tol);
}

double gamma_value(int d) {
    if (!is_prime(d) || d < 5)
        throw std::invalid_argument("gamma_value: d must be a prime >= 5");
    int D = (d + 1) / 3;
    return std::log(static_cast<double>(d - 1)) / std::log(static_cast<double>(D));
}

double scaling_exponent(const ClassWeightTable& table,
                        const std::vector<double>& eps_grid) {
    if (eps_grid.size() < 2)
        throw std::invalid_argument("scaling_exponent: need at least two grid points");
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (double e : eps_grid) {
        DistillationOutcome o = distill_map(table, e);
        if (o.eps_out <= 0.0)
            throw consistency_error("scaling_exponent: eps_out underflowed at eps = "
                                    + std::to_string(e) + "; widen the grid");
        double x = std::log(e), y = std::log(o.eps_out);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    double k = static_cast<double>(eps_grid.size());
    return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

std::vector<GammaCurveRow> gamma_curves(const std::vector<int>& dims) {
    std::vector<GammaCurveRow> rows;
    for (int d : dims) {
        GammaCurveRow row;
        row.d = d;
        row.r_max = max_transversal_degree(d);
        row.D = row.r_max + 1;
        row.gamma = gamma_value(d);
        row.residue = d % 3;
        rows.push_back(row);
    }
    return rows;
}

} // namespace qrm
