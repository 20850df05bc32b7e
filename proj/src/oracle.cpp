#include "qrm/oracle.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

#include "qrm/errors.hpp"

namespace qrm {

namespace {

using Complex = std::complex<double>;

constexpr double kPi = 3.14159265358979323846264338327950288;

// omega^t as a complex number; t is reduced mod d here, so callers may pass
// any integer accumulation.
Complex omega_pow(int d, long long t) {
    long long u = t % d;
    if (u < 0) u += d;
    double angle = 2.0 * kPi * static_cast<double>(u) / d;
    return Complex(std::cos(angle), std::sin(angle));
}

void validate_single(int d) {
    if (!is_prime(d) || d < 5)
        throw std::invalid_argument("gate: d must be a prime >= 5");
}

long long checked_dim(int d, int n) {
    long long dim = 1;
    for (int i = 0; i < n; ++i) {
        dim *= d;
        if (dim > 200000)
            throw capacity_error("oracle: state dimension " + std::to_string(d)
                                 + "^" + std::to_string(n)
                                 + " exceeds the dense budget (d <= 7)");
    }
    return dim;
}

// Big-endian basis index: site 0 (the evaluation point x = 1) is the most
// significant digit.
long long pack_index(int d, const EvalVec& v) {
    long long t = 0;
    for (int a : v) t = t * d + a;
    return t;
}

} // namespace

GateMatrix gate_x(int d) {
    validate_single(d);
    GateMatrix g = GateMatrix::Zero(d, d);
    for (int x = 0; x < d; ++x) g((x + 1) % d, x) = 1.0;
    return g;
}

GateMatrix gate_z(int d) {
    validate_single(d);
    GateMatrix g = GateMatrix::Zero(d, d);
    for (int x = 0; x < d; ++x) g(x, x) = omega_pow(d, x);
    return g;
}

GateMatrix gate_h(int d) {
    validate_single(d);
    GateMatrix g(d, d);
    double norm = 1.0 / std::sqrt(static_cast<double>(d));
    for (int x = 0; x < d; ++x)
        for (int y = 0; y < d; ++y)
            g(y, x) = norm * omega_pow(d, static_cast<long long>(x) * y);
    return g;
}

GateMatrix gate_m(int d, int mu) {
    validate_single(d);
    GateMatrix g = GateMatrix::Zero(d, d);
    for (int x = 0; x < d; ++x)
        g(x, x) = omega_pow(d, static_cast<long long>(mu) * x * x * x);
    return g;
}

GateMatrix gate_z_ab(int d, int a, int b) {
    validate_single(d);
    GateMatrix g = GateMatrix::Zero(d, d);
    for (int x = 0; x < d; ++x)
        g(x, x) = omega_pow(d, static_cast<long long>(a) * x
                                   + static_cast<long long>(b) * x * x);
    return g;
}

GateMatrix gate_x_ab(int d, int a, int b) {
    validate_single(d);
    if (b % d == 0)
        throw std::invalid_argument("gate_x_ab: b must be nonzero mod d");
    GateMatrix g = GateMatrix::Zero(d, d);
    for (int x = 0; x < d; ++x) {
        int y = static_cast<int>((static_cast<long long>(a)
                                  + static_cast<long long>(b) * x) % d);
        if (y < 0) y += d;
        g(y, x) = 1.0;
    }
    return g;
}

GateMatrix gate_cz(int d) {
    validate_single(d);
    GateMatrix g = GateMatrix::Zero(d * d, d * d);
    for (int x = 0; x < d; ++x)
        for (int y = 0; y < d; ++y)
            g(x * d + y, x * d + y) = omega_pow(d, static_cast<long long>(x) * y);
    return g;
}

bool is_unitary(const GateMatrix& g, double tol) {
    GateMatrix prod = g.adjoint() * g;
    return (prod - GateMatrix::Identity(g.rows(), g.cols())).cwiseAbs().maxCoeff()
           < tol;
}

bool approx_equal(const GateMatrix& a, const GateMatrix& b, double tol) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    return (a - b).cwiseAbs().maxCoeff() < tol;
}

StateVector build_logical_state(const QRMCode& code, int k) {
    const int d = code.d();
    const long long dim = checked_dim(d, code.n);
    std::vector<EvalVec> support = logical_state_support(code, k);
    StateVector psi = StateVector::Zero(dim);
    double amp = 1.0 / std::sqrt(static_cast<double>(support.size()));
    for (const EvalVec& v : support) psi(pack_index(d, v)) += amp;
    return psi;
}

namespace {

// Group average (1/d) sum_j g^j of one generator's unitary action, built
// basis state by basis state in closed form: X-type generators permute
// |v> -> |v + j x_g>, Z-type generators contribute phases omega^(j <z_g, v>).
GateMatrix generator_average(const QRMCode& code, const PauliOperator& g,
                             long long dim) {
    const int d = code.d();
    const int n = code.n;
    GateMatrix avg = GateMatrix::Zero(dim, dim);
    const double inv_d = 1.0 / d;
    EvalVec v(static_cast<size_t>(n));
    for (long long col = 0; col < dim; ++col) {
        long long t = col;
        for (int i = n - 1; i >= 0; --i, t /= d)
            v[static_cast<size_t>(i)] = static_cast<int>(t % d);
        for (int j = 0; j < d; ++j) {
            long long row = 0;
            long long phase = 0;
            for (int i = 0; i < n; ++i) {
                int a = (v[static_cast<size_t>(i)] + j * g.x[static_cast<size_t>(i)]) % d;
                row = row * d + a;
                phase += static_cast<long long>(j) * g.z[static_cast<size_t>(i)]
                         * v[static_cast<size_t>(i)];
            }
            avg(row, col) += inv_d * omega_pow(d, phase);
        }
    }
    return avg;
}

} // namespace

GateMatrix code_projector(const QRMCode& code) {
    const int d = code.d();
    if (d != 5)
        throw capacity_error("code_projector: dense projector is d = 5 only");
    const long long dim = checked_dim(d, code.n);
    GateMatrix proj = GateMatrix::Identity(dim, dim);
    for (const PauliOperator& g : code.x_gens)
        proj = proj * generator_average(code, g, dim);
    for (const PauliOperator& g : code.z_gens)
        proj = proj * generator_average(code, g, dim);
    return proj;
}

namespace {

// Apply the phase-free Pauli X_p.x Z_p.z to a dense state: Z phases are read
// off the source basis state, then digits shift by the X part.
StateVector apply_pauli(const QRMCode& code, const PauliOperator& p,
                        const StateVector& psi) {
    const int d = code.d();
    const int n = code.n;
    StateVector out = StateVector::Zero(psi.size());
    EvalVec v(static_cast<size_t>(n));
    for (long long col = 0; col < psi.size(); ++col) {
        if (psi(col) == Complex(0.0, 0.0)) continue;
        long long t = col;
        for (int i = n - 1; i >= 0; --i, t /= d)
            v[static_cast<size_t>(i)] = static_cast<int>(t % d);
        long long row = 0;
        long long phase = 0;
        for (int i = 0; i < n; ++i) {
            int a = (v[static_cast<size_t>(i)] + p.x[static_cast<size_t>(i)]) % d;
            row = row * d + a;
            phase += static_cast<long long>(p.z[static_cast<size_t>(i)]) * a;
        }
        out(row) += omega_pow(d, phase) * psi(col);
    }
    return out;
}

} // namespace

bool verify_stabilizers(const QRMCode& code) {
    const int d = code.d();
    const double tol = 1e-12;
    for (int k = 0; k < d; ++k) {
        StateVector psi = build_logical_state(code, k);
        for (const PauliOperator& g : code.x_gens)
            if ((apply_pauli(code, g, psi) - psi).cwiseAbs().maxCoeff() >= tol)
                return false;
        for (const PauliOperator& g : code.z_gens)
            if ((apply_pauli(code, g, psi) - psi).cwiseAbs().maxCoeff() >= tol)
                return false;
        StateVector flipped = apply_pauli(code, code.logical_z, psi);
        if ((flipped - omega_pow(d, k) * psi).cwiseAbs().maxCoeff() >= tol)
            return false;
        StateVector raised = apply_pauli(code, code.logical_x, psi);
        StateVector next = build_logical_state(code, (k + 1) % d);
        if ((raised - next).cwiseAbs().maxCoeff() >= tol) return false;
    }
    return true;
}

bool verify_transversality_numeric(const QRMCode& code, int mu) {
    const int d = code.d();
    if (mu <= 0 || mu >= d)
        throw std::invalid_argument("verify_transversality_numeric: mu in 1..d-1");
    const int n = code.n;
    const double tol = 1e-12;
    for (int k = 0; k < d; ++k) {
        StateVector psi = build_logical_state(code, k);
        StateVector acted = psi;
        for (long long idx = 0; idx < psi.size(); ++idx) {
            if (psi(idx) == Complex(0.0, 0.0)) continue;
            long long t = idx;
            long long cubes = 0;
            for (int i = 0; i < n; ++i, t /= d) {
                long long a = t % d;
                cubes += a * a * a;
            }
            acted(idx) = omega_pow(d, -static_cast<long long>(mu) * cubes) * psi(idx);
        }
        long long k3 = static_cast<long long>(k) * k * k;
        StateVector expect = omega_pow(d, static_cast<long long>(mu) * k3) * psi;
        if ((acted - expect).cwiseAbs().maxCoeff() >= tol) return false;
    }
    return true;
}

bool verify_appendix_identities(int d) {
    if (d != 5)
        throw std::invalid_argument("verify_appendix_identities: checked at d = 5");
    const double tol = 1e-12;
    Field f(d);
    GateMatrix X = gate_x(d), Z = gate_z(d), H = gate_h(d);

    // (a) Conjugating X by the cubic gate leaves X times a quadratic phase.
    for (int mu = 0; mu < d; ++mu) {
        GateMatrix M = gate_m(d, mu);
        GateMatrix lhs = M * X * M.adjoint();
        GateMatrix D = GateMatrix::Zero(d, d);
        for (int x = 0; x < d; ++x)
            D(x, x) = omega_pow(d, static_cast<long long>(mu)
                                       * (3LL * x * x + 3LL * x + 1LL));
        if (!approx_equal(lhs, X * D, tol)) return false;
    }

    // (b) The affine permutation moves the cubic parameter: the conjugated
    // gate is diagonal with phase polynomial mu (a + b x)^3.
    for (int mu = 0; mu < d; ++mu)
        for (int a = 0; a < d; ++a)
            for (int b = 1; b < d; ++b) {
                GateMatrix C = gate_x_ab(d, a, b).adjoint() * gate_m(d, mu)
                               * gate_x_ab(d, a, b);
                for (int x = 0; x < d; ++x)
                    for (int y = 0; y < d; ++y) {
                        long long ax = a + static_cast<long long>(b) * x;
                        Complex want = x == y
                                           ? omega_pow(d, mu * ax * ax * ax)
                                           : Complex(0.0, 0.0);
                        if (std::abs(C(y, x) - want) >= tol) return false;
                    }
            }

    // (c) Conjugating any Pauli by the cubic gate gives that Pauli times a
    // diagonal whose phase polynomial, mu ((x+a)^3 - x^3), is quadratic:
    // the cubic gate sits in the third hierarchy level.
    for (int mu = 0; mu < d; ++mu)
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b) {
                GateMatrix M = gate_m(d, mu);
                GateMatrix P = GateMatrix::Zero(d, d);
                for (int x = 0; x < d; ++x)
                    P((x + a) % d, x) = omega_pow(d, static_cast<long long>(b) * x);
                GateMatrix C = M * P * M.adjoint();
                for (int x = 0; x < d; ++x)
                    for (int y = 0; y < d; ++y) {
                        long long xa = x + a;
                        long long quad = static_cast<long long>(mu)
                                         * (xa * xa * xa
                                            - static_cast<long long>(x) * x * x);
                        Complex want = y == (x + a) % d
                                           ? omega_pow(d, quad + static_cast<long long>(b) * x)
                                           : Complex(0.0, 0.0);
                        if (std::abs(C(y, x) - want) >= tol) return false;
                    }
            }

    // (d) The Fourier gate swaps the Pauli roles, and conjugates the affine
    // permutation into a phase times the inverse scaling permutation.
    if (!approx_equal(H * X * H.adjoint(), Z, tol)) return false;
    if (!approx_equal(H * Z * H.adjoint(), X.adjoint(), tol)) return false;
    for (int a = 0; a < d; ++a)
        for (int b = 1; b < d; ++b) {
            GateMatrix C = H * gate_x_ab(d, a, b) * H.adjoint();
            int binv = f.inv(b);
            GateMatrix E = GateMatrix::Zero(d, d);
            for (int x = 0; x < d; ++x) {
                long long phase = static_cast<long long>(a) * binv * x;
                E((binv * x) % d, x) = omega_pow(d, phase);
            }
            if (!approx_equal(C, E, tol)) return false;
        }
    return true;
}

DistillationOutcome simulate_distillation_exact(const QRMCode& code, double eps,
                                                int mu, bool allow_large) {
    const int d = code.d();
    const int n = code.n;
    if (!(eps >= 0.0 && eps < 1.0))
        throw std::invalid_argument("simulate_distillation_exact: eps in [0, 1)");
    if (mu <= 0 || mu >= d)
        throw std::invalid_argument("simulate_distillation_exact: mu in 1..d-1");
    if (d > 7 || (d == 7 && !allow_large))
        throw capacity_error("simulate_distillation_exact: " + std::to_string(d)
                             + "^" + std::to_string(2 * n)
                             + " branch amplitudes exceed the budget"
                             + (d == 7 ? " (pass allow_large to run d = 7)" : ""));

    const long long dim = checked_dim(d, n);
    // Branch probability depends only on the number of nonzero digits.
    std::vector<double> pow_keep(static_cast<size_t>(n + 1)),
        pow_err(static_cast<size_t>(n + 1));
    pow_keep[0] = pow_err[0] = 1.0;
    for (int j = 1; j <= n; ++j) {
        pow_keep[static_cast<size_t>(j)] = pow_keep[static_cast<size_t>(j - 1)] * (1.0 - eps);
        pow_err[static_cast<size_t>(j)] = pow_err[static_cast<size_t>(j - 1)] * (eps / (d - 1));
    }
    // All Z-syndrome sectors are accepted after correction; the branch
    // amplitudes have uniform magnitude, so each of the d^(n-r-1) sectors
    // holds the same mass as the trivial one and the factor is exact.
    double sector_factor = 1.0;
    for (int j = 0; j < n - code.r - 1; ++j) sector_factor *= d;

    std::vector<StateVector> logicals;
    for (int k = 0; k < d; ++k) logicals.push_back(build_logical_state(code, k));
    // Support indices and amplitude normalization for the lazy d = 7 route.
    std::vector<std::vector<long long>> support_idx(static_cast<size_t>(d));
    for (int k = 0; k < d; ++k)
        for (const EvalVec& v : logical_state_support(code, k))
            support_idx[static_cast<size_t>(k)].push_back(pack_index(d, v));

    GateMatrix proj;
    if (d == 5) proj = code_projector(code);

    const double amp_norm = 1.0 / std::sqrt(static_cast<double>(dim));
    const double support_norm =
        1.0 / std::sqrt(static_cast<double>(support_idx[0].size()));

    double p_accept = 0.0;
    std::vector<double> mass(static_cast<size_t>(d), 0.0);
    EvalVec e(static_cast<size_t>(n));
    StateVector psi(dim);
    std::vector<Complex> a(static_cast<size_t>(d));

    for (long long branch = 0; branch < dim; ++branch) {
        long long t = branch;
        int nz = 0;
        for (int i = n - 1; i >= 0; --i, t /= d) {
            e[static_cast<size_t>(i)] = static_cast<int>(t % d);
            nz += e[static_cast<size_t>(i)] != 0;
        }
        double prob = pow_keep[static_cast<size_t>(n - nz)] * pow_err[static_cast<size_t>(nz)];
        if (prob == 0.0) continue;

        double norm2;
        if (d == 5) {
            // Honest route: build the branch state amplitude by amplitude,
            // project with the dense codespace projector, then read the
            // logical amplitudes.
            for (long long idx = 0; idx < dim; ++idx) {
                long long phase = 0;
                long long u = idx;
                for (int i = n - 1; i >= 0; --i, u /= d) {
                    long long v = u % d;
                    phase += e[static_cast<size_t>(i)] * v
                             - static_cast<long long>(mu) * v * v * v;
                }
                psi(idx) = amp_norm * omega_pow(d, phase);
            }
            StateVector projected = proj * psi;
            norm2 = projected.squaredNorm();
            if (norm2 < 1e-18) continue;
            for (int k = 0; k < d; ++k) a[static_cast<size_t>(k)] = logicals[static_cast<size_t>(k)].dot(projected);
        } else {
            // Rank-d contraction: the projector is sum_k |k_L><k_L|, so only
            // the branch amplitudes on the codeword supports are needed.
            for (int k = 0; k < d; ++k) {
                Complex acc(0.0, 0.0);
                for (long long idx : support_idx[static_cast<size_t>(k)]) {
                    long long phase = 0;
                    long long u = idx;
                    for (int i = n - 1; i >= 0; --i, u /= d) {
                        long long v = u % d;
                        phase += e[static_cast<size_t>(i)] * v
                                 - static_cast<long long>(mu) * v * v * v;
                    }
                    acc += omega_pow(d, phase);
                }
                a[static_cast<size_t>(k)] = support_norm * amp_norm * acc;
            }
            norm2 = 0.0;
            for (int k = 0; k < d; ++k) norm2 += std::norm(a[static_cast<size_t>(k)]);
            if (norm2 < 1e-18) continue;
        }

        p_accept += prob * norm2 * sector_factor;
        // Logical class from the twisted X basis: the codeword phases
        // omega^(mu k^3) produced by the transversal gate are absorbed into
        // the basis, so class j collects amplitude sum_k conj(a_k)
        // omega^(mu k^3 + j k) / sqrt(d).
        for (int j = 0; j < d; ++j) {
            Complex b(0.0, 0.0);
            for (int k = 0; k < d; ++k) {
                long long k3 = static_cast<long long>(k) * k * k;
                b += std::conj(a[static_cast<size_t>(k)])
                     * omega_pow(d, static_cast<long long>(mu) * k3
                                        + static_cast<long long>(j) * k);
            }
            mass[static_cast<size_t>(j)] +=
                prob * std::norm(b) / d * sector_factor;
        }
    }

    DistillationOutcome out;
    out.p_accept = p_accept;
    out.logical_dist.resize(static_cast<size_t>(d));
    double bad = 0.0;
    for (int j = 0; j < d; ++j) {
        out.logical_dist[static_cast<size_t>(j)] = mass[static_cast<size_t>(j)] / p_accept;
        if (j != 0) bad += mass[static_cast<size_t>(j)];
    }
    out.eps_out = bad / p_accept;
    return out;
}

} // namespace qrm
