#pragma once

#include <Eigen/Dense>

#include "qrm/code.hpp"
#include "qrm/distill.hpp"

namespace qrm {

// Ground-truth dense simulator for small d. Everything here is literal
// matrix/state-vector quantum mechanics in double precision; the symbolic
// modules are validated against it. Matrices are affordable for single
// qudits at any d <= 17; n-qudit states are capped at d = 7 (7^6 amplitudes).

using GateMatrix = Eigen::MatrixXcd;
using StateVector = Eigen::VectorXcd;

// Single-qudit generators. omega = exp(2 pi i / d).
GateMatrix gate_x(int d);                    // |x> -> |x+1>
GateMatrix gate_z(int d);                    // diag omega^x
GateMatrix gate_h(int d);                    // sum_xy omega^(xy)/sqrt(d) |y><x|
GateMatrix gate_m(int d, int mu);            // diag omega^(mu x^3)
GateMatrix gate_z_ab(int d, int a, int b);   // diag omega^(a x + b x^2)
GateMatrix gate_x_ab(int d, int a, int b);   // |x> -> |a + b x|, needs b != 0
GateMatrix gate_cz(int d);                   // two-qudit diag omega^(x y)

bool is_unitary(const GateMatrix& g, double tol = 1e-12);
bool approx_equal(const GateMatrix& a, const GateMatrix& b, double tol = 1e-12);

// Codeword |k_L>: equal superposition, weight d^(-r/2), over the
// computational-basis states named by logical_state_support(code, k).
// Throws capacity_error when d^n exceeds the d = 7 budget.
StateVector build_logical_state(const QRMCode& code, int k);

// Exact codespace projector as the product over generators g of the group
// averages (1/d) sum_j g^j. Dense d^n x d^n, so d = 5 only; idempotence and
// rank d are checked in tests.
GateMatrix code_projector(const QRMCode& code);

// Every generator fixes every codeword, and logical Z scales |k_L> by
// omega^k, all within 1e-12.
bool verify_stabilizers(const QRMCode& code);

// Applying the inverse cubic gate M_(-mu) to every physical qudit acts on
// the codespace as the logical cubic gate with parameter +mu:
//   M_(-mu)^(tensor n) |k_L> = omega^(+mu k^3) |k_L>.
// The per-support-state phase is omega^(-mu S(F^3)) and S(F^3) = -k^3, so
// the signs cancel. Checked to 1e-12 amplitude error for the given mu.
bool verify_transversality_numeric(const QRMCode& code, int mu);

// Matrix identities behind the hierarchy and equivalence-class arguments,
// checked at d = 5 for all parameter values:
//  (a) M_mu X M_mu^dag = X diag(omega^(mu (3 x^2 + 3 x + 1)))
//  (b) X_ab^dag M_mu X_ab is diagonal with phase polynomial mu (a + b x)^3,
//      so the cubic coefficient moves from mu to b^3 mu
//  (c) M_mu (X^a Z^b) M_mu^dag is a permutation times a diagonal whose phase
//      polynomial is quadratic, i.e. Clifford
//  (d) H interchanges the Pauli roles: H X H^dag = Z, H Z H^dag = X^(-1),
//      and H X_ab H^dag maps |x> to omega^(a b^(-1) x) |b^(-1) x>, again a
//      phase times a permutation with the roles swapped
bool verify_appendix_identities(int d);

// Exact distillation round by explicit quantum mechanics. The depolarized
// input is diagonal in the twisted X basis, so the n-qudit state is an
// ensemble over d^n product branches: branch e carries probability
// prod_x q(e_x) with q(0) = 1-eps, q(k != 0) = eps/(d-1), and state
// M_(-mu)^(tensor n) Z_e |+...+>. Each branch is projected onto the
// codespace; X-type checks gate acceptance while every Z-type syndrome is
// accepted after correction, and since the branch amplitudes have uniform
// magnitude over the computational basis, the d^(n-r-1) Z-syndrome sectors
// carry exactly equal mass, giving an exact factor. The logical class is
// read in the twisted logical X basis (cubic-phase twist omega^(mu k^3)
// applied to the Fourier basis of the codewords). d = 5 uses the explicit
// projector; d = 7 contracts against the codeword basis instead (the
// projector has rank d) and is gated behind allow_large. Larger d throws
// capacity_error.
DistillationOutcome simulate_distillation_exact(const QRMCode& code, double eps,
                                                int mu = 1,
                                                bool allow_large = false);

} // namespace qrm
