#pragma once

#include <vector>

#include "qrm/poly.hpp"

namespace qrm {

// Phase-free symplectic representation of an n-qudit Pauli operator:
// site i carries X^x[i] Z^z[i]. All code properties used here (syndromes,
// distance, logical classes) are insensitive to the global phase.
struct PauliOperator {
    std::vector<int> x; // exponents of X per site
    std::vector<int> z; // exponents of Z per site
};

// Number of sites acted on nontrivially.
int weight(const PauliOperator& p);

// sum_i (p.x[i] q.z[i] - p.z[i] q.x[i]) mod d; zero iff p and q commute up
// to phase.
int symplectic(const Field& f, const PauliOperator& p, const PauliOperator& q);

// Degree-r shortened quantum Reed-Muller code on n = d-1 qudits, one logical
// qudit. X-type generators are X_F for the monomials F = x^m, m = 1..r,
// where X_F applies X^F(x) at site x. Z-type generators are Z_G for
// G = x^m, m = 1..d-2-r, the maximal unshifted set commuting with the
// X side. Logical X is X on every site; logical Z is Z^(d-1) on every site
// (the constant polynomial -1), which gives logical-Z eigenvalue omega^k on
// the k-th codeword.
struct QRMCode {
    Field field;
    int r;
    int n; // d - 1
    std::vector<PauliOperator> x_gens;
    std::vector<PauliOperator> z_gens;
    PauliOperator logical_x;
    PauliOperator logical_z;

    int d() const { return field.modulus(); }
    // Designed distance floor((d+1)/3) is reached at the maximal transversal
    // degree; for a general r the guaranteed Z-distance is r + 1.
    int designed_distance() const { return r + 1; }
};

// Validates 5 <= d <= 17 prime and 1 <= r <= d-3, builds generators, and
// checks the structural invariants (generator count n-1, pairwise
// commutation, logicals commuting with the stabilizer but not each other).
QRMCode build_code(int d, int r);

// Symplectic product of p against every generator, X-type first. All-zero
// syndrome means p is undetected.
std::vector<int> syndrome(const QRMCode& code, const PauliOperator& p);

struct ZErrorClass {
    bool detected; // some X-type generator sees it
    int m;         // logical Z power when undetected; m = 0 means stabilizer
};

// Classify the Z-type error Z_e (Z^e[x] at site x). The error is undetected
// exactly when its interpolating polynomial has degree <= d-2-r; its logical
// class is m = sum_x e[x] mod d, the power of logical Z it applies on the
// codespace.
ZErrorClass logical_class_of_z_error(const QRMCode& code, const EvalVec& e);

// Minimum weight of an undetected, non-stabilizer Z error; equals r + 1.
// Enumerates all coefficient vectors (g_0..g_{d-2-r}) when that space is at
// most 1e8; otherwise proves the value analytically: weight >= n - deg for
// any undetected error (a degree-D polynomial has at most D roots), matched
// by the witness with d-2-r distinct nonzero roots, whose shift is
// automatically nonzero.
int z_distance(const QRMCode& code);

struct BruteforceDistance {
    int full;   // over all symplectic pairs
    int x_only; // restricted to pure X errors
    int z_only; // restricted to pure Z errors
};

// Exhaustive distance over all d^(2n) symplectic vectors. X-part and Z-part
// detection decouple (the X part is checked against Z-type generators and
// vice versa), so the d^n single-type vectors are classified once and only
// undetected pairs are combined; stabilizer membership is an unshifted
// interpolant within the respective degree bound. Feasible for d = 5 and 7;
// beyond that throws capacity_error citing the d^(2n) bound.
BruteforceDistance full_distance_bruteforce(const QRMCode& code);

// The d^r evaluation vectors of all degree <= r polynomials with shift k:
// the computational-basis support of the k-th codeword. Order: coefficient
// tuples (f_1..f_r) in odometer order, f_1 fastest.
std::vector<EvalVec> logical_state_support(const QRMCode& code, int k);

} // namespace qrm
