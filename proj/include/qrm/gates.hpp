#pragma once

#include <vector>

#include "qrm/code.hpp"

namespace qrm {

// Diagonal phase gate omega^(a0 + a1 n + a2 n^2 + a3 n^3) represented by its
// exponent polynomial with coefficients mod d. Degree <= 1 is Pauli-diagonal,
// degree 2 is Clifford-diagonal, degree 3 with 3 a3 != 0 sits in the third
// level of the hierarchy (always the case for prime d > 3 and a3 != 0).
struct PhasePolynomial {
    Field field;
    int a0 = 0, a1 = 0, a2 = 0, a3 = 0;

    explicit PhasePolynomial(const Field& f) : field(f) {}

    int degree() const { return a3 ? 3 : a2 ? 2 : a1 ? 1 : 0; }
};

// Diagonal part of conjugating X by the cubic gate with parameter mu:
// the commutator is the Clifford-diagonal phase mu (3 n^2 + 3 n + 1),
// from (n+1)^3 - n^3.
PhasePolynomial conjugate_x_by_m(const Field& f, int mu);

// Clifford-hierarchy level of a diagonal phase gate: 1, 2, or 3.
int hierarchy_level(const PhasePolynomial& g);

// Largest degree with a transversal cubic gate: floor((d-2)/3), i.e. the
// largest r with 3r < d-1.
int max_transversal_degree(int d);

struct TransversalityReport {
    bool holds;
    // First failing support polynomial when holds is false.
    Polynomial witness;
    int witness_shift;     // its constant coefficient k
    int witness_power_sum; // S(F^3), which differs from -k^3 mod d
};

// Exact transversality check for one mu != 0: for every polynomial F of
// degree <= r (the codeword supports, grouped by shift k), cube F and
// verify omega^(-mu S(F^3)) = omega^(-mu k^3), i.e. mu (S(F^3) + k^3) = 0
// mod d. Uses poly_mul and the self-checking power_sum. Enumerates all
// d^(r+1) coefficient tuples; a false result carries the first witness.
TransversalityReport transversality_check(const QRMCode& code, int mu);

// One-pass variant covering every mu at once: computes t = S(F^3) + k^3 per
// support polynomial and tests mu * t = 0 mod d for all mu in an O(d) inner
// loop. Since t != 0 fails every nonzero mu alike, the per-mu verdicts agree,
// but each is checked with its own mu rather than assumed. The witness per mu
// is the smallest failing tuple index, so results are independent of the
// partitioning.
struct TransversalityScan {
    int d = 0, r = 0;
    std::vector<char> holds;              // index mu, entry 0 unused (true)
    std::vector<long long> witness_index; // -1 when none; coefficient tuple
                                          // index, digit j = coeff of x^j
};

TransversalityScan transversality_scan_serial(const QRMCode& code);
TransversalityScan transversality_scan(const QRMCode& code); // OpenMP kernel

// Decode a scan witness index back into the polynomial it names.
Polynomial scan_witness_polynomial(const QRMCode& code, long long index);

// Clifford equivalence classes of the cubic gates: mu ~ mu' iff mu'/mu is a
// cubic residue (conjugating by the scaling Clifford with parameter b maps
// parameter mu to b^3 mu). One class when d = 2 mod 3, three classes of
// (d-1)/3 when d = 1 mod 3. Classes are sorted internally and by smallest
// element.
struct MuClassification {
    std::vector<std::vector<int>> classes;
};

MuClassification mu_equivalence_classes(int d);

} // namespace qrm
