#include <doctest.h>

#include <stdexcept>

#include "qrm/gates.hpp"

using namespace qrm;

namespace {

// Independent recomputation of the scan/check decision value for a witness:
// t = S(F^3) + k^3 mod d, by direct cubing of the evaluations.
int witness_violation(const QRMCode& code, const Polynomial& F) {
    const Field& f = code.field;
    long long s = 0;
    for (int v : evaluate(F)) s += static_cast<long long>(v) * v * v;
    int k = F.shift();
    return f.reduce(s + static_cast<long long>(k) * k * k);
}

} // namespace

TEST_CASE("conjugating X by the cubic gate is a quadratic phase") {
    Field f(5);
    PhasePolynomial g = conjugate_x_by_m(f, 1);
    CHECK(g.a0 == 1);
    CHECK(g.a1 == 3);
    CHECK(g.a2 == 3);
    CHECK(g.a3 == 0);
    CHECK(g.degree() == 2);
    CHECK(hierarchy_level(g) == 2); // Clifford, so M sits at level 3
    PhasePolynomial m(f);
    m.a3 = 2;
    CHECK(hierarchy_level(m) == 3);
    PhasePolynomial pauli(f);
    pauli.a1 = 1;
    CHECK(hierarchy_level(pauli) == 1);
    CHECK_THROWS_AS(conjugate_x_by_m(f, 0), std::invalid_argument);
    CHECK_THROWS_AS(conjugate_x_by_m(f, 5), std::invalid_argument);
}

TEST_CASE("maximal transversal degree per dimension") {
    CHECK(max_transversal_degree(5) == 1);
    CHECK(max_transversal_degree(7) == 1);
    CHECK(max_transversal_degree(11) == 3);
    CHECK(max_transversal_degree(13) == 3);
    CHECK(max_transversal_degree(17) == 5);
    CHECK_THROWS_AS(max_transversal_degree(9), std::invalid_argument);
}

TEST_CASE("transversality holds below the degree bound") {
    for (int mu : {1, 2, 4}) {
        CHECK(transversality_check(build_code(5, 1), mu).holds);
        CHECK(transversality_check(build_code(7, 1), mu).holds);
    }
    CHECK(transversality_check(build_code(11, 3), 1).holds);
    CHECK(transversality_check(build_code(11, 3), 10).holds);
    CHECK(transversality_check(build_code(13, 3), 1).holds);
    CHECK(transversality_check(build_code(13, 3), 12).holds);
}

TEST_CASE("transversality fails above the degree bound, with a real witness") {
    struct Case { int d, r; };
    for (Case c : {Case{5, 2}, Case{7, 2}, Case{11, 4}, Case{13, 4}}) {
        QRMCode code = build_code(c.d, c.r);
        TransversalityReport rep = transversality_check(code, 1);
        CHECK_FALSE(rep.holds);
        CHECK(rep.witness.degree() <= c.r);
        // The reported witness genuinely violates the phase identity.
        int t = witness_violation(code, rep.witness);
        CHECK(t != 0);
        CHECK(rep.witness_shift == rep.witness.shift());
        CHECK(code.field.reduce(rep.witness_power_sum
                                + static_cast<long long>(rep.witness_shift)
                                      * rep.witness_shift * rep.witness_shift)
              == t);
    }
}

TEST_CASE("mu validation") {
    QRMCode code = build_code(5, 1);
    CHECK_THROWS_AS(transversality_check(code, 0), std::invalid_argument);
    CHECK_THROWS_AS(transversality_check(code, 5), std::invalid_argument);
}

TEST_CASE("scan agrees with the direct check for every mu") {
    struct Case { int d, r; };
    for (Case c : {Case{5, 1}, Case{5, 2}, Case{7, 1}, Case{7, 3}, Case{11, 3},
                   Case{13, 4}}) {
        QRMCode code = build_code(c.d, c.r);
        TransversalityScan serial = transversality_scan_serial(code);
        TransversalityScan kernel = transversality_scan(code);
        CHECK(serial.holds == kernel.holds);
        CHECK(serial.witness_index == kernel.witness_index);
        for (int mu = 1; mu < c.d; ++mu) {
            TransversalityReport rep = transversality_check(code, mu);
            CHECK(rep.holds == static_cast<bool>(serial.holds[static_cast<size_t>(mu)]));
            if (!rep.holds) {
                long long idx = serial.witness_index[static_cast<size_t>(mu)];
                REQUIRE(idx >= 0);
                Polynomial w = scan_witness_polynomial(code, idx);
                CHECK(witness_violation(code, w) != 0);
            }
        }
    }
}

TEST_CASE("scan witness decoding validates its range") {
    QRMCode code = build_code(5, 1);
    CHECK_THROWS_AS(scan_witness_polynomial(code, -1), std::invalid_argument);
    CHECK_THROWS_AS(scan_witness_polynomial(code, 25), std::invalid_argument);
    Polynomial p = scan_witness_polynomial(code, 7); // digits (2, 1): 2 + x
    CHECK(p.coeffs[0] == 2);
    CHECK(p.coeffs[1] == 1);
}

TEST_CASE("mu classes: cosets of the cubic residues") {
    MuClassification c7 = mu_equivalence_classes(7);
    REQUIRE(c7.classes.size() == 3);
    CHECK(c7.classes[0] == std::vector<int>{1, 6});
    CHECK(c7.classes[1] == std::vector<int>{2, 5});
    CHECK(c7.classes[2] == std::vector<int>{3, 4});

    CHECK(mu_equivalence_classes(5).classes.size() == 1);
    CHECK(mu_equivalence_classes(11).classes.size() == 1);
    CHECK(mu_equivalence_classes(17).classes.size() == 1);

    MuClassification c13 = mu_equivalence_classes(13);
    REQUIRE(c13.classes.size() == 3);
    size_t covered = 0;
    for (const std::vector<int>& cls : c13.classes) {
        CHECK(cls.size() == 4); // (d-1)/3
        covered += cls.size();
    }
    CHECK(covered == 12);
    CHECK(c13.classes[0].front() == 1);
    CHECK(c13.classes[1].front() == 2);
}
