#include "qrm/gates.hpp"

#include <algorithm>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qrm/errors.hpp"
#include "qrm/odometer.hpp"

namespace qrm {

PhasePolynomial conjugate_x_by_m(const Field& f, int mu) {
    if (mu <= 0 || mu >= f.modulus())
        throw std::invalid_argument("conjugate_x_by_m: mu must be in 1..d-1");
    // omega^(mu (n+1)^3) X = X omega^(mu n^3) omega^(mu (3n^2 + 3n + 1))
    PhasePolynomial g(f);
    g.a0 = f.reduce(mu);
    g.a1 = f.mul(3, mu);
    g.a2 = f.mul(3, mu);
    return g;
}

int hierarchy_level(const PhasePolynomial& g) {
    int deg = g.degree();
    return deg <= 1 ? 1 : deg;
}

int max_transversal_degree(int d) {
    if (!is_prime(d) || d < 5)
        throw std::invalid_argument("max_transversal_degree: d must be a prime >= 5");
    return (d - 2) / 3;
}

namespace {

void validate_mu(const QRMCode& code, int mu) {
    if (mu <= 0 || mu >= code.d())
        throw std::invalid_argument("transversality: mu must be in 1..d-1");
}

long long support_space_size(const QRMCode& code) {
    long long total = 1;
    for (int j = 0; j <= code.r; ++j) total *= code.d();
    return total;
}

} // namespace

TransversalityReport transversality_check(const QRMCode& code, int mu) {
    validate_mu(code, mu);
    const Field& f = code.field;
    const int d = code.d();

    // Walk every degree <= r polynomial F, shift k = coefficient tuple digit
    // 0, and test mu (S(F^3) + k^3) = 0 mod d through the algebraic route:
    // F^3 by folded convolution, S by the constant-coefficient rule.
    const long long total = support_space_size(code);
    std::vector<int> digits(static_cast<size_t>(code.r) + 1, 0);
    for (long long idx = 0; idx < total; ++idx) {
        long long t = idx;
        for (int j = 0; j <= code.r; ++j, t /= d)
            digits[static_cast<size_t>(j)] = static_cast<int>(t % d);
        Polynomial F(f);
        for (int j = 0; j <= code.r; ++j) F.coeffs[static_cast<size_t>(j)] = digits[static_cast<size_t>(j)];
        Polynomial cube = poly_mul(poly_mul(F, F), F);
        int s = power_sum(cube);
        int k = digits[0];
        int k3 = f.mul(k, f.mul(k, k));
        if (f.mul(mu, f.add(s, k3)) != 0)
            return TransversalityReport{false, F, k, s};
    }
    return TransversalityReport{true, Polynomial(f), 0, 0};
}

namespace {

// Core of the scan: visit tuples [first, first+count) of the degree <= r
// coefficient space and fold failures into witness (index per mu, -1 when
// clean). The evaluation vector is maintained incrementally and cubes are
// table lookups, so each tuple costs O(n) plus an O(d) mu loop only on
// failure.
void scan_range(const QRMCode& code, long long first, long long count,
                std::vector<long long>& witness) {
    const Field& f = code.field;
    const int d = code.d();
    const int n = code.n;
    std::vector<int> cube(static_cast<size_t>(d));
    for (int v = 0; v < d; ++v) cube[static_cast<size_t>(v)] = f.mul(v, f.mul(v, v));

    std::vector<std::vector<int>> powtab;
    for (int m = 0; m <= code.r; ++m) powtab.push_back(monomial_row(f, m));
    std::vector<int> digits;
    EvalVec eval;
    seed_state(f, powtab, EvalVec(static_cast<size_t>(n), 0), first, digits, eval);

    walk_incremental(d, powtab, digits, eval, count,
                     [&](const EvalVec& e, long long step) {
                         long long s = 0;
                         for (int v : e) s += cube[static_cast<size_t>(v)];
                         const long long idx = first + step;
                         const int k = static_cast<int>(idx % d);
                         const int t = f.reduce(s + cube[static_cast<size_t>(k)]);
                         if (t == 0) return;
                         for (int mu = 1; mu < d; ++mu) {
                             if (f.mul(mu, t) == 0) continue; // never for t != 0
                             long long& w = witness[static_cast<size_t>(mu)];
                             if (w < 0 || idx < w) w = idx;
                         }
                     });
}

TransversalityScan scan_result(const QRMCode& code,
                               const std::vector<long long>& witness) {
    TransversalityScan out;
    out.d = code.d();
    out.r = code.r;
    out.holds.assign(static_cast<size_t>(out.d), 1);
    out.witness_index = witness;
    for (int mu = 1; mu < out.d; ++mu)
        out.holds[static_cast<size_t>(mu)] = witness[static_cast<size_t>(mu)] < 0;
    return out;
}

} // namespace

TransversalityScan transversality_scan_serial(const QRMCode& code) {
    std::vector<long long> witness(static_cast<size_t>(code.d()), -1);
    scan_range(code, 0, support_space_size(code), witness);
    return scan_result(code, witness);
}

TransversalityScan transversality_scan(const QRMCode& code) {
    const int d = code.d();
    const long long total = support_space_size(code);
    // Partition over the top two digits; each block is a contiguous index
    // range, and min-merging witness indices makes the result independent of
    // the schedule.
    const long long blocks = static_cast<long long>(d) * d;
    const long long inner = total / blocks;
    int max_threads = 1;
#ifdef _OPENMP
    max_threads = omp_get_max_threads();
#endif
    std::vector<std::vector<long long>> partial(
        static_cast<size_t>(max_threads),
        std::vector<long long>(static_cast<size_t>(d), -1));

#pragma omp parallel for schedule(static)
    for (long long blk = 0; blk < blocks; ++blk) {
        int tid = 0;
#ifdef _OPENMP
        tid = omp_get_thread_num();
#endif
        scan_range(code, blk * inner, inner, partial[static_cast<size_t>(tid)]);
    }

    std::vector<long long> witness(static_cast<size_t>(d), -1);
    for (const std::vector<long long>& p : partial)
        for (int mu = 1; mu < d; ++mu) {
            long long w = p[static_cast<size_t>(mu)];
            long long& dst = witness[static_cast<size_t>(mu)];
            if (w >= 0 && (dst < 0 || w < dst)) dst = w;
        }
    return scan_result(code, witness);
}

Polynomial scan_witness_polynomial(const QRMCode& code, long long index) {
    const int d = code.d();
    if (index < 0 || index >= support_space_size(code))
        throw std::invalid_argument("scan_witness_polynomial: index out of range");
    Polynomial F(code.field);
    for (int j = 0; j <= code.r; ++j, index /= d)
        F.coeffs[static_cast<size_t>(j)] = static_cast<int>(index % d);
    return F;
}

MuClassification mu_equivalence_classes(int d) {
    Field f(d);
    std::vector<int> residues = cubic_residues(f);
    std::vector<char> seen(static_cast<size_t>(d), 0);
    MuClassification out;
    for (int mu = 1; mu < d; ++mu) {
        if (seen[static_cast<size_t>(mu)]) continue;
        std::vector<int> cls;
        for (int rho : residues) {
            int v = f.mul(mu, rho);
            seen[static_cast<size_t>(v)] = 1;
            cls.push_back(v);
        }
        std::sort(cls.begin(), cls.end());
        out.classes.push_back(std::move(cls));
    }
    return out;
}

} // namespace qrm
