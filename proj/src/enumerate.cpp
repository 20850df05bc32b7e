#include "qrm/enumerate.hpp"

#include <cmath>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qrm/errors.hpp"
#include "qrm/odometer.hpp"

namespace qrm {

namespace {

constexpr long long kBruteforceCap = 100000000;

long long space_size_capped(int d, int len, long long cap) {
    long long t = 1;
    for (int i = 0; i < len; ++i) {
        t *= d;
        if (t > cap) return cap + 1;
    }
    return t;
}

uint64_t upow(int base, int exp) {
    uint64_t t = 1;
    for (int i = 0; i < exp; ++i) t *= static_cast<uint64_t>(base);
    return t;
}

ClassWeightTable empty_table(const QRMCode& code) {
    ClassWeightTable t;
    t.d = code.d();
    t.r = code.r;
    t.n = code.n;
    t.counts.assign(static_cast<size_t>(code.n + 1) * static_cast<size_t>(code.d()), 0);
    return t;
}

void check_total(const ClassWeightTable& t) {
    uint64_t expect = upow(t.d, t.d - 1 - t.r);
    if (t.total() != expect)
        throw consistency_error("accepted_enumerator: table total "
                                + std::to_string(t.total()) + " != "
                                + std::to_string(expect));
}

long long bruteforce_size_or_throw(const QRMCode& code) {
    const int L = code.d() - 1 - code.r;
    long long total = space_size_capped(code.d(), L, kBruteforceCap);
    if (total > kBruteforceCap)
        throw capacity_error("accepted_enumerator_bruteforce: "
                             + std::to_string(code.d()) + "^" + std::to_string(L)
                             + " vectors exceed the 1e8 cap; use the charsum method");
    return total;
}

} // namespace

ClassWeightTable accepted_enumerator_bruteforce_serial(const QRMCode& code) {
    const Field& f = code.field;
    const int d = code.d();
    const int n = code.n;
    const int L = d - 1 - code.r;
    const long long total = bruteforce_size_or_throw(code);

    // Reference path: decode every tuple and evaluate from scratch by
    // Horner's rule, sharing no kernel code with the incremental variant.
    ClassWeightTable table = empty_table(code);
    std::vector<int> coeffs(static_cast<size_t>(L));
    for (long long idx = 0; idx < total; ++idx) {
        long long t = idx;
        for (int j = 0; j < L; ++j, t /= d)
            coeffs[static_cast<size_t>(j)] = static_cast<int>(t % d);
        int w = 0;
        long long s = 0;
        for (int x = 1; x <= n; ++x) {
            long long acc = 0;
            for (int j = L - 1; j >= 0; --j)
                acc = (acc * x + coeffs[static_cast<size_t>(j)]) % d;
            w += acc != 0;
            s += acc;
        }
        ++table.at(w, f.reduce(s));
    }
    check_total(table);
    return table;
}

ClassWeightTable accepted_enumerator_bruteforce(const QRMCode& code) {
    const Field& f = code.field;
    const int d = code.d();
    const int n = code.n;
    const int L = d - 1 - code.r;
    const long long total = bruteforce_size_or_throw(code);

    std::vector<std::vector<int>> powtab;
    for (int m = 0; m < L; ++m) powtab.push_back(monomial_row(f, m));

    const long long blocks = static_cast<long long>(d) * d;
    const long long inner = total / blocks;
    int max_threads = 1;
#ifdef _OPENMP
    max_threads = omp_get_max_threads();
#endif
    std::vector<ClassWeightTable> partial(static_cast<size_t>(max_threads),
                                          empty_table(code));

#pragma omp parallel for schedule(static)
    for (long long blk = 0; blk < blocks; ++blk) {
        int tid = 0;
#ifdef _OPENMP
        tid = omp_get_thread_num();
#endif
        ClassWeightTable& mine = partial[static_cast<size_t>(tid)];
        std::vector<int> digits;
        EvalVec eval;
        seed_state(f, powtab, EvalVec(static_cast<size_t>(n), 0), blk * inner,
                   digits, eval);
        walk_incremental(d, powtab, digits, eval, inner,
                         [&](const EvalVec& e, long long) {
                             int w = 0;
                             int s = 0;
                             for (int v : e) {
                                 w += v != 0;
                                 s += v;
                             }
                             ++mine.at(w, s % d);
                         });
    }

    ClassWeightTable table = empty_table(code);
    for (const ClassWeightTable& p : partial)
        for (size_t i = 0; i < table.counts.size(); ++i)
            table.counts[i] += p.counts[i];
    check_total(table);
    return table;
}

namespace {

// Coefficients of (1 + (d-1) y)^z (1 - y)^(n-z): row z, column w. These are
// the weight generating functions of one character sum across all n sites,
// z of which see the character trivially.
std::vector<std::vector<__int128>> weight_polynomials(int d, int n) {
    std::vector<std::vector<__int128>> rows;
    for (int z = 0; z <= n; ++z) {
        std::vector<__int128> poly{1};
        for (int i = 0; i < z; ++i) {
            std::vector<__int128> next(poly.size() + 1, 0);
            for (size_t j = 0; j < poly.size(); ++j) {
                next[j] += poly[j];
                next[j + 1] += poly[j] * (d - 1);
            }
            poly = std::move(next);
        }
        for (int i = 0; i < n - z; ++i) {
            std::vector<__int128> next(poly.size() + 1, 0);
            for (size_t j = 0; j < poly.size(); ++j) {
                next[j] += poly[j];
                next[j + 1] -= poly[j];
            }
            poly = std::move(next);
        }
        rows.push_back(std::move(poly));
    }
    return rows;
}

// Histogram C[s][z]: number of dual polynomials (degree <= r) with shift s
// and z zero evaluations. This is all the walk has to collect; the weight
// polynomials and the Fourier step reconstruct the table from it.
using ShiftZeroHist = std::vector<std::vector<uint64_t>>;

void charsum_range(const QRMCode& code,
                   const std::vector<std::vector<int>>& powtab, long long first,
                   long long count, ShiftZeroHist& hist) {
    const Field& f = code.field;
    const int d = code.d();
    std::vector<int> digits;
    EvalVec eval;
    seed_state(f, powtab, EvalVec(static_cast<size_t>(code.n), 0), first, digits,
               eval);
    walk_incremental(d, powtab, digits, eval, count,
                     [&](const EvalVec& e, long long step) {
                         int z = 0;
                         for (int v : e) z += v == 0;
                         ++hist[static_cast<size_t>((first + step) % d)]
                               [static_cast<size_t>(z)];
                     });
}

ClassWeightTable charsum_finish(const QRMCode& code, const ShiftZeroHist& hist) {
    const int d = code.d();
    const int n = code.n;
    std::vector<std::vector<__int128>> btab = weight_polynomials(d, n);

    // W[w][s] = sum_z hist[s][z] * btab[z][w], exact in 128-bit integers.
    std::vector<std::vector<__int128>> W(
        static_cast<size_t>(n + 1), std::vector<__int128>(static_cast<size_t>(d), 0));
    for (int s = 0; s < d; ++s)
        for (int z = 0; z <= n; ++z) {
            uint64_t c = hist[static_cast<size_t>(s)][static_cast<size_t>(z)];
            if (c == 0) continue;
            for (int w = 0; w <= n; ++w)
                W[static_cast<size_t>(w)][static_cast<size_t>(s)] +=
                    static_cast<__int128>(c) * btab[static_cast<size_t>(z)][static_cast<size_t>(w)];
        }

    // Inverse character transform over the shift. long double keeps the
    // rounding residual around 5e-5 at d=17; double would not survive the
    // ~1e21 dynamic range.
    const long double tau = 2.0L * 3.14159265358979323846264338327950288L;
    std::vector<long double> cosl_t(static_cast<size_t>(d)), sinl_t(static_cast<size_t>(d));
    for (int t = 0; t < d; ++t) {
        cosl_t[static_cast<size_t>(t)] = std::cos(tau * t / d);
        sinl_t[static_cast<size_t>(t)] = std::sin(tau * t / d);
    }
    long double scale = 1.0L;
    for (int j = 0; j <= code.r; ++j) scale *= d;

    ClassWeightTable table = empty_table(code);
    long double residual = 0.0L;
    for (int w = 0; w <= n; ++w)
        for (int m = 0; m < d; ++m) {
            long double re = 0.0L, im = 0.0L;
            for (int s = 0; s < d; ++s) {
                int t = (m * s) % d; // omega^(-ms) = cos - i sin at angle ms
                long double ws = static_cast<long double>(
                    W[static_cast<size_t>(w)][static_cast<size_t>(s)]);
                re += cosl_t[static_cast<size_t>(t)] * ws;
                im -= sinl_t[static_cast<size_t>(t)] * ws;
            }
            re /= scale;
            im /= scale;
            long double rounded = std::floor(re + 0.5L);
            long double err = std::fabs(re - rounded) + std::fabs(im);
            if (err > residual) residual = err;
            if (rounded < 0.0L)
                throw consistency_error("accepted_enumerator_charsum: negative count");
            table.at(w, m) = static_cast<uint64_t>(rounded);
        }
    if (residual >= 1e-3L)
        throw consistency_error("accepted_enumerator_charsum: rounding residual "
                                + std::to_string(static_cast<double>(residual)));
    check_total(table);
    return table;
}

ShiftZeroHist empty_hist(const QRMCode& code) {
    return ShiftZeroHist(static_cast<size_t>(code.d()),
                         std::vector<uint64_t>(static_cast<size_t>(code.n + 1), 0));
}

} // namespace

ClassWeightTable accepted_enumerator_charsum_serial(const QRMCode& code) {
    const Field& f = code.field;
    std::vector<std::vector<int>> powtab;
    for (int m = 0; m <= code.r; ++m) powtab.push_back(monomial_row(f, m));
    long long total = 1;
    for (int j = 0; j <= code.r; ++j) total *= code.d();
    ShiftZeroHist hist = empty_hist(code);
    charsum_range(code, powtab, 0, total, hist);
    return charsum_finish(code, hist);
}

ClassWeightTable accepted_enumerator_charsum(const QRMCode& code) {
    const Field& f = code.field;
    const int d = code.d();
    std::vector<std::vector<int>> powtab;
    for (int m = 0; m <= code.r; ++m) powtab.push_back(monomial_row(f, m));
    long long total = 1;
    for (int j = 0; j <= code.r; ++j) total *= d;

    const long long blocks = static_cast<long long>(d) * d;
    const long long inner = total / blocks;
    int max_threads = 1;
#ifdef _OPENMP
    max_threads = omp_get_max_threads();
#endif
    std::vector<ShiftZeroHist> partial(static_cast<size_t>(max_threads),
                                       empty_hist(code));

#pragma omp parallel for schedule(static)
    for (long long blk = 0; blk < blocks; ++blk) {
        int tid = 0;
#ifdef _OPENMP
        tid = omp_get_thread_num();
#endif
        charsum_range(code, powtab, blk * inner, inner,
                      partial[static_cast<size_t>(tid)]);
    }

    ShiftZeroHist hist = empty_hist(code);
    for (const ShiftZeroHist& p : partial)
        for (int s = 0; s < d; ++s)
            for (int z = 0; z <= code.n; ++z)
                hist[static_cast<size_t>(s)][static_cast<size_t>(z)] +=
                    p[static_cast<size_t>(s)][static_cast<size_t>(z)];
    return charsum_finish(code, hist);
}

ClassWeightTable accepted_enumerator(const QRMCode& code, Method method) {
    switch (method) {
        case Method::bruteforce:
            return accepted_enumerator_bruteforce(code);
        case Method::charsum:
            return accepted_enumerator_charsum(code);
        case Method::automatic:
        default: {
            const int L = code.d() - 1 - code.r;
            long long total = space_size_capped(code.d(), L, kBruteforceCap);
            return total <= kBruteforceCap
                       ? accepted_enumerator_bruteforce(code)
                       : accepted_enumerator_charsum(code);
        }
    }
}

} // namespace qrm
