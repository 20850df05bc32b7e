#pragma once

#include <cstdint>
#include <vector>

#include "qrm/code.hpp"

namespace qrm {

// Exact counts N[w][m] of accepted (undetected) Z-error vectors by Hamming
// weight w in [0, n] and logical class m in F_d. The accepted set is exactly
// the evaluation vectors of polynomials of degree <= d-2-r, so the total is
// d^(d-1-r). Counts fit uint64 (max 17^11 ~ 3.4e13) and convert to double
// exactly.
struct ClassWeightTable {
    int d = 0, r = 0, n = 0;
    std::vector<uint64_t> counts; // (n+1) x d, row-major by weight

    uint64_t at(int w, int m) const {
        return counts[static_cast<size_t>(w) * static_cast<size_t>(d)
                      + static_cast<size_t>(m)];
    }
    uint64_t& at(int w, int m) {
        return counts[static_cast<size_t>(w) * static_cast<size_t>(d)
                      + static_cast<size_t>(m)];
    }
    uint64_t total() const {
        uint64_t t = 0;
        for (uint64_t c : counts) t += c;
        return t;
    }
};

enum class Method { automatic, bruteforce, charsum };

// Direct enumeration of all d^(d-1-r) coefficient vectors (g_0..g_{d-2-r}).
// Weight is n minus the number of zero evaluations; class is m = sum_x e(x)
// = -g_0. Throws capacity_error above 1e8 vectors, naming the charsum
// alternative. The plain variant walks each tuple with a fresh Horner
// evaluation (reference); the kernel variant uses the incremental odometer
// and partitions the space across OpenMP workers, merging private tables by
// addition, so the result is independent of thread count.
ClassWeightTable accepted_enumerator_bruteforce_serial(const QRMCode& code);
ClassWeightTable accepted_enumerator_bruteforce(const QRMCode& code);

// Character-transform route to the same table. Acceptance of e is tested by
// averaging characters over the detecting span: the indicator of "all X-type
// checks zero and class m" is
//   (1/d^(r+1)) sum over F of degree <= r of omega^(<e, F>) omega^(-m f_0),
// so summing over e of fixed weight w turns into the weight generating
// function (1 + (d-1) y)^z (1 - y)^(n-z) per dual polynomial F with z zero
// values. Integer accumulators W[w][shift] are exact (__int128; they reach
// ~1e21 at d=17); the final length-d Fourier step runs in long double, whose
// 64-bit mantissa keeps the rounding residual near 5e-5 at d=17 (plain
// double would lose it entirely). Residual >= 1e-3 throws consistency_error.
ClassWeightTable accepted_enumerator_charsum_serial(const QRMCode& code);
ClassWeightTable accepted_enumerator_charsum(const QRMCode& code);

// Method dispatch: automatic picks bruteforce when d^(d-1-r) <= 1e8, else
// charsum.
ClassWeightTable accepted_enumerator(const QRMCode& code, Method method);

} // namespace qrm
