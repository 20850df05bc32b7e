#pragma once

#include <vector>

#include "qrm/field.hpp"
#include "qrm/poly.hpp"

namespace qrm {

// Shared incremental kernel for walking coefficient spaces.
//
// A tuple of L digits over F_d (digit j = coefficient of some monomial) is
// advanced like an odometer, digit 0 fastest. Each unit increment of digit j
// adds its monomial's evaluation row to the running evaluation vector, so
// visiting all d^L tuples costs O(n) per step instead of a full polynomial
// evaluation. A wrapping digit has been incremented d times in total, which
// adds d * row = 0 mod d, so the carry needs no special casing.

// powtab row for the monomial x^e: entry i holds (i+1)^e mod d.
inline std::vector<int> monomial_row(const Field& f, int e) {
    std::vector<int> row(static_cast<size_t>(f.modulus() - 1));
    for (int i = 0; i < f.modulus() - 1; ++i) row[i] = f.pow(i + 1, e);
    return row;
}

// Decode a linear index (base d, digit j = (index / d^j) % d) into digits and
// the matching evaluation vector eval = base + sum_j digits[j] * powtab[j].
inline void seed_state(const Field& f, const std::vector<std::vector<int>>& powtab,
                       const std::vector<int>& base, long long index,
                       std::vector<int>& digits, std::vector<int>& eval) {
    const int d = f.modulus();
    const int L = static_cast<int>(powtab.size());
    const int n = static_cast<int>(base.size());
    digits.assign(static_cast<size_t>(L), 0);
    eval = base;
    for (int j = 0; j < L; ++j, index /= d) {
        int dig = static_cast<int>(index % d);
        digits[static_cast<size_t>(j)] = dig;
        if (dig == 0) continue;
        for (int i = 0; i < n; ++i)
            eval[static_cast<size_t>(i)] =
                f.add(eval[static_cast<size_t>(i)],
                      f.mul(dig, powtab[static_cast<size_t>(j)][static_cast<size_t>(i)]));
    }
}

// Visit `count` consecutive tuples starting from the state in digits/eval
// (which must be consistent, e.g. from seed_state). fn(eval, step) is called
// for every visited state, step = 0..count-1 relative to the start.
template <class Fn>
void walk_incremental(int d, const std::vector<std::vector<int>>& powtab,
                      std::vector<int>& digits, std::vector<int>& eval,
                      long long count, Fn&& fn) {
    const int n = static_cast<int>(eval.size());
    for (long long step = 0;;) {
        fn(static_cast<const std::vector<int>&>(eval), step);
        if (++step == count) break;
        for (size_t j = 0;; ++j) {
            const std::vector<int>& row = powtab[j];
            for (int i = 0; i < n; ++i) {
                int v = eval[static_cast<size_t>(i)] + row[static_cast<size_t>(i)];
                eval[static_cast<size_t>(i)] = v >= d ? v - d : v;
            }
            if (++digits[j] < d) break;
            digits[j] = 0;
        }
    }
}

} // namespace qrm
