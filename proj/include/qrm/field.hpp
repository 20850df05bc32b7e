#pragma once

#include <stdexcept>
#include <string>

namespace qrm {

// Deterministic trial-division primality test; the moduli used here are tiny.
inline bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

// Arithmetic in the prime field F_d. Elements are plain machine integers in
// [0, d-1]; the modulus lives here, not per element, so enumeration kernels
// can work on raw integer arrays.
//
// Dimensions are odd primes >= 5. Smaller d is rejected: d = 2, 3 fall
// outside everything this library computes (d = 3 breaks the cubic-gate
// arguments because 3 == 0 there).
class Field {
public:
    explicit Field(int d) : d_(d) {
        if (!is_prime(d) || d < 5)
            throw std::domain_error("Field: modulus must be a prime >= 5, got "
                                    + std::to_string(d));
    }

    int modulus() const { return d_; }

    // Reduce an arbitrary integer into [0, d-1].
    int reduce(long long a) const {
        long long r = a % d_;
        return static_cast<int>(r < 0 ? r + d_ : r);
    }

    int add(int a, int b) const { int s = a + b; return s >= d_ ? s - d_ : s; }
    int sub(int a, int b) const { int s = a - b; return s < 0 ? s + d_ : s; }
    int mul(int a, int b) const { return (a * b) % d_; }
    int neg(int a) const { return a == 0 ? 0 : d_ - a; }

    // a^e for e >= 0 by square and multiply.
    int pow(int a, long long e) const {
        int base = reduce(a), acc = 1;
        for (; e > 0; e >>= 1) {
            if (e & 1) acc = mul(acc, base);
            base = mul(base, base);
        }
        return acc;
    }

    // Multiplicative inverse via Fermat: a^(d-2). Inverting zero is a
    // caller error.
    int inv(int a) const {
        if (reduce(a) == 0)
            throw std::domain_error("Field::inv: zero has no inverse");
        return pow(a, d_ - 2);
    }

    bool operator==(const Field& o) const { return d_ == o.d_; }

private:
    int d_;
};

} // namespace qrm
