#pragma once

#include <map>
#include <vector>

#include "qrm/field.hpp"

namespace qrm {

// Polynomial function F: F_d^* -> F_d in canonical form.
//
// Because the domain excludes zero, x^(d-1) = 1 everywhere, so every function
// is uniquely a polynomial with exponents in [0, d-2]. coeffs[m] is the
// coefficient of x^m; the representation of a function is unique, which makes
// equality of functions equality of coefficient vectors.
//
// shift(F) = coeffs[0]. degree of the zero polynomial is defined as 0, so the
// zero polynomial counts as unshifted and of degree <= r for every r.
struct Polynomial {
    Field field;
    std::vector<int> coeffs; // length d-1, index = exponent

    explicit Polynomial(const Field& f)
        : field(f), coeffs(static_cast<size_t>(f.modulus() - 1), 0) {}

    int shift() const { return coeffs[0]; }

    int degree() const {
        for (int m = static_cast<int>(coeffs.size()) - 1; m > 0; --m)
            if (coeffs[m] != 0) return m;
        return 0;
    }

    bool is_zero() const {
        for (int c : coeffs)
            if (c != 0) return false;
        return true;
    }

    bool operator==(const Polynomial& o) const {
        return field == o.field && coeffs == o.coeffs;
    }
};

// Evaluations of a polynomial on the nonzero field elements: entry x-1 holds
// F(x) for x = 1..d-1. Bijective with Polynomial (unique interpolant of
// degree <= d-2).
using EvalVec = std::vector<int>;

// Canonical exponent for x^e as a function on F_d^*: since x^(d-1) = 1 on the
// whole domain (zero is never an argument), exponents fold mod d-1, with
// multiples of d-1 landing on the constant monomial x^0.
inline int fold_exponent(const Field& f, long long e) {
    return static_cast<int>(e % (f.modulus() - 1));
}

// Build the canonical polynomial from arbitrary (exponent, coefficient)
// terms, folding exponents and summing coefficients in F_d.
Polynomial reduce_flt(const Field& f, const std::map<long long, int>& raw);

Polynomial make_monomial(const Field& f, long long exponent, int coeff);

// Entry x-1 equals sum_m coeffs[m] x^m mod d, by Horner's rule.
EvalVec evaluate(const Polynomial& p);

// Inverse of evaluate. Uses the power-sum identity: for v with interpolant F,
// f_m = -sum_x v(x) x^(-m), because sum_x x^(j-m) vanishes unless j = m where
// it is -1. Exact in F_d, no linear solve needed.
Polynomial interpolate(const Field& f, const EvalVec& v);

// Canonical FLT-reduced product; pointwise, evaluate(F*G) is the entrywise
// product of evaluate(F) and evaluate(G).
Polynomial poly_mul(const Polynomial& a, const Polynomial& b);

// S(H) = sum over x in F_d^* of H(x). Closed form: -h_0, since every
// nonconstant canonical monomial sums to zero and the constant sums to d-1.
// In debug builds the closed form is cross-checked against direct summation
// and a mismatch throws consistency_error.
int power_sum(const Polynomial& h);

// R_d = { b^3 : b in F_d^* }, sorted. Size d-1 when d = 2 mod 3 (cubing is a
// bijection), (d-1)/3 when d = 1 mod 3.
std::vector<int> cubic_residues(const Field& f);

} // namespace qrm
