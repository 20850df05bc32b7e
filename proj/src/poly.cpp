#include "qrm/poly.hpp"

#include <algorithm>

#include "qrm/errors.hpp"

namespace qrm {

Polynomial reduce_flt(const Field& f, const std::map<long long, int>& raw) {
    Polynomial p(f);
    for (const auto& [e, c] : raw) {
        if (e < 0) throw std::invalid_argument("reduce_flt: negative exponent");
        int m = fold_exponent(f, e);
        p.coeffs[static_cast<size_t>(m)] = f.add(p.coeffs[static_cast<size_t>(m)], f.reduce(c));
    }
    return p;
}

Polynomial make_monomial(const Field& f, long long exponent, int coeff) {
    Polynomial p(f);
    p.coeffs[static_cast<size_t>(fold_exponent(f, exponent))] = f.reduce(coeff);
    return p;
}

EvalVec evaluate(const Polynomial& p) {
    const Field& f = p.field;
    const int n = f.modulus() - 1;
    EvalVec v(static_cast<size_t>(n));
    for (int x = 1; x <= n; ++x) {
        int acc = 0; // Horner from the top coefficient down
        for (int m = n - 1; m >= 0; --m)
            acc = f.add(f.mul(acc, x), p.coeffs[static_cast<size_t>(m)]);
        v[static_cast<size_t>(x - 1)] = acc;
    }
    return v;
}

Polynomial interpolate(const Field& f, const EvalVec& v) {
    const int n = f.modulus() - 1;
    if (static_cast<int>(v.size()) != n)
        throw std::invalid_argument("interpolate: need one value per nonzero point");
    Polynomial p(f);
    // f_m = -sum_x v(x) x^(-m): the only monomial x^(j-m) surviving the sum
    // over F_d^* is j = m, contributing -f_m.
    for (int m = 0; m < n; ++m) {
        int s = 0;
        for (int x = 1; x <= n; ++x)
            s = f.add(s, f.mul(v[static_cast<size_t>(x - 1)],
                               f.pow(f.inv(x), m)));
        p.coeffs[static_cast<size_t>(m)] = f.neg(s);
    }
#ifndef NDEBUG
    if (evaluate(p) != v)
        throw consistency_error("interpolate: round trip failed");
#endif
    return p;
}

Polynomial poly_mul(const Polynomial& a, const Polynomial& b) {
    if (!(a.field == b.field))
        throw std::invalid_argument("poly_mul: mixed moduli");
    const Field& f = a.field;
    const int n = f.modulus() - 1;
    Polynomial p(f);
    for (int i = 0; i < n; ++i) {
        if (a.coeffs[static_cast<size_t>(i)] == 0) continue;
        for (int j = 0; j < n; ++j) {
            if (b.coeffs[static_cast<size_t>(j)] == 0) continue;
            int m = fold_exponent(f, i + j);
            p.coeffs[static_cast<size_t>(m)] =
                f.add(p.coeffs[static_cast<size_t>(m)],
                      f.mul(a.coeffs[static_cast<size_t>(i)],
                            b.coeffs[static_cast<size_t>(j)]));
        }
    }
    return p;
}

int power_sum(const Polynomial& h) {
    const Field& f = h.field;
    int closed = f.neg(h.coeffs[0]);
#ifndef NDEBUG
    int direct = 0;
    for (int value : evaluate(h)) direct = f.add(direct, value);
    if (direct != closed)
        throw consistency_error("power_sum: closed form disagrees with direct sum");
#endif
    return closed;
}

std::vector<int> cubic_residues(const Field& f) {
    std::vector<int> out;
    for (int b = 1; b < f.modulus(); ++b) {
        int c = f.mul(f.mul(b, b), b);
        if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace qrm
