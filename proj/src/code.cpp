#include "qrm/code.hpp"

#include <algorithm>
#include <string>

#include "qrm/errors.hpp"
#include "qrm/odometer.hpp"

namespace qrm {

int weight(const PauliOperator& p) {
    int w = 0;
    for (size_t i = 0; i < p.x.size(); ++i)
        if (p.x[i] != 0 || p.z[i] != 0) ++w;
    return w;
}

int symplectic(const Field& f, const PauliOperator& p, const PauliOperator& q) {
    if (p.x.size() != q.x.size())
        throw std::invalid_argument("symplectic: length mismatch");
    long long s = 0;
    for (size_t i = 0; i < p.x.size(); ++i)
        s += p.x[i] * q.z[i] - p.z[i] * q.x[i];
    return f.reduce(s);
}

namespace {

// Rank of a matrix over F_d by Gaussian elimination; rows are modified.
int gauss_rank(const Field& f, std::vector<std::vector<int>> rows) {
    const size_t ncols = rows.empty() ? 0 : rows[0].size();
    size_t rank = 0;
    for (size_t col = 0; col < ncols && rank < rows.size(); ++col) {
        size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        int inv = f.inv(rows[rank][col]);
        for (size_t j = col; j < ncols; ++j)
            rows[rank][j] = f.mul(rows[rank][j], inv);
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == rank || rows[i][col] == 0) continue;
            int c = rows[i][col];
            for (size_t j = col; j < ncols; ++j)
                rows[i][j] = f.sub(rows[i][j], f.mul(c, rows[rank][j]));
        }
        ++rank;
    }
    return static_cast<int>(rank);
}

PauliOperator x_type(const EvalVec& e) {
    return PauliOperator{e, std::vector<int>(e.size(), 0)};
}

PauliOperator z_type(const EvalVec& e) {
    return PauliOperator{std::vector<int>(e.size(), 0), e};
}

// Structural invariants checked once at construction: these are theorems
// about the generator choice, so a failure is an internal bug.
void check_invariants(const QRMCode& code) {
    const Field& f = code.field;
    std::vector<PauliOperator> gens = code.x_gens;
    gens.insert(gens.end(), code.z_gens.begin(), code.z_gens.end());
    if (static_cast<int>(gens.size()) != code.n - 1)
        throw consistency_error("build_code: expected n-1 generators");
    for (size_t i = 0; i < gens.size(); ++i)
        for (size_t j = i + 1; j < gens.size(); ++j)
            if (symplectic(f, gens[i], gens[j]) != 0)
                throw consistency_error("build_code: generators do not commute");
    for (const PauliOperator& g : gens) {
        if (symplectic(f, code.logical_x, g) != 0 ||
            symplectic(f, code.logical_z, g) != 0)
            throw consistency_error("build_code: logicals hit the stabilizer");
    }
    if (symplectic(f, code.logical_x, code.logical_z) == 0)
        throw consistency_error("build_code: logicals must anticommute");
    // Independence: the (n-1) x 2n symplectic matrix has full rank.
    std::vector<std::vector<int>> rows;
    for (const PauliOperator& g : gens) {
        std::vector<int> row = g.x;
        row.insert(row.end(), g.z.begin(), g.z.end());
        rows.push_back(std::move(row));
    }
    if (gauss_rank(f, rows) != code.n - 1)
        throw consistency_error("build_code: generators are dependent");
}

} // namespace

QRMCode build_code(int d, int r) {
    if (!is_prime(d) || d < 5)
        throw std::invalid_argument("build_code: d must be a prime >= 5");
    if (d > 17)
        throw capacity_error("build_code: d capped at 17 (exact range)");
    if (r < 1 || r > d - 3)
        throw std::invalid_argument("build_code: need 1 <= r <= d-3");

    Field f(d);
    const int n = d - 1;
    QRMCode code{f, r, n, {}, {}, {}, {}};
    for (int m = 1; m <= r; ++m)
        code.x_gens.push_back(x_type(evaluate(make_monomial(f, m, 1))));
    for (int m = 1; m <= d - 2 - r; ++m)
        code.z_gens.push_back(z_type(evaluate(make_monomial(f, m, 1))));
    code.logical_x = x_type(EvalVec(static_cast<size_t>(n), 1));
    code.logical_z = z_type(EvalVec(static_cast<size_t>(n), d - 1));
    check_invariants(code);
    return code;
}

std::vector<int> syndrome(const QRMCode& code, const PauliOperator& p) {
    if (p.x.size() != static_cast<size_t>(code.n))
        throw std::invalid_argument("syndrome: operator length mismatch");
    std::vector<int> out;
    for (const PauliOperator& g : code.x_gens)
        out.push_back(symplectic(code.field, g, p));
    for (const PauliOperator& g : code.z_gens)
        out.push_back(symplectic(code.field, g, p));
    return out;
}

ZErrorClass logical_class_of_z_error(const QRMCode& code, const EvalVec& e) {
    const Field& f = code.field;
    Polynomial g = interpolate(f, e);
    long long s = 0;
    for (int v : e) s += v;
    int m = f.reduce(s);
#ifndef NDEBUG
    // The class is minus the interpolant's constant coefficient: summing any
    // canonical monomial over F_d^* kills everything except the constant.
    if (m != f.neg(g.shift()))
        throw consistency_error("logical_class_of_z_error: class rule broken");
#endif
    return ZErrorClass{g.degree() > code.d() - 2 - code.r, m};
}

namespace {

long long space_size_capped(int d, int len, long long cap) {
    long long t = 1;
    for (int i = 0; i < len; ++i) {
        t *= d;
        if (t > cap) return cap + 1;
    }
    return t;
}

} // namespace

int z_distance(const QRMCode& code) {
    const Field& f = code.field;
    const int d = code.d();
    const int n = code.n;
    const int L = d - 1 - code.r; // coefficients g_0..g_{d-2-r}
    const long long limit = 100000000;
    const long long total = space_size_capped(d, L, limit);

    if (total <= limit) {
        // Full enumeration. Tuples with g_0 = 0 are stabilizer (or identity)
        // classes and are skipped; everything else is undetected with a
        // nonzero logical class.
        std::vector<std::vector<int>> powtab;
        for (int m = 0; m < L; ++m) powtab.push_back(monomial_row(f, m));
        std::vector<int> digits(static_cast<size_t>(L), 0);
        EvalVec eval(static_cast<size_t>(n), 0);
        int best = n + 1;
        walk_incremental(d, powtab, digits, eval, total,
                         [&](const EvalVec& e, long long step) {
                             if (step % d == 0) return; // g_0 = 0
                             int w = 0;
                             for (int v : e) w += v != 0;
                             if (w < best) best = w;
                         });
        if (best != code.r + 1)
            throw consistency_error("z_distance: enumeration found "
                                    + std::to_string(best) + ", expected r+1");
        return best;
    }

    // Analytic route for spaces past the enumeration cap. Lower bound: an
    // undetected error interpolates to degree <= d-2-r, and a nonzero
    // polynomial of degree D has at most D roots, so its weight is at least
    // (d-1) - (d-2-r) = r+1. The bound is achieved by a polynomial with
    // d-2-r distinct nonzero roots, whose shift (product of the negated
    // roots) is automatically nonzero, so it is not a stabilizer.
    Polynomial witness = make_monomial(f, 0, 1);
    for (int a = 1; a <= d - 2 - code.r; ++a) {
        std::map<long long, int> lin{{0, f.neg(a)}, {1, 1}}; // x - a
        witness = poly_mul(witness, reduce_flt(f, lin));
    }
    EvalVec e = evaluate(witness);
    int w = 0;
    for (int v : e) w += v != 0;
    ZErrorClass cls = logical_class_of_z_error(code, e);
    if (w != code.r + 1 || cls.detected || cls.m == 0 ||
        witness.shift() == 0 || witness.degree() != d - 2 - code.r)
        throw consistency_error("z_distance: witness construction failed");
    return w;
}

BruteforceDistance full_distance_bruteforce(const QRMCode& code) {
    const Field& f = code.field;
    const int d = code.d();
    const int n = code.n;
    const long long limit = 1000000; // d^n classification side
    const long long total = space_size_capped(d, n, limit);
    if (total > limit)
        throw capacity_error("full_distance_bruteforce: d^(2n) = "
                             + std::to_string(d) + "^" + std::to_string(2 * n)
                             + " pairs is past the exhaustive budget (d=5 only)");

    // Classify the d^n single-type vectors once; an X part is undetected
    // when it commutes with every Z-type generator and vice versa, and each
    // part is a stabilizer component when its interpolant is unshifted
    // within the respective degree bound.
    std::vector<char> und_x(static_cast<size_t>(total)), und_z(static_cast<size_t>(total));
    std::vector<char> stab_x(static_cast<size_t>(total)), stab_z(static_cast<size_t>(total));
    std::vector<unsigned> mask(static_cast<size_t>(total));
    EvalVec v(static_cast<size_t>(n));
    for (long long idx = 0; idx < total; ++idx) {
        long long t = idx;
        unsigned msk = 0;
        for (int i = 0; i < n; ++i, t /= d) {
            v[static_cast<size_t>(i)] = static_cast<int>(t % d);
            if (v[static_cast<size_t>(i)] != 0) msk |= 1u << i;
        }
        mask[static_cast<size_t>(idx)] = msk;
        bool ux = true, uz = true;
        for (const PauliOperator& g : code.z_gens) {
            long long s = 0;
            for (int i = 0; i < n; ++i) s += v[static_cast<size_t>(i)] * g.z[static_cast<size_t>(i)];
            if (f.reduce(s) != 0) { ux = false; break; }
        }
        for (const PauliOperator& g : code.x_gens) {
            long long s = 0;
            for (int i = 0; i < n; ++i) s += v[static_cast<size_t>(i)] * g.x[static_cast<size_t>(i)];
            if (f.reduce(s) != 0) { uz = false; break; }
        }
        und_x[static_cast<size_t>(idx)] = ux;
        und_z[static_cast<size_t>(idx)] = uz;
        Polynomial p = interpolate(f, v);
        stab_x[static_cast<size_t>(idx)] = p.shift() == 0 && p.degree() <= code.r;
        stab_z[static_cast<size_t>(idx)] = p.shift() == 0 && p.degree() <= d - 2 - code.r;
    }

    int full = n + 1, x_only = n + 1, z_only = n + 1;
    for (long long ix = 0; ix < total; ++ix) {
        if (!und_x[static_cast<size_t>(ix)]) continue;
        for (long long iz = 0; iz < total; ++iz) {
            if (!und_z[static_cast<size_t>(iz)]) continue;
            if (stab_x[static_cast<size_t>(ix)] && stab_z[static_cast<size_t>(iz)])
                continue; // stabilizer element, including the identity
            int w = __builtin_popcount(mask[static_cast<size_t>(ix)]
                                       | mask[static_cast<size_t>(iz)]);
            if (w < full) full = w;
            if (iz == 0 && w < x_only) x_only = w;
            if (ix == 0 && w < z_only) z_only = w;
        }
    }
    return BruteforceDistance{full, x_only, z_only};
}

std::vector<EvalVec> logical_state_support(const QRMCode& code, int k) {
    const Field& f = code.field;
    const int d = code.d();
    std::vector<std::vector<int>> powtab;
    for (int m = 1; m <= code.r; ++m) powtab.push_back(monomial_row(f, m));
    std::vector<int> digits(static_cast<size_t>(code.r), 0);
    EvalVec eval(static_cast<size_t>(code.n), f.reduce(k));
    long long total = 1;
    for (int m = 0; m < code.r; ++m) total *= d;
    std::vector<EvalVec> out;
    out.reserve(static_cast<size_t>(total));
    walk_incremental(d, powtab, digits, eval, total,
                     [&](const EvalVec& e, long long) { out.push_back(e); });
    return out;
}

} // namespace qrm
