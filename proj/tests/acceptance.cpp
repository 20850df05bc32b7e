// Acceptance gate for the artifact. Each numbered check prints exactly one
// PASS/FAIL line, enforcing its stated tolerance and runtime budget, and the
// process exits nonzero if any line fails. The CLI binary under test is
// passed as --cli <path>; it is exercised for byte-determinism and for the
// exit-code contract (0 ok, 1 verification failure, 2 usage, 3 capacity).

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qrm/code.hpp"
#include "qrm/distill.hpp"
#include "qrm/enumerate.hpp"
#include "qrm/gates.hpp"
#include "qrm/oracle.hpp"

namespace {

using qrm::QRMCode;

const int kPrimes[] = {5, 7, 11, 13, 17};

int failures = 0;

std::chrono::steady_clock::time_point tick() {
    return std::chrono::steady_clock::now();
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(tick() - t0).count();
}

std::string strf(const char* format, ...) {
    char buf[1024];
    va_list args;
    va_start(args, format);
    std::vsnprintf(buf, sizeof buf, format, args);
    va_end(args);
    return std::string(buf);
}

void line(int num, bool ok, const char* name, const std::string& detail) {
    std::printf("%s %2d  %-58s  %s\n", ok ? "pass" : "FAIL", num, name,
                detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

// Runs one criterion body, which returns (ok, detail); an escaped exception
// counts as a failure of that criterion rather than aborting the gate.
void guarded(int num, const char* name,
             const std::function<std::pair<bool, std::string>()>& body) {
    try {
        auto [ok, detail] = body();
        line(num, ok, name, detail);
    } catch (const std::exception& e) {
        line(num, false, name, strf("exception: %s", e.what()));
    }
}

long long upow(int base, int exp) {
    long long acc = 1;
    for (int i = 0; i < exp; ++i) acc *= base;
    return acc;
}

// 1. For every prime 5 <= d <= 17, every degree r up to floor((d-2)/3) and
// every nonzero mu, the cubic gate is transversal. The one-pass scan settles
// all d^(r+1) support polynomials for every mu at once; the per-mu rebuild
// route recomputes the same verdict independently, over all mu where the
// quadratic cost allows and at the extreme mu values otherwise.
std::pair<bool, std::string> check_transversality_holds() {
    auto t0 = tick();
    long long combos = 0;
    std::string bad;
    for (int d : kPrimes) {
        int rmax = qrm::max_transversal_degree(d);
        for (int r = 1; r <= rmax; ++r) {
            QRMCode code = qrm::build_code(d, r);
            qrm::TransversalityScan scan = qrm::transversality_scan(code);
            for (int mu = 1; mu < d; ++mu) {
                ++combos;
                if (!scan.holds[mu] && bad.empty())
                    bad = strf("scan violation at d=%d r=%d mu=%d", d, r, mu);
            }
            long long tuples = upow(d, r + 1);
            std::vector<int> mus;
            if (tuples * (d - 1) <= 4000000) {
                for (int mu = 1; mu < d; ++mu) mus.push_back(mu);
            } else if (2 * tuples <= 6000000) {
                mus = {1, d - 1};
            } else {
                mus = {1};
            }
            for (int mu : mus) {
                if (!qrm::transversality_check(code, mu).holds && bad.empty())
                    bad = strf("rebuild violation at d=%d r=%d mu=%d", d, r, mu);
            }
        }
    }
    double el = seconds_since(t0);
    bool ok = bad.empty() && el < 60.0;
    std::string detail = bad.empty()
        ? strf("%lld (d, r, mu) combos by two routes in %.1fs%s", combos, el,
               el < 60.0 ? "" : " (over 60s budget)")
        : bad;
    return {ok, detail};
}

// 2. At d=13, r=4 the degree condition 3r < d-1 fails and so must the gate:
// the check returns a witness polynomial, which is rechecked from scratch by
// evaluating it, cubing pointwise, and summing.
std::pair<bool, std::string> check_sharpness_witness() {
    QRMCode code = qrm::build_code(13, 4);
    qrm::Field f = code.field;
    qrm::TransversalityReport rep = qrm::transversality_check(code, 1);
    if (rep.holds) return {false, "check unexpectedly holds at d=13 r=4"};
    qrm::EvalVec ev = qrm::evaluate(rep.witness);
    int s = 0;
    for (int v : ev) s = f.add(s, f.mul(v, f.mul(v, v)));
    int k = rep.witness_shift;
    int t = f.add(s, f.pow(k, 3));
    bool ok = rep.witness.degree() <= 4 && rep.witness_shift == rep.witness.shift()
              && rep.witness_power_sum == s && t != 0;
    std::string coeffs;
    for (int m = 0; m <= 4; ++m)
        coeffs += strf("%s%d", m ? " " : "", rep.witness.coeffs[m]);
    return {ok, strf("witness coeffs (x^0..x^4) = [%s], shift k=%d, "
                     "S(F^3)=%d, -k^3=%d, violation %d != 0",
                     coeffs.c_str(), k, s, f.neg(f.pow(k, 3)), t)};
}

// 3. z_distance equals r+1 for every buildable (d, r), and the exhaustive
// distance over all 5^8 symplectic pairs at d=5, r=1 gives full distance 2.
std::pair<bool, std::string> check_distances() {
    auto t0 = tick();
    std::string bad;
    int pairs = 0;
    for (int d : kPrimes) {
        for (int r = 1; r <= d - 3; ++r) {
            ++pairs;
            int zd = qrm::z_distance(qrm::build_code(d, r));
            if (zd != r + 1 && bad.empty())
                bad = strf("z_distance(d=%d, r=%d) = %d, want %d", d, r, zd, r + 1);
        }
    }
    qrm::BruteforceDistance fd = qrm::full_distance_bruteforce(qrm::build_code(5, 1));
    if ((fd.full != 2 || fd.z_only != 2 || fd.x_only != 3) && bad.empty())
        bad = strf("d=5 r=1 distances full/x/z = %d/%d/%d, want 2/3/2",
                   fd.full, fd.x_only, fd.z_only);
    double el = seconds_since(t0);
    bool ok = bad.empty() && el < 60.0;
    std::string detail = bad.empty()
        ? strf("%d (d, r) pairs; d=5 r=1 full/x/z = %d/%d/%d; %.1fs%s", pairs,
               fd.full, fd.x_only, fd.z_only, el,
               el < 60.0 ? "" : " (over 60s budget)")
        : bad;
    return {ok, detail};
}

// 4. Clifford equivalence classes of the cubic gates are exactly the cosets
// of the cubic residues: one class when d = 2 mod 3, three of size (d-1)/3
// when d = 1 mod 3, with the d=7 classes matching {1,6},{2,5},{3,4}.
std::pair<bool, std::string> check_mu_classes() {
    auto single = [](int d) {
        std::vector<int> all;
        for (int mu = 1; mu < d; ++mu) all.push_back(mu);
        return std::vector<std::vector<int>>{all};
    };
    bool ok = qrm::mu_equivalence_classes(7).classes
                  == std::vector<std::vector<int>>{{1, 6}, {2, 5}, {3, 4}};
    for (int d : {5, 11, 17})
        ok = ok && qrm::mu_equivalence_classes(d).classes == single(d);
    auto c13 = qrm::mu_equivalence_classes(13).classes;
    ok = ok && c13.size() == 3;
    std::vector<bool> seen(13, false);
    for (const auto& cls : c13) {
        ok = ok && cls.size() == 4;
        for (int mu : cls) {
            ok = ok && mu >= 1 && mu <= 12 && !seen[mu];
            seen[mu] = true;
        }
    }
    return {ok, "d=7 exactly {1,6},{2,5},{3,4}; d=13 three of size 4; "
                "d=5,11,17 single class"};
}

// 5. The power-sum lemma, by raw integer summation with no library calls:
// sum over nonzero x of x^m vanishes mod d for m = 1..d-2 and equals
// d-1 (that is, -1) for m = 0.
std::pair<bool, std::string> check_summation_lemma() {
    for (int d : kPrimes) {
        for (int m = 0; m <= d - 2; ++m) {
            long long s = 0;
            for (int x = 1; x < d; ++x) {
                int p = 1;
                for (int i = 0; i < m; ++i) p = p * x % d;
                s += p;
            }
            int want = m == 0 ? d - 1 : 0;
            if (s % d != want)
                return {false, strf("d=%d m=%d: sum = %lld mod %d, want %d",
                                    d, m, s % d, d, want)};
        }
    }
    return {true, "direct summation, all five d, every exponent 0..d-2"};
}

// 6. Keystone: the combinatorial distillation map and the literal
// state-vector simulation agree at d=5, r=1 to 1e-10 in both the acceptance
// probability and the output infidelity, across five noise strengths.
std::pair<bool, std::string> check_oracle_equivalence() {
    auto t0 = tick();
    QRMCode code = qrm::build_code(5, 1);
    qrm::ClassWeightTable table =
        qrm::accepted_enumerator(code, qrm::Method::automatic);
    double worst = 0.0;
    for (double eps : {0.05, 0.1, 0.2, 0.3, 0.5}) {
        qrm::DistillationOutcome a = qrm::distill_map(table, eps);
        qrm::DistillationOutcome b = qrm::simulate_distillation_exact(code, eps);
        worst = std::max(worst, std::fabs(a.p_accept - b.p_accept));
        worst = std::max(worst, std::fabs(a.eps_out - b.eps_out));
    }
    double el = seconds_since(t0);
    bool ok = worst <= 1e-10 && el < 60.0;
    return {ok, strf("max |map - simulation| = %.2e over 5 eps values, %.1fs",
                     worst, el)};
}

// 7. The direct enumeration and the character-sum transform produce
// identical integer tables for d = 5, 7 (all degrees) and d = 11, r = 3
// (~1.9e7 vectors), with the d=11 single-threaded reference inside 5 min.
std::pair<bool, std::string> check_enumerator_paths() {
    struct Case { int d, r; };
    const Case cases[] = {{5, 1}, {5, 2}, {7, 1}, {7, 2}, {7, 3}, {7, 4}, {11, 3}};
    double serial11 = 0.0, kernel11 = 0.0;
    for (const Case& c : cases) {
        QRMCode code = qrm::build_code(c.d, c.r);
        auto t0 = tick();
        qrm::ClassWeightTable bf = qrm::accepted_enumerator_bruteforce_serial(code);
        double el = seconds_since(t0);
        qrm::ClassWeightTable cs = qrm::accepted_enumerator_charsum(code);
        if (bf.counts != cs.counts || bf.d != cs.d || bf.n != cs.n)
            return {false, strf("tables differ at d=%d r=%d", c.d, c.r)};
        if (c.d == 11) {
            serial11 = el;
            auto t1 = tick();
            qrm::ClassWeightTable k = qrm::accepted_enumerator_bruteforce(code);
            kernel11 = seconds_since(t1);
            if (k.counts != bf.counts)
                return {false, "parallel kernel disagrees at d=11 r=3"};
        }
    }
    bool ok = serial11 < 300.0;
    return {ok, strf("7 tables identical; d=11 serial %.1fs (budget 300s), "
                     "parallel kernel %.1fs", serial11, kernel11)};
}

// 8. The fitted log-log slope of output error against input error on the
// decade [1e-4, 1e-3] reproduces the code distance r+1 within 0.1.
std::pair<bool, std::string> check_scaling_exponent() {
    std::vector<double> grid;
    for (int i = 0; i < 10; ++i) grid.push_back(1e-4 * std::pow(10.0, i / 9.0));
    struct Case { int d, r; qrm::Method method; };
    const Case cases[] = {{5, 1, qrm::Method::automatic},
                          {7, 1, qrm::Method::automatic},
                          {11, 3, qrm::Method::charsum}};
    bool ok = true;
    std::string detail;
    for (const Case& c : cases) {
        QRMCode code = qrm::build_code(c.d, c.r);
        qrm::ClassWeightTable table = qrm::accepted_enumerator(code, c.method);
        double slope = qrm::scaling_exponent(table, grid);
        ok = ok && std::fabs(slope - (c.r + 1)) <= 0.1;
        detail += strf("%sd=%d: %.4f (want %d +- 0.1)", detail.empty() ? "" : "; ",
                       c.d, slope, c.r + 1);
    }
    return {ok, detail};
}

// 9. Threshold reproduction at the maximal degree: above 0.5 for d=11,
// strictly increasing along d=5 -> 11 -> 17 and d=7 -> 13, with d=13 and
// d=17 forced through the character-sum route. Values are pinned as
// regression constants to 1e-6.
std::pair<bool, std::string> check_thresholds() {
    auto t0 = tick();
    struct Row { int d, r; qrm::Method method; double frozen; };
    const Row rows[] = {
        {5, 1, qrm::Method::automatic, 0.36312256544828414},
        {7, 1, qrm::Method::automatic, 0.23225986510515212},
        {11, 3, qrm::Method::charsum, 0.531656302511692},
        {13, 3, qrm::Method::charsum, 0.47870258301496516},
        {17, 5, qrm::Method::charsum, 0.6021249547600747},
    };
    double star[18] = {0};
    std::string bad;
    std::string values;
    for (const Row& row : rows) {
        QRMCode code = qrm::build_code(row.d, row.r);
        qrm::ThresholdResult th =
            qrm::threshold_from_table(qrm::accepted_enumerator(code, row.method),
                                      1e-9);
        star[row.d] = th.eps_star;
        values += strf("%s%d: %.9f", values.empty() ? "" : ", ", row.d, th.eps_star);
        if (!th.found && bad.empty())
            bad = strf("no crossing found at d=%d", row.d);
        if (std::fabs(th.eps_star - row.frozen) > 1e-6 && bad.empty())
            bad = strf("d=%d eps_star %.17g drifted from pinned %.17g",
                       row.d, th.eps_star, row.frozen);
    }
    if (bad.empty() && !(star[11] > 0.5))
        bad = strf("d=11 threshold %.6f not above 0.5", star[11]);
    if (bad.empty() && !(star[5] < star[11] && star[11] < star[17]))
        bad = "chain 5 -> 11 -> 17 not strictly increasing";
    if (bad.empty() && !(star[7] < star[13]))
        bad = "chain 7 -> 13 not strictly increasing";
    double el = seconds_since(t0);
    bool ok = bad.empty() && el < 600.0;
    std::string detail = bad.empty()
        ? strf("%s; %.1fs%s", values.c_str(), el,
               el < 600.0 ? "" : " (over 600s budget)")
        : bad;
    return {ok, detail};
}

// 10. The efficiency exponent gamma = log(d-1)/log floor((d+1)/3) matches
// the five tabulated values within 1e-3 and strictly decreases within each
// residue class of d mod 3.
std::pair<bool, std::string> check_gamma_table() {
    struct Row { int d; double gamma; };
    const Row rows[] = {{5, 2.000}, {7, 2.585}, {11, 1.661}, {13, 1.792},
                        {17, 1.548}};
    bool ok = true;
    for (const Row& row : rows)
        ok = ok && std::fabs(qrm::gamma_value(row.d) - row.gamma) <= 1e-3;
    ok = ok && qrm::gamma_value(5) > qrm::gamma_value(11)
            && qrm::gamma_value(11) > qrm::gamma_value(17)
            && qrm::gamma_value(7) > qrm::gamma_value(13);
    return {ok, strf("5: %.3f, 7: %.3f, 11: %.3f, 13: %.3f, 17: %.3f; "
                     "decreasing within each d mod 3 class",
                     qrm::gamma_value(5), qrm::gamma_value(7), qrm::gamma_value(11),
                     qrm::gamma_value(13), qrm::gamma_value(17))};
}

// 11. Acceptance probability approaches one in the low-noise limit: above
// 0.99 at eps = 1e-4 for d = 5 and 7 at degree 1.
std::pair<bool, std::string> check_success_probability() {
    double p5 = qrm::distill_map(
        qrm::accepted_enumerator(qrm::build_code(5, 1), qrm::Method::automatic),
        1e-4).p_accept;
    double p7 = qrm::distill_map(
        qrm::accepted_enumerator(qrm::build_code(7, 1), qrm::Method::automatic),
        1e-4).p_accept;
    bool ok = p5 > 0.99 && p7 > 0.99;
    return {ok, strf("p_accept(1e-4): d=5 %.6f, d=7 %.6f (want > 0.99)", p5, p7)};
}

int run_cli(const std::string& cmd) {
    int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const char* path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

// 12. The CLI writes byte-identical CSV on repeated identical invocations
// and honors the exit-code contract: 0 success, 2 usage error (d=9 is not
// prime), 3 capacity error (d=19 is past the exactly-computed range).
std::pair<bool, std::string> check_cli_determinism(const std::string& cli) {
    if (cli.empty()) return {false, "no --cli path given"};
    unsetenv("QRM_OUTPUT_DIR");
    std::string q = "\"" + cli + "\" ";
    std::string sweep = "distill --d 5 --eps-min 1e-4 --eps-max 0.5 --eps-steps 25";
    std::string bad;
    if (run_cli(q + sweep + " --output acc_det_a.csv >/dev/null 2>&1") != 0
        || run_cli(q + sweep + " --output acc_det_b.csv >/dev/null 2>&1") != 0)
        bad = "distill run failed";
    std::string a = slurp("acc_det_a.csv"), b = slurp("acc_det_b.csv");
    if (bad.empty() && (a.empty() || a != b))
        bad = "distill CSV bytes differ between runs";
    if (bad.empty() && a.rfind("d,r,D,gamma,epsilon,p_accept,eps_out\n", 0) != 0)
        bad = "distill CSV header mismatch";
    std::string thr = "threshold --d 5 --tol 1e-6";
    if (bad.empty()
        && (run_cli(q + thr + " --output acc_det_c.csv >/dev/null 2>&1") != 0
            || run_cli(q + thr + " --output acc_det_d.csv >/dev/null 2>&1") != 0))
        bad = "threshold run failed";
    std::string c = slurp("acc_det_c.csv"), d = slurp("acc_det_d.csv");
    if (bad.empty() && (c.empty() || c != d))
        bad = "threshold CSV bytes differ between runs";
    int e_ok = run_cli(q + "code-info --d 5 >/dev/null 2>&1");
    int e_usage = run_cli(q + "code-info --d 9 >/dev/null 2>&1");
    int e_cap = run_cli(q + "code-info --d 19 >/dev/null 2>&1");
    if (bad.empty() && (e_ok != 0 || e_usage != 2 || e_cap != 3))
        bad = strf("exit codes d=5/9/19 = %d/%d/%d, want 0/2/3",
                   e_ok, e_usage, e_cap);
    for (const char* p : {"acc_det_a.csv", "acc_det_b.csv", "acc_det_c.csv",
                          "acc_det_d.csv"})
        std::remove(p);
    bool ok = bad.empty();
    return {ok, ok ? strf("%zu identical bytes (distill), %zu (threshold); "
                          "exit codes 0/2/3 as contracted",
                          a.size(), c.size())
                   : bad};
}

} // namespace

int main(int argc, char** argv) {
    std::string cli;
    for (int i = 1; i + 1 < argc; ++i)
        if (std::strcmp(argv[i], "--cli") == 0) cli = argv[i + 1];

    std::printf("acceptance gate: qudit Reed-Muller distillation artifact\n\n");

    guarded(1, "transversal cubic gate, exhaustive over (d, r, mu)",
            check_transversality_holds);
    guarded(2, "degree bound sharp at d=13 r=4, witness rechecked",
            check_sharpness_witness);
    guarded(3, "z-distance r+1 everywhere; full distance at d=5 r=1",
            check_distances);
    guarded(4, "mu classes are cubic-residue cosets, exact sets",
            check_mu_classes);
    guarded(5, "power-sum lemma by direct summation, all d, all m",
            check_summation_lemma);
    guarded(6, "state-vector simulation matches map to 1e-10 (d=5)",
            check_oracle_equivalence);
    guarded(7, "bruteforce == character-sum tables (d = 5, 7, 11)",
            check_enumerator_paths);
    guarded(8, "log-log error slope equals distance within 0.1",
            check_scaling_exponent);
    guarded(9, "thresholds: d=11 above 0.5, monotone chains, pinned",
            check_thresholds);
    guarded(10, "gamma table to 1e-3, decreasing within residue",
            check_gamma_table);
    guarded(11, "p_accept(1e-4) above 0.99 for d = 5 and 7",
            check_success_probability);
    guarded(12, "CLI byte-determinism and exit-code contract",
            [&cli] { return check_cli_determinism(cli); });

    std::printf("\n%d of 12 criteria passed\n", 12 - failures);
    return failures == 0 ? 0 : 1;
}
