#include <cmath>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <CLI11.hpp>

#include "qrm/errors.hpp"
#include "qrm/export.hpp"
#include "qrm/oracle.hpp"

namespace {

using namespace qrm;

Method parse_method(const std::string& name) {
    if (name == "auto") return Method::automatic;
    if (name == "bruteforce") return Method::bruteforce;
    if (name == "charsum") return Method::charsum;
    throw std::invalid_argument("method must be auto, bruteforce or charsum");
}

std::string poly_string(const Polynomial& p) {
    std::ostringstream out;
    out << "coeffs (x^0..x^" << p.coeffs.size() - 1 << "):";
    for (int c : p.coeffs) out << ' ' << c;
    return out.str();
}

std::vector<double> resolve_grid(const std::vector<double>& eps_list,
                                 double eps_min, double eps_max, int eps_steps) {
    if (!eps_list.empty()) return eps_list;
    if (eps_steps < 2)
        throw std::invalid_argument("eps-steps must be at least 2");
    if (!(eps_min > 0.0 && eps_max < 1.0 && eps_min < eps_max))
        throw std::invalid_argument("need 0 < eps-min < eps-max < 1");
    std::vector<double> grid;
    const double la = std::log(eps_min), lb = std::log(eps_max);
    for (int i = 0; i < eps_steps; ++i)
        grid.push_back(std::exp(la + (lb - la) * i / (eps_steps - 1)));
    return grid;
}

int cmd_code_info(const RunConfig& cfg) {
    validate(cfg);
    QRMCode code = build_code(cfg.d, cfg.effective_r());
    write_output(cfg.output, cfg.format == "json" ? code_info_json(code)
                                                  : code_info_text(code));
    return 0;
}

// Each line is one independent check; the command fails (exit 1) as soon as
// any of them does, after printing all of them.
int cmd_verify(const RunConfig& cfg) {
    validate(cfg);
    const int d = cfg.d;
    const int r = cfg.effective_r();
    bool all_ok = true;
    std::ostringstream out;
    auto line = [&](const std::string& name, bool ok, const std::string& detail) {
        out << (ok ? "pass" : "FAIL") << ": " << name;
        if (!detail.empty()) out << " (" << detail << ")";
        out << '\n';
        all_ok = all_ok && ok;
    };

    QRMCode code = build_code(d, r);
    line("code construction", true,
         "n=" + std::to_string(code.n) + ", x-gens=" + std::to_string(code.x_gens.size())
             + ", z-gens=" + std::to_string(code.z_gens.size()));

    int zd = z_distance(code);
    line("z-distance equals r+1", zd == r + 1, "value " + std::to_string(zd));

    TransversalityReport rep = transversality_check(code, cfg.mu);
    if (rep.holds) {
        line("transversal cubic gate at mu=" + std::to_string(cfg.mu), true,
             "all " + std::to_string(code.d()) + "^" + std::to_string(r + 1)
                 + " support polynomials");
    } else {
        line("transversal cubic gate at mu=" + std::to_string(cfg.mu), false,
             "witness " + poly_string(rep.witness) + ", shift k=" + std::to_string(rep.witness_shift)
                 + ", S(F^3)=" + std::to_string(rep.witness_power_sum)
                 + ", -k^3=" + std::to_string(code.field.neg(
                       code.field.mul(rep.witness_shift,
                                      code.field.mul(rep.witness_shift, rep.witness_shift)))));
    }

    TransversalityScan scan = transversality_scan(code);
    bool scan_all = true;
    for (int mu = 1; mu < d; ++mu) scan_all = scan_all && scan.holds[static_cast<size_t>(mu)];
    bool scan_matches = scan.holds[static_cast<size_t>(cfg.mu)] == rep.holds;
    line("scan over all mu agrees with the direct check", scan_matches,
         scan_all ? "holds for every mu" : "fails for every mu");

    bool expect_hold = r <= max_transversal_degree(d);
    line("verdict matches the degree bound 3r < d-1", rep.holds == expect_hold,
         "max transversal degree " + std::to_string(max_transversal_degree(d)));

    {
        std::ostringstream cls;
        MuClassification mc = mu_equivalence_classes(d);
        for (size_t i = 0; i < mc.classes.size(); ++i) {
            cls << (i ? " | " : "");
            for (size_t j = 0; j < mc.classes[i].size(); ++j)
                cls << (j ? " " : "") << mc.classes[i][j];
        }
        size_t expect_classes = d % 3 == 1 ? 3 : 1;
        line("mu equivalence classes", mc.classes.size() == expect_classes, cls.str());
    }

    if (d == 5) {
        line("appendix identities (single-qudit matrices)",
             verify_appendix_identities(d), "");
    }
    if (d <= 7) {
        line("codewords fixed by all generators (state vector)",
             verify_stabilizers(code), "");
        bool tv = verify_transversality_numeric(code, cfg.mu);
        line("transversal action on codewords (state vector)", tv == rep.holds,
             tv ? "logical phase omega^(mu k^3)" : "phase mismatch as predicted");
    }

    out << (all_ok ? "all checks passed" : "some checks FAILED") << '\n';
    write_output(cfg.output, out.str());
    return all_ok ? 0 : 1;
}

int cmd_distill(const RunConfig& cfg, const std::string& table_json_path) {
    validate(cfg);
    QRMCode code = build_code(cfg.d, cfg.effective_r());
    ClassWeightTable table = accepted_enumerator(code, cfg.method);
    write_output(cfg.output, csv_distill(code, table, cfg.eps_grid));
    if (!table_json_path.empty()) write_output(table_json_path, json_table(table));
    return 0;
}

int cmd_threshold(std::vector<int> dims, RunConfig cfg) {
    if (dims.empty()) dims = {5, 7, 11, 13, 17};
    std::vector<ThresholdRow> rows;
    for (int d : dims) {
        cfg.d = d;
        cfg.r = -1;
        validate(cfg);
        QRMCode code = build_code(d, cfg.effective_r());
        rows.push_back(ThresholdRow{d, code.r,
                                    threshold(code, cfg.tol, cfg.method)});
    }
    write_output(cfg.output, csv_threshold(rows));
    return 0;
}

int cmd_figure(const std::string& which, const RunConfig& cfg,
               const std::string& svg_path) {
    std::string csv, svg;
    if (which == "1a" || which == "1b") {
        std::vector<GammaCurveRow> rows = figure_gamma_rows(which == "1b");
        csv = csv_gamma(rows);
        if (!svg_path.empty()) svg = svg_gamma(rows);
    } else if (which == "1c") {
        if (!(cfg.tol > 0.0 && cfg.tol < 0.01))
            throw std::invalid_argument("tol must be in (0, 0.01)");
        std::vector<ThresholdRow> rows = figure_threshold_rows(cfg.tol);
        csv = csv_threshold(rows);
        csv += "# theoretical maxima bars omitted (not computed here)\n";
        if (!svg_path.empty()) svg = svg_threshold(rows);
    } else {
        throw std::invalid_argument("figure must be 1a, 1b or 1c");
    }
    write_output(cfg.output, csv);
    if (!svg_path.empty()) write_output(svg_path, svg);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"prime-dimension quantum Reed-Muller codes and magic-state "
                 "distillation, computed exactly"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string method_name = "auto";
    std::string which = "1a";
    std::string table_json_path, svg_path;
    std::vector<int> dims;
    double eps_min = 1e-4, eps_max = 0.5;
    int eps_steps = 25;

    app.add_option("--threads", cfg.threads,
                   "cap the OpenMP worker count (0 keeps the default)");
    // Let the global --threads flag appear after the subcommand name too.
    app.fallthrough();

    CLI::App* info = app.add_subcommand("code-info", "report code parameters");
    info->add_option("--d", cfg.d, "prime dimension in 5..17")->required();
    info->add_option("--r", cfg.r, "polynomial degree (default: max transversal)");
    info->add_option("--format", cfg.format, "text (default) or json")->capture_default_str();
    info->add_option("--output", cfg.output, "output path (default stdout)");

    CLI::App* verify = app.add_subcommand("verify", "run the exact checks");
    verify->add_option("--d", cfg.d, "prime dimension in 5..17")->required();
    verify->add_option("--r", cfg.r, "polynomial degree (default: max transversal)");
    verify->add_option("--mu", cfg.mu, "cubic gate parameter in 1..d-1")->capture_default_str();
    verify->add_option("--output", cfg.output, "output path (default stdout)");

    CLI::App* distill = app.add_subcommand("distill", "distillation sweep CSV");
    distill->add_option("--d", cfg.d, "prime dimension in 5..17")->required();
    distill->add_option("--r", cfg.r, "polynomial degree (default: max transversal)");
    distill->add_option("--eps", cfg.eps_grid, "input infidelity (repeatable)");
    distill->add_option("--eps-min", eps_min, "log-grid start")->capture_default_str();
    distill->add_option("--eps-max", eps_max, "log-grid end")->capture_default_str();
    distill->add_option("--eps-steps", eps_steps, "log-grid size")->capture_default_str();
    distill->add_option("--method", method_name, "auto, bruteforce or charsum")->capture_default_str();
    distill->add_option("--table-json", table_json_path,
                        "also write the exact count table as JSON");
    distill->add_option("--output", cfg.output, "output path (default stdout)");

    CLI::App* thresh = app.add_subcommand("threshold", "fixed-point thresholds CSV");
    thresh->add_option("--d", dims, "dimension (repeatable; default 5 7 11 13 17)");
    thresh->add_option("--tol", cfg.tol, "bisection tolerance")->capture_default_str();
    thresh->add_option("--method", method_name, "auto, bruteforce or charsum")->capture_default_str();
    thresh->add_option("--output", cfg.output, "output path (default stdout)");

    CLI::App* figure = app.add_subcommand("figure", "figure data export");
    figure->add_option("--which", which, "1a, 1b or 1c")->capture_default_str();
    figure->add_option("--tol", cfg.tol, "bisection tolerance for 1c")->capture_default_str();
    figure->add_option("--svg", svg_path, "also render a standalone SVG");
    figure->add_option("--output", cfg.output, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (cfg.threads > 0) {
#ifdef _OPENMP
            omp_set_num_threads(cfg.threads);
#endif
        } else if (cfg.threads < 0) {
            throw std::invalid_argument("threads must be >= 0");
        }
        cfg.method = parse_method(method_name);
        if (info->parsed()) {
            if (cfg.format == "text") cfg.format = "csv"; // validator label
            return cmd_code_info(cfg);
        }
        if (verify->parsed()) return cmd_verify(cfg);
        if (distill->parsed()) {
            cfg.eps_grid = resolve_grid(cfg.eps_grid, eps_min, eps_max, eps_steps);
            return cmd_distill(cfg, table_json_path);
        }
        if (thresh->parsed()) return cmd_threshold(dims, cfg);
        if (figure->parsed()) return cmd_figure(which, cfg, svg_path);
        return 2;
    } catch (const qrm::capacity_error& e) {
        std::cerr << "capacity error: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
