#pragma once

#include <string>
#include <vector>

#include "qrm/distill.hpp"
#include "qrm/gates.hpp"

namespace qrm {

// Parsed CLI configuration. d is hard-capped at 17: everything this library
// reports is computed exactly, and the exact enumerations stop being honest
// beyond that; only the formula-driven figure mode goes higher.
struct RunConfig {
    int d = 5;
    int r = -1; // -1 means max_transversal_degree(d)
    int mu = 1;
    std::vector<double> eps_grid;
    double tol = 1e-6;
    Method method = Method::automatic;
    std::string output;       // empty writes to stdout
    std::string format = "csv"; // csv or json where applicable
    int threads = 0;          // 0 keeps the OpenMP default

    int effective_r() const;
};

// Throws capacity_error for d > 17, std::invalid_argument for everything
// else out of range.
void validate(const RunConfig& cfg);

// All doubles are printed with "%.17g": lossless round-trip and
// byte-deterministic for identical configs.
std::string format_double(double v);

// Distillation sweep rows, header exactly
// d,r,D,gamma,epsilon,p_accept,eps_out
std::string csv_distill(const QRMCode& code, const ClassWeightTable& table,
                        const std::vector<double>& eps_grid);

struct ThresholdRow {
    int d = 0, r = 0;
    ThresholdResult result;
};

// Threshold table, header exactly d,r,eps_star,tol, followed by comment
// lines summarizing monotonicity within each residue class d mod 3.
std::string csv_threshold(const std::vector<ThresholdRow>& rows);

// Gamma rows for the efficiency figures. mode column says whether the
// dimension is inside the computed range (d <= 17) or evaluated from the
// formula alone.
std::string csv_gamma(const std::vector<GammaCurveRow>& rows);

// Enumerator table as JSON {d, r, counts: [[w, m, N], ...]}, nonzero entries
// sorted by (w, m).
std::string json_table(const ClassWeightTable& table);

// Text report for code-info: parameters, generator counts, gamma, mu
// classes.
std::string code_info_text(const QRMCode& code);
std::string code_info_json(const QRMCode& code);

// Figure data. 1a: primes 5..17 (computed range). 1b: every prime up to
// 1009, labeled formula-only above 17. 1c: thresholds at the maximal degree
// for the computed primes.
std::vector<GammaCurveRow> figure_gamma_rows(bool extended);
std::vector<ThresholdRow> figure_threshold_rows(double tol);

// Minimal standalone SVG renderings (no plotting dependency): gamma points
// split by residue class, or threshold bars.
std::string svg_gamma(const std::vector<GammaCurveRow>& rows);
std::string svg_threshold(const std::vector<ThresholdRow>& rows);

// Prefix a relative path with $QRM_OUTPUT_DIR when the variable is set;
// absolute paths and empty (stdout) pass through.
std::string resolve_output_path(const std::string& path);

// Write bytes to the resolved path, or stdout when path is empty.
void write_output(const std::string& path, const std::string& bytes);

} // namespace qrm
