#include "qrm/export.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "qrm/errors.hpp"

namespace qrm {

int RunConfig::effective_r() const {
    return r < 0 ? max_transversal_degree(d) : r;
}

void validate(const RunConfig& cfg) {
    if (cfg.d > 17)
        throw capacity_error("d = " + std::to_string(cfg.d)
                             + " is past the exact range; the cap is 17");
    if (!is_prime(cfg.d) || cfg.d < 5)
        throw std::invalid_argument("d must be a prime in 5..17");
    int r = cfg.effective_r();
    if (r < 1 || r > cfg.d - 3)
        throw std::invalid_argument("r must be in 1..d-3");
    if (cfg.mu <= 0 || cfg.mu >= cfg.d)
        throw std::invalid_argument("mu must be in 1..d-1");
    for (double e : cfg.eps_grid)
        if (!(e >= 0.0 && e < 1.0))
            throw std::invalid_argument("eps values must be in [0, 1)");
    if (!(cfg.tol > 0.0 && cfg.tol < 0.01))
        throw std::invalid_argument("tol must be in (0, 0.01)");
    if (cfg.format != "csv" && cfg.format != "json")
        throw std::invalid_argument("format must be csv or json");
    if (cfg.threads < 0)
        throw std::invalid_argument("threads must be >= 0");
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string csv_distill(const QRMCode& code, const ClassWeightTable& table,
                        const std::vector<double>& eps_grid) {
    std::ostringstream out;
    out << "d,r,D,gamma,epsilon,p_accept,eps_out\n";
    const int D = code.designed_distance();
    const std::string gamma = format_double(gamma_value(code.d()));
    for (double e : eps_grid) {
        DistillationOutcome o = distill_map(table, e);
        out << code.d() << ',' << code.r << ',' << D << ',' << gamma << ','
            << format_double(e) << ',' << format_double(o.p_accept) << ','
            << format_double(o.eps_out) << '\n';
    }
    return out.str();
}

std::string csv_threshold(const std::vector<ThresholdRow>& rows) {
    std::ostringstream out;
    out << "d,r,eps_star,tol\n";
    for (const ThresholdRow& row : rows) {
        out << row.d << ',' << row.r << ',';
        if (row.result.found)
            out << format_double(row.result.eps_star);
        else
            out << "none";
        out << ',' << format_double(row.result.tol) << '\n';
    }
    // Monotonicity summaries per residue class of d mod 3, in row order.
    for (int residue : {2, 1}) {
        std::vector<const ThresholdRow*> chain;
        for (const ThresholdRow& row : rows)
            if (row.d % 3 == residue && row.result.found) chain.push_back(&row);
        if (chain.size() < 2) continue;
        bool increasing = true;
        for (size_t i = 1; i < chain.size(); ++i)
            if (chain[i]->result.eps_star <= chain[i - 1]->result.eps_star)
                increasing = false;
        out << "# residue " << residue << " chain (d mod 3 = " << residue << "):";
        for (const ThresholdRow* row : chain) out << ' ' << row->d;
        out << " -> eps_star " << (increasing ? "strictly increasing" : "NOT monotone")
            << '\n';
    }
    return out.str();
}

std::string csv_gamma(const std::vector<GammaCurveRow>& rows) {
    std::ostringstream out;
    out << "d,r_max,D,gamma,residue,mode\n";
    for (const GammaCurveRow& row : rows)
        out << row.d << ',' << row.r_max << ',' << row.D << ','
            << format_double(row.gamma) << ',' << row.residue << ','
            << (row.d <= 17 ? "computed" : "formula-only") << '\n';
    return out.str();
}

std::string json_table(const ClassWeightTable& table) {
    nlohmann::ordered_json j;
    j["d"] = table.d;
    j["r"] = table.r;
    j["n"] = table.n;
    j["total"] = table.total();
    nlohmann::ordered_json counts = nlohmann::ordered_json::array();
    for (int w = 0; w <= table.n; ++w)
        for (int m = 0; m < table.d; ++m)
            if (table.at(w, m) != 0)
                counts.push_back({w, m, table.at(w, m)});
    j["counts"] = std::move(counts);
    return j.dump(2) + "\n";
}

namespace {

std::string mu_classes_line(int d) {
    std::ostringstream out;
    MuClassification cls = mu_equivalence_classes(d);
    for (size_t i = 0; i < cls.classes.size(); ++i) {
        out << (i ? " | " : "");
        for (size_t j = 0; j < cls.classes[i].size(); ++j)
            out << (j ? " " : "") << cls.classes[i][j];
    }
    return out.str();
}

} // namespace

std::string code_info_text(const QRMCode& code) {
    const int d = code.d();
    std::ostringstream out;
    out << "code [[" << code.n << ", 1, " << ((d + 1) / 3) << "]]_" << d
        << " at degree r = " << code.r << "\n"
        << "qudits: " << code.n << "\n"
        << "x-type generators: " << code.x_gens.size() << "\n"
        << "z-type generators: " << code.z_gens.size() << "\n"
        << "z-distance (this degree): " << code.designed_distance() << "\n"
        << "max transversal degree: " << max_transversal_degree(d) << "\n"
        << "transversal cubic gate: "
        << (code.r <= max_transversal_degree(d) ? "yes" : "no") << "\n"
        << "gamma: " << format_double(gamma_value(d)) << "\n"
        << "mu classes: " << mu_classes_line(d) << "\n";
    return out.str();
}

std::string code_info_json(const QRMCode& code) {
    const int d = code.d();
    nlohmann::ordered_json j;
    j["d"] = d;
    j["n"] = code.n;
    j["k"] = 1;
    j["distance_at_max_degree"] = (d + 1) / 3;
    j["r"] = code.r;
    j["z_distance"] = code.designed_distance();
    j["x_generators"] = code.x_gens.size();
    j["z_generators"] = code.z_gens.size();
    j["max_transversal_degree"] = max_transversal_degree(d);
    j["transversal_cubic_gate"] = code.r <= max_transversal_degree(d);
    j["gamma"] = gamma_value(d);
    j["mu_classes"] = mu_equivalence_classes(d).classes;
    return j.dump(2) + "\n";
}

std::vector<GammaCurveRow> figure_gamma_rows(bool extended) {
    std::vector<int> dims;
    const int cap = extended ? 1009 : 17;
    for (int d = 5; d <= cap; ++d)
        if (is_prime(d)) dims.push_back(d);
    return gamma_curves(dims);
}

std::vector<ThresholdRow> figure_threshold_rows(double tol) {
    std::vector<ThresholdRow> rows;
    for (int d : {5, 7, 11, 13, 17}) {
        QRMCode code = build_code(d, max_transversal_degree(d));
        rows.push_back(ThresholdRow{d, code.r, threshold(code, tol)});
    }
    return rows;
}

namespace {

// Tiny fixed-geometry SVG scatter/bar helpers; axes are annotated with the
// raw numeric ranges so the files stand alone.
constexpr int kW = 640, kH = 420, kPad = 60;

double scale_x(double v, double lo, double hi) {
    return kPad + (v - lo) / (hi - lo) * (kW - 2 * kPad);
}

double scale_y(double v, double lo, double hi) {
    return kH - kPad - (v - lo) / (hi - lo) * (kH - 2 * kPad);
}

void svg_header(std::ostringstream& out, const std::string& title) {
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kW
        << "\" height=\"" << kH << "\" viewBox=\"0 0 " << kW << ' ' << kH
        << "\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
        << "<text x=\"" << kW / 2 << "\" y=\"24\" text-anchor=\"middle\" "
           "font-family=\"sans-serif\" font-size=\"16\">" << title
        << "</text>\n"
        << "<line x1=\"" << kPad << "\" y1=\"" << kH - kPad << "\" x2=\""
        << kW - kPad << "\" y2=\"" << kH - kPad
        << "\" stroke=\"black\"/>\n"
        << "<line x1=\"" << kPad << "\" y1=\"" << kPad << "\" x2=\"" << kPad
        << "\" y2=\"" << kH - kPad << "\" stroke=\"black\"/>\n";
}

} // namespace

std::string svg_gamma(const std::vector<GammaCurveRow>& rows) {
    std::ostringstream out;
    svg_header(out, "distillation efficiency by dimension");
    if (!rows.empty()) {
        double xlo = rows.front().d, xhi = rows.front().d;
        double ylo = rows.front().gamma, yhi = rows.front().gamma;
        for (const GammaCurveRow& r : rows) {
            xlo = std::min(xlo, static_cast<double>(r.d));
            xhi = std::max(xhi, static_cast<double>(r.d));
            ylo = std::min(ylo, r.gamma);
            yhi = std::max(yhi, r.gamma);
        }
        if (xhi == xlo) xhi = xlo + 1;
        if (yhi == ylo) yhi = ylo + 1;
        // Two monotone curves, one per residue class: points on the same
        // class are connected in increasing d.
        for (int residue : {1, 2}) {
            std::ostringstream pts;
            for (const GammaCurveRow& r : rows)
                if (r.residue == residue)
                    pts << scale_x(r.d, xlo, xhi) << ','
                        << scale_y(r.gamma, ylo, yhi) << ' ';
            out << "<polyline fill=\"none\" stroke=\""
                << (residue == 1 ? "#1f77b4" : "#d62728")
                << "\" stroke-width=\"1\" points=\"" << pts.str() << "\"/>\n";
        }
        for (const GammaCurveRow& r : rows)
            out << "<circle cx=\"" << scale_x(r.d, xlo, xhi) << "\" cy=\""
                << scale_y(r.gamma, ylo, yhi) << "\" r=\"3\" fill=\""
                << (r.residue == 1 ? "#1f77b4" : "#d62728") << "\"/>\n";
        out << "<text x=\"" << kW / 2 << "\" y=\"" << kH - 18
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
               "font-size=\"12\">d from " << xlo << " to " << xhi
            << "</text>\n"
            << "<text x=\"18\" y=\"" << kH / 2
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
               "font-size=\"12\" transform=\"rotate(-90 18 " << kH / 2
            << ")\">gamma from " << format_double(ylo) << " to "
            << format_double(yhi) << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

std::string svg_threshold(const std::vector<ThresholdRow>& rows) {
    std::ostringstream out;
    svg_header(out, "distillation thresholds");
    double yhi = 0.0;
    for (const ThresholdRow& r : rows)
        if (r.result.found) yhi = std::max(yhi, r.result.eps_star);
    if (yhi == 0.0) yhi = 1.0;
    const double barw = (kW - 2.0 * kPad) / (2.0 * rows.size());
    for (size_t i = 0; i < rows.size(); ++i) {
        if (!rows[i].result.found) continue;
        double x = kPad + (2.0 * i + 0.5) * barw;
        double y = scale_y(rows[i].result.eps_star, 0.0, yhi);
        out << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << barw
            << "\" height=\"" << (kH - kPad - y)
            << "\" fill=\"#2ca02c\"/>\n"
            << "<text x=\"" << x + barw / 2 << "\" y=\"" << kH - kPad + 16
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
               "font-size=\"12\">d=" << rows[i].d << "</text>\n"
            << "<text x=\"" << x + barw / 2 << "\" y=\"" << y - 6
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
               "font-size=\"10\">" << format_double(rows[i].result.eps_star)
            << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

std::string resolve_output_path(const std::string& path) {
    if (path.empty() || path.front() == '/') return path;
    const char* dir = std::getenv("QRM_OUTPUT_DIR");
    if (dir == nullptr || *dir == '\0') return path;
    std::string base = dir;
    if (base.back() != '/') base += '/';
    return base + path;
}

void write_output(const std::string& path, const std::string& bytes) {
    if (path.empty()) {
        std::cout << bytes;
        return;
    }
    const std::string resolved = resolve_output_path(path);
    std::ofstream out(resolved, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open output file: " + resolved);
    out << bytes;
    if (!out.flush())
        throw std::runtime_error("failed writing output file: " + resolved);
}

} // namespace qrm
