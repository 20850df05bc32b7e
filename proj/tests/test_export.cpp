#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "qrm/errors.hpp"
#include "qrm/export.hpp"

using namespace qrm;

TEST_CASE("double formatting round-trips exactly") {
    for (double v : {0.1, 1.0 / 3.0, 1e-17, 0.36312256544828414, 2.0, 0.0}) {
        std::string s = format_double(v);
        CHECK(std::stod(s) == v);
    }
}

TEST_CASE("config validation splits capacity from usage errors") {
    RunConfig cfg;
    cfg.d = 19;
    CHECK_THROWS_AS(validate(cfg), capacity_error);
    cfg.d = 9;
    CHECK_THROWS_AS(validate(cfg), std::invalid_argument);
    cfg.d = 5;
    cfg.r = 3;
    CHECK_THROWS_AS(validate(cfg), std::invalid_argument);
    cfg.r = 1;
    cfg.mu = 5;
    CHECK_THROWS_AS(validate(cfg), std::invalid_argument);
    cfg.mu = 1;
    cfg.format = "xml";
    CHECK_THROWS_AS(validate(cfg), std::invalid_argument);
    cfg.format = "csv";
    cfg.eps_grid = {1.5};
    CHECK_THROWS_AS(validate(cfg), std::invalid_argument);
    cfg.eps_grid = {0.1};
    CHECK_NOTHROW(validate(cfg));
    // r defaults to the maximal transversal degree.
    RunConfig def;
    def.d = 11;
    CHECK(def.effective_r() == 3);
}

TEST_CASE("distillation CSV: exact header and shape") {
    QRMCode code = build_code(5, 1);
    ClassWeightTable table = accepted_enumerator_bruteforce(code);
    std::string csv = csv_distill(code, table, {0.0, 0.1});
    std::istringstream in(csv);
    std::string line;
    REQUIRE(std::getline(in, line));
    CHECK(line == "d,r,D,gamma,epsilon,p_accept,eps_out");
    REQUIRE(std::getline(in, line));
    CHECK(line.rfind("5,1,2,2,0,1,0", 0) == 0); // eps = 0: exact passthrough
    REQUIRE(std::getline(in, line));
    CHECK(line.substr(0, 6) == "5,1,2,");
    CHECK_FALSE(std::getline(in, line));
}

TEST_CASE("threshold CSV carries values, tolerances and monotonicity notes") {
    std::vector<ThresholdRow> rows;
    ThresholdRow a{5, 1, {}};
    a.result.found = true;
    a.result.eps_star = 0.363122;
    a.result.tol = 1e-6;
    ThresholdRow b{11, 3, {}};
    b.result.found = true;
    b.result.eps_star = 0.531656;
    b.result.tol = 1e-6;
    ThresholdRow c{7, 1, {}};
    c.result.found = false;
    c.result.tol = 1e-6;
    rows = {a, b, c};
    std::string csv = csv_threshold(rows);
    CHECK(csv.find("d,r,eps_star,tol\n") == 0);
    CHECK(csv.find("5,1,0.36312") != std::string::npos);
    CHECK(csv.find("7,1,none,") != std::string::npos);
    CHECK(csv.find("# residue 2 chain") != std::string::npos);
    CHECK(csv.find("strictly increasing") != std::string::npos);
}

TEST_CASE("gamma CSV labels computed vs formula-only dimensions") {
    std::string csv = csv_gamma(gamma_curves({5, 17, 19}));
    CHECK(csv.find("d,r_max,D,gamma,residue,mode\n") == 0);
    CHECK(csv.find("5,1,2,2,2,computed") != std::string::npos);
    CHECK(csv.find("19,") != std::string::npos);
    CHECK(csv.find("formula-only") != std::string::npos);
}

TEST_CASE("count table JSON holds the nonzero entries in order") {
    ClassWeightTable table = accepted_enumerator_bruteforce(build_code(5, 1));
    nlohmann::json j = nlohmann::json::parse(json_table(table));
    CHECK(j["d"] == 5);
    CHECK(j["r"] == 1);
    CHECK(j["n"] == 4);
    CHECK(j["total"] == 125);
    REQUIRE(j["counts"].is_array());
    // First entry is the identity; entries are sorted by (w, m).
    CHECK(j["counts"][0] == nlohmann::json({0, 0, 1}));
    CHECK(j["counts"][1] == nlohmann::json({2, 1, 6}));
    uint64_t total = 0;
    int prev_w = -1, prev_m = -1;
    for (const auto& row : j["counts"]) {
        REQUIRE(row.size() == 3);
        int w = row[0], m = row[1];
        CHECK((w > prev_w || (w == prev_w && m > prev_m)));
        prev_w = w;
        prev_m = m;
        total += row[2].get<uint64_t>();
    }
    CHECK(total == 125);
}

TEST_CASE("code info in both formats") {
    QRMCode code = build_code(11, 3);
    std::string text = code_info_text(code);
    CHECK(text.find("[[10, 1, 4]]_11") != std::string::npos);
    CHECK(text.find("gamma: 1.66096404744368") != std::string::npos);
    nlohmann::json j = nlohmann::json::parse(code_info_json(code));
    CHECK(j["d"] == 11);
    CHECK(j["n"] == 10);
    CHECK(j["k"] == 1);
    CHECK(j["z_distance"] == 4);
    CHECK(j["mu_classes"].size() == 1);
    CHECK(j["transversal_cubic_gate"] == true);
}

TEST_CASE("figure rows") {
    std::vector<GammaCurveRow> small = figure_gamma_rows(false);
    REQUIRE(small.size() == 5);
    CHECK(small.front().d == 5);
    CHECK(small.back().d == 17);
    std::vector<GammaCurveRow> wide = figure_gamma_rows(true);
    CHECK(wide.size() == 167); // primes in [5, 1009]
    CHECK(wide.back().d == 1009);
    // The formula tail approaches 1 from above.
    CHECK(wide.back().gamma > 1.0);
    CHECK(wide.back().gamma < 1.2);
}

TEST_CASE("SVG rendering produces standalone documents") {
    std::string svg = svg_gamma(figure_gamma_rows(false));
    CHECK(svg.find("<svg") == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(svg.find("circle") != std::string::npos);
    std::vector<ThresholdRow> rows(1);
    rows[0].d = 5;
    rows[0].r = 1;
    rows[0].result.found = true;
    rows[0].result.eps_star = 0.36;
    rows[0].result.tol = 1e-6;
    std::string bars = svg_threshold(rows);
    CHECK(bars.find("rect") != std::string::npos);
    CHECK(bars.find("d=5") != std::string::npos);
}

TEST_CASE("output path resolution honors the directory variable") {
    unsetenv("QRM_OUTPUT_DIR");
    CHECK(resolve_output_path("x.csv") == "x.csv");
    CHECK(resolve_output_path("/tmp/x.csv") == "/tmp/x.csv");
    setenv("QRM_OUTPUT_DIR", "/tmp/qrm_test_out", 1);
    CHECK(resolve_output_path("x.csv") == "/tmp/qrm_test_out/x.csv");
    CHECK(resolve_output_path("/abs.csv") == "/abs.csv");
    CHECK(resolve_output_path("") == "");
    unsetenv("QRM_OUTPUT_DIR");
}

TEST_CASE("file output writes the exact bytes") {
    std::string path = "qrm_test_export.tmp";
    write_output(path, "alpha,beta\n1,2\n");
    std::ifstream in(path, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str() == "alpha,beta\n1,2\n");
    std::remove(path.c_str());
}
