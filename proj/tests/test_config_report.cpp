#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "ctx/report.hpp"

using namespace ctx;

namespace {

std::string write_temp(const std::string& name, const std::string& text) {
    std::string path = std::string("/tmp/ctx_test_") + name;
    std::ofstream out(path);
    out << text;
    return path;
}

}  // namespace

TEST_CASE("config parsing and validation diagnostics") {
    CHECK_THROWS_AS(parse_config("{"), ValidationError);
    CHECK_THROWS_AS(parse_config(R"({"dimension": 3})"), ValidationError);
    CHECK_THROWS_AS(parse_config(R"({"name": "x", "dimension": 3, "rays": []})"), ValidationError);
    CHECK_THROWS_AS(parse_config(R"({"name": "x", "dimension": 3, "rays": [[0,0,0]]})"),
                    ValidationError);

    // asymmetric adjacency
    std::string bad_adj = R"({"name": "x", "dimension": 3,
        "rays": [[1,0,0],[0,1,0]],
        "adjacency": [[0,1],[0,0]]})";
    CHECK_THROWS_AS(parse_config(bad_adj), ValidationError);

    // diagonal must be zero
    std::string diag = R"({"name": "x", "dimension": 3,
        "rays": [[1,0,0],[0,1,0]],
        "adjacency": [[1,1],[1,0]]})";
    CHECK_THROWS_AS(parse_config(diag), ValidationError);

    // adjacency must match numeric orthogonality
    std::string mismatch = R"({"name": "x", "dimension": 3,
        "rays": [[1,0,0],[1,1,0]],
        "adjacency": [[0,1],[1,0]],
        "states": [[1,0,0]]})";
    ConstructionConfig cfg = parse_config(mismatch);
    CHECK_THROWS_AS(build_from_config(cfg), ValidationError);

    // field paths appear in diagnostics
    try {
        parse_config(R"({"name": "x", "dimension": 3, "rays": [[1,0]]})");
        CHECK(false);
    } catch (const ValidationError& e) {
        CHECK(std::string(e.what()).find("$.rays[0]") != std::string::npos);
    }
}

TEST_CASE("config roundtrip reproduces the built-in kcsb report") {
    WitnessConstruction c = build_kcsb();
    std::string cfg_text = export_config(c, WitnessKind::SumPairProducts);
    std::string path = write_temp("kcsb.json", cfg_text);

    ConstructionConfig cfg = parse_config(cfg_text);
    CHECK(cfg.dimension == 3);
    CHECK(cfg.rays.size() == 5);

    ReportDocument via_config = run_report(path);
    ReportDocument builtin = run_report("kcsb");
    auto rows_cfg = via_config.payload["reports"];
    auto rows_b = builtin.payload["reports"];
    REQUIRE(rows_cfg.size() == rows_b.size());
    for (size_t i = 0; i < rows_b.size(); ++i) {
        CHECK(std::abs(rows_cfg[i]["exact"].get<double>() - rows_b[i]["exact"].get<double>()) < 1e-9);
        CHECK(std::abs(rows_cfg[i]["h0"].get<double>() - rows_b[i]["h0"].get<double>()) < 1e-9);
        CHECK(rows_cfg[i]["verdict"] == rows_b[i]["verdict"]);
    }
    std::remove(path.c_str());
}

TEST_CASE("deterministic rendering and csv/json numeric agreement") {
    ReportDocument doc1 = run_report("kcsb");
    ReportDocument doc2 = run_report("kcsb");
    CHECK(render_json(doc1) == render_json(doc2));
    CHECK(render_csv(doc1) == render_csv(doc2));
    CHECK(render_table(doc1) == render_table(doc2));

    // csv cells equal the formatted json values
    std::istringstream csv(render_csv(doc1));
    std::string header, line;
    std::getline(csv, header);
    size_t row = 0;
    while (std::getline(csv, line)) {
        std::vector<std::string> cells;
        std::stringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        REQUIRE(cells.size() == 8);
        const auto& rec = doc1.payload["reports"][row];
        CHECK(cells[1] == format_number(rec["exact"].get<double>()));
        CHECK(cells[2] == format_number(rec["h0"].get<double>()));
        CHECK(cells[3] == format_number(rec["correction"].get<double>()));
        ++row;
    }
    CHECK(row == 12);
}

TEST_CASE("bundled sample config reproduces the built-in squared-h-sum rows") {
    ReportDocument via_cfg = run_report(std::string(CTX_SOURCE_DIR) + "/configs/thirteen-rays.json");
    ReportDocument builtin = run_report("yu-oh");
    auto a = via_cfg.payload["reports"];
    auto b = builtin.payload["reports"];
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(std::abs(a[i]["exact"].get<double>() - b[i]["exact"].get<double>()) < 1e-12);
        CHECK(std::abs(a[i]["h0"].get<double>() - b[i]["h0"].get<double>()) < 1e-12);
        CHECK(a[i]["verdict"] == b[i]["verdict"]);
    }
}

TEST_CASE("json documents round-trip losslessly through their encoding") {
    for (const char* target : {"kcsb", "yu-oh", "peres-mermin"}) {
        ReportDocument doc = run_report(target);
        std::string text = render_json(doc);
        ReportDocument reparsed;
        reparsed.payload = nlohmann::ordered_json::parse(text);
        CHECK(render_json(reparsed) == text);
    }
}

TEST_CASE("number formatting: shortest round-trip capped at 12 digits") {
    CHECK(format_number(0.0) == "0");
    CHECK(format_number(2.0) == "2");
    CHECK(format_number(0.5) == "0.5");
    CHECK(format_number(1.0 / 3) == "0.333333333333");
    double x = 5 - std::sqrt(5.0);
    double parsed = std::strtod(format_number(x).c_str(), nullptr);
    CHECK(std::abs(parsed - x) < 1e-11);
    CHECK(format_number(x).size() <= 14);  // sign + 12 digits + point
}

TEST_CASE("report targets produce their headline facts") {
    ReportDocument yo = run_report("yu-oh");
    CHECK(yo.payload["identities"]["quadratic_functional_scalar"].get<double>() ==
          doctest::Approx(25.0 / 3).epsilon(1e-12));
    CHECK(yo.payload["identities"]["h_sum_scalar"].get<double>() == doctest::Approx(4.0 / 3).epsilon(1e-12));
    for (const auto& r : yo.payload["reports"]) {
        CHECK(r["h0"].get<double>() == doctest::Approx(16.0 / 27).epsilon(1e-10));
        CHECK(r["verdict"] == "contextual");
    }
    bool found_quad = false, found_hsum = false;
    for (const auto& b : yo.payload["bound_certificates"]) {
        if (b["name"] == "dichotomic_quadratic") {
            CHECK(b["max"].get<double>() == 8.0);
            found_quad = true;
        }
        if (b["name"] == "h_sum") {
            CHECK(b["max"].get<double>() == 1.0);
            found_hsum = true;
        }
    }
    CHECK(found_quad);
    CHECK(found_hsum);

    ReportDocument pm = run_report("peres-mermin");
    CHECK(pm.payload["contexts"].size() == 6);
    for (const auto& r : pm.payload["contexts"]) CHECK(r["h0_symbol_identically_zero"].get<bool>());
    CHECK(pm.payload["contexts"][5]["product_sign"].get<int>() == -1);
    CHECK(pm.payload["bound_certificates"][0]["satisfying_count"].get<uint64_t>() == 0);

    ReportDocument k = run_report("kcsb");
    CHECK(k.payload["construction"]["appendix_grids_matched"].get<bool>());
    CHECK(k.payload["reports"][2]["verdict"] == "contextual");
    CHECK(k.payload["reports"][0]["verdict"] == "not-contextual-under-this-witness");
}

TEST_CASE("weyl grid dumps") {
    WeylGrid id = dump_weyl("identity", 3, SymbolNorm::Observable);
    for (const auto& v : id.symbol.v) CHECK(std::abs(v - Complex(1, 0)) < 1e-12);

    WeylGrid pi2 = dump_weyl("Pi2", 3, SymbolNorm::State);
    CHECK(pi2.symbol.at_flat(0, 2).real() == doctest::Approx(1 / (3 * std::sqrt(5.0))).epsilon(1e-10));

    WeylGrid phi1 = dump_weyl("phi1", 3, SymbolNorm::State);
    for (int xp = 0; xp < 3; ++xp) CHECK(phi1.symbol.at_flat(xp, 0).real() == doctest::Approx(1.0 / 3));

    CHECK_THROWS_AS(dump_weyl("nonsense", 3, SymbolNorm::State), ValidationError);

    std::string mpath = write_temp("mat.json", "[[1,0,0],[0,1,0],[0,0,1]]");
    WeylGrid m = dump_weyl(mpath, 3, SymbolNorm::Observable);
    for (const auto& v : m.symbol.v) CHECK(std::abs(v - Complex(1, 0)) < 1e-12);
    std::remove(mpath.c_str());

    std::string rendered = render_grid(pi2);
    CHECK(rendered.find("rows x_p") != std::string::npos);
}
