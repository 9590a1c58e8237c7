#include <catch2/catch_amalgamated.hpp>

#include <string>

#include "avn/catalog.hpp"
#include "avn/report_io.hpp"

using namespace avn;

TEST_CASE("json reports carry the full schema") {
    const Json j = to_json(verify_ghz());
    REQUIRE(j["name"] == "ghz");
    REQUIRE(j.contains("title"));
    REQUIRE(j["quantum_checks"].is_array());
    for (const Json& c : j["quantum_checks"]) {
        REQUIRE(c.contains("description"));
        REQUIRE(c.contains("expected"));
        REQUIRE(c.contains("computed_re"));
        REQUIRE(c.contains("computed_im"));
        REQUIRE(c.contains("residual"));
        REQUIRE(c.contains("tol"));
        REQUIRE(c.contains("cmp"));
        REQUIRE(c.contains("pass"));
    }
    REQUIRE(j["hv"].contains("satisfiable"));
    REQUIRE(j["hv"].contains("count"));
    REQUIRE(j["hv"].contains("witnesses"));
    REQUIRE(j["conclusion"] == "ContradictionEstablished");
}

TEST_CASE("emitted reports are self-auditing") {
    // Parse every report back and recompute pass/fail from the residuals and
    // thresholds it carries; the stored flags and conclusion must reproduce.
    for (const CatalogEntry& e : catalog()) {
        const Json j = Json::parse(to_json(e.run()).dump());
        bool all_pass = true;
        for (const Json& c : j["quantum_checks"]) {
            const double residual = c["residual"];
            const double tol = c["tol"];
            const bool recomputed =
                c["cmp"] == ">" ? residual > tol : residual < tol;
            REQUIRE(recomputed == bool(c["pass"]));
            all_pass = all_pass && recomputed;
        }
        const bool contradiction = all_pass && j["hv"]["count"] == 0;
        const std::string want =
            contradiction ? "ContradictionEstablished" : "NoContradiction";
        REQUIRE(j["conclusion"] == want);
    }
}

TEST_CASE("rendering is deterministic") {
    const std::string j1 = to_json(verify_mermin_rect()).dump(2);
    const std::string j2 = to_json(verify_mermin_rect()).dump(2);
    REQUIRE(j1 == j2);
    const std::string t1 = render_text(verify_ghz_positions());
    const std::string t2 = render_text(verify_ghz_positions());
    REQUIRE(t1 == t2);
}

TEST_CASE("witnesses serialize in declared symbol order") {
    const VerificationReport rep = verify_mermin_rect();
    const Json j = to_json(rep.scenario, rep.hv);
    REQUIRE(j["witnesses"].size() == 8);
    const Json& first = j["witnesses"][0];
    // Lexicographically first satisfying assignment: free symbols at -1,
    // pinned products at +1.
    REQUIRE(first["symIX"] == -1);
    REQUIRE(first["XX"] == 1);
    REQUIRE(first["symIZ"] == -1);
    REQUIRE(first["ZZ"] == 1);
    REQUIRE(first["symXZ"] == -1);
    REQUIRE(first["YY"] == 1);
    // ordered_json keeps insertion order = declared order.
    std::vector<std::string> keys;
    for (auto it = first.begin(); it != first.end(); ++it) keys.push_back(it.key());
    REQUIRE(keys == std::vector<std::string>{"symIX", "XX", "symIZ", "ZZ", "symXZ", "YY"});
}

TEST_CASE("text rendering") {
    SECTION("search output leads with the count verdict") {
        const Scenario s = ghz_scenario();
        const std::string text = render_search_text(s, search(s));
        REQUIRE(text.rfind("count=0 UNSATISFIABLE", 0) == 0);
    }

    SECTION("satisfiable searches list witnesses") {
        const Scenario s = mermin_rectangle_scenario();
        const std::string text = render_search_text(s, search(s));
        REQUIRE(text.rfind("count=8 SATISFIABLE", 0) == 0);
        REQUIRE(text.find("witness: symIX=-1 XX=+1") != std::string::npos);
    }

    SECTION("report text shows residual next to threshold") {
        const std::string text = render_text(verify_ghz());
        REQUIRE(text.find("[PASS]") != std::string::npos);
        REQUIRE(text.find("< 1.00e-10") != std::string::npos);
        REQUIRE(text.find("conclusion: ContradictionEstablished") != std::string::npos);
    }

    SECTION("exchange audit is part of the positions report") {
        const std::string text = render_text(verify_ghz_positions());
        REQUIRE(text.find("exchange symmetry: parity-signed") != std::string::npos);
        REQUIRE(text.find("note:") != std::string::npos);
    }
}

TEST_CASE("scientific formatting uses three significant digits") {
    REQUIRE(format_sci(0.000123456) == "1.23e-04");
    REQUIRE(format_sci(0.0) == "0.00e+00");
    REQUIRE(format_sci(2.0) == "2.00e+00");
}
