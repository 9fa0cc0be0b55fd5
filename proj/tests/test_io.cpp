#include <doctest.h>

#include "sdgamma/errors.hpp"
#include "sdgamma/io.hpp"
#include "sdgamma/transforms.hpp"

using namespace sdgamma;

TEST_CASE("input document parsing") {
    SUBCASE("facets") {
        auto doc = parse_input_document(R"({"facets": [[1,2],[2,3],[1,3]]})");
        REQUIRE(doc.facets.has_value());
        CHECK(doc.facets->size() == 3);
    }
    SUBCASE("h-vector with big integers as strings") {
        auto doc = parse_input_document(R"({"h": ["1", "123456789012345678901234567890", 1]})");
        REQUIRE(doc.h.has_value());
        CHECK((*doc.h)[1] == Int("123456789012345678901234567890"));
    }
    SUBCASE("exactly one source") {
        CHECK_THROWS_AS(parse_input_document(R"({"h": [1], "f": [1]})"), validation_error);
        CHECK_THROWS_AS(parse_input_document(R"({})"), validation_error);
    }
    SUBCASE("parse errors carry position context") {
        try {
            parse_input_document("{\"facets\": [[1,");
            FAIL("expected validation_error");
        } catch (const validation_error& e) {
            CHECK(std::string(e.what()).find("JSON") != std::string::npos);
        }
    }
    CHECK_THROWS_AS(parse_count_list("1,,2", VectorRole::H), validation_error);
    CHECK(parse_count_list(" 1, 22 ,16", VectorRole::Gamma) == CountVector({1, 22, 16}));
}

TEST_CASE("vectors report values and determinism") {
    VectorsReport rep = vectors_report_from_facets({{1, 2}, {2, 3}, {1, 3}});
    CHECK(rep.f == CountVector({1, 3, 3}));
    CHECK(rep.h == CountVector({1, 1, 1}));
    REQUIRE(rep.gamma.has_value());
    CHECK(*rep.gamma == CountVector({1, -1}));
    REQUIRE(rep.gamma_sd.has_value());
    CHECK(*rep.gamma_sd == CountVector({1, 2}));
    CHECK(render_text(rep) == render_text(rep));
    CHECK(render_json(rep) == render_json(rep));

    SUBCASE("asymmetric h gets a note instead of gamma") {
        VectorsReport wheel = vectors_report_from_facets({{1, 2, 7}, {2, 3, 7}, {3, 1, 7}});
        CHECK_FALSE(wheel.gamma.has_value());
        CHECK(wheel.gamma_note.find("symmetric") != std::string::npos);
        CHECK(render_json(wheel).find("gamma_note") != std::string::npos);
    }
}

TEST_CASE("subdivide report") {
    SubdivideReport rep = subdivide_report({{1, 2}});
    CHECK(rep.f == CountVector({1, 3, 2}));
    CHECK(rep.vertex_faces.size() == 3);
    std::string json = render_json(rep);
    CHECK(json.find("\"parent_face\"") != std::string::npos);
    CHECK(render_json(rep) == json);
}

TEST_CASE("eulerian report") {
    EulerianReport rep = eulerian_report(4);
    CHECK(rep.eulerian == IntPolynomial({1, 11, 11, 1}));
    std::string text = render_text(rep);
    CHECK(text.find("1 + 11t + 11t^2 + t^3") != std::string::npos);
    // right-aligned single-width columns at n = 4
    CHECK(text.find("  1 0 0 0") != std::string::npos);
    EulerianReport one = eulerian_report(1);
    CHECK_FALSE(one.primed_note.empty());
}

TEST_CASE("ffk-check report") {
    FfkCheckReport good = ffk_check_report(CountVector({1, 3, 2}), 2);
    CHECK(good.ok);
    FfkCheckReport bad = ffk_check_report(CountVector({1, 3, 3}), 2);
    CHECK_FALSE(bad.ok);
    std::string text = render_text(bad);
    CHECK(text.find("{1, 4}") != std::string::npos);
    CHECK(text.find("{4}") != std::string::npos);
}

TEST_CASE("witness report round-trips through its structured form") {
    for (const char* h : {"1,1,1", "1,3,3,1", "1,5,10,10,5,1"}) {
        WitnessReport rep = witness_report(parse_count_list(h, VectorRole::H));
        CHECK(rep.coloring_ok);
        std::string json = render_json(rep);
        CHECK(render_json(rep) == json);  // byte-deterministic
        ParsedWitness back = parse_witness_document(json);
        CHECK(back.gamma == rep.gamma);
        CHECK(back.modulus == rep.modulus);
        auto check = verify_coloring(back.witness);
        CHECK(check.proper);
        CHECK(equals_padded(back.witness.complex().f_vector(), back.gamma));
    }
}

TEST_CASE("verification report") {
    VerifyReport rep = run_verification(5);
    CHECK(rep.all_pass);
    std::string text = render_text(rep);
    CHECK(text.find("[PASS] goodness-certificates") != std::string::npos);
    CHECK(text.find("all suites passed") != std::string::npos);
    SUBCASE("threaded run gives the identical report") {
        VerifyReport threaded = run_verification(5, 4);
        CHECK(render_text(threaded) == text);
        CHECK(render_json(threaded) == render_json(rep));
    }
}
