#include <doctest.h>

#include <sstream>

#include "clarcube/error.hpp"
#include "clarcube/io.hpp"
#include "clarcube/presets.hpp"

using namespace clarcube;

TEST_CASE("benzenoid presets have the textbook sizes") {
    CHECK(build_preset("linear:1").n() == 6);
    CHECK(build_preset("linear:6").n() == 26);   // 4h+2
    CHECK(build_preset("zigzag:6").n() == 26);
    CHECK(build_preset("pyrene").n() == 16);
    CHECK(build_preset("coronene").n() == 24);
    CHECK(build_preset("coronene").faces.size() == 7);
}

TEST_CASE("rotation helpers reproduce the platonic counts") {
    auto c20 = fullerene_c20_rotation();
    CHECK(c20.size() == 20);
    auto faces = trace_faces(c20);
    CHECK(faces.size() == 12);
    for (const auto& f : faces) CHECK(f.size() == 5);

    auto c60 = fullerene_c60_rotation();
    CHECK(c60.size() == 60);
    auto c60_faces = trace_faces(c60);
    CHECK(c60_faces.size() == 32);
    int pent = 0, hex = 0;
    for (const auto& f : c60_faces) {
        if (f.size() == 5) ++pent;
        if (f.size() == 6) ++hex;
    }
    CHECK(pent == 12);
    CHECK(hex == 20);
}

TEST_CASE("unknown presets are rejected") {
    CHECK_THROWS_WITH_AS(make_preset("dodecahedrane"), doctest::Contains("UnknownPreset"), Error);
    CHECK_THROWS_WITH_AS(make_preset("linear:x"), doctest::Contains("UnknownPreset"), Error);
    CHECK_THROWS_WITH_AS(make_preset("linear:0"), doctest::Contains("UnknownPreset"), Error);
    CHECK_THROWS_WITH_AS(make_preset("tube:1,0,1"), doctest::Contains("InvalidChiralVector"), Error);
}

TEST_CASE("preset files round-trip through the readers") {
    for (const char* preset : {"linear:3", "zigzag:4", "pyrene", "tube:2,2,1", "c20", "c24", "c60"}) {
        CAPTURE(preset);
        PresetInput input = make_preset(preset);
        std::istringstream in(format_preset_file(input));
        MolecularGraph parsed = read_molecular_graph(in, std::nullopt);
        MolecularGraph direct = build_preset(preset);
        CHECK(parsed.family == direct.family);
        CHECK(parsed.graph.adj == direct.graph.adj);
        CHECK(parsed.faces.size() == direct.faces.size());
    }
}

TEST_CASE("format sniffing distinguishes the three families") {
    std::istringstream benz("0 0\n1 0\n");
    CHECK(read_molecular_graph(benz, std::nullopt).family == Family::benzenoid);
    std::istringstream tube("2 2 1\n");
    CHECK(read_molecular_graph(tube, std::nullopt).family == Family::tubulene);
    std::istringstream fullerene(format_preset_file(make_preset("c20")));
    CHECK(read_molecular_graph(fullerene, std::nullopt).family == Family::fullerene);
}

TEST_CASE("declared format overrides sniffing and malformed input raises ParseError") {
    std::istringstream bad("0 0 0 0\n");
    CHECK_THROWS_WITH_AS(read_molecular_graph(bad, std::nullopt), doctest::Contains("ParseError"),
                         Error);
    std::istringstream words("a b\n");
    CHECK_THROWS_WITH_AS(read_molecular_graph(words, std::nullopt), doctest::Contains("ParseError"),
                         Error);
    std::istringstream empty("# only a comment\n");
    CHECK_THROWS_WITH_AS(read_molecular_graph(empty, std::nullopt), doctest::Contains("EmptyInput"),
                         Error);
    std::istringstream wrong("0 0\n1 0\n");
    CHECK_THROWS_AS(read_molecular_graph(wrong, Family::tubulene), Error);
}

TEST_CASE("resonance exports are stable") {
    MolecularGraph g = build_preset("linear:1");
    ResonanceGraph r = build_resonance_graph(g, enumerate_perfect_matchings(g));
    CHECK(resonance_to_dot(r) == "graph resonance {\n  0;\n  1;\n  0 -- 1 [label=\"0\"];\n}\n");
    CHECK(resonance_to_json(r) == "{\"vertices\":2,\"edges\":[[0,1,0]]}");
}

TEST_CASE("cover serialization lists hexagons, pairs and free edges") {
    MolecularGraph g = build_preset("linear:3");
    auto covers = enumerate_generalized_clar_covers(g, 1, 0);
    REQUIRE(!covers.empty());
    std::string json = cover_to_json(covers[0]);
    CHECK(json.find("\"hexagons\":[0]") != std::string::npos);
    CHECK(json.find("\"pairs\":[]") != std::string::npos);
    CHECK(json.find("\"free_edges\":[[") != std::string::npos);
}
