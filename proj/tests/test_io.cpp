#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hadz/errors.hpp"
#include "hadz/io.hpp"
#include "hadz/tables.hpp"

using namespace hadz;

TEST_CASE("index list parsing") {
    CHECK(parse_index_list("14,10,6") == std::vector<int>{14, 10, 6});
    CHECK(parse_index_list("7") == std::vector<int>{7});
    CHECK(parse_index_list("") == std::vector<int>{});
    CHECK(parse_index_list("1, 2, 3") == std::vector<int>{1, 2, 3});
    CHECK_THROWS_AS(parse_index_list("1;2"), ParseError);
}

TEST_CASE("set JSON round trip") {
    CoboundarySet s(GroupParams(7), {4, 6, 9, 10, 11, 12, 14, 20, 21, 25});
    json j = set_to_json(s);
    CHECK(j["t"] == 7);
    CHECK(j["coboundaries"] == std::vector<int>({4, 6, 9, 10, 11, 12, 14, 20, 21, 25}));
    CHECK(set_from_json(j) == s);
    CHECK_THROWS_AS(set_from_json(json{{"t", 7}}), ParseError);
    CHECK_THROWS_AS(set_from_json(json{{"t", 7}, {"coboundaries", {99}}}), ParseError);
    CHECK_THROWS_AS(set_from_json(json{{"t", 4}, {"coboundaries", {1}}}), ParseError);
}

TEST_CASE("display forms") {
    CoboundarySet rep3(GroupParams(3), {7, 8, 5});
    CHECK(paper_style(rep3) == "{ { }, { 7 }, { 8 }, { 5 } }");
    CHECK(machine_style(rep3) == "5,7,8");

    CoboundarySet rep7(GroupParams(7), {14, 11, 15, 19, 8, 16, 24, 1, 13, 25});
    CHECK(paper_style(rep7) == "{ { 14 }, { 11, 15, 19 }, { 8, 16, 24 }, { 1, 13, 25 } }");
}

TEST_CASE("diagram JSON round trip") {
    Diagram d = to_diagram(CoboundarySet(GroupParams(5), {10, 11, 8, 16, 1, 17}));
    json j = diagram_to_json(d);
    CHECK(j["t"] == 5);
    CHECK(diagram_from_json(j) == d);
    j["marks"][0].erase(0);
    CHECK_THROWS_AS(diagram_from_json(j), ParseError);
}

TEST_CASE("matrix exports") {
    SignMatrix m(2);
    m.set(1, 2, -1);
    m.set(2, 1, -1);
    CHECK(matrix_grid(m) == "+-\n-+\n");
    json p = matrix_packed_json(m);
    CHECK(p["n"] == 2);
    CHECK(p["rows"].size() == 2);
    CHECK(p["rows"][0][0] == 2); // bit 1 set: column 2 negative
    CHECK(p["rows"][1][0] == 1);
}

TEST_CASE("orbit serialization carries the factorization") {
    OrbitRecord rec = total_orbit(CoboundarySet(GroupParams(3), {5, 7, 8}));
    json j = orbit_to_json(rec, GroupParams(3), false);
    CHECK(j["size"] == 24);
    CHECK(j["factors"]["complement"] == 2);
    CHECK(j["factors"]["rotation"] == 3);
    CHECK(j["factors"]["swap"] == 4);
    CHECK(j["factors"]["dilatation"] == 1);
    CHECK(j["factors"]["product_matches"] == true);
    CHECK_FALSE(j.contains("members"));
    json jm = orbit_to_json(rec, GroupParams(3), true);
    CHECK(jm["members"].size() == 24);
}

TEST_CASE("catalog data is internally consistent") {
    long long total = 0;
    int current_t = 3;
    for (const auto& o : catalog_orbits()) {
        // class lists live in their residue classes
        const int vals[4] = {2, 3, 4, 1};
        for (int i = 0; i < 4; ++i)
            for (int k : o.classes[static_cast<size_t>(i)]) CHECK(residue4(k) == vals[i]);
        if (o.t != current_t) {
            CHECK(total == expected_census(current_t));
            current_t = o.t;
            total = 0;
        }
        total += o.size;
    }
    CHECK(total == expected_census(current_t));
    // Williamson proportion: census / t where both are tabulated
    for (int t = 3; t <= 19; t += 2)
        if (expected_williamson(t) > 0) CHECK(expected_williamson(t) * t == expected_census(t));
}
