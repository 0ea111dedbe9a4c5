#include "prook/io.hpp"
#include "prook/characters.hpp"
#include "prook/representation.hpp"

#include <doctest.h>

using namespace prook;

namespace {

PlanarDiagram diag(int n, std::initializer_list<int> bottom,
                   std::initializer_list<int> top) {
    return PlanarDiagram::from_sets(n, mask_of(top), mask_of(bottom));
}

} // namespace

TEST_CASE("diagram json") {
    PlanarDiagram d = diag(5, {1, 2, 5}, {2, 3, 4});
    Json j = diagram_to_json(d);
    CHECK(j["n"] == 5);
    CHECK(j["top"] == Json::array({2, 3, 4}));
    CHECK(j["bottom"] == Json::array({1, 2, 5}));
    CHECK(diagram_from_json(j) == d);

    Json empty = diagram_to_json(PlanarDiagram::edgeless(2));
    CHECK(empty["top"].empty());
    CHECK(diagram_from_json(empty) == PlanarDiagram::edgeless(2));

    CHECK_THROWS(diagram_from_json(Json::parse(R"({"n":2,"top":[1]})")));
    CHECK_THROWS(diagram_from_json(
        Json::parse(R"({"n":2,"top":[1],"bottom":[1,2]})")));
    CHECK_THROWS(diagram_from_json(
        Json::parse(R"({"n":2,"top":[3],"bottom":[1]})")));
}

TEST_CASE("diagram compact text") {
    PlanarDiagram d = diag(5, {1, 2, 5}, {2, 3, 4});
    CHECK(diagram_to_compact(d) == "5:1,2,5->2,3,4");
    CHECK(diagram_from_compact("5:1,2,5->2,3,4") == d);
    CHECK(diagram_from_compact(" 5 : 1,2,5 -> 2,3,4 ") == d);

    CHECK(diagram_to_compact(PlanarDiagram::edgeless(4)) == "4:->");
    CHECK(diagram_from_compact("4:->") == PlanarDiagram::edgeless(4));

    // the empty monoid P_0 is legal
    CHECK(diagram_from_compact("0:->") == PlanarDiagram::edgeless(0));

    CHECK_THROWS(diagram_from_compact("5:1,2->3"));
    CHECK_THROWS(diagram_from_compact("5:1,1->2,3"));
    CHECK_THROWS(diagram_from_compact("abc"));
    CHECK_THROWS(diagram_from_compact("40:->"));

    // the parser accepts either format
    CHECK(parse_diagram("5:1,2,5->2,3,4") == d);
    CHECK(parse_diagram(R"({"n":5,"top":[2,3,4],"bottom":[1,2,5]})") == d);
}

TEST_CASE("element json round trip") {
    AlgebraElement e = Rational(-3, 2) * AlgebraElement::from_diagram(
                                             diag(2, {1}, {2}));
    Json j = element_to_json(e);
    CHECK(j["n"] == 2);
    REQUIRE(j["terms"].size() == 1);
    CHECK(j["terms"][0]["coeff"] == "-3/2");
    CHECK(element_from_json(j) == e);

    AlgebraElement mixed =
        x_of(diag(3, {1, 3}, {2, 3})) +
        Rational(1, 7) * AlgebraElement::from_diagram(
                             PlanarDiagram::identity(3));
    CHECK(element_from_json(element_to_json(mixed)) == mixed);

    Json zero = element_to_json(AlgebraElement(4));
    CHECK(zero["terms"].empty());
    CHECK(element_from_json(zero) == AlgebraElement(4));

    // coefficients must be exact strings, not floats
    CHECK_THROWS(element_from_json(Json::parse(
        R"({"n":2,"terms":[{"coeff":1.5,"diagram":{"n":2,"top":[],"bottom":[]}}]})")));
}

TEST_CASE("matrix json") {
    Json j = irrep_matrix_to_json(2, 1, rho(2, 1, diag(2, {2}, {1})));
    CHECK(j["n"] == 2);
    CHECK(j["k"] == 1);
    CHECK(j["rows"] == 2);
    CHECK(j["cols"] == 2);
    CHECK(j["entries"] == Json::array({"0", "1", "0", "0"}));
}

TEST_CASE("character table output") {
    CharacterTable t = character_table(2);
    CHECK(character_table_csv(t) == "0,1,2\n1,1,1\n0,1,2\n0,0,1\n");

    Json j = character_table_json(t);
    CHECK(j["n"] == 2);
    CHECK(j["values"][1] == Json::array({0, 1, 2}));
}

TEST_CASE("branching graph output") {
    BratteliGraph g = bratteli(2);
    std::string dot = bratteli_dot(g);
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("\"2_1\"") != std::string::npos);
    CHECK(dot.find("\"2_1\" -> \"1_0\"") != std::string::npos);
    CHECK(dot.find("\"2_1\" -> \"1_1\"") != std::string::npos);

    Json j = bratteli_json(g);
    CHECK(j["rows"] == 2);
    bool sawNode = false;
    for (const auto& node : j["nodes"])
        if (node["n"] == 2 && node["k"] == 1) {
            sawNode = true;
            CHECK(node["dim"] == 2);
        }
    CHECK(sawNode);
}

TEST_CASE("multiplicity output") {
    Json j = multiplicities_json(tensor_multiplicities(3, 1, 1));
    CHECK(j["n"] == 3);
    CHECK(j["m"] == Json::array({0, 1, 2, 0}));
}

TEST_CASE("vertex set parsing") {
    CHECK(set_from_string(5, "2,5") == mask_of({2, 5}));
    CHECK(set_from_string(5, " 1 , 3 ") == mask_of({1, 3}));
    CHECK(set_from_string(5, "") == 0);
    CHECK_THROWS(set_from_string(5, "6"));
    CHECK_THROWS(set_from_string(5, "1,1"));
    CHECK_THROWS(set_from_string(5, "1,,2"));
}
