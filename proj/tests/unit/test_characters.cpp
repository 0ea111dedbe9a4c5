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

TEST_CASE("character values count fixed subsets") {
    CHECK(chi(5, 2, pi(5, 4)) == 6);
    CHECK(chi(5, 2, PlanarDiagram::identity(5)) == 10);
    CHECK(chi(5, 2, PlanarDiagram::edgeless(5)) == 0);
    CHECK(chi(5, 0, PlanarDiagram::edgeless(5)) == 1);

    // a shifted edge contributes nothing
    CHECK(chi(2, 1, diag(2, {2}, {1})) == 0);

    // character equals the trace of the action, and depends only on
    // the vertical edge count
    for (const auto& d : all_diagrams(3)) {
        int l = vertical_edge_count(d);
        for (int k = 0; k <= 3; ++k) {
            long long value = chi(3, k, d);
            CHECK(value == rho(3, k, d).trace());
            CHECK(value == binomial(l, k));
            CHECK(value == chi(3, k, pi(3, l)));
        }
    }
}

TEST_CASE("character table is unitriangular") {
    CharacterTable t = character_table(2);
    REQUIRE(t.values.size() == 3);
    CHECK(t.values[0] == std::vector<long long>{1, 1, 1});
    CHECK(t.values[1] == std::vector<long long>{0, 1, 2});
    CHECK(t.values[2] == std::vector<long long>{0, 0, 1});

    CharacterTable big = character_table(9);
    for (int k = 0; k <= 9; ++k) {
        CHECK(big.values[k][k] == 1);
        for (int l = 0; l <= 9; ++l)
            CHECK(big.values[k][l] == binomial(l, k));
    }
}

TEST_CASE("trace of the regular representation") {
    CHECK(regular_trace(2, pi(2, 1)) == 3);
    for (int n = 1; n <= 4; ++n) {
        CHECK(regular_trace(n, PlanarDiagram::identity(n)) ==
              diagram_count(n));
        CHECK(regular_trace(n, PlanarDiagram::edgeless(n)) == 1);
    }

    // decomposes over the irreducible characters with binomial weights
    for (const auto& d : all_diagrams(3)) {
        long long total = 0;
        for (int k = 0; k <= 3; ++k)
            total += binomial(3, k) * chi(3, k, d);
        CHECK(regular_trace(3, d) == total);
        int l = vertical_edge_count(d);
        CHECK(regular_trace(3, d) == binomial(3 + l, l));
    }
}

TEST_CASE("characters on the x basis detect vertical stacks") {
    CHECK(chi_on_x(3, 2, pi(3, 2)) == 1);
    CHECK(chi_on_x(3, 2, pi(3, 3)) == 0);
    CHECK(chi_on_x(3, 0, PlanarDiagram::edgeless(3)) == 1);
    CHECK(chi_on_x(3, 1, diag(3, {2}, {3})) == 0);

    for (const auto& d : all_diagrams(3))
        for (int k = 0; k <= 3; ++k) {
            bool allVertical = d.top() == d.bottom() && d.rank() == k;
            CHECK(chi_on_x(3, k, d) == (allVertical ? 1 : 0));
            CHECK(chi_on_x(3, k, d) ==
                  rho_algebra(3, k, x_of(d)).trace());
        }
}

TEST_CASE("center of the algebra") {
    auto basis = center_basis(3);
    REQUIRE(basis.size() == 4);
    for (const auto& z : basis)
        CHECK(is_central(z));

    // z_l collects the diagonal x units of rank l
    auto coords = to_x_coords(center_element(3, 2));
    CHECK(coords.size() == 3);
    for (const auto& [d, c] : coords) {
        CHECK(d.top() == d.bottom());
        CHECK(d.rank() == 2);
        CHECK(c == 1);
    }

    // a single shifted edge is not central
    CHECK_FALSE(is_central(
        AlgebraElement::from_diagram(diag(2, {1}, {2}))));

    CHECK(centralizer_dimension(2) == 3);
    CHECK(centralizer_dimension(3) == 4);
}

TEST_CASE("tensor product multiplicities") {
    MultiplicityVector mv = tensor_multiplicities(3, 1, 1);
    CHECK(mv.m == std::vector<long long>{0, 1, 2, 0});

    CHECK(tensor_multiplicities(2, 2, 2).m ==
          std::vector<long long>{0, 0, 1});

    // tensoring with the trivial module changes nothing
    for (int n = 1; n <= 4; ++n)
        for (int j = 0; j <= n; ++j) {
            auto e = tensor_multiplicities(n, 0, j);
            for (int k = 0; k <= n; ++k)
                CHECK(e.m[static_cast<std::size_t>(k)] == (k == j ? 1 : 0));
        }

    // dimensions add up
    for (int n = 1; n <= 5; ++n)
        for (int i = 0; i <= n; ++i)
            for (int j = 0; j <= n; ++j) {
                auto t = tensor_multiplicities(n, i, j);
                long long total = 0;
                for (int k = 0; k <= n; ++k)
                    total += t.m[static_cast<std::size_t>(k)] * binomial(n, k);
                CHECK(total == binomial(n, i) * binomial(n, j));
            }
}

TEST_CASE("decomposing a character into irreducibles") {
    // a bare binomial row is a single irreducible
    for (int k = 0; k <= 4; ++k) {
        std::vector<long long> f;
        for (int l = 0; l <= 4; ++l)
            f.push_back(binomial(l, k));
        auto m = decompose_character(4, f);
        for (int j = 0; j <= 4; ++j)
            CHECK(m.m[static_cast<std::size_t>(j)] == (j == k ? 1 : 0));
    }

    // the regular character carries each module with its dimension
    std::vector<long long> reg;
    for (int l = 0; l <= 4; ++l)
        reg.push_back(binomial(4 + l, l));
    auto rm = decompose_character(4, reg);
    for (int k = 0; k <= 4; ++k)
        CHECK(rm.m[static_cast<std::size_t>(k)] == binomial(4, k));

    // pointwise products of characters match the tensor rule
    for (int i = 0; i <= 3; ++i)
        for (int j = 0; j <= 3; ++j) {
            std::vector<long long> f;
            for (int l = 0; l <= 3; ++l)
                f.push_back(binomial(l, i) * binomial(l, j));
            auto viaTable = decompose_character(3, f);
            auto closed = tensor_multiplicities(3, i, j);
            CHECK(viaTable.m == closed.m);
        }
}
