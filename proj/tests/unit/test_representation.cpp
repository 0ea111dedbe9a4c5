#include "prook/representation.hpp"

#include <doctest.h>

using namespace prook;

namespace {

PlanarDiagram diag(int n, std::initializer_list<int> bottom,
                   std::initializer_list<int> top) {
    return PlanarDiagram::from_sets(n, mask_of(top), mask_of(bottom));
}

} // namespace

TEST_CASE("subset indexing") {
    SubsetIndex idx(5, 2);
    CHECK(idx.size() == 10);
    for (int i = 0; i < idx.size(); ++i) {
        Mask m = idx.unrank(i);
        CHECK(subset_size(m) == 2);
        CHECK(idx.rank(m) == i);
    }
    // ascending as integers: {1,2} first, {4,5} last
    CHECK(idx.unrank(0) == mask_of({1, 2}));
    CHECK(idx.unrank(9) == mask_of({4, 5}));
}

TEST_CASE("matrix entries of the subset action") {
    // one edge 2 -> 1 acting on single vertices
    RationalMatrix m = rho(2, 1, diag(2, {2}, {1}));
    CHECK(m.rows() == 2);
    CHECK(m.cols() == 2);
    CHECK(m.at(0, 0) == 0);
    CHECK(m.at(0, 1) == 1);
    CHECK(m.at(1, 0) == 0);
    CHECK(m.at(1, 1) == 0);

    // k = 0 is the trivial action
    for (const auto& d : all_diagrams(3))
        CHECK(rho(3, 0, d) == RationalMatrix::identity(1));

    // identity acts as the identity matrix at every rank
    for (int k = 0; k <= 4; ++k)
        CHECK(rho(4, k, PlanarDiagram::identity(4)) ==
              RationalMatrix::identity(static_cast<int>(binomial(4, k))));

    // column support matches the subset action
    PlanarDiagram d = diag(4, {1, 2, 4}, {2, 3, 4});
    SubsetIndex idx(4, 2);
    RationalMatrix r = rho(4, 2, d);
    for (int j = 0; j < idx.size(); ++j) {
        auto image = apply(d, idx.unrank(j));
        for (int i = 0; i < idx.size(); ++i) {
            Rational expect = (image && idx.rank(*image) == i) ? 1 : 0;
            CHECK(r.at(i, j) == expect);
        }
    }
}

TEST_CASE("rho is multiplicative") {
    for (const auto& d1 : all_diagrams(2))
        for (const auto& d2 : all_diagrams(2))
            for (int k = 0; k <= 2; ++k)
                CHECK(rho(2, k, compose(d1, d2)) ==
                      rho(2, k, d1) * rho(2, k, d2));
}

TEST_CASE("rho extends linearly to the algebra") {
    PlanarDiagram d = diag(3, {1, 3}, {2, 3});
    AlgebraElement e = Rational(2) * x_of(d) -
                       Rational(1, 3) * AlgebraElement::from_diagram(
                                            PlanarDiagram::identity(3));
    for (int k = 0; k <= 3; ++k) {
        RationalMatrix expect =
            Rational(2) * rho_algebra(3, k, x_of(d)) -
            Rational(1, 3) *
                rho(3, k, PlanarDiagram::identity(3));
        CHECK(rho_algebra(3, k, e) == expect);
    }
    CHECK(rho_algebra(3, 1, AlgebraElement(3)).is_zero());
}

TEST_CASE("image of rho spans the full matrix algebra") {
    CHECK(irreducibility_dimension(2, 1) == 4);
    CHECK(irreducibility_dimension(3, 1) == 9);
    CHECK(irreducibility_dimension(3, 2) == 9);
    CHECK(irreducibility_dimension(4, 0) == 1);
    CHECK(irreducibility_dimension(4, 2) == 36);
}

TEST_CASE("restriction splits into two blocks") {
    RestrictionBlocks small = restriction_blocks(2, 1);
    CHECK(small.verified);
    CHECK(small.first_block == 1);
    CHECK(small.second_block == 1);

    RestrictionBlocks mid = restriction_blocks(5, 2);
    CHECK(mid.verified);
    CHECK(mid.first_block == 4);
    CHECK(mid.second_block == 6);
    CHECK(mid.permutation.size() == 10);

    // boundary ranks lose one block
    RestrictionBlocks top = restriction_blocks(3, 3);
    CHECK(top.verified);
    CHECK(top.first_block == 1);
    CHECK(top.second_block == 0);
    RestrictionBlocks bottom = restriction_blocks(3, 0);
    CHECK(bottom.verified);
    CHECK(bottom.first_block == 0);
    CHECK(bottom.second_block == 1);
}

TEST_CASE("branching graph is Pascal's triangle") {
    BratteliGraph g = bratteli(6);
    REQUIRE(g.labels.size() == 7);
    CHECK(g.labels[4] == std::vector<long long>{1, 4, 6, 4, 1});
    CHECK(g.labels[0] == std::vector<long long>{1});

    int found = 0;
    for (const auto& e : g.edges) {
        if (e.n == 5 && e.k == 2) {
            ++found;
            CHECK((e.parent_k == 1 || e.parent_k == 2));
        }
        CHECK((e.parent_k == e.k - 1 || e.parent_k == e.k));
    }
    CHECK(found == 2);
}

TEST_CASE("canonical diagram numbering") {
    auto all = all_diagrams(3);
    for (std::size_t i = 0; i < all.size(); ++i)
        CHECK(diagram_index(all[i]) == static_cast<std::int64_t>(i));

    auto perm = regular_action(3, PlanarDiagram::identity(3));
    for (std::size_t i = 0; i < perm.size(); ++i)
        CHECK(perm[i] == static_cast<std::int64_t>(i));
}

TEST_CASE("block decomposition") {
    // identity maps to the identity in every block
    auto blocks = wedderburn_map(
        AlgebraElement::from_diagram(PlanarDiagram::identity(3)));
    REQUIRE(blocks.size() == 4);
    for (int k = 0; k <= 3; ++k)
        CHECK(blocks[static_cast<std::size_t>(k)] ==
              RationalMatrix::identity(static_cast<int>(binomial(3, k))));

    // an x unit maps to a single matrix unit in its own block
    Mask s = mask_of({1, 3});
    Mask t = mask_of({2, 3});
    auto unitBlocks = wedderburn_map(x_unit(3, s, t));
    SubsetIndex idx(3, 2);
    for (std::size_t k = 0; k < unitBlocks.size(); ++k) {
        if (k != 2) {
            CHECK(unitBlocks[k].is_zero());
            continue;
        }
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) {
                Rational expect =
                    (r == idx.rank(s) && c == idx.rank(t)) ? 1 : 0;
                CHECK(unitBlocks[k].at(r, c) == expect);
            }
    }

    // blocks agree with the subset modules and the map inverts
    for (const auto& d : all_diagrams(3)) {
        AlgebraElement e = AlgebraElement::from_diagram(d);
        auto b = wedderburn_map(e);
        for (int k = 0; k <= 3; ++k)
            CHECK(b[static_cast<std::size_t>(k)] == rho(3, k, d));
        CHECK(wedderburn_inv(3, b) == e);
    }

    // multiplication goes blockwise
    AlgebraElement p = AlgebraElement::from_diagram(diag(3, {1, 2}, {2, 3})) -
                       Rational(3) * AlgebraElement::from_diagram(
                                         PlanarDiagram::edgeless(3));
    AlgebraElement q = Rational(1, 2) * AlgebraElement::from_diagram(
                                            diag(3, {2, 3}, {1, 2}));
    auto bp = wedderburn_map(p);
    auto bq = wedderburn_map(q);
    auto bpq = wedderburn_map(p * q);
    for (std::size_t k = 0; k < bpq.size(); ++k)
        CHECK(bpq[k] == bp[k] * bq[k]);
}
