// Acceptance gate: twelve exact end-to-end checks over the planar rook
// monoid and its algebra.  Prints one PASS/FAIL line per criterion and
// exits nonzero when any of them fails.  Every comparison is integer or
// rational equality; there are no tolerances anywhere.

#include "prook/algebra.hpp"
#include "prook/characters.hpp"
#include "prook/diagram.hpp"
#include "prook/representation.hpp"

#include <cstdint>
#include <iostream>
#include <random>
#include <string>
#include <vector>

using namespace prook;

namespace {

constexpr std::uint64_t kSeed = 1729;

std::mt19937_64 seeded(std::uint64_t offset) {
    return std::mt19937_64(kSeed + offset);
}

PlanarDiagram random_diagram(std::mt19937_64& rng, int n) {
    Mask bottom = static_cast<Mask>(rng() % (Mask{1} << n));
    auto tops = k_subsets(n, subset_size(bottom));
    Mask top = tops[rng() % tops.size()];
    return PlanarDiagram::from_sets(n, top, bottom);
}

// 1. |P_n| = C(2n,n), refined by rank into C(n,k)^2 classes.
bool check_counting() {
    for (int n = 0; n <= 8; ++n) {
        auto all = all_diagrams(n);
        std::vector<long long> byRank(static_cast<std::size_t>(n) + 1, 0);
        for (const auto& d : all)
            ++byRank[static_cast<std::size_t>(d.rank())];
        long long total = 0;
        for (int k = 0; k <= n; ++k) {
            long long c = binomial(n, k);
            if (byRank[static_cast<std::size_t>(k)] != c * c)
                return false;
            total += c * c;
        }
        if (static_cast<long long>(all.size()) != total)
            return false;
        if (total != binomial(2 * n, n) || total != diagram_count(n))
            return false;
    }
    return diagram_count(8) == 12870;
}

// 2. Composition agrees with 0/1 rook matrix multiplication.
bool check_matrix_oracle() {
    for (int n = 0; n <= 4; ++n) {
        auto all = all_diagrams(n);
        for (const auto& d1 : all)
            for (const auto& d2 : all) {
                auto product = from_matrix(multiply(to_matrix(d1), to_matrix(d2)));
                if (!product || *product != compose(d1, d2))
                    return false;
            }
    }
    auto rng = seeded(2);
    for (int trial = 0; trial < 1000; ++trial) {
        PlanarDiagram d1 = random_diagram(rng, 8);
        PlanarDiagram d2 = random_diagram(rng, 8);
        auto product = from_matrix(multiply(to_matrix(d1), to_matrix(d2)));
        if (!product || *product != compose(d1, d2))
            return false;
    }
    return true;
}

// 3. Each subset module is irreducible: the acting matrices span the full
//    C(n,k)^2-dimensional matrix space, and the rank-l idempotent kills
//    every module of higher rank.
bool check_irreducibility() {
    for (int n = 0; n <= 5; ++n)
        for (int k = 0; k <= n; ++k) {
            long long dim = binomial(n, k);
            if (irreducibility_dimension(n, k) != dim * dim)
                return false;
        }
    for (int n = 1; n <= 6; ++n)
        for (int l = 0; l <= n; ++l)
            for (int k = l + 1; k <= n; ++k)
                if (!rho(n, k, pi(n, l)).is_zero())
                    return false;
    return true;
}

// 4. Restricting along the through-edge embedding splits each module into
//    the two Pascal predecessors, and the branching graph rows carry the
//    binomial dimensions.
bool check_restriction() {
    for (int n = 1; n <= 6; ++n)
        for (int k = 0; k <= n; ++k) {
            RestrictionBlocks b = restriction_blocks(n, k);
            if (!b.verified)
                return false;
            long long first = (k >= 1) ? binomial(n - 1, k - 1) : 0;
            long long second = (k <= n - 1) ? binomial(n - 1, k) : 0;
            if (b.first_block != first || b.second_block != second)
                return false;
        }
    BratteliGraph g = bratteli(12);
    for (int r = 0; r <= 12; ++r)
        for (int k = 0; k <= r; ++k)
            if (g.labels[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] !=
                binomial(r, k))
                return false;
    return true;
}

// 5. The x elements absorb diagrams by domain containment and multiply
//    like matrix units, exhaustively over small sizes.
bool check_x_relations() {
    for (int n = 0; n <= 4; ++n) {
        auto all = all_diagrams(n);
        for (const auto& d : all) {
            AlgebraElement left = AlgebraElement::from_diagram(d);
            for (const auto& a : all) {
                AlgebraElement product = left * x_of(a);
                if ((a.top() & ~d.bottom()) == 0) {
                    if (product != x_of(compose(d, a)))
                        return false;
                } else if (!product.is_zero()) {
                    return false;
                }
            }
        }
        for (const auto& p : all)
            for (const auto& q : all) {
                AlgebraElement product =
                    x_unit(n, p.top(), p.bottom()) * x_unit(n, q.top(), q.bottom());
                if (p.bottom() == q.top()) {
                    if (product != x_unit(n, p.top(), q.bottom()))
                        return false;
                } else if (!product.is_zero()) {
                    return false;
                }
            }
    }
    return true;
}

// 6. The blockwise map realizes the full matrix algebra decomposition:
//    dimensions match, and the map is bijective and multiplicative.
bool check_wedderburn() {
    for (int n = 0; n <= 12; ++n) {
        long long total = 0;
        for (int k = 0; k <= n; ++k)
            total += binomial(n, k) * binomial(n, k);
        if (total != binomial(2 * n, n))
            return false;
    }
    for (int n = 0; n <= 3; ++n) {
        auto all = all_diagrams(n);
        for (const auto& d : all) {
            AlgebraElement e = AlgebraElement::from_diagram(d);
            if (wedderburn_inv(n, wedderburn_map(e)) != e)
                return false;
        }
        for (const auto& d1 : all)
            for (const auto& d2 : all) {
                auto b1 = wedderburn_map(AlgebraElement::from_diagram(d1));
                auto b2 = wedderburn_map(AlgebraElement::from_diagram(d2));
                auto b12 = wedderburn_map(
                    AlgebraElement::from_diagram(compose(d1, d2)));
                for (std::size_t k = 0; k < b12.size(); ++k)
                    if (b12[k] != b1[k] * b2[k])
                        return false;
            }
    }
    auto rng = seeded(6);
    for (int trial = 0; trial < 2000; ++trial) {
        AlgebraElement e1 =
            AlgebraElement::from_diagram(random_diagram(rng, 5));
        AlgebraElement e2 =
            AlgebraElement::from_diagram(random_diagram(rng, 5));
        auto b1 = wedderburn_map(e1);
        auto b2 = wedderburn_map(e2);
        auto b12 = wedderburn_map(e1 * e2);
        for (std::size_t k = 0; k < b12.size(); ++k)
            if (b12[k] != b1[k] * b2[k])
                return false;
        if (wedderburn_inv(5, b12) != e1 * e2)
            return false;
    }
    return true;
}

// 7. Characters: fixed-subset count = trace of the action = C(l,k), and
//    the table at n = 10 is the top of Pascal's triangle.
bool check_characters() {
    for (int n = 0; n <= 5; ++n)
        for (const auto& d : all_diagrams(n)) {
            int l = vertical_edge_count(d);
            for (int k = 0; k <= n; ++k) {
                long long value = chi(n, k, d);
                if (value != binomial(l, k))
                    return false;
                if (rho(n, k, d).trace() != value)
                    return false;
            }
        }
    CharacterTable t = character_table(10);
    for (int k = 0; k <= 10; ++k)
        for (int l = 0; l <= 10; ++l) {
            long long expect = binomial(l, k);
            if (t.values[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)] !=
                expect)
                return false;
            if (l < k && expect != 0)
                return false;
        }
    return true;
}

// 8. The trace of left multiplication equals C(n+l,l) and decomposes over
//    the irreducible characters with binomial multiplicities.
bool check_regular_trace() {
    for (int n = 0; n <= 5; ++n)
        for (const auto& d : all_diagrams(n)) {
            int l = vertical_edge_count(d);
            long long psi = regular_trace(n, d);
            if (psi != binomial(n + l, l))
                return false;
            long long total = 0;
            for (int k = 0; k <= n; ++k)
                total += binomial(n, k) * chi(n, k, d);
            if (psi != total)
                return false;
        }
    return true;
}

// 9. On the x basis the character is an indicator: 1 exactly on diagrams
//    made of k vertical edges and nothing else.
bool check_x_characters() {
    for (int n = 0; n <= 5; ++n)
        for (const auto& d : all_diagrams(n))
            for (int k = 0; k <= n; ++k) {
                bool stack = d.top() == d.bottom() && d.rank() == k &&
                             vertical_edge_count(d) == k;
                if (chi_on_x(n, k, d) != (stack ? 1 : 0))
                    return false;
            }
    return true;
}

// 10. The rank sums z_l are central and exhaust the center.
bool check_center() {
    for (int n = 0; n <= 4; ++n)
        for (int l = 0; l <= n; ++l)
            if (!is_central(center_element(n, l)))
                return false;
    for (int n = 0; n <= 3; ++n)
        if (centralizer_dimension(n) != n + 1)
            return false;
    return true;
}

// 11. Tensor product multiplicities satisfy the pointwise character
//     identity, and the basic instance decomposes as expected.
bool check_tensor() {
    for (int n = 0; n <= 10; ++n)
        for (int i = 0; i <= n; ++i)
            for (int j = 0; j <= n; ++j) {
                MultiplicityVector t = tensor_multiplicities(n, i, j);
                for (int l = 0; l <= n; ++l) {
                    long long lhs = 0;
                    for (int k = 0; k <= n; ++k)
                        lhs += t.m[static_cast<std::size_t>(k)] * binomial(l, k);
                    if (lhs != binomial(l, i) * binomial(l, j))
                        return false;
                }
            }
    std::vector<long long> f;
    for (int l = 0; l <= 3; ++l)
        f.push_back(binomial(l, 1) * binomial(l, 1));
    MultiplicityVector viaTable = decompose_character(3, f);
    if (viaTable.m != std::vector<long long>{0, 1, 2, 0})
        return false;
    return viaTable.m == tensor_multiplicities(3, 1, 1).m;
}

// 12. Changing to the x basis and back is the identity, and the transition
//     matrix in the rank-increasing diagram order is unitriangular with
//     entries in {-1, 0, 1}.
bool check_basis_change() {
    for (int n = 0; n <= 5; ++n)
        for (const auto& d : all_diagrams(n)) {
            AlgebraElement e = AlgebraElement::from_diagram(d);
            if (from_x_coords(n, to_x_coords(e)) != e)
                return false;
            auto coords = to_x_coords(x_of(d));
            if (coords.size() != 1 || coords.begin()->first != d ||
                coords.begin()->second != 1)
                return false;
        }
    for (int n = 0; n <= 4; ++n) {
        auto all = all_diagrams(n);
        std::size_t size = all.size();
        std::vector<std::vector<int>> t(size, std::vector<int>(size, 0));
        for (std::size_t j = 0; j < size; ++j) {
            AlgebraElement xj = x_of(all[j]);
            for (const auto& [sub, c] : xj.terms()) {
                Rational expectSign =
                    ((all[j].rank() - sub.rank()) % 2) ? -1 : 1;
                if (c != expectSign)
                    return false;
                t[static_cast<std::size_t>(diagram_index(sub))][j] =
                    (c == 1) ? 1 : -1;
            }
        }
        for (std::size_t j = 0; j < size; ++j) {
            if (t[j][j] != 1)
                return false;
            for (std::size_t i = j + 1; i < size; ++i)
                if (t[i][j] != 0)
                    return false;
        }
    }
    return true;
}

struct Criterion {
    const char* label;
    bool (*run)();
};

} // namespace

int main() {
    const Criterion criteria[] = {
        {"counting: |P_n| = C(2n,n) with C(n,k)^2 rank classes, n <= 8",
         check_counting},
        {"matrix oracle: compose = rook matrix product, n <= 4 full, n = 8 random",
         check_matrix_oracle},
        {"irreducibility: full matrix span n <= 5, idempotent annihilation n <= 6",
         check_irreducibility},
        {"restriction: two-block split n <= 6, Pascal rows to 12",
         check_restriction},
        {"x relations: absorption and matrix units, exhaustive n <= 4",
         check_x_relations},
        {"wedderburn: dimension count, bijective multiplicative blocks",
         check_wedderburn},
        {"characters: fixed points = trace = C(l,k) n <= 5, Pascal table n = 10",
         check_characters},
        {"regular trace: C(n+l,l) and its character decomposition, n <= 5",
         check_regular_trace},
        {"x characters: vertical stack indicator, n <= 5",
         check_x_characters},
        {"center: z_l central n <= 4, centralizer dimension n+1 for n <= 3",
         check_center},
        {"tensor: pointwise character identity n <= 10, V1 (x) V1 = V1 + 2 V2",
         check_tensor},
        {"basis change: x round trip n <= 5, unitriangular +-1 transition",
         check_basis_change},
    };

    int failures = 0;
    int index = 0;
    for (const auto& c : criteria) {
        ++index;
        bool ok = false;
        try {
            ok = c.run();
        } catch (const std::exception& e) {
            std::cout << "FAIL " << index << ": " << c.label
                      << " (exception: " << e.what() << ")\n";
            ++failures;
            continue;
        }
        std::cout << (ok ? "PASS " : "FAIL ") << index << ": " << c.label
                  << "\n";
        if (!ok)
            ++failures;
    }
    std::cout << (12 - failures) << "/12 criteria passed\n";
    return failures == 0 ? 0 : 1;
}
