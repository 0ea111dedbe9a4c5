#include "prook/verify.hpp"

#include "prook/algebra.hpp"
#include "prook/characters.hpp"
#include "prook/diagram.hpp"
#include "prook/matrix.hpp"
#include "prook/representation.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace prook {

bool VerifyReport::all_passed() const {
    for (const auto& c : checks)
        if (!c.passed)
            return false;
    return true;
}

long long VerifyReport::total_cases() const {
    long long total = 0;
    for (const auto& c : checks)
        total += c.cases;
    return total;
}

namespace {

using Rng = std::mt19937_64;

// mt19937_64 output is pinned by the standard, so avoiding the
// implementation-defined distributions keeps runs byte-identical everywhere.
std::uint64_t pick(Rng& rng, std::uint64_t bound) { return rng() % bound; }

PlanarDiagram random_diagram(Rng& rng, int n) {
    Mask bottom = static_cast<Mask>(rng()) & full_mask(n);
    std::vector<Mask> tops = k_subsets(n, subset_size(bottom));
    Mask top = tops[pick(rng, tops.size())];
    return PlanarDiagram::from_sets(n, top, bottom);
}

AlgebraElement random_element(Rng& rng, int n) {
    AlgebraElement a(n);
    int terms = 1 + static_cast<int>(pick(rng, 4));
    for (int i = 0; i < terms; ++i) {
        long long num = static_cast<long long>(pick(rng, 19)) - 9;
        if (num == 0)
            num = 1;
        long long den = 1 + static_cast<long long>(pick(rng, 4));
        a.add_term(random_diagram(rng, n), Rational(num, den));
    }
    return a;
}

class Checker {
public:
    explicit Checker(std::string name) {
        result_.name = std::move(name);
        result_.passed = true;
    }

    // Records one case; on the first failure stores the witness and flips
    // the check.  Returns ok so sweeps can stop early.
    template <typename WitnessFn>
    bool require(bool ok, WitnessFn&& witness) {
        ++result_.cases;
        if (!ok && result_.passed) {
            result_.passed = false;
            result_.witness = witness();
        }
        return ok;
    }

    bool failed() const { return !result_.passed; }
    CheckResult take() { return std::move(result_); }

private:
    CheckResult result_;
};

template <typename... Parts>
std::string describe(const Parts&... parts) {
    std::ostringstream os;
    (os << ... << parts);
    return os.str();
}

int highest_rank(const AlgebraElement& a) {
    int r = -1;
    for (const auto& [d, c] : a.terms())
        r = std::max(r, d.rank());
    return r;
}

// ---- monoid suite ----

CheckResult check_counting(int n_max) {
    Checker c("diagram-counting");
    for (int n = 0; n <= n_max && !c.failed(); ++n) {
        std::vector<PlanarDiagram> all = all_diagrams(n);
        c.require(static_cast<long long>(all.size()) == binomial(2 * n, n),
                  [&] { return describe("total count off at n=", n); });
        for (int k = 0; k <= n; ++k) {
            long long slice = 0;
            for (const auto& d : all)
                if (d.rank() == k)
                    ++slice;
            long long expected = binomial(n, k) * binomial(n, k);
            if (!c.require(slice == expected, [&] {
                    return describe("rank slice off at n=", n, " k=", k);
                }))
                break;
        }
        // enumeration must also be strictly increasing in canonical order
        for (std::size_t i = 0; i + 1 < all.size(); ++i) {
            if (!c.require(all[i] < all[i + 1], [&] {
                    return describe("enumeration out of order at n=", n);
                }))
                break;
        }
    }
    return c.take();
}

CheckResult check_associativity(int n_max, std::uint64_t seed) {
    Checker c("compose-associative");
    for (int n = 0; n <= std::min(3, n_max) && !c.failed(); ++n) {
        std::vector<PlanarDiagram> all = all_diagrams(n);
        for (const auto& a : all) {
            for (const auto& b : all) {
                PlanarDiagram ab = compose(a, b);
                for (const auto& d : all) {
                    if (!c.require(
                            compose(ab, d) == compose(a, compose(b, d)), [&] {
                                return describe("triple ", a, " ; ", b, " ; ",
                                                d);
                            }))
                        return c.take();
                }
            }
        }
    }
    Rng rng(seed);
    const int n = 8;
    for (int i = 0; i < 500 && !c.failed(); ++i) {
        PlanarDiagram a = random_diagram(rng, n);
        PlanarDiagram b = random_diagram(rng, n);
        PlanarDiagram d = random_diagram(rng, n);
        c.require(compose(compose(a, b), d) == compose(a, compose(b, d)),
                  [&] { return describe("triple ", a, " ; ", b, " ; ", d); });
    }
    return c.take();
}

CheckResult check_identity_zero(int n_max) {
    Checker c("identity-zero-laws");
    for (int n = 0; n <= n_max && !c.failed(); ++n) {
        PlanarDiagram id = PlanarDiagram::identity(n);
        PlanarDiagram zero = PlanarDiagram::edgeless(n);
        DiagramStream stream(n);
        while (auto d = stream.next()) {
            bool ok = compose(id, *d) == *d && compose(*d, id) == *d &&
                      compose(zero, *d) == zero && compose(*d, zero) == zero;
            if (!c.require(ok, [&] { return describe("diagram ", *d); }))
                break;
        }
    }
    return c.take();
}

bool oracle_agrees(const PlanarDiagram& a, const PlanarDiagram& b) {
    return to_matrix(compose(a, b)) == multiply(to_matrix(a), to_matrix(b));
}

CheckResult check_matrix_oracle(int n_max, std::uint64_t seed) {
    Checker c("matrix-oracle");
    for (int n = 0; n <= std::min(4, n_max) && !c.failed(); ++n) {
        std::vector<PlanarDiagram> all = all_diagrams(n);
        for (const auto& a : all) {
            for (const auto& b : all) {
                if (!c.require(oracle_agrees(a, b), [&] {
                        return describe("pair ", a, " ; ", b);
                    }))
                    return c.take();
            }
        }
    }
    Rng rng(seed + 1);
    for (int i = 0; i < 1000 && !c.failed(); ++i) {
        PlanarDiagram a = random_diagram(rng, 8);
        PlanarDiagram b = random_diagram(rng, 8);
        c.require(oracle_agrees(a, b),
                  [&] { return describe("pair ", a, " ; ", b); });
    }
    return c.take();
}

CheckResult check_rank_planarity(int n_max) {
    Checker c("rank-monotone-planar-closure");
    for (int n = 0; n <= std::min(4, n_max) && !c.failed(); ++n) {
        std::vector<PlanarDiagram> all = all_diagrams(n);
        for (const auto& a : all) {
            for (const auto& b : all) {
                PlanarDiagram ab = compose(a, b);
                bool rankOk = ab.rank() <= std::min(a.rank(), b.rank());
                auto back = from_matrix(multiply(to_matrix(a), to_matrix(b)));
                bool planarOk = back.has_value() && *back == ab;
                if (!c.require(rankOk && planarOk, [&] {
                        return describe("pair ", a, " ; ", b);
                    }))
                    return c.take();
            }
        }
    }
    return c.take();
}

CheckResult check_apply_functorial(int n_max, std::uint64_t seed) {
    Checker c("apply-functorial");
    for (int n = 0; n <= std::min(3, n_max) && !c.failed(); ++n) {
        std::vector<PlanarDiagram> all = all_diagrams(n);
        for (const auto& a : all) {
            for (const auto& b : all) {
                PlanarDiagram ab = compose(a, b);
                for (Mask s = 0; s <= full_mask(n); ++s) {
                    auto inner = apply(b, s);
                    std::optional<Mask> chained;
                    if (inner)
                        chained = apply(a, *inner);
                    if (!c.require(apply(ab, s) == chained, [&] {
                            return describe("pair ", a, " ; ", b, " set mask ",
                                            s);
                        }))
                        return c.take();
                }
            }
        }
    }
    Rng rng(seed + 2);
    const int n = std::min(8, std::max(4, n_max));
    for (int i = 0; i < 2000 && !c.failed(); ++i) {
        PlanarDiagram a = random_diagram(rng, n);
        PlanarDiagram b = random_diagram(rng, n);
        Mask s = static_cast<Mask>(rng()) & full_mask(n);
        auto inner = apply(b, s);
        std::optional<Mask> chained;
        if (inner)
            chained = apply(a, *inner);
        c.require(apply(compose(a, b), s) == chained, [&] {
            return describe("pair ", a, " ; ", b, " set mask ", s);
        });
    }
    return c.take();
}

CheckResult check_drop_absorption(int n_max) {
    Checker c("drop-absorption");
    for (int n = 1; n <= n_max && !c.failed(); ++n) {
        DiagramStream stream(n);
        while (auto d = stream.next()) {
            bool ok = true;
            for (int i = 1; i <= n && ok; ++i) {
                PlanarDiagram p = p_drop(n, i);
                // right multiplication forgets i exactly when i is
                // outside the bottom set; left, outside the top set
                ok = (compose(*d, p) == *d) == !contains(d->bottom(), i) &&
                     (compose(p, *d) == *d) == !contains(d->top(), i);
            }
            if (!c.require(ok, [&] { return describe("diagram ", *d); }))
                break;
        }
    }
    return c.take();
}

// ---- algebra suite ----

CheckResult check_ring_axioms(int n_max, std::uint64_t seed) {
    Checker c("ring-axioms");
    Rng rng(seed + 3);
    for (int n = 0; n <= std::min(5, n_max) && !c.failed(); ++n) {
        for (int i = 0; i < 500 && !c.failed(); ++i) {
            AlgebraElement a = random_element(rng, n);
            AlgebraElement b = random_element(rng, n);
            AlgebraElement d = random_element(rng, n);
            bool assoc = (a * b) * d == a * (b * d);
            bool distL = a * (b + d) == a * b + a * d;
            bool distR = (a + b) * d == a * d + b * d;
            c.require(assoc && distL && distR, [&] {
                return describe("random triple #", i, " at n=", n);
            });
        }
    }
    return c.take();
}

CheckResult check_unit_element(int n_max, std::uint64_t seed) {
    Checker c("unit-element");
    Rng rng(seed + 4);
    for (int n = 0; n <= n_max && !c.failed(); ++n) {
        AlgebraElement one =
            AlgebraElement::from_diagram(PlanarDiagram::identity(n));
        DiagramStream stream(n);
        while (auto d = stream.next()) {
            AlgebraElement a = AlgebraElement::from_diagram(*d);
            if (!c.require(one * a == a && a * one == a,
                           [&] { return describe("diagram ", *d); }))
                break;
        }
        for (int i = 0; i < 50 && !c.failed(); ++i) {
            AlgebraElement a = random_element(rng, n);
            c.require(one * a == a && a * one == a, [&] {
                return describe("random element #", i, " at n=", n);
            });
        }
    }
    return c.take();
}

CheckResult check_x_roundtrip(int n_max) {
    Checker c("x-roundtrip");
    for (int n = 0; n <= std::min(5, n_max) && !c.failed(); ++n) {
        DiagramStream stream(n);
        while (auto d = stream.next()) {
            AlgebraElement a = AlgebraElement::from_diagram(*d);
            if (!c.require(from_x_coords(n, to_x_coords(a)) == a,
                           [&] { return describe("diagram ", *d); }))
                break;
        }
    }
    return c.take();
}

CheckResult check_x_matrix_units(int n_max) {
    Checker c("x-matrix-units");
    for (int n = 0; n <= std::min(4, n_max) && !c.failed(); ++n) {
        std::vector<PlanarDiagram> all = all_diagrams(n);
        for (const auto& d1 : all) {
            for (const auto& d2 : all) {
                AlgebraElement product = x_of(d1) * x_of(d2);
                AlgebraElement expected(n);
                if (d1.bottom() == d2.top())
                    expected = x_unit(n, d1.top(), d2.bottom());
                if (!c.require(product == expected, [&] {
                        return describe("pair ", d1, " ; ", d2);
                    }))
                    return c.take();
            }
        }
    }
    return c.take();
}

CheckResult check_x_left_absorption(int n_max) {
    Checker c("x-left-absorption");
    for (int n = 0; n <= std::min(4, n_max) && !c.failed(); ++n) {
        std::vector<PlanarDiagram> all = all_diagrams(n);
        for (const auto& d : all) {
            AlgebraElement left = AlgebraElement::from_diagram(d);
            for (const auto& a : all) {
                AlgebraElement product = left * x_of(a);
                AlgebraElement expected(n);
                if ((a.top() & ~d.bottom()) == 0)
                    expected = x_of(compose(d, a));
                if (!c.require(product == expected, [&] {
                        return describe("pair ", d, " ; ", a);
                    }))
                    return c.take();
            }
        }
    }
    return c.take();
}

CheckResult check_rank_filtration(int n_max, std::uint64_t seed) {
    Checker c("rank-filtration");
    Rng rng(seed + 5);
    for (int n = 0; n <= std::min(5, n_max) && !c.failed(); ++n) {
        for (int i = 0; i < 200 && !c.failed(); ++i) {
            AlgebraElement a = random_element(rng, n);
            AlgebraElement b = random_element(rng, n);
            AlgebraElement ab = a * b;
            bool ok = ab.is_zero() ||
                      highest_rank(ab) <=
                          std::min(highest_rank(a), highest_rank(b));
            c.require(ok,
                      [&] { return describe("random pair #", i, " at n=", n); });
        }
    }
    return c.take();
}

// ---- repr suite ----

CheckResult check_module_homomorphism(int n_max, std::uint64_t seed) {
    Checker c("module-homomorphism");
    for (int n = 0; n <= std::min(3, n_max) && !c.failed(); ++n) {
        std::vector<PlanarDiagram> all = all_diagrams(n);
        for (int k = 0; k <= n; ++k) {
            for (const auto& a : all) {
                RationalMatrix ra = rho(n, k, a);
                for (const auto& b : all) {
                    if (!c.require(rho(n, k, compose(a, b)) ==
                                       ra * rho(n, k, b),
                                   [&] {
                                       return describe("pair ", a, " ; ", b,
                                                       " k=", k);
                                   }))
                        return c.take();
                }
            }
        }
    }
    Rng rng(seed + 6);
    for (int n = 4; n <= std::min(6, n_max) && !c.failed(); ++n) {
        for (int i = 0; i < 100 && !c.failed(); ++i) {
            PlanarDiagram a = random_diagram(rng, n);
            PlanarDiagram b = random_diagram(rng, n);
            for (int k = 0; k <= n && !c.failed(); ++k) {
                c.require(rho(n, k, compose(a, b)) ==
                              rho(n, k, a) * rho(n, k, b),
                          [&] {
                              return describe("pair ", a, " ; ", b, " k=", k);
                          });
            }
        }
    }
    return c.take();
}

CheckResult check_idempotent_projections(int n_max) {
    Checker c("idempotent-projections");
    for (int n = 0; n <= n_max && !c.failed(); ++n) {
        for (int k = 0; k <= n && !c.failed(); ++k) {
            for (int l = 0; l < k; ++l) {
                if (!c.require(rho(n, k, pi(n, l)).is_zero(), [&] {
                        return describe("n=", n, " k=", k, " l=", l);
                    }))
                    return c.take();
            }
            RationalMatrix m = rho(n, k, pi(n, k));
            bool idem = m * m == m && matrix_rank(m) == 1;
            c.require(idem, [&] { return describe("n=", n, " k=", k); });
        }
    }
    return c.take();
}

CheckResult check_irreducible_span(int n_max) {
    Checker c("irreducible-span");
    for (int n = 0; n <= std::min(5, n_max) && !c.failed(); ++n) {
        for (int k = 0; k <= n && !c.failed(); ++k) {
            long long dim = binomial(n, k);
            c.require(irreducibility_dimension(n, k) == dim * dim,
                      [&] { return describe("n=", n, " k=", k); });
        }
    }
    return c.take();
}

CheckResult check_restriction(int n_max) {
    Checker c("restriction-blocks");
    for (int n = 1; n <= n_max && !c.failed(); ++n) {
        for (int k = 0; k <= n && !c.failed(); ++k) {
            RestrictionBlocks blocks = restriction_blocks(n, k);
            bool sizes =
                blocks.first_block + blocks.second_block == binomial(n, k);
            c.require(blocks.verified && sizes, [&] {
                return describe("n=", n, " k=", k, " witness ",
                                blocks.witness);
            });
        }
    }
    return c.take();
}

CheckResult check_regular_intertwiner(int n_max) {
    Checker c("regular-intertwiner");
    for (int n = 0; n <= std::min(4, n_max) && !c.failed(); ++n) {
        std::vector<PlanarDiagram> all = all_diagrams(n);
        for (int k = 0; k <= n && !c.failed(); ++k) {
            SubsetIndex idx(n, k);
            for (Mask t : idx.masks()) {
                // left action on the column {x_{S,t}} matches the module
                for (const auto& d : all) {
                    RationalMatrix m = rho(n, k, d);
                    for (int s = 0; s < idx.size(); ++s) {
                        AlgebraElement lhs =
                            AlgebraElement::from_diagram(d) *
                            x_unit(n, idx.unrank(s), t);
                        AlgebraElement rhs(n);
                        for (int r = 0; r < idx.size(); ++r) {
                            if (m.at(r, s) != 0)
                                rhs += m.at(r, s) * x_unit(n, idx.unrank(r), t);
                        }
                        if (!c.require(lhs == rhs, [&] {
                                return describe("d=", d, " k=", k, " S#", s);
                            }))
                            return c.take();
                    }
                }
            }
        }
    }
    return c.take();
}

CheckResult check_bratteli_pascal(int rows) {
    Checker c("bratteli-pascal");
    BratteliGraph g = bratteli(rows);
    for (int r = 0; r <= rows && !c.failed(); ++r) {
        long long squares = 0;
        for (int k = 0; k <= r && !c.failed(); ++k) {
            long long label = g.labels[static_cast<std::size_t>(r)]
                                      [static_cast<std::size_t>(k)];
            squares += label * label;
            bool pascal =
                label == binomial(r, k) &&
                (k == 0 || k == r ||
                 label == g.labels[static_cast<std::size_t>(r) - 1]
                                  [static_cast<std::size_t>(k) - 1] +
                               g.labels[static_cast<std::size_t>(r) - 1]
                                       [static_cast<std::size_t>(k)]);
            c.require(pascal, [&] { return describe("node ", r, "_", k); });
        }
        if (!c.failed())
            c.require(squares == diagram_count(r),
                      [&] { return describe("row ", r); });
    }
    for (const auto& e : g.edges) {
        if (!c.require(e.parent_k == e.k - 1 || e.parent_k == e.k,
                       [&] { return describe("edge ", e.n, "_", e.k); }))
            break;
    }
    return c.take();
}

// ---- wedderburn suite ----

CheckResult check_dimension_count(int n_max) {
    Checker c("dimension-count");
    for (int n = 0; n <= std::max(12, n_max) && !c.failed(); ++n) {
        long long squares = 0;
        for (int k = 0; k <= n; ++k)
            squares += binomial(n, k) * binomial(n, k);
        c.require(squares == binomial(2 * n, n),
                  [&] { return describe("n=", n); });
    }
    return c.take();
}

CheckResult check_block_roundtrip(int n_max, std::uint64_t seed) {
    Checker c("block-roundtrip");
    for (int n = 0; n <= std::min(4, n_max) && !c.failed(); ++n) {
        DiagramStream stream(n);
        while (auto d = stream.next()) {
            AlgebraElement a = AlgebraElement::from_diagram(*d);
            if (!c.require(wedderburn_inv(n, wedderburn_map(a)) == a,
                           [&] { return describe("diagram ", *d); }))
                break;
        }
    }
    Rng rng(seed + 7);
    for (int n = 0; n <= std::min(5, n_max) && !c.failed(); ++n) {
        for (int i = 0; i < 50 && !c.failed(); ++i) {
            AlgebraElement a = random_element(rng, n);
            c.require(wedderburn_inv(n, wedderburn_map(a)) == a, [&] {
                return describe("random element #", i, " at n=", n);
            });
        }
    }
    return c.take();
}

bool blocks_equal_product(const AlgebraElement& a, const AlgebraElement& b) {
    std::vector<RationalMatrix> lhs = wedderburn_map(a * b);
    std::vector<RationalMatrix> ra = wedderburn_map(a);
    std::vector<RationalMatrix> rb = wedderburn_map(b);
    for (std::size_t k = 0; k < lhs.size(); ++k)
        if (lhs[k] != ra[k] * rb[k])
            return false;
    return true;
}

CheckResult check_block_multiplicative(int n_max, std::uint64_t seed) {
    Checker c("block-multiplicative");
    for (int n = 0; n <= std::min(3, n_max) && !c.failed(); ++n) {
        std::vector<PlanarDiagram> all = all_diagrams(n);
        for (const auto& d1 : all) {
            AlgebraElement a = AlgebraElement::from_diagram(d1);
            for (const auto& d2 : all) {
                if (!c.require(blocks_equal_product(
                                   a, AlgebraElement::from_diagram(d2)),
                               [&] {
                                   return describe("pair ", d1, " ; ", d2);
                               }))
                    return c.take();
            }
        }
    }
    Rng rng(seed + 8);
    const int n = std::min(5, n_max);
    for (int i = 0; n >= 0 && i < 200 && !c.failed(); ++i) {
        AlgebraElement a = random_element(rng, n);
        AlgebraElement b = random_element(rng, n);
        c.require(blocks_equal_product(a, b),
                  [&] { return describe("random pair #", i, " at n=", n); });
    }
    return c.take();
}

CheckResult check_block_module_action(int n_max, std::uint64_t seed) {
    Checker c("block-equals-module-action");
    Rng rng(seed + 9);
    for (int n = 0; n <= std::min(4, n_max) && !c.failed(); ++n) {
        for (int i = 0; i < 50 && !c.failed(); ++i) {
            AlgebraElement a = random_element(rng, n);
            std::vector<RationalMatrix> blocks = wedderburn_map(a);
            for (int k = 0; k <= n && !c.failed(); ++k) {
                c.require(blocks[static_cast<std::size_t>(k)] ==
                              rho_algebra(n, k, a),
                          [&] {
                              return describe("random element #", i, " n=", n,
                                              " k=", k);
                          });
            }
        }
    }
    return c.take();
}

// ---- character suite ----

CheckResult check_trace_consistency(int n_max) {
    Checker c("trace-consistency");
    for (int n = 0; n <= std::min(5, n_max) && !c.failed(); ++n) {
        DiagramStream stream(n);
        while (auto d = stream.next()) {
            int l = vertical_edge_count(*d);
            bool ok = true;
            for (int k = 0; k <= n && ok; ++k) {
                long long value = chi(n, k, *d);
                ok = value == rho(n, k, *d).trace() &&
                     value == binomial(l, k) && value == chi(n, k, pi(n, l));
            }
            if (!c.require(ok, [&] { return describe("diagram ", *d); }))
                break;
        }
    }
    return c.take();
}

CheckResult check_regular_trace(int n_max) {
    Checker c("regular-trace");
    for (int n = 0; n <= std::min(5, n_max) && !c.failed(); ++n) {
        DiagramStream stream(n);
        while (auto d = stream.next()) {
            int l = vertical_edge_count(*d);
            long long counted = regular_trace(n, *d);
            long long viaChars = 0;
            for (int k = 0; k <= n; ++k)
                viaChars += binomial(n, k) * chi(n, k, *d);
            bool ok = counted == binomial(n + l, l) && counted == viaChars;
            if (!c.require(ok, [&] { return describe("diagram ", *d); }))
                break;
        }
    }
    return c.take();
}

CheckResult check_table_unitriangular(int n_fixed) {
    Checker c("table-unitriangular");
    CharacterTable t = character_table(n_fixed);
    for (int k = 0; k <= n_fixed && !c.failed(); ++k) {
        for (int l = 0; l <= n_fixed; ++l) {
            long long v = t.values[static_cast<std::size_t>(k)]
                                  [static_cast<std::size_t>(l)];
            // upper unitriangular with binomial entries forces det 1
            bool ok = v == binomial(l, k) && (l > k || v == (l == k ? 1 : 0));
            if (!c.require(ok,
                           [&] { return describe("entry k=", k, " l=", l); }))
                break;
        }
    }
    return c.take();
}

CheckResult check_x_character_indicator(int n_max) {
    Checker c("x-character-indicator");
    for (int n = 0; n <= std::min(5, n_max) && !c.failed(); ++n) {
        DiagramStream stream(n);
        while (auto d = stream.next()) {
            bool ok = true;
            for (int k = 0; k <= n && ok; ++k) {
                long long expected =
                    (d->rank() == k && vertical_edge_count(*d) == k) ? 1 : 0;
                long long value = chi_on_x(n, k, *d);
                ok = value == expected;
                if (ok && n <= 4)
                    ok = value == rho_algebra(n, k, x_of(*d)).trace();
            }
            if (!c.require(ok, [&] { return describe("diagram ", *d); }))
                break;
        }
    }
    return c.take();
}

CheckResult check_tensor_identity(int n_cap) {
    Checker c("tensor-identity");
    for (int n = 0; n <= n_cap && !c.failed(); ++n) {
        for (int i = 0; i <= n && !c.failed(); ++i) {
            for (int j = 0; j <= n && !c.failed(); ++j) {
                MultiplicityVector mv = tensor_multiplicities(n, i, j);
                bool ok = true;
                for (long long m : mv.m)
                    ok = ok && m >= 0;
                for (int l = 0; l <= n && ok; ++l) {
                    long long lhs = binomial(l, i) * binomial(l, j);
                    long long rhs = 0;
                    for (int k = 0; k <= n; ++k)
                        rhs += mv.m[static_cast<std::size_t>(k)] *
                               binomial(l, k);
                    ok = lhs == rhs;
                }
                c.require(ok,
                          [&] { return describe("n=", n, " i=", i, " j=", j); });
            }
        }
    }
    return c.take();
}

CheckResult check_center(int n_max) {
    Checker c("center-commutes");
    for (int n = 0; n <= std::min(4, n_max) && !c.failed(); ++n) {
        for (const AlgebraElement& z : center_basis(n)) {
            if (!c.require(is_central(z),
                           [&] { return describe("center element at n=", n); }))
                break;
        }
    }
    return c.take();
}

CheckResult check_center_independent(int n_max) {
    Checker c("center-independent");
    for (int n = 0; n <= n_max && !c.failed(); ++n) {
        std::vector<AlgebraElement> basis = center_basis(n);
        for (int l = 0; l <= n && !c.failed(); ++l) {
            // x-coordinates of z_l: exactly the rank-l diagonal units
            auto coords = to_x_coords(basis[static_cast<std::size_t>(l)]);
            bool ok = static_cast<long long>(coords.size()) ==
                      binomial(n, l);
            for (const auto& [d, coeff] : coords) {
                ok = ok && d.rank() == l && d.top() == d.bottom() &&
                     coeff == 1;
            }
            c.require(ok, [&] { return describe("n=", n, " l=", l); });
        }
    }
    return c.take();
}

CheckResult check_centralizer_dimension(int n_max) {
    Checker c("centralizer-dimension");
    for (int n = 0; n <= std::min(3, n_max) && !c.failed(); ++n) {
        c.require(centralizer_dimension(n) == n + 1,
                  [&] { return describe("n=", n); });
    }
    return c.take();
}

CheckResult check_decompose_inverse(int n_cap, std::uint64_t seed) {
    Checker c("decompose-inverse");
    Rng rng(seed + 10);
    for (int n = 0; n <= n_cap && !c.failed(); ++n) {
        for (int trial = 0; trial < 20 && !c.failed(); ++trial) {
            std::vector<long long> m(static_cast<std::size_t>(n) + 1);
            for (auto& v : m)
                v = static_cast<long long>(pick(rng, 5));
            std::vector<long long> f(static_cast<std::size_t>(n) + 1, 0);
            for (int l = 0; l <= n; ++l)
                for (int k = 0; k <= n; ++k)
                    f[static_cast<std::size_t>(l)] +=
                        m[static_cast<std::size_t>(k)] * binomial(l, k);
            c.require(decompose_character(n, f).m == m, [&] {
                return describe("random multiplicities at n=", n);
            });
        }
        // tensor values route: decompose the pointwise character product
        for (int i = 0; i <= n && !c.failed(); ++i) {
            for (int j = 0; j <= n && !c.failed(); ++j) {
                std::vector<long long> f(static_cast<std::size_t>(n) + 1);
                for (int l = 0; l <= n; ++l)
                    f[static_cast<std::size_t>(l)] =
                        binomial(l, i) * binomial(l, j);
                c.require(decompose_character(n, f).m ==
                              tensor_multiplicities(n, i, j).m,
                          [&] { return describe("n=", n, " i=", i, " j=", j); });
            }
        }
    }
    return c.take();
}

} // namespace

VerifyReport run_verify(const std::string& suite, int n_max,
                        std::uint64_t seed) {
    if (n_max < 0)
        throw std::invalid_argument("n_max must be nonnegative");
    VerifyReport report;
    auto add = [&report](CheckResult r) { report.checks.push_back(std::move(r)); };
    bool known = false;
    if (suite == "all" || suite == "monoid") {
        known = true;
        add(check_counting(n_max));
        add(check_associativity(n_max, seed));
        add(check_identity_zero(n_max));
        add(check_matrix_oracle(n_max, seed));
        add(check_rank_planarity(n_max));
        add(check_apply_functorial(n_max, seed));
        add(check_drop_absorption(n_max));
    }
    if (suite == "all" || suite == "algebra") {
        known = true;
        add(check_ring_axioms(n_max, seed));
        add(check_unit_element(n_max, seed));
        add(check_x_roundtrip(n_max));
        add(check_x_matrix_units(n_max));
        add(check_x_left_absorption(n_max));
        add(check_rank_filtration(n_max, seed));
    }
    if (suite == "all" || suite == "repr") {
        known = true;
        add(check_module_homomorphism(n_max, seed));
        add(check_idempotent_projections(n_max));
        add(check_irreducible_span(n_max));
        add(check_restriction(n_max));
        add(check_regular_intertwiner(n_max));
        add(check_bratteli_pascal(12));
    }
    if (suite == "all" || suite == "chars") {
        known = true;
        add(check_trace_consistency(n_max));
        add(check_regular_trace(n_max));
        add(check_table_unitriangular(10));
        add(check_x_character_indicator(n_max));
        add(check_tensor_identity(10));
        add(check_center(n_max));
        add(check_center_independent(n_max));
        add(check_centralizer_dimension(n_max));
        add(check_decompose_inverse(10, seed));
    }
    if (suite == "all" || suite == "wedderburn") {
        known = true;
        add(check_dimension_count(n_max));
        add(check_block_roundtrip(n_max, seed));
        add(check_block_multiplicative(n_max, seed));
        add(check_block_module_action(n_max, seed));
    }
    if (!known)
        throw std::invalid_argument("unknown suite: " + suite);
    return report;
}

} // namespace prook
