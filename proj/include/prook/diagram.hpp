#pragma once

#include "prook/subsets.hpp"

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

namespace prook {

// A planar rook diagram on two rows of n vertices: a non-crossing partial
// matching joining some bottom vertices to some top vertices.  Because
// non-crossing forces the i-th smallest matched bottom vertex onto the i-th
// smallest matched top vertex, the diagram is determined by the pair of
// incident vertex sets, which is all we store.
//
// Read as a partial map, the diagram sends its bottom set onto its top set
// preserving order.
class PlanarDiagram {
public:
    PlanarDiagram() = default; // empty diagram on 0 vertices

    // Validates 0 <= n <= kMaxSize, both sets inside {1..n}, equal sizes.
    static PlanarDiagram from_sets(int n, Mask top, Mask bottom);
    static PlanarDiagram identity(int n);
    static PlanarDiagram edgeless(int n);

    int size() const { return n_; }
    Mask top() const { return top_; }
    Mask bottom() const { return bottom_; }
    int rank() const { return subset_size(bottom_); }

    friend bool operator==(const PlanarDiagram&, const PlanarDiagram&) = default;

    // Canonical order: by size, then rank, then bottom mask, then top mask.
    // On fixed n this is exactly the enumeration order of all_diagrams.
    friend std::strong_ordering operator<=>(const PlanarDiagram& a,
                                            const PlanarDiagram& b) {
        if (auto c = a.n_ <=> b.n_; c != 0) return c;
        if (auto c = a.rank() <=> b.rank(); c != 0) return c;
        if (auto c = a.bottom_ <=> b.bottom_; c != 0) return c;
        return a.top_ <=> b.top_;
    }

private:
    PlanarDiagram(int n, Mask top, Mask bottom)
        : n_(n), top_(top), bottom_(bottom) {}

    int n_ = 0;
    Mask top_ = 0;
    Mask bottom_ = 0;
};

// Matched pairs (bottom vertex, top vertex) in ascending order.
std::vector<std::pair<int, int>> edges(const PlanarDiagram& d);

// Image of a single bottom vertex, nullopt if unmatched.
std::optional<int> image_of(const PlanarDiagram& d, int bottomVertex);

// Image of a vertex subset under the partial map: d maps S to its
// order-preserving image when S is contained in the bottom set, and
// the action is undefined (nullopt) otherwise.
std::optional<Mask> apply(const PlanarDiagram& d, Mask s);

// Product d1 * d2 ("first apply d2, then d1"): stack d2 under d1, keep the
// threads that run all the way through.  Surviving edges are indexed by
// top(d2) & bottom(d1).
PlanarDiagram compose(const PlanarDiagram& d1, const PlanarDiagram& d2);

// Edges joining vertex i to vertex i straight across.
int vertical_edge_count(const PlanarDiagram& d);

// The rank-l idempotent matching {1..l} identically.
PlanarDiagram pi(int n, int l);

// Identity with the edge at vertex i removed.
PlanarDiagram p_drop(int n, int i);

// Same diagram with an extra vertex n+1 joined straight across; the unital
// embedding of the smaller monoid.
PlanarDiagram embed(const PlanarDiagram& d);

// Every edge-subset diagram d' together with the number of deleted edges.
// 2^rank(d) entries.
std::vector<std::pair<PlanarDiagram, int>> subdiagrams(const PlanarDiagram& d);

// Streams all diagrams on n vertices in canonical order without
// materializing them.
class DiagramStream {
public:
    explicit DiagramStream(int n);
    std::optional<PlanarDiagram> next();

private:
    int n_;
    int k_;
    Mask bottom_;
    Mask top_;
    bool done_;
};

std::vector<PlanarDiagram> all_diagrams(int n);

// sum_k C(n,k)^2; counts all_diagrams(n) without enumerating.
long long diagram_count(int n);

// An n x n matrix of 0/1 entries with at most one 1 in every row and every
// column.  Entry (i,j) = 1 encodes an edge joining top vertex i to bottom
// vertex j, so column j of the matrix of a diagram is the indicator of the
// image of j.  Immutable once built.
class RookMatrix {
public:
    // Validates shape, 0/1 entries and the row/column condition.
    static std::optional<RookMatrix> from_entries(
        const std::vector<std::vector<int>>& entries);

    int size() const { return n_; }
    int at(int row, int col) const; // 1-based, matching vertex labels

    friend bool operator==(const RookMatrix&, const RookMatrix&) = default;

    friend RookMatrix multiply(const RookMatrix& a, const RookMatrix& b);
    friend RookMatrix to_matrix(const PlanarDiagram& d);

private:
    explicit RookMatrix(int n)
        : n_(n), cells_(static_cast<std::size_t>(n) * n, 0) {}

    int n_ = 0;
    std::vector<std::int8_t> cells_;
};

// Integer matrix product.  Partial injective maps compose, so the product
// of rook matrices is again a rook matrix.
RookMatrix multiply(const RookMatrix& a, const RookMatrix& b);

RookMatrix to_matrix(const PlanarDiagram& d);

// Reads the edge set off the matrix; nullopt when the matching crosses.
std::optional<PlanarDiagram> from_matrix(const RookMatrix& m);

// "n:b1,..,bk->t1,..,tk", e.g. "5:1,2,5->2,3,4"; the empty diagram on 5
// vertices prints as "5:->".
std::ostream& operator<<(std::ostream& os, const PlanarDiagram& d);

} // namespace prook
