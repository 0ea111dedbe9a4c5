#pragma once

#include "prook/algebra.hpp"
#include "prook/diagram.hpp"
#include "prook/matrix.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace prook {

// Indexes the k-subsets of {1..n} in ascending bitmask order.  rank and
// unrank are mutually inverse; the order matches k_subsets(n, k).
class SubsetIndex {
public:
    SubsetIndex(int n, int k);

    int n() const { return n_; }
    int k() const { return k_; }
    int size() const { return static_cast<int>(masks_.size()); }
    Mask unrank(int index) const;
    int rank(Mask s) const; // throws when s is not a k-subset of {1..n}
    const std::vector<Mask>& masks() const { return masks_; }

private:
    int n_;
    int k_;
    std::vector<Mask> masks_;
};

// Matrix of a diagram acting on the subset module with basis {v_S : |S|=k},
// ordered by SubsetIndex: column rank(S) is the indicator of d(S) when S is
// inside the bottom set of d, zero otherwise.  Entries are 0/1.
RationalMatrix rho(int n, int k, const PlanarDiagram& d);

// Linear extension of rho to algebra elements.
RationalMatrix rho_algebra(int n, int k, const AlgebraElement& a);

// Result of splitting the k-subset module on n vertices over the diagrams
// with vertex n unmatched.  The permutation reorders the basis so subsets
// containing n come first; in the new order every such diagram acts in two
// diagonal blocks matching the (k-1)- and k-subset modules on n-1 vertices.
struct RestrictionBlocks {
    int n = 0;
    int k = 0;
    std::vector<int> permutation; // new position -> original basis index
    int first_block = 0;          // C(n-1, k-1), or 0 when k == 0
    int second_block = 0;         // C(n-1, k),   or 0 when k == n
    bool verified = false;        // checked for every diagram of size n-1
    std::string witness;          // a failing diagram, when !verified
};

RestrictionBlocks restriction_blocks(int n, int k);

// Dimension of the linear span of {rho(n,k,d) : all d}.  Equals
// C(n,k)^2 exactly when the module is irreducible.
long long irreducibility_dimension(int n, int k);

// The algebra isomorphism onto block matrices: block k of a is the matrix
// of x-basis coordinates of rank-k diagrams, rows indexed by top sets and
// columns by bottom sets.  Equivalently block k equals rho_algebra(n,k,a).
std::vector<RationalMatrix> wedderburn_map(const AlgebraElement& a);

// Inverse of wedderburn_map; blocks[k] must be square of size C(n,k).
AlgebraElement wedderburn_inv(int n, const std::vector<RationalMatrix>& blocks);

// Position of d in the canonical enumeration of all_diagrams(d.size()).
std::int64_t diagram_index(const PlanarDiagram& d);

// Left action of d on the basis of all diagrams: entry j is the canonical
// index of d * b_j.  Column j of the regular representation matrix is the
// indicator vector of entry j.
std::vector<std::int64_t> regular_action(int n, const PlanarDiagram& d);

// The branching graph of the module towers, rows 0..rows.  Node (n,k)
// carries dimension C(n,k) and has edges down to (n-1,k-1) and (n-1,k)
// when those exist; row sums of squares give the diagram counts.
struct BratteliGraph {
    struct Edge {
        int n;
        int k;
        int parent_k; // edge (n,k) -> (n-1,parent_k)
    };
    int rows = 0;
    std::vector<std::vector<long long>> labels; // labels[r][k] = C(r,k)
    std::vector<Edge> edges;
};

BratteliGraph bratteli(int rows);

} // namespace prook
