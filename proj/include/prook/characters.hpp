#pragma once

#include "prook/algebra.hpp"
#include "prook/diagram.hpp"

#include <vector>

namespace prook {

// Character of the k-subset module at d, computed as an honest fixed-point
// count: the number of k-subsets S of the bottom set with d(S) = S.  The
// count depends only on the number of vertical edges l and equals C(l,k).
long long chi(int n, int k, const PlanarDiagram& d);

// values[k][l] = character of the k-subset module at a diagram with l
// vertical edges and no other edges.  Upper unitriangular Pascal matrix.
struct CharacterTable {
    int n = 0;
    std::vector<std::vector<long long>> values;
};

CharacterTable character_table(int n);

// Trace of d acting on the span of all diagrams, as a fixed-point count of
// b -> d * b.  Equals C(n + l, l) for l vertical edges.
long long regular_trace(int n, const PlanarDiagram& d);

// Character of the k-subset module at x_d: 1 when d consists of exactly k
// vertical edges and nothing else, 0 otherwise.
long long chi_on_x(int n, int k, const PlanarDiagram& d);

// z_l = sum over l-subsets V of x_{V,V}.  The n+1 of them form a basis of
// the center.
AlgebraElement center_element(int n, int l);
std::vector<AlgebraElement> center_basis(int n);

// Whether a commutes with every diagram.
bool is_central(const AlgebraElement& a);

// Dimension of the full centralizer, found by exact linear algebra over the
// diagram basis.  Equals n + 1.
long long centralizer_dimension(int n);

struct MultiplicityVector {
    int n = 0;
    std::vector<long long> m; // m[k], k = 0..n
};

// Multiplicities of the k-subset modules in the tensor product of the i-
// and j-subset modules, where diagrams act diagonally.  Closed form
// m_k = C(k, i+j-k) * C(2k-i-j, k-i) supported on max(i,j) <= k <= min(i+j,n).
MultiplicityVector tensor_multiplicities(int n, int i, int j);

// Recovers multiplicities from a class function given by its values f[l] on
// the rank-l idempotents: m_k = sum_l (-1)^(k-l) C(k,l) f[l], inverting the
// Pascal character table.
MultiplicityVector decompose_character(int n, const std::vector<long long>& f);

} // namespace prook
