#include "prook/representation.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace prook {

SubsetIndex::SubsetIndex(int n, int k) : n_(n), k_(k), masks_(k_subsets(n, k)) {
    if (k < 0 || k > n)
        throw std::out_of_range("subset size outside 0..n");
}

Mask SubsetIndex::unrank(int index) const {
    if (index < 0 || index >= size())
        throw std::out_of_range("subset index out of range");
    return masks_[static_cast<std::size_t>(index)];
}

int SubsetIndex::rank(Mask s) const {
    auto it = std::lower_bound(masks_.begin(), masks_.end(), s);
    if (it == masks_.end() || *it != s)
        throw std::invalid_argument("mask is not a k-subset of the universe");
    return static_cast<int>(it - masks_.begin());
}

RationalMatrix rho(int n, int k, const PlanarDiagram& d) {
    if (d.size() != n)
        throw std::invalid_argument("diagram size differs from module size");
    SubsetIndex idx(n, k);
    RationalMatrix m(idx.size(), idx.size());
    for (int j = 0; j < idx.size(); ++j) {
        if (auto image = apply(d, idx.unrank(j)))
            m.at(idx.rank(*image), j) = 1;
    }
    return m;
}

RationalMatrix rho_algebra(int n, int k, const AlgebraElement& a) {
    if (a.size() != n)
        throw std::invalid_argument("element size differs from module size");
    SubsetIndex idx(n, k);
    RationalMatrix m(idx.size(), idx.size());
    for (const auto& [d, c] : a.terms()) {
        for (int j = 0; j < idx.size(); ++j) {
            if (auto image = apply(d, idx.unrank(j)))
                m.at(idx.rank(*image), j) += c;
        }
    }
    return m;
}

RestrictionBlocks restriction_blocks(int n, int k) {
    if (n < 1)
        throw std::out_of_range("restriction needs at least one vertex");
    SubsetIndex idx(n, k);
    RestrictionBlocks out;
    out.n = n;
    out.k = k;
    out.first_block = k >= 1 ? static_cast<int>(binomial(n - 1, k - 1)) : 0;
    out.second_block = k <= n - 1 ? static_cast<int>(binomial(n - 1, k)) : 0;
    out.permutation.reserve(static_cast<std::size_t>(idx.size()));
    for (int i = 0; i < idx.size(); ++i)
        if (contains(idx.unrank(i), n))
            out.permutation.push_back(i);
    for (int i = 0; i < idx.size(); ++i)
        if (!contains(idx.unrank(i), n))
            out.permutation.push_back(i);

    // check block structure against the smaller modules, diagram by diagram
    out.verified = true;
    const int f = out.first_block;
    const int s = out.second_block;
    DiagramStream stream(n - 1);
    while (auto small = stream.next()) {
        RationalMatrix big =
            rho(n, k, embed(*small)).conjugate_by_permutation(out.permutation);
        RationalMatrix upper =
            f > 0 ? rho(n - 1, k - 1, *small) : RationalMatrix(0, 0);
        RationalMatrix lower =
            s > 0 ? rho(n - 1, k, *small) : RationalMatrix(0, 0);
        bool ok = true;
        for (int r = 0; r < idx.size() && ok; ++r) {
            for (int c = 0; c < idx.size() && ok; ++c) {
                const Rational& v = big.at(r, c);
                if (r < f && c < f)
                    ok = v == upper.at(r, c);
                else if (r >= f && c >= f)
                    ok = v == lower.at(r - f, c - f);
                else
                    ok = v == 0;
            }
        }
        if (!ok) {
            out.verified = false;
            std::ostringstream os;
            os << *small;
            out.witness = os.str();
            break;
        }
    }
    return out;
}

long long irreducibility_dimension(int n, int k) {
    SubsetIndex idx(n, k);
    const int dim = idx.size();
    RowSpan span(dim * dim);
    DiagramStream stream(n);
    while (auto d = stream.next()) {
        if (span.insert(rho(n, k, *d).flattened()) &&
            span.dimension() == dim * dim)
            break; // span is already the full matrix algebra
    }
    return span.dimension();
}

std::vector<RationalMatrix> wedderburn_map(const AlgebraElement& a) {
    const int n = a.size();
    std::vector<SubsetIndex> indices;
    std::vector<RationalMatrix> blocks;
    indices.reserve(static_cast<std::size_t>(n) + 1);
    blocks.reserve(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        indices.emplace_back(n, k);
        const int dim = indices.back().size();
        blocks.emplace_back(dim, dim);
    }
    for (const auto& [d, c] : to_x_coords(a)) {
        const int k = d.rank();
        const SubsetIndex& idx = indices[static_cast<std::size_t>(k)];
        blocks[static_cast<std::size_t>(k)].at(idx.rank(d.top()),
                                               idx.rank(d.bottom())) += c;
    }
    return blocks;
}

AlgebraElement wedderburn_inv(int n, const std::vector<RationalMatrix>& blocks) {
    if (static_cast<int>(blocks.size()) != n + 1)
        throw std::invalid_argument("expected one block per rank 0..n");
    std::map<PlanarDiagram, Rational> coords;
    for (int k = 0; k <= n; ++k) {
        const RationalMatrix& block = blocks[static_cast<std::size_t>(k)];
        SubsetIndex idx(n, k);
        if (block.rows() != idx.size() || block.cols() != idx.size())
            throw std::invalid_argument("block size differs from C(n,k)");
        for (int r = 0; r < idx.size(); ++r) {
            for (int c = 0; c < idx.size(); ++c) {
                if (block.at(r, c) != 0) {
                    coords.emplace(PlanarDiagram::from_sets(n, idx.unrank(r),
                                                            idx.unrank(c)),
                                   block.at(r, c));
                }
            }
        }
    }
    return from_x_coords(n, coords);
}

std::int64_t diagram_index(const PlanarDiagram& d) {
    const int n = d.size();
    const int k = d.rank();
    std::int64_t base = 0;
    for (int j = 0; j < k; ++j) {
        long long c = binomial(n, j);
        base += c * c;
    }
    SubsetIndex idx(n, k);
    return base +
           static_cast<std::int64_t>(idx.rank(d.bottom())) * idx.size() +
           idx.rank(d.top());
}

std::vector<std::int64_t> regular_action(int n, const PlanarDiagram& d) {
    if (d.size() != n)
        throw std::invalid_argument("diagram size differs");
    std::vector<std::int64_t> image;
    image.reserve(static_cast<std::size_t>(diagram_count(n)));
    DiagramStream stream(n);
    while (auto b = stream.next())
        image.push_back(diagram_index(compose(d, *b)));
    return image;
}

BratteliGraph bratteli(int rows) {
    if (rows < 0)
        throw std::out_of_range("row count must be nonnegative");
    BratteliGraph g;
    g.rows = rows;
    g.labels.resize(static_cast<std::size_t>(rows) + 1);
    for (int r = 0; r <= rows; ++r) {
        auto& row = g.labels[static_cast<std::size_t>(r)];
        row.reserve(static_cast<std::size_t>(r) + 1);
        for (int k = 0; k <= r; ++k)
            row.push_back(binomial(r, k));
    }
    for (int r = 1; r <= rows; ++r) {
        for (int k = 0; k <= r; ++k) {
            if (k >= 1)
                g.edges.push_back({r, k, k - 1});
            if (k <= r - 1)
                g.edges.push_back({r, k, k});
        }
    }
    return g;
}

} // namespace prook
