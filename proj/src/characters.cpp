#include "prook/characters.hpp"

#include "prook/matrix.hpp"
#include "prook/representation.hpp"

#include <algorithm>
#include <stdexcept>

namespace prook {

long long chi(int n, int k, const PlanarDiagram& d) {
    if (d.size() != n)
        throw std::invalid_argument("diagram size differs");
    if (k < 0 || k > n)
        throw std::out_of_range("subset size outside 0..n");
    long long fixed = 0;
    for (Mask s : k_subsets(n, k)) {
        auto image = apply(d, s);
        if (image && *image == s)
            ++fixed;
    }
    return fixed;
}

CharacterTable character_table(int n) {
    CharacterTable t;
    t.n = n;
    t.values.resize(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        auto& row = t.values[static_cast<std::size_t>(k)];
        row.reserve(static_cast<std::size_t>(n) + 1);
        for (int l = 0; l <= n; ++l)
            row.push_back(chi(n, k, pi(n, l)));
    }
    return t;
}

long long regular_trace(int n, const PlanarDiagram& d) {
    if (d.size() != n)
        throw std::invalid_argument("diagram size differs");
    long long fixed = 0;
    DiagramStream stream(n);
    while (auto b = stream.next())
        if (compose(d, *b) == *b)
            ++fixed;
    return fixed;
}

long long chi_on_x(int n, int k, const PlanarDiagram& d) {
    // expand x_d back into diagrams and sum their characters
    if (d.size() != n)
        throw std::invalid_argument("diagram size differs");
    long long total = 0;
    for (const auto& [sub, deleted] : subdiagrams(d)) {
        long long sign = (deleted % 2) ? -1 : 1;
        total += sign * chi(n, k, sub);
    }
    return total;
}

AlgebraElement center_element(int n, int l) {
    if (l < 0 || l > n)
        throw std::out_of_range("rank outside 0..n");
    AlgebraElement z(n);
    for (Mask v : k_subsets(n, l))
        z += x_unit(n, v, v);
    return z;
}

std::vector<AlgebraElement> center_basis(int n) {
    std::vector<AlgebraElement> out;
    out.reserve(static_cast<std::size_t>(n) + 1);
    for (int l = 0; l <= n; ++l)
        out.push_back(center_element(n, l));
    return out;
}

bool is_central(const AlgebraElement& a) {
    DiagramStream stream(a.size());
    while (auto d = stream.next()) {
        AlgebraElement b = AlgebraElement::from_diagram(*d);
        if (a * b != b * a)
            return false;
    }
    return true;
}

long long centralizer_dimension(int n) {
    // Solve [a, g] = 0 for all generators g over the diagram basis.  Each
    // pair (g, output diagram c) contributes one linear equation in the
    // coefficients of a.
    std::vector<PlanarDiagram> basis = all_diagrams(n);
    const int dim = static_cast<int>(basis.size());
    RowSpan equations(dim);
    std::vector<std::int64_t> right(static_cast<std::size_t>(dim));
    std::vector<std::int64_t> left(static_cast<std::size_t>(dim));
    for (const PlanarDiagram& g : basis) {
        for (int j = 0; j < dim; ++j) {
            const PlanarDiagram& bj = basis[static_cast<std::size_t>(j)];
            right[static_cast<std::size_t>(j)] = diagram_index(compose(bj, g));
            left[static_cast<std::size_t>(j)] = diagram_index(compose(g, bj));
        }
        for (int c = 0; c < dim; ++c) {
            std::vector<Rational> row(static_cast<std::size_t>(dim));
            bool nonzero = false;
            for (int j = 0; j < dim; ++j) {
                int v = (right[static_cast<std::size_t>(j)] == c) -
                        (left[static_cast<std::size_t>(j)] == c);
                if (v) {
                    row[static_cast<std::size_t>(j)] = v;
                    nonzero = true;
                }
            }
            if (nonzero)
                equations.insert(std::move(row));
        }
    }
    return dim - equations.dimension();
}

MultiplicityVector tensor_multiplicities(int n, int i, int j) {
    if (i < 0 || i > n || j < 0 || j > n)
        throw std::out_of_range("module labels outside 0..n");
    MultiplicityVector out;
    out.n = n;
    out.m.assign(static_cast<std::size_t>(n) + 1, 0);
    const int lo = std::max(i, j);
    const int hi = std::min(i + j, n);
    for (int k = lo; k <= hi; ++k) {
        // trinomial coefficient k! / ((i+j-k)! (k-i)! (k-j)!)
        out.m[static_cast<std::size_t>(k)] =
            binomial(k, i + j - k) * binomial(2 * k - i - j, k - i);
    }
    return out;
}

MultiplicityVector decompose_character(int n, const std::vector<long long>& f) {
    if (static_cast<int>(f.size()) != n + 1)
        throw std::invalid_argument("expected one value per rank 0..n");
    MultiplicityVector out;
    out.n = n;
    out.m.reserve(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        long long mk = 0;
        for (int l = 0; l <= k; ++l) {
            long long term = binomial(k, l) * f[static_cast<std::size_t>(l)];
            mk += ((k - l) % 2) ? -term : term;
        }
        out.m.push_back(mk);
    }
    return out;
}

} // namespace prook
