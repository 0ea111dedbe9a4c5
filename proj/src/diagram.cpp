#include "prook/diagram.hpp"

#include <ostream>
#include <stdexcept>

namespace prook {

PlanarDiagram PlanarDiagram::from_sets(int n, Mask top, Mask bottom) {
    if (n < 0 || n > kMaxSize)
        throw std::out_of_range("diagram size out of range");
    Mask allowed = full_mask(n);
    if ((top & ~allowed) || (bottom & ~allowed))
        throw std::out_of_range("vertex outside {1..n}");
    if (subset_size(top) != subset_size(bottom))
        throw std::invalid_argument("top and bottom sets differ in size");
    return PlanarDiagram(n, top, bottom);
}

PlanarDiagram PlanarDiagram::identity(int n) {
    if (n < 0 || n > kMaxSize)
        throw std::out_of_range("diagram size out of range");
    return PlanarDiagram(n, full_mask(n), full_mask(n));
}

PlanarDiagram PlanarDiagram::edgeless(int n) {
    if (n < 0 || n > kMaxSize)
        throw std::out_of_range("diagram size out of range");
    return PlanarDiagram(n, 0, 0);
}

std::vector<std::pair<int, int>> edges(const PlanarDiagram& d) {
    std::vector<int> b = elements(d.bottom());
    std::vector<int> t = elements(d.top());
    std::vector<std::pair<int, int>> out;
    out.reserve(b.size());
    for (std::size_t i = 0; i < b.size(); ++i)
        out.emplace_back(b[i], t[i]);
    return out;
}

std::optional<int> image_of(const PlanarDiagram& d, int bottomVertex) {
    if (bottomVertex < 1 || bottomVertex > d.size())
        throw std::out_of_range("vertex outside {1..n}");
    if (!contains(d.bottom(), bottomVertex))
        return std::nullopt;
    // position of bottomVertex among the bottom set = position of its image
    Mask below = d.bottom() & (single(bottomVertex) - 1);
    int pos = subset_size(below);
    return elements(d.top())[static_cast<std::size_t>(pos)];
}

std::optional<Mask> apply(const PlanarDiagram& d, Mask s) {
    if (s & ~full_mask(d.size()))
        throw std::out_of_range("set not inside {1..n}");
    if (s & ~d.bottom())
        return std::nullopt;
    Mask image = 0;
    std::vector<int> b = elements(d.bottom());
    std::vector<int> t = elements(d.top());
    for (std::size_t i = 0; i < b.size(); ++i)
        if (contains(s, b[i]))
            image |= single(t[i]);
    return image;
}

PlanarDiagram compose(const PlanarDiagram& d1, const PlanarDiagram& d2) {
    if (d1.size() != d2.size())
        throw std::invalid_argument("diagram sizes differ");
    Mask meet = d2.top() & d1.bottom();
    Mask newBottom = 0;
    std::vector<int> b2 = elements(d2.bottom());
    std::vector<int> t2 = elements(d2.top());
    for (std::size_t i = 0; i < t2.size(); ++i)
        if (contains(meet, t2[i]))
            newBottom |= single(b2[i]);
    Mask newTop = *apply(d1, meet);
    return PlanarDiagram::from_sets(d1.size(), newTop, newBottom);
}

int vertical_edge_count(const PlanarDiagram& d) {
    int count = 0;
    for (auto [b, t] : edges(d))
        if (b == t)
            ++count;
    return count;
}

PlanarDiagram pi(int n, int l) {
    if (l < 0 || l > n)
        throw std::out_of_range("idempotent rank outside 0..n");
    return PlanarDiagram::from_sets(n, full_mask(l), full_mask(l));
}

PlanarDiagram p_drop(int n, int i) {
    if (i < 1 || i > n)
        throw std::out_of_range("vertex outside {1..n}");
    Mask m = full_mask(n) & ~single(i);
    return PlanarDiagram::from_sets(n, m, m);
}

PlanarDiagram embed(const PlanarDiagram& d) {
    const int n = d.size() + 1;
    return PlanarDiagram::from_sets(n, d.top() | single(n),
                                    d.bottom() | single(n));
}

std::vector<std::pair<PlanarDiagram, int>> subdiagrams(const PlanarDiagram& d) {
    int r = d.rank();
    if (r > 24)
        throw std::length_error("too many edges to enumerate subdiagrams");
    std::vector<int> b = elements(d.bottom());
    std::vector<int> t = elements(d.top());
    std::vector<std::pair<PlanarDiagram, int>> out;
    out.reserve(std::size_t{1} << r);
    for (Mask pick = 0; pick < (Mask{1} << r); ++pick) {
        Mask bb = 0, tt = 0;
        for (int e = 0; e < r; ++e) {
            if ((pick >> e) & 1u) {
                bb |= single(b[static_cast<std::size_t>(e)]);
                tt |= single(t[static_cast<std::size_t>(e)]);
            }
        }
        out.emplace_back(PlanarDiagram::from_sets(d.size(), tt, bb),
                         r - subset_size(pick));
    }
    return out;
}

DiagramStream::DiagramStream(int n) : n_(n), k_(0), bottom_(0), top_(0), done_(false) {
    if (n < 0 || n > kMaxSize)
        throw std::out_of_range("diagram size out of range");
}

std::optional<PlanarDiagram> DiagramStream::next() {
    if (done_)
        return std::nullopt;
    PlanarDiagram current = PlanarDiagram::from_sets(n_, top_, bottom_);
    // advance: top fastest, then bottom, then rank
    if (!next_k_subset(top_, n_)) {
        top_ = full_mask(k_);
        if (!next_k_subset(bottom_, n_)) {
            ++k_;
            if (k_ > n_) {
                done_ = true;
            } else {
                bottom_ = full_mask(k_);
                top_ = full_mask(k_);
            }
        }
    }
    return current;
}

std::vector<PlanarDiagram> all_diagrams(int n) {
    std::vector<PlanarDiagram> out;
    out.reserve(static_cast<std::size_t>(diagram_count(n)));
    DiagramStream stream(n);
    while (auto d = stream.next())
        out.push_back(*d);
    return out;
}

long long diagram_count(int n) {
    long long total = 0;
    for (int k = 0; k <= n; ++k) {
        long long c = binomial(n, k);
        total += c * c;
    }
    return total;
}

std::optional<RookMatrix> RookMatrix::from_entries(
    const std::vector<std::vector<int>>& entries) {
    int n = static_cast<int>(entries.size());
    if (n > kMaxSize)
        return std::nullopt;
    RookMatrix m(n);
    std::vector<int> colSum(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        const auto& row = entries[static_cast<std::size_t>(i)];
        if (static_cast<int>(row.size()) != n)
            return std::nullopt;
        int rowSum = 0;
        for (int j = 0; j < n; ++j) {
            int v = row[static_cast<std::size_t>(j)];
            if (v != 0 && v != 1)
                return std::nullopt;
            rowSum += v;
            colSum[static_cast<std::size_t>(j)] += v;
            m.cells_[static_cast<std::size_t>(i) * n + j] =
                static_cast<std::int8_t>(v);
        }
        if (rowSum > 1)
            return std::nullopt;
    }
    for (int j = 0; j < n; ++j)
        if (colSum[static_cast<std::size_t>(j)] > 1)
            return std::nullopt;
    return m;
}

int RookMatrix::at(int row, int col) const {
    if (row < 1 || row > n_ || col < 1 || col > n_)
        throw std::out_of_range("matrix index outside 1..n");
    return cells_[static_cast<std::size_t>(row - 1) * n_ + (col - 1)];
}

RookMatrix multiply(const RookMatrix& a, const RookMatrix& b) {
    if (a.n_ != b.n_)
        throw std::invalid_argument("matrix sizes differ");
    int n = a.n_;
    RookMatrix out(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            int sum = 0;
            for (int l = 0; l < n; ++l)
                sum += a.cells_[static_cast<std::size_t>(i) * n + l] *
                       b.cells_[static_cast<std::size_t>(l) * n + j];
            out.cells_[static_cast<std::size_t>(i) * n + j] =
                static_cast<std::int8_t>(sum);
        }
    }
    return out;
}

RookMatrix to_matrix(const PlanarDiagram& d) {
    RookMatrix m(d.size());
    for (auto [b, t] : edges(d))
        m.cells_[static_cast<std::size_t>(t - 1) * d.size() + (b - 1)] = 1;
    return m;
}

std::optional<PlanarDiagram> from_matrix(const RookMatrix& m) {
    int n = m.size();
    Mask top = 0, bottom = 0;
    int lastTop = 0;
    // scan columns left to right; planarity = tops appear in increasing order
    for (int j = 1; j <= n; ++j) {
        for (int i = 1; i <= n; ++i) {
            if (m.at(i, j)) {
                if (i <= lastTop)
                    return std::nullopt;
                lastTop = i;
                top |= single(i);
                bottom |= single(j);
            }
        }
    }
    return PlanarDiagram::from_sets(n, top, bottom);
}

std::ostream& operator<<(std::ostream& os, const PlanarDiagram& d) {
    os << d.size() << ':';
    std::vector<int> b = elements(d.bottom());
    for (std::size_t i = 0; i < b.size(); ++i)
        os << (i ? "," : "") << b[i];
    os << "->";
    std::vector<int> t = elements(d.top());
    for (std::size_t i = 0; i < t.size(); ++i)
        os << (i ? "," : "") << t[i];
    return os;
}

} // namespace prook
