#include "prook/matrix.hpp"

#include <stdexcept>

namespace prook {

RationalMatrix RationalMatrix::identity(int n) {
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

bool RationalMatrix::is_zero() const {
    for (const auto& c : cells_)
        if (c != 0)
            return false;
    return true;
}

Rational RationalMatrix::trace() const {
    if (rows_ != cols_)
        throw std::invalid_argument("trace of a non-square matrix");
    Rational t = 0;
    for (int i = 0; i < rows_; ++i)
        t += at(i, i);
    return t;
}

RationalMatrix RationalMatrix::conjugate_by_permutation(
    const std::vector<int>& perm) const {
    if (rows_ != cols_ || static_cast<int>(perm.size()) != rows_)
        throw std::invalid_argument("permutation length differs from size");
    RationalMatrix out(rows_, cols_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            out.at(r, c) = at(perm[static_cast<std::size_t>(r)],
                              perm[static_cast<std::size_t>(c)]);
    return out;
}

RationalMatrix& RationalMatrix::operator+=(const RationalMatrix& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("matrix shapes differ");
    for (std::size_t i = 0; i < cells_.size(); ++i)
        cells_[i] += rhs.cells_[i];
    return *this;
}

RationalMatrix& RationalMatrix::operator-=(const RationalMatrix& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("matrix shapes differ");
    for (std::size_t i = 0; i < cells_.size(); ++i)
        cells_[i] -= rhs.cells_[i];
    return *this;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols_ != b.rows_)
        throw std::invalid_argument("matrix shapes differ");
    RationalMatrix out(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i) {
        for (int l = 0; l < a.cols_; ++l) {
            const Rational& alv = a.at(i, l);
            if (alv == 0)
                continue;
            for (int j = 0; j < b.cols_; ++j) {
                const Rational& blj = b.at(l, j);
                if (blj != 0)
                    out.at(i, j) += alv * blj;
            }
        }
    }
    return out;
}

RationalMatrix operator*(const Rational& c, RationalMatrix a) {
    for (auto& cell : a.cells_)
        cell *= c;
    return a;
}

bool RowSpan::insert(std::vector<Rational> row) {
    if (static_cast<int>(row.size()) != width_)
        throw std::invalid_argument("row width differs from span width");
    for (const auto& [pivot, stored] : rows_) {
        const Rational factor = row[static_cast<std::size_t>(pivot)];
        if (factor == 0)
            continue;
        for (int j = pivot; j < width_; ++j) {
            const Rational& s = stored[static_cast<std::size_t>(j)];
            if (s != 0)
                row[static_cast<std::size_t>(j)] -= factor * s;
        }
    }
    int pivot = -1;
    for (int j = 0; j < width_; ++j) {
        if (row[static_cast<std::size_t>(j)] != 0) {
            pivot = j;
            break;
        }
    }
    if (pivot < 0)
        return false;
    const Rational lead = row[static_cast<std::size_t>(pivot)];
    for (int j = pivot; j < width_; ++j)
        row[static_cast<std::size_t>(j)] /= lead;
    rows_.emplace_back(pivot, std::move(row));
    return true;
}

int matrix_rank(const RationalMatrix& m) {
    RowSpan span(m.cols());
    for (int r = 0; r < m.rows(); ++r) {
        std::vector<Rational> row;
        row.reserve(static_cast<std::size_t>(m.cols()));
        for (int c = 0; c < m.cols(); ++c)
            row.push_back(m.at(r, c));
        span.insert(std::move(row));
    }
    return span.dimension();
}

} // namespace prook
