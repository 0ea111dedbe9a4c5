#pragma once

#include "prook/rational.hpp"

#include <utility>
#include <vector>

namespace prook {

// Dense matrix over the exact rationals.  Indices are 0-based.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(int rows, int cols)
        : rows_(rows), cols_(cols),
          cells_(static_cast<std::size_t>(rows) * cols) {}

    static RationalMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const Rational& at(int r, int c) const {
        return cells_[static_cast<std::size_t>(r) * cols_ + c];
    }
    Rational& at(int r, int c) {
        return cells_[static_cast<std::size_t>(r) * cols_ + c];
    }

    bool is_zero() const;
    Rational trace() const;

    // B with B(r,c) = A(perm[r], perm[c]); perm maps new index to old.
    RationalMatrix conjugate_by_permutation(const std::vector<int>& perm) const;

    std::vector<Rational> flattened() const { return cells_; }

    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

    RationalMatrix& operator+=(const RationalMatrix& rhs);
    RationalMatrix& operator-=(const RationalMatrix& rhs);
    friend RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b) {
        a += b;
        return a;
    }
    friend RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b) {
        a -= b;
        return a;
    }
    friend RationalMatrix operator*(const RationalMatrix& a,
                                    const RationalMatrix& b);
    friend RationalMatrix operator*(const Rational& c, RationalMatrix a);

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rational> cells_;
};

// Incremental exact row space.  Rows are reduced against the stored echelon
// rows; the pivot of a new row is its first nonzero column.  No pivoting
// strategy and no tolerances: arithmetic is exact, so none are needed.
class RowSpan {
public:
    explicit RowSpan(int width) : width_(width) {}

    // Returns true when the row enlarged the span.
    bool insert(std::vector<Rational> row);

    int dimension() const { return static_cast<int>(rows_.size()); }
    int width() const { return width_; }

private:
    int width_;
    std::vector<std::pair<int, std::vector<Rational>>> rows_; // (pivot, row)
};

int matrix_rank(const RationalMatrix& m);

} // namespace prook
