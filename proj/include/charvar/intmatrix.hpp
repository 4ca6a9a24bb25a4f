#pragma once
#include <vector>

#include "charvar/bigint.hpp"

namespace charvar {

/* Dense integer matrix with exact arbitrary-precision entries. */
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(std::size_t(rows) * cols) {}

    static IntMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& at(int r, int c) { return a_[std::size_t(r) * cols_ + c]; }
    const Int& at(int r, int c) const { return a_[std::size_t(r) * cols_ + c]; }

    IntMatrix mul(const IntMatrix& other) const;
    IntMatrix transpose() const;

    bool operator==(const IntMatrix& other) const = default;

    void swap_rows(int i, int j);
    void swap_cols(int i, int j);
    void add_row_multiple(int dst, int src, const Int& q);  // row dst += q * row src
    void add_col_multiple(int dst, int src, const Int& q);
    void negate_row(int i);
    void negate_col(int i);

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Int> a_;
};

/* U * M * V = D with U, V unimodular and D diagonal, diagonal entries
 * non-negative and each dividing the next. */
struct SnfResult {
    IntMatrix u, d, v;
    std::vector<Int> diagonal() const;
    int rank() const;
};

SnfResult smith_normal_form(const IntMatrix& m);

/* Exact determinant (Bareiss fraction-free elimination); square input. */
Int determinant(const IntMatrix& m);

} // namespace charvar
