#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace smithles::fgab {

// Exact integers everywhere; Smith normal form intermediates can outgrow
// any fixed-width type even for small inputs.
using Int = mpz_class;

// Dense integer matrix, row-major. Zero-dimensional shapes (0xN, Nx0) are
// legal and show up constantly as presentations of trivial groups.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static IntMatrix identity(std::size_t n);
    static IntMatrix zero(std::size_t rows, std::size_t cols) { return IntMatrix(rows, cols); }
    // Row-major literal, convenient in tests: {{2, 4}, {6, 8}}.
    static IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const IntMatrix& other) const = default;

    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }

    IntMatrix transpose() const;
    IntMatrix operator*(const IntMatrix& rhs) const;

    std::vector<Int> column(std::size_t j) const;
    std::vector<Int> apply(const std::vector<Int>& x) const;  // matrix * vector

    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    void add_row_multiple(std::size_t target, std::size_t source, const Int& factor);
    void add_col_multiple(std::size_t target, std::size_t source, const Int& factor);
    void negate_row(std::size_t i);
    void negate_col(std::size_t j);

    // Exact determinant by fraction-free (Bareiss) elimination.
    Int determinant() const;

    std::string to_string() const;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Int> data_;
};

// Smith decomposition left * m * right = diag, with left and right
// unimodular, diag's diagonal nonnegative and divisibility-ordered.
// The inverses come along for free from accumulating the inverse
// elementary operations; lattice routines need them.
struct SmithDecomposition {
    IntMatrix left;        // U
    IntMatrix diag;        // S
    IntMatrix right;       // V
    IntMatrix left_inv;    // U^{-1}
    IntMatrix right_inv;   // V^{-1}
    std::size_t rank = 0;  // number of nonzero diagonal entries
};

SmithDecomposition smith_normal_form(const IntMatrix& m);

// Basis of the lattice { x : m x = 0 }, one basis vector per column.
IntMatrix kernel_lattice(const IntMatrix& m);

// One integer solution of m x = b, if any.
bool solve_linear(const IntMatrix& m, const std::vector<Int>& b, std::vector<Int>& solution);

// A basis of the column span of m (columns may be dependent on input).
IntMatrix lattice_basis(const IntMatrix& m);

}  // namespace smithles::fgab
