#include "smithles/int_matrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "smithles/errors.hpp"

namespace smithles::fgab {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows.begin()->size();
    IntMatrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) throw ContractError("ragged row in matrix literal");
        std::size_t j = 0;
        for (long v : row) m(i, j++) = v;
        ++i;
    }
    return m;
}

bool IntMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Int& v) { return v == 0; });
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw ContractError("matrix product shape mismatch");
    IntMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
        }
    return out;
}

std::vector<Int> IntMatrix::column(std::size_t j) const {
    std::vector<Int> col(rows_);
    for (std::size_t i = 0; i < rows_; ++i) col[i] = (*this)(i, j);
    return col;
}

std::vector<Int> IntMatrix::apply(const std::vector<Int>& x) const {
    if (x.size() != cols_) throw ContractError("matrix-vector shape mismatch");
    std::vector<Int> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (x[j] != 0) out[i] += (*this)(i, j) * x[j];
    return out;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < cols_; ++k) std::swap((*this)(i, k), (*this)(j, k));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < rows_; ++k) std::swap((*this)(k, i), (*this)(k, j));
}

void IntMatrix::add_row_multiple(std::size_t target, std::size_t source, const Int& factor) {
    for (std::size_t k = 0; k < cols_; ++k) (*this)(target, k) += factor * (*this)(source, k);
}

void IntMatrix::add_col_multiple(std::size_t target, std::size_t source, const Int& factor) {
    for (std::size_t k = 0; k < rows_; ++k) (*this)(k, target) += factor * (*this)(k, source);
}

void IntMatrix::negate_row(std::size_t i) {
    for (std::size_t k = 0; k < cols_; ++k) (*this)(i, k) = -(*this)(i, k);
}

void IntMatrix::negate_col(std::size_t j) {
    for (std::size_t k = 0; k < rows_; ++k) (*this)(k, j) = -(*this)(k, j);
}

Int IntMatrix::determinant() const {
    if (!is_square()) throw ContractError("determinant of non-square matrix");
    std::size_t n = rows_;
    if (n == 0) return 1;
    IntMatrix a = *this;
    Int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t pivot = k + 1;
            while (pivot < n && a(pivot, k) == 0) ++pivot;
            if (pivot == n) return 0;
            a.swap_rows(k, pivot);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                // Bareiss: exact division by the previous pivot.
                a(i, j) = num / prev;
            }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i == 0 ? "[" : " [");
        for (std::size_t j = 0; j < cols_; ++j) os << (*this)(i, j) << (j + 1 < cols_ ? ", " : "");
        os << "]" << (i + 1 < rows_ ? "\n" : "");
    }
    os << "]";
    return os.str();
}

namespace {

// True when row s and column s of m are zero outside the diagonal entry.
bool is_isolated(const IntMatrix& m, std::size_t s) {
    for (std::size_t i = s + 1; i < m.rows(); ++i)
        if (m(i, s) != 0) return false;
    for (std::size_t j = s + 1; j < m.cols(); ++j)
        if (m(s, j) != 0) return false;
    return true;
}

bool locate_min_nonzero(const IntMatrix& m, std::size_t s, std::size_t& bi, std::size_t& bj) {
    bool found = false;
    Int best;
    for (std::size_t i = s; i < m.rows(); ++i)
        for (std::size_t j = s; j < m.cols(); ++j) {
            if (m(i, j) == 0) continue;
            Int a = abs(m(i, j));
            if (!found || a < best) {
                best = a;
                bi = i;
                bj = j;
                found = true;
            }
        }
    return found;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    SmithDecomposition d;
    d.left = IntMatrix::identity(rows);
    d.left_inv = IntMatrix::identity(rows);
    d.right = IntMatrix::identity(cols);
    d.right_inv = IntMatrix::identity(cols);
    d.diag = m;

    IntMatrix& s = d.diag;
    const std::size_t nmin = std::min(rows, cols);

    // Elementary operations are mirrored onto left/right and their
    // inverses: row op R on s means left <- R*left, left_inv <- left_inv*R^{-1}.
    auto row_swap = [&](std::size_t i, std::size_t j) {
        s.swap_rows(i, j);
        d.left.swap_rows(i, j);
        d.left_inv.swap_cols(i, j);
    };
    auto col_swap = [&](std::size_t i, std::size_t j) {
        s.swap_cols(i, j);
        d.right.swap_cols(i, j);
        d.right_inv.swap_rows(i, j);
    };
    auto row_add = [&](std::size_t target, std::size_t source, const Int& f) {
        s.add_row_multiple(target, source, f);
        d.left.add_row_multiple(target, source, f);
        d.left_inv.add_col_multiple(source, target, -f);
    };
    auto col_add = [&](std::size_t target, std::size_t source, const Int& f) {
        s.add_col_multiple(target, source, f);
        d.right.add_col_multiple(target, source, f);
        d.right_inv.add_row_multiple(source, target, -f);
    };
    auto row_negate = [&](std::size_t i) {
        s.negate_row(i);
        d.left.negate_row(i);
        d.left_inv.negate_col(i);
    };

    for (std::size_t t = 0; t < nmin; ++t) {
        std::size_t pi = t, pj = t;
        if (!locate_min_nonzero(s, t, pi, pj)) break;  // remaining block is zero
        row_swap(t, pi);
        col_swap(t, pj);

        while (!is_isolated(s, t) || s(t, t) == 0) {
            if (!locate_min_nonzero(s, t, pi, pj)) break;
            row_swap(t, pi);
            col_swap(t, pj);
            for (std::size_t i = t + 1; i < rows; ++i)
                if (s(i, t) != 0) row_add(i, t, -(s(i, t) / s(t, t)));
            for (std::size_t j = t + 1; j < cols; ++j)
                if (s(t, j) != 0) col_add(j, t, -(s(t, j) / s(t, t)));
            if (is_isolated(s, t)) {
                // Pull in a row that breaks divisibility, then keep reducing.
                bool divides_all = true;
                for (std::size_t i = t + 1; i < rows && divides_all; ++i)
                    for (std::size_t j = t + 1; j < cols && divides_all; ++j)
                        if (s(i, j) % s(t, t) != 0) {
                            row_add(t, i, 1);
                            divides_all = false;
                        }
                if (divides_all) break;
            }
        }
        if (s(t, t) < 0) row_negate(t);
    }

    d.rank = 0;
    for (std::size_t t = 0; t < nmin; ++t)
        if (s(t, t) != 0) ++d.rank;
    return d;
}

IntMatrix kernel_lattice(const IntMatrix& m) {
    if (m.cols() == 0) return IntMatrix(0, 0);
    if (m.rows() == 0) return IntMatrix::identity(m.cols());
    SmithDecomposition d = smith_normal_form(m);
    // m * right = left^{-1} * diag, so right's columns past the rank map to 0.
    std::size_t free_cols = m.cols() - d.rank;
    IntMatrix basis(m.cols(), free_cols);
    for (std::size_t j = 0; j < free_cols; ++j)
        for (std::size_t i = 0; i < m.cols(); ++i) basis(i, j) = d.right(i, d.rank + j);
    return basis;
}

bool solve_linear(const IntMatrix& m, const std::vector<Int>& b, std::vector<Int>& solution) {
    if (b.size() != m.rows()) throw ContractError("solve_linear shape mismatch");
    SmithDecomposition d = smith_normal_form(m);
    // m x = b  <=>  diag (right^{-1} x) = left b.
    std::vector<Int> lb = d.left.apply(b);
    std::vector<Int> y(m.cols());
    std::size_t nmin = std::min(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i < nmin && d.diag(i, i) != 0) {
            if (lb[i] % d.diag(i, i) != 0) return false;
            y[i] = lb[i] / d.diag(i, i);
        } else if (lb[i] != 0) {
            return false;
        }
    }
    solution = d.right.apply(y);
    return true;
}

IntMatrix lattice_basis(const IntMatrix& m) {
    if (m.cols() == 0 || m.rows() == 0) return IntMatrix(m.rows(), 0);
    SmithDecomposition d = smith_normal_form(m);
    // Column span of m equals the span of left^{-1} * diag; keep the
    // nonzero columns, which are independent since left^{-1} is unimodular.
    IntMatrix basis(m.rows(), d.rank);
    for (std::size_t j = 0; j < d.rank; ++j)
        for (std::size_t i = 0; i < m.rows(); ++i) basis(i, j) = d.left_inv(i, j) * d.diag(j, j);
    return basis;
}

}  // namespace smithles::fgab
