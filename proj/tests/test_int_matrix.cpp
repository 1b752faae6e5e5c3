#include <random>

#include "doctest.h"
#include "smithles/int_matrix.hpp"

using namespace smithles::fgab;

namespace {

void check_decomposition(const IntMatrix& m) {
    SmithDecomposition d = smith_normal_form(m);
    CHECK(d.left * m * d.right == d.diag);
    CHECK(abs(d.left.determinant()) == 1);
    CHECK(abs(d.right.determinant()) == 1);
    CHECK(d.left * d.left_inv == IntMatrix::identity(m.rows()));
    CHECK(d.right * d.right_inv == IntMatrix::identity(m.cols()));
    std::size_t nmin = std::min(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (i != j) CHECK(d.diag(i, j) == 0);
    for (std::size_t t = 0; t < nmin; ++t) CHECK(d.diag(t, t) >= 0);
    for (std::size_t t = 0; t + 1 < nmin; ++t) {
        if (d.diag(t + 1, t + 1) != 0) {
            REQUIRE(d.diag(t, t) != 0);
            CHECK(d.diag(t + 1, t + 1) % d.diag(t, t) == 0);
        }
    }
}

}  // namespace

TEST_CASE("smith normal form of the identity") {
    IntMatrix id = IntMatrix::identity(2);
    SmithDecomposition d = smith_normal_form(id);
    CHECK(d.diag == id);
    CHECK(d.left == id);
    CHECK(d.right == id);
}

TEST_CASE("smith normal form of [[2,4],[6,8]]") {
    IntMatrix m = IntMatrix::from_rows({{2, 4}, {6, 8}});
    SmithDecomposition d = smith_normal_form(m);
    // gcd of the entries is 2 and 2*d2 = |det| = 8.
    CHECK(d.diag(0, 0) == 2);
    CHECK(d.diag(1, 1) == 4);
    check_decomposition(m);
}

TEST_CASE("smith normal form of a zero 3x2 matrix") {
    IntMatrix m(3, 2);
    SmithDecomposition d = smith_normal_form(m);
    CHECK(d.diag == m);
    CHECK(d.left == IntMatrix::identity(3));
    CHECK(d.right == IntMatrix::identity(2));
    CHECK(d.rank == 0);
}

TEST_CASE("smith normal form properties on random matrices") {
    std::mt19937 rng(0xC0FFEE);
    std::uniform_int_distribution<int> dim(0, 6), entry(-50, 50);
    for (int trial = 0; trial < 250; ++trial) {
        IntMatrix m(dim(rng), dim(rng));
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = entry(rng);
        check_decomposition(m);
    }
}

TEST_CASE("kernel lattice and linear solving") {
    IntMatrix m = IntMatrix::from_rows({{2, 4}, {1, 2}});
    IntMatrix k = kernel_lattice(m);
    REQUIRE(k.cols() == 1);
    CHECK((m * k).is_zero());

    std::vector<Int> sol;
    CHECK(solve_linear(m, {Int(6), Int(3)}, sol));
    CHECK(m.apply(sol) == std::vector<Int>{Int(6), Int(3)});
    CHECK_FALSE(solve_linear(m, {Int(1), Int(1)}, sol));
}

TEST_CASE("lattice basis drops dependent generators") {
    IntMatrix gens = IntMatrix::from_rows({{2, 4, 6}, {0, 0, 0}});
    IntMatrix basis = lattice_basis(gens);
    CHECK(basis.cols() == 1);
    CHECK(basis.rows() == 2);
    std::vector<Int> sol;
    CHECK(solve_linear(basis, gens.column(0), sol));
    CHECK(solve_linear(basis, gens.column(2), sol));
}

TEST_CASE("determinant via Bareiss") {
    CHECK(IntMatrix::from_rows({{2, 0}, {0, 3}}).determinant() == 6);
    CHECK(IntMatrix::from_rows({{1, 2}, {3, 4}}).determinant() == -2);
    CHECK(IntMatrix::from_rows({{1, 2}, {2, 4}}).determinant() == 0);
    CHECK(IntMatrix::identity(0).determinant() == 1);
}
