#pragma once

#include <optional>
#include <vector>

#include "qta/field.hpp"

namespace qta {

/* Dense matrix over the active field, row-major. */
struct Matrix {
    int rows = 0, cols = 0;
    Field field;
    std::vector<Scalar> a;

    Matrix() = default;
    Matrix(const Field& f, int r, int c) : rows(r), cols(c), field(f), a(static_cast<std::size_t>(r) * c, Scalar::zero(f)) {}

    Scalar& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    const Scalar& at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
};

/* Rank over the active field. Rationals go through fraction-free Bareiss
 * elimination on integer-cleared rows; F_p uses plain Gaussian elimination. */
int rank(const Matrix& m);

/* Basis of the null space; size is always cols - rank. Each vector
 * satisfies m v = 0 exactly. */
std::vector<std::vector<Scalar>> kernel_basis(const Matrix& m);

/* Some particular solution of m x = b, or nullopt when inconsistent. */
std::optional<std::vector<Scalar>> solve(const Matrix& m, const std::vector<Scalar>& b);

}  // namespace qta
