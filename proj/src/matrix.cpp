#include "qta/matrix.hpp"

#include <gmpxx.h>

namespace qta {

namespace {

/* Row-echelon form with recorded pivot columns. Entries come back as
 * Scalars ready for back substitution; only the row space matters, so the
 * Q path may rescale rows freely. */
struct Echelon {
    std::vector<std::vector<Scalar>> rows;
    std::vector<int> pivot_cols;
};

/* Bareiss on integer-cleared rows: exact, division-free until the final
 * conversion, and keeps intermediate growth polynomial. */
Echelon echelon_rational(const Matrix& m) {
    const int R = m.rows, C = m.cols;
    std::vector<std::vector<mpz_class>> w(R, std::vector<mpz_class>(C));
    for (int i = 0; i < R; ++i) {
        mpz_class l = 1;
        for (int j = 0; j < C; ++j) l = lcm(l, m.at(i, j).rat().get_den());
        for (int j = 0; j < C; ++j) {
            mpq_class v = m.at(i, j).rat() * mpq_class(l);
            v.canonicalize();
            w[i][j] = v.get_num();
        }
    }
    Echelon e;
    mpz_class prev = 1;
    int row = 0;
    for (int col = 0; col < C && row < R; ++col) {
        int piv = -1;
        for (int i = row; i < R; ++i)
            if (w[i][col] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(w[piv], w[row]);
        const mpz_class p = w[row][col];
        for (int i = row + 1; i < R; ++i) {
            for (int j = col + 1; j < C; ++j) {
                mpz_class t = w[i][j] * p - w[i][col] * w[row][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                w[i][j] = t;
            }
            w[i][col] = 0;
        }
        prev = p;
        e.pivot_cols.push_back(col);
        ++row;
    }
    e.rows.resize(row);
    for (int i = 0; i < row; ++i) {
        e.rows[i].reserve(C);
        for (int j = 0; j < C; ++j) e.rows[i].push_back(Scalar::from_mpq(mpq_class(w[i][j])));
    }
    return e;
}

Echelon echelon_modp(const Matrix& m) {
    const int R = m.rows, C = m.cols;
    std::vector<std::vector<Scalar>> w(R);
    for (int i = 0; i < R; ++i) {
        w[i].reserve(C);
        for (int j = 0; j < C; ++j) w[i].push_back(m.at(i, j));
    }
    Echelon e;
    int row = 0;
    for (int col = 0; col < C && row < R; ++col) {
        int piv = -1;
        for (int i = row; i < R; ++i)
            if (!w[i][col].is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(w[piv], w[row]);
        const Scalar inv = w[row][col].inverse();
        for (int i = row + 1; i < R; ++i) {
            if (w[i][col].is_zero()) continue;
            const Scalar fct = w[i][col] * inv;
            for (int j = col; j < C; ++j) w[i][j] -= fct * w[row][j];
        }
        e.pivot_cols.push_back(col);
        e.rows.push_back(std::move(w[row]));
        ++row;
    }
    return e;
}

Echelon echelon(const Matrix& m) { return m.field.is_rational() ? echelon_rational(m) : echelon_modp(m); }

/* Back-substitute the triangular system rows * x = rhs with the given
 * values preset on free columns. */
std::vector<Scalar> back_substitute(const Echelon& e, const Field& f, int cols, std::vector<Scalar> x,
                                    const std::vector<Scalar>* rhs) {
    for (int i = static_cast<int>(e.pivot_cols.size()) - 1; i >= 0; --i) {
        const int pc = e.pivot_cols[i];
        Scalar acc = rhs ? (*rhs)[i] : Scalar::zero(f);
        for (int j = pc + 1; j < cols; ++j)
            if (!e.rows[i][j].is_zero() && !x[j].is_zero()) acc -= e.rows[i][j] * x[j];
        x[pc] = acc / e.rows[i][pc];
    }
    return x;
}

}  // namespace

int rank(const Matrix& m) { return static_cast<int>(echelon(m).pivot_cols.size()); }

std::vector<std::vector<Scalar>> kernel_basis(const Matrix& m) {
    const Echelon e = echelon(m);
    std::vector<bool> is_pivot(m.cols, false);
    for (int c : e.pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<Scalar>> basis;
    for (int free = 0; free < m.cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Scalar> x(m.cols, Scalar::zero(m.field));
        x[free] = Scalar::one(m.field);
        basis.push_back(back_substitute(e, m.field, m.cols, std::move(x), nullptr));
    }
    return basis;
}

std::optional<std::vector<Scalar>> solve(const Matrix& m, const std::vector<Scalar>& b) {
    if (static_cast<int>(b.size()) != m.rows) throw DimMismatch("solve: rhs length != rows");
    Matrix aug(m.field, m.rows, m.cols + 1);
    for (int i = 0; i < m.rows; ++i) {
        for (int j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols) = b[i];
    }
    const Echelon e = echelon(aug);
    std::vector<Scalar> rhs;
    for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) {
        if (e.pivot_cols[i] == m.cols) return std::nullopt;  // pivot in the augmented column
        rhs.push_back(e.rows[i][m.cols]);
    }
    Echelon trimmed;
    trimmed.pivot_cols = e.pivot_cols;
    trimmed.rows = e.rows;
    std::vector<Scalar> x(m.cols, Scalar::zero(m.field));
    return back_substitute(trimmed, m.field, m.cols, std::move(x), &rhs);
}

}  // namespace qta
