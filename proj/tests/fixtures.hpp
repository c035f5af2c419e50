#pragma once

/* Shared small fixtures for the test suites. */

#include "qta/matrix.hpp"
#include "qta/quasi_twilled.hpp"

namespace qta::fixtures {

/* K1: one-dimensional algebra with e.e = e. */
inline Algebra k1(const Field& f) {
    MLMap p = MLMap::square(f, 1, 2);
    p.coeffs()[0] = Scalar::one(f);
    return make_algebra(f, 1, p);
}

/* N1: one-dimensional zero algebra. */
inline Algebra n1(const Field& f) { return make_algebra(f, 1, MLMap::square(f, 1, 2)); }

/* D2: dual numbers, basis {1, eps}, eps^2 = 0. */
inline Algebra d2(const Field& f) {
    MLMap p = MLMap::square(f, 2, 2);
    int idx[2];
    auto set = [&](int i, int j, int o) {
        idx[0] = i;
        idx[1] = j;
        p.at(idx, o) = Scalar::one(f);
    };
    set(0, 0, 0);  // 1*1 = 1
    set(0, 1, 1);  // 1*eps = eps
    set(1, 0, 1);  // eps*1 = eps
    return make_algebra(f, 2, p);
}

/* Regular bimodule of an algebra on itself: tr = tl = the product. */
inline QuasiTwilledAlgebra semidirect_regular(const Algebra& A) {
    return semidirect(A, A.dim, A.product, A.product);
}

/* Weight-1 shape: B = A as an algebra object in its own bimodules. */
inline QuasiTwilledAlgebra weight_one_regular(const Algebra& A) {
    return algebra_in_bimodules(A, A, A.product, A.product);
}

/* D3: truncated polynomials k[x]/(x^3), basis {1, x, x^2}. */
inline Algebra d3(const Field& f) {
    MLMap p = MLMap::square(f, 3, 2);
    int idx[2];
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (i + j < 3) {
                idx[0] = i;
                idx[1] = j;
                p.at(idx, i + j) = Scalar::one(f);
            }
    return make_algebra(f, 3, p);
}

/* UT2: upper-triangular 2x2 matrices, basis {e11, e22, e12}; the smallest
 * noncommutative associative algebra here. */
inline Algebra ut2(const Field& f) {
    MLMap p = MLMap::square(f, 3, 2);
    auto set = [&](int i, int j, int o) {
        int idx[2] = {i, j};
        p.at(idx, o) = Scalar::one(f);
    };
    set(0, 0, 0);  // e11 e11 = e11
    set(1, 1, 1);  // e22 e22 = e22
    set(0, 2, 2);  // e11 e12 = e12
    set(2, 1, 2);  // e12 e22 = e12
    return make_algebra(f, 3, p);
}

/* Transport the product along a random invertible change of basis; the
 * result is associative with generic-looking coefficients. */
inline Algebra random_conjugate(const Algebra& A, Rng& rng) {
    const Field& f = A.field;
    const int d = A.dim;
    for (;;) {
        MLMap P(f, {d}, d);
        for (auto& s : P.coeffs()) s = random_scalar(f, rng);
        Matrix M(f, d, d);
        for (int j = 0; j < d; ++j) {
            int jj[1] = {j};
            Vec col = P.value(jj);
            for (int i = 0; i < d; ++i) M.at(i, j) = col[static_cast<std::size_t>(i)];
        }
        if (rank(M) < d) continue;
        MLMap Pinv(f, {d}, d);
        for (int i = 0; i < d; ++i) {
            auto x = solve(M, basis_vec(f, d, i));
            for (int j = 0; j < d; ++j) Pinv.at_flat(static_cast<std::size_t>(i), j) = (*x)[static_cast<std::size_t>(j)];
        }
        MLMap prod = MLMap::square(f, d, 2);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                int ii[1] = {i}, jj[1] = {j};
                Vec v = Pinv.apply1(A.product.apply2(P.value(ii), P.value(jj)));
                int idx[2] = {i, j};
                for (int o = 0; o < d; ++o) prod.at(idx, o) = v[static_cast<std::size_t>(o)];
            }
        return make_algebra(f, d, std::move(prod));
    }
}

/* Exact Hochschild 2-cocycle on A with values in the regular bimodule:
 * the coboundary of a random linear map. */
inline MLMap random_coboundary_theta(const Algebra& A, Rng& rng) {
    const Field& f = A.field;
    const int d = A.dim;
    MLMap lin = random_mlmap(f, {d}, d, rng);
    MLMap theta(f, {d, d}, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            Vec a = basis_vec(f, d, i), b = basis_vec(f, d, j);
            Vec v = add(sub(A.product.apply2(a, lin.apply1(b)), lin.apply1(A.product.apply2(a, b))),
                        A.product.apply2(lin.apply1(a), b));
            int idx[2] = {i, j};
            for (int o = 0; o < d; ++o) theta.at(idx, o) = v[static_cast<std::size_t>(o)];
        }
    return theta;
}

/* The (2,1) fixture used by the exhaustive searches: A = dual numbers,
 * B = the quotient module A/(eps). */
inline QuasiTwilledAlgebra quotient_module_21(const Field& f) {
    Algebra A = d2(f);
    MLMap tr(f, {2, 1}, 1), tl(f, {1, 2}, 1);
    tr.coeffs()[0] = Scalar::one(f);  // 1 |> x = x, eps |> x = 0
    tl.coeffs()[0] = Scalar::one(f);  // x <| 1 = x, x <| eps = 0
    return semidirect(A, 1, tr, tl);
}

/* A reusable zoo of validated fixtures over the given field. */
inline std::vector<QuasiTwilledAlgebra> fixture_zoo(const Field& f) {
    Algebra K = k1(f), N = n1(f), D = d2(f);
    std::vector<QuasiTwilledAlgebra> zoo;
    zoo.push_back(direct_product(K, K));
    zoo.push_back(direct_product(K, D));
    zoo.push_back(semidirect_regular(K));
    zoo.push_back(semidirect_regular(D));
    zoo.push_back(weight_one_regular(K));
    zoo.push_back(box(K));
    zoo.push_back(reynolds_shape(K));
    zoo.push_back(left_module_only(K, 1, K.product));
    zoo.push_back(right_module_only(K, 1, K.product));
    zoo.push_back(theta_twisted_semidirect(K, 1, K.product, K.product, -K.product));
    zoo.push_back(quotient_module_21(f));
    zoo.push_back(direct_product(N, K));
    return zoo;
}

}  // namespace qta::fixtures
