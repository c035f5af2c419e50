#pragma once

/* Test-only oracles, kept independent of the implementation paths they
 * check. The Hochschild differential here is assembled from an explicit
 * product and bimodule actions, never from the deformation-map formulas. */

#include <functional>

#include "qta/matrix.hpp"
#include "qta/mlmap.hpp"

namespace qta::oracles {

/* delta f (x_1..x_{n+1}) = x_1 . f(...) + sum (-1)^i f(.., x_i x_{i+1}, ..)
 *                          + (-1)^{n+1} f(...) . x_{n+1} */
inline MLMap hochschild_delta(const MLMap& prod, const MLMap& left, const MLMap& right, const MLMap& f) {
    const Field F = f.field();
    const int x_dim = prod.out_dim(), m_dim = f.out_dim();
    const int n = f.arity();
    MLMap out(F, std::vector<int>(static_cast<std::size_t>(n) + 1, x_dim), m_dim);
    std::vector<int> tuple(static_cast<std::size_t>(n) + 1);
    const Scalar one = Scalar::one(F);
    for (std::size_t t = 0; t < out.tuple_count(); ++t) {
        out.unflatten(t, tuple);
        std::vector<Vec> args;
        for (int k = 0; k <= n; ++k) args.push_back(basis_vec(F, x_dim, tuple[static_cast<std::size_t>(k)]));
        Vec acc = left.apply2(args[0], f.apply(std::span<const Vec>(args.data() + 1, static_cast<std::size_t>(n))));
        for (int i = 1; i <= n; ++i) {
            std::vector<Vec> inner;
            for (int k = 0; k < i - 1; ++k) inner.push_back(args[static_cast<std::size_t>(k)]);
            inner.push_back(prod.apply2(args[static_cast<std::size_t>(i - 1)], args[static_cast<std::size_t>(i)]));
            for (int k = i + 1; k <= n; ++k) inner.push_back(args[static_cast<std::size_t>(k)]);
            Vec term = f.apply(inner);
            if (i % 2 != 0) term = scale(-one, term);
            acc = add(acc, term);
        }
        Vec tail = right.apply2(f.apply(std::span<const Vec>(args.data(), static_cast<std::size_t>(n))),
                                args[static_cast<std::size_t>(n)]);
        if ((n + 1) % 2 != 0) tail = scale(-one, tail);
        acc = add(acc, tail);
        for (int o = 0; o < m_dim; ++o) out.at_flat(t, o) = acc[static_cast<std::size_t>(o)];
    }
    return out;
}

/* Cohomology dimensions of the complex Hom(X^{x n}, M) under `delta`,
 * assembled and ranked here, independent of the library pipeline. */
inline std::vector<int> complex_dims(const Field& field, int x_dim, int m_dim, int max_degree,
                                     const std::function<MLMap(const MLMap&)>& delta) {
    std::vector<int> ranks, kers;
    for (int n = 0; n <= max_degree; ++n) {
        MLMap model(field, std::vector<int>(static_cast<std::size_t>(n), x_dim), m_dim);
        const std::size_t cols = model.coeffs().size();
        std::size_t rows = static_cast<std::size_t>(m_dim);
        for (int k = 0; k <= n; ++k) rows *= static_cast<std::size_t>(x_dim);
        Matrix M(field, static_cast<int>(rows), static_cast<int>(cols));
        for (std::size_t c = 0; c < cols; ++c) {
            MLMap e = model;
            e.coeffs()[c] = Scalar::one(field);
            MLMap de = delta(e);
            for (std::size_t r = 0; r < de.coeffs().size(); ++r)
                if (!de.coeffs()[r].is_zero()) M.at(static_cast<int>(r), static_cast<int>(c)) = de.coeffs()[r];
        }
        const int rk = rank(M);
        ranks.push_back(rk);
        kers.push_back(static_cast<int>(cols) - rk);
    }
    std::vector<int> dims;
    for (int n = 0; n <= max_degree; ++n)
        dims.push_back(kers[static_cast<std::size_t>(n)] - (n == 0 ? 0 : ranks[static_cast<std::size_t>(n - 1)]));
    return dims;
}

}  // namespace qta::oracles
