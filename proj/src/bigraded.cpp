#include "qta/bigraded.hpp"

#include "qta/error.hpp"

namespace qta {

namespace {

void check_space(const SplitSpace& s, const MLMap& f) {
    if (!f.is_square() || f.sq_dim() != s.total()) throw DimMismatch("map does not live on the split space");
}

int a_count(const SplitSpace& s, std::span<const int> tuple) {
    int c = 0;
    for (int i : tuple)
        if (s.in_a(i)) ++c;
    return c;
}

}  // namespace

std::optional<Bidegree> classify(const SplitSpace& s, const MLMap& f) {
    check_space(s, f);
    const int n = f.arity();
    std::optional<Bidegree> found;
    std::vector<int> tuple(static_cast<std::size_t>(n));
    for (std::size_t t = 0; t < f.tuple_count(); ++t) {
        f.unflatten(t, tuple);
        const int ca = a_count(s, tuple);
        for (int o = 0; o < s.total(); ++o) {
            if (f.at_flat(t, o).is_zero()) continue;
            const Bidegree d = slot_bidegree(n, ca, s.in_a(o));
            if (found && !(*found == d)) return std::nullopt;
            found = d;
        }
    }
    return found;  // nullopt for the zero map
}

MLMap project(const SplitSpace& s, const MLMap& f, Bidegree d) {
    check_space(s, f);
    const int n = f.arity();
    MLMap r = MLMap::square(f.field(), s.total(), n);
    std::vector<int> tuple(static_cast<std::size_t>(n));
    for (std::size_t t = 0; t < f.tuple_count(); ++t) {
        f.unflatten(t, tuple);
        const int ca = a_count(s, tuple);
        for (int o = 0; o < s.total(); ++o) {
            if (f.at_flat(t, o).is_zero()) continue;
            if (slot_bidegree(n, ca, s.in_a(o)) == d) r.at_flat(t, o) = f.at_flat(t, o);
        }
    }
    return r;
}

bool in_subalgebra(const SplitSpace& s, const MLMap& f, Strata which) {
    check_space(s, f);
    const int n = f.arity();
    std::vector<int> tuple(static_cast<std::size_t>(n));
    for (std::size_t t = 0; t < f.tuple_count(); ++t) {
        f.unflatten(t, tuple);
        const int ca = a_count(s, tuple);
        for (int o = 0; o < s.total(); ++o) {
            if (f.at_flat(t, o).is_zero()) continue;
            const Bidegree d = slot_bidegree(n, ca, s.in_a(o));
            const bool low = d.k == -1;   // C^{-1|n}
            const bool high = d.l == -1;  // C^{n|-1}
            if (which == Strata::Q && low) return false;
            if (which == Strata::R && high) return false;
            if (which == Strata::M && (low || high)) return false;
        }
    }
    return true;
}

MLMap proj_a(const SplitSpace& s, const MLMap& f) {
    check_space(s, f);
    const int n = f.arity();
    MLMap r = MLMap::square(f.field(), s.total(), n);
    std::vector<int> tuple(static_cast<std::size_t>(n));
    for (std::size_t t = 0; t < f.tuple_count(); ++t) {
        f.unflatten(t, tuple);
        if (a_count(s, tuple) != n) continue;
        for (int o = s.dim_a; o < s.total(); ++o) r.at_flat(t, o) = f.at_flat(t, o);
    }
    return r;
}

MLMap proj_b(const SplitSpace& s, const MLMap& f) {
    check_space(s, f);
    const int n = f.arity();
    MLMap r = MLMap::square(f.field(), s.total(), n);
    std::vector<int> tuple(static_cast<std::size_t>(n));
    for (std::size_t t = 0; t < f.tuple_count(); ++t) {
        f.unflatten(t, tuple);
        if (a_count(s, tuple) != 0) continue;
        for (int o = 0; o < s.dim_a; ++o) r.at_flat(t, o) = f.at_flat(t, o);
    }
    return r;
}

HatMaps hat_components(const SplitSpace& s, const MLMap& mu, const MLMap& nu, const MLMap& tr, const MLMap& tl,
                       const MLMap& rh, const MLMap& lh, const MLMap& theta) {
    const Field f = mu.field();
    const int da = s.dim_a, db = s.dim_b, d = s.total();
    auto expect = [&](const MLMap& m, int i1, int i2, int out, const char* name) {
        if (m.arity() != 2 || m.in_dims()[0] != i1 || m.in_dims()[1] != i2 || m.out_dim() != out)
            throw DimMismatch(std::string("hat_components: bad shape for ") + name);
    };
    expect(mu, da, da, da, "mu");
    expect(nu, db, db, db, "nu");
    expect(tr, da, db, db, "tr");
    expect(tl, db, da, db, "tl");
    expect(rh, db, da, da, "rh");
    expect(lh, da, db, da, "lh");
    expect(theta, da, da, db, "theta");

    HatMaps h{MLMap::square(f, d, 2), MLMap::square(f, d, 2), MLMap::square(f, d, 2)};
    int tuple[2];
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            tuple[0] = i;
            tuple[1] = j;
            const bool ia = s.in_a(i), ja = s.in_a(j);
            const int li = ia ? i : i - da, lj = ja ? j : j - da;
            int sub[2] = {li, lj};
            if (ia && ja) {
                for (int o = 0; o < da; ++o) h.mu_hat.at(tuple, o) = mu.at(sub, o);
                for (int o = 0; o < db; ++o) h.theta_tilde.at(tuple, da + o) = theta.at(sub, o);
            } else if (ia && !ja) {
                for (int o = 0; o < db; ++o) h.mu_hat.at(tuple, da + o) = tr.at(sub, o);  // a |> y
                for (int o = 0; o < da; ++o) h.nu_hat.at(tuple, o) = lh.at(sub, o);       // a <- y
            } else if (!ia && ja) {
                for (int o = 0; o < db; ++o) h.mu_hat.at(tuple, da + o) = tl.at(sub, o);  // x <| b
                for (int o = 0; o < da; ++o) h.nu_hat.at(tuple, o) = rh.at(sub, o);       // x -> b
            } else {
                for (int o = 0; o < db; ++o) h.nu_hat.at(tuple, da + o) = nu.at(sub, o);
            }
        }
    }
    return h;
}

MLMap embed_hom_ab(const SplitSpace& s, const MLMap& f) {
    const int n = f.arity();
    for (int d : f.in_dims())
        if (d != s.dim_a) throw DimMismatch("embed_hom_ab: input dims must equal dim A");
    if (f.out_dim() != s.dim_b) throw DimMismatch("embed_hom_ab: output dim must equal dim B");
    MLMap r = MLMap::square(f.field(), s.total(), n);
    std::vector<int> tuple(static_cast<std::size_t>(n));
    for (std::size_t t = 0; t < f.tuple_count(); ++t) {
        f.unflatten(t, tuple);  // indices already < dim_a
        for (int o = 0; o < s.dim_b; ++o) r.at(tuple, s.dim_a + o) = f.at_flat(t, o);
    }
    return r;
}

MLMap embed_hom_ba(const SplitSpace& s, const MLMap& f) {
    const int n = f.arity();
    for (int d : f.in_dims())
        if (d != s.dim_b) throw DimMismatch("embed_hom_ba: input dims must equal dim B");
    if (f.out_dim() != s.dim_a) throw DimMismatch("embed_hom_ba: output dim must equal dim A");
    MLMap r = MLMap::square(f.field(), s.total(), n);
    std::vector<int> small(static_cast<std::size_t>(n)), big(static_cast<std::size_t>(n));
    for (std::size_t t = 0; t < f.tuple_count(); ++t) {
        f.unflatten(t, small);
        for (int k = 0; k < n; ++k) big[static_cast<std::size_t>(k)] = s.dim_a + small[static_cast<std::size_t>(k)];
        for (int o = 0; o < s.dim_a; ++o) r.at(big, o) = f.at_flat(t, o);
    }
    return r;
}

MLMap extract_hom_ab(const SplitSpace& s, const MLMap& f) {
    check_space(s, f);
    const int n = f.arity();
    MLMap r(f.field(), std::vector<int>(static_cast<std::size_t>(n), s.dim_a), s.dim_b);
    std::vector<int> small(static_cast<std::size_t>(n));
    for (std::size_t t = 0; t < r.tuple_count(); ++t) {
        r.unflatten(t, small);
        for (int o = 0; o < s.dim_b; ++o) r.at_flat(t, o) = f.at(small, s.dim_a + o);
    }
    return r;
}

MLMap shear_conjugate(const MLMap& m, const MLMap& n) {
    if (m.arity() != 2 || !m.is_square() || n.arity() != 1 || !n.is_square() || m.sq_dim() != n.sq_dim())
        throw DimMismatch("shear_conjugate: need a bilinear map and an arity-1 map on one space");
    if (!circle(n, n).is_zero()) throw DimMismatch("shear_conjugate: shear is not square-zero");
    const Field& f = m.field();
    const int d = m.sq_dim();
    const MLMap id = identity_map(f, d);
    const MLMap phi = id + n;
    const MLMap phi_inv = id - n;
    MLMap out = MLMap::square(f, d, 2);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            int ii[1] = {i}, jj[1] = {j};
            Vec w = phi_inv.apply1(m.apply2(phi.value(ii), phi.value(jj)));
            int idx[2] = {i, j};
            for (int o = 0; o < d; ++o) out.at(idx, o) = w[static_cast<std::size_t>(o)];
        }
    return out;
}

MLMap extract_hom_ba(const SplitSpace& s, const MLMap& f) {
    check_space(s, f);
    const int n = f.arity();
    MLMap r(f.field(), std::vector<int>(static_cast<std::size_t>(n), s.dim_b), s.dim_a);
    std::vector<int> small(static_cast<std::size_t>(n)), big(static_cast<std::size_t>(n));
    for (std::size_t t = 0; t < r.tuple_count(); ++t) {
        r.unflatten(t, small);
        for (int k = 0; k < n; ++k) big[static_cast<std::size_t>(k)] = s.dim_a + small[static_cast<std::size_t>(k)];
        for (int o = 0; o < s.dim_a; ++o) r.at_flat(t, o) = f.at(big, o);
    }
    return r;
}

}  // namespace qta
