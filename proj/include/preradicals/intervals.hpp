#pragma once

#include "preradicals/rep.hpp"

#include <map>

namespace preradicals {

/// An interval [lo, hi] of vertices of a type-A quiver. The associated
/// representation has dimension 1 on the interval, 0 elsewhere, and
/// identity maps on the interior arrows.
struct Interval {
    int lo = 0;
    int hi = 0;

    auto operator<=>(const Interval&) const = default;
};

inline Rep interval_rep(const Quiver& q, int p, Interval iv) {
    require_type_a(q);
    if (iv.lo < 0 || iv.hi >= q.vertices || iv.lo > iv.hi)
        throw shape_error("interval out of range");
    std::vector<int> dims(q.vertices, 0);
    for (int v = iv.lo; v <= iv.hi; ++v)
        dims[v] = 1;
    std::vector<Matrix> arrows;
    for (auto [s, t] : q.arrows) {
        if (dims[s] && dims[t])
            arrows.push_back(Matrix::identity(1, p));
        else
            arrows.push_back(Matrix(dims[t], dims[s], p));
    }
    return Rep{q, p, std::move(dims), std::move(arrows)};
}

/// The complete list of indecomposables of a type-A quiver: all
/// n(n+1)/2 interval modules, ordered by (lo, hi). They are pairwise
/// non-isomorphic; Gabriel's classification makes the list exact.
inline std::vector<std::pair<Interval, Rep>> type_a_intervals(const Quiver& q, int p) {
    require_type_a(q);
    std::vector<std::pair<Interval, Rep>> out;
    for (int lo = 0; lo < q.vertices; ++lo)
        for (int hi = lo; hi < q.vertices; ++hi)
            out.emplace_back(Interval{lo, hi}, interval_rep(q, p, {lo, hi}));
    return out;
}

/// True iff End(X) contains no idempotent besides 0 and the identity.
/// Fast path: one-dimensional endomorphism ring. Otherwise a brute
/// force over F_p combinations of the End basis, guarded by limits.
inline bool is_indecomposable(const Rep& x, const Limits& limits = {}) {
    if (x.is_zero())
        return false; // by convention
    auto end_basis = hom_basis(x, x);
    if (end_basis.size() == 1)
        return true;
    std::int64_t combos = ipow(x.p, static_cast<int>(end_basis.size()));
    if (combos > limits.max_end_search)
        throw capacity_error("endomorphism idempotent search bound exceeded");
    const RepMorphism id = identity_morphism(x);
    const RepMorphism zero = zero_morphism(x, x);
    std::vector<int> coeff(end_basis.size(), 0);
    for (std::int64_t c = 0; c < combos; ++c) {
        RepMorphism e = zero;
        for (size_t k = 0; k < end_basis.size(); ++k)
            if (coeff[k])
                e = add_morphisms(e, RepMorphism{x, x, [&] {
                                      std::vector<Matrix> comps;
                                      for (const auto& m : end_basis[k].comp)
                                          comps.push_back(scale(coeff[k], m));
                                      return comps;
                                  }()});
        if (compose(e, e) == e && e != zero && e != id)
            return false;
        size_t k = 0;
        while (k < coeff.size() && coeff[k] == x.p - 1)
            coeff[k++] = 0;
        if (k < coeff.size())
            ++coeff[k];
    }
    return true;
}

/// Decomposition oracle for equioriented A_n via rank counts of the
/// composite maps: the multiplicity of [i, j] is
///     r(i,j) - r(i-1,j) - r(i,j+1) + r(i-1,j+1)
/// with r(i,j) the rank of the composite vertex i -> vertex j,
/// r(i,i) = dim at i, and out-of-range terms zero.
inline std::map<Interval, int> barcode_equioriented(const Rep& x) {
    if (!is_equioriented(x.q))
        throw shape_error("barcode: quiver is not equioriented type A");
    const int n = x.q.vertices;
    auto r = [&](int i, int j) -> int {
        if (i < 0 || j >= n || i > j)
            return 0;
        if (i == j)
            return x.dims[i];
        Matrix m = x.arrows[i]; // arrow i: i -> i+1
        for (int a = i + 1; a < j; ++a)
            m = mul(x.arrows[a], m);
        return rank(m);
    };
    std::map<Interval, int> out;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            int mult = r(i, j) - r(i - 1, j) - r(i, j + 1) + r(i - 1, j + 1);
            if (mult != 0)
                out[{i, j}] = mult;
        }
    return out;
}

} // namespace preradicals
