#pragma once

#include "preradicals/limits.hpp"
#include "preradicals/quiver.hpp"
#include "preradicals/subspace.hpp"

#include <numeric>
#include <tuple>
#include <vector>

namespace preradicals {

/// A representation of a quiver over F_p: one vector space dimension
/// per vertex and one matrix of shape dims[target] x dims[source] per
/// arrow. Immutable by convention after construction.
struct Rep {
    Quiver q;
    int p = 2;
    std::vector<int> dims;
    std::vector<Matrix> arrows;

    bool operator==(const Rep&) const = default;

    int total_dim() const { return std::accumulate(dims.begin(), dims.end(), 0); }
    bool is_zero() const { return total_dim() == 0; }
};

inline Rep make_rep(Quiver q, int p, std::vector<int> dims, std::vector<Matrix> arrows) {
    validate_quiver(q);
    if (static_cast<int>(dims.size()) != q.vertices)
        throw shape_error("rep: dims size differs from vertex count");
    if (arrows.size() != q.arrows.size())
        throw shape_error("rep: arrow map count differs from arrow count");
    for (size_t a = 0; a < arrows.size(); ++a) {
        auto [s, t] = q.arrows[a];
        if (arrows[a].rows != dims[t] || arrows[a].cols != dims[s] || arrows[a].p != p)
            throw shape_error("rep: arrow map shape mismatch at arrow " + std::to_string(a));
    }
    return Rep{std::move(q), p, std::move(dims), std::move(arrows)};
}

inline Rep zero_rep(const Quiver& q, int p) {
    std::vector<int> dims(q.vertices, 0);
    std::vector<Matrix> arrows(q.arrows.size(), Matrix(0, 0, p));
    return Rep{q, p, std::move(dims), std::move(arrows)};
}

/// An intertwining family of matrices between two representations of
/// the same quiver. Validated at construction.
struct RepMorphism {
    Rep source;
    Rep target;
    std::vector<Matrix> comp; // comp[v]: target.dims[v] x source.dims[v]

    bool operator==(const RepMorphism&) const = default;
};

inline bool intertwines(const Rep& x, const Rep& y, const std::vector<Matrix>& comp) {
    for (size_t a = 0; a < x.q.arrows.size(); ++a) {
        auto [s, t] = x.q.arrows[a];
        if (mul(y.arrows[a], comp[s]) != mul(comp[t], x.arrows[a]))
            return false;
    }
    return true;
}

inline RepMorphism make_morphism(Rep source, Rep target, std::vector<Matrix> comp) {
    if (source.q != target.q || source.p != target.p)
        throw shape_error("morphism: source and target live over different quivers or fields");
    if (static_cast<int>(comp.size()) != source.q.vertices)
        throw shape_error("morphism: component count differs from vertex count");
    for (int v = 0; v < source.q.vertices; ++v)
        if (comp[v].rows != target.dims[v] || comp[v].cols != source.dims[v] || comp[v].p != source.p)
            throw shape_error("morphism: component shape mismatch at vertex " + std::to_string(v));
    if (!intertwines(source, target, comp))
        throw shape_error("morphism: components do not intertwine the arrow maps");
    return RepMorphism{std::move(source), std::move(target), std::move(comp)};
}

inline RepMorphism identity_morphism(const Rep& x) {
    std::vector<Matrix> comp;
    comp.reserve(x.dims.size());
    for (int d : x.dims)
        comp.push_back(Matrix::identity(d, x.p));
    return RepMorphism{x, x, std::move(comp)};
}

inline RepMorphism zero_morphism(const Rep& x, const Rep& y) {
    std::vector<Matrix> comp;
    for (int v = 0; v < x.q.vertices; ++v)
        comp.emplace_back(y.dims[v], x.dims[v], x.p);
    return RepMorphism{x, y, std::move(comp)};
}

inline RepMorphism compose(const RepMorphism& g, const RepMorphism& f) {
    if (f.target != g.source)
        throw shape_error("compose: middle objects differ");
    std::vector<Matrix> comp;
    comp.reserve(f.comp.size());
    for (size_t v = 0; v < f.comp.size(); ++v)
        comp.push_back(mul(g.comp[v], f.comp[v]));
    return RepMorphism{f.source, g.target, std::move(comp)};
}

inline RepMorphism add_morphisms(const RepMorphism& f, const RepMorphism& g) {
    if (f.source != g.source || f.target != g.target)
        throw shape_error("add: morphisms with different endpoints");
    std::vector<Matrix> comp;
    for (size_t v = 0; v < f.comp.size(); ++v)
        comp.push_back(add(f.comp[v], g.comp[v]));
    return RepMorphism{f.source, f.target, std::move(comp)};
}

/// A tuple of subspaces, one per vertex, invariant under the arrow
/// maps of the ambient representation: the computable form of a
/// subobject.
struct Subrep {
    Rep ambient;
    std::vector<Subspace> spaces;

    bool operator==(const Subrep&) const = default;

    bool is_zero() const {
        for (const auto& s : spaces)
            if (!s.is_zero())
                return false;
        return true;
    }
    bool is_full() const {
        for (const auto& s : spaces)
            if (!s.is_full())
                return false;
        return true;
    }
    std::vector<int> dims() const {
        std::vector<int> d;
        d.reserve(spaces.size());
        for (const auto& s : spaces)
            d.push_back(s.dim());
        return d;
    }
};

inline bool arrow_invariant(const Rep& x, const std::vector<Subspace>& spaces) {
    for (size_t a = 0; a < x.q.arrows.size(); ++a) {
        auto [s, t] = x.q.arrows[a];
        if (!subspace_contains(spaces[t], push_subspace(x.arrows[a], spaces[s])))
            return false;
    }
    return true;
}

inline Subrep make_subrep(Rep ambient, std::vector<Subspace> spaces) {
    if (static_cast<int>(spaces.size()) != ambient.q.vertices)
        throw shape_error("subrep: space count differs from vertex count");
    for (int v = 0; v < ambient.q.vertices; ++v)
        if (spaces[v].ambient != ambient.dims[v] || spaces[v].p() != ambient.p)
            throw shape_error("subrep: ambient dimension mismatch at vertex " + std::to_string(v));
    if (!arrow_invariant(ambient, spaces))
        throw shape_error("subrep: spaces are not arrow-invariant");
    return Subrep{std::move(ambient), std::move(spaces)};
}

inline Subrep zero_subrep(const Rep& x) {
    std::vector<Subspace> spaces;
    for (int d : x.dims)
        spaces.push_back(Subspace::zero(d, x.p));
    return Subrep{x, std::move(spaces)};
}

inline Subrep full_subrep(const Rep& x) {
    std::vector<Subspace> spaces;
    for (int d : x.dims)
        spaces.push_back(Subspace::full(d, x.p));
    return Subrep{x, std::move(spaces)};
}

inline bool subrep_leq(const Subrep& a, const Subrep& b) {
    if (a.ambient != b.ambient)
        throw shape_error("subrep comparison: different ambient representations");
    for (size_t v = 0; v < a.spaces.size(); ++v)
        if (!subspace_contains(b.spaces[v], a.spaces[v]))
            return false;
    return true;
}

inline Subrep subrep_sum(const Subrep& a, const Subrep& b) {
    if (a.ambient != b.ambient)
        throw shape_error("subrep sum: different ambient representations");
    std::vector<Subspace> spaces;
    for (size_t v = 0; v < a.spaces.size(); ++v)
        spaces.push_back(subspace_sum(a.spaces[v], b.spaces[v]));
    return Subrep{a.ambient, std::move(spaces)};
}

inline Subrep subrep_intersect(const Subrep& a, const Subrep& b) {
    if (a.ambient != b.ambient)
        throw shape_error("subrep intersect: different ambient representations");
    std::vector<Subspace> spaces;
    for (size_t v = 0; v < a.spaces.size(); ++v)
        spaces.push_back(subspace_intersect(a.spaces[v], b.spaces[v]));
    return Subrep{a.ambient, std::move(spaces)};
}

// ---------------------------------------------------------------------------
// hom spaces
// ---------------------------------------------------------------------------

/// A basis of the intertwiner space Hom(X, Y), found as the nullspace
/// of the linear system collecting every intertwining constraint.
/// Deterministic ordering: unknowns are laid out vertex-major,
/// row-major inside each component, and the nullspace basis is
/// canonical.
inline std::vector<RepMorphism> hom_basis(const Rep& x, const Rep& y) {
    if (x.q != y.q || x.p != y.p)
        throw shape_error("hom: representations over different quivers or fields");
    const int n = x.q.vertices;
    std::vector<int> off(n + 1, 0);
    for (int v = 0; v < n; ++v)
        off[v + 1] = off[v] + y.dims[v] * x.dims[v];
    const int unknowns = off[n];
    if (unknowns == 0) {
        return {};
    }
    Field f(x.p);
    int eqs = 0;
    for (size_t a = 0; a < x.q.arrows.size(); ++a) {
        auto [s, t] = x.q.arrows[a];
        eqs += y.dims[t] * x.dims[s];
    }
    Matrix sys(eqs, unknowns, x.p);
    int row = 0;
    for (size_t a = 0; a < x.q.arrows.size(); ++a) {
        auto [s, t] = x.q.arrows[a];
        // Y_a comp_s - comp_t X_a = 0
        for (int i = 0; i < y.dims[t]; ++i)
            for (int j = 0; j < x.dims[s]; ++j) {
                for (int k = 0; k < y.dims[s]; ++k)
                    sys.at(row, off[s] + k * x.dims[s] + j) =
                        f.add(sys.at(row, off[s] + k * x.dims[s] + j), y.arrows[a].at(i, k));
                for (int k = 0; k < x.dims[t]; ++k)
                    sys.at(row, off[t] + i * x.dims[t] + k) =
                        f.sub(sys.at(row, off[t] + i * x.dims[t] + k), x.arrows[a].at(k, j));
                ++row;
            }
    }
    Subspace sol = eqs ? kernel_basis(sys) : Subspace::full(unknowns, x.p);
    std::vector<RepMorphism> basis;
    basis.reserve(sol.dim());
    for (int r = 0; r < sol.dim(); ++r) {
        std::vector<Matrix> comp;
        comp.reserve(n);
        for (int v = 0; v < n; ++v) {
            Matrix m(y.dims[v], x.dims[v], x.p);
            for (int i = 0; i < y.dims[v]; ++i)
                for (int j = 0; j < x.dims[v]; ++j)
                    m.at(i, j) = sol.basis.at(r, off[v] + i * x.dims[v] + j);
            comp.push_back(std::move(m));
        }
        basis.push_back(RepMorphism{x, y, std::move(comp)});
    }
    return basis;
}

inline int hom_dim(const Rep& x, const Rep& y) {
    return static_cast<int>(hom_basis(x, y).size());
}

// ---------------------------------------------------------------------------
// kernels, images, sub and quotient objects
// ---------------------------------------------------------------------------

inline Subrep kernel_subrep(const RepMorphism& fm) {
    std::vector<Subspace> spaces;
    for (const auto& c : fm.comp)
        spaces.push_back(kernel_basis(c));
    return make_subrep(fm.source, std::move(spaces));
}

inline Subrep image_subrep(const RepMorphism& fm) {
    std::vector<Subspace> spaces;
    for (const auto& c : fm.comp)
        spaces.push_back(image_basis(c));
    return make_subrep(fm.target, std::move(spaces));
}

/// Realize a subobject as an actual representation together with its
/// inclusion, with the restricted arrow maps expressed in the
/// canonical subspace bases.
inline std::pair<Rep, RepMorphism> sub_to_rep(const Subrep& w) {
    const Rep& amb = w.ambient;
    const int n = amb.q.vertices;
    std::vector<int> dims(n);
    std::vector<Matrix> incl(n);
    for (int v = 0; v < n; ++v) {
        dims[v] = w.spaces[v].dim();
        incl[v] = transpose(w.spaces[v].basis); // ambient_dim x sub_dim, columns are basis vectors
    }
    std::vector<Matrix> arrows;
    for (size_t a = 0; a < amb.q.arrows.size(); ++a) {
        auto [s, t] = amb.q.arrows[a];
        Matrix m(dims[t], dims[s], amb.p);
        for (int j = 0; j < dims[s]; ++j) {
            std::vector<int> basis_vec(w.spaces[s].basis.e.begin() + static_cast<size_t>(j) * amb.dims[s],
                                       w.spaces[s].basis.e.begin() + static_cast<size_t>(j + 1) * amb.dims[s]);
            std::vector<int> coords = coordinates_in(w.spaces[t], mul_vec(amb.arrows[a], basis_vec));
            for (int i = 0; i < dims[t]; ++i)
                m.at(i, j) = coords[i];
        }
        arrows.push_back(std::move(m));
    }
    Rep sub{amb.q, amb.p, std::move(dims), std::move(arrows)};
    return {sub, make_morphism(sub, amb, std::move(incl))};
}

namespace detail {

/// Projection matrix F_p^d -> F_p^(d-k) onto the complement-of-pivot
/// coordinates of the subspace with RREF basis `b`.
inline Matrix quotient_projection(const Subspace& w) {
    const int d = w.ambient;
    Field f(w.basis.p);
    std::vector<int> piv;
    for (int r = 0; r < w.basis.rows; ++r)
        for (int c = 0; c < d; ++c)
            if (w.basis.at(r, c)) {
                piv.push_back(c);
                break;
            }
    std::vector<int> nonpiv;
    for (int c = 0; c < d; ++c)
        if (std::find(piv.begin(), piv.end(), c) == piv.end())
            nonpiv.push_back(c);
    Matrix proj(static_cast<int>(nonpiv.size()), d, w.basis.p);
    for (int j = 0; j < d; ++j) {
        std::vector<int> e(d, 0);
        e[j] = 1;
        for (size_t r = 0; r < piv.size(); ++r)
            if (e[piv[r]]) {
                int factor = e[piv[r]];
                for (int c = 0; c < d; ++c)
                    e[c] = f.sub(e[c], f.mul(factor, w.basis.at(static_cast<int>(r), c)));
            }
        for (size_t i = 0; i < nonpiv.size(); ++i)
            proj.at(static_cast<int>(i), j) = e[nonpiv[i]];
    }
    return proj;
}

/// Right inverse of quotient_projection: quotient coordinate i lifts
/// to the i-th non-pivot standard basis vector.
inline Matrix quotient_section(const Subspace& w) {
    const int d = w.ambient;
    std::vector<int> piv;
    for (int r = 0; r < w.basis.rows; ++r)
        for (int c = 0; c < d; ++c)
            if (w.basis.at(r, c)) {
                piv.push_back(c);
                break;
            }
    std::vector<int> nonpiv;
    for (int c = 0; c < d; ++c)
        if (std::find(piv.begin(), piv.end(), c) == piv.end())
            nonpiv.push_back(c);
    Matrix sec(d, static_cast<int>(nonpiv.size()), w.basis.p);
    for (size_t i = 0; i < nonpiv.size(); ++i)
        sec.at(nonpiv[i], static_cast<int>(i)) = 1;
    return sec;
}

} // namespace detail

/// Quotient of X by an arrow-invariant subobject, with the canonical
/// surjection. kernel_subrep(projection) reproduces w.
inline std::pair<Rep, RepMorphism> quotient_rep(const Rep& x, const Subrep& w) {
    if (w.ambient != x)
        throw shape_error("quotient: subobject does not live in the given representation");
    const int n = x.q.vertices;
    std::vector<Matrix> proj(n), sec(n);
    std::vector<int> dims(n);
    for (int v = 0; v < n; ++v) {
        proj[v] = detail::quotient_projection(w.spaces[v]);
        sec[v] = detail::quotient_section(w.spaces[v]);
        dims[v] = proj[v].rows;
    }
    std::vector<Matrix> arrows;
    for (size_t a = 0; a < x.q.arrows.size(); ++a) {
        auto [s, t] = x.q.arrows[a];
        arrows.push_back(mul(proj[t], mul(x.arrows[a], sec[s])));
    }
    Rep quot{x.q, x.p, std::move(dims), std::move(arrows)};
    return {quot, make_morphism(x, quot, std::move(proj))};
}

struct DirectSum {
    Rep total;
    std::vector<RepMorphism> inclusions;
    std::vector<RepMorphism> projections;
};

inline DirectSum direct_sum(const std::vector<Rep>& parts, const Quiver& q, int p) {
    for (const auto& part : parts)
        if (part.q != q || part.p != p)
            throw shape_error("direct sum: parts over different quivers or fields");
    const int n = q.vertices;
    std::vector<int> dims(n, 0);
    for (const auto& part : parts)
        for (int v = 0; v < n; ++v)
            dims[v] += part.dims[v];
    std::vector<Matrix> arrows;
    for (size_t a = 0; a < q.arrows.size(); ++a) {
        auto [s, t] = q.arrows[a];
        Matrix block(dims[t], dims[s], p);
        int ro = 0, co = 0;
        for (const auto& part : parts) {
            for (int i = 0; i < part.dims[t]; ++i)
                for (int j = 0; j < part.dims[s]; ++j)
                    block.at(ro + i, co + j) = part.arrows[a].at(i, j);
            ro += part.dims[t];
            co += part.dims[s];
        }
        arrows.push_back(std::move(block));
    }
    Rep total{q, p, dims, std::move(arrows)};
    DirectSum out{total, {}, {}};
    std::vector<int> offset(n, 0);
    for (const auto& part : parts) {
        std::vector<Matrix> ic, pc;
        for (int v = 0; v < n; ++v) {
            Matrix inc(dims[v], part.dims[v], p), prj(part.dims[v], dims[v], p);
            for (int i = 0; i < part.dims[v]; ++i) {
                inc.at(offset[v] + i, i) = 1;
                prj.at(i, offset[v] + i) = 1;
            }
            ic.push_back(std::move(inc));
            pc.push_back(std::move(prj));
        }
        out.inclusions.push_back(make_morphism(part, total, std::move(ic)));
        out.projections.push_back(make_morphism(total, part, std::move(pc)));
        for (int v = 0; v < n; ++v)
            offset[v] += part.dims[v];
    }
    return out;
}

inline DirectSum direct_sum(const std::vector<Rep>& parts) {
    if (parts.empty())
        throw shape_error("direct sum of empty family needs an explicit quiver");
    return direct_sum(parts, parts.front().q, parts.front().p);
}

/// All arrow-invariant tuples of canonical subspaces.
inline std::vector<Subrep> enumerate_subreps(const Rep& x, const Limits& limits = {}) {
    const int n = x.q.vertices;
    std::vector<std::vector<Subspace>> cand(n);
    std::int64_t tuples = 1;
    for (int v = 0; v < n; ++v) {
        cand[v] = enumerate_subspaces(x.dims[v], x.p, limits);
        tuples *= static_cast<std::int64_t>(cand[v].size());
        if (tuples > limits.max_subrep_tuples)
            throw capacity_error("subrepresentation enumeration bound exceeded");
    }
    std::vector<Subrep> out;
    std::vector<size_t> idx(n, 0);
    while (true) {
        std::vector<Subspace> spaces;
        spaces.reserve(n);
        for (int v = 0; v < n; ++v)
            spaces.push_back(cand[v][idx[v]]);
        if (arrow_invariant(x, spaces))
            out.push_back(Subrep{x, std::move(spaces)});
        int v = n - 1;
        while (v >= 0 && ++idx[v] == cand[v].size())
            idx[v--] = 0;
        if (v < 0)
            break;
    }
    return out;
}

// ---------------------------------------------------------------------------
// duality with the opposite quiver
// ---------------------------------------------------------------------------

/// The dual representation over the opposite quiver: same dimensions,
/// transposed arrow maps attached to the reversed arrows. An exact
/// involution: dual_rep(dual_rep(x)) == x bit for bit.
inline Rep dual_rep(const Rep& x) {
    std::vector<Matrix> arrows;
    arrows.reserve(x.arrows.size());
    for (const auto& m : x.arrows)
        arrows.push_back(transpose(m));
    return Rep{opposite(x.q), x.p, x.dims, std::move(arrows)};
}

/// Contravariant action on morphisms: components transposed,
/// direction reversed.
inline RepMorphism dual_morphism(const RepMorphism& fm) {
    std::vector<Matrix> comp;
    comp.reserve(fm.comp.size());
    for (const auto& c : fm.comp)
        comp.push_back(transpose(c));
    return RepMorphism{dual_rep(fm.target), dual_rep(fm.source), std::move(comp)};
}

} // namespace preradicals
