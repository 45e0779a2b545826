#pragma once

#include "preradicals/preradical.hpp"
#include "preradicals/report.hpp"

#include <functional>
#include <memory>
#include <string>

namespace preradicals {

/// An additive functor between quiver-representation categories,
/// given by its object and morphism actions. Functoriality and
/// additivity are spot-tested, not enforced per call.
struct AdditiveFunctor {
    Quiver source;
    Quiver target;
    int p = 2;
    std::string descriptor;
    std::function<Rep(const Rep&)> on_object;
    std::function<RepMorphism(const RepMorphism&)> on_morphism;
};

/// An adjoint pair (F left, G right) with unit and counit evaluators.
/// The triangular identities are checked by check_triangles.
struct AdjointPair {
    AdditiveFunctor F; // source category -> target category
    AdditiveFunctor G; // target category -> source category
    std::function<RepMorphism(const Rep&)> unit;   // eta_A  : A -> G F A
    std::function<RepMorphism(const Rep&)> counit; // eps_B : F G B -> B
    std::string descriptor;
};

// ---------------------------------------------------------------------------
// restriction along a full type-A subquiver inclusion
// ---------------------------------------------------------------------------

namespace detail {

/// subset must be a nonempty contiguous, sorted range of vertices of a
/// type-A quiver, so that the induced full subquiver is again type A.
inline void require_valid_subset(const Quiver& q, const std::vector<int>& subset) {
    require_type_a(q);
    if (subset.empty())
        throw shape_error("vertex subset must be nonempty");
    for (size_t i = 0; i < subset.size(); ++i) {
        if (subset[i] < 0 || subset[i] >= q.vertices)
            throw shape_error("vertex subset out of range");
        if (i > 0 && subset[i] != subset[i - 1] + 1)
            throw shape_error("vertex subset must induce a full type-A subquiver "
                              "(a contiguous segment)");
    }
}

inline Quiver induced_subquiver(const Quiver& q, const std::vector<int>& subset) {
    require_valid_subset(q, subset);
    Quiver sub;
    sub.vertices = static_cast<int>(subset.size());
    const int base = subset.front();
    for (auto [s, t] : q.arrows)
        if (s >= subset.front() && s <= subset.back() && t >= subset.front() && t <= subset.back())
            sub.arrows.emplace_back(s - base, t - base);
    return sub;
}

/// Composite of the arrow matrices of `x` along a path (arrow indices
/// in traversal order). The empty path is the identity at `at`.
inline Matrix path_action(const Rep& x, const std::vector<int>& path, int at) {
    Matrix m = Matrix::identity(x.dims[at], x.p);
    for (int a : path)
        m = mul(x.arrows[a], m);
    return m;
}

/// Pointwise data for the left Kan extension along a contiguous
/// inclusion: at each vertex v of the big quiver, the finite comma
/// category whose objects are pairs (subset position, path into v),
/// and whose morphisms are the connecting subset paths. The colimit is
/// the cokernel of the difference map over the comma morphisms.
struct LanData {
    Quiver q;
    std::vector<int> subset;
    Quiver subq;
    int p = 2;
    // per vertex of q: comma objects (subset position, path of q-arrow indices)
    std::vector<std::vector<std::pair<int, std::vector<int>>>> comma;
    // per vertex of q: comma morphisms (from object, to object, path of subq-arrow indices)
    std::vector<std::vector<std::tuple<int, int, std::vector<int>>>> comma_mor;
};

inline std::shared_ptr<const LanData> make_lan_data(const Quiver& q, std::vector<int> subset, int p) {
    auto data = std::make_shared<LanData>();
    data->q = q;
    data->subset = std::move(subset);
    data->subq = induced_subquiver(q, data->subset);
    data->p = p;
    data->comma.resize(q.vertices);
    data->comma_mor.resize(q.vertices);
    const int base = data->subset.front();
    for (int v = 0; v < q.vertices; ++v) {
        for (size_t i = 0; i < data->subset.size(); ++i)
            if (auto path = find_path(q, data->subset[i], v))
                data->comma[v].emplace_back(static_cast<int>(i), *path);
        auto& objs = data->comma[v];
        for (size_t o1 = 0; o1 < objs.size(); ++o1)
            for (size_t o2 = 0; o2 < objs.size(); ++o2) {
                if (o1 == o2)
                    continue;
                int s1 = data->subset[objs[o1].first], s2 = data->subset[objs[o2].first];
                if (auto m = find_path(q, s1, s2)) {
                    // a path between subset vertices stays inside the segment;
                    // reindex its arrows into the subquiver
                    std::vector<int> sub_path;
                    for (int a : *m) {
                        auto [as, at] = q.arrows[a];
                        int idx = -1;
                        for (size_t b = 0; b < data->subq.arrows.size(); ++b)
                            if (data->subq.arrows[b] == std::pair{as - base, at - base})
                                idx = static_cast<int>(b);
                        if (idx < 0)
                            throw std::logic_error(
                                "internal error: subset path leaves the induced subquiver");
                        sub_path.push_back(idx);
                    }
                    data->comma_mor[v].emplace_back(static_cast<int>(o1), static_cast<int>(o2), sub_path);
                }
            }
    }
    return data;
}

/// Colimit presentation at one vertex for a representation of the
/// subquiver: total space, relation subspace, projection and section.
struct ColimitSlice {
    std::vector<int> offsets; // per comma object, into the total space
    int total_dim = 0;
    Matrix projection; // total -> colimit coordinates
    Matrix section;    // colimit coordinates -> total
};

inline ColimitSlice colimit_slice(const LanData& data, const Rep& v_rep, int vertex) {
    ColimitSlice slice;
    const auto& objs = data.comma[vertex];
    for (const auto& [pos, path] : objs) {
        slice.offsets.push_back(slice.total_dim);
        slice.total_dim += v_rep.dims[pos];
    }
    std::vector<std::vector<int>> relations;
    for (const auto& [o1, o2, sub_path] : data.comma_mor[vertex]) {
        int s1 = objs[o1].first;
        Matrix act = path_action(v_rep, sub_path, s1);
        for (int j = 0; j < v_rep.dims[s1]; ++j) {
            std::vector<int> rel(slice.total_dim, 0);
            Field f(data.p);
            rel[slice.offsets[o1] + j] = f.neg(1);
            for (int i = 0; i < act.rows; ++i)
                rel[slice.offsets[o2] + i] = f.add(rel[slice.offsets[o2] + i], act.at(i, j));
            relations.push_back(std::move(rel));
        }
    }
    Matrix rel_rows(static_cast<int>(relations.size()), slice.total_dim, data.p);
    for (size_t r = 0; r < relations.size(); ++r)
        for (int c = 0; c < slice.total_dim; ++c)
            rel_rows.at(static_cast<int>(r), c) = relations[r][c];
    Subspace rel_space = Subspace::span(slice.total_dim, std::move(rel_rows));
    slice.projection = quotient_projection(rel_space);
    slice.section = quotient_section(rel_space);
    return slice;
}

inline Rep lan_object(const LanData& data, const Rep& v_rep) {
    if (v_rep.q != data.subq || v_rep.p != data.p)
        throw shape_error("lan: representation not over the subquiver");
    std::vector<ColimitSlice> slices;
    for (int v = 0; v < data.q.vertices; ++v)
        slices.push_back(colimit_slice(data, v_rep, v));
    std::vector<int> dims;
    for (const auto& s : slices)
        dims.push_back(s.projection.rows);
    std::vector<Matrix> arrows;
    for (size_t a = 0; a < data.q.arrows.size(); ++a) {
        auto [s, t] = data.q.arrows[a];
        // total-space map: comma object (pos, path) at s goes to (pos, path + a) at t
        Matrix tot(slices[t].total_dim, slices[s].total_dim, data.p);
        for (size_t o = 0; o < data.comma[s].size(); ++o) {
            auto extended = data.comma[s][o].second;
            extended.push_back(static_cast<int>(a));
            int target_obj = -1;
            for (size_t o2 = 0; o2 < data.comma[t].size(); ++o2)
                if (data.comma[t][o2].first == data.comma[s][o].first &&
                    data.comma[t][o2].second == extended)
                    target_obj = static_cast<int>(o2);
            if (target_obj < 0)
                throw std::logic_error("internal error: comma object missing after post-composition");
            int d = v_rep.dims[data.comma[s][o].first];
            for (int i = 0; i < d; ++i)
                tot.at(slices[t].offsets[target_obj] + i, slices[s].offsets[o] + i) = 1;
        }
        arrows.push_back(mul(slices[t].projection, mul(tot, slices[s].section)));
    }
    return Rep{data.q, data.p, std::move(dims), std::move(arrows)};
}

inline RepMorphism lan_morphism(const LanData& data, const RepMorphism& f) {
    Rep fx = lan_object(data, f.source), fy = lan_object(data, f.target);
    std::vector<Matrix> comp;
    for (int v = 0; v < data.q.vertices; ++v) {
        ColimitSlice sx = colimit_slice(data, f.source, v);
        ColimitSlice sy = colimit_slice(data, f.target, v);
        Matrix tot(sy.total_dim, sx.total_dim, data.p);
        for (size_t o = 0; o < data.comma[v].size(); ++o) {
            int pos = data.comma[v][o].first;
            const Matrix& block = f.comp[pos];
            for (int i = 0; i < block.rows; ++i)
                for (int j = 0; j < block.cols; ++j)
                    tot.at(sy.offsets[o] + i, sx.offsets[o] + j) = block.at(i, j);
        }
        comp.push_back(mul(sy.projection, mul(tot, sx.section)));
    }
    return make_morphism(fx, fy, std::move(comp));
}

} // namespace detail

/// The exact restriction functor along a full type-A subquiver
/// inclusion: drop the vertices and arrows outside the subset.
inline AdditiveFunctor restriction_functor(const Quiver& q, const std::vector<int>& subset, int p) {
    detail::require_valid_subset(q, subset);
    Quiver subq = detail::induced_subquiver(q, subset);
    AdditiveFunctor g;
    g.source = q;
    g.target = subq;
    g.p = p;
    g.descriptor = "restriction";
    const int base = subset.front();
    const int count = static_cast<int>(subset.size());
    auto restrict_rep = [q, subq, p, base, count](const Rep& x) {
        if (x.q != q || x.p != p)
            throw shape_error("restriction: representation over the wrong quiver");
        std::vector<int> dims(x.dims.begin() + base, x.dims.begin() + base + count);
        std::vector<Matrix> arrows;
        for (size_t a = 0; a < q.arrows.size(); ++a) {
            auto [s, t] = q.arrows[a];
            if (s >= base && s < base + count && t >= base && t < base + count)
                arrows.push_back(x.arrows[a]);
        }
        return Rep{subq, p, std::move(dims), std::move(arrows)};
    };
    g.on_object = restrict_rep;
    g.on_morphism = [restrict_rep, base, count](const RepMorphism& f) {
        std::vector<Matrix> comp(f.comp.begin() + base, f.comp.begin() + base + count);
        return make_morphism(restrict_rep(f.source), restrict_rep(f.target), std::move(comp));
    };
    return g;
}

/// Left Kan extension along the inclusion of a full type-A subquiver,
/// computed vertexwise as the cokernel presentation of the finite
/// comma-category colimit.
inline AdditiveFunctor lan_functor(const Quiver& q, const std::vector<int>& subset, int p) {
    auto data = detail::make_lan_data(q, subset, p);
    AdditiveFunctor f;
    f.source = data->subq;
    f.target = q;
    f.p = p;
    f.descriptor = "lan";
    f.on_object = [data](const Rep& x) { return detail::lan_object(*data, x); };
    f.on_morphism = [data](const RepMorphism& m) { return detail::lan_morphism(*data, m); };
    return f;
}

/// The adjoint pair (Lan, restriction) along a full type-A subquiver
/// inclusion. Unit components are the colimit insertions at the subset
/// vertices; counit components are induced by the path actions.
inline AdjointPair lan_res_adjunction(const Quiver& q, const std::vector<int>& subset, int p) {
    auto data = detail::make_lan_data(q, subset, p);
    AdjointPair adj;
    adj.F = lan_functor(q, subset, p);
    adj.G = restriction_functor(q, subset, p);
    adj.descriptor = "lan-res";
    AdditiveFunctor F = adj.F, G = adj.G;
    adj.unit = [data, F, G](const Rep& a) {
        Rep gfa = G.on_object(F.on_object(a));
        std::vector<Matrix> comp;
        for (size_t i = 0; i < data->subset.size(); ++i) {
            int v = data->subset[i];
            detail::ColimitSlice slice = detail::colimit_slice(*data, a, v);
            int obj = -1;
            for (size_t o = 0; o < data->comma[v].size(); ++o)
                if (data->comma[v][o].first == static_cast<int>(i) && data->comma[v][o].second.empty())
                    obj = static_cast<int>(o);
            Matrix ins(slice.total_dim, a.dims[i], data->p);
            for (int j = 0; j < a.dims[i]; ++j)
                ins.at(slice.offsets[obj] + j, j) = 1;
            comp.push_back(mul(slice.projection, ins));
        }
        return make_morphism(a, gfa, std::move(comp));
    };
    adj.counit = [data, F, G](const Rep& b) {
        Rep res_b = G.on_object(b);
        Rep fgb = F.on_object(res_b);
        std::vector<Matrix> comp;
        for (int v = 0; v < data->q.vertices; ++v) {
            detail::ColimitSlice slice = detail::colimit_slice(*data, res_b, v);
            Matrix tot(b.dims[v], slice.total_dim, data->p);
            for (size_t o = 0; o < data->comma[v].size(); ++o) {
                int s = data->subset[data->comma[v][o].first];
                Matrix act = detail::path_action(b, data->comma[v][o].second, s);
                for (int i = 0; i < act.rows; ++i)
                    for (int j = 0; j < act.cols; ++j)
                        tot.at(i, slice.offsets[o] + j) = act.at(i, j);
            }
            comp.push_back(mul(tot, slice.section));
        }
        return make_morphism(fgb, b, std::move(comp));
    };
    return adj;
}

// ---------------------------------------------------------------------------
// equivalences from quiver isomorphisms
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<int> arrow_bijection(const Quiver& q1, const Quiver& q2, const std::vector<int>& vmap) {
    if (static_cast<int>(vmap.size()) != q1.vertices || q1.vertices != q2.vertices ||
        q1.arrows.size() != q2.arrows.size())
        throw shape_error("quiver isomorphism: size mismatch");
    std::vector<bool> hit(q1.vertices, false);
    for (int v : vmap) {
        if (v < 0 || v >= q2.vertices || hit[v])
            throw shape_error("quiver isomorphism: vertex map is not a bijection");
        hit[v] = true;
    }
    std::vector<int> amap(q1.arrows.size(), -1);
    std::vector<bool> used(q2.arrows.size(), false);
    for (size_t a = 0; a < q1.arrows.size(); ++a) {
        auto want = std::pair{vmap[q1.arrows[a].first], vmap[q1.arrows[a].second]};
        for (size_t b = 0; b < q2.arrows.size(); ++b)
            if (!used[b] && q2.arrows[b] == want) {
                amap[a] = static_cast<int>(b);
                used[b] = true;
                break;
            }
        if (amap[a] < 0)
            throw shape_error("quiver isomorphism: vertex map does not carry arrows to arrows");
    }
    return amap;
}

inline AdditiveFunctor relabel_functor(const Quiver& q1, const Quiver& q2, const std::vector<int>& vmap) {
    auto amap = arrow_bijection(q1, q2, vmap);
    AdditiveFunctor f;
    f.source = q1;
    f.target = q2;
    f.descriptor = "iso-equivalence";
    auto relabel_rep = [q1, q2, vmap, amap](const Rep& x) {
        if (x.q != q1)
            throw shape_error("relabel: representation over the wrong quiver");
        std::vector<int> dims(q2.vertices, 0);
        for (int v = 0; v < q1.vertices; ++v)
            dims[vmap[v]] = x.dims[v];
        std::vector<Matrix> arrows(q2.arrows.size());
        for (size_t a = 0; a < q1.arrows.size(); ++a)
            arrows[amap[a]] = x.arrows[a];
        return Rep{q2, x.p, std::move(dims), std::move(arrows)};
    };
    f.on_object = relabel_rep;
    f.on_morphism = [relabel_rep, q2, vmap](const RepMorphism& m) {
        std::vector<Matrix> comp(q2.vertices);
        for (size_t v = 0; v < vmap.size(); ++v)
            comp[vmap[v]] = m.comp[v];
        return make_morphism(relabel_rep(m.source), relabel_rep(m.target), std::move(comp));
    };
    return f;
}

} // namespace detail

/// The equivalence induced by a quiver isomorphism, as an adjoint pair
/// with identity unit and counit.
inline AdjointPair equivalence_from_iso(const Quiver& q1, const Quiver& q2, const std::vector<int>& vmap,
                                        int p) {
    validate_quiver(q1);
    validate_quiver(q2);
    std::vector<int> inverse(vmap.size());
    detail::arrow_bijection(q1, q2, vmap); // validates
    for (size_t v = 0; v < vmap.size(); ++v)
        inverse[vmap[v]] = static_cast<int>(v);
    AdjointPair adj;
    adj.F = detail::relabel_functor(q1, q2, vmap);
    adj.G = detail::relabel_functor(q2, q1, inverse);
    adj.F.p = adj.G.p = p;
    adj.descriptor = "iso";
    AdditiveFunctor F = adj.F, G = adj.G;
    adj.unit = [F, G](const Rep& a) {
        Rep gfa = G.on_object(F.on_object(a));
        return make_morphism(a, gfa, identity_morphism(a).comp);
    };
    adj.counit = [F, G](const Rep& b) {
        Rep fgb = F.on_object(G.on_object(b));
        return make_morphism(fgb, b, identity_morphism(b).comp);
    };
    return adj;
}

// ---------------------------------------------------------------------------
// composites and opposites
// ---------------------------------------------------------------------------

inline AdjointPair compose_adjunctions(const AdjointPair& outer, const AdjointPair& inner) {
    if (inner.F.target != outer.F.source)
        throw shape_error("compose: adjunctions do not chain");
    AdjointPair adj;
    adj.descriptor = outer.descriptor + "*" + inner.descriptor;
    adj.F.source = inner.F.source;
    adj.F.target = outer.F.target;
    adj.F.p = inner.F.p;
    adj.F.descriptor = "composite";
    AdditiveFunctor f1 = inner.F, f2 = outer.F, g1 = inner.G, g2 = outer.G;
    adj.F.on_object = [f1, f2](const Rep& x) { return f2.on_object(f1.on_object(x)); };
    adj.F.on_morphism = [f1, f2](const RepMorphism& m) { return f2.on_morphism(f1.on_morphism(m)); };
    adj.G.source = outer.G.source;
    adj.G.target = inner.G.target;
    adj.G.p = inner.G.p;
    adj.G.descriptor = "composite";
    adj.G.on_object = [g1, g2](const Rep& x) { return g1.on_object(g2.on_object(x)); };
    adj.G.on_morphism = [g1, g2](const RepMorphism& m) { return g1.on_morphism(g2.on_morphism(m)); };
    auto unit1 = inner.unit, unit2 = outer.unit;
    auto counit1 = inner.counit, counit2 = outer.counit;
    adj.unit = [f1, g1, unit1, unit2](const Rep& a) {
        RepMorphism eta1 = unit1(a);
        RepMorphism eta2 = unit2(f1.on_object(a));
        return compose(g1.on_morphism(eta2), eta1);
    };
    adj.counit = [f2, g2, counit1, counit2](const Rep& c) {
        RepMorphism eps1 = counit1(g2.on_object(c));
        RepMorphism eps2 = counit2(c);
        return compose(eps2, f2.on_morphism(eps1));
    };
    return adj;
}

namespace detail {

/// Conjugate a functor by the dualities on both sides: the lift of H
/// to the opposite categories, realized on representations of the
/// opposite quivers.
inline AdditiveFunctor opposite_lift(const AdditiveFunctor& h) {
    AdditiveFunctor out;
    out.source = opposite(h.source);
    out.target = opposite(h.target);
    out.p = h.p;
    out.descriptor = "opposite-lift(" + h.descriptor + ")";
    auto obj = h.on_object;
    auto mor = h.on_morphism;
    out.on_object = [obj](const Rep& x) { return dual_rep(obj(dual_rep(x))); };
    out.on_morphism = [mor](const RepMorphism& m) { return dual_morphism(mor(dual_morphism(m))); };
    return out;
}

} // namespace detail

/// The adjoint pair (G^op, F^op) between the opposite categories:
/// unit and counit are the duals of the original counit and unit.
inline AdjointPair opposite_adjunction(const AdjointPair& adj) {
    AdjointPair op;
    op.descriptor = "opposite(" + adj.descriptor + ")";
    op.F = detail::opposite_lift(adj.G); // left adjoint: B^op -> A^op
    op.G = detail::opposite_lift(adj.F);
    auto unit = adj.unit, counit = adj.counit;
    op.unit = [counit](const Rep& b_op) { return dual_morphism(counit(dual_rep(b_op))); };
    op.counit = [unit](const Rep& a_op) { return dual_morphism(unit(dual_rep(a_op))); };
    return op;
}

// ---------------------------------------------------------------------------
// units, counits, triangles
// ---------------------------------------------------------------------------

inline RepMorphism unit(const AdjointPair& adj, const Rep& a) {
    if (a.q != adj.F.source)
        throw shape_error("unit: object over the wrong quiver");
    return adj.unit(a);
}

inline RepMorphism counit(const AdjointPair& adj, const Rep& b) {
    if (b.q != adj.F.target)
        throw shape_error("counit: object over the wrong quiver");
    return adj.counit(b);
}

/// (eps F)(F eta) = 1_F on the source samples and
/// (G eps)(eta G) = 1_G on the target samples.
inline bool check_triangles(const AdjointPair& adj, const std::vector<Rep>& source_samples,
                            const std::vector<Rep>& target_samples) {
    for (const Rep& a : source_samples) {
        RepMorphism f_eta = adj.F.on_morphism(adj.unit(a));
        RepMorphism eps_f = adj.counit(adj.F.on_object(a));
        if (compose(eps_f, f_eta) != identity_morphism(adj.F.on_object(a)))
            return false;
    }
    for (const Rep& b : target_samples) {
        RepMorphism eta_g = adj.unit(adj.G.on_object(b));
        RepMorphism g_eps = adj.G.on_morphism(adj.counit(b));
        if (compose(g_eps, eta_g) != identity_morphism(adj.G.on_object(b)))
            return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// the induced Galois connection
// ---------------------------------------------------------------------------

/// phi(tau) = Im(eps . F tau G), assembled per indecomposable of the
/// target category.
inline Preradical phi(const AdjointPair& adj, const Preradical& tau) {
    if (tau.q != adj.F.source || tau.p != adj.F.p)
        throw shape_error("phi: preradical over the wrong quiver or field");
    Preradical out;
    out.q = adj.F.target;
    out.p = tau.p;
    for (auto& [iv, b_rep] : type_a_intervals(adj.F.target, tau.p)) {
        Rep gb = adj.G.on_object(b_rep);
        Subrep w = evaluate(tau, gb);
        auto [sub, incl] = sub_to_rep(w);
        RepMorphism fi = adj.F.on_morphism(incl);
        RepMorphism eps = adj.counit(b_rep);
        out.indecs.push_back(iv);
        out.values.push_back(image_subrep(compose(eps, fi)));
    }
    return detail::checked(std::move(out));
}

/// psi(sigma) = Ker(G sigma* F . eta): one kernel per indecomposable
/// of the source category, no cokernel object retained.
inline Preradical psi(const AdjointPair& adj, const Preradical& sigma) {
    if (sigma.q != adj.F.target || sigma.p != adj.F.p)
        throw shape_error("psi: preradical over the wrong quiver or field");
    Preradical out;
    out.q = adj.F.source;
    out.p = sigma.p;
    for (auto& [iv, a_rep] : type_a_intervals(adj.F.source, sigma.p)) {
        Rep fa = adj.F.on_object(a_rep);
        Subrep s = evaluate(sigma, fa);
        auto [quot, proj] = quotient_rep(fa, s);
        RepMorphism gq = adj.G.on_morphism(proj);
        RepMorphism eta = adj.unit(a_rep);
        out.indecs.push_back(iv);
        out.values.push_back(kernel_subrep(compose(gq, eta)));
    }
    return detail::checked(std::move(out));
}

using GaloisReport = Report;

/// Exhaustive verification of the Galois-connection axioms over the
/// full enumerated lattices, plus the idempotent/radical preservation
/// statements.
inline GaloisReport check_galois(const AdjointPair& adj, const std::vector<Preradical>& pr_a,
                                 const std::vector<Preradical>& pr_b) {
    GaloisReport report;
    std::vector<Preradical> phis, psis;
    phis.reserve(pr_a.size());
    psis.reserve(pr_b.size());
    for (const auto& tau : pr_a)
        phis.push_back(phi(adj, tau));
    for (const auto& sigma : pr_b)
        psis.push_back(psi(adj, sigma));

    bool ok = true;
    for (size_t i = 0; i < pr_a.size(); ++i)
        for (size_t j = 0; j < pr_a.size(); ++j)
            if (leq(pr_a[i], pr_a[j]) && !leq(phis[i], phis[j]))
                ok = false;
    report.add("phi preserves order", ok);

    ok = true;
    for (size_t i = 0; i < pr_b.size(); ++i)
        for (size_t j = 0; j < pr_b.size(); ++j)
            if (leq(pr_b[i], pr_b[j]) && !leq(psis[i], psis[j]))
                ok = false;
    report.add("psi preserves order", ok);

    ok = true;
    for (size_t i = 0; i < pr_a.size(); ++i)
        if (!leq(pr_a[i], psi(adj, phis[i])))
            ok = false;
    report.add("tau <= psi(phi(tau))", ok);

    ok = true;
    for (size_t j = 0; j < pr_b.size(); ++j)
        if (!leq(phi(adj, psis[j]), pr_b[j]))
            ok = false;
    report.add("phi(psi(sigma)) <= sigma", ok);

    ok = true;
    for (size_t i = 0; i < pr_a.size(); ++i)
        if (phi(adj, psi(adj, phis[i])) != phis[i])
            ok = false;
    report.add("phi psi phi = phi", ok);

    ok = true;
    for (size_t j = 0; j < pr_b.size(); ++j)
        if (psi(adj, phi(adj, psis[j])) != psis[j])
            ok = false;
    report.add("psi phi psi = psi", ok);

    report.add("phi(0) = 0", phi(adj, zero_preradical(adj.F.source, adj.F.p)) ==
                                 zero_preradical(adj.F.target, adj.F.p));
    report.add("psi(1) = 1", psi(adj, top_preradical(adj.F.target, adj.F.p)) ==
                                 top_preradical(adj.F.source, adj.F.p));

    ok = true;
    for (size_t i = 0; i < pr_a.size(); ++i)
        if (is_idempotent(pr_a[i]) && !is_idempotent(phis[i]))
            ok = false;
    report.add("phi preserves idempotents", ok);

    ok = true;
    for (size_t j = 0; j < pr_b.size(); ++j)
        if (is_radical(pr_b[j]) && !is_radical(psis[j]))
            ok = false;
    report.add("psi preserves radicals", ok);

    auto member = [](const Preradical& pr, const std::vector<Preradical>& lattice) {
        for (const auto& x : lattice)
            if (x == pr)
                return true;
        return false;
    };
    ok = true;
    for (const auto& img : phis)
        if (!member(img, pr_b))
            ok = false;
    report.add("phi lands in the enumerated lattice", ok);
    ok = true;
    for (const auto& img : psis)
        if (!member(img, pr_a))
            ok = false;
    report.add("psi lands in the enumerated lattice", ok);

    return report;
}

} // namespace preradicals
