#pragma once

#include "preradicals/lattice.hpp"

#include <random>

namespace preradicals {

namespace detail {

inline bool member(const Preradical& pr, const std::vector<Preradical>& lattice) {
    for (const auto& x : lattice)
        if (x == pr)
            return true;
    return false;
}

/// Identities on the indecomposables plus every hom-basis element
/// between two indecomposables: a generating sample of morphisms.
inline std::vector<RepMorphism> morphism_sample(const Quiver& q, int p) {
    auto ind = type_a_intervals(q, p);
    std::vector<RepMorphism> sample;
    for (auto& [iv, rep] : ind)
        sample.push_back(identity_morphism(rep));
    for (auto& [iva, repa] : ind)
        for (auto& [ivb, repb] : ind)
            for (auto& f : hom_basis(repa, repb))
                sample.push_back(f);
    return sample;
}

inline std::vector<std::vector<int>> contiguous_proper_subsets(int n) {
    std::vector<std::vector<int>> out;
    for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b) {
            if (b - a + 1 == n)
                continue;
            std::vector<int> s;
            for (int v = a; v <= b; ++v)
                s.push_back(v);
            out.push_back(std::move(s));
        }
    return out;
}

} // namespace detail

// ---------------------------------------------------------------------------
// order suite: the partial order, product/coproduct inequalities, closure
// ---------------------------------------------------------------------------

inline Report verify_order(const Quiver& q, int p, const Limits& limits = {}) {
    Report report;
    auto prs = enumerate_preradicals(q, p, limits);
    const Preradical zero = zero_preradical(q, p), top = top_preradical(q, p);

    bool ok = detail::member(zero, prs) && detail::member(top, prs);
    for (const auto& t : prs)
        if (!leq(zero, t) || !leq(t, top))
            ok = false;
    report.add("zero is bottom, identity is top", ok);

    ok = true;
    for (const auto& a : prs)
        for (const auto& b : prs) {
            if (!detail::member(join({a, b}), prs) || !detail::member(meet({a, b}), prs))
                ok = false;
        }
    report.add("closure under join and meet", ok);

    ok = true;
    for (const auto& a : prs)
        for (const auto& b : prs) {
            Preradical s = join({a, b}), m = meet({a, b});
            if (!leq(a, s) || !leq(b, s) || !leq(m, a) || !leq(m, b))
                ok = false;
            for (const auto& c : prs) {
                if (leq(a, c) && leq(b, c) && !leq(s, c))
                    ok = false;
                if (leq(c, a) && leq(c, b) && !leq(c, m))
                    ok = false;
            }
        }
    report.add("join is least upper bound, meet is greatest lower bound", ok);

    ok = true;
    for (const auto& sigma : prs)
        for (const auto& tau : prs) {
            if (!leq(sigma, coproduct(sigma, tau)))
                ok = false;
            if (!leq(product(tau, sigma), sigma))
                ok = false;
        }
    report.add("sigma <= (sigma:tau) and (tau.sigma) <= sigma", ok);

    ok = true;
    for (const auto& a : prs)
        for (const auto& b : prs)
            if (!detail::member(product(a, b), prs) || !detail::member(coproduct(a, b), prs))
                ok = false;
    report.add("closure under product and coproduct", ok);

    ok = true;
    for (const auto& a : prs) {
        if (product(top, a) != a || product(a, top) != a)
            ok = false;
        if (coproduct(zero, a) != a || coproduct(a, zero) != a)
            ok = false;
    }
    report.add("identity preradical is neutral for product, zero for coproduct", ok);
    return report;
}

// ---------------------------------------------------------------------------
// delta suite: the duality assignment
// ---------------------------------------------------------------------------

inline Report verify_delta(const Quiver& q, int p, const Limits& limits = {}) {
    Report report;
    auto prs = enumerate_preradicals(q, p, limits);
    auto op_prs = enumerate_preradicals(opposite(q), p, limits);

    bool ok = true;
    for (const auto& t : prs)
        if (!detail::member(delta(t), op_prs))
            ok = false;
    for (size_t i = 0; i < prs.size(); ++i)
        for (size_t j = i + 1; j < prs.size(); ++j)
            if (delta(prs[i]) == delta(prs[j]))
                ok = false;
    ok = ok && prs.size() == op_prs.size();
    report.add("delta is a bijection onto the opposite lattice", ok);

    ok = true;
    for (const auto& a : prs)
        for (const auto& b : prs)
            if (leq(a, b) != leq(delta(b), delta(a)))
                ok = false;
    report.add("delta reverses order", ok);

    ok = true;
    for (const auto& t : prs)
        if (delta_inverse(delta(t)) != t)
            ok = false;
    report.add("delta is an involution", ok);

    report.add("delta swaps bottom and top",
               delta(zero_preradical(q, p)) == top_preradical(opposite(q), p) &&
                   delta(top_preradical(q, p)) == zero_preradical(opposite(q), p));

    ok = true;
    for (const auto& sigma : prs)
        for (const auto& tau : prs) {
            if (delta(coproduct(sigma, tau)) != product(delta(tau), delta(sigma)))
                ok = false;
            if (delta(product(tau, sigma)) != coproduct(delta(sigma), delta(tau)))
                ok = false;
        }
    report.add("delta exchanges product and coproduct", ok);

    ok = true;
    for (const auto& t : prs) {
        if (is_radical(t) != is_idempotent(delta(t)))
            ok = false;
        if (is_idempotent(t) != is_radical(delta(t)))
            ok = false;
    }
    report.add("radical iff delta idempotent, idempotent iff delta radical", ok);

    ok = true;
    for (const auto& a : prs)
        for (const auto& b : prs) {
            if (delta(join({a, b})) != meet({delta(a), delta(b)}))
                ok = false;
            if (delta(meet({a, b})) != join({delta(a), delta(b)}))
                ok = false;
        }
    report.add("delta swaps joins and meets", ok);
    return report;
}

// ---------------------------------------------------------------------------
// alpha/omega suite
// ---------------------------------------------------------------------------

inline Report verify_alpha_omega(const Quiver& q, int p, const Limits& limits = {}) {
    Report report;
    auto prs = enumerate_preradicals(q, p, limits);
    auto ind = type_a_intervals(q, p);

    bool in_set = true, alpha_idem = true, omega_rad = true;
    for (auto& [iv, rep] : ind) {
        Preradical a = alpha(identity_morphism(rep));
        Preradical o = omega(identity_morphism(rep));
        if (!detail::member(a, prs) || !detail::member(o, prs))
            in_set = false;
        if (!is_idempotent(a))
            alpha_idem = false;
        if (!is_radical(o))
            omega_rad = false;
    }
    report.add("alpha(iso) and omega(iso) land in the enumerated set", in_set);
    report.add("alpha of an isomorphism is idempotent", alpha_idem);
    report.add("omega of an isomorphism is a radical", omega_rad);

    bool ok = true;
    for (const auto& t : prs)
        if (reconstruct_from_alpha(t) != t)
            ok = false;
    report.add("tau equals the join of the alphas of its value inclusions", ok);

    ok = true;
    for (const auto& t : prs)
        if (reconstruct_from_omega(t) != t)
            ok = false;
    report.add("tau equals the meet of the omegas of its value projections", ok);

    ok = true;
    for (const auto& t : prs)
        if (is_idempotent(t) != (t == t_class_alpha_join(t)))
            ok = false;
    report.add("idempotent iff join of alpha(1_N) over the T-class", ok);

    ok = true;
    for (const auto& t : prs)
        if (is_radical(t) != (t == f_class_omega_meet(t)))
            ok = false;
    report.add("radical iff meet of omega(1_N) over the F-class", ok);

    ok = true;
    for (const auto& h : detail::morphism_sample(q, p)) {
        if (delta(alpha(h)) != omega(dual_morphism(h)))
            ok = false;
        if (delta(omega(h)) != alpha(dual_morphism(h)))
            ok = false;
    }
    report.add("delta exchanges alpha and omega", ok);

    // scalar isomorphisms c * identity give the same alpha and omega
    ok = true;
    for (auto& [iv, rep] : ind)
        for (int c = 1; c < p; ++c) {
            std::vector<Matrix> comps;
            for (const auto& m : identity_morphism(rep).comp)
                comps.push_back(scale(c, m));
            RepMorphism h = make_morphism(rep, rep, std::move(comps));
            if (alpha(h) != alpha(identity_morphism(rep)))
                ok = false;
            if (omega(h) != omega(identity_morphism(rep)))
                ok = false;
        }
    report.add("alpha and omega are invariant under isomorphism of the morphism", ok);

    {
        Rep first = ind.front().second;
        Preradical a0 = alpha(zero_morphism(first, first));
        report.add("alpha of the zero morphism is the zero preradical", a0 == zero_preradical(q, p));
    }
    return report;
}

// ---------------------------------------------------------------------------
// joins suite
// ---------------------------------------------------------------------------

inline Report verify_joins(const Quiver& q, int p, const Limits& limits = {}) {
    Report report;
    auto prs = enumerate_preradicals(q, p, limits);
    std::vector<std::string> labels;
    LabelDictionary dict = structural_dictionary(q, p);
    for (const auto& t : prs)
        labels.push_back(short_name(t, dict));
    Hasse h = build_poset(prs, labels);
    report.merge(verify_lattice_laws(h));

    bool ok = true;
    for (int i = 0; i < h.size(); ++i)
        for (int j = 0; j < h.size(); ++j) {
            if (h.nodes[h.join_table[i][j]] != join({prs[i], prs[j]}))
                ok = false;
            if (h.nodes[h.meet_table[i][j]] != meet({prs[i], prs[j]}))
                ok = false;
        }
    report.add("table joins and meets agree with the vertexwise construction", ok);

    std::vector<int> idem, rad;
    for (int i = 0; i < h.size(); ++i) {
        if (h.idempotent[i])
            idem.push_back(i);
        if (h.radical[i])
            rad.push_back(i);
    }
    ok = true;
    for (size_t a = 0; a < idem.size(); ++a)
        for (size_t b = a; b < idem.size(); ++b) {
            if (!is_idempotent(join({prs[idem[a]], prs[idem[b]]})))
                ok = false;
            for (size_t c = b; c < idem.size(); ++c)
                if (!is_idempotent(join({prs[idem[a]], prs[idem[b]], prs[idem[c]]})))
                    ok = false;
        }
    report.add("joins of idempotent preradicals are idempotent", ok);

    ok = true;
    for (size_t a = 0; a < rad.size(); ++a)
        for (size_t b = a; b < rad.size(); ++b) {
            if (!is_radical(meet({prs[rad[a]], prs[rad[b]]})))
                ok = false;
            for (size_t c = b; c < rad.size(); ++c)
                if (!is_radical(meet({prs[rad[a]], prs[rad[b]], prs[rad[c]]})))
                    ok = false;
        }
    report.add("meets of radicals are radicals", ok);
    return report;
}

// ---------------------------------------------------------------------------
// galois suite: every built-in adjunction on the given quiver
// ---------------------------------------------------------------------------

inline Report verify_galois(const Quiver& q, int p, const Limits& limits = {}) {
    Report report;
    auto prs_b = enumerate_preradicals(q, p, limits);
    auto ind_b = type_a_intervals(q, p);
    std::vector<Rep> b_samples;
    for (auto& [iv, rep] : ind_b)
        b_samples.push_back(rep);
    {
        std::vector<Rep> parts = {b_samples.front(), b_samples.back()};
        b_samples.push_back(direct_sum(parts).total);
    }

    for (const auto& subset : detail::contiguous_proper_subsets(q.vertices)) {
        std::string tag = "lan-res{";
        for (size_t i = 0; i < subset.size(); ++i)
            tag += (i ? "," : "") + std::to_string(subset[i]);
        tag += "}";
        AdjointPair adj = lan_res_adjunction(q, subset, p);
        auto prs_a = enumerate_preradicals(adj.F.source, p, limits);
        auto ind_a = type_a_intervals(adj.F.source, p);
        std::vector<Rep> a_samples;
        for (auto& [iv, rep] : ind_a)
            a_samples.push_back(rep);
        {
            std::vector<Rep> parts = {a_samples.front(), a_samples.back()};
            a_samples.push_back(direct_sum(parts).total);
        }

        report.add(tag + ": triangular identities", check_triangles(adj, a_samples, b_samples));

        bool ok = true;
        for (const auto& a : a_samples)
            for (const auto& b : b_samples) {
                auto lhs = hom_basis(adj.F.on_object(a), b);
                auto rhs = hom_basis(a, adj.G.on_object(b));
                if (lhs.size() != rhs.size())
                    ok = false;
                // injectivity of f |-> G(f) . eta_A on the basis span
                std::vector<RepMorphism> mapped;
                for (const auto& f : lhs)
                    mapped.push_back(compose(adj.G.on_morphism(f), adj.unit(a)));
                // linear independence: stack flattened components and take the rank
                if (!mapped.empty()) {
                    int cols = 0;
                    for (const auto& c : mapped.front().comp)
                        cols += static_cast<int>(c.e.size());
                    Matrix flat(static_cast<int>(mapped.size()), cols, p);
                    for (size_t r = 0; r < mapped.size(); ++r) {
                        int off = 0;
                        for (const auto& c : mapped[r].comp)
                            for (int x : c.e)
                                flat.at(static_cast<int>(r), off++) = x;
                    }
                    if (rank(flat) != static_cast<int>(mapped.size()))
                        ok = false;
                }
            }
        report.add(tag + ": hom bijection Hom(FA,B) = Hom(A,GB)", ok);

        report.merge([&] {
            Report r = check_galois(adj, prs_a, prs_b);
            for (auto& c : r.checks)
                c.name = tag + ": " + c.name;
            return r;
        }());

        ok = true;
        for (const auto& h : detail::morphism_sample(adj.F.source, p))
            if (phi(adj, alpha(h)) != alpha(adj.F.on_morphism(h)))
                ok = false;
        report.add(tag + ": phi(alpha_h) = alpha_F(h)", ok);

        ok = true;
        for (const auto& k : detail::morphism_sample(q, p))
            if (psi(adj, omega(k)) != omega(adj.G.on_morphism(k)))
                ok = false;
        report.add(tag + ": psi(omega_k) = omega_G(k)", ok);

        // the commuting squares with the opposite adjunction
        AdjointPair op = opposite_adjunction(adj);
        {
            std::vector<Rep> op_a, op_b;
            for (const auto& r : b_samples)
                op_a.push_back(dual_rep(r));
            for (const auto& r : a_samples)
                op_b.push_back(dual_rep(r));
            report.add(tag + ": opposite adjunction triangular identities",
                       check_triangles(op, op_a, op_b));
        }
        ok = true;
        for (const auto& tau : prs_a)
            if (delta(phi(adj, tau)) != psi(op, delta(tau)))
                ok = false;
        report.add(tag + ": delta(phi(tau)) = psi_op(delta(tau))", ok);
        ok = true;
        for (const auto& sigma : prs_b)
            if (delta(psi(adj, sigma)) != phi(op, delta(sigma)))
                ok = false;
        report.add(tag + ": delta(psi(sigma)) = phi_op(delta(sigma))", ok);
    }

    // equivalences: identity, and the reversal onto the opposite quiver
    {
        std::vector<int> ident(q.vertices), reversal(q.vertices);
        for (int v = 0; v < q.vertices; ++v) {
            ident[v] = v;
            reversal[v] = q.vertices - 1 - v;
        }
        for (auto& [name, target, vmap] :
             std::vector<std::tuple<std::string, Quiver, std::vector<int>>>{
                 {"iso{identity}", q, ident}, {"iso{reversal}", opposite(q), reversal}}) {
            AdjointPair adj = equivalence_from_iso(q, target, vmap, p);
            auto prs_t = enumerate_preradicals(target, p, limits);
            report.merge([&] {
                Report r = check_galois(adj, prs_b, prs_t);
                for (auto& c : r.checks)
                    c.name = name + ": " + c.name;
                return r;
            }());
            bool ok = true;
            for (const auto& t : prs_b)
                if (psi(adj, phi(adj, t)) != t)
                    ok = false;
            for (const auto& s : prs_t)
                if (phi(adj, psi(adj, s)) != s)
                    ok = false;
            report.add(name + ": phi and psi are mutually inverse", ok);
        }
    }
    return report;
}

// ---------------------------------------------------------------------------

inline Report verify_suite(const std::string& suite, const Quiver& q, int p, const Limits& limits = {}) {
    Report report;
    if (suite == "order" || suite == "all")
        report.merge(verify_order(q, p, limits));
    if (suite == "delta" || suite == "all")
        report.merge(verify_delta(q, p, limits));
    if (suite == "alpha-omega" || suite == "all")
        report.merge(verify_alpha_omega(q, p, limits));
    if (suite == "joins" || suite == "all")
        report.merge(verify_joins(q, p, limits));
    if (suite == "galois" || suite == "all")
        report.merge(verify_galois(q, p, limits));
    if (report.checks.empty())
        throw shape_error("unknown verification suite '" + suite +
                          "' (expected order, delta, alpha-omega, joins, galois or all)");
    return report;
}

} // namespace preradicals
