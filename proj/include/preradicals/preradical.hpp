#pragma once

#include "preradicals/intervals.hpp"

#include <string>
#include <vector>

namespace preradicals {

/// A preradical: a subobject of the identity functor, stored as its
/// table of values on the indecomposables. Naturality across every
/// hom space between indecomposables is the defining invariant; the
/// extension to arbitrary objects is computed by the trace formula in
/// evaluate(), so the functor itself is never materialized.
struct Preradical {
    Quiver q;
    int p = 2;
    std::vector<Interval> indecs; // canonical order, by (lo, hi)
    std::vector<Subrep> values;   // one arrow-invariant value per indecomposable

    bool operator==(const Preradical&) const = default;
};

/// Byte-lex key of the canonical value table; fixes enumeration order
/// and golden files.
inline std::vector<int> preradical_key(const Preradical& pr) {
    std::vector<int> key;
    for (const auto& val : pr.values)
        for (const auto& s : val.spaces) {
            key.push_back(s.dim());
            key.insert(key.end(), s.basis.e.begin(), s.basis.e.end());
        }
    return key;
}

inline bool validate_naturality(const Preradical& pr) {
    const size_t n = pr.indecs.size();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (const auto& f : hom_basis(pr.values[i].ambient, pr.values[j].ambient))
                for (int v = 0; v < pr.q.vertices; ++v)
                    if (!subspace_contains(pr.values[j].spaces[v],
                                           push_subspace(f.comp[v], pr.values[i].spaces[v])))
                        return false;
    return true;
}

inline Preradical make_preradical(const Quiver& q, int p, std::vector<Subrep> values) {
    auto ind = type_a_intervals(q, p);
    if (values.size() != ind.size())
        throw shape_error("preradical: one value per indecomposable required");
    Preradical pr;
    pr.q = q;
    pr.p = p;
    for (size_t i = 0; i < ind.size(); ++i) {
        if (values[i].ambient != ind[i].second)
            throw shape_error("preradical: value " + std::to_string(i) +
                              " does not live in the matching indecomposable");
        pr.indecs.push_back(ind[i].first);
    }
    pr.values = std::move(values);
    if (!validate_naturality(pr))
        throw shape_error("preradical: assignment violates naturality");
    return pr;
}

inline Preradical zero_preradical(const Quiver& q, int p) {
    Preradical pr;
    pr.q = q;
    pr.p = p;
    for (auto& [iv, rep] : type_a_intervals(q, p)) {
        pr.indecs.push_back(iv);
        pr.values.push_back(zero_subrep(rep));
    }
    return pr;
}

inline Preradical top_preradical(const Quiver& q, int p) {
    Preradical pr;
    pr.q = q;
    pr.p = p;
    for (auto& [iv, rep] : type_a_intervals(q, p)) {
        pr.indecs.push_back(iv);
        pr.values.push_back(full_subrep(rep));
    }
    return pr;
}

namespace detail {

inline void require_same_context(const Preradical& a, const Preradical& b, const char* op) {
    if (a.q != b.q || a.p != b.p)
        throw shape_error(std::string(op) + ": preradicals over different quivers or fields");
}

/// Internal invariant check on operation outputs. A violation here is
/// a library bug, not a user error.
inline Preradical checked(Preradical pr) {
    for (const auto& val : pr.values)
        if (!arrow_invariant(val.ambient, val.spaces))
            throw std::logic_error("internal error: operation produced a non-invariant value");
    if (!validate_naturality(pr))
        throw std::logic_error("internal error: operation produced a non-natural preradical");
    return pr;
}

} // namespace detail

// ---------------------------------------------------------------------------
// order
// ---------------------------------------------------------------------------

inline bool leq(const Preradical& a, const Preradical& b) {
    detail::require_same_context(a, b, "leq");
    for (size_t i = 0; i < a.values.size(); ++i)
        if (!subrep_leq(a.values[i], b.values[i]))
            return false;
    return true;
}

// ---------------------------------------------------------------------------
// enumeration
// ---------------------------------------------------------------------------

/// All preradicals over a type-A quiver: the cartesian product of the
/// subobject lattices of the indecomposables filtered by naturality.
/// The count is independent of p, since interval modules have vertex
/// dimensions at most one.
inline std::vector<Preradical> enumerate_preradicals(const Quiver& q, int p, const Limits& limits = {}) {
    auto ind = type_a_intervals(q, p);
    const size_t n = ind.size();
    std::vector<std::vector<Subrep>> cand(n);
    std::int64_t tuples = 1;
    for (size_t i = 0; i < n; ++i) {
        cand[i] = enumerate_subreps(ind[i].second, limits);
        tuples *= static_cast<std::int64_t>(cand[i].size());
        if (tuples > limits.max_preradical_tuples)
            throw capacity_error("preradical enumeration bound exceeded");
    }
    // hom bases between indecomposables, computed once
    std::vector<std::vector<std::vector<RepMorphism>>> homs(n, std::vector<std::vector<RepMorphism>>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            homs[i][j] = hom_basis(ind[i].second, ind[j].second);

    std::vector<Preradical> out;
    std::vector<size_t> idx(n, 0);
    while (true) {
        bool natural = true;
        for (size_t i = 0; i < n && natural; ++i)
            for (size_t j = 0; j < n && natural; ++j)
                for (const auto& f : homs[i][j]) {
                    for (int v = 0; v < q.vertices; ++v)
                        if (!subspace_contains(cand[j][idx[j]].spaces[v],
                                               push_subspace(f.comp[v], cand[i][idx[i]].spaces[v]))) {
                            natural = false;
                            break;
                        }
                    if (!natural)
                        break;
                }
        if (natural) {
            Preradical pr;
            pr.q = q;
            pr.p = p;
            for (size_t i = 0; i < n; ++i) {
                pr.indecs.push_back(ind[i].first);
                pr.values.push_back(cand[i][idx[i]]);
            }
            out.push_back(std::move(pr));
        }
        int i = static_cast<int>(n) - 1;
        while (i >= 0 && ++idx[i] == cand[i].size())
            idx[i--] = 0;
        if (i < 0)
            break;
    }
    std::sort(out.begin(), out.end(),
              [](const Preradical& a, const Preradical& b) { return preradical_key(a) < preradical_key(b); });
    return out;
}

// ---------------------------------------------------------------------------
// evaluation: the trace formula
// ---------------------------------------------------------------------------

/// sigma(X) = sum over indecomposables N and hom-basis morphisms
/// f : N -> X of the image of f restricted to sigma(N). A basis of
/// each hom space suffices: the image of a linear combination lies in
/// the sum of the images. On a direct sum of indecomposables this
/// reproduces the componentwise table values.
inline Subrep evaluate(const Preradical& pr, const Rep& x) {
    if (x.q != pr.q || x.p != pr.p)
        throw shape_error("evaluate: representation over a different quiver or field");
    Subrep acc = zero_subrep(x);
    for (size_t i = 0; i < pr.values.size(); ++i) {
        if (pr.values[i].is_zero())
            continue;
        auto [sub, incl] = sub_to_rep(pr.values[i]);
        for (const auto& f : hom_basis(pr.values[i].ambient, x))
            acc = subrep_sum(acc, image_subrep(compose(f, incl)));
    }
    if (!arrow_invariant(x, acc.spaces))
        throw std::logic_error("internal error: evaluate produced a non-invariant subobject");
    return acc;
}

// ---------------------------------------------------------------------------
// product and coproduct
// ---------------------------------------------------------------------------

/// (tau . sigma)(N): evaluate tau on the subobject sigma(N) realized
/// as a representation, then push the result forward along the
/// inclusion into N.
inline Preradical product(const Preradical& tau, const Preradical& sigma) {
    detail::require_same_context(tau, sigma, "product");
    Preradical out = sigma;
    for (size_t i = 0; i < sigma.values.size(); ++i) {
        auto [sub, incl] = sub_to_rep(sigma.values[i]);
        Subrep w = evaluate(tau, sub);
        std::vector<Subspace> spaces;
        for (int v = 0; v < sigma.q.vertices; ++v)
            spaces.push_back(push_subspace(incl.comp[v], w.spaces[v]));
        out.values[i] = Subrep{sigma.values[i].ambient, std::move(spaces)};
    }
    return detail::checked(std::move(out));
}

/// (sigma : tau)(N): evaluate tau on the quotient N/sigma(N) and take
/// the preimage under the canonical surjection; the kernel form of
/// the pullback definition.
inline Preradical coproduct(const Preradical& sigma, const Preradical& tau) {
    detail::require_same_context(sigma, tau, "coproduct");
    Preradical out = sigma;
    for (size_t i = 0; i < sigma.values.size(); ++i) {
        auto [quot, proj] = quotient_rep(sigma.values[i].ambient, sigma.values[i]);
        Subrep w = evaluate(tau, quot);
        std::vector<Subspace> spaces;
        for (int v = 0; v < sigma.q.vertices; ++v)
            spaces.push_back(pull_subspace(proj.comp[v], w.spaces[v]));
        out.values[i] = Subrep{sigma.values[i].ambient, std::move(spaces)};
    }
    return detail::checked(std::move(out));
}

inline bool is_idempotent(const Preradical& pr) {
    return product(pr, pr) == pr;
}

inline bool is_radical(const Preradical& pr) {
    return coproduct(pr, pr) == pr;
}

// ---------------------------------------------------------------------------
// joins and meets (finite families; the lattice itself is finite)
// ---------------------------------------------------------------------------

inline Preradical join(const std::vector<Preradical>& prs) {
    if (prs.empty())
        throw shape_error("join of an empty family needs an explicit quiver; use zero_preradical");
    Preradical out = prs.front();
    for (size_t k = 1; k < prs.size(); ++k) {
        detail::require_same_context(out, prs[k], "join");
        for (size_t i = 0; i < out.values.size(); ++i)
            out.values[i] = subrep_sum(out.values[i], prs[k].values[i]);
    }
    return detail::checked(std::move(out));
}

inline Preradical meet(const std::vector<Preradical>& prs) {
    if (prs.empty())
        throw shape_error("meet of an empty family needs an explicit quiver; use top_preradical");
    Preradical out = prs.front();
    for (size_t k = 1; k < prs.size(); ++k) {
        detail::require_same_context(out, prs[k], "meet");
        for (size_t i = 0; i < out.values.size(); ++i)
            out.values[i] = subrep_intersect(out.values[i], prs[k].values[i]);
    }
    return detail::checked(std::move(out));
}

// ---------------------------------------------------------------------------
// alpha and omega preradicals
// ---------------------------------------------------------------------------

/// alpha_h for h : N -> M, evaluated directly on hom-space bases:
/// alpha_h(L) = sum over f : M -> L of Im(f . h). The coproduct of
/// copies of N indexed by Hom(M, L) is never materialized; basis
/// images span the same subobject.
inline Preradical alpha(const RepMorphism& h) {
    const Quiver& q = h.source.q;
    const int p = h.source.p;
    Preradical out;
    out.q = q;
    out.p = p;
    for (auto& [iv, rep] : type_a_intervals(q, p)) {
        Subrep acc = zero_subrep(rep);
        for (const auto& f : hom_basis(h.target, rep))
            acc = subrep_sum(acc, image_subrep(compose(f, h)));
        out.indecs.push_back(iv);
        out.values.push_back(std::move(acc));
    }
    return detail::checked(std::move(out));
}

/// omega_k for k : N -> M: omega_k(L) is the intersection over
/// f : L -> N of Ker(k . f); the empty intersection is all of L.
inline Preradical omega(const RepMorphism& k) {
    const Quiver& q = k.source.q;
    const int p = k.source.p;
    Preradical out;
    out.q = q;
    out.p = p;
    for (auto& [iv, rep] : type_a_intervals(q, p)) {
        Subrep acc = full_subrep(rep);
        for (const auto& f : hom_basis(rep, k.source))
            acc = subrep_intersect(acc, kernel_subrep(compose(k, f)));
        out.indecs.push_back(iv);
        out.values.push_back(std::move(acc));
    }
    return detail::checked(std::move(out));
}

// ---------------------------------------------------------------------------
// duality
// ---------------------------------------------------------------------------

/// The duality assignment into the opposite category: the value of
/// delta(pr) on the dual of an indecomposable N is the per-vertex
/// annihilator of pr(N). Order-reversing; an involution.
inline Preradical delta(const Preradical& pr) {
    Quiver opq = opposite(pr.q);
    Preradical out;
    out.q = opq;
    out.p = pr.p;
    for (size_t i = 0; i < pr.indecs.size(); ++i) {
        Rep dual_ambient = dual_rep(pr.values[i].ambient);
        std::vector<Subspace> spaces;
        for (const auto& s : pr.values[i].spaces)
            spaces.push_back(annihilator(s));
        out.indecs.push_back(pr.indecs[i]);
        out.values.push_back(make_subrep(std::move(dual_ambient), std::move(spaces)));
    }
    return detail::checked(std::move(out));
}

inline Preradical delta_inverse(const Preradical& pr) {
    return delta(pr); // annihilator and arrow reversal are involutions
}

// ---------------------------------------------------------------------------
// T and F classes, reconstruction identities
// ---------------------------------------------------------------------------

inline std::vector<int> t_class(const Preradical& pr) {
    std::vector<int> out;
    for (size_t i = 0; i < pr.values.size(); ++i)
        if (pr.values[i].is_full())
            out.push_back(static_cast<int>(i));
    return out;
}

inline std::vector<int> f_class(const Preradical& pr) {
    std::vector<int> out;
    for (size_t i = 0; i < pr.values.size(); ++i)
        if (pr.values[i].is_zero())
            out.push_back(static_cast<int>(i));
    return out;
}

/// The inclusion tau_N : T(N) -> N realized as a morphism.
inline RepMorphism value_inclusion(const Preradical& pr, int i) {
    return sub_to_rep(pr.values[i]).second;
}

/// The canonical surjection N -> N / tau(N).
inline RepMorphism value_projection(const Preradical& pr, int i) {
    return quotient_rep(pr.values[i].ambient, pr.values[i]).second;
}

/// tau as the join of the alpha preradicals of its own value
/// inclusions, specialized to the indecomposable generators.
inline Preradical reconstruct_from_alpha(const Preradical& pr) {
    std::vector<Preradical> parts;
    for (size_t i = 0; i < pr.values.size(); ++i)
        parts.push_back(alpha(value_inclusion(pr, static_cast<int>(i))));
    return parts.empty() ? zero_preradical(pr.q, pr.p) : join(parts);
}

/// tau as the meet of the omega preradicals of its value projections.
inline Preradical reconstruct_from_omega(const Preradical& pr) {
    std::vector<Preradical> parts;
    for (size_t i = 0; i < pr.values.size(); ++i)
        parts.push_back(omega(value_projection(pr, static_cast<int>(i))));
    return parts.empty() ? top_preradical(pr.q, pr.p) : meet(parts);
}

/// Join of alpha(1_N) over the T-class; equals tau exactly when tau is
/// idempotent.
inline Preradical t_class_alpha_join(const Preradical& pr) {
    std::vector<Preradical> parts;
    for (int i : t_class(pr))
        parts.push_back(alpha(identity_morphism(pr.values[i].ambient)));
    return parts.empty() ? zero_preradical(pr.q, pr.p) : join(parts);
}

/// Meet of omega(1_N) over the F-class; equals tau exactly when tau is
/// a radical.
inline Preradical f_class_omega_meet(const Preradical& pr) {
    std::vector<Preradical> parts;
    for (int i : f_class(pr))
        parts.push_back(omega(identity_morphism(pr.values[i].ambient)));
    return parts.empty() ? top_preradical(pr.q, pr.p) : meet(parts);
}

} // namespace preradicals
