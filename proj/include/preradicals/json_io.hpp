#pragma once

#include "preradicals/lattice.hpp"
#include "preradicals/limits.hpp"

#include <json.hpp>

namespace preradicals {

using nlohmann::json;

// Matrix: {"rows":r,"cols":c,"entries":[...row-major...]}
inline json to_json(const Matrix& m) {
    return json{{"rows", m.rows}, {"cols", m.cols}, {"entries", m.e}};
}

inline Matrix matrix_from_json(const json& j, int p) {
    Matrix m(j.at("rows").get<int>(), j.at("cols").get<int>(), p);
    auto entries = j.at("entries").get<std::vector<int>>();
    if (entries.size() != m.e.size())
        throw shape_error("matrix json: entry count differs from rows*cols");
    Field f(p);
    for (size_t i = 0; i < entries.size(); ++i)
        m.e[i] = f.reduce(entries[i]);
    return m;
}

// Subspace: {"ambient":n,"basis":Matrix}
inline json to_json(const Subspace& s) {
    return json{{"ambient", s.ambient}, {"basis", to_json(s.basis)}};
}

inline Subspace subspace_from_json(const json& j, int p) {
    return Subspace::span(j.at("ambient").get<int>(), matrix_from_json(j.at("basis"), p));
}

// Quiver: {"vertices":n,"arrows":[[s,t],...],"labels":[...]}
inline json to_json(const Quiver& q) {
    json arrows = json::array();
    for (auto [s, t] : q.arrows)
        arrows.push_back(json::array({s, t}));
    json out{{"vertices", q.vertices}, {"arrows", arrows}};
    if (!q.labels.empty())
        out["labels"] = q.labels;
    return out;
}

inline Quiver quiver_from_json(const json& j) {
    Quiver q;
    q.vertices = j.at("vertices").get<int>();
    for (const auto& a : j.at("arrows"))
        q.arrows.emplace_back(a.at(0).get<int>(), a.at(1).get<int>());
    if (j.contains("labels"))
        q.labels = j.at("labels").get<std::vector<std::string>>();
    validate_quiver(q);
    return q;
}

// Rep: {"dims":[...],"arrows":[Matrix,...]}
inline json to_json(const Rep& r) {
    json arrows = json::array();
    for (const auto& m : r.arrows)
        arrows.push_back(to_json(m));
    return json{{"dims", r.dims}, {"arrows", arrows}};
}

inline Rep rep_from_json(const json& j, const Quiver& q, int p) {
    std::vector<Matrix> arrows;
    for (const auto& a : j.at("arrows"))
        arrows.push_back(matrix_from_json(a, p));
    return make_rep(q, p, j.at("dims").get<std::vector<int>>(), std::move(arrows));
}

// Interval: [lo, hi]
inline json to_json(const Interval& iv) {
    return json::array({iv.lo, iv.hi});
}

inline Interval interval_from_json(const json& j) {
    return Interval{j.at(0).get<int>(), j.at(1).get<int>()};
}

// Preradical: {"quiver":..., "values":[{"indec":[lo,hi],"spaces":[Subspace,...]},...]}
inline json to_json(const Preradical& pr) {
    json values = json::array();
    for (size_t i = 0; i < pr.indecs.size(); ++i) {
        json spaces = json::array();
        for (const auto& s : pr.values[i].spaces)
            spaces.push_back(to_json(s));
        values.push_back(json{{"indec", to_json(pr.indecs[i])}, {"spaces", spaces}});
    }
    return json{{"quiver", to_json(pr.q)}, {"p", pr.p}, {"values", values}};
}

inline Preradical preradical_from_json(const json& j, int p) {
    Quiver q = quiver_from_json(j.at("quiver"));
    if (j.contains("p"))
        p = j.at("p").get<int>();
    auto ind = type_a_intervals(q, p);
    std::vector<Subrep> values(ind.size(), Subrep{});
    std::vector<bool> seen(ind.size(), false);
    for (const auto& entry : j.at("values")) {
        Interval iv = interval_from_json(entry.at("indec"));
        int idx = -1;
        for (size_t i = 0; i < ind.size(); ++i)
            if (ind[i].first == iv)
                idx = static_cast<int>(i);
        if (idx < 0)
            throw shape_error("preradical json: unknown indecomposable");
        std::vector<Subspace> spaces;
        for (const auto& s : entry.at("spaces"))
            spaces.push_back(subspace_from_json(s, p));
        values[idx] = make_subrep(ind[idx].second, std::move(spaces));
        seen[idx] = true;
    }
    for (bool s : seen)
        if (!s)
            throw shape_error("preradical json: missing value for an indecomposable");
    return make_preradical(q, p, std::move(values));
}

// Lattice: {"nodes":[labels],"covers":[[i,j]],"idempotent":[...],"radical":[...]}
inline json to_json(const Hasse& h) {
    json covers = json::array();
    for (auto [lo, hi] : h.covers)
        covers.push_back(json::array({lo, hi}));
    std::vector<int> idem, rad;
    for (int i = 0; i < h.size(); ++i) {
        if (h.idempotent[i])
            idem.push_back(i);
        if (h.radical[i])
            rad.push_back(i);
    }
    return json{{"nodes", h.labels}, {"covers", covers}, {"idempotent", idem}, {"radical", rad}};
}

inline json to_json(const Report& r) {
    json checks = json::array();
    for (const auto& c : r.checks) {
        json entry{{"name", c.name}, {"pass", c.pass}};
        if (!c.detail.empty())
            entry["detail"] = c.detail;
        checks.push_back(entry);
    }
    return json{{"checks", checks}, {"failures", r.failures()}, {"all_pass", r.all_pass()}};
}

// Adjunction descriptor: {"kind":"lan-res","subset":[...]} or
// {"kind":"iso","map":[...]}; an embedded "quiver" overrides the
// ambient one.
inline AdjointPair adjunction_from_json(const json& j, const Quiver& ambient, int p) {
    Quiver q = j.contains("quiver") ? quiver_from_json(j.at("quiver")) : ambient;
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "lan-res")
        return lan_res_adjunction(q, j.at("subset").get<std::vector<int>>(), p);
    if (kind == "iso") {
        auto vmap = j.at("map").get<std::vector<int>>();
        Quiver target = j.contains("target") ? quiver_from_json(j.at("target")) : q;
        return equivalence_from_iso(q, target, vmap, p);
    }
    throw shape_error("adjunction descriptor: unknown kind '" + kind + "'");
}

inline Limits limits_from_json(const json& j) {
    Limits lim;
    if (j.contains("max_enum_ambient_dim"))
        lim.max_enum_ambient_dim = j.at("max_enum_ambient_dim").get<int>();
    if (j.contains("max_enum_prime"))
        lim.max_enum_prime = j.at("max_enum_prime").get<int>();
    if (j.contains("max_subrep_tuples"))
        lim.max_subrep_tuples = j.at("max_subrep_tuples").get<std::int64_t>();
    if (j.contains("max_preradical_tuples"))
        lim.max_preradical_tuples = j.at("max_preradical_tuples").get<std::int64_t>();
    if (j.contains("max_end_search"))
        lim.max_end_search = j.at("max_end_search").get<std::int64_t>();
    if (lim.max_enum_ambient_dim <= 0 || lim.max_enum_prime <= 0 || lim.max_subrep_tuples <= 0 ||
        lim.max_preradical_tuples <= 0 || lim.max_end_search <= 0)
        throw shape_error("limits: all work bounds must be positive");
    return lim;
}

} // namespace preradicals
