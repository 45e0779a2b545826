#pragma once

#include "preradicals/preradical.hpp"

#include <map>
#include <string>

namespace preradicals {

/// Names for the indecomposables and a printing order for preradical
/// tables. For the two-vertex path the names are resolved structurally
/// (P is the two-dimensional indecomposable, S1 the simple embedding
/// into it, S2 its simple quotient), so they do not depend on the
/// orientation of the input quiver. Slot order follows the classical
/// bracket notation: [value at S2, value at P, value at S1].
struct LabelDictionary {
    std::vector<Interval> indecs;
    std::vector<std::string> names; // per indec, canonical order
    std::vector<int> slot_order;    // print order, indices into indecs

    int index_of(const Interval& iv) const {
        for (size_t i = 0; i < indecs.size(); ++i)
            if (indecs[i] == iv)
                return static_cast<int>(i);
        throw shape_error("label dictionary: unknown indecomposable");
    }
    int index_of_name(const std::string& n) const {
        for (size_t i = 0; i < names.size(); ++i)
            if (names[i] == n)
                return static_cast<int>(i);
        throw shape_error("label dictionary: unknown indecomposable name '" + n + "'");
    }
};

inline LabelDictionary structural_dictionary(const Quiver& q, int p) {
    auto ind = type_a_intervals(q, p);
    LabelDictionary dict;
    for (auto& [iv, rep] : ind)
        dict.indecs.push_back(iv);
    dict.names.resize(ind.size());
    dict.slot_order.resize(ind.size());
    if (q.vertices == 2) {
        int pi = -1, s1 = -1, s2 = -1;
        for (size_t i = 0; i < ind.size(); ++i)
            if (ind[i].second.total_dim() == 2)
                pi = static_cast<int>(i);
        for (size_t i = 0; i < ind.size(); ++i) {
            if (static_cast<int>(i) == pi)
                continue;
            if (hom_dim(ind[i].second, ind[pi].second) > 0)
                s1 = static_cast<int>(i);
            if (hom_dim(ind[pi].second, ind[i].second) > 0)
                s2 = static_cast<int>(i);
        }
        dict.names[pi] = "P";
        dict.names[s1] = "S1";
        dict.names[s2] = "S2";
        dict.slot_order = {s2, pi, s1};
    } else {
        for (size_t i = 0; i < ind.size(); ++i) {
            dict.names[i] = "M[" + std::to_string(ind[i].first.lo + 1) + "," +
                            std::to_string(ind[i].first.hi + 1) + "]";
            dict.slot_order[i] = static_cast<int>(i);
        }
    }
    return dict;
}

/// Name a single value: zero, the full indecomposable, or the
/// connected components of its support (each component of a subobject
/// of an interval module is itself an interval module).
inline std::string value_name(const LabelDictionary& dict, const Preradical& pr, int i) {
    const Subrep& val = pr.values[i];
    if (val.is_zero())
        return "0";
    if (val.is_full())
        return dict.names[i];
    std::vector<int> support;
    for (int v = 0; v < pr.q.vertices; ++v)
        if (val.spaces[v].dim() > 0)
            support.push_back(v);
    std::string out;
    size_t k = 0;
    while (k < support.size()) {
        size_t j = k;
        while (j + 1 < support.size() && support[j + 1] == support[j] + 1)
            ++j;
        if (!out.empty())
            out += "+";
        out += dict.names[dict.index_of(Interval{support[k], support[j]})];
        k = j + 1;
    }
    return out;
}

/// Bracket string like "[S2,S1,0]" listing the values in slot order.
inline std::string label_preradical(const Preradical& pr, const LabelDictionary& dict) {
    std::string out = "[";
    for (size_t s = 0; s < dict.slot_order.size(); ++s) {
        if (s)
            out += ",";
        out += value_name(dict, pr, dict.slot_order[s]);
    }
    return out + "]";
}

/// Short names for the eight preradicals of the two-vertex path,
/// matching the classical lattice diagram; falls back to the bracket
/// table elsewhere.
inline std::string short_name(const Preradical& pr, const LabelDictionary& dict) {
    static const std::map<std::string, std::string> a2_names = {
        {"[0,0,0]", "0"},        {"[0,S1,0]", "rho1"},   {"[0,S1,S1]", "omega0"},
        {"[S2,0,0]", "gamma0"},  {"[S2,S1,0]", "xi"},    {"[S2,S1,S1]", "iota0"},
        {"[S2,P,0]", "gamma1"},  {"[S2,P,S1]", "1"},
    };
    std::string bracket = label_preradical(pr, dict);
    if (pr.q.vertices == 2) {
        auto it = a2_names.find(bracket);
        if (it != a2_names.end())
            return it->second;
    }
    if (pr.values.size() == static_cast<size_t>(std::count_if(
            pr.values.begin(), pr.values.end(), [](const Subrep& v) { return v.is_zero(); })))
        return "0";
    if (pr.values.size() == static_cast<size_t>(std::count_if(
            pr.values.begin(), pr.values.end(), [](const Subrep& v) { return v.is_full(); })))
        return "1";
    return bracket;
}

} // namespace preradicals
