#pragma once

#include "preradicals/adjunction.hpp"
#include "preradicals/labels.hpp"
#include "preradicals/report.hpp"

#include <sstream>

namespace preradicals {

/// A finite lattice of preradicals: cover relations, idempotent and
/// radical marks, join/meet tables, and a height per node for the
/// diagram ranks.
struct Hasse {
    std::vector<Preradical> nodes;
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> covers; // (lower, upper), transitively irredundant
    std::vector<bool> idempotent;
    std::vector<bool> radical;
    std::vector<std::vector<int>> join_table;
    std::vector<std::vector<int>> meet_table;
    std::vector<int> height;

    int size() const { return static_cast<int>(nodes.size()); }
};

/// Assemble the poset structure of a finite set of preradicals.
/// Join/meet tables are computed intrinsically from the order and must
/// exist uniquely: a missing least upper bound or greatest lower bound
/// raises a closure error naming the offending pair.
inline Hasse build_poset(const std::vector<Preradical>& prs, const std::vector<std::string>& labels) {
    const int n = static_cast<int>(prs.size());
    if (labels.size() != prs.size())
        throw shape_error("build_poset: one label per node required");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (prs[i] == prs[j])
                throw closure_error("build_poset: nodes " + labels[i] + " and " + labels[j] +
                                    " are equal");
    std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            le[i][j] = leq(prs[i], prs[j]);

    Hasse h;
    h.nodes = prs;
    h.labels = labels;
    h.join_table.assign(n, std::vector<int>(n, -1));
    h.meet_table.assign(n, std::vector<int>(n, -1));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::vector<int> ub, lb;
            for (int k = 0; k < n; ++k) {
                if (le[i][k] && le[j][k])
                    ub.push_back(k);
                if (le[k][i] && le[k][j])
                    lb.push_back(k);
            }
            for (int k : ub) {
                bool least = true;
                for (int m : ub)
                    if (!le[k][m])
                        least = false;
                if (least) {
                    h.join_table[i][j] = k;
                    break;
                }
            }
            for (int k : lb) {
                bool greatest = true;
                for (int m : lb)
                    if (!le[m][k])
                        greatest = false;
                if (greatest) {
                    h.meet_table[i][j] = k;
                    break;
                }
            }
            if (h.join_table[i][j] < 0 || h.meet_table[i][j] < 0)
                throw closure_error("build_poset: pair (" + labels[i] + ", " + labels[j] +
                                    ") has no join or meet in the node set");
        }

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j || !le[i][j])
                continue;
            bool covered = false;
            for (int k = 0; k < n; ++k)
                if (k != i && k != j && le[i][k] && le[k][j])
                    covered = true;
            if (!covered)
                h.covers.emplace_back(i, j);
        }
    std::sort(h.covers.begin(), h.covers.end());

    for (const auto& pr : prs) {
        h.idempotent.push_back(is_idempotent(pr));
        h.radical.push_back(is_radical(pr));
    }

    h.height.assign(n, 0);
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto [lo, hi] : h.covers)
            if (h.height[hi] < h.height[lo] + 1) {
                h.height[hi] = h.height[lo] + 1;
                changed = true;
            }
    }
    return h;
}

/// The sub-poset spanned by the nodes where keep[] holds.
inline Hasse sub_poset(const Hasse& h, const std::vector<bool>& keep) {
    std::vector<Preradical> nodes;
    std::vector<std::string> labels;
    for (int i = 0; i < h.size(); ++i)
        if (keep[i]) {
            nodes.push_back(h.nodes[i]);
            labels.push_back(h.labels[i]);
        }
    return build_poset(nodes, labels);
}

/// Lattice-law battery over the stored tables: order/cover coherence,
/// commutativity, associativity, absorption, and the least-upper /
/// greatest-lower bound property against the raw order.
inline Report verify_lattice_laws(const Hasse& h) {
    Report report;
    const int n = h.size();
    std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            le[i][j] = leq(h.nodes[i], h.nodes[j]);

    // reflexive-transitive closure of the covers must reproduce leq
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i)
        reach[i][i] = true;
    for (auto [lo, hi] : h.covers)
        reach[lo][hi] = true;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (reach[i][k] && reach[k][j])
                    reach[i][j] = true;
    bool ok = true;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (reach[i][j] != le[i][j])
                ok = false;
    report.add("cover closure reproduces the order", ok);

    // covers are irreflexive and transitively irredundant
    ok = true;
    for (auto [lo, hi] : h.covers) {
        if (lo == hi || !le[lo][hi])
            ok = false;
        for (int k = 0; k < n; ++k)
            if (k != lo && k != hi && le[lo][k] && le[k][hi])
                ok = false;
    }
    report.add("covers are irredundant", ok);

    ok = true;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (h.join_table[i][j] != h.join_table[j][i] || h.meet_table[i][j] != h.meet_table[j][i])
                ok = false;
    report.add("join/meet commutative", ok);

    ok = true;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                if (h.join_table[h.join_table[i][j]][k] != h.join_table[i][h.join_table[j][k]])
                    ok = false;
                if (h.meet_table[h.meet_table[i][j]][k] != h.meet_table[i][h.meet_table[j][k]])
                    ok = false;
            }
    report.add("join/meet associative", ok);

    ok = true;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (h.join_table[i][h.meet_table[i][j]] != i || h.meet_table[i][h.join_table[i][j]] != i)
                ok = false;
    report.add("absorption laws", ok);

    ok = true;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int s = h.join_table[i][j], m = h.meet_table[i][j];
            if (!le[i][s] || !le[j][s] || !le[m][i] || !le[m][j])
                ok = false;
            for (int k = 0; k < n; ++k) {
                if (le[i][k] && le[j][k] && !le[s][k])
                    ok = false;
                if (le[k][i] && le[k][j] && !le[k][m])
                    ok = false;
            }
        }
    report.add("join is lub, meet is glb", ok);
    return report;
}

/// Extension of the battery across a Galois connection: phi preserves
/// all joins, psi preserves all meets, computed over the two supplied
/// full lattices.
inline Report verify_lattice_laws(const Hasse& hA, const Hasse& hB, const AdjointPair& adj) {
    Report report = verify_lattice_laws(hA);
    report.merge(verify_lattice_laws(hB));
    auto find = [](const Hasse& h, const Preradical& pr) {
        for (int i = 0; i < h.size(); ++i)
            if (h.nodes[i] == pr)
                return i;
        return -1;
    };
    bool ok = true;
    for (int i = 0; i < hA.size(); ++i)
        for (int j = 0; j < hA.size(); ++j) {
            Preradical lhs = phi(adj, hA.nodes[hA.join_table[i][j]]);
            int fi = find(hB, phi(adj, hA.nodes[i])), fj = find(hB, phi(adj, hA.nodes[j]));
            if (fi < 0 || fj < 0 || find(hB, lhs) != hB.join_table[fi][fj])
                ok = false;
        }
    report.add("phi preserves joins", ok);
    ok = true;
    for (int i = 0; i < hB.size(); ++i)
        for (int j = 0; j < hB.size(); ++j) {
            Preradical lhs = psi(adj, hB.nodes[hB.meet_table[i][j]]);
            int gi = find(hA, psi(adj, hB.nodes[i])), gj = find(hA, psi(adj, hB.nodes[j]));
            if (gi < 0 || gj < 0 || find(hA, lhs) != hA.meet_table[gi][gj])
                ok = false;
        }
    report.add("psi preserves meets", ok);
    return report;
}

struct DotStyle {
    std::string graph_name = "preradicals";
    std::string idempotent_attr = "style=filled, fillcolor=lightblue";
    std::string radical_attr = "peripheries=2";
};

/// Deterministic DOT rendering: nodes grouped into ranks by lattice
/// height, idempotents and radicals styled with distinct glyph
/// attributes, emission order fixed by node index and sorted covers.
inline std::string to_dot(const Hasse& h, const DotStyle& style = {}) {
    std::ostringstream out;
    out << "digraph " << style.graph_name << " {\n";
    out << "  rankdir=BT;\n";
    out << "  node [shape=ellipse, fontname=\"Helvetica\"];\n";
    int max_height = 0;
    for (int v : h.height)
        max_height = std::max(max_height, v);
    for (int r = 0; r <= max_height; ++r) {
        out << "  { rank=same;";
        for (int i = 0; i < h.size(); ++i)
            if (h.height[i] == r)
                out << " \"" << h.labels[i] << "\";";
        out << " }\n";
    }
    for (int i = 0; i < h.size(); ++i) {
        out << "  \"" << h.labels[i] << "\"";
        std::string attrs;
        if (h.idempotent[i])
            attrs += style.idempotent_attr;
        if (h.radical[i]) {
            if (!attrs.empty())
                attrs += ", ";
            attrs += style.radical_attr;
        }
        if (!attrs.empty())
            out << " [" << attrs << "]";
        out << ";\n";
    }
    for (auto [lo, hi] : h.covers)
        out << "  \"" << h.labels[lo] << "\" -> \"" << h.labels[hi] << "\";\n";
    out << "}\n";
    return out.str();
}

} // namespace preradicals
