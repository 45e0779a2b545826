#pragma once

#include "preradicals/errors.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace preradicals {

/// A finite acyclic quiver, vertices indexed 0..n-1.
struct Quiver {
    int vertices = 0;
    std::vector<std::pair<int, int>> arrows; // (source, target)
    std::vector<std::string> labels;         // optional, per vertex

    bool operator==(const Quiver&) const = default;
};

inline void validate_quiver(const Quiver& q) {
    if (q.vertices < 0)
        throw shape_error("quiver: negative vertex count");
    for (auto [s, t] : q.arrows)
        if (s < 0 || s >= q.vertices || t < 0 || t >= q.vertices)
            throw shape_error("quiver: arrow endpoint out of range");
    if (!q.labels.empty() && static_cast<int>(q.labels.size()) != q.vertices)
        throw shape_error("quiver: label count differs from vertex count");
    // acyclic: Kahn's algorithm must consume all vertices
    std::vector<int> indeg(q.vertices, 0);
    for (auto [s, t] : q.arrows)
        ++indeg[t];
    std::vector<int> stack;
    for (int v = 0; v < q.vertices; ++v)
        if (indeg[v] == 0)
            stack.push_back(v);
    int seen = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++seen;
        for (size_t a = 0; a < q.arrows.size(); ++a)
            if (q.arrows[a].first == v && --indeg[q.arrows[a].second] == 0)
                stack.push_back(q.arrows[a].second);
    }
    if (seen != q.vertices)
        throw shape_error("quiver: not acyclic");
}

/// Reverse every arrow, keeping the arrow order. Applying twice gives
/// back the original quiver bit-exactly.
inline Quiver opposite(const Quiver& q) {
    Quiver op = q;
    for (auto& [s, t] : op.arrows)
        std::swap(s, t);
    return op;
}

/// Type A in canonical presentation: arrow k joins vertices {k, k+1}
/// in either direction.
inline bool is_type_a(const Quiver& q) {
    if (q.vertices < 1 || static_cast<int>(q.arrows.size()) != q.vertices - 1)
        return false;
    for (int k = 0; k + 1 < q.vertices; ++k) {
        auto [s, t] = q.arrows[k];
        if (!((s == k && t == k + 1) || (s == k + 1 && t == k)))
            return false;
    }
    return true;
}

inline void require_type_a(const Quiver& q) {
    validate_quiver(q);
    if (!is_type_a(q))
        throw shape_error("quiver is not a type-A path (arrow k must join vertices k, k+1)");
}

/// All arrows point forward: k -> k+1.
inline bool is_equioriented(const Quiver& q) {
    if (!is_type_a(q))
        return false;
    for (int k = 0; k + 1 < q.vertices; ++k)
        if (q.arrows[k] != std::pair{k, k + 1})
            return false;
    return true;
}

inline Quiver type_a_quiver(int n, int p_unused = 0) {
    (void)p_unused;
    Quiver q;
    q.vertices = n;
    for (int k = 0; k + 1 < n; ++k)
        q.arrows.emplace_back(k, k + 1);
    return q;
}

/// The unique directed path from u to v as a list of arrow indices in
/// traversal order, if one exists. Directed paths in a type-A quiver
/// are unique when they exist.
inline std::optional<std::vector<int>> find_path(const Quiver& q, int u, int v) {
    if (u == v)
        return std::vector<int>{};
    // BFS over arrows; acyclicity bounds the search
    std::vector<int> prev_arrow(q.vertices, -1), prev_vertex(q.vertices, -1);
    std::vector<bool> seen(q.vertices, false);
    std::vector<int> frontier{u};
    seen[u] = true;
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int w : frontier)
            for (size_t a = 0; a < q.arrows.size(); ++a)
                if (q.arrows[a].first == w && !seen[q.arrows[a].second]) {
                    seen[q.arrows[a].second] = true;
                    prev_arrow[q.arrows[a].second] = static_cast<int>(a);
                    prev_vertex[q.arrows[a].second] = w;
                    next.push_back(q.arrows[a].second);
                }
        frontier = std::move(next);
    }
    if (!seen[v])
        return std::nullopt;
    std::vector<int> path;
    for (int w = v; w != u; w = prev_vertex[w])
        path.push_back(prev_arrow[w]);
    std::reverse(path.begin(), path.end());
    return path;
}

} // namespace preradicals
