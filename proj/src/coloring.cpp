#include "trikraft/coloring.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace trikraft {

namespace {

void require_total(const Coloring& c, std::size_t vertex_count, const char* what) {
    if (c.colors.size() != vertex_count) {
        throw std::domain_error(std::string(what) + ": coloring covers " +
                                std::to_string(c.colors.size()) + " of " +
                                std::to_string(vertex_count) + " vertices");
    }
    for (int color : c.colors) {
        if (color < 0) {
            throw std::domain_error(std::string(what) + ": negative color index");
        }
    }
}

} // namespace

int Coloring::palette_size() const {
    int max_color = -1;
    for (int color : colors) {
        max_color = std::max(max_color, color);
    }
    return max_color + 1;
}

bool is_proper(const Graph& g, const Coloring& c) {
    require_total(c, static_cast<std::size_t>(g.vertex_count()), "is_proper");
    for (const auto& [u, v] : g.edges()) {
        if (c.colors[u] == c.colors[v]) {
            return false;
        }
    }
    return true;
}

Coloring greedy_coloring(const Graph& g, std::span<const int> order) {
    const int n = g.vertex_count();
    std::vector<char> seen(order.size(), 0);
    if (order.size() != static_cast<std::size_t>(n)) {
        throw std::domain_error("greedy order must list every vertex exactly once");
    }
    for (int v : order) {
        if (v < 0 || v >= n || seen[v]) {
            throw std::domain_error("greedy order is not a permutation of the vertices");
        }
        seen[v] = 1;
    }
    Coloring result;
    result.colors.assign(n, -1);
    std::vector<char> used(n + 1, 0);
    for (int v : order) {
        for (int u : g.neighbors(v)) {
            if (result.colors[u] >= 0) {
                used[result.colors[u]] = 1;
            }
        }
        int color = 0;
        while (used[color]) {
            ++color;
        }
        result.colors[v] = color;
        for (int u : g.neighbors(v)) {
            if (result.colors[u] >= 0) {
                used[result.colors[u]] = 0;
            }
        }
    }
    return result;
}

namespace {

struct ExactSearch {
    const Graph& graph;
    int color_count;
    std::vector<std::vector<int>> earlier_neighbors;
    std::vector<int> colors;

    explicit ExactSearch(const Graph& g, int k)
        : graph(g), color_count(k), colors(g.vertex_count(), -1) {
        earlier_neighbors.resize(g.vertex_count());
        for (const auto& [u, v] : g.edges()) {
            earlier_neighbors[v].push_back(u);
        }
    }

    bool extend(int v, int max_used) {
        if (v == graph.vertex_count()) {
            return true;
        }
        // Opening more than one fresh color is always a color-swap away from
        // a lexicographically smaller solution, so cap at max_used + 1.
        const int limit = std::min(color_count - 1, max_used + 1);
        for (int color = 0; color <= limit; ++color) {
            bool clash = false;
            for (int u : earlier_neighbors[v]) {
                if (colors[u] == color) {
                    clash = true;
                    break;
                }
            }
            if (clash) {
                continue;
            }
            colors[v] = color;
            if (extend(v + 1, std::max(max_used, color))) {
                return true;
            }
        }
        colors[v] = -1;
        return false;
    }
};

} // namespace

std::optional<ChromaticResult> exact_chromatic(const Graph& g, int max_colors) {
    if (g.vertex_count() > kExactSearchVertexLimit) {
        throw std::length_error("exact search supports at most " +
                                std::to_string(kExactSearchVertexLimit) + " vertices, got " +
                                std::to_string(g.vertex_count()));
    }
    if (max_colors < 0) {
        throw std::domain_error("max_colors must be nonnegative");
    }
    if (g.vertex_count() == 0) {
        return ChromaticResult{0, Coloring{}};
    }
    for (int k = 1; k <= max_colors; ++k) {
        ExactSearch search(g, k);
        if (search.extend(0, -1)) {
            return ChromaticResult{k, Coloring{std::move(search.colors)}};
        }
    }
    return std::nullopt;
}

std::optional<ChromaticResult> exact_chromatic(const Graph& g) {
    return exact_chromatic(g, g.vertex_count());
}

Coloring periodic_coloring(const TriangularStructure& s) {
    const int n = s.order();
    Coloring result;
    result.colors.reserve(s.point_count());
    result.colors.push_back(0);
    for (int r = 1; r <= n - 1; ++r) {
        for (int c = 1; c <= n; ++c) {
            const bool flip = (r % 2 == 0);
            const int base = (c % 2 == 1) ? 1 : 2;
            result.colors.push_back(flip ? 3 - base : base);
        }
    }
    return result;
}

bool row_periodicity(const TriangularStructure& s, const Coloring& c) {
    require_total(c, s.point_count(), "row_periodicity");
    const int n = s.order();
    auto row_vector = [&](int r) {
        std::vector<int> colors;
        colors.reserve(n);
        for (int col = 1; col <= n; ++col) {
            colors.push_back(c.colors[s.vertex_index(PointId::row_col(r, col))]);
        }
        return colors;
    };
    std::optional<std::vector<int>> reference[2];
    for (int r = 1; r <= n - 1; ++r) {
        auto& ref = reference[r % 2];
        auto colors = row_vector(r);
        if (!ref) {
            ref = std::move(colors);
        } else if (*ref != colors) {
            return false;
        }
    }
    return true;
}

Coloring paper_coloring(int order) {
    if (order != 4) {
        throw std::domain_error("the reference five-color assignment exists only for order 4");
    }
    // Apex red, then rows top to bottom: black/blue/green/grey,
    // blue/red/grey/blue, black/blue/green/grey.
    return Coloring{{0, 1, 2, 3, 4, 2, 0, 4, 2, 1, 2, 3, 4}};
}

} // namespace trikraft
