#pragma once

// Brute-force reference implementations the tests check the library against.
// Everything here works from first principles (grids, pair enumeration,
// odometer search) and stays independent of the library's own code paths.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "trikraft/structure.hpp"

namespace oracles {

// Canonical vertex numbering, restated from the grid definition: apex = 0,
// then row-major grid points.
inline int grid_vertex(int n, int row, int col) {
    return 1 + (row - 1) * n + (col - 1);
}

inline std::pair<int, int> normalized(int u, int v) {
    return u < v ? std::make_pair(u, v) : std::make_pair(v, u);
}

// Consecutive-along-line adjacency, straight from the grid: the apex meets
// row 1 in every column, vertical neighbors share a column, horizontal
// neighbors share a row.
inline std::set<std::pair<int, int>> path_mode_edges(int n) {
    std::set<std::pair<int, int>> edges;
    for (int c = 1; c <= n; ++c) {
        edges.insert(normalized(0, grid_vertex(n, 1, c)));
        for (int r = 1; r <= n - 2; ++r) {
            edges.insert(normalized(grid_vertex(n, r, c), grid_vertex(n, r + 1, c)));
        }
    }
    for (int r = 1; r <= n - 1; ++r) {
        for (int c = 1; c <= n - 1; ++c) {
            edges.insert(normalized(grid_vertex(n, r, c), grid_vertex(n, r, c + 1)));
        }
    }
    return edges;
}

// All-collinear adjacency: the apex shares an inclined line with every grid
// point; grid points are collinear iff they share a row or a column.
inline std::set<std::pair<int, int>> clique_mode_edges(int n) {
    std::set<std::pair<int, int>> edges;
    for (int r = 1; r <= n - 1; ++r) {
        for (int c = 1; c <= n; ++c) {
            edges.insert(normalized(0, grid_vertex(n, r, c)));
        }
    }
    for (int r1 = 1; r1 <= n - 1; ++r1) {
        for (int c1 = 1; c1 <= n; ++c1) {
            for (int r2 = r1; r2 <= n - 1; ++r2) {
                for (int c2 = 1; c2 <= n; ++c2) {
                    if (r1 == r2 && c2 <= c1) {
                        continue;
                    }
                    if (r1 == r2 || c1 == c2) {
                        edges.insert(normalized(grid_vertex(n, r1, c1), grid_vertex(n, r2, c2)));
                    }
                }
            }
        }
    }
    return edges;
}

// Smallest k <= max_colors admitting a proper coloring, found by plain
// odometer enumeration over all k^V assignments; -1 when none fits.
inline int brute_force_chromatic(const trikraft::Graph& g, int max_colors) {
    const int vertex_count = g.vertex_count();
    if (vertex_count == 0) {
        return 0;
    }
    const auto& edges = g.edges();
    for (int k = 1; k <= max_colors; ++k) {
        std::vector<int> assignment(vertex_count, 0);
        while (true) {
            bool proper = true;
            for (const auto& [u, v] : edges) {
                if (assignment[u] == assignment[v]) {
                    proper = false;
                    break;
                }
            }
            if (proper) {
                return k;
            }
            int position = 0;
            while (position < vertex_count && ++assignment[position] == k) {
                assignment[position] = 0;
                ++position;
            }
            if (position == vertex_count) {
                break;
            }
        }
    }
    return -1;
}

// 1 + number of distinct non-empty prefixes across the word set.
inline std::size_t trie_node_count_by_prefixes(const std::vector<std::string>& words) {
    std::set<std::string> prefixes;
    for (const std::string& word : words) {
        for (std::size_t length = 1; length <= word.size(); ++length) {
            prefixes.insert(word.substr(0, length));
        }
    }
    return prefixes.size() + 1;
}

// Random prefix-free code: grow a full binary tree by splitting random
// leaves, then optionally drop some leaves. Full-tree leaves sum to exactly
// 1; dropping keeps the set prefix-free and the sum below 1.
inline std::vector<std::string> random_prefix_free_code(std::mt19937& rng, int max_depth) {
    std::vector<std::string> leaves = {"0", "1"};
    const int extra_splits = static_cast<int>(rng() % 24);
    for (int i = 0; i < extra_splits; ++i) {
        std::vector<std::size_t> splittable;
        for (std::size_t j = 0; j < leaves.size(); ++j) {
            if (leaves[j].size() < static_cast<std::size_t>(max_depth)) {
                splittable.push_back(j);
            }
        }
        if (splittable.empty()) {
            break;
        }
        const std::size_t pick = splittable[rng() % splittable.size()];
        const std::string base = leaves[pick];
        leaves[pick] = base + "0";
        leaves.push_back(base + "1");
    }
    if (rng() % 2 == 0) {
        const std::size_t drops = rng() % leaves.size();
        for (std::size_t i = 0; i < drops && leaves.size() > 1; ++i) {
            leaves.erase(leaves.begin() + static_cast<std::ptrdiff_t>(rng() % leaves.size()));
        }
    }
    std::shuffle(leaves.begin(), leaves.end(), rng);
    return leaves;
}

// Integer-only admissibility check: sum of 2^(L - n_k) against 2^L for
// L = max length. Valid as long as lengths stay far below 64 bits.
inline bool kraft_admissible_u64(const std::vector<int>& lengths) {
    if (lengths.empty()) {
        return true;
    }
    const int max_length = *std::max_element(lengths.begin(), lengths.end());
    std::uint64_t scaled = 0;
    for (int length : lengths) {
        scaled += std::uint64_t{1} << (max_length - length);
    }
    return scaled <= (std::uint64_t{1} << max_length);
}

} // namespace oracles
