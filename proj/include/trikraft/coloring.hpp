#pragma once

#include <optional>
#include <span>
#include <vector>

#include "trikraft/structure.hpp"

namespace trikraft {

/// Total assignment of color indices to vertices 0..V-1. Color indices are
/// nonnegative and contiguous from 0 in every coloring this library produces.
struct Coloring {
    std::vector<int> colors;

    int palette_size() const;
    bool operator==(const Coloring&) const = default;
};

/// True iff no edge joins two equal colors. Throws std::domain_error when the
/// coloring is not total on g (wrong size or negative entries).
bool is_proper(const Graph& g, const Coloring& c);

/// First-fit along the given vertex order: each vertex takes the smallest
/// color absent among its already-colored neighbors. The order must be a
/// permutation of 0..V-1 (std::domain_error otherwise). Palette never
/// exceeds max degree + 1.
Coloring greedy_coloring(const Graph& g, std::span<const int> order);

struct ChromaticResult {
    int chi = 0;
    Coloring witness;
};

inline constexpr int kExactSearchVertexLimit = 40;

/// Minimum palette size by deterministic backtracking: fixed vertex order
/// 0..V-1, colors tried ascending, and a vertex may only open one color
/// beyond those already in use. Returns nullopt iff the chromatic number
/// exceeds max_colors. Throws std::length_error above
/// kExactSearchVertexLimit vertices.
std::optional<ChromaticResult> exact_chromatic(const Graph& g, int max_colors);
std::optional<ChromaticResult> exact_chromatic(const Graph& g);

/// Three-color scheme for any order: apex gets color 0, odd rows the vector
/// [1,2,1,2,...], even rows [2,1,2,1,...]. Proper under path adjacency, and
/// rows of equal parity repeat their color vector exactly.
Coloring periodic_coloring(const TriangularStructure& s);

/// True iff horizontal lines whose row numbers agree mod 2 carry identical
/// ordered color vectors. Throws std::domain_error when c is not total on
/// the structure's points.
bool row_periodicity(const TriangularStructure& s, const Coloring& c);

/// The fixed five-color reference assignment shipped for order 4 (the CLI's
/// "paper" strategy). Any other order throws std::domain_error.
Coloring paper_coloring(int order);

} // namespace trikraft
