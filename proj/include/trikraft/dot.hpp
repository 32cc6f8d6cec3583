#pragma once

#include <string>

#include "trikraft/coloring.hpp"
#include "trikraft/prefix_code.hpp"
#include "trikraft/structure.hpp"

namespace trikraft {

/// Neato-style DOT with pinned positions: apex top center, row r at y = -r,
/// column c at x = c. Nodes in canonical vertex order, edges sorted; output
/// is byte-deterministic. Pass a coloring to fill nodes with table colors.
std::string structure_dot(const TriangularStructure& s, const Graph& g,
                          const Coloring* coloring = nullptr);

/// Depth-parity colored code tree. Nodes are written preorder (branch 0
/// first) and named n0 plus their bit path; labeled leaves are double
/// circles.
std::string code_tree_dot(const CodeTree& tree);

} // namespace trikraft
