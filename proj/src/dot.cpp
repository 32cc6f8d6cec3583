#include "trikraft/dot.hpp"

#include <cstdio>

#include "trikraft/json_io.hpp"

namespace trikraft {

namespace {

std::string format_position(double x, double y) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.2f,%.2f!", x, y);
    return buffer;
}

} // namespace

std::string structure_dot(const TriangularStructure& s, const Graph& g,
                          const Coloring* coloring) {
    const int n = s.order();
    std::string out;
    out += "graph tri" + std::to_string(n) + " {\n";
    out += "  layout=neato;\n";
    out += "  node [shape=circle fontsize=10 width=0.4 fixedsize=true];\n";
    const auto points = s.points();
    for (std::size_t v = 0; v < points.size(); ++v) {
        const PointId p = points[v];
        const double x = p.is_apex() ? (1.0 + n) / 2.0 : p.col;
        const double y = -p.row;
        out += "  \"" + point_name(p) + "\" [pos=\"" + format_position(x, y) + "\"";
        if (coloring != nullptr) {
            out += " style=filled fillcolor=\"" + color_name(coloring->colors[v]) + "\"";
        }
        out += "];\n";
    }
    for (const auto& [u, v] : g.edges()) {
        out += "  \"" + point_name(points[u]) + "\" -- \"" + point_name(points[v]) + "\";\n";
    }
    out += "}\n";
    return out;
}

std::string code_tree_dot(const CodeTree& tree) {
    const auto colors = depth_two_coloring(tree);
    std::string out;
    out += "graph codetree {\n";
    out += "  node [fontsize=10];\n";
    auto name_of = [&](int id) { return "n0" + tree.bit_path(id); };
    const auto order = tree.preorder();
    for (int id : order) {
        const auto& node = tree.node(id);
        out += "  \"" + name_of(id) + "\" [shape=" +
               (node.word_index >= 0 ? "doublecircle" : "circle") + " style=filled fillcolor=\"" +
               std::string(node_color_name(colors[id])) + "\"];\n";
    }
    for (int id : order) {
        for (int branch : {0, 1}) {
            const int child = tree.node(id).child[branch];
            if (child >= 0) {
                out += "  \"" + name_of(id) + "\" -- \"" + name_of(child) + "\";\n";
            }
        }
    }
    out += "}\n";
    return out;
}

} // namespace trikraft
