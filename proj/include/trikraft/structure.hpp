#pragma once

#include <compare>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace trikraft {

/// A point of the order-n triangular closed-path structure: either the apex
/// or grid point (row, col), rows 1..n-1 counted from the apex downwards,
/// columns 1..n left to right. row == 0 encodes the apex.
struct PointId {
    int row = 0;
    int col = 0;

    static constexpr PointId apex() { return {}; }
    static constexpr PointId row_col(int row, int col) { return {row, col}; }
    constexpr bool is_apex() const { return row == 0; }
    auto operator<=>(const PointId&) const = default;
};

enum class LineKind { Inclined, Horizontal };

/// 1-based line handle. Inclined lines are numbered by the column they pass
/// through, horizontal lines by row.
struct LineRef {
    LineKind kind = LineKind::Inclined;
    int index = 0;
    auto operator<=>(const LineRef&) const = default;
};

/// How collinear points become graph edges: only consecutive points along a
/// line, or every pair sharing a line.
enum class AdjacencyMode { PathAlongLines, CliquePerLine };

/// The order-n configuration: one apex plus an (n-1) x n grid, n inclined
/// lines of n points through the apex and n-1 horizontal lines of n points,
/// n(n-1)+1 points in total. Immutable after build().
class TriangularStructure {
public:
    /// Throws std::domain_error for n < 2.
    static TriangularStructure build(int order);

    int order() const { return order_; }
    std::size_t point_count() const;

    /// All points in canonical vertex order: apex first, then rows top to
    /// bottom, each left to right.
    std::vector<PointId> points() const;

    const std::vector<std::vector<PointId>>& inclined_lines() const { return inclined_; }
    const std::vector<std::vector<PointId>>& horizontal_lines() const { return horizontal_; }
    std::span<const PointId> line_points(LineRef line) const;

    /// Lines incident to p: the apex sits on all n inclined lines, any grid
    /// point on exactly its inclined and horizontal line. Throws
    /// std::domain_error for points outside the structure.
    std::vector<LineRef> lines_through(PointId p) const;

    bool contains(PointId p) const;

    /// Canonical dense numbering: apex = 0, then row-major grid points.
    int vertex_index(PointId p) const;
    PointId point_at(int vertex) const;

    bool operator==(const TriangularStructure&) const = default;

private:
    int order_ = 0;
    std::vector<std::vector<PointId>> inclined_;
    std::vector<std::vector<PointId>> horizontal_;
};

/// Undirected simple graph over a dense vertex range. Edges are normalized
/// (u < v), sorted and deduplicated; labels map vertices back to structure
/// points when the graph was derived from one.
class Graph {
public:
    Graph() = default;
    Graph(int vertex_count, std::vector<std::pair<int, int>> edges,
          std::vector<PointId> labels = {});

    int vertex_count() const { return vertex_count_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    std::span<const int> neighbors(int v) const;
    int degree(int v) const;
    int max_degree() const;
    bool has_edge(int u, int v) const;
    const std::vector<PointId>& labels() const { return labels_; }

    bool operator==(const Graph& rhs) const {
        return vertex_count_ == rhs.vertex_count_ && edges_ == rhs.edges_ &&
               labels_ == rhs.labels_;
    }

private:
    int vertex_count_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adjacency_;
    std::vector<PointId> labels_;
};

Graph to_graph(const TriangularStructure& s, AdjacencyMode mode);

/// "apex" or "r<row>c<col>".
std::string point_name(PointId p);

} // namespace trikraft
