#include "trikraft/structure.hpp"

#include <algorithm>
#include <stdexcept>

namespace trikraft {

TriangularStructure TriangularStructure::build(int order) {
    if (order < 2) {
        throw std::domain_error("structure order must be at least 2, got " +
                                std::to_string(order));
    }
    TriangularStructure s;
    s.order_ = order;
    s.inclined_.resize(order);
    for (int c = 1; c <= order; ++c) {
        auto& line = s.inclined_[c - 1];
        line.reserve(order);
        line.push_back(PointId::apex());
        for (int r = 1; r <= order - 1; ++r) {
            line.push_back(PointId::row_col(r, c));
        }
    }
    s.horizontal_.resize(order - 1);
    for (int r = 1; r <= order - 1; ++r) {
        auto& line = s.horizontal_[r - 1];
        line.reserve(order);
        for (int c = 1; c <= order; ++c) {
            line.push_back(PointId::row_col(r, c));
        }
    }
    return s;
}

std::size_t TriangularStructure::point_count() const {
    return static_cast<std::size_t>(order_) * (order_ - 1) + 1;
}

std::vector<PointId> TriangularStructure::points() const {
    std::vector<PointId> all;
    all.reserve(point_count());
    all.push_back(PointId::apex());
    for (int r = 1; r <= order_ - 1; ++r) {
        for (int c = 1; c <= order_; ++c) {
            all.push_back(PointId::row_col(r, c));
        }
    }
    return all;
}

std::span<const PointId> TriangularStructure::line_points(LineRef line) const {
    if (line.kind == LineKind::Inclined) {
        if (line.index < 1 || line.index > order_) {
            throw std::domain_error("inclined line index out of range");
        }
        return inclined_[line.index - 1];
    }
    if (line.index < 1 || line.index > order_ - 1) {
        throw std::domain_error("horizontal line index out of range");
    }
    return horizontal_[line.index - 1];
}

bool TriangularStructure::contains(PointId p) const {
    if (p.is_apex()) {
        return p.col == 0;
    }
    return p.row >= 1 && p.row <= order_ - 1 && p.col >= 1 && p.col <= order_;
}

std::vector<LineRef> TriangularStructure::lines_through(PointId p) const {
    if (!contains(p)) {
        throw std::domain_error("point " + point_name(p) + " is not in the structure");
    }
    if (p.is_apex()) {
        std::vector<LineRef> lines;
        lines.reserve(order_);
        for (int c = 1; c <= order_; ++c) {
            lines.push_back({LineKind::Inclined, c});
        }
        return lines;
    }
    return {{LineKind::Inclined, p.col}, {LineKind::Horizontal, p.row}};
}

int TriangularStructure::vertex_index(PointId p) const {
    if (!contains(p)) {
        throw std::domain_error("point " + point_name(p) + " is not in the structure");
    }
    if (p.is_apex()) {
        return 0;
    }
    return 1 + (p.row - 1) * order_ + (p.col - 1);
}

PointId TriangularStructure::point_at(int vertex) const {
    if (vertex < 0 || static_cast<std::size_t>(vertex) >= point_count()) {
        throw std::domain_error("vertex index out of range");
    }
    if (vertex == 0) {
        return PointId::apex();
    }
    const int offset = vertex - 1;
    return PointId::row_col(offset / order_ + 1, offset % order_ + 1);
}

Graph::Graph(int vertex_count, std::vector<std::pair<int, int>> edges,
             std::vector<PointId> labels)
    : vertex_count_(vertex_count), labels_(std::move(labels)) {
    if (vertex_count < 0) {
        throw std::domain_error("vertex count must be nonnegative");
    }
    if (!labels_.empty() && labels_.size() != static_cast<std::size_t>(vertex_count)) {
        throw std::domain_error("label count must match vertex count");
    }
    for (auto& [u, v] : edges) {
        if (u == v) {
            throw std::domain_error("self-loop on vertex " + std::to_string(u));
        }
        if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count) {
            throw std::domain_error("edge endpoint out of range");
        }
        if (u > v) {
            std::swap(u, v);
        }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);
    adjacency_.resize(vertex_count_);
    for (const auto& [u, v] : edges_) {
        adjacency_[u].push_back(v);
        adjacency_[v].push_back(u);
    }
    for (auto& list : adjacency_) {
        std::sort(list.begin(), list.end());
    }
}

std::span<const int> Graph::neighbors(int v) const {
    if (v < 0 || v >= vertex_count_) {
        throw std::domain_error("vertex index out of range");
    }
    return adjacency_[v];
}

int Graph::degree(int v) const {
    return static_cast<int>(neighbors(v).size());
}

int Graph::max_degree() const {
    int best = 0;
    for (const auto& list : adjacency_) {
        best = std::max(best, static_cast<int>(list.size()));
    }
    return best;
}

bool Graph::has_edge(int u, int v) const {
    const auto list = neighbors(u);
    return std::binary_search(list.begin(), list.end(), v);
}

Graph to_graph(const TriangularStructure& s, AdjacencyMode mode) {
    std::vector<std::pair<int, int>> edges;
    auto add_line = [&](const std::vector<PointId>& line) {
        if (mode == AdjacencyMode::PathAlongLines) {
            for (std::size_t i = 0; i + 1 < line.size(); ++i) {
                edges.emplace_back(s.vertex_index(line[i]), s.vertex_index(line[i + 1]));
            }
        } else {
            for (std::size_t i = 0; i < line.size(); ++i) {
                for (std::size_t j = i + 1; j < line.size(); ++j) {
                    edges.emplace_back(s.vertex_index(line[i]), s.vertex_index(line[j]));
                }
            }
        }
    };
    for (const auto& line : s.inclined_lines()) {
        add_line(line);
    }
    for (const auto& line : s.horizontal_lines()) {
        add_line(line);
    }
    return Graph(static_cast<int>(s.point_count()), std::move(edges), s.points());
}

std::string point_name(PointId p) {
    if (p.is_apex()) {
        return "apex";
    }
    return "r" + std::to_string(p.row) + "c" + std::to_string(p.col);
}

} // namespace trikraft
