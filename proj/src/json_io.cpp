#include "trikraft/json_io.hpp"

#include <array>
#include <charconv>

namespace trikraft {

namespace {

constexpr std::array<std::string_view, 5> kColorNames = {"red", "black", "blue", "green", "grey"};

const json& require_member(const json& object, const std::string& path, const char* key) {
    if (!object.is_object()) {
        throw JsonSchemaError(path, "expected an object");
    }
    auto it = object.find(key);
    if (it == object.end()) {
        throw JsonSchemaError(path + "." + key, "missing required member");
    }
    return *it;
}

int require_int(const json& value, const std::string& path) {
    if (!value.is_number_integer()) {
        throw JsonSchemaError(path, "expected an integer");
    }
    return value.get<int>();
}

const json& require_array(const json& value, const std::string& path) {
    if (!value.is_array()) {
        throw JsonSchemaError(path, "expected an array");
    }
    return value;
}

std::string require_string(const json& value, const std::string& path) {
    if (!value.is_string()) {
        throw JsonSchemaError(path, "expected a string");
    }
    return value.get<std::string>();
}

void reject_unknown_members(const json& object, const std::string& path,
                            std::initializer_list<std::string_view> known) {
    for (const auto& [key, value] : object.items()) {
        bool recognized = false;
        for (std::string_view candidate : known) {
            if (key == candidate) {
                recognized = true;
                break;
            }
        }
        if (!recognized) {
            throw JsonSchemaError(path + "." + key, "unknown member");
        }
    }
}

PointId parse_point_name(const std::string& name, const std::string& path) {
    if (name == "apex") {
        return PointId::apex();
    }
    const auto* begin = name.data();
    const auto* end = name.data() + name.size();
    int row = 0;
    int col = 0;
    if (begin == end || *begin != 'r') {
        throw JsonSchemaError(path, "expected \"apex\" or \"r<row>c<col>\", got \"" + name + "\"");
    }
    auto row_result = std::from_chars(begin + 1, end, row);
    if (row_result.ec != std::errc{} || row_result.ptr == end || *row_result.ptr != 'c') {
        throw JsonSchemaError(path, "expected \"apex\" or \"r<row>c<col>\", got \"" + name + "\"");
    }
    auto col_result = std::from_chars(row_result.ptr + 1, end, col);
    if (col_result.ec != std::errc{} || col_result.ptr != end) {
        throw JsonSchemaError(path, "expected \"apex\" or \"r<row>c<col>\", got \"" + name + "\"");
    }
    if (row < 1 || col < 1) {
        throw JsonSchemaError(path, "point coordinates are 1-based, got \"" + name + "\"");
    }
    return PointId::row_col(row, col);
}

std::vector<PointId> parse_point_array(const json& value, const std::string& path) {
    const json& array = require_array(value, path);
    std::vector<PointId> points;
    points.reserve(array.size());
    for (std::size_t i = 0; i < array.size(); ++i) {
        const std::string element_path = path + "[" + std::to_string(i) + "]";
        points.push_back(parse_point_name(require_string(array[i], element_path), element_path));
    }
    return points;
}

json point_array_to_json(std::span<const PointId> points) {
    json array = json::array();
    for (PointId p : points) {
        array.push_back(point_name(p));
    }
    return array;
}

} // namespace

std::string color_name(int index) {
    if (index >= 0 && static_cast<std::size_t>(index) < kColorNames.size()) {
        return std::string(kColorNames[index]);
    }
    return "c" + std::to_string(index);
}

DocumentKind detect_document_kind(const json& document) {
    if (!document.is_object()) {
        throw JsonSchemaError("$", "expected a JSON object");
    }
    if (document.contains("order")) {
        return DocumentKind::Structure;
    }
    if (document.contains("vertex_count")) {
        return DocumentKind::Graph;
    }
    if (document.contains("colors")) {
        return DocumentKind::Coloring;
    }
    throw JsonSchemaError("$", "unrecognized document: expected one of "
                               "\"order\", \"vertex_count\" or \"colors\"");
}

json structure_to_json(const TriangularStructure& s, const Coloring* coloring) {
    json document;
    document["order"] = s.order();
    document["points"] = point_array_to_json(s.points());
    json inclined = json::array();
    for (const auto& line : s.inclined_lines()) {
        inclined.push_back(point_array_to_json(line));
    }
    document["inclined_lines"] = std::move(inclined);
    json horizontal = json::array();
    for (const auto& line : s.horizontal_lines()) {
        horizontal.push_back(point_array_to_json(line));
    }
    document["horizontal_lines"] = std::move(horizontal);
    if (coloring != nullptr) {
        document["coloring"] = coloring_to_json(*coloring);
    }
    return document;
}

StructureDocument structure_document_from_json(const json& document) {
    reject_unknown_members(document, "$",
                           {"order", "points", "inclined_lines", "horizontal_lines", "coloring"});
    const int order = require_int(require_member(document, "$", "order"), "$.order");
    TriangularStructure structure = TriangularStructure::build(order);

    const auto points = parse_point_array(require_member(document, "$", "points"), "$.points");
    if (points != structure.points()) {
        throw std::domain_error("points do not match the canonical order-" +
                                std::to_string(order) + " enumeration");
    }
    auto check_lines = [&](const char* key, const std::vector<std::vector<PointId>>& expected) {
        const std::string path = std::string("$.") + key;
        const json& array = require_array(require_member(document, "$", key), path);
        if (array.size() != expected.size()) {
            throw std::domain_error(std::string(key) + " must list " +
                                    std::to_string(expected.size()) + " lines");
        }
        for (std::size_t i = 0; i < array.size(); ++i) {
            const auto line = parse_point_array(array[i], path + "[" + std::to_string(i) + "]");
            if (line != expected[i]) {
                throw std::domain_error(std::string(key) + "[" + std::to_string(i) +
                                        "] does not match the canonical line");
            }
        }
    };
    check_lines("inclined_lines", structure.inclined_lines());
    check_lines("horizontal_lines", structure.horizontal_lines());

    StructureDocument result{std::move(structure), std::nullopt};
    if (document.contains("coloring")) {
        Coloring coloring = coloring_from_json(document["coloring"]);
        if (coloring.colors.size() != result.structure.point_count()) {
            throw std::domain_error("coloring covers " + std::to_string(coloring.colors.size()) +
                                    " of " + std::to_string(result.structure.point_count()) +
                                    " points");
        }
        result.coloring = std::move(coloring);
    }
    return result;
}

json graph_to_json(const Graph& g) {
    json document;
    document["vertex_count"] = g.vertex_count();
    json edges = json::array();
    for (const auto& [u, v] : g.edges()) {
        edges.push_back(json::array({u, v}));
    }
    document["edges"] = std::move(edges);
    if (!g.labels().empty()) {
        document["labels"] = point_array_to_json(g.labels());
    }
    return document;
}

Graph graph_from_json(const json& document) {
    reject_unknown_members(document, "$", {"vertex_count", "edges", "labels"});
    const int vertex_count =
        require_int(require_member(document, "$", "vertex_count"), "$.vertex_count");
    const json& edges_json = require_array(require_member(document, "$", "edges"), "$.edges");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(edges_json.size());
    for (std::size_t i = 0; i < edges_json.size(); ++i) {
        const std::string path = "$.edges[" + std::to_string(i) + "]";
        const json& pair = require_array(edges_json[i], path);
        if (pair.size() != 2) {
            throw JsonSchemaError(path, "expected a pair of vertex indices");
        }
        edges.emplace_back(require_int(pair[0], path + "[0]"), require_int(pair[1], path + "[1]"));
    }
    std::vector<PointId> labels;
    if (document.contains("labels")) {
        labels = parse_point_array(document["labels"], "$.labels");
    }
    return Graph(vertex_count, std::move(edges), std::move(labels));
}

json coloring_to_json(const Coloring& c) {
    json document;
    document["colors"] = c.colors;
    json palette = json::array();
    for (int index = 0; index < c.palette_size(); ++index) {
        palette.push_back(color_name(index));
    }
    document["palette"] = std::move(palette);
    return document;
}

Coloring coloring_from_json(const json& document) {
    reject_unknown_members(document, "$", {"colors", "palette"});
    const json& colors_json = require_array(require_member(document, "$", "colors"), "$.colors");
    Coloring coloring;
    coloring.colors.reserve(colors_json.size());
    for (std::size_t i = 0; i < colors_json.size(); ++i) {
        const std::string path = "$.colors[" + std::to_string(i) + "]";
        const int color = require_int(colors_json[i], path);
        if (color < 0) {
            throw JsonSchemaError(path, "color indices are nonnegative");
        }
        coloring.colors.push_back(color);
    }
    // Contiguity: every index below the max must be in use.
    std::vector<char> used(coloring.palette_size(), 0);
    for (int color : coloring.colors) {
        used[color] = 1;
    }
    for (std::size_t index = 0; index < used.size(); ++index) {
        if (!used[index]) {
            throw std::domain_error("color index " + std::to_string(index) +
                                    " is unused below the palette maximum");
        }
    }
    if (document.contains("palette")) {
        const json& palette = require_array(document["palette"], "$.palette");
        if (static_cast<int>(palette.size()) != coloring.palette_size()) {
            throw std::domain_error("palette lists " + std::to_string(palette.size()) +
                                    " names for " + std::to_string(coloring.palette_size()) +
                                    " colors");
        }
        for (std::size_t i = 0; i < palette.size(); ++i) {
            const std::string path = "$.palette[" + std::to_string(i) + "]";
            if (require_string(palette[i], path) != color_name(static_cast<int>(i))) {
                throw std::domain_error("palette[" + std::to_string(i) +
                                        "] does not match the fixed color table");
            }
        }
    }
    return coloring;
}

std::string to_pretty_string(const json& document) {
    return document.dump(2) + "\n";
}

} // namespace trikraft
