#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "trikraft/coloring.hpp"
#include "trikraft/structure.hpp"

namespace trikraft {

using json = nlohmann::ordered_json;

/// Document does not match the expected shape. what() carries the JSON path
/// of the offending element, e.g. "$.inclined_lines[2][0]".
class JsonSchemaError : public std::runtime_error {
public:
    JsonSchemaError(std::string path, const std::string& message)
        : std::runtime_error(path + ": " + message), path_(std::move(path)) {}
    const std::string& path() const { return path_; }

private:
    std::string path_;
};

/// Fixed display table: red, black, blue, green, grey; anything past the
/// table renders as "c<k>".
std::string color_name(int index);

enum class DocumentKind { Structure, Graph, Coloring };

/// Dispatch on the top-level keys: "order" marks a structure document,
/// "vertex_count" a graph, "colors" a bare coloring.
DocumentKind detect_document_kind(const json& document);

struct StructureDocument {
    TriangularStructure structure;
    std::optional<Coloring> coloring;
};

json structure_to_json(const TriangularStructure& s, const Coloring* coloring = nullptr);
StructureDocument structure_document_from_json(const json& document);

json graph_to_json(const Graph& g);
Graph graph_from_json(const json& document);

json coloring_to_json(const Coloring& c);
Coloring coloring_from_json(const json& document);

/// Canonical text form: two-space indent plus trailing newline.
std::string to_pretty_string(const json& document);

} // namespace trikraft
