#pragma once

#include "keller/poly_map.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace keller {

enum class MapFormat { Text, Json };

// A polynomial map document: declared variable names plus one parsed
// component per variable, in order. Source metadata is informational and
// excluded from equality.
struct MapDocument {
    std::vector<std::string> vars;
    std::vector<Polynomial> components;
    std::string component_prefix = "F";  // components are named <prefix>1..<prefix>n
    std::string source_name;
    MapFormat format_tag = MapFormat::Text;

    PolyMap to_map() const { return PolyMap(components); }

    friend bool operator==(const MapDocument& a, const MapDocument& b) {
        return a.vars == b.vars && a.components == b.components &&
               a.component_prefix == b.component_prefix;
    }
};

MapDocument make_document(const PolyMap& map, std::vector<std::string> vars,
                          std::string component_prefix = "F");

// Fresh default coordinate names y1..yn for emitted inverses.
std::vector<std::string> inverse_var_names(std::size_t n);

// Reads either format, auto-detected by the first non-comment byte
// ('{' selects JSON). '#' comment lines and blank lines are ignored.
MapDocument parse_map_file(std::istream& in, const std::string& source_name = "<stream>");
MapDocument parse_map_path(const std::string& path);

// Canonical serialization; both formats open with a '# format: polymap-v1'
// line and round-trip through parse_map_file bit-exactly.
std::string emit_map(const MapDocument& doc, MapFormat format);

// The JSON object alone, without the leading format comment.
std::string emit_map_json_body(const MapDocument& doc);

}  // namespace keller
