#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>

#include <json.hpp>

#include "swsurg/manifold.hpp"

namespace swsurg {

inline constexpr const char* kSchemaVersion = "1";

/// On-disk description of a manifold plus named embedded surfaces.
///
///   {"manifold": {"basic_classes": [{"coords": [..], "sw": 1}], "chi": 8,
///                 "gram": [[..], ..], "name": "x0", "sigma": 0,
///                 "simple_type": true, "basis_labels": [..]?, "conventions": [..]?},
///    "schema_version": "1",
///    "surfaces": {"S": {"class": [..], "dual": [..]?, "genus": 2}}}
///
/// Integers are JSON numbers up to 2^53-1 in magnitude and decimal strings
/// beyond that; both spellings are accepted on input below the limit.
struct ManifoldFile {
  std::string schema_version = kSchemaVersion;
  FourManifold manifold;
  std::map<std::string, SurfaceEmbedding> surfaces;
};

enum class Style {
  Pretty,     // indented objects, scalar arrays on one line
  Canonical,  // compact, single line
};

/// Canonical when SWSURG_CANONICAL=1, Pretty otherwise.
Style style_from_environment();

/// Throws ParseError on malformed syntax or schema, ValidationError when the
/// manifold or a surface violates its invariants.
ManifoldFile parse_manifold_file(std::string_view text);
ManifoldFile read_manifold_file(const std::filesystem::path& path);

/// Keys sorted, basic classes sorted by coordinates, trailing newline.
std::string serialize(const ManifoldFile& file, Style style);

nlohmann::json to_json(const ManifoldFile& file);
nlohmann::json integer_to_json(const Integer& v);
nlohmann::json vector_to_json(const LatticeVector& v);

/// JSON text in the given style; Pretty keeps arrays of scalars on one line.
std::string render_json(const nlohmann::json& value, Style style);

/// Writes through a temporary sibling and renames it into place.
void write_file_atomically(const std::filesystem::path& path, std::string_view contents);

/// Hex SHA-256 of the bytes.
std::string sha256_hex(std::string_view bytes);

}  // namespace swsurg
