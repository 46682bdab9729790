#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "specscale/scale.hpp"

namespace specscale {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kToolVersion = "1.0.0";

/// Matrix file: {"n": N, "A": {"re": [[...]], "im": [[...]]}} or the same
/// with "A1" and "A2" instead of "A"; an optional "comment" string.
CartesianPair parse_matrix_text(std::string_view text, double hermit_tol = kHermitTol);
CartesianPair parse_matrix_file(const std::filesystem::path& path,
                                double hermit_tol = kHermitTol);

/// Serializes either the full matrix ("A") or the pair ("A1", "A2").
Json matrix_json(const ComplexMatrix& m);
std::string matrix_file_text(const ComplexMatrix& a, const std::optional<std::string>& comment);
std::string pair_file_text(const CartesianPair& pair, const std::optional<std::string>& comment);

/// Wavefront OBJ text for the hull of `body`. Throws ValidationError when the
/// body has no samples.
std::string mesh_obj_text(const ScaleBody3D& body);
void export_mesh(const ScaleBody3D& body, const std::filesystem::path& path);

/// JSON text with every floating-point number printed as %.17g.
std::string dump_json(const Json& j, int indent = 2);

/// SHA-256 of `bytes`, lowercase hex.
std::string sha256_hex(std::string_view bytes);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view text);

}  // namespace specscale
