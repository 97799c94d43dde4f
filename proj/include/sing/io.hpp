#pragma once

#include <cstdint>
#include <string>

#include "json.hpp"
#include "sing/colimit.hpp"
#include "sing/representation.hpp"

namespace sing::io {

using json = nlohmann::json;

AlgebraPtr parse_algebra(const json& j);
json algebra_to_json(const BoundAlgebra& alg);

/// Module files list every vertex in "dims"; arrows may be omitted when zero.
Representation parse_module(const AlgebraPtr& alg, const json& j);
json module_to_json(const Representation& m);

json matrix_to_json(const Matrix& m);
Matrix parse_matrix(const Field& f, const json& j, std::size_t rows, std::size_t cols, const std::string& pointer);

json report_to_json(const ColimitReport& r);

/// IoError if the file cannot be read, SchemaError if it is not JSON.
json read_json_file(const std::string& path);
AlgebraPtr load_algebra(const std::string& path);
Representation load_module(const AlgebraPtr& alg, const std::string& path);

/// Sorted keys, two-space indent, trailing newline.
std::string canonical_dump(const json& j);
void write_text(const std::string& path, const std::string& text);

/// 64-bit FNV-1a, as 16 lowercase hex digits.
std::string fnv1a_hex(const std::string& bytes);

}  // namespace sing::io
